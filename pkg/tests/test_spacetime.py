import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import causal_transfer as ct
from causal_transfer import Event, Interval

F = Fraction


def ev(t, x):
    return Event(F(t), F(x))


class TestClassification:
    def test_examples(self):
        assert ct.classify_interval(ev(0, 0), ev(2, 1)) == Interval.TIMELIKE_FORWARD
        assert ct.classify_interval(ev(0, 0), ev(1, 3)) == Interval.SPACELIKE
        assert ct.classify_interval(ev(0, 0), ev(1, 1)) == Interval.NULL
        assert ct.classify_interval(ev(2, 0), ev(0, 0)) == Interval.TIMELIKE_BACKWARD

    @given(
        st.fractions(max_denominator=50),
        st.fractions(max_denominator=50),
        st.fractions(max_denominator=50),
        st.fractions(max_denominator=50),
    )
    def test_swap_symmetry(self, t1, x1, t2, x2):
        a, b = Event(t1, x1), Event(t2, x2)
        fwd = ct.classify_interval(a, b)
        back = ct.classify_interval(b, a)
        flip = {
            Interval.TIMELIKE_FORWARD: Interval.TIMELIKE_BACKWARD,
            Interval.TIMELIKE_BACKWARD: Interval.TIMELIKE_FORWARD,
            Interval.SPACELIKE: Interval.SPACELIKE,
            Interval.NULL: Interval.NULL,
        }
        assert back == flip[fwd]


class TestBoost:
    def test_zero_velocity_is_identity(self):
        e = ev("1/3", "-7/5")
        assert ct.boost(e, F(0)) == e

    def test_three_fifths_flips_a_spacelike_order(self):
        before = ev("1/10", 1)
        after = ct.boost(before, F(3, 5))
        assert ct.classify_interval(ev(0, 0), before) == Interval.SPACELIKE
        assert after.t == F(-5, 8)
        assert after.x == F(47, 40)

    def test_interval_squared_preserved(self):
        rng = random.Random(5)
        for _ in range(100):
            a = ev(F(rng.randrange(-20, 20), 7), F(rng.randrange(-20, 20), 3))
            b = ev(F(rng.randrange(-20, 20), 7), F(rng.randrange(-20, 20), 3))
            for v in (F(3, 5), F(-3, 5), F(4, 5)):
                assert ct.boost(a, v).interval_squared(ct.boost(b, v)) == a.interval_squared(b)

    def test_classification_invariance(self):
        rng = random.Random(9)
        for _ in range(100):
            a = ev(rng.randrange(-9, 9), rng.randrange(-9, 9))
            b = ev(rng.randrange(-9, 9), rng.randrange(-9, 9))
            assert ct.classify_interval(
                ct.boost(a, F(3, 5)), ct.boost(b, F(3, 5))
            ) == ct.classify_interval(a, b)

    def test_superluminal_rejected(self):
        with pytest.raises(ValueError):
            ct.boost(ev(0, 0), F(3, 2))

    def test_irrational_gamma_rejected(self):
        with pytest.raises(ValueError):
            ct.boost(ev(0, 0), F(1, 2))


class TestPiRotation:
    def test_example(self):
        assert ct.pi_rotation(ev(1, 2)) == ev(1, -2)

    def test_involution(self):
        e = ev("3/7", "-2/9")
        center = ev(0, "1/3")
        assert ct.pi_rotation(ct.pi_rotation(e, center), center) == e

    def test_swaps_stations(self):
        placements = ct.standard_bell_placements()
        rotated = {name: ct.pi_rotation(e) for name, e in placements.items()}
        assert rotated["A1"] == placements["B1"]
        assert rotated["B2"] == placements["A2"]

    def test_preserves_classification(self):
        rng = random.Random(2)
        for _ in range(50):
            a = ev(rng.randrange(-9, 9), rng.randrange(-9, 9))
            b = ev(rng.randrange(-9, 9), rng.randrange(-9, 9))
            assert ct.classify_interval(
                ct.pi_rotation(a), ct.pi_rotation(b)
            ) == ct.classify_interval(a, b)


class TestWiring:
    def test_timelike_link_admissible(self):
        report = ct.validate_classical_wiring(
            {"s": ev(0, 0), "d": ev(2, 0)}, [("s", "d")]
        )
        assert report.admissible

    def test_placement_list_form(self):
        placements = [
            ct.PortPlacement("s", ev(0, 0)),
            ct.PortPlacement("d", ev(2, 0)),
        ]
        assert ct.validate_classical_wiring(placements, [("s", "d")]).admissible

    def test_spacelike_link_violates(self):
        report = ct.validate_classical_wiring(
            {"s": ev(0, 0), "d": ev(0, 5)}, [("s", "d")]
        )
        assert not report.admissible
        assert report.violations[0][2] == Interval.SPACELIKE

    def test_backward_link_violates(self):
        report = ct.validate_classical_wiring(
            {"s": ev(0, 0), "d": ev(-2, 0)}, [("s", "d")]
        )
        assert not report.admissible

    def test_null_forward_link_is_flagged_not_violating(self):
        report = ct.validate_classical_wiring(
            {"s": ev(0, 0), "d": ev(1, 1)}, [("s", "d")]
        )
        assert report.admissible
        assert report.flagged_null == (("s", "d"),)

    def test_unplaced_port_is_an_error(self):
        with pytest.raises(ValueError):
            ct.validate_classical_wiring({"s": ev(0, 0)}, [("s", "d")])

    def test_double_bell_links_admissible(self):
        placements = ct.double_bell_placements()
        report = ct.validate_classical_wiring(
            placements, [("A2'", "A1"), ("B2", "B1'")]
        )
        assert report.admissible

    def test_admissibility_is_boost_invariant(self):
        placements = ct.double_bell_placements()
        links = [("A2'", "A1"), ("B2", "B1'")]
        for v in (F(3, 5), F(-3, 5), F(4, 5)):
            boosted = {name: ct.boost(e, v) for name, e in placements.items()}
            assert ct.validate_classical_wiring(boosted, links).admissible
