import math
from fractions import Fraction
from itertools import product

import pytest

import causal_transfer as ct
from causal_transfer import CHANNEL_LAYOUT, TransferDistribution

F = Fraction
HALF = F(1, 2)
TENTH = F(1, 10)
ANGLES = (0.0, math.pi / 3, 2 * math.pi / 3)


def closed_form(theta_a, theta_b, sign_a, sign_b):
    """Textbook singlet law in the same-sign convention; the state-vector
    oracle must agree with it."""
    delta = theta_a - theta_b
    if sign_a == sign_b:
        return 0.5 * math.cos(delta / 2) ** 2
    return 0.5 * math.sin(delta / 2) ** 2


class TestSingletOracle:
    def test_matches_closed_form_on_a_grid(self):
        for ta in (0.0, 0.4, 1.1, 2.9):
            for tb in (0.0, 0.7, 2.0):
                for sa, sb in product((1, -1), repeat=2):
                    got = ct.singlet_outcome_probability(ta, tb, sa, sb)
                    assert got == pytest.approx(closed_form(ta, tb, sa, sb), abs=1e-12)

    def test_equal_angles(self):
        table = ct.singlet_table((0.0,), (0.0,))
        assert table.rows[0] == (HALF, F(0), F(0), HALF)

    def test_sixty_degrees(self):
        table = ct.singlet_table((0.0,), (math.pi / 3,))
        assert table.rows[0] == (F(3, 8), F(1, 8), F(1, 8), F(3, 8))

    def test_opposite_angles(self):
        table = ct.singlet_table((0.0,), (math.pi,))
        assert table.rows[0] == (F(0), HALF, HALF, F(0))

    def test_rows_normalized_and_symmetric(self, violating_table):
        layout = violating_table.layout
        assert all(sum(row) == 1 for row in violating_table.rows)
        # exchanging the stations mirrors the table
        for ia, ib in product(range(3), repeat=2):
            i = layout.encode_input((ia, ib))
            j = layout.encode_input((ib, ia))
            r1, r2 = violating_table.rows[i], violating_table.rows[j]
            assert r1[0] == r2[0] and r1[3] == r2[3]
            assert r1[1] == r2[2] and r1[2] == r2[1]

    def test_irrational_angle_requires_tolerance(self):
        with pytest.raises(ValueError):
            ct.singlet_table((0.0,), (0.7,))
        table = ct.singlet_table((0.0,), (0.7,), tolerance=1e-9)
        assert all(sum(row) == 1 for row in table.rows)


class TestBellScenario:
    def test_standard_scenario_placements_spacelike(self, violating_table):
        scenario = ct.bell_scenario(ANGLES, violating_table)
        pl = scenario.placements
        assert ct.classify_interval(pl["A1"], pl["B2"]) == ct.Interval.SPACELIKE
        assert ct.classify_interval(pl["B1"], pl["A2"]) == ct.Interval.SPACELIKE

    def test_timelike_placements_rejected(self, violating_table):
        placements = ct.standard_bell_placements()
        placements["B2"] = ct.Event(F(5), F(1))
        with pytest.raises(ValueError):
            ct.BellScenario(ANGLES, ANGLES, placements, violating_table)

    def test_broken_correlation_rejected(self):
        layout = ct.bell_layout(1, 1)
        rows = ((F(1, 4), F(1, 4), F(1, 4), F(1, 4)),)
        table = ct.TransitionTable(layout, rows)
        with pytest.raises(ValueError):
            ct.BellScenario((0.0,), (0.0,), ct.standard_bell_placements(), table)


class TestViolationReport:
    def test_violating_angles(self, violating_table):
        report = ct.bell_violation_report(ct.bell_scenario(ANGLES, violating_table))
        values = dict(report.instances)
        assert values["P2 opposite-sign"] == F(-1, 8)
        assert values["P2 same-sign"] == F(-1, 8)
        assert report.minimum == F(-1, 8)
        assert report.violated

    def test_hundred_twenty_degree_angles(self):
        # All opposite-sign instances are nonnegative here, but the
        # same-sign class sum dips below zero: still a violation, matching
        # local-model infeasibility.
        angles = (0.0, 2 * math.pi / 3, 4 * math.pi / 3)
        table = ct.singlet_table(angles)
        report = ct.bell_violation_report(ct.bell_scenario(angles, table))
        values = dict(report.instances)
        assert all(values[f"P{k} opposite-sign"] >= 0 for k in (1, 2, 3))
        assert values["P0 same-sign"] == F(-1, 8)
        assert report.violated
        assert ct.certify_weak_signal(table, ct.bell_partition()).weak_signal

    def test_agreement_with_feasibility_on_a_grid(self):
        thirds = [k * math.pi / 3 for k in range(6)]
        for t2 in thirds[1:4]:
            for t3 in thirds[2:6]:
                if t2 == t3:
                    continue
                angles = (0.0, t2, t3)
                table = ct.singlet_table(angles)
                report = ct.bell_violation_report(ct.bell_scenario(angles, table))
                weak = ct.certify_weak_signal(table, ct.bell_partition())
                assert report.violated == weak.weak_signal

    def test_class_solution_substitutes_back(self, violating_table):
        # The class probabilities recovered from the table reproduce every
        # off-diagonal entry as the matching two-class sums, and the
        # diagonal entries as the full sum.
        layout = violating_table.layout
        report = ct.bell_violation_report(
            ct.bell_scenario(ANGLES, violating_table)
        )
        values = dict(report.instances)
        p = {0: values["P0 same-sign"] / 2}
        for k in (1, 2, 3):
            assert values[f"P{k} same-sign"] == values[f"P{k} opposite-sign"]
            p[k] = values[f"P{k} same-sign"] / 2
        pairs = {(1, 2): 1, (2, 0): 2, (0, 1): 3}
        for (a, b), k in pairs.items():
            i = layout.encode_input((a, b))
            assert violating_table.rows[i][0] == p[0] + p[k]
            others = [m for m in (1, 2, 3) if m != k]
            assert violating_table.rows[i][1] == p[others[0]] + p[others[1]]
        for a in range(3):
            i = layout.encode_input((a, a))
            assert violating_table.rows[i][0] == p[0] + p[1] + p[2] + p[3] == HALF

    def test_local_witness_satisfies_every_instance(self, coin_table):
        # Any feasible local table keeps all instances nonnegative.
        angles = (0.0, math.pi / 2, math.pi)
        table = ct.singlet_table(angles)
        weak = ct.certify_weak_signal(table, ct.bell_partition())
        assert not weak.weak_signal
        report = ct.bell_violation_report(ct.bell_scenario(angles, table))
        assert not report.violated


class TestSimplifiedBell:
    def evidence(self):
        return ct.certify_weak_signal(
            ct.singlet_table(ANGLES), ct.bell_partition()
        )

    def test_build_with_symmetry(self):
        sb = ct.build_simplified_bell(self.evidence(), lorentz_symmetry=True)
        assert sb.nonlocal_weights == (TENTH, TENTH)
        assert sb.channel.weights[0] == F(2, 5)
        assert len(sb.base.angles_a) == 1 and len(sb.base.angles_b) == 2

    def test_refuses_without_symmetry(self):
        with pytest.raises(ValueError):
            ct.build_simplified_bell(self.evidence(), lorentz_symmetry=False)

    def test_refuses_without_weak_signal(self, coin_table):
        no_signal = ct.certify_weak_signal(coin_table, {"A": ("in",), "B": ("out",)})
        with pytest.raises(ValueError):
            ct.build_simplified_bell(no_signal, lorentz_symmetry=True)

    def test_epsilon_bounds(self):
        with pytest.raises(ValueError):
            ct.build_simplified_bell(self.evidence(), True, epsilon=F(0))
        with pytest.raises(ValueError):
            ct.build_simplified_bell(self.evidence(), True, epsilon=F(3, 5))
        sb = ct.build_simplified_bell(self.evidence(), True, epsilon=HALF)
        assert sb.channel.weights == {2: HALF, 3: HALF}


def make_network(eps_unprimed=TENTH, eps_primed=TENTH, link_a=None, link_b=None):
    evidence = ct.certify_weak_signal(ct.singlet_table(ANGLES), ct.bell_partition())
    unprimed = ct.build_simplified_bell(evidence, True, epsilon=eps_unprimed)
    primed = ct.build_simplified_bell(evidence, True, epsilon=eps_primed)
    return ct.build_double_bell_network(
        primed=primed, unprimed=unprimed, link_a=link_a, link_b=link_b
    )


def brute_force_contradiction(net):
    """Independent oracle: walk all joint channel outcomes with plain
    tuple tables and count the mass whose four-step loop has no fixed
    point."""
    tables = {0: (0, 0), 1: (1, 1), 2: (0, 1), 3: (1, 0)}
    la = tables[net.link_a.index]
    lb = tables[net.link_b.index]
    total = F(0)
    for (ku, kp), w in net.joint.weights.items():
        tu, tp = tables[ku], tables[kp]

        def loop(x):
            return tp[lb[tu[la[x]]]]

        if all(loop(x) != x for x in (0, 1)):
            total += w
    return total


class TestDoubleBell:
    def test_default_network_contradiction(self):
        net = make_network()
        verdict = ct.double_bell_verdict(net)
        assert verdict.contradiction_probability == F(1, 50)
        assert verdict.forbidden
        assert verdict.contradiction_probability == brute_force_contradiction(net)

    def test_constants_only_channels_are_safe(self):
        channel = TransferDistribution(CHANNEL_LAYOUT, {0: HALF, 1: HALF})
        base = make_network().primed.base
        sb = ct.SimplifiedBell(base, channel)
        net = ct.build_double_bell_network(primed=sb, unprimed=sb)
        verdict = ct.double_bell_verdict(net)
        assert verdict.contradiction_probability == 0
        assert verdict.allowed

    def test_one_sided_zero_nonlocal_weight_is_safe(self):
        channel = TransferDistribution(CHANNEL_LAYOUT, {0: HALF, 1: HALF})
        default = make_network()
        sb = ct.SimplifiedBell(default.primed.base, channel)
        for net in (
            ct.build_double_bell_network(primed=sb, unprimed=default.unprimed),
            ct.build_double_bell_network(primed=default.primed, unprimed=sb),
        ):
            verdict = ct.double_bell_verdict(net)
            assert verdict.contradiction_probability == 0

    def test_point_mass_identity_channels(self):
        channel = TransferDistribution.point_mass(
            ct.identity_function(CHANNEL_LAYOUT)
        )
        base = make_network().primed.base
        sb = ct.SimplifiedBell(base, channel)
        net = ct.build_double_bell_network(primed=sb, unprimed=sb)
        verdict = ct.double_bell_verdict(net)
        assert verdict.contradiction_probability == 1

    def test_identity_links_still_forbidden(self):
        # With both links the identity the loop flips on the mixed
        # signalling pairs instead, same total mass.
        net = make_network(link_b=ct.identity_function(CHANNEL_LAYOUT))
        verdict = ct.double_bell_verdict(net)
        assert verdict.contradiction_probability == F(1, 50)
        assert verdict.contradiction_probability == brute_force_contradiction(net)

    def test_lower_bound_from_channel_weights(self):
        for eu, ep in ((TENTH, TENTH), (F(1, 5), TENTH), (F(1, 3), F(1, 7))):
            net = make_network(eps_unprimed=eu, eps_primed=ep)
            verdict = ct.double_bell_verdict(net)
            pu = net.unprimed.channel
            pp = net.primed.channel
            bound = pu.probability(2) * pp.probability(2) + pu.probability(
                3
            ) * pp.probability(3)
            assert verdict.contradiction_probability >= bound > 0

    def test_swap_symmetry_of_the_construction(self):
        # Exchanging which experiment is primed (and the two links with
        # it) reflects the picture and leaves the verdict unchanged.
        net = make_network()
        swapped = ct.build_double_bell_network(
            primed=net.unprimed,
            unprimed=net.primed,
            link_a=net.link_b,
            link_b=net.link_a,
        )
        assert (
            ct.double_bell_verdict(net).contradiction_probability
            == ct.double_bell_verdict(swapped).contradiction_probability
        )

    def test_factorized_invariant(self):
        net = make_network()
        assert net.factorized
        correlated = ct.JointTransferDistribution(
            (CHANNEL_LAYOUT, CHANNEL_LAYOUT),
            {(2, 2): HALF, (3, 3): HALF},
        )
        net2 = ct.build_double_bell_network(
            primed=net.primed, unprimed=net.unprimed, joint=correlated
        )
        assert not net2.factorized

    def test_bad_wiring_rejected(self):
        net = make_network()
        placements = dict(net.placements)
        placements["A1"] = ct.Event(F(1, 2), F(5))  # spacelike from A2'
        bad = ct.build_double_bell_network(
            primed=net.primed, unprimed=net.unprimed, placements=placements
        )
        with pytest.raises(ValueError):
            ct.double_bell_verdict(bad)


class TestAudit:
    def test_standard_audit_ends_with_as3(self):
        verdict = ct.double_bell_verdict(make_network())
        audit = ct.assumption_audit(verdict)
        assert [e.assumption for e in audit.entries[:2]] == [
            "AS1",
            "AS2 (classical gates)",
        ]
        final = audit.final_rejection
        assert final.assumption == "AS3"
        assert final.status == "rejected"
        assert not final.computed

    def test_allowed_verdict_cannot_be_audited(self):
        channel = TransferDistribution(CHANNEL_LAYOUT, {0: HALF, 1: HALF})
        base = make_network().primed.base
        sb = ct.SimplifiedBell(base, channel)
        verdict = ct.double_bell_verdict(
            ct.build_double_bell_network(primed=sb, unprimed=sb)
        )
        with pytest.raises(ValueError):
            ct.assumption_audit(verdict)

    def test_correlated_joint_gets_caveat(self):
        net = make_network()
        correlated = ct.JointTransferDistribution(
            (CHANNEL_LAYOUT, CHANNEL_LAYOUT),
            {(2, 3): HALF, (3, 2): HALF},
        )
        net2 = ct.build_double_bell_network(
            primed=net.primed,
            unprimed=net.unprimed,
            link_a=ct.identity_function(CHANNEL_LAYOUT),
            link_b=ct.identity_function(CHANNEL_LAYOUT),
            joint=correlated,
        )
        verdict = ct.double_bell_verdict(net2)
        assert verdict.forbidden
        audit = ct.assumption_audit(verdict)
        statuses = {e.assumption: e.status for e in audit.entries}
        assert statuses["AS2 (joint of the two experiments)"] == "caveat"
