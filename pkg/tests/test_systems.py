from itertools import product

import pytest

import causal_transfer as ct
from causal_transfer import (
    CapExceededError,
    DeterministicSystem,
    LayoutMismatchError,
    PortLayout,
    PortSpec,
    TransferFunction,
)


def layout(n_in, n_out):
    return PortLayout((PortSpec("i", n_in),), (PortSpec("j", n_out),))


class TestCounting:
    def test_transitions_3x2(self):
        assert ct.count_transitions(layout(3, 2)) == 6

    def test_transitions_degenerate(self):
        assert ct.count_transitions(layout(1, 1)) == 1

    def test_transitions_two_in_two_out_binary(self):
        lay = PortLayout(
            (PortSpec("i1", 2), PortSpec("i2", 2)),
            (PortSpec("j1", 2), PortSpec("j2", 2)),
        )
        assert ct.count_transitions(lay) == 16
        assert ct.count_transfer_functions(lay) == 256

    def test_functions_3x2(self):
        assert ct.count_transfer_functions(layout(3, 2)) == 8

    def test_functions_single_output(self):
        assert ct.count_transfer_functions(layout(5, 1)) == 1

    def test_count_cap(self):
        assert ct.count_transfer_functions(layout(3, 2), cap=8) == 8
        with pytest.raises(CapExceededError):
            ct.count_transfer_functions(layout(3, 2), cap=7)

    def test_independent_transition_probabilities(self):
        assert ct.count_independent_transition_probabilities(layout(2, 2)) == 2
        assert ct.count_independent_transition_probabilities(layout(4, 1)) == 0
        # N(i) rows, each with N(j) entries and one normalization: the
        # formula must match the row degrees of freedom.
        for n_in, n_out in product(range(1, 5), range(1, 5)):
            lay = layout(n_in, n_out)
            dof = sum(n_out - 1 for _ in range(n_in))
            assert ct.count_independent_transition_probabilities(lay) == dof


class TestEnumeration:
    def test_binary_gate_order(self, binary_layout):
        fns = ct.enumerate_transfer_functions(binary_layout)
        assert [f.table for f in fns] == [(0, 0), (1, 1), (0, 1), (1, 0)]
        const0, const1, ident, inv = ct.binary_gates(binary_layout)
        assert [f.index for f in (const0, const1, ident, inv)] == [0, 1, 2, 3]

    def test_constant_pair(self):
        fns = ct.enumerate_transfer_functions(layout(1, 2))
        assert [f.table for f in fns] == [(0,), (1,)]

    def test_2x3_lexicographic(self):
        # Independent oracle: every output pair in lexicographic order.
        expected = [tuple(t) for t in product(range(3), repeat=2)]
        fns = ct.enumerate_transfer_functions(layout(2, 3))
        assert len(fns) == 9
        assert [f.table for f in fns] == expected

    def test_count_matches_enumeration(self):
        for n_in, n_out in product(range(1, 4), range(1, 4)):
            lay = layout(n_in, n_out)
            fns = ct.enumerate_transfer_functions(lay)
            assert len(fns) == ct.count_transfer_functions(lay)
            # round trip through the canonical index
            for f in fns:
                assert ct.function_from_index(lay, f.index) == f

    def test_cap_is_enforced(self):
        with pytest.raises(CapExceededError):
            ct.enumerate_transfer_functions(layout(2, 3), cap=8)

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("CAUSAL_TRANSFER_CAP", "4")
        with pytest.raises(CapExceededError):
            ct.enumerate_transfer_functions(layout(2, 3))
        monkeypatch.setenv("CAUSAL_TRANSFER_CAP", "9")
        assert len(ct.enumerate_transfer_functions(layout(2, 3))) == 9


class TestComposition:
    def test_identity_laws(self, gates):
        const0, const1, ident, inv = gates
        assert ct.compose_series(inv, ident) == inv
        assert ct.compose_series(ident, inv) == inv
        assert ct.compose_series(inv, inv) == ident
        assert ct.compose_series(ident, const1) == const1

    def test_mismatch_rejected(self, gates):
        ternary_in = TransferFunction(layout(3, 2), (0, 1, 1))
        with pytest.raises(LayoutMismatchError):
            ct.compose_series(gates[2], ternary_in)

    def test_associativity_exhaustive_binary(self, gates):
        for f, g, h in product(gates, repeat=3):
            left = ct.compose_series(ct.compose_series(f, g), h)
            right = ct.compose_series(f, ct.compose_series(g, h))
            assert left == right

    def test_pointwise_against_tables(self):
        f = TransferFunction(layout(3, 2), (1, 0, 1))
        g = TransferFunction(layout(2, 4), (3, 0))
        fg = ct.compose_series(f, g)
        for i in range(3):
            assert fg(i) == g(f(i))


class TestParallel:
    def system(self, fn, sid, names):
        lay = PortLayout((PortSpec(names[0], 2),), (PortSpec(names[1], 2),))
        table = fn(ct.elementary_binary_layout(*names)).table
        return DeterministicSystem.of(sid, TransferFunction(lay, table))

    def test_combination_counting_laws(self):
        s1 = self.system(ct.identity_function, "s1", ("a_in", "a_out"))
        s2 = self.system(ct.not_function, "s2", ("b_in", "b_out"))
        combined = ct.combine_parallel(s1, s2)
        # Independent combination: transitions add, functions multiply.
        assert ct.count_parallel_transitions(s1.layout, s2.layout) == 8
        assert ct.count_parallel_transfer_functions(s1.layout, s2.layout) == 16
        # The same four binary ports as a general system allow far more.
        assert ct.count_transitions(combined.layout) == 16
        assert ct.count_transfer_functions(combined.layout) == 256

    def test_function_count_product_law(self):
        lay = ct.PortLayout((ct.PortSpec("i", 2),), (ct.PortSpec("j", 2),))
        n = ct.count_transfer_functions(lay)
        assert n == 4
        assert ct.count_parallel_transfer_functions(lay, lay) == n * n == 16

    def test_blockwise_action(self):
        s1 = self.system(ct.identity_function, "s1", ("a_in", "a_out"))
        s2 = self.system(ct.not_function, "s2", ("b_in", "b_out"))
        combined = ct.combine_parallel(s1, s2)
        assert combined.function.apply((0, 0)) == (0, 1)

    def test_no_cross_dependence(self):
        # Sweep every input: block 1 of the output never reacts to block 2
        # of the input and vice versa.
        lay = ct.elementary_binary_layout
        for f1 in ct.binary_gates(lay("a_in", "a_out")):
            for f2 in ct.binary_gates(lay("b_in", "b_out")):
                combined = ct.combine_parallel(
                    DeterministicSystem.of("x", f1), DeterministicSystem.of("y", f2)
                )
                for i1, i2 in product(range(2), repeat=2):
                    j1, j2 = combined.function.apply((i1, i2))
                    for other in range(2):
                        j1_alt, _ = combined.function.apply((i1, other))
                        _, j2_alt = combined.function.apply((other, i2))
                        assert j1_alt == j1
                        assert j2_alt == j2

    def test_name_collision(self):
        s1 = self.system(ct.identity_function, "s1", ("in", "out"))
        s2 = self.system(ct.not_function, "s2", ("in", "out"))
        with pytest.raises(ValueError):
            ct.combine_parallel(s1, s2)


class TestLoops:
    def test_chain_with_single_not_is_forbidden(self, gates):
        _, _, ident, inv = gates
        loop = ct.close_loop([ident, ident, ident, inv])
        assert loop == inv
        assert ct.loop_status(loop).forbidden

    def test_singleton_and_double_not(self, gates):
        _, _, ident, inv = gates
        assert ct.close_loop([ident]) == ident
        assert ct.close_loop([inv, inv]) == ident

    def test_loop_status_fixed_points(self, gates):
        const0, const1, ident, inv = gates
        assert ct.loop_status(ident).fixed_points == (0, 1)
        assert ct.loop_status(const0).fixed_points == (0,)
        assert ct.loop_status(const1).fixed_points == (1,)
        assert ct.loop_status(inv).fixed_points == ()

    def test_not_is_the_unique_forbidden_unary_binary_function(self, binary_layout):
        forbidden = [
            f.table
            for f in ct.enumerate_transfer_functions(binary_layout)
            if ct.loop_status(f).forbidden
        ]
        assert forbidden == [(1, 0)]

    def test_close_loop_matches_pointwise_threading(self, gates):
        # Oracle: push each input through the chain one step at a time.
        for chain in product(ct.binary_gates(), repeat=3):
            loop = ct.close_loop(list(chain))
            for i in range(2):
                value = i
                for f in chain:
                    value = f(value)
                assert loop(i) == value

    def test_cyclic_mismatch_rejected(self, gates):
        wide = TransferFunction(layout(2, 3), (0, 2))
        with pytest.raises(LayoutMismatchError):
            ct.close_loop([gates[2], wide])

    def test_larger_alphabet_fixed_point_classification(self):
        # The fixed-point test generalizes beyond binary: exhaustively
        # verify on the 27 ternary unary functions.
        lay = layout(3, 3)
        for f in ct.enumerate_transfer_functions(lay):
            expected = tuple(i for i in range(3) if f(i) == i)
            assert ct.loop_status(f).fixed_points == expected
