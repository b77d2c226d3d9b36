"""Stochastic systems in the transition and transfer pictures.

A stochastic system is described either by its transition probabilities
Pr(j|i) (a row-normalized table) or by a probability distribution over the
deterministic transfer functions of its layout.  The transfer picture
carries strictly more information: many transfer distributions can induce
the same transition table.  Probabilities are exact rationals throughout,
so feasibility and loop-constraint statements are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .rationals import as_fraction, format_fraction
from .systems import (
    LayoutMismatchError,
    PortLayout,
    TransferFunction,
    close_loop,
    compose_series,
    count_transfer_functions,
    function_from_index,
    loop_status,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TransitionTable:
    """Conditional probabilities Pr(j|i), rows indexed by joint input.

    Every row sums to exactly 1.
    """

    layout: PortLayout
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(p) for p in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.layout.n_inputs:
            raise ValueError(
                f"{len(rows)} rows for {self.layout.n_inputs} joint inputs"
            )
        for i, row in enumerate(rows):
            if len(row) != self.layout.n_outputs:
                raise ValueError(
                    f"row {i} has {len(row)} entries for {self.layout.n_outputs} joint outputs"
                )
            for p in row:
                if not ZERO <= p <= ONE:
                    raise ValueError(f"probability {p} outside [0, 1]")
            if sum(row) != ONE:
                raise ValueError(f"row {i} sums to {sum(row)}, not 1")

    def probability(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    @property
    def is_deterministic(self) -> bool:
        return all(p in (ZERO, ONE) for row in self.rows for p in row)

    def deterministic_function(self) -> TransferFunction:
        """The unique transfer function of a 0/1 table."""
        if not self.is_deterministic:
            raise ValueError("table is not deterministic")
        table = tuple(row.index(ONE) for row in self.rows)
        return TransferFunction(self.layout, table)

    @classmethod
    def from_function(cls, f: TransferFunction) -> "TransitionTable":
        rows = tuple(
            tuple(ONE if j == f.table[i] else ZERO for j in range(f.layout.n_outputs))
            for i in range(f.layout.n_inputs)
        )
        return cls(f.layout, rows)

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self.rows):
            cells = "  ".join(format_fraction(p) for p in row)
            lines.append(f"i={i}: {cells}")
        return "\n".join(lines)


@dataclass(frozen=True)
class TransferDistribution:
    """A probability assignment over the transfer functions of one layout.

    Weights are keyed by canonical function index; zero weights are
    dropped, so the stored keys are the support.
    """

    layout: PortLayout
    weights: dict[int, Fraction]

    def __post_init__(self):
        n_f = count_transfer_functions(self.layout)
        cleaned = {}
        for k, w in self.weights.items():
            w = as_fraction(w)
            if not 0 <= k < n_f:
                raise ValueError(f"function index {k} out of range 0..{n_f - 1}")
            if not ZERO <= w <= ONE:
                raise ValueError(f"weight {w} outside [0, 1]")
            if w != ZERO:
                cleaned[int(k)] = w
        if sum(cleaned.values()) != ONE:
            raise ValueError(f"weights sum to {sum(cleaned.values())}, not 1")
        object.__setattr__(self, "weights", cleaned)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.weights))

    def probability(self, index: int) -> Fraction:
        return self.weights.get(index, ZERO)

    def functions(self) -> dict[int, TransferFunction]:
        return {k: function_from_index(self.layout, k) for k in self.support}

    @classmethod
    def point_mass(cls, f: TransferFunction) -> "TransferDistribution":
        return cls(f.layout, {f.index: ONE})

    @property
    def is_point_mass(self) -> bool:
        return len(self.weights) == 1


@dataclass(frozen=True)
class JointTransferDistribution:
    """A joint probability over the transfer functions of several subsystems.

    The full joint table is stored (no factored form) so correlated
    behaviour is representable exactly; factorization is a query.
    """

    components: tuple[PortLayout, ...]
    weights: dict[tuple[int, ...], Fraction]

    def __post_init__(self):
        components = tuple(self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise ValueError("need at least one component")
        counts = [count_transfer_functions(layout) for layout in components]
        cleaned = {}
        for key, w in self.weights.items():
            key = tuple(int(k) for k in key)
            w = as_fraction(w)
            if len(key) != len(components):
                raise ValueError(f"key {key} has wrong arity")
            for k, n_f in zip(key, counts):
                if not 0 <= k < n_f:
                    raise ValueError(f"function index {k} out of range 0..{n_f - 1}")
            if not ZERO <= w <= ONE:
                raise ValueError(f"weight {w} outside [0, 1]")
            if w != ZERO:
                cleaned[key] = w
        if sum(cleaned.values()) != ONE:
            raise ValueError(f"weights sum to {sum(cleaned.values())}, not 1")
        object.__setattr__(self, "weights", cleaned)

    def marginal(self, position: int) -> TransferDistribution:
        weights: dict[int, Fraction] = {}
        for key, w in self.weights.items():
            k = key[position]
            weights[k] = weights.get(k, ZERO) + w
        return TransferDistribution(self.components[position], weights)

    @classmethod
    def from_marginals(cls, dists) -> "JointTransferDistribution":
        """Independent product of per-component distributions."""
        dists = list(dists)
        weights: dict[tuple[int, ...], Fraction] = {}
        for combo in product(*(d.weights.items() for d in dists)):
            key = tuple(k for k, _ in combo)
            w = ONE
            for _, wk in combo:
                w *= wk
            weights[key] = w
        return cls(tuple(d.layout for d in dists), weights)


def transitions_from_transfers(dist: TransferDistribution) -> TransitionTable:
    """The transition table induced by a transfer distribution:
    Pr(j|i) = sum over F of Pr(F) when F(i) = j."""
    layout = dist.layout
    rows = [[ZERO] * layout.n_outputs for _ in range(layout.n_inputs)]
    for k, w in dist.weights.items():
        f = function_from_index(layout, k)
        for i, j in enumerate(f.table):
            rows[i][j] += w
    return TransitionTable(layout, tuple(tuple(row) for row in rows))


def count_independent_transition_probabilities(layout: PortLayout) -> int:
    """Degrees of freedom of a transition table: N(i) * (N(j) - 1),
    one row normalization per joint input."""
    return layout.n_inputs * (layout.n_outputs - 1)


def product_distribution(
    d1: TransferDistribution, d2: TransferDistribution
) -> JointTransferDistribution:
    """Uncorrelated joint distribution of two subsystems."""
    return JointTransferDistribution.from_marginals([d1, d2])


def is_factorized(joint: JointTransferDistribution) -> bool:
    """True iff every joint weight equals the product of its two marginals."""
    if len(joint.components) != 2:
        raise ValueError("factorization test is defined for two components")
    m0 = joint.marginal(0)
    m1 = joint.marginal(1)
    for k0 in m0.support:
        for k1 in m1.support:
            expected = m0.weights[k0] * m1.weights[k1]
            if joint.weights.get((k0, k1), ZERO) != expected:
                return False
    return True


def series_transfer_distribution(
    joint: JointTransferDistribution,
) -> TransferDistribution:
    """Push a joint distribution through series wiring.

    Component k's output ports feed component k+1's input ports; the
    result is the distribution of the composite transfer function.
    """
    weights: dict[int, Fraction] = {}
    for key, w in joint.weights.items():
        fns = [
            function_from_index(layout, k)
            for layout, k in zip(joint.components, key)
        ]
        composite = fns[0]
        for f in fns[1:]:
            composite = compose_series(composite, f)
        idx = composite.index
        weights[idx] = weights.get(idx, ZERO) + w
    result_layout = PortLayout(joint.components[0].inputs, joint.components[-1].outputs)
    return TransferDistribution(result_layout, weights)


@dataclass(frozen=True)
class LoopAnalysis:
    """Distribution over loop transfer functions and its forbidden mass."""

    loop_distribution: TransferDistribution
    contradiction_probability: Fraction

    @property
    def forbidden(self) -> bool:
        return self.contradiction_probability > ZERO

    @property
    def allowed(self) -> bool:
        return self.contradiction_probability == ZERO


def stochastic_loop_analysis(joint: JointTransferDistribution) -> LoopAnalysis:
    """Close a cyclically wired chain of stochastic systems.

    The components are taken in cyclic order (component k's outputs feed
    component k+1's inputs, and the last feeds the first).  For each joint
    outcome the deterministic loop function is composed; the analysis
    returns the induced distribution over loop functions and the total
    probability mass on fixed-point-free ones.  Any nonzero mass means a
    nonzero probability of a contradiction, so the loop is forbidden.
    """
    layouts = joint.components
    for k, layout in enumerate(layouts):
        nxt = layouts[(k + 1) % len(layouts)]
        if layout.output_cardinalities != nxt.input_cardinalities:
            raise LayoutMismatchError(
                f"cyclic link {k} -> {(k + 1) % len(layouts)}: "
                f"output shape {layout.output_cardinalities} "
                f"!= input shape {nxt.input_cardinalities}"
            )
    loop_weights: dict[int, Fraction] = {}
    contradiction = ZERO
    loop_layout = None
    for key, w in joint.weights.items():
        fns = [function_from_index(layout, k) for layout, k in zip(layouts, key)]
        f_loop = close_loop(fns)
        loop_layout = f_loop.layout
        idx = f_loop.index
        loop_weights[idx] = loop_weights.get(idx, ZERO) + w
        if loop_status(f_loop).forbidden:
            contradiction += w
    dist = TransferDistribution(loop_layout, loop_weights)
    return LoopAnalysis(dist, contradiction)
