"""Scenario builders: Bell, simplified Bell, and double Bell networks.

The quantum side is a brute-force two-spin oracle (4-dimensional state
vector, projective measurement at each analyzer angle).  Angle conventions
follow the same-sign form of the spin-correlation experiment: the second
station measures from a zero pointing the opposite way, so equal settings
give perfectly correlated signs.  Oracle outputs are certified to exact
rationals where the underlying values are rational (angle differences that
are multiples of pi/3 or pi/2 and the like); elsewhere an explicit
tolerance is required.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .polytope import (
    ConsistencyProblem,
    DerivedInequality,
    WeakSignalReport,
    apply_perfect_correlation,
    build_consistency_problem,
    derive_inequalities,
    restrict_to_local,
)
from .rationals import as_fraction
from .spacetime import Event, Interval, WiringReport, classify_interval, validate_classical_wiring
from .stochastic import (
    JointTransferDistribution,
    LoopAnalysis,
    TransferDistribution,
    TransitionTable,
    product_distribution,
    is_factorized,
    stochastic_loop_analysis,
)
from .systems import (
    PortLayout,
    PortSpec,
    TransferFunction,
    elementary_binary_layout,
    identity_function,
    not_function,
)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

CHANNEL_LAYOUT = elementary_binary_layout("setting", "sign")
DOUBLE_BELL_CLASSICAL_LINKS = (("A2'", "A1"), ("B2", "B1'"))


def bell_layout(n_a: int, n_b: int | None = None) -> PortLayout:
    """Two-party layout: angle settings in, binary signs out."""
    n_b = n_a if n_b is None else n_b
    return PortLayout(
        (PortSpec("alpha", n_a), PortSpec("beta", n_b)),
        (PortSpec("a", 2), PortSpec("b", 2)),
    )


def bell_partition() -> dict[str, tuple[str, ...]]:
    return {"A": ("alpha", "a"), "B": ("beta", "b")}


def singlet_outcome_probability(
    theta_a: float, theta_b: float, sign_a: int, sign_b: int
) -> float:
    """Two-spin state-vector oracle for one joint outcome.

    Prepares the total-spin-zero state, projects each spin onto the given
    sign along its analyzer direction in the x-z plane, and returns the
    joint probability.  The second analyzer's zero points the opposite
    way, so equal angles correlate equal signs.
    """
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)

    def projector(theta: float, sign: int) -> np.ndarray:
        direction = np.array(
            [
                [math.cos(theta), math.sin(theta)],
                [math.sin(theta), -math.cos(theta)],
            ]
        )
        return (np.eye(2) + sign * direction) / 2.0

    op = np.kron(projector(theta_a, sign_a), projector(theta_b + math.pi, sign_b))
    return float(psi @ op @ psi)


def _certified_fraction(p: float, max_denominator: int) -> Fraction:
    f = Fraction(p).limit_denominator(max_denominator)
    if abs(f - Fraction(p)) > Fraction(1, 10**9):
        raise ValueError(
            f"probability {p!r} is not a small-denominator rational; "
            "pass an explicit tolerance for such angles"
        )
    return f


def singlet_table(
    angles_a,
    angles_b=None,
    tolerance: float | None = None,
    max_denominator: int = 64,
) -> TransitionTable:
    """Transition table of the two-spin singlet experiment.

    Angles are in radians.  Without a tolerance, every entry must certify
    to an exact small-denominator rational (within 1e-9); with a
    tolerance, entries are rounded to nearby rationals and each row's sum
    is repaired on its largest entry so rows stay exactly normalized.
    """
    angles_a = tuple(float(t) for t in angles_a)
    angles_b = angles_a if angles_b is None else tuple(float(t) for t in angles_b)
    layout = bell_layout(len(angles_a), len(angles_b))
    signs = (1, -1)
    rows = []
    for ta in angles_a:
        for tb in angles_b:
            raw = [
                singlet_outcome_probability(ta, tb, sa, sb)
                for sa in signs
                for sb in signs
            ]
            if tolerance is None:
                row = [_certified_fraction(p, max_denominator) for p in raw]
                if sum(row) != ONE:
                    raise ValueError("certified entries do not normalize; widen tolerance")
            else:
                denom = max(max_denominator, math.ceil(1.0 / float(tolerance)))
                row = [Fraction(p).limit_denominator(denom) for p in raw]
                drift = sum(row) - ONE
                if drift != ZERO:
                    k = max(range(4), key=lambda m: row[m])
                    row[k] -= drift
                if any(not ZERO <= p <= ONE for p in row):
                    raise ValueError("tolerance too coarse to keep probabilities in [0, 1]")
            rows.append(tuple(row))
    return TransitionTable(layout, tuple(rows))


def standard_bell_placements() -> dict[str, Event]:
    """Unit light-cone geometry: settings and signs at two stations whose
    cross station input-output separations are all spacelike."""
    return {
        "A1": Event(Fraction(0), Fraction(-1)),
        "A2": Event(Fraction(1), Fraction(-1)),
        "B1": Event(Fraction(0), Fraction(1)),
        "B2": Event(Fraction(1), Fraction(1)),
    }


def double_bell_placements() -> dict[str, Event]:
    """Placements of the eight ports of the double Bell network.

    Primed ports belong to one simplified experiment, unprimed to the
    other.  All A-side ports are spacelike from all B-side ports, inputs
    follow outputs timelike within each station, and the two classical
    links (A2' to A1, B2 to B1') run timelike-forward.
    """
    left = Fraction(-1)
    right = Fraction(1)
    return {
        "A1'": Event(Fraction(0), left),
        "A2'": Event(Fraction(1, 2), left),
        "A1": Event(Fraction(3, 4), left),
        "A2": Event(Fraction(7, 4), left),
        "B1": Event(Fraction(1, 4), right),
        "B2": Event(Fraction(1), right),
        "B1'": Event(Fraction(3, 2), right),
        "B2'": Event(Fraction(15, 8), right),
    }


@dataclass(frozen=True)
class BellScenario:
    """A two-party spin-correlation scenario.

    The input event at each station must be spacelike from the output
    event at the other station, and equal settings must give perfectly
    correlated signs."""

    angles_a: tuple[float, ...]
    angles_b: tuple[float, ...]
    placements: dict[str, Event]
    table: TransitionTable

    def __post_init__(self):
        object.__setattr__(self, "angles_a", tuple(float(t) for t in self.angles_a))
        object.__setattr__(self, "angles_b", tuple(float(t) for t in self.angles_b))
        layout = self.table.layout
        if layout.input_cardinalities != (len(self.angles_a), len(self.angles_b)):
            raise ValueError("table settings do not match the angle lists")
        if layout.output_cardinalities != (2, 2):
            raise ValueError("outputs must be binary signs")
        for src, dst in (("A1", "B2"), ("B1", "A2")):
            if src in self.placements and dst in self.placements:
                kind = classify_interval(self.placements[src], self.placements[dst])
                if kind != Interval.SPACELIKE:
                    raise ValueError(
                        f"{src} and {dst} must be spacelike separated, got {kind.value}"
                    )
        for ia, ta in enumerate(self.angles_a):
            for ib, tb in enumerate(self.angles_b):
                if ta == tb:
                    i = layout.encode_input((ia, ib))
                    if (
                        self.table.rows[i][layout.encode_output((0, 1))] != ZERO
                        or self.table.rows[i][layout.encode_output((1, 0))] != ZERO
                    ):
                        raise ValueError(
                            "equal settings must give perfectly correlated signs"
                        )


def bell_scenario(angles, table: TransitionTable | None = None, placements=None) -> BellScenario:
    """Scenario with shared angles at both stations; the table defaults to
    the singlet oracle."""
    angles = tuple(float(t) for t in angles)
    if table is None:
        table = singlet_table(angles)
    if placements is None:
        placements = standard_bell_placements()
    return BellScenario(angles, angles, placements, table)


def bell_problem(scenario: BellScenario, spin_symmetry: bool = True) -> ConsistencyProblem:
    """Locality-restricted, perfect-correlation-constrained consistency problem."""
    if scenario.angles_a != scenario.angles_b:
        raise ValueError("both stations need the same angle set")
    problem = build_consistency_problem(scenario.table)
    problem = restrict_to_local(problem, bell_partition())
    return apply_perfect_correlation(problem, spin_symmetry=spin_symmetry)


def _cyclic_pairs(n: int) -> list[tuple[int, int]]:
    return [((k + 1) % n, (k + 2) % n) for k in range(n)]


def bell_symbol_order(n: int) -> list[tuple[int, int]]:
    """Preferred transition symbols: same-sign entries first, within each
    outcome the forward-cyclic setting pairs, then diagonals, then the
    transposed pairs."""
    layout = bell_layout(n)
    pairs = _cyclic_pairs(n)
    diag = [(k, k) for k in range(n)]
    rest = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if (a, b) not in pairs and a != b
    ]
    order = []
    for j in range(4):
        for a, b in pairs + diag + rest:
            order.append((layout.encode_input((a, b)), j))
    return order


def bell_inequalities(scenario: BellScenario, method: str = "auto") -> list[DerivedInequality]:
    problem = bell_problem(scenario)
    return derive_inequalities(
        problem,
        preferred_symbols=bell_symbol_order(len(scenario.angles_a)),
        method=method,
    )


@dataclass(frozen=True)
class BellViolationReport:
    """Values of the three-angle inequality instances on a concrete table."""

    instances: tuple[tuple[str, Fraction], ...]
    forms: tuple[DerivedInequality, ...]

    @property
    def minimum(self) -> Fraction:
        return min(v for _, v in self.instances)

    @property
    def violated(self) -> bool:
        return self.minimum < ZERO

    def violations(self) -> tuple[tuple[str, Fraction], ...]:
        return tuple((name, v) for name, v in self.instances if v < ZERO)


def bell_violation_report(scenario: BellScenario) -> BellViolationReport:
    """Evaluate every cyclic instance of the three-angle sign-class bounds.

    Each instance is twice a class probability, written over same-sign
    entries (with the 1/2 normalization constant) or over opposite-sign
    entries; any negative value certifies that no local model reproduces
    the table.
    """
    if len(scenario.angles_a) != 3 or scenario.angles_a != scenario.angles_b:
        raise ValueError("violation report needs three shared angles")
    layout = scenario.table.layout
    pairs = _cyclic_pairs(3)

    def sym(pair, j):
        return (layout.encode_input(pair), j)

    instances = []
    forms = []

    coeffs = tuple((sym(p, 0), ONE) for p in pairs)
    form = DerivedInequality(coeffs, HALF, ">=", "P0 from same-sign entries")
    instances.append(("P0 same-sign", form.evaluate(scenario.table)))
    forms.append(form)

    for k in range(3):
        plus = pairs[k]
        minus = [pairs[(k + 1) % 3], pairs[(k + 2) % 3]]
        coeffs = ((sym(plus, 0), ONE),) + tuple((sym(p, 0), -ONE) for p in minus)
        form = DerivedInequality(coeffs, -HALF, ">=", f"P{k + 1} from same-sign entries")
        instances.append((f"P{k + 1} same-sign", form.evaluate(scenario.table)))
        forms.append(form)

    for k in range(3):
        plus = [pairs[(k + 1) % 3], pairs[(k + 2) % 3]]
        minus = pairs[k]
        coeffs = tuple((sym(p, 1), ONE) for p in plus) + ((sym(minus, 1), -ONE),)
        form = DerivedInequality(coeffs, ZERO, ">=", f"P{k + 1} from opposite-sign entries")
        instances.append((f"P{k + 1} opposite-sign", form.evaluate(scenario.table)))
        forms.append(form)

    return BellViolationReport(tuple(instances), tuple(forms))


@dataclass(frozen=True)
class SimplifiedBell:
    """One-sided reduction of the Bell experiment.

    One station keeps a single fixed angle; the other chooses between two.
    The interesting object is the channel from the remote binary setting
    to the local sign, a distribution over the four elementary binary
    behaviours (const+, const-, Id, NOT); Id and NOT are the signalling
    ones."""

    base: BellScenario
    channel: TransferDistribution

    def __post_init__(self):
        if len(self.base.angles_a) != 1 or len(self.base.angles_b) != 2:
            raise ValueError("simplified scenario: one fixed angle, two remote angles")
        if self.channel.layout.input_cardinalities != (2,) or (
            self.channel.layout.output_cardinalities != (2,)
        ):
            raise ValueError("channel must be a binary-to-binary distribution")

    @property
    def nonlocal_weights(self) -> tuple[Fraction, Fraction]:
        return (self.channel.probability(2), self.channel.probability(3))


def build_simplified_bell(
    evidence: WeakSignalReport,
    lorentz_symmetry: bool,
    epsilon=Fraction(1, 10),
    angles: tuple[float, float] = (0.0, math.pi / 3),
    placements=None,
) -> SimplifiedBell:
    """Infer the simplified experiment's channel from violation evidence.

    A certified weak signal shows signalling behaviour in one direction;
    invariance under the half-turn that exchanges the stations (an element
    of the Lorentz group) extends it to both, so both signalling channel
    functions get strictly positive weight.  Without the certificate or
    without the symmetry assumption there is no basis for that inference
    and this refuses.  The magnitudes are free parameters: epsilon on each
    of Id and NOT, the rest split between the constants.
    """
    if not evidence.weak_signal:
        raise ValueError(
            "evidence does not certify a weak signal; the channel inference has no basis"
        )
    if not lorentz_symmetry:
        raise ValueError(
            "a violation alone fixes only one signalling direction; "
            "without Lorentz symmetry the two-way channel cannot be inferred"
        )
    epsilon = as_fraction(epsilon)
    if not ZERO < epsilon <= HALF:
        raise ValueError(f"epsilon must be in (0, 1/2], got {epsilon}")
    theta1, theta2 = float(angles[0]), float(angles[1])
    base = BellScenario(
        (theta1,),
        (theta1, theta2),
        placements or standard_bell_placements(),
        singlet_table((theta1,), (theta1, theta2)),
    )
    rest = (ONE - 2 * epsilon) / 2
    channel = TransferDistribution(
        CHANNEL_LAYOUT, {0: rest, 1: rest, 2: epsilon, 3: epsilon}
    )
    return SimplifiedBell(base, channel)


@dataclass(frozen=True)
class DoubleBellNetwork:
    """Two simplified experiments cross-linked by classical gates.

    The unprimed experiment's channel sends the A1 setting to the B2 sign;
    the primed one sends the B1' setting to the A2' sign.  The classical
    link at A feeds A2' into A1, the one at B feeds B2 into B1'; together
    they close the cycle A2' -> A1 -> B2 -> B1' -> A2'."""

    primed: SimplifiedBell
    unprimed: SimplifiedBell
    link_a: TransferFunction
    link_b: TransferFunction
    placements: dict[str, Event]
    joint: JointTransferDistribution

    def __post_init__(self):
        if tuple(self.joint.components) != (
            self.unprimed.channel.layout,
            self.primed.channel.layout,
        ):
            raise ValueError("joint must range over (unprimed, primed) channels")

    @property
    def factorized(self) -> bool:
        return is_factorized(self.joint)


def build_double_bell_network(
    primed: SimplifiedBell,
    unprimed: SimplifiedBell,
    link_a: TransferFunction | None = None,
    link_b: TransferFunction | None = None,
    placements=None,
    joint: JointTransferDistribution | None = None,
) -> DoubleBellNetwork:
    """Assemble the network; links default to identity at A and NOT at B,
    and the joint defaults to the independent product of the channels."""
    link_a = link_a if link_a is not None else identity_function(CHANNEL_LAYOUT)
    link_b = link_b if link_b is not None else not_function(CHANNEL_LAYOUT)
    placements = placements or double_bell_placements()
    if joint is None:
        joint = product_distribution(unprimed.channel, primed.channel)
    return DoubleBellNetwork(primed, unprimed, link_a, link_b, placements, joint)


@dataclass(frozen=True)
class DoubleBellVerdict:
    """Loop analysis of the double Bell cycle."""

    network: DoubleBellNetwork
    analysis: LoopAnalysis
    wiring: WiringReport
    loop_ports: tuple[str, ...] = ("A2'", "A1", "B2", "B1'")

    @property
    def contradiction_probability(self) -> Fraction:
        return self.analysis.contradiction_probability

    @property
    def forbidden(self) -> bool:
        return self.analysis.forbidden

    @property
    def allowed(self) -> bool:
        return self.analysis.allowed


def double_bell_verdict(net: DoubleBellNetwork) -> DoubleBellVerdict:
    """Close the cycle and measure the probability of a contradiction.

    The loop distribution composes link A, the unprimed channel, link B,
    and the primed channel per joint channel outcome (links are sure
    things).  The contradiction probability is the mass on fixed-point-free
    loop behaviours; any positive mass makes the loop forbidden."""
    wiring = validate_classical_wiring(net.placements, DOUBLE_BELL_CLASSICAL_LINKS)
    if not wiring.admissible:
        raise ValueError(f"classical links are not causally admissible: {wiring.violations}")
    weights = {}
    for (fu, fp), w in net.joint.weights.items():
        weights[(net.link_a.index, fu, net.link_b.index, fp)] = w
    loop_joint = JointTransferDistribution(
        (
            net.link_a.layout,
            net.unprimed.channel.layout,
            net.link_b.layout,
            net.primed.channel.layout,
        ),
        weights,
    )
    analysis = stochastic_loop_analysis(loop_joint)
    return DoubleBellVerdict(net, analysis, wiring)


@dataclass(frozen=True)
class AuditEntry:
    assumption: str
    status: str
    note: str
    computed: bool = True


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]

    @property
    def final_rejection(self) -> AuditEntry:
        return self.entries[-1]


def assumption_audit(verdict: DoubleBellVerdict) -> AuditReport:
    """Walk the elimination argument behind a forbidden verdict.

    The combination (AS1) and gate-interface (AS2 for the classical links)
    assumptions survive scrutiny; what remains is either a change of the
    experiments' joint distribution upon combination (AS2 for the Bell
    pair) or the Lorentz-invariance assumption (AS3) that fed the channel
    inference.  The final AS3 rejection is the interpretive resolution,
    not a computed fact, and is marked as such."""
    if verdict.allowed:
        raise ValueError("the loop is allowed; there is nothing to audit")
    entries = [
        AuditEntry(
            "AS1",
            "holds",
            "the four subsystems have consistent ports and were combined "
            "into the cycle; nothing prevents the combination",
        ),
        AuditEntry(
            "AS2 (classical gates)",
            "holds",
            "deterministic gates interact only through their ports; "
            "rejecting this rejects digital control of experiments in general",
        ),
    ]
    if not verdict.network.factorized:
        entries.append(
            AuditEntry(
                "AS2 (joint of the two experiments)",
                "caveat",
                "the channels are correlated rather than independent; an "
                "unsuspected background correlation could absorb the blame",
            )
        )
    else:
        entries.append(
            AuditEntry(
                "AS2 (joint of the two experiments)",
                "implausible",
                "combining through gates would have to alter the experiments' "
                "independent joint distribution, for which nothing accounts",
            )
        )
    entries.append(
        AuditEntry(
            "AS3",
            "rejected",
            "the remaining resolution: the weak-signal dynamics of quantum "
            "measurement is not invariant under the full Lorentz group "
            "(interpretive conclusion, not a computed fact)",
            computed=False,
        )
    )
    return AuditReport(tuple(entries))
