"""Flat 1+1D spacetime annotations for ports.

Events carry exact rational coordinates (units with c = 1), so interval
classification compares squared separations exactly.  Boosts are supported
for rational velocities whose Lorentz factor is rational (for example
3/5 or 4/5), which keeps boosted coordinates inside the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .rationals import as_fraction


class Interval(Enum):
    TIMELIKE_FORWARD = "timelike-forward"
    TIMELIKE_BACKWARD = "timelike-backward"
    SPACELIKE = "spacelike"
    NULL = "null"


@dataclass(frozen=True)
class Event:
    """A point event: time and position coordinates."""

    t: Fraction
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", as_fraction(self.t))
        object.__setattr__(self, "x", as_fraction(self.x))

    def interval_squared(self, other: "Event") -> Fraction:
        dt = other.t - self.t
        dx = other.x - self.x
        return dt * dt - dx * dx

    def __str__(self) -> str:
        return f"(t={self.t}, x={self.x})"


def classify_interval(e1: Event, e2: Event) -> Interval:
    """Classify the separation from e1 to e2.

    Timelike-forward when e2 is strictly inside e1's future light cone,
    timelike-backward for the past cone, spacelike outside both.  Null
    separations sit exactly on the cone; they are classified rather than
    rejected so callers can flag them.
    """
    dt = e2.t - e1.t
    dx = e2.x - e1.x
    tt = dt * dt
    xx = dx * dx
    if tt == xx:
        return Interval.NULL
    if tt > xx:
        return Interval.TIMELIKE_FORWARD if dt > 0 else Interval.TIMELIKE_BACKWARD
    return Interval.SPACELIKE


def _rational_sqrt(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    num = isqrt(f.numerator)
    den = isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


def boost(e: Event, velocity) -> Event:
    """Lorentz boost of an event by a rational velocity, |v| < 1.

    Exactness requires gamma = 1/sqrt(1 - v^2) to be rational, which holds
    for velocities from Pythagorean triples (3/5, 4/5, 5/13, ...); other
    velocities raise ValueError rather than silently losing exactness.
    """
    v = as_fraction(velocity)
    if abs(v) >= 1:
        raise ValueError(f"|velocity| must be < 1, got {v}")
    gamma = _rational_sqrt(1 / (1 - v * v))
    if gamma is None:
        raise ValueError(
            f"velocity {v} has an irrational Lorentz factor; "
            "use a velocity with 1 - v^2 a rational square (e.g. 3/5)"
        )
    return Event(gamma * (e.t - v * e.x), gamma * (e.x - v * e.t))


def pi_rotation(e: Event, center: Event = Event(Fraction(0), Fraction(0))) -> Event:
    """Spatial half-turn about a center: (t, x) -> (t, 2c - x).

    Applied to a two-party scenario it exchanges the left and right
    stations; it is an element of the Lorentz group (a rotation by pi in
    the spatial plane, which in 1+1D is the reflection of x)."""
    return Event(e.t, 2 * center.x - e.x)


@dataclass(frozen=True)
class PortPlacement:
    """A port pinned to a point event in spacetime."""

    port: str
    event: Event


@dataclass(frozen=True)
class WiringReport:
    """Causal admissibility of a set of classical links."""

    checked: tuple[tuple[str, str, Interval], ...]
    violations: tuple[tuple[str, str, Interval], ...]
    flagged_null: tuple[tuple[str, str], ...]

    @property
    def admissible(self) -> bool:
        return not self.violations


def _placement_map(placements) -> dict[str, Event]:
    if isinstance(placements, dict):
        return {name: ev for name, ev in placements.items()}
    return {p.port: p.event for p in placements}


def validate_classical_wiring(placements, links) -> WiringReport:
    """Check that every classical link runs forward in time, no faster
    than light, from its source port to its destination port.

    Spacelike or backward links are violations.  Exactly-lightlike forward
    links are admissible but flagged.  (Weak signals of quantum origin are
    not classical links and are exempt from this check.)
    """
    events = _placement_map(placements)
    checked = []
    violations = []
    flagged = []
    for src, dst in links:
        if src not in events:
            raise ValueError(f"link source port {src!r} has no placement")
        if dst not in events:
            raise ValueError(f"link destination port {dst!r} has no placement")
        kind = classify_interval(events[src], events[dst])
        checked.append((src, dst, kind))
        if kind == Interval.TIMELIKE_FORWARD:
            continue
        if kind == Interval.NULL and events[dst].t > events[src].t:
            flagged.append((src, dst))
            continue
        violations.append((src, dst, kind))
    return WiringReport(tuple(checked), tuple(violations), tuple(flagged))
