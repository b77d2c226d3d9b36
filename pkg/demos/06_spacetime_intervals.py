"""Spacetime bookkeeping: intervals, boosts, and admissible wiring.

Coordinates are exact rationals in units where light moves one unit of
space per unit of time.  Interval classification compares squared
separations, boosts use velocities with rational Lorentz factors, and a
classical link between ports is admissible only if it runs forward in
time no faster than light.
"""

from fractions import Fraction

from causal_transfer import (
    Event,
    boost,
    classify_interval,
    pi_rotation,
    validate_classical_wiring,
)

F = Fraction
origin = Event(F(0), F(0))

print("interval classification from the origin:")
for t, x in ((2, 1), (1, 3), (1, 1), (-2, 1)):
    e = Event(F(t), F(x))
    print(f"   to (t={t}, x={x}): {classify_interval(origin, e).value}")

print()
print("a boost at v = 3/5 (Lorentz factor 5/4, exactly rational):")
e = Event(F(1, 10), F(1))
b = boost(e, F(3, 5))
print(f"   (t={e.t}, x={e.x})  ->  (t={b.t}, x={b.x})")
print("   the pair was spacelike from the origin, and its time order flipped:",
      e.t > 0 > b.t)
print("   classification is frame independent:",
      classify_interval(origin, e) == classify_interval(boost(origin, F(3, 5)), b))

print()
print("interval arithmetic stays exact under the boost:")
print("   t^2 - x^2 before:", origin.interval_squared(e))
print("   t^2 - x^2 after: ", boost(origin, F(3, 5)).interval_squared(b))

try:
    boost(origin, F(1, 2))
except ValueError as ex:
    print()
    print("velocities with irrational Lorentz factors are refused:")
    print("  ", ex)

print()
print("the half-turn that exchanges left and right stations:")
e = Event(F(1), F(2))
print(f"   {e} -> {pi_rotation(e)} -> {pi_rotation(pi_rotation(e))}")

print()
print("classical links must run timelike-forward:")
placements = {
    "source": Event(F(0), F(0)),
    "near": Event(F(2), F(0)),
    "far": Event(F(0), F(5)),
    "past": Event(F(-1), F(0)),
}
report = validate_classical_wiring(
    placements, [("source", "near"), ("source", "far"), ("source", "past")]
)
for src, dst, kind in report.checked:
    verdict = "ok" if (src, dst, kind) not in report.violations else "violation"
    print(f"   {src} -> {dst}: {kind.value} ({verdict})")
print("   wiring admissible overall:", report.admissible)
