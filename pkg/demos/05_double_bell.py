"""The double Bell construction: a forbidden loop from two experiments.

Two simplified experiments run in opposite spatial directions; a classical
wire feeds one experiment's output into the other's setting on each side.
Each experiment's setting-to-remote-sign channel carries both signalling
behaviours with positive weight (that is what a certified violation plus
invariance under the station-exchanging half-turn buys), so the four-step
cycle lands on the fixed-point-free flip with positive probability.  The
loop is forbidden, and something in the assumption stack has to give.
"""

import math
from fractions import Fraction

from causal_transfer import (
    assumption_audit,
    bell_partition,
    build_double_bell_network,
    build_simplified_bell,
    certify_weak_signal,
    classify_interval,
    double_bell_placements,
    double_bell_verdict,
    singlet_table,
    validate_classical_wiring,
)

angles = (0.0, math.pi / 3, 2 * math.pi / 3)
print("step 1: violation evidence")
evidence = certify_weak_signal(singlet_table(angles), bell_partition())
print("   weak signal certified:", evidence.weak_signal)

print()
print("step 2: channels of the two simplified experiments")
epsilon = Fraction(1, 10)
primed = build_simplified_bell(evidence, lorentz_symmetry=True, epsilon=epsilon)
unprimed = build_simplified_bell(evidence, lorentz_symmetry=True, epsilon=epsilon)
print("   each channel:", {f"F{k}": str(w) for k, w in sorted(primed.channel.weights.items())})
print("   (F2 copies the remote setting, F3 flips it; both weights are positive)")

print()
print("step 3: spacetime check of the two classical links")
placements = double_bell_placements()
for name, event in sorted(placements.items(), key=lambda kv: (kv[1].x, kv[1].t)):
    print(f"   {name:4} at t={event.t}, x={event.x}")
wiring = validate_classical_wiring(placements, [("A2'", "A1"), ("B2", "B1'")])
print("   links timelike-forward:", wiring.admissible)
cross = classify_interval(placements["A1"], placements["B2"])
print("   setting A1 vs remote sign B2:", cross.value)

print()
print("step 4: close the loop A2' -> A1 -> B2 -> B1' -> A2'")
net = build_double_bell_network(primed=primed, unprimed=unprimed)
verdict = double_bell_verdict(net)
print("   joint of the two channels factorized:", net.factorized)
print("   loop distribution:")
for k, w in sorted(verdict.analysis.loop_distribution.weights.items()):
    print(f"     F{k}: {w}")
print("   contradiction probability:", verdict.contradiction_probability)
print("   verdict:", "forbidden" if verdict.forbidden else "allowed")

print()
print("step 5: what has to give")
for entry in assumption_audit(verdict).entries:
    tag = "" if entry.computed else "  [interpretive]"
    print(f"   {entry.assumption}: {entry.status}{tag}")
    print(f"      {entry.note}")
