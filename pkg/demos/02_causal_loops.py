"""Causal loops: when does a cycle of systems contradict itself?

Closing a chain of systems into a loop forces the first input to equal the
last output.  The composed loop function must map some input to itself; a
fixed-point-free loop function (for binary systems, the flip) is a
contradiction.  Stochastically, any nonzero probability of landing on a
fixed-point-free loop function makes the loop forbidden.
"""

from fractions import Fraction

from causal_transfer import (
    JointTransferDistribution,
    TransferDistribution,
    binary_gates,
    close_loop,
    elementary_binary_layout,
    loop_status,
    stochastic_loop_analysis,
)

const0, const1, ident, flip = binary_gates()

print("all four binary behaviours, as loop candidates:")
for f in (const0, const1, ident, flip):
    status = loop_status(f)
    what = f"fixed points {list(status.fixed_points)}" if status.allowed else "forbidden"
    print(f"   {f.label} {list(f.table)}: {what}")

print()
loop = close_loop([ident, ident, ident, flip])
print("a four-system cycle of three wires and one inverter composes to",
      loop.label, list(loop.table))
print("verdict:", "forbidden" if loop_status(loop).forbidden else "allowed")

print()
print("stochastic version: two noisy stages and an inverting link")
tenth = Fraction(1, 10)
layout = elementary_binary_layout()
stage = TransferDistribution(
    layout, {0: Fraction(2, 5), 1: Fraction(2, 5), 2: tenth, 3: tenth}
)
link = TransferDistribution.point_mass(flip)
joint = JointTransferDistribution.from_marginals([stage, stage, link])
analysis = stochastic_loop_analysis(joint)
print("  loop distribution:")
for k, w in sorted(analysis.loop_distribution.weights.items()):
    print(f"    F{k}: {w}")
print("  contradiction probability:", analysis.contradiction_probability)
print("  verdict:", "forbidden" if analysis.forbidden else "allowed")

print()
print("correlation can rescue a loop that independence would forbid:")
correlated = JointTransferDistribution(
    (layout, layout), {(2, 2): Fraction(1, 2), (3, 3): Fraction(1, 2)}
)
print("  perfectly correlated signalling stages:",
      "allowed" if stochastic_loop_analysis(correlated).allowed else "forbidden")
