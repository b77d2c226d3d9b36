"""The consistent region: many transfer distributions, one transition table.

A fair-coin output (independent of the input) fixes every transition
probability at 1/2, yet leaves the transfer probabilities badly
underdetermined: the degenerate pair {always 0, always 1} and the
signalling pair {copy, flip} both reproduce it exactly.  The consistent
region is a polytope, and exact linear programming navigates it.
"""

from fractions import Fraction

from causal_transfer import (
    LinearConstraint,
    TransferDistribution,
    TransitionTable,
    build_consistency_problem,
    elementary_binary_layout,
    solve_feasibility,
    transitions_from_transfers,
)

half = Fraction(1, 2)
layout = elementary_binary_layout()
coin = TransitionTable(layout, ((half, half), (half, half)))
print("the coin-toss transition table:")
print(coin)

degenerate = TransferDistribution(layout, {0: half, 1: half})
signalling = TransferDistribution(layout, {2: half, 3: half})
print()
print("degenerate mixture {F0, F1} induces:", transitions_from_transfers(degenerate) == coin)
print("signalling mixture {F2, F3} induces:", transitions_from_transfers(signalling) == coin)
print("so nonzero signalling weight does not imply an actual signal.")

problem = build_consistency_problem(coin)
report = solve_feasibility(problem)
print()
print("LP over the four transfer probabilities:")
print("  feasible:", report.feasible)
print("  witness:", {f"F{k}": str(w) for k, w in sorted(report.witness.weights.items())})
print("  both hand-built mixtures check out:",
      problem.is_satisfied_by(degenerate), problem.is_satisfied_by(signalling))

pinned = build_consistency_problem(
    coin, constraints=[LinearConstraint.zero(2), LinearConstraint.zero(3)]
)
report = solve_feasibility(pinned)
print()
print("forcing the signalling weights to zero leaves exactly the degenerate point:")
print("  witness:", {f"F{k}": str(w) for k, w in sorted(report.witness.weights.items())})

impossible = build_consistency_problem(
    coin,
    constraints=[LinearConstraint(((0, Fraction(1)),), ">=", Fraction(3, 5))],
)
report = solve_feasibility(impossible)
print()
print("asking for F0 weight >= 3/5 empties the region:")
print("  feasible:", report.feasible)
print("  certificate re-validates without re-solving:", report.verify())
