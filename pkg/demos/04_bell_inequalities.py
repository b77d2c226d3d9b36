"""Deriving Bell-type inequalities from nonnegative transfer probabilities.

Restricting a two-party experiment to local behaviours (each station's
sign depends only on its own setting), imposing perfect correlation at
equal settings and sign-reversal symmetry, leaves four free class
probabilities.  Solving the transition equations for them and demanding
nonnegativity reproduces the classic three-angle inequalities; the singlet
violates one instance by exactly 1/8.
"""

import math

from causal_transfer import (
    bell_inequalities,
    bell_partition,
    bell_scenario,
    bell_violation_report,
    build_consistency_problem,
    certify_weak_signal,
    derive_inequalities,
    expectation_value,
    restrict_to_local,
)

angles = (0.0, math.pi / 3, 2 * math.pi / 3)
scenario = bell_scenario(angles)
layout = scenario.table.layout

print("singlet table at angles 0, 60, 120 degrees (same-sign convention):")
for ia in range(3):
    for ib in range(3):
        i = layout.encode_input((ia, ib))
        row = "  ".join(str(p) for p in scenario.table.rows[i])
        print(f"   settings ({ia + 1},{ib + 1}): {row}")

print()
print("derived inequalities (each is twice a class probability, >= 0):")
for q in bell_inequalities(scenario):
    print("  ", q.render(layout))

print()
print("evaluating every instance on the singlet table:")
report = bell_violation_report(scenario)
for name, value in report.instances:
    marker = "  <-- violated" if value < 0 else ""
    print(f"   {name}: {value}{marker}")
print("minimum:", report.minimum)

print()
weak = certify_weak_signal(scenario.table, bell_partition())
print("locality-restricted LP is feasible:", weak.feasibility.feasible)
print("hence a weak signal:", weak.weak_signal)
print("certificate verifies independently:", weak.feasibility.verify())

print()
print("product expectation values, for comparison with correlation bounds:")
for pair in ((0, 0), (0, 1), (1, 2), (0, 2)):
    print(f"   settings {pair}:", expectation_value(scenario.table, pair))

print()
print("two settings alone can always be explained locally:")
two = bell_scenario((0.0, math.pi / 3))
for q in bell_inequalities(two):
    value = q.evaluate(two.table)
    print(f"   {q.render(two.table.layout)}   holds with slack {value}")
weak2 = certify_weak_signal(two.table, bell_partition())
print("   weak signal with two settings:", weak2.weak_signal)

print()
print("the generic route, without the correlation shortcut: enumerate the")
print("facets of the two-setting local polytope by double description")
local = restrict_to_local(
    build_consistency_problem(two.table), bell_partition()
)
facets = derive_inequalities(local, method="facets")
wide = [q for q in facets if len(q.normalized()[0]) == 16]
print(f"   {len(facets)} facets, {len(wide)} of them the familiar"
      " four-setting-pair correlation bounds; one of those:")
print("  ", wide[0].render(two.table.layout))
