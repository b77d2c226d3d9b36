"""Transfer functions of discrete systems, and how fast their count grows.

A deterministic system with classical inputs and outputs is completely
described by a transfer function: one output value for every joint input
value.  Transitions count like N(i)*N(j); transfer functions count like
N(j)**N(i), which is why the transfer picture has so much more room in it
than the transition picture.
"""

from causal_transfer import (
    PortLayout,
    PortSpec,
    binary_gates,
    combine_parallel,
    count_parallel_transfer_functions,
    count_parallel_transitions,
    count_transfer_functions,
    count_transitions,
    elementary_binary_layout,
    enumerate_transfer_functions,
    DeterministicSystem,
)

three_to_two = PortLayout((PortSpec("i", 3),), (PortSpec("j", 2),))
print("a 3-value input, 2-value output system:")
print("  transitions:       ", count_transitions(three_to_two))
print("  transfer functions:", count_transfer_functions(three_to_two))
for f in enumerate_transfer_functions(three_to_two):
    print("   ", f.label, "maps", list(range(3)), "to", list(f.table))

print()
print("the elementary binary system has exactly four behaviours:")
names = ["always 0", "always 1", "copy the input", "flip the input"]
for f, name in zip(binary_gates(), names):
    print(f"   {f.label}: {list(f.table)}  ({name})")

print()
print("two independent binary systems, considered as one system:")
lay_a = elementary_binary_layout("a_in", "a_out")
lay_b = elementary_binary_layout("b_in", "b_out")
print("  transitions add:      ", count_parallel_transitions(lay_a, lay_b))
print("  functions multiply:   ", count_parallel_transfer_functions(lay_a, lay_b))

general = PortLayout(
    (PortSpec("i1", 2), PortSpec("i2", 2)),
    (PortSpec("j1", 2), PortSpec("j2", 2)),
)
print("  a general system with the same four binary ports has",
      count_transitions(general), "transitions and",
      count_transfer_functions(general), "transfer functions")

ident, flip = binary_gates(lay_a)[2], binary_gates(lay_b)[3]
pair = combine_parallel(
    DeterministicSystem.of("copy", ident), DeterministicSystem.of("flip", flip)
)
print()
print("blockwise action of the combination (copy | flip):")
for i1 in range(2):
    for i2 in range(2):
        print(f"   ({i1},{i2}) -> {pair.function.apply((i1, i2))}")
