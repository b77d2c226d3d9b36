"""Deterministic systems with discrete classical inputs and outputs.

A system's behaviour is a transfer function: a total map from its joint
input value to its joint output value.  This module provides the port
bookkeeping (joint indices use a fixed mixed-radix encoding, first-listed
port most significant), counting identities, canonical enumeration of all
transfer functions of a layout, series/parallel combination, loop closure,
and the fixed-point test that separates allowed causal loops from
forbidden ones.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_ENUMERATION_CAP = 10**6
CAP_ENV_VAR = "CAUSAL_TRANSFER_CAP"


class CapExceededError(ValueError):
    """Raised when an operation would enumerate more transfer functions than the cap."""


class LayoutMismatchError(ValueError):
    """Raised when ports being wired together do not have the same shape."""


def enumeration_cap(cap: int | None = None) -> int:
    """Resolve the enumeration cap: explicit argument, else the
    CAUSAL_TRANSFER_CAP environment variable, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


@dataclass(frozen=True)
class PortSpec:
    """A named discrete port with a fixed number of possible values.

    Cardinality 1 marks a degenerate port (carries no information, used
    e.g. for the single-angle input of the simplified Bell experiment);
    cardinality 2 marks a binary port.
    """

    name: str
    cardinality: int

    def __post_init__(self):
        if not self.name:
            raise ValueError("port name must be a nonempty string")
        if self.cardinality < 1:
            raise ValueError(f"port {self.name!r}: cardinality must be >= 1")

    @property
    def is_binary(self) -> bool:
        return self.cardinality == 2


def _mixed_radix_encode(values, cardinalities) -> int:
    idx = 0
    for v, c in zip(values, cardinalities, strict=True):
        if not 0 <= v < c:
            raise ValueError(f"value {v} out of range for cardinality {c}")
        idx = idx * c + v
    return idx


def _mixed_radix_decode(index: int, cardinalities) -> tuple[int, ...]:
    values = []
    for c in reversed(cardinalities):
        values.append(index % c)
        index //= c
    if index:
        raise ValueError("joint index out of range")
    return tuple(reversed(values))


@dataclass(frozen=True)
class PortLayout:
    """Ordered input and output ports of a system.

    The joint input value i is the tuple of per-port values; it is encoded
    as a single index in 0..N(i)-1 with the first-listed port most
    significant, and likewise for the joint output j.
    """

    inputs: tuple[PortSpec, ...]
    outputs: tuple[PortSpec, ...]

    def __post_init__(self):
        inputs = tuple(self.inputs)
        outputs = tuple(self.outputs)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)
        if not inputs or not outputs:
            raise ValueError("a layout needs at least one input and one output port")
        names = [p.name for p in inputs + outputs]
        if len(set(names)) != len(names):
            raise ValueError(f"port names must be unique within a layout: {names}")

    @property
    def input_cardinalities(self) -> tuple[int, ...]:
        return tuple(p.cardinality for p in self.inputs)

    @property
    def output_cardinalities(self) -> tuple[int, ...]:
        return tuple(p.cardinality for p in self.outputs)

    @property
    def n_inputs(self) -> int:
        """Number of joint input values, N(i)."""
        n = 1
        for c in self.input_cardinalities:
            n *= c
        return n

    @property
    def n_outputs(self) -> int:
        """Number of joint output values, N(j)."""
        n = 1
        for c in self.output_cardinalities:
            n *= c
        return n

    def encode_input(self, values) -> int:
        return _mixed_radix_encode(values, self.input_cardinalities)

    def decode_input(self, index: int) -> tuple[int, ...]:
        return _mixed_radix_decode(index, self.input_cardinalities)

    def encode_output(self, values) -> int:
        return _mixed_radix_encode(values, self.output_cardinalities)

    def decode_output(self, index: int) -> tuple[int, ...]:
        return _mixed_radix_decode(index, self.output_cardinalities)

    @property
    def is_elementary_binary(self) -> bool:
        """One binary input port and one binary output port."""
        return (
            len(self.inputs) == 1
            and len(self.outputs) == 1
            and self.inputs[0].cardinality == 2
            and self.outputs[0].cardinality == 2
        )


def elementary_binary_layout(in_name: str = "in", out_name: str = "out") -> PortLayout:
    return PortLayout((PortSpec(in_name, 2),), (PortSpec(out_name, 2),))


@dataclass(frozen=True)
class TransferFunction:
    """A total map from joint input index to joint output index."""

    layout: PortLayout
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.layout.n_inputs:
            raise ValueError(
                f"table has {len(table)} entries, layout has {self.layout.n_inputs} joint inputs"
            )
        n_out = self.layout.n_outputs
        for j in table:
            if not 0 <= j < n_out:
                raise ValueError(f"output index {j} out of range 0..{n_out - 1}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def apply(self, values) -> tuple[int, ...]:
        """Apply to a tuple of per-port input values, returning per-port outputs."""
        return self.layout.decode_output(self.table[self.layout.encode_input(values)])

    @property
    def table_number(self) -> int:
        """The output tuple read as a base-N(j) numeral, joint input 0 most significant."""
        n = 0
        for j in self.table:
            n = n * self.layout.n_outputs + j
        return n

    @property
    def index(self) -> int:
        """Position of this function in the canonical enumeration of its layout."""
        return _position_of_number(self.layout, self.table_number)

    @property
    def label(self) -> str:
        return f"F{self.index}"

    def fixed_points(self) -> tuple[int, ...]:
        """Inputs i with F(i) = i; meaningful when input and output encodings agree."""
        return tuple(i for i, j in enumerate(self.table) if i == j)


# The elementary binary layout follows the conventional gate order
# [const0, const1, Id, NOT]; every other layout enumerates functions in
# lexicographic order of their output tuples.  Positions <-> table numbers:
_BINARY_POSITION_TO_NUMBER = (0, 3, 1, 2)
_BINARY_NUMBER_TO_POSITION = (0, 2, 3, 1)


def _position_of_number(layout: PortLayout, number: int) -> int:
    if layout.is_elementary_binary:
        return _BINARY_NUMBER_TO_POSITION[number]
    return number


def _number_of_position(layout: PortLayout, position: int) -> int:
    if layout.is_elementary_binary:
        return _BINARY_POSITION_TO_NUMBER[position]
    return position


def function_from_index(layout: PortLayout, index: int) -> TransferFunction:
    """The transfer function at a canonical enumeration position."""
    n_f = count_transfer_functions(layout)
    if not 0 <= index < n_f:
        raise ValueError(f"function index {index} out of range 0..{n_f - 1}")
    number = _number_of_position(layout, index)
    table = _mixed_radix_decode(number, (layout.n_outputs,) * layout.n_inputs)
    return TransferFunction(layout, table)


@dataclass(frozen=True)
class DeterministicSystem:
    """A named deterministic system: a layout together with its transfer function."""

    id: str
    layout: PortLayout
    function: TransferFunction

    def __post_init__(self):
        if self.function.layout != self.layout:
            raise LayoutMismatchError(
                f"system {self.id!r}: function layout does not match system layout"
            )

    @classmethod
    def of(cls, id: str, function: TransferFunction) -> "DeterministicSystem":
        return cls(id, function.layout, function)


def count_transitions(layout: PortLayout) -> int:
    """Number of possible single transitions i -> j, which is N(i) * N(j)."""
    return layout.n_inputs * layout.n_outputs


def count_parallel_transitions(*layouts: PortLayout) -> int:
    """Transitions of a combination of independent subsystems: the per
    subsystem counts add, which is fewer than for a general system with
    the same ports."""
    return sum(count_transitions(layout) for layout in layouts)


def count_parallel_transfer_functions(*layouts: PortLayout) -> int:
    """Transfer functions realizable by independent subsystems: the per
    subsystem counts multiply."""
    n = 1
    for layout in layouts:
        n *= count_transfer_functions(layout)
    return n


def count_transfer_functions(layout: PortLayout, cap: int | None = None) -> int:
    """Number of possible transfer functions, N(j) ** N(i).

    If ``cap`` is given, a count above it raises CapExceededError instead of
    being returned.
    """
    n = layout.n_outputs**layout.n_inputs
    if cap is not None and n > cap:
        raise CapExceededError(f"{n} transfer functions exceed the cap {cap}")
    return n


def enumerate_transfer_functions(
    layout: PortLayout, cap: int | None = None
) -> list[TransferFunction]:
    """All transfer functions of the layout in canonical order.

    Raises CapExceededError when the count exceeds the enumeration cap
    (explicit argument, CAUSAL_TRANSFER_CAP, or the default of 10**6);
    there is never silent truncation.
    """
    limit = enumeration_cap(cap)
    n = count_transfer_functions(layout)
    if n > limit:
        raise CapExceededError(
            f"layout has {n} transfer functions, more than the enumeration cap {limit}"
        )
    return [function_from_index(layout, k) for k in range(n)]


def constant_function(layout: PortLayout, j: int) -> TransferFunction:
    return TransferFunction(layout, (j,) * layout.n_inputs)


def identity_function(layout: PortLayout) -> TransferFunction:
    if layout.n_inputs != layout.n_outputs:
        raise LayoutMismatchError("identity needs equal joint input and output counts")
    return TransferFunction(layout, tuple(range(layout.n_inputs)))


def not_function(layout: PortLayout) -> TransferFunction:
    """The NOT gate on a binary layout."""
    if layout.n_inputs != 2 or layout.n_outputs != 2:
        raise LayoutMismatchError("NOT is defined for binary layouts only")
    return TransferFunction(layout, (1, 0))


def binary_gates(layout: PortLayout | None = None) -> tuple[TransferFunction, ...]:
    """The four elementary binary transfer functions (const0, const1, Id, NOT)."""
    layout = layout or elementary_binary_layout()
    return (
        constant_function(layout, 0),
        constant_function(layout, 1),
        identity_function(layout),
        not_function(layout),
    )


def _same_port_shape(a: tuple[PortSpec, ...], b: tuple[PortSpec, ...]) -> bool:
    return tuple(p.cardinality for p in a) == tuple(p.cardinality for p in b)


def compose_series(f1: TransferFunction, f2: TransferFunction) -> TransferFunction:
    """The composite F2 after F1.

    Requires f1's output ports to have the same shape (per-port
    cardinalities) as f2's input ports, so the joint encodings agree.
    The result has f1's input layout and f2's output layout.
    """
    if not _same_port_shape(f1.layout.outputs, f2.layout.inputs):
        raise LayoutMismatchError(
            f"cannot compose: output shape {f1.layout.output_cardinalities} "
            f"!= input shape {f2.layout.input_cardinalities}"
        )
    layout = PortLayout(f1.layout.inputs, f2.layout.outputs)
    return TransferFunction(layout, tuple(f2.table[j] for j in f1.table))


def combine_parallel(
    s1: DeterministicSystem, s2: DeterministicSystem
) -> DeterministicSystem:
    """Combine two independent systems into one, concatenating their ports.

    The combined function acts blockwise: each subsystem's outputs depend
    only on its own inputs, and the transfer-function count multiplies.
    """
    l1, l2 = s1.layout, s2.layout
    names1 = {p.name for p in l1.inputs + l1.outputs}
    names2 = {p.name for p in l2.inputs + l2.outputs}
    clash = names1 & names2
    if clash:
        raise ValueError(f"port name collision in parallel combination: {sorted(clash)}")
    layout = PortLayout(l1.inputs + l2.inputs, l1.outputs + l2.outputs)
    table = []
    for i1 in range(l1.n_inputs):
        for i2 in range(l2.n_inputs):
            j1 = s1.function.table[i1]
            j2 = s2.function.table[i2]
            table.append(j1 * l2.n_outputs + j2)
    return DeterministicSystem(
        f"{s1.id}+{s2.id}", layout, TransferFunction(layout, tuple(table))
    )


def close_loop(chain) -> TransferFunction:
    """Compose a cyclically wired chain into its loop transfer function.

    Each function's output ports must match the next function's input
    ports, and the last output must match the first input (the loop
    closure), so the loop function maps the first input space to itself.
    """
    chain = list(chain)
    if not chain:
        raise ValueError("cannot close an empty loop")
    for k, f in enumerate(chain):
        g = chain[(k + 1) % len(chain)]
        if not _same_port_shape(f.layout.outputs, g.layout.inputs):
            raise LayoutMismatchError(
                f"loop link {k} -> {(k + 1) % len(chain)}: "
                f"output shape {f.layout.output_cardinalities} "
                f"!= input shape {g.layout.input_cardinalities}"
            )
    loop = chain[0]
    for f in chain[1:]:
        loop = compose_series(loop, f)
    return loop


@dataclass(frozen=True)
class LoopStatus:
    """Result of the fixed-point test on a loop transfer function."""

    fixed_points: tuple[int, ...]

    @property
    def forbidden(self) -> bool:
        return not self.fixed_points

    @property
    def allowed(self) -> bool:
        return bool(self.fixed_points)


def loop_status(f_loop: TransferFunction) -> LoopStatus:
    """Classify a loop transfer function.

    The loop is allowed iff some input equals its own output; a
    fixed-point-free loop function always produces a contradiction and is
    forbidden.  Requires the input and output sides to share the same
    joint encoding.
    """
    layout = f_loop.layout
    if layout.input_cardinalities != layout.output_cardinalities:
        raise LayoutMismatchError(
            "loop status needs identical input and output encodings"
        )
    return LoopStatus(f_loop.fixed_points())
