"""Boolean functions in algebraic normal form and as dense truth tables.

Bit-ordering convention used throughout the package: the integer index ``x``
encodes an assignment with bit ``j`` (value ``2**j``) holding variable ``x_j``,
so ``x_0`` is the least significant bit.

An :class:`AnfFunction` is an XOR of product terms over uncomplemented
variables (positive-polarity Reed-Muller form). Each term is stored as a
bitmask of the variables it multiplies; the empty mask is the constant 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

#: Largest arity for which a truth table is materialized (16 Mi entries).
TABLE_ARITY_CAP = 24


class ArityError(ValueError):
    """Operands or indices do not fit the function's number of variables."""


class CapacityError(ValueError):
    """Requested arity exceeds what this package will materialize."""


class ParseError(ValueError):
    """A function spec string could not be parsed."""

    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.column = column
        self.line = 1
        super().__init__(f"line 1, column {column}: {message}")


def _check_var(arity: int, i: int) -> None:
    if not 0 <= i < arity:
        raise ArityError(f"variable index {i} out of range for arity {arity}")


def _check_cap(arity: int) -> None:
    if arity > TABLE_ARITY_CAP:
        raise CapacityError(
            f"arity {arity} exceeds the truth-table cap of {TABLE_ARITY_CAP}"
        )


def _xor_terms(masks: Iterable[int]) -> tuple[int, ...]:
    present: set[int] = set()
    for mask in masks:
        present ^= {mask}
    return tuple(sorted(present))


@dataclass(frozen=True)
class AnfFunction:
    """XOR of product terms, each term a variable bitmask.

    Construct through :meth:`from_terms` so that duplicate terms cancel.
    """

    arity: int
    terms: tuple[int, ...] = ()

    def __post_init__(self):
        if self.arity < 0:
            raise ArityError("arity must be non-negative")
        limit = 1 << self.arity
        for mask in self.terms:
            if not 0 <= mask < limit:
                raise ArityError(
                    f"term mask {mask:#x} uses variables beyond arity {self.arity}"
                )
        if list(self.terms) != sorted(set(self.terms)):
            object.__setattr__(self, "terms", _xor_terms(self.terms))

    @classmethod
    def from_terms(cls, arity: int, masks: Iterable[int]) -> "AnfFunction":
        return cls(arity, _xor_terms(masks))

    @classmethod
    def zero(cls, arity: int) -> "AnfFunction":
        return cls(arity, ())

    @classmethod
    def one(cls, arity: int) -> "AnfFunction":
        return cls(arity, (0,))

    @classmethod
    def variable(cls, arity: int, i: int) -> "AnfFunction":
        _check_var(arity, i)
        return cls(arity, (1 << i,))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((bin(t).count("1") for t in self.terms), default=-1)

    def __call__(self, assignment) -> int:
        return evaluate(self, assignment)

    def __xor__(self, other: "AnfFunction") -> "AnfFunction":
        return xor(self, other)

    def __str__(self) -> str:
        return format_anf(self)


@dataclass(frozen=True, eq=False)
class TruthTable:
    """Dense table of ``2**arity`` output bits; ``bits[x] == f(x)``."""

    arity: int
    bits: np.ndarray

    def __post_init__(self):
        _check_cap(self.arity)
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.shape != (1 << self.arity,):
            raise ArityError(
                f"table of length {bits.size} does not match arity {self.arity}"
            )
        if np.any(bits > 1):
            raise ValueError("truth table entries must be 0 or 1")
        bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, arity: int, value: int) -> "TruthTable":
        """Table whose entry ``x`` is bit ``x`` of ``value``."""
        size = 1 << arity
        if value < 0 or value >> size:
            raise ArityError(f"value {value:#x} does not fit a table of arity {arity}")
        bits = np.array([(value >> x) & 1 for x in range(size)], dtype=np.uint8)
        return cls(arity, bits)

    def to_int(self) -> int:
        return sum(int(b) << x for x, b in enumerate(self.bits))

    def to_hex(self) -> str:
        return hex(self.to_int())

    @property
    def size(self) -> int:
        return self.bits.size

    @property
    def ones(self) -> int:
        return int(self.bits.sum())

    def __getitem__(self, x) -> int:
        return int(self.bits[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.arity == other.arity and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.arity, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(arity={self.arity}, hex={self.to_hex()})"


def _assignment_bits(arity: int, assignment) -> int:
    """Normalize an assignment (integer index or bit sequence) to an index."""
    if isinstance(assignment, (int, np.integer)):
        x = int(assignment)
        if not 0 <= x < (1 << arity):
            raise ArityError(f"assignment {x} out of range for arity {arity}")
        return x
    bits = list(assignment)
    if len(bits) != arity:
        raise ArityError(f"assignment has width {len(bits)}, expected {arity}")
    x = 0
    for j, b in enumerate(bits):
        if b not in (0, 1, True, False):
            raise ValueError(f"assignment entry {b!r} is not a bit")
        x |= int(b) << j
    return x


def evaluate(f: AnfFunction, assignment) -> int:
    """Evaluate ``f`` at an assignment.

    ``assignment`` is either an integer index or a sequence of bits
    ``(x_0, ..., x_{n-1})``. A term contributes 1 exactly when all its
    variables are set.
    """
    x = _assignment_bits(f.arity, assignment)
    out = 0
    for mask in f.terms:
        if x & mask == mask:
            out ^= 1
    return out


def mobius_transform(bits: np.ndarray, arity: int) -> np.ndarray:
    """Binary Moebius (Reed-Muller) butterfly; it is its own inverse."""
    out = np.array(bits, dtype=np.uint8, copy=True)
    for j in range(arity):
        view = out.reshape(-1, 2, 1 << j)
        view[:, 1, :] ^= view[:, 0, :]
    return out


def to_truth_table(f: AnfFunction, method: str = "mobius") -> TruthTable:
    """Materialize ``f``.

    ``method="mobius"`` runs the fast transform on the coefficient vector,
    ``method="naive"`` evaluates every input. Both give the same table.
    """
    _check_cap(f.arity)
    size = 1 << f.arity
    if method == "mobius":
        coeffs = np.zeros(size, dtype=np.uint8)
        coeffs[list(f.terms)] = 1
        return TruthTable(f.arity, mobius_transform(coeffs, f.arity))
    if method == "naive":
        bits = np.fromiter((evaluate(f, x) for x in range(size)), np.uint8, size)
        return TruthTable(f.arity, bits)
    raise ValueError(f"unknown method {method!r}")


def from_truth_table(t: TruthTable) -> AnfFunction:
    coeffs = mobius_transform(t.bits, t.arity)
    return AnfFunction(t.arity, tuple(int(m) for m in np.flatnonzero(coeffs)))


def negate_variable(f: AnfFunction, i: int) -> AnfFunction:
    """Substitute ``x_i := x_i ^ 1`` and re-expand.

    Every term containing ``x_i`` also contributes its ``x_i``-free
    reduction; colliding terms cancel.
    """
    _check_var(f.arity, i)
    bit = 1 << i
    spawned = [m & ~bit for m in f.terms if m & bit]
    return AnfFunction.from_terms(f.arity, list(f.terms) + spawned)


def xor(f: AnfFunction, h: AnfFunction) -> AnfFunction:
    if f.arity != h.arity:
        raise ArityError(f"arity mismatch: {f.arity} vs {h.arity}")
    return AnfFunction(f.arity, tuple(sorted(set(f.terms) ^ set(h.terms))))


def derive_g(f: AnfFunction, i: int) -> AnfFunction:
    """``f ^ f(x with x_i negated)``; identically zero iff ``x_i`` is junta."""
    return xor(f, negate_variable(f, i))


def influence(t: TruthTable, i: int) -> float:
    """Fraction of inputs ``x`` where flipping ``x_i`` changes the output."""
    _check_var(t.arity, i)
    flipped = flip_variable_bits(t.bits, t.arity, i)
    return float(np.count_nonzero(t.bits != flipped)) / t.size


def is_junta_ground_truth(t: TruthTable, i: int) -> bool:
    """Brute force: True iff ``f(x) == f(x ^ e_i)`` for every input."""
    return influence(t, i) == 0.0


def flip_variable_bits(bits: np.ndarray, arity: int, i: int) -> np.ndarray:
    """Return ``bits`` permuted so entry ``x`` holds ``bits[x ^ (1 << i)]``."""
    view = np.asarray(bits).reshape(-1, 2, 1 << i)
    return view[:, ::-1, :].reshape(-1)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def format_term(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"x{j}" for j in range(mask.bit_length()) if mask >> j & 1)


def format_anf(f: AnfFunction) -> str:
    """Render ``f`` in the spec grammar, lowest-degree terms first."""
    if not f.terms:
        return "0"
    order = sorted(f.terms, key=lambda m: (bin(m).count("1"), m))
    return " ^ ".join(format_term(m) for m in order)


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|(\^)|(\*)|([01])(?!\d)|(\S))")


def parse_anf(text: str, arity: int | None = None) -> AnfFunction:
    """Parse ``"x0x1 ^ x2 ^ 1"``-style specs.

    Terms are joined by ``^``; a term is ``1``, ``0`` or a product of
    factors (``x<k>``, ``1`` or ``0``) written by juxtaposition or ``*``.
    Repeated factors are idempotent (``x0x0 == x0``). ``arity`` defaults to one more than the
    largest variable index mentioned.
    """
    terms: list[int] = []
    current: int | None = None
    zero_term = False
    expect_factor = True
    highest = -1
    pos = 0
    text_len = len(text.rstrip())
    while pos < text_len:
        match = _TOKEN.match(text, pos)
        if match is None:  # pragma: no cover - the catch-all group always matches
            raise ParseError("unexpected input", text, pos + 1)
        column = match.start(match.lastindex) + 1
        var, idx, caret, star, const, junk = match.groups()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r}", text, column)
        if var is not None:
            k = int(idx)
            highest = max(highest, k)
            current = (current or 0) | (1 << k)
            expect_factor = False
        elif const is not None:
            if const == "0":
                zero_term = True
            current = current or 0
            expect_factor = False
        elif star is not None:
            if expect_factor:
                raise ParseError("'*' must follow a factor", text, column)
            expect_factor = True
        elif caret is not None:
            if current is None or expect_factor:
                raise ParseError("empty term before '^'", text, column)
            if not zero_term:
                terms.append(current)
            current, zero_term, expect_factor = None, False, True
        pos = match.end()
    if current is None or expect_factor:
        raise ParseError("expression ends without a term", text, max(text_len, 1))
    if not zero_term:
        terms.append(current)

    if arity is None:
        arity = max(highest + 1, 1)
    elif highest >= arity:
        raise ArityError(f"x{highest} does not exist for arity {arity}")
    return AnfFunction.from_terms(arity, terms)


def parse_table_spec(spec: str | Sequence[str]) -> TruthTable:
    """Parse ``"n=3 0x96"`` into a truth table (bit ``x`` of the hex = f(x))."""
    parts = spec.split() if isinstance(spec, str) else list(spec)
    if len(parts) != 2 or not parts[0].startswith("n="):
        raise ParseError("expected 'n=<arity> <hex>'", " ".join(parts), 1)
    try:
        arity = int(parts[0][2:])
    except ValueError:
        raise ParseError("arity is not an integer", " ".join(parts), 3) from None
    _check_cap(arity)
    try:
        value = int(parts[1], 16)
    except ValueError:
        raise ParseError(
            "table is not hexadecimal", " ".join(parts), len(parts[0]) + 2
        ) from None
    return TruthTable.from_int(arity, value)
