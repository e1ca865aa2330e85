"""Linear algebra over the two-element field.

Rows are bit-packed into Python integers (bit j = column j), so row
addition is XOR and elimination works on whole rows at once.  All
operations are pure: inputs are never mutated, and pivoting is
deterministic (lowest usable row, columns scanned left to right).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BitVector",
    "BitMatrix",
    "rank",
    "solve",
    "nullspace_basis",
    "in_rowspace",
    "rref_masks",
    "reduce_mask",
]


@dataclass(frozen=True)
class BitVector:
    """Vector over GF(2); coordinate j is bit j of ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set outside declared length")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_support(cls, indices: Iterable[int], length: int) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(f"index {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2) stored as one integer mask per row."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.row_bits) != self.rows:
            raise ValueError("row count does not match row data")
        for m in self.row_bits:
            if m < 0 or m >> self.cols:
                raise ValueError("row bits set outside declared width")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        masks = []
        width = None
        for row in rows:
            vec = BitVector.from_bits(row)
            if width is None:
                width = vec.length
            elif vec.length != width:
                raise ValueError("ragged rows")
            masks.append(vec.bits)
        if width is None:
            width = 0
        return cls(len(masks), width, tuple(masks))

    @classmethod
    def from_bitrows(cls, masks: Sequence[int], cols: int) -> "BitMatrix":
        return cls(len(masks), cols, tuple(masks))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_bits[i])

    def transpose(self) -> "BitMatrix":
        out = []
        for j in range(self.cols):
            mask = 0
            for i in range(self.rows):
                if (self.row_bits[i] >> j) & 1:
                    mask |= 1 << i
            out.append(mask)
        return BitMatrix(self.cols, self.rows, tuple(out))

    def mul_vector(self, v: BitVector) -> BitVector:
        if v.length != self.cols:
            raise ValueError("dimension mismatch")
        bits = 0
        for i, m in enumerate(self.row_bits):
            if (m & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.rows, bits)

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.rows))


def rref_masks(masks: Sequence[int], cols: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row echelon form of integer row masks.

    Returns (pivot_columns, nonzero_reduced_rows); row i of the result has
    its pivot at pivot_columns[i] and zeros in every other pivot column.
    """
    work = list(masks)
    pivots = []
    top = 0
    for col in range(cols):
        sel = None
        for k in range(top, len(work)):
            if (work[k] >> col) & 1:
                sel = k
                break
        if sel is None:
            continue
        work[top], work[sel] = work[sel], work[top]
        for k in range(len(work)):
            if k != top and (work[k] >> col) & 1:
                work[k] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return tuple(pivots), tuple(work[:top])


def reduce_mask(mask: int, pivots: Sequence[int], rows: Sequence[int]) -> int:
    """Reduce a row mask against an RREF basis; the result has no pivot bits."""
    for p, row in zip(pivots, rows):
        if (mask >> p) & 1:
            mask ^= row
    return mask


def rank(m: BitMatrix) -> int:
    """Rank of a matrix over GF(2)."""
    pivots, _ = rref_masks(m.row_bits, m.cols)
    return len(pivots)


def solve(a: BitMatrix, b: BitVector) -> BitVector | None:
    """One solution x of a x = b, or None when the system is inconsistent.

    Free variables are set to zero, so the returned solution is the pivot
    solution and is deterministic.
    """
    if b.length != a.rows:
        raise ValueError(f"dimension mismatch: {a.rows} equations, rhs of length {b.length}")
    aug_bit = 1 << a.cols
    work = [a.row_bits[i] | (aug_bit if (b.bits >> i) & 1 else 0) for i in range(a.rows)]
    pivots, reduced = rref_masks(work, a.cols)
    x = 0
    for p, row in zip(pivots, reduced):
        if row & aug_bit:
            x |= 1 << p
    # rref_masks keeps only pivot rows, so detect "0 = 1" rows by checking
    # the candidate against the original system.
    for i in range(a.rows):
        if ((a.row_bits[i] & x).bit_count() & 1) != ((b.bits >> i) & 1):
            return None
    return BitVector(a.cols, x)


def nullspace_basis(a: BitMatrix) -> list[BitVector]:
    """Deterministic basis of {x : a x = 0}, one vector per free column."""
    pivots, reduced = rref_masks(a.row_bits, a.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for p, row in zip(pivots, reduced):
            if (row >> free) & 1:
                bits |= 1 << p
        basis.append(BitVector(a.cols, bits))
    return basis


def in_rowspace(m: BitMatrix, v: BitVector) -> BitVector | None:
    """Coefficient vector over the rows of m expressing v, or None.

    The coefficients c satisfy sum(c_i * row_i) = v; equivalently this
    solves transpose(m) c = v.
    """
    if v.length != m.cols:
        raise ValueError(f"dimension mismatch: {m.cols} columns, vector of length {v.length}")
    return solve(m.transpose(), v)
