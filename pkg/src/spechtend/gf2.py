"""Bit-packed linear algebra over GF(2).

Rows are Python integers: bit j of a row int is the entry in column j.
Python's arbitrary-precision ints give word-packed XOR for free, so the
same code is exact at every size.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidParameter


@dataclass(frozen=True)
class Gf2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise InvalidParameter("vector bits exceed stated length")

    def get(self, j: int) -> int:
        return (self.bits >> j) & 1

    def to_list(self) -> List[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def support(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.length) if (self.bits >> j) & 1)


class Gf2Matrix:
    """Immutable dense GF(2) matrix stored as one int per row."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        for r in rows:
            if r < 0 or r >> ncols:
                raise InvalidParameter("row bits exceed column count")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            acc = 0
            for j, v in enumerate(row):
                if v & 1:
                    acc |= 1 << j
            rows.append(acc)
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[int], nrows: int) -> "Gf2Matrix":
        rows = [0] * nrows
        for j, c in enumerate(cols):
            while c:
                low = c & -c
                i = low.bit_length() - 1
                rows[i] |= 1 << j
                c ^= low
        return cls(rows, len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Gf2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls([1 << i for i in range(n)], n)

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        acc = 0
        mask = 1 << j
        for i, r in enumerate(self.rows):
            if r & mask:
                acc |= 1 << i
        return acc

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_columns(list(self.rows), self.ncols)

    def stack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.ncols != other.ncols:
            raise InvalidParameter("column count mismatch in stack")
        return Gf2Matrix(self.rows + other.rows, self.ncols)

    def apply(self, v: int) -> int:
        """Matrix times column vector (vector given as a bit int)."""
        acc = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                acc |= 1 << i
        return acc

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def to_dense(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def dumps(self) -> str:
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Gf2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.nrows}x{self.ncols})"


def mat_mul(A: Gf2Matrix, B: Gf2Matrix) -> Gf2Matrix:
    if A.ncols != B.nrows:
        raise InvalidParameter(f"cannot multiply {A!r} by {B!r}")
    out = []
    brows = B.rows
    for a in A.rows:
        acc = 0
        while a:
            low = a & -a
            acc ^= brows[low.bit_length() - 1]
            a ^= low
        out.append(acc)
    return Gf2Matrix(out, B.ncols)


def mat_add(A: Gf2Matrix, B: Gf2Matrix) -> Gf2Matrix:
    if A.ncols != B.ncols or A.nrows != B.nrows:
        raise InvalidParameter("shape mismatch in mat_add")
    return Gf2Matrix([x ^ y for x, y in zip(A.rows, B.rows)], A.ncols)


class Echelon:
    """Incremental row-echelon accumulator (pivot = lowest set bit)."""

    def __init__(self):
        self.pivots: Dict[int, int] = {}

    def reduce(self, row: int) -> int:
        """Reduce a row against the current pivots; 0 means dependent."""
        piv = self.pivots
        while row:
            c = (row & -row).bit_length() - 1
            p = piv.get(c)
            if p is None:
                break
            row ^= p
        return row

    def insert(self, row: int) -> bool:
        """Add a row; returns True if it increased the rank."""
        row = self.reduce(row)
        if row:
            self.pivots[(row & -row).bit_length() - 1] = row
            return True
        return False

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, ncols: int) -> List[int]:
        """Canonical kernel basis, one vector per free column, ascending."""
        piv = self.pivots
        free = [c for c in range(ncols) if c not in piv]
        pivot_cols = sorted(piv, reverse=True)
        basis = []
        for f in free:
            x = 1 << f
            for p in pivot_cols:
                if p > f:
                    continue
                # x_p is forced by the pivot equation on already-set bits
                if (piv[p] & x).bit_count() & 1:
                    x |= 1 << p
            basis.append(x)
        return basis


class TaggedEchelon:
    """Echelon that tracks the combination of inserted vectors per pivot."""

    def __init__(self):
        self.pivots: Dict[int, Tuple[int, int]] = {}

    def insert(self, row: int, tag: int) -> Optional[int]:
        """Insert; returns the dependency tag if row was dependent, else None."""
        piv = self.pivots
        while row:
            c = (row & -row).bit_length() - 1
            hit = piv.get(c)
            if hit is None:
                piv[c] = (row, tag)
                return None
            row ^= hit[0]
            tag ^= hit[1]
        return tag

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class RrefResult:
    matrix: Gf2Matrix
    pivots: Tuple[int, ...]
    rank: int


def rref(M: Gf2Matrix) -> RrefResult:
    """Reduced row-echelon form; pivot columns are 0-based and increasing."""
    ech = Echelon()
    for r in M.rows:
        ech.insert(r)
    piv = ech.pivots
    # clear pivot columns from the other pivot rows, lowest pivot last
    for p in sorted(piv, reverse=True):
        row = piv[p]
        scan = row & ~((1 << (p + 1)) - 1)
        while scan:
            c = (scan & -scan).bit_length() - 1
            other = piv.get(c)
            if other is not None and c != p:
                row ^= other
                scan = row & ~((1 << (c + 1)) - 1)
            else:
                scan ^= scan & -scan
        piv[p] = row
    cols = sorted(piv)
    rows = [piv[c] for c in cols]
    rows += [0] * (M.nrows - len(rows))
    return RrefResult(Gf2Matrix(rows, M.ncols), tuple(cols), len(cols))


def nullspace_basis(M: Gf2Matrix) -> List[Gf2Vector]:
    """Canonical basis of {v : M v = 0}."""
    ech = Echelon()
    for r in M.rows:
        ech.insert(r)
    return [Gf2Vector(x, M.ncols) for x in ech.nullspace(M.ncols)]
