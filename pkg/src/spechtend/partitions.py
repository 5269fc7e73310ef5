"""Compositions, partitions, margin-constrained integer matrices and their moves.

Row/column indices in the public functions here are 1-based, matching the
conventions used for serialized matrices.  Sequence access on Composition and
TabMatrix is plain 0-based Python indexing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from .errors import CapExceeded, DegreeMismatch, InvalidParameter


class Composition:
    """A finite tuple of nonnegative integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise InvalidParameter(f"negative part in composition: {parts}")
        self._parts = parts

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def degree(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Index of the last nonzero part (1-based), 0 for the zero tuple."""
        for i in range(len(self._parts) - 1, -1, -1):
            if self._parts[i] != 0:
                return i + 1
        return 0

    @property
    def width(self) -> int:
        return len(self._parts)

    def trimmed(self) -> "Composition":
        """Drop trailing zero parts."""
        return Composition(self._parts[: self.length])

    def shifted(self, i: int, j: int, k: int) -> "Composition":
        """Add k to part i and subtract k from part j (1-based indices)."""
        if not (1 <= i <= self.width and 1 <= j <= self.width):
            raise InvalidParameter(f"shift indices ({i},{j}) out of range for {self}")
        new = list(self._parts)
        new[i - 1] += k
        new[j - 1] -= k
        if new[j - 1] < 0:
            raise InvalidParameter(f"shift by {k} makes part {j} of {self} negative")
        return Composition(new)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self._parts}"


class Partition(Composition):
    """A weakly decreasing composition with no internal zeros."""

    def __init__(self, parts: Iterable[int]):
        super().__init__(parts)
        p = self._parts
        # trailing zeros are tolerated on input but stripped
        n = self.length
        for i in range(n, len(p)):
            if p[i] != 0:
                raise InvalidParameter(f"not weakly decreasing: {p}")
        p = p[:n]
        for i in range(len(p) - 1):
            if p[i] < p[i + 1]:
                raise InvalidParameter(f"not weakly decreasing: {p}")
        self._parts = p


def transpose(p: Partition) -> Partition:
    """Conjugate partition: result[j] = #{i : p[i] >= j+1}."""
    if not isinstance(p, Partition):
        p = Partition(p)
    if p.length == 0:
        return Partition(())
    top = p[0]
    return Partition(tuple(sum(1 for q in p if q >= j) for j in range(1, top + 1)))


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parse a comma-separated integer string like '3,1,1,1'."""
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InvalidParameter(f"malformed parts string: {text!r}") from exc


class TabMatrix:
    """A nonnegative integer matrix with recorded row and column margins."""

    __slots__ = ("entries", "row_margins", "col_margins")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise InvalidParameter("ragged matrix")
                for v in row:
                    if v < 0:
                        raise InvalidParameter(f"negative entry in {rows}")
        self.entries = rows
        self.row_margins = Composition(sum(row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        self.col_margins = Composition(
            sum(row[j] for row in rows) for j in range(ncols)
        )

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, i: int) -> Tuple[int, ...]:
        return self.entries[i]

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        return self.entries[i - 1][j - 1]

    def transpose(self) -> "TabMatrix":
        return TabMatrix(zip(*self.entries)) if self.entries else TabMatrix(())

    def add_units(self, deltas: Iterable[Tuple[int, int, int]]) -> "TabMatrix":
        """Apply unit deltas (i, j, +-c) at 1-based positions."""
        new = [list(row) for row in self.entries]
        for i, j, c in deltas:
            new[i - 1][j - 1] += c
            if new[i - 1][j - 1] < 0:
                raise InvalidParameter(
                    f"delta at ({i},{j}) makes entry negative in {self.entries}"
                )
        return TabMatrix(new)

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, TabMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"TabMatrix({[list(r) for r in self.entries]})"


def enumerate_tables(
    alpha: Composition,
    beta: Composition,
    max_tables: Optional[int] = None,
) -> List[TabMatrix]:
    """All matrices with row sums alpha and column sums beta.

    Output is in ascending lexicographic order of the row-major entry
    sequence; this is the canonical column order for relation systems.
    """
    if alpha.degree != beta.degree:
        raise DegreeMismatch(f"deg{alpha.parts} != deg{beta.parts}")
    nr, nc = alpha.width, beta.width
    out: List[TabMatrix] = []
    rows: List[Tuple[int, ...]] = []
    col_rem = list(beta.parts)

    def fill_row(i: int) -> None:
        if i == nr:
            if all(c == 0 for c in col_rem):
                out.append(TabMatrix(rows))
                if max_tables is not None and len(out) > max_tables:
                    raise CapExceeded(
                        f"more than {max_tables} tables for {alpha.parts}/{beta.parts}"
                    )
            return
        target = alpha[i]
        # remaining rows must be able to absorb what this row leaves behind
        row = [0] * nc

        def place(j: int, left: int) -> None:
            if j == nc - 1:
                if left <= col_rem[j]:
                    row[j] = left
                    col_rem[j] -= left
                    rows.append(tuple(row))
                    fill_row(i + 1)
                    rows.pop()
                    col_rem[j] += left
                    row[j] = 0
                return
            hi = min(left, col_rem[j])
            for v in range(hi + 1):
                row[j] = v
                col_rem[j] -= v
                place(j + 1, left - v)
                col_rem[j] += v
            row[j] = 0

        if nc == 0:
            if target == 0:
                rows.append(())
                fill_row(i + 1)
                rows.pop()
            return
        place(0, target)

    fill_row(0)
    return out


def unit_exchange(A: TabMatrix, axis: str, i: int, j: int, k: int, l: int) -> TabMatrix:
    """Four-cell margin-preserving move at 1-based indices.

    axis='row': A + E_ik - E_il - E_jk + E_jl (needs A[i][l] >= 1, A[j][k] >= 1).
    axis='col': A + E_ki - E_li - E_kj + E_lj (needs A[k][j] >= 1, A[l][i] >= 1).
    """
    if axis == "row":
        return A.add_units([(i, k, 1), (i, l, -1), (j, k, -1), (j, l, 1)])
    if axis == "col":
        return A.add_units([(k, i, 1), (l, i, -1), (k, j, -1), (l, j, 1)])
    raise InvalidParameter(f"axis must be 'row' or 'col', got {axis!r}")


def row_order_key(A: TabMatrix):
    """Rows read bottom to top, each left to right."""
    return tuple(A.entries[::-1])


def col_order_key(A: TabMatrix):
    """Columns read right to left, each top to bottom."""
    cols = tuple(zip(*A.entries)) if A.entries else ()
    return cols[::-1]


def order_compare(A: TabMatrix, B: TabMatrix, mode: str) -> int:
    """-1, 0 or 1 comparing A to B in the named total order."""
    if A.nrows != B.nrows or A.ncols != B.ncols:
        raise InvalidParameter("shape mismatch in order_compare")
    if mode == "row":
        ka, kb = row_order_key(A), row_order_key(B)
    elif mode == "col":
        ka, kb = col_order_key(A), col_order_key(B)
    else:
        raise InvalidParameter(f"mode must be 'row' or 'col', got {mode!r}")
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class StaircaseFamily:
    a: int
    m: int
    b: int
    a_prime: int
    b_prime: int
    lam: Partition
    lam_t: Partition
    alpha: Composition
    beta: Composition
    r: int

    @property
    def parity_ok(self) -> bool:
        """The condition a - m == b (mod 2)."""
        return (self.a - self.m - self.b) % 2 == 0

    def swapped(self) -> "StaircaseFamily":
        """The transpose family (a', m, b')."""
        return staircase_family(self.a_prime, self.m, self.b_prime)


def staircase_family(a: int, m: int, b: int) -> StaircaseFamily:
    """The staircase-hook family lam = (a, m-1, ..., 2, 1^b)."""
    if not (a >= m >= 2 and b >= 1):
        raise InvalidParameter(f"need a >= m >= 2 and b >= 1, got ({a},{m},{b})")
    a_p = b + m - 1
    b_p = a - m + 1
    stair = tuple(range(m - 1, 1, -1))
    lam = Partition((a,) + stair + (1,) * b)
    lam_t = transpose(lam)
    assert lam_t.parts == (a_p,) + stair + (1,) * b_p
    alpha = Composition((a_p,) + stair + (b_p,))
    beta = Composition((a,) + stair + (b,))
    fam = StaircaseFamily(a, m, b, a_p, b_p, lam, lam_t, alpha, beta, lam.degree)
    assert fam.alpha.degree == fam.beta.degree == fam.r
    return fam


def staircase_families(max_r: int):
    """All staircase families with degree <= max_r, ordered by (r, a, m, b)."""
    fams = []
    m = 2
    while True:
        base = m * (m - 1) // 2 - 1  # degree of the staircase part (m-1, ..., 2)
        if m + base + 1 > max_r:
            break
        for a in range(m, max_r + 1):
            for b in range(1, max_r + 1):
                if a + base + b <= max_r:
                    fams.append(staircase_family(a, m, b))
        m += 1
    fams.sort(key=lambda f: (f.r, f.a, f.m, f.b))
    return fams
