"""GF(2) relation systems on Tab-indexed coefficient vectors.

The unknowns are coefficients h[A], one per A in Tab(alpha, beta); a
homomorphism sum(h[A] rho[A]) is annihilated by the boundary maps exactly
when the R and C rows built here vanish.  Rows are sets of tables with odd
coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import CapExceeded, InvalidParameter
from .gf2 import Echelon
from .limits import DEFAULT_MAX_TABLES
from .partitions import (
    Composition,
    Partition,
    TabMatrix,
    enumerate_tables,
    transpose,
    unit_exchange,
)

Row = FrozenSet[TabMatrix]


def build_R_rows(
    alpha: Composition, beta: Composition, i: int, j: int
) -> List[Tuple[Row, str]]:
    """Rows forcing h . phi-bar^(i,j,1) = 0, one per B in Tab(alpha^(i,j,1), beta).

    The row for B is {B - E_il + E_jl : b_il odd}; the same set equals the
    per-(A,k) corollary relations without multiplicity.
    """
    if not (1 <= i < j <= alpha.width):
        raise InvalidParameter(f"bad (i,j)=({i},{j}) for width {alpha.width}")
    if alpha[j - 1] == 0:
        return []
    shifted = alpha.shifted(i, j, 1)
    out: List[Tuple[Row, str]] = []
    for B in enumerate_tables(shifted, beta):
        targets = frozenset(
            B.add_units([(i, l, -1), (j, l, 1)])
            for l in range(1, beta.width + 1)
            if B.entry(i, l) % 2 == 1
        )
        if targets:
            out.append((targets, f"R({i},{j}) B={B.to_lists()}"))
    return out


def build_C_rows(
    alpha: Composition, beta: Composition, i: int, j: int
) -> List[Tuple[Row, str]]:
    """Rows forcing psi-bar^(i,j,1) . h = 0, one per D in Tab(alpha, beta^(i,j,1)).

    The row for D is {D - E_ki + E_kj : d_ki odd}.
    """
    if not (1 <= i < j <= beta.width):
        raise InvalidParameter(f"bad (i,j)=({i},{j}) for width {beta.width}")
    if beta[j - 1] == 0:
        return []
    shifted = beta.shifted(i, j, 1)
    out: List[Tuple[Row, str]] = []
    for D in enumerate_tables(alpha, shifted):
        targets = frozenset(
            D.add_units([(k, i, -1), (k, j, 1)])
            for k in range(1, alpha.width + 1)
            if D.entry(k, i) % 2 == 1
        )
        if targets:
            out.append((targets, f"C({i},{j}) D={D.to_lists()}"))
    return out


def corollary_R_rows(
    tables: Sequence[TabMatrix], i: int, j: int
) -> Set[Row]:
    """The per-(A,k) form of the R relations, for cross-checking.

    For a_jk != 0: (a_ik+1) h[A] = sum over l != k of a_il h[A'] where A' is
    the row exchange moving a unit from columns l to k between rows i and j.
    """
    rows: Set[Row] = set()
    for A in tables:
        for k in range(1, A.ncols + 1):
            if A.entry(j, k) == 0:
                continue
            acc: Set[TabMatrix] = set()
            if (A.entry(i, k) + 1) % 2 == 1:
                acc.add(A)
            for l in range(1, A.ncols + 1):
                if l == k or A.entry(i, l) % 2 == 0:
                    continue
                acc.symmetric_difference_update({unit_exchange(A, "row", i, j, k, l)})
            if acc:
                rows.add(frozenset(acc))
    return rows


def corollary_C_rows(
    tables: Sequence[TabMatrix], i: int, j: int
) -> Set[Row]:
    """The per-(A,k) form of the C relations, for cross-checking."""
    rows: Set[Row] = set()
    for A in tables:
        for k in range(1, A.nrows + 1):
            if A.entry(k, j) == 0:
                continue
            acc: Set[TabMatrix] = set()
            if (A.entry(k, i) + 1) % 2 == 1:
                acc.add(A)
            for l in range(1, A.nrows + 1):
                if l == k or A.entry(l, i) % 2 == 0:
                    continue
                acc.symmetric_difference_update({unit_exchange(A, "col", i, j, k, l)})
            if acc:
                rows.add(frozenset(acc))
    return rows


@dataclass
class RelationSystem:
    alpha: Composition
    beta: Composition
    tables: List[TabMatrix]
    index: Dict[TabMatrix, int]
    rows: List[FrozenSet[int]]
    provenance: List[str]

    def row_ints(self) -> List[int]:
        out = []
        for row in self.rows:
            acc = 0
            for c in row:
                acc |= 1 << c
            out.append(acc)
        return out

    def to_index_row(self, row: Row) -> FrozenSet[int]:
        return frozenset(self.index[A] for A in row)


def relation_system(
    alpha: Composition,
    beta: Composition,
    max_tables: int = DEFAULT_MAX_TABLES,
) -> RelationSystem:
    """All R and C rows over Tab(alpha, beta) for every admissible i < j."""
    tables = enumerate_tables(alpha, beta, max_tables=max_tables)
    index = {A: c for c, A in enumerate(tables)}
    seen: Dict[FrozenSet[int], str] = {}
    for i in range(1, alpha.width + 1):
        for j in range(i + 1, alpha.width + 1):
            for row, prov in build_R_rows(alpha, beta, i, j):
                key = frozenset(index[A] for A in row)
                seen.setdefault(key, prov)
    for i in range(1, beta.width + 1):
        for j in range(i + 1, beta.width + 1):
            for row, prov in build_C_rows(alpha, beta, i, j):
                key = frozenset(index[A] for A in row)
                seen.setdefault(key, prov)
    rows = sorted(seen, key=lambda s: sorted(s))
    return RelationSystem(
        alpha, beta, tables, index, rows, [seen[r] for r in rows]
    )


def relevance_system(
    lam: Partition, max_tables: int = DEFAULT_MAX_TABLES
) -> RelationSystem:
    """The system whose nullspace is the relevant space for M(lam') -> M(lam)."""
    lam_t = transpose(lam)
    return relation_system(
        Composition(lam_t.parts), Composition(lam.parts), max_tables
    )


@dataclass
class RelevanceResult:
    dim: int
    basis: List[int]
    support: Set[TabMatrix]
    tables: List[TabMatrix]


def solve_relevance(sys: RelationSystem) -> RelevanceResult:
    """Nullspace of the system: dimension, canonical basis, support set."""
    ech = Echelon()
    for r in sys.row_ints():
        ech.insert(r)
    n = len(sys.tables)
    basis = ech.nullspace(n)
    support: Set[TabMatrix] = set()
    for v in basis:
        for c in range(n):
            if (v >> c) & 1:
                support.add(sys.tables[c])
    return RelevanceResult(len(basis), basis, support, sys.tables)


def z_coefficient(A: TabMatrix, j: int, k: int) -> int:
    """z_jk(A) = sum_{i<j} a_ik + sum_{l<k} a_jl + j + k mod 2."""
    if not (1 <= j <= A.nrows and 1 <= k <= A.ncols):
        raise InvalidParameter(f"(j,k)=({j},{k}) out of range")
    s = sum(A.entry(i, k) for i in range(1, j)) + sum(
        A.entry(j, l) for l in range(1, k)
    )
    return (s + j + k) % 2


def z_coefficient_complement(A: TabMatrix, j: int, k: int) -> int:
    """Equivalent form using the complementary sums and the margins."""
    s = sum(A.entry(i, k) for i in range(j + 1, A.nrows + 1)) + sum(
        A.entry(j, l) for l in range(k + 1, A.ncols + 1)
    )
    return (s + A.row_margins[j - 1] + A.col_margins[k - 1] + j + k) % 2


def build_Z_row(A: TabMatrix, j: int, k: int) -> Row:
    """The critical relation at (j, k), as a set of odd-coefficient tables.

    z_jk(A) h[A] = sum_{i<j, l>k} a_il h[exch] + sum_{i>j, l<k} a_il h[exch];
    needs a_jk != 0.  Every referenced table precedes A in both orders.
    """
    if A.entry(j, k) == 0:
        raise InvalidParameter(f"a_({j},{k}) must be nonzero")
    acc: Set[TabMatrix] = set()
    if z_coefficient(A, j, k) == 1:
        acc.add(A)
    for i in range(1, A.nrows + 1):
        for l in range(1, A.ncols + 1):
            if (i < j and l > k) or (i > j and l < k):
                if A.entry(i, l) % 2 == 1:
                    acc.symmetric_difference_update(
                        {unit_exchange(A, "row", min(i, j), max(i, j),
                                       k if i < j else l,
                                       l if i < j else k)}
                    )
    return frozenset(acc)


def transpose_hom(
    x: int, tables: Sequence[TabMatrix], tables_t: Sequence[TabMatrix]
) -> int:
    """Push a coefficient vector through entrywise transposition of tables."""
    index_t = {A: c for c, A in enumerate(tables_t)}
    out = 0
    for c, A in enumerate(tables):
        if (x >> c) & 1:
            out |= 1 << index_t[A.transpose()]
    return out
