"""Flattening reduction for staircase-hook partitions and the theorem checks.

For lam = (a, m-1, ..., 2, 1^b) the relevant space of M(lam') -> M(lam) is
isomorphic to the nullspace of a relation system on the m x m tables with
margins alpha = (a', m-1, ..., 2, b') and beta = (a, m-1, ..., 2, b).  This
module builds that flat system, expands flat tables back to full ones, runs
the structural classifiers on flat tables, and verifies the parity theorem.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import CapExceeded, InvalidParameter, ParityError, VerificationError
from .gf2 import Gf2Matrix
from .limits import DEFAULT_MAX_BITS, DEFAULT_MAX_TABLES
from .partitions import (
    Composition,
    StaircaseFamily,
    TabMatrix,
    enumerate_tables,
    staircase_family,
)
from .relations import RelationSystem, RelevanceResult, relation_system, solve_relevance
from .tabloids import rho_matrix, tabloid_dim


def _distribute_rows(head: Sequence[Tuple[int, ...]], tail_counts: Sequence[int],
                     nrows: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """All ways to append `nrows` unit rows whose column sums are tail_counts."""
    ncols = len(tail_counts)
    slots = []
    for j, c in enumerate(tail_counts):
        slots.extend([j] * c)
    assert len(slots) == nrows
    out = []
    for arrangement in sorted(set(itertools.permutations(slots))):
        rows = list(head)
        for j in arrangement:
            unit = [0] * ncols
            unit[j] = 1
            rows.append(tuple(unit))
        out.append(tuple(rows))
    return out


def pi_expand(B: TabMatrix, family: StaircaseFamily) -> List[TabMatrix]:
    """Expansion classes realizing rho[B] . pi_alpha = sum of rho[A].

    B has row margins alpha; the results agree with B on the first m-1 rows
    and distribute row m into b' unit rows.
    """
    m = family.m
    if B.row_margins != family.alpha:
        raise InvalidParameter(
            f"row margins {B.row_margins.parts} != alpha {family.alpha.parts}"
        )
    head = B.entries[: m - 1]
    mats = [
        TabMatrix(rows)
        for rows in _distribute_rows(head, B.entries[m - 1], family.b_prime)
    ]
    return sorted(mats, key=lambda A: A.entries)


def iota_expand(B: TabMatrix, family: StaircaseFamily) -> List[TabMatrix]:
    """Expansion classes realizing iota_beta . rho[B] = sum of rho[A].

    B has column margins beta; the results agree with B on the first m-1
    columns and distribute column m into b unit columns.
    """
    m = family.m
    if B.col_margins != family.beta:
        raise InvalidParameter(
            f"col margins {B.col_margins.parts} != beta {family.beta.parts}"
        )
    cols = list(zip(*B.entries))
    head = cols[: m - 1]
    mats = [
        TabMatrix(zip(*cols_out))
        for cols_out in _distribute_rows(head, cols[m - 1], family.b)
    ]
    return sorted(mats, key=lambda A: A.entries)


def omega_expand(B: TabMatrix, family: StaircaseFamily) -> List[TabMatrix]:
    """The composite class Omega(B): both expansions applied to a flat table."""
    out: Set[TabMatrix] = set()
    for A1 in pi_expand(B, family):
        out.update(iota_expand(A1, family))
    return sorted(out, key=lambda A: A.entries)


def pi_matrix(family: StaircaseFamily, max_bits: int = DEFAULT_MAX_BITS) -> Gf2Matrix:
    """pi_alpha : M(lam') -> M(alpha), merging the last b' blocks into block m."""
    m = family.m
    n = family.lam_t.length
    entries = [[0] * m for _ in range(n)]
    for u in range(m - 1):
        entries[u][u] = family.alpha[u]
    for u in range(m - 1, n):
        entries[u][m - 1] = 1
    return rho_matrix(TabMatrix(entries), max_bits)


def iota_matrix(family: StaircaseFamily, max_bits: int = DEFAULT_MAX_BITS) -> Gf2Matrix:
    """iota_beta : M(beta) -> M(lam), splitting block m into b singleton blocks."""
    m = family.m
    n = family.lam.length
    entries = [[0] * n for _ in range(m)]
    for u in range(m - 1):
        entries[u][u] = family.beta[u]
    for v in range(m - 1, n):
        entries[m - 1][v] = 1
    return rho_matrix(TabMatrix(entries), max_bits)


def flat_tables(
    family: StaircaseFamily, max_tables: int = DEFAULT_MAX_TABLES
) -> List[TabMatrix]:
    return enumerate_tables(family.alpha, family.beta, max_tables=max_tables)


def flat_relevance_system(
    family: StaircaseFamily, max_tables: int = DEFAULT_MAX_TABLES
) -> RelationSystem:
    """The R/C system on m x m tables; nullspace dim = dim of the relevant space."""
    return relation_system(family.alpha, family.beta, max_tables)


def omega_lift(
    x: int,
    flat_sys: RelationSystem,
    family: StaircaseFamily,
    full_tables: Sequence[TabMatrix],
) -> int:
    """Lift a flat solution to the full table index set via Omega classes."""
    index = {A: c for c, A in enumerate(full_tables)}
    out = 0
    for c, B in enumerate(flat_sys.tables):
        if (x >> c) & 1:
            for A in omega_expand(B, family):
                out |= 1 << index[A]
    return out


def tau(i: int, m: int) -> int:
    """Reversed row index tau(i) = m - (i - 1)."""
    return m - (i - 1)


@dataclass(frozen=True)
class StructureReport:
    in_TR: bool
    in_TC: bool
    tr_level: Optional[int]
    tc_level: Optional[int]
    k_A: Optional[int]
    j_A: Optional[int]
    w_seq: Optional[Dict[int, Tuple[int, ...]]]


def _in_TR(A: TabMatrix, m: int) -> bool:
    if any(A.entry(i, 1) != 1 for i in range(1, m)):
        return False
    return all(A.entry(m, k) == 0 for k in range(2, m + 1))


def _tr_level(A: TabMatrix, m: int) -> Optional[int]:
    """Largest i (1 < i < m) such that for all 1 < j <= i the row tau(j)
    contains exactly j odd entries; None if not even in TR_2."""
    if not _in_TR(A, m):
        return None
    level = None
    for i in range(2, m):
        row = A.entries[tau(i, m) - 1]
        if sum(1 for v in row if v % 2 == 1) != i:
            break
        level = i
    return level


def _classify_half(A: TabMatrix, m: int) -> Tuple[Optional[int], Optional[int], Optional[int], Optional[Dict[int, Tuple[int, ...]]]]:
    """tr_level, k_A, j_A and the w sequences for the row-side structure."""
    level = _tr_level(A, m)
    if level is None:
        return None, None, None, None
    i = level
    K = set()
    for k in range(2, i + 1):
        if all(A.entry(u, k) == 1 for u in range(tau(i, m), tau(k, m) + 1)):
            K.add(k)
    k_A = min(k for k in range(2, i + 2) if k not in K)
    j_A = None
    w_seq = None
    if k_A <= i:
        cands = [jj for jj in range(k_A, i + 1) if A.entry(tau(jj, m), k_A) == 0]
        j_A = min(cands) if cands else None
        w_seq = {}
        for jj in range(k_A, i + 1):
            w = tuple(
                sorted(
                    (l for l in range(k_A, m + 1) if A.entry(tau(jj, m), l) == 1),
                    reverse=True,
                )
            )
            w_seq[jj] = w
    return level, k_A, j_A, w_seq


def classify_structure(A: TabMatrix) -> StructureReport:
    """Structural membership and invariants of a flat m x m table.

    TR: unit first column above the last row, zero last row past column 1.
    TR_i: in TR with row tau(j) holding exactly j odd entries for 1 < j <= i.
    K_A collects columns k with a solid column of ones between rows tau(i)
    and tau(k); k_A is the least column not in K_A, j_A the least j with a
    zero at (tau(j), k_A), and w^j(A) lists (decreasing) the columns >= k_A
    where row tau(j) has a one.
    """
    m = A.nrows
    if A.ncols != m:
        raise InvalidParameter("classify_structure expects a square flat table")
    in_tr = _in_TR(A, m)
    in_tc = _in_TR(A.transpose(), m)
    tr_level, k_A, j_A, w_seq = _classify_half(A, m)
    tc_level, _, _, _ = _classify_half(A.transpose(), m)
    return StructureReport(in_tr, in_tc, tr_level, tc_level, k_A, j_A, w_seq)


def theorem_matrix(family: StaircaseFamily) -> TabMatrix:
    """The predicted unique support matrix A0."""
    m = family.m
    entries = [[0] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j <= m + 1:
                entries[i - 1][j - 1] = 1
    entries[0][m - 1] = family.b
    entries[m - 1][0] = family.a - family.m + 1
    A0 = TabMatrix(entries)
    assert A0.row_margins == family.alpha and A0.col_margins == family.beta
    return A0


AUDIT_NAMES = (
    "no_bottom_right",
    "no_outside_rim_pair",
    "support_in_TR_union_TC",
    "no_TR_minus_TC",
    "support_in_top_levels",
)


def structural_lemma_audit(
    family: StaircaseFamily, rel: RelevanceResult
) -> Dict[str, str]:
    """Check the structural vanishing statements on the computed support."""
    m = family.m
    audits: Dict[str, bool] = {name: True for name in AUDIT_NAMES}
    if not rel.support:
        raise VerificationError(
            "empty support: the identity endomorphism guarantees a nonzero solution"
        )
    for A in rel.support:
        rep = classify_structure(A)
        if A.entry(m, m) != 0:
            audits["no_bottom_right"] = False
        has_jm = any(A.entry(j, m) != 0 for j in range(2, m))
        has_mk = any(A.entry(m, k) != 0 for k in range(2, m))
        if has_jm and has_mk:
            audits["no_outside_rim_pair"] = False
        if not (rep.in_TR or rep.in_TC):
            audits["support_in_TR_union_TC"] = False
        if rep.in_TR and not rep.in_TC:
            audits["no_TR_minus_TC"] = False
        top = m - 1
        if m == 2:
            ok_top = rep.in_TR and rep.in_TC
        else:
            ok_top = rep.tr_level == top and rep.tc_level == top
        if not ok_top:
            audits["support_in_top_levels"] = False
    return {name: ("pass" if ok else "fail") for name, ok in audits.items()}


@dataclass
class VerifyReport:
    family: StaircaseFamily
    parity: bool
    num_tables: int
    rel_dim: int
    end_dim: Optional[int]
    support: List[TabMatrix]
    audits: Dict[str, str]
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return (
            self.rel_dim == 1
            and self.support == [theorem_matrix(self.family)]
            and (self.end_dim in (None, 1))
            and all(v in ("pass", "skipped") for v in self.audits.values())
        )

    def to_json_dict(self) -> dict:
        f = self.family
        return {
            "a": f.a,
            "m": f.m,
            "b": f.b,
            "r": f.r,
            "parity": self.parity,
            "num_tables": self.num_tables,
            "rel_dim": self.rel_dim,
            "end_dim": self.end_dim,
            "support": [A.to_lists() for A in self.support],
            "audits": self.audits,
            "elapsed_ms": self.elapsed_ms,
        }


def verify_parity_theorem(
    family: StaircaseFamily,
    max_tables: int = DEFAULT_MAX_TABLES,
    max_bits: int = DEFAULT_MAX_BITS,
    run_oracle: bool = True,
) -> VerifyReport:
    """Verify dim = 1 and support = {A0} for a parity family; raise on failure."""
    if not family.parity_ok:
        raise ParityError(
            f"family ({family.a},{family.m},{family.b}) violates a-m == b mod 2"
        )
    t0 = time.monotonic()
    sys = flat_relevance_system(family, max_tables)
    rel = solve_relevance(sys)
    end_dim: Optional[int] = None
    if run_oracle:
        try:
            from .tabloids import end_dimension_oracle

            end_dim = end_dimension_oracle(family.lam, max_bits)
        except CapExceeded:
            end_dim = None
    audits = structural_lemma_audit(family, rel)
    elapsed = int((time.monotonic() - t0) * 1000)
    report = VerifyReport(
        family,
        family.parity_ok,
        len(sys.tables),
        rel.dim,
        end_dim,
        sorted(rel.support, key=lambda A: A.entries),
        audits,
        elapsed,
    )
    A0 = theorem_matrix(family)
    if rel.dim != 1:
        raise VerificationError(
            f"flat relevance dimension {rel.dim} != 1 for "
            f"({family.a},{family.m},{family.b})"
        )
    if report.support != [A0]:
        raise VerificationError(
            f"support {report.support} != predicted {[A0]}"
        )
    if end_dim is not None and end_dim != 1:
        raise VerificationError(f"oracle End dimension {end_dim} != 1")
    bad = [k for k, v in audits.items() if v == "fail"]
    if bad:
        raise VerificationError(f"structural audits failed: {bad}")
    return report
