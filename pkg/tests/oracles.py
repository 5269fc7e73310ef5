"""Independent reference implementations used to cross-check the package."""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import List, Sequence, Tuple


def partitions_of(r: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def rec(rest: int, maxp: int, acc: List[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxp), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(r, r, [])
    return out


def conjugate(parts: Sequence[int]) -> Tuple[int, ...]:
    """Transpose by counting cells per column of the diagram."""
    if not parts:
        return ()
    cells = {(i, j) for i, p in enumerate(parts) for j in range(p)}
    out = []
    j = 0
    while any(c[1] == j for c in cells):
        out.append(sum(1 for c in cells if c[1] == j))
        j += 1
    return tuple(out)


def count_tables_brute(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Count margin matrices by brute force over entry assignments."""
    nr, nc = len(alpha), len(beta)
    count = 0
    ranges = [range(min(alpha[i], beta[j]) + 1) for i in range(nr) for j in range(nc)]
    for flat in itertools.product(*ranges):
        rows = [flat[i * nc : (i + 1) * nc] for i in range(nr)]
        if all(sum(rows[i]) == alpha[i] for i in range(nr)) and all(
            sum(r[j] for r in rows) == beta[j] for j in range(nc)
        ):
            count += 1
    return count


def naive_gf2_mul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s ^= a[i][t] & b[t][j]
            out[i][j] = s
    return out


def multinomial(r: int, parts: Sequence[int]) -> int:
    n = math.factorial(r)
    for p in parts:
        n //= math.factorial(p)
    return n


def syt_count(shape: Tuple[int, ...]) -> int:
    """Standard fillings counted by backtracking over removable corners."""

    @lru_cache(maxsize=None)
    def rec(state: Tuple[int, ...]) -> int:
        if sum(state) == 0:
            return 1
        total = 0
        for i, c in enumerate(state):
            if c == 0:
                continue
            if i + 1 < len(state) and state[i + 1] >= c:
                continue  # removing here would break weak decrease
            total += rec(tuple(v - 1 if t == i else v for t, v in enumerate(state)))
        return total

    return rec(tuple(shape))


def rho_column_reference(
    A_entries: Sequence[Sequence[int]],
    x: Tuple[Tuple[int, ...], ...],
    cod_elements: Sequence[Tuple[Tuple[int, ...], ...]],
) -> int:
    """Image of a tabloid under rho[A], by intersection-pattern filtering.

    A codomain tabloid y appears (with coefficient 1) exactly when
    |x_i intersect y_j| = A[i][j] for all i, j: the splitting of x into
    pieces giving y is unique when it exists.
    """
    acc = 0
    for idx, y in enumerate(cod_elements):
        ok = True
        for i, xi in enumerate(x):
            si = set(xi)
            for j, yj in enumerate(y):
                if len(si & set(yj)) != A_entries[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            acc ^= 1 << idx
    return acc
