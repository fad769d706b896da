"""Slow, independent reference implementations used to check the fast paths."""

from __future__ import annotations

import itertools
from fractions import Fraction

from regionum.diagram import Diagram, apply_region_changes
from regionum.invariants import is_unknot


def bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def fraction_det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return int(det)


def gf2_rank(rows: list[list[int]]) -> int:
    rows = [list(r) for r in rows]
    rank, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % 2), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % 2:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def bracket_terms(pd: list[list[int]]) -> dict[int, int]:
    """State sum by explicit loop tracing; exponent map of the bracket in A."""
    if not pd:
        return {0: 1}
    c = len(pd)
    out: dict[int, int] = {}
    delta = {2: -1, -2: -1}
    for state in itertools.product("AB", repeat=c):
        # each smoothing joins two slots; a loop alternates edge-joins and smoothing-joins
        join: dict[tuple[int, int], tuple[int, int]] = {}
        for i, s in enumerate(state):
            pairs = ((0, 1), (2, 3)) if s == "A" else ((0, 3), (1, 2))
            for p, q in pairs:
                join[(i, p)] = (i, q)
                join[(i, q)] = (i, p)
        where: dict[int, list[tuple[int, int]]] = {}
        for i, x in enumerate(pd):
            for s, lab in enumerate(x):
                where.setdefault(lab, []).append((i, s))
        seen: set[tuple[int, int]] = set()
        loops = 0
        for start in join:
            if start in seen:
                continue
            loops += 1
            cur = start
            while cur not in seen:
                seen.add(cur)
                mate = join[cur]
                seen.add(mate)
                a, b = where[pd[mate[0]][mate[1]]]
                cur = b if a == mate else a
        na = state.count("A")
        poly = {na - (c - na): 1}
        for _ in range(loops - 1):
            nxt: dict[int, int] = {}
            for e, v in poly.items():
                for e2, v2 in delta.items():
                    nxt[e + e2] = nxt.get(e + e2, 0) + v * v2
            poly = nxt
        for e, v in poly.items():
            out[e] = out.get(e, 0) + v
    return {e: v for e, v in sorted(out.items()) if v}


def brute_mri_reg(d: Diagram) -> tuple[int, float]:
    """Minimum cost over every region subset, and the best single region."""
    n = len(d.regions)
    costs = [r.cost for r in d.regions]
    best = None
    for mask in range(1 << n):
        ids = [r for r in range(n) if mask >> r & 1]
        cost = sum(costs[r] for r in ids)
        if best is not None and cost >= best:
            continue
        if is_unknot(apply_region_changes(d, ids)).is_unknot:
            best = cost
    reg = min(
        (costs[r] for r in range(n) if is_unknot(apply_region_changes(d, [r])).is_unknot),
        default=float("inf"),
    )
    return best, reg
