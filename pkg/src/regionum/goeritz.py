"""Goeritz matrices, integer Smith normal form, mg2 and the knot determinant."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, crossing_change
from .regions import Color, Shading, checkerboard_shade

Matrix = list[list[int]]

# ζ when the shaded corners are the (slot0, slot1) and (slot2, slot3) corners.
# Calibrated on the connected sum of two trefoils, whose worked pre-Goeritz
# matrix has -1 for every shared crossing.
ZETA_CORNERS_02 = 1


@dataclass(frozen=True)
class SmithDecomposition:
    left: Matrix
    right: Matrix
    diagonal: list[int]


@dataclass(frozen=True)
class GoeritzData:
    shading: Shading
    zeta: tuple[int, ...]
    shaded: tuple[int, ...]
    pre_goeritz: Matrix
    goeritz: Matrix
    deleted: int

    @property
    def smith(self) -> SmithDecomposition:
        return smith_normal_form(self.goeritz)

    @property
    def det(self) -> int:
        return abs(_product(self.smith.diagonal)) if self.goeritz else 1

    @property
    def mg2(self) -> int:
        return sum(1 for a in self.smith.diagonal if a > 1)


def _product(xs: list[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def zeta(d: Diagram, sh: Shading, c: int) -> int:
    corners = [k for k in range(4) if sh.colors[d.slot_region(c, k)] is Color.BLACK]
    # shaded sectors alternate around the vertex: either {0, 2} or {1, 3}
    return ZETA_CORNERS_02 if corners[0] % 2 == 0 else -ZETA_CORNERS_02


def goeritz_matrices(d: Diagram, outer: int = 0, deleted: int = 0) -> GoeritzData:
    """Pre-Goeritz matrix over the shaded (Black) regions, and its reduction.

    ``deleted`` indexes the shaded region whose row and column are removed;
    the default removes the lowest-id shaded region.
    """
    sh = checkerboard_shade(d, outer)
    shaded = tuple(sh.black())
    index = {r: i for i, r in enumerate(shaded)}
    m = len(shaded)
    pre = [[0] * m for _ in range(m)]
    zs = []
    for c in range(d.crossing_count):
        z = zeta(d, sh, c)
        zs.append(z)
        a = [d.slot_region(c, k) for k in range(4) if sh.colors[d.slot_region(c, k)] is Color.BLACK]
        i, j = index[a[0]], index[a[1]]
        if i != j:
            pre[i][j] += z
            pre[j][i] += z
    for i in range(m):
        pre[i][i] = -sum(pre[k][i] for k in range(m) if k != i)
    if not 0 <= deleted < m:
        raise IndexError(f"shaded region index {deleted} out of range 0..{m - 1}")
    keep = [i for i in range(m) if i != deleted]
    g = [[pre[i][j] for j in keep] for i in keep]
    return GoeritzData(sh, tuple(zs), shaded, pre, g, deleted)


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Diagonalise ``m`` with unimodular row and column operations.

    Pivots are the smallest nonzero absolute value in the remaining block,
    ties broken by row then column.  Returns ``left``, ``right`` with
    ``left @ m @ right`` diagonal, entries nonnegative and each dividing the next.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left, right = _identity(rows), _identity(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        if best is None:
            break
    diag = [a[k][k] for k in range(min(rows, cols))]
    return SmithDecomposition(left, right, diag)


def mg2(d: Diagram, outer: int = 0) -> int:
    return goeritz_matrices(d, outer).mg2


def determinant(d: Diagram, outer: int = 0) -> int:
    return goeritz_matrices(d, outer).det


def mg2_lipschitz_check(d: Diagram, c: int) -> bool:
    return abs(mg2(d) - mg2(crossing_change(d, c))) <= 1
