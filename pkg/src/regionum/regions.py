"""Checkerboard shading and GF(2) linear algebra between regions and crossings.

Region sets and crossing sets are held as Python int bitmasks: bit ``r`` of a
region vector selects region ``r``, bit ``c`` of a crossing vector selects
crossing ``c``.  A region vector ``S`` acts on the diagram by changing the
crossings in ``phi_T(S)``, the XOR of the incidence rows it selects.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

from .diagram import Diagram, apply_region_changes, is_reduced
from .errors import DimensionMismatch, KernelTooLarge, UnknownRegion

KERNEL_DIM_CAP = 20


class Color(str, Enum):
    BLACK = "B"
    WHITE = "W"


@dataclass(frozen=True)
class Shading:
    colors: tuple[Color, ...]
    white_unbounded: int

    def black(self) -> list[int]:
        return [r for r, c in enumerate(self.colors) if c is Color.BLACK]

    def white(self) -> list[int]:
        return [r for r, c in enumerate(self.colors) if c is Color.WHITE]


def checkerboard_shade(d: Diagram, outer: int = 0) -> Shading:
    """The unique proper 2-colouring with region ``outer`` white."""
    n = len(d.regions)
    if not 0 <= outer < n:
        raise UnknownRegion(f"no region {outer}")
    if d.crossing_count == 0:
        colors = [Color.BLACK] * 2
        colors[outer] = Color.WHITE
        return Shading(tuple(colors), outer)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in d.region_adjacency():
        adj[a].add(b)
        adj[b].add(a)
    side: list[int | None] = [None] * n
    side[outer] = 0
    queue = deque([outer])
    while queue:
        r = queue.popleft()
        for s in adj[r]:
            if side[s] is None:
                side[s] = 1 - side[r]
                queue.append(s)
            elif side[s] == side[r]:
                raise ValueError(f"regions {r} and {s} share an edge and a colour")
    return Shading(tuple(Color.WHITE if v == 0 else Color.BLACK for v in side), outer)


def to_hex(bits: int) -> str:
    return format(bits, "x")


def members(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def as_bits(ids: Iterable[int]) -> int:
    v = 0
    for i in ids:
        v |= 1 << i
    return v


@dataclass(frozen=True)
class IncidenceSystem:
    """Region-by-crossing incidence over GF(2).

    ``rows[r]`` is the crossing bitmask of region ``r``.  ``echelon`` holds
    reduced rows as ``(pivot crossing, crossing bits, region combination)``
    so that targets can be solved by forward substitution.
    """

    n_regions: int
    n_crossings: int
    rows: tuple[int, ...]
    costs: tuple[int, ...]
    echelon: tuple[tuple[int, int, int], ...]
    kernel_basis: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.echelon)

    def column(self, c: int) -> list[int]:
        return [(row >> c) & 1 for row in self.rows]

    def image(self, region_bits: int) -> int:
        """Crossings changed by the region set ``region_bits``."""
        out = 0
        for r in members(region_bits):
            out ^= self.rows[r]
        return out

    def cost(self, region_bits: int) -> int:
        return sum(self.costs[r] for r in members(region_bits))


def incidence_system(d: Diagram) -> IncidenceSystem:
    rows = tuple(as_bits(r.incident_crossings) for r in d.regions)
    costs = tuple(r.cost for r in d.regions)
    echelon: list[tuple[int, int, int]] = []
    kernel: list[int] = []
    for r, row in enumerate(rows):
        bits, combo = row, 1 << r
        for pivot, pbits, pcombo in echelon:
            if (bits >> pivot) & 1:
                bits ^= pbits
                combo ^= pcombo
        if bits:
            pivot = (bits & -bits).bit_length() - 1
            echelon.append((pivot, bits, combo))
        else:
            kernel.append(combo)
    return IncidenceSystem(
        len(rows), d.crossing_count, rows, costs, tuple(echelon), tuple(kernel)
    )


def solve_for_target(sys: IncidenceSystem, targets: Iterable[int] | int) -> int | None:
    """A region vector whose changes hit exactly ``targets``; None when unsolvable."""
    t = targets if isinstance(targets, int) else as_bits(targets)
    if t >> sys.n_crossings:
        raise DimensionMismatch(f"target {to_hex(t)} names crossings beyond {sys.n_crossings}")
    s = 0
    for pivot, bits, combo in sys.echelon:
        if (t >> pivot) & 1:
            t ^= bits
            s ^= combo
    return None if t else s


def coset(sys: IncidenceSystem, s: int, cap: int = KERNEL_DIM_CAP) -> Iterator[int]:
    """All vectors of ``s + span(kernel)``; 4 of them on reduced knot diagrams."""
    basis = sys.kernel_basis
    if len(basis) > cap:
        raise KernelTooLarge(f"kernel dimension {len(basis)} exceeds cap {cap}")
    for choice in itertools.product((0, 1), repeat=len(basis)):
        v = s
        for bit, k in zip(choice, basis):
            if bit:
                v ^= k
        yield v


def min_cost_in_coset(
    d: Diagram, s: int | Iterable[int], sys: IncidenceSystem | None = None,
    cap: int = KERNEL_DIM_CAP,
) -> tuple[tuple[int, ...], int]:
    """Cheapest region set acting like ``s``; ties go to the smallest sorted id list."""
    sys = sys or incidence_system(d)
    bits = s if isinstance(s, int) else as_bits(s)
    best = min((sys.cost(v), members(v)) for v in coset(sys, bits, cap))
    return tuple(best[1]), best[0]


def theorem1_reduce(d: Diagram, regions: Iterable[int]) -> tuple[int, ...]:
    """Replace a region set by the cheapest equivalent one (cost at most 2c)."""
    if not is_reduced(d):
        raise ValueError("coset reduction is only guaranteed on reduced diagrams")
    ids = list(regions)
    for r in ids:
        if not 0 <= r < len(d.regions):
            raise UnknownRegion(f"no region {r}")
    witness, _ = min_cost_in_coset(d, ids)
    assert apply_region_changes(d, witness) == apply_region_changes(d, ids)
    return witness
