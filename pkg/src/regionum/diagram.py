"""Knot diagrams as combinatorial maps.

A diagram is a list of crossings in PD notation.  Each crossing lists four
edge labels counterclockwise, starting with the incoming under-strand, so
slot 0 and slot 2 carry the under-strand and slots 1 and 3 the over-strand.
Regions are the orbits of the corner permutation obtained by walking out of
a crossing along the next counterclockwise edge and arriving at the far end.

Corners are numbered in a frame anchored at the crossing's lower-labelled
incoming edge rather than at slot 0.  Changing a crossing rotates its slots
but leaves that frame (and therefore every region id) untouched, so region
ids of a projection are stable under any sequence of crossing changes.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    LabelError,
    MalformedInput,
    NotAKnot,
    NotPlanar,
    UnknownCrossing,
    UnknownRegion,
)

Dart = tuple[int, int]  # (crossing index, slot or position index)


@dataclass(frozen=True)
class Crossing:
    """One crossing: four edge labels counterclockwise, slot 0 = under-strand in.

    ``over_in`` is the slot (1 or 3) where the over-strand enters.  It is
    determined by the labels for every crossing except the lone crossing of a
    one-crossing diagram, so it is stored explicitly.
    """

    slots: tuple[int, int, int, int]
    over_in: int

    @property
    def under_in(self) -> int:
        return self.slots[0]

    @property
    def under_out(self) -> int:
        return self.slots[2]

    @property
    def sign(self) -> int:
        """Right-hand-rule sign: +1 when the over-strand runs from slot 3 to slot 1."""
        return 1 if self.over_in == 3 else -1

    def changed(self) -> Crossing:
        s = self.slots
        if self.over_in == 1:
            return Crossing((s[1], s[2], s[3], s[0]), 3)
        return Crossing((s[3], s[0], s[1], s[2]), 1)


@dataclass(frozen=True)
class Region:
    id: int
    corners: tuple[tuple[int, int], ...]
    incident_crossings: frozenset[int]

    @property
    def cost(self) -> int:
        return len(self.incident_crossings)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    name: str | None = field(default=None, compare=False)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def pd(self) -> list[list[int]]:
        return [list(c.slots) for c in self.crossings]

    def key(self) -> str:
        """Cheap cache key: the normalised PD code plus over-strand data."""
        return ";".join(
            f"{a},{b},{c},{d}/{x.over_in}" for x in self.crossings for a, b, c, d in [x.slots]
        )

    def __str__(self) -> str:
        return json.dumps(self.pd(), separators=(",", ":"))

    # -- combinatorial map -------------------------------------------------

    @cached_property
    def _partner(self) -> dict[Dart, Dart]:
        where: dict[int, list[Dart]] = {}
        for i, x in enumerate(self.crossings):
            for s, lab in enumerate(x.slots):
                where.setdefault(lab, []).append((i, s))
        out: dict[Dart, Dart] = {}
        for a, b in where.values():
            out[a] = b
            out[b] = a
        return out

    def partner(self, dart: Dart) -> Dart:
        """Other end of the edge leaving ``dart``."""
        return self._partner[dart]

    @cached_property
    def _frame(self) -> tuple[int, ...]:
        # slot of the lower-labelled incoming dart at each crossing
        frame = []
        for x in self.crossings:
            frame.append(0 if x.slots[0] <= x.slots[x.over_in] else x.over_in)
        return tuple(frame)

    def corner_slot(self, crossing: int, corner: int) -> int:
        """Slot index opening the canonical corner (corner spans slot, slot + 1)."""
        return (self._frame[crossing] + corner) % 4

    def slot_corner(self, crossing: int, slot: int) -> int:
        return (slot - self._frame[crossing]) % 4

    @cached_property
    def regions(self) -> tuple[Region, ...]:
        c = self.crossing_count
        if c == 0:
            return (Region(0, (), frozenset()), Region(1, (), frozenset()))
        seen: set[tuple[int, int]] = set()
        orbits: list[list[tuple[int, int]]] = []
        # canonical corner ids 4*i + k visited in increasing order
        for i in range(c):
            for k in range(4):
                if (i, k) in seen:
                    continue
                orbit = []
                cur = (i, k)
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    ci, ck = cur
                    slot = self.corner_slot(ci, ck)
                    j, t = self._partner[(ci, (slot + 1) % 4)]
                    cur = (j, self.slot_corner(j, t))
                orbits.append(orbit)
        return tuple(
            Region(n, tuple(orb), frozenset(ci for ci, _ in orb)) for n, orb in enumerate(orbits)
        )

    @cached_property
    def corner_region(self) -> dict[tuple[int, int], int]:
        return {corner: r.id for r in self.regions for corner in r.corners}

    def slot_region(self, crossing: int, slot: int) -> int:
        """Region occupying the sector from ``slot`` counterclockwise to ``slot + 1``."""
        return self.corner_region[(crossing, self.slot_corner(crossing, slot))]

    def region_adjacency(self) -> list[tuple[int, int]]:
        """Pairs of regions separated by an edge (one pair per edge side)."""
        pairs = []
        for i in range(self.crossing_count):
            for s in range(4):
                pairs.append((self.slot_region(i, (s - 1) % 4), self.slot_region(i, s)))
        return pairs


# -- construction ----------------------------------------------------------


def _traverse(codes: Sequence[Sequence[int]]) -> tuple[list[Dart], list[int]]:
    """Walk the strand from crossing 0, slot 0.

    Returns the head darts in visiting order and the incoming over-slot of
    every crossing.  Raises when the walk contradicts the under-strand
    convention or misses part of the diagram.
    """
    where: dict[int, list[Dart]] = {}
    for i, x in enumerate(codes):
        for s, lab in enumerate(x):
            where.setdefault(lab, []).append((i, s))
    heads: list[Dart] = []
    over_in = [0] * len(codes)
    cur: Dart = (0, 0)
    while True:
        i, s = cur
        if s == 2:
            raise LabelError(f"crossing {i}: under-strand enters at slot 2")
        if s in (1, 3):
            if over_in[i]:
                raise LabelError(f"crossing {i}: over-strand entered twice")
            over_in[i] = s
        heads.append(cur)
        tail = (i, (s + 2) % 4)
        a, b = where[codes[i][tail[1]]]
        cur = b if a == tail else a
        if cur == (0, 0):
            break
        if len(heads) > 2 * len(codes):
            raise LabelError("strand walk does not close up")
    if len(heads) != 2 * len(codes):
        raise NotAKnot(f"walk from edge {codes[0][0]} covers {len(heads)} of {2 * len(codes)} edges")
    return heads, over_in


def from_pd(codes: Sequence[Sequence[int]], name: str | None = None) -> Diagram:
    """Validate a PD code and normalise its labels to 1..2c along the strand."""
    codes = [tuple(int(v) for v in x) for x in codes]
    for x in codes:
        if len(x) != 4 or any(v <= 0 for v in x):
            raise MalformedInput(f"crossing {list(x)} is not four positive labels")
    if not codes:
        return Diagram((), name)
    counts: dict[int, int] = {}
    for x in codes:
        for v in x:
            counts[v] = counts.get(v, 0) + 1
    bad = sorted(v for v, n in counts.items() if n != 2)
    if bad:
        raise LabelError(f"labels {bad} do not appear exactly twice")
    heads, over_in = _traverse(codes)
    n = len(heads)
    # edge number k (0-based) ends at heads[k]; its label is the label there
    old = [codes[i][s] for i, s in heads]
    start = old.index(min(old))
    relabel = {old[(start + k) % n]: k + 1 for k in range(n)}
    crossings = tuple(
        Crossing(tuple(relabel[v] for v in x), over_in[i]) for i, x in enumerate(codes)
    )
    d = Diagram(crossings, name)
    if len(d.regions) != len(codes) + 2:
        raise NotPlanar(f"{len(d.regions)} faces for {len(codes)} crossings")
    return d


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """Parse a JSON-style PD code such as ``[[1,4,2,5],[3,6,4,1],[5,2,6,3]]``."""
    text = text.strip()
    text = text.removeprefix("PD")
    text = text.replace("X[", "[").replace("(", "[").replace(")", "]")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"cannot parse PD code: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise MalformedInput("PD code must be a list of 4-element lists")
    if not all(isinstance(v, int) and not isinstance(v, bool) for x in data for v in x):
        raise MalformedInput("PD labels must be integers")
    return from_pd(data, name)


def from_map(
    link: dict[Dart, Dart], under: Sequence[int], name: str | None = None
) -> Diagram:
    """Build a diagram from a 4-regular map.

    ``link`` is the involution joining crossing positions (positions 0..3 run
    counterclockwise); ``under[i]`` is 0 when positions 0 and 2 carry the
    under-strand at crossing ``i`` and 1 when positions 1 and 3 do.  The
    strand is oriented by entering crossing 0 at position ``under[0]``.
    """
    n = len(under)
    if n == 0:
        return Diagram((), name)
    labels: dict[Dart, int] = {}
    entry: dict[int, int] = {}
    cur = (0, under[0])
    k = 0
    while True:
        i, p = cur
        if p % 2 == under[i] % 2:
            entry[i] = p
        out = (i, (p + 2) % 4)
        k += 1
        labels[out] = k
        cur = link[out]
        labels[cur] = k
        if cur == (0, under[0]):
            break
        if k > 2 * n:
            raise NotAKnot("map walk does not close up")
    if k != 2 * n:
        raise NotAKnot(f"map has more than one component ({k} of {2 * n} edges reached)")
    codes = []
    for i in range(n):
        p = entry[i]
        codes.append([labels[(i, (p + s) % 4)] for s in range(4)])
    return from_pd(codes, name)


def to_map(d: Diagram, offset: int = 0) -> tuple[dict[Dart, Dart], list[int]]:
    """Inverse of :func:`from_map`: positions are PD slots, so every ``under`` is 0."""
    link = {(i + offset, s): (j + offset, t) for (i, s), (j, t) in d._partner.items()}
    return link, [0] * d.crossing_count


# -- operations ------------------------------------------------------------


def faces(d: Diagram) -> list[Region]:
    return list(d.regions)


def _check_crossing(d: Diagram, c_id: int) -> None:
    if not 0 <= c_id < d.crossing_count:
        raise UnknownCrossing(f"no crossing {c_id} in a {d.crossing_count}-crossing diagram")


def crossing_change(d: Diagram, c_id: int) -> Diagram:
    _check_crossing(d, c_id)
    xs = list(d.crossings)
    xs[c_id] = xs[c_id].changed()
    return Diagram(tuple(xs), d.name)


def change_crossings(d: Diagram, targets: Iterable[int]) -> Diagram:
    """Change every crossing in ``targets`` once."""
    xs = list(d.crossings)
    for c_id in set(targets):
        _check_crossing(d, c_id)
        xs[c_id] = xs[c_id].changed()
    return Diagram(tuple(xs), d.name)


def region_change_targets(d: Diagram, region_ids: Iterable[int]) -> frozenset[int]:
    """Crossings met by an odd number of the given regions (set incidence)."""
    regions = d.regions
    parity: set[int] = set()
    for r in set(region_ids):
        if not 0 <= r < len(regions):
            raise UnknownRegion(f"no region {r} in a diagram with {len(regions)} regions")
        parity ^= regions[r].incident_crossings
    return frozenset(parity)


def apply_region_changes(d: Diagram, region_ids: Iterable[int]) -> Diagram:
    return change_crossings(d, region_change_targets(d, region_ids))


def nugatory_crossings(d: Diagram) -> set[int]:
    out = set()
    for i in range(d.crossing_count):
        if len({d.corner_region[(i, k)] for k in range(4)}) < 4:
            out.add(i)
    return out


def is_reduced(d: Diagram) -> bool:
    return not nugatory_crossings(d)


def mirror(d: Diagram) -> Diagram:
    return Diagram(tuple(x.changed() for x in d.crossings), d.name and f"mirror({d.name})")


def _tail_head(d: Diagram, label: int) -> tuple[Dart, Dart]:
    heads = {}
    tails = {}
    for i, x in enumerate(d.crossings):
        heads[x.slots[0]] = (i, 0)
        heads[x.slots[x.over_in]] = (i, x.over_in)
        tails[x.slots[2]] = (i, 2)
        tails[x.slots[(x.over_in + 2) % 4]] = (i, (x.over_in + 2) % 4)
    return tails[label], heads[label]


def outer_edges(d: Diagram, outer: int = 0) -> list[int]:
    """Edge labels on the boundary of region ``outer``, ascending."""
    labels = set()
    for i, k in d.regions[outer].corners:
        s = d.corner_slot(i, k)
        labels.add(d.crossings[i].slots[s])
        labels.add(d.crossings[i].slots[(s + 1) % 4])
    return sorted(labels)


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    """Splice ``d2`` into ``d1`` along the lowest-numbered edge of each unbounded face."""
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else None
    if d2.crossing_count == 0:
        return Diagram(d1.crossings, name or d1.name)
    if d1.crossing_count == 0:
        return Diagram(d2.crossings, name or d2.name)
    n1 = d1.crossing_count
    link1, under1 = to_map(d1)
    link2, under2 = to_map(d2, offset=n1)
    p, q = _tail_head(d1, outer_edges(d1)[0])
    r, s = _tail_head(d2, outer_edges(d2)[0])
    r, s = (r[0] + n1, r[1]), (s[0] + n1, s[1])
    base = {**link1, **link2}
    for a, b, c, e in ((p, s, r, q), (p, r, s, q)):
        link = dict(base)
        link[a], link[b] = b, a
        link[c], link[e] = e, c
        try:
            return from_map(link, under1 + under2, name)
        except (NotPlanar, NotAKnot):
            continue
    raise NotPlanar("no planar splice along the unbounded faces")  # pragma: no cover


def gen_torus(k: int) -> Diagram:
    """Standard diagram of the positive (2, 2k+1) torus knot as a closed 2-braid."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = 2 * k + 1
    # positions: 0 = NE, 1 = NW, 2 = SW, 3 = SE; under-strand runs SW-NE
    link: dict[Dart, Dart] = {}
    for i in range(n):
        j = (i + 1) % n
        link[(i, 0)], link[(j, 1)] = (j, 1), (i, 0)
        link[(i, 3)], link[(j, 2)] = (j, 2), (i, 3)
    return from_map(link, [0] * n, f"T(2,{n})")


def unknot() -> Diagram:
    return Diagram((), "0_1")
