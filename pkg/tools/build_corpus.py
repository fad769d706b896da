"""Build the bundled table of prime knots up to nine crossings.

Diagrams are assembled from Conway notation: rational and Montesinos knots
by tangle algebra, polyhedral knots by substituting tangles into the basic
polyhedra 6*, 8* and 9* (medial graphs of the tetrahedron, square pyramid and
triangular prism) and identifying each candidate by determinant and Jones
polynomial against every other knot (and composite) of at most nine crossings.

Signatures come from the Gordon-Litherland formula and are cross-checked
against the Traczyk state formula on alternating diagrams and against the
congruence (-1)^(sigma/2) det = 1 - 4 a2 (mod 16).  a2 is -V''(1)/6.
Unknotting numbers are transcribed from the standard tables and validated by
|sigma|/2 <= u, mg2 <= u and u <= (smallest unknotting crossing set found).

    python tools/build_corpus.py    # writes src/regionum/data/{knots9,diagrams}.csv
"""

from __future__ import annotations

import argparse
import csv
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from regionum.diagram import Diagram, connected_sum, from_map, is_reduced, mirror, unknot
from regionum.goeritz import goeritz_matrices
from regionum.invariants import jones_normalized
from regionum.regions import Color
from regionum.search import enumerate_unknotting_targets

Dart = tuple[int, int]
NAMES = ("NE", "NW", "SW", "SE")

# -- tangles -----------------------------------------------------------------


@dataclass
class Tangle:
    n: int
    link: dict[Dart, Dart] = field(default_factory=dict)
    under: list[int] = field(default_factory=list)
    ends: dict[str, Dart] = field(default_factory=dict)

    def shifted(self, k: int) -> Tangle:
        s = lambda d: (d[0] + k, d[1])
        return Tangle(
            self.n,
            {s(a): s(b) for a, b in self.link.items()},
            list(self.under),
            {e: s(d) for e, d in self.ends.items()},
        )


def one() -> Tangle:
    return Tangle(1, {}, [0], {"NE": (0, 0), "NW": (0, 1), "SW": (0, 2), "SE": (0, 3)})


def join(link: dict[Dart, Dart], a: Dart, b: Dart) -> None:
    link[a], link[b] = b, a


def add(t1: Tangle, t2: Tangle) -> Tangle:
    t2 = t2.shifted(t1.n)
    link = {**t1.link, **t2.link}
    join(link, t1.ends["NE"], t2.ends["NW"])
    join(link, t1.ends["SE"], t2.ends["SW"])
    ends = {"NW": t1.ends["NW"], "SW": t1.ends["SW"], "NE": t2.ends["NE"], "SE": t2.ends["SE"]}
    return Tangle(t1.n + t2.n, link, t1.under + t2.under, ends)


def rot(t: Tangle) -> Tangle:
    e = t.ends
    return Tangle(t.n, dict(t.link), list(t.under),
                  {"NW": e["NE"], "SW": e["NW"], "SE": e["SW"], "NE": e["SE"]})


def flip(t: Tangle) -> Tangle:
    return Tangle(t.n, dict(t.link), [1 - u for u in t.under], dict(t.ends))


def integer(a: int) -> Tangle:
    t = one()
    for _ in range(abs(a) - 1):
        t = add(t, one())
    return t if a > 0 else flip(t)


def vertical(t: Tangle) -> Tangle:
    """Tangle with fraction 1/F."""
    return flip(rot(t))


def rational(digits: str) -> Tangle:
    t = integer(int(digits[0]))
    for ch in digits[1:]:
        t = add(vertical(t), integer(int(ch)))
    return t


def fraction(digits: str) -> Fraction:
    f = Fraction(int(digits[0]))
    for ch in digits[1:]:
        f = int(ch) + 1 / f
    return f


def numerator(t: Tangle, name: str | None = None) -> Diagram:
    link = dict(t.link)
    join(link, t.ends["NW"], t.ends["NE"])
    join(link, t.ends["SW"], t.ends["SE"])
    return from_map(link, t.under, name)


def from_fraction(x: Fraction) -> Tangle:
    """Alternating rational tangle with fraction ``x`` (continued-fraction digits)."""
    if x < 0:
        return flip(from_fraction(-x))
    if x < 1:
        return vertical(from_fraction(1 / x))
    a0 = math.floor(x)
    rest = x - a0
    if rest == 0:
        return integer(a0)
    return add(vertical(from_fraction(1 / rest)), integer(a0))


def montesinos(entries: list[str]) -> Tangle:
    """Sum of vertical rational tangles; a trailing sign adds -1 or +1 to a fraction."""
    parts = []
    for e in entries:
        shift = 0
        if e.endswith(("-", "+")):
            shift = -1 if e[-1] == "-" else 1
            e = e[:-1]
        parts.append(from_fraction(1 / fraction(e) + shift))
    t = parts[0]
    for p in parts[1:]:
        t = add(t, p)
    return t


# -- polyhedra ---------------------------------------------------------------


def medial(coords: list[tuple[float, float]], edges: list[tuple[int, int]]):
    """Medial 4-regular map of a straight-line plane graph."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(len(coords))}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v, ws in nbrs.items():
        x, y = coords[v]
        ws.sort(key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x))
    index = {tuple(sorted(e)): i for i, e in enumerate(edges)}
    link: dict[Dart, Dart] = {}
    for v, ws in nbrs.items():
        for k, a in enumerate(ws):
            b = ws[(k + 1) % len(ws)]
            ea, eb = tuple(sorted((v, a))), tuple(sorted((v, b)))
            pa = 1 if ea[0] == v else 3
            pb = 2 if eb[0] == v else 0
            join(link, (index[ea], pa), (index[eb], pb))
    return link, len(edges)


TETRA = ([(0, 0), (0, 1), (-0.87, -0.5), (0.87, -0.5)],
         [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)])
PYRAMID = ([(0, 0), (1, 1), (-1, 1), (-1, -1), (1, -1)],
           [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)])
PRISM = ([(math.cos(a), math.sin(a)) for a in (0, 2.09, 4.19)]
         + [(3 * math.cos(a), 3 * math.sin(a)) for a in (0, 2.09, 4.19)],
         [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def substitute(base, subs: dict[int, Tangle]) -> tuple[dict[Dart, Dart], list[int], list[list[int]]]:
    """Replace vertices of a 4-regular map by tangles; returns link, under, crossing groups."""
    blink, nv = base
    pieces, offset, groups = [], 0, []
    for v in range(nv):
        t = subs.get(v, one()).shifted(offset)
        pieces.append(t)
        groups.append(list(range(offset, offset + t.n)))
        offset += t.n
    link: dict[Dart, Dart] = {}
    under: list[int] = []
    for t in pieces:
        link.update(t.link)
        under.extend(t.under)
    for (v, p), (w, q) in blink.items():
        link[pieces[v].ends[NAMES[p]]] = pieces[w].ends[NAMES[q]]
    return link, under, groups


def alternate(link: dict[Dart, Dart], n: int) -> list[int] | None:
    under: list[int | None] = [None] * n
    cur, k = (0, 0), 0
    while True:
        i, p = cur
        want = (1 - p % 2) if k % 2 == 0 else p % 2
        if under[i] is None:
            under[i] = want
        elif under[i] != want:
            raise AssertionError("planar map failed to alternate")
        cur = link[(i, (p + 2) % 4)]
        k += 1
        if cur == (0, 0):
            break
    return under if k == 2 * n else None


# -- identification ----------------------------------------------------------


def jones_class(d: Diagram) -> tuple:
    f = jones_normalized(d)
    return min(tuple(f.terms()), tuple(f.invert_variable().terms()))


def span(d: Diagram) -> int:
    t = jones_normalized(d).terms()
    return t[-1][0] - t[0][0]


CONWAY = {
    "3_1": "3", "4_1": "22", "5_1": "5", "5_2": "32", "6_1": "42", "6_2": "312", "6_3": "2112",
    "7_1": "7", "7_2": "52", "7_3": "43", "7_4": "313", "7_5": "322", "7_6": "2212", "7_7": "21112",
    "8_1": "62", "8_2": "512", "8_3": "44", "8_4": "413", "8_5": "3,3,2", "8_6": "332",
    "8_7": "4112", "8_8": "2312", "8_9": "3113", "8_10": "3,21,2", "8_11": "3212",
    "8_12": "2222", "8_13": "31112", "8_14": "22112", "8_15": "21,21,2", "8_16": ".2.20",
    "8_17": ".2.2", "8_18": "8*", "8_19": "3,3,2-", "8_20": "3,21,2-", "8_21": "21,21,2-",
    "9_1": "9", "9_2": "72", "9_3": "63", "9_4": "54", "9_5": "513", "9_6": "522", "9_7": "342",
    "9_8": "2412", "9_9": "423", "9_10": "333", "9_11": "4122", "9_12": "4212", "9_13": "3213",
    "9_14": "41112", "9_15": "2322", "9_16": "3,3,2+", "9_17": "21312", "9_18": "3222",
    "9_19": "23112", "9_20": "31212", "9_21": "31122", "9_22": "211,3,2", "9_23": "22122",
    "9_24": "3,21,2+", "9_25": "22,21,2", "9_26": "311112", "9_27": "212112", "9_28": "21,21,2+",
    "9_29": ".2.20.2", "9_30": "211,21,2", "9_31": "2111112", "9_32": ".21.20", "9_33": ".21.2",
    "9_34": "8*20", "9_35": "3,3,3", "9_36": "22,3,2", "9_37": "3,21,21", "9_38": ".2.2.2",
    "9_39": "2:2:20", "9_40": "9*", "9_41": "20:20:20", "9_42": "22,3,2-", "9_43": "211,3,2-",
    "9_44": "22,21,2-", "9_45": "211,21,2-", "9_46": "3,3,21-", "9_47": "8*-20",
    "9_48": "21,21,21-", "9_49": "-20:-20:-20",
}

DET = dict(zip(
    ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]
    + [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 22)]
    + [f"9_{i}" for i in range(1, 50)],
    [3, 5, 5, 7, 9, 11, 13, 7, 11, 13, 15, 17, 19, 21,
     13, 17, 17, 19, 21, 23, 23, 25, 25, 27, 27, 29, 29, 31, 33, 35, 37, 45, 3, 9, 15,
     9, 15, 19, 21, 23, 27, 29, 31, 31, 33, 33, 35, 37, 37, 39, 39, 39, 41, 41, 41, 43, 43,
     45, 45, 47, 47, 49, 51, 51, 53, 55, 59, 61, 69, 27, 37, 45, 57, 55, 75, 49, 7, 13, 17,
     23, 9, 27, 27, 25],
))

UNKNOTTING = dict(zip(
    list(DET),
    [1, 1, 2, 1, 1, 1, 1, 3, 1, 2, 2, 2, 1, 1,
     1, 2, 2, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 3, 1, 1,
     4, 1, 3, 2, 2, 3, 2, 2, 3, 3, 2, 1, 3, 1, 2, 3, 2, 2, 1, 2, 1, 1, 2, 1, 2, 1, 1, 1,
     2, 1, 2, 2, 1, 1, 3, 2, 2, 3, 1, 2, 2, 1, 2, 1, 1, 2, 2, 2, 3],
))

NON_ALTERNATING = {"8_19", "8_20", "8_21"} | {f"9_{i}" for i in range(42, 50)}


def algebraic(name: str) -> Diagram:
    note = CONWAY[name]
    if "," in note:
        return numerator(montesinos(note.split(",")), name)
    return numerator(rational(note), name)


def polyhedral_candidates():
    """(diagram, crossing count, alternating?) over small tangle substitutions."""
    small = {2: ["2"], 3: ["3", "21"], 4: ["4", "31", "22", "211"]}
    bases = [("6*", medial(*TETRA)), ("8*", medial(*PYRAMID)), ("9*", medial(*PRISM))]
    for label, base in bases:
        nv = base[1]
        budget = 9 - nv
        # a k-crossing tangle in place of a vertex adds k - 1 crossings
        patterns = [[e + 1 for e in extra] for total in range(budget + 1)
                    for extra in _partitions(total)]
        for parts in patterns:
            for verts in itertools.permutations(range(nv), len(parts)):
                if list(verts) != sorted(verts) and len(set(parts)) == 1:
                    continue
                for choice in itertools.product(*[small[p] for p in parts]):
                    for rots in itertools.product((0, 1), repeat=len(parts)):
                        subs = {}
                        for v, t, r in zip(verts, choice, rots):
                            tt = rational(t)
                            subs[v] = rot(tt) if r else tt
                        link, _, groups = substitute(base, subs)
                        n = sum(len(g) for g in groups)
                        under = alternate(link, n)
                        if under is None:
                            continue
                        bigons = [groups[v] for v, t in zip(verts, choice) if t == "2"]
                        for flips in itertools.product((0, 1), repeat=len(bigons)):
                            u = list(under)
                            for f, g in zip(flips, bigons):
                                if f:
                                    for i in g:
                                        u[i] = 1 - u[i]
                            yield label, from_map(link, u), not any(flips)


def _partitions(total: int, smallest: int = 1):
    if total == 0:
        yield []
        return
    for first in range(smallest, total + 1):
        for rest in _partitions(total - first, first):
            yield [first] + rest


def build_diagrams() -> dict[str, Diagram]:
    out: dict[str, Diagram] = {}
    for name, note in CONWAY.items():
        if note[0] in ".-" or "*" in note or ":" in note:
            continue
        out[name] = algebraic(name)
    known: dict[tuple, str] = {jones_class(d): n for n, d in out.items()}
    primes = [d for n, d in out.items() if d.crossing_count <= 6]
    for a, b in itertools.combinations_with_replacement(primes, 2):
        if a.crossing_count + b.crossing_count <= 9:
            for bb in (b, mirror(b)):
                known.setdefault(jones_class(connected_sum(a, bb)), f"{a.name}#{b.name}")
    known.setdefault(jones_class(unknot()), "0_1")
    wanted = {n for n in CONWAY if n not in out}
    found: dict[str, list[tuple[tuple, Diagram]]] = {n: [] for n in wanted}
    for _, d, alt in polyhedral_candidates():
        if not is_reduced(d):
            continue
        jc = jones_class(d)
        if jc in known:
            continue
        det = goeritz_matrices(d).det
        for n in wanted:
            c = int(n.split("_")[0])
            if d.crossing_count == c and DET[n] == det and alt == (n not in NON_ALTERNATING):
                found[n].append((jc, d))
    for n in sorted(wanted):
        classes = {jc for jc, _ in found[n]}
        if len(classes) != 1:
            raise SystemExit(f"{n}: {len(classes)} candidate Jones classes")
        jc, d = min(found[n], key=lambda x: str(x[1]))
        out[n] = Diagram(d.crossings, n)
    return dict(sorted(out.items(), key=lambda kv: (int(kv[0].split("_")[0]), int(kv[0].split("_")[1]))))


# -- signature and a2 ---------------------------------------------------------


def conway_a2(d: Diagram) -> int:
    """-V''(1)/6 with t = A^-4."""
    total = Fraction(0)
    for e, c in jones_normalized(d).terms():
        x = Fraction(-e, 4)
        total += c * x * (x - 1)
    a2 = -total / 6
    assert a2.denominator == 1
    return int(a2)


def gordon_litherland(d: Diagram, outer: int = 0) -> int:
    """sign(G) - mu over the shaded surface."""
    if d.crossing_count == 0:
        return 0
    g = goeritz_matrices(d, outer)
    # the classical Goeritz form is the negative of the displayed convention
    m = -np.array(g.goeritz, dtype=float)
    sign = 0
    if m.size:
        ev = np.linalg.eigvalsh(m)
        sign = int((ev > 1e-9).sum() - (ev < -1e-9).sum())
    mu = 0
    for i, x in enumerate(d.crossings):
        black = [s for s in range(4) if g.shading.colors[d.slot_region(i, s)] is Color.BLACK]
        s = black[0]
        # sector s is bounded by slots s and s+1; incoming slots are 0 and over_in
        incoming = {0, x.over_in}
        parallel = (s in incoming) == (((s + 1) % 4) in incoming)
        # type II: the strands bounding a shaded sector run in opposite senses
        if not parallel:
            mu += g.zeta[i]
    return sign - mu


def traczyk(d: Diagram) -> int:
    """s_A - n_+ - 1 for reduced alternating diagrams."""
    from regionum._kernels import state_histogram

    hist = state_histogram(d.pd())
    s_a = int(np.nonzero(hist[0])[0][0])
    n_plus = sum(1 for x in d.crossings if x.sign > 0)
    return s_a - n_plus - 1


def min_unknotting_set(d: Diagram) -> int:
    for t, _ in enumerate_unknotting_targets(d):
        return len(t)
    raise AssertionError("no unknotting crossing set")


def rows(diagrams: dict[str, Diagram]):
    for name, d in diagrams.items():
        g = goeritz_matrices(d)
        sig = gordon_litherland(d)
        assert sig == gordon_litherland(d, outer=1 if g.shading.colors[1] is Color.BLACK else 2), name
        if name not in NON_ALTERNATING:
            assert is_reduced(d) and sig == traczyk(d), (name, sig, traczyk(d))
        a2 = conway_a2(d)
        det = g.det
        assert det == DET[name], (name, det, DET[name])
        assert ((-1) ** (sig // 2) * det - (1 - 4 * a2)) % 16 == 0, (name, sig, det, a2)
        u = UNKNOTTING[name]
        assert abs(sig) // 2 <= u and g.mg2 <= u <= min_unknotting_set(d), name
        yield [name, str(d), u, sig, a2, det]


# hand-encoded drawings used as worked examples: (name, pd, u)
WORKED = [
    ("3_1_region_change", [[6, 3, 1, 4], [4, 1, 5, 2], [2, 5, 3, 6]], 1),
    ("6_3_checkerboard", [[12, 7, 1, 8], [6, 4, 7, 3], [2, 11, 3, 12], [8, 1, 9, 2],
                          [10, 6, 11, 5], [4, 10, 5, 9]], 1),
    ("9_35_pretzel", [[1, 12, 2, 13], [7, 18, 8, 1], [13, 6, 14, 7], [11, 2, 12, 3],
                      [5, 14, 6, 15], [17, 8, 18, 9], [15, 4, 16, 5], [3, 10, 4, 11],
                      [9, 16, 10, 17]], 3),
    ("3_1#3_1", [[1, 5, 2, 4], [3, 1, 4, 12], [11, 3, 12, 2], [7, 11, 8, 10], [9, 7, 10, 6],
                 [5, 9, 6, 8]], 2),
    ("8_1_heptagon", [[1, 12, 2, 13], [7, 15, 8, 14], [15, 7, 16, 6], [13, 16, 14, 1],
                      [11, 2, 12, 3], [3, 10, 4, 11], [9, 4, 10, 5], [5, 8, 6, 9]], 1),
]


def write_table(path: Path, body) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "pd", "unknotting_number", "signature", "conway_a2", "determinant"])
        for row in body:
            w.writerow(row)


def worked_rows():
    from regionum.diagram import from_pd

    for name, pd, u in WORKED:
        d = from_pd(pd, name)
        g = goeritz_matrices(d)
        sig = gordon_litherland(d)
        assert g.mg2 <= u and abs(sig) // 2 <= u <= min_unknotting_set(d), name
        yield [name, str(d), u, sig, conway_a2(d), g.det]


def main() -> None:
    data = Path(__file__).resolve().parents[1] / "src/regionum/data"
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=data / "knots9.csv")
    ap.add_argument("--worked", type=Path, default=data / "diagrams.csv")
    args = ap.parse_args()
    write_table(args.worked, worked_rows())
    diagrams = build_diagrams()
    classes = {jones_class(d) for d in diagrams.values()}
    assert len(classes) == len(diagrams) == 84
    for name, d in diagrams.items():
        c = int(name.split("_")[0])
        assert d.crossing_count == c, name
        alt_span = span(d) == 4 * c
        assert alt_span == (name not in NON_ALTERNATING), name
    write_table(args.out, rows(diagrams))
    print(f"wrote {len(diagrams)} knots to {args.out}")


if __name__ == "__main__":
    main()
