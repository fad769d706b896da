"""State-sum kernel for the Kauffman bracket.

Every one of the 2^c smoothing states is scored by its number of B-smoothings
and its number of loops; the kernel returns the histogram ``hist[nB, loops]``.
Edges of the diagram are the loop-graph nodes: each edge meets two crossing
slots, and each smoothing joins its slot to one neighbouring slot.

The numba kernel is used when numba imports and ``REGIONUM_NO_NUMBA`` is unset
or ``0``; otherwise a vectorised numpy kernel runs over chunks of states.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("REGIONUM_NO_NUMBA", "0") not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:
    njit = None

HAVE_NUMBA = njit is not None

# partner slot under the A smoothing (a-b, c-d) and the B smoothing (a-d, b-c)
_A_PARTNER = (1, 0, 3, 2)
_B_PARTNER = (3, 2, 1, 0)


def smoothing_tables(pd: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    """Per edge node: the crossing at each of its two ends, and its neighbours.

    ``cross[e, o]`` is the crossing at occurrence ``o`` of edge ``e``;
    ``nbr[e, o, b]`` is the edge joined there by smoothing ``b`` (0 = A, 1 = B).
    """
    n = 2 * len(pd)
    cross = np.full((n, 2), -1, dtype=np.int64)
    nbr = np.full((n, 2, 2), -1, dtype=np.int64)
    for i, slots in enumerate(pd):
        for s, lab in enumerate(slots):
            e = lab - 1
            o = 0 if cross[e, 0] < 0 else 1
            cross[e, o] = i
            nbr[e, o, 0] = slots[_A_PARTNER[s]] - 1
            nbr[e, o, 1] = slots[_B_PARTNER[s]] - 1
    return cross, nbr


def _hist_numpy(cross: np.ndarray, nbr: np.ndarray, chunk: int = 1 << 14) -> np.ndarray:
    n = cross.shape[0]
    c = n // 2
    hist = np.zeros((c + 1, n + 1), dtype=np.int64)
    ident = np.arange(n)
    shifts = np.arange(c, dtype=np.int64)
    for start in range(0, 1 << c, chunk):
        states = np.arange(start, min(start + chunk, 1 << c), dtype=np.int64)
        bits = (states[:, None] >> shifts) & 1
        n1 = np.where(bits[:, cross[:, 0]], nbr[:, 0, 1], nbr[:, 0, 0])
        n2 = np.where(bits[:, cross[:, 1]], nbr[:, 1, 1], nbr[:, 1, 0])
        rows = np.arange(len(states))[:, None]
        label = np.broadcast_to(ident, n1.shape).copy()
        while True:
            new = np.minimum(label, np.minimum(label[rows, n1], label[rows, n2]))
            if np.array_equal(new, label):
                break
            label = new
        loops = (label == ident).sum(axis=1)
        nb = bits.sum(axis=1)
        np.add.at(hist, (nb, loops), 1)
    return hist


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    @njit(cache=True, nogil=True)
    def _hist_numba(cross, nbr):
        n = cross.shape[0]
        c = n // 2
        hist = np.zeros((c + 1, n + 1), dtype=np.int64)
        parent = np.empty(n, dtype=np.int64)
        bits = np.empty(c, dtype=np.int64)
        for state in range(1 << c):
            nb = 0
            for i in range(c):
                bits[i] = (state >> i) & 1
                nb += bits[i]
            for e in range(n):
                parent[e] = e
            comps = n
            for e in range(n):
                for o in range(2):
                    f = nbr[e, o, bits[cross[e, o]]]
                    u = _find(parent, e)
                    v = _find(parent, f)
                    if u != v:
                        parent[u] = v
                        comps -= 1
            hist[nb, comps] += 1
        return hist


def state_histogram(pd: list[list[int]], use_numba: bool | None = None) -> np.ndarray:
    """``hist[nB, loops]`` over all smoothing states of the diagram ``pd``."""
    if not pd:
        # the crossingless circle: one state with a single loop
        return np.array([[0, 1]], dtype=np.int64)
    cross, nbr = smoothing_tables(pd)
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba and not HAVE_NUMBA:
        raise RuntimeError("numba kernel requested but numba is unavailable or disabled")
    return _hist_numba(cross, nbr) if use_numba else _hist_numpy(cross, nbr)
