"""LBFS engines and tie-breaking.

Two engines share one output contract: a partition-refinement engine
(`lbfs`, linear-time up to tie-break scans) and a literal label-list
engine (`lbfs_naive`) kept as the oracle. `lbfs_plus` is the
rightmost-in-prior tie-breaking wrapper.

Every tie-break mode reduces to a static priority permutation: within a
set of tied vertices the one with the smallest priority value wins.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np
from typing import Iterable, List, Optional, Sequence, Union

from .graph import Graph, GraphError


class OrderingError(ValueError):
    """A sequence that is not a permutation of the expected vertex set."""


class Ordering:
    """A permutation of 0..n-1, indexable both ways.

    ``seq[i]`` is the vertex at position i (0-based); ``pos[v]`` is the
    position of vertex v. ``seq`` and ``pos`` are mutually inverse.
    """

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Iterable[int]) -> None:
        s = tuple(seq)
        n = len(s)
        pos = [-1] * n
        for i, v in enumerate(s):
            if not (0 <= v < n) or pos[v] != -1:
                raise OrderingError(f"not a permutation of 0..{n - 1}: {s}")
            pos[v] = i
        self.seq = s
        self.pos = tuple(pos)

    def __len__(self) -> int:
        return len(self.seq)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def last(self) -> int:
        return self.seq[-1]

    def reverse(self) -> "Ordering":
        return Ordering(reversed(self.seq))

    def precedes(self, u: int, v: int) -> bool:
        return self.pos[u] < self.pos[v]

    def __repr__(self) -> str:
        return f"Ordering{self.seq}"


@dataclass(frozen=True)
class MinIndex:
    """Break ties toward the smallest vertex id (library default)."""


@dataclass(frozen=True)
class PriorRightmost:
    """Break ties toward the vertex rightmost in a prior ordering."""

    prior: Ordering


@dataclass(frozen=True)
class Seeded:
    """Break ties by a seeded uniform priority permutation."""

    seed: int


TieBreak = Union[MinIndex, PriorRightmost, Seeded]

MIN_INDEX = MinIndex()


def _priority(tb: TieBreak, n: int) -> List[int]:
    if isinstance(tb, MinIndex):
        return list(range(n))
    if isinstance(tb, PriorRightmost):
        if len(tb.prior) != n:
            raise OrderingError(
                f"prior ordering covers {len(tb.prior)} vertices, graph has {n}"
            )
        pos = tb.prior.pos
        return [n - 1 - pos[v] for v in range(n)]
    if isinstance(tb, Seeded):
        prio = list(range(n))
        random.Random(tb.seed).shuffle(prio)
        return prio
    raise TypeError(f"unknown tie-break: {tb!r}")


def _lbfs_core(adj: Sequence[Sequence[int]], n: int, start: int, prio: Sequence[int]):
    # Ordered partition refinement over the array `arr`. Unnumbered
    # vertices occupy arr[p:], tiled by classes in label order; visiting
    # u splits each class into neighbours-first / non-neighbours.
    arr = list(range(n))
    loc = list(range(n))
    if start != 0:
        arr[0], arr[start] = arr[start], arr[0]
        loc[0], loc[start] = loc[start], loc[0]
    cls = [1] * n
    cls[start] = 0
    cstart = [0, 1]
    cend = [1, n]
    out = []
    for p in range(n):
        head = cls[arr[p]]
        # select the minimum-priority vertex of the head class
        u = arr[p]
        bp = prio[u]
        bi = p
        for i in range(p + 1, cend[head]):
            v = arr[i]
            if prio[v] < bp:
                u = v
                bp = prio[v]
                bi = i
        if bi != p:
            arr[bi] = arr[p]
            loc[arr[bi]] = bi
            arr[p] = u
            loc[u] = p
        cstart[head] = p + 1
        out.append(u)
        moved = {}
        touched = []
        for w in adj[u]:
            if loc[w] <= p:
                continue
            c = cls[w]
            mv = moved.get(c)
            if mv is None:
                mv = 0
                touched.append(c)
            j = cstart[c] + mv
            i = loc[w]
            if i != j:
                x = arr[j]
                arr[j] = w
                arr[i] = x
                loc[w] = j
                loc[x] = i
            moved[c] = mv + 1
        for c in touched:
            mv = moved[c]
            if mv < cend[c] - cstart[c]:
                nc = len(cstart)
                ns = cstart[c]
                ne = ns + mv
                cstart.append(ns)
                cend.append(ne)
                for idx in range(ns, ne):
                    cls[arr[idx]] = nc
                cstart[c] = ne
    return out


def lbfs(g: Graph, start: int, tb: TieBreak = MIN_INDEX) -> Ordering:
    """Partition-refinement LBFS from ``start`` with tie-break ``tb``."""
    if not (0 <= start < g.n):
        raise GraphError(f"start vertex out of range: {start}")
    prio = _priority(tb, g.n)
    if g.n + g.m >= _BIG_GRAPH_THRESHOLD:
        out = _lbfs_core_fast(g, start, prio)
        if out is not None:
            return Ordering(out)
    return Ordering(_lbfs_core(g.adj, g.n, start, prio))


def lbfs_naive(g: Graph, start: int, tb: TieBreak = MIN_INDEX) -> Ordering:
    """Literal label-sequence LBFS; the reference oracle for `lbfs`."""
    if not (0 <= start < g.n):
        raise GraphError(f"start vertex out of range: {start}")
    n = g.n
    prio = _priority(tb, n)
    labels: List[List[int]] = [[] for _ in range(n)]
    labels[start] = [n]
    unnumbered = set(range(n))
    adjsets = g.adjsets
    out = []
    for step in range(1, n + 1):
        u = max(unnumbered, key=lambda v: (labels[v], -prio[v]))
        unnumbered.discard(u)
        out.append(u)
        stamp = n - step
        for w in adjsets[u]:
            if w in unnumbered:
                labels[w].append(stamp)
    return Ordering(out)


def lbfs_plus(g: Graph, prior: Ordering) -> Ordering:
    """LBFS started at the prior's last vertex, ties toward prior-rightmost."""
    if len(prior) != g.n:
        raise OrderingError(
            f"prior ordering covers {len(prior)} vertices, graph has {g.n}"
        )
    if g.n == 0:
        return Ordering(())
    return lbfs(g, prior.last(), PriorRightmost(prior))


def lmpn(g: Graph, sigma: Ordering, y: int, z: int) -> Optional[int]:
    """Leftmost (in sigma) private neighbour of y with respect to z."""
    if y == z:
        raise GraphError("lmpn requires y != z")
    zset = g.adjsets[z]
    pos = sigma.pos
    best = None
    best_pos = None
    for w in g.neighbors(y):
        if w == z or w in zset:
            continue
        if best_pos is None or pos[w] < best_pos:
            best = w
            best_pos = pos[w]
    return best


def lbfs_reachable(g: Graph, sigma: Ordering) -> bool:
    """Whether some start + tie-break sequence of generic LBFS yields sigma.

    Greedy simulation: sigma is reachable iff at every step its next
    vertex is tied for the lexicographically largest label.
    """
    n = g.n
    if len(sigma) != n:
        raise OrderingError("ordering does not cover the vertex set")
    if n == 0:
        return True
    labels: List[List[int]] = [[] for _ in range(n)]
    labels[sigma.seq[0]] = [n]
    unnumbered = set(range(n))
    adjsets = g.adjsets
    for step, u in enumerate(sigma.seq, start=1):
        lu = labels[u]
        for v in unnumbered:
            if labels[v] > lu:
                return False
        unnumbered.discard(u)
        stamp = n - step
        for w in adjsets[u]:
            if w in unnumbered:
                labels[w].append(stamp)
    return True


# -- large-graph fast path ---------------------------------------------------

_BIG_GRAPH_THRESHOLD = 20000
_NUMBA_KERNEL = None
_NUMBA_FAILED = False


def _lbfs_core_fast(g: Graph, start: int, prio: Sequence[int]):
    """Numba-compiled core for big graphs; None when numba is unavailable."""
    global _NUMBA_KERNEL, _NUMBA_FAILED
    if _NUMBA_FAILED:
        return None
    if _NUMBA_KERNEL is None:
        try:
            from numba import njit
        except ImportError:
            _NUMBA_FAILED = True
            return None
        _NUMBA_KERNEL = njit(cache=True)(_core_typed)

    indptr, indices = _csr(g)
    out = _NUMBA_KERNEL(indptr, indices, np.int64(start), np.asarray(prio, dtype=np.int64))
    return out.tolist()


def _csr(g: Graph):
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(g.adj[v])
    indices = np.empty(indptr[-1], dtype=np.int64)
    k = 0
    for v in range(g.n):
        row = g.adj[v]
        indices[k : k + len(row)] = row
        k += len(row)
    return indptr, indices


def _core_typed(indptr, indices, start, prio):
    # same algorithm as _lbfs_core, expressed over flat int64 arrays
    n = indptr.shape[0] - 1
    arr = np.arange(n, dtype=np.int64)
    loc = np.arange(n, dtype=np.int64)
    if start != 0:
        arr[0], arr[start] = arr[start], arr[0]
        loc[0], loc[start] = loc[start], loc[0]
    cap = 2 * n + 4
    cls = np.ones(n, dtype=np.int64)
    cls[start] = 0
    cstart = np.empty(cap, dtype=np.int64)
    cend = np.empty(cap, dtype=np.int64)
    cstart[0] = 0
    cend[0] = 1
    cstart[1] = 1
    cend[1] = n
    nclasses = 2
    moved = np.zeros(cap, dtype=np.int64)
    touched = np.empty(cap, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    for p in range(n):
        head = cls[arr[p]]
        u = arr[p]
        bp = prio[u]
        bi = p
        for i in range(p + 1, cend[head]):
            v = arr[i]
            if prio[v] < bp:
                u = v
                bp = prio[v]
                bi = i
        if bi != p:
            arr[bi] = arr[p]
            loc[arr[bi]] = bi
            arr[p] = u
            loc[u] = p
        cstart[head] = p + 1
        out[p] = u
        ntouched = 0
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if loc[w] <= p:
                continue
            c = cls[w]
            mv = moved[c]
            if mv == 0:
                touched[ntouched] = c
                ntouched += 1
            j = cstart[c] + mv
            i = loc[w]
            if i != j:
                x = arr[j]
                arr[j] = w
                arr[i] = x
                loc[w] = j
                loc[x] = i
            moved[c] = mv + 1
        # reset moved and split touched classes
        for t in range(ntouched):
            c = touched[t]
            mv = moved[c]
            moved[c] = 0
            if mv < cend[c] - cstart[c]:
                nc = nclasses
                nclasses += 1
                ns = cstart[c]
                ne = ns + mv
                cstart[nc] = ns
                cend[nc] = ne
                for idx in range(ns, ne):
                    cls[arr[idx]] = nc
                cstart[c] = ne
    return out
