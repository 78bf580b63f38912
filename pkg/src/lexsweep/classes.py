"""Graph-class machinery: recognition, forbidden patterns, generators.

Cocomparability recognition follows the repeated-sweep route (a graph is
cocomparability iff some of the first n+1 sweeps is umbrella-free); two
brute-force oracles over the characterization back it up at small sizes.
Generators emit graphs together with a provenance witness.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .certify import is_umbrella_free
from .graph import Graph, GraphError, complement, find_induced, girth, Embedding
from .lexcycle import SizeGuardError, SweepEngine
from .search import MIN_INDEX, Ordering, lbfs

ORDERING_ORACLE_MAX_N = 9
ORIENTATION_ORACLE_MAX_EDGES = 20

TAG_COCOMP = "cocomparability"
TAG_P2P3BAR_FREE = "p2p3bar-free"
TAG_DIAMOND_FREE = "diamond-free"
TAG_GIRTH_GE_4 = "girth-ge-4"
TAG_INTERVAL = "interval"
TAG_THEOREM = "theorem-3.1-applicable"

ALL_TAGS = frozenset(
    {
        TAG_COCOMP,
        TAG_P2P3BAR_FREE,
        TAG_DIAMOND_FREE,
        TAG_GIRTH_GE_4,
        TAG_INTERVAL,
        TAG_THEOREM,
    }
)

PATTERN_NAMES = ("p2p3bar", "diamond", "c4", "domino", "triangle")


class GenerationExhausted(RuntimeError):
    """Rejection sampling ran out of budget."""

    def __init__(self, predicate: str, draws: int) -> None:
        super().__init__(
            f"no sample matching {predicate!r} within {draws} draws"
        )
        self.predicate = predicate
        self.draws = draws


# -- named catalog -----------------------------------------------------------


def _path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def _cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _complete(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def k_ladder(k: int) -> Graph:
    """Two rails of k+1 vertices joined by rungs.

    Vertex labels: a=0, b=1, a_j=2j, b_j=2j+1 for j=1..k.
    """
    if k < 1:
        raise GraphError(f"k-ladder needs k >= 1, got {k}")
    edges = [(0, 1), (0, 2), (1, 3)]
    for j in range(1, k + 1):
        edges.append((2 * j, 2 * j + 1))  # rung a_j b_j
    for j in range(1, k):
        edges.append((2 * j, 2 * j + 2))  # rail a_j a_{j+1}
        edges.append((2 * j + 1, 2 * j + 3))  # rail b_j b_{j+1}
    return Graph(2 * k + 2, edges)


def p2p3bar() -> Graph:
    # complement of (one edge 01) + (path 2-3-4): non-edges {01, 23, 34}
    non = {(0, 1), (2, 3), (3, 4)}
    edges = [
        (i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) not in non
    ]
    return Graph(5, edges)


def diamond() -> Graph:
    # K4 minus the edge 23
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def domino() -> Graph:
    # two C4s, 0-1-2-3-0 and 2-3-4-5-2, sharing the edge 23
    return Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (2, 5)])


def named(name: str, k: Optional[int] = None) -> Graph:
    """Bit-exact catalog constructions."""
    parametric = {"path": _path, "cycle": _cycle, "complete": _complete, "k_ladder": k_ladder}
    fixed = {"p2p3bar": p2p3bar, "diamond": diamond, "domino": domino}
    if name in parametric:
        if k is None:
            raise GraphError(f"catalog graph {name!r} needs a parameter k")
        return parametric[name](k)
    if name in fixed:
        if k is not None:
            raise GraphError(f"catalog graph {name!r} takes no parameter")
        return fixed[name]()
    raise GraphError(f"unknown catalog name: {name!r}")


def pattern_graph(which: str) -> Graph:
    if which == "p2p3bar":
        return p2p3bar()
    if which == "diamond":
        return diamond()
    if which == "c4":
        return _cycle(4)
    if which == "domino":
        return domino()
    if which == "triangle":
        return _complete(3)
    raise GraphError(f"unknown pattern name: {which!r}")


# -- recognition -------------------------------------------------------------


def is_cocomparability(g: Graph) -> Tuple[bool, Optional[Ordering]]:
    """Repeated-sweep recognition.

    Runs one LBFS then n further LBFS+ sweeps; true iff some sweep is
    umbrella-free, returning the first such ordering as witness.
    """
    n = g.n
    if n == 0:
        return True, Ordering(())
    eng = SweepEngine(g)
    cur = lbfs(g, 0, MIN_INDEX).seq
    for _ in range(n + 1):
        sigma = Ordering(cur)
        if is_umbrella_free(g, sigma):
            return True, sigma
        cur = eng.step(cur)
    return False, None


def _oracle_orderings(g: Graph) -> bool:
    """Backtracking over vertex orderings with umbrella-prefix pruning."""
    n = g.n
    if n <= 2:
        return True
    masks = [0] * n
    for v in range(n):
        for w in g.neighbors(v):
            masks[v] |= 1 << w
    # before[v]: prefix vertices placed before v that are non-adjacent to v
    before = [0] * n
    prefix_mask = 0
    prefix: List[int] = []

    def extend() -> bool:
        nonlocal prefix_mask
        if len(prefix) == n:
            return True
        for z in range(n):
            bit = 1 << z
            if prefix_mask & bit:
                continue
            # violation: some y in prefix with yz non-edge whose earlier
            # non-neighbours meet N(z)
            mz = masks[z]
            ok = True
            for y in prefix:
                if (mz >> y) & 1:
                    continue
                if before[y] & mz:
                    ok = False
                    break
            if not ok:
                continue
            before[z] = prefix_mask & ~mz
            prefix.append(z)
            prefix_mask |= bit
            if extend():
                return True
            prefix.pop()
            prefix_mask &= ~bit
        return False

    return extend()


def _oracle_orientations(g: Graph) -> bool:
    """Backtracking over transitive orientations of the complement."""
    cbar = complement(g)
    edges = list(cbar.edges())
    cadj = cbar.adjsets
    n = g.n
    out = [0] * n  # out[v]: bitmask of w with arc v->w
    inn = [0] * n

    def consistent(a: int, b: int) -> bool:
        # new arc a->b; check triples through both endpoints
        for w in range(n):
            wb = 1 << b
            if (inn[a] >> w) & 1:  # w->a->b
                if b not in cadj[w]:
                    return False
                if (inn[w] >> b) & 1:  # assigned b->w
                    return False
            if (out[b] >> w) & 1:  # a->b->w
                if w not in cadj[a]:
                    return False
                if (out[w] >> a) & 1:  # assigned w->a
                    return False
        return True

    def assign(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if consistent(a, b):
                out[a] |= 1 << b
                inn[b] |= 1 << a
                if assign(i + 1):
                    return True
                out[a] &= ~(1 << b)
                inn[b] &= ~(1 << a)
        return False

    return assign(0)


def cocomp_oracle(g: Graph) -> bool:
    """Brute-force cocomparability decision behind size guards."""
    cbar_edges = g.n * (g.n - 1) // 2 - g.m
    if g.n <= ORDERING_ORACLE_MAX_N:
        return _oracle_orderings(g)
    if cbar_edges <= ORIENTATION_ORACLE_MAX_EDGES:
        return _oracle_orientations(g)
    raise SizeGuardError(
        f"cocomp_oracle guards: n <= {ORDERING_ORACLE_MAX_N} or complement "
        f"edges <= {ORIENTATION_ORACLE_MAX_EDGES} (got n={g.n}, "
        f"complement edges={cbar_edges})"
    )


def pattern_free(g: Graph, which: str) -> Tuple[bool, Optional[Embedding]]:
    """True iff g has no induced copy of the named pattern."""
    emb = find_induced(g, pattern_graph(which))
    return (emb is None), emb


def is_interval(g: Graph) -> bool:
    if not pattern_free(g, "c4")[0]:
        return False
    return is_cocomparability(g)[0]


def classify(g: Graph) -> FrozenSet[str]:
    tags: Set[str] = set()
    cocomp, _ = is_cocomparability(g)
    if cocomp:
        tags.add(TAG_COCOMP)
    p2p3_free = pattern_free(g, "p2p3bar")[0]
    if p2p3_free:
        tags.add(TAG_P2P3BAR_FREE)
    if pattern_free(g, "diamond")[0]:
        tags.add(TAG_DIAMOND_FREE)
    c4_free = pattern_free(g, "c4")[0]
    if girth(g) >= 4:
        tags.add(TAG_GIRTH_GE_4)
    if cocomp and c4_free:
        tags.add(TAG_INTERVAL)
    if cocomp and p2p3_free:
        tags.add(TAG_THEOREM)
    return frozenset(tags)


# -- generators --------------------------------------------------------------


@dataclass(frozen=True)
class PosetSpec:
    """A strict partial order as a transitively closed relation."""

    n: int
    relation: FrozenSet[Tuple[int, int]]

    def __post_init__(self) -> None:
        rel = self.relation
        for a, b in rel:
            if a == b:
                raise GraphError(f"irreflexivity violated: ({a}, {b})")
            if (b, a) in rel:
                raise GraphError(f"acyclicity violated: ({a}, {b}) and ({b}, {a})")
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise GraphError(
                        f"transitivity violated: ({a}, {b}), ({c}, {d})"
                    )


@dataclass(frozen=True)
class ClassSample:
    """A generated graph with its provenance witness."""

    graph: Graph
    witness_ordering: Optional[Ordering] = None
    interval_model: Optional[Tuple[Tuple[float, float], ...]] = None
    poset: Optional[PosetSpec] = None


def gen_poset_cocomp(n: int, p: float, seed: int) -> ClassSample:
    """Complement of the comparability graph of a random poset.

    A uniform linear order on the ids is sampled, each forward pair
    becomes an arc with probability p, and the arcs are transitively
    closed. The linear order is a linear extension and hence an
    umbrella-free ordering of the complement.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"probability out of range: {p}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    direct = [0] * n  # bitmask of direct successors, by vertex id
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                direct[order[i]] |= 1 << order[j]
    # close transitively in reverse topological order
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        v = order[i]
        r = direct[v]
        d = direct[v]
        while d:
            w = (d & -d).bit_length() - 1
            d &= d - 1
            r |= reach[w]
        reach[v] = r
    relation = []
    comp_edges = []
    for v in range(n):
        r = reach[v]
        while r:
            w = (r & -r).bit_length() - 1
            r &= r - 1
            relation.append((v, w))
            comp_edges.append((v, w))
    comparability = Graph(n, comp_edges)
    return ClassSample(
        graph=complement(comparability),
        witness_ordering=Ordering(order),
        poset=PosetSpec(n, frozenset(relation)),
    )


def gen_interval(n: int, seed: int) -> ClassSample:
    """Random interval graph from 2n distinct endpoints."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative: {n}")
    rng = random.Random(seed)
    endpoints = rng.sample(range(10 * max(2 * n, 1) ** 2 + 10), 2 * n)
    model = []
    for v in range(n):
        a, b = endpoints[2 * v], endpoints[2 * v + 1]
        model.append((float(min(a, b)), float(max(a, b))))
    edges = []
    for u in range(n):
        lu, hu = model[u]
        for v in range(u + 1, n):
            lv, hv = model[v]
            if lu <= hv and lv <= hu:
                edges.append((u, v))
    order = sorted(range(n), key=lambda v: (model[v][0], v))
    return ClassSample(
        graph=Graph(n, edges),
        witness_ordering=Ordering(order),
        interval_model=tuple(model),
    )


def gen_rejection(
    n: int,
    p: float,
    seed: int,
    predicate: str,
    budget: int = 1000,
) -> ClassSample:
    """Draw poset-based samples until classify(graph) contains predicate."""
    if predicate not in ALL_TAGS:
        raise ValueError(
            f"unknown class tag {predicate!r}; expected one of {sorted(ALL_TAGS)}"
        )
    rng = random.Random(seed)
    for draw in range(budget):
        sub_seed = rng.randrange(2**63)
        sample = gen_poset_cocomp(n, p, sub_seed)
        if predicate in classify(sample.graph):
            return sample
    raise GenerationExhausted(predicate, budget)
