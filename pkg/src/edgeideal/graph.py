"""Finite simple graphs on vertices ``0..n-1`` and the constructions built on them.

Adjacency is held as one bitmask per vertex, so induced subgraphs, neighborhood
containment and component scans are all a handful of integer operations.  Most
hot loops elsewhere in the package work directly on ``(adj, mask)`` pairs and
only materialize a :class:`Graph` at API boundaries.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .bits import compact, iter_bits, lowest, mask_of, members, popcount
from .errors import InputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    # origin[i] is the vertex of the parent graph that became vertex i
    origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        adj = [0] * self.n
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge {(u, v)} for n={self.n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels must have one entry per vertex")
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
        """Build a graph, normalizing each edge to ``(min, max)``.

        Loops and endpoints outside ``0..n-1`` are rejected; repeated edges
        collapse to one.
        """
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {(u, v)} out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm), tuple(labels) if labels is not None else None)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in iter_bits(adj[u]) if u < v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(a) for a in self.adj), default=0)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# mask-level helpers
# ---------------------------------------------------------------------------

def _check_vertices(G: Graph, W: Iterable[int]) -> int:
    mask = 0
    for v in W:
        if not (0 <= v < G.n):
            raise InputError(f"vertex {v} out of range for n={G.n}")
        mask |= 1 << v
    return mask


def induced_adj(adj: Sequence[int], mask: int) -> tuple[int, ...]:
    """Adjacency of the subgraph induced on ``mask``, compacted to 0..|mask|-1."""
    return tuple(compact(adj[v] & mask, mask) for v in iter_bits(mask))


def components_mask(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, by least member."""
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = lowest(frontier)
            frontier &= frontier - 1
            new = adj[v] & rest & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_independent_mask(adj: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if adj[v] & mask:
            return False
    return True


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """``G[W]`` relabeled to ``0..|W|-1`` in increasing original order.

    The result's ``origin`` maps each new vertex back to its vertex in ``G``.
    """
    mask = _check_vertices(G, W)
    keep = members(mask)
    adj = induced_adj(G.adj, mask)
    H = Graph.from_adjacency(adj)
    labels = tuple(G.labels[v] for v in keep) if G.labels is not None else None
    return Graph(H.n, H.edges, labels, keep)


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    """``G \\ X``, relabeled like :func:`induced_subgraph`."""
    xmask = _check_vertices(G, X)
    return induced_subgraph(G, iter_bits(G.vertex_mask & ~xmask))


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    adj = [full & ~(1 << v) & ~G.adj[v] for v in range(G.n)]
    H = Graph.from_adjacency(adj)
    return Graph(H.n, H.edges, G.labels)


def neighborhood(G: Graph, v: int, closed: bool = False) -> frozenset[int]:
    if not (0 <= v < G.n):
        raise InputError(f"vertex {v} out of range for n={G.n}")
    nb = G.adj[v] | (1 << v if closed else 0)
    return frozenset(iter_bits(nb))


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in components_mask(G.adj, G.vertex_mask)]


def is_forest(G: Graph) -> bool:
    return G.m == G.n - len(components_mask(G.adj, G.vertex_mask))


def is_claw_free(G: Graph) -> bool:
    """No vertex has three pairwise nonadjacent neighbors."""
    for v in range(G.n):
        nb = members(G.adj[v])
        for a, b, c in combinations(nb, 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return False
    return True


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChordalityCertificate:
    chordal: bool
    elimination_order: tuple[int, ...] | None = None
    witness_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.chordal


def _max_cardinality_search(adj: Sequence[int], n: int) -> list[int]:
    weight = [0] * n
    numbered = 0
    picked = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not numbered >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        picked.append(best)
        numbered |= 1 << best
        for u in iter_bits(adj[best] & ~numbered):
            weight[u] += 1
    picked.reverse()
    return picked


def check_elimination_order(adj: Sequence[int], order: Sequence[int]) -> bool:
    """Each vertex's neighbors later in ``order`` must form a clique."""
    later = 0
    for v in reversed(order):
        nb = adj[v] & later
        for u in iter_bits(nb):
            if (nb & ~(1 << u)) & ~adj[u]:
                return False
        later |= 1 << v
    return True


def check_chordless_cycle(adj: Sequence[int], cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            adjacent_on_cycle = b == a + 1 or (a == 0 and b == k - 1)
            if bool(adj[cycle[a]] >> cycle[b] & 1) != adjacent_on_cycle:
                return False
    return True


def _shortest_path(adj: Sequence[int], allowed: int, s: int, t: int) -> list[int] | None:
    prev = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for u in iter_bits(adj[v] & allowed):
            if u not in prev:
                prev[u] = v
                queue.append(u)
    return None


def _find_chordless_cycle(adj: Sequence[int], n: int) -> tuple[int, ...] | None:
    # Every chordless cycle of length >= 4 passes through some v whose two cycle
    # neighbors a, b are nonadjacent; the rest of the cycle is then a shortest
    # a-b path avoiding the other neighbors of v.
    everything = (1 << n) - 1
    for v in range(n):
        for a, b in combinations(members(adj[v]), 2):
            if adj[a] >> b & 1:
                continue
            allowed = everything & ~(1 << v) & ~(adj[v] & ~(1 << a) & ~(1 << b))
            path = _shortest_path(adj, allowed, a, b)
            if path is not None:
                return (v, *path)
    return None


def is_chordal(G: Graph) -> ChordalityCertificate:
    """Decide chordality and return a checkable certificate.

    Chordal graphs come with a perfect elimination ordering; others with an
    induced chordless cycle of length at least four.  Both are re-verified
    before being returned.
    """
    order = _max_cardinality_search(G.adj, G.n)
    if check_elimination_order(G.adj, order):
        return ChordalityCertificate(True, elimination_order=tuple(order))
    cycle = _find_chordless_cycle(G.adj, G.n)
    assert cycle is not None and check_chordless_cycle(G.adj, cycle), "chordality search inconsistent"
    return ChordalityCertificate(False, witness_cycle=cycle)


# ---------------------------------------------------------------------------
# folds and dismantling
# ---------------------------------------------------------------------------

def _find_fold_mask(adj: Sequence[int], mask: int) -> tuple[int, int] | None:
    for v in iter_bits(mask):
        nv = adj[v] & mask
        for w in iter_bits(mask):
            if w != v and not (adj[w] & mask & ~nv):
                return v, w
    return None


def find_fold(G: Graph) -> tuple[int, int] | None:
    """Least pair ``(v, w)`` with ``N(w) ⊆ N(v)``; deleting ``v`` keeps Ind(G)'s homotopy type."""
    return _find_fold_mask(G.adj, G.vertex_mask)


def fold_reduce_mask(adj: Sequence[int], mask: int) -> int:
    """Fold ``mask`` down until no containment ``N(w) ⊆ N(v)`` remains.

    Unlike :func:`fold_reduce` this does not restart from the least pair after
    each deletion; any fold order gives a homotopy equivalent result.
    """
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            nv = adj[v] & mask
            rest = mask & ~(1 << v)
            for w in iter_bits(rest):
                if not (adj[w] & mask & ~nv):
                    mask = rest
                    changed = True
                    break
    return mask


def fold_reduce(G: Graph) -> tuple[Graph, list[int]]:
    mask = G.vertex_mask
    removed = []
    while (pair := _find_fold_mask(G.adj, mask)) is not None:
        v = pair[0]
        removed.append(v)
        mask &= ~(1 << v)
    return induced_subgraph(G, iter_bits(mask)), removed


def is_dismantlable(G: Graph) -> bool:
    """Reflexive dismantlability: greedily remove ``v`` with ``N[v] ⊆ N[w]``.

    Removal order does not matter for whether a single vertex is reached
    (dominated-vertex elimination is confluent up to isomorphism), so the
    greedy sweep decides the property.
    """
    if G.n == 0:
        return False
    closed = [G.adj[v] | (1 << v) for v in range(G.n)]
    mask = G.vertex_mask
    progress = True
    while popcount(mask) > 1 and progress:
        progress = False
        for v in iter_bits(mask):
            nv = closed[v] & mask
            if any(w != v and not (nv & ~closed[w]) for w in iter_bits(mask)):
                mask &= ~(1 << v)
                progress = True
                break
    return popcount(mask) == 1


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(r: int) -> Graph:
    if r < 3:
        raise InputError(f"cycle needs r >= 3, got {r}")
    return Graph.from_edges(r, [(i, (i + 1) % r) for i in range(r)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    off = G.n
    return Graph(G.n + H.n, G.edges | frozenset((u + off, v + off) for u, v in H.edges))


def grid_subgraph(points: Iterable[Sequence[int]]) -> Graph:
    """Induced subgraph of the Z^2 lattice on a finite point set.

    Vertices are the points in sorted order; labels record ``"x,y"``.
    """
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for (x, y), i in index.items():
        for q in ((x + 1, y), (x, y + 1)):
            if q in index:
                edges.append((i, index[q]))
    return Graph.from_edges(len(pts), edges, labels=[f"{x},{y}" for x, y in pts])


def lattice_points(G: Graph) -> list[tuple[int, int]] | None:
    """Recover the lattice points of a graph built by :func:`grid_subgraph`.

    Returns None unless the labels parse as distinct points and the edges are
    exactly the unit-distance pairs.
    """
    if G.labels is None:
        return None
    try:
        pts = [tuple(int(c) for c in lab.split(",")) for lab in G.labels]
    except ValueError:
        return None
    if any(len(p) != 2 for p in pts) or len(set(pts)) != len(pts):
        return None
    expected = {
        (i, j)
        for i, j in combinations(range(G.n), 2)
        if abs(pts[i][0] - pts[j][0]) + abs(pts[i][1] - pts[j][1]) == 1
    }
    return pts if expected == set(G.edges) else None


def whisker(G: Graph, S: Iterable[int]) -> Graph:
    """Attach a pendant vertex to each vertex of ``S``.

    New vertices are appended in increasing order of the vertex they hang on.
    """
    base = members(_check_vertices(G, S))
    new_edges = [(v, G.n + i) for i, v in enumerate(base)]
    return Graph(G.n + len(base), G.edges | frozenset(new_edges))


def whisker_all(G: Graph) -> Graph:
    return whisker(G, range(G.n))


def add_ear(G: Graph, e: Sequence[int]) -> Graph:
    """Glue a triangle along edge ``e``: one new vertex adjacent to both ends."""
    u, v = sorted((int(e[0]), int(e[1])))
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise InputError(f"{(u, v)} is not an edge")
    x = G.n
    return Graph(G.n + 1, G.edges | {(u, x), (v, x)})


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(p) for p in parts)
    if not lam:
        raise InputError("partition needs at least one part")
    if any(p < 1 for p in lam):
        raise InputError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InputError(f"partition must be weakly decreasing: {lam}")
    return lam


def ferrers_graph(parts: Sequence[int]) -> Graph:
    """Bipartite graph of a Ferrers diagram.

    Rows come first (vertices ``0..m-1``), then columns (``m..m+λ₁-1``); row
    ``i`` meets column ``j`` when ``j < λᵢ`` (0-based).
    """
    lam = check_partition(parts)
    m = len(lam)
    edges = [(i, m + j) for i, li in enumerate(lam) for j in range(li)]
    return Graph(m + lam[0], frozenset(edges))


def partitions(total: int, largest: int | None = None):
    """Partitions of ``total`` as weakly decreasing tuples."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first, *rest)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Send vertex ``v`` to ``perm[v]``."""
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def vertex_subset(G: Graph, W: Iterable[int]) -> int:
    """Validated bitmask for a vertex collection of ``G``."""
    return _check_vertices(G, W)


__all__ = [
    "ChordalityCertificate",
    "Graph",
    "add_ear",
    "check_partition",
    "complement",
    "complete",
    "complete_bipartite",
    "components_mask",
    "connected_components",
    "cycle",
    "delete_vertices",
    "disjoint_union",
    "empty_graph",
    "ferrers_graph",
    "find_fold",
    "fold_reduce",
    "fold_reduce_mask",
    "grid_subgraph",
    "induced_subgraph",
    "is_chordal",
    "is_claw_free",
    "is_dismantlable",
    "is_forest",
    "lattice_points",
    "mask_of",
    "neighborhood",
    "partitions",
    "path",
    "relabel",
    "whisker",
    "whisker_all",
]
