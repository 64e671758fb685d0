"""Facet-represented simplicial complexes.

A complex is stored as its ground-set size and the tuple of its facets, each a
vertex bitmask.  Facets are kept as an antichain in canonical order (size, then
lexicographic), so two complexes are equal exactly when their facet tuples and
ground sizes are.  The void complex has no facets at all; the complex ``{∅}``
has the single facet ``0``.

Faces are produced on demand; nothing stores the full face lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .bits import compact, iter_bits, mask_of, members, popcount, sort_key, submasks
from .errors import InputError
from .graph import Graph, components_mask


def normalize_facets(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop duplicates and non-maximal sets, then sort canonically."""
    by_size = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in by_size:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=sort_key))


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, ground: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        masks = []
        for F in facets:
            m = mask_of(F)
            if m >> ground:
                raise InputError(f"facet {sorted(F)} not inside ground set of size {ground}")
            masks.append(m)
        return cls(ground, normalize_facets(masks))

    @classmethod
    def from_masks(cls, ground: int, masks: Iterable[int]) -> SimplicialComplex:
        return cls(ground, normalize_facets(masks))

    @classmethod
    def void(cls, ground: int = 0) -> SimplicialComplex:
        return cls(ground, ())

    @classmethod
    def empty(cls, ground: int = 0) -> SimplicialComplex:
        """The complex ``{∅}``."""
        return cls(ground, (0,))

    @classmethod
    def simplex(cls, n_vertices: int) -> SimplicialComplex:
        """Full simplex on ``n_vertices`` vertices (``{∅}`` when that is 0)."""
        return cls(n_vertices, ((1 << n_vertices) - 1,))

    # -- basic queries ------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and (by convention) for the void complex."""
        return max((popcount(F) for F in self.facets), default=0) - 1

    @property
    def vertex_mask(self) -> int:
        v = 0
        for F in self.facets:
            v |= F
        return v

    def facet_list(self) -> list[tuple[int, ...]]:
        return [members(F) for F in self.facets]

    def contains(self, face: Iterable[int] | int) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & F == m for F in self.facets)

    def is_pure(self) -> bool:
        return len({popcount(F) for F in self.facets}) <= 1

    def face_masks(self) -> set[int]:
        faces: set[int] = set()
        for F in self.facets:
            if F in faces:
                continue
            faces.update(submasks(F))
        return faces

    def faces_by_size(self) -> list[list[int]]:
        """``out[s]`` lists the faces with ``s`` vertices in canonical order."""
        if self.is_void:
            return []
        out: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for f in self.face_masks():
            out[popcount(f)].append(f)
        for layer in out:
            layer.sort(key=sort_key)
        return out

    def all_faces(self) -> Iterator[tuple[int, ...]]:
        """Faces as sorted vertex tuples, by dimension then lexicographically."""
        for layer in self.faces_by_size():
            for f in layer:
                yield members(f)

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, f_1, ...]``."""
        return [len(layer) for layer in self.faces_by_size()]

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(ground={self.ground}, void)"
        return f"SimplicialComplex(ground={self.ground}, facets={self.facet_list()})"

    def to_dict(self) -> dict:
        return {"ground": self.ground, "facets": [list(F) for F in self.facet_list()]}

    @classmethod
    def from_dict(cls, d: dict) -> SimplicialComplex:
        try:
            return cls.from_facets(int(d["ground"]), d["facets"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed complex JSON: {exc}") from None


# ---------------------------------------------------------------------------
# maximal cliques / independent sets
# ---------------------------------------------------------------------------

def maximal_cliques_mask(adj: Sequence[int], mask: int) -> list[int]:
    """Maximal cliques of the graph induced on ``mask`` (Bron–Kerbosch, Tomita pivot)."""
    out: list[int] = []
    if not mask:
        return [0]

    def expand(R: int, P: int, X: int):
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = max(iter_bits(PX), key=lambda u: popcount(P & adj[u]))
        for v in iter_bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    expand(0, mask, 0)
    return out


def complement_adj(adj: Sequence[int], n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~adj[v] & ~(1 << v) for v in range(n))


def independence_complex(G: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of ``G``."""
    cadj = complement_adj(G.adj, G.n)
    return SimplicialComplex.from_masks(G.n, maximal_cliques_mask(cadj, G.vertex_mask))


def clique_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_masks(G.n, maximal_cliques_mask(G.adj, G.vertex_mask))


def component_complex(G: Graph, r: int) -> SimplicialComplex:
    """Sets ``W`` whose induced components all have fewer than ``r`` vertices.

    Its Stanley–Reisner ideal is the r-component ideal of ``G``: minimal
    nonfaces are the vertex sets of connected induced r-vertex subgraphs.
    ``r = 2`` gives the independence complex.
    """
    if r < 2:
        raise InputError(f"component complex needs r >= 2, got {r}")

    def ok(W: int) -> bool:
        return all(popcount(c) < r for c in components_mask(G.adj, W))

    # faces are closed downward, so grow greedily from every face reached
    facets = []
    seen = {0}
    stack = [0]
    while stack:
        W = stack.pop()
        grown = False
        for v in range(G.n):
            bit = 1 << v
            if W & bit:
                continue
            U = W | bit
            if ok(U):
                grown = True
                if U not in seen:
                    seen.add(U)
                    stack.append(U)
        if not grown:
            facets.append(W)
    return SimplicialComplex.from_masks(G.n, facets)


# ---------------------------------------------------------------------------
# link, deletion, restriction
# ---------------------------------------------------------------------------

def deletion_masks(facets: Sequence[int], smask: int) -> tuple[int, ...]:
    """Deletion without relabeling (vertices keep their original indices)."""
    return normalize_facets(F & ~smask for F in facets)


def link_masks(facets: Sequence[int], smask: int) -> tuple[int, ...]:
    """Link without relabeling; empty tuple if ``smask`` is not a face."""
    return normalize_facets(F & ~smask for F in facets if F & smask == smask)


def _face_mask(D: SimplicialComplex, sigma: Iterable[int] | int) -> int:
    smask = sigma if isinstance(sigma, int) else mask_of(sigma)
    if smask >> D.ground:
        raise InputError("face has vertices outside the ground set")
    if not D.contains(smask):
        raise InputError(f"{members(smask)} is not a face")
    return smask


def _relabel(ground_keep: int, facets: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex.from_masks(popcount(ground_keep), (compact(F, ground_keep) for F in facets))


def deletion(D: SimplicialComplex, sigma) -> SimplicialComplex:
    """Faces disjoint from ``sigma``; ground set ``ground ∖ sigma`` relabeled in order."""
    smask = _face_mask(D, sigma)
    keep = ((1 << D.ground) - 1) & ~smask
    return _relabel(keep, deletion_masks(D.facets, smask))


def link(D: SimplicialComplex, sigma) -> SimplicialComplex:
    """Faces τ disjoint from σ with τ ∪ σ a face.

    The ground set becomes the link's own vertices, relabeled in order.  For
    ``D = Ind(G)`` and a vertex ``v`` this is exactly ``Ind(G ∖ N[v])``.
    """
    smask = _face_mask(D, sigma)
    lk = link_masks(D.facets, smask)
    keep = 0
    for F in lk:
        keep |= F
    return _relabel(keep, lk)


def induced_subcomplex(D: SimplicialComplex, W: Iterable[int] | int) -> SimplicialComplex:
    wmask = W if isinstance(W, int) else mask_of(W)
    if wmask >> D.ground:
        raise InputError("restriction set leaves the ground set")
    if D.is_void:
        return SimplicialComplex.void(popcount(wmask))
    return _relabel(wmask, (F & wmask for F in D.facets))


def skeleton(D: SimplicialComplex, k: int) -> SimplicialComplex:
    """All faces of dimension at most ``k``."""
    if k < -1:
        raise InputError(f"skeleton dimension must be >= -1, got {k}")
    if D.is_void:
        return D
    out = set()
    for F in D.facets:
        if popcount(F) <= k + 1:
            out.add(F)
        else:
            for c in combinations(members(F), k + 1):
                out.add(mask_of(c))
    return SimplicialComplex.from_masks(D.ground, out)


def pure_part_above(D: SimplicialComplex, m: int) -> SimplicialComplex:
    """Subcomplex generated by the facets of dimension at least ``m``."""
    return SimplicialComplex(D.ground, tuple(F for F in D.facets if popcount(F) - 1 >= m))


def join(D1: SimplicialComplex, D2: SimplicialComplex) -> SimplicialComplex:
    """Join, with ``D2``'s ground set shifted past ``D1``'s."""
    ground = D1.ground + D2.ground
    if D1.is_void or D2.is_void:
        return SimplicialComplex.void(ground)
    return SimplicialComplex.from_masks(
        ground, (F | (H << D1.ground) for F in D1.facets for H in D2.facets)
    )


def is_pure(D: SimplicialComplex) -> bool:
    return D.is_pure()


def all_faces(D: SimplicialComplex) -> Iterator[tuple[int, ...]]:
    return D.all_faces()


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    tris = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
        (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
    ]
    return SimplicialComplex.from_facets(6, [[v - 1 for v in t] for t in tris])


def flag_graph(D: SimplicialComplex) -> Graph | None:
    """The graph ``G`` with ``Ind(G) = D``, or None if ``D`` is not of that form.

    ``G``'s edges are the 2-element nonfaces; ``D`` must also have every ground
    vertex as a face and agree with ``Ind(G)`` everywhere else.
    """
    if D.is_void or D.vertex_mask != (1 << D.ground) - 1:
        return None
    faces = D.face_masks()
    edges = [
        (u, v) for u, v in combinations(range(D.ground), 2)
        if (1 << u | 1 << v) not in faces
    ]
    G = Graph.from_edges(D.ground, edges)
    return G if independence_complex(G) == D else None
