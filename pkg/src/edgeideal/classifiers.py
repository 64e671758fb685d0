"""Decision procedures for vertex decomposability, shellability and (sequential) CM.

All searches are exact.  Vertex-decomposability returns a shedding tree and
shellability a facet order; both can be replayed with the ``verify_*``
functions, and :func:`audit_chain` checks the implications

    vertex-decomposable ⇒ shellable ⇒ sequentially CM

on a given complex, reporting any violation as an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .bits import iter_bits, members, popcount
from .complex import (
    SimplicialComplex,
    deletion_masks,
    link_masks,
    maximal_cliques_mask,
    complement_adj,
    normalize_facets,
)
from .errors import CapExceeded, InvariantViolation
from .graph import Graph
from .homology import GF2, FieldSpec, homology_from_layers

SHELL_CAP = 12

Witness = dict[str, Any]


# ---------------------------------------------------------------------------
# vertex decomposability
# ---------------------------------------------------------------------------

def _is_shedding(facets: tuple[int, ...], v: int) -> bool:
    fset = set(facets)
    return all(F in fset for F in deletion_masks(facets, 1 << v))


def _vd_search(facets: tuple[int, ...], memo: dict) -> Witness | None:
    if len(facets) <= 1:
        return {"simplex": [list(members(F)) for F in facets]}
    if facets in memo:
        return memo[facets]
    memo[facets] = None  # cycle guard; recursion strictly shrinks the vertex set anyway
    result = None
    vertices = 0
    for F in facets:
        vertices |= F
    for v in iter_bits(vertices):
        if not _is_shedding(facets, v):
            continue
        bit = 1 << v
        wd = _vd_search(deletion_masks(facets, bit), memo)
        if wd is None:
            continue
        wl = _vd_search(link_masks(facets, bit), memo)
        if wl is None:
            continue
        result = {"vertex": v, "deletion": wd, "link": wl}
        break
    memo[facets] = result
    return result


def is_vertex_decomposable(D: SimplicialComplex) -> tuple[bool, Witness | None]:
    """Exact search for a shedding-vertex decomposition.

    Simplices, including ``{∅}`` and the void complex, are the base case.
    Vertices keep their original labels throughout the witness.
    """
    w = _vd_search(D.facets, {})
    return w is not None, w


def verify_vd_witness(D: SimplicialComplex, witness: Witness) -> bool:
    def check(facets: tuple[int, ...], w: Witness) -> bool:
        if "simplex" in w:
            return len(facets) <= 1 and [list(members(F)) for F in facets] == w["simplex"]
        v = w["vertex"]
        bit = 1 << v
        if not any(F & bit for F in facets) or not _is_shedding(facets, v):
            return False
        return check(deletion_masks(facets, bit), w["deletion"]) and check(link_masks(facets, bit), w["link"])

    return witness is not None and check(D.facets, witness)


def dominated_pair_shedding(G: Graph) -> tuple[int, int] | None:
    """Least ``(u, v)`` with ``N[u] ⊆ N[v]``, u ≠ v; then v sheds Ind(G)."""
    return _dominated_pair(G.adj, G.vertex_mask)


def _dominated_pair(adj: Sequence[int], mask: int) -> tuple[int, int] | None:
    for u in iter_bits(mask):
        nu = (adj[u] & mask) | (1 << u)
        for v in iter_bits(adj[u] & mask):
            if not nu & ~((adj[v] & mask) | (1 << v)):
                return u, v
    return None


def _graph_sheds(adj: Sequence[int], mask: int, v: int) -> bool:
    # v sheds Ind(G) iff every maximal independent set of G - v meets N(v)
    rest = mask & ~(1 << v)
    nv = adj[v] & mask
    cadj = complement_adj([a & rest for a in adj], len(adj))
    return all(S & nv for S in maximal_cliques_mask(cadj, rest))


def is_vertex_decomposable_graph(G: Graph) -> tuple[bool, Witness | None]:
    """Vertex decomposability of Ind(G), recursing on induced subgraphs.

    A dominated pair gives a shedding vertex for free; other vertices are
    tried only if that branch fails.  The witness has the same shape as
    :func:`is_vertex_decomposable`'s and replays against ``Ind(G)``.
    """
    adj = G.adj
    memo: dict[int, Witness | None] = {}

    def simplex_witness(mask: int) -> Witness:
        return {"simplex": [list(members(mask))]}

    def rec(mask: int) -> Witness | None:
        if all(not adj[v] & mask for v in iter_bits(mask)):
            return simplex_witness(mask)
        if mask in memo:
            return memo[mask]
        memo[mask] = None
        tried = set()
        candidates = []
        pair = _dominated_pair(adj, mask)
        if pair is not None:
            candidates.append(pair[1])
        candidates += [v for v in iter_bits(mask) if adj[v] & mask]
        result = None
        for v in candidates:
            if v in tried:
                continue
            tried.add(v)
            if v != (pair[1] if pair else None) and not _graph_sheds(adj, mask, v):
                continue
            wd = rec(mask & ~(1 << v))
            if wd is None:
                continue
            wl = rec(mask & ~(1 << v) & ~adj[v])
            if wl is None:
                continue
            result = {"vertex": v, "deletion": wd, "link": wl}
            break
        memo[mask] = result
        return result

    w = rec(G.vertex_mask)
    return w is not None, w


# ---------------------------------------------------------------------------
# shellability
# ---------------------------------------------------------------------------

def _extends(prefix: Sequence[int], F: int) -> bool:
    # (∪ prefix) ∩ F̄ must be pure of dimension dim F - 1: its facets are the
    # maximal sets among G ∩ F, all of which must have |F| - 1 elements.
    if not prefix:
        return True
    target = popcount(F) - 1
    inter = normalize_facets(G & F for G in prefix)
    return all(popcount(I) == target for I in inter)


def is_shellable(D: SimplicialComplex, cap: int = SHELL_CAP) -> tuple[bool, list[list[int]] | None]:
    """Exact search for a (nonpure) shelling order.

    Whether a facet can come next depends only on the set already placed,
    so the search is a reachability question over subsets of facets.
    Above ``cap`` facets it refuses rather than guessing.
    """
    facets = D.facets
    t = len(facets)
    if t > cap:
        raise CapExceeded(f"shellability search refused: {t} facets exceeds cap {cap}")
    if t <= 1:
        return True, [list(members(F)) for F in facets]
    full = (1 << t) - 1
    dead: set[int] = set()

    def dfs(used: int, order: list[int]) -> list[int] | None:
        if used == full:
            return order
        if used in dead:
            return None
        prefix = [facets[i] for i in order]
        for i in range(t):
            if not used >> i & 1 and _extends(prefix, facets[i]):
                got = dfs(used | 1 << i, order + [i])
                if got is not None:
                    return got
        dead.add(used)
        return None

    order = dfs(0, [])
    if order is None:
        return False, None
    return True, [list(members(facets[i])) for i in order]


def verify_shelling(D: SimplicialComplex, order: Sequence[Sequence[int]]) -> bool:
    masks = [sum(1 << v for v in F) for F in order]
    if sorted(masks) != sorted(D.facets) or len(set(masks)) != len(masks):
        return False
    return all(_extends(masks[:k], masks[k]) for k in range(len(masks)))


# ---------------------------------------------------------------------------
# Cohen–Macaulay and sequential variants
# ---------------------------------------------------------------------------

def _layers(facets: Sequence[int]) -> list[list[int]]:
    faces: set[int] = set()
    for F in facets:
        if F in faces:
            continue
        sub = F
        while True:
            faces.add(sub)
            if not sub:
                break
            sub = (sub - 1) & F
    layers: list[list[int]] = []
    for f in faces:
        s = popcount(f)
        while len(layers) <= s:
            layers.append([])
        layers[s].append(f)
    return layers


def _faces_largest_first(facets: Sequence[int]) -> list[int]:
    return sorted({f for layer in _layers(facets) for f in layer}, key=popcount, reverse=True)


def _dim(facets: Sequence[int]) -> int:
    return max((popcount(F) for F in facets), default=0) - 1


def is_cohen_macaulay(D: SimplicialComplex, k: FieldSpec = GF2) -> bool:
    """Reisner's criterion: every link (including of ∅) has homology only in top degree."""
    k = FieldSpec.parse(k)
    if D.is_void:
        return True
    if not D.is_pure():
        return False
    for face in _faces_largest_first(D.facets):
        lk = link_masks(D.facets, face)
        top = _dim(lk)
        dims = homology_from_layers(_layers(lk), k)
        if any(b and d < top for d, b in dims.items()):
            return False
    return True


def _sequentially_acyclic(facets: Sequence[int], k: FieldSpec) -> bool:
    top = _dim(facets)
    # Δ^{<m>} only changes when m crosses a facet dimension, and the vanishing
    # range r < m only grows with m, so checking m = each facet dimension suffices.
    for m in sorted({popcount(F) - 1 for F in facets}):
        if m < 0 or m > top:
            continue
        part = [F for F in facets if popcount(F) - 1 >= m]
        dims = homology_from_layers(_layers(part), k)
        if any(b and d < m for d, b in dims.items()):
            return False
    return True


def is_sequentially_acyclic(D: SimplicialComplex, k: FieldSpec = GF2) -> bool:
    k = FieldSpec.parse(k)
    return D.is_void or _sequentially_acyclic(D.facets, k)


def is_sequentially_cm(D: SimplicialComplex, k: FieldSpec = GF2) -> bool:
    """Every link, including Δ itself as the link of ∅, is sequentially acyclic."""
    k = FieldSpec.parse(k)
    if D.is_void:
        return True
    for face in _faces_largest_first(D.facets):
        if not _sequentially_acyclic(link_masks(D.facets, face), k):
            return False
    return True


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    pure: bool
    vertex_decomposable: bool
    vd_witness: Witness | None
    shellable: bool | None
    shelling_order: list[list[int]] | None
    cm: dict[str, bool] = field(default_factory=dict)
    sequentially_cm: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "pure": self.pure,
            "vertex_decomposable": {"value": self.vertex_decomposable, "witness": self.vd_witness},
            "shellable": {"value": self.shellable, "order": self.shelling_order},
            "cm": dict(sorted(self.cm.items())),
            "sequentially_cm": dict(sorted(self.sequentially_cm.items())),
            "violations": self.violations,
        }


def audit_chain(D: SimplicialComplex, k: FieldSpec | Sequence[FieldSpec] = GF2,
                checks: Sequence[str] = ("vd", "shellable", "cm", "seqcm"),
                shell_cap: int = SHELL_CAP, strict: bool = True) -> ClassificationReport:
    """Run the requested classifiers and cross-check the implication chain.

    ``checks`` selects from ``vd``, ``shellable``, ``cm``, ``seqcm``.  With
    ``strict`` a violated implication raises :class:`InvariantViolation`;
    otherwise it is listed in the report.
    """
    fields = [FieldSpec.parse(k)] if isinstance(k, (FieldSpec, str, int)) else [FieldSpec.parse(f) for f in k]
    vd, vdw = is_vertex_decomposable(D) if "vd" in checks else (None, None)
    if "vd" in checks and vdw is not None and not verify_vd_witness(D, vdw):
        raise InvariantViolation("vertex-decomposition witness failed replay")
    shell, order = None, None
    if "shellable" in checks:
        try:
            shell, order = is_shellable(D, shell_cap)
        except CapExceeded:
            shell = None
        if shell and not verify_shelling(D, order):
            raise InvariantViolation("shelling order failed replay")
    cm = {str(f): is_cohen_macaulay(D, f) for f in fields} if "cm" in checks else {}
    seq = {str(f): is_sequentially_cm(D, f) for f in fields} if "seqcm" in checks else {}
    report = ClassificationReport(D.is_pure(), vd, vdw, shell, order, cm, seq)

    if vd and shell is False:
        report.violations.append("vertex-decomposable but not shellable")
    for f, s in seq.items():
        if (vd or shell) and not s:
            report.violations.append(f"shellable/VD but not sequentially CM over {f}")
    for f, c in cm.items():
        if c and not seq.get(f, True):
            report.violations.append(f"CM but not sequentially CM over {f}")
        if report.pure and (vd or shell) and not c:
            report.violations.append(f"pure shellable but not CM over {f}")
    if report.violations and strict:
        raise InvariantViolation("; ".join(report.violations))
    return report
