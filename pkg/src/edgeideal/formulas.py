"""Closed-form Betti numbers and projective-dimension bounds.

Nothing here calls the Hochster sweep except :func:`verify_bound`, whose job
is to compare a bound against it.  Bounds are exact rationals and are compared
to the integer pdim through ``floor``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .bits import popcount
from .errors import InputError, PreconditionError
from .graph import (
    Graph,
    check_partition,
    complement,
    components_mask,
    is_chordal,
    is_claw_free,
    lattice_points,
)
from .hochster import BettiTable, betti_table_component_ideal, betti_table_graph, ind_subset_homology
from .homology import GF2, FieldSpec


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _require_chordal_complement(G: Graph):
    H = complement(G)
    cert = is_chordal(H)
    if not cert:
        raise PreconditionError(
            f"complement is not chordal: induced cycle {cert.witness_cycle}", cert.witness_cycle
        )
    return H


def betti_complement_chordal(G: Graph) -> BettiTable:
    """β_{j-1,j} = Σ_{|I|=j} (#components of Ḡ[I] − 1); all other β vanish."""
    H = _require_chordal_complement(G)
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    for W in range(1, 1 << G.n):
        j = popcount(W)
        if j < 2:
            continue
        c = len(components_mask(H.adj, W)) - 1
        if c:
            counts[(j - 1, j)] = counts.get((j - 1, j), 0) + c
    return BettiTable(G.n, counts)


def vertex_connectivity(H: Graph) -> int:
    return nx.node_connectivity(_to_nx(H)) if H.n > 1 else 0


def _to_nx(H: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(H.n))
    g.add_edges_from(H.edges)
    return g


def pdim_depth_complement_chordal(G: Graph) -> tuple[int, int]:
    """(pdim, depth) of S/I_G when Ḡ is chordal, via the connectivity of Ḡ.

    pdim is 0 if Ḡ is complete and n − κ(Ḡ) − 1 otherwise.
    """
    H = _require_chordal_complement(G)
    if H.m == H.n * (H.n - 1) // 2:
        return 0, G.n
    pdim = G.n - vertex_connectivity(H) - 1
    return pdim, G.n - pdim


def largest_disconnected_induced(H: Graph) -> int:
    """Largest |W| with H[W] disconnected (0 if none).  Exhaustive."""
    best = 0
    for W in range(1, 1 << H.n):
        if popcount(W) > best and len(components_mask(H.adj, W)) > 1:
            best = popcount(W)
    return best


def froberg_linear(G: Graph) -> tuple[bool, tuple[int, ...]]:
    """Whether I_G has a 2-linear resolution, i.e. Ḡ is chordal.

    The witness is a perfect elimination order of Ḡ or an induced cycle of
    length ≥ 4 in Ḡ.
    """
    cert = is_chordal(complement(G))
    if cert:
        return True, cert.elimination_order
    return False, cert.witness_cycle


def ferrers_betti(parts) -> BettiTable:
    """β_{i,i+1} = C(λ₁,i) + C(λ₂+1,i) + … + C(λ_m+m−1,i) − C(m,i+1)."""
    lam = check_partition(parts)
    m = len(lam)
    n = m + lam[0]
    entries = {(0, 0): 1}
    for i in range(1, n + 1):
        b = sum(binom(lam[r] + r, i) for r in range(m)) - binom(m, i + 1)
        if b:
            entries[(i, i + 1)] = b
    return BettiTable(n, entries)


def ferrers_betti_rectangles(parts) -> BettiTable:
    """Count l×w rectangles in the diagram: l rows, w columns, all cells present."""
    lam = check_partition(parts)
    m = len(lam)
    entries = {(0, 0): 1}
    for l in range(1, m + 1):
        for rows in combinations(range(m), l):
            width = lam[rows[-1]]
            for w in range(1, width + 1):
                for _cols in combinations(range(width), w):
                    key = (l + w - 1, l + w)
                    entries[key] = entries.get(key, 0) + 1
    return BettiTable(m + lam[0], entries)


# ---------------------------------------------------------------------------
# projective-dimension bounds
# ---------------------------------------------------------------------------

BOUND_KINDS = ("general", "max_degree", "claw_free", "z2_lattice", "component")


@dataclass
class BoundReport:
    kind: str
    params: dict
    bound: Fraction
    pdim: int | None = None
    holds: bool | None = None
    extra: dict = field(default_factory=dict)

    @property
    def floor(self) -> int:
        return math.floor(self.bound)

    @property
    def gap(self) -> int | None:
        return None if self.pdim is None else self.floor - self.pdim

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": {k: str(v) if isinstance(v, Fraction) else v for k, v in sorted(self.params.items())},
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "pdim": self.pdim,
            "holds": self.holds,
        }


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def pdim_bound(kind: str, **params) -> BoundReport:
    """Upper bound on pdim(S/I) for the named family.

    ``general(n, a, b)``: n(1−a) − b − 1, given a > 0.
    ``max_degree(n, d)``: n(1 − 1/2d) + 1/2d.
    ``claw_free(n, d)``: n(1 − 2/(3d+2)) + 2/(3d+2).
    ``z2_lattice(n)``: 5n/6 + 1/2.
    ``component(n, d, r)``: n(1 − 1/D) + 1 + 1/D with D = d − 1 + (d+1)/(r−1).
    """
    try:
        n = int(params["n"])
        if n < 0:
            raise InputError("n must be nonnegative")
        if kind == "general":
            a, b = _frac(params["a"]), _frac(params["b"])
            if a <= 0:
                raise InputError("general bound needs a > 0")
            value = n * (1 - a) - b - 1
        elif kind in ("max_degree", "claw_free", "component"):
            d = int(params["d"])
            if d < 1:
                raise InputError(f"{kind} bound needs d >= 1")
            if kind == "max_degree":
                a = Fraction(1, 2 * d)
                value = n * (1 - a) + a
            elif kind == "claw_free":
                a = Fraction(2, 3 * d + 2)
                value = n * (1 - a) + a
            else:
                r = int(params["r"])
                if r < 2:
                    raise InputError("component bound needs r >= 2")
                D = d - 1 + Fraction(d + 1, r - 1)
                value = n * (1 - 1 / D) + 1 + 1 / D
        elif kind == "z2_lattice":
            value = Fraction(5 * n, 6) + Fraction(1, 2)
        else:
            raise InputError(f"unknown bound kind {kind!r}; choose from {', '.join(BOUND_KINDS)}")
    except KeyError as exc:
        raise InputError(f"{kind} bound missing parameter {exc}") from None
    return BoundReport(kind, dict(params), Fraction(value))


def _hypothesis_holds(G: Graph, k: FieldSpec, a: Fraction, b: Fraction) -> bool:
    # dim H̃_t(Ind(G[W])) = 0 whenever t <= a|W| + b, for all W
    for W in range(1 << G.n):
        limit = a * popcount(W) + b
        for t, dim in ind_subset_homology(G.adj, W, k, True).items():
            if dim and t <= limit:
                return False
    return True


def verify_bound(G: Graph, kind: str, k: FieldSpec = GF2, *, r: int | None = None,
                 a=None, b=None, workers: int = 1, n_cap: int | None = None) -> BoundReport:
    """Check a bound's preconditions on ``G`` and compare it to the oracle pdim.

    ``max_degree``, ``claw_free`` and ``component`` use d = max degree of G.
    ``z2_lattice`` needs a graph from ``grid_subgraph``; ``claw_free`` checks
    claw-freeness; ``general`` checks its homological hypothesis for the given
    ``a``, ``b`` on every induced subgraph.
    """
    k = FieldSpec.parse(k)
    d = G.max_degree()
    if kind in ("max_degree", "claw_free", "component") and d < 1:
        raise PreconditionError(f"{kind} bound needs max degree >= 1")
    if kind == "max_degree":
        report = pdim_bound(kind, n=G.n, d=d)
    elif kind == "claw_free":
        if not is_claw_free(G):
            raise PreconditionError("graph is not claw-free")
        report = pdim_bound(kind, n=G.n, d=d)
    elif kind == "z2_lattice":
        if lattice_points(G) is None:
            raise PreconditionError("graph is not a recorded finite subgraph of the Z^2 lattice")
        report = pdim_bound(kind, n=G.n)
    elif kind == "component":
        if r is None:
            raise InputError("component bound needs r")
        report = pdim_bound(kind, n=G.n, d=d, r=r)
    elif kind == "general":
        if a is None or b is None:
            raise InputError("general bound needs a and b")
        a, b = _frac(a), _frac(b)
        report = pdim_bound(kind, n=G.n, a=a, b=b)
        if not _hypothesis_holds(G, k, a, b):
            raise PreconditionError("connectivity hypothesis fails on some induced subgraph")
    else:
        raise InputError(f"unknown bound kind {kind!r}")

    if kind == "component":
        table = betti_table_component_ideal(G, r, k, workers=workers, n_cap=n_cap)
    else:
        table = betti_table_graph(G, k, workers=workers, n_cap=n_cap)
    report.pdim = table.pdim
    report.holds = table.pdim <= report.floor
    return report


__all__ = [
    "BOUND_KINDS",
    "BoundReport",
    "betti_complement_chordal",
    "binom",
    "ferrers_betti",
    "ferrers_betti_rectangles",
    "froberg_linear",
    "largest_disconnected_induced",
    "pdim_bound",
    "pdim_depth_complement_chordal",
    "vertex_connectivity",
    "verify_bound",
]
