"""The Betti generating function B(G; x, y) = Σ β_{i,j} x^{j-i} y^i and its reductions.

The reduction identities take an ``evaluate`` callable for the smaller graphs
on the right-hand side; by default that is the Hochster sweep, which is how
the tests cross-check each identity.  :func:`genfun_forest` instead feeds the
leaf recursion back into itself and never touches homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bits import iter_bits, members, popcount
from .errors import InputError, InvariantViolation, PreconditionError
from .graph import Graph, components_mask, delete_vertices, is_forest
from .hochster import BettiTable, betti_table_graph
from .homology import GF2, QQ, FieldSpec


@dataclass(frozen=True)
class BettiPolynomial:
    """Sparse polynomial in x, y with integer coefficients; ``(p, q) -> c`` means c·x^p·y^q."""

    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {pq: c for pq, c in self.terms.items() if c})

    @classmethod
    def one(cls) -> BettiPolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1) -> BettiPolynomial:
        return cls({(p, q): c})

    @classmethod
    def from_table(cls, T: BettiTable) -> BettiPolynomial:
        return cls({(j - i, i): b for (i, j), b in T.entries.items()})

    def to_table(self, n: int) -> BettiTable:
        self.require_nonnegative()
        return BettiTable(n, {(q, p + q): c for (p, q), c in self.terms.items()})

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: BettiPolynomial) -> BettiPolynomial:
        out = dict(self.terms)
        for pq, c in other.terms.items():
            out[pq] = out.get(pq, 0) + c
        return BettiPolynomial(out)

    def __neg__(self) -> BettiPolynomial:
        return BettiPolynomial({pq: -c for pq, c in self.terms.items()})

    def __sub__(self, other: BettiPolynomial) -> BettiPolynomial:
        return self + (-other)

    def __mul__(self, other: BettiPolynomial | int) -> BettiPolynomial:
        if isinstance(other, int):
            return BettiPolynomial({pq: c * other for pq, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                key = (p1 + p2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return BettiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BettiPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        out = BettiPolynomial.one()
        for _ in range(e):
            out = out * self
        return out

    @property
    def x_degree(self) -> int:
        return max((p for p, _ in self.terms), default=0)

    @property
    def y_degree(self) -> int:
        return max((q for _, q in self.terms), default=0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def require_nonnegative(self) -> BettiPolynomial:
        if not self.is_nonnegative():
            raise InvariantViolation(f"negative coefficient in final Betti polynomial {self}")
        return self

    def coefficient(self, p: int, q: int) -> int:
        return self.terms.get((p, q), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (p, q), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0], t[0][1])):
            mono = [f for f in (_power("x", p), _power("y", q)) if f]
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            s += f" {sign} {text}"
        return s

    def to_dict(self) -> dict:
        return {"terms": [{"p": p, "q": q, "c": c} for (p, q), c in sorted(self.terms.items())]}


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


ONE = BettiPolynomial.one()
XY = BettiPolynomial.monomial(1, 1)
Y = BettiPolynomial.monomial(0, 1)


Evaluator = Callable[[Graph], BettiPolynomial]


def genfun_oracle(G: Graph, k: FieldSpec = GF2, **kw) -> BettiPolynomial:
    return BettiPolynomial.from_table(betti_table_graph(G, k, **kw))


def _default(evaluate: Evaluator | None) -> Evaluator:
    return evaluate if evaluate is not None else genfun_oracle


def _vertex(G: Graph, v: int) -> int:
    if not 0 <= v < G.n:
        raise InputError(f"vertex {v} out of range for n={G.n}")
    return v


# ---------------------------------------------------------------------------
# reduction identities
# ---------------------------------------------------------------------------

def reduce_isolated_vertex(G: Graph, v: int, evaluate: Evaluator | None = None) -> BettiPolynomial:
    """B(G) = B(G − v) for an isolated vertex v."""
    if G.adj[_vertex(G, v)]:
        raise PreconditionError(f"vertex {v} is not isolated")
    return _default(evaluate)(delete_vertices(G, [v]))


def reduce_isolated_edge(G: Graph, u: int, v: int, evaluate: Evaluator | None = None) -> BettiPolynomial:
    """B(G) = (1 + xy)·B(G − {u, v}) for an isolated edge uv."""
    _vertex(G, u), _vertex(G, v)
    if G.adj[u] != 1 << v or G.adj[v] != 1 << u:
        raise PreconditionError(f"{(u, v)} is not an isolated edge")
    return (ONE + XY) * _default(evaluate)(delete_vertices(G, [u, v]))


def reduce_dominated_set(G: Graph, v: int, U: Iterable[int], evaluate: Evaluator | None = None) -> BettiPolynomial:
    """B(G) = B(G − v) + (1+y)^|U| (B(G − U) − B(G − U − v)) when N(v) ⊆ N(u) for u ∈ U."""
    _vertex(G, v)
    U = sorted(set(U))
    if not U:
        raise PreconditionError("dominating set U must be nonempty")
    for u in U:
        _vertex(G, u)
        if u == v:
            raise PreconditionError("v must not lie in U")
        if G.adj[v] & ~G.adj[u]:
            raise PreconditionError(f"N({v}) is not contained in N({u})")
    ev = _default(evaluate)
    correction = ev(delete_vertices(G, U)) - ev(delete_vertices(G, U + [v]))
    return ev(delete_vertices(G, [v])) + (ONE + Y) ** len(U) * correction


def reduce_leaf(G: Graph, v: int, evaluate: Evaluator | None = None) -> BettiPolynomial:
    """B(G) = B(G − v) + xy(1+y)^{|N(w)|−1} B(G − N[w]) for a leaf v with neighbor w."""
    _vertex(G, v)
    if popcount(G.adj[v]) != 1:
        raise PreconditionError(f"vertex {v} is not a leaf")
    w = members(G.adj[v])[0]
    ev = _default(evaluate)
    closed_w = [w, *members(G.adj[w])]
    return ev(delete_vertices(G, [v])) + XY * (ONE + Y) ** (popcount(G.adj[w]) - 1) * ev(delete_vertices(G, closed_w))


# ---------------------------------------------------------------------------
# forests
# ---------------------------------------------------------------------------

def _pick_leaf(G: Graph, rule: str) -> int | None:
    comps = [c for c in components_mask(G.adj, G.vertex_mask) if popcount(c) >= 3]
    if not comps:
        return None
    comp = comps[0] if rule == "first" else comps[-1]
    leaves = [v for v in iter_bits(comp) if popcount(G.adj[v]) == 1]
    return leaves[0] if rule == "first" else leaves[-1]


def genfun_forest(G: Graph, leaf_rule: str = "first") -> BettiPolynomial:
    """Exact B(G) for a forest from the leaf recursion alone.

    Isolated vertices drop out, isolated edges contribute (1 + xy), and any
    larger component is split at a leaf.  ``leaf_rule`` ("first" or "last")
    only changes which leaf is used; the polynomial is the same.
    """
    if not is_forest(G):
        raise InputError("genfun_forest needs an acyclic graph")
    memo: dict[tuple, BettiPolynomial] = {}

    def rec(H: Graph) -> BettiPolynomial:
        key = (H.n, tuple(sorted(H.edges)))
        if key in memo:
            return memo[key]
        isolated = [v for v in range(H.n) if not H.adj[v]]
        if isolated:
            out = reduce_isolated_vertex(H, isolated[0], rec)
        else:
            pair = next(((u, members(H.adj[u])[0]) for u in range(H.n)
                         if popcount(H.adj[u]) == 1 and popcount(H.adj[members(H.adj[u])[0]]) == 1), None)
            if pair is not None:
                out = reduce_isolated_edge(H, pair[0], pair[1], rec)
            elif H.n == 0:
                out = ONE
            else:
                out = reduce_leaf(H, _pick_leaf(H, leaf_rule), rec)
        memo[key] = out
        return out

    if G.n == 0:
        return ONE
    return rec(G).require_nonnegative()


def reg_pdim_forest(G: Graph) -> tuple[int, int]:
    """(x-degree, y-degree) of B(G) for a forest via the max-recursions at a leaf.

    reg(G) = max(reg(G − v), reg(G − N[w]) + 1) and
    pdim(G) = max(pdim(G − v), pdim(G − N[w]) + |N(w)|).
    """
    if not is_forest(G):
        raise InputError("reg_pdim_forest needs an acyclic graph")

    def rec(H: Graph) -> tuple[int, int]:
        leaf = next((v for v in range(H.n) if popcount(H.adj[v]) == 1), None)
        if leaf is None:
            return 0, 0
        w = members(H.adj[leaf])[0]
        r1, p1 = rec(delete_vertices(H, [leaf]))
        r2, p2 = rec(delete_vertices(H, [w, *members(H.adj[w])]))
        return max(r1, r2 + 1), max(p1, p2 + popcount(H.adj[w]))

    return rec(G)


def field_independence_probe(G: Graph, primes: Sequence[int] = (2, 3), **kw) -> bool:
    """True when the Betti tables over each listed prime and over Q coincide."""
    base = betti_table_graph(G, QQ, **kw)
    return all(betti_table_graph(G, FieldSpec(p), **kw) == base for p in primes)


__all__ = [
    "BettiPolynomial",
    "field_independence_probe",
    "genfun_forest",
    "genfun_oracle",
    "reduce_dominated_set",
    "reduce_isolated_edge",
    "reduce_isolated_vertex",
    "reduce_leaf",
    "reg_pdim_forest",
]
