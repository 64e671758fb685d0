"""Acceptance checks: closed forms and classifiers against the Hochster oracle.

Each ``check_*`` function returns a :class:`CheckResult`.  Sample sizes and
seeds are arguments so tests can shrink them; the defaults are the sizes the
``verify`` command runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from .classifiers import (
    is_cohen_macaulay,
    is_sequentially_cm,
    is_vertex_decomposable,
    verify_vd_witness,
)
from .complex import (
    SimplicialComplex,
    clique_complex,
    component_complex,
    independence_complex,
    projective_plane,
    skeleton,
)
from .errors import PreconditionError
from .formulas import (
    betti_complement_chordal,
    ferrers_betti,
    ferrers_betti_rectangles,
    pdim_depth_complement_chordal,
    verify_bound,
)
from .generators import (
    random_chordal,
    random_claw_free,
    random_complex,
    random_forest,
    random_graph,
    random_lattice_graph,
    random_partition,
    random_subset,
    shuffled,
)
from .genfun import (
    genfun_forest,
    genfun_oracle,
    reduce_dominated_set,
    reduce_isolated_edge,
    reduce_isolated_vertex,
    reduce_leaf,
    reg_pdim_forest,
    field_independence_probe,
)
from .graph import (
    Graph,
    add_ear,
    complement,
    complete,
    complete_bipartite,
    cycle,
    delete_vertices,
    disjoint_union,
    empty_graph,
    ferrers_graph,
    grid_subgraph,
    is_chordal,
    partitions,
    path,
    whisker,
    whisker_all,
)
from .hochster import BettiTable, betti_table, betti_table_graph, summarize
from .homology import GF2, GF3, QQ, FieldSpec, boundary_matrix, euler_characteristic, reduced_homology
from .io import from_graph6

PROBE_FIELDS = (GF2, GF3, FieldSpec(5), QQ)


@dataclass
class CheckResult:
    number: int
    name: str
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def fail(self, message: str) -> None:
        self.mismatches.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2} {self.name}: {self.checked} cases, {len(self.mismatches)} mismatches"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "notes": self.notes,
        }


def small_graph_corpus() -> list[Graph]:
    """Every graph on 1..7 vertices, one per isomorphism class."""
    text = resources.files("edgeideal").joinpath("data/graphs_upto7.g6").read_text()
    return [from_graph6(line) for line in text.split()]


def _table_str(T: BettiTable) -> str:
    return str(T.nonzero())


# ---------------------------------------------------------------------------
# 1. Ferrers graphs
# ---------------------------------------------------------------------------

def check_ferrers(max_cells: int = 8, sample: int = 10, sample_cells: int = 12, seed: int = 1,
                  fields=(GF2, QQ)) -> CheckResult:
    res = CheckResult(1, "ferrers")
    rng = random.Random(seed)
    cases = [lam for total in range(1, max_cells + 1) for lam in partitions(total)]
    cases += [random_partition(rng.randint(max_cells + 1, sample_cells), rng)
              for _ in range(sample if sample_cells > max_cells else 0)]
    for lam in cases:
        closed = ferrers_betti(lam)
        rect = ferrers_betti_rectangles(lam)
        if closed != rect:
            res.fail(f"{lam}: binomial {_table_str(closed)} != rectangles {_table_str(rect)}")
        G = ferrers_graph(lam)
        for k in fields:
            oracle = betti_table_graph(G, k)
            if oracle != closed:
                res.fail(f"{lam} over {k}: oracle {_table_str(oracle)} != formula {_table_str(closed)}")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 2. linear resolutions
# ---------------------------------------------------------------------------

def check_froberg(graphs: list[Graph] | None = None) -> CheckResult:
    res = CheckResult(2, "froberg")
    for G in small_graph_corpus() if graphs is None else graphs:
        linear = summarize(betti_table_graph(G, GF2)).linear
        chordal = bool(is_chordal(complement(G)))
        if linear != chordal:
            res.fail(f"n={G.n} edges={G.sorted_edges()}: linear={linear}, complement chordal={chordal}")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 3. complements of chordal graphs
# ---------------------------------------------------------------------------

def check_complement_chordal(count: int = 200, max_n: int = 9, seed: int = 3) -> CheckResult:
    res = CheckResult(3, "complement-chordal")
    rng = random.Random(seed)
    for _ in range(count):
        G = complement(random_chordal(rng.randint(1, max_n), rng))
        oracle = betti_table_graph(G, GF2)
        formula = betti_complement_chordal(G)
        if oracle != formula:
            res.fail(f"{G!r}: oracle {_table_str(oracle)} != formula {_table_str(formula)}")
        s = summarize(oracle)
        if pdim_depth_complement_chordal(G) != (s.pdim, s.depth):
            res.fail(f"{G!r}: (pdim, depth) {pdim_depth_complement_chordal(G)} != {(s.pdim, s.depth)}")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 4-6. vertex decomposability
# ---------------------------------------------------------------------------

def _vd(D: SimplicialComplex) -> bool:
    ok, witness = is_vertex_decomposable(D)
    if ok and not verify_vd_witness(D, witness):
        raise AssertionError("shedding tree failed replay")
    return ok


def check_chordal_vd(count: int = 200, max_n: int = 10, exhaustive_n: int = 7, seed: int = 4) -> CheckResult:
    res = CheckResult(4, "chordal-vd")
    rng = random.Random(seed)
    graphs = [G for G in small_graph_corpus() if G.n <= exhaustive_n and is_chordal(G)]
    graphs += [random_chordal(rng.randint(1, max_n), rng) for _ in range(count)]
    for G in graphs:
        if not _vd(independence_complex(G)):
            res.fail(f"{G!r}: Ind(G) not vertex-decomposable")
        res.checked += 1
    return res


def check_whiskers(count: int = 100, max_n: int = 5, negative: int = 100, seed: int = 5) -> CheckResult:
    res = CheckResult(5, "whiskers")
    rng = random.Random(seed)
    graphs = [G for G in small_graph_corpus() if G.n <= max_n]
    graphs += [random_graph(rng.randint(1, max_n), rng) for _ in range(count)]
    for G in graphs:
        D = independence_complex(whisker_all(G))
        if not D.is_pure():
            res.fail(f"{G!r}: whiskered complex not pure")
        if not _vd(D):
            res.fail(f"{G!r}: whiskered complex not vertex-decomposable")
        for k in (GF2, GF3):
            if not is_cohen_macaulay(D, k):
                res.fail(f"{G!r}: whiskered complex not CM over {k}")
        res.checked += 1

    found = draws = 0
    while found < negative:
        draws += 1
        G = random_graph(rng.randint(4, 6), rng)
        S = random_subset(range(G.n), rng)
        if is_sequentially_cm(independence_complex(delete_vertices(G, S)), GF2):
            continue
        found += 1
        if is_sequentially_cm(independence_complex(whisker(G, S)), GF2):
            res.fail(f"{G!r}, S={S}: G-S not seqCM but whiskered graph is")
        res.checked += 1
    res.notes.append(f"negative direction: {found} pairs from {draws} draws")
    return res


def check_ears(r_range: range = range(3, 9)) -> CheckResult:
    res = CheckResult(6, "ears")
    for r in r_range:
        G = add_ear(cycle(r), (0, 1))
        D = independence_complex(G)
        if not _vd(D):
            res.fail(f"r={r}: Ind(ear graph) not vertex-decomposable")
        cm = {str(k): is_cohen_macaulay(D, k) for k in (GF2, GF3, QQ)}
        seq = {str(k): is_sequentially_cm(D, k) for k in (GF2, GF3, QQ)}
        if not all(seq.values()):
            res.fail(f"r={r}: not sequentially CM {seq}")
        res.notes.append(f"r={r}: pure={D.is_pure()} cm={cm}")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 7. golden tables
# ---------------------------------------------------------------------------

GOLDEN: dict[str, tuple[Graph, dict[tuple[int, int], int]]] = {
    "K2": (complete(2), {(0, 0): 1, (1, 2): 1}),
    "P3": (path(3), {(0, 0): 1, (1, 2): 2, (2, 3): 1}),
    "C4": (cycle(4), {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}),
    "C5": (cycle(5), {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}),
    "K3": (complete(3), {(0, 0): 1, (1, 2): 3, (2, 3): 2}),
}


def check_golden() -> CheckResult:
    res = CheckResult(7, "golden-tables")
    for name, (G, entries) in GOLDEN.items():
        want = BettiTable(G.n, entries)
        for k in PROBE_FIELDS:
            for fold in (True, False):
                got = betti_table_graph(G, k, fold_reduce_per_subset=fold)
                if got != want:
                    res.fail(f"{name} over {k} fold={fold}: {_table_str(got)}")
                res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 8. generating-function calculus
# ---------------------------------------------------------------------------

def _with_isolated_vertex(rng, max_n):
    G = random_graph(rng.randint(0, max_n - 1), rng)
    H = shuffled(disjoint_union(G, empty_graph(1)), rng)
    return H, (next(v for v in range(H.n) if not H.adj[v]),)


def _with_isolated_edge(rng, max_n):
    G = random_graph(rng.randint(0, max_n - 2), rng)
    H = shuffled(disjoint_union(G, complete(2)), rng)
    u = next(u for u in range(H.n) if H.adj[u].bit_count() == 1
             and H.adj[H.adj[u].bit_length() - 1].bit_count() == 1)
    return H, (u, H.adj[u].bit_length() - 1)


def _with_dominated_set(rng, max_n):
    while True:
        G = random_graph(rng.randint(2, max_n), rng)
        v = rng.randrange(G.n)
        cands = [u for u in range(G.n) if u != v and not G.adj[v] & ~G.adj[u]]
        if cands:
            U = random_subset(cands, rng) or [rng.choice(cands)]
            return G, (v, U)


def _with_leaf(rng, max_n):
    while True:
        G = random_graph(rng.randint(2, max_n), rng)
        leaves = [v for v in range(G.n) if G.adj[v].bit_count() == 1]
        if leaves:
            return G, (rng.choice(leaves),)


IDENTITIES: dict[str, tuple[Callable, Callable]] = {
    "isolated-vertex": (_with_isolated_vertex, reduce_isolated_vertex),
    "isolated-edge": (_with_isolated_edge, reduce_isolated_edge),
    "dominated-set": (_with_dominated_set, reduce_dominated_set),
    "leaf": (_with_leaf, reduce_leaf),
}


def check_genfun(count: int = 300, max_n: int = 8, forests: int = 200, forest_n: int = 12,
                 seed: int = 8, fields=(GF2, QQ)) -> CheckResult:
    res = CheckResult(8, "genfun-calculus")
    rng = random.Random(seed)
    for name, (draw, identity) in IDENTITIES.items():
        for _ in range(count):
            G, args = draw(rng, max_n)
            for k in fields:
                def ev(H, k=k):
                    return genfun_oracle(H, k)
                lhs = ev(G)
                rhs = identity(G, *args, evaluate=ev)
                if lhs != rhs or not rhs.is_nonnegative():
                    res.fail(f"{name} {G!r} {args} over {k}: oracle {lhs} vs identity {rhs}")
            res.checked += 1
    for _ in range(forests):
        F = random_forest(rng.randint(1, forest_n), rng)
        poly = genfun_forest(F)
        if genfun_forest(F, leaf_rule="last") != poly:
            res.fail(f"forest {F!r}: leaf rules disagree")
        for k in fields:
            if genfun_oracle(F, k) != poly:
                res.fail(f"forest {F!r} over {k}: oracle {genfun_oracle(F, k)} vs recursion {poly}")
        if reg_pdim_forest(F) != (poly.x_degree, poly.y_degree):
            res.fail(f"forest {F!r}: recursions {reg_pdim_forest(F)} vs degrees {(poly.x_degree, poly.y_degree)}")
        if F.n <= 10 and not field_independence_probe(F, (2, 3)):
            res.fail(f"forest {F!r}: Betti table depends on the field")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 9. projective-dimension bounds
# ---------------------------------------------------------------------------

def _bound_graph(kind: str, rng: random.Random, max_n: int) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        if kind == "claw_free":
            G = random_claw_free(n, rng)
        elif kind == "z2_lattice":
            G = random_lattice_graph(n, rng)
        else:
            G = random_graph(n, rng)
        if G.max_degree() >= 1:
            return G


def check_bounds(count: int = 200, max_n: int = 10, component_n: int = 9, seed: int = 9) -> CheckResult:
    """Every bound on random graphs of its class, plus tightness on t·K_{d,d}.

    The ``general`` kind is run with a = 1/2d, b = -1 - 1/2d (d = max degree),
    the connectivity input that the max-degree bound is derived from; graphs
    failing that hypothesis are counted in the notes, not skipped silently.
    """
    res = CheckResult(9, "bounds")
    rng = random.Random(seed)
    for kind in ("max_degree", "claw_free", "z2_lattice", "general", "component"):
        hypothesis_failures = 0
        tight = 0
        for _ in range(count):
            G = _bound_graph(kind, rng, component_n if kind == "component" else max_n)
            d = G.max_degree()
            try:
                if kind == "general":
                    report = verify_bound(G, kind, a=Fraction(1, 2 * d), b=-1 - Fraction(1, 2 * d))
                else:
                    report = verify_bound(G, kind, r=3 if kind == "component" else None)
            except PreconditionError as exc:
                hypothesis_failures += 1
                res.fail(f"{kind} {G!r}: {exc}")
                continue
            if not report.holds:
                res.fail(f"{kind} {G!r}: pdim {report.pdim} > floor({report.bound})")
            tight += report.gap == 0
            res.checked += 1
        res.notes.append(f"{kind}: {count} graphs, {tight} attain the floor, "
                         f"{hypothesis_failures} hypothesis failures")

    for t, d in ((1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4), (1, 5)):
        G = complete_bipartite(d, d)
        for _ in range(t - 1):
            G = disjoint_union(G, complete_bipartite(d, d))
        report = verify_bound(G, "max_degree")
        if report.pdim != report.floor:
            res.fail(f"{t}·K_{{{d},{d}}}: pdim {report.pdim} != floor {report.floor}")
        res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 10. skeletons of independence complexes
# ---------------------------------------------------------------------------

def check_skeleton_vd(count: int = 100, max_n: int = 10, seed: int = 10) -> CheckResult:
    """Faces of dimension ≤ k of Ind(G), for every integer k < n/2d."""
    res = CheckResult(10, "skeleton-vd")
    rng = random.Random(seed)
    for _ in range(count):
        # sparse graphs have small d and therefore many admissible k
        G = random_graph(rng.randint(1, max_n), rng, rng.uniform(0.0, 0.4))
        d = G.max_degree()
        top = G.n if d == 0 else -(-G.n // (2 * d)) - 1  # largest integer k < n/2d
        D = independence_complex(G)
        for k in range(0, top + 1):
            S = skeleton(D, k)
            if not S.is_pure():
                res.fail(f"{G!r} k={k}: skeleton not pure")
            elif not _vd(S):
                res.fail(f"{G!r} k={k}: skeleton not vertex-decomposable")
            res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 11. homology engine
# ---------------------------------------------------------------------------

def constructed_complexes() -> list[SimplicialComplex]:
    graphs = [
        complete(4), path(5), cycle(5), cycle(6), complete_bipartite(2, 3),
        ferrers_graph((3, 2, 1)), grid_subgraph([(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)]),
        whisker_all(cycle(4)), add_ear(cycle(5), (0, 1)), empty_graph(3),
    ]
    out = [projective_plane(), SimplicialComplex.empty(2), SimplicialComplex.simplex(3)]
    for G in graphs:
        out += [independence_complex(G), clique_complex(G)]
        if G.n >= 3:
            out.append(component_complex(G, 3))
    return out


def _boundary_squares_to_zero(D: SimplicialComplex) -> bool:
    for d in range(1, D.dim + 1):
        A, B = boundary_matrix(D, d), boundary_matrix(D, d + 1)
        if A.size and B.size and (A @ B).any():
            return False
    return True


def check_engine(count: int = 500, max_n: int = 7, seed: int = 11) -> CheckResult:
    res = CheckResult(11, "homology-engine")
    rng = random.Random(seed)
    randoms = [random_complex(rng.randint(1, max_n), rng) for _ in range(count)]
    for D in constructed_complexes() + randoms:
        if not _boundary_squares_to_zero(D):
            res.fail(f"{D!r}: boundary of boundary is nonzero")
        res.checked += 1
    for D in randoms:
        for k in (GF2, QQ):
            h = reduced_homology(D, k)
            alt = sum((-1) ** d * b for d, b in h.dims.items())
            if alt != euler_characteristic(D):
                res.fail(f"{D!r} over {k}: homology sum {alt} != Euler characteristic {euler_characteristic(D)}")
    rp2 = projective_plane()
    mod2, rational = reduced_homology(rp2, GF2), reduced_homology(rp2, QQ)
    if mod2.nonzero() != {1: 1, 2: 1} or not rational.is_acyclic():
        res.fail(f"projective plane: GF(2) {mod2.nonzero()}, Q {rational.nonzero()}")
    res.checked += 1
    return res


# ---------------------------------------------------------------------------
# 12. determinism
# ---------------------------------------------------------------------------

def check_determinism(worker_counts=(1, 4, 8), seed: int = 12) -> CheckResult:
    res = CheckResult(12, "determinism")
    rng = random.Random(seed)
    graphs = [cycle(7), ferrers_graph((3, 3, 1)), random_graph(10, rng, 0.3), random_graph(11, rng, 0.5)]
    for G in graphs:
        baseline = betti_table_graph(G, GF2, workers=1, fold_reduce_per_subset=False)
        for w in worker_counts:
            for fold in (True, False):
                if betti_table_graph(G, GF2, workers=w, fold_reduce_per_subset=fold) != baseline:
                    res.fail(f"{G!r}: workers={w} fold={fold} differs")
                res.checked += 1
    D = component_complex(path(7), 3)
    base = betti_table(D, QQ, workers=1)
    for w in worker_counts:
        if betti_table(D, QQ, workers=w) != base:
            res.fail(f"component complex: workers={w} differs")
        res.checked += 1
    return res


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "ferrers": check_ferrers,
    "froberg": check_froberg,
    "complement-chordal": check_complement_chordal,
    "chordal-vd": check_chordal_vd,
    "whiskers": check_whiskers,
    "ears": check_ears,
    "golden": check_golden,
    "genfun": check_genfun,
    "bounds": check_bounds,
    "skeleton": check_skeleton_vd,
    "engine": check_engine,
    "determinism": check_determinism,
}


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS.values()]


__all__ = [
    "CHECKS",
    "CheckResult",
    "GOLDEN",
    "check_bounds",
    "check_chordal_vd",
    "check_complement_chordal",
    "check_determinism",
    "check_ears",
    "check_engine",
    "check_ferrers",
    "check_froberg",
    "check_genfun",
    "check_golden",
    "check_skeleton_vd",
    "check_whiskers",
    "constructed_complexes",
    "run_all",
    "small_graph_corpus",
]
