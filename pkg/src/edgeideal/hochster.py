"""Graded Betti numbers of Stanley–Reisner rings by Hochster's formula.

For i > 0, β_{i,j} is the sum over all j-subsets W of the ground set of
dim H̃_{j-i-1}(Δ[W]).  We sweep every subset, which is why ground sets are
capped (default 20 vertices).

Tables use the ring convention: β_{0,0} = 1 is always stored, and
β_{i,j} for i ≥ 1 counts i-th syzygies of R = S/I.  The ideal-indexed view
shifts i down by one and is only a display option.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bits import iter_bits, popcount
from .complex import SimplicialComplex, component_complex, flag_graph, independence_complex
from .errors import CapExceeded, InputError
from .graph import Graph, fold_reduce_mask, induced_adj
from .homology import GF2, FieldSpec, homology_from_layers

DEFAULT_N_CAP = 20
CHUNK = 512


@dataclass(frozen=True)
class BettiTable:
    n: int
    entries: dict[tuple[int, int], int]
    field: FieldSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for (i, j), b in self.entries.items():
            if b < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if b:
                if not 0 <= i <= j:
                    raise ValueError(f"entry {(i, j)} outside 0 <= i <= j")
                clean[(i, j)] = b
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.entries.items()))))

    @property
    def pdim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self.entries.items())]

    def totals(self) -> list[int]:
        out = [0] * (self.pdim + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "field": str(self.field) if self.field is not None else None,
            "entries": [{"i": i, "j": j, "b": b} for i, j, b in self.nonzero()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> BettiTable:
        fld = FieldSpec.parse(d["field"]) if d.get("field") else None
        return cls(d["n"], {(e["i"], e["j"]): e["b"] for e in d["entries"]}, fld)

    def to_csv(self) -> str:
        return "i,j,b\n" + "".join(f"{i},{j},{b}\n" for i, j, b in self.nonzero())

    def render(self) -> str:
        """Macaulay2-style grid: columns are i, rows are the shift j - i."""
        cols = self.pdim + 1
        rows = self.reg + 1
        grid = [["."] * cols for _ in range(rows)]
        for (i, j), b in self.entries.items():
            grid[j - i][i] = str(b)
        header = [str(i) for i in range(cols)]
        total = [str(t) for t in self.totals()]
        widths = [max(len(header[c]), len(total[c]), *(len(grid[r][c]) for r in range(rows))) for c in range(cols)]
        label_w = max(len("total:"), len(f"{rows - 1}:"))

        def line(label, cells):
            return label.rjust(label_w) + " " + " ".join(c.rjust(w) for c, w in zip(cells, widths))

        out = [line("", header), line("total:", total)]
        out += [line(f"{r}:", grid[r]) for r in range(rows)]
        return "\n".join(s.rstrip() for s in out) + "\n"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class ResolutionSummary:
    n: int
    pdim: int
    reg_ring: int
    depth: int
    linear: bool

    @property
    def pdim_ideal(self) -> int | None:
        """pdim(I) = pdim(R) - 1; None for the zero ideal."""
        return self.pdim - 1 if self.pdim >= 1 else None

    @property
    def reg_ideal(self) -> int:
        return self.reg_ring + 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pdim(R)": self.pdim,
            "pdim(I)": self.pdim_ideal,
            "reg(R)": self.reg_ring,
            "reg(I)": self.reg_ideal,
            "depth(R)": self.depth,
            "linear": self.linear,
        }


def summarize(T: BettiTable) -> ResolutionSummary:
    pdim = T.pdim
    linear = all(j - i == 1 for (i, j) in T.entries if i >= 1)
    return ResolutionSummary(T.n, pdim, T.reg, T.n - pdim, linear)


# ---------------------------------------------------------------------------
# per-subset homology
# ---------------------------------------------------------------------------

def independent_layers(adj: Sequence[int], k: int) -> list[list[int]]:
    """Independent sets of a k-vertex graph grouped by size, starting with [0]."""
    layers = [[0]]
    frontier = [(0, (1 << k) - 1)]
    while frontier:
        nxt = []
        layer = []
        for S, cand in frontier:
            c = cand
            while c:
                low = c & -c
                c ^= low
                T = S | low
                layer.append(T)
                nxt.append((T, c & ~adj[low.bit_length() - 1]))
        if not layer:
            break
        layers.append(layer)
        frontier = nxt
    return layers


def ind_subset_homology(adj: Sequence[int], mask: int, k: FieldSpec, fold: bool,
                        cache: dict | None = None) -> dict[int, int]:
    """Reduced Betti numbers of Ind(G[mask]).

    With ``fold`` the subgraph is first fold-reduced (homotopy invariant);
    an isolated vertex short-circuits to a cone.
    """
    if not mask:
        return {-1: 1}
    if fold:
        for v in iter_bits(mask):
            if not adj[v] & mask:
                return {}
        mask = fold_reduce_mask(adj, mask)
        if popcount(mask) == 1:
            return {}
    sub = induced_adj(adj, mask)
    if cache is not None:
        hit = cache.get(sub)
        if hit is not None:
            return hit
    dims = homology_from_layers(independent_layers(sub, len(sub)), k)
    if cache is not None:
        cache[sub] = dims
    return dims


def _restricted_layers(faces: Sequence[int], wmask: int) -> list[list[int]]:
    layers: list[list[int]] = []
    for f in faces:
        if f & wmask == f:
            s = popcount(f)
            while len(layers) <= s:
                layers.append([])
            layers[s].append(f)
    return layers


def _sweep_chunk(job) -> Counter:
    mode, payload, masks, p, fold = job
    k = FieldSpec(p)
    out: Counter = Counter()
    cache: dict = {}
    for W in masks:
        if mode == "graph":
            dims = ind_subset_homology(payload, W, k, fold, cache)
        else:
            dims = homology_from_layers(_restricted_layers(payload, W), k)
        j = popcount(W)
        for d, b in dims.items():
            i = j - d - 1
            if i > 0:
                out[(i, j)] += b
    return out


def _jobs(mode, payload, n: int, k: FieldSpec, fold: bool):
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for W in range(1, 1 << n):
        by_size[popcount(W)].append(W)
    for layer in by_size:
        for start in range(0, len(layer), CHUNK):
            yield (mode, payload, layer[start:start + CHUNK], k.p, fold)


def _run(mode, payload, n: int, k: FieldSpec, fold: bool, workers: int) -> dict:
    jobs = list(_jobs(mode, payload, n, k, fold))
    total: Counter = Counter({(0, 0): 1})
    if workers <= 1 or len(jobs) == 1:
        parts = map(_sweep_chunk, jobs)
        for part in parts:
            total.update(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_chunk, jobs):
                total.update(part)
    return dict(total)


def _check_cap(n: int, n_cap: int | None):
    cap = DEFAULT_N_CAP if n_cap is None else n_cap
    if n > cap:
        raise CapExceeded(
            f"refusing Hochster sweep on {n} vertices: 2^{n} = {2 ** n} subsets exceeds "
            f"the cap of {cap} (raise the cap explicitly to proceed)"
        )


def betti_table(D: SimplicialComplex, k: FieldSpec = GF2, *, fold_reduce_per_subset: bool = True,
                workers: int = 1, n_cap: int | None = None, flag_shortcut: bool = True) -> BettiTable:
    """Betti table of the Stanley–Reisner ring of ``D`` over ``k``.

    Flag complexes are recognized and swept as Ind(G[W]) (optionally
    fold-reduced per subset) unless ``flag_shortcut`` is off; anything else
    is swept by restricting the full face list.  Results are independent of
    ``workers``.
    """
    k = FieldSpec.parse(k)
    _check_cap(D.ground, n_cap)
    if D.is_void:
        raise InputError("the void complex has no Stanley–Reisner ring")
    G = flag_graph(D) if flag_shortcut else None
    if G is not None:
        return _graph_table(G, k, fold_reduce_per_subset, workers)
    faces = sorted(D.face_masks())
    return BettiTable(D.ground, _run("faces", faces, D.ground, k, False, workers), k)


def _graph_table(G: Graph, k: FieldSpec, fold: bool, workers: int) -> BettiTable:
    return BettiTable(G.n, _run("graph", G.adj, G.n, k, fold, workers), k)


def betti_table_graph(G: Graph, k: FieldSpec = GF2, *, fold_reduce_per_subset: bool = True,
                      workers: int = 1, n_cap: int | None = None) -> BettiTable:
    """Betti table of S/I_G, swept directly over induced subgraphs."""
    k = FieldSpec.parse(k)
    _check_cap(G.n, n_cap)
    return _graph_table(G, k, fold_reduce_per_subset, workers)


def betti_table_component_ideal(G: Graph, r: int, k: FieldSpec = GF2, *, workers: int = 1,
                                n_cap: int | None = None) -> BettiTable:
    """Betti table of S/I_{G;r} through the component complex."""
    _check_cap(G.n, n_cap)
    D = component_complex(G, r)
    return betti_table(D, k, workers=workers, n_cap=n_cap)


def betti_table_via_complex(G: Graph, k: FieldSpec = GF2, **kw) -> BettiTable:
    """Same table as :func:`betti_table_graph`, routed through Ind(G)."""
    return betti_table(independence_complex(G), k, **kw)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("EDGEIDEAL_WORKERS", "1")))
    except ValueError:
        return 1


def tables_over(G: Graph, fields: Iterable[FieldSpec], **kw) -> dict[FieldSpec, BettiTable]:
    return {f: betti_table_graph(G, f, **kw) for f in fields}
