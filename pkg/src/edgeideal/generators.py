"""Seeded random graphs and complexes for property checks and the acceptance runner."""

from __future__ import annotations

import random
from typing import Sequence

from .complex import SimplicialComplex
from .graph import Graph, grid_subgraph, is_claw_free, relabel


def shuffled(G: Graph, rng: random.Random) -> Graph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return relabel(G, perm)


def random_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """G(n, p); ``p`` itself is drawn uniformly when not given."""
    if p is None:
        p = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Each new vertex is joined to a random subset of an existing clique.

    Reversing the insertion order is then a perfect elimination order; the
    result is shuffled so that order is not the identity.
    """
    edges = []
    cliques: list[list[int]] = [[]]
    for v in range(n):
        base = rng.choice(cliques)
        nbrs = [u for u in base if rng.random() < 0.7]
        edges += [(u, v) for u in nbrs]
        cliques.append(nbrs + [v])
    return shuffled(Graph.from_edges(n, edges), rng)


def random_forest(n: int, rng: random.Random, attach: float = 0.85) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < attach]
    return shuffled(Graph.from_edges(n, edges), rng)


def random_claw_free(n: int, rng: random.Random, tries: int = 1000) -> Graph:
    """Rejection-sample G(n, p) until claw-free; dense p makes this quick."""
    for _ in range(tries):
        G = random_graph(n, rng, rng.uniform(0.4, 1.0))
        if is_claw_free(G):
            return G
    raise RuntimeError(f"no claw-free graph on {n} vertices after {tries} draws")


def random_lattice_graph(n: int, rng: random.Random, side: int = 5) -> Graph:
    """Induced subgraph of Z^2 on ``n`` random points of a ``side`` × ``side`` box."""
    box = [(x, y) for x in range(side) for y in range(side)]
    return grid_subgraph(rng.sample(box, n))


def random_complex(n: int, rng: random.Random, max_facets: int = 6) -> SimplicialComplex:
    """Complex on ``n`` vertices generated by a few random nonempty facets."""
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, n)
        facets.append(rng.sample(range(n), size))
    return SimplicialComplex.from_facets(n, facets)


def random_partition(total: int, rng: random.Random) -> tuple[int, ...]:
    parts = []
    left = total
    while left:
        part = rng.randint(1, left if not parts else min(left, parts[-1]))
        parts.append(part)
        left -= part
    return tuple(parts)


def random_subset(items: Sequence[int], rng: random.Random) -> list[int]:
    return [x for x in items if rng.random() < 0.5]
