"""Reduced simplicial homology over GF(p) and Q from boundary-matrix ranks.

Ranks are exact.  GF(2) columns are packed into Python ints and reduced by
XOR; GF(p) uses sparse dict columns mod p; Q uses fraction-free integer
elimination with content division, so no rational ever leaves Z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bits import iter_bits
from .complex import SimplicialComplex
from .errors import InputError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True, order=True)
class FieldSpec:
    """A prime field GF(p), or the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str | int | FieldSpec) -> FieldSpec:
        if isinstance(text, FieldSpec):
            return text
        if isinstance(text, int):
            return cls(text)
        t = text.strip().upper()
        if t in ("Q", "QQ", "RATIONALS"):
            return cls(None)
        if t.startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        try:
            return cls(int(t))
        except ValueError:
            raise InputError(f"unknown field {text!r}; use 2, 3, 5, ... or Q") from None

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero reduced Betti numbers by degree (degree -1 allowed)."""

    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __hash__(self):
        return hash(tuple(sorted(self.nonzero().items())))

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in self.dims.items() if b}

    def is_acyclic(self) -> bool:
        return not self.nonzero()

    def to_dict(self) -> dict:
        return {"dims": {str(d): b for d, b in sorted(self.dims.items())}}


# ---------------------------------------------------------------------------
# rank kernels
# ---------------------------------------------------------------------------

def rank_gf2_bits(columns: Iterable[int]) -> int:
    """Rank over GF(2) of vectors packed as int bitsets."""
    pivots: dict[int, int] = {}
    r = 0
    for c in columns:
        while c:
            top = c.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = c
                r += 1
                break
            c ^= p
    return r


def rank_mod_p(columns: Iterable[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of sparse vectors ``{row: value}``."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        c = {k: v % p for k, v in col.items() if v % p}
        while c:
            lead = min(c)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(c[lead], -1, p)
                pivots[lead] = {k: v * inv % p for k, v in c.items()}
                r += 1
                break
            f = c[lead]
            for k, v in piv.items():
                nv = (c.get(k, 0) - f * v) % p
                if nv:
                    c[k] = nv
                else:
                    c.pop(k, None)
    return r


def _content_reduce(c: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in c.values():
        g = math.gcd(g, v)
        if g == 1:
            return c
    return {k: v // g for k, v in c.items()} if g > 1 else c


def rank_rational(columns: Iterable[dict[int, int]]) -> int:
    """Rank over Q of sparse integer vectors, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        c = {k: v for k, v in col.items() if v}
        while c:
            lead = min(c)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _content_reduce(c)
                r += 1
                break
            a, b = piv[lead], c[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in c.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            c = _content_reduce(new)
    return r


def rank(M, k: FieldSpec) -> int:
    """Rank of an integer matrix (array-like, rows × columns) over ``k``."""
    A = np.asarray(M, dtype=object)
    if A.ndim != 2 or A.size == 0:
        return 0
    cols = [{i: int(A[i, j]) for i in range(A.shape[0]) if A[i, j]} for j in range(A.shape[1])]
    return _rank_sparse(cols, k)


def _rank_sparse(cols: list[dict[int, int]], k: FieldSpec) -> int:
    if k.p == 2:
        return rank_gf2_bits(sum(1 << i for i, v in c.items() if v % 2) for c in cols)
    if k.p is None:
        return rank_rational(cols)
    return rank_mod_p(cols, k.p)


# ---------------------------------------------------------------------------
# boundary matrices and homology
# ---------------------------------------------------------------------------

def _boundary_columns(lower: Sequence[int], upper: Sequence[int]) -> list[dict[int, int]]:
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for F in upper:
        col = {}
        for pos, v in enumerate(iter_bits(F)):
            col[index[F & ~(1 << v)]] = -1 if pos & 1 else 1
        cols.append(col)
    return cols


def _boundary_bits(lower: Sequence[int], upper: Sequence[int]) -> list[int]:
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for F in upper:
        c = 0
        rest = F
        while rest:
            low = rest & -rest
            c |= 1 << index[F ^ low]
            rest ^= low
        cols.append(c)
    return cols


def boundary_matrix(D: SimplicialComplex, d: int) -> np.ndarray:
    """∂_d as an integer matrix: rows are (d-1)-faces, columns d-faces.

    Both index sets are in lexicographic vertex order.  Dropping the vertex in
    position t carries sign (-1)^t.  ``d = 0`` is the augmentation row.
    """
    layers = D.faces_by_size()
    lower = layers[d] if 0 <= d < len(layers) else []
    upper = layers[d + 1] if 0 <= d + 1 < len(layers) else []
    M = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, col in enumerate(_boundary_columns(lower, upper)):
        for i, v in col.items():
            M[i, j] = v
    return M


def homology_from_layers(layers: Sequence[Sequence[int]], k: FieldSpec) -> dict[int, int]:
    """Reduced Betti numbers from faces grouped by size (``layers[s]`` has s vertices).

    ``layers`` must start with ``[0]`` (the empty face) unless the complex is void.
    """
    if not layers or not layers[0]:
        return {}
    ranks = [0] * (len(layers) + 1)  # ranks[s]: rank of the map out of size-s chains
    for s in range(1, len(layers)):
        if not layers[s]:
            break
        if k.p == 2:
            ranks[s] = rank_gf2_bits(_boundary_bits(layers[s - 1], layers[s]))
        else:
            ranks[s] = _rank_sparse(_boundary_columns(layers[s - 1], layers[s]), k)
    dims = {}
    for s, layer in enumerate(layers):
        b = len(layer) - ranks[s] - ranks[s + 1]
        if b:
            dims[s - 1] = b
    return dims


def reduced_homology(D: SimplicialComplex, k: FieldSpec = GF2) -> HomologyProfile:
    return HomologyProfile(homology_from_layers(D.faces_by_size(), k))


def torsion_probe(D: SimplicialComplex, primes: Sequence[int]) -> bool:
    """True when homology agrees over every listed prime and over Q.

    Disagreement proves integral torsion.  Agreement only rules out torsion
    at the probed primes.
    """
    if not primes:
        raise InputError("torsion probe needs at least one prime")
    fields = [FieldSpec(p) for p in primes]
    base = reduced_homology(D, QQ)
    return all(reduced_homology(D, f) == base for f in fields)


def euler_characteristic(D: SimplicialComplex) -> int:
    """Reduced Euler characteristic Σ_{d ≥ -1} (-1)^d f_d."""
    return sum((-1) ** (s - 1) * n for s, n in enumerate(D.f_vector()))


__all__ = [
    "FieldSpec",
    "GF2",
    "GF3",
    "HomologyProfile",
    "QQ",
    "boundary_matrix",
    "euler_characteristic",
    "homology_from_layers",
    "is_prime",
    "rank",
    "reduced_homology",
    "torsion_probe",
]
