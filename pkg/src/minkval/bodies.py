"""Constructors for named bodies and seeded random corpora.

Zonotope generators are centered segments S_v = [-v, v], matching the
generalized cubes C_n = S_1 + ... + S_n used throughout the valuation
checks; relative to [0, v] generators this contributes a factor 2^k to
volumes.  Corpus generation is index-addressable: body i of a corpus
depends only on (seed, i), so corpora are reproducible and can be built
in any order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DependentGeneratorsError,
    RetriesExhaustedError,
    ZeroVectorError,
)
from .linalg import rank
from .polytope import (
    Hyperplane,
    Polytope,
    Vector,
    affine_dim,
    as_vector,
    canonicalize,
    direction,
    minkowski_sum,
    slice_body,
)
from .prng import SplitMix64, substream

KINDS = ("random_hull", "zonotope", "simplex_like", "symmetric")


@dataclass(frozen=True)
class CorpusSpec:
    dim: int
    count: int
    seed: int
    kind_mix: tuple[tuple[str, int], ...] = tuple((k, 1) for k in KINDS)

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        weights = dict(self.kind_mix)
        if any(w < 0 for w in weights.values()) or sum(weights.values()) <= 0:
            raise ValueError("kind weights must be nonnegative, not all zero")
        for k in weights:
            if k not in KINDS:
                raise ValueError(f"unknown body kind {k!r}")


def segment(v) -> Polytope:
    """The centered segment S_v = [-v, v]."""
    vv = as_vector(v)
    if all(c == 0 for c in vv):
        raise ZeroVectorError("segment direction must be nonzero")
    neg = tuple(-c for c in vv)
    return Polytope(len(vv), tuple(sorted((neg, vv))))


def segment_between(p, q) -> Polytope:
    """The segment [p, q] (not necessarily centered)."""
    pp, qq = as_vector(p), as_vector(q)
    if pp == qq:
        raise ZeroVectorError("segment endpoints must differ")
    return Polytope(len(pp), tuple(sorted((pp, qq))))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def simplex(n: int) -> Polytope:
    """conv{0, e_1, ..., e_n}, volume 1/n!."""
    zero = tuple(Fraction(0) for _ in range(n))
    return canonicalize([zero] + [unit_vector(n, i) for i in range(n)], n)


def zonotope(gens) -> Polytope:
    """Minkowski sum of the centered segments S_v over the generators."""
    gens = [as_vector(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    body = segment(gens[0])
    for g in gens[1:]:
        body = minkowski_sum(body, segment(as_vector(g, n)))
    return body


def cube_from_segments(gens) -> Polytope:
    """Generalized cube C_n = S_1 + ... + S_n from n independent generators."""
    gens = [as_vector(g) for g in gens]
    n = len(gens[0])
    if len(gens) != n or rank(gens) != n:
        raise DependentGeneratorsError(
            "cube needs exactly n linearly independent generators")
    body = zonotope(gens)
    assert affine_dim(body) == n
    return body


def cross_polytope(n: int) -> Polytope:
    """conv{±e_1, ..., ±e_n}."""
    pts = []
    for i in range(n):
        e = unit_vector(n, i)
        pts.append(e)
        pts.append(tuple(-c for c in e))
    return canonicalize(pts, n)


def box(n: int) -> Polytope:
    """The cube [-1, 1]^n."""
    return cube_from_segments([unit_vector(n, i) for i in range(n)])


def _rand_coord(rng: SplitMix64) -> Fraction:
    den = rng.randint(1, 8)
    num = rng.randint(-4 * den, 4 * den)
    return Fraction(num, den)


def _rand_vector(rng: SplitMix64, n: int) -> Vector:
    return tuple(_rand_coord(rng) for _ in range(n))


def _rand_nonzero(rng: SplitMix64, n: int) -> Vector:
    for _ in range(64):
        v = _rand_vector(rng, n)
        if any(c != 0 for c in v):
            return v
    raise RetriesExhaustedError("could not draw a nonzero vector")


def _pick_kind(rng: SplitMix64, mix: tuple[tuple[str, int], ...]) -> str:
    total = sum(w for _, w in mix)
    x = rng.below(total)
    for k, w in mix:
        if x < w:
            return k
        x -= w
    raise AssertionError("unreachable")


def random_polytope(spec: CorpusSpec, index: int) -> Polytope:
    """Deterministic full-dimensional body number ``index`` of the corpus."""
    n = spec.dim
    for attempt in range(64):
        rng = substream(spec.seed, index, attempt)
        kind = _pick_kind(rng, spec.kind_mix)
        pts: list[Vector] = []
        if kind == "random_hull":
            base = _rand_vector(rng, n)
            side = Fraction(rng.randint(1, 4), rng.randint(1, 4))
            pts.append(base)
            for i in range(n):
                e = unit_vector(n, i)
                pts.append(tuple(b + side * c for b, c in zip(base, e)))
            for _ in range(n + 4):
                pts.append(_rand_vector(rng, n))
            body = canonicalize(pts, n)
        elif kind == "zonotope":
            k = n + rng.below(3)
            gens = [_rand_nonzero(rng, n) for _ in range(k)]
            if rank(gens) < n:
                continue
            body = zonotope(gens)
        elif kind == "simplex_like":
            pts = [_rand_vector(rng, n) for _ in range(n + 1)]
            body = canonicalize(pts, n)
        else:  # symmetric
            half = [_rand_nonzero(rng, n) for _ in range(n + 2)]
            pts = half + [tuple(-c for c in v) for v in half]
            body = canonicalize(pts, n)
        if affine_dim(body) == n:
            return body
    raise RetriesExhaustedError(
        f"no full-dimensional body for index {index} (degenerate spec?)")


def corpus(spec: CorpusSpec) -> list[Polytope]:
    return [random_polytope(spec, i) for i in range(spec.count)]


def random_slice_pair(P: Polytope, seed: int) -> tuple[Polytope, Polytope, Polytope]:
    """A random valid slice (K, L, M) of P with K ∪ L = P and K ∩ L = M.

    The cutting hyperplane passes through a random convex combination of
    the vertices and has a random rational normal; drawing retries until
    both open sides contain a vertex.
    """
    n = P.dim
    for attempt in range(128):
        rng = substream(seed, 0x51C3, attempt)
        weights = [rng.randint(1, 9) for _ in P.vertices]
        total = sum(weights)
        point = tuple(
            sum(Fraction(w) * v[j] for w, v in zip(weights, P.vertices)) / total
            for j in range(n))
        normal = _rand_nonzero(rng, n)
        offset = sum(a * b for a, b in zip(normal, point))
        vals = [sum(a * b for a, b in zip(normal, v)) for v in P.vertices]
        if any(x > offset for x in vals) and any(x < offset for x in vals):
            return slice_body(P, Hyperplane(direction(normal), offset))
    raise RetriesExhaustedError("no valid slicing hyperplane found")
