"""Exact vertex-representation polytope kernel.

A :class:`Polytope` is the canonical extreme-point description of a
compact convex polytope in R^n: vertices are exact rationals, sorted
lexicographically, with no point in the hull of the others.  Structural
equality of two canonical polytopes is geometric equality, which is what
makes the exact valuation checks downstream possible.

All operations are pure; polytopes are immutable and hashable, and the
expensive derived data (affine dimension, facets, volume) is memoized on
the canonical value.  Everything is exact except
:func:`hausdorff_lower`, which is the float tolerance device for the
approximate evaluation layer.

The facet machinery assumes ambient dimension at most 4 (configurable
via ``MINKVAL_MAX_DIM``); the kernels are brute force on purpose and all
phenomena of interest already occur at n = 2, 3.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    DegenerateBodyError,
    DimensionMismatchError,
    MissesInteriorError,
    NegativeScaleError,
    ZeroVectorError,
)
from .hull import convex_hull
from .linalg import dot, independent_rows, rank, solve, vadd, vsub

Vector = tuple[Fraction, ...]


def max_dim() -> int:
    return int(os.environ.get("MINKVAL_MAX_DIM", "4"))


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def as_vector(coords: Sequence, n: int | None = None) -> Vector:
    v = tuple(as_fraction(c) for c in coords)
    if n is not None and len(v) != n:
        raise DimensionMismatchError(f"expected length {n}, got {len(v)}")
    return v


def direction(coords: Sequence, n: int | None = None) -> Vector:
    """A nonzero rational vector, used wherever a direction u is needed."""
    v = as_vector(coords, n)
    if all(c == 0 for c in v):
        raise ZeroVectorError("direction must be nonzero")
    return v


@dataclass(frozen=True)
class Hyperplane:
    """The set {x : <normal, x> = offset}; normal is nonzero."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise ZeroVectorError("hyperplane normal must be nonzero")

    def value(self, p: Vector) -> Fraction:
        return dot(self.normal, p)


@dataclass(frozen=True)
class Polytope:
    """Canonical V-representation: sorted tuple of the extreme points."""

    dim: int
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatchError("ambient dimension must be >= 1")
        if not self.vertices:
            raise ValueError("polytope needs at least one vertex")
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatchError("vertex length != ambient dimension")

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)})"


def from_point(coords: Sequence) -> Polytope:
    v = as_vector(coords)
    return Polytope(len(v), (v,))


def _check_same_dim(P: Polytope, Q: Polytope):
    if P.dim != Q.dim:
        raise DimensionMismatchError(f"ambient dimensions differ: {P.dim} vs {Q.dim}")


def _intify(pts: Sequence[Vector]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Scale each coordinate by the lcm of its denominators.

    A positive diagonal scaling is an invertible linear map, so it
    preserves extreme points and the entire face lattice; the hull kernel
    then runs on machine/big integers instead of Fractions.
    """
    d = len(pts[0])
    scales = []
    for j in range(d):
        m = 1
        for p in pts:
            m = lcm(m, p[j].denominator)
        scales.append(m)
    int_pts = [tuple(int(p[j] * scales[j]) for j in range(d)) for p in pts]
    return int_pts, scales


def canonicalize(points: Iterable[Sequence], n: int) -> Polytope:
    """Polytope whose vertex set is exactly the extreme points of the input."""
    if n > max_dim():
        raise DimensionMismatchError(
            f"ambient dimension {n} exceeds MINKVAL_MAX_DIM={max_dim()}")
    pts = sorted({as_vector(p, n) for p in points})
    if not pts:
        raise ValueError("no points given")
    if len(pts) == 1:
        return Polytope(n, (pts[0],))
    int_pts, _ = _intify(pts)
    int_diffs = [tuple(a - b for a, b in zip(p, int_pts[0])) for p in int_pts[1:]]
    picked = int_independent_rows(int_diffs)
    k = len(picked)
    if k == n:
        hd = convex_hull(int_pts, n)
    else:
        v0 = pts[0]
        basis = [vsub(pts[i + 1], v0) for i in picked]
        coords = [_affine_coords(basis, vsub(p, v0)) for p in pts]
        low_pts, _ = _intify(coords)
        hd = convex_hull(low_pts, k)
    return Polytope(n, tuple(sorted(pts[i] for i in hd.vertices)))


def _affine_coords(basis: list[Vector], rhs: Vector) -> Vector:
    """Coordinates x with sum_i x_i basis_i = rhs (rhs must lie in the span)."""
    rows = [[basis[i][r] for i in range(len(basis))] for r in range(len(rhs))]
    piv = independent_rows(rows)
    x = solve([rows[r] for r in piv], [rhs[r] for r in piv])
    return tuple(x)


@lru_cache(maxsize=None)
def affine_dim(P: Polytope) -> int:
    """Dimension of the affine hull, exact; 0 for a point."""
    v0 = P.vertices[0]
    return rank([vsub(v, v0) for v in P.vertices[1:]])


def support(P: Polytope, u: Sequence) -> Fraction:
    """Support function h(P, u) = max over vertices of <u, v>."""
    uu = direction(u, P.dim)
    return max(dot(uu, v) for v in P.vertices)


def argmax_support(P: Polytope, u: Sequence) -> Vector:
    """A vertex attaining h(P, u); ties broken lexicographically largest."""
    uu = direction(u, P.dim)
    h = max(dot(uu, v) for v in P.vertices)
    return max(v for v in P.vertices if dot(uu, v) == h)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    _check_same_dim(P, Q)
    sums = [vadd(p, q) for p in P.vertices for q in Q.vertices]
    return canonicalize(sums, P.dim)


def scale(P: Polytope, lam) -> Polytope:
    lam = as_fraction(lam)
    if lam < 0:
        raise NegativeScaleError("scale factor must be nonnegative")
    if lam == 0:
        return Polytope(P.dim, (tuple(Fraction(0) for _ in range(P.dim)),))
    return Polytope(P.dim, tuple(sorted(tuple(lam * c for c in v)
                                        for v in P.vertices)))


def reflect(P: Polytope) -> Polytope:
    """The reflection -P through the origin."""
    return Polytope(P.dim, tuple(sorted(tuple(-c for c in v)
                                        for v in P.vertices)))


def translate(P: Polytope, t: Sequence) -> Polytope:
    tt = as_vector(t, P.dim)
    return Polytope(P.dim, tuple(sorted(vadd(v, tt) for v in P.vertices)))


def linear_image(P: Polytope, m_rows: Sequence[Sequence]) -> Polytope:
    """Image under the matrix with the given rows; may drop dimension."""
    rows = [as_vector(r, P.dim) for r in m_rows]
    if len(rows) != P.dim:
        raise DimensionMismatchError("matrix must be square of ambient size")
    imgs = [tuple(dot(r, v) for r in rows) for v in P.vertices]
    return canonicalize(imgs, P.dim)


@lru_cache(maxsize=None)
def _full_hull(P: Polytope):
    if affine_dim(P) < P.dim:
        raise DegenerateBodyError("body is not full-dimensional")
    int_pts, scales = _intify(P.vertices)
    hd = convex_hull(int_pts, P.dim)
    if hd.vertices != list(range(len(int_pts))):
        raise AssertionError("canonical polytope had non-extreme vertices")
    return hd, int_pts, scales


@lru_cache(maxsize=None)
def volume(P: Polytope) -> Fraction:
    """Exact n-dimensional volume; 0 for lower-dimensional bodies."""
    n = P.dim
    if affine_dim(P) < n:
        return Fraction(0)
    hd, int_pts, scales = _full_hull(P)
    apex = int_pts[0]
    total = 0
    from .linalg import int_det
    for simplex in hd.boundary_tri:
        m = [tuple(a - b for a, b in zip(int_pts[i], apex)) for i in simplex]
        total += abs(int_det(m))
    vol = Fraction(total, factorial(n))
    for s in scales:
        vol /= s
    return vol


@lru_cache(maxsize=None)
def facets(P: Polytope) -> tuple[tuple[Hyperplane, tuple[int, ...]], ...]:
    """Facet hyperplanes with the indices of the vertices on each.

    Normals point outward: <normal, x> <= offset holds on P with equality
    exactly on the facet.  Requires a full-dimensional body.
    """
    hd, _, scales = _full_hull(P)
    out = []
    for (n_int, b), mem in zip(hd.planes, hd.plane_members):
        raw = [a * s for a, s in zip(n_int, scales)]
        g = 0
        for a in raw:
            g = gcd(g, abs(a))
        g = gcd(g, abs(b))
        hp = Hyperplane(tuple(Fraction(a, g) for a in raw), Fraction(b, g))
        out.append((hp, tuple(sorted(mem))))
    return tuple(out)


@lru_cache(maxsize=None)
def edges(P: Polytope) -> tuple[tuple[int, int], ...]:
    """Vertex-index pairs forming the 1-faces of a full-dimensional body."""
    n = P.dim
    verts = P.vertices
    if affine_dim(P) < n:
        raise DegenerateBodyError("edges need a full-dimensional body")
    if n == 1:
        return ((0, 1),)
    fac = facets(P)
    active = [set() for _ in verts]
    for f_idx, (_, mem) in enumerate(fac):
        for i in mem:
            active[i].add(f_idx)
    result = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            common = active[i] & active[j]
            if len(common) < n - 1:
                continue
            normals = [fac[f][0].normal for f in common]
            if rank(normals) == n - 1:
                result.append((i, j))
    return tuple(result)


def slice_body(P: Polytope, H: Hyperplane) -> tuple[Polytope, Polytope, Polytope]:
    """Cut P by H into (P ∩ H+, P ∩ H-, P ∩ H), all exact.

    Requires H to cut the interior: both open halfspaces must contain a
    vertex.  The middle piece is the shared (n-1)-dimensional face of the
    two halves, so the pair is exactly the kind of convex-union instance
    the valuation identity quantifies over.
    """
    if len(H.normal) != P.dim:
        raise DimensionMismatchError("hyperplane dimension mismatch")
    vals = [H.value(v) for v in P.vertices]
    b = H.offset
    if not (any(x > b for x in vals) and any(x < b for x in vals)):
        raise MissesInteriorError("hyperplane misses the interior of the body")
    cross = []
    for i, j in edges(P):
        vi, vj = vals[i], vals[j]
        if (vi > b and vj < b) or (vi < b and vj > b):
            t = (b - vi) / (vj - vi)
            p, q = P.vertices[i], P.vertices[j]
            cross.append(tuple(pc + t * (qc - pc) for pc, qc in zip(p, q)))
    plus = [v for v, x in zip(P.vertices, vals) if x >= b]
    minus = [v for v, x in zip(P.vertices, vals) if x <= b]
    on = [v for v, x in zip(P.vertices, vals) if x == b]
    K = canonicalize(plus + cross, P.dim)
    L = canonicalize(minus + cross, P.dim)
    M = canonicalize(on + cross, P.dim)
    return K, L, M


def contains(P: Polytope, Q: Polytope) -> bool:
    """Whether Q ⊆ P (every vertex of Q inside P), exact."""
    _check_same_dim(P, Q)
    return _contains_points(P, Q.vertices)


def _contains_points(P: Polytope, points: Sequence[Vector]) -> bool:
    k = affine_dim(P)
    if k == P.dim:
        fac = facets(P)
        return all(hp.value(q) <= hp.offset for q in points for hp, _ in fac)
    if k == 0:
        p0 = P.vertices[0]
        return all(q == p0 for q in points)
    # lower-dimensional: affine-hull membership, then relative facets
    v0 = P.vertices[0]
    basis = _affine_basis(P)
    mapped_q = []
    for q in points:
        x = _span_coords(basis, vsub(q, v0))
        if x is None:
            return False
        mapped_q.append(x)
    mapped_p = [_affine_coords(basis, vsub(v, v0)) for v in P.vertices]
    rel = Polytope(k, tuple(sorted(mapped_p)))
    return _contains_points(rel, mapped_q)


@lru_cache(maxsize=None)
def _affine_basis(P: Polytope) -> tuple[Vector, ...]:
    v0 = P.vertices[0]
    diffs = [vsub(v, v0) for v in P.vertices[1:]]
    picked = independent_rows(diffs)
    return tuple(diffs[i] for i in picked)


def _span_coords(basis: tuple[Vector, ...], rhs: Vector) -> Vector | None:
    """Coordinates of rhs in the span of basis, or None if outside it."""
    x = _affine_coords(list(basis), rhs)
    recon = [sum(x[i] * basis[i][r] for i in range(len(basis)))
             for r in range(len(rhs))]
    if tuple(recon) != tuple(rhs):
        return None
    return x


def equal(P: Polytope, Q: Polytope) -> bool:
    """Structural equality of canonical forms (= geometric equality)."""
    return P == Q


def hausdorff_lower(P: Polytope, Q: Polytope, dirs: Sequence[Sequence]) -> float:
    """Lower bound for the Hausdorff distance from sampled directions.

    Evaluates max over the given directions u of |h(P,u) - h(Q,u)| / |u|
    in floating point.  Only used by the approximate evaluation layer.
    """
    _check_same_dim(P, Q)
    if not dirs:
        raise ValueError("need at least one direction")
    best = 0.0
    for u in dirs:
        uu = direction(u, P.dim)
        norm = sum(float(c) * float(c) for c in uu) ** 0.5
        diff = abs(float(support(P, uu) - support(Q, uu))) / norm
        best = max(best, diff)
    return best


def interior_point(P: Polytope) -> Vector:
    """The vertex centroid: a relative-interior point of P."""
    m = len(P.vertices)
    return tuple(sum(v[j] for v in P.vertices) / m for j in range(P.dim))
