"""Exact convex-hull kernel for dimensions 1 through 4.

Input points are integer tuples; callers scale rational coordinates onto
an integer grid first (a positive per-coordinate scaling preserves the
face lattice).  The point set must affinely span R^d.

For d = 2 the hull is a monotone chain with strict turn tests.  For
d >= 3 it is the beneath-beyond method seeded from a full-dimensional
simplex.  Visibility is strict, so coplanar degeneracies need no
perturbation: the boundary is kept as a triangulation, and true facets
and vertices are recovered afterwards from the deduplicated facet planes
(a boundary point is a vertex iff its active facet normals span R^d).

The visibility scan is the hot loop.  When every |normal_i * coord_i|
stays far below 2^53 the scan runs through numpy float64, which is then
exact integer arithmetic; otherwise it falls back to big-int Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

import numpy as np

from .linalg import int_independent_rows, int_rank, normal_to

Point = tuple[int, ...]

_EXACT_FLOAT_BOUND = 1 << 52


@dataclass
class HullData:
    """Hull of an integer point set, full-dimensional in R^d.

    vertices:      indices (into the input list) of the extreme points
    planes:        outward facet planes (normal, offset): <n, x> <= b on
                   the hull with equality exactly on the facet; one entry
                   per geometric facet, normals primitive
    plane_members: for each plane, the extreme-point indices lying on it
    boundary_tri:  simplices (d-tuples of input indices) triangulating
                   the whole boundary; used for volume pyramids
    """

    dim: int
    vertices: list[int]
    planes: list[tuple[Point, int]]
    plane_members: list[list[int]]
    boundary_tri: list[tuple[int, ...]]


def convex_hull(pts: list[Point], d: int) -> HullData:
    if d == 1:
        return _hull_1d(pts)
    if d == 2:
        return _hull_2d(pts)
    return _hull_nd(pts, d)


def _hull_1d(pts: list[Point]) -> HullData:
    lo = min(range(len(pts)), key=lambda i: pts[i])
    hi = max(range(len(pts)), key=lambda i: pts[i])
    if pts[lo] == pts[hi]:
        raise ValueError("1-d hull needs two distinct points")
    planes = [((1,), pts[hi][0]), ((-1,), -pts[lo][0])]
    return HullData(1, sorted({lo, hi}), planes, [[hi], [lo]], [(hi,), (lo,)])


def _cross2(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts: list[Point]) -> HullData:
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    # strict turns drop collinear interior points, so every chain point
    # is a true vertex
    def build(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and _cross2(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    ring = lower[:-1] + upper[:-1]  # counterclockwise
    if len(ring) < 3:
        raise ValueError("2-d hull needs non-collinear points")
    planes: list[tuple[Point, int]] = []
    members: list[list[int]] = []
    tri: list[tuple[int, ...]] = []
    for k in range(len(ring)):
        a, b = ring[k], ring[(k + 1) % len(ring)]
        e0 = pts[b][0] - pts[a][0]
        e1 = pts[b][1] - pts[a][1]
        n = (e1, -e0)  # outward for a counterclockwise ring
        g = gcd(abs(n[0]), abs(n[1]))
        n = (n[0] // g, n[1] // g)
        planes.append((n, n[0] * pts[a][0] + n[1] * pts[a][1]))
        members.append(sorted((a, b)))
        tri.append((a, b))
    return HullData(2, sorted(ring), planes, members, tri)


def _seed_simplex(pts: list[Point], d: int) -> list[int]:
    diffs = [tuple(x - y for x, y in zip(p, pts[0])) for p in pts[1:]]
    picked = int_independent_rows(diffs)
    if len(picked) < d:
        raise ValueError("points do not span R^d")
    return [0] + [i + 1 for i in picked[:d]]


class _Facets:
    """Mutable facet store with an exact vectorized visibility scan."""

    def __init__(self, d: int, max_coord: int):
        self.d = d
        self.vs: list[tuple[int, ...]] = []
        self.normals: list[Point] = []
        self.offsets: list[int] = []
        self.max_normal = 0
        self.max_coord = max(1, max_coord)
        self._np_n = None
        self._np_b = None

    def add(self, vs: tuple[int, ...], n: Point, b: int):
        self.vs.append(vs)
        self.normals.append(n)
        self.offsets.append(b)
        self.max_normal = max(self.max_normal, max(abs(x) for x in n), abs(b))
        self._np_n = None

    def replace(self, keep: list[int]):
        self.vs = [self.vs[i] for i in keep]
        self.normals = [self.normals[i] for i in keep]
        self.offsets = [self.offsets[i] for i in keep]
        self._np_n = None

    def _float_exact(self) -> bool:
        return (self.d + 1) * self.max_normal * self.max_coord < _EXACT_FLOAT_BOUND

    def visible_from(self, p: Point) -> list[int]:
        """Indices of facets with <n, p> strictly above the offset."""
        if self._float_exact():
            if self._np_n is None:
                self._np_n = np.array(self.normals, dtype=np.float64)
                self._np_b = np.array(self.offsets, dtype=np.float64)
            vals = self._np_n @ np.array(p, dtype=np.float64)
            return np.nonzero(vals > self._np_b)[0].tolist()
        out = []
        for i, (n, b) in enumerate(zip(self.normals, self.offsets)):
            if sum(a * x for a, x in zip(n, p)) > b:
                out.append(i)
        return out


def _oriented(pts, idxs, cnum, cden, d):
    base = pts[idxs[0]]
    vectors = [tuple(x - y for x, y in zip(pts[i], base)) for i in idxs[1:]]
    n = normal_to(vectors, d)
    b = sum(a * x for a, x in zip(n, base))
    side = sum(a * x for a, x in zip(n, cnum)) - b * cden
    if side == 0:
        raise AssertionError("interior reference on facet plane")
    if side > 0:
        n = tuple(-a for a in n)
        b = -b
    return tuple(sorted(idxs)), n, b


def _hull_nd(pts: list[Point], d: int) -> HullData:
    seed = _seed_simplex(pts, d)
    cnum = tuple(sum(pts[i][k] for i in seed) for k in range(d))
    cden = d + 1
    max_coord = max((abs(c) for p in pts for c in p), default=1)
    store = _Facets(d, max_coord)
    for f in combinations(seed, d):
        store.add(*_oriented(pts, f, cnum, cden, d))
    in_seed = set(seed)
    for p_i in range(len(pts)):
        if p_i in in_seed:
            continue
        visible = store.visible_from(pts[p_i])
        if not visible:
            continue
        visible_set = set(visible)
        ridge_count: dict[tuple[int, ...], int] = {}
        for fi in visible:
            for r in combinations(store.vs[fi], d - 1):
                ridge_count[r] = ridge_count.get(r, 0) + 1
        keep = [i for i in range(len(store.vs)) if i not in visible_set]
        store.replace(keep)
        for r, cnt in ridge_count.items():
            if cnt == 1:
                store.add(*_oriented(pts, r + (p_i,), cnum, cden, d))

    # deduplicate geometric facet planes (outward orientation is unique)
    plane_map: dict[tuple[Point, int], None] = {}
    for n, b in zip(store.normals, store.offsets):
        g = 0
        for a in n:
            g = gcd(g, abs(a))
        g = gcd(g, abs(b))
        plane_map[(tuple(a // g for a in n), b // g)] = None
    planes = list(plane_map.keys())

    candidates = sorted({i for vs in store.vs for i in vs})
    vertices = []
    for i in candidates:
        p = pts[i]
        active = [n for n, b in planes
                  if sum(a * x for a, x in zip(n, p)) == b]
        if int_rank(active) == d:
            vertices.append(i)
    members = []
    for n, b in planes:
        members.append([i for i in vertices
                        if sum(a * x for a, x in zip(n, pts[i])) == b])
    return HullData(d, vertices, planes, members, list(store.vs))
