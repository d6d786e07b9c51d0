"""Exact mixed volumes via inclusion-exclusion polarization.

V(K_1, ..., K_n) is computed as

    (1/n!) * sum over nonempty J ⊆ {1..n} of (-1)^(n-|J|) V_n(Σ_{j∈J} K_j),

which only needs the exact volume kernel.  Subset-sum volumes are
memoized per multiset of bodies because the audits issue many
overlapping queries.  Dimension positivity follows the classical
criterion: the mixed volume is positive iff every sub-collection of k
bodies has a sum of dimension at least k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, lcm

from .errors import DimensionMismatchError
from .linalg import int_det
from .polytope import (
    Polytope,
    affine_dim,
    as_vector,
    minkowski_sum,
    scale,
    volume,
)


def _check_query(bodies) -> int:
    bodies = list(bodies)
    if not bodies:
        raise ValueError("empty mixed-volume query")
    n = bodies[0].dim
    if len(bodies) != n or any(b.dim != n for b in bodies):
        raise DimensionMismatchError(
            "mixed volume needs exactly n bodies in R^n")
    return n


@lru_cache(maxsize=None)
def _sum_body(bodies: tuple[Polytope, ...]) -> Polytope:
    acc = bodies[0]
    for b in bodies[1:]:
        acc = minkowski_sum(acc, b)
    return acc


def _multiset(bodies) -> tuple[Polytope, ...]:
    return tuple(sorted(bodies, key=lambda p: p.vertices))


def subset_sum(bodies) -> Polytope:
    """Minkowski sum of the given bodies (memoized per multiset)."""
    return _sum_body(_multiset(bodies))


def mixed_volume(bodies) -> Fraction:
    """V(K_1, ..., K_n), exact.  Symmetric; V(K, ..., K) = V_n(K)."""
    bodies = list(bodies)
    n = _check_query(bodies)
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in combinations(range(n), size):
            v = volume(subset_sum([bodies[i] for i in subset]))
            total += sign * v
    return total / factorial(n)


def positivity_criterion(bodies) -> bool:
    """Dimension criterion for V(K_1,...,K_n) > 0.

    True iff dim(K_{i_1} + ... + K_{i_k}) >= k for every nonempty choice
    of indices.
    """
    bodies = list(bodies)
    n = _check_query(bodies)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if affine_dim(subset_sum([bodies[i] for i in subset])) < size:
                return False
    return True


def positivity_equivalence_check(bodies) -> bool:
    """Test oracle: sign of the mixed volume agrees with the criterion."""
    return (mixed_volume(bodies) > 0) == positivity_criterion(bodies)


def zonotope_volume_fast(gens, n: int | None = None) -> Fraction:
    """Volume of the zonotope of centered segments S_v, by determinants.

    Equals 2^n * sum over n-subsets of |det(v_{i_1}, ..., v_{i_n})|;
    serves as the independent oracle for the hull-based volume.
    """
    gens = [as_vector(g) for g in gens]
    if n is None:
        n = len(gens[0])
    total = Fraction(0)
    for subset in combinations(gens, n):
        m = lcm(*(c.denominator for v in subset for c in v))
        int_rows = [tuple(int(c * m) for c in v) for v in subset]
        total += Fraction(abs(int_det(int_rows)), m ** n)
    return (2 ** n) * total


def expansion_check(K: Polytope, L: Polytope, tmax: int) -> bool:
    """Verify V_n(K + tL) = Σ_k C(n,k) t^k V(K[n-k], L[k]) for t = 1..tmax."""
    if K.dim != L.dim:
        raise DimensionMismatchError("bodies must share the ambient dimension")
    n = K.dim
    coeffs = [mixed_volume([K] * (n - k) + [L] * k) for k in range(n + 1)]
    for t in range(1, tmax + 1):
        lhs = volume(minkowski_sum(K, scale(L, t)))
        rhs = sum(comb(n, k) * Fraction(t) ** k * coeffs[k] for k in range(n + 1))
        if lhs != rhs:
            return False
    return True
