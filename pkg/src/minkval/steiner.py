"""Steiner point by deterministic sphere quadrature.

s(K) = (1/kappa_n) * integral over S^(n-1) of h(K, u) u du, approximated
on a fixed node set: uniform midpoint angles for n = 2, a Fibonacci
spiral for n = 3, and a midpoint product rule in hyperspherical angles
for n = 4.  The node set depends only on (n, N), so every run sees the
same values.  This is the only floating-point corner of the package.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .polytope import Polytope

MIN_NODES = 32


def ball_volume(n: int) -> float:
    """Volume kappa_n of the n-dimensional Euclidean unit ball."""
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


@lru_cache(maxsize=16)
def sphere_nodes(n: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic quadrature nodes and weights on S^(n-1).

    Weights sum to the sphere area; constants integrate exactly.
    """
    if count < MIN_NODES:
        raise ValueError(f"need at least {MIN_NODES} nodes")
    if n == 2:
        theta = 2.0 * math.pi * (np.arange(count) + 0.5) / count
        nodes = np.stack([np.cos(theta), np.sin(theta)], axis=1)
        weights = np.full(count, 2.0 * math.pi / count)
        return nodes, weights
    if n == 3:
        i = np.arange(count)
        z = 1.0 - (2.0 * i + 1.0) / count
        phi = i * math.pi * (3.0 - math.sqrt(5.0))
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        nodes = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
        weights = np.full(count, 4.0 * math.pi / count)
        return nodes, weights
    if n == 4:
        m = max(4, round(count ** (1.0 / 3.0)))
        a = math.pi * (np.arange(m) + 0.5) / m
        b = math.pi * (np.arange(m) + 0.5) / m
        g = 2.0 * math.pi * (np.arange(m) + 0.5) / m
        A, B, G = np.meshgrid(a, b, g, indexing="ij")
        nodes = np.stack([
            np.cos(A),
            np.sin(A) * np.cos(B),
            np.sin(A) * np.sin(B) * np.cos(G),
            np.sin(A) * np.sin(B) * np.sin(G),
        ], axis=-1).reshape(-1, 4)
        cell = (math.pi / m) * (math.pi / m) * (2.0 * math.pi / m)
        weights = (np.sin(A) ** 2 * np.sin(B)).reshape(-1) * cell
        return nodes, weights
    raise ValueError(f"no sphere quadrature for dimension {n}")


def steiner_point(P: Polytope, count: int) -> tuple[float, ...]:
    """Quadrature approximation of the Steiner point of P."""
    n = P.dim
    nodes, weights = sphere_nodes(n, count)
    verts = np.array([[float(c) for c in v] for v in P.vertices])
    h = (nodes @ verts.T).max(axis=1)
    s = (nodes * (weights * h)[:, None]).sum(axis=0) / ball_volume(n)
    return tuple(float(x) for x in s)
