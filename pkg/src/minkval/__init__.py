"""Exact-arithmetic laboratory for convex polytopes and Minkowski valuations."""

from .polytope import (
    Hyperplane,
    Polytope,
    affine_dim,
    canonicalize,
    contains,
    equal,
    facets,
    from_point,
    hausdorff_lower,
    linear_image,
    minkowski_sum,
    reflect,
    scale,
    slice_body,
    support,
    translate,
    volume,
)

__version__ = "0.1.0"
