"""The target-space metric: the coordinate function xi applied to absolute
coordinate differences and averaged.

xi(a) = ln(1 + sqrt(a)) + ln(1 + a)/2 is concave, strictly increasing, and
zero at zero, which makes it metric preserving: rho(x, y), the average of
xi(|x_i - y_i|) over the k coordinates, is a translation-invariant metric.
It is not induced by a norm; scaling both points does not scale rho.

For 0 < a < 1/6 the function is approximately 1/2-homogeneous:
sqrt(a) <= xi(a) <= sqrt(a)(1 + a/2). That envelope is what lets the
really-small-scale argument trade one scale for another.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["SketchedPoint", "xi", "rho", "xi_small_envelope"]


@dataclass(frozen=True)
class SketchedPoint:
    """Image of one point in the k-dimensional target space."""

    coords: np.ndarray
    k: int = field(init=False)

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=np.float64).ravel()
        if coords.size < 1:
            raise ValueError("a sketched point needs at least one coordinate")
        if not np.all(np.isfinite(coords)):
            raise ValueError("sketched coordinates must be finite")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "k", int(coords.size))


def xi(a):
    """Coordinate function xi(a) = ln(1 + sqrt(a)) + ln(1 + a)/2, a >= 0.

    Evaluated through log1p so small a keeps full precision (xi(a) ~ sqrt(a)
    there, and naive ln(1 + sqrt(a)) sheds digits below 1e-8). Accepts
    scalars or arrays. Bounded by ln(1+a) <= xi(a) <= 2 ln(1 + sqrt(a)).
    """
    a = np.asarray(a, dtype=np.float64)
    if np.any(a < 0.0) or np.any(np.isnan(a)):
        raise ValueError("xi requires a >= 0")
    out = np.log1p(np.sqrt(a)) + 0.5 * np.log1p(a)
    return float(out) if out.ndim == 0 else out


def rho(u: SketchedPoint, v: SketchedPoint) -> float:
    """Target metric rho(u, v) = mean of xi over |u_i - v_i|.

    Symmetric, zero exactly on equal points, triangle inequality via the
    concavity of xi, and translation invariant since only differences
    enter. numpy's pairwise (fixed-block tree) reduction keeps the mean
    accurate and bit-stable for large k.
    """
    if not isinstance(u, SketchedPoint) or not isinstance(v, SketchedPoint):
        raise TypeError("rho expects SketchedPoint arguments")
    if u.k != v.k:
        raise ValueError(f"dimension mismatch: {u.k} vs {v.k}")
    return float(np.mean(xi(np.abs(u.coords - v.coords))))


def xi_small_envelope(a: float) -> tuple[float, float]:
    """Approximate 1/2-homogeneity envelope of xi on 0 < a < 1/6.

    Returns (sqrt(a), sqrt(a) (1 + a/2)); xi(a) lies between the two.
    """
    a = float(a)
    if not 0.0 < a < 1.0 / 6.0:
        raise ValueError(f"xi_small_envelope requires 0 < a < 1/6, got {a!r}")
    root = np.sqrt(a)
    return float(root), float(root * (1.0 + 0.5 * a))
