"""Dense Cauchy projections of point sets and l1 distance estimation.

The pipeline: draw a k x d matrix of iid standard Cauchy entries, apply it
to each point, and read distances off the sketches through the nonlinear
mean map. By 1-stability each sketch coordinate difference is Cauchy with
scale ||x - y||_1, so the sketch-space mean of xi concentrates at
mu(||x - y||_1) and mu_inverse turns it back into a distance estimate.

Everything is deterministic in (points, config, seed): matrix entries come
from a single seeded stream in row-major order, so entry (i, j) is draw
number i*d + j regardless of how the matrix is later traversed.

File formats owned here: CSV (one point per row, optional header) and a
raw binary layout (two little-endian uint64 giving the row and column
counts, then row-major little-endian float64 payload) used both for input
datasets and sketch output.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .cauchy import RngSeed, make_generator, sample_standard_cauchy
from .concentration import classify_scale, plan_dimension
from .metric import SketchedPoint, rho
from .moments import mu_inverse

__all__ = [
    "DatasetFormatError",
    "ProjectionMatrix",
    "SketchConfig",
    "build_projection",
    "project",
    "estimate_l1",
    "sketch_dataset",
    "regime_tag",
    "read_points",
    "read_csv_matrix",
    "read_binary_matrix",
    "write_binary_matrix",
]

# Default cap on k*d; a dense float64 matrix at the cap is ~17 GB, well
# past anything this sketch is meant for.
MAX_ENTRIES = 2**31


class DatasetFormatError(ValueError):
    """Malformed dataset or sketch file (bad header, ragged rows, ...)."""


@dataclass(frozen=True, eq=False)
class ProjectionMatrix:
    """k x d iid standard Cauchy matrix, pinned to its seed."""

    k: int
    d: int
    entries: np.ndarray
    seed: RngSeed

    def __post_init__(self) -> None:
        if self.k < 1 or self.d < 1:
            raise ValueError(f"k and d must be >= 1, got k={self.k!r}, d={self.d!r}")
        if self.entries.shape != (self.k, self.d):
            raise ValueError(
                f"entries shape {self.entries.shape} does not match ({self.k}, {self.d})"
            )
        if not np.isfinite(self.entries).all():
            raise ValueError("projection entries must be finite")


@dataclass(frozen=True)
class SketchConfig:
    """Accuracy/failure parameters of a sketching run.

    k_override skips the planner; otherwise the dimension comes from
    plan_dimension(epsilon, n_points, c).
    """

    epsilon: float
    c: float
    n_points: int
    k_override: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < float(self.epsilon) <= 0.25:
            raise ValueError(f"epsilon must be in (0, 1/4], got {self.epsilon!r}")
        if math.isnan(float(self.c)) or float(self.c) < 3.0:
            raise ValueError(f"c must be >= 3, got {self.c!r}")
        if not isinstance(self.n_points, int) or self.n_points < 2:
            raise ValueError(f"n_points must be an integer >= 2, got {self.n_points!r}")
        if self.k_override is not None and (
            not isinstance(self.k_override, int) or self.k_override < 1
        ):
            raise ValueError(f"k_override must be a positive integer, got {self.k_override!r}")

    def target_dimension(self) -> int:
        if self.k_override is not None:
            return self.k_override
        return plan_dimension(self.epsilon, self.n_points, self.c).k


def build_projection(
    k: int, d: int, seed: RngSeed, max_entries: int = MAX_ENTRIES
) -> ProjectionMatrix:
    """Draw the k x d Cauchy projection for a seed, row-major from one stream."""
    if not isinstance(k, int) or not isinstance(d, int) or k < 1 or d < 1:
        raise ValueError(f"k and d must be integers >= 1, got k={k!r}, d={d!r}")
    if k * d > max_entries:
        raise ValueError(f"k*d = {k * d} exceeds the entry budget {max_entries}")
    rng = make_generator(seed)
    entries = sample_standard_cauchy(rng, size=k * d).reshape(k, d)
    entries.setflags(write=False)
    return ProjectionMatrix(k=k, d=d, entries=entries, seed=seed)


def project(matrix: ProjectionMatrix, v: np.ndarray) -> SketchedPoint:
    """Sketch one point: the plain matrix-vector product F v."""
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] != matrix.d:
        raise ValueError(f"point must be a vector of length {matrix.d}, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ValueError("point coordinates must be finite")
    return SketchedPoint(matrix.entries @ v)


def estimate_l1(u: SketchedPoint, v: SketchedPoint) -> float:
    """Estimate ||x - y||_1 from two sketches: mu_inverse of their rho.

    When the planned concentration band holds, the estimate is within a
    factor 1 +- epsilon of the true distance at large scales, and within
    the image of the (1 +- epsilon) mu-band at small ones.
    """
    return mu_inverse(rho(u, v))


def sketch_dataset(
    points, cfg: SketchConfig, seed: RngSeed
) -> tuple[ProjectionMatrix, list[SketchedPoint]]:
    """Sketch a point set with one shared projection, in input order."""
    arr = _as_point_array(points)
    if arr.shape[0] != cfg.n_points:
        raise ValueError(f"got {arr.shape[0]} points but config says n_points={cfg.n_points}")
    matrix = build_projection(cfg.target_dimension(), arr.shape[1], seed)
    return matrix, [project(matrix, row) for row in arr]


def regime_tag(estimate: float, epsilon: float, lambda0: float | None = None) -> str:
    """Which guarantee covers a distance estimate: large / small /
    really-small / unproven-upper.

    Distances at or below 8 eps^2 split on the max-of-iid cutoff: at or
    below lambda0 the two-sided corollary band is proven (really-small),
    between lambda0 and 8 eps^2 the upper tail is an open case
    (unproven-upper). Without a lambda0 the conservative tag is used.
    The classification uses the estimate itself since the true distance
    is unknown.
    """
    estimate = float(estimate)
    if estimate < 0.0 or math.isnan(estimate):
        raise ValueError(f"estimate must be >= 0, got {estimate!r}")
    if estimate == 0.0:
        return "really-small"
    kind = classify_scale(estimate, epsilon).kind
    if kind != "really_small":
        return kind
    if lambda0 is not None and estimate <= lambda0:
        return "really-small"
    return "unproven-upper"


def _as_point_array(points) -> np.ndarray:
    try:
        arr = np.asarray(points, dtype=np.float64)
    except ValueError as exc:
        raise ValueError(f"points must form a rectangular array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"points must be a nonempty list of equal-length vectors, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("point coordinates must be finite")
    return arr


def read_points(path, fmt: str) -> np.ndarray:
    """Read a dataset as an (N, D) float64 array; fmt is 'csv' or 'bin'."""
    if fmt == "csv":
        return read_csv_matrix(path)
    if fmt == "bin":
        return read_binary_matrix(path)
    raise ValueError(f"format must be 'csv' or 'bin', got {fmt!r}")


def read_csv_matrix(path) -> np.ndarray:
    """Parse comma-separated points, one per row; a non-numeric first row
    is treated as a header and skipped."""
    with open(path, newline="") as handle:
        rows = [row for row in csv.reader(handle) if row]
    if rows and not _all_numeric(rows[0]):
        rows = rows[1:]
    if not rows:
        raise DatasetFormatError(f"{path}: no data rows")
    width = len(rows[0])
    data = np.empty((len(rows), width), dtype=np.float64)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DatasetFormatError(f"{path}: row {i} has {len(row)} fields, expected {width}")
        try:
            data[i] = [float(field) for field in row]
        except ValueError:
            raise DatasetFormatError(f"{path}: non-numeric field in row {i}") from None
    if not np.isfinite(data).all():
        raise DatasetFormatError(f"{path}: non-finite value in data")
    return data


def _all_numeric(row) -> bool:
    try:
        for field in row:
            float(field)
    except ValueError:
        return False
    return True


def read_binary_matrix(path) -> np.ndarray:
    """Read the raw binary layout: uint64 LE (rows, cols), float64 LE payload."""
    with open(path, "rb") as handle:
        header = np.fromfile(handle, dtype="<u8", count=2)
        if header.size != 2:
            raise DatasetFormatError(f"{path}: truncated header")
        rows, cols = int(header[0]), int(header[1])
        if rows < 1 or cols < 1:
            raise DatasetFormatError(f"{path}: empty dataset ({rows} x {cols})")
        if rows * cols > MAX_ENTRIES:
            raise DatasetFormatError(f"{path}: {rows} x {cols} exceeds the entry budget")
        data = np.fromfile(handle, dtype="<f8", count=rows * cols)
        if data.size != rows * cols:
            raise DatasetFormatError(
                f"{path}: payload has {data.size} values, header promises {rows * cols}"
            )
        if handle.read(1):
            raise DatasetFormatError(f"{path}: trailing bytes after payload")
    if not np.isfinite(data).all():
        raise DatasetFormatError(f"{path}: non-finite value in data")
    return data.reshape(rows, cols).astype(np.float64, copy=False)


def write_binary_matrix(path, array: np.ndarray) -> None:
    """Write an (N, M) array in the raw binary layout."""
    array = np.ascontiguousarray(array, dtype="<f8")
    if array.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {array.shape}")
    with open(path, "wb") as handle:
        np.asarray(array.shape, dtype="<u8").tofile(handle)
        array.tofile(handle)
