"""Standard symmetric Cauchy distribution: reproducible sampling, the
distribution of |X|, and 1-stable linear combinations.

The standard Cauchy density is 1/(pi (1+x^2)). Its absolute value has
CDF (2/pi) arctan(t) and survival (2/pi) arctan(1/t), and linear
combinations sum_j v_j X_j of iid draws are distributed as ||v||_1 X:
that 1-stability is what lets a single projected coordinate carry the
l1 norm. The property is about laws, so it is validated distributionally
(Kolmogorov-Smirnov at fixed n), never per draw.

Sampling is by inverse CDF, tan(pi (u - 1/2)) for u uniform on (0, 1):
one uniform per draw and exactly reproducible. Degenerate uniforms
(exactly 0 or 1) are redrawn. Streams come from numpy's PCG64 seeded
through SeedSequence(entropy=seed, spawn_key=(stream_id,)), which is
documented to be deterministic across platforms; the generator identity
travels with sketch metadata so experiments can be replayed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "RngSeed",
    "GENERATOR_NAME",
    "make_generator",
    "sample_standard_cauchy",
    "cdf_abs",
    "survival_abs",
    "stable_combination",
    "ks_statistic",
    "ks_statistic_two_sample",
    "ks_critical_value",
]

GENERATOR_NAME = "pcg64-seedseq"

_U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngSeed:
    """A (seed, stream_id) pair naming one deterministic sample stream."""

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name, value in (("seed", self.seed), ("stream_id", self.stream_id)):
            if not isinstance(value, int) or not 0 <= value <= _U64_MAX:
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {value!r}")


def make_generator(seed: RngSeed) -> np.random.Generator:
    """Generator for the stream named by ``seed``; same input, same stream."""
    ss = np.random.SeedSequence(entropy=seed.seed, spawn_key=(seed.stream_id,))
    return np.random.Generator(np.random.PCG64(ss))


def _inverse_cdf(u):
    # Median of Cauchy(1) is 0; quartiles are -+1.
    return np.tan(np.pi * (np.asarray(u, dtype=np.float64) - 0.5))


def sample_standard_cauchy(rng: np.random.Generator, size: int | None = None):
    """Draw from Cauchy(1) via tan(pi (u - 1/2)).

    ``size=None`` returns a float; an integer returns that many draws in
    stream order. Uniforms that land exactly on 0 or 1 are redrawn, so the
    transform never sees its poles.
    """
    if size is None:
        u = rng.random()
        while u == 0.0 or u == 1.0:
            u = rng.random()
        return float(_inverse_cdf(u))
    u = rng.random(size)
    bad = (u == 0.0) | (u == 1.0)
    while bad.any():
        u[bad] = rng.random(int(bad.sum()))
        bad = (u == 0.0) | (u == 1.0)
    return _inverse_cdf(u)


def cdf_abs(t):
    """P{|X| <= t} = (2/pi) arctan(t) for t >= 0."""
    t = np.asarray(t, dtype=np.float64)
    if np.any(t < 0.0) or np.any(np.isnan(t)):
        raise ValueError("cdf_abs requires t >= 0")
    out = (2.0 / np.pi) * np.arctan(t)
    return float(out) if out.ndim == 0 else out


def survival_abs(t):
    """P{|X| > t} = (2/pi) arctan(1/t) for t > 0.

    Equals 1 - cdf_abs(t) by the arctan inversion formula
    arctan(t) + arctan(1/t) = pi/2.
    """
    t = np.asarray(t, dtype=np.float64)
    if np.any(t <= 0.0) or np.any(np.isnan(t)):
        raise ValueError("survival_abs requires t > 0")
    out = (2.0 / np.pi) * np.arctan(1.0 / t)
    return float(out) if out.ndim == 0 else out


def stable_combination(v, rng: np.random.Generator, size: int | None = None):
    """sum_j v_j X_j with X_j iid Cauchy(1); distributed as ||v||_1 X.

    With size=None returns one combination as a float; with an integer
    size returns that many independent combinations as an array, each
    consuming len(v) consecutive draws of the stream.
    """
    v = np.asarray(v, dtype=np.float64).ravel()
    if v.size == 0:
        raise ValueError("stable_combination requires a non-empty vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("stable_combination requires finite weights")
    if size is None:
        return float(np.dot(v, sample_standard_cauchy(rng, v.size)))
    if not isinstance(size, int) or size < 1:
        raise ValueError(f"size must be a positive integer or None, got {size!r}")
    draws = sample_standard_cauchy(rng, size * v.size).reshape(size, v.size)
    return draws @ v


def ks_statistic(samples, cdf) -> float:
    """Two-sided Kolmogorov-Smirnov distance between a sample and a CDF.

    max over the sample of |F_hat - F| evaluated on both sides of each
    jump of the empirical CDF. The 1% critical value at size n is about
    1.63/sqrt(n) for large n.
    """
    x = np.sort(np.asarray(samples, dtype=np.float64))
    n = x.size
    if n == 0:
        raise ValueError("ks_statistic requires a non-empty sample")
    f = np.asarray(cdf(x), dtype=np.float64)
    grid = np.arange(1, n + 1) / n
    d_plus = np.max(grid - f)
    d_minus = np.max(f - (grid - 1.0 / n))
    return float(max(d_plus, d_minus))


def ks_statistic_two_sample(a, b) -> float:
    """Two-sample KS distance, sup_t |F_hat_a(t) - F_hat_b(t)|."""
    a = np.sort(np.asarray(a, dtype=np.float64))
    b = np.sort(np.asarray(b, dtype=np.float64))
    if a.size == 0 or b.size == 0:
        raise ValueError("ks_statistic_two_sample requires non-empty samples")
    # Evaluate both empirical CDFs just after every jump point.
    grid = np.concatenate([a, b])
    fa = np.searchsorted(a, grid, side="right") / a.size
    fb = np.searchsorted(b, grid, side="right") / b.size
    return float(np.max(np.abs(fa - fb)))


def ks_critical_value(n: int, level: float = 0.01) -> float:
    """Asymptotic KS critical value c(level)/sqrt(n).

    c is the root of the Kolmogorov distribution tail; 1.628 at the 1%
    level and 1.358 at 5%. Only those two levels are tabulated here.
    """
    table = {0.01: 1.628, 0.05: 1.358}
    if level not in table:
        raise ValueError(f"no tabulated KS coefficient for level {level!r}")
    if n <= 0:
        raise ValueError("ks_critical_value requires n >= 1")
    return table[level] / math.sqrt(n)
