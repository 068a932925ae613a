"""Chowla-Walum sums G_{a,alpha,j}(x) and their dyadic block pieces.

    G_{a,alpha,j}(x) = sum_{d <= x^(1/a)} d^alpha * B_j({x/d})

with B_j the periodic Bernoulli functions (B_0 = 1, B_1 = psi).  a = 2
recovers the classical sums whose cancellation behaviour the Chowla-Walum
conjecture quantifies; j = 0 additionally admits negative alpha.

Exact mode (integer x, integer alpha) accumulates rationals dyadic block by
dyadic block, so cancellation-prone values are never touched by rounding.
Float mode is a vectorized double-precision pass: with integer x the
fractional parts {x/d} come from the exact remainder x mod d, which keeps
the sawtooth accurate even when x/d is far above 2^53 * ulp territory.

The cutoff D = floor(x^(1/a)) is always decided in integer or extended
precision arithmetic: integer a compares d**a <= x exactly, rational a = p/q
compares d**p <= x**q exactly, and float a falls back to 40-digit log
comparisons with a +-2 correction sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .bernoulli import bernoulli_coefficients, psi
from .divisors import integer_root

_INT64_SAFE_X = 2**62


@dataclass(frozen=True)
class GSumSpec:
    """Parameters of one Chowla-Walum sum.

    a may be an int, Fraction, or float > 1.  j = 0 permits any real alpha;
    j >= 1 requires alpha >= 0.  Exact mode needs integer x and integer
    alpha so every B_j({x/d}) is an exact rational.
    """

    a: int | Fraction | float
    alpha: int | float
    j: int
    x: int | float

    def __post_init__(self):
        if self.a <= 1:
            raise ValueError(f"restriction root a must exceed 1, got {self.a!r}")
        if not isinstance(self.j, int) or isinstance(self.j, bool) or self.j < 0:
            raise ValueError(f"Bernoulli index j must be an integer >= 0, got {self.j!r}")
        if self.j >= 1 and self.alpha < 0:
            raise ValueError(f"alpha must be >= 0 when j >= 1, got alpha={self.alpha!r}")
        if self.x < 0:
            raise ValueError(f"evaluation point must be >= 0, got {self.x!r}")

    @property
    def exact(self) -> bool:
        return isinstance(self.x, int) and isinstance(self.alpha, int) and not (
            isinstance(self.x, bool) or isinstance(self.alpha, bool)
        )

    @property
    def cutoff(self) -> int:
        return gsum_cutoff(self.x, self.a)


def gsum_cutoff(x, a) -> int:
    """Largest integer D >= 0 with D**a <= x."""
    if x < 0:
        raise ValueError("x must be >= 0")
    if x < 1:
        return 0
    if isinstance(a, int) and not isinstance(a, bool):
        return integer_root(math.floor(x), a)
    if isinstance(a, Fraction) and isinstance(x, int):
        # D <= x^(q/p)  <=>  D**p <= x**q, an exact integer comparison
        return integer_root(x**a.denominator, a.numerator)
    # float a (or float x with fractional a): 40-digit monotone comparison
    with mp.workdps(40):
        lx = mp.log(mp.mpf(x))
        la = mp.mpf(a) if not isinstance(a, Fraction) else mp.mpf(a.numerator) / a.denominator
        d = int(mp.floor(mp.exp(lx / la)))
        while d > 0 and la * mp.log(d) > lx:
            d -= 1
        while la * mp.log(d + 1) <= lx:
            d += 1
        return d


def _exact_range_sum(x: int, alpha: int, j: int, lo: int, hi: int):
    """sum_{lo <= d <= hi} d^alpha B_j({x/d}) in exact arithmetic."""
    if lo > hi:
        return 0 if j == 0 and alpha >= 0 else Fraction(0)
    if j == 0:
        if alpha >= 0:
            return sum(d**alpha for d in range(lo, hi + 1))
        return sum(Fraction(1, d**-alpha) for d in range(lo, hi + 1))
    if j == 1:
        if alpha >= 1:
            # d^alpha * psi(x/d) = d^(alpha-1) r_d - d^alpha / 2, all integer
            num = 0
            half = 0
            for d in range(lo, hi + 1):
                num += d ** (alpha - 1) * (x % d)
                half += d**alpha
            return num - Fraction(half, 2)
        total = Fraction(0)
        for d in range(lo, hi + 1):
            total += Fraction(x % d, d)
        return total - Fraction(hi - lo + 1, 2)
    coeffs = bernoulli_coefficients(j)
    total = Fraction(0)
    for d in range(lo, hi + 1):
        f = Fraction(x % d, d)
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * f + c
        total += d**alpha * acc
    return total


def _float_range_sum(x, alpha, j: int, lo: int, hi: int) -> float:
    """Vectorized double-precision sum over lo <= d <= hi."""
    if lo > hi:
        return 0.0
    d = np.arange(lo, hi + 1, dtype=np.int64)
    if j == 0:
        vals = None
    else:
        if isinstance(x, int) and x < _INT64_SAFE_X:
            frac = (x % d) / d
        elif isinstance(x, int):
            frac = np.array([(x % int(dd)) / dd for dd in d], dtype=np.float64)
        else:
            q = float(x) / d
            frac = q - np.floor(q)
        if j == 1:
            vals = frac - 0.5
        else:
            vals = np.polyval([float(c) for c in reversed(bernoulli_coefficients(j))], frac)
    df = d.astype(np.float64)
    weights = df if alpha == 1 else df**float(alpha) if alpha != 0 else None
    if vals is None:
        terms = weights if weights is not None else np.ones_like(df)
    elif weights is None:
        terms = vals
    else:
        terms = weights * vals
    return float(np.sum(terms))


def g_sum(spec: GSumSpec):
    """G_{a,alpha,j}(x).  Exact rational in exact mode, float otherwise.

    x in [0, 1) gives the empty sum 0.  Exact mode assembles the value from
    the d = 1 head term plus the dyadic blocks (N, 2N], which is also the
    decomposition block_g exposes.
    """
    cut = spec.cutoff
    if cut == 0:
        return Fraction(0) if spec.exact else 0.0
    if not spec.exact:
        return _float_range_sum(spec.x, spec.alpha, spec.j, 1, cut)
    total = _exact_range_sum(spec.x, spec.alpha, spec.j, 1, 1)
    n = 1
    while n < cut:
        total += _exact_range_sum(spec.x, spec.alpha, spec.j, n + 1, min(2 * n, cut))
        n *= 2
    return total


def block_g(n_start: int, spec: GSumSpec):
    """Dyadic block sum over n_start < d <= min(2*n_start, cutoff).

    Summing block_g over n_start = 1, 2, 4, ... plus the d = 1 head term
    reassembles g_sum exactly in exact mode.
    """
    if n_start < 1:
        raise ValueError("block start must be >= 1")
    cut = spec.cutoff
    lo, hi = n_start + 1, min(2 * n_start, cut)
    if spec.exact:
        return _exact_range_sum(spec.x, spec.alpha, spec.j, lo, hi)
    return _float_range_sum(spec.x, spec.alpha, spec.j, lo, hi)


def shifted_psi_block_sum(n_start: int, x, shift_a: int = 0, shift_b: int = 0):
    """sum_{N < n <= 2N} psi(4x/(4n + shift_a) + shift_b/4).

    The block sums whose cancellation drives the sharpest unconditional
    error exponents.  Requires |shift_a| + |shift_b| <= 1 and
    3 <= N <= sqrt(x); exact rational result for integer x.
    """
    if abs(shift_a) + abs(shift_b) > 1:
        raise ValueError("|shift_a| + |shift_b| must be <= 1")
    if not isinstance(n_start, int) or n_start < 3:
        raise ValueError(f"block start must be an integer >= 3, got {n_start!r}")
    if x < 1:
        raise ValueError("x must be >= 1")
    if n_start * n_start > x:
        raise ValueError(f"block start {n_start} exceeds sqrt(x)")
    if isinstance(x, int):
        total = Fraction(0)
        for n in range(n_start + 1, 2 * n_start + 1):
            total += psi(Fraction(4 * x, 4 * n + shift_a) + Fraction(shift_b, 4))
        return total
    return math.fsum(
        psi(4.0 * x / (4 * n + shift_a) + shift_b / 4.0)
        for n in range(n_start + 1, 2 * n_start + 1)
    )
