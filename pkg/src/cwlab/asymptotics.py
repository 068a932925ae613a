"""Closed-form main terms, error-exponent constants, and Euler-Maclaurin sums.

Summatory sums of root-restricted divisor functions obey

    a = 2:  sum tau~(n)        = (1/2) x log x + (gamma - 1/2) x + (1/2) x^(1/2)
            sum sigma~_alpha   = 2/(alpha(alpha+2)) x^(1+alpha/2)
                                 + 1/(2(alpha+1)) x^((alpha+1)/2)
                                 + (5/8 - alpha/8 - 1/alpha) x
    a >= 3: sum tau_a(n)       = (1/a) x log x + (gamma - 1/a) x
            sum sigma_{a,alpha} = a/(alpha(alpha+a)) x^(1+alpha/a)
                                 + (5/8 - alpha/8 - 1/alpha) x

up to an error x^theta(+eps).  For a = 2 the exponent is
theta_alpha = alpha/2 + 1/4 if the Chowla-Walum conjecture holds and
alpha/2 + 517/1648 unconditionally; for a >= 3 it is 1 - 2/a (alpha = 0)
or 1 + (alpha-2)/a.  Everything here is evaluated in >= 30 significant
digits: at x = 10^12 the leading term is ~10^18 while the residual of
interest is ~10^10, far below double precision's reach.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .bernoulli import bernoulli_poly
from .cw_sums import gsum_cutoff
from .divisors import integer_root

DEFAULT_DPS = 50

# Euler-Mascheroni constant to 50 digits, cross-checked at import against an
# independent harmonic-sum computation (see euler_gamma_independent).
EULER_GAMMA_STR = "0.57721566490153286060651209008240243104215933593992"

UNCONDITIONAL_THETA0 = Fraction(517, 1648)
CW_THETA0 = Fraction(1, 4)


def euler_gamma(dps: int = DEFAULT_DPS):
    """gamma as an mpf at the requested working precision."""
    with mp.workdps(dps):
        return mp.mpf(EULER_GAMMA_STR)


def euler_gamma_independent(n: int = 100, correction_order: int = 4, dps: int = 60):
    """gamma from H_n - log n - 1/(2n) + sum B_2k/(2k n^2k), k <= order.

    The harmonic number and the Bernoulli corrections are exact rationals;
    only log n is floating.  With n = 100 and order 4 the truncation error
    is below 1e-22, comfortably inside the 1e-20 startup tolerance.
    """
    harmonic = sum(Fraction(1, d) for d in range(1, n + 1))
    corr = sum(
        bernoulli_poly(2 * k, 0) / (2 * k * Fraction(n) ** (2 * k))
        for k in range(1, correction_order + 1)
    )
    rational_part = harmonic - Fraction(1, 2 * n) + corr
    with mp.workdps(dps):
        return mp.mpf(rational_part.numerator) / rational_part.denominator - mp.log(n)


def _startup_gamma_check() -> None:
    with mp.workdps(60):
        diff = abs(euler_gamma(60) - euler_gamma_independent())
        if diff > mp.mpf("1e-20"):
            raise RuntimeError(f"stored gamma disagrees with independent computation by {diff}")


_startup_gamma_check()


@dataclass(frozen=True)
class Term:
    """One main-term monomial: coeff * x^exponent * (log x if with_log)."""

    coeff: object          # Fraction, or mpf for gamma-bearing coefficients
    exponent: object       # Fraction (exact alpha) or float
    with_log: bool = False


@dataclass(frozen=True)
class MainTermModel:
    """Sum of main terms plus the claimed error exponent theta.

    Terms are kept sorted by strictly decreasing (exponent, with_log), with
    equal kinds merged, so the x-coefficient of the alpha = 1 half-range
    model is the single exact rational -1/4.
    assumes_cw is None when the exponent does not depend on the conjecture.
    """

    terms: tuple[Term, ...]
    theta: object
    assumes_cw: bool | None = None

    def evaluate(self, x, dps: int = DEFAULT_DPS):
        with mp.workdps(dps):
            xm = mp.mpf(x)
            logx = mp.log(xm)
            total = mp.mpf(0)
            for t in self.terms:
                if isinstance(t.coeff, Fraction):
                    c = mp.mpf(t.coeff.numerator) / t.coeff.denominator
                else:
                    c = mp.mpf(t.coeff)
                if isinstance(t.exponent, Fraction):
                    e = mp.mpf(t.exponent.numerator) / t.exponent.denominator
                else:
                    e = mp.mpf(t.exponent)
                piece = c * xm**e
                if t.with_log:
                    piece *= logx
                total += piece
            return total


def _normalize_terms(raw: list[Term]) -> tuple[Term, ...]:
    merged: dict[tuple, Term] = {}
    for t in raw:
        key = (t.exponent, t.with_log)
        if key in merged:
            prev = merged[key]
            merged[key] = Term(prev.coeff + t.coeff, t.exponent, t.with_log)
        else:
            merged[key] = t
    ordered = sorted(merged.values(), key=lambda t: (t.exponent, t.with_log), reverse=True)
    ordered = [t for t in ordered if t.coeff != 0]
    for prev, cur in zip(ordered, ordered[1:]):
        if (prev.exponent, prev.with_log) <= (cur.exponent, cur.with_log):
            raise AssertionError("term exponents not strictly decreasing")
    return tuple(ordered)


def _as_exact(alpha):
    if isinstance(alpha, (int, Fraction)) and not isinstance(alpha, bool):
        return Fraction(alpha)
    return None


def error_exponent(alpha, cw: bool = False):
    """theta_alpha = alpha/2 + 1/4 (conjectural) or alpha/2 + 517/1648."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    const = CW_THETA0 if cw else UNCONDITIONAL_THETA0
    exact = _as_exact(alpha)
    if exact is not None:
        return exact / 2 + const
    return alpha / 2 + float(const)


def absorption_threshold(cw: bool = False) -> Fraction:
    """Smallest alpha whose x-term is absorbed by the error: theta = 1."""
    const = CW_THETA0 if cw else UNCONDITIONAL_THETA0
    return 2 * (1 - const)


def sqrt_restricted_model(alpha, cw: bool = False) -> MainTermModel:
    """Main-term model for sum_{n <= x} sigma~_alpha(n) (divisors d <= sqrt n)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    exact = _as_exact(alpha)
    if alpha == 0:
        with mp.workdps(60):
            gamma_coeff = euler_gamma(60) - mp.mpf(1) / 2
        terms = [
            Term(Fraction(1, 2), Fraction(1), with_log=True),
            Term(gamma_coeff, Fraction(1)),
            Term(Fraction(1, 2), Fraction(1, 2)),
        ]
    elif exact is not None:
        terms = [
            Term(2 / (exact * (exact + 2)), 1 + exact / 2),
            Term(1 / (2 * (exact + 1)), (exact + 1) / 2),
            Term(Fraction(5, 8) - exact / 8 - 1 / exact, Fraction(1)),
        ]
    else:
        a = float(alpha)
        terms = [
            Term(2.0 / (a * (a + 2)), 1 + a / 2),
            Term(1.0 / (2 * (a + 1)), (a + 1) / 2),
            Term(0.625 - a / 8 - 1.0 / a, 1.0),
        ]
    return MainTermModel(_normalize_terms(terms), error_exponent(alpha, cw), assumes_cw=cw)


def root_restricted_model(alpha, a: int) -> MainTermModel:
    """Main-term model for sum_{n <= x} sigma_{a,alpha}(n), integer a >= 3."""
    if not isinstance(a, int) or isinstance(a, bool) or a < 3:
        raise ValueError(f"restriction root must be an integer >= 3, got {a!r}")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    exact = _as_exact(alpha)
    if alpha == 0:
        with mp.workdps(60):
            gamma_coeff = euler_gamma(60) - mp.mpf(1) / a
        terms = [
            Term(Fraction(1, a), Fraction(1), with_log=True),
            Term(gamma_coeff, Fraction(1)),
        ]
        theta = 1 - Fraction(2, a)
    elif exact is not None:
        terms = [
            Term(a / (exact * (exact + a)), 1 + exact / a),
            Term(Fraction(5, 8) - exact / 8 - 1 / exact, Fraction(1)),
        ]
        theta = 1 + (exact - 2) / a
    else:
        f = float(alpha)
        terms = [
            Term(a / (f * (f + a)), 1 + f / a),
            Term(0.625 - f / 8 - 1.0 / f, 1.0),
        ]
        theta = 1 + (f - 2) / a
    return MainTermModel(_normalize_terms(terms), theta, assumes_cw=None)


def main_term_sqrt_restricted(x, alpha, cw: bool = False):
    """sqrt_restricted_model evaluated at x (>= 30 significant digits)."""
    if x < 2:
        raise ValueError("x must be >= 2")
    return sqrt_restricted_model(alpha, cw).evaluate(x)


def main_term_root_restricted(x, alpha, a: int):
    """root_restricted_model evaluated at x (>= 30 significant digits)."""
    if x < 2:
        raise ValueError("x must be >= 2")
    return root_restricted_model(alpha, a).evaluate(x)


def euler_maclaurin_partial_sum(x, a, beta, dps: int = DEFAULT_DPS):
    """Euler-Maclaurin approximation to sum_{d <= x^(1/a)} d^beta.

        beta = -1:  (1/a) log x + gamma - psi(x^(1/a)) x^(-1/a)
        beta > -1:  x^((beta+1)/a)/(beta+1) - psi(x^(1/a)) x^(beta/a)
                    + 1/2 - beta/8 - 1/(beta+1)

    The O-term is omitted; beta < -1 is out of contract.  The sawtooth at
    the cutoff uses the exact integer floor, so perfect a-th powers land on
    psi = -1/2 exactly.
    """
    if beta < -1:
        raise ValueError("beta must be >= -1")
    if x < 1:
        raise ValueError("x must be >= 1")
    if a < 1:
        raise ValueError("a must be >= 1")
    with mp.workdps(dps):
        xm = mp.mpf(x)
        if isinstance(x, int) and isinstance(a, int) and not isinstance(a, bool):
            floor_root = integer_root(x, a) if a >= 2 else x
        else:
            floor_root = gsum_cutoff(x, a)
        root = mp.sqrt(xm) if a == 2 else xm ** (mp.mpf(1) / mp.mpf(float(a)))
        psi_root = root - floor_root - mp.mpf(1) / 2
        if beta == -1:
            return mp.log(xm) / mp.mpf(float(a)) + euler_gamma(dps) - psi_root / root
        b = mp.mpf(float(beta))
        am = mp.mpf(float(a))
        return (
            xm ** ((b + 1) / am) / (b + 1)
            - psi_root * xm ** (b / am)
            + mp.mpf(1) / 2
            - b / 8
            - 1 / (b + 1)
        )
