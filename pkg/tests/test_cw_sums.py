import math
import random
from fractions import Fraction

import pytest

from cwlab.bernoulli import psi
from cwlab.cw_sums import GSumSpec, block_g, g_sum, gsum_cutoff, shifted_psi_block_sum
from cwlab.divisors import integer_root


def test_spec_validation():
    with pytest.raises(ValueError):
        GSumSpec(1, 0, 1, 10)          # a must exceed 1
    with pytest.raises(ValueError):
        GSumSpec(2, -1, 1, 10)         # negative alpha only allowed at j=0
    with pytest.raises(ValueError):
        GSumSpec(2, 0, -1, 10)
    with pytest.raises(ValueError):
        GSumSpec(2, 0, 1, -3)          # x < 0 rejected
    GSumSpec(2, -1, 0, 10)             # j=0 allows any real alpha


def test_g_sum_examples():
    assert g_sum(GSumSpec(2, 0, 1, 4)) == -1
    assert g_sum(GSumSpec(2, 0, 0, 9)) == 3
    assert g_sum(GSumSpec(2, -1, 0, 4)) == Fraction(3, 2)
    assert g_sum(GSumSpec(3, 0, 1, 10)) == -1


def test_g_sum_empty_range():
    assert g_sum(GSumSpec(2, 0, 1, 0)) == 0
    assert g_sum(GSumSpec(2, 3, 2, 0.5)) == 0.0


def test_g_sum_brutal_oracle():
    # definitional double-check against a from-scratch loop
    rng = random.Random(31)
    for _ in range(60):
        x = rng.randrange(1, 5000)
        a = rng.choice((2, 3))
        alpha = rng.choice((0, 1, 2))
        j = rng.choice((0, 1, 2, 3))
        expected = Fraction(0)
        d = 1
        while d**a <= x:
            if j == 0:
                expected += d**alpha
            else:
                from cwlab.bernoulli import bernoulli_func

                expected += d**alpha * bernoulli_func(j, Fraction(x, d))
            d += 1
        assert g_sum(GSumSpec(a, alpha, j, x)) == expected, (x, a, alpha, j)


def test_block_examples():
    assert block_g(1, GSumSpec(2, 0, 1, 4)) == Fraction(-1, 2)
    assert block_g(99, GSumSpec(2, 0, 1, 4)) == 0
    with pytest.raises(ValueError):
        block_g(0, GSumSpec(2, 0, 1, 4))


def test_block_decomposition_reassembles():
    rng = random.Random(37)
    for _ in range(1000):
        x = rng.randrange(1, 200_000)
        a = rng.choice((2, 3, 4))
        alpha = rng.choice((0, 1, 2))
        j = rng.choice((0, 1, 2))
        spec = GSumSpec(a, alpha, j, x)
        cut = spec.cutoff
        total = g_sum(GSumSpec(a, alpha, j, 1)) if cut >= 1 else Fraction(0)
        n = 1
        while n < cut:
            total += block_g(n, spec)
            n *= 2
        assert total == g_sum(spec), (x, a, alpha, j)


def test_j0_consistency():
    rng = random.Random(41)
    for _ in range(200):
        x = rng.randrange(1, 10**6)
        for a in (2, 3, 5):
            assert g_sum(GSumSpec(a, 0, 0, x)) == integer_root(x, a)


def test_trivial_psi_bound():
    rng = random.Random(43)
    for _ in range(200):
        x = rng.randrange(1, 10**6)
        a = rng.choice((2, 3))
        cut = gsum_cutoff(x, a)
        assert abs(g_sum(GSumSpec(a, 0, 1, x))) <= Fraction(cut, 2)


def test_exact_float_agreement():
    rng = random.Random(47)
    cases = [(rng.randrange(10, 10**6), rng.choice((2, 3)), rng.choice((0, 1, 2)), rng.choice((1, 2, 3)))
             for _ in range(60)]
    cases += [(10**9, 2, 2, 1), (10**9 - 7, 2, 0, 1), (10**9, 2, 1, 2), (999_999_937, 3, 2, 3)]
    for x, a, alpha, j in cases:
        e = g_sum(GSumSpec(a, alpha, j, x))
        f = g_sum(GSumSpec(a, float(alpha), j, x))
        assert abs(float(e) - f) <= 1e-8 * max(1.0, abs(float(e))), (x, a, alpha, j)


def test_cutoff_rational_and_float_a():
    # 4**(3/2) = 8: the boundary divisor is included exactly
    assert gsum_cutoff(8, Fraction(3, 2)) == 4
    assert gsum_cutoff(8, 1.5) == 4
    assert gsum_cutoff(7, Fraction(3, 2)) == 3
    assert gsum_cutoff(10**12, Fraction(3, 2)) == integer_root(10**24, 3)
    # float-a cutoff agrees with the exact rational one on a sample
    rng = random.Random(53)
    for _ in range(200):
        x = rng.randrange(1, 10**9)
        assert gsum_cutoff(x, 1.5) == gsum_cutoff(x, Fraction(3, 2))
        assert gsum_cutoff(x, 3.0) == gsum_cutoff(x, 3)


def test_g_sum_real_a():
    # brute-force oracle for a = 3/2 on integer x
    x = 5000
    cut = gsum_cutoff(x, Fraction(3, 2))
    expected = sum(Fraction(x % d, d) - Fraction(1, 2) for d in range(1, cut + 1))
    assert g_sum(GSumSpec(Fraction(3, 2), 0, 1, x)) == expected
    assert g_sum(GSumSpec(1.5, 0.0, 1, x)) == pytest.approx(float(expected), rel=1e-10)


def test_shifted_psi_block_examples():
    assert shifted_psi_block_sum(3, 16, 0, 0) == Fraction(-19, 30)
    # oracle: exact sawtooth at each of n = 4, 5, 6
    expected = psi(Fraction(48, 17)) + psi(Fraction(48, 21)) + psi(Fraction(48, 25))
    assert shifted_psi_block_sum(3, 12, 1, 0) == expected
    assert expected == Fraction(3149, 5950)


def test_shifted_psi_block_reduces_to_psi_tail():
    # shift (0,0): psi(4x/(4n)) = psi(x/n), the plain sawtooth block
    x = 400
    got = shifted_psi_block_sum(5, x, 0, 0)
    assert got == sum(psi(Fraction(x, n)) for n in range(6, 11))


def test_shifted_psi_block_validation():
    with pytest.raises(ValueError):
        shifted_psi_block_sum(3, 16, 1, 1)
    with pytest.raises(ValueError):
        shifted_psi_block_sum(2, 16, 0, 0)
    with pytest.raises(ValueError):
        shifted_psi_block_sum(5, 16, 0, 0)   # N > sqrt(x)
    with pytest.raises(ValueError):
        shifted_psi_block_sum(3, 0.5, 0, 0)


def test_shifted_psi_block_float_mode():
    e = shifted_psi_block_sum(3, 16, 0, -1)
    f = shifted_psi_block_sum(3, 16.0, 0, -1)
    assert f == pytest.approx(float(e), abs=1e-12)
