from fractions import Fraction

import pytest

from bchresum.algebra import UW, NCPoly, TSeries, ad_pow, commutator, generators
from bchresum.kernel import (
    KernelTable,
    _series_recip,
    bernoulli,
    k_coeff,
    kernel_series_check,
    psi0,
)
from bchresum.resummation import conjugated_integral

from math import factorial


def akiyama_tanigawa(n: int) -> Fraction:
    """Independent Bernoulli route (yields the B_1 = +1/2 convention)."""
    row = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(1, n + 1):
        for j in range(n + 1 - m):
            row[j] = (j + 1) * (row[j] - row[j + 1])
    return row[0]


class TestBernoulli:
    def test_pinned_low_even_values(self):
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(6) == Fraction(1, 42)

    def test_convention_and_odd_indices(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        for n in range(3, 21, 2):
            assert bernoulli(n) == 0

    def test_known_higher_values(self):
        assert bernoulli(8) == Fraction(-1, 30)
        assert bernoulli(10) == Fraction(5, 66)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_matches_akiyama_tanigawa(self):
        # conventions differ only at index 1
        for n in range(31):
            if n == 1:
                assert bernoulli(1) == -akiyama_tanigawa(1)
            else:
                assert bernoulli(n) == akiyama_tanigawa(n)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)


class TestKernelCoefficients:
    def test_values(self):
        assert k_coeff(2) == Fraction(1, 12)
        assert k_coeff(4) == Fraction(-1, 720)
        assert k_coeff(6) == Fraction(1, 30240)

    def test_index_validation(self):
        for bad in (0, -2, 3, 1):
            with pytest.raises(ValueError):
                k_coeff(bad)

    def test_series_identity(self):
        for max_p in range(1, 9):
            assert kernel_series_check(max_p)

    def test_linear_coefficient_cancels(self):
        # z/(1 - e^{-z}) has linear coefficient 1/2, removed by the -z/2 term
        body = [Fraction((-1) ** j, factorial(j + 1)) for j in range(5)]
        assert _series_recip(body, 4)[1] == Fraction(1, 2)

    def test_table_construction(self):
        table = KernelTable.build(4)
        assert table.max_index == 8
        assert table.values == tuple(k_coeff(2 * p) for p in range(1, 5))
        assert table.bernoulli[2] == Fraction(1, 6)
        assert table.k(6) == Fraction(1, 30240)
        with pytest.raises(ValueError):
            table.k(10)
        with pytest.raises(ValueError):
            table.k(3)


class TestPsi0:
    def test_first_coefficients(self):
        series = psi0(4)
        u, w = generators(UW, 4)
        assert series.coeff(1) == u
        assert series.coeff(2) == commutator(w, u) / 4
        assert series.coeff(3) == ad_pow(w, 2, u) / 24

    def test_w_free_part_is_linear(self):
        series = psi0(6)
        u, _ = generators(UW, 6)
        w_free = series.map_coeffs(lambda p: p.by_multidegree(1, 0))
        assert w_free == TSeries(UW, 6, {1: u})

    def test_truncation_coherence(self):
        for trunc in range(2, 9):
            assert psi0(trunc).truncate(trunc - 1) == psi0(trunc - 1)

    def test_matches_integral_construction(self):
        u, _ = generators(UW, 7)
        assert psi0(7) == conjugated_integral(TSeries.from_poly(u))

    def test_t_exponent_tracks_word_length(self):
        series = psi0(8)
        for power, poly in series.coeffs.items():
            assert all(len(word) == power for word in poly.terms)

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            psi0(0)
