"""Bernoulli numbers, the even kernel k(z) = z/(1-e^{-z}) - z/2, and the
lowest-order series psi0 that seeds the resummation.

Convention note: bernoulli() uses the recurrence
    sum_{j=0}^{n} C(n+1, j) * B_j = 0,  B_0 = 1,
which yields B_1 = -1/2.  Only even indices feed the kernel, and those are
identical under either sign convention; KernelTable.build still pins
B_2 = 1/6, B_4 = -1/30, B_6 = 1/42 as a startup self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import UW, NCPoly, TSeries, ad_pow, generators

_PINNED_EVEN = {2: Fraction(1, 6), 4: Fraction(-1, 30), 6: Fraction(1, 42)}


@lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, j) * values[j] for j in range(m))
        values.append(Fraction(-acc, m + 1))
    return tuple(values)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    return _bernoulli_upto(n)[n]


def k_coeff(two_p: int) -> Fraction:
    """Taylor coefficient k_{2p} = B_{2p}/(2p)! of the even kernel."""
    if two_p < 2 or two_p % 2:
        raise ValueError(f"kernel coefficients exist for even index >= 2, got {two_p}")
    return bernoulli(two_p) / factorial(two_p)


@dataclass(frozen=True)
class KernelTable:
    """Cached kernel coefficients k_2, k_4, ..., k_{2P} plus the Bernoulli
    numbers B_0..B_{2P} they came from."""

    max_index: int
    values: tuple[Fraction, ...]
    bernoulli: tuple[Fraction, ...]

    @classmethod
    def build(cls, max_p: int) -> "KernelTable":
        if max_p < 0:
            raise ValueError("table size must be nonnegative")
        numbers = _bernoulli_upto(2 * max_p)
        for index, pinned in _PINNED_EVEN.items():
            if index <= 2 * max_p and numbers[index] != pinned:
                raise AssertionError(f"Bernoulli self-check failed at B_{index}")
        return cls(max_index=2 * max_p,
                   values=tuple(k_coeff(2 * p) for p in range(1, max_p + 1)),
                   bernoulli=numbers)

    def k(self, two_p: int) -> Fraction:
        if two_p < 2 or two_p % 2 or two_p > self.max_index:
            raise ValueError(f"k_{two_p} is outside this table (max index {self.max_index})")
        return self.values[two_p // 2 - 1]


# --- univariate truncated power series over Fraction, as coefficient lists ---

def _series_mul(a: list[Fraction], b: list[Fraction], deg: int) -> list[Fraction]:
    out = [Fraction(0)] * (deg + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), deg + 1 - i)):
            out[i + j] += ai * b[j]
    return out


def _series_recip(a: list[Fraction], deg: int) -> list[Fraction]:
    if not a[0]:
        raise ValueError("series reciprocal needs a nonzero constant term")
    out = [Fraction(0)] * (deg + 1)
    out[0] = 1 / a[0]
    for n in range(1, deg + 1):
        acc = sum(a[i] * out[n - i] for i in range(1, min(n, len(a) - 1) + 1))
        out[n] = -acc / a[0]
    return out


def kernel_series_check(max_p: int) -> bool:
    """Confirm k(z) = z/(1-e^{-z}) - z/2 = 1 + sum k_{2p} z^{2p} up to z^{2P}.

    The left side is computed by series reciprocal of (1 - e^{-z})/z, an
    independent route to the same coefficients as the Bernoulli recurrence.
    """
    if max_p < 1:
        raise ValueError("need at least one kernel coefficient to check")
    deg = 2 * max_p
    # (1 - e^{-z})/z = sum_j (-1)^j z^j / (j+1)!
    body = [Fraction((-1) ** j, factorial(j + 1)) for j in range(deg + 1)]
    lhs = _series_recip(body, deg)
    lhs[1] -= Fraction(1, 2)
    rhs = [Fraction(0)] * (deg + 1)
    rhs[0] = Fraction(1)
    for p in range(1, max_p + 1):
        rhs[2 * p] = k_coeff(2 * p)
    return lhs == rhs


def psi0(trunc_degree: int) -> TSeries:
    """Seed series sum_{n>=0} t^{n+1} / ((n+1)! 2^n) * ad(w)^n(u).

    This is the closed form of exp((t/2) ad w) applied to the integral
    from 0 to t of exp(-(tau/2) ad w)(u); each term couples t-exponent and
    word length, so the series is t-homogeneous.
    """
    if trunc_degree < 1:
        raise ValueError("truncation degree must be at least 1")
    u_gen, w_gen = generators(UW, trunc_degree)
    coeffs: dict[int, NCPoly] = {}
    for n in range(trunc_degree):
        poly = ad_pow(w_gen, n, u_gen) / (factorial(n + 1) * 2 ** n)
        if not poly.is_zero():
            coeffs[n + 1] = poly
    return TSeries(UW, trunc_degree, coeffs)
