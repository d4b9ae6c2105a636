"""Ground truth for the resummed series: direct truncated log(e^x e^y).

The direct computation shares nothing with the resummation beyond the
basic algebra, so an exact word-by-word match is an independent witness
that the graded construction is right.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import XY, NCPoly, exp_truncated, generators, log_truncated, substitute, word_key
from .resummation import psi_by_descendants


@dataclass(frozen=True)
class ComparisonReport:
    degree: int
    max_order: int
    matched: bool
    # (word, expected, actual) for the first differing word, in canonical order
    first_discrepancy: tuple[str, Fraction, Fraction] | None
    # (degree, direct term count, resummed term count) per degree 1..D
    per_degree_term_counts: tuple[tuple[int, int, int], ...]


def bch_direct(trunc_degree: int) -> NCPoly:
    """log(e^x e^y) over {x, y}, truncated at word length D."""
    if trunc_degree < 1:
        raise ValueError("truncation degree must be at least 1")
    x_gen, y_gen = generators(XY, trunc_degree)
    return log_truncated(exp_truncated(x_gen) * exp_truncated(y_gen))


def qseries_to_xy(q_polys: Sequence[NCPoly], trunc_degree: int) -> NCPoly:
    """Sum the graded polynomials after substituting u -> x+y, w -> x-y."""
    x_gen, y_gen = generators(XY, trunc_degree)
    out = NCPoly.zero(XY, trunc_degree)
    for q in q_polys:
        out = out + substitute(q, x_gen + y_gen, x_gen - y_gen)
    return out


def verify(max_order: int, trunc_degree: int) -> ComparisonReport:
    """Exact comparison of the resummed series with direct log(e^x e^y).

    Requires max_order >= trunc_degree: a part of grading order m has
    degree >= m in the generators, so lower orders cannot fill in words
    of length <= D once m exceeds D.
    """
    if max_order < trunc_degree:
        raise ValueError(
            f"need max_order >= degree so every word of length <= {trunc_degree} "
            f"is covered; got max_order {max_order}")
    graded = psi_by_descendants(max_order, trunc_degree)
    resummed = qseries_to_xy([graded.q(m) for m in range(1, max_order + 1)], trunc_degree)
    direct = bch_direct(trunc_degree)

    difference = resummed - direct
    first = None
    if not difference.is_zero():
        word = min(difference.terms, key=word_key)
        first = (word, direct.coeff(word), resummed.coeff(word))
    counts = tuple(
        (deg,
         len(direct.homogeneous_part(deg).terms),
         len(resummed.homogeneous_part(deg).terms))
        for deg in range(1, trunc_degree + 1))
    return ComparisonReport(degree=trunc_degree, max_order=max_order,
                            matched=difference.is_zero(), first_discrepancy=first,
                            per_degree_term_counts=counts)
