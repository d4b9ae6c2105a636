"""Canonical JSON, plain-text, and LaTeX output for polynomials and series.

JSON terms are sorted by (t_power, word length, word) and coefficients are
exact "num/den" strings, so serialization is byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import NCPoly, TSeries, word_key


def scalar_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def scalar_from_str(text: str) -> Fraction:
    return Fraction(text)


def poly_to_dict(poly: NCPoly) -> dict:
    return {
        "alphabet": list(poly.alphabet),
        "trunc_degree": poly.trunc_degree,
        "terms": [{"word": word, "coeff": scalar_str(coeff)}
                  for word, coeff in poly.sorted_terms()],
    }


def poly_from_dict(data: dict) -> NCPoly:
    return NCPoly(tuple(data["alphabet"]), data["trunc_degree"],
                  {term["word"]: scalar_from_str(term["coeff"]) for term in data["terms"]})


def tseries_to_dict(series: TSeries) -> dict:
    terms = []
    for power in sorted(series.coeffs):
        for word, coeff in series.coeffs[power].sorted_terms():
            terms.append({"word": word, "t_power": power, "coeff": scalar_str(coeff)})
    return {
        "alphabet": list(series.alphabet),
        "trunc_degree": series.trunc_degree,
        "terms": terms,
    }


def tseries_from_dict(data: dict) -> TSeries:
    alphabet = tuple(data["alphabet"])
    trunc_degree = data["trunc_degree"]
    by_power: dict[int, dict[str, Fraction]] = {}
    for term in data["terms"]:
        by_power.setdefault(term["t_power"], {})[term["word"]] = \
            scalar_from_str(term["coeff"])
    return TSeries(alphabet, trunc_degree,
                   {p: NCPoly(alphabet, trunc_degree, terms)
                    for p, terms in by_power.items()})


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _coeff_body(magnitude: Fraction, word: str) -> str:
    if not word:
        return str(magnitude)
    if magnitude == 1:
        return word
    return f"{magnitude} {word}"


def poly_to_text(poly: NCPoly) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for word, coeff in poly.sorted_terms():
        body = _coeff_body(abs(coeff), word)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def tseries_to_text(series: TSeries) -> str:
    if series.is_zero():
        return "0"
    return "\n".join(f"t^{power}: {poly_to_text(series.coeffs[power])}"
                     for power in sorted(series.coeffs))


def _latex_coeff(magnitude: Fraction, word: str) -> str:
    if magnitude.denominator == 1:
        head = "" if magnitude == 1 and word else str(magnitude.numerator)
    else:
        head = f"\\tfrac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
    if not word:
        return head or "1"
    return f"{head}\\,{word}" if head else word


def poly_to_latex(poly: NCPoly) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for word, coeff in poly.sorted_terms():
        body = _latex_coeff(abs(coeff), word)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def tseries_to_latex(series: TSeries) -> str:
    if series.is_zero():
        return "0"
    pieces = [f"t^{{{power}}}\\left({poly_to_latex(series.coeffs[power])}\\right)"
              for power in sorted(series.coeffs)]
    return " + ".join(pieces)
