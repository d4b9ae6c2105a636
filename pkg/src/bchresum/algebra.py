"""Truncated free associative algebra over a two-letter alphabet.

All coefficients are exact rationals (fractions.Fraction); there is no
floating point anywhere.  Polynomials are sparse maps word -> coefficient,
truncated at a fixed maximum word length, and immutable by convention:
every operation returns a fresh object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

# Alphabets.  The first letter of UW stands for x+y, the second for x-y.
UW = ("u", "w")
XY = ("x", "y")

Scalar = Fraction


def _as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def word_key(word: str) -> tuple[int, str]:
    """Canonical term order: by length, then lexicographic."""
    return (len(word), word)


class NCPoly:
    """Sparse noncommutative polynomial, truncated at word length D.

    terms maps words (strings over the alphabet) to nonzero Fractions;
    the empty word is the unit.  Operations require both operands to
    carry the same alphabet and the same truncation degree.
    """

    __slots__ = ("alphabet", "trunc_degree", "terms")

    def __init__(self, alphabet: tuple[str, str], trunc_degree: int,
                 terms: Mapping[str, Fraction] | None = None):
        if len(alphabet) != 2 or alphabet[0] == alphabet[1]:
            raise ValueError(f"alphabet must be two distinct letters, got {alphabet!r}")
        if trunc_degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        clean: dict[str, Fraction] = {}
        if terms:
            letters = set(alphabet)
            for word, coeff in terms.items():
                if len(word) > trunc_degree:
                    raise ValueError(f"word {word!r} exceeds truncation degree {trunc_degree}")
                if not letters.issuperset(word):
                    raise ValueError(f"word {word!r} is not over alphabet {alphabet!r}")
                coeff = _as_scalar(coeff)
                if coeff:
                    clean[word] = coeff
        self.alphabet = tuple(alphabet)
        self.trunc_degree = trunc_degree
        self.terms = clean

    @classmethod
    def zero(cls, alphabet: tuple[str, str], trunc_degree: int) -> "NCPoly":
        return cls(alphabet, trunc_degree)

    @classmethod
    def unit(cls, alphabet: tuple[str, str], trunc_degree: int) -> "NCPoly":
        return cls(alphabet, trunc_degree, {"": Fraction(1)})

    @classmethod
    def from_word(cls, alphabet: tuple[str, str], trunc_degree: int,
                  word: str, coeff=1) -> "NCPoly":
        return cls(alphabet, trunc_degree, {word: _as_scalar(coeff)})

    def coeff(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    def _check_compatible(self, other: "NCPoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet!r} vs {other.alphabet!r}")
        if self.trunc_degree != other.trunc_degree:
            raise ValueError(
                f"truncation degree mismatch: {self.trunc_degree} vs {other.trunc_degree}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            total = out.get(word, Fraction(0)) + coeff
            if total:
                out[word] = total
            else:
                out.pop(word, None)
        return self._wrap(out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return self._wrap({word: -coeff for word, coeff in self.terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check_compatible(other)
            return self._wrap(_mul_terms(self.terms, other.terms, self.trunc_degree))
        return self.scale(other)

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def __truediv__(self, other) -> "NCPoly":
        return self.scale(Fraction(1, 1) / _as_scalar(other))

    def scale(self, factor) -> "NCPoly":
        factor = _as_scalar(factor)
        if not factor:
            return self._wrap({})
        return self._wrap({word: factor * coeff for word, coeff in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.trunc_degree == other.trunc_degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, self.trunc_degree, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({coeff})*{word or '1'}" for word, coeff in self.sorted_terms())
        return f"NCPoly[{''.join(self.alphabet)}, D={self.trunc_degree}]({body or '0'})"

    def _wrap(self, terms: dict[str, Fraction]) -> "NCPoly":
        poly = NCPoly.__new__(NCPoly)
        poly.alphabet = self.alphabet
        poly.trunc_degree = self.trunc_degree
        poly.terms = terms
        return poly

    def truncate(self, trunc_degree: int) -> "NCPoly":
        """Copy truncated to a lower (or equal) word-length bound."""
        if trunc_degree > self.trunc_degree:
            raise ValueError("cannot raise the truncation degree of a computed value")
        return NCPoly(self.alphabet, trunc_degree,
                      {w: c for w, c in self.terms.items() if len(w) <= trunc_degree})

    def homogeneous_part(self, total_degree: int) -> "NCPoly":
        return self._wrap({w: c for w, c in self.terms.items() if len(w) == total_degree})

    def by_multidegree(self, deg_first: int, deg_second: int) -> "NCPoly":
        first = self.alphabet[0]
        return self._wrap({
            w: c for w, c in self.terms.items()
            if w.count(first) == deg_first and len(w) - w.count(first) == deg_second})

    def filter_words(self, keep: Callable[[str], bool]) -> "NCPoly":
        return self._wrap({w: c for w, c in self.terms.items() if keep(w)})

    def max_degree(self) -> int:
        """Largest word length present; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def min_degree(self) -> int:
        """Smallest word length present; trunc_degree + 1 for the zero polynomial."""
        return min((len(w) for w in self.terms), default=self.trunc_degree + 1)


def _mul_terms(a: Mapping[str, Fraction], b: Mapping[str, Fraction],
               cap: int) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for wa, ca in a.items():
        room = cap - len(wa)
        for wb, cb in b.items():
            if len(wb) > room:
                continue
            word = wa + wb
            total = out.get(word, Fraction(0)) + ca * cb
            if total:
                out[word] = total
            else:
                out.pop(word, None)
    return out


def generators(alphabet: tuple[str, str], trunc_degree: int) -> tuple[NCPoly, NCPoly]:
    """The two generator polynomials, in alphabet order."""
    return (NCPoly.from_word(alphabet, trunc_degree, alphabet[0]),
            NCPoly.from_word(alphabet, trunc_degree, alphabet[1]))


def commutator(a, b):
    """[a, b] = a*b - b*a.  Works for NCPoly and for TSeries."""
    return a * b - b * a


def ad_pow(a, n: int, b):
    """n-fold nested bracket [a, [a, ... [a, b]...]]; n = 0 gives b."""
    if n < 0:
        raise ValueError("ad power must be nonnegative")
    out = b
    for _ in range(n):
        out = commutator(a, out)
    return out


def exp_truncated(a: NCPoly) -> NCPoly:
    """Truncated exponential sum_{j<=D} a^j / j! for a without constant term.

    Evaluated in Horner form 1 + a(1 + a/2(1 + a/3(...))) so each step is
    a single truncated product.
    """
    if a.coeff(""):
        raise ValueError("exp requires a zero constant term")
    result = NCPoly.unit(a.alphabet, a.trunc_degree)
    for j in range(a.trunc_degree, 0, -1):
        result = NCPoly.unit(a.alphabet, a.trunc_degree) + (a / j) * result
    return result


def log_truncated(a: NCPoly) -> NCPoly:
    """Truncated logarithm of a = 1 + r: sum_{1<=j<=D} (-1)^(j+1) r^j / j.

    Horner form r*(1 - r(1/2 - r(1/3 - ...))) so each step is a single
    truncated product.
    """
    if a.coeff("") != 1:
        raise ValueError("log requires constant term exactly 1")
    r = a - NCPoly.unit(a.alphabet, a.trunc_degree)
    acc = NCPoly.zero(a.alphabet, a.trunc_degree)
    for j in range(a.trunc_degree, 0, -1):
        head = NCPoly(a.alphabet, a.trunc_degree, {"": Fraction((-1) ** (j + 1), j)})
        acc = head + r * acc
    return r * acc


def substitute(a: NCPoly, image_first: NCPoly, image_second: NCPoly) -> NCPoly:
    """Algebra homomorphism sending the two generators to the given images.

    Words are expanded by a prefix scan so shared prefixes are multiplied
    out only once.
    """
    image_first._check_compatible(image_second)
    if a.trunc_degree != image_first.trunc_degree:
        raise ValueError("images must carry the same truncation degree as the input")
    images = {a.alphabet[0]: image_first, a.alphabet[1]: image_second}
    target = image_first.alphabet
    cap = a.trunc_degree
    prefix_value: dict[str, NCPoly] = {"": NCPoly.unit(target, cap)}
    out = NCPoly.zero(target, cap)
    for word, coeff in sorted(a.terms.items(), key=lambda item: word_key(item[0])):
        for end in range(1, len(word) + 1):
            if word[:end] not in prefix_value:
                prefix_value[word[:end]] = prefix_value[word[:end - 1]] * images[word[end - 1]]
        out = out + prefix_value[word].scale(coeff)
    return out


class TSeries:
    """Polynomial-coefficient series in a formal parameter t.

    coeffs maps a nonnegative t exponent to an NCPoly; entries with zero
    polynomials are pruned.  The Cauchy product, definite integral from 0,
    d/dt, and evaluation at t = 1 are the only structure needed here.
    """

    __slots__ = ("alphabet", "trunc_degree", "coeffs")

    def __init__(self, alphabet: tuple[str, str], trunc_degree: int,
                 coeffs: Mapping[int, NCPoly] | None = None):
        clean: dict[int, NCPoly] = {}
        if coeffs:
            for power, poly in coeffs.items():
                if power < 0:
                    raise ValueError("t exponents must be nonnegative")
                if poly.alphabet != tuple(alphabet) or poly.trunc_degree != trunc_degree:
                    raise ValueError("coefficient polynomial does not match the series signature")
                if not poly.is_zero():
                    clean[power] = poly
        self.alphabet = tuple(alphabet)
        self.trunc_degree = trunc_degree
        self.coeffs = clean

    @classmethod
    def zero(cls, alphabet: tuple[str, str], trunc_degree: int) -> "TSeries":
        return cls(alphabet, trunc_degree)

    @classmethod
    def from_poly(cls, poly: NCPoly, t_power: int = 0) -> "TSeries":
        return cls(poly.alphabet, poly.trunc_degree, {t_power: poly})

    def coeff(self, t_power: int) -> NCPoly:
        return self.coeffs.get(t_power, NCPoly.zero(self.alphabet, self.trunc_degree))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: "TSeries") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet!r} vs {other.alphabet!r}")
        if self.trunc_degree != other.trunc_degree:
            raise ValueError(
                f"truncation degree mismatch: {self.trunc_degree} vs {other.trunc_degree}")

    def __add__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for power, poly in other.coeffs.items():
            total = out.get(power)
            total = poly if total is None else total + poly
            if total.is_zero():
                out.pop(power, None)
            else:
                out[power] = total
        return self._wrap(out)

    def __sub__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TSeries":
        return self._wrap({p: -poly for p, poly in self.coeffs.items()})

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            self._check_compatible(other)
            out: dict[int, NCPoly] = {}
            for pa, ca in self.coeffs.items():
                for pb, cb in other.coeffs.items():
                    prod = ca * cb
                    if prod.is_zero():
                        continue
                    power = pa + pb
                    total = out.get(power)
                    total = prod if total is None else total + prod
                    if total.is_zero():
                        out.pop(power, None)
                    else:
                        out[power] = total
            return self._wrap(out)
        return self.scale(other)

    def __rmul__(self, other) -> "TSeries":
        return self.scale(other)

    def scale(self, factor) -> "TSeries":
        factor = _as_scalar(factor)
        if not factor:
            return self._wrap({})
        return self._wrap({p: poly.scale(factor) for p, poly in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.trunc_degree == other.trunc_degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.alphabet, self.trunc_degree,
                     frozenset((p, hash(c)) for p, c in self.coeffs.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"t^{p}*({poly!r})" for p, poly in sorted(self.coeffs.items()))
        return f"TSeries({body or '0'})"

    def _wrap(self, coeffs: dict[int, NCPoly]) -> "TSeries":
        series = TSeries.__new__(TSeries)
        series.alphabet = self.alphabet
        series.trunc_degree = self.trunc_degree
        series.coeffs = coeffs
        return series

    def integrate(self) -> "TSeries":
        """Definite integral from 0 to t: t^p * c  ->  t^(p+1) * c/(p+1)."""
        return self._wrap({p + 1: poly / (p + 1) for p, poly in self.coeffs.items()})

    def differentiate(self) -> "TSeries":
        """d/dt: t^p * c  ->  p * t^(p-1) * c."""
        return self._wrap({p - 1: poly.scale(p) for p, poly in self.coeffs.items() if p > 0})

    def eval_t1(self) -> NCPoly:
        """Set t = 1: the plain sum of all coefficient polynomials."""
        out = NCPoly.zero(self.alphabet, self.trunc_degree)
        for _, poly in sorted(self.coeffs.items()):
            out = out + poly
        return out

    def truncate(self, trunc_degree: int) -> "TSeries":
        return TSeries(self.alphabet, trunc_degree,
                       {p: poly.truncate(trunc_degree) for p, poly in self.coeffs.items()})

    def map_coeffs(self, fn: Callable[[NCPoly], NCPoly]) -> "TSeries":
        out = {}
        for power, poly in self.coeffs.items():
            mapped = fn(poly)
            if not mapped.is_zero():
                out[power] = mapped
        return self._wrap(out)


def apply_exp_ad_w(series: TSeries, s) -> TSeries:
    """Apply the flow exp(s*t*ad(w)) to a series over the {u, w} alphabet.

    Each term t^p * c is sent to sum_j (s^j / j!) t^(p+j) * ad(w)^j(c); the
    sum is finite because every bracket with w raises the word length and
    words above the truncation degree vanish.
    """
    if series.alphabet != UW:
        raise ValueError("the exp-ad flow is defined over the (u, w) alphabet")
    s = _as_scalar(s)
    if not s:
        return series
    w_gen = NCPoly.from_word(series.alphabet, series.trunc_degree, series.alphabet[1])
    out = TSeries.zero(series.alphabet, series.trunc_degree)
    for power, poly in series.coeffs.items():
        bracketed = poly
        factor = Fraction(1)
        j = 0
        while not bracketed.is_zero():
            out = out + TSeries.from_poly(bracketed.scale(factor), power + j)
            bracketed = commutator(w_gen, bracketed)
            j += 1
            factor = factor * s / j
    return out
