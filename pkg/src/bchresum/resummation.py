"""Resummation of log(e^x e^y) in powers of u = x+y.

The object computed here is the graded solution psi(t) of the flow
equation

    dpsi/dt = k(ad psi)(u) + (1/2)[w, psi],    psi(0) = 0,

with w = x-y and k the even kernel from .kernel.  Grading order n counts
powers of u; the part of order n is written pi_n.  Summing all parts at
t = 1 recovers log(e^x e^y) with q_m = pi_m(t=1) homogeneous of degree m
in u and an (infinite, here length-truncated) series in w.

Two independent constructions are provided: a sum over descendant trees
and an order-by-order fixed-point iteration.  They must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial
from typing import Sequence

from .algebra import UW, NCPoly, TSeries, apply_exp_ad_w, commutator, generators
from .kernel import KernelTable, k_coeff, psi0
from .trees import Leaf, Tree, descendants, grouped_by_shape, node_count


def _u_seed(trunc_degree: int) -> TSeries:
    u_gen, _ = generators(UW, trunc_degree)
    return TSeries.from_poly(u_gen)


def conjugated_integral(series: TSeries) -> TSeries:
    """exp((t/2) ad w) applied to the integral from 0 of exp(-(tau/2) ad w)
    applied to the integrand series."""
    return apply_exp_ad_w(apply_exp_ad_w(series, Fraction(-1, 2)).integrate(),
                          Fraction(1, 2))


def vertex_diagonal(two_n: int, v: TSeries) -> TSeries:
    """The vertex with all 2n slots equal to v, divided by (2n)!:
    k_{2n} times the conjugated integral of (ad v)^{2n}(u)."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"vertex arity must be even and >= 2, got {two_n}")
    chain = _u_seed(v.trunc_degree)
    for _ in range(two_n):
        chain = commutator(v, chain)
    return conjugated_integral(chain).scale(k_coeff(two_n))


def vertex(args: Sequence[TSeries]) -> TSeries:
    """Symmetric multilinear vertex of even arity 2n.

    Polarization of the diagonal form: the integrand is the sum over all
    orderings of ad(v_1) ... ad(v_2n) applied to u.  Equal arguments are
    grouped, so only distinct orderings are expanded, weighted by the
    product of multiplicity factorials.
    """
    arity = len(args)
    if arity < 2 or arity % 2:
        raise ValueError(f"vertex arity must be even and >= 2, got {arity}")
    reps: list[TSeries] = []
    ids: list[int] = []
    for arg in args:
        for j, rep in enumerate(reps):
            if rep == arg:
                ids.append(j)
                break
        else:
            if reps:
                reps[0]._check_compatible(arg)
            ids.append(len(reps))
            reps.append(arg)

    trunc_degree = reps[0].trunc_degree
    seed = _u_seed(trunc_degree)
    symmetrized = TSeries.zero(UW, trunc_degree)
    for ordering in sorted(set(permutations(ids))):
        chain = seed
        for rep_id in reversed(ordering):
            chain = commutator(reps[rep_id], chain)
        symmetrized = symmetrized + chain
    repeats = 1
    for j in range(len(reps)):
        repeats *= factorial(ids.count(j))
    return conjugated_integral(symmetrized).scale(repeats * k_coeff(arity))


def eval_tree(tree: Tree, leaf_value: TSeries) -> TSeries:
    """Bottom-up tree value: every leaf carries leaf_value, every node is
    a vertex applied to its children's values."""
    if isinstance(tree, Leaf):
        return leaf_value
    return vertex([eval_tree(child, leaf_value) for child in tree.children])


@dataclass
class GradedSeries:
    """psi split by u-grading: parts[n] is the order-n series pi_n."""

    trunc_degree: int
    max_order: int
    parts: dict[int, TSeries]

    def __post_init__(self):
        self.parts = {n: s for n, s in self.parts.items() if not s.is_zero()}

    def part(self, n: int) -> TSeries:
        if not 1 <= n <= self.max_order:
            raise ValueError(f"order {n} was not computed (max order {self.max_order})")
        return self.parts.get(n, TSeries.zero(UW, self.trunc_degree))

    def total(self) -> TSeries:
        out = TSeries.zero(UW, self.trunc_degree)
        for n in sorted(self.parts):
            out = out + self.parts[n]
        return out

    def q(self, m: int) -> NCPoly:
        """q_m: the order-m part evaluated at t = 1."""
        return self.part(m).eval_t1()


def psi_by_descendants(max_order: int, trunc_degree: int) -> GradedSeries:
    """Descendant-sum construction.

    The solution is the sum over r >= 1 of 1/r! times all descendant
    trees on r leaves, every leaf carrying psi0.  A tree with r leaves
    and s vertices lands in grading order r + s, so only trees with
    r + s <= max_order are needed; label-equivalent trees are evaluated
    once and multiplied out.
    """
    if max_order < 1:
        raise ValueError("max order must be at least 1")
    seed = psi0(trunc_degree)
    KernelTable.build(max(0, (max_order - 1) // 2))
    parts: dict[int, TSeries] = {1: seed}
    for leaves in range(2, max_order):
        node_budget = max_order - leaves
        if node_budget < 1:
            continue
        for rep, count in grouped_by_shape(descendants(leaves, node_budget)):
            order = leaves + node_count(rep)
            value = eval_tree(rep, seed).scale(Fraction(count, factorial(leaves)))
            if order in parts:
                parts[order] = parts[order] + value
            else:
                parts[order] = value
    return GradedSeries(trunc_degree, max_order, parts)


def psi_by_picard(max_order: int, trunc_degree: int) -> GradedSeries:
    """Fixed-point construction.

    Iterate psi <- psi0 + sum_n (1/(2n)!) vertex(psi, ..., psi) with the
    vertex expanded multilinearly over the grading; order n only draws on
    orders <= n - 2, so the iteration is stationary on orders
    1..max_order after about max_order/2 + 1 rounds.
    """
    if max_order < 1:
        raise ValueError("max order must be at least 1")
    seed = psi0(trunc_degree)
    KernelTable.build(max(0, (max_order - 1) // 2))
    arities = range(2, max_order, 2)
    parts: dict[int, TSeries] = {}
    for _ in range(max_order + 2):
        new_parts: dict[int, TSeries] = {1: seed}
        known = sorted(parts)
        for arity in arities:
            for combo in combinations_with_replacement(known, arity):
                order = 1 + sum(combo)
                if order > max_order:
                    continue
                orderings = factorial(arity)
                for o in set(combo):
                    orderings //= factorial(combo.count(o))
                contribution = vertex([parts[o] for o in combo]).scale(
                    Fraction(orderings, factorial(arity)))
                if order in new_parts:
                    new_parts[order] = new_parts[order] + contribution
                else:
                    new_parts[order] = contribution
        new_parts = {n: s for n, s in new_parts.items() if not s.is_zero()}
        if new_parts == parts:
            return GradedSeries(trunc_degree, max_order, parts)
        parts = new_parts
    raise AssertionError("fixed-point iteration failed to become stationary")


def q_series(max_order: int, trunc_degree: int) -> list[NCPoly]:
    """q_1 .. q_max_order at the given truncation, by the descendant sum."""
    graded = psi_by_descendants(max_order, trunc_degree)
    return [graded.q(m) for m in range(1, max_order + 1)]


def ode_residual(graded: GradedSeries) -> TSeries:
    """Exact residual of the flow equation for the computed truncation.

    Returns dpsi/dt - k(ad psi)(u) - (1/2)[w, psi] restricted to u-degree
    <= max_order (higher orders were never computed) and word length <=
    trunc_degree.  A correct construction makes this identically zero.
    """
    trunc_degree = graded.trunc_degree
    psi = graded.total()
    if not psi.coeff(0).is_zero():
        raise AssertionError("psi must vanish at t = 0")
    u_gen, w_gen = generators(UW, trunc_degree)
    rhs = TSeries.from_poly(u_gen)
    power = TSeries.from_poly(u_gen)
    for p in range(1, (graded.max_order - 1) // 2 + 1):
        power = commutator(psi, commutator(psi, power))
        rhs = rhs + power.scale(k_coeff(2 * p))
    rhs = rhs + commutator(TSeries.from_poly(w_gen), psi).scale(Fraction(1, 2))
    residual = psi.differentiate() - rhs
    u_letter = UW[0]
    return residual.map_coeffs(
        lambda poly: poly.filter_words(lambda w: w.count(u_letter) <= graded.max_order))
