from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings

from bchresum.algebra import UW, NCPoly, TSeries, commutator, generators, substitute
from bchresum.kernel import psi0
from bchresum.resummation import (
    GradedSeries,
    conjugated_integral,
    eval_tree,
    ode_residual,
    psi_by_descendants,
    psi_by_picard,
    q_series,
    vertex,
    vertex_diagonal,
)
from bchresum.trees import Leaf, Node

from conftest import tseries

D = 6
SEED = psi0(D)
U, W = generators(UW, D)


class TestVertex:
    def test_arity_validation(self):
        with pytest.raises(ValueError):
            vertex([SEED])
        with pytest.raises(ValueError):
            vertex([SEED, SEED, SEED])
        with pytest.raises(ValueError):
            vertex_diagonal(3, SEED)

    def test_vanishes_on_zero_argument(self):
        zero = TSeries.zero(UW, D)
        assert vertex([zero, SEED]).is_zero()
        assert vertex_diagonal(2, zero).is_zero()

    def test_diagonal_w_free_part_vanishes(self):
        # (ad u)^2(u) = 0, so the w-degree-0 slice of the 2-vertex on psi0 dies
        value = vertex_diagonal(2, SEED)
        w_free = value.map_coeffs(lambda p: p.by_multidegree(3, 0))
        assert w_free.is_zero()

    def test_polarization_relation_arity_two(self):
        assert vertex([SEED, SEED]) == vertex_diagonal(2, SEED).scale(2)

    def test_polarization_relation_arity_four(self):
        assert vertex([SEED] * 4) == vertex_diagonal(4, SEED).scale(factorial(4))


class TestVertexRandomized:
    @given(tseries(), tseries())
    def test_symmetry(self, a, b):
        assert vertex([a, b]) == vertex([b, a])

    @given(tseries(), tseries(), tseries())
    def test_multilinearity_additive(self, a, a2, b):
        assert vertex([a + a2, b]) == vertex([a, b]) + vertex([a2, b])

    @given(tseries())
    def test_multilinearity_scaling(self, a):
        scaled = vertex([a.scale(Fraction(3, 2)), a])
        assert scaled == vertex([a, a]).scale(Fraction(3, 2))

    @settings(max_examples=30)
    @given(tseries(), tseries(), tseries(), tseries())
    def test_four_slot_symmetry(self, a, b, c, d):
        assert vertex([a, b, c, d]) == vertex([d, c, b, a])


class TestEvalTree:
    def test_leaf_is_the_leaf_value(self):
        assert eval_tree(Leaf(1), SEED) == SEED

    def test_single_pair_node(self):
        tree = Node((Leaf(1), Leaf(2)))
        assert eval_tree(tree, SEED) == vertex([SEED, SEED])

    def test_invariant_under_child_reordering(self):
        a = Node((Node((Leaf(1), Leaf(2))), Leaf(3)))
        b = Node((Leaf(3), Node((Leaf(2), Leaf(1)))))
        assert eval_tree(a, SEED) == eval_tree(b, SEED)


class TestGradedConstruction:
    def test_order_one_is_the_seed(self, graded_n5_d6):
        assert graded_n5_d6.part(1) == SEED

    def test_even_orders_vanish(self, graded_n5_d6):
        assert graded_n5_d6.part(2).is_zero()
        assert graded_n5_d6.part(4).is_zero()

    def test_order_five_against_independent_evaluation(self, graded_n5_d6):
        caterpillar = vertex([vertex([SEED, SEED]), SEED]).scale(Fraction(1, 2))
        four_point = vertex([SEED] * 4).scale(Fraction(1, 24))
        assert graded_n5_d6.part(5) == caterpillar + four_point

    def test_order_three_prefactor_is_one_twelfth(self, graded_n5_d6):
        # The raw conjugated integral of (ad psi0)^2(u) enters pi_3 with
        # coefficient k_2 = 1/12; adjudicated by the direct-log oracle.
        raw = conjugated_integral(
            commutator(SEED, commutator(SEED, TSeries.from_poly(U))))
        assert not raw.is_zero()
        assert graded_n5_d6.part(3) == raw.scale(Fraction(1, 12))
        assert graded_n5_d6.part(3) != raw.scale(Fraction(1, 24))

    def test_constructions_agree(self):
        for max_order in (1, 2, 3, 5, 6, 7):
            left = psi_by_descendants(max_order, D)
            right = psi_by_picard(max_order, D)
            assert left.parts == right.parts, f"disagreement at max order {max_order}"

    def test_u_homogeneity(self, graded_n7_d7):
        for order, series in graded_n7_d7.parts.items():
            for poly in series.coeffs.values():
                assert all(word.count("u") == order for word in poly.terms)

    def test_t_homogeneity(self, graded_n7_d7):
        for series in graded_n7_d7.parts.values():
            for power, poly in series.coeffs.items():
                assert all(len(word) == power for word in poly.terms)

    def test_part_bounds(self, graded_n5_d6):
        with pytest.raises(ValueError):
            graded_n5_d6.part(6)
        with pytest.raises(ValueError):
            graded_n5_d6.part(0)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            psi_by_descendants(0, D)
        with pytest.raises(ValueError):
            psi_by_picard(0, D)


class TestQPolynomials:
    def test_q1_parts(self, graded_n5_d6):
        q1 = graded_n5_d6.q(1)
        assert q1.by_multidegree(1, 0) == U
        assert q1.by_multidegree(1, 1) == commutator(W, U) / 4

    def test_q2_vanishes(self, graded_n5_d6):
        assert graded_n5_d6.q(2).is_zero()

    def test_w_free_collapse(self):
        # with w set to 0 the whole sum must collapse to u: log(e^(u/2) e^(u/2)) = u
        total = NCPoly.zero(UW, D)
        for q in q_series(D, D):
            total = total + substitute(q, U, NCPoly.zero(UW, D))
        assert total == U

    def test_q_series_length(self):
        polys = q_series(4, 4)
        assert len(polys) == 4


class TestOdeResidual:
    def test_zero_at_full_truncation(self, graded_n5_d6):
        assert ode_residual(graded_n5_d6).is_zero()

    def test_zero_for_linear_truncation(self):
        linear = GradedSeries(D, 1, {1: SEED})
        assert ode_residual(linear).is_zero()

    def test_initial_condition_enforced(self):
        shifted = GradedSeries(D, 1, {1: SEED + TSeries.from_poly(U, 0)})
        with pytest.raises(AssertionError):
            ode_residual(shifted)

    def test_nonzero_for_wrong_prefactor(self, graded_n5_d6):
        skewed = GradedSeries(D, 5, dict(graded_n5_d6.parts))
        skewed.parts[3] = skewed.parts[3].scale(Fraction(1, 2))
        assert not ode_residual(skewed).is_zero()
