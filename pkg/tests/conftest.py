import hypothesis.strategies as st
import pytest
from hypothesis import settings

from bchresum.algebra import UW, NCPoly, TSeries
from bchresum.resummation import psi_by_descendants

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def scalars():
    return st.fractions(min_value=-4, max_value=4, max_denominator=6)


def words(alphabet=UW, max_len=3, min_len=0):
    return st.lists(st.sampled_from(alphabet), min_size=min_len, max_size=max_len).map("".join)


def polys(alphabet=UW, trunc_degree=5, max_len=3, max_terms=4, min_word_len=0):
    return st.dictionaries(words(alphabet, max_len, min_word_len), scalars(),
                           max_size=max_terms).map(
        lambda terms: NCPoly(alphabet, trunc_degree, terms))


def tseries(alphabet=UW, trunc_degree=5, max_t=2):
    return st.dictionaries(st.integers(min_value=0, max_value=max_t),
                           polys(alphabet, trunc_degree, max_len=2, max_terms=3),
                           max_size=3).map(
        lambda coeffs: TSeries(alphabet, trunc_degree, coeffs))


@pytest.fixture(scope="session")
def graded_n5_d6():
    return psi_by_descendants(5, 6)


@pytest.fixture(scope="session")
def graded_n7_d7():
    return psi_by_descendants(7, 7)
