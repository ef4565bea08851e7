from hypothesis import given

from conftest import monomial_ideals
from polarkoszul.koszul import FieldConfig
from polarkoszul.monomials import minimalize, parse_ideal, polarize_ideal
from polarkoszul.taylor import betti_numbers, koszul_dims, tor_dims


def test_single_generator():
    assert tor_dims(minimalize([(1, 1)])) == {(0, 0): {0: 1}, (1, 1): {1: 1}}


def test_maximal_ideal_is_koszul():
    m = minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert betti_numbers(m) == {0: 1, 1: 3, 2: 3, 3: 1}


def test_running_example():
    I = parse_ideal("vars: x1 x2\nx1^2*x2\nx1*x2^2")
    assert betti_numbers(I) == {0: 1, 1: 2, 2: 1}
    assert koszul_dims(I, "ideal") == {(2, 1): {0: 1}, (1, 2): {0: 1}, (2, 2): {1: 1}}


def test_three_generators_with_nontrivial_lcm_collapse():
    # (x1^2, x1x2, x2^2): Taylor has 8 faces, minimal resolution 1, 3, 2
    I = minimalize([(2, 0), (1, 1), (0, 2)])
    assert betti_numbers(I) == {0: 1, 1: 3, 2: 2}


@given(monomial_ideals(max_gens=5))
def test_betti_numbers_invariant_under_polarization(I):
    P, _ = polarize_ideal(I)
    assert betti_numbers(I) == betti_numbers(P)


@given(monomial_ideals(max_gens=5))
def test_characteristic_two_agrees_on_small_ideals(I):
    assert tor_dims(I, FieldConfig(2)) == tor_dims(I)
