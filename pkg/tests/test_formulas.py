from fractions import Fraction
from math import comb

import pytest

from convex_crossings import (
    FormulaInput,
    PreconditionError,
    floor_sum,
    nu1_balanced,
    nu1_bipartite,
    nu1_special,
    nu1_theorem1,
    nu1_theorem2,
)
from convex_crossings.formulas import NonIntegralValue, THEOREM1_TERMS, _count, phi

from oracles import brute_force_min


@pytest.mark.parametrize("m, n, expected", [(1, 5, 0), (2, 2, 0), (2, 4, 2)])
def test_bipartite_examples(m, n, expected):
    assert nu1_bipartite(m, n) == expected


def test_bipartite_requires_divisibility():
    with pytest.raises(PreconditionError):
        nu1_bipartite(3, 4)


def test_bipartite_against_brute_force():
    for m, n in [(2, 4), (2, 6), (3, 3), (3, 6), (1, 7), (4, 4)]:
        assert nu1_bipartite(m, n) == brute_force_min([m, n]), (m, n)


@pytest.mark.parametrize("n, expected", [(4, 1), (5, 5), (6, 15), (7, 35), (8, 70)])
def test_balanced_with_singletons_is_k_n(n, expected):
    assert nu1_balanced(1, n) == expected == comb(n, 4)


def test_balanced_small_cases_brute_force():
    assert nu1_balanced(2, 2) == 0
    assert nu1_balanced(2, 3) == 6 == brute_force_min([2, 2, 2])
    for n in range(4, 8):
        assert nu1_balanced(1, n) == brute_force_min([1] * n)


@pytest.mark.parametrize(
    "m, n, p, expected",
    [(1, 2, 1, 0), (1, 3, 1, 1), (2, 2, 2, 6), (2, 2, 1, 2)],
)
def test_theorem1_examples(m, n, p, expected):
    assert nu1_theorem1(m, n, p) == expected
    assert brute_force_min([p] + [m] * n) == expected


@pytest.mark.parametrize("m, n, p, expected", [(1, 2, 2, 0), (1, 2, 4, 2)])
def test_theorem2_examples(m, n, p, expected):
    assert nu1_theorem2(m, n, p) == expected
    assert brute_force_min([p] + [m] * n) == expected


def test_theorem_preconditions():
    with pytest.raises(PreconditionError):
        nu1_theorem1(1, 2, 3)
    with pytest.raises(PreconditionError):
        nu1_theorem2(2, 2, 2 * 2 + 1)
    with pytest.raises(PreconditionError, match="no applicable theorem"):
        nu1_special(1, 2, 3)
    with pytest.raises(PreconditionError):
        nu1_theorem1(0, 2, 1)


def test_theorems_against_brute_force_up_to_nine_vertices():
    for m in range(1, 9):
        for n in range(1, 9):
            for p in range(1, 9):
                if m * n + p > 8:
                    continue
                args = FormulaInput(m, n, p)
                if args.applicable:
                    assert nu1_special(m, n, p)[1] == brute_force_min([p] + [m] * n)


def test_special_prefers_t1_at_boundary():
    assert nu1_special(2, 2, 4)[0] == "t1"
    assert nu1_special(1, 2, 4)[0] == "t2"
    assert nu1_special(2, 2, 4)[1] == nu1_theorem2(2, 2, 4)


def test_polynomial_has_fifteen_terms_and_evaluates_exactly():
    assert len(THEOREM1_TERMS) == 15
    assert phi(2, 2, 2) == Fraction(6)
    # Outside any divisibility regime the polynomial is not integral in general.
    assert phi(1, 2, 3).denominator != 1


def test_nonintegral_is_a_hard_failure():
    with pytest.raises(NonIntegralValue):
        _count(Fraction(1, 3), "x")
    with pytest.raises(NonIntegralValue):
        _count(Fraction(-2), "x")


@pytest.mark.parametrize("m, n, expected", [(1, 4, 0), (3, 2, 6), (2, 3, 3)])
def test_floor_sum_examples(m, n, expected):
    assert floor_sum(m, n) == expected


def test_floor_sum_matches_direct_series():
    for m in range(1, 51):
        for n in range(1, 51):
            assert floor_sum(m, n) == sum((k - 1) // n for k in range(1, m * n + 1))


def test_formula_input_flags():
    f = FormulaInput(2, 3, 3)
    assert f.p_divides_mn and not f.mn_divides_p and f.applicable
    assert not FormulaInput(2, 3, 4).applicable
    assert FormulaInput(1, 2, 6).mn_divides_p
