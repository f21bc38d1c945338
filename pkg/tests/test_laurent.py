from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hfkword.laurent import BivariateLaurent, LaurentPolynomial, laurent_equiv

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPolynomial)


def test_zero_coefficients_are_dropped():
    assert LaurentPolynomial({1: 0, 2: 3}).terms == {2: 3}
    assert LaurentPolynomial({0: 1}) + LaurentPolynomial({0: -1}) == LaurentPolynomial()


def test_printing_is_ascending():
    assert str(LaurentPolynomial({2: 1, 1: -1, 0: 1})) == "1 - t + t^2"
    assert str(LaurentPolynomial({-1: -2, 3: 1})) == "-2 t^-1 + t^3"
    assert str(LaurentPolynomial()) == "0"


def test_evaluation_is_exact():
    f = LaurentPolynomial({-1: 1, 0: -1, 1: 1})
    assert f(1) == 1 and isinstance(f(1), int)
    assert f(2) == Fraction(3, 2)


def test_bivariate_print_and_q_evaluation():
    p = BivariateLaurent({(-1, -1): 4, (-1, 1): 2, (0, 0): 9, (0, 2): 4, (1, 1): 4, (1, 3): 2})
    assert str(p) == "4 t^-1 q^-1 + 2 t^-1 q + 9 + 4 q^2 + 4 t q + 2 t q^3"
    assert p.at_q(-1) == LaurentPolynomial({-1: -6, 0: 13, 1: -6})


def test_bivariate_list_round_trip():
    p = BivariateLaurent({(3, 6): 1, (-3, 0): 1})
    assert BivariateLaurent.from_list(p.to_list()) == p
    assert p.invert() == BivariateLaurent({(-3, -6): 1, (3, 0): 1})


def test_equiv_examples():
    assert laurent_equiv(LaurentPolynomial({2: 1, 1: -1, 0: 1}), LaurentPolynomial({0: -1, -1: 1, -2: -1}))
    assert not laurent_equiv(LaurentPolynomial({1: 1, 0: 1}), LaurentPolynomial({1: 1, 0: -1}))
    assert laurent_equiv(LaurentPolynomial(), LaurentPolynomial())
    assert not laurent_equiv(LaurentPolynomial(), LaurentPolynomial({0: 1}))


@given(polys, st.integers(-10, 10), st.sampled_from([1, -1]))
def test_equiv_accepts_units(f, c, sign):
    assert laurent_equiv(f, f.shift(c) * sign)


@given(polys, polys)
def test_equiv_matches_definition(f, g):
    # brute force over a window of shifts and both signs
    brute = (f.is_zero() and g.is_zero()) or any(f == g.shift(c) * s for c in range(-30, 31) for s in (1, -1))
    assert laurent_equiv(f, g) == brute


@given(polys, polys)
def test_ring_laws(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f - f).is_zero()
    assert (f * g)(2) == f(2) * g(2)


def test_symmetrized_and_palindromic():
    f = LaurentPolynomial({1: 1, 2: -1, 3: 1})
    assert f.symmetrized() == LaurentPolynomial({-1: 1, 0: -1, 1: 1})
    assert f.is_palindromic()
    assert not LaurentPolynomial({0: 1, 1: 2}).is_palindromic()
