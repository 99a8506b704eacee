from fractions import Fraction

import pytest

from SturmLiouville import Direction, Finiteness, FinitenessTag, Polynomial, PreconditionViolation, \
    RationalFunction, Side, SingularPointData, WeightForm, decay_dominates_polynomials, derive_weight, \
    finiteness_at_point, order1_singular_classify

x = Polynomial.x()


def test_legendre_weight_is_constant():
    w = derive_weight(1 - x ** 2, -2 * x)
    assert w.equivalent(WeightForm())
    assert w.roots() == (-1, 1)
    assert w.display() == "1"


def test_chebyshev_weight():
    w = derive_weight(1 - x ** 2, -x)
    assert w.power_factors == ((Fraction(-1), Fraction(-1, 2)), (Fraction(1), Fraction(-1, 2)))
    assert w.display() == "|x + 1|^(-1/2) * |x - 1|^(-1/2)"
    assert w.log_derivative() == RationalFunction(x, 1 - x ** 2)


def test_exponential_weights():
    assert derive_weight(x, 1 - x).display() == "exp(-x)"
    assert derive_weight(Polynomial.one(), -2 * x).display() == "exp(-x^2)"


def test_weight_at_other_orders():
    assert derive_weight(x, Polynomial.one(), order=1).display() == "|x|"
    # (a4 p)' = 1/2 a3 p with a4 = (1-x^2)^2 and a3 = -8x(1-x^2) has p = 1
    a4 = (1 - x ** 2) ** 2
    assert derive_weight(a4, -8 * x * (1 - x ** 2), order=4).equivalent(WeightForm())
    with pytest.raises(ValueError):
        derive_weight(x, x, order=5)


def test_essential_singularity_in_the_weight():
    w = derive_weight(x ** 2, Polynomial.one())
    assert w.exp_arg == RationalFunction(-1, x)
    assert w.exponent_at(0) == -2
    assert finiteness_at_point(w, 0, Side.RIGHT) == Finiteness(FinitenessTag.ZERO_LIMIT, Side.RIGHT)
    assert finiteness_at_point(w, 0, "left") == Finiteness(FinitenessTag.INFINITE, Side.LEFT)
    assert finiteness_at_point(w, 0) == Finiteness(FinitenessTag.INFINITE, Side.LEFT)


def test_even_poles():
    growing = WeightForm(exp_arg=RationalFunction(1, x ** 2))
    assert finiteness_at_point(growing, 0).tag is FinitenessTag.OSCILLATES_OR_UNDEFINED
    decaying = WeightForm(exp_arg=RationalFunction(-1, x ** 2))
    assert finiteness_at_point(decaying, 0) == Finiteness(FinitenessTag.ZERO_LIMIT, Side.BOTH)


def test_power_factor_finiteness():
    chebyshev = derive_weight(1 - x ** 2, -x)
    assert finiteness_at_point(chebyshev, 1) == Finiteness(FinitenessTag.INFINITE, Side.BOTH)
    assert not finiteness_at_point(chebyshev, 1).is_finite
    legendre = derive_weight(1 - x ** 2, -2 * x)
    assert finiteness_at_point(legendre, -1).tag is FinitenessTag.FINITE_POSITIVE
    jacobi = WeightForm(power_factors=((1, 2),))
    assert finiteness_at_point(jacobi, 1).tag is FinitenessTag.ZERO_LIMIT


def test_decay():
    laguerre = derive_weight(x, 1 - x)
    assert decay_dominates_polynomials(laguerre, Direction.POSITIVE)
    assert not decay_dominates_polynomials(laguerre, "-inf")
    hermite = derive_weight(Polynomial.one(), -2 * x)
    assert decay_dominates_polynomials(hermite, "+inf") and decay_dominates_polynomials(hermite, "-inf")
    assert not decay_dominates_polynomials(WeightForm(), "+inf")


def test_weight_form_helpers():
    w = WeightForm().times_abs_polynomial(1 - x ** 2)
    assert w.display() == "|x + 1| * |x - 1|"
    assert w.times_power(1, -1).simplified().power_factors == ((Fraction(-1), Fraction(1)),)
    with pytest.raises(AssertionError):
        WeightForm(constant=Fraction(-1))
    with pytest.raises(AssertionError):
        WeightForm(power_factors=((0, 1), (0, 2)))


def test_singular_point_data():
    assert SingularPointData.from_coefficients(x ** 2, 1 + x) == SingularPointData(2, 0, 1)
    assert SingularPointData.from_coefficients(x ** 2, -x) == SingularPointData(2, 1, -1)
    with pytest.raises(PreconditionViolation):
        SingularPointData.from_coefficients(1 + x, Polynomial.one())
    with pytest.raises(PreconditionViolation):
        SingularPointData.from_coefficients(x, Polynomial())


def test_order1_singular_classify():
    growing = SingularPointData.from_coefficients(x ** 2, 1 + x)
    assert order1_singular_classify(growing) == Finiteness(FinitenessTag.INFINITE, Side.BOTH)
    decaying = SingularPointData.from_coefficients(x ** 2, -Polynomial.one())
    assert order1_singular_classify(decaying) == Finiteness(FinitenessTag.ZERO_LIMIT, Side.BOTH)
    odd = SingularPointData.from_coefficients(x ** 2, -x)
    assert order1_singular_classify(odd) == Finiteness(FinitenessTag.INFINITE, Side.LEFT)
    assert order1_singular_classify(odd, "right") == Finiteness(FinitenessTag.ZERO_LIMIT, Side.RIGHT)
    with pytest.raises(PreconditionViolation):
        order1_singular_classify(SingularPointData(1, 1, 1))
