from fractions import Fraction

import pytest

from SturmLiouville import HighOrderSystem, Interval, NonPolynomialResult, Polynomial, RationalFunction, \
    WeightForm, boundary_difference_vanishes, boundary_expression, derive_order3, derive_order4, example_order4, \
    order4_family
from SturmLiouville.HighOrder import PRINTED_EIGENVALUE
from SturmLiouville.HighOrder.HighOrderSystem import complete_order3

x = Polynomial.x()


def test_example_coefficients():
    system, _ = example_order4()
    assert system.order == 4
    assert system.a(4) == (1 - x ** 2) ** 2
    assert system.a(3) == -8 * x * (1 - x ** 2)
    assert system.a(2) == 8
    assert system.a(1) == -24 * x
    assert system.a(0).is_zero()
    assert system.weight.equivalent(WeightForm())


def test_example_is_consistent():
    system, _ = example_order4()
    assert system.is_consistent()
    assert all(residual.is_zero() for _, residual in system.residuals())


def test_example_eigenvalues():
    system, formula = example_order4()
    assert [formula(n) for n in range(6)] == [0, -24, -48, -24, 120, 480]
    assert system.operator()(x ** 3) == -24 * x ** 3


def test_printed_formula_only_matches_at_one():
    _, formula = example_order4()
    assert [n for n in range(8) if formula(n) == PRINTED_EIGENVALUE(n)] == [1]


def test_example_eigenpolynomials_through_collision():
    system, formula = example_order4()
    L = system.operator()
    assert formula(1) == formula(3)
    for n in range(11):
        pair = L.monic_eigenpolynomial(n)
        P = pair.eigenpolynomial
        assert P.degree() == n and P.leading_coefficient() == 1
        assert pair.eigenvalue == formula(n)
        assert L(P) == P.scale(pair.eigenvalue)
        assert all(c == 0 for k, c in enumerate(P.coefficients) if k % 2 != n % 2)


def test_derive_order4():
    a3, linkage = derive_order4((1 - x ** 2) ** 2, WeightForm())
    assert a3 == -8 * x * (1 - x ** 2)
    assert linkage.describe() == "a2' - a1 = 24*x"
    assert linkage.solve_lower(Polynomial.constant(8)) == -24 * x
    assert linkage.holds(Polynomial.constant(8), -24 * x)
    assert not linkage.holds(Polynomial.constant(8), -23 * x)


def test_derive_order3():
    a2, linkage = derive_order3(Polynomial.one(), WeightForm())
    assert a2.is_zero()
    assert linkage.solve_lower(x) == Fraction(1, 2)


def test_non_polynomial_coefficient():
    # p = 1/x makes (a4 p)'/p = a4' - a4/x, which is not a polynomial for a4 = 1
    p = WeightForm(power_factors=((0, -1),))
    with pytest.raises(NonPolynomialResult):
        derive_order4(Polynomial.one(), p)


def test_order3_system():
    system = complete_order3(Polynomial.one(), x)
    assert [c for c in system.coeffs] == [Fraction(1, 2), x, 0, 1]
    assert system.is_consistent()
    boundary = system.boundary()
    assert boundary.swap_sign() == 1
    assert boundary.terms[-1] == (0, 0, RationalFunction(x))


def test_inconsistent_system():
    system = HighOrderSystem([0, x, 0, 1], WeightForm())
    assert not system.is_consistent()


def test_order4_boundary_is_antisymmetric():
    system, _ = example_order4()
    boundary = boundary_expression(system)
    assert boundary.swap_sign() == -1
    u, y = x ** 2 + 1, x ** 3
    assert boundary.reduced(u, y) == -boundary.reduced(y, u)


def test_example_boundary_vanishes():
    system, _ = example_order4()
    vanishes, witness = boundary_difference_vanishes(system.boundary(), Interval.closed(-1, 1), 8)
    assert vanishes
    assert witness is None


def test_family_member_boundary_witness():
    system = order4_family(x ** 2)
    assert system.is_consistent()
    assert system.a(1) == -22 * x
    vanishes, witness = boundary_difference_vanishes(system.boundary(), Interval.closed(-1, 1), 8)
    assert not vanishes
    assert (witness.i, witness.j, witness.difference) == (0, 2, -28)


def test_lower_orders():
    second = HighOrderSystem([0, -2 * x, 1 - x ** 2])
    assert second.is_consistent()
    assert second.boundary().swap_sign() == -1
    first = HighOrderSystem([Fraction(1, 2), x])
    assert first.weight.display() == "1"
    assert first.is_consistent()
    assert len(first.boundary().terms) == 1


def test_order_bounds():
    with pytest.raises(AssertionError):
        HighOrderSystem([1])
    with pytest.raises(AssertionError):
        HighOrderSystem([0, 0, 0, 0, 0, 1])
