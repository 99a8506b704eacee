from fractions import Fraction

import numpy as np
import pytest

from SturmLiouville import DegreeViolation, DiffOperator, EigenvalueCollisionUnsolvable, Polynomial, apply, \
    eigenvalue_formula, matrix_on_Pn, monic_eigenpolynomial
from SturmLiouville.Cli.SelfTest import random_operator, random_parity_operator, random_polynomial

x = Polynomial.x()
legendre = DiffOperator.second_order(1 - x ** 2, -2 * x)


def test_trailing_zero_coefficients_are_dropped():
    L = DiffOperator([x, 1, 0])
    assert L.order == 1
    assert L.coefficient(5).is_zero()
    with pytest.raises(AssertionError):
        DiffOperator([0, 0])


def test_apply():
    assert apply(legendre, x ** 2) == 2 - 6 * x ** 2
    assert legendre(Polynomial.one()).is_zero()
    assert DiffOperator.from_polynomials(1, 0, 1)(x ** 3) == x ** 3 + 6 * x


def test_matrix_on_Pn():
    F = Fraction
    assert matrix_on_Pn(legendre, 2) == ((F(0), F(0), F(2)), (F(0), F(-2), F(0)), (F(0), F(0), F(-6)))


def test_degree_violation():
    with pytest.raises(DegreeViolation):
        DiffOperator([0, x ** 2]).matrix_on_Pn(2)
    with pytest.raises(DegreeViolation):
        DiffOperator([0, 0, x ** 3]).eigenvalue_formula()
    assert not DiffOperator([0, x ** 2]).maps_poly_to_poly()


def test_eigenvalue_formula():
    formula = eigenvalue_formula(legendre)
    assert [formula(n) for n in range(5)] == [0, -2, -6, -12, -20]
    assert formula.expanded().to_text("n") == "-n^2 - n"
    assert formula.shifted(3)(2) == -3


def test_legendre_eigenpolynomials():
    assert monic_eigenpolynomial(legendre, 2).eigenpolynomial == x ** 2 - Fraction(1, 3)
    assert monic_eigenpolynomial(legendre, 3).eigenpolynomial == x ** 3 - x.scale(Fraction(3, 5))
    pairs = legendre.eigenpairs(4)
    assert [pair.degree for pair in pairs] == [0, 1, 2, 3, 4]
    assert pairs[4].eigenvalue == -20


def test_collision_with_solution():
    # lambda_0 = lambda_2 = 0, but the right-hand side at row 0 vanishes
    L = DiffOperator.second_order(x ** 2, -x)
    pair = L.monic_eigenpolynomial(2)
    assert pair.eigenvalue == 0
    assert pair.eigenpolynomial == x ** 2


def test_collision_without_solution():
    L = DiffOperator.second_order(x ** 2, 1 - x)
    with pytest.raises(EigenvalueCollisionUnsolvable) as info:
        L.monic_eigenpolynomial(2)
    assert info.value.degree == 2
    assert info.value.row == 0


def test_transformed_keeps_eigenvalues():
    moved = legendre.transformed(2, 1)
    assert [moved.eigenvalue_formula()(n) for n in range(6)] == [legendre.eigenvalue_formula()(n) for n in range(6)]


def test_parity():
    assert legendre.preserves_parity()
    assert not DiffOperator.second_order(x, 1 - x).preserves_parity()


def test_triangularity_property():
    rng = np.random.default_rng(3)
    for _ in range(200):
        L = random_operator(rng, 4)
        matrix = L.matrix_on_Pn(5)
        assert all(matrix[i][j] == 0 for i in range(6) for j in range(i))


def test_eigen_residual_property():
    rng = np.random.default_rng(4)
    checked = 0
    for _ in range(200):
        L = random_operator(rng, 4)
        n = int(rng.integers(0, 6))
        try:
            pair = L.monic_eigenpolynomial(n)
        except EigenvalueCollisionUnsolvable:
            continue
        assert pair.eigenpolynomial.degree() == n
        assert pair.eigenpolynomial.leading_coefficient() == 1
        assert L(pair.eigenpolynomial) == pair.eigenpolynomial.scale(pair.eigenvalue)
        checked += 1
    assert checked >= 50


def test_parity_preservation_property():
    rng = np.random.default_rng(5)
    for _ in range(200):
        L = random_parity_operator(rng, 4)
        assert L.preserves_parity()
        parity = int(rng.integers(0, 2))
        image = L(random_polynomial(rng, 6, parity))
        assert image.is_zero() or image.parity() == parity
