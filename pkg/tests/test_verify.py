from fractions import Fraction

import pytest

from SturmLiouville import MomentRecurrence, PivotVanishes, Polynomial, PreconditionViolation, TableTooShort, \
    classify, gram_matrix, inner_product, moments_upto, norm_finiteness
from SturmLiouville.Families import ChebyshevFamily, HermiteFamily, JacobiFamily, LaguerreFamily, LegendreFamily
from SturmLiouville.Verify import hermite_moment_ratio, jacobi_moment_ratio, laguerre_moment_ratio

x = Polynomial.x()


def test_moment_relation():
    recurrence = MomentRecurrence(1 - x ** 2, -2 * x)
    assert recurrence.relation(0) == {0: 0, 1: -2}
    assert recurrence.relation(1) == {0: 1, 1: 0, 2: -3}
    assert recurrence.pivot(3) == -5


def test_pivot_vanishes():
    with pytest.raises(PivotVanishes) as info:
        MomentRecurrence(1 - x ** 2, Polynomial()).next_ratio(0, [Fraction(1)])
    assert info.value.k == 0


def test_legendre_moments():
    table = moments_upto(LegendreFamily().classify(), 4)
    assert table.ratios == (1, 0, Fraction(1, 3), 0, Fraction(1, 5))
    assert table.N == 4
    assert "[-1, 1]" in table.mu0_symbol


def test_laguerre_moments_are_factorials():
    table = moments_upto(LaguerreFamily().classify(), 6)
    assert table.ratios == (1, 1, 2, 6, 24, 120, 720)


def test_hermite_and_chebyshev_moments():
    hermite = moments_upto(HermiteFamily().classify(), 6)
    assert (hermite[2], hermite[4], hermite[6]) == (Fraction(1, 2), Fraction(3, 4), Fraction(15, 8))
    assert hermite[1] == hermite[3] == hermite[5] == 0
    chebyshev = moments_upto(ChebyshevFamily(1).classify(), 4)
    assert (chebyshev[2], chebyshev[4]) == (Fraction(1, 2), Fraction(3, 8))


def test_mirrored_half_line_moments():
    table = moments_upto(classify(x, 1 + x), 5)
    assert table.ratios == (1, -1, 2, -6, 24, -120)


def test_moments_need_admissibility():
    with pytest.raises(PreconditionViolation):
        moments_upto(classify(x ** 2, x + 1), 3)


def test_inner_product():
    table = moments_upto(LegendreFamily().classify(), 4)
    assert inner_product(table, x, x) == Fraction(1, 3)
    assert inner_product(table, Polynomial(), x ** 9) == 0
    with pytest.raises(TableTooShort):
        inner_product(table, x ** 3, x ** 2)


def test_gram_matrices():
    legendre = gram_matrix(LegendreFamily().classify(), 2)
    assert legendre.diagonal() == (1, Fraction(1, 3), Fraction(4, 45))
    assert legendre.is_diagonal() and legendre.is_symmetric()
    assert legendre.max_off_diagonal() == 0
    laguerre = gram_matrix(LaguerreFamily().classify(), 3)
    assert laguerre.diagonal() == (1, 1, 4, 36)
    assert laguerre.is_diagonal()


def test_gram_is_diagonal_for_every_family():
    for family in (LegendreFamily(), LaguerreFamily(), HermiteFamily(), ChebyshevFamily(1), ChebyshevFamily(2),
                   JacobiFamily(-3, Fraction(1, 2))):
        assert gram_matrix(family.classify(), 6).is_diagonal(), family.name


def test_norm_finiteness():
    assert norm_finiteness(LegendreFamily().classify())
    assert norm_finiteness(LaguerreFamily().classify())
    assert norm_finiteness(ChebyshevFamily(1).classify())
    assert not norm_finiteness(classify(x ** 2, x + 1))
    assert not norm_finiteness(classify(1 + x ** 2, x))


def test_symbolic_oracle():
    assert jacobi_moment_ratio(2, 0, 0) == Fraction(1, 3)
    assert jacobi_moment_ratio(2, 1, 1) == Fraction(1, 5)
    assert jacobi_moment_ratio(2, Fraction(-1, 2), Fraction(-1, 2)) == Fraction(1, 2)
    assert laguerre_moment_ratio(4) == 24
    assert hermite_moment_ratio(4) == Fraction(3, 4)
    with pytest.raises(ValueError):
        jacobi_moment_ratio(2, Fraction(1, 3), 0)


def test_recurrence_agrees_with_oracle():
    jacobi = moments_upto(JacobiFamily(-4, 0).classify(), 6)
    assert [jacobi[k] for k in range(7)] == [jacobi_moment_ratio(k, 1, 1) for k in range(7)]
    hermite = moments_upto(HermiteFamily().classify(), 8)
    assert [hermite[k] for k in range(9)] == [hermite_moment_ratio(k) for k in range(9)]
