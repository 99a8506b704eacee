
from fractions import Fraction

import pytest

from SturmLiouville import BaseCallback, BudgetExceeded, Polynomial, PreconditionViolation, boundary_limit, \
    classify, cross_validate, quad_inner_product
from SturmLiouville.Families import ChebyshevFamily, HermiteFamily, LaguerreFamily, LegendreFamily

x = Polynomial.x()


class CountingCallback(BaseCallback):
    def __init__(self):
        super().__init__()
        self.starts, self.steps, self.ends = 0, [], 0

    def on_run_start(self, locals: dict):
        self.starts += 1

    def on_step(self, locals: dict):
        self.steps.append((locals["m"], locals["n"], locals["deviation"]))

    def on_run_end(self, locals: dict):
        self.ends += 1


def test_legendre_inner_product():
    result = quad_inner_product(LegendreFamily().classify(), x, x, device="cpu")
    assert result.value == pytest.approx(1 / 3, abs=1e-10)
    assert result.evaluations > 0


def test_inner_products_on_unbounded_intervals():
    laguerre = quad_inner_product(LaguerreFamily().classify(), x ** 2, x, device="cpu")
    assert laguerre.value == pytest.approx(6.0, rel=1e-9)
    hermite = quad_inner_product(HermiteFamily().classify(), x ** 2, x ** 2, device="cpu")
    assert hermite.value == pytest.approx(0.75, rel=1e-9)


def test_singular_endpoint_weight():
    chebyshev = quad_inner_product(ChebyshevFamily(1).classify(), x ** 2, Polynomial.one(), device="cpu")
    assert chebyshev.value == pytest.approx(0.5, abs=1e-9)


def test_mirrored_half_line():
    result = quad_inner_product(classify(x, 1 + x), x, Polynomial.one(), device="cpu")
    assert result.value == pytest.approx(-1.0, abs=1e-9)


def test_quadrature_needs_admissibility():
    with pytest.raises(PreconditionViolation):
        quad_inner_product(classify(1 - x ** 2, x), x, x, device="cpu")


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        quad_inner_product(HermiteFamily().classify(), x ** 2, x ** 2, tol=1e-300, max_evaluations=15, device="cpu")


@pytest.mark.parametrize("max_evaluations", [15, 44, 100, 1_000])
def test_budget_is_never_overrun(max_evaluations):
    with pytest.raises(BudgetExceeded) as info:
        quad_inner_product(HermiteFamily().classify(), x ** 2, x ** 2, tol=1e-300, max_evaluations=max_evaluations,
                           device="cpu")
    assert 15 <= info.value.evaluations <= max_evaluations


def test_cross_validate_legendre():
    callback = CountingCallback()
    cv = cross_validate(LegendreFamily().classify(), n_max=3, callback=callback, device="cpu")
    assert cv.passed
    assert cv.max_deviation < 1e-8
    assert callback.starts == 1 and callback.ends == 1
    assert len(callback.steps) == 10
    assert cv.numeric[1][1] == pytest.approx(1 / 3, abs=1e-10)
    assert cv.numeric[0][1] == cv.numeric[1][0]


@pytest.mark.parametrize("family", [HermiteFamily(), LaguerreFamily(), ChebyshevFamily(1), ChebyshevFamily(2)])
def test_cross_validate_families(family):
    cv = cross_validate(family.classify(), n_max=4, device="cpu")
    assert cv.passed, f"{family.name}: max deviation {cv.max_deviation}"


def test_boundary_limit_decays_for_laguerre():
    trend = boundary_limit(LaguerreFamily().classify(), 0, 1, "+inf", samples=8, start=8.0)
    assert len(trend.points) == 8
    assert trend.is_decaying()
    assert all(m == 0.0 for m in boundary_limit(LaguerreFamily().classify(), 2, 2, "+inf").magnitudes)


def test_boundary_limit_needs_an_unbounded_side():
    with pytest.raises(PreconditionViolation):
        boundary_limit(LegendreFamily().classify(), 0, 1, "+inf")
    with pytest.raises(PreconditionViolation):
        boundary_limit(LaguerreFamily().classify(), 0, 1, "-inf")


def test_orthogonal_pair_and_normalization():
    legendre = quad_inner_product(LegendreFamily().classify(), x, x ** 2 - Polynomial.constant(Fraction(1, 3)),
                                  device="cpu")
    assert abs(legendre.value) < 1e-10
    chebyshev = quad_inner_product(ChebyshevFamily(1).classify(), Polynomial.one(), Polynomial.one(), device="cpu")
    assert chebyshev.value == pytest.approx(1.0, abs=1e-10)
    laguerre = quad_inner_product(LaguerreFamily().classify(), x, x, device="cpu")
    assert laguerre.value == pytest.approx(2.0, abs=1e-8)


def test_boundary_limit_trends():
    hermite = boundary_limit(HermiteFamily().classify(), 1, 2, "-inf")
    assert hermite.is_decaying()
    growing = boundary_limit(classify(Polynomial.one(), 2 * x), 0, 1, "+inf")
    assert not growing.is_decaying()
    assert growing.terminal > 1.0
