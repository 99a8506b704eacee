from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Algebra.RationalFunction import RationalFunction
from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.Operator.DiffOperator import DiffOperator, EigenvalueFormula
from SturmLiouville.Weight.WeightForm import WeightForm, derive_weight

Coefficient = Union[Polynomial, RationalFunction]

# commonly quoted variant of the fourth-order eigenvalue, n(n-1)(n-2)(n+5) - 24; differs from the operator unless n = 1
PRINTED_EIGENVALUE = EigenvalueFormula((Fraction(-24), Fraction(0), Fraction(0), Fraction(8), Fraction(1)))


def _rational(f: Union[Coefficient, Scalar]) -> RationalFunction:
    return f if isinstance(f, RationalFunction) else RationalFunction(f)


class WeightedDerivative:
    """ D(f) = (f p)' / p = f' + (p'/p) f for a fixed weight p."""

    def __init__(self, weight: WeightForm):
        self.weight = weight
        self.log_derivative = weight.log_derivative()

    def __call__(self, f: Union[Coefficient, Scalar], times: int = 1) -> RationalFunction:
        f = _rational(f)
        for _ in range(times):
            f = f.differentiate() + self.log_derivative * f
        return f

    def is_plain(self) -> bool:
        """ True iff p is constant, so D is the ordinary derivative."""
        return self.log_derivative.is_zero()


@dataclass(frozen=True)
class Linkage:
    """ The second determining equation resolved as D(upper) - factor * lower = rhs, with D(f) = (fp)'/p.

    Order 4: D(a2) - a1 = (1/2) D^2(a3). Order 3: D(a1) - 2 a0 = (1/3) D^2(a2).
    """
    upper_name: str
    lower_name: str
    factor: Fraction
    rhs: RationalFunction
    weight: WeightForm

    def residual(self, upper: Coefficient, lower: Coefficient) -> RationalFunction:
        D = WeightedDerivative(self.weight)
        return D(upper) - _rational(lower) * self.factor - self.rhs

    def holds(self, upper: Coefficient, lower: Coefficient) -> bool:
        return self.residual(upper, lower).is_zero()

    def solve_lower(self, upper: Coefficient) -> Polynomial:
        """ The lower coefficient forced by the linkage. Raises NonPolynomialResult when it is not a polynomial."""
        D = WeightedDerivative(self.weight)
        return ((D(upper) - self.rhs) * RationalFunction(1 / self.factor)).as_polynomial()

    def describe(self) -> str:
        plain = WeightedDerivative(self.weight).is_plain()
        derivative = f"{self.upper_name}'" if plain else f"D({self.upper_name})"
        lower = self.lower_name if self.factor == 1 else f"{self.factor}*{self.lower_name}"
        return f"{derivative} - {lower} = {self.rhs.to_text()}"


@dataclass(frozen=True)
class BoundaryExpression:
    """ B(u, y)(x) = p(x) * sum coeff_ij(x) u^(i)(x) y^(j)(x) over the (i, j, coeff) terms."""
    terms: Tuple[Tuple[int, int, RationalFunction], ...]
    weight: WeightForm

    def reduced(self, u: Polynomial, y: Polynomial) -> RationalFunction:
        """ B(u, y) / p as a rational function."""
        total = RationalFunction(0)
        for i, j, coeff in self.terms:
            total = total + coeff * (u.differentiate(i) * y.differentiate(j))
        return total

    def swap_sign(self) -> Union[int, None]:
        """ -1 if B(u, y) = -B(y, u) term by term, +1 if B(u, y) = B(y, u), None otherwise."""
        table = {(i, j): coeff for i, j, coeff in self.terms}
        for sign in (-1, 1):
            if all(table.get((j, i), RationalFunction(0)) == coeff * sign for (i, j), coeff in table.items()):
                return sign
        return None

    def describe(self) -> List[str]:
        return [f"({coeff.to_text()}) * u^({i}) * y^({j})" for i, j, coeff in self.terms]


@dataclass(frozen=True)
class BoundaryWitness:
    """ A monomial pair u = x^i, y = x^j with B(u, y)(hi) - B(u, y)(lo) != 0.

    difference is None when the endpoint limit of B is not an exact rational (infinite, or a transcendental
    multiple of the weight).
    """
    i: int
    j: int
    difference: Union[Fraction, None]


class HighOrderSystem:
    """ An operator sum_k a_k y^(k) of order 1-4 together with its weight, the determining-equation
    residuals, and the boundary bilinear concomitant.

    Even orders are self-adjoint and odd orders anti-self-adjoint with respect to the weight.
    """

    def __init__(self, coeffs: Sequence[Union[Polynomial, Scalar]], weight: Union[WeightForm, None] = None):
        """ Constructor for HighOrderSystem.

        Args:
        coeffs: Sequence: a_0, ..., a_order with 1 <= order <= 4 and a_order nonzero.
        weight: WeightForm: the weight p. Derived from the first determining equation when None.
        """
        coeffs = tuple(c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs)
        self.order = len(coeffs) - 1
        assert 1 <= self.order <= 4, f"order must be between 1 and 4, got {self.order}"
        assert not coeffs[-1].is_zero(), "the leading coefficient must be nonzero"
        self.coeffs: Tuple[Polynomial, ...] = coeffs
        if weight is None:
            weight = derive_weight(coeffs[-1], coeffs[-2], self.order)
        self.weight = weight
        self.D = WeightedDerivative(weight)

    def a(self, k: int) -> Polynomial:
        return self.coeffs[k]

    def residuals(self) -> List[Tuple[str, RationalFunction]]:
        """ The determining equations divided by p. All are the zero rational function for a consistent system."""
        D, a = self.D, self.coeffs
        if self.order == 4:
            return [("(a4 p)' - 1/2 a3 p", D(a[4]) - _rational(a[3]) * Fraction(1, 2)),
                    ("(a3 p)'' - 2 (a2 p)' + 2 a1 p", D(a[3], 2) - D(a[2]) * 2 + _rational(a[1]) * 2)]
        elif self.order == 3:
            return [("(a3 p)' - 2/3 a2 p", D(a[3]) - _rational(a[2]) * Fraction(2, 3)),
                    ("(a2 p)'' - 3 (a1 p)' + 6 a0 p", D(a[2], 2) - D(a[1]) * 3 + _rational(a[0]) * 6)]
        elif self.order == 2:
            return [("(a2 p)' - a1 p", D(a[2]) - _rational(a[1]))]
        else:
            return [("(a1 p)' - 2 a0 p", D(a[1]) - _rational(a[0]) * 2)]

    def is_consistent(self) -> bool:
        return all(residual.is_zero() for _, residual in self.residuals())

    def operator(self) -> DiffOperator:
        return DiffOperator(self.coeffs)

    def eigenvalue_formula(self) -> Union[EigenvalueFormula, None]:
        """ The eigenvalue formula, or None when the operator does not map P_n into itself."""
        L = self.operator()
        return L.eigenvalue_formula() if L.maps_poly_to_poly() else None

    def boundary(self) -> BoundaryExpression:
        return boundary_expression(self)

    def __repr__(self):
        return f"HighOrderSystem(order={self.order}, weight={self.weight.display()}, " \
               f"coeffs={[c.to_text() for c in self.coeffs]})"


def derive_order4(a4: Polynomial, p: WeightForm) -> Tuple[Polynomial, Linkage]:
    """ a3 = 2 (a4 p)'/p from (a4 p)' = 1/2 a3 p, and the linkage D(a2) - a1 = 1/2 D^2(a3) from
    (a3 p)'' - 2 (a2 p)' + 2 a1 p = 0.

    Raises NonPolynomialResult if a3 is not a polynomial.
    """
    D = WeightedDerivative(p)
    a3 = (D(a4) * 2).as_polynomial()
    return a3, Linkage("a2", "a1", Fraction(1), D(a3, 2) * Fraction(1, 2), p)


def derive_order3(a3: Polynomial, p: WeightForm) -> Tuple[Polynomial, Linkage]:
    """ a2 = 3/2 (a3 p)'/p from (a3 p)' = 2/3 a2 p, and the linkage D(a1) - 2 a0 = 1/3 D^2(a2) from
    (a2 p)'' - 3 (a1 p)' + 6 a0 p = 0.

    Raises NonPolynomialResult if a2 is not a polynomial.
    """
    D = WeightedDerivative(p)
    a2 = (D(a3) * Fraction(3, 2)).as_polynomial()
    return a2, Linkage("a1", "a0", Fraction(2), D(a2, 2) * Fraction(1, 3), p)


def complete_order4(a4: Polynomial, a2: Polynomial, a0: Polynomial = Polynomial(), p: WeightForm = None) \
        -> HighOrderSystem:
    """ The order-4 system with a3 derived from a4 and a1 solved from the linkage."""
    p = WeightForm() if p is None else p
    a3, linkage = derive_order4(a4, p)
    return HighOrderSystem([a0, linkage.solve_lower(a2), a2, a3, a4], p)


def complete_order3(a3: Polynomial, a1: Polynomial, p: WeightForm = None) -> HighOrderSystem:
    """ The order-3 system with a2 derived from a3 and a0 solved from the linkage."""
    p = WeightForm() if p is None else p
    a2, linkage = derive_order3(a3, p)
    return HighOrderSystem([linkage.solve_lower(a1), a1, a2, a3], p)


def boundary_expression(sys: HighOrderSystem) -> BoundaryExpression:
    """ The bilinear concomitant of sys, with coefficients divided by p.

    order 4: a4 [u y''' - u' y'' + u'' y' - u''' y] + a3/2 [u y'' - u'' y] - 1/2 (D(a3) - 2 a2) [u y' - u' y]
    order 3: a3 [u y'' - u' y' + u'' y] + a2/3 [u y' + u' y] - 1/3 (D(a2) - 3 a1) u y
    order 2: a2 [u y' - u' y]
    order 1: a1 u y
    """
    D, a = sys.D, [_rational(c) for c in sys.coeffs]
    if sys.order == 4:
        g = (D(a[3]) - a[2] * 2) * Fraction(-1, 2)
        half = a[3] * Fraction(1, 2)
        terms = [(0, 3, a[4]), (1, 2, -a[4]), (2, 1, a[4]), (3, 0, -a[4]),
                 (0, 2, half), (2, 0, -half),
                 (0, 1, g), (1, 0, -g)]
    elif sys.order == 3:
        third = a[2] * Fraction(1, 3)
        terms = [(0, 2, a[3]), (1, 1, -a[3]), (2, 0, a[3]),
                 (0, 1, third), (1, 0, third),
                 (0, 0, (D(a[2]) - a[1] * 3) * Fraction(-1, 3))]
    elif sys.order == 2:
        terms = [(0, 1, a[2]), (1, 0, -a[2])]
    else:
        terms = [(0, 0, a[1])]
    return BoundaryExpression(tuple((i, j, c) for i, j, c in terms if not c.is_zero()), sys.weight)


def _vanishing_order(f: RationalFunction, x0: Fraction) -> int:
    return f.num.root_multiplicity(x0) - f.den.root_multiplicity(x0)


def _endpoint_value(bexpr: BoundaryExpression, reduced: RationalFunction, x0: Fraction, inward: int) \
        -> Union[Fraction, None]:
    """ lim B(x) as x -> x0 from inside the interval, or None when it is not an exact rational.

    A constant weight is taken as its `constant`; a constant exp_arg only rescales both endpoints alike.
    """
    if reduced.is_zero():
        return Fraction(0)
    w = bexpr.weight
    if not any(e != 0 for _, e in w.power_factors) and w.exp_arg.differentiate().is_zero():
        return w.constant * reduced.evaluate(x0) if reduced.pole_order(x0) == 0 else None
    pole = w.exp_arg.pole_order(x0)
    if pole >= 1:
        sign = w.exp_arg.leading_pole_coefficient(x0) * (1 if inward > 0 else (-1) ** pole)
        return Fraction(0) if sign < 0 else None
    if w.exponent_at(x0) + _vanishing_order(reduced, x0) > 0:
        return Fraction(0)
    return None


def boundary_difference_vanishes(bexpr: BoundaryExpression, interval: Interval, degreeBound: int) \
        -> Tuple[bool, Union[BoundaryWitness, None]]:
    """ Checks B(u, y)(hi) - B(u, y)(lo) = 0 exactly for all u = x^i, y = x^j with i, j <= degreeBound.

    Args:
    bexpr: BoundaryExpression: the concomitant.
    interval: Interval: an interval with finite rational endpoints.
    degreeBound: int: the largest monomial degree tried.

    Returns:
    bool: True iff every difference vanishes.
    BoundaryWitness: the first failing pair (i outer, j inner), or None.
    """
    assert interval.is_bounded, "infinite endpoints are checked numerically, see NumCheck.boundary_limit"
    assert degreeBound >= 0, f"degreeBound must be non-negative, got {degreeBound}"
    for i in range(degreeBound + 1):
        for j in range(degreeBound + 1):
            reduced = bexpr.reduced(Polynomial.monomial(i), Polynomial.monomial(j))
            hi = _endpoint_value(bexpr, reduced, interval.hi, -1)
            lo = _endpoint_value(bexpr, reduced, interval.lo, +1)
            if hi is None or lo is None:
                return False, BoundaryWitness(i, j, None)
            if hi - lo != 0:
                return False, BoundaryWitness(i, j, hi - lo)
    return True, None


def example_order4() -> Tuple[HighOrderSystem, EigenvalueFormula]:
    """ (1-x^2)^2 y'''' - 8x(1-x^2) y''' + 8 y'' - 24x y' with p = 1, and its eigenvalue formula
    n(n-1)(n-2)(n+5) - 24n."""
    system = order4_family(Polynomial.constant(8))
    return system, system.operator().eigenvalue_formula()


def order4_family(a2: Polynomial, a0: Union[Polynomial, Scalar] = 0) -> HighOrderSystem:
    """ The p = 1 family a4 = (1-x^2)^2, a3 = -8x(1-x^2), free a2, and a1 = a2' - 24x from the linkage."""
    a4 = Polynomial([1, 0, -1]) ** 2
    a0 = a0 if isinstance(a0, Polynomial) else Polynomial.constant(to_fraction(a0))
    return complete_order4(a4, a2, a0, WeightForm())
