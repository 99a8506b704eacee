from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Errors import NonPolynomialResult


class RationalFunction:
    """ A quotient num/den of polynomials, kept in lowest terms with a monic denominator."""
    __slots__ = ("num", "den")

    def __init__(self, num: Union[Polynomial, Scalar], den: Union[Polynomial, Scalar] = 1):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with a zero denominator")
        if num.is_zero():
            den = Polynomial.one()
        else:
            common = num.gcd(den)
            num, den = num // common, den // common
            lead = den.leading_coefficient()
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num: Polynomial = num
        self.den: Polynomial = den

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> Polynomial:
        """ Returns the polynomial self is equal to, raising NonPolynomialResult if there is none."""
        if not self.is_polynomial():
            raise NonPolynomialResult(f"{self.to_text()} is not a polynomial.")
        return self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalFunction, Polynomial, int, Fraction)):
            other = RationalFunction._coerce(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash(("RationalFunction", self.num, self.den))

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def differentiate(self) -> "RationalFunction":
        return RationalFunction(self.num.differentiate() * self.den - self.num * self.den.differentiate(),
                                self.den * self.den)

    def evaluate(self, x0: Scalar) -> Fraction:
        x0 = to_fraction(x0)
        den = self.den.evaluate(x0)
        if den == 0:
            raise ZeroDivisionError(f"{self.to_text()} has a pole at {x0}")
        return self.num.evaluate(x0) / den

    def polynomial_part(self) -> Polynomial:
        return self.num // self.den

    def pole_order(self, x0: Scalar) -> int:
        """ Order of the pole at x0 (0 when self is finite there)."""
        return self.den.root_multiplicity(x0)

    def leading_pole_coefficient(self, x0: Scalar) -> Fraction:
        """ The c with self ~ c / (x - x0)^k as x -> x0, k = pole_order(x0) >= 1."""
        x0 = to_fraction(x0)
        k = self.pole_order(x0)
        assert k >= 1, f"{self.to_text()} has no pole at {x0}"
        rest = self.den // (Polynomial([-x0, 1]) ** k)
        return self.num.evaluate(x0) / rest.evaluate(x0)

    def to_text(self) -> str:
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def __repr__(self):
        return f"RationalFunction({self.to_text()})"


class PoleTerm(NamedTuple):
    """ coefficient / (x - root)^order."""
    root: Fraction
    order: int
    coefficient: Fraction


@dataclass(frozen=True)
class PartialFractions:
    """ poly_part + sum coefficient / (x - root)^order over pole_terms."""
    poly_part: Polynomial
    pole_terms: Tuple[PoleTerm, ...]

    def reassemble(self) -> RationalFunction:
        total = RationalFunction(self.poly_part)
        for term in self.pole_terms:
            total = total + RationalFunction(term.coefficient, Polynomial([-term.root, 1]) ** term.order)
        return total

    def simple_pole_coefficient(self, root: Scalar) -> Fraction:
        """ Coefficient of 1/(x - root), zero if there is none."""
        root = to_fraction(root)
        return sum((t.coefficient for t in self.pole_terms if t.root == root and t.order == 1), Fraction(0))


def partial_fractions(r: RationalFunction) -> PartialFractions:
    """ Exact partial-fraction decomposition over the rational roots of the denominator.

    Args:
    r: RationalFunction: the function to decompose. Its denominator must split into rational linear factors.

    Returns:
    PartialFractions: polynomial part and pole terms, roots descending, orders ascending within a root.

    Raises IrrationalOrComplexRoots if the denominator has an irreducible factor of degree >= 2.
    """
    poly_part, remainder = divmod(r.num, r.den)
    if remainder.is_zero():
        return PartialFractions(poly_part, ())

    _, roots = r.den.linear_factorization()
    terms = []
    for root, multiplicity in sorted(roots, reverse=True):
        # remainder / den = R(t) / (t^m G(t)) with t = x - root and G(0) != 0.
        # The Laurent coefficients c_j of R/G give the terms c_j / t^(m-j).
        cofactor = r.den // (Polynomial([-root, 1]) ** multiplicity)
        shifted_num = remainder.shift(root)
        shifted_cofactor = cofactor.shift(root)
        series = []
        for j in range(multiplicity):
            value = shifted_num[j] - sum((shifted_cofactor[i] * series[j - i] for i in range(1, j + 1)), Fraction(0))
            series.append(value / shifted_cofactor[0])
        for j in reversed(range(multiplicity)):
            if series[j] != 0:
                terms.append(PoleTerm(root, multiplicity - j, series[j]))
    return PartialFractions(poly_part, tuple(terms))
