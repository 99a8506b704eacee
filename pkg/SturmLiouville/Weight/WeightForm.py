from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Algebra.RationalFunction import RationalFunction, partial_fractions

# (a p)' = m b p: the multiplier m at each operator order.
ORDER_MULTIPLIER = {1: Fraction(2), 2: Fraction(1), 3: Fraction(2, 3), 4: Fraction(1, 2)}


class FinitenessTag(Enum):
    ZERO_LIMIT = "ZeroLimit"
    FINITE_POSITIVE = "FinitePositive"
    INFINITE = "Infinite"
    OSCILLATES_OR_UNDEFINED = "OscillatesOrUndefined"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"


class Direction(Enum):
    POSITIVE = "+inf"
    NEGATIVE = "-inf"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.POSITIVE else -1


@dataclass(frozen=True)
class Finiteness:
    tag: FinitenessTag
    side: Side

    @property
    def is_finite(self) -> bool:
        return self.tag in (FinitenessTag.ZERO_LIMIT, FinitenessTag.FINITE_POSITIVE)


@dataclass(frozen=True)
class WeightForm:
    """ constant * prod |x - root|^exponent * exp(exp_arg(x)).

    power_factors is kept sorted by root, roots distinct. Factors with exponent 0 are allowed; they
    mark roots of the leading coefficient where the weight happens to be regular.
    """
    constant: Fraction = Fraction(1)
    power_factors: Tuple[Tuple[Fraction, Fraction], ...] = ()
    exp_arg: RationalFunction = field(default_factory=lambda: RationalFunction(0))

    def __post_init__(self):
        assert self.constant > 0, f"constant must be positive, got {self.constant}"
        factors = tuple(sorted((to_fraction(r), to_fraction(e)) for r, e in self.power_factors))
        roots = [r for r, _ in factors]
        assert len(set(roots)) == len(roots), f"roots in power_factors must be distinct, got {roots}"
        object.__setattr__(self, "power_factors", factors)
        if not isinstance(self.exp_arg, RationalFunction):
            object.__setattr__(self, "exp_arg", RationalFunction(self.exp_arg))

    def roots(self) -> Tuple[Fraction, ...]:
        return tuple(r for r, _ in self.power_factors)

    def exponent_at(self, root: Scalar) -> Fraction:
        root = to_fraction(root)
        for r, e in self.power_factors:
            if r == root:
                return e
        return Fraction(0)

    def log_derivative(self) -> RationalFunction:
        """ (log w)' = sum exponent/(x - root) + exp_arg'."""
        total = self.exp_arg.differentiate()
        for root, exponent in self.power_factors:
            if exponent != 0:
                total = total + RationalFunction(exponent, Polynomial([-root, 1]))
        return total

    def simplified(self) -> "WeightForm":
        """ Drops exponent-0 factors."""
        factors = tuple((r, e) for r, e in self.power_factors if e != 0)
        return WeightForm(self.constant, factors, self.exp_arg)

    def times_power(self, root: Scalar, k: Scalar) -> "WeightForm":
        """ Multiplies the weight by |x - root|^k."""
        root, k = to_fraction(root), to_fraction(k)
        factors = dict(self.power_factors)
        factors[root] = factors.get(root, Fraction(0)) + k
        return WeightForm(self.constant, tuple(factors.items()), self.exp_arg)

    def times_abs_polynomial(self, p: Polynomial) -> "WeightForm":
        """ Multiplies the weight by |p(x)|. p must split over the rationals."""
        leading, roots = p.linear_factorization()
        result = WeightForm(self.constant * abs(leading), self.power_factors, self.exp_arg)
        for root, multiplicity in roots:
            result = result.times_power(root, multiplicity)
        return result

    def equivalent(self, other: "WeightForm") -> bool:
        """ True iff the two weights agree up to a positive constant factor."""
        return self.simplified().power_factors == other.simplified().power_factors \
            and (self.exp_arg - other.exp_arg).differentiate().is_zero()

    def display(self) -> str:
        """ Factored text, e.g. "|x + 1|^(1/2) * |x - 1|^(-1/2) * exp(-x)"."""
        parts = [] if self.constant == 1 else [str(self.constant)]
        for root, exponent in self.power_factors:
            if exponent == 0:
                continue
            base = f"|{Polynomial([-root, 1]).to_text()}|"
            if exponent == 1:
                parts.append(base)
            elif exponent.denominator == 1 and exponent > 0:
                parts.append(f"{base}^{exponent}")
            else:
                parts.append(f"{base}^({exponent})")
        if not self.exp_arg.is_zero():
            parts.append(f"exp({self.exp_arg.to_text()})")
        return " * ".join(parts) if parts else "1"

    def __str__(self):
        return self.display()


def derive_weight(a: Polynomial, b: Polynomial, order: int = 2) -> WeightForm:
    """ Solves the first-order determining relation (a p)' = m b p in factored closed form.

    The relation is (pa)' = pb at order 2, (ap)' = 2bp at order 1, (a3 p)' = (2/3) a2 p at order 3 and
    (a4 p)' = (1/2) a3 p at order 4, so p'/p = (m b - a')/a. Simple poles of that rational function become
    power factors, higher poles and the polynomial part are integrated into exp_arg. The integration constant
    is fixed so that constant = 1.

    Args:
    a: Polynomial: the leading coefficient of the operator. Must split over the rationals.
    b: Polynomial: the next coefficient.
    order: int: operator order, one of 1, 2, 3, 4.

    Returns:
    WeightForm: the weight, with a factor (possibly of exponent 0) for every root of a.
    """
    if order not in ORDER_MULTIPLIER:
        raise ValueError(f"Unknown order: '{order}'. Should be one of {list(ORDER_MULTIPLIER)}")
    assert not a.is_zero(), "the leading coefficient must be nonzero"
    _, roots = a.linear_factorization()
    log_derivative = RationalFunction(b.scale(ORDER_MULTIPLIER[order]) - a.differentiate(), a)
    decomposition = partial_fractions(log_derivative)

    exp_arg = RationalFunction(decomposition.poly_part.antiderivative())
    for term in decomposition.pole_terms:
        if term.order >= 2:
            exp_arg = exp_arg + RationalFunction(term.coefficient / (1 - term.order),
                                                 Polynomial([-term.root, 1]) ** (term.order - 1))
    factors = tuple((root, decomposition.simple_pole_coefficient(root)) for root, _ in roots)
    return WeightForm(Fraction(1), factors, exp_arg)


def _one_sided(w: WeightForm, x0: Fraction, side: Side) -> FinitenessTag:
    pole = w.exp_arg.pole_order(x0)
    if pole >= 1:
        c = w.exp_arg.leading_pole_coefficient(x0)
        sign = c if side is Side.RIGHT else c * (-1) ** pole
        return FinitenessTag.ZERO_LIMIT if sign < 0 else FinitenessTag.INFINITE
    exponent = w.exponent_at(x0)
    if exponent > 0:
        return FinitenessTag.ZERO_LIMIT
    elif exponent == 0:
        return FinitenessTag.FINITE_POSITIVE
    else:
        return FinitenessTag.INFINITE


def finiteness_at_point(w: WeightForm, x0: Scalar, side: Union[Side, str] = Side.BOTH) -> Finiteness:
    """ Limit behavior of the weight as x -> x0.

    Args:
    w: WeightForm: the weight.
    x0: the point.
    side: Side: LEFT, RIGHT, or BOTH. When the two one-sided limits differ, the failing side is reported.

    Returns:
    Finiteness: tag and side.
    """
    x0, side = to_fraction(x0), Side(side)
    if side is not Side.BOTH:
        return Finiteness(_one_sided(w, x0, side), side)

    left, right = _one_sided(w, x0, Side.LEFT), _one_sided(w, x0, Side.RIGHT)
    pole = w.exp_arg.pole_order(x0)
    if pole >= 2 and pole % 2 == 0 and w.exp_arg.leading_pole_coefficient(x0) > 0:
        return Finiteness(FinitenessTag.OSCILLATES_OR_UNDEFINED, Side.BOTH)
    if left == right:
        return Finiteness(left, Side.BOTH)
    if left is FinitenessTag.INFINITE:
        return Finiteness(left, Side.LEFT)
    return Finiteness(right, Side.RIGHT)


def decay_dominates_polynomials(w: WeightForm, direction: Union[Direction, str]) -> bool:
    """ True iff x^k w(x) -> 0 in the given direction for every k, i.e. the polynomial part of exp_arg has
    degree >= 1 and tends to -inf there."""
    direction = Direction(direction)
    poly = w.exp_arg.polynomial_part()
    d = poly.degree()
    if d < 1:
        return False
    sign = poly.leading_coefficient() * (direction.sign ** d)
    return sign < 0
