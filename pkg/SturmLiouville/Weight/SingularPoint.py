from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Errors import PreconditionViolation
from SturmLiouville.Weight.WeightForm import Finiteness, FinitenessTag, Side


@dataclass(frozen=True)
class SingularPointData:
    """ Local data of a first-order operator a y' + b y at a zero x0 of a.

    a(x) = (x - x0)^alpha_exp g(x), b(x) = (x - x0)^beta_exp f(x) with g(x0), f(x0) nonzero,
    and h_sign is the sign of h(x0) = f(x0)/g(x0).
    """
    alpha_exp: int
    beta_exp: int
    h_sign: int

    def __post_init__(self):
        assert self.alpha_exp >= 1, f"alpha_exp must be a positive integer, got {self.alpha_exp}"
        assert self.beta_exp >= 0, f"beta_exp must be a non-negative integer, got {self.beta_exp}"
        assert self.h_sign in (-1, 1), f"h_sign must be -1 or 1, got {self.h_sign}"

    @property
    def net_exponent(self) -> int:
        """ beta_exp - alpha_exp, the power of (x - x0) in b/a."""
        return self.beta_exp - self.alpha_exp

    @staticmethod
    def from_coefficients(a: Polynomial, b: Polynomial, x0: Scalar = 0) -> "SingularPointData":
        """ Extracts the exponents and the sign of h(x0) exactly from the polynomials.

        Raises PreconditionViolation if a does not vanish at x0 or b is the zero polynomial.
        """
        x0 = to_fraction(x0)
        if a.is_zero() or a.evaluate(x0) != 0:
            raise PreconditionViolation(f"a = {a.to_text()} does not vanish at {x0}")
        if b.is_zero():
            raise PreconditionViolation("b must be nonzero")
        linear = Polynomial([-x0, 1])
        alpha_exp, beta_exp = a.root_multiplicity(x0), b.root_multiplicity(x0)
        g0 = (a // linear ** alpha_exp).evaluate(x0)
        f0 = (b // linear ** beta_exp).evaluate(x0)
        return SingularPointData(alpha_exp, beta_exp, 1 if f0 / g0 > 0 else -1)


def _limit_tag(sign: Union[int, Fraction]) -> FinitenessTag:
    return FinitenessTag.ZERO_LIMIT if sign < 0 else FinitenessTag.INFINITE


def order1_singular_classify(s: SingularPointData, side: Union[Side, str] = Side.BOTH) -> Finiteness:
    """ Limit of the order-1 weight exp(lambda x^beta)/|x^alpha| at the singular point.

    With beta = beta_exp - alpha_exp < 0 and sign(lambda) = h_sign:
    the right limit is zero iff lambda < 0, the left limit is zero iff (-1)^beta lambda < 0, and the two-sided
    limit is zero iff lambda < 0 and beta is even. Otherwise the failing side is reported as Infinite.

    Raises PreconditionViolation if beta_exp - alpha_exp >= 0.
    """
    beta = s.net_exponent
    if beta >= 0:
        raise PreconditionViolation(f"betaExp - alphaExp = {beta} >= 0: the weight is regular at the point")
    side = Side(side)
    right = _limit_tag(s.h_sign)
    left = _limit_tag(s.h_sign * (-1 if beta % 2 else 1))
    if side is Side.RIGHT:
        return Finiteness(right, Side.RIGHT)
    if side is Side.LEFT:
        return Finiteness(left, Side.LEFT)
    if left == right:
        return Finiteness(left, Side.BOTH)
    if left is FinitenessTag.INFINITE:
        return Finiteness(left, Side.LEFT)
    return Finiteness(right, Side.RIGHT)
