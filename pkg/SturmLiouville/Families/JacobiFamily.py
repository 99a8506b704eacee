from fractions import Fraction
from typing import Union

from SturmLiouville.Algebra.Polynomial import Polynomial, to_fraction
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class JacobiFamily(BaseFamily):
    """ (1 - x^2) y'' + (alpha x + beta) y' on [-1, 1].

    Weight (1 + x)^((beta - alpha - 2)/2) (1 - x)^(-(beta + alpha + 2)/2), eigenvalues -n(n-1) + alpha n.
    Legendre is alpha = -2, beta = 0 and Chebyshev is alpha = -1 or -3, beta = 0.
    """

    def __init__(self, alpha: Union[int, Fraction, str] = -2, beta: Union[int, Fraction, str] = 0):
        self.alpha, self.beta = to_fraction(alpha), to_fraction(beta)
        super().__init__("jacobi", Polynomial([1, 0, -1]), Polynomial([self.beta, self.alpha]))

    def expected_weight(self) -> WeightForm:
        return WeightForm(power_factors=((-1, (self.beta - self.alpha - 2) / 2),
                                         (1, -(self.beta + self.alpha + 2) / 2)))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return -n * (n - 1) + self.alpha * n
