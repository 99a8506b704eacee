from fractions import Fraction

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class LegendreFamily(BaseFamily):
    """ (1 - x^2) y'' - 2x y' on [-1, 1], weight 1, eigenvalues -n(n+1)."""

    def __init__(self):
        super().__init__("legendre", Polynomial([1, 0, -1]), Polynomial([0, -2]))

    def expected_weight(self) -> WeightForm:
        return WeightForm()

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n * (n + 1))
