from fractions import Fraction

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class HermiteFamily(BaseFamily):
    """ y'' - 2x y' on the real line, weight e^(-x^2), eigenvalues -2n."""

    def __init__(self):
        super().__init__("hermite", Polynomial([1]), Polynomial([0, -2]))

    def expected_weight(self) -> WeightForm:
        return WeightForm(exp_arg=Polynomial([0, 0, -1]))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-2 * n)
