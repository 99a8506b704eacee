from fractions import Fraction

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class LaguerreFamily(BaseFamily):
    """ x y'' + (1 - x) y' on [0, inf), weight e^(-x), eigenvalues -n."""

    def __init__(self):
        super().__init__("laguerre", Polynomial([0, 1]), Polynomial([1, -1]))

    def expected_weight(self) -> WeightForm:
        return WeightForm(exp_arg=Polynomial([0, -1]))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n)
