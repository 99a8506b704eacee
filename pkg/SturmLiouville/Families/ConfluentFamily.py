from fractions import Fraction
from typing import Union

from SturmLiouville.Algebra.Polynomial import Polynomial, to_fraction
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class ConfluentFamily(BaseFamily):
    """ x y'' + (c - x) y' on [0, inf), weight |x|^(c-1) e^(-x), eigenvalues -n. Admissible for c >= 1."""

    def __init__(self, c: Union[int, Fraction, str] = 2):
        """ Constructor for ConfluentFamily

        Args:
        c: the parameter of the confluent hypergeometric equation (not the constant coefficient, which is 0).
        """
        self.parameter = to_fraction(c)
        super().__init__("confluent", Polynomial([0, 1]), Polynomial([self.parameter, -1]))

    def expected_weight(self) -> WeightForm:
        return WeightForm(power_factors=((0, self.parameter - 1),), exp_arg=Polynomial([0, -1]))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n)
