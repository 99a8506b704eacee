from fractions import Fraction

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Weight.WeightForm import WeightForm


class ChebyshevFamily(BaseFamily):
    """ (1 - x^2) y'' - x y' (first kind) or (1 - x^2) y'' - 3x y' (second kind) on [-1, 1].

    First kind: weight (1 - x^2)^(-1/2), eigenvalues -n^2.
    Second kind: weight (1 - x^2)^(1/2), eigenvalues -n(n+2).
    """

    def __init__(self, kind: int = 1):
        if kind not in (1, 2):
            raise ValueError(f"Unknown kind: '{kind}'. Should be one of 1, 2")
        self.kind = kind
        super().__init__(f"chebyshev{kind}", Polynomial([1, 0, -1]), Polynomial([0, -1 if kind == 1 else -3]))

    def expected_weight(self) -> WeightForm:
        exponent = Fraction(-1, 2) if self.kind == 1 else Fraction(1, 2)
        return WeightForm(power_factors=((-1, exponent), (1, exponent)))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n * n) if self.kind == 1 else Fraction(-n * (n + 2))
