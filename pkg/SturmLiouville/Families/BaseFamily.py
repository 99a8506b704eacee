from abc import abstractmethod
from fractions import Fraction

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Bochner.Classification import ClassificationRecord, classify
from SturmLiouville.Operator.DiffOperator import DiffOperator
from SturmLiouville.Weight.WeightForm import WeightForm, derive_weight


class BaseFamily:
    """ Base class for the classical families a y'' + b y' + c y. Subclasses provide the coefficients together with
    the weight and the eigenvalues known in closed form, and check_family verifies them against the derivations."""

    def __init__(self, name: str, a: Polynomial, b: Polynomial, c: Fraction = Fraction(0)):
        """ Constructor for BaseFamily

        Args:
        name (str): Name of the family, used in reports.
        a (Polynomial): Leading coefficient, degree at most 2.
        b (Polynomial): First-order coefficient, degree at most 1.
        c (Fraction): Constant coefficient. Default is 0.
        """
        assert a.degree() <= 2, f"a must have degree at most 2, got {a.to_text()}"
        assert b.degree() <= 1, f"b must have degree at most 1, got {b.to_text()}"
        self.name = name
        self.a = a
        self.b = b
        self.c = Fraction(c)

    def operator(self) -> DiffOperator:
        return DiffOperator.second_order(self.a, self.b, self.c)

    def classify(self) -> ClassificationRecord:
        return classify(self.a, self.b, self.c)

    @abstractmethod
    def expected_weight(self) -> WeightForm:
        """ The weight in closed form, up to a positive constant."""
        pass

    @abstractmethod
    def expected_eigenvalue(self, n: int) -> Fraction:
        """ The eigenvalue of the degree-n eigenpolynomial in closed form."""
        pass

    def check_family(self, n_max: int = 20):
        """ Verify that the derived weight and eigenvalue formula match the closed forms. Throws error if violated.
        I would advise against overriding this method, as it is what ties a family to the derivations."""
        derived = derive_weight(self.a, self.b, 2)
        expected = self.expected_weight()
        assert derived.equivalent(expected), f"{self.name}: derived weight {derived.display()} != {expected.display()}"
        formula = self.operator().eigenvalue_formula()
        for n in range(n_max + 1):
            assert formula(n) == self.expected_eigenvalue(n), \
                f"{self.name}: eigenvalue formula gives {formula(n)} at n={n}, expected {self.expected_eigenvalue(n)}"

    def __repr__(self):
        return f"{type(self).__name__}(a={self.a.to_text()}, b={self.b.to_text()}, c={self.c})"
