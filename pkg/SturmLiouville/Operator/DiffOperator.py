from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Errors import DegreeViolation, EigenvalueCollisionUnsolvable

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class EigenvalueFormula:
    """ lambda_n = sum_k d_k * n(n-1)...(n-k+1), the diagonal of L on the monomial basis.

    d_k is the coefficient of x^k in a_k(x).
    """
    falling_factorial_coeffs: Tuple[Fraction, ...]

    def __call__(self, n: int) -> Fraction:
        return self.evaluate(n)

    def evaluate(self, n: int) -> Fraction:
        assert n >= 0, f"n must be a non-negative integer, got {n}"
        value, falling = Fraction(0), 1
        for k, d in enumerate(self.falling_factorial_coeffs):
            value += d * falling
            falling *= (n - k)
        return value

    def expanded(self) -> Polynomial:
        """ The same formula as a polynomial in n."""
        result, falling = Polynomial(), Polynomial.one()
        for k, d in enumerate(self.falling_factorial_coeffs):
            result = result + falling.scale(d)
            falling = falling * Polynomial([-k, 1])
        return result

    def shifted(self, offset: Scalar) -> "EigenvalueFormula":
        """ lambda_n + offset for every n."""
        coeffs = list(self.falling_factorial_coeffs) or [Fraction(0)]
        coeffs[0] += to_fraction(offset)
        return EigenvalueFormula(tuple(coeffs))


@dataclass(frozen=True)
class EigenPair:
    degree: int
    eigenvalue: Fraction
    eigenpolynomial: Polynomial


class DiffOperator:
    """ L(y) = sum_k a_k(x) y^(k) with polynomial coefficients a_0..a_m.

    coeffs[k] holds a_k. Trailing zero coefficients are dropped, so coeffs[order] != 0.
    """

    def __init__(self, coeffs: Sequence[Union[Polynomial, Scalar]]):
        """ Constructor for DiffOperator.

        Args:
        coeffs: Sequence: a_0, a_1, ..., a_m. Scalars are promoted to constant polynomials.
        """
        coeffs = [c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        assert coeffs, "A differential operator needs at least one nonzero coefficient"
        self.coeffs: Tuple[Polynomial, ...] = tuple(coeffs)
        self.order: int = len(coeffs) - 1

    @staticmethod
    def from_polynomials(*coeffs: Union[Polynomial, Scalar]) -> "DiffOperator":
        """ DiffOperator.from_polynomials(a0, a1, a2, ...)."""
        return DiffOperator(coeffs)

    @staticmethod
    def second_order(a: Polynomial, b: Polynomial, c: Scalar = 0) -> "DiffOperator":
        """ L(y) = a y'' + b y' + c y."""
        return DiffOperator([Polynomial.constant(c), b, a])

    def coefficient(self, k: int) -> Polynomial:
        return self.coeffs[k] if 0 <= k <= self.order else Polynomial()

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOperator) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("DiffOperator", self.coeffs))

    def __repr__(self):
        terms = [f"({a.to_text()})*D^{k}" for k, a in enumerate(self.coeffs) if not a.is_zero()]
        return f"DiffOperator({' + '.join(reversed(terms))})"

    def maps_poly_to_poly(self) -> bool:
        """ True iff deg a_k <= k for every k, i.e. L maps each P_n into itself."""
        return all(a.degree() <= k for k, a in enumerate(self.coeffs))

    def preserves_parity(self) -> bool:
        """ True iff every a_k has the parity of (-1)^k, so L maps even/odd polynomials to even/odd ones."""
        return all(a.parity() == k % 2 or a.is_zero() for k, a in enumerate(self.coeffs))

    def transformed(self, scale: Scalar, shift: Scalar) -> "DiffOperator":
        """ The same operator written in the variable t = scale*x + shift.

        With y(x) = Y(t), y^(k)(x) = scale^k Y^(k)(t), so the new coefficients are scale^k a_k((t - shift)/scale).
        Eigenvalues are unchanged.
        """
        scale, shift = to_fraction(scale), to_fraction(shift)
        assert scale != 0, "scale must be nonzero"
        x_of_t = Polynomial([-shift / scale, 1 / scale])
        return DiffOperator([a.compose(x_of_t).scale(scale ** k) for k, a in enumerate(self.coeffs)])

    def _check_degrees(self):
        if not self.maps_poly_to_poly():
            bad = [k for k, a in enumerate(self.coeffs) if a.degree() > k]
            raise DegreeViolation(f"deg a_k > k for k in {bad}; the operator does not map P_n into itself.")

    def apply(self, p: Polynomial) -> Polynomial:
        """ Exact L(p) = sum_k a_k p^(k)."""
        result = Polynomial()
        derivative = p
        for a in self.coeffs:
            if derivative.is_zero():
                break
            result = result + a * derivative
            derivative = derivative.differentiate()
        return result

    def __call__(self, p: Polynomial) -> Polynomial:
        return self.apply(p)

    def matrix_on_Pn(self, n: int) -> Matrix:
        """ Matrix of L on P_n in the monomial basis: column j holds the coefficients of L(x^j).

        Args:
        n: int: the maximal degree. The matrix has size (n+1) x (n+1).

        Returns:
        Matrix: rows of Fractions; entry [i][j] is the x^i coefficient of L(x^j). Upper triangular.
        """
        assert n >= 0, f"n must be non-negative, got {n}"
        self._check_degrees()
        columns = [self.apply(Polynomial.monomial(j)) for j in range(n + 1)]
        return tuple(tuple(columns[j][i] for j in range(n + 1)) for i in range(n + 1))

    def eigenvalue_formula(self) -> EigenvalueFormula:
        self._check_degrees()
        return EigenvalueFormula(tuple(a[k] for k, a in enumerate(self.coeffs)))

    def monic_eigenpolynomial(self, n: int, eigenvalue: Union[Scalar, None] = None) -> EigenPair:
        """ The monic degree-n polynomial eigenfunction, by back-substitution on the triangular matrix.

        When a row m < n has a zero pivot (lambda_m == lambda_n) and a zero right-hand side, c_m is set to 0,
        the canonical member of the solution family. A nonzero right-hand side has no solution.

        Args:
        n: int: the degree.
        eigenvalue: the eigenvalue to solve for. Defaults to the diagonal entry lambda_n; other values are only
            meaningful for fault injection.

        Returns:
        EigenPair: degree, eigenvalue and monic eigenpolynomial.
        """
        matrix = self.matrix_on_Pn(n)
        lam = matrix[n][n] if eigenvalue is None else to_fraction(eigenvalue)
        c = [Fraction(0)] * (n + 1)
        c[n] = Fraction(1)
        for i in range(n - 1, -1, -1):
            rhs = sum((matrix[i][j] * c[j] for j in range(i + 1, n + 1)), Fraction(0))
            pivot = matrix[i][i] - lam
            if pivot != 0:
                c[i] = -rhs / pivot
            elif rhs == 0:
                c[i] = Fraction(0)
            else:
                raise EigenvalueCollisionUnsolvable(n, i, rhs)
        return EigenPair(n, lam, Polynomial(c))

    def eigenpairs(self, n_max: int) -> List[EigenPair]:
        return [self.monic_eigenpolynomial(n) for n in range(n_max + 1)]


def apply(L: DiffOperator, p: Polynomial) -> Polynomial:
    return L.apply(p)


def matrix_on_Pn(L: DiffOperator, n: int) -> Matrix:
    return L.matrix_on_Pn(n)


def eigenvalue_formula(L: DiffOperator) -> EigenvalueFormula:
    return L.eigenvalue_formula()


def monic_eigenpolynomial(L: DiffOperator, n: int) -> EigenPair:
    return L.monic_eigenpolynomial(n)
