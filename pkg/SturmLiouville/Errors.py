class SturmLiouvilleError(Exception):
    """ Base class for all domain errors raised by this package."""
    pass


class IrrationalOrComplexRoots(SturmLiouvilleError, ValueError):
    """ A polynomial does not split into linear factors with rational roots, so the
    weight cannot be written in the factored closed form."""
    pass


class DegreeViolation(SturmLiouvilleError, ValueError):
    """ A coefficient has a larger degree than the operation allows, e.g. deg a_k > k."""
    pass


class EigenvalueCollisionUnsolvable(SturmLiouvilleError, ArithmeticError):
    """ lambda_m == lambda_n for some m < n and back-substitution is inconsistent at row m,
    so no polynomial eigenfunction of degree n exists."""

    def __init__(self, degree: int, row: int, residual):
        self.degree = degree
        self.row = row
        self.residual = residual
        super().__init__(f"No eigenpolynomial of degree {degree}: eigenvalue collides with degree {row} "
                         f"and the accumulated right-hand side at that row is {residual}, not 0.")


class PreconditionViolation(SturmLiouvilleError, ValueError):
    """ An operation was called outside its documented domain."""
    pass


class PivotVanishes(SturmLiouvilleError, ZeroDivisionError):
    """ The coefficient of the highest moment in a moment relation is zero."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"The highest-moment coefficient of the moment relation vanishes at k={k}.")


class TableTooShort(SturmLiouvilleError, IndexError):
    """ A moment table does not hold enough moments for the requested inner product."""
    pass


class NonPolynomialResult(SturmLiouvilleError, ValueError):
    """ A determining equation produced a rational function where a polynomial is required."""
    pass


class BudgetExceeded(SturmLiouvilleError, RuntimeError):
    """ Adaptive quadrature ran out of integrand evaluations before meeting its tolerance."""

    def __init__(self, evaluations: int, error_estimate: float, tol: float):
        self.evaluations = evaluations
        self.error_estimate = error_estimate
        self.tol = tol
        super().__init__(f"Quadrature budget of {evaluations} evaluations exhausted with error estimate "
                         f"{error_estimate:.3e} > tol {tol:.3e}.")


class ExpressionSyntaxError(SturmLiouvilleError, ValueError):
    """ A polynomial expression could not be parsed. `position` is the 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
