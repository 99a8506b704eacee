import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, Scalar, to_fraction
from SturmLiouville.Bochner.Interval import INFINITY, Interval
from SturmLiouville.Errors import DegreeViolation
from SturmLiouville.Operator.DiffOperator import DiffOperator, EigenvalueFormula
from SturmLiouville.Weight.WeightForm import WeightForm, derive_weight


class Canonical(Enum):
    TWO_REAL_ROOTS = "TwoRealRoots"
    REPEATED_ROOT = "RepeatedRoot"
    LINEAR = "Linear"
    CONSTANT = "Constant"
    NO_REAL_ROOTS = "NoRealRoots"


class CaseTag(Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    CASE_IV = "CaseIV"
    NO_REAL_ROOTS = "NoRealRoots"


class Mode(Enum):
    STRICT_WEIGHT = "StrictWeight"
    INESSENTIAL_SINGULARITY = "InessentialSingularity"
    NOT_ADMISSIBLE = "NotAdmissible"
    VACUOUS = "Vacuous"

    @property
    def is_admissible(self) -> bool:
        return self in (Mode.STRICT_WEIGHT, Mode.INESSENTIAL_SINGULARITY)


CASE_OF_CANONICAL = {
    Canonical.TWO_REAL_ROOTS: CaseTag.CASE_I,
    Canonical.REPEATED_ROOT: CaseTag.CASE_II,
    Canonical.LINEAR: CaseTag.CASE_III,
    Canonical.CONSTANT: CaseTag.CASE_IV,
    Canonical.NO_REAL_ROOTS: CaseTag.NO_REAL_ROOTS,
}

RELATIONS = {
    "<=": operator.le,
    "<": operator.lt,
    ">=": operator.ge,
    ">": operator.gt,
    "=": operator.eq,
    "!=": operator.ne,
}


@dataclass(frozen=True)
class AffineMap:
    """ The substitution t = scale*x + shift together with the factor K pulled out of the operator,
    so that L = K * (canonical operator in t). """
    scale: Fraction = Fraction(1)
    shift: Fraction = Fraction(0)
    factor: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("scale", "shift", "factor"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        assert self.scale != 0, "scale must be nonzero"
        assert self.factor != 0, "factor must be nonzero"

    def to_canonical(self, x: Scalar) -> Fraction:
        return self.scale * to_fraction(x) + self.shift

    def to_original(self, t: Scalar) -> Fraction:
        return (to_fraction(t) - self.shift) / self.scale

    def then(self, other: "AffineMap") -> "AffineMap":
        """ Applies self first, then other."""
        return AffineMap(other.scale * self.scale, other.scale * self.shift + other.shift, self.factor * other.factor)

    def is_identity(self) -> bool:
        return self.scale == 1 and self.shift == 0 and self.factor == 1


@dataclass(frozen=True)
class ParamConstraint:
    """ lhs <relation> rhs, with satisfied computed on construction."""
    description: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    satisfied: bool = field(init=False)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"Unknown relation: '{self.relation}'. Should be one of {list(RELATIONS)}")
        object.__setattr__(self, "lhs", to_fraction(self.lhs))
        object.__setattr__(self, "rhs", to_fraction(self.rhs))
        object.__setattr__(self, "satisfied", RELATIONS[self.relation](self.lhs, self.rhs))


@dataclass(frozen=True)
class ClassificationRecord:
    """ The outcome of classifying a y'' + b y' + c y.

    alpha and beta are the coefficients of the canonical b = alpha*t + beta after normalization. interval and
    weight are expressed in the original variable x. eigenvalues is the formula of the original operator, so
    it includes the shift by c.
    """
    case_tag: CaseTag
    mode: Mode
    interval: Union[Interval, None]
    weight: Union[WeightForm, None]
    alpha: Fraction
    beta: Fraction
    constraints: Tuple[ParamConstraint, ...]
    eigenvalues: EigenvalueFormula
    affine_map: Union[AffineMap, None]
    a: Polynomial
    b: Polynomial
    c: Fraction = Fraction(0)
    reason: str = ""

    @property
    def is_admissible(self) -> bool:
        return self.mode.is_admissible

    def operator(self) -> DiffOperator:
        return DiffOperator.second_order(self.a, self.b, self.c)


def normalize(a: Polynomial) -> Tuple[Canonical, Union[AffineMap, None]]:
    """ Finds the affine substitution t = scale*x + shift and factor K that bring a(x) d^2/dx^2 to
    K * a~(t) d^2/dt^2 with a~ one of 1 - t^2, t^2, t, 1.

    Args:
    a: Polynomial: the leading coefficient, nonzero, of degree at most 2.

    Returns:
    Canonical: which canonical form applies.
    AffineMap: the substitution, or None for NoRealRoots.

    Raises DegreeViolation if deg a > 2 and IrrationalOrComplexRoots if a has two irrational real roots.
    """
    assert not a.is_zero(), "the leading coefficient must be nonzero"
    if a.degree() > 2:
        raise DegreeViolation(f"deg a = {a.degree()} > 2")

    if a.degree() == 2:
        A = a[2]
        discriminant = a[1] ** 2 - 4 * a[2] * a[0]
        if discriminant < 0:
            return Canonical.NO_REAL_ROOTS, None
        if discriminant == 0:
            root = -a[1] / (2 * A)
            return Canonical.REPEATED_ROOT, AffineMap(1, -root, A)
        _, roots = a.linear_factorization()
        r1, r2 = roots[0][0], roots[1][0]
        return Canonical.TWO_REAL_ROOTS, AffineMap(2 / (r2 - r1), -(r1 + r2) / (r2 - r1), -A)

    if a.degree() == 1:
        A, root = a[1], -a[0] / a[1]
        return Canonical.LINEAR, AffineMap(1 / A, -root / A, 1)

    return Canonical.CONSTANT, AffineMap(1, 0, a[0])


def transform_operator(L: DiffOperator, affine: AffineMap) -> DiffOperator:
    """ The canonical operator L~ in t with L = K * L~."""
    moved = L.transformed(affine.scale, affine.shift)
    return DiffOperator([coeff.scale(1 / affine.factor) for coeff in moved.coeffs])


def jacobi_admissible(alpha: Scalar, beta: Scalar) -> Tuple[bool, List[ParamConstraint]]:
    """ The Jacobi relaxation of Case I: the weight is integrable against all polynomials iff alpha < beta < -alpha."""
    alpha, beta = to_fraction(alpha), to_fraction(beta)
    constraints = [ParamConstraint("alpha < beta", alpha, "<", beta),
                   ParamConstraint("beta < -alpha", beta, "<", -alpha)]
    return all(c.satisfied for c in constraints), constraints


def _case_one(alpha: Fraction, beta: Fraction):
    strict = [ParamConstraint("beta - alpha - 2 >= 0", beta - alpha - 2, ">=", 0),
              ParamConstraint("beta + alpha + 2 <= 0", beta + alpha + 2, "<=", 0)]
    jacobi, jacobi_constraints = jacobi_admissible(alpha, beta)
    constraints = tuple(strict + jacobi_constraints)
    if all(c.satisfied for c in strict):
        return Mode.STRICT_WEIGHT, Interval.closed(-1, 1), constraints, \
            "the weight is finite at both endpoints"
    if jacobi:
        return Mode.INESSENTIAL_SINGULARITY, Interval.open(-1, 1), constraints, \
            "the weight is infinite at an endpoint but integrable against every polynomial"
    return Mode.NOT_ADMISSIBLE, Interval.open(-1, 1), constraints, \
        "an endpoint exponent is <= -1, so polynomials do not have a finite norm"


def _case_two(alpha: Fraction, beta: Fraction):
    constraints = (ParamConstraint("beta != 0", beta, "!=", 0),)
    if beta == 0:
        return Mode.NOT_ADMISSIBLE, None, constraints, \
            f"beta = 0: the weight is |x|^({alpha - 2}) and its integral over either half-line is infinite"
    interval = Interval(0, INFINITY) if beta > 0 else Interval(-INFINITY, 0)
    return Mode.VACUOUS, interval, constraints, \
        "polynomials do not have a finite norm: the integral of x^k exp(-beta/x) over the half-line " \
        "is finite only if k < -1"


def _case_three(alpha: Fraction, beta: Fraction):
    constraints = (ParamConstraint("alpha < 0", alpha, "<", 0),
                   ParamConstraint("beta >= 1", beta, ">=", 1))
    if all(c.satisfied for c in constraints):
        return Mode.STRICT_WEIGHT, Interval(0, INFINITY), constraints, \
            "a(x) p(x) vanishes at 0 and the exponential decay dominates every polynomial"
    return Mode.NOT_ADMISSIBLE, Interval(0, INFINITY), constraints, \
        "the weight does not vanish at the finite endpoint or does not decay at infinity"


def _case_four(alpha: Fraction, beta: Fraction):
    constraints = (ParamConstraint("alpha < 0", alpha, "<", 0),)
    if constraints[0].satisfied:
        return Mode.STRICT_WEIGHT, Interval.real_line(), constraints, \
            "the Gaussian decay dominates every polynomial in both directions"
    return Mode.NOT_ADMISSIBLE, Interval.real_line(), constraints, \
        "the weight does not decay at infinity"


def classify(a: Polynomial, b: Polynomial, c: Scalar = 0) -> ClassificationRecord:
    """ Classifies L = a y'' + b y' + c y into Cases I-IV and decides whether it has an orthogonal polynomial
    eigenfunction of every degree.

    Args:
    a: Polynomial: leading coefficient, nonzero, degree <= 2.
    b: Polynomial: degree <= 1.
    c: the constant coefficient. It shifts every eigenvalue and never affects admissibility.

    Returns:
    ClassificationRecord: case, mode, interval, weight and eigenvalue formula.

    Raises DegreeViolation when the degree bounds fail.
    """
    c = to_fraction(c)
    if b.degree() > 1:
        raise DegreeViolation(f"deg b = {b.degree()} > 1")
    L = DiffOperator.second_order(a, b, c)
    canonical, affine = normalize(a)
    eigenvalues = L.eigenvalue_formula()

    if canonical is Canonical.NO_REAL_ROOTS:
        return ClassificationRecord(CaseTag.NO_REAL_ROOTS, Mode.NOT_ADMISSIBLE, None, None, b[1], b[0], (),
                                    eigenvalues, None, a, b, c,
                                    "a(x) has no real roots, so a(x) p(x) cannot vanish at finite endpoints")

    canonical_b = transform_operator(L, affine).coefficient(1)
    alpha, beta = canonical_b[1], canonical_b[0]
    if canonical is Canonical.LINEAR and alpha > 0:
        # work on the mirrored half-line
        affine = affine.then(AffineMap(-1, 0, -1))
        alpha = -alpha

    if canonical is Canonical.TWO_REAL_ROOTS:
        mode, interval, constraints, reason = _case_one(alpha, beta)
    elif canonical is Canonical.REPEATED_ROOT:
        mode, interval, constraints, reason = _case_two(alpha, beta)
    elif canonical is Canonical.LINEAR:
        mode, interval, constraints, reason = _case_three(alpha, beta)
    else:
        mode, interval, constraints, reason = _case_four(alpha, beta)

    if interval is not None:
        interval = interval.mapped(1 / affine.scale, -affine.shift / affine.scale)
    return ClassificationRecord(CASE_OF_CANONICAL[canonical], mode, interval, derive_weight(a, b, 2), alpha, beta,
                                constraints, eigenvalues, affine, a, b, c, reason)
