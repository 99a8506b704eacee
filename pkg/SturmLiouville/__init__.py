from SturmLiouville.Errors import SturmLiouvilleError, IrrationalOrComplexRoots, DegreeViolation, \
    EigenvalueCollisionUnsolvable, PreconditionViolation, PivotVanishes, TableTooShort, NonPolynomialResult, \
    BudgetExceeded, ExpressionSyntaxError

from SturmLiouville.Algebra.Polynomial import Polynomial, poly_arith, differentiate, evaluate
from SturmLiouville.Algebra.RationalFunction import RationalFunction, PartialFractions, PoleTerm, partial_fractions

from SturmLiouville.Operator.DiffOperator import DiffOperator, EigenvalueFormula, EigenPair, apply, matrix_on_Pn, \
    eigenvalue_formula, monic_eigenpolynomial

from SturmLiouville.Weight.WeightForm import WeightForm, Finiteness, FinitenessTag, Side, Direction, derive_weight, \
    finiteness_at_point, decay_dominates_polynomials
from SturmLiouville.Weight.SingularPoint import SingularPointData, order1_singular_classify

from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.Bochner.Classification import AffineMap, CaseTag, Mode, ParamConstraint, ClassificationRecord, \
    normalize, classify, jacobi_admissible, transform_operator

from SturmLiouville.Verify.Moments import MomentRecurrence, MomentTable, GramMatrix, moment_recurrence, moments_upto, \
    inner_product, gram_matrix, norm_finiteness

from SturmLiouville.HighOrder.HighOrderSystem import HighOrderSystem, BoundaryExpression, BoundaryWitness, \
    derive_order3, derive_order4, boundary_expression, boundary_difference_vanishes, example_order4, order4_family

from SturmLiouville.NumCheck.Quadrature import QuadResult, BoundaryTrend, CrossValidation, quad_inner_product, \
    boundary_limit, cross_validate

from SturmLiouville.Callbacks.BaseCallback import BaseCallback
from SturmLiouville.Callbacks.ListCallback import ListCallback
from SturmLiouville.Callbacks.TensorboardCallback import TensorboardCallback

from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Families.LegendreFamily import LegendreFamily
from SturmLiouville.Families.LaguerreFamily import LaguerreFamily
from SturmLiouville.Families.HermiteFamily import HermiteFamily
from SturmLiouville.Families.ConfluentFamily import ConfluentFamily
from SturmLiouville.Families.ChebyshevFamily import ChebyshevFamily
from SturmLiouville.Families.JacobiFamily import JacobiFamily

__all__ = [
    "SturmLiouvilleError",
    "IrrationalOrComplexRoots",
    "DegreeViolation",
    "EigenvalueCollisionUnsolvable",
    "PreconditionViolation",
    "PivotVanishes",
    "TableTooShort",
    "NonPolynomialResult",
    "BudgetExceeded",
    "ExpressionSyntaxError",

    "Polynomial",
    "poly_arith",
    "differentiate",
    "evaluate",
    "RationalFunction",
    "PartialFractions",
    "PoleTerm",
    "partial_fractions",

    "DiffOperator",
    "EigenvalueFormula",
    "EigenPair",
    "apply",
    "matrix_on_Pn",
    "eigenvalue_formula",
    "monic_eigenpolynomial",

    "WeightForm",
    "Finiteness",
    "FinitenessTag",
    "Side",
    "Direction",
    "derive_weight",
    "finiteness_at_point",
    "decay_dominates_polynomials",
    "SingularPointData",
    "order1_singular_classify",

    "Interval",
    "AffineMap",
    "CaseTag",
    "Mode",
    "ParamConstraint",
    "ClassificationRecord",
    "normalize",
    "classify",
    "jacobi_admissible",
    "transform_operator",

    "MomentRecurrence",
    "MomentTable",
    "GramMatrix",
    "moment_recurrence",
    "moments_upto",
    "inner_product",
    "gram_matrix",
    "norm_finiteness",

    "HighOrderSystem",
    "BoundaryExpression",
    "BoundaryWitness",
    "derive_order3",
    "derive_order4",
    "boundary_expression",
    "boundary_difference_vanishes",
    "example_order4",
    "order4_family",

    "QuadResult",
    "BoundaryTrend",
    "CrossValidation",
    "quad_inner_product",
    "boundary_limit",
    "cross_validate",

    "BaseCallback",
    "ListCallback",
    "TensorboardCallback",

    "BaseFamily",
    "LegendreFamily",
    "LaguerreFamily",
    "HermiteFamily",
    "ConfluentFamily",
    "ChebyshevFamily",
    "JacobiFamily",

]
