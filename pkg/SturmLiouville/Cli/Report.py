import json
from fractions import Fraction
from typing import Any, Dict, List, Union

from SturmLiouville.Algebra.Polynomial import Polynomial, to_fraction
from SturmLiouville.Bochner.Classification import AffineMap, ClassificationRecord, ParamConstraint
from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.NumCheck.Quadrature import CrossValidation
from SturmLiouville.Operator.DiffOperator import EigenPair, EigenvalueFormula
from SturmLiouville.Verify.Moments import GramMatrix, norm_finiteness
from SturmLiouville.Weight.WeightForm import WeightForm

SCHEMA_VERSION = 1


def rational(value) -> str:
    """ Canonical "p/q" text of an exact rational, e.g. "0/1", "-5/1", "1/3"."""
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def endpoint(value: Union[Fraction, float]) -> str:
    if isinstance(value, float):
        return "inf" if value > 0 else "-inf"
    return rational(value)


def polynomial_json(p: Polynomial, variable: str = "x") -> Dict[str, Any]:
    return {"text": p.to_text(variable), "coefficients": [rational(c) for c in p.coefficients]}


def interval_json(interval: Union[Interval, None]) -> Union[Dict[str, Any], None]:
    if interval is None:
        return None
    return {"lo": endpoint(interval.lo), "hi": endpoint(interval.hi), "loOpen": interval.lo_open,
            "hiOpen": interval.hi_open, "display": interval.display()}


def constraint_json(constraint: ParamConstraint) -> Dict[str, Any]:
    return {"description": constraint.description, "lhs": rational(constraint.lhs), "relation": constraint.relation,
            "rhs": rational(constraint.rhs), "satisfied": constraint.satisfied}


def weight_json(w: Union[WeightForm, None]) -> Union[Dict[str, Any], None]:
    if w is None:
        return None
    return {"display": w.display(),
            "constant": rational(w.constant),
            "powerFactors": [{"root": rational(r), "exponent": rational(e)} for r, e in w.power_factors],
            "expArg": w.exp_arg.to_text()}


def formula_json(formula: EigenvalueFormula) -> Dict[str, Any]:
    return {"fallingFactorial": [rational(d) for d in formula.falling_factorial_coeffs],
            "expanded": polynomial_json(formula.expanded(), "n")}


def affine_json(affine: Union[AffineMap, None]) -> Union[Dict[str, Any], None]:
    if affine is None:
        return None
    return {"scale": rational(affine.scale), "shift": rational(affine.shift), "factor": rational(affine.factor)}


def classification_json(rec: ClassificationRecord) -> Dict[str, Any]:
    return {"case": rec.case_tag.value,
            "mode": rec.mode.value,
            "admissible": rec.is_admissible,
            "interval": interval_json(rec.interval),
            "alpha": rational(rec.alpha),
            "beta": rational(rec.beta),
            "constraints": [constraint_json(c) for c in rec.constraints],
            "weight": weight_json(rec.weight),
            "normFinite": norm_finiteness(rec),
            "eigenvalues": formula_json(rec.eigenvalues),
            "affineMap": affine_json(rec.affine_map),
            "reason": rec.reason}


def eigenpairs_json(pairs: List[EigenPair]) -> List[Dict[str, Any]]:
    return [{"n": pair.degree, "eigenvalue": rational(pair.eigenvalue),
             "polynomial": polynomial_json(pair.eigenpolynomial)} for pair in pairs]


def gram_json(gram: GramMatrix, mu0_symbol: str = "mu0") -> Dict[str, Any]:
    return {"entries": [[rational(e) for e in row] for row in gram.entries],
            "diagonal": [rational(d) for d in gram.diagonal()],
            "isDiagonal": gram.is_diagonal(),
            "isSymmetric": gram.is_symmetric(),
            "relativeTo": mu0_symbol}


def numeric_json(cv: CrossValidation, tol: float) -> Dict[str, Any]:
    """ The only section holding floats."""
    deviations = [[abs(value - float(exact)) for value, exact in zip(row, exact_row)]
                  for row, exact_row in zip(cv.numeric, cv.exact.entries)]
    return {"values": [list(row) for row in cv.numeric], "deviations": deviations,
            "maxDeviation": cv.max_deviation, "passed": cv.passed, "tol": tol}


def make_report(command: str, inputs: Dict[str, Any], **sections) -> Dict[str, Any]:
    report = {"schemaVersion": SCHEMA_VERSION, "command": command, "input": inputs}
    report.update(sections)
    return report


def dumps(report: Dict[str, Any]) -> str:
    """ Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(report, sort_keys=True, indent=2)
