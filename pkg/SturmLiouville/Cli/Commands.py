from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Bochner.Classification import ClassificationRecord, classify
from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.Callbacks.BaseCallback import BaseCallback
from SturmLiouville.Cli.Expression import parse_polynomial, parse_rational
from SturmLiouville.Cli.Report import classification_json, eigenpairs_json, formula_json, gram_json, \
    interval_json, make_report, numeric_json, polynomial_json, rational, weight_json
from SturmLiouville.Cli.SelfTest import SelfTest
from SturmLiouville.Errors import PreconditionViolation
from SturmLiouville.Families import family_by_name
from SturmLiouville.HighOrder.HighOrderSystem import PRINTED_EIGENVALUE, HighOrderSystem, \
    boundary_difference_vanishes, complete_order3, complete_order4, derive_order3, derive_order4, example_order4
from SturmLiouville.NumCheck.Quadrature import cross_validate
from SturmLiouville.Verify.Moments import gram_matrix, moments_upto
from SturmLiouville.Weight.WeightForm import Direction, Side, WeightForm, decay_dominates_polynomials, \
    derive_weight, finiteness_at_point

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INADMISSIBLE = 2

Report = Dict[str, Any]


@dataclass
class OperatorSpec:
    """ Textual operator input. Either a family name or expressions for a, b, c (second order) or
    a4..a0 (higher order). Unset fields are None."""
    a: Union[str, None] = None
    b: Union[str, None] = None
    c: Union[str, None] = None
    a4: Union[str, None] = None
    a3: Union[str, None] = None
    a2: Union[str, None] = None
    a1: Union[str, None] = None
    a0: Union[str, None] = None
    family: Union[str, None] = None
    alpha: Union[str, None] = None
    beta: Union[str, None] = None
    c_param: Union[str, None] = None
    kind: Union[int, None] = None

    def echo(self) -> Dict[str, Any]:
        return {key: value for key, value in asdict(self).items() if value is not None}

    def family_params(self) -> Dict[str, Any]:
        params = {}
        if self.alpha is not None:
            params["alpha"] = parse_rational(self.alpha)
        if self.beta is not None:
            params["beta"] = parse_rational(self.beta)
        if self.c_param is not None:
            params["c"] = parse_rational(self.c_param)
        if self.kind is not None:
            params["kind"] = self.kind
        return params

    def second_order(self) -> Tuple[Polynomial, Polynomial, Polynomial]:
        """ The parsed a, b, c. c must be a constant."""
        if self.family is not None:
            family = family_by_name(self.family, **self.family_params())
            return family.a, family.b, Polynomial.constant(family.c)
        if self.a is None:
            raise PreconditionViolation("an operator needs --a (and usually --b) or --family")
        a = parse_polynomial(self.a)
        b = parse_polynomial(self.b) if self.b is not None else Polynomial()
        c = Polynomial.constant(parse_rational(self.c)) if self.c is not None else Polynomial()
        return a, b, c

    def classify(self) -> ClassificationRecord:
        a, b, c = self.second_order()
        return classify(a, b, c[0])

    def parsed(self, name: str) -> Union[Polynomial, None]:
        text = getattr(self, name)
        return parse_polynomial(text) if text is not None else None


def _inadmissible(command: str, spec: OperatorSpec, rec: ClassificationRecord) -> Tuple[Report, int]:
    report = make_report(command, spec.echo(), classification=classification_json(rec))
    return report, EXIT_INADMISSIBLE


def cmd_classify(spec: OperatorSpec) -> Tuple[Report, int]:
    """ Classification report. Exit code 0 when admissible, 2 otherwise."""
    rec = spec.classify()
    report = make_report("classify", spec.echo(), classification=classification_json(rec))
    return report, EXIT_OK if rec.is_admissible else EXIT_INADMISSIBLE


def cmd_weight(spec: OperatorSpec, order: int = 2) -> Tuple[Report, int]:
    """ The weight of the operator whose two leading coefficients are a (order `order`) and b (order - 1),
    with the limit at each root of a from either side and the decay toward +-inf."""
    a, b, _ = spec.second_order()
    w = derive_weight(a, b, order)
    points = []
    for root in w.roots():
        points.append({"root": rational(root),
                       "left": finiteness_at_point(w, root, Side.LEFT).tag.value,
                       "right": finiteness_at_point(w, root, Side.RIGHT).tag.value})
    decay = {direction.value: decay_dominates_polynomials(w, direction) for direction in Direction}
    report = make_report("weight", dict(spec.echo(), order=order), weight=weight_json(w), finiteness=points,
                         decay=decay)
    return report, EXIT_OK


def plot_range(interval: Interval, width: float = 10.0) -> Tuple[float, float]:
    """ A finite sampling window inside the interval."""
    if interval.is_bounded:
        return float(interval.lo), float(interval.hi)
    if interval.lo_finite:
        return float(interval.lo), float(interval.lo) + width
    if interval.hi_finite:
        return float(interval.hi) - width, float(interval.hi)
    return -width / 2, width / 2


def write_plot_csv(path: str, polys: List[Polynomial], interval: Interval, samples: int = 201):
    """ Writes x, P_0(x), ..., P_n(x) sampled on the interval as CSV with 17 significant digits."""
    lo, hi = plot_range(interval)
    xs = np.linspace(lo, hi, samples)
    columns = [xs] + [np.polyval([float(c) for c in reversed(P.coefficients)] or [0.0], xs) for P in polys]
    header = ",".join(["x"] + [f"P_{n}" for n in range(len(polys))])
    np.savetxt(path, np.column_stack(columns), delimiter=",", header=header, comments="", fmt="%.17g")


def cmd_polys(spec: OperatorSpec, n_max: int, plot_csv: Union[str, None] = None) -> Tuple[Report, int]:
    """ Monic eigenpolynomials P_0..P_nMax with their eigenvalues."""
    assert n_max >= 0, f"n_max must be non-negative, got {n_max}"
    rec = spec.classify()
    if not rec.is_admissible:
        return _inadmissible("polys", spec, rec)
    pairs = rec.operator().eigenpairs(n_max)
    if plot_csv is not None:
        write_plot_csv(plot_csv, [pair.eigenpolynomial for pair in pairs], rec.interval)
    report = make_report("polys", dict(spec.echo(), nMax=n_max), classification=classification_json(rec),
                         eigenpolynomials=eigenpairs_json(pairs))
    return report, EXIT_OK


def cmd_gram(spec: OperatorSpec, n_max: int, numeric: bool = False, tol: float = 1e-10,
             callback: BaseCallback = None) -> Tuple[Report, int]:
    """ Exact Gram matrix of the monic eigenpolynomials. With numeric, also the quadrature mirror; a failed
    mirror exits with 1."""
    assert n_max >= 0, f"n_max must be non-negative, got {n_max}"
    rec = spec.classify()
    if not rec.is_admissible:
        return _inadmissible("gram", spec, rec)
    gram = gram_matrix(rec, n_max)
    sections = {"classification": classification_json(rec),
                "gram": gram_json(gram, moments_upto(rec, 0).mu0_symbol)}
    code = EXIT_OK
    if numeric:
        cv = cross_validate(rec, n_max, tol, callback=callback)
        sections["numeric"] = numeric_json(cv, tol)
        code = EXIT_OK if cv.passed else EXIT_ERROR
    return make_report("gram", dict(spec.echo(), nMax=n_max, numeric=numeric), **sections), code


def _eigenvalue_discrepancies(formula, n_max: int = 6) -> List[Dict[str, Any]]:
    return [{"n": n, "oracle": rational(formula(n)), "printed": rational(PRINTED_EIGENVALUE(n))}
            for n in range(n_max + 1) if formula(n) != PRINTED_EIGENVALUE(n)]


def _with_overrides(system: HighOrderSystem, spec: OperatorSpec, orders: Tuple[int, ...]) -> HighOrderSystem:
    """ Replaces the derived coefficients a_k, k in orders, by the ones given on the command line."""
    given = {k: spec.parsed(f"a{k}") for k in orders if getattr(spec, f"a{k}") is not None}
    if not given:
        return system
    return HighOrderSystem([given.get(k, system.a(k)) for k in range(system.order + 1)], system.weight)


def _build_system(spec: OperatorSpec, example_4th: bool) -> Tuple[Union[HighOrderSystem, None], Dict[str, Any]]:
    """ The system to check and the derived pieces. The system is None when the free coefficient of the
    linkage was not given."""
    p = WeightForm()
    if example_4th:
        system, _ = example_order4()
        _, linkage = derive_order4(system.a(4), p)
        return system, {"a3": polynomial_json(system.a(3)), "a1": polynomial_json(system.a(1)),
                        "linkage": linkage.describe()}

    if spec.a4 is not None:
        a4 = spec.parsed("a4")
        a3, linkage = derive_order4(a4, p)
        derived = {"a3": polynomial_json(a3), "linkage": linkage.describe()}
        if spec.a2 is None:
            return None, derived
        a0 = spec.parsed("a0") if spec.a0 is not None else Polynomial()
        system = _with_overrides(complete_order4(a4, spec.parsed("a2"), a0, p), spec, (1, 3))
        derived["a1"] = polynomial_json(system.a(1))
        return system, derived

    if spec.a3 is not None:
        a3 = spec.parsed("a3")
        a2, linkage = derive_order3(a3, p)
        derived = {"a2": polynomial_json(a2), "linkage": linkage.describe()}
        if spec.a1 is None:
            return None, derived
        system = _with_overrides(complete_order3(a3, spec.parsed("a1"), p), spec, (0, 2))
        derived["a0"] = polynomial_json(system.a(0))
        return system, derived

    raise PreconditionViolation("highorder needs --a4, --a3 or --example-4th")


def cmd_highorder(spec: OperatorSpec, interval: Interval = Interval.closed(-1, 1), degree_bound: int = 8,
                  example_4th: bool = False) -> Tuple[Report, int]:
    """ Order 3 and 4 determining equations with weight p = 1.

    Derives the sub-leading coefficient and the linkage. When the free coefficient is given, also reports the
    residuals, the eigenvalue table for n <= 6 and the exact boundary-difference check on the interval.
    Exit code 2 when a residual is nonzero or the boundary check fails.
    """
    assert degree_bound >= 0, f"degree_bound must be non-negative, got {degree_bound}"
    system, derived = _build_system(spec, example_4th)
    inputs = dict(spec.echo(), interval=interval_json(interval), degreeBound=degree_bound, example4th=example_4th)
    if system is None:
        return make_report("highorder", inputs, weight="1", derived=derived), EXIT_OK

    residuals = [{"equation": text, "residual": residual.to_text(), "zero": residual.is_zero()}
                 for text, residual in system.residuals()]
    bexpr = system.boundary()
    boundary = {"terms": bexpr.describe(), "swapSign": bexpr.swap_sign()}
    if system.order == 3:
        boundary["lastTerm"] = "uy"
    vanishes = True
    if interval.is_bounded:
        vanishes, witness = boundary_difference_vanishes(bexpr, interval, degree_bound)
        boundary["vanishes"] = vanishes
        boundary["witness"] = None if witness is None else \
            {"i": witness.i, "j": witness.j,
             "difference": None if witness.difference is None else rational(witness.difference)}
    else:
        boundary["vanishes"] = None

    sections = {"order": system.order, "weight": "1", "derived": derived, "residuals": residuals,
                "consistent": system.is_consistent(), "boundary": boundary,
                "coefficients": {f"a{k}": polynomial_json(system.a(k)) for k in range(system.order + 1)}}
    formula = system.eigenvalue_formula()
    if formula is not None:
        sections["eigenvalueFormula"] = formula_json(formula)
        sections["eigenvalues"] = [{"n": n, "eigenvalue": rational(formula(n))} for n in range(7)]
        if example_4th:
            sections["discrepancy"] = {"printed": formula_json(PRINTED_EIGENVALUE),
                                       "differences": _eigenvalue_discrepancies(formula)}
    code = EXIT_OK if system.is_consistent() and vanishes else EXIT_INADMISSIBLE
    return make_report("highorder", inputs, **sections), code


def cmd_selftest(self_test: SelfTest, callback: BaseCallback = None, progress_bar: bool = True) \
        -> Tuple[Report, int]:
    """ Runs the acceptance suite. Exit code 1 when any criterion fails."""
    result = self_test.run(callback=callback, progress_bar=progress_bar)
    inputs = {"nMax": self_test.n_max, "numericNMax": self_test.numeric_n_max, "gridSize": self_test.grid_size,
              "seed": self_test.seed, "nRandom": self_test.n_random, "injectFault": self_test.inject_fault}
    return make_report("selftest", inputs, selftest=result.to_json()), EXIT_OK if result.passed else EXIT_ERROR
