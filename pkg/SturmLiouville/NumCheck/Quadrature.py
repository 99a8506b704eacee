import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

import torch

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Bochner.Classification import ClassificationRecord
from SturmLiouville.Callbacks.BaseCallback import BaseCallback
from SturmLiouville.Errors import BudgetExceeded, PreconditionViolation
from SturmLiouville.Verify.Moments import GramMatrix, gram_matrix
from SturmLiouville.Weight.WeightForm import Direction, WeightForm

# 15-point Kronrod rule with the embedded 7-point Gauss rule (QUADPACK qk15), nodes on [0, 1] by symmetry.
_XGK = [0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000]
_WGK = [0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714]
_WG = [0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
       0.381830050505118944950369775488975, 0.417959183673469387755102040816327]

EPSILON = torch.finfo(torch.float64).eps


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class BoundaryTrend:
    """ |p a (u y' - u' y)| along the ladder x_k = sign * start * ratio^k."""
    points: Tuple[float, ...]
    magnitudes: Tuple[float, ...]

    @property
    def terminal(self) -> float:
        return self.magnitudes[-1]

    def is_decaying(self, threshold: float = 1e-12) -> bool:
        tail = self.magnitudes[len(self.magnitudes) // 2:]
        return self.terminal < threshold and all(later <= earlier for earlier, later in zip(tail, tail[1:]))


@dataclass(frozen=True)
class CrossValidation:
    exact: GramMatrix
    numeric: Tuple[Tuple[float, ...], ...]
    max_deviation: float
    passed: bool


def _resolve_device(device: str) -> str:
    if device == "auto":
        return "cuda" if torch.cuda.is_available() else "cpu"
    return device


def _kronrod_rule(dtype: torch.dtype, device: str) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """ Nodes on [-1, 1] with Kronrod and Gauss weights (Gauss weights are zero off the Gauss nodes)."""
    nodes = [-x for x in _XGK[:7]] + [0.0] + list(reversed(_XGK[:7]))
    kronrod = _WGK[:7] + [_WGK[7]] + list(reversed(_WGK[:7]))
    gauss = [0.0] * 15
    for k, w in enumerate(_WG[:3]):
        gauss[2 * k + 1] = w
        gauss[13 - 2 * k] = w
    gauss[7] = _WG[3]
    as_tensor = lambda values: torch.tensor(values, dtype=dtype, device=device)
    return as_tensor(nodes), as_tensor(kronrod), as_tensor(gauss)


def _horner(p: Polynomial, x: torch.Tensor) -> torch.Tensor:
    out = torch.zeros_like(x)
    for c in reversed(p.coefficients):
        out = out * x + float(c)
    return out


def _adaptive_integrate(f: Callable[[torch.Tensor], torch.Tensor], lo: float, hi: float, tol: float,
                        max_evaluations: int, dtype: torch.dtype, device: str) -> QuadResult:
    """ Globally adaptive Gauss-Kronrod integration of f over [lo, hi], all active segments evaluated as one batch.

    A segment is retired when its error estimate |K15 - G7| is below its share of the target or at the round-off
    floor 50 * eps * integral |f|. The run converges when the summed estimate is below tol * max(1, |value|).
    """
    nodes, kronrod, gauss = _kronrod_rule(dtype, device)
    assert max_evaluations >= nodes.numel(), f"max_evaluations must cover one rule, got {max_evaluations}"
    segments = torch.tensor([[lo, hi]], dtype=dtype, device=device)
    width = hi - lo
    value_done, error_done, evaluations = 0.0, 0.0, 0
    while True:
        center = (segments[:, 0:1] + segments[:, 1:2]) / 2
        half = (segments[:, 1:2] - segments[:, 0:1]) / 2
        fx = f(center + half * nodes)
        assert torch.isfinite(fx).all(), "the integrand produced non-finite values"
        evaluations += fx.numel()

        K = (fx * kronrod).sum(dim=-1) * half.squeeze(-1)
        G = (fx * gauss).sum(dim=-1) * half.squeeze(-1)
        K_abs = (fx.abs() * kronrod).sum(dim=-1) * half.squeeze(-1)
        error = (K - G).abs()

        value = value_done + K.sum().item()
        total_error = error_done + error.sum().item()
        target = tol * max(1.0, abs(value))
        if total_error <= target:
            return QuadResult(value, total_error, evaluations)
        if evaluations >= max_evaluations:
            raise BudgetExceeded(evaluations, total_error, tol)

        share = target * (2 * half.squeeze(-1)) / width
        done = (error <= share) | (error <= 50 * EPSILON * K_abs)
        value_done += K[done].sum().item()
        error_done += error[done].sum().item()
        remaining, remaining_error = segments[~done], error[~done]
        if remaining.shape[0] == 0:
            # every segment is at its share or at the round-off floor
            return QuadResult(value_done, error_done, evaluations)
        # split only as many segments as the budget still pays for, worst first; the rest keep their estimates
        affordable = (max_evaluations - evaluations) // (2 * nodes.numel())
        if affordable == 0:
            raise BudgetExceeded(evaluations, total_error, tol)
        if remaining.shape[0] > affordable:
            order = torch.argsort(remaining_error, descending=True)
            kept, split = order[affordable:], order[:affordable]
            value_done += K[~done][kept].sum().item()
            error_done += remaining_error[kept].sum().item()
            remaining = remaining[split]
        middle = (remaining[:, 0:1] + remaining[:, 1:2]) / 2
        segments = torch.cat([torch.cat([remaining[:, 0:1], middle], dim=1),
                              torch.cat([middle, remaining[:, 1:2]], dim=1)], dim=0)


class _Substitution:
    """ Maps the integration variable s to x, with log|dx/ds| and exact log-distances to singular endpoints.

    finite [lo, hi]: x = mid - half cos(s), s in (0, pi), so x - lo = 2 half sin^2(s/2) and hi - x = 2 half cos^2(s/2).
    [lo, inf): x = lo + s^2.  (-inf, hi]: x = hi - s^2.  (-inf, inf): x = s.
    """

    def __init__(self, kind: str, lo: float = 0.0, hi: float = 0.0):
        if kind not in ("finite", "lower", "upper", "line"):
            raise ValueError(f"Unknown substitution: '{kind}'. Should be one of 'finite', 'lower', 'upper', 'line'")
        self.kind, self.lo, self.hi = kind, lo, hi

    def apply(self, s: torch.Tensor) -> Tuple[torch.Tensor, torch.Tensor, Dict[float, torch.Tensor]]:
        if self.kind == "finite":
            mid, half = (self.lo + self.hi) / 2, (self.hi - self.lo) / 2
            log_sin, log_cos = torch.log(torch.sin(s / 2)), torch.log(torch.cos(s / 2))
            x = mid - half * torch.cos(s)
            log_jacobian = math.log(2 * half) + log_sin + log_cos
            distances = {self.lo: math.log(2 * half) + 2 * log_sin, self.hi: math.log(2 * half) + 2 * log_cos}
            return x, log_jacobian, distances
        elif self.kind == "lower":
            return self.lo + s ** 2, math.log(2) + torch.log(s), {self.lo: 2 * torch.log(s)}
        elif self.kind == "upper":
            return self.hi - s ** 2, math.log(2) + torch.log(s), {self.hi: 2 * torch.log(s)}
        else:
            return s, torch.zeros_like(s), {}


def _log_weight(w: WeightForm, x: torch.Tensor, distances: Dict[float, torch.Tensor]) -> torch.Tensor:
    out = math.log(w.constant) + _horner(w.exp_arg.as_polynomial(), x)
    for root, exponent in w.power_factors:
        if exponent == 0:
            continue
        r = float(root)
        log_distance = distances[r] if r in distances else torch.log((x - r).abs())
        out = out + float(exponent) * log_distance
    return out


def _log_envelope(w: WeightForm, P: Polynomial, Q: Polynomial, x: float) -> float:
    """ An upper bound of log|P Q w| at x, padded by 2 log(1 + |x|) so the tail beyond x is bounded as well."""
    def log_abs_bound(p: Polynomial) -> float:
        return math.log(max(sum(abs(float(c)) * abs(x) ** k for k, c in enumerate(p.coefficients)), 1e-300))
    value = math.log(w.constant) + sum(float(c) * x ** k for k, c in enumerate(w.exp_arg.as_polynomial().coefficients))
    for root, exponent in w.power_factors:
        if exponent != 0:
            value += float(exponent) * math.log(abs(x - float(root)))
    return value + log_abs_bound(P) + log_abs_bound(Q) + 2 * math.log1p(abs(x))


def _truncation(w: WeightForm, P: Polynomial, Q: Polynomial, start: float, sign: int, tol: float) -> float:
    """ The distance X from start at which the envelope falls below log(tol * 1e-3) and is still decreasing."""
    threshold = math.log(tol * 1e-3)
    distance = max([1.0] + [2 * abs(float(r) - start) for r in w.roots()])
    for _ in range(64):
        here = _log_envelope(w, P, Q, start + sign * distance)
        further = _log_envelope(w, P, Q, start + sign * 2 * distance)
        if here < threshold and further < here:
            return distance
        distance *= 2
    raise PreconditionViolation(f"the weight {w.display()} does not decay fast enough toward "
                                f"{'+inf' if sign > 0 else '-inf'}")


def _weighted_integral(rec: ClassificationRecord, P: Polynomial, Q: Polynomial, tol: float, max_evaluations: int,
                       dtype: torch.dtype, device: str) -> QuadResult:
    """ The unnormalized integral of p P Q over the record's interval."""
    w, interval = rec.weight, rec.interval
    if not w.exp_arg.is_polynomial():
        raise PreconditionViolation(f"the weight {w.display()} has an essential singularity")
    if interval.is_bounded:
        substitution = _Substitution("finite", float(interval.lo), float(interval.hi))
        s_lo, s_hi = 0.0, math.pi
    elif interval.lo_finite:
        lo = float(interval.lo)
        substitution = _Substitution("lower", lo=lo)
        s_lo, s_hi = 0.0, math.sqrt(_truncation(w, P, Q, lo, +1, tol))
    elif interval.hi_finite:
        hi = float(interval.hi)
        substitution = _Substitution("upper", hi=hi)
        s_lo, s_hi = 0.0, math.sqrt(_truncation(w, P, Q, hi, -1, tol))
    else:
        substitution = _Substitution("line")
        s_lo, s_hi = -_truncation(w, P, Q, 0.0, -1, tol), _truncation(w, P, Q, 0.0, +1, tol)

    def integrand(s: torch.Tensor) -> torch.Tensor:
        x, log_jacobian, distances = substitution.apply(s)
        return torch.exp(_log_weight(w, x, distances) + log_jacobian) * _horner(P, x) * _horner(Q, x)

    return _adaptive_integrate(integrand, s_lo, s_hi, tol, max_evaluations, dtype, device)


def _ratio(numerator: QuadResult, normalizer: QuadResult) -> QuadResult:
    value = numerator.value / normalizer.value
    error = numerator.error_estimate / abs(normalizer.value) + abs(value) * normalizer.error_estimate / abs(normalizer.value)
    return QuadResult(value, error, numerator.evaluations + normalizer.evaluations)


def _require(rec: ClassificationRecord):
    if not rec.is_admissible:
        raise PreconditionViolation(f"the classification is {rec.mode.value}; the weighted integrals may diverge")


def quad_inner_product(rec: ClassificationRecord, P: Polynomial, Q: Polynomial, tol: float = 1e-10,
                       max_evaluations: int = 200_000, dtype: torch.dtype = torch.float64, device: str = "auto") \
        -> QuadResult:
    """ Numeric estimate of the integral of p P Q divided by the integral of p over the record's interval.

    Args:
    rec: ClassificationRecord: an admissible classification.
    P, Q: Polynomial: the two polynomials.
    tol: float: tolerance of each of the two integrals, relative to max(1, |value|).
    max_evaluations: int: integrand evaluation budget per integral.
    dtype: torch.dtype: floating-point type of the computation. Default is torch.float64.
    device: str: Device to compute on. Default is "auto" which will use "cuda" if available, else "cpu".

    Returns:
    QuadResult: the ratio, its propagated error estimate, and the evaluations used.
    """
    assert tol > 0, f"tol must be positive, got {tol}"
    _require(rec)
    device = _resolve_device(device)
    numerator = _weighted_integral(rec, P, Q, tol, max_evaluations, dtype, device)
    normalizer = _weighted_integral(rec, Polynomial.one(), Polynomial.one(), tol, max_evaluations, dtype, device)
    return _ratio(numerator, normalizer)


def boundary_limit(rec: ClassificationRecord, i: int, j: int, direction: Union[Direction, str],
                   samples: int = 8, start: float = 1.0, ratio: float = 2.0) -> BoundaryTrend:
    """ |p a (u y' - u' y)| for u = x^i, y = x^j on a geometric ladder toward an infinite endpoint.

    Computed in log space, so growing weights report inf instead of overflowing.

    Args:
    rec: ClassificationRecord: a record whose interval is unbounded in `direction`.
    i, j: int: monomial degrees of u and y.
    direction: Direction: +inf or -inf.
    samples: int: ladder length.
    start: float: first ladder point magnitude.
    ratio: float: ladder ratio.

    Returns:
    BoundaryTrend: the ladder points and magnitudes.
    """
    assert i >= 0 and j >= 0, f"i and j must be non-negative, got {i}, {j}"
    assert samples >= 2 and start > 0 and ratio > 1, "the ladder needs samples >= 2, start > 0 and ratio > 1"
    direction = Direction(direction)
    interval = rec.interval
    if interval is None or rec.weight is None or \
            (interval.hi_finite if direction is Direction.POSITIVE else interval.lo_finite):
        raise PreconditionViolation(f"the record's interval is not unbounded toward {direction.value}")

    w = rec.weight
    xs = direction.sign * start * ratio ** torch.arange(samples, dtype=torch.float64)
    if i == j:
        return BoundaryTrend(tuple(xs.tolist()), tuple([0.0] * samples))
    log_weight = math.log(w.constant) + _horner(w.exp_arg.num, xs) / _horner(w.exp_arg.den, xs)
    for root, exponent in w.power_factors:
        if exponent != 0:
            log_weight = log_weight + float(exponent) * torch.log((xs - float(root)).abs())
    log_magnitude = log_weight + torch.log(_horner(rec.a, xs).abs()) + math.log(abs(j - i)) \
        + (i + j - 1) * torch.log(xs.abs())
    magnitudes = torch.exp(log_magnitude)
    return BoundaryTrend(tuple(xs.tolist()), tuple(magnitudes.tolist()))


def cross_validate(rec: ClassificationRecord, n_max: int = 6, tol: float = 1e-10,
                   callback: BaseCallback = None, max_evaluations: int = 200_000,
                   dtype: torch.dtype = torch.float64, device: str = "auto") -> CrossValidation:
    """ Numeric mirror of the exact Gram matrix of the monic eigenpolynomials.

    An entry passes when |numeric - exact| <= max(1e-8, 1e-8 |exact|).

    Args:
    rec: ClassificationRecord: an admissible classification.
    n_max: int: largest degree.
    tol: float: quadrature tolerance.
    callback: BaseCallback: receives on_run_start, on_step per entry (with `deviation` and `passed`), and on_run_end.

    Returns:
    CrossValidation: exact and numeric matrices, the largest deviation, and whether every entry passed.
    """
    _require(rec)
    device = _resolve_device(device)
    callback = callback if callback is not None else BaseCallback()
    callback.on_run_start(locals())
    exact = gram_matrix(rec, n_max)
    L = rec.operator()
    polys = [L.monic_eigenpolynomial(n).eigenpolynomial for n in range(n_max + 1)]
    normalizer = _weighted_integral(rec, Polynomial.one(), Polynomial.one(), tol, max_evaluations, dtype, device)

    numeric: List[List[float]] = [[0.0] * (n_max + 1) for _ in range(n_max + 1)]
    max_deviation, passed = 0.0, True
    for m in range(n_max + 1):
        for n in range(m, n_max + 1):
            result = _ratio(_weighted_integral(rec, polys[m], polys[n], tol, max_evaluations, dtype, device),
                            normalizer)
            numeric[m][n] = numeric[n][m] = result.value
            reference = float(exact.entries[m][n])
            deviation = abs(result.value - reference)
            entry_passed = deviation <= max(1e-8, 1e-8 * abs(reference))
            max_deviation = max(max_deviation, deviation)
            passed = passed and entry_passed
            callback.on_step(locals())

    outcome = CrossValidation(exact, tuple(tuple(row) for row in numeric), max_deviation, passed)
    callback.on_run_end(locals())
    return outcome
