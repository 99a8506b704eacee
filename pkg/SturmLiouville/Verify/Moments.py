from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Bochner.Classification import ClassificationRecord
from SturmLiouville.Bochner.Interval import Interval
from SturmLiouville.Errors import PivotVanishes, PreconditionViolation, TableTooShort
from SturmLiouville.Weight.WeightForm import Direction, FinitenessTag, Side, decay_dominates_polynomials, \
    finiteness_at_point


@dataclass(frozen=True)
class MomentRecurrence:
    """ Integrating (p a x^k)' over the interval, with vanishing boundary terms and (pa)' = pb, gives

        sum_i b_i mu_{k+i} + k sum_i a_i mu_{k-1+i} = 0    for k >= 0.

    The highest moment is mu_{k+1}, with coefficient b_1 + k a_2.
    """
    a: Polynomial
    b: Polynomial
    interval: Union[Interval, None] = None

    def relation(self, k: int) -> Dict[int, Fraction]:
        """ The relation at k as {moment index: coefficient}."""
        assert k >= 0, f"k must be non-negative, got {k}"
        coeffs: Dict[int, Fraction] = {}
        for i, b_i in enumerate(self.b.coefficients):
            coeffs[k + i] = coeffs.get(k + i, Fraction(0)) + b_i
        if k > 0:
            for i, a_i in enumerate(self.a.coefficients):
                coeffs[k - 1 + i] = coeffs.get(k - 1 + i, Fraction(0)) + k * a_i
        return coeffs

    def pivot(self, k: int) -> Fraction:
        return self.b[1] + k * self.a[2]

    def next_ratio(self, k: int, ratios: List[Fraction]) -> Fraction:
        """ r_{k+1} from r_0..r_k."""
        pivot = self.pivot(k)
        if pivot == 0:
            raise PivotVanishes(k)
        rest = sum((coeff * ratios[index] for index, coeff in self.relation(k).items() if index <= k),
                   Fraction(0))
        return -rest / pivot


@dataclass(frozen=True)
class MomentTable:
    """ ratios[k] = mu_k / mu_0. mu0_symbol names the normalization integral, which is never evaluated."""
    ratios: Tuple[Fraction, ...]
    mu0_symbol: str = "mu0"

    @property
    def N(self) -> int:
        return len(self.ratios) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.ratios[k]


@dataclass(frozen=True)
class GramMatrix:
    """ entries[m][n] = <P_m, P_n> / mu_0 for the monic eigenpolynomials P_0..P_nMax."""
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def diagonal(self) -> Tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i] for i in range(self.size) for j in range(i))

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.size) for j in range(self.size) if i != j)

    def max_off_diagonal(self) -> Fraction:
        return max((abs(self.entries[i][j]) for i in range(self.size) for j in range(self.size) if i != j),
                   default=Fraction(0))


def moment_recurrence(a: Polynomial, b: Polynomial, interval: Union[Interval, None] = None) -> MomentRecurrence:
    return MomentRecurrence(a, b, interval)


def _require_admissible(rec: ClassificationRecord):
    if not rec.is_admissible:
        raise PreconditionViolation(f"the classification is {rec.mode.value}; moments need vanishing boundary terms")


def moments_upto(rec: ClassificationRecord, N: int) -> MomentTable:
    """ Exact moment ratios r_0..r_N of the record's weight, r_0 = 1.

    Args:
    rec: ClassificationRecord: an admissible classification.
    N: int: the highest moment.

    Returns:
    MomentTable: the ratios.
    """
    assert N >= 0, f"N must be non-negative, got {N}"
    _require_admissible(rec)
    recurrence = moment_recurrence(rec.a, rec.b, rec.interval)
    ratios = [Fraction(1)]
    for k in range(N):
        ratios.append(recurrence.next_ratio(k, ratios))
    return MomentTable(tuple(ratios), f"integral of {rec.weight.display()} over {rec.interval.display()}")


def inner_product(table: MomentTable, P: Polynomial, Q: Polynomial) -> Fraction:
    """ <P, Q> / mu_0 = sum_ij P_i Q_j r_{i+j}."""
    if P.is_zero() or Q.is_zero():
        return Fraction(0)
    needed = P.degree() + Q.degree()
    if needed > table.N:
        raise TableTooShort(f"deg P + deg Q = {needed} but the table only holds moments up to {table.N}")
    return sum((p_i * q_j * table.ratios[i + j]
                for i, p_i in enumerate(P.coefficients) if p_i != 0
                for j, q_j in enumerate(Q.coefficients) if q_j != 0), Fraction(0))


def gram_matrix(rec: ClassificationRecord, nMax: int) -> GramMatrix:
    """ Gram matrix of the monic eigenpolynomials of degree 0..nMax, exactly, relative to mu_0."""
    table = moments_upto(rec, 2 * nMax)
    L = rec.operator()
    polys = [L.monic_eigenpolynomial(n).eigenpolynomial for n in range(nMax + 1)]
    return GramMatrix(tuple(tuple(inner_product(table, P, Q) for Q in polys) for P in polys))


def norm_finiteness(rec: ClassificationRecord) -> bool:
    """ True iff every polynomial has a finite norm: the weight is integrable at each finite endpoint and
    decays faster than every polynomial at each infinite endpoint."""
    if rec.weight is None or rec.interval is None:
        return False
    w, interval = rec.weight, rec.interval
    for endpoint, inward, finite in ((interval.lo, Side.RIGHT, interval.lo_finite),
                                     (interval.hi, Side.LEFT, interval.hi_finite)):
        if not finite:
            continue
        if w.exp_arg.pole_order(endpoint) >= 1:
            if finiteness_at_point(w, endpoint, inward).tag is not FinitenessTag.ZERO_LIMIT:
                return False
        elif w.exponent_at(endpoint) <= -1:
            return False
    if not interval.lo_finite and not decay_dominates_polynomials(w, Direction.NEGATIVE):
        return False
    if not interval.hi_finite and not decay_dominates_polynomials(w, Direction.POSITIVE):
        return False
    return True
