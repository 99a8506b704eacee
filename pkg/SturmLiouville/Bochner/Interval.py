from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from SturmLiouville.Algebra.Polynomial import to_fraction

INFINITY = float("inf")

Endpoint = Union[Fraction, float]


def _endpoint(value) -> Endpoint:
    if isinstance(value, float):
        assert value in (INFINITY, -INFINITY), f"finite endpoints must be exact rationals, got {value}"
        return value
    return to_fraction(value)


@dataclass(frozen=True)
class Interval:
    """ An interval with rational or infinite endpoints. Infinite endpoints are always open."""
    lo: Endpoint
    hi: Endpoint
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", _endpoint(self.lo))
        object.__setattr__(self, "hi", _endpoint(self.hi))
        assert self.lo < self.hi, f"lo must be smaller than hi, got [{self.lo}, {self.hi}]"
        if self.lo == -INFINITY:
            object.__setattr__(self, "lo_open", True)
        if self.hi == INFINITY:
            object.__setattr__(self, "hi_open", True)

    @staticmethod
    def closed(lo, hi) -> "Interval":
        return Interval(lo, hi, False, False)

    @staticmethod
    def open(lo, hi) -> "Interval":
        return Interval(lo, hi, True, True)

    @staticmethod
    def real_line() -> "Interval":
        return Interval(-INFINITY, INFINITY, True, True)

    @property
    def lo_finite(self) -> bool:
        return self.lo != -INFINITY

    @property
    def hi_finite(self) -> bool:
        return self.hi != INFINITY

    @property
    def is_bounded(self) -> bool:
        return self.lo_finite and self.hi_finite

    def finite_endpoints(self):
        return [e for e, finite in ((self.lo, self.lo_finite), (self.hi, self.hi_finite)) if finite]

    def mapped(self, scale: Fraction, shift: Fraction) -> "Interval":
        """ The image under x -> scale*x + shift. A negative scale swaps the endpoints."""
        def image(e):
            if isinstance(e, float):
                return e if scale > 0 else -e
            return scale * e + shift
        if scale > 0:
            return Interval(image(self.lo), image(self.hi), self.lo_open, self.hi_open)
        return Interval(image(self.hi), image(self.lo), self.hi_open, self.lo_open)

    def display(self) -> str:
        def text(e):
            if isinstance(e, float):
                return "inf" if e > 0 else "-inf"
            return str(e)
        return f"{'(' if self.lo_open else '['}{text(self.lo)}, {text(self.hi)}{')' if self.hi_open else ']'}"

    def __str__(self):
        return self.display()
