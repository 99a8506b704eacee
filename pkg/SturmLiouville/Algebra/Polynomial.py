import math
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import sympy

from SturmLiouville.Errors import IrrationalOrComplexRoots

# degree of the zero polynomial; deg(p*q) = deg p + deg q holds for zero too.
MINUS_INFINITY = float("-inf")

Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """ Converts an exact scalar (int, Fraction, or a string such as "-3/4") to a Fraction. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    assert not isinstance(value, float), f"Exact arithmetic only, got the float {value}. Use a Fraction or a 'p/q' string."
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Cannot convert {type(value)} to an exact rational.")


def format_fraction(value: Fraction) -> str:
    """ Formats a rational as a literal of the expression grammar, e.g. "5", "-1/3"."""
    return str(value)


class Polynomial:
    """ A univariate polynomial with exact rational coefficients.

    Coefficients are stored densely in ascending order, so coefficients[k] multiplies x^k.
    The highest stored coefficient is never zero; the zero polynomial has no coefficients
    and degree MINUS_INFINITY. Instances are immutable.
    """
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        """ Constructor for Polynomial.

        Args:
        coefficients: Iterable: ascending coefficients. Ints, Fractions and "p/q" strings are accepted.
        """
        coeffs = [to_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    # constructors
    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial([1])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([0, 1])

    @staticmethod
    def constant(value: Scalar) -> "Polynomial":
        return Polynomial([value])

    @staticmethod
    def monomial(power: int, coefficient: Scalar = 1) -> "Polynomial":
        assert power >= 0, f"power must be non-negative, got {power}"
        return Polynomial([0] * power + [coefficient])

    @staticmethod
    def from_roots(roots: Iterable[Scalar], leading: Scalar = 1) -> "Polynomial":
        """ leading * prod (x - r)."""
        result = Polynomial.constant(leading)
        for root in roots:
            result = result * Polynomial([-to_fraction(root), 1])
        return result

    # basic queries
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __getitem__(self, power: int) -> Fraction:
        """ Coefficient of x^power, zero outside the stored range."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == Polynomial.constant(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coefficients))

    def __repr__(self):
        return f"Polynomial({self.to_text()})"

    def __str__(self):
        return self.to_text()

    # arithmetic
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(to_fraction(other))

    def __add__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = Polynomial._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        assert isinstance(power, int) and power >= 0, f"Only non-negative integer powers are supported, got {power}"
        result, base = Polynomial.one(), self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = to_fraction(factor)
        return Polynomial([factor * c for c in self.coefficients])

    def __divmod__(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """ Polynomial long division: self = q * divisor + r with deg r < deg divisor."""
        divisor = Polynomial._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        remainder = list(self.coefficients)
        d = len(divisor.coefficients) - 1
        lead = divisor.leading_coefficient()
        quotient = [Fraction(0)] * max(len(remainder) - d, 0)
        for k in range(len(remainder) - 1, d - 1, -1):
            factor = remainder[k] / lead
            if factor == 0:
                continue
            quotient[k - d] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[k - d + i] -= factor * c
        return Polynomial(quotient), Polynomial(remainder[:d] if d > 0 else [])

    def __floordiv__(self, divisor) -> "Polynomial":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor) -> "Polynomial":
        return divmod(self, divisor)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient())

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """ Monic greatest common divisor (Euclid over Q). gcd(0, 0) = 0."""
        a, b = self, Polynomial._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # calculus and evaluation
    def differentiate(self, times: int = 1) -> "Polynomial":
        assert times >= 0, f"times must be non-negative, got {times}"
        coeffs = list(self.coefficients)
        for _ in range(times):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
        return Polynomial(coeffs)

    def antiderivative(self) -> "Polynomial":
        """ The antiderivative with zero constant term."""
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coefficients)])

    def evaluate(self, x0: Scalar) -> Fraction:
        """ Exact value at x0 by the Horner scheme."""
        x0 = to_fraction(x0)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x0 + c
        return value

    def __call__(self, x0: Scalar) -> Fraction:
        return self.evaluate(x0)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """ self(inner(x)) by the Horner scheme over polynomials."""
        inner = Polynomial._coerce(inner)
        result = Polynomial()
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def shift(self, offset: Scalar) -> "Polynomial":
        """ self(x + offset), i.e. the Taylor coefficients about x = offset."""
        return self.compose(Polynomial([offset, 1]))

    # factorization over Q
    def root_multiplicity(self, root: Scalar) -> int:
        """ Order of vanishing at root."""
        assert not self.is_zero(), "the zero polynomial vanishes to every order"
        root = to_fraction(root)
        linear = Polynomial([-root, 1])
        multiplicity, remaining = 0, self
        while remaining.evaluate(root) == 0:
            remaining = remaining // linear
            multiplicity += 1
        return multiplicity

    def integer_coefficients(self) -> List[int]:
        """ Primitive integer coefficients proportional to self (content and denominators removed)."""
        if self.is_zero():
            return []
        common = math.lcm(*[c.denominator for c in self.coefficients])
        ints = [int(c * common) for c in self.coefficients]
        content = math.gcd(*ints)
        return [i // content for i in ints]

    def rational_roots(self) -> List[Tuple[Fraction, int]]:
        """ All rational roots with multiplicities, in ascending order.

        Degree one and two factors are solved in closed form. Higher degrees go through the rational root theorem
        until the remaining factor has degree two or less.
        """
        assert not self.is_zero(), "the zero polynomial has every number as a root"
        roots = []
        remaining = self
        zero_multiplicity = 0
        while remaining[0] == 0 and not remaining.is_constant():
            remaining = Polynomial(remaining.coefficients[1:])
            zero_multiplicity += 1
        if zero_multiplicity:
            roots.append((Fraction(0), zero_multiplicity))
        if remaining.degree() > 2:
            ints = remaining.integer_coefficients()
            numerators = [int(d) for d in sympy.divisors(abs(ints[0]))]
            denominators = [int(d) for d in sympy.divisors(abs(ints[-1]))]
            candidates = sorted({Fraction(sign * p, q) for p in numerators for q in denominators for sign in (1, -1)})
            for candidate in candidates:
                if remaining.degree() <= 2:
                    break
                if remaining.evaluate(candidate) == 0:
                    multiplicity = remaining.root_multiplicity(candidate)
                    remaining = remaining // (Polynomial([-candidate, 1]) ** multiplicity)
                    roots.append((candidate, multiplicity))
        if 1 <= remaining.degree() <= 2:
            roots.extend(_quadratic_roots(remaining))
        return sorted(roots)

    def linear_factorization(self) -> Tuple[Fraction, List[Tuple[Fraction, int]]]:
        """ Writes self = leading * prod (x - r)^m over Q.

        Returns:
        Fraction: the leading coefficient.
        List[Tuple[Fraction, int]]: (root, multiplicity) pairs in ascending root order.

        Raises IrrationalOrComplexRoots when self does not split into rational linear factors.
        """
        roots = self.rational_roots()
        if sum(m for _, m in roots) != self.degree():
            raise IrrationalOrComplexRoots(f"{self.to_text()} does not split into linear factors over the rationals.")
        return self.leading_coefficient(), roots

    # symmetry
    def parity(self) -> Union[int, None]:
        """ 0 if self is even, 1 if odd, None if neither. The zero polynomial is reported as even."""
        if all(c == 0 for c in self.coefficients[1::2]):
            return 0
        if all(c == 0 for c in self.coefficients[0::2]):
            return 1
        return None

    # text
    def to_text(self, variable: str = "x") -> str:
        """ Renders self in the expression grammar, descending powers, e.g. "x^2 - 1/3". Re-parses to self."""
        if self.is_zero():
            return "0"
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            monomial = "" if power == 0 else (variable if power == 1 else f"{variable}^{power}")
            if not monomial:
                term = format_fraction(c)
            elif c == 1:
                term = monomial
            elif c == -1:
                term = "-" + monomial
            else:
                term = f"{format_fraction(c)}*{monomial}"
            terms.append(term)
        text = terms[0]
        for term in terms[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


def _rational_sqrt(value: Fraction) -> Union[Fraction, None]:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def _quadratic_roots(p: Polynomial) -> List[Tuple[Fraction, int]]:
    """ Rational roots of a polynomial of degree one or two."""
    if p.degree() == 1:
        return [(-p[0] / p[1], 1)]
    c, b, a = p.coefficients
    discriminant = b * b - 4 * a * c
    if discriminant == 0:
        return [(-b / (2 * a), 2)]
    root = _rational_sqrt(discriminant)
    if root is None:
        return []
    return sorted([((-b - root) / (2 * a), 1), ((-b + root) / (2 * a), 1)])


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """ Exact add, sub or mul of two polynomials."""
    if op == "add":
        return p + q
    elif op == "sub":
        return p - q
    elif op == "mul":
        return p * q
    else:
        raise ValueError(f"Unknown op: '{op}'. Should be one of 'add', 'sub', 'mul'")


def differentiate(p: Polynomial, times: int = 1) -> Polynomial:
    """ The exact derivative of order `times`."""
    return p.differentiate(times)


def evaluate(p: Polynomial, x0: Scalar) -> Fraction:
    """ The exact value p(x0)."""
    return p.evaluate(x0)
