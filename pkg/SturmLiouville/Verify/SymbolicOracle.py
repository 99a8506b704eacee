from fractions import Fraction

import sympy

from SturmLiouville.Algebra.Polynomial import Scalar, to_fraction

_x = sympy.Symbol("x", real=True)
_theta = sympy.Symbol("theta", real=True)


def _as_fraction(ratio) -> Fraction:
    ratio = sympy.simplify(ratio)
    if not ratio.is_Rational:
        raise ValueError(f"the moment ratio {ratio} is not rational")
    return to_fraction(ratio)


def _sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def jacobi_moment_ratio(k: int, s: Scalar, t: Scalar) -> Fraction:
    """ Integral of x^k (1-x)^s (1+x)^t over [-1, 1], divided by the same integral with k = 0.

    Integrated directly for integer s, t >= 0. For s = t half-integer >= -1/2 the substitution x = sin(theta)
    turns the integrand into sin^k cos^(2s+1), which sympy integrates in closed form.
    """
    assert k >= 0, f"k must be non-negative, got {k}"
    s, t = to_fraction(s), to_fraction(t)
    if s.denominator == 1 and t.denominator == 1:
        assert s >= 0 and t >= 0, f"integer exponents must be non-negative, got s={s}, t={t}"
        base = (1 - _x) ** int(s) * (1 + _x) ** int(t)
        numerator = sympy.integrate(_x ** k * base, (_x, -1, 1))
        denominator = sympy.integrate(base, (_x, -1, 1))
    elif s == t and s.denominator == 2 and s >= Fraction(-1, 2):
        power = int(2 * s + 1)
        base = sympy.cos(_theta) ** power
        numerator = sympy.integrate(sympy.sin(_theta) ** k * base, (_theta, -sympy.pi / 2, sympy.pi / 2))
        denominator = sympy.integrate(base, (_theta, -sympy.pi / 2, sympy.pi / 2))
    else:
        raise ValueError(f"Unsupported exponents s={s}, t={t}. Should be non-negative integers or equal "
                         f"half-integers >= -1/2")
    return _as_fraction(numerator / denominator)


def laguerre_moment_ratio(k: int, s: int = 0) -> Fraction:
    """ Integral of x^(k+s) e^(-x) over [0, inf), divided by the same integral with k = 0."""
    assert k >= 0 and s >= 0, f"k and s must be non-negative, got k={k}, s={s}"
    numerator = sympy.integrate(_x ** (k + s) * sympy.exp(-_x), (_x, 0, sympy.oo))
    denominator = sympy.integrate(_x ** s * sympy.exp(-_x), (_x, 0, sympy.oo))
    return _as_fraction(numerator / denominator)


def hermite_moment_ratio(k: int, scale: Scalar = 1) -> Fraction:
    """ Integral of x^k e^(-scale x^2) over the real line, divided by the same integral with k = 0."""
    assert k >= 0, f"k must be non-negative, got {k}"
    scale = _sympy_rational(to_fraction(scale))
    assert scale > 0, "scale must be positive"
    numerator = sympy.integrate(_x ** k * sympy.exp(-scale * _x ** 2), (_x, -sympy.oo, sympy.oo))
    denominator = sympy.integrate(sympy.exp(-scale * _x ** 2), (_x, -sympy.oo, sympy.oo))
    return _as_fraction(numerator / denominator)
