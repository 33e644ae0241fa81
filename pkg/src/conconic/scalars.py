"""Scalar backends shared by every predicate.

Two kinds of number flow through the package: exact rationals (``int`` and
``fractions.Fraction``) and IEEE floats.  A value tuple is *exact* when all
entries are rational; any float member switches the whole object to the float
backend.  Exact zero tests are plain ``== 0``; float zero tests are relative,
``|x| <= eps * scale``, with the scale supplied by each predicate.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, Fraction, float]

DEFAULT_EPS = 1e-9
DEFAULT_CLOSURE_TOL = 1e-7


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values: Iterable[Scalar]) -> bool:
    return all(is_exact(v) for v in values)


def div(a: Scalar, b: Scalar) -> Scalar:
    """Field division that never silently leaves the exact backend."""
    if is_exact(a) and is_exact(b):
        return Fraction(a, b)
    return a / b


def near_zero(x: float, scale: float, eps: float) -> bool:
    return abs(x) <= eps * max(scale, 1e-300)


def exact_sqrt(x: Scalar) -> Optional[Fraction]:
    """Square root of a rational, or None when it is not a perfect square."""
    f = Fraction(x)
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn != f.numerator or rd * rd != f.denominator:
        return None
    return Fraction(rn, rd)


def parse_scalar(text: str, exact: bool) -> Scalar:
    """Parse "p/q", integer, or decimal notation into the requested backend."""
    value = Fraction(text.strip())
    if exact:
        return value
    return float(value)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, float):
        return repr(x)
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def canonical_tuple(values: Sequence[Scalar]) -> tuple:
    """Canonical representative of a homogeneous coordinate tuple.

    Rational entries: clear denominators, divide by the gcd, and make the
    first nonzero entry positive, so equality up to scale becomes plain
    tuple equality.  Float entries: divide by the first component of largest
    magnitude, which pins that component to +1.
    """
    vals = list(values)
    if not vals:
        raise ValueError("empty coordinate tuple")
    if all_exact(vals):
        fracs = [Fraction(v) for v in vals]
        if all(f == 0 for f in fracs):
            raise ValueError("homogeneous coordinates cannot all be zero")
        denom_lcm = math.lcm(*(f.denominator for f in fracs))
        ints = [int(f * denom_lcm) for f in fracs]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)
    floats = [float(v) for v in vals]
    if not all(math.isfinite(v) for v in floats):
        raise ValueError("non-finite homogeneous coordinate")
    m = max(abs(v) for v in floats)
    if m == 0.0:
        raise ValueError("homogeneous coordinates cannot all be zero")
    pivot = next(v for v in floats if abs(v) == m)
    return tuple(v / pivot for v in floats)
