"""Exact rational arithmetic and the generalized binomial coefficient.

Rationals are stdlib Fractions: always reduced, positive denominator, zero
stored as 0/1, which is exactly the canonical form the rest of the kernel
relies on for hash-based term lookup.

The binomial coefficient follows the falling-factorial convention

    binom(l, m) = l*(l-1)*...*(l-m+1) / m!

defined for every integer upper argument l (negative included) and, via
binom_poly, for polynomial upper arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .polyring import MultiPoly

Rational = Fraction


def binom_int(ell: int, m: int) -> Fraction:
    """Generalized binomial l over m for any integer l and m >= 0.

    The result is an integer-valued Fraction (a product of m consecutive
    integers is divisible by m!); binom_int(l, 0) == 1.
    """
    if m < 0:
        raise ValueError(f"lower binomial index must be non-negative, got {m}")
    num = 1
    for j in range(m):
        num *= ell - j
    return Fraction(num, factorial(m))


def binom_poly(arg: MultiPoly, m: int) -> MultiPoly:
    """Generalized binomial of a polynomial upper argument.

    Returns prod_{j=0}^{m-1} (arg - j) / m!, expanded.  The product is built
    incrementally so intermediate results stay normalized (zero terms pruned
    at every step); the degree of the result is m * deg(arg).
    """
    if m < 0:
        raise ValueError(f"lower binomial index must be non-negative, got {m}")
    result = MultiPoly.const(arg.nvars, 1)
    for j in range(m):
        result = result * (arg - j)
    return result.scale(Fraction(1, factorial(m)))
