"""Exact rational helpers built on fractions.Fraction.

Fraction already keeps values in lowest terms with a positive denominator,
so this module only adds the pieces the rest of the package needs: the
"a/b" serialization used by the CLI and file formats, exact square testing,
and small integer-factorization utilities (trial division is plenty at the
scale this package works at).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Tuple


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" (or plain "a") into a Fraction, ignoring whitespace.

    Raises ValueError on malformed input, including a zero denominator.
    """
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise ValueError("zero denominator in %r" % text)


def format_rational(x: Fraction) -> str:
    """Serialize a Fraction as "a/b", omitting "/b" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """The nonnegative exact square root of x, or None if x is not a square.

    A reduced fraction is a rational square iff numerator and denominator are
    both perfect squares (they share no prime, so no cross-cancellation can
    rescue a non-square part).
    """
    x = Fraction(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def is_rational_square(x: Fraction) -> bool:
    return rational_sqrt(x) is not None


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of |n| by trial division. factorize(0) is an error."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    n = abs(n)
    out: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel over 6k +- 1
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> List[int]:
    """All positive divisors of |n|, sorted ascending."""
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return sorted(ds)


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Write n = a * P**2 with a squarefree (a carries the sign of n).

    Returns (a, P) with P > 0. n must be nonzero.
    """
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    a, p_part = (1 if n > 0 else -1), 1
    for p, e in factorize(n).items():
        p_part *= p ** (e // 2)
        if e % 2:
            a *= p
    return a, p_part
