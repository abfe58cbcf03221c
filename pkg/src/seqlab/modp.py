"""Reduction of the sequence group modulo a prime.

For an admissible odd prime p (one dividing neither numerator nor
denominator of t or of delta = t**2 - 4) the reduced classes with
nonvanishing determinant form a cyclic group of order

    N = p - 1   if delta is a quadratic residue mod p,
        p + 1   otherwise.

Element orders in that group drive the whole divisor theory: p divides some
term of the sequence carried by X exactly when ord_p(X) divides ord_p(D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import ExcludedPrimeError, SingularElementError
from .group import GroupElement
from .rational import factorize
from .ring import RationalLike, _frac
from .transforms import check_parameter


def in_admissible_set(t: RationalLike, p: int) -> bool:
    """Whether p belongs to the admissible prime set of t."""
    t = _frac(t)
    if p == 2:
        return False
    from .primes import is_prime

    if not is_prime(p):
        return False
    delta = t * t - 4
    return (
        t.numerator % p != 0
        and t.denominator % p != 0
        and delta.numerator % p != 0
    )


@dataclass(frozen=True)
class ModpContext:
    """t reduced mod an admissible prime, with the group order prefactored."""

    t: Fraction
    p: int
    t_p: int
    delta_p: int
    group_order: int
    order_factors: Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def _modp_context(t: Fraction, p: int) -> ModpContext:
    check_parameter(t)
    if not in_admissible_set(t, p):
        raise ExcludedPrimeError("p = %d is not admissible for t = %s" % (p, t))
    t_p = t.numerator * pow(t.denominator, -1, p) % p
    delta_p = (t_p * t_p - 4) % p
    is_qr = pow(delta_p, (p - 1) // 2, p) == 1
    n = p - 1 if is_qr else p + 1
    return ModpContext(
        t=t, p=p, t_p=t_p, delta_p=delta_p, group_order=n,
        order_factors=tuple(sorted(factorize(n).items())),
    )


def modp_context(t: RationalLike, p: int) -> ModpContext:
    return _modp_context(_frac(t), p)


@dataclass(frozen=True)
class ModpElement:
    """A reduced class mod p, normalized to a1 = 1 (or [1, 0] when a1 = 0)."""

    ctx: ModpContext
    a0: int
    a1: int

    def __mul__(self, other: "ModpElement") -> "ModpElement":
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise ExcludedPrimeError("elements over different mod-p contexts")
        pair = _mul(self.ctx.t_p, self.ctx.p, (self.a0, self.a1), (other.a0, other.a1))
        a0, a1 = _normalize(self.ctx.p, pair)
        return ModpElement(self.ctx, a0, a1)

    def __pow__(self, n: int) -> "ModpElement":
        a0, a1 = _pow(self.ctx.t_p, self.ctx.p, (self.a0, self.a1), n % self.ctx.group_order)
        return ModpElement(self.ctx, a0, a1)

    def is_identity(self) -> bool:
        return self.a0 == 0 and self.a1 == 1


def _det(t_p: int, p: int, x: Tuple[int, int]) -> int:
    return (x[1] * x[1] - t_p * x[0] * x[1] + x[0] * x[0]) % p


def _mul(t_p: int, p: int, x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
    return (
        (x[1] * y[0] + x[0] * y[1] - t_p * x[0] * y[0]) % p,
        (x[1] * y[1] - x[0] * y[0]) % p,
    )


def _normalize(p: int, x: Tuple[int, int]) -> Tuple[int, int]:
    if x[1] % p:
        return (x[0] * pow(x[1], -1, p) % p, 1)
    if x[0] % p == 0:
        raise SingularElementError("zero pair mod %d" % p)
    return (1, 0)


def _pow(t_p: int, p: int, x: Tuple[int, int], n: int) -> Tuple[int, int]:
    out = (0, 1)
    while n:
        if n & 1:
            out = _mul(t_p, p, out, x)
        x = _mul(t_p, p, x, x)
        n >>= 1
    return _normalize(p, out)


def _ord(ctx: ModpContext, x: Tuple[int, int]) -> int:
    """Order of a class by descent through the factored group order."""
    order = ctx.group_order
    for q, _ in ctx.order_factors:
        while order % q == 0 and _pow(ctx.t_p, ctx.p, x, order // q) == (0, 1):
            order //= q
    return order


def modp_reduce(x: GroupElement, p: int) -> ModpElement:
    """The class of x in the mod-p group; fails if det vanishes there."""
    if not x.ctx.is_one_param:
        raise ExcludedPrimeError("mod-p reduction takes one-parameter classes")
    ctx = modp_context(x.ctx.T, p)
    if _det(ctx.t_p, p, (x.a0 % p, x.a1 % p)) == 0:
        raise SingularElementError("class %r is singular mod %d" % (x, p))
    a0, a1 = _normalize(p, (x.a0 % p, x.a1 % p))
    return ModpElement(ctx, a0, a1)


def ord_p(x: ModpElement) -> int:
    return _ord(x.ctx, (x.a0, x.a1))


@lru_cache(maxsize=None)
def _ord_named(t: Fraction, p: int, which: str) -> int:
    ctx = _modp_context(t, p)
    pair = {"D": (1, ctx.t_p), "W": (-1, 1), "V": (1, 1), "C": (2, ctx.t_p)}[which]
    pair = _normalize(p, (pair[0] % p, pair[1] % p))
    return _ord(ctx, pair)


def ord_companion(t: RationalLike, p: int) -> int:
    """ord_p of the companion class D."""
    return _ord_named(_frac(t), p, "D")


def xi(t: RationalLike, p: int) -> int:
    """ord_p of the class W = [-1, 1]; the invariant behind the trichotomy.

    ord_p(D) equals xi when xi is odd and xi/2 when xi is even (W**2 is the
    D**-1 class).
    """
    return _ord_named(_frac(t), p, "W")


def is_divisor(x: GroupElement, p: int) -> bool:
    """Whether p divides some term of the sequence carried by x.

    False outright when det(x) vanishes mod p (a reduced sequence with a
    zero term would force all terms to zero); otherwise p divides a term
    iff ord_p(x) divides ord_p(D).
    """
    if not x.ctx.is_one_param:
        raise ExcludedPrimeError("divisor test takes one-parameter classes")
    t = x.ctx.T
    ctx = modp_context(t, p)
    pair = (x.a0 % p, x.a1 % p)
    if _det(ctx.t_p, p, pair) == 0:
        return False
    return ord_companion(t, p) % _ord(ctx, _normalize(p, pair)) == 0


def trichotomy_class(t: RationalLike, p: int) -> str:
    """Which of the three basis classes p divides: "W", "V" or "C".

    Every admissible p divides exactly one of them, according to
    xi mod 4: odd -> W, 2 mod 4 -> V, 0 mod 4 -> C.
    """
    x = xi(t, p)
    if x % 2 == 1:
        return "W"
    return "V" if x % 4 == 2 else "C"


def qr_filter(x: GroupElement, p: int) -> bool:
    """Euler-criterion test: is det(x) a nonzero quadratic residue mod p?

    Divisors of x all pass this filter, which caps the density of any
    divisor set at 1/2 when det(x) is not a rational square.
    """
    if not x.ctx.is_one_param:
        raise ExcludedPrimeError("QR filter takes one-parameter classes")
    ctx = modp_context(x.ctx.T, p)
    d = x.det
    d_p = d.numerator * pow(d.denominator, -1, p) % p
    return pow(d_p, (p - 1) // 2, p) == 1