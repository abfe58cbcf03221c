"""The group of recursive sequences up to rational scaling.

Nonsingular ring elements taken modulo nonzero scalars form an abelian group
(the projectivization of the invertible part of the ring).  Each class holds
exactly one reduced representative: a coprime integer pair [a0, a1] with
a1 > 0, or a1 = 0 and a0 > 0.  All group arithmetic happens on these
representatives.

The layer enforces the parameter exclusion t not in {0, +-1, +-2} (for a
two-parameter context the equivalent condition on T**2/Q - 2): at the
excluded parameters the companion class has finite order and the whole
divisor theory downstream collapses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .errors import DegenerateParameterError, SingularElementError
from .rational import divisors, is_rational_square, rational_sqrt
from .ring import ParamPair, RationalLike, RingElement, chebyshev_c, chebyshev_u, _frac
from .transforms import check_parameter, classify_cyclotomic


def group_parameter(ctx: ParamPair) -> Fraction:
    """The parameter whose exclusion set gates the group layer.

    For a one-parameter context that is t itself; in general it is the split
    parameter T**2/Q - 2 (for Q = 1 the two conditions agree: t**2 - 2 hits
    {0, +-1, +-2} exactly when t does).
    """
    return ctx.T if ctx.is_one_param else ctx.t


def check_group_context(ctx: ParamPair) -> ParamPair:
    check_parameter(group_parameter(ctx))
    return ctx


@dataclass(frozen=True)
class GroupElement:
    """A sequence class: reduced coprime integer pair over a validated context."""

    ctx: ParamPair
    a0: int
    a1: int

    @classmethod
    def from_pair(cls, ctx: ParamPair, x0: RationalLike, x1: RationalLike) -> "GroupElement":
        check_group_context(ctx)
        x0, x1 = _frac(x0), _frac(x1)
        if x0 == 0 and x1 == 0:
            raise SingularElementError("the zero pair has no class")
        lcm = x0.denominator * x1.denominator // gcd(x0.denominator, x1.denominator)
        a0, a1 = int(x0 * lcm), int(x1 * lcm)
        g = gcd(a0, a1)
        a0, a1 = a0 // g, a1 // g
        if a1 < 0 or (a1 == 0 and a0 < 0):
            a0, a1 = -a0, -a1
        el = cls(ctx, a0, a1)
        if el.det == 0:
            raise SingularElementError("pair [%s, %s] is singular over %r" % (x0, x1, ctx))
        return el

    @property
    def det(self) -> Fraction:
        a0, a1 = self.a0, self.a1
        return a1 * a1 - self.ctx.T * a1 * a0 + self.ctx.Q * a0 * a0

    @property
    def height(self) -> int:
        return max(abs(self.a0), abs(self.a1))

    def ring_element(self) -> RingElement:
        return RingElement(self.ctx, Fraction(self.a0), Fraction(self.a1))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        prod = self.ring_element() * other.ring_element()
        return GroupElement.from_pair(self.ctx, prod.x0, prod.x1)

    def inverse(self) -> "GroupElement":
        conj = self.ring_element().conjugate()
        return GroupElement.from_pair(self.ctx, conj.x0, conj.x1)

    def __pow__(self, n: int) -> "GroupElement":
        base = self if n >= 0 else self.inverse()
        out = identity_class(self.ctx)
        k = abs(n)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "<[%d, %d] over (%s, %s)>" % (self.a0, self.a1, self.ctx.T, self.ctx.Q)


def reduce_element(x: RingElement) -> GroupElement:
    """The class of a nonsingular ring element."""
    return GroupElement.from_pair(x.ctx, x.x0, x.x1)


def identity_class(ctx: ParamPair) -> GroupElement:
    return GroupElement.from_pair(ctx, 0, 1)


def companion_class(ctx: ParamPair) -> GroupElement:
    return GroupElement.from_pair(ctx, 1, ctx.T)


def class_c(ctx: ParamPair) -> GroupElement:
    return GroupElement.from_pair(ctx, 2, ctx.T)


def class_w(t: RationalLike) -> GroupElement:
    return GroupElement.from_pair(ParamPair.one_param(t), -1, 1)


def class_v(t: RationalLike) -> GroupElement:
    return GroupElement.from_pair(ParamPair.one_param(t), 1, 1)


def group_sqrt(y: GroupElement) -> Tuple[GroupElement, ...]:
    """All square roots of a class; empty unless det is a rational square.

    Roots are the row eigenvectors of [[-y1, Q*y0 - T*y1], [y0, y1]] for the
    eigenvalues +-lambda (lambda**2 = det).  For y0 != 0 this collapses to
    the pair [y0, y1 +- lambda]; the degenerate y0 = 0 case (the identity
    class) falls back to the second eigen column and yields {I, C}.  A square
    always has exactly two roots, differing by the order-2 class C.
    """
    lam = rational_sqrt(y.det)
    if lam is None:
        return ()
    T, Q = y.ctx.T, y.ctx.Q
    y0, y1 = Fraction(y.a0), Fraction(y.a1)
    roots: List[GroupElement] = []
    for eps in (lam, -lam):
        cand = (y0, y1 + eps)
        if cand == (0, 0):
            cand = (y1 - eps, T * y1 - Q * y0)
        roots.append(GroupElement.from_pair(y.ctx, *cand))
    assert roots[0] != roots[1], "square roots must differ by the order-2 class"
    return tuple(roots)


def torsion_l(t: RationalLike) -> Tuple[Tuple[GroupElement, int], ...]:
    """The nontrivial torsion of the sequence group over t, with orders.

    Always contains the order-2 class C = [2, t]; circular t adds the
    order-4 pair G, H = [2, t +- a]; cubic t adds the order-3 pair
    S, R = [2, t +- f] and the order-6 pair Y, Z = [2, t +- 3f].  Torsion is
    hence Z2, Z4 or Z6, and no other orders occur.
    """
    t = check_parameter(_frac(t))
    ctx = ParamPair.one_param(t)
    out = [(class_c(ctx), 2)]
    cls = classify_cyclotomic(t)
    if cls.kind == "circular":
        out.append((GroupElement.from_pair(ctx, 2, t + cls.a), 4))
        out.append((GroupElement.from_pair(ctx, 2, t - cls.a), 4))
    elif cls.kind == "cubic":
        out.append((GroupElement.from_pair(ctx, 2, t + cls.f), 3))
        out.append((GroupElement.from_pair(ctx, 2, t - cls.f), 3))
        out.append((GroupElement.from_pair(ctx, 2, t + 3 * cls.f), 6))
        out.append((GroupElement.from_pair(ctx, 2, t - 3 * cls.f), 6))
    return tuple(out)


# ---------------------------------------------------------------------------
# primitivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChebyshevWitness:
    """A solution of C_r(u) = sign*t with rational u."""

    r: int
    u: Fraction
    sign: int


@dataclass(frozen=True)
class PrimitivityReport:
    t: Fraction
    kind: str
    is_primitive: bool
    witnesses: Tuple[ChebyshevWitness, ...]
    circular_primitive: Optional[bool] = None


def _primes_up_to(n: int) -> List[int]:
    out = []
    for k in range(2, n + 1):
        if all(k % p for p in out):
            out.append(k)
    return out


def _chebyshev_witnesses(t: Fraction, r: int) -> List[ChebyshevWitness]:
    """All rational u with C_r(u) = +-t, by exact rational root search.

    Clearing denominators, d*C_r(u) -+ n = 0 has leading coefficient d and
    constant term d*C_r(0) -+ n, so every root p/q has q | d and
    p | |constant|.  (The constant is nonzero whenever t is outside the
    excluded set, since C_r(0) is 0 or +-2.)
    """
    n, d = t.numerator, t.denominator
    c0 = int(chebyshev_c(0, r))
    out: List[ChebyshevWitness] = []
    for sign in (1, -1):
        const = d * c0 - sign * n
        if const == 0:
            raise DegenerateParameterError("t = %s is excluded" % t)
        for q in divisors(d):
            for p in divisors(const):
                if gcd(p, q) != 1:
                    continue
                for u in (Fraction(p, q), Fraction(-p, q)):
                    if chebyshev_c(u, r) == sign * t:
                        out.append(ChebyshevWitness(r, u, sign))
    return out


def _witness_prime_bound(t: Fraction) -> int:
    """Primes r beyond this bound admit no witness.

    A non-integer u needs den(u)**r = den(t); an integer witness u has
    |u| >= 3 (smaller u only produce excluded t), whence |t| = |C_r(u)| >=
    2.6**r - 1.  Either way r <= log2(max(|num t|, den t)) + 1.
    """
    h = max(abs(t.numerator), t.denominator)
    return max(3, h.bit_length())


def primitivity(t: RationalLike) -> PrimitivityReport:
    """Decide whether t is expressible as +-C_r(u) for any prime r.

    t is primitive iff no such witness exists; only primes matter since
    C_{rs} = C_r . C_s.  For circular t the report also says whether t is
    circular primitive, i.e. whether 2*(2 + t) is a rational non-square.
    """
    t = check_parameter(_frac(t))
    witnesses: List[ChebyshevWitness] = []
    for r in _primes_up_to(_witness_prime_bound(t)):
        witnesses.extend(_chebyshev_witnesses(t, r))
    cls = classify_cyclotomic(t)
    circ: Optional[bool] = None
    if cls.kind == "circular":
        circ = not is_rational_square(2 * (2 + t))
    return PrimitivityReport(
        t=t,
        kind=cls.kind,
        is_primitive=not witnesses,
        witnesses=tuple(witnesses),
        circular_primitive=circ,
    )


def maximal_decomposition(t: RationalLike) -> Tuple[int, Fraction, int]:
    """Write t = sign * C_m(u) with u primitive and m maximal.

    Returns (m, u, sign); (1, t, 1) when t itself is primitive.  Composite m
    are reached by stacking prime witnesses (C_{rs} = C_r . C_s); for odd r
    the witness sign is absorbed into u, so the final sign only records an
    unabsorbed minus in front of an even-step composition.
    """
    t = check_parameter(_frac(t))
    best = (1, t, 1)
    for r in _primes_up_to(_witness_prime_bound(t)):
        for w in _chebyshev_witnesses(t, r):
            m_inner, v, s_inner = maximal_decomposition(w.u)
            # t = w.sign * C_r(u), u = s_inner * C_{m_inner}(v)
            if r % 2 == 1:
                sign = w.sign * s_inner
            else:
                sign = w.sign
            cand = (r * m_inner, v, sign)
            key = (cand[0], cand[2], -abs(cand[1]), cand[1] > 0)
            best_key = (best[0], best[2], -abs(best[1]), best[1] > 0)
            if key > best_key:
                best = cand
    return best
