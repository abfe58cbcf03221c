"""Isomorphisms and reparametrizations between recursion rings.

The maps implemented here are all exact ring isomorphisms (conjugations by
an explicit 2x2 matrix), written out on second rows:

* phi:    R(T, Q) -> R(t, 1) with t = T**2/Q - 2, the even/odd split;
* psi:    R(t) -> R(-t), transposition, the twin involution;
* phi_r:  R(t) -> R(t_r) with t_r = C_r(t), the index-r decimation;
* theta_circular / theta_cubic: the sporadic isomorphisms R(t) -> R(a)
  that exist exactly when t**2 + a**2 = 4, resp. when t and a are
  C_3-associates (t**2 - 4 = -3*f**2, a = (-t +- 3f)/2).

Alongside them live the parameter-level constructions: reduction of a pair
(T, Q) to its two simple integer pairs, twin pairs, the cyclotomic
classification of t, and the sequence recombination rules that rebuild
solutions of a two-parameter recursion from the split one-parameter data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple

from .errors import ContextMismatchError, DegenerateParameterError, SingularElementError
from .rational import is_rational_square, rational_sqrt, squarefree_decompose
from .ring import (
    ParamPair,
    RationalLike,
    RingElement,
    chebyshev_c,
    chebyshev_u,
    _frac,
)

EXCLUDED_PARAMS = (0, 1, -1, 2, -2)


def check_parameter(t: Fraction, what: str = "t") -> Fraction:
    """Reject the degenerate parameters t in {0, +-1, +-2}.

    At t = +-2 the discriminant vanishes; at t in {0, +-1} the companion
    matrix has finite projective order, so the groups built downstream
    collapse.  Plain ring arithmetic does not call this.
    """
    t = _frac(t)
    if t in EXCLUDED_PARAMS:
        raise DegenerateParameterError("%s = %s is excluded (needs t outside {0, +-1, +-2})" % (what, t))
    return t


# ---------------------------------------------------------------------------
# parameter-level constructions
# ---------------------------------------------------------------------------


def is_simple(T: int, Q: int) -> bool:
    """A pair of integers (T, Q) is simple when no prime of T has its square in Q."""
    if T != int(T) or Q != int(Q):
        return False
    T, Q = int(T), int(Q)
    if T == 0 or Q == 0:
        return False
    from .rational import factorize

    return all(Q % (p * p) != 0 for p in factorize(T))


def simple_reduce(T: RationalLike, Q: RationalLike) -> Tuple[ParamPair, ParamPair]:
    """The two simple integer pairs similar to (T, Q).

    Fully reduce T**2/Q = a*P**2/R with a squarefree and gcd(P, R) =
    gcd(a, R) = 1; the simple pairs are (+-a*P, a*R).  Both are verified
    simple and similar before being returned.
    """
    ratio = _frac(T) ** 2 / _frac(Q)
    a, p_part = squarefree_decompose(ratio.numerator)
    r_part = ratio.denominator
    ts, qs = abs(a) * p_part, a * r_part
    plus, minus = ParamPair(Fraction(ts), Fraction(qs)), ParamPair(Fraction(-ts), Fraction(qs))
    for pair in (plus, minus):
        if not is_simple(int(pair.T), int(pair.Q)) or pair.t != ParamPair(_frac(T), _frac(Q)).t:
            raise ArithmeticError("simple reduction failed for (%s, %s)" % (T, Q))
    return plus, minus


def twin_pair(T: RationalLike, Q: RationalLike) -> ParamPair:
    """The twin (Delta, -Delta*Q) of (T, Q), where Delta = T**2 - 4Q.

    The twin's split parameter is -t; twinning is an involution up to
    similarity.
    """
    ctx = ParamPair(_frac(T), _frac(Q))
    delta = ctx.discriminant
    if delta == 0:
        raise DegenerateParameterError("(T, Q) with T**2 = 4Q has no twin")
    return ParamPair(delta, -delta * ctx.Q)


def simple_twin(T: RationalLike, Q: RationalLike) -> ParamPair:
    """The positive simple pair similar to the twin of (T, Q)."""
    tw = twin_pair(T, Q)
    return simple_reduce(tw.T, tw.Q)[0]


@dataclass(frozen=True)
class CyclotomicClass:
    """Result of classifying t: "generic", "circular" or "cubic".

    circular: t**2 + a**2 = 4 has a rational solution; a > 0 canonical.
    cubic:    t**2 - 4 = -3*f**2 has one; f > 0, associates are the two
              roots a = (-t +- 3f)/2 of C_3(a) = C_3(t), listed +f first.
    The two cases exclude each other (3 is not a rational square).
    """

    kind: str
    a: Optional[Fraction] = None
    f: Optional[Fraction] = None
    associates: Tuple[Fraction, ...] = ()


def classify_cyclotomic(t: RationalLike) -> CyclotomicClass:
    t = check_parameter(_frac(t))
    square = rational_sqrt(4 - t * t)
    if square is not None and square != 0:
        return CyclotomicClass(kind="circular", a=square)
    f = rational_sqrt((4 - t * t) / 3)
    if f is not None and f != 0:
        return CyclotomicClass(kind="cubic", f=f, associates=((-t + 3 * f) / 2, (-t - 3 * f) / 2))
    return CyclotomicClass(kind="generic")


def element_with_trace(t: RationalLike, a: RationalLike) -> Optional[RingElement]:
    """The det-1 element of R(t) with trace a, if one exists.

    It exists iff (a**2 - 4)/(t**2 - 4) is a rational square; then
    x0**2 = (a**2 - 4)/(t**2 - 4) and 2*x1 = t*x0 + a.  Unique up to
    inverse (the two sign choices of x0).
    """
    t, a = _frac(t), _frac(a)
    if t * t == 4:
        raise DegenerateParameterError("t = +-2 has vanishing discriminant")
    x0 = rational_sqrt((a * a - 4) / (t * t - 4))
    if x0 is None:
        return None
    return RingElement(ParamPair.one_param(t), x0, (t * x0 + a) / 2)


# ---------------------------------------------------------------------------
# ring isomorphisms
# ---------------------------------------------------------------------------


def phi(x: RingElement) -> RingElement:
    """The split R(T, Q) -> R(t), t = T**2/Q - 2: T*phi(X) = [Q*x0, x2].

    Exactly multiplicative (conjugation by [[Q, -Q], [0, T]]); sends D**2 to
    Q*D_t, so even/odd subsequences of X become one-parameter solutions.
    """
    ctx = x.ctx
    return RingElement(
        ParamPair.one_param(ctx.t),
        ctx.Q * x.x0 / ctx.T,
        (ctx.T * x.x1 - ctx.Q * x.x0) / ctx.T,
    )


def phi_inverse(y: RingElement, target: ParamPair) -> RingElement:
    """Inverse of the split: [y0, y1] over t = target.t maps to [T*y0/Q, y0 + y1]."""
    if not y.ctx.is_one_param or y.ctx.T != target.t:
        raise ContextMismatchError("element over %r is not in the image ring of %r" % (y.ctx, target))
    return RingElement(target, target.T * y.x0 / target.Q, y.x0 + y.x1)


def _one_param_t(x: RingElement, what: str) -> Fraction:
    if not x.ctx.is_one_param:
        raise ContextMismatchError("%s needs a one-parameter context, got %r" % (what, x.ctx))
    return x.ctx.T


def psi(x: RingElement) -> RingElement:
    """Transposition R(t) -> R(-t): [x0, x1] -> [-x0, x1].

    Carries {x_n} to {(-1)**(n+1) x_n}; swaps W and V and sends C_t to -C_{-t}.
    """
    t = _one_param_t(x, "psi")
    return RingElement(ParamPair.one_param(-t), -x.x0, x.x1)


def phi_r(x: RingElement, r: int) -> RingElement:
    """Decimation R(t) -> R(t_r), t_r = C_r(t): U_r(t)*phi_r(X) = [x0, x_r].

    Conjugation by [[1, -U_{r-1}], [0, U_r]]; sends D**r to D_{t_r}.
    Needs U_r(t) != 0 (guaranteed for t outside the excluded set).
    """
    t = _one_param_t(x, "phi_r")
    if r < 1:
        raise DegenerateParameterError("phi_r needs r >= 1, got %d" % r)
    ur = chebyshev_u(t, r)
    if ur == 0:
        raise DegenerateParameterError("U_%d(%s) = 0; decimation undefined" % (r, t))
    return RingElement(ParamPair.one_param(chebyshev_c(t, r)), x.x0 / ur, x.term(r) / ur)


def phi_r_inverse(y: RingElement, t: RationalLike, r: int) -> RingElement:
    """Inverse decimation: [y0, y1] over C_r(t) maps to [U_r*y0, y1 + U_{r-1}*y0]."""
    t = _frac(t)
    if not y.ctx.is_one_param or y.ctx.T != chebyshev_c(t, r):
        raise ContextMismatchError("element over %r is not in the image ring of t = %s, r = %d" % (y.ctx, t, r))
    ur = chebyshev_u(t, r)
    if ur == 0:
        raise DegenerateParameterError("U_%d(%s) = 0; decimation undefined" % (r, t))
    return RingElement(ParamPair.one_param(t), ur * y.x0, y.x1 + chebyshev_u(t, r - 1) * y.x0)


def theta_circular(x: RingElement, a: Optional[RationalLike] = None) -> RingElement:
    """The circular isomorphism R(t) -> R(a), t**2 + a**2 = 4:

        theta(X) = (1/t) * [-a*x0, x2 - x0].

    Composition Phi_{2,a}^{-1} . Psi . Phi_{2,t}, hence exactly
    multiplicative; sends D_t**2 to -D_a**2 and D_t*C_t to -a*D_a.
    """
    t = _one_param_t(x, "theta_circular")
    cls = classify_cyclotomic(t)
    if cls.kind != "circular":
        raise DegenerateParameterError("t = %s is not circular" % t)
    a = cls.a if a is None else _frac(a)
    if a * a + t * t != 4:
        raise DegenerateParameterError("a = %s does not satisfy t**2 + a**2 = 4" % a)
    return RingElement(ParamPair.one_param(a), -a * x.x0 / t, (x.term(2) - x.x0) / t)


def theta_cubic(x: RingElement, a: Optional[RationalLike] = None) -> RingElement:
    """The cubic isomorphism R(t) -> R(a) for C_3-associates a of t:

        (t**2 - 1) * theta(X) = [(a**2 - 1)*x0, a*x0 + x3].

    Composition Phi_{3,a}^{-1} . Phi_{3,t} (both decimations land in
    R(C_3(t)) = R(C_3(a))), hence exactly multiplicative; with the
    canonical associate a = (-t + 3f)/2 it sends D_t*S_t to D_a.
    """
    t = _one_param_t(x, "theta_cubic")
    cls = classify_cyclotomic(t)
    if cls.kind != "cubic":
        raise DegenerateParameterError("t = %s is not cubic" % t)
    a = cls.associates[0] if a is None else _frac(a)
    if a not in cls.associates:
        raise DegenerateParameterError("a = %s is not an associate of t = %s" % (a, t))
    return RingElement(
        ParamPair.one_param(a),
        (a * a - 1) * x.x0 / (t * t - 1),
        (a * x.x0 + x.term(3)) / (t * t - 1),
    )


def cubic_roots_of_unity(t: RationalLike) -> Tuple[RingElement, RingElement]:
    """The two nontrivial cube roots of the identity in R(t), cubic t only:

        S = -(1/2f) * [2, t+f],    R = (1/2f) * [2, t-f],

    with det S = det R = 1, trace -1, S*R = 1 and S**3 = R**3 = 1.
    """
    t = _frac(t)
    cls = classify_cyclotomic(t)
    if cls.kind != "cubic":
        raise DegenerateParameterError("t = %s is not cubic" % t)
    f = cls.f
    ctx = ParamPair.one_param(t)
    s = RingElement(ctx, Fraction(2), t + f) * (Fraction(-1, 2) / f)
    r = RingElement(ctx, Fraction(2), t - f) * (Fraction(1, 2) / f)
    return s, r


# ---------------------------------------------------------------------------
# sequence recombination
# ---------------------------------------------------------------------------

SequenceFn = Callable[[int], Fraction]


@dataclass(frozen=True)
class RecombinedSequences:
    """Solutions over (T, Q) and its simple twin rebuilt from a split solution.

    y and z are the two recombinations over `target`; y_twin and z_twin the
    ones over `twin`.  All four are index -> value functions, exact for any
    integer index, and satisfy w_{n+1} = T*w_n - Q*w_{n-1} of their context.
    """

    target: ParamPair
    twin: ParamPair
    y: SequenceFn
    z: SequenceFn
    y_twin: SequenceFn
    z_twin: SequenceFn


def _sign(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def recombine(x: RingElement, target: ParamPair) -> RecombinedSequences:
    """Interleave a one-parameter solution into two-parameter ones.

    x lives over (t, 1) with t = target.t = T**2/Q - 2.  Writing x_k for
    x.term(k), the four rebuilt sequences are

        y_{2k}   = Q**(k-1) * x_k
        y_{2k-1} = Q**(k-1) * (x_k + x_{k-1}) / T
        z_{2k}   = Q**(k-1) * (x_{k+1} - x_{k-1})
        z_{2k-1} = T * Q**(k-2) * (x_k - x_{k-1})

    and, over the simple twin (Th, Qh),

        yh_{2k}   = (-1)**k * Qh**(k-1) * x_k
        yh_{2k-1} = (-1)**k * Qh**(k-1) * (x_k - x_{k-1}) / Th
        zh_{2k}   = (-1)**(k+1) * Qh**(k-1) * (x_{k+1} - x_{k-1})
        zh_{2k-1} = (-1)**k * Th * Qh**(k-2) * (x_k + x_{k-1})
    """
    t = _one_param_t(x, "recombine")
    if target.t != t:
        raise ContextMismatchError("target %r does not split to t = %s" % (target, t))
    tw = simple_twin(target.T, target.Q)
    T, Q = target.T, target.Q
    Th, Qh = tw.T, tw.Q

    def y(n: int) -> Fraction:
        if n % 2 == 0:
            k = n // 2
            return Q ** (k - 1) * x.term(k)
        k = (n + 1) // 2
        return Q ** (k - 1) * (x.term(k) + x.term(k - 1)) / T

    def z(n: int) -> Fraction:
        if n % 2 == 0:
            k = n // 2
            return Q ** (k - 1) * (x.term(k + 1) - x.term(k - 1))
        k = (n + 1) // 2
        return T * Q ** (k - 2) * (x.term(k) - x.term(k - 1))

    def y_twin(n: int) -> Fraction:
        if n % 2 == 0:
            k = n // 2
            return _sign(k) * Qh ** (k - 1) * x.term(k)
        k = (n + 1) // 2
        return _sign(k) * Qh ** (k - 1) * (x.term(k) - x.term(k - 1)) / Th

    def z_twin(n: int) -> Fraction:
        if n % 2 == 0:
            k = n // 2
            return _sign(k + 1) * Qh ** (k - 1) * (x.term(k + 1) - x.term(k - 1))
        k = (n + 1) // 2
        return _sign(k) * Th * Qh ** (k - 2) * (x.term(k) + x.term(k - 1))

    return RecombinedSequences(target=target, twin=tw, y=y, z=z, y_twin=y_twin, z_twin=z_twin)


def recombine_circular(x: SequenceFn, t: RationalLike, a: Optional[RationalLike] = None) -> SequenceFn:
    """Rewrite a solution over circular t as one over the associate a:

        xh_{2k}   = (-1)**(k-1) * x_{2k}
        xh_{2k+1} = (-1)**k * (x_{2k+2} - x_{2k}) / a

    The result is a scalar multiple of the theta_circular image, so it
    satisfies the a-recursion exactly.
    """
    t = _frac(t)
    cls = classify_cyclotomic(t)
    if cls.kind != "circular":
        raise DegenerateParameterError("t = %s is not circular" % t)
    a = cls.a if a is None else _frac(a)
    if a * a + t * t != 4:
        raise DegenerateParameterError("a = %s does not satisfy t**2 + a**2 = 4" % a)

    def xh(n: int) -> Fraction:
        if n % 2 == 0:
            k = n // 2
            return -_sign(k) * x(n)
        k = (n - 1) // 2
        return _sign(k) * (x(n + 1) - x(n - 1)) / a

    return xh


def recombine_cubic(x: SequenceFn, t: RationalLike, a: Optional[RationalLike] = None) -> SequenceFn:
    """Rewrite a solution over cubic t as one over an associate a:

        xh_{3k}   = x_{3k}
        xh_{3k+1} = (a*x_{3k} + x_{3k+3}) / (a**2 - 1)
        xh_{3k-1} = (x_{3k-3} + a*x_{3k}) / (a**2 - 1)

    A scalar multiple of the theta_cubic image (scale (t**2-1)/(a**2-1)).
    """
    t = _frac(t)
    cls = classify_cyclotomic(t)
    if cls.kind != "cubic":
        raise DegenerateParameterError("t = %s is not cubic" % t)
    a = cls.associates[0] if a is None else _frac(a)
    if a not in cls.associates:
        raise DegenerateParameterError("a = %s is not an associate of t = %s" % (a, t))
    denom = a * a - 1

    def xh(n: int) -> Fraction:
        if n % 3 == 0:
            return x(n)
        if n % 3 == 1:
            return (a * x(n - 1) + x(n + 2)) / denom
        return (x(n - 2) + a * x(n + 1)) / denom

    return xh
