"""The commutative matrix ring attached to a second-order linear recursion.

A context (T, Q) with T, Q nonzero rationals fixes the recursion
x_{n+1} = T*x_n - Q*x_{n-1} and its companion matrix

    D = [[0, -Q],
         [1,  T]].

The 2x2 rational matrices commuting with D form a commutative ring whose
elements are determined by their second row [x0, x1]; the full matrix is

    X = [[-Q*x_{-1}, -Q*x0],
         [x0,        x1  ]],   x_{-1} = (T*x0 - x1)/Q.

Each element carries the doubly infinite solution {x_n} of the recursion via
[x_n, x_{n+1}] = [x0, x1] * D^n, so ring arithmetic is exact arithmetic on
whole sequences.  The one-parameter ring R(t) is the context (t, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .errors import ContextMismatchError, InvalidContextError, SingularElementError

RationalLike = Union[Fraction, int, str]

Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def _frac(x: RationalLike) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True)
class ParamPair:
    """A recursion context (T, Q), both nonzero.

    The derived quantity t = T**2/Q - 2 is the parameter of the one-parameter
    ring the even/odd split lands in; discriminant = T**2 - 4*Q.
    """

    T: Fraction
    Q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "T", _frac(self.T))
        object.__setattr__(self, "Q", _frac(self.Q))
        if self.T == 0 or self.Q == 0:
            raise InvalidContextError("context requires T != 0 and Q != 0, got (%s, %s)" % (self.T, self.Q))

    @classmethod
    def one_param(cls, t: RationalLike) -> "ParamPair":
        """The context (t, 1) of the one-parameter ring R(t)."""
        return cls(_frac(t), Fraction(1))

    @property
    def is_one_param(self) -> bool:
        return self.Q == 1

    @property
    def t(self) -> Fraction:
        """Split parameter T**2/Q - 2 (the context (t,1) has .t == t**2 - 2)."""
        return self.T * self.T / self.Q - 2

    @property
    def discriminant(self) -> Fraction:
        return self.T * self.T - 4 * self.Q

    def to_dict(self) -> dict:
        if self.is_one_param:
            return {"t": str(self.T)}
        return {"T": str(self.T), "Q": str(self.Q)}

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "ParamPair(%s, %s)" % (self.T, self.Q)


def _mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


_MAT_ONE: Matrix2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def _mat_pow(m: Matrix2, n: int) -> Matrix2:
    out = _MAT_ONE
    while n:
        if n & 1:
            out = _mat_mul(out, m)
        m = _mat_mul(m, m)
        n >>= 1
    return out


def companion_matrix(ctx: ParamPair) -> Matrix2:
    return ((Fraction(0), -ctx.Q), (Fraction(1), ctx.T))


def _companion_power(ctx: ParamPair, n: int) -> Matrix2:
    """D^n for any integer n, by exact binary exponentiation."""
    if n >= 0:
        return _mat_pow(companion_matrix(ctx), n)
    # D^-1 = [[T/Q, 1], [-1/Q, 0]]  (det D = Q != 0)
    dinv: Matrix2 = ((ctx.T / ctx.Q, Fraction(1)), (Fraction(-1) / ctx.Q, Fraction(0)))
    return _mat_pow(dinv, -n)


def u_pair(ctx: ParamPair, n: int) -> Tuple[Fraction, Fraction]:
    """(U_n, U_{n+1}) for the fundamental solution U_0 = 0, U_1 = 1.

    D^n = [[-Q*U_{n-1}, -Q*U_n], [U_n, U_{n+1}]], so the pair is the second
    row of D^n.
    """
    row = _companion_power(ctx, n)[1]
    return row[0], row[1]


@dataclass(frozen=True)
class RingElement:
    """An element of the commuting ring over ctx, stored by its second row."""

    ctx: ParamPair
    x0: Fraction
    x1: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", _frac(self.x0))
        object.__setattr__(self, "x1", _frac(self.x1))

    # -- basic invariants -------------------------------------------------

    @property
    def det(self) -> Fraction:
        x0, x1 = self.x0, self.x1
        return x1 * x1 - self.ctx.T * x1 * x0 + self.ctx.Q * x0 * x0

    @property
    def trace(self) -> Fraction:
        return 2 * self.x1 - self.ctx.T * self.x0

    @property
    def x_minus1(self) -> Fraction:
        return (self.ctx.T * self.x0 - self.x1) / self.ctx.Q

    @property
    def matrix(self) -> Matrix2:
        q = self.ctx.Q
        return ((-q * self.x_minus1, -q * self.x0), (self.x0, self.x1))

    def is_zero(self) -> bool:
        return self.x0 == 0 and self.x1 == 0

    # -- the carried sequence ---------------------------------------------

    def term(self, n: int) -> Fraction:
        """x_n, exactly, for any integer n (binary powering of D)."""
        un, un1 = u_pair(self.ctx, n)
        # x_n = U_n*x1 - Q*U_{n-1}*x0 and Q*U_{n-1} = T*U_n - U_{n+1}
        return un * self.x1 - (self.ctx.T * un - un1) * self.x0

    def terms(self, start: int, stop: int) -> Tuple[Fraction, ...]:
        """x_n for start <= n < stop, via one powering then the recursion."""
        if stop <= start:
            return ()
        a, b = self.term(start), self.term(start + 1)
        out = [a]
        for _ in range(start + 1, stop):
            out.append(b)
            a, b = b, self.ctx.T * b - self.ctx.Q * a
        return tuple(out[: stop - start])

    def shift(self, k: int) -> "RingElement":
        """X*D^k, i.e. the carried sequence shifted by k."""
        return RingElement(self.ctx, self.term(k), self.term(k + 1))

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "RingElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("elements over %r and %r" % (self.ctx, other.ctx))

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ctx, self.x0 + other.x0, self.x1 + other.x1)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ctx, self.x0 - other.x0, self.x1 - other.x1)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ctx, -self.x0, -self.x1)

    def __mul__(self, other: Union["RingElement", RationalLike]) -> "RingElement":
        if isinstance(other, RingElement):
            self._check(other)
            x0, x1 = self.x0, self.x1
            y0, y1 = other.x0, other.x1
            return RingElement(
                self.ctx,
                x1 * y0 + x0 * y1 - self.ctx.T * x0 * y0,
                x1 * y1 - self.ctx.Q * x0 * y0,
            )
        return RingElement(self.ctx, _frac(other) * self.x0, _frac(other) * self.x1)

    def __rmul__(self, other: RationalLike) -> "RingElement":
        return self.__mul__(other)

    def inverse(self) -> "RingElement":
        d = self.det
        if d == 0:
            raise SingularElementError("element [%s, %s] has det 0" % (self.x0, self.x1))
        return RingElement(self.ctx, -self.x0 / d, (self.x1 - self.ctx.T * self.x0) / d)

    def conjugate(self) -> "RingElement":
        """(det X) * X^{-1}; carries the sequence {-Q^n x_{-n}}."""
        if self.det == 0:
            raise SingularElementError("conjugate of a singular element")
        return RingElement(self.ctx, -self.x0, self.x1 - self.ctx.T * self.x0)

    def __pow__(self, n: int) -> "RingElement":
        base = self if n >= 0 else self.inverse()
        out = identity(self.ctx)
        k = abs(n)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "[%s, %s] over (%s, %s)" % (self.x0, self.x1, self.ctx.T, self.ctx.Q)


def make_element(ctx: ParamPair, x0: RationalLike, x1: RationalLike) -> RingElement:
    return RingElement(ctx, _frac(x0), _frac(x1))


def seq_term(x: RingElement, n: int) -> Fraction:
    return x.term(n)


def identity(ctx: ParamPair) -> RingElement:
    return RingElement(ctx, Fraction(0), Fraction(1))


def companion(ctx: ParamPair) -> RingElement:
    """D itself; its carried sequence is {U_{n+1}}."""
    return RingElement(ctx, Fraction(1), ctx.T)


def elem_c(ctx: ParamPair) -> RingElement:
    """[2, T]: trace of D^n as a sequence; the unique order-2 class."""
    return RingElement(ctx, Fraction(2), ctx.T)


def _require_one_param(ctx: ParamPair, what: str) -> None:
    if not ctx.is_one_param:
        raise InvalidContextError("%s is defined in one-parameter contexts (Q = 1), got %r" % (what, ctx))


def elem_w(ctx: ParamPair) -> RingElement:
    """[-1, 1] in R(t): one square root of the D^{-1} class; det W = 2 + t."""
    _require_one_param(ctx, "W")
    return RingElement(ctx, Fraction(-1), Fraction(1))


def elem_v(ctx: ParamPair) -> RingElement:
    """[1, 1] in R(t): the other square root of the D^{-1} class; det V = 2 - t."""
    _require_one_param(ctx, "V")
    return RingElement(ctx, Fraction(1), Fraction(1))


def _u_pair_t(t: Fraction, n: int) -> Tuple[Fraction, Fraction]:
    """(U_n(t), U_{n+1}(t)) for any rational t, without context validation.

    Chebyshev evaluation is plain polynomial arithmetic and stays defined at
    the parameters (0, +-1, +-2) the ring constructor rejects.
    """
    if n >= 0:
        m: Matrix2 = ((Fraction(0), Fraction(-1)), (Fraction(1), t))
    else:
        m = ((t, Fraction(1)), (Fraction(-1), Fraction(0)))
        n = -n
    row = _mat_pow(m, n)[1]
    return row[0], row[1]


def chebyshev_u(t: RationalLike, n: int) -> Fraction:
    """U_n(t): U_0 = 0, U_1 = 1, U_{n+1} = t*U_n - U_{n-1}; U_{-n} = -U_n."""
    return _u_pair_t(_frac(t), n)[0]


def chebyshev_c(t: RationalLike, n: int) -> Fraction:
    """C_n(t) = trace of D_t^n: C_0 = 2, C_1 = t, same recursion; C_{-n} = C_n."""
    un, un1 = _u_pair_t(_frac(t), n)
    # C_n = U_{n+1} - U_{n-1} and U_{n-1} = t*U_n - U_{n+1}
    return 2 * un1 - _frac(t) * un
