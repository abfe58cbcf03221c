"""The Laxton group: sequence classes modulo shifting.

Quotienting the sequence group by the cyclic subgroup generated by the
companion class D identifies a sequence with all of its shifts.  Coset
equality is decidable: X and Y lie in the same coset iff X*Y^{-1} is a
D-power class, and a D-power class must have the same height as the
corresponding reduced D-power (heights of reduced D-powers grow without
bound), so a bounded search settles it.  Each coset gets a canonical
representative — the shift of least (height, a0, a1) — which makes coset
objects hashable and structurally comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import ContextMismatchError, DegenerateParameterError
from .rational import format_rational, is_rational_square
from .ring import ParamPair, RationalLike, _frac
from .transforms import classify_cyclotomic
from .group import (
    GroupElement,
    check_group_context,
    class_c,
    class_w,
    class_v,
    companion_class,
    identity_class,
    maximal_decomposition,
    primitivity,
    torsion_l,
)

# Stop a height-bounded shift search only after the target height has been
# exceeded this many consecutive steps; heights of reduced D-powers grow
# geometrically but may wobble at the very start.
_HEIGHT_PATIENCE = 3


@lru_cache(maxsize=None)
def d_power_class(ctx: ParamPair, k: int) -> GroupElement:
    if k == 0:
        return identity_class(ctx)
    prev = d_power_class(ctx, k - 1 if k > 0 else k + 1)
    step = companion_class(ctx) if k > 0 else companion_class(ctx).inverse()
    return prev * step


class LaxtonWitness(NamedTuple):
    """Certificate for X = scale * Y * D**k."""

    k: int
    scale: Fraction


def laxton_eq(x: GroupElement, y: GroupElement) -> Optional[LaxtonWitness]:
    """Decide X = Y * D**k in the Laxton group; return (k, scale) or None.

    Reduces to recognizing Z = X*Y^{-1} as a D-power class.  For one-
    parameter contexts det Z must then be a rational square (det D = 1),
    which filters most misses for free.  The k-search stops in each
    direction once the reduced D-power heights exceed height(Z) stably: a
    hit forces equal reduced representatives, hence equal heights.

    The scale is the exact scalar with rep(X)*rep(Y)^{-1} = scale * D**k in
    the ring.
    """
    if x.ctx != y.ctx:
        raise ContextMismatchError("elements over %r and %r" % (x.ctx, y.ctx))
    z = x * y.inverse()
    if x.ctx.is_one_param and not is_rational_square(z.det):
        return None
    k = _find_d_power(z)
    if k is None:
        return None
    from .ring import u_pair

    zr = x.ring_element() * y.ring_element().inverse()
    uk, uk1 = u_pair(x.ctx, k)
    scale = zr.x0 / uk if uk != 0 else zr.x1 / uk1
    return LaxtonWitness(k=k, scale=scale)


def _find_d_power(z: GroupElement) -> Optional[int]:
    """The k with z = class(D**k), or None; height-bounded search."""
    target_height = z.height
    if z == identity_class(z.ctx):
        return 0
    for direction in (1, -1):
        k, exceed = 0, 0
        while exceed < _HEIGHT_PATIENCE:
            k += direction
            cand = d_power_class(z.ctx, k)
            if cand == z:
                return k
            if cand.height > target_height:
                exceed += 1
            else:
                exceed = 0
    return None


@dataclass(frozen=True)
class LaxtonElement:
    """A Laxton coset, stored by its canonical representative."""

    rep: GroupElement

    @classmethod
    def of(cls, g: GroupElement) -> "LaxtonElement":
        return cls(rep=canonical_coset_rep(g))

    @property
    def ctx(self) -> ParamPair:
        return self.rep.ctx

    def __mul__(self, other: "LaxtonElement") -> "LaxtonElement":
        return LaxtonElement.of(self.rep * other.rep)

    def inverse(self) -> "LaxtonElement":
        return LaxtonElement.of(self.rep.inverse())

    def __pow__(self, n: int) -> "LaxtonElement":
        return LaxtonElement.of(self.rep ** n)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "<coset of [%d, %d] over (%s, %s)>" % (self.rep.a0, self.rep.a1, self.ctx.T, self.ctx.Q)


def canonical_coset_rep(g: GroupElement) -> GroupElement:
    """The shift g*D**k of least (height, a0, a1): a canonical coset choice.

    Shift heights grow without bound in both directions, so the minimum sits
    in a finite window; the search extends until heights have exceeded the
    current best for several consecutive steps on each side.
    """

    def key(el: GroupElement) -> Tuple[int, int, int]:
        return (el.height, el.a0, el.a1)

    d = companion_class(g.ctx)
    dinv = d.inverse()
    best = g
    for step in (d, dinv):
        cur, exceed = g, 0
        while exceed < _HEIGHT_PATIENCE:
            cur = cur * step
            if key(cur) < key(best):
                best = cur
                exceed = 0
            elif cur.height > best.height:
                exceed += 1
            else:
                exceed = 0
    return best


def laxton_order(g: GroupElement, bound: int = 24) -> Optional[int]:
    """The order of g's coset in the Laxton group, if it is <= bound."""
    acc = g
    for k in range(1, bound + 1):
        if laxton_eq(acc, identity_class(g.ctx)) is not None:
            return k
        acc = acc * g
    return None


# ---------------------------------------------------------------------------
# torsion tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionEntry:
    element: LaxtonElement
    order: int
    coset_witness_k: int

    def to_dict(self) -> dict:
        return {
            "element": [self.element.rep.a0, self.element.rep.a1],
            "order": self.order,
            "coset_witness_k": self.coset_witness_k,
        }


@dataclass(frozen=True)
class TorsionTable:
    t: Fraction
    kind: str
    group_type: Tuple[int, ...]
    entries: Tuple[TorsionEntry, ...]
    enumerated: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "t": format_rational(self.t),
            "kind": self.kind,
            "group_type": list(self.group_type),
            "entries": [e.to_dict() for e in self.entries],
            "enumerated": self.enumerated,
            "note": self.note,
        }


def _entry(g: GroupElement, order_bound: int = 24) -> TorsionEntry:
    el = LaxtonElement.of(g)
    order = laxton_order(g, bound=order_bound)
    if order is None:
        raise ArithmeticError("element %r is not torsion within bound %d" % (g, order_bound))
    wit = laxton_eq(g, el.rep)
    assert wit is not None
    return TorsionEntry(element=el, order=order, coset_witness_k=wit.k)


def laxton_torsion(t: RationalLike) -> TorsionTable:
    """The torsion subgroup of the Laxton group over t.

    Primitive t: the classes {I, C, W, V} and, in the cyclotomic cases, the
    order 3/4/6 classes and their W-translates, giving Z2xZ2, Z2xZ4 (circular
    primitive) or Z2xZ6 (cubic).  A circular primitive-but-not-circular-
    primitive t has torsion Z_{2**(l+2)} x Z2 where the circular associate is
    a = C_{2**l}(v), reported structurally.  Non-primitive t = +-C_m(u) with
    u primitive has torsion m times larger, type Z_{2m} x (Z2|Z4|Z6); the
    cyclic kernel cosets Phi_m(D_u**k) are enumerated for the + sign.
    """
    t = _frac(t)
    ctx = ParamPair.one_param(t)
    check_group_context(ctx)
    report = primitivity(t)
    cls = classify_cyclotomic(t)

    if report.is_primitive:
        base = [identity_class(ctx), class_c(ctx), class_w(t), class_v(t)]
        if cls.kind == "cubic":
            extra = [g for g, _ in torsion_l(t)[1:]]
            w = class_w(t)
            elements = base + extra + [w * g for g in extra]
            return _enumerated_table(t, "primitive cubic", (2, 6), elements)
        if cls.kind == "circular":
            if report.circular_primitive:
                extra = [g for g, _ in torsion_l(t)[1:]]
                w = class_w(t)
                elements = base + extra + [w * g for g in extra]
                return _enumerated_table(t, "primitive circular (circular primitive)", (2, 4), elements)
            # t fails circular primitivity, so one of the associates +-a is a
            # 2-power Chebyshev value C_{2**l}(v) with v primitive.
            chain = None
            for cand in (cls.a, -cls.a):
                m, v, sign = maximal_decomposition(cand)
                if sign == 1 and m >= 2 and m & (m - 1) == 0:
                    if chain is None or m > chain[0]:
                        chain = (m, v)
            if chain is None:
                return TorsionTable(
                    t=t, kind="primitive circular (degenerate chain)", group_type=(),
                    entries=(), enumerated=False,
                    note="no associate decomposed as a 2-power Chebyshev value",
                )
            level = chain[0].bit_length() - 1
            return TorsionTable(
                t=t,
                kind="primitive circular (not circular primitive)",
                group_type=(2 ** (level + 2), 2),
                entries=(),
                enumerated=False,
                note="structural only: associate a = C_{2^%d}(%s)" % (level, format_rational(chain[1])),
            )
        return _enumerated_table(t, "primitive noncyclotomic", (2, 2), base)

    # non-primitive: t = sign * C_m(u), u primitive, m maximal
    m, u, sign = maximal_decomposition(t)
    sub = primitivity(u)
    sub_cls = classify_cyclotomic(u)
    if sub_cls.kind == "cubic":
        group_type: Tuple[int, ...] = (2 * m, 6)
        kind = "non-primitive over cubic base"
    elif sub_cls.kind == "circular" and sub.circular_primitive:
        group_type = (2 * m, 4)
        kind = "non-primitive over circular primitive base"
    elif sub_cls.kind == "circular":
        group_type = ()
        kind = "non-primitive over degenerate circular base"
    else:
        group_type = (2 * m, 2)
        kind = "non-primitive over noncyclotomic base"
    if sign != 1:
        return TorsionTable(
            t=t, kind=kind + " (twin side)", group_type=group_type, entries=(),
            enumerated=False,
            note="t = -C_%d(%s); kernel cosets enumerated only for the + sign" % (m, format_rational(u)),
        )
    entries = tuple(_entry(g, order_bound=2 * m) for g in xi_n_kernel(u, m))
    return TorsionTable(
        t=t, kind=kind, group_type=group_type, entries=entries, enumerated=True,
        note="kernel cosets of the degree-%d quotient onto the group over %s" % (m, format_rational(u)),
    )


def _enumerated_table(t: Fraction, kind: str, group_type: Tuple[int, ...], elements: List[GroupElement]) -> TorsionTable:
    entries: Dict[LaxtonElement, TorsionEntry] = {}
    for g in elements:
        e = _entry(g)
        entries.setdefault(e.element, e)
    expected = 1
    for n in group_type:
        expected *= n
    if len(entries) != expected:
        raise ArithmeticError(
            "torsion enumeration over t = %s found %d distinct cosets, expected %d" % (t, len(entries), expected)
        )
    ordered = sorted(entries.values(), key=lambda e: (e.order, e.element.rep.a0, e.element.rep.a1))
    return TorsionTable(t=t, kind=kind, group_type=group_type, entries=tuple(ordered), enumerated=True)


# ---------------------------------------------------------------------------
# the quotient homomorphisms
# ---------------------------------------------------------------------------


def xi_hom(x: GroupElement, target: ParamPair) -> LaxtonElement:
    """The 2-to-1 homomorphism from the Laxton group over t = T**2/Q - 2
    onto the one over (T, Q); kernel {I, W}.

    On representatives it inverts the even/odd split: [x0, x1] maps to the
    coset of [T*x0, Q*(x0 + x1)].
    """
    check_group_context(target)
    if not x.ctx.is_one_param or x.ctx.T != target.t:
        raise ContextMismatchError("element over %r is not a split class for %r" % (x.ctx, target))
    rep = GroupElement.from_pair(target, target.T * x.a0, target.Q * (x.a0 + x.a1))
    return LaxtonElement.of(rep)


def xi_n_kernel(t: RationalLike, n: int) -> Tuple[GroupElement, ...]:
    """Kernel representatives of the degree-n quotient G(C_n(t)) -> G(t).

    The kernel is cyclic of order n, generated by the image of D_t; coset k
    is the class of [U_k(t), U_{n+k}(t)] over t_n = C_n(t).
    """
    from .ring import chebyshev_c, chebyshev_u

    t = _frac(t)
    if n < 1:
        raise DegenerateParameterError("kernel needs n >= 1, got %d" % n)
    un = chebyshev_u(t, n)
    if un == 0:
        raise DegenerateParameterError("U_%d(%s) = 0; quotient undefined" % (n, t))
    ctx_n = ParamPair.one_param(chebyshev_c(t, n))
    out = []
    for k in range(n):
        if k == 0:
            out.append(identity_class(ctx_n))
        else:
            out.append(GroupElement.from_pair(ctx_n, chebyshev_u(t, k), chebyshev_u(t, n + k)))
    return tuple(out)
