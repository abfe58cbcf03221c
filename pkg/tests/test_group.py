"""Sequence-group layer: reduction to canonical coprime pairs, group laws,
square roots, torsion and Chebyshev primitivity."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seqlab.errors import DegenerateParameterError, SingularElementError
from seqlab.ring import ParamPair, chebyshev_c, make_element
from seqlab.group import (
    GroupElement,
    class_c,
    class_v,
    class_w,
    companion_class,
    group_sqrt,
    identity_class,
    maximal_decomposition,
    primitivity,
    reduce_element,
    torsion_l,
)

F = Fraction

T3 = ParamPair.one_param(3)

small_rationals = st.fractions(min_value=-8, max_value=8, max_denominator=5)

group_ts = st.sampled_from([F(3), F(-3), F(19, 3), F(6, 5), F(11, 7), F(7, 2), F(5)])


@st.composite
def group_elements(draw, ts=group_ts):
    ctx = ParamPair.one_param(draw(ts))
    a0 = draw(small_rationals)
    a1 = draw(small_rationals)
    det = a1 * a1 - ctx.T * a0 * a1 + a0 * a0
    if det == 0:
        a0, a1 = 0, 1
    return GroupElement.from_pair(ctx, a0, a1)


def test_reduction_normal_form():
    x = GroupElement.from_pair(T3, F(2, 3), F(-4, 5))
    assert (x.a0, x.a1) == (-5, 6)
    assert GroupElement.from_pair(T3, 10, 15) == GroupElement.from_pair(T3, 2, 3)
    assert GroupElement.from_pair(T3, -2, -3) == GroupElement.from_pair(T3, 2, 3)
    # sign rule: a1 > 0, or a1 == 0 and a0 > 0
    x = GroupElement.from_pair(T3, -7, 0)
    assert (x.a0, x.a1) == (1, 0)
    x = GroupElement.from_pair(T3, -3, -7)
    assert (x.a0, x.a1) == (3, 7)
    x = GroupElement.from_pair(T3, 1, -1)
    assert (x.a0, x.a1) == (-1, 1)


def test_from_pair_rejects():
    # at t = 3 the det form is anisotropic over Q, so only (0, 0) is singular
    with pytest.raises(SingularElementError):
        GroupElement.from_pair(T3, 0, 0)
    # over (5, 4) the discriminant 9 is a square and [1, 4] has det 0
    with pytest.raises(SingularElementError):
        GroupElement.from_pair(ParamPair(5, 4), 1, 4)


def test_excluded_parameter_rejected():
    for t in (0, 1, -1, 2, -2):
        if t == 0:
            continue
        with pytest.raises(DegenerateParameterError):
            GroupElement.from_pair(ParamPair.one_param(t), 1, 4)
    # two-parameter contexts whose split parameter is excluded fail too
    with pytest.raises(DegenerateParameterError):
        GroupElement.from_pair(ParamPair(2, 1), 1, 4)  # t = 2
    with pytest.raises(DegenerateParameterError):
        GroupElement.from_pair(ParamPair(1, 1), 1, 4)  # t = -1
    # while a generic two-parameter context works
    GroupElement.from_pair(ParamPair(5, 3), 1, 4)


@given(group_elements(), st.data())
def test_group_laws(x, data):
    ctx = x.ctx
    y = data.draw(group_elements(ts=st.just(ctx.T)))
    z = data.draw(group_elements(ts=st.just(ctx.T)))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * identity_class(ctx) == x
    assert x * x.inverse() == identity_class(ctx)
    assert (x ** 3) == x * x * x
    assert (x ** -2) == (x.inverse()) ** 2
    assert x ** 0 == identity_class(ctx)


@given(group_elements())
def test_reduce_element_consistent(x):
    assert reduce_element(x.ring_element()) == x
    assert reduce_element(F(7, 3) * x.ring_element()) == x


def test_det_is_class_invariant_up_to_squares():
    x = GroupElement.from_pair(T3, 1, 5)
    assert x.det == 25 - 15 + 1
    y = GroupElement.from_pair(T3, 2, 10)
    assert y == x


@given(group_elements())
@settings(max_examples=60)
def test_sqrt_of_square(x):
    roots = group_sqrt(x * x)
    c = class_c(x.ctx)
    assert set(roots) == {x, c * x}


@given(group_elements())
@settings(max_examples=60)
def test_sqrt_roots_square_back(x):
    for r in group_sqrt(x * x):
        assert r * r == x * x


def test_sqrt_nonsquare_det_empty():
    # det[1, 1] = 2 - t = -1 at t = 3: not a rational square
    assert group_sqrt(GroupElement.from_pair(T3, 1, 1)) == ()
    assert group_sqrt(GroupElement.from_pair(T3, 1, 2)) == ()


def test_sqrt_identity_and_dinverse():
    assert set(group_sqrt(identity_class(T3))) == {identity_class(T3), class_c(T3)}
    dinv = companion_class(T3).inverse()
    assert set(group_sqrt(dinv)) == {class_w(3), class_v(3)}


def test_sqrt_circular_c():
    """At circular t the order-2 class C gains the roots G, H = [2, t +- a]."""
    t = F(6, 5)
    ctx = ParamPair.one_param(t)
    roots = group_sqrt(class_c(ctx))
    expected = {GroupElement.from_pair(ctx, 2, t + F(8, 5)),
                GroupElement.from_pair(ctx, 2, t - F(8, 5))}
    assert set(roots) == expected
    for g in roots:
        assert g * g == class_c(ctx)
        assert g ** 4 == identity_class(ctx)
    assert group_sqrt(class_c(T3)) == ()  # generic t: C has no roots


def test_roots_differ_by_c():
    x = GroupElement.from_pair(T3, 3, 7)
    r1, r2 = group_sqrt(x * x)
    assert r1 == class_c(T3) * r2 or r2 == class_c(T3) * r1


def test_torsion_l_orders():
    iden3 = identity_class(T3)
    table = torsion_l(3)
    assert [(g.a0, g.a1, k) for g, k in table] == [(2, 3, 2)]
    for g, k in table:
        assert g ** k == iden3
        assert all(g ** j != iden3 for j in range(1, k))

    for t, orders in ((F(6, 5), [2, 4, 4]), (F(11, 7), [2, 3, 3, 6, 6])):
        ctx = ParamPair.one_param(t)
        iden = identity_class(ctx)
        table = torsion_l(t)
        assert [k for _, k in table] == orders
        for g, k in table:
            assert g ** k == iden
            assert all(g ** j != iden for j in range(1, k))


def test_cubic_torsion_relations():
    """S, R, Y, Z satisfy the multiplication table of the 6th roots of unity."""
    t = F(11, 7)
    f = F(5, 7)
    ctx = ParamPair.one_param(t)
    iden = identity_class(ctx)
    s = GroupElement.from_pair(ctx, 2, t + f)
    r = GroupElement.from_pair(ctx, 2, t - f)
    y = GroupElement.from_pair(ctx, 2, t + 3 * f)
    z = GroupElement.from_pair(ctx, 2, t - 3 * f)
    c = class_c(ctx)
    assert s * s == r and r * r == s   # S^2 = 2f*R, R^2 = -2f*S
    assert s * r == iden               # S*R = -4f^2*I
    assert y * y == s and z * z == r   # Y^2 = 6f*S, Z^2 = -6f*R
    assert y * z == iden               # Y*Z = -12f^2*I
    assert y * s == c                  # Y*S = 4f*C
    assert y == c * r and z == c * s   # CR ~ Y and CS ~ Z = Y^{-1}


def test_primitivity_frozen():
    for t in (F(3), F(6, 5), F(11, 7), F(19, 3), F(7, 2)):
        rep = primitivity(t)
        assert rep.is_primitive and rep.witnesses == ()
    rep = primitivity(F(7))
    assert not rep.is_primitive
    assert {(w.r, w.u, w.sign) for w in rep.witnesses} == {(2, F(3), 1), (2, F(-3), 1)}
    rep = primitivity(F(18))
    assert {(w.r, w.u, w.sign) for w in rep.witnesses} == {(3, F(3), 1), (3, F(-3), -1)}
    rep = primitivity(F(-18))
    assert {(w.r, w.u, w.sign) for w in rep.witnesses} == {(3, F(-3), 1), (3, F(3), -1)}
    rep = primitivity(F(123))
    assert {(w.r, w.u, w.sign) for w in rep.witnesses} == {(5, F(3), 1), (5, F(-3), -1)}


def test_primitivity_witnesses_check_out():
    """Every reported witness satisfies C_r(u) = sign * t on the nose."""
    for num in range(-50, 51):
        for den in (1, 2, 3):
            t = F(num, den)
            if t in (0, 1, -1, 2, -2):
                continue
            rep = primitivity(t)
            for w in rep.witnesses:
                assert chebyshev_c(w.u, w.r) == w.sign * t


def test_circular_primitivity():
    # 2*(2 + 6/5) = 32/5 is not a square: circular primitive
    rep = primitivity(F(6, 5))
    assert rep.circular_primitive is True
    # t = 48/25 is circular (a = 14/25) with 2*(2 + t) = (14/5)**2: not
    # circular primitive, though t itself has no Chebyshev preimage
    rep = primitivity(F(48, 25))
    assert rep.is_primitive is True
    assert rep.circular_primitive is False
    # and its associate decomposes as -a = C_2(6/5)
    assert maximal_decomposition(F(-14, 25)) == (2, F(6, 5), 1)


def test_maximal_decomposition_frozen():
    assert maximal_decomposition(F(7)) == (2, 3, 1)
    assert maximal_decomposition(F(18)) == (3, 3, 1)
    assert maximal_decomposition(F(-18)) == (3, -3, 1)
    assert maximal_decomposition(F(47)) == (4, 3, 1)
    assert maximal_decomposition(F(123)) == (5, 3, 1)
    assert maximal_decomposition(F(2207)) == (8, 3, 1)  # C_8(3)
    assert maximal_decomposition(F(3)) == (1, 3, 1)


def test_maximal_decomposition_reconstructs():
    for t in (F(7), F(18), F(-18), F(47), F(123), F(-47), F(322)):
        m, u, sign = maximal_decomposition(t)
        assert chebyshev_c(u, m) == sign * t
        assert primitivity(u).is_primitive
