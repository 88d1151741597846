import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from cdiffcat import faa as F
from cdiffcat.faa import (
    FaaSeq, FaaValidationError, constant_unit, decompose, faa_add, faa_compose, faa_diff,
    faa_identity, faa_pair, faa_projection, faa_scale, faa_zero, functor_E, homogeneous_embed,
    is_d_constant_seq, lift, monad_mult, seq_sum, validate,
)
from cdiffcat.polycat import (
    ArityError, add, compose, diff, identity, pair, parse_polymap, scale, select, zero,
)
from cdiffcat.semiring import INT, modp
from strategies import faaseqs, polymaps

P = parse_polymap


def test_lift_x_squared():
    assert lift(P("1->1:[x0^2]"), 3).terms == (
        P("1->1:[x0^2]"), P("2->1:[2*x0*x1]"), P("3->1:[2*x1*x2]"), P("4->1:[0]"))


def test_identity_and_projections():
    assert faa_identity(1, 3).terms == (P("1->1:[x0]"), P("2->1:[x1]"), zero(3, 1), zero(4, 1))
    assert lift(identity(2), 3) == faa_identity(2, 3)
    p0, p1 = faa_projection([1, 1], 0, 3), faa_projection([1, 1], 1, 3)
    assert p1.terms[1] == select(4, [3])
    assert faa_pair(p0, p1) == faa_identity(2, 3)


def test_zero_and_add():
    f = lift(P("2->1:[x0^2*x1]"), 3)
    assert faa_add(f, faa_zero(2, 1, 3)) == f
    assert faa_scale(0, f) == faa_zero(2, 1, 3)


def test_identity_laws():
    f = lift(P("1->2:[x0^3, x0 + 1]"), 4)
    assert faa_compose(faa_identity(2, 4), f) == f
    assert faa_compose(f, faa_identity(1, 4)) == f


def test_compose_zeroth_term():
    f = lift(P("1->1:[x0 + x0^2]"), 2)
    g = lift(P("1->1:[x0^3]"), 2)
    assert functor_E(faa_compose(g, f)) == compose(functor_E(g), functor_E(f))


def test_functoriality_example():
    g, f = P("1->1:[x0^2]"), P("1->1:[x0 + x0^2]")
    assert faa_compose(lift(g, 3), lift(f, 3)) == lift(compose(g, f), 3)


def test_differential_oracle_example():
    f = P("1->1:[x0^3]")
    assert faa_diff(lift(f, 4)) == lift(diff(f), 3)


def test_diff_examples():
    assert faa_diff(constant_unit(1, 3)) == faa_zero(2, 1, 2)
    assert faa_diff(faa_identity(1, 3)) == faa_projection([1, 1], 1, 2)
    with pytest.raises(ValueError):
        faa_diff(lift(P("1->1:[x0]"), 0))


def test_order_truncates_to_minimum():
    f = lift(P("1->1:[x0^2]"), 4)
    g = lift(P("1->1:[x0^3]"), 2)
    assert faa_compose(g, f).order == 2
    assert faa_compose(g, f) == lift(P("1->1:[x0^6]"), 2)


def test_compose_object_mismatch():
    with pytest.raises(ArityError):
        faa_compose(lift(P("2->1:[x0]"), 2), lift(P("1->1:[x0]"), 2))


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_functoriality(data):
    f = data.draw(polymaps())
    g = data.draw(polymaps(dom=f.cod))
    assert faa_compose(lift(g, 4), lift(f, 4)) == lift(compose(g, f), 4)


@settings(max_examples=25, deadline=None)
@given(f=polymaps())
def test_differential_oracle(f):
    assert faa_diff(lift(f, 4)) == lift(diff(f), 3)


@settings(max_examples=25, deadline=None)
@given(f=polymaps())
def test_E_of_lift(f):
    assert functor_E(lift(f, 3)) == f


@settings(max_examples=25, deadline=None)
@given(f=faaseqs(order=4))
def test_E_of_derivative_is_first_term(f):
    assert functor_E(faa_diff(f)) == f.terms[1]


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_composition_associative(data):
    f = data.draw(faaseqs(order=3))
    g = data.draw(faaseqs(dom=f.cod, order=3))
    h = data.draw(faaseqs(dom=g.cod, order=3))
    assert faa_compose(h, faa_compose(g, f)) == faa_compose(faa_compose(h, g), f)


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_composites_stay_valid(data):
    f = data.draw(faaseqs(order=3))
    g = data.draw(faaseqs(dom=f.cod, order=3))
    validate(faa_compose(g, f))
    validate(faa_diff(f))


def test_constant_unit():
    u = constant_unit(2, 3)
    assert functor_E(u) == identity(2)
    assert is_d_constant_seq(u)
    assert faa_compose(u, u) == u
    c = homogeneous_embed(P("2->2:[x0*x1, 3]"), 0, 3)
    assert faa_compose(u, c) == c


def test_decompose_x_squared():
    parts = decompose(lift(P("1->1:[x0^2]"), 3))
    assert [p.terms for p in parts] == [
        (P("1->1:[x0^2]"), zero(2, 1), zero(3, 1), zero(4, 1)),
        (zero(1, 1), P("2->1:[2*x0*x1]"), zero(3, 1), zero(4, 1)),
        (zero(1, 1), zero(2, 1), P("3->1:[2*x1*x2]"), zero(4, 1)),
        (zero(1, 1), zero(2, 1), zero(3, 1), zero(4, 1)),
    ]


@settings(max_examples=25, deadline=None)
@given(f=faaseqs(order=4))
def test_decompose_sums_back(f):
    parts = decompose(f)
    assert len(parts) == f.order + 1
    assert seq_sum(parts) == f


def test_homogeneous_embed():
    h = P("1->1:[x0^2]")
    assert homogeneous_embed(h, 0, 2).terms == (h, zero(2, 1), zero(3, 1))
    assert is_d_constant_seq(homogeneous_embed(h, 0, 2))
    with pytest.raises(FaaValidationError):
        homogeneous_embed(P("2->1:[x1^2]"), 1, 2)


def test_validator_messages():
    bad = FaaSeq(1, 1, [P("1->1:[x0]"), P("2->1:[x0]")])
    with pytest.raises(FaaValidationError) as exc:
        validate(bad)
    assert exc.value.invariant == "multilinear" and exc.value.monomial == "x0"
    asym = FaaSeq(1, 1, [P("1->1:[x0]"), P("2->1:[x1]"), P("3->1:[x0*x1*x2]"),
                         P("4->1:[x1*x2*x3]")])
    validate(asym)
    asym = FaaSeq(2, 1, [P("2->1:[x0]"), P("4->1:[x2]"), P("6->1:[x2*x5]")])
    with pytest.raises(FaaValidationError) as exc:
        validate(asym)
    assert exc.value.invariant == "symmetric"


@pytest.mark.parametrize("text", [
    "2->1:[x0*x1]", "2->1:[x1^2]", "2->1:[x0^2*x1 + 3*x1]", "2->1:[x1 + 1]", "2->1:[x0]",
])
def test_structural_validator_vs_formal_identity(text):
    # over the integers: t(x, u + v) = t(x, u) + t(x, v) and t(x, 2u) = 2 t(x, u)
    # hold formally exactly when every monomial has degree 1 in the linear block
    t = P(text)
    x, u, v = select(3, [0]), select(3, [1]), select(3, [2])
    additive = compose(t, pair(x, add(u, v))) == add(compose(t, pair(x, u)), compose(t, pair(x, v)))
    homogeneous = compose(t, pair(select(2, [0]), scale(2, select(2, [1])))) == scale(2, t)
    assert (F.check_term(t, 1, 1) is None) == (additive and homogeneous)


def test_structural_validator_stricter_in_characteristic_two():
    # x1² is additive in x1 over ℤ₂ yet is rejected structurally
    t = P("2->1:[x1^2]", modp(2))
    x, u, v = select(3, [0], modp(2)), select(3, [1], modp(2)), select(3, [2], modp(2))
    assert compose(t, pair(x, add(u, v))) == add(compose(t, pair(x, u)), compose(t, pair(x, v)))
    assert F.check_term(t, 1, 1) is not None


def test_monad_unit_law_example():
    f = lift(P("1->1:[x0^3]"), 3)
    assert monad_mult(F.unit_N(f)) == f


def test_json_roundtrip():
    f = lift(P("2->1:[x0^2*x1]"), 3)
    assert F.faaseq_from_json(F.faaseq_to_json(f)) == f
    nested = F.unit_N(lift(P("1->1:[x0^3]"), 2))
    assert F.faaseq_from_json(F.faaseq_to_json(nested)) == nested


def test_characteristic_two_lift():
    p = P("1->1:[x0^2]", modp(2))
    assert lift(p, 3).terms == (p, zero(2, 1, modp(2)), zero(3, 1, modp(2)), zero(4, 1, modp(2)))
    assert is_d_constant_seq(lift(p, 3))
