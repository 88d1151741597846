import pytest

from cdiffcat.axiomcheck import SampleConfig, check_cd
from cdiffcat.delta import (
    DeltaMap, DeltaValidationError, delta_compose, delta_diff, delta_diff_lin, delta_first,
    delta_from_json, delta_identity, delta_lift, delta_to_json, delta_zero, is_delta_constant,
)
from cdiffcat.polycat import compose, identity, parse_polymap, select, zero
from cdiffcat.semiring import modp

P = parse_polymap


def test_compose_pointwise():
    h = DeltaMap(P("1->1:[x0^2]"), P("1->1:[2*x0]"))
    k = DeltaMap(P("1->1:[x0 + 1]"), P("1->1:[x0]"))
    assert delta_compose(h, k) == DeltaMap(P("1->1:[x0^2 + 2*x0 + 1]"), P("1->1:[2*x0]"))
    assert delta_compose(delta_identity(1), h) == h == delta_compose(h, delta_identity(1))
    z = delta_zero(1, 1)
    assert delta_compose(h, z) == DeltaMap(compose(h.first, zero(1, 1)), zero(1, 1))


def test_diff_examples():
    f = P("2->1:[x0^2*x1 + 5]")
    assert delta_diff(DeltaMap(f, zero(2, 1))) == delta_zero(4, 1)
    assert is_delta_constant(DeltaMap(f, zero(2, 1)))
    g = P("2->1:[3*x0 + x1]")
    gp = compose(g, select(4, [2, 3]))
    assert delta_diff(DeltaMap(g, g)) == DeltaMap(gp, gp)


def test_forgets_first_component():
    h = DeltaMap(P("1->1:[x0^3]"), P("1->1:[x0]"))
    assert delta_diff(h) != delta_diff_lin(h)
    assert delta_diff(h).first == select(2, [1])
    assert delta_diff_lin(h).first == P("2->1:[x1^3]")


def test_lift():
    f = P("2->2:[x0 + x1, 2*x1]")
    assert delta_lift(f) == DeltaMap(f, f)
    assert delta_lift(identity(3)) == delta_identity(3)
    g = P("2->1:[3*x0]")
    assert delta_lift(compose(g, f)) == delta_compose(delta_lift(g), delta_lift(f))
    with pytest.raises(DeltaValidationError):
        delta_lift(P("1->1:[x0^2]"))


def test_validation_strict_and_relaxed():
    with pytest.raises(DeltaValidationError):
        DeltaMap(P("1->1:[x0]"), P("1->1:[x0^2]"))
    sq = P("1->1:[x0^2]", modp(2))
    with pytest.raises(DeltaValidationError):
        DeltaMap(sq, sq)
    # x² is k-linear over ℤ₂, so the relaxed validator admits it
    assert DeltaMap(sq, sq, strict=False).second == sq
    with pytest.raises(DeltaValidationError):
        DeltaMap(P("1->1:[x0]"), P("1->1:[x0 + 1]"), strict=False)


def test_first_projection_is_functorial():
    h = DeltaMap(P("1->1:[x0^2]"), P("1->1:[2*x0]"))
    k = DeltaMap(P("1->1:[x0 + 1]"), P("1->1:[x0]"))
    assert delta_first(delta_compose(h, k)) == compose(delta_first(h), delta_first(k))


def test_json_roundtrip():
    h = DeltaMap(P("1->1:[x0^2]"), P("1->1:[2*x0]"))
    assert delta_from_json(delta_to_json(h)) == h


def test_cd_axioms_hold():
    assert all(r.passed for r in check_cd("delta", SampleConfig(samples_per_law=30)))
