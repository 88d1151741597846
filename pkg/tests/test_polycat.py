import json

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from cdiffcat.polycat import (
    ArityError, ParseError, Poly, PolyMap, add, compose, diff, format_polymap, identity,
    is_d_constant, is_d_linear, is_k_linear, pair, parse_polymap, polymap_from_json,
    polymap_to_json, projection, scale, select, zero,
)
from cdiffcat.semiring import INT, NAT, RAT, MixedSemiringError, modp
from strategies import RINGS, linear_maps, polymaps, ring_values

P = parse_polymap


# -- examples -------------------------------------------------------------------

def test_compose_examples():
    assert compose(P("1->1:[x0^2]"), P("1->1:[x0+1]")) == P("1->1:[x0^2 + 2*x0 + 1]")
    f = P("2->2:[x0*x1 + 3, x1^2]")
    assert compose(identity(2), f) == f
    assert compose(f, identity(2)) == f
    assert compose(P("2->1:[x0*x1]"), P("1->2:[x0, x0]")) == P("1->1:[x0^2]")


def test_compose_arity_mismatch():
    with pytest.raises(ArityError):
        compose(P("2->1:[x0]"), P("1->1:[x0]"))


def test_structure_examples():
    assert pair(projection([1, 1], 0), projection([1, 1], 1)) == identity(2)
    f = P("2->1:[x0^2*x1 + 1]")
    assert add(f, zero(2, 1)) == f
    assert scale(0, f) == zero(2, 1)
    assert projection([2, 1], 1) == select(3, [2])


def test_diff_examples():
    assert diff(P("1->1:[x0^2]")) == P("2->1:[2*x0*x1]")
    assert diff(identity(3)) == select(6, [3, 4, 5])
    assert diff(P("1->1:[x0^2]", modp(2))).is_zero()
    # x0^2 x1 + 3 x1 -> 2 x0 x1 y0 + x0^2 y1 + 3 y1
    assert diff(P("2->1:[x0^2*x1 + 3*x1]")) == P("4->1:[2*x0*x1*x2 + x0^2*x3 + 3*x3]")


def test_predicates():
    assert is_d_linear(P("1->1:[3*x0]"))
    assert not is_d_constant(P("1->1:[x0^2 + 1]"))
    assert is_d_constant(P("1->1:[x0^2]", modp(2)))
    assert is_d_constant(P("2->1:[7]"))
    assert is_k_linear(P("1->1:[2*x0]"))
    assert not is_k_linear(P("1->1:[x0 + 1]"))
    assert is_k_linear(P("1->1:[x0^2]", modp(2)))
    assert not is_d_linear(P("1->1:[x0^2]", modp(2)))
    assert not is_k_linear(P("1->1:[x0^2]", modp(3)))
    assert not is_k_linear(P("1->1:[x0^2]"))


def test_mixed_rings_rejected():
    with pytest.raises(MixedSemiringError):
        add(P("1->1:[x0]"), P("1->1:[x0]", modp(2)))
    with pytest.raises(MixedSemiringError):
        compose(P("1->1:[x0]"), P("1->1:[x0]", RAT))


# -- oracle: sympy's differentiation and expansion -------------------------------

sympy = pytest.importorskip("sympy")


def to_sympy(p, syms):
    return sum((c * sympy.prod([s ** k for s, k in zip(syms, e)]) for e, c in p.terms.items()),
               sympy.Integer(0))


@settings(max_examples=60, deadline=None)
@given(f=polymaps())
def test_diff_matches_sympy(f):
    n = f.dom
    xs = sympy.symbols(f"x0:{2 * n}")
    got = diff(f)
    for p, q in zip(f.components, got.components):
        expected = sum((sympy.diff(to_sympy(p, xs[:n]), xs[i]) * xs[n + i] for i in range(n)),
                       sympy.Integer(0))
        assert sympy.expand(expected - to_sympy(q, xs)) == 0


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_compose_matches_sympy(data):
    f = data.draw(polymaps())
    g = data.draw(polymaps(dom=f.cod))
    xs = sympy.symbols(f"x0:{f.dom}")
    ys = sympy.symbols(f"y0:{g.dom}")
    subs = {y: to_sympy(p, xs) for y, p in zip(ys, f.components)}
    for p, q in zip(g.components, compose(g, f).components):
        assert sympy.expand(to_sympy(p, ys).subs(subs, simultaneous=True) - to_sympy(q, xs)) == 0


# -- algebraic laws --------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_composition_associative(data):
    f = data.draw(polymaps(max_degree=2))
    g = data.draw(polymaps(dom=f.cod, max_degree=2))
    h = data.draw(polymaps(dom=g.cod, max_degree=2))
    # h ∘ (g ∘ f) = (h ∘ g) ∘ f
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_d_linear_implies_k_linear(ring, data):
    f = data.draw(polymaps(ring=ring))
    if is_d_linear(f):
        assert is_k_linear(f)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_linear_maps_are_linear(data):
    f = data.draw(linear_maps(2, 2))
    assert is_d_linear(f) and is_k_linear(f)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_chain_rule(data):
    # D[g ∘ f] = D[g] ∘ <f ∘ π0, D[f]>
    f = data.draw(polymaps())
    g = data.draw(polymaps(dom=f.cod))
    a = f.dom
    rhs = compose(diff(g), pair(compose(f, select(2 * a, range(a))), diff(f)))
    assert diff(compose(g, f)) == rhs


# -- text and JSON ---------------------------------------------------------------

@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_text_roundtrip(ring, data):
    f = data.draw(polymaps(ring=ring))
    assert parse_polymap(format_polymap(f), ring) == f


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_json_roundtrip(ring, data):
    f = data.draw(polymaps(ring=ring))
    text = polymap_to_json(f)
    assert polymap_from_json(text, ring) == f
    assert polymap_to_json(polymap_from_json(text, ring)) == text


def test_format():
    assert format_polymap(diff(P("1->1:[x0^2]"))) == "2->1:[2*x0*x1]"
    assert format_polymap(P("1->2:[x0^2 + 3*x0 + 1, 0]")) == "1->2:[x0^2 + 3*x0 + 1, 0]"
    assert format_polymap(P("2->1:[x0 - 2*x1]")) == "2->1:[x0 - 2*x1]"
    assert format_polymap(P("1->1:[1/2*x0]", RAT)) == "1->1:[1/2*x0]"
    assert format_polymap(P("3->0:[]")) == "3->0:[]"


def test_json_shape():
    obj = json.loads(polymap_to_json(P("2->1:[2*x0*x1]")))
    assert obj == {"dom": 2, "cod": 1, "components": [[{"exps": [1, 1], "coef": "2"}]]}


def test_parser_accepts_syntax():
    assert P(" 2 -> 1 : [ (x0 + x1)^2 ] ") == P("2->1:[x0^2 + 2*x0*x1 + x1^2]")
    assert P("1->1:[-x0^2]") == P("1->1:[0 - x0^2]")
    assert P("1->1:[x0/2]", RAT) == P("1->1:[1/2*x0]", RAT)
    assert P("1->1:[x0/2]", modp(5)) == P("1->1:[3*x0]", modp(5))


@pytest.mark.parametrize("text,token,pos", [
    ("1->1:[x0 $ 1]", "$", 9),
    ("1->1:[x1]", "x1", 6),
    ("1->1:[x0^]", "]", 9),
    ("1->2:[x0]", "2", 3),
    ("1->1:[x0] extra", "extra"[0], 10),
    ("1->1 [x0]", "[", 5),
])
def test_parse_errors_name_token_and_position(text, token, pos):
    with pytest.raises(ParseError) as exc:
        parse_polymap(text)
    assert exc.value.token == token
    assert exc.value.position == pos


def test_parse_ring_errors():
    with pytest.raises(ParseError):
        parse_polymap("1->1:[x0 - 1]", NAT)
    with pytest.raises(ParseError):
        parse_polymap("1->1:[x0/2]", INT)


def test_poly_canonical():
    p = Poly(2, INT, {(1, 0): 0, (0, 1): 2})
    assert p.terms == {(0, 1): 2}
    assert Poly(1, modp(2), {(1,): 4}).is_zero()
    with pytest.raises(ArityError):
        Poly(2, INT, {(1,): 1})
