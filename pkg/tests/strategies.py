"""Hypothesis strategies shared by the law tests."""
import hypothesis.strategies as st

from cdiffcat.faa import FaaSeq
from cdiffcat.polycat import Poly, PolyMap
from cdiffcat.semiring import INT, NAT, RAT, modp

RINGS = [NAT, INT, RAT, modp(2), modp(5)]

small_ints = st.integers(min_value=-4, max_value=4)


def ring_values(ring):
    if ring.kind == "nat":
        return st.integers(min_value=0, max_value=6)
    if ring.kind == "rat":
        return st.fractions(min_value=-3, max_value=3, max_denominator=4).map(ring.normalize)
    if ring.kind == "modp":
        return st.integers(min_value=0, max_value=ring.modulus - 1)
    return small_ints


@st.composite
def polys(draw, arity, ring=INT, max_degree=3, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.lists(st.integers(0, max_degree), min_size=arity, max_size=arity)))
        if sum(e) > max_degree:
            continue
        terms[e] = draw(ring_values(ring))
    return Poly(arity, ring, terms)


@st.composite
def polymaps(draw, dom=None, cod=None, ring=INT, max_degree=3):
    dom = draw(st.integers(1, 2)) if dom is None else dom
    cod = draw(st.integers(1, 2)) if cod is None else cod
    return PolyMap(dom, cod, [draw(polys(dom, ring, max_degree)) for _ in range(cod)], ring)


@st.composite
def linear_maps(draw, dom, cod, ring=INT):
    comps = []
    for _ in range(cod):
        terms = {}
        for i in range(dom):
            e = [0] * dom
            e[i] = 1
            terms[tuple(e)] = draw(ring_values(ring))
        comps.append(Poly(dom, ring, terms))
    return PolyMap(dom, cod, comps, ring)


@st.composite
def faaseqs(draw, dom=None, cod=None, order=3, ring=INT):
    """Sequences built as lifts plus homogeneous perturbations, so always valid."""
    from cdiffcat.axiomcheck import SampleConfig, Sampler
    import random
    seed = draw(st.integers(0, 10**6))
    dom = draw(st.integers(1, 2)) if dom is None else dom
    cod = draw(st.integers(1, 2)) if cod is None else cod
    S = Sampler(SampleConfig(ring=ring, truncation=max(order, 2)))
    return S.faaseq(random.Random(seed), dom, cod, order)
