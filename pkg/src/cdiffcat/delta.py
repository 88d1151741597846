"""The Δ-construction: pairs ``(f, g)`` whose second component is linear.

Composition, pairing, addition and scaling act componentwise.  The
differential combinator forgets the first component::

    Dᐃ[(f, g)] = (g ∘ π1, g ∘ π1)

By default ``g`` must be D-linear.  ``strict=False`` accepts any formally
k-linear ``g`` instead (these differ over, for example, the integers mod 2).
"""
from __future__ import annotations

import json

from .polycat import (
    ArityError, INT, PolyMap, compose, identity, select, pair, add, scale, zero,
    is_d_linear, is_k_linear, polymap_from_obj, polymap_to_obj,
)
from .derivative import linearize


class DeltaValidationError(ValueError):
    pass


class DeltaMap:
    __slots__ = ("first", "second", "strict")

    def __init__(self, first: PolyMap, second: PolyMap, strict=True, check=True):
        if (first.dom, first.cod) != (second.dom, second.cod):
            raise ArityError(
                f"components disagree: {first.dom}->{first.cod} vs {second.dom}->{second.cod}")
        if check:
            if strict and not is_d_linear(second):
                raise DeltaValidationError(f"second component {second} is not D-linear")
            if not strict and not is_k_linear(second):
                raise DeltaValidationError(f"second component {second} is not k-linear")
        self.first = first
        self.second = second
        self.strict = strict

    @property
    def dom(self):
        return self.first.dom

    @property
    def cod(self):
        return self.first.cod

    @property
    def ring(self):
        return self.first.ring

    def __eq__(self, other):
        if not isinstance(other, DeltaMap):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return f"DeltaMap({self.first}, {self.second})"


def _mk(f, g, like):
    # results of structure operations stay in the class; skip re-validation
    return DeltaMap(f, g, strict=like.strict, check=False)


def delta_compose(h, k):
    """``(f1, g1) ∘ (f2, g2) = (f1 ∘ f2, g1 ∘ g2)``."""
    return _mk(compose(h.first, k.first), compose(h.second, k.second), h)


def delta_identity(n, ring=INT):
    i = identity(n, ring)
    return DeltaMap(i, i, check=False)


def delta_projection(arities, j, ring=INT):
    from .polycat import projection
    p = projection(arities, j, ring)
    return DeltaMap(p, p, check=False)


def delta_pair(*maps, dom=None):
    if len(maps) == 1 and isinstance(maps[0], (list, tuple)):
        maps = tuple(maps[0])
    return DeltaMap(pair(*[m.first for m in maps], dom=dom),
                    pair(*[m.second for m in maps], dom=dom),
                    strict=all(m.strict for m in maps) if maps else True, check=False)


def delta_add(h, k):
    return _mk(add(h.first, k.first), add(h.second, k.second), h)


def delta_scale(r, h):
    return _mk(scale(r, h.first), scale(r, h.second), h)


def delta_zero(n, m, ring=INT):
    z = zero(n, m, ring)
    return DeltaMap(z, z, check=False)


def _pi1(n, ring):
    return select(2 * n, range(n, 2 * n), ring)


def delta_diff(h):
    """``Dᐃ[(f, g)] = (g ∘ π1, g ∘ π1)``."""
    gp = compose(h.second, _pi1(h.dom, h.ring))
    return _mk(gp, gp, h)


def delta_diff_lin(h):
    """The componentwise biproduct combinator ``(f ∘ π1, g ∘ π1)``; keeps ``f``."""
    p = _pi1(h.dom, h.ring)
    return _mk(compose(h.first, p), compose(h.second, p), h)


def delta_first(h):
    """The forgetful functor ``P(f, g) = f``."""
    return h.first


def delta_lift(f):
    """``(f, L[f])`` for a linear map ``f``; on linear maps ``L[f] = f``."""
    if not is_d_linear(f):
        raise DeltaValidationError(f"{f} is not linear; the lift is defined on k-lin maps")
    return DeltaMap(f, linearize(f), check=False)


def is_delta_constant(h):
    return delta_diff(h).first.is_zero() and delta_diff(h).second.is_zero()


class DeltaCategory:
    name = "delta"

    def __init__(self, ring=INT, diff_fn=None):
        self.ring = ring
        self.diff = diff_fn or delta_diff

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, g, f):
        return delta_compose(g, f)

    def add(self, f, g):
        return delta_add(f, g)

    def scale(self, r, f):
        return delta_scale(r, f)

    def zero(self, n, m):
        return delta_zero(n, m, self.ring)

    def identity(self, n):
        return delta_identity(n, self.ring)

    def pair(self, maps, dom):
        if not maps:
            return delta_zero(dom, 0, self.ring)
        return delta_pair(list(maps), dom=dom)

    def embed(self, L):
        return DeltaMap(L, L, check=False)

    def equal(self, f, g):
        return f == g


def delta_to_obj(h):
    return {"first": polymap_to_obj(h.first), "second": polymap_to_obj(h.second)}


def delta_from_obj(obj, ring=INT, strict=True):
    try:
        return DeltaMap(polymap_from_obj(obj["first"], ring), polymap_from_obj(obj["second"], ring),
                        strict=strict)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed DeltaMap JSON: {exc}") from None


def delta_to_json(h):
    return json.dumps(delta_to_obj(h), separators=(",", ":"))


def delta_from_json(text, ring=INT, strict=True):
    return delta_from_obj(json.loads(text), ring, strict)
