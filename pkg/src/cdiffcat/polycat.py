"""The category k-POLY of polynomial maps over a semiring.

Objects are arities.  A map ``n -> m`` is a tuple of ``m`` polynomials in the
variables ``x0 .. x{n-1}``.  Products are arity addition, so a composite such
as ``<x, y, 0, z>`` is just a substitution of variables and zeros.

Polynomials are sparse: a dict from exponent tuples to nonzero coefficients.
"""
from __future__ import annotations

import json
import re
from itertools import product as _cartesian

from .semiring import Semiring, SemiringError, MixedSemiringError, INT


class ArityError(ValueError):
    pass


class ParseError(ValueError):
    """Raised for malformed map text; carries the offending token and position."""

    def __init__(self, message, token=None, position=None):
        self.token = token
        self.position = position
        where = ""
        if token is not None:
            where = f" at position {position} (token {token!r})"
        super().__init__(message + where)


def _check_ring(a, b):
    if a != b:
        raise MixedSemiringError(f"cannot combine {a.tag} with {b.tag}")


class Poly:
    """Sparse polynomial over ``ring`` in ``arity`` variables.

    ``terms`` maps an exponent tuple to a nonzero normalized coefficient.
    Instances are treated as immutable.
    """

    __slots__ = ("arity", "ring", "terms", "_hash")

    def __init__(self, arity, ring, terms=None):
        self.arity = arity
        self.ring = ring
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != arity:
                    raise ArityError(f"monomial {exps} does not have arity {arity}")
                c = ring.normalize(c)
                if c != 0:
                    clean[exps] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity, ring, terms):
        # terms already canonical
        p = cls.__new__(cls)
        p.arity = arity
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, arity, ring=INT):
        return cls._raw(arity, ring, {})

    @classmethod
    def constant(cls, arity, c, ring=INT):
        c = ring.normalize(c)
        return cls._raw(arity, ring, {(0,) * arity: c} if c != 0 else {})

    @classmethod
    def variable(cls, arity, i, ring=INT):
        if not 0 <= i < arity:
            raise ArityError(f"variable x{i} out of range for arity {arity}")
        exps = [0] * arity
        exps[i] = 1
        return cls._raw(arity, ring, {tuple(exps): ring.one()})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, variables):
        """Largest total degree in the given variable indices."""
        return max((sum(e[i] for i in variables) for e in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.ring, frozenset(self.terms.items())))
        return self._hash

    def _same(self, other):
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
        _check_ring(self.ring, other.ring)

    def __add__(self, other):
        self._same(other)
        ring = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = ring.add(out.get(e, 0), c)
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly._raw(self.arity, ring, out)

    def __mul__(self, other):
        self._same(other)
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = ring.add(out.get(e, 0), ring.mul(c1, c2))
        return Poly._raw(self.arity, ring, {e: c for e, c in out.items() if c != 0})

    def scale(self, r):
        ring = self.ring
        r = ring.normalize(r)
        if r == 0:
            return Poly._raw(self.arity, ring, {})
        out = {}
        for e, c in self.terms.items():
            v = ring.mul(r, c)
            if v != 0:
                out[e] = v
        return Poly._raw(self.arity, ring, out)

    def __neg__(self):
        ring = self.ring
        return Poly._raw(self.arity, ring, {e: ring.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(self.arity, 1, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i):
        """Formal partial derivative in variable ``i``; exponents enter k as 1+...+1."""
        ring = self.ring
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            v = ring.mul(ring.from_nat(k), c)
            if v == 0:
                continue
            ne = e[:i] + (k - 1,) + e[i + 1:]
            out[ne] = ring.add(out.get(ne, 0), v)
        return Poly._raw(self.arity, ring, {e: c for e, c in out.items() if c != 0})

    def substitute(self, images, arity, cache=None):
        """Replace variable ``i`` by ``images[i]`` (each a Poly of ``arity``)."""
        if len(images) != self.arity:
            raise ArityError(f"need {self.arity} images, got {len(images)}")
        ring = self.ring
        if not self.terms:
            return Poly._raw(arity, ring, {})
        if all(len(p.terms) <= 1 for p in images):
            return self._substitute_monomials(images, arity)
        if cache is None:
            cache = {}
        acc = Poly._raw(arity, ring, {})
        one = Poly.constant(arity, 1, ring)
        for e, c in self.terms.items():
            term = one
            for i, k in enumerate(e):
                if k == 0:
                    continue
                key = (i, k)
                pw = cache.get(key)
                if pw is None:
                    pw = images[i] ** k
                    cache[key] = pw
                term = term * pw
                if not term.terms:
                    break
            acc = acc + term.scale(c)
        return acc

    def _substitute_monomials(self, images, arity):
        # every image is a single monomial or zero, so no expansion is needed
        ring = self.ring
        single = []
        for p in images:
            if p.terms:
                (e, c), = p.terms.items()
                single.append((e, c))
            else:
                single.append(None)
        out = {}
        for e, c in self.terms.items():
            exps = [0] * arity
            coef = c
            dead = False
            for i, k in enumerate(e):
                if k == 0:
                    continue
                s = single[i]
                if s is None:
                    dead = True
                    break
                se, sc = s
                for j, v in enumerate(se):
                    if v:
                        exps[j] += v * k
                if sc != 1:
                    coef = ring.mul(coef, sc if k == 1 else _ring_pow(ring, sc, k))
            if dead or coef == 0:
                continue
            t = tuple(exps)
            out[t] = ring.add(out.get(t, 0), coef)
        return Poly._raw(arity, ring, {e: c for e, c in out.items() if c != 0})

    def sorted_terms(self):
        # graded: higher total degree first, then larger exponent tuples first
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            neg = _is_negative(c)
            mag = -c if neg else c
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i}")
                elif k > 1:
                    factors.append(f"x{i}^{k}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self.format()!r}, arity={self.arity}, ring={self.ring.tag})"


def _ring_pow(ring, c, k):
    out = ring.one()
    for _ in range(k):
        out = ring.mul(out, c)
    return out


def _is_negative(c):
    return c < 0


class PolyMap:
    """A map ``dom -> cod`` of k-POLY: ``cod`` polynomials in ``dom`` variables."""

    __slots__ = ("dom", "cod", "components", "ring", "_hash")

    def __init__(self, dom, cod, components, ring=None):
        components = tuple(components)
        if ring is None:
            ring = components[0].ring if components else INT
        if len(components) != cod:
            raise ArityError(f"expected {cod} components, got {len(components)}")
        for p in components:
            if p.arity != dom:
                raise ArityError(f"component has arity {p.arity}, expected {dom}")
            _check_ring(p.ring, ring)
        self.dom = dom
        self.cod = cod
        self.components = components
        self.ring = ring
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod and self.ring == other.ring
                and self.components == other.components)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.ring, self.components))
        return self._hash

    def is_zero(self):
        return all(p.is_zero() for p in self.components)

    def degree(self):
        return max((p.degree() for p in self.components), default=0)

    def __add__(self, other):
        return add(self, other)

    def __repr__(self):
        return f"PolyMap({format_polymap(self)!r}, ring={self.ring.tag})"

    def __str__(self):
        return format_polymap(self)


# -- category structure -------------------------------------------------------

def compose(g, f):
    """``g ∘ f``: substitute the components of ``f`` for the variables of ``g``."""
    if g.dom != f.cod:
        raise ArityError(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
    _check_ring(g.ring, f.ring)
    cache = {}
    comps = [p.substitute(f.components, f.dom, cache) for p in g.components]
    return PolyMap(f.dom, g.cod, comps, g.ring)


def identity(n, ring=INT):
    return PolyMap(n, n, [Poly.variable(n, i, ring) for i in range(n)], ring)


def select(dom, slots, ring=INT):
    """Map ``dom -> len(slots)`` whose i-th output is ``x_{slots[i]}``, or 0 for ``None``.

    This realizes every pairing of projections and zero maps, e.g. ``<x, y, 0, z>``.
    """
    comps = []
    for s in slots:
        if s is None:
            comps.append(Poly.zero(dom, ring))
        else:
            comps.append(Poly.variable(dom, s, ring))
    return PolyMap(dom, len(slots), comps, ring)


def projection(arities, j, ring=INT):
    """Projection from the product of ``arities`` onto factor ``j``."""
    arities = list(arities)
    if not 0 <= j < len(arities):
        raise ArityError(f"factor {j} out of range for {len(arities)} factors")
    start = sum(arities[:j])
    return select(sum(arities), range(start, start + arities[j]), ring)


def pair(*maps, dom=None, ring=None):
    """Pairing ``<f0, f1, ...>`` of maps with a shared domain."""
    if len(maps) == 1 and isinstance(maps[0], (list, tuple)):
        maps = tuple(maps[0])
    if not maps:
        if dom is None:
            raise ArityError("empty pairing needs an explicit domain")
        return PolyMap(dom, 0, [], ring or INT)
    d = maps[0].dom
    r = maps[0].ring
    comps = []
    for m in maps:
        if m.dom != d:
            raise ArityError(f"pairing needs a shared domain: {d} vs {m.dom}")
        _check_ring(m.ring, r)
        comps.extend(m.components)
    return PolyMap(d, len(comps), comps, r)


def add(f, g):
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ArityError(f"cannot add {f.dom}->{f.cod} and {g.dom}->{g.cod}")
    _check_ring(f.ring, g.ring)
    return PolyMap(f.dom, f.cod, [a + b for a, b in zip(f.components, g.components)], f.ring)


def scale(r, f):
    return PolyMap(f.dom, f.cod, [p.scale(r) for p in f.components], f.ring)


def zero(n, m, ring=INT):
    return PolyMap(n, m, [Poly.zero(n, ring) for _ in range(m)], ring)


def product_map(*maps):
    """``f × g``: act on separate blocks of the flattened domain."""
    ring = maps[0].ring
    dom = sum(m.dom for m in maps)
    comps = []
    offset = 0
    for m in maps:
        shift = select(dom, range(offset, offset + m.dom), ring)
        comps.extend(compose(m, shift).components)
        offset += m.dom
    return PolyMap(dom, len(comps), comps, ring)


# -- differential structure ---------------------------------------------------

def diff(f):
    """Total derivative ``D[f]: 2n -> m``; variables ``0..n-1`` are x, ``n..2n-1`` are y."""
    n = f.dom
    ring = f.ring
    comps = []
    for p in f.components:
        out = {}
        for e, c in p.terms.items():
            for i, k in enumerate(e):
                if k == 0:
                    continue
                v = ring.mul(ring.from_nat(k), c)
                if v == 0:
                    continue
                ne = list(e) + [0] * n
                ne[i] = k - 1
                ne[n + i] = 1
                ne = tuple(ne)
                out[ne] = ring.add(out.get(ne, 0), v)
        comps.append(Poly._raw(2 * n, ring, {e: c for e, c in out.items() if c != 0}))
    return PolyMap(2 * n, f.cod, comps, ring)


def is_d_linear(f):
    """``D[f] = f ∘ π1``."""
    return diff(f) == compose(f, select(2 * f.dom, range(f.dom, 2 * f.dom), f.ring))


def is_d_constant(f):
    """``D[f] = 0``."""
    return diff(f).is_zero()


DEFAULT_SCALARS = (0, 1, 2, 3)


def is_k_linear(f, scalars=DEFAULT_SCALARS):
    """Formal check of ``f(r·x + s·y) = r·f(x) + s·f(y)``.

    Over a finite semiring every pair of scalars is tried.  Over an infinite one
    the test is additivity plus homogeneity for each scalar in ``scalars``; that
    is a sufficient formal condition and reported as such.
    """
    n = f.dom
    ring = f.ring
    xs = select(2 * n, range(n), ring)
    ys = select(2 * n, range(n, 2 * n), ring)
    fx = compose(f, xs)
    fy = compose(f, ys)
    if ring.is_finite:
        pairs = _cartesian(ring.elements(), repeat=2)
    else:
        pairs = [(1, 1)] + [(ring.normalize(r), 0) for r in scalars]
    for r, s in pairs:
        arg = add(scale(r, xs), scale(s, ys))
        if compose(f, arg) != add(scale(r, fx), scale(s, fy)):
            return False
    return True


# -- text syntax --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(->|[-+*/^()\[\],:]))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while j < len(text) and text[j].isspace():
                j += 1
            raise ParseError("unexpected character", text[j], j)
        lexeme = m.group(0).strip()
        start = m.end() - len(lexeme)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start, lexeme))
        elif m.group(2) is not None:
            toks.append(("var", int(m.group(2)), start, lexeme))
        else:
            toks.append(("op", m.group(3), start, lexeme))
        pos = m.end()
    toks.append(("end", None, len(text), "<end>"))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.arity = None

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            want = repr(value) if value is not None else {"num": "an integer"}.get(kind, kind)
            raise ParseError(f"expected {want}", t[3], t[2])
        return t

    def fail(self, msg, t):
        raise ParseError(msg, t[3], t[2])

    def parse_map(self):
        dom = self.expect("num")[1]
        self.expect("op", "->")
        cod_tok = self.expect("num")
        cod = cod_tok[1]
        self.expect("op", ":")
        self.expect("op", "[")
        self.arity = dom
        comps = []
        if not (self.peek()[0] == "op" and self.peek()[1] == "]"):
            comps.append(self.expr())
            while self.peek()[0] == "op" and self.peek()[1] == ",":
                self.take()
                comps.append(self.expr())
        self.expect("op", "]")
        t = self.peek()
        if t[0] != "end":
            self.fail("trailing input", t)
        if len(comps) != cod:
            self.fail(f"declared codomain {cod} but found {len(comps)} components", cod_tok)
        return PolyMap(dom, cod, comps, self.ring)

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            t = self.take()
            rhs = self.term()
            if t[1] == "+":
                acc = acc + rhs
            else:
                acc = self._negate(rhs, t) + acc
        return acc

    def _negate(self, p, tok):
        try:
            return -p
        except SemiringError:
            self.fail(f"subtraction is not available in {self.ring.tag}", tok)

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            t = self.take()
            rhs = self.unary()
            if t[1] == "*":
                acc = acc * rhs
            else:
                if rhs.degree() != 0 or rhs.is_zero():
                    self.fail("can only divide by a nonzero constant", t)
                (c,) = rhs.terms.values()
                try:
                    inv = self.ring.div(1, c)
                except SemiringError:
                    self.fail(f"cannot divide by {c} in {self.ring.tag}", t)
                acc = acc.scale(inv)
        return acc

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return self._negate(self.unary(), t)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            k = self.expect("num")[1]
            base = base ** k
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            try:
                return Poly.constant(self.arity, t[1], self.ring)
            except SemiringError:
                self.fail(f"literal not in {self.ring.tag}", t)
        if t[0] == "var":
            if t[1] >= self.arity:
                self.fail(f"variable out of range for arity {self.arity}", t)
            return Poly.variable(self.arity, t[1], self.ring)
        if t[0] == "op" and t[1] == "(":
            inner = self.expr()
            self.expect("op", ")")
            return inner
        self.fail("unexpected token", t)


def parse_polymap(text, ring=INT):
    """Parse ``n -> m : [e1, ..., em]`` with variables ``x0 .. x{n-1}``."""
    return _Parser(text, ring).parse_map()


def format_polymap(f):
    return f"{f.dom}->{f.cod}:[" + ", ".join(p.format() for p in f.components) + "]"


# -- JSON form ----------------------------------------------------------------

def polymap_to_obj(f):
    comps = []
    for p in f.components:
        comps.append([{"exps": list(e), "coef": str(c)} for e, c in p.sorted_terms()])
    return {"dom": f.dom, "cod": f.cod, "components": comps}


def polymap_from_obj(obj, ring=INT):
    try:
        dom = int(obj["dom"])
        cod = int(obj["cod"])
        comps = []
        for terms in obj["components"]:
            d = {}
            for t in terms:
                e = tuple(int(v) for v in t["exps"])
                if e in d:
                    raise ValueError(f"duplicate monomial {list(e)}")
                d[e] = ring.parse_value(str(t["coef"]))
            comps.append(Poly(dom, ring, d))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed PolyMap JSON: {exc}") from None
    return PolyMap(dom, cod, comps, ring)


def polymap_to_json(f):
    return json.dumps(polymap_to_obj(f), separators=(",", ":"))


def polymap_from_json(text, ring=INT):
    return polymap_from_obj(json.loads(text), ring)


class PolyCategory:
    """k-POLY packaged as a category instance for the generic derivative code.

    ``diff`` is an attribute so law tests can swap in a corrupted combinator.
    """

    name = "polycat"

    def __init__(self, ring=INT, diff_fn=None):
        self.ring = ring
        self.diff = diff_fn or diff

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, g, f):
        return compose(g, f)

    def add(self, f, g):
        return add(f, g)

    def scale(self, r, f):
        return scale(r, f)

    def zero(self, n, m):
        return zero(n, m, self.ring)

    def identity(self, n):
        return identity(n, self.ring)

    def pair(self, maps, dom):
        return pair(*maps, dom=dom, ring=self.ring)

    def embed(self, L):
        return L

    def equal(self, f, g):
        return f == g
