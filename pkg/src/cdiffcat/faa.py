"""Truncated Faà di Bruno sequences and the category F[A].

A sequence ``f• = (f⁰, .., f^N)`` from ``a`` to ``b`` has ``f⁰: a -> b`` and
``fⁿ: a(1+n) -> b``, multilinear and symmetric in its ``n`` trailing blocks.
Only the first ``N+1`` terms are stored.  Composition keeps the order (the n-th
composite term reads terms up to n), differentiation drops it by one.

The construction is written against a base category instance, so that F[F[A]]
is available for the monad laws.  Module-level functions use k-POLY.
"""
from __future__ import annotations

import itertools
import json

from .partitions import enumerate_partitions, block_projection
from .polycat import (
    ArityError, INT, PolyCategory, PolyMap, compose, select,
    polymap_from_obj, polymap_to_obj,
)
from . import derivative


class FaaValidationError(ValueError):
    """A term breaks multilinearity or symmetry; names the term and monomial."""

    def __init__(self, message, invariant, term=None, monomial=None):
        self.invariant = invariant
        self.term = term
        self.monomial = monomial
        super().__init__(message)


class FaaSeq:
    """Morphism ``dom -> cod`` of F[A], truncated at ``order``."""

    __slots__ = ("dom", "cod", "terms", "ring")

    def __init__(self, dom, cod, terms, ring=None):
        terms = tuple(terms)
        if not terms:
            raise ValueError("a sequence needs at least its 0-th term")
        self.dom = dom
        self.cod = cod
        self.terms = terms
        self.ring = ring if ring is not None else terms[0].ring
        for n, t in enumerate(terms):
            if (t.dom, t.cod) != (dom * (1 + n), cod):
                raise ArityError(
                    f"term {n} is {t.dom}->{t.cod}, expected {dom * (1 + n)}->{cod}")

    @property
    def order(self):
        return len(self.terms) - 1

    def __eq__(self, other):
        if not isinstance(other, FaaSeq):
            return NotImplemented
        return (self.dom, self.cod, self.terms) == (other.dom, other.cod, other.terms)

    def __hash__(self):
        return hash((self.dom, self.cod, self.terms))

    def __getitem__(self, n):
        return self.terms[n]

    def __len__(self):
        return len(self.terms)

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return FaaSeq(self.dom, self.cod, self.terms[:order + 1], self.ring)

    def __repr__(self):
        return f"FaaSeq({self.dom}->{self.cod}, order={self.order}, terms={list(map(str, self.terms))})"

    def __str__(self):
        return "(" + "; ".join(str(t) for t in self.terms) + ")"


def _block_vars(a, j):
    return range(a * j, a * (j + 1))


def _block_permutation(a, perm):
    """Selection sending linear block ``i`` to position of ``perm[i]`` (point block fixed)."""
    n = len(perm)
    idx = list(range(a))
    for p in perm:
        idx.extend(_block_vars(a, p + 1))
    return idx, a * (1 + n)


def permutations_to_check(n, exhaustive_up_to=4):
    if n <= exhaustive_up_to:
        return [p for p in itertools.permutations(range(n)) if list(p) != list(range(n))]
    # adjacent transpositions generate the symmetric group
    out = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        out.append(tuple(p))
    return out


def check_term(t, a, n):
    """Structural check of a single polynomial term; returns an error or None."""
    if n == 0:
        return None
    for ci, p in enumerate(t.components):
        for e in p.terms:
            for j in range(1, n + 1):
                d = sum(e[i] for i in _block_vars(a, j))
                if d != 1:
                    mono = PolyMap(t.dom, 1, [type(p)(t.dom, t.ring, {e: 1})]).components[0].format()
                    return FaaValidationError(
                        f"term {n}, component {ci}: monomial {mono} has degree {d} "
                        f"in linear block {j} (multilinearity requires exactly 1)",
                        "multilinear", n, mono)
    for perm in permutations_to_check(n):
        idx, width = _block_permutation(a, perm)
        if compose(t, select(width, idx, t.ring)) != t:
            return FaaValidationError(
                f"term {n} is not symmetric under block permutation {tuple(i + 1 for i in perm)}",
                "symmetric", n, None)
    return None


def validate(f):
    """Raise :class:`FaaValidationError` naming the first violated invariant."""
    if f.terms and isinstance(f.terms[0], FaaSeq):
        return validate_nested(f)
    for n, t in enumerate(f.terms):
        err = check_term(t, f.dom, n)
        if err is not None:
            raise err
    return f


def is_valid(f):
    try:
        validate(f)
    except FaaValidationError:
        return False
    return True


class FaaCategory:
    """F[X] for a base category instance X.

    ``order`` is the truncation used when embedding linear selection maps and
    for fresh identities/zeros; composites truncate to the smaller order.
    """

    name = "faa"

    def __init__(self, base=None, order=4, ring=None):
        self.base = base if base is not None else PolyCategory(ring or INT)
        self.ring = self.base.ring
        self.order = order
        self.diff = self._diff

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def seq(self, dom, cod, terms):
        return FaaSeq(dom, cod, terms, self.ring)

    def equal(self, f, g):
        n = min(f.order, g.order)
        return f.terms[:n + 1] == g.terms[:n + 1]

    # -- structure ----------------------------------------------------------
    def compose(self, g, f):
        if g.dom != f.cod:
            raise ArityError(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
        X = self.base
        N = min(g.order, f.order)
        a = f.dom
        terms = []
        for n in range(N + 1):
            width = a * (1 + n)
            point = X.embed(select(width, range(a), self.ring))
            args0 = X.compose(f.terms[0], point)
            total = X.zero(width, g.cod)
            for part in enumerate_partitions(n):
                args = [args0]
                for block in part.blocks:
                    proj = X.embed(block_projection(block, n, a, a, self.ring))
                    args.append(X.compose(f.terms[len(block)], proj))
                k = len(part.blocks)
                total = X.add(total, X.compose(g.terms[k], X.pair(args, width)))
            terms.append(total)
        return self.seq(a, g.cod, terms)

    def identity(self, a, order=None):
        return self.embed(select(a, range(a), self.ring), order)

    def embed(self, L, order=None):
        """The sequence ``(L, L∘π1, 0, ..)`` of a linear selection/linear map ``L``."""
        N = self.order if order is None else order
        X = self.base
        a = L.dom
        terms = [X.embed(L)]
        if N >= 1:
            terms.append(X.embed(compose(L, select(2 * a, range(a, 2 * a), self.ring))))
        for n in range(2, N + 1):
            terms.append(X.zero(a * (1 + n), L.cod))
        return self.seq(a, L.cod, terms)

    def projection(self, arities, j, order=None):
        arities = list(arities)
        start = sum(arities[:j])
        return self.embed(select(sum(arities), range(start, start + arities[j]), self.ring), order)

    def pair(self, maps, dom):
        X = self.base
        if not maps:
            return self.zero(dom, 0)
        N = min(m.order for m in maps)
        for m in maps:
            if m.dom != dom:
                raise ArityError(f"pairing needs a shared domain: {dom} vs {m.dom}")
        terms = [X.pair([m.terms[n] for m in maps], dom * (1 + n)) for n in range(N + 1)]
        return self.seq(dom, sum(m.cod for m in maps), terms)

    def add(self, f, g):
        if (f.dom, f.cod) != (g.dom, g.cod):
            raise ArityError(f"cannot add {f.dom}->{f.cod} and {g.dom}->{g.cod}")
        N = min(f.order, g.order)
        X = self.base
        return self.seq(f.dom, f.cod, [X.add(f.terms[n], g.terms[n]) for n in range(N + 1)])

    def scale(self, r, f):
        X = self.base
        return self.seq(f.dom, f.cod, [X.scale(r, t) for t in f.terms])

    def zero(self, a, b, order=None):
        N = self.order if order is None else order
        return self.seq(a, b, [self.base.zero(a * (1 + n), b) for n in range(N + 1)])

    def _diff(self, f):
        """``D[f•]``: n-th term ``f^{n+1}(x,u1..un,y) + Σ_j fⁿ(x,u1,..,v_j,..,un)``.

        The domain of the n-th term has blocks ``(x,y), (u1,v1), .., (un,vn)``,
        each of arity ``2a``.
        """
        if f.order < 1:
            raise ValueError("cannot differentiate a sequence truncated at order 0")
        X = self.base
        a = f.dom
        terms = []
        for n in range(f.order):
            width = 2 * a * (1 + n)

            def first(i):
                return list(range(2 * a * i, 2 * a * i + a))

            def second(i):
                return list(range(2 * a * i + a, 2 * a * (i + 1)))

            idx = first(0)
            for i in range(1, n + 1):
                idx += first(i)
            idx += second(0)
            total = X.compose(f.terms[n + 1], X.embed(select(width, idx, self.ring)))
            for j in range(1, n + 1):
                idx = first(0)
                for i in range(1, n + 1):
                    idx += second(i) if i == j else first(i)
                total = X.add(total, X.compose(f.terms[n], X.embed(select(width, idx, self.ring))))
            terms.append(total)
        return self.seq(2 * a, f.cod, terms)

    def lift(self, g, order=None):
        """``∂•[g] = (∂⁰[g], .., ∂^N[g])`` computed in the base."""
        N = self.order if order is None else order
        X = self.base
        a = X.dom(g)
        terms = [g]
        for k in range(N):
            terms.append(derivative.partial_in_slot(terms[-1], [a] * (k + 1), 0, X))
        return self.seq(a, X.cod(g), terms)


_poly_cache = {}


def _fcat(ring, order=4):
    key = (ring, order)
    cat = _poly_cache.get(key)
    if cat is None:
        cat = _poly_cache[key] = FaaCategory(PolyCategory(ring), order)
    return cat


# -- k-POLY level operations ---------------------------------------------------

def faa_compose(g, f):
    """``g• ∘ f•`` by the partition-sum formula; order is the smaller input order."""
    if g.ring != f.ring:
        from .semiring import MixedSemiringError
        raise MixedSemiringError(f"cannot combine {g.ring.tag} with {f.ring.tag}")
    return _fcat(f.ring).compose(g, f)


def faa_identity(a, order, ring=INT):
    return _fcat(ring).identity(a, order)


def faa_projection(arities, j, order, ring=INT):
    return _fcat(ring).projection(arities, j, order)


def faa_pair(*seqs):
    if len(seqs) == 1 and isinstance(seqs[0], (list, tuple)):
        seqs = tuple(seqs[0])
    return _fcat(seqs[0].ring).pair(list(seqs), seqs[0].dom)


def faa_add(f, g):
    return _fcat(f.ring).add(f, g)


def faa_scale(r, f):
    return _fcat(f.ring).scale(r, f)


def faa_zero(a, b, order, ring=INT):
    return _fcat(ring).zero(a, b, order)


def faa_diff(f):
    return _fcat(f.ring).diff(f)


def lift(f, order):
    """The canonical sequence ``(∂⁰f, .., ∂^N f)`` of a polynomial map."""
    return _fcat(f.ring).lift(f, order)


def functor_E(f):
    """``E(f•) = f⁰``."""
    return f.terms[0]


def constant_unit(a, order, ring=INT):
    """``ς• = (1, 0, 0, ..)``."""
    cat = _fcat(ring)
    return FaaSeq(a, a, [cat.base.identity(a)] + [cat.base.zero(a * (1 + n), a) for n in range(1, order + 1)], ring)


def is_d_constant_seq(f):
    """``D[f•] = 0``, i.e. every term past the 0-th vanishes."""
    return all(_is_zero(t) for t in f.terms[1:])


def _is_zero(t):
    if isinstance(t, FaaSeq):
        return all(_is_zero(s) for s in t.terms)
    return t.is_zero()


def homogeneous_embed(h, n, order):
    """``(0, .., 0, h, 0, ..)`` with ``h`` at index ``n``; ``h`` must be multilinear and symmetric."""
    if n > order:
        raise ValueError(f"degree {n} exceeds truncation {order}")
    if h.dom % (1 + n):
        raise ArityError(f"domain {h.dom} is not a multiple of {1 + n}")
    a = h.dom // (1 + n)
    err = check_term(h, a, n)
    if err is not None:
        raise err
    cat = _fcat(h.ring)
    terms = [h if k == n else cat.base.zero(a * (1 + k), h.cod) for k in range(order + 1)]
    return FaaSeq(a, h.cod, terms, h.ring)


def decompose(f):
    """The ``N+1`` homogeneous parts of ``f•``; their termwise sum is ``f•``."""
    return [homogeneous_embed(t, n, f.order) for n, t in enumerate(f.terms)]


def seq_sum(seqs):
    out = seqs[0]
    for s in seqs[1:]:
        out = faa_add(out, s)
    return out


def partial_sums(seqs):
    out = []
    acc = None
    for s in seqs:
        acc = s if acc is None else faa_add(acc, s)
        out.append(acc)
    return out


# -- nested sequences and the monad structure ---------------------------------

def nested_category(ring=INT, order=4):
    """F[F[k-POLY]]."""
    return FaaCategory(FaaCategory(PolyCategory(ring), order), order)


def unit_N(f, order=None):
    """``N(f•) = (∂ⁿ[f•])_n`` with each ∂ⁿ computed inside F[k-POLY].

    ``∂ⁿ[f•]`` has order ``N - n``, so the inner sequences shrink.
    """
    N = f.order if order is None else order
    cat = FaaCategory(PolyCategory(f.ring), f.order)
    return FaaCategory(cat, N).lift(f, N)


def monad_mult(nested, check=False):
    """``M((f^{•,n})_n) = (f^{0,n})_n``: keep the first term of every inner sequence."""
    if check:
        validate_nested(nested)
    firsts = [t.terms[0] for t in nested.terms]
    return FaaSeq(nested.dom, nested.cod, firsts, nested.ring)


def map_terms(fn, nested):
    """``F[φ]``: apply ``φ`` to every term of an outer sequence."""
    return FaaSeq(nested.dom, nested.cod, [fn(t) for t in nested.terms], nested.ring)


def category_of(seq):
    """Rebuild the F[..] instance matching the nesting depth of ``seq``."""
    depth = 0
    t = seq
    while isinstance(t, FaaSeq):
        depth += 1
        t = t.terms[0]
    cat = PolyCategory(t.ring)
    for _ in range(depth - 1):
        cat = FaaCategory(cat, seq.order)
    return cat


def validate_nested(f, scalars=(2,)):
    """Multilinearity and symmetry of terms whose entries are themselves sequences.

    Checked as identities in the base category using projection arguments:
    additivity in each block, homogeneity for each scalar, block permutations.
    """
    X = category_of(f)
    a = f.dom
    ring = f.ring
    for n, t in enumerate(f.terms):
        if isinstance(t, FaaSeq):
            validate(t)
        if n == 0:
            continue
        width = a * (1 + n)
        for j in range(1, n + 1):
            # t(.., u_j + w, ..) = t(.., u_j, ..) + t(.., w, ..) with w a fresh block
            ext = width + a
            base_idx = list(range(width))
            alt = list(range(width))
            alt[a * j:a * (j + 1)] = range(width, ext)
            comps = list(select(ext, base_idx, ring).components)
            for i in range(a * j, a * (j + 1)):
                comps[i] = comps[i] + select(ext, [alt[i]], ring).components[0]
            summed = PolyMap(ext, width, comps, ring)
            lhs = X.compose(t, X.embed(summed))
            rhs = X.add(X.compose(t, X.embed(select(ext, base_idx, ring))),
                        X.compose(t, X.embed(select(ext, alt, ring))))
            if not X.equal(lhs, rhs):
                raise FaaValidationError(f"term {n} is not additive in linear block {j}",
                                         "multilinear", n)
            for r in scalars:
                sc = list(select(width, range(width), ring).components)
                for i in range(a * j, a * (j + 1)):
                    sc[i] = sc[i].scale(r)
                lhs = X.compose(t, X.embed(PolyMap(width, width, sc, ring)))
                if not X.equal(lhs, X.scale(r, t)):
                    raise FaaValidationError(f"term {n} is not homogeneous in linear block {j}",
                                             "multilinear", n)
        for perm in permutations_to_check(n):
            idx, w = _block_permutation(a, perm)
            if not X.equal(X.compose(t, X.embed(select(w, idx, ring))), t):
                raise FaaValidationError(
                    f"term {n} is not symmetric under block permutation {tuple(i + 1 for i in perm)}",
                    "symmetric", n)
    return f


# -- JSON ----------------------------------------------------------------------

def faaseq_to_obj(f):
    terms = [faaseq_to_obj(t) if isinstance(t, FaaSeq) else polymap_to_obj(t) for t in f.terms]
    return {"dom": f.dom, "cod": f.cod, "order": f.order, "terms": terms}


def faaseq_from_obj(obj, ring=INT):
    try:
        terms = []
        for t in obj["terms"]:
            terms.append(faaseq_from_obj(t, ring) if "order" in t else polymap_from_obj(t, ring))
        f = FaaSeq(int(obj["dom"]), int(obj["cod"]), terms, ring)
        if "order" in obj and int(obj["order"]) != f.order:
            raise ValueError(f"declared order {obj['order']} but {len(terms)} terms given")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed FaaSeq JSON: {exc}") from None
    return f


def faaseq_to_json(f):
    return json.dumps(faaseq_to_obj(f), separators=(",", ":"))


def faaseq_from_json(text, ring=INT):
    return faaseq_from_obj(json.loads(text), ring)
