"""Seeded, exact law checking.

Inputs are sampled at random, verdicts are symbolic equalities.  Every sample
draws from its own ``random.Random`` seeded with the string
``"{seed}:{instance}:{law}:{index}"``, so a failure is replayed from those
four values alone.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field, asdict, replace

from . import faa as F
from . import ultrametric as U
from .delta import DeltaCategory, DeltaMap, delta_diff, delta_diff_lin, delta_to_obj
from .derivative import partial_n, partial_in_slot, faa_di_bruno_sum, hd8_rhs, total_n, zero_injection
from .polycat import (
    INT, Poly, PolyCategory, PolyMap, compose, diff, select, pair, add, scale,
    polymap_to_obj, projection, is_d_linear,
)
from .semiring import Semiring, parse_semiring


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    max_degree: int = 3
    max_arity: int = 2
    coefficient_pool: tuple = (0, 1, 2, 3)
    samples_per_law: int = 100
    truncation: int = 4
    ring: Semiring = INT
    max_terms: int = 3
    max_order: int = 3
    algebra_samples: int = 20
    algebra_truncation: int = 3
    algebra_degree: int = 2

    def __post_init__(self):
        if self.samples_per_law < 1:
            raise ValueError("samples_per_law must be at least 1")
        if self.truncation < 2:
            raise ValueError("truncation must be at least 2 for laws that differentiate twice")
        if self.algebra_truncation < 2:
            raise ValueError("algebra truncation must be at least 2")

    def to_obj(self):
        d = asdict(self)
        d["ring"] = self.ring.tag
        d["coefficient_pool"] = [str(c) for c in self.coefficient_pool]
        return d


@dataclass
class LawReport:
    law_id: str
    instance: str
    verdict: str
    samples_run: int
    counterexample: dict | None = None
    note: str = ""

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_obj(self):
        d = {"law_id": self.law_id, "instance": self.instance, "verdict": self.verdict,
             "samples_run": self.samples_run, "counterexample": self.counterexample}
        if self.note:
            d["note"] = self.note
        return d


def sort_reports(reports):
    return sorted(reports, key=lambda r: (r.law_id, r.instance))


def reports_to_json(reports):
    return json.dumps([r.to_obj() for r in sort_reports(reports)], indent=2, sort_keys=True)


def reports_table(reports):
    rows = [("law", "instance", "verdict", "samples")]
    for r in sort_reports(reports):
        rows.append((r.law_id, r.instance, r.verdict, str(r.samples_run)))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    for r in sort_reports(reports):
        if r.counterexample is not None:
            lines.append(f"{r.law_id} [{r.instance}] counterexample: "
                         + json.dumps(r.counterexample, sort_keys=True))
    return "\n".join(lines)


def to_obj(x):
    if isinstance(x, PolyMap):
        return polymap_to_obj(x)
    if isinstance(x, F.FaaSeq):
        return F.faaseq_to_obj(x)
    if isinstance(x, DeltaMap):
        return delta_to_obj(x)
    if isinstance(x, (list, tuple)):
        return [to_obj(v) for v in x]
    if isinstance(x, int):
        return x
    return str(x)


# -- sampling -----------------------------------------------------------------

class Sampler:
    def __init__(self, cfg: SampleConfig, ring=None, max_degree=None):
        self.cfg = cfg
        self.ring = ring or cfg.ring
        self.max_degree = cfg.max_degree if max_degree is None else max_degree

    def scalar(self, rng):
        return self.ring.normalize(rng.choice(self.cfg.coefficient_pool))

    def arity(self, rng):
        return rng.randint(1, self.cfg.max_arity)

    def exps(self, rng, arity, degree):
        e = [0] * arity
        for _ in range(degree):
            e[rng.randrange(arity)] += 1
        return e

    def poly(self, rng, arity, max_degree=None):
        md = self.max_degree if max_degree is None else max_degree
        terms = {}
        for _ in range(rng.randint(1, self.cfg.max_terms)):
            e = tuple(self.exps(rng, arity, rng.randint(0, md))) if arity else ()
            c = self.scalar(rng)
            terms[e] = self.ring.add(terms.get(e, 0), c)
        return Poly(arity, self.ring, terms)

    def polymap(self, rng, dom, cod, max_degree=None):
        return PolyMap(dom, cod, [self.poly(rng, dom, max_degree) for _ in range(cod)], self.ring)

    def linear_map(self, rng, dom, cod):
        comps = []
        for _ in range(cod):
            terms = {}
            for i in range(dom):
                if rng.random() < 0.7:
                    e = [0] * dom
                    e[i] = 1
                    terms[tuple(e)] = self.scalar(rng)
            comps.append(Poly(dom, self.ring, terms))
        return PolyMap(dom, cod, comps, self.ring)

    def multilinear_term(self, rng, a, n, cod, max_degree=None):
        """A term ``a(1+n) -> cod``, multilinear and symmetric in its last ``n`` blocks.

        Each summand is a point monomial times one variable per linear block,
        summed over the orbit of its block-variable assignment with one shared
        coefficient.  That orbit sum is symmetric with no factorial factors.
        """
        md = self.max_degree if max_degree is None else max_degree
        width = a * (1 + n)
        comps = []
        for _ in range(cod):
            terms = {}
            for _ in range(rng.randint(0, self.cfg.max_terms)):
                point = self.exps(rng, a, rng.randint(0, max(0, md - n)))
                choice = tuple(rng.randrange(a) for _ in range(n))
                c = self.scalar(rng)
                for assign in set(itertools.permutations(choice)):
                    e = point + [0] * (a * n)
                    for j, v in enumerate(assign):
                        e[a * (j + 1) + v] += 1
                    e = tuple(e)
                    terms[e] = self.ring.add(terms.get(e, 0), c)
            comps.append(Poly(width, self.ring, terms))
        return PolyMap(width, cod, comps, self.ring)

    def faaseq(self, rng, dom, cod, order=None, max_degree=None):
        N = self.cfg.truncation if order is None else order
        terms = [self.polymap(rng, dom, cod, max_degree)]
        for n in range(1, N + 1):
            terms.append(self.multilinear_term(rng, dom, n, cod, max_degree))
        return F.FaaSeq(dom, cod, terms, self.ring)

    def d_constant_seq(self, rng, dom, cod, order=None):
        N = self.cfg.truncation if order is None else order
        return F.homogeneous_embed(self.polymap(rng, dom, cod), 0, N)

    def perturb(self, rng, f, degree=None):
        """``f`` plus a homogeneous sequence; the distance to ``f`` is then at least ``2^-degree``."""
        k = rng.randint(0, f.order) if degree is None else degree
        h = self.multilinear_term(rng, f.dom, k, f.cod)
        return F.faa_add(f, F.homogeneous_embed(h, k, f.order))

    def delta(self, rng, dom, cod):
        return DeltaMap(self.polymap(rng, dom, cod), self.linear_map(rng, dom, cod), check=False)


# -- category instances for the CD suite --------------------------------------

class Instance:
    def __init__(self, name, cat, sample):
        self.name = name
        self.cat = cat
        self.sample = sample

    def sel(self, dom, idx):
        return self.cat.embed(select(dom, idx, self.cat.ring))


def make_instance(name, cfg, diff_fn=None):
    s = Sampler(cfg)
    if name == "polycat":
        return Instance(f"polycat:{cfg.ring.tag}", PolyCategory(cfg.ring, diff_fn), s.polymap)
    if name == "faa":
        cat = F.FaaCategory(PolyCategory(cfg.ring), cfg.truncation)
        if diff_fn is not None:
            cat.diff = diff_fn
        return Instance(f"faa:{cfg.ring.tag}:N={cfg.truncation}", cat,
                        lambda rng, d, c: s.faaseq(rng, d, c))
    if name == "delta":
        return Instance(f"delta:{cfg.ring.tag}", DeltaCategory(cfg.ring, diff_fn), s.delta)
    raise ValueError(f"unknown instance {name!r}")


def _ar(rng, cfg):
    return rng.randint(1, cfg.max_arity)


def cd1(rng, inst, cfg):
    # D[r f + s g] = r D[f] + s D[g]
    C = inst.cat
    n, m = _ar(rng, cfg), _ar(rng, cfg)
    f, g = inst.sample(rng, n, m), inst.sample(rng, n, m)
    r, s = Sampler(cfg).scalar(rng), Sampler(cfg).scalar(rng)
    lhs = C.diff(C.add(C.scale(r, f), C.scale(s, g)))
    rhs = C.add(C.scale(r, C.diff(f)), C.scale(s, C.diff(g)))
    return C.equal(lhs, rhs), {"f": f, "g": g, "r": r, "s": s}


def cd2(rng, inst, cfg):
    # D[f] ∘ <x, r y + s z> = r (D[f] ∘ <x, y>) + s (D[f] ∘ <x, z>)
    C = inst.cat
    ring = cfg.ring
    n, m = _ar(rng, cfg), _ar(rng, cfg)
    f = inst.sample(rng, n, m)
    r, s = Sampler(cfg).scalar(rng), Sampler(cfg).scalar(rng)
    x = select(3 * n, range(n), ring)
    y = select(3 * n, range(n, 2 * n), ring)
    z = select(3 * n, range(2 * n, 3 * n), ring)
    L = pair(x, add(scale(r, y), scale(s, z)))
    df = C.diff(f)
    lhs = C.compose(df, C.embed(L))
    rhs = C.add(C.scale(r, C.compose(df, inst.sel(3 * n, list(range(n)) + list(range(n, 2 * n))))),
                C.scale(s, C.compose(df, inst.sel(3 * n, list(range(n)) + list(range(2 * n, 3 * n))))))
    return C.equal(lhs, rhs), {"f": f, "r": r, "s": s}


def cd3(rng, inst, cfg):
    # D[1] = π1 and D[π_j] = π_{n+j+1}
    C = inst.cat
    arities = [_ar(rng, cfg) for _ in range(rng.randint(1, 3))]
    j = rng.randrange(len(arities))
    n = sum(arities)
    ok = C.equal(C.diff(C.identity(n)), inst.sel(2 * n, range(n, 2 * n)))
    start = sum(arities[:j])
    pj = C.embed(projection(arities, j, cfg.ring))
    ok = ok and C.equal(C.diff(pj), inst.sel(2 * n, range(n + start, n + start + arities[j])))
    return ok, {"arities": list(arities), "j": j}


def cd4(rng, inst, cfg):
    # D<f0, f1> = <D f0, D f1>
    C = inst.cat
    n = _ar(rng, cfg)
    f0, f1 = inst.sample(rng, n, _ar(rng, cfg)), inst.sample(rng, n, _ar(rng, cfg))
    lhs = C.diff(C.pair([f0, f1], n))
    rhs = C.pair([C.diff(f0), C.diff(f1)], 2 * n)
    return C.equal(lhs, rhs), {"f0": f0, "f1": f1}


def cd5(rng, inst, cfg):
    # D[g ∘ f] = D[g] ∘ <f ∘ π0, D[f]>
    C = inst.cat
    a, b, c = _ar(rng, cfg), _ar(rng, cfg), _ar(rng, cfg)
    f, g = inst.sample(rng, a, b), inst.sample(rng, b, c)
    lhs = C.diff(C.compose(g, f))
    rhs = C.compose(C.diff(g), C.pair([C.compose(f, inst.sel(2 * a, range(a))), C.diff(f)], 2 * a))
    return C.equal(lhs, rhs), {"f": f, "g": g}


def cd6(rng, inst, cfg):
    # D[D[f]] ∘ <x, y, 0, z> = D[f] ∘ <x, z>
    C = inst.cat
    n, m = _ar(rng, cfg), _ar(rng, cfg)
    f = inst.sample(rng, n, m)
    x, y, z = list(range(n)), list(range(n, 2 * n)), list(range(2 * n, 3 * n))
    lhs = C.compose(C.diff(C.diff(f)), inst.sel(3 * n, x + y + [None] * n + z))
    rhs = C.compose(C.diff(f), inst.sel(3 * n, x + z))
    return C.equal(lhs, rhs), {"f": f}


def cd7(rng, inst, cfg):
    # D[D[f]] ∘ <x, y, z, 0> = D[D[f]] ∘ <x, z, y, 0>
    C = inst.cat
    n, m = _ar(rng, cfg), _ar(rng, cfg)
    f = inst.sample(rng, n, m)
    x, y, z = list(range(n)), list(range(n, 2 * n)), list(range(2 * n, 3 * n))
    ddf = C.diff(C.diff(f))
    lhs = C.compose(ddf, inst.sel(3 * n, x + y + z + [None] * n))
    rhs = C.compose(ddf, inst.sel(3 * n, x + z + y + [None] * n))
    return C.equal(lhs, rhs), {"f": f}


CD_LAWS = {"CD.1": cd1, "CD.2": cd2, "CD.3": cd3, "CD.4": cd4, "CD.5": cd5, "CD.6": cd6, "CD.7": cd7}


def _run(law_id, instance_name, fn, cfg, samples=None):
    samples = cfg.samples_per_law if samples is None else samples
    for i in range(samples):
        rng = random.Random(f"{cfg.seed}:{instance_name}:{law_id}:{i}")
        ok, inputs = fn(rng)
        if ok is False:
            cex = {"seed": cfg.seed, "sample": i, "inputs": {k: to_obj(v) for k, v in inputs.items()}}
            return LawReport(law_id, instance_name, "fail", i + 1, cex)
    return LawReport(law_id, instance_name, "pass", samples)


def check_cd(instance="polycat", cfg=SampleConfig(), diff_fn=None):
    """CD.1 to CD.7 on one category instance."""
    inst = make_instance(instance, cfg, diff_fn)
    return [_run(law, inst.name, lambda rng, fn=fn: fn(rng, inst, cfg), cfg)
            for law, fn in CD_LAWS.items()]


# -- corrupted combinators for the mutation meta-test ----------------------------

def _mutant(term_fn):
    def d(f):
        n = f.dom
        ring = f.ring
        comps = []
        for p in f.components:
            acc = {}
            for e, c in p.terms.items():
                for ne, v in term_fn(e, c, n, ring):
                    acc[ne] = ring.add(acc.get(ne, 0), v)
            comps.append(Poly(2 * n, ring, acc))
        return PolyMap(2 * n, f.cod, comps, ring)
    return d


def _terms(e, c, n, ring, vars_=None, coef=True, dir_exp=1, swap=False, scale_by=1):
    vars_ = [i for i in range(n) if e[i]] if vars_ is None else vars_
    for i in vars_:
        k = e[i]
        if k == 0:
            continue
        ne = list(e) + [0] * n
        ne[i] = k - 1
        ne[n + i] = dir_exp
        if swap:
            ne = ne[n:] + ne[:n]
        v = ring.mul(ring.from_nat(k), c) if coef else c
        yield tuple(ne), ring.mul(ring.from_nat(scale_by), v)


MUTATIONS = {
    # the direction vector (the chain rule's second factor) is dropped
    "drop_chain_factor": _mutant(lambda e, c, n, r: _terms(e, c, n, r, dir_exp=0)),
    "doubled": _mutant(lambda e, c, n, r: _terms(e, c, n, r, scale_by=2)),
    "squared_direction": _mutant(lambda e, c, n, r: _terms(e, c, n, r, dir_exp=2)),
    "first_variable_only": _mutant(lambda e, c, n, r: _terms(e, c, n, r, vars_=[0])),
    "coefficient_dropped": _mutant(lambda e, c, n, r: _terms(e, c, n, r, coef=False)),
    "swapped_point_direction": _mutant(lambda e, c, n, r: _terms(e, c, n, r, swap=True)),
    "leading_variable_only": _mutant(
        lambda e, c, n, r: _terms(e, c, n, r, vars_=[i for i in range(n) if e[i]][:1])),
}


def replay(law_id, instance, cfg, sample, diff_fn=None):
    """Rerun one CD sample; returns the boolean verdict."""
    inst = make_instance(instance, cfg, diff_fn)
    rng = random.Random(f"{cfg.seed}:{inst.name}:{law_id}:{sample}")
    ok, _ = CD_LAWS[law_id](rng, inst, cfg)
    return ok


# -- HD suite -------------------------------------------------------------------

def _hd(fn, cfg, max_order):
    S = Sampler(cfg)

    def law(rng):
        ok_all = True
        inputs = {}
        for n in range(max_order + 1):
            ok, inp = fn(rng, S, cfg, n)
            if not ok:
                inp["order"] = n
                return False, inp
            inputs = inp
        return ok_all, inputs
    return law


def hd1(rng, S, cfg, n):
    a, m = S.arity(rng), S.arity(rng)
    f, g = S.polymap(rng, a, m), S.polymap(rng, a, m)
    r, s = S.scalar(rng), S.scalar(rng)
    lhs = partial_n(add(scale(r, f), scale(s, g)), n)
    return lhs == add(scale(r, partial_n(f, n)), scale(s, partial_n(g, n))), {"f": f, "g": g, "r": r, "s": s}


def hd2(rng, S, cfg, n):
    # multilinear and symmetric in the last n blocks, checked structurally
    a, m = S.arity(rng), S.arity(rng)
    f = S.polymap(rng, a, m)
    return F.check_term(partial_n(f, n), a, n) is None, {"f": f}


def hd3(rng, S, cfg, n):
    a, m = S.arity(rng), S.arity(rng)
    f = S.linear_map(rng, a, m)
    ok = is_d_linear(f)
    ok = ok and partial_n(f, 1) == compose(f, select(2 * a, range(a, 2 * a), cfg.ring))
    ok = ok and partial_n(f, n + 2).is_zero()
    return ok, {"f": f}


def hd4(rng, S, cfg, n):
    a = S.arity(rng)
    f0, f1 = S.polymap(rng, a, S.arity(rng)), S.polymap(rng, a, S.arity(rng))
    return partial_n(pair(f0, f1), n) == pair(partial_n(f0, n), partial_n(f1, n)), {"f0": f0, "f1": f1}


def hd5(rng, S, cfg, n):
    a, b, c = S.arity(rng), S.arity(rng), S.arity(rng)
    f, g = S.polymap(rng, a, b), S.polymap(rng, b, c)
    return partial_n(compose(g, f), n) == faa_di_bruno_sum(g, f, n), {"f": f, "g": g}


def hd6(rng, S, cfg, n):
    # D_j[∂ⁿ f] = ∂ⁿ f with block j replaced by the fresh direction
    a, m = S.arity(rng), S.arity(rng)
    f = S.polymap(rng, a, m)
    h = partial_n(f, n)
    width = a * (1 + n)
    for j in range(1, n + 1):
        idx = list(range(width))
        idx[a * j:a * (j + 1)] = range(width, width + a)
        if partial_in_slot(h, [a] * (n + 1), j) != compose(h, select(width + a, idx, cfg.ring)):
            return False, {"f": f, "slot": j}
    return True, {"f": f}


def hd7(rng, S, cfg, n):
    a, m = S.arity(rng), S.arity(rng)
    f = S.polymap(rng, a, m)
    h = partial_n(f, n)
    for perm in itertools.permutations(range(n)):
        idx, width = F._block_permutation(a, perm)
        if compose(h, select(width, idx, cfg.ring)) != h:
            return False, {"f": f, "permutation": list(perm)}
    return True, {"f": f}


def hd8(rng, S, cfg, n):
    # D[∂ⁿ f] = ∂ⁿ[D f] ∘ <π0, π_{n+1}, π1, π_{n+2}, ..> = ∂^{n+1} f ∘ .. + Σ ∂ⁿ f ∘ ..
    a, m = S.arity(rng), S.arity(rng)
    f = S.polymap(rng, a, m)
    lhs = diff(partial_n(f, n))
    idx = []
    for i in range(n + 1):
        idx += list(range(a * i, a * (i + 1)))
        idx += list(range(a * (n + 1 + i), a * (n + 2 + i)))
    middle = compose(partial_n(diff(f), n), select(2 * a * (n + 1), idx, cfg.ring))
    return lhs == middle == hd8_rhs(f, n), {"f": f}


def hdz(rng, S, cfg, n):
    # ∂ⁿ[f] = Dⁿ[f] ∘ z_n
    a, m = S.arity(rng), S.arity(rng)
    f = S.polymap(rng, a, m)
    return partial_n(f, n) == compose(total_n(f, n), zero_injection(n, a, cfg.ring)), {"f": f}


HD_LAWS = {"HD.1": hd1, "HD.2": hd2, "HD.3": hd3, "HD.4": hd4, "HD.5": hd5,
           "HD.6": hd6, "HD.7": hd7, "HD.8": hd8, "HD.z": hdz}


def check_hd(cfg=SampleConfig(), max_order=None):
    """HD.1 to HD.8 (plus the ``z_n`` cross-check) for every order up to ``max_order``."""
    max_order = cfg.max_order if max_order is None else max_order
    name = f"polycat:{cfg.ring.tag}"
    return [_run(law, name, _hd(fn, cfg, max_order), cfg) for law, fn in HD_LAWS.items()]


# -- cofreeness criteria and the ultrametric ------------------------------------

def _fa(rng, S, cfg):
    a, b = S.arity(rng), S.arity(rng)
    return S.faaseq(rng, a, b), a, b


def cof_unit_dconstant(rng, S, cfg):
    a = S.arity(rng)
    u = F.constant_unit(a, cfg.truncation, cfg.ring)
    ok = F.is_d_constant_seq(u) and F._is_zero(F.faa_diff(u))
    ok = ok and F.functor_E(u) == select(a, range(a), cfg.ring)
    return ok, {"arity": a}


def cof_unit_idempotent(rng, S, cfg):
    a = S.arity(rng)
    u = F.constant_unit(a, cfg.truncation, cfg.ring)
    return F.faa_compose(u, u) == u, {"arity": a}


def cof_unit_vanishes(rng, S, cfg):
    # ς ∘ c = c for D-constants c, and ς ∘ f = (f⁰, 0, ..) for any f
    a, b = S.arity(rng), S.arity(rng)
    c = S.d_constant_seq(rng, a, b)
    f = S.faaseq(rng, a, b)
    u = F.constant_unit(b, cfg.truncation, cfg.ring)
    ok = F.faa_compose(u, c) == c
    ok = ok and F.faa_compose(u, f) == F.homogeneous_embed(f.terms[0], 0, f.order)
    return ok, {"c": c, "f": f}


def cof_unit_unique(rng, S, cfg):
    # a D-constant u with E(u) = 1 must be ς; candidates u = ς ∘ s with E(s) = 1
    a = S.arity(rng)
    s = S.faaseq(rng, a, a)
    s = F.FaaSeq(a, a, (select(a, range(a), cfg.ring),) + s.terms[1:], cfg.ring)
    u = F.faa_compose(F.constant_unit(a, cfg.truncation, cfg.ring), s)
    ok = F.is_d_constant_seq(u) and F.functor_E(u) == s.terms[0]
    return ok and u == F.constant_unit(a, cfg.truncation, cfg.ring), {"s": s}


def cof_decompose(rng, S, cfg):
    f, _, _ = _fa(rng, S, cfg)
    parts = F.decompose(f)
    return len(parts) == f.order + 1 and F.seq_sum(parts) == f, {"f": f}


def _partial_in_faa(f, m):
    cat = F.FaaCategory(PolyCategory(f.ring), f.order)
    return partial_n(f, m, cat)


def cof_convenient(rng, S, cfg):
    """``E(∂ⁿ[f•]) = fⁿ`` and the embedded parts are homogeneous of their degree.

    Homogeneous of degree n means ``ς ∘ ∂ᵐ[g] = 0`` for ``m ≠ n``.  Together these
    pin ``homogeneous_embed(h, n)`` as the only such sequence with ``∂ⁿ``-part h.
    """
    a, b = S.arity(rng), S.arity(rng)
    N = cfg.algebra_truncation
    f = S.faaseq(rng, a, b, order=N)
    for n in range(N + 1):
        if F.functor_E(_partial_in_faa(f, n)) != f.terms[n]:
            return False, {"f": f, "n": n}
        g = F.homogeneous_embed(f.terms[n], n, N)
        for m in range(N + 1):
            dm = _partial_in_faa(g, m)
            unit = F.constant_unit(b, dm.order, cfg.ring)
            vanish = F._is_zero(F.faa_compose(unit, dm))
            if vanish != (m != n or g.terms[n].is_zero()):
                return False, {"f": f, "n": n, "m": m}
    return True, {"f": f}


def um_triple(rng, S, cfg):
    f, _, _ = _fa(rng, S, cfg)
    g = S.perturb(rng, f)
    h = S.perturb(rng, g)
    return f, g, h


def um_symmetry(rng, S, cfg):
    f, g, h = um_triple(rng, S, cfg)
    return U.check_symmetry(f, g) and U.check_symmetry(f, h), {"f": f, "g": g}


def um_indiscernibles(rng, S, cfg):
    f, g, h = um_triple(rng, S, cfg)
    ok = U.check_indiscernibles(f, f) and U.check_indiscernibles(f, g)
    return ok and U.distance(f, f) == U.Distance.agree_up_to(f.order), {"f": f, "g": g}


def um_strong_triangle(rng, S, cfg):
    f, g, h = um_triple(rng, S, cfg)
    ok = all(U.check_strong_triangle(*t) for t in itertools.permutations((f, g, h)))
    return ok, {"f": f, "g": g, "h": h}


def um_compose(rng, S, cfg):
    a, b, c = S.arity(rng), S.arity(rng), S.arity(rng)
    f1 = S.faaseq(rng, a, b)
    g1 = S.faaseq(rng, b, c)
    f2, g2 = S.perturb(rng, f1), S.perturb(rng, g1)
    return U.check_nonexpansive_compose(f1, g1, f2, g2), {"f1": f1, "g1": g1, "f2": f2, "g2": g2}


def um_pairing(rng, S, cfg):
    a = S.arity(rng)
    f0, f1 = S.faaseq(rng, a, S.arity(rng)), S.faaseq(rng, a, S.arity(rng))
    g0, g1 = S.perturb(rng, f0), S.perturb(rng, f1)
    return U.check_pairing_isometry([f0, f1], [g0, g1]), {"f0": f0, "f1": f1, "g0": g0, "g1": g1}


def um_add_scale(rng, S, cfg):
    f1, a, b = _fa(rng, S, cfg)
    f2 = S.faaseq(rng, a, b)
    g1, g2 = S.perturb(rng, f1), S.perturb(rng, f2)
    r = S.scalar(rng)
    ok = U.check_nonexpansive_add(f1, g1, f2, g2) and U.check_nonexpansive_scale(r, f1, g1)
    return ok, {"f1": f1, "g1": g1, "f2": f2, "g2": g2, "r": r}


def um_derivative_shift(rng, S, cfg):
    f, _, _ = _fa(rng, S, cfg)
    g = S.perturb(rng, f, rng.randint(1, f.order))
    verdict = U.check_derivative_shift(f, g)
    return verdict is not False, {"f": f, "g": g}


def um_cauchy(rng, S, cfg):
    # partial sums of the homogeneous parts stabilize by index m at threshold m, and reach f
    f, _, _ = _fa(rng, S, cfg)
    sums = F.partial_sums(F.decompose(f))
    for m in range(f.order + 1):
        K = U.cauchy_stabilization(sums, m)
        if K is None or K > m or sums[K].terms[:m + 1] != f.terms[:m + 1]:
            return False, {"f": f, "m": m}
    return True, {"f": f}


COFREE_LAWS = {
    "COF.unit-dconstant": cof_unit_dconstant,
    "COF.unit-idempotent": cof_unit_idempotent,
    "COF.unit-vanishes": cof_unit_vanishes,
    "COF.unit-unique": cof_unit_unique,
    "COF.decompose-sum": cof_decompose,
    "COF.convenient": cof_convenient,
    "UM.symmetry": um_symmetry,
    "UM.indiscernibles": um_indiscernibles,
    "UM.strong-triangle": um_strong_triangle,
    "UM.nonexpansive-compose": um_compose,
    "UM.pairing-isometry": um_pairing,
    "UM.nonexpansive-add-scale": um_add_scale,
    "UM.derivative-shift": um_derivative_shift,
    "UM.cauchy-decompose": um_cauchy,
}

# the F[A]-internal derivatives make this one markedly heavier than the rest
_LIGHT_SAMPLES = {"COF.convenient"}


def check_cofree_criteria(cfg=SampleConfig()):
    S = Sampler(cfg)
    name = f"faa:{cfg.ring.tag}:N={cfg.truncation}"
    out = []
    for law, fn in COFREE_LAWS.items():
        samples = min(cfg.samples_per_law, cfg.algebra_samples) if law in _LIGHT_SAMPLES else None
        out.append(_run(law, name, lambda rng, fn=fn: fn(rng, S, cfg), cfg, samples))
    return out


# -- monad algebra laws -----------------------------------------------------------

def nested_sample(f):
    """``N(N(f•))``: a map of F[F[F[k-POLY]]] built from a Faà di Bruno sequence."""
    N = f.order
    inner = F.FaaCategory(PolyCategory(f.ring), N)
    middle = F.FaaCategory(inner, N)
    outer = F.FaaCategory(middle, N)
    once = middle.lift(f, N)
    return once, outer.lift(once, N)


def alg_unit(rng, S, cfg):
    a, b = S.arity(rng), S.arity(rng)
    f = S.faaseq(rng, a, b, order=cfg.algebra_truncation)
    return F.monad_mult(F.unit_N(f)) == f, {"f": f}


def alg_nested_valid(rng, S, cfg):
    a, b = S.arity(rng), S.arity(rng)
    f = S.faaseq(rng, a, b, order=cfg.algebra_truncation)
    once = F.unit_N(f)
    try:
        F.validate_nested(once)
    except F.FaaValidationError:
        return False, {"f": f}
    return True, {"f": f}


def alg_mult_square(rng, S, cfg):
    # M ∘ F[M] = M ∘ M on a map of F[F[F[A]]]
    a, b = S.arity(rng), S.arity(rng)
    f = S.faaseq(rng, a, b, order=cfg.algebra_truncation)
    _, h = nested_sample(f)
    left = F.monad_mult(F.map_terms(F.monad_mult, h))
    right = F.monad_mult(F.monad_mult(h))
    return left == right == f, {"f": f}


def alg_E_compat(rng, S, cfg):
    # E ∘ M = E ∘ E on F[F[A]]
    a, b = S.arity(rng), S.arity(rng)
    f = S.faaseq(rng, a, b, order=cfg.algebra_truncation)
    h = F.unit_N(f)
    return F.functor_E(F.monad_mult(h)) == F.functor_E(F.functor_E(h)), {"f": f}


ALGEBRA_LAWS = {
    "ALG.unit": alg_unit,
    "ALG.nested-valid": alg_nested_valid,
    "ALG.mult-square": alg_mult_square,
    "ALG.E-compat": alg_E_compat,
}


def check_algebra_laws(cfg=SampleConfig()):
    S = Sampler(cfg, max_degree=cfg.algebra_degree)
    name = f"faa:{cfg.ring.tag}:N={cfg.algebra_truncation}"
    return [_run(law, name, lambda rng, fn=fn: fn(rng, S, cfg), cfg, cfg.algebra_samples)
            for law, fn in ALGEBRA_LAWS.items()]


def check_all(cfg=SampleConfig()):
    reports = []
    for inst in ("polycat", "faa", "delta"):
        reports += check_cd(inst, cfg)
    reports += check_hd(cfg)
    reports += check_cofree_criteria(cfg)
    reports += check_algebra_laws(cfg)
    return sort_reports(reports)


def config_from(seed=0, ring="int", truncation=4, samples=None, **kw):
    r = parse_semiring(ring) if isinstance(ring, str) else ring
    extra = dict(kw)
    if samples is not None:
        extra["samples_per_law"] = samples
    return SampleConfig(seed=seed, ring=r, truncation=truncation, **extra)
