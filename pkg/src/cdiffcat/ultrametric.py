"""The ultrametric on Faà di Bruno sequences.

Two sequences are at distance ``2^-n`` where ``n`` is the first index at which
their terms differ.  Stored sequences are truncated, so when every stored term
agrees the most we can say is ``AgreeUpTo(N)``; that value sits below every
``Exact(n)``.  ``Zero`` is the untruncated limit and is never produced here.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .faa import FaaSeq, faa_compose, faa_pair, faa_add, faa_scale, faa_diff
from .polycat import ArityError


@functools.total_ordering
@dataclass(frozen=True)
class Distance:
    kind: str  # "exact" | "agree" | "zero"
    n: int = 0

    @staticmethod
    def exact(n):
        return Distance("exact", n)

    @staticmethod
    def agree_up_to(n):
        return Distance("agree", n)

    @staticmethod
    def zero():
        return Distance("zero", 0)

    def _key(self):
        if self.kind == "exact":
            return (2, -self.n)
        if self.kind == "agree":
            return (1, 0)
        return (0, 0)

    def __lt__(self, other):
        return self._key() < other._key()

    def __eq__(self, other):
        if not isinstance(other, Distance):
            return NotImplemented
        return (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def value(self):
        """``2^-n`` as an exact fraction; ``None`` when only agreement is known."""
        if self.kind == "exact":
            return Fraction(1, 2 ** self.n)
        if self.kind == "zero":
            return Fraction(0)
        return None

    def to_obj(self):
        if self.kind == "exact":
            return {"exact": self.n}
        if self.kind == "agree":
            return {"agree_up_to": self.n}
        return {"zero": True}

    @staticmethod
    def from_obj(obj):
        if "exact" in obj:
            return Distance.exact(int(obj["exact"]))
        if "agree_up_to" in obj:
            return Distance.agree_up_to(int(obj["agree_up_to"]))
        if obj.get("zero"):
            return Distance.zero()
        raise ValueError(f"not a distance: {obj!r}")

    def __str__(self):
        if self.kind == "exact":
            return f"Exact({self.n})"
        if self.kind == "agree":
            return f"AgreeUpTo({self.n})"
        return "Zero"


def _max(*ds):
    return max(ds)


def distance(f: FaaSeq, g: FaaSeq) -> Distance:
    """First index of disagreement, or ``AgreeUpTo(N)``."""
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ArityError(f"shape mismatch: {f.dom}->{f.cod} vs {g.dom}->{g.cod}")
    if f.order != g.order:
        raise ArityError(f"order mismatch: {f.order} vs {g.order}")
    for n, (a, b) in enumerate(zip(f.terms, g.terms)):
        if a != b:
            return Distance.exact(n)
    return Distance.agree_up_to(f.order)


def check_symmetry(f, g):
    return distance(f, g) == distance(g, f)


def check_indiscernibles(f, g):
    # AgreeUpTo exactly when every stored term matches
    return (distance(f, g).kind == "agree") == (f.terms == g.terms)


def check_strong_triangle(f, g, h):
    return distance(f, h) <= _max(distance(f, g), distance(g, h))


def check_nonexpansive_compose(f1, g1, f2, g2):
    """``d(g1∘f1, g2∘f2) <= max(d(f1,f2), d(g1,g2))``."""
    return distance(faa_compose(g1, f1), faa_compose(g2, f2)) <= _max(distance(f1, f2), distance(g1, g2))


def check_pairing_isometry(fs, gs):
    """``d(<f0,f1,..>, <g0,g1,..>) = max d(fi, gi)``."""
    return distance(faa_pair(list(fs)), faa_pair(list(gs))) == _max(*[distance(a, b) for a, b in zip(fs, gs)])


def check_nonexpansive_add(f1, g1, f2, g2):
    return distance(faa_add(f1, f2), faa_add(g1, g2)) <= _max(distance(f1, g1), distance(f2, g2))


def check_nonexpansive_scale(r, f, g):
    return distance(faa_scale(r, f), faa_scale(r, g)) <= distance(f, g)


def check_derivative_shift(f, g):
    """If ``d(f, g) = 2^-(n+1)`` then ``d(D f, D g) = 2^-n``.

    Returns ``None`` when the hypothesis does not apply (disagreement at 0).
    Agreement up to ``N`` must become agreement up to ``N-1``.
    """
    if f.order < 1:
        raise ValueError("derivative shift needs order >= 1")
    d = distance(f, g)
    dd = distance(faa_diff(f), faa_diff(g))
    if d.kind == "agree":
        return dd == Distance.agree_up_to(d.n - 1)
    if d.n == 0:
        return None
    return dd == Distance.exact(d.n - 1)


def cauchy_stabilization(seq, m):
    """Least ``K`` with terms ``0..m`` constant along ``seq[K:]``, or ``None`` if empty.

    Only the given finite prefix is inspected, so the answer is relative to it.
    """
    seq = list(seq)
    if not seq:
        return None
    for s in seq:
        if m > s.order:
            raise ValueError(f"threshold {m} exceeds truncation {s.order}")
    K = len(seq) - 1
    while K > 0 and seq[K - 1].terms[:m + 1] == seq[K].terms[:m + 1]:
        K -= 1
    return K
