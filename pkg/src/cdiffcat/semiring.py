"""Exact commutative semirings used as coefficient domains.

A :class:`Semiring` is a small immutable configuration object.  Polynomials
store raw Python values (``int`` or ``Fraction``) that the semiring has
normalized; :class:`Element` wraps a value together with its semiring for
callers who want operator syntax with mixed-instance protection.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


class SemiringError(ValueError):
    pass


class MixedSemiringError(SemiringError):
    pass


@dataclass(frozen=True)
class Semiring:
    """One of ``nat``, ``int``, ``rat`` or ``modp:<p>``."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind not in ("nat", "int", "rat", "modp"):
            raise SemiringError(f"unknown semiring kind {self.kind!r}")
        if self.kind == "modp" and self.modulus < 2:
            raise SemiringError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def tag(self) -> str:
        return f"modp:{self.modulus}" if self.kind == "modp" else self.kind

    def __str__(self):
        return self.tag

    @property
    def has_negatives(self) -> bool:
        return self.kind != "nat"

    @property
    def is_finite(self) -> bool:
        return self.kind == "modp"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus if self.kind == "modp" else 1

    def normalize(self, value):
        """Coerce an int/Fraction into canonical form, rejecting values outside k."""
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "rat":
            value = Fraction(value)
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                if self.kind == "modp":
                    return self.div(value.numerator, value.denominator)
                raise SemiringError(f"{value} is not an element of {self.tag}")
            value = value.numerator
        if not isinstance(value, int):
            raise SemiringError(f"cannot interpret {value!r} in {self.tag}")
        if self.kind == "modp":
            return value % self.modulus
        if self.kind == "nat" and value < 0:
            raise SemiringError(f"{value} is not a natural number")
        return value

    def add(self, a, b):
        s = a + b
        return s % self.modulus if self.kind == "modp" else s

    def mul(self, a, b):
        p = a * b
        if self.kind == "modp":
            return p % self.modulus
        if self.kind == "rat" and isinstance(p, Fraction) and p.denominator == 1:
            return p.numerator
        return p

    def neg(self, a):
        if not self.has_negatives:
            raise SemiringError("the natural numbers have no additive inverses")
        return self.normalize(-a)

    def div(self, a, b):
        # only used by the parser for rational literals
        if self.kind == "rat":
            return self.normalize(Fraction(a, b))
        if self.kind == "modp":
            try:
                inv = pow(b % self.modulus, -1, self.modulus)
            except ValueError:
                raise SemiringError(f"{b} is not invertible mod {self.modulus}") from None
            return (a * inv) % self.modulus
        if b != 0 and a % b == 0:
            return self.normalize(a // b)
        raise SemiringError(f"{a}/{b} is not an element of {self.tag}")

    def from_nat(self, n: int):
        """The image of the natural number n, i.e. 1 + 1 + ... + 1 (n times)."""
        return self.normalize(n)

    def eq(self, a, b) -> bool:
        return a == b

    def elements(self):
        """All elements of a finite semiring."""
        if not self.is_finite:
            raise SemiringError(f"{self.tag} is infinite")
        return list(range(self.modulus))

    def sample(self, rng: random.Random, pool=None):
        if pool:
            return self.normalize(rng.choice(list(pool)))
        if self.kind == "modp":
            return rng.randrange(self.modulus)
        if self.kind == "nat":
            return rng.randint(0, 5)
        if self.kind == "rat":
            return self.normalize(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
        return rng.randint(-5, 5)

    def format(self, value) -> str:
        return str(value)

    def parse_value(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num), int(den))
        return self.normalize(int(text))

    def element(self, value) -> "Element":
        return Element(self, self.normalize(value))


def parse_semiring(tag: str) -> Semiring:
    """Look up a semiring by its tag: ``nat``, ``int``, ``rat`` or ``modp:<p>``."""
    tag = tag.strip()
    if tag in ("nat", "int", "rat"):
        return Semiring(tag)
    if tag.startswith("modp:"):
        try:
            p = int(tag[5:])
        except ValueError:
            raise SemiringError(f"bad modulus in {tag!r}") from None
        return Semiring("modp", p)
    raise SemiringError(f"unknown semiring tag {tag!r}")


NAT = Semiring("nat")
INT = Semiring("int")
RAT = Semiring("rat")


def modp(p: int) -> Semiring:
    return Semiring("modp", p)


@dataclass(frozen=True)
class Element:
    """A semiring value bound to its semiring."""

    ring: Semiring
    value: object

    def _check(self, other):
        if not isinstance(other, Element):
            return Element(self.ring, self.ring.normalize(other))
        if other.ring != self.ring:
            raise MixedSemiringError(f"cannot combine {self.ring.tag} with {other.ring.tag}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.ring, self.ring.add(self.value, other.value))

    __radd__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.ring, self.ring.mul(self.value, other.value))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise MixedSemiringError(f"cannot compare {self.ring.tag} with {other.ring.tag}")
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"Element({self.ring.tag}, {self.value})"


def add(a: Element, b: Element) -> Element:
    return a + b


def mul(a: Element, b: Element) -> Element:
    return a * b


def zero(ring: Semiring) -> Element:
    return Element(ring, ring.zero())


def one(ring: Semiring) -> Element:
    return Element(ring, ring.one())


def eq(a: Element, b: Element) -> bool:
    return a == b
