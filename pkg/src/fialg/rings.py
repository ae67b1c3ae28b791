"""Exact scalar arithmetic: integers, rationals, residues mod n.

A Ring object owns the arithmetic and works on plain canonical payloads
(int for integers, fractions.Fraction in lowest terms for rationals, int in
[0, n) for residues).  Nothing here ever touches a float.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FialgError, NotAUnitError, SpecMismatchError


class Ring:
    """Common surface of the three concrete rings."""

    kind = "?"

    # concrete subclasses bind: zero, one, add, sub, neg, mul

    def is_zero(self, a) -> bool:
        return a == self.zero

    def normalize(self, a):
        raise NotImplementedError

    def try_invert(self, a):
        """Exact multiplicative inverse of a, or None when a is not a unit."""
        raise NotImplementedError

    def invert(self, a):
        inv = self.try_invert(a)
        if inv is None:
            raise NotAUnitError(f"{self.format(a)} is not a unit of {self}")
        return inv

    def is_unit(self, a) -> bool:
        return self.try_invert(a) is not None

    def is_two_torsionfree(self) -> bool:
        """True when 2a = 0 forces a = 0."""
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def sample(self, rng):
        raise NotImplementedError

    def sample_unit(self, rng):
        raise NotImplementedError

    def to_json(self):
        return {"ring": self.kind}

    def __repr__(self):
        return self.kind

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class IntegerRing(Ring):
    kind = "integers"
    zero = 0
    one = 1
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)

    def normalize(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise FialgError(f"not an integer payload: {a!r}")
        return a

    def try_invert(self, a):
        return a if a in (1, -1) else None

    def is_two_torsionfree(self):
        return True

    def parse(self, text):
        try:
            return int(text)
        except ValueError as exc:
            raise FialgError(f"bad integer scalar {text!r}") from exc

    def sample(self, rng):
        return rng.randint(-6, 6)

    def sample_unit(self, rng):
        return rng.choice((1, -1))


class RationalRing(Ring):
    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)

    def normalize(self, a):
        if isinstance(a, float):
            raise FialgError("floats are not exact; use Fraction or int")
        return Fraction(a)

    def try_invert(self, a):
        return None if a == 0 else 1 / Fraction(a)

    def is_two_torsionfree(self):
        return True

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FialgError(f"bad rational scalar {text!r}") from exc

    def sample(self, rng):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    def sample_unit(self, rng):
        num = rng.choice([n for n in range(-5, 6) if n])
        return Fraction(num, rng.randint(1, 4))


class ModularRing(Ring):
    """Residues mod n with canonical representatives in [0, n)."""

    kind = "modular"

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise FialgError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        n = modulus
        self.zero = 0
        self.one = 1 % n
        self.add = lambda a, b: (a + b) % n
        self.sub = lambda a, b: (a - b) % n
        self.neg = lambda a: (-a) % n
        self.mul = lambda a, b: (a * b) % n
        self._units = None

    def normalize(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise FialgError(f"not a residue payload: {a!r}")
        return a % self.modulus

    def try_invert(self, a):
        a %= self.modulus
        g, s, _ = _gcdex(a, self.modulus)
        if g != 1:
            return None
        return s % self.modulus

    def is_two_torsionfree(self):
        # 2a = 0 mod n has the nonzero solution a = n/2 exactly when n is even.
        return self.modulus % 2 == 1

    def parse(self, text):
        try:
            return int(text) % self.modulus
        except ValueError as exc:
            raise FialgError(f"bad residue scalar {text!r}") from exc

    def sample(self, rng):
        return rng.randrange(self.modulus)

    def sample_unit(self, rng):
        if self._units is None:
            self._units = tuple(
                r for r in range(1, self.modulus) if gcd(r, self.modulus) == 1
            )
        return rng.choice(self._units)

    def to_json(self):
        return {"ring": {"modular": self.modulus}}

    def __repr__(self):
        return f"modular({self.modulus})"

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("modular", self.modulus))


def _gcdex(a: int, b: int):
    """Extended gcd: returns (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


INTEGERS = IntegerRing()
RATIONALS = RationalRing()


def modular(n: int) -> ModularRing:
    return ModularRing(n)


def ring_from_json(obj) -> Ring:
    """Parse the {"ring": ...} wire fragment."""
    if not isinstance(obj, dict) or "ring" not in obj:
        raise FialgError(f"not a ring description: {obj!r}")
    desc = obj["ring"]
    if desc == "integers":
        return INTEGERS
    if desc == "rationals":
        return RATIONALS
    if isinstance(desc, dict) and set(desc) == {"modular"}:
        return ModularRing(desc["modular"])
    raise FialgError(f"unknown ring description: {desc!r}")


@dataclass(frozen=True)
class RingValue:
    """A scalar tagged with its ring; mixing rings raises SpecMismatchError.

    Convenience wrapper for callers juggling several rings at once — the
    bulk data structures keep raw payloads and one shared Ring instead.
    """

    ring: Ring
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.normalize(self.value))

    def _peer(self, other) -> "RingValue":
        if not isinstance(other, RingValue):
            return RingValue(self.ring, other)
        if other.ring != self.ring:
            raise SpecMismatchError(f"cannot combine {self.ring} with {other.ring}")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return RingValue(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._peer(other)
        return RingValue(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._peer(other)
        return RingValue(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return RingValue(self.ring, self.ring.neg(self.value))

    def inverse(self) -> "RingValue":
        return RingValue(self.ring, self.ring.invert(self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def __str__(self):
        return self.ring.format(self.value)
