"""Exact coefficient rings: axioms, units, torsion, serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fialg import (
    INTEGERS,
    RATIONALS,
    NotAUnitError,
    RingValue,
    SpecMismatchError,
    modular,
    ring_from_json,
)
from fialg.errors import FialgError

RINGS = [INTEGERS, RATIONALS, modular(2), modular(9), modular(12), modular(97)]


def elements(ring):
    """A hypothesis strategy producing normalized elements of the ring."""
    if ring is INTEGERS:
        return st.integers(-50, 50)
    if ring is RATIONALS:
        return st.fractions(max_denominator=12)
    return st.integers(0, ring.modulus - 1)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
class TestAxioms:
    def test_identities(self, ring):
        for a in [ring.zero, ring.one, ring.sample(__import__("random").Random(1))]:
            assert ring.add(a, ring.zero) == a
            assert ring.mul(a, ring.one) == a
            assert ring.mul(ring.one, a) == a

    def test_add_mul_laws(self, ring):
        @given(elements(ring), elements(ring), elements(ring))
        def laws(a, b, c):
            a, b, c = map(ring.normalize, (a, b, c))
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
            assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
            assert ring.mul(a, ring.add(b, c)) == ring.add(
                ring.mul(a, b), ring.mul(a, c)
            )
            assert ring.add(a, ring.neg(a)) == ring.zero
            assert ring.sub(a, b) == ring.add(a, ring.neg(b))

        laws()

    def test_format_parse_round_trip(self, ring):
        @given(elements(ring))
        def round_trip(a):
            a = ring.normalize(a)
            assert ring.parse(ring.format(a)) == a

        round_trip()


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_try_invert_is_exact(ring):
    @given(elements(ring))
    def inverse_law(a):
        a = ring.normalize(a)
        inv = ring.try_invert(a)
        if inv is None:
            assert not ring.is_unit(a)
        else:
            assert ring.mul(a, inv) == ring.one
            assert ring.mul(inv, a) == ring.one

    inverse_law()


def test_integer_units_are_signs():
    assert INTEGERS.try_invert(1) == 1
    assert INTEGERS.try_invert(-1) == -1
    assert INTEGERS.try_invert(2) is None
    with pytest.raises(NotAUnitError):
        INTEGERS.invert(0)


def test_rational_units_are_nonzero():
    assert RATIONALS.invert(Fraction(3, 4)) == Fraction(4, 3)
    assert RATIONALS.try_invert(Fraction(0)) is None


def test_modular_units_by_gcd():
    ring = modular(12)
    units = {a for a in range(12) if ring.is_unit(a)}
    from math import gcd

    assert units == {a for a in range(12) if gcd(a, 12) == 1}


def test_two_torsionfree_iff_odd_modulus():
    assert INTEGERS.is_two_torsionfree()
    assert RATIONALS.is_two_torsionfree()
    for n in range(2, 51):
        # brute scan: does 2a = 0 have a nonzero solution?
        has_torsion = any(
            (2 * a) % n == 0 and a % n != 0 for a in range(n)
        )
        assert modular(n).is_two_torsionfree() == (not has_torsion)
        assert modular(n).is_two_torsionfree() == (n % 2 == 1)


def test_normalize_guards():
    with pytest.raises(FialgError):
        INTEGERS.normalize(True)  # bools are not ring elements
    with pytest.raises(FialgError):
        RATIONALS.normalize(0.5)
    assert modular(7).normalize(-1) == 6
    assert RATIONALS.normalize(3) == Fraction(3)


def test_modular_requires_sensible_modulus():
    with pytest.raises(FialgError):
        modular(1)
    with pytest.raises(FialgError):
        modular(0)


def test_ring_json_round_trip():
    for ring in RINGS:
        assert ring_from_json(ring.to_json()) == ring
    with pytest.raises(FialgError):
        ring_from_json({"ring": "octonions"})
    with pytest.raises(FialgError):
        ring_from_json({"rng": "rationals"})


def test_ring_value_wrapper():
    a = RingValue(RATIONALS, Fraction(1, 2))
    b = RingValue(RATIONALS, Fraction(1, 3))
    assert (a + b).value == Fraction(5, 6)
    assert (a * b).value == Fraction(1, 6)
    assert (a - b).value == Fraction(1, 6)
    assert (-a).value == Fraction(-1, 2)
    assert a.inverse().value == 2
    assert a.is_unit()
    c = RingValue(INTEGERS, 2)
    with pytest.raises(SpecMismatchError):
        _ = a + c
