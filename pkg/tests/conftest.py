"""Shared fixtures: the named poset menagerie, the ring roster, and the
corpus of generated Jordan isomorphisms used across test modules."""

import pytest

from fialg import (
    INTEGERS,
    RATIONALS,
    modular,
    random_basis_change,
    random_jordan_iso,
    random_poset,
    validate_poset,
)
from fialg.linmaps import rebase_codomain


def singleton():
    return validate_poset(["a"], [])


def chain(n):
    labels = [str(i + 1) for i in range(n)]
    return validate_poset(labels, list(zip(labels, labels[1:])))


def antichain(n):
    return validate_poset([str(i + 1) for i in range(n)], [])


def diamond():
    return validate_poset(
        ["bot", "l", "r", "top"],
        [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
    )


def two_two_chains():
    return validate_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])


NAMED_POSETS = {
    "singleton": singleton,
    "2-chain": lambda: chain(2),
    "3-chain": lambda: chain(3),
    "diamond": diamond,
    "2-antichain": lambda: antichain(2),
    "two-2-chains": two_two_chains,
}


@pytest.fixture(params=sorted(NAMED_POSETS))
def named_poset(request):
    return NAMED_POSETS[request.param]()


@pytest.fixture(params=["rationals", "mod9", "integers"])
def exact_ring(request):
    return {"rationals": RATIONALS, "mod9": modular(9), "integers": INTEGERS}[
        request.param
    ]


def jordan_corpus(poset, ring, seeds=range(3), twist=False):
    """Generated Jordan isomorphisms on a poset; optionally with the codomain
    rewritten over a random basis so it is no longer an incidence presentation."""
    maps = []
    for seed in seeds:
        phi = random_jordan_iso(poset, ring, seed)
        if twist:
            phi = rebase_codomain(
                phi, random_basis_change(phi.codomain, seed + 1000)
            )
        maps.append(phi)
    return maps


def small_random_posets(count=6, n=5, seed0=100):
    return [random_poset(n, 0.4, seed0 + k) for k in range(count)]
