import random

import pytest

from simptop import catalog, from_facets


def sc(*facets):
    return from_facets(facets)


@pytest.fixture
def rng():
    return random.Random(20260808)


@pytest.fixture
def rp2():
    return catalog.get("RP2_6").complex


@pytest.fixture
def dunce_hat():
    return catalog.get("DunceHat8").complex


def random_pure_complex(rng, n_vertices=7, dim=2, p=0.3):
    import itertools

    while True:
        facets = [
            c
            for c in itertools.combinations(range(n_vertices), dim + 1)
            if rng.random() < p
        ]
        if facets:
            return from_facets(facets)
