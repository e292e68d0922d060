"""Shared corpus and session fixtures.

The corpus is regenerated from a fixed seed, so every run tests the same 200
semigroups: multiplicity 2..20, generators below 151, embedding dimension 2
through 5 after minimalization.
"""

import random

import pytest

from maxdenum import GcdNotOne, make_semigroup
from maxdenum.blowup import blowup, dmax
from maxdenum.oracle import oracle_dmax_profile

CORPUS_SEED = 20240816
CORPUS_SIZE = 200

# small semigroups with frozen expected values, by generator tuple
REFERENCE = (15, 17, 36, 38, 71)
NAMED = {
    (1,): 1,
    (2, 3): 1,
    (3, 5): 1,
    (4, 5, 6): 2,
    (5, 6, 7): 3,
    (5, 7, 8): 2,
    (6, 9, 20): 1,
    (6, 10, 15): 1,
    (7, 10, 12): 1,
    (6, 7, 8, 9): 5,
    (8, 13, 18, 23): 8,
    (9, 11, 13): 5,
    (13, 17, 22, 40): 3,
    (14, 17, 20, 23): 21,
    (19, 149): 1,
    (10, 11, 12, 13, 14): 18,
    (11, 13, 15, 17, 19): 23,
    REFERENCE: 3,
}


def build_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE):
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < size:
        e = rng.randint(2, 20)
        extra = rng.randint(1, 4)
        picks = rng.sample(range(e + 1, 151), k=extra)
        try:
            S = make_semigroup([e] + picks)
        except GcdNotOne:
            continue
        if not 2 <= S.embedding_dimension <= 5:
            continue
        if S.generators in seen:
            continue
        seen.add(S.generators)
        out.append(S)
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def contexts(corpus):
    return {S.generators: blowup(S) for S in corpus}


@pytest.fixture(scope="session")
def engine_results(corpus):
    return {S.generators: dmax(S) for S in corpus}


@pytest.fixture(scope="session")
def oracle_profiles(corpus):
    return {S.generators: oracle_dmax_profile(S) for S in corpus}
