import random

import pytest

import fusionkit as fk


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def ao2():
    return fk.AoSystem(2)


@pytest.fixture
def ao3():
    return fk.AoSystem(3)


@pytest.fixture
def aut4():
    return fk.AutSystem(4)


@pytest.fixture
def au2():
    return fk.AuSystem(2)


@pytest.fixture
def f2():
    return fk.GroupDualSystem([None, None], names=["s", "t"])


@pytest.fixture
def zdual():
    return fk.GroupDualSystem([None])


@pytest.fixture
def zmod3():
    return fk.GroupDualSystem([None, 3], names=["g", "h"])


@pytest.fixture
def zd2():
    return fk.ZdDualSystem(2)


def label_pool(sys):
    """A small deterministic pool of labels for randomized element tests."""
    if isinstance(sys, fk.AoSystem):
        return [sys.r(k) for k in range(1, 8)]
    if isinstance(sys, fk.AutSystem):
        return [sys.s(k) for k in range(0, 6)]
    if isinstance(sys, fk.AuSystem):
        words = [""]
        for _ in range(3):
            words += [w + c for w in words for c in "ab" if len(w) == max(map(len, words)) - 0]
        words = sorted({w for w in words if len(w) <= 3})
        return [sys.word(w) for w in words]
    # group duals: everything within tree depth 2
    out = [()]
    layer = [()]
    if isinstance(sys, fk.ZdDualSystem):
        vals = range(-2, 3)
        return [sys.vector((i, j)) for i in vals for j in vals]
    for _ in range(2):
        nxt = []
        for w in layer:
            nxt.extend(sys.children(w))
        out.extend(nxt)
        layer = nxt
    return [sys.word(w) for w in out]


def random_element(sys, rng, pool=None, max_terms=2, max_mult=2):
    pool = pool or label_pool(sys)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(pool)] = rng.randint(1, max_mult)
    return fk.FusionElement(terms)
