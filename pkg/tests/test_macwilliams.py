import random

import pytest

from hamiso import generate, linalg
from hamiso.errors import SearchTooLarge, SpaceMismatch
from hamiso.funspace import FunctionSpace
from hamiso.gf import field_new
from hamiso.linmap import is_isometry
from hamiso.macwilliams import (
    MonomialMap,
    equivalence_decide,
    isometry_search,
    monomial_apply,
    monomial_search,
    weight_distribution,
)
from hamiso.space import PointSpace


GF2 = field_new(2)
GF3 = field_new(3)


def ucode(field, rows, n):
    space = PointSpace([f"x{i}" for i in range(n)], [1] * n)
    return FunctionSpace(field, space, rows)


def planted_pair(rng, q, n, k):
    field = generate.field_of_order(q)
    C1 = generate.random_code(rng, q, n, k, uniform_measure=True)
    T = generate.random_monomial(rng, field, n)
    rows2 = [list(T.apply(field, row)) for row in C1.gen]
    C2 = FunctionSpace(field, C1.space, rows2)
    return C1, C2, T


def test_monomial_apply():
    T = MonomialMap((1, 2, 0), (1, 2, 1))
    assert monomial_apply(GF3, T, (1, 0, 2)) == (0, 1, 1)
    ident = MonomialMap((0, 1), (1, 1))
    assert monomial_apply(GF2, ident, (1, 0)) == (1, 0)


def test_weight_distribution():
    C = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    assert weight_distribution(C) == ((0, 1), (2, 3))


def test_monomial_search_identity():
    C = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    T = monomial_search(C, C)
    assert T is not None
    # lexicographically least: the identity map works here
    assert T.sigma == (0, 1, 2) and T.w == (1, 1, 1)


def test_monomial_search_planted_roundtrip():
    rng = random.Random(5)
    for _ in range(10):
        q = rng.choice([2, 3])
        n = rng.randint(2, 5)
        k = rng.randint(1, min(3, n))
        C1, C2, _ = planted_pair(rng, q, n, k)
        T = monomial_search(C1, C2)
        assert T is not None
        field = C1.field
        image = [list(T.apply(field, row)) for row in C1.gen]
        assert tuple(tuple(r) for r in linalg.rref(field, image)) == C2.gen


def test_monomial_search_inequivalent():
    C1 = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    C2 = ucode(GF2, [[1, 1, 1]], 3)  # different dimension
    assert monomial_search(C1, C2) is None
    C3 = ucode(GF2, [[1, 0, 0], [0, 1, 1]], 3)  # different weight distribution
    assert weight_distribution(C1) != weight_distribution(C3)
    assert monomial_search(C1, C3) is None


def test_monomial_search_pair_checks():
    C1 = ucode(GF2, [[1, 1]], 2)
    C2 = ucode(GF3, [[1, 1]], 2)
    with pytest.raises(SpaceMismatch):
        monomial_search(C1, C2)
    C3 = ucode(GF2, [[1, 1, 1]], 3)
    with pytest.raises(SpaceMismatch):
        monomial_search(C1, C3)
    sp = PointSpace(["a", "b"], [1, 2])
    C4 = FunctionSpace(GF2, sp, [[1, 1]])
    with pytest.raises(SpaceMismatch):
        monomial_search(C4, C4)


def test_isometry_search_identity():
    C = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    H = isometry_search(C, C)
    assert H is not None
    assert is_isometry(H)[0]


def test_isometry_search_agrees_with_monomial_search():
    rng = random.Random(9)
    hits = 0
    for _ in range(12):
        q = rng.choice([2, 3])
        n = rng.randint(2, 4)
        k = rng.randint(1, min(3, n))
        C1 = generate.random_code(rng, q, n, k, uniform_measure=True)
        if rng.random() < 0.5:
            T0 = generate.random_monomial(rng, C1.field, n)
            C2 = FunctionSpace(
                C1.field, C1.space, [list(T0.apply(C1.field, r)) for r in C1.gen]
            )
        else:
            C2 = generate.random_code(rng, q, n, k, uniform_measure=True)
        T = monomial_search(C1, C2)
        H = isometry_search(C1, C2)
        assert (T is None) == (H is None)
        if H is not None:
            hits += 1
            assert is_isometry(H)[0]
    assert hits > 0


def test_isometry_search_inequivalent():
    C1 = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    C3 = ucode(GF2, [[1, 0, 0], [0, 1, 1]], 3)
    assert isometry_search(C1, C3) is None


def test_equivalence_decide_report():
    rng = random.Random(13)
    C1, C2, _ = planted_pair(rng, 3, 4, 2)
    report = equivalence_decide(C1, C2)
    assert report["equivalent"] is True
    assert report["monomial"] is not None
    assert report["isometry"] is not None
    assert report["decompose_roundtrip"] in (True, None)

    C3 = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    C4 = ucode(GF2, [[1, 0, 0], [0, 1, 1]], 3)
    report = equivalence_decide(C3, C4)
    assert report["equivalent"] is False
    assert report["monomial"] is None and report["isometry"] is None
    assert report["decompose_roundtrip"] is None


def test_equivalence_decide_roundtrip_true_on_distinct_columns():
    # pairwise non-proportional columns keep the quotients trivial, so the
    # roundtrip check must come back True rather than None
    C1 = ucode(GF2, [[1, 1, 0], [0, 1, 1]], 3)
    report = equivalence_decide(C1, C1)
    assert report["decompose_roundtrip"] is True


def test_search_guards():
    C = ucode(GF3, [[1, 1, 1, 1, 1]], 5)
    with pytest.raises(SearchTooLarge):
        monomial_search(C, C, max_search=10)
    C2 = ucode(GF3, [[1, 0], [0, 1]], 2)
    with pytest.raises(SearchTooLarge):
        isometry_search(C2, C2, max_search=10)
