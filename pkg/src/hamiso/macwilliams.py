"""Classical monomial equivalence over F^n with uniform measure.

Brute-force searches for monomial transformations and weight-preserving
isomorphisms between two codes, cross-validated against each other and
against the weighted-composition extraction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from . import linalg
from .decompose import Refutation, decompose, monomial_form
from .errors import (
    LengthMismatch,
    NotMonomial,
    SearchTooLarge,
    SpaceMismatch,
    TheoremViolation,
    ZeroFunctional,
)
from .funspace import DEFAULT_MAX_ENUM, FunctionSpace
from .linmap import LinMap, is_isometry

DEFAULT_MAX_SEARCH = 10**7


@dataclass(frozen=True)
class MonomialMap:
    """Permute-then-scale: (a_1..a_n) -> (a_sigma(1) w_1, .., a_sigma(n) w_n).

    sigma is 0-based: output coordinate j reads input coordinate sigma[j].
    """

    sigma: tuple
    w: tuple

    def apply(self, field, v) -> tuple:
        if len(v) != len(self.sigma):
            raise LengthMismatch(f"vector length {len(v)} != {len(self.sigma)}")
        return tuple(field.mul(v[self.sigma[j]], self.w[j]) for j in range(len(v)))


def monomial_apply(field, T: MonomialMap, v) -> tuple:
    return T.apply(field, v)


def _check_pair(C1: FunctionSpace, C2: FunctionSpace):
    if C1.field != C2.field:
        raise SpaceMismatch("codes over different fields")
    if C1.n != C2.n:
        raise SpaceMismatch("codes of different length")
    if not (C1.space.is_uniform() and C2.space.is_uniform()):
        raise SpaceMismatch("monomial equivalence assumes uniform measures")
    if C1.space.measures[0] != C2.space.measures[0]:
        raise SpaceMismatch("the two codes carry different uniform measures")


def weight_distribution(C: FunctionSpace, max_enum: int = DEFAULT_MAX_ENUM) -> tuple:
    dist = {}
    for u in C.enumerate_codewords(max_enum):
        wt = C.coz(u).size()
        dist[wt] = dist.get(wt, 0) + 1
    return tuple(sorted(dist.items()))


def monomial_search(
    C1: FunctionSpace,
    C2: FunctionSpace,
    max_search: int = DEFAULT_MAX_SEARCH,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> MonomialMap | None:
    """First monomial T (lexicographic in sigma, then w) with T(C1) = C2.

    Returns None when the codes are not equivalent.
    """
    _check_pair(C1, C2)
    n, q = C1.n, C1.field.q
    if factorial(n) * (q - 1) ** n > max_search:
        raise SearchTooLarge(f"{factorial(n)}*{(q - 1)**n} monomials exceed {max_search}")
    if C1.k != C2.k:
        return None
    if weight_distribution(C1, max_enum) != weight_distribution(C2, max_enum):
        return None
    field = C1.field
    target = C2.gen
    rows1 = [list(r) for r in C1.gen]
    for sigma in itertools.permutations(range(n)):
        permuted = [[row[sigma[j]] for j in range(n)] for row in rows1]
        for w in itertools.product(field.nonzero(), repeat=n):
            image = [[field.mul(row[j], w[j]) for j in range(n)] for row in permuted]
            if tuple(tuple(r) for r in linalg.rref(field, image)) == target:
                return MonomialMap(sigma, w)
    return None


def _isometry_matrix_count(q: int, k: int) -> int:
    total = 1
    for i in range(k):
        total *= q**k - q**i
    return total


def isometry_search(
    C1: FunctionSpace,
    C2: FunctionSpace,
    max_search: int = DEFAULT_MAX_SEARCH,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> LinMap | None:
    """First invertible coordinate-change matrix inducing a Hamming isometry.

    Rows are chosen depth-first in lexicographic order; a branch dies as
    soon as some codeword in the partial span violates weight preservation,
    which prunes inequivalent pairs quickly while still returning the
    lexicographically least isometry matrix.
    """
    _check_pair(C1, C2)
    if C1.k != C2.k:
        return None
    field = C1.field
    k, q = C1.k, field.q
    if _isometry_matrix_count(q, k) > max_search:
        raise SearchTooLarge("too many invertible matrices")
    wt1 = {}
    for u in C1.enumerate_codewords(max_enum):
        wt1[u] = C1.coz(u).size()
    candidates = list(itertools.product(range(q), repeat=k))
    rows: list[tuple] = []

    def extend(depth: int):
        if depth == k:
            return True
        for cand in candidates:
            rows.append(cand)
            if linalg.rank(field, [list(r) for r in rows]) == depth + 1 and _partial_ok(depth):
                if extend(depth + 1):
                    return True
            rows.pop()
        return False

    def _partial_ok(depth: int) -> bool:
        # codewords newly determined at this depth: coefficient vectors
        # supported on rows 0..depth with a nonzero last coefficient
        for head in itertools.product(range(q), repeat=depth):
            for last in range(1, q):
                u = head + (last,)
                img = [0] * k
                for c, row in zip(u, rows):
                    if c:
                        for j in range(k):
                            img[j] = field.add(img[j], field.mul(c, row[j]))
                u_full = u + (0,) * (k - depth - 1)
                if C2.coz(tuple(img)).size() != wt1[u_full]:
                    return False
        return True

    if extend(0):
        return LinMap(C1, C2, [list(r) for r in rows])
    return None


def equivalence_decide(
    C1: FunctionSpace,
    C2: FunctionSpace,
    max_search: int = DEFAULT_MAX_SEARCH,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> dict:
    """Run both searches, assert they agree, and round-trip the isometry.

    The agreement assertion is the classical equivalence theorem; a
    disagreement raises TheoremViolation and indicates a bug.
    """
    monomial = monomial_search(C1, C2, max_search, max_enum)
    isom = isometry_search(C1, C2, max_search, max_enum)
    if (monomial is None) != (isom is None):
        raise TheoremViolation(
            f"monomial search {'succeeded' if monomial else 'failed'} but "
            f"isometry search {'succeeded' if isom else 'failed'}"
        )
    roundtrip = None
    if isom is not None:
        ok, _ = is_isometry(isom, max_enum)
        assert ok, "isometry search returned a non-isometry"
        roundtrip = _decompose_roundtrip(C1, C2, isom, max_enum)
    return {
        "equivalent": monomial is not None,
        "monomial": monomial,
        "isometry": isom,
        "decompose_roundtrip": roundtrip,
    }


def _decompose_roundtrip(C1, C2, isom: LinMap, max_enum: int):
    """Decompose the found isometry; on monomial-formable instances check
    that the recovered transformation carries C1 onto C2.  None when the
    preconditions for a classical monomial form are unmet."""
    try:
        D = decompose(isom)
    except ZeroFunctional:
        return None
    if isinstance(D, Refutation):
        return False
    try:
        sigma_img, w = monomial_form(D, isom)
    except NotMonomial:
        return None
    # monomial_form maps codomain coordinate j to domain coordinate
    # sigma_img[j]; as a map on vectors this is exactly the MonomialMap shape
    T = MonomialMap(tuple(sigma_img), tuple(w))
    field = C1.field
    image = [list(T.apply(field, row)) for row in C1.gen]
    return tuple(tuple(r) for r in linalg.rref(field, image)) == C2.gen
