"""Built-in invariant suite over generated small instances.

Everything is seeded and deterministic, so two runs emit byte-identical
reports.
"""

from __future__ import annotations

import random

from . import funspace, generate, linmap, quotient
from .decompose import (
    Refutation,
    decompose,
    minimal_support,
    minimal_support_exhaustive,
    monomial_form,
)
from .gf import field_new


def _field_axioms(q: int) -> bool:
    field = generate.field_of_order(q)
    elems = field.elements()
    for a in elems:
        for b in elems:
            if field.add(a, b) != field.add(b, a):
                return False
            if field.mul(a, b) != field.mul(b, a):
                return False
            for c in elems:
                if field.add(field.add(a, b), c) != field.add(a, field.add(b, c)):
                    return False
                if field.mul(field.mul(a, b), c) != field.mul(a, field.mul(b, c)):
                    return False
                if field.mul(a, field.add(b, c)) != field.add(
                    field.mul(a, b), field.mul(a, c)
                ):
                    return False
    return all(field.mul(a, field.inv(a)) == 1 for a in elems if a != 0)


def _metric_axioms(C) -> bool:
    words = list(C.enumerate_codewords())
    for u in words:
        for v in words:
            if C.distance(u, v) != C.distance(v, u):
                return False
            if (C.distance(u, v) == 0) != (u == v):
                return False
            if C.weight(C.codeword_add(u, v)) > C.weight(u) + C.weight(v):
                return False
    return True


def _quotient_agreement(C) -> bool:
    return all(
        quotient.related(C, i, j) == quotient.related_fast(C, i, j)
        for i in range(C.n)
        for j in range(C.n)
    )


def _monomial_roundtrip(rng: random.Random, q: int, n: int) -> bool:
    field = generate.field_of_order(q)
    A = generate.full_space(field, n)
    T = generate.random_monomial(rng, field, n)
    H = generate.monomial_linmap(T, A, A)
    out = decompose(H)
    if isinstance(out, Refutation):
        return False
    sigma, w = monomial_form(out, H)
    return sigma == T.sigma and w == T.w


def _refutation_detected() -> bool:
    field = field_new(2)
    A = generate.full_space(field, 2)
    H = linmap.LinMap(A, A, [[1, 1], [0, 1]])
    out = decompose(H)
    return isinstance(out, Refutation)


def run(diagnostic: bool = False) -> dict:
    rng = random.Random(0)
    checks = {}

    def record(name, ok):
        checks[name] = "pass" if ok else "fail"

    for q in (2, 3, 4, 5):
        record(f"field_axioms_q{q}", _field_axioms(q))
    for idx in range(4):
        q = rng.choice([2, 3, 4])
        n = rng.randint(2, 4)
        k = rng.randint(1, min(3, n))
        C = generate.random_code(rng, q, n, k)
        record(f"metric_axioms_{idx}", _metric_axioms(C))
        record(f"quotient_agreement_{idx}", _quotient_agreement(C))
        record(
            f"identity_decomposes_{idx}",
            not isinstance(decompose(generate.identity_linmap(C)), Refutation),
        )
    for idx in range(4):
        record(f"monomial_roundtrip_{idx}", _monomial_roundtrip(rng, rng.choice([2, 3]), rng.randint(2, 4)))
    record("refutation_detected", _refutation_detected())
    ok, _ = funspace.is_controllable(generate.full_space(field_new(2), 3))
    record("full_space_controllable", ok)
    if diagnostic:
        field = field_new(3)
        A = generate.full_space(field, 3)
        H = generate.identity_linmap(A)
        Q = quotient.build_quotient(A)
        best = minimal_support_exhaustive(H, 0, Q)
        record("exhaustive_support_matches_fast", best == Q.class_mask(minimal_support(H, 0, Q)[0]))
    return {"checks": checks, "seed": 0}
