"""The point equivalence relation, its scaling scalars, and the quotient space.

Two points are related when no codeword vanishes at exactly one of them;
on a finite space with no zero generator column this is the same as the
generator columns being proportional by a nonzero scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotRelated, PointsRelated
from .funspace import DEFAULT_MAX_ENUM, FunctionSpace
from .space import PointSet


def related(A: FunctionSpace, x1, x2, max_enum: int = DEFAULT_MAX_ENUM) -> bool:
    """Definitional check by full codeword enumeration (test oracle)."""
    i1 = x1 if isinstance(x1, int) else A.space.index_of(x1)
    i2 = x2 if isinstance(x2, int) else A.space.index_of(x2)
    if i1 == i2:
        return True
    for u in A.enumerate_codewords(max_enum):
        v1 = A.evaluate(u, i1)
        v2 = A.evaluate(u, i2)
        if A.field.mul(v1, v2) == 0 and (v1 != 0 or v2 != 0):
            return False
    return True


def _column_scalar(A: FunctionSpace, i1: int, i2: int):
    """lam with column(i1) = lam * column(i2), or None; lam is nonzero."""
    c1, c2 = A.column(i1), A.column(i2)
    lam = None
    for a, b in zip(c1, c2):
        if (a == 0) != (b == 0):
            return None
        if b != 0:
            ratio = A.field.div(a, b)
            if lam is None:
                lam = ratio
            elif ratio != lam:
                return None
    return lam  # columns are never all-zero under the no-zero-column condition


def related_fast(A: FunctionSpace, x1, x2) -> bool:
    """Production path: generator columns are proportional by a nonzero scalar."""
    i1 = x1 if isinstance(x1, int) else A.space.index_of(x1)
    i2 = x2 if isinstance(x2, int) else A.space.index_of(x2)
    return i1 == i2 or _column_scalar(A, i1, i2) is not None


@dataclass(frozen=True)
class Quotient:
    """Partition of the points into proportionality classes.

    lambda_to_rep[x] is the scalar with f(x) = lambda_to_rep[x] * f(rep)
    for every codeword f, rep being the least-index member of x's class.
    """

    funspace: FunctionSpace
    classes: tuple  # tuple of tuples of point indices, each sorted ascending
    class_of: tuple  # point index -> class id
    lambda_to_rep: tuple  # point index -> scalar relating x to its class rep

    def rep(self, class_id: int) -> int:
        return self.classes[class_id][0]

    def num_classes(self) -> int:
        return len(self.classes)

    def class_mask(self, class_id: int) -> int:
        mask = 0
        for i in self.classes[class_id]:
            mask |= 1 << i
        return mask


def build_quotient(A: FunctionSpace) -> Quotient:
    n = A.n
    class_of = [-1] * n
    classes = []
    lam = [1] * n
    for i in range(n):
        if class_of[i] != -1:
            continue
        cid = len(classes)
        members = [i]
        class_of[i] = cid
        for j in range(i + 1, n):
            if class_of[j] != -1:
                continue
            scalar = _column_scalar(A, j, i)
            if scalar is not None:
                class_of[j] = cid
                lam[j] = scalar
                members.append(j)
        classes.append(tuple(members))
    return Quotient(A, tuple(classes), tuple(class_of), tuple(lam))


def lambda_scalar(Q: Quotient, x1, x2) -> int:
    """The unique nonzero scalar with f(x1) = lam * f(x2) for all codewords."""
    A = Q.funspace
    i1 = x1 if isinstance(x1, int) else A.space.index_of(x1)
    i2 = x2 if isinstance(x2, int) else A.space.index_of(x2)
    if Q.class_of[i1] != Q.class_of[i2]:
        raise NotRelated(f"points {x1!r} and {x2!r} lie in different classes")
    return A.field.div(Q.lambda_to_rep[i1], Q.lambda_to_rep[i2])


def separating_witness(A: FunctionSpace, x1, x2) -> tuple:
    """A codeword nonzero at x1 and zero at x2; exists iff the points are unrelated."""
    i1 = x1 if isinstance(x1, int) else A.space.index_of(x1)
    i2 = x2 if isinstance(x2, int) else A.space.index_of(x2)
    if related_fast(A, i1, i2):
        raise PointsRelated(f"points {x1!r} and {x2!r} are related")
    for u in A.vanishing_basis(1 << i2):
        if A.evaluate(u, i1) != 0:
            return tuple(u)
    raise PointsRelated("no separating codeword found")  # unreachable for unrelated points


def is_saturated(Q: Quotient, s: PointSet) -> bool:
    """A set is saturated when it is a union of whole classes."""
    for cls in Q.classes:
        hits = [i for i in cls if s.mask >> i & 1]
        if hits and len(hits) != len(cls):
            return False
    return True


def saturation_mask(Q: Quotient, class_ids) -> int:
    mask = 0
    for cid in class_ids:
        mask |= Q.class_mask(cid)
    return mask
