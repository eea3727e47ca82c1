"""Finite additive groups and finite, possibly non-unital, rings.

Everything is given by dense index tables over elements 0..order-1 with the
additive zero fixed at index 0.  All searches scan ascending and return the
first hit, so every witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    AdditiveGroupError,
    DistributivityError,
    NotAnIdealError,
    NotAssociativeError,
    OutOfRangeError,
)


@dataclass(frozen=True)
class FiniteAdditiveGroup:
    """Finite abelian group; ``add[x][y]`` is x+y, ``neg[x]`` is -x, zero is 0."""

    order: int
    add: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def negate(self, x: int) -> int:
        return self.neg[x]

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class FiniteRing:
    """Additive group with an associative, bi-additive multiplication table."""

    additive: FiniteAdditiveGroup
    mul: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return self.additive.order

    def plus(self, x: int, y: int) -> int:
        return self.additive.add[x][y]

    def negate(self, x: int) -> int:
        return self.additive.neg[x]

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def elements(self) -> range:
        return range(self.order)


TRIVIAL_GROUP = FiniteAdditiveGroup(order=1, add=((0,),), neg=(0,))


def _check_index_table(table: Sequence[Sequence[int]], n: int, what: str) -> None:
    if len(table) != n:
        raise OutOfRangeError(f"{what} has {len(table)} rows, expected {n}")
    for a, row in enumerate(table):
        if len(row) != n:
            raise OutOfRangeError(f"{what} row {a} has length {len(row)}, expected {n}", (a,))
        for b, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OutOfRangeError(f"{what}[{a}][{b}] = {v!r} is not an index in [0, {n})",
                                      (a, b, v))


def _first_assoc_violation(t: np.ndarray) -> Optional[tuple[int, int, int]]:
    n = len(t)
    for a in range(n):
        lhs = t[t[a], :]
        rhs = t[a][t]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            return (a, int(b), int(c))
    return None


def validate_additive_group(add: Sequence[Sequence[int]],
                            neg: Sequence[int]) -> FiniteAdditiveGroup:
    """Abelian-group axioms, exhaustively: commutative, associative, 0 neutral, neg inverse."""
    n = len(add)
    if n == 0:
        raise OutOfRangeError("empty addition table")
    _check_index_table(add, n, "add")
    if len(neg) != n:
        raise OutOfRangeError(f"neg has length {len(neg)}, expected {n}")
    for x, v in enumerate(neg):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise OutOfRangeError(f"neg[{x}] = {v!r} is not an index in [0, {n})", (x, v))
    A = np.asarray(add, dtype=np.int64)
    if not np.array_equal(A, A.T):
        x, y = np.argwhere(A != A.T)[0]
        raise AdditiveGroupError(f"addition is not commutative at ({x}, {y})",
                                 (int(x), int(y)))
    if not np.array_equal(A[0], np.arange(n)):
        x = int(np.argwhere(A[0] != np.arange(n))[0][0])
        raise AdditiveGroupError(f"index 0 is not an additive zero: 0+{x} != {x}", (x,))
    N = np.asarray(neg, dtype=np.int64)
    if not np.array_equal(A[np.arange(n), N], np.zeros(n, dtype=np.int64)):
        x = int(np.argwhere(A[np.arange(n), N] != 0)[0][0])
        raise AdditiveGroupError(f"x + neg[x] != 0 at x = {x}", (x,))
    bad = _first_assoc_violation(A)
    if bad is not None:
        raise AdditiveGroupError(f"addition is not associative at {bad}", bad)
    return FiniteAdditiveGroup(order=n,
                               add=tuple(tuple(row) for row in add),
                               neg=tuple(neg))


def validate_ring(add: Sequence[Sequence[int]], neg: Sequence[int],
                  mul: Sequence[Sequence[int]]) -> FiniteRing:
    """Additive axioms plus multiplicative associativity and two-sided distributivity."""
    grp = validate_additive_group(add, neg)
    n = grp.order
    _check_index_table(mul, n, "mul")
    A = np.asarray(add, dtype=np.int64)
    M = np.asarray(mul, dtype=np.int64)
    bad = _first_assoc_violation(M)
    if bad is not None:
        raise NotAssociativeError(f"(a*b)*c != a*(b*c) at (a, b, c) = {bad}", bad)
    for a in range(n):
        # (a+b)*c == a*c + b*c: both sides indexed [b, c]
        lhs = M[A[a], :]
        rhs = A[np.broadcast_to(M[a], (n, n)), M]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            raise DistributivityError(
                f"(a+b)*c != a*c + b*c at (a, b, c) = ({a}, {int(b)}, {int(c)})",
                (a, int(b), int(c)))
        # a*(b+c) == a*b + a*c
        lhs2 = M[a][A]
        rhs2 = A[M[a][:, None], M[a][None, :]]
        if not np.array_equal(lhs2, rhs2):
            b, c = np.argwhere(lhs2 != rhs2)[0]
            raise DistributivityError(
                f"a*(b+c) != a*b + a*c at (a, b, c) = ({a}, {int(b)}, {int(c)})",
                (a, int(b), int(c)))
    return FiniteRing(additive=grp, mul=tuple(tuple(row) for row in mul))


def ring_from_ops(elems: Sequence, plus, neg, times) -> FiniteRing:
    """Build index tables from callables over an explicit element list.

    ``elems[0]`` must be the zero element.
    """
    index = {e: i for i, e in enumerate(elems)}
    add = [[index[plus(a, b)] for b in elems] for a in elems]
    negt = [index[neg(a)] for a in elems]
    mul = [[index[times(a, b)] for b in elems] for a in elems]
    return validate_ring(add, negt, mul)


# ---------------------------------------------------------------------------
# named constructors


def cyclic_ring(n: int) -> FiniteRing:
    """Integers mod n."""
    return ring_from_ops(list(range(n)),
                         lambda a, b: (a + b) % n,
                         lambda a: (-a) % n,
                         lambda a, b: (a * b) % n)


def field_f4() -> FiniteRing:
    """The four-element field; elements 0, 1, a, a+1 with a^2 = a + 1."""
    def times(x, y):
        if x == 0 or y == 0:
            return 0
        # multiplicative group is cyclic of order 3 generated by a = 2
        log = {1: 0, 2: 1, 3: 2}
        exp = {0: 1, 1: 2, 2: 3}
        return exp[(log[x] + log[y]) % 3]
    return ring_from_ops([0, 1, 2, 3], lambda a, b: a ^ b, lambda a: a, times)


def zero_multiplication_ring(n: int) -> FiniteRing:
    """Additive group of integers mod n with xy = 0 for all x, y."""
    return ring_from_ops(list(range(n)),
                         lambda a, b: (a + b) % n,
                         lambda a: (-a) % n,
                         lambda a, b: 0)


def multiples_ring(k: int, n: int) -> FiniteRing:
    """The subring {0, k, 2k, ...} of the integers mod n (n divisible by k)."""
    if n % k != 0:
        raise ValueError("k must divide n")
    elems = list(range(0, n, k))
    return ring_from_ops(elems,
                         lambda a, b: (a + b) % n,
                         lambda a: (-a) % n,
                         lambda a, b: (a * b) % n)


def product_ring(*factors: FiniteRing) -> FiniteRing:
    """Componentwise operations; elements enumerated lexicographically."""
    if not factors:
        raise ValueError("need at least one factor")
    from itertools import product as iproduct
    elems = list(iproduct(*(range(T.order) for T in factors)))
    return ring_from_ops(
        elems,
        lambda a, b: tuple(T.plus(x, y) for T, x, y in zip(factors, a, b)),
        lambda a: tuple(T.negate(x) for T, x in zip(factors, a)),
        lambda a, b: tuple(T.times(x, y) for T, x, y in zip(factors, a, b)),
    )


def matrix_ring(T: FiniteRing, k: int) -> FiniteRing:
    """k-by-k matrices over T; elements enumerated row-major by entry, lexicographic."""
    from itertools import product as iproduct
    elems = list(iproduct(range(T.order), repeat=k * k))

    def plus(a, b):
        return tuple(T.plus(x, y) for x, y in zip(a, b))

    def neg(a):
        return tuple(T.negate(x) for x in a)

    def times(a, b):
        out = []
        for i in range(k):
            for j in range(k):
                acc = 0
                for m in range(k):
                    acc = T.plus(acc, T.times(a[i * k + m], b[m * k + j]))
                out.append(acc)
        return tuple(out)

    return ring_from_ops(elems, plus, neg, times)


def opposite_ring(T: FiniteRing) -> FiniteRing:
    """Same additive group, multiplication reversed."""
    n = T.order
    return FiniteRing(additive=T.additive,
                      mul=tuple(tuple(T.mul[b][a] for b in range(n)) for a in range(n)))


# ---------------------------------------------------------------------------
# unitality


@dataclass(frozen=True)
class SUnitalityWitness:
    """Per-element one-sided units: ``left_units[x]`` is the first u with u*x = x."""

    left_units: tuple[Optional[int], ...]
    right_units: tuple[Optional[int], ...]

    @property
    def is_left(self) -> bool:
        return all(u is not None for u in self.left_units)

    @property
    def is_right(self) -> bool:
        return all(u is not None for u in self.right_units)

    @property
    def holds(self) -> bool:
        return self.is_left and self.is_right

    def first_left_failure(self) -> Optional[int]:
        for x, u in enumerate(self.left_units):
            if u is None:
                return x
        return None

    def first_right_failure(self) -> Optional[int]:
        for x, u in enumerate(self.right_units):
            if u is None:
                return x
        return None


def s_unitality(T: FiniteRing) -> SUnitalityWitness:
    """For each x, search u with u*x = x and v with x*v = x."""
    left = []
    right = []
    for x in T.elements():
        left.append(next((u for u in T.elements() if T.times(u, x) == x), None))
        right.append(next((v for v in T.elements() if T.times(x, v) == x), None))
    return SUnitalityWitness(left_units=tuple(left), right_units=tuple(right))


def is_left_s_unital(T: FiniteRing) -> bool:
    return s_unitality(T).is_left


def is_right_s_unital(T: FiniteRing) -> bool:
    return s_unitality(T).is_right


def is_s_unital(T: FiniteRing) -> bool:
    return s_unitality(T).holds


def left_unity(T: FiniteRing) -> Optional[int]:
    return next((u for u in T.elements()
                 if all(T.times(u, r) == r for r in T.elements())), None)


def right_unity(T: FiniteRing) -> Optional[int]:
    return next((u for u in T.elements()
                 if all(T.times(r, u) == r for r in T.elements())), None)


def unity(T: FiniteRing) -> Optional[int]:
    """Two-sided unity, or None.  Note the one-element zero ring is unital (u = 0)."""
    return next((u for u in T.elements()
                 if all(T.times(u, r) == r == T.times(r, u) for r in T.elements())), None)


def common_unit(T: FiniteRing, V: Iterable[int], side: str = "left") -> Optional[int]:
    """First u with u*v = v for all v in V (or v*u = v for side="right")."""
    vs = sorted(set(V))
    if side == "left":
        return next((u for u in T.elements()
                     if all(T.times(u, v) == v for v in vs)), None)
    if side == "right":
        return next((u for u in T.elements()
                     if all(T.times(v, u) == v for v in vs)), None)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ---------------------------------------------------------------------------
# subgroups and ideals


@dataclass(frozen=True)
class Subgroup:
    """Additive subgroup of a parent group, stored as a member set."""

    ambient_order: int
    members: frozenset[int]

    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.ambient_order


def additive_closure(group: FiniteAdditiveGroup, seeds: Iterable[int]) -> Subgroup:
    """Smallest subset containing the seeds and 0, closed under add and neg."""
    add = group.add
    neg = group.neg
    members = {0}
    work = [0]
    for s in sorted(set(seeds)):
        if s not in members:
            members.add(s)
            work.append(s)
    while work:
        x = work.pop()
        nx = neg[x]
        if nx not in members:
            members.add(nx)
            work.append(nx)
        row = add[x]
        for y in list(members):
            z = row[y]
            if z not in members:
                members.add(z)
                work.append(z)
    return Subgroup(ambient_order=group.order, members=frozenset(members))


def left_ideal(T: FiniteRing, generators: Iterable[int]) -> Subgroup:
    """Left ideal generated by the given elements.

    The generators themselves are included so the result is the ideal
    generated by them even when T has no one-sided units.
    """
    gens = sorted(set(generators))
    seeds = set(gens)
    for t in T.elements():
        for c in gens:
            seeds.add(T.times(t, c))
    return additive_closure(T.additive, seeds)


def right_ideal(T: FiniteRing, generators: Iterable[int]) -> Subgroup:
    return left_ideal(opposite_ring(T), generators)


def is_additive_subgroup(group: FiniteAdditiveGroup, members: frozenset[int]) -> bool:
    if 0 not in members:
        return False
    return all(group.add[x][y] in members and group.neg[x] in members
               for x in members for y in members)


def is_left_ideal(T: FiniteRing, sub: Subgroup) -> bool:
    if not is_additive_subgroup(T.additive, sub.members):
        return False
    return all(T.times(t, x) in sub.members for t in T.elements() for x in sub.members)


def idempotent_generator(T: FiniteRing, I: Subgroup) -> Optional[int]:
    """First u in I with u*u = u whose generated left ideal is exactly I."""
    if not is_left_ideal(T, I):
        raise NotAnIdealError("the given subgroup is not a left ideal",
                              tuple(I.elements()))
    for u in I.elements():
        if T.times(u, u) == u and left_ideal(T, [u]).members == I.members:
            return u
    return None


# ---------------------------------------------------------------------------
# von Neumann regularity


@dataclass(frozen=True)
class RegularityWitness:
    """First quasi-inverse per element (r = r*y*r), or the first failing element."""

    holds: bool
    quasi_inverses: tuple[Optional[int], ...]
    failing: Optional[int]


def is_von_neumann_regular(T: FiniteRing) -> RegularityWitness:
    ys: list[Optional[int]] = []
    for r in T.elements():
        y = next((y for y in T.elements() if T.times(T.times(r, y), r) == r), None)
        ys.append(y)
        if y is None:
            ys.extend([None] * (T.order - len(ys)))
            return RegularityWitness(holds=False, quasi_inverses=tuple(ys), failing=r)
    return RegularityWitness(holds=True, quasi_inverses=tuple(ys), failing=None)


def ring_idempotents(T: FiniteRing) -> tuple[int, ...]:
    return tuple(u for u in T.elements() if T.times(u, u) == u)


def _subsets_up_to(n: int, k: int):
    for size in range(1, k + 1):
        yield from combinations(range(n), size)


def check_vnr_characterization(T: FiniteRing, max_generators: int = 2,
                               side: str = "left") -> dict:
    """Three independent regularity verdicts that must coincide on s-unital rings.

    (i) brute-force r = r*y*r for every r; (ii) every principal one-sided
    ideal is generated by an idempotent; (iii) every ideal on at most
    ``max_generators`` generators is generated by an idempotent.
    """
    su = s_unitality(T)
    if not su.holds:
        return {
            "check": "vnr-characterization",
            "applicable": False,
            "reason": "ring is not s-unital",
            "left_failing": su.first_left_failure(),
            "right_failing": su.first_right_failure(),
        }
    work = T if side == "left" else opposite_ring(T)
    reg = is_von_neumann_regular(work)

    principal = True
    principal_failing = None
    for c in work.elements():
        I = left_ideal(work, [c])
        if idempotent_generator(work, I) is None:
            principal = False
            principal_failing = {"generator": c, "ideal": list(I.elements())}
            break

    finitely_generated = True
    fg_failing = None
    for gens in _subsets_up_to(work.order, max_generators):
        I = left_ideal(work, gens)
        if idempotent_generator(work, I) is None:
            finitely_generated = False
            fg_failing = {"generators": list(gens), "ideal": list(I.elements())}
            break

    return {
        "check": "vnr-characterization",
        "applicable": True,
        "side": side,
        "bound": max_generators,
        "vnr": reg.holds,
        "vnr_failing": reg.failing,
        "principal_ideals_idempotent": principal,
        "principal_failing": principal_failing,
        "finitely_generated_ideals_idempotent": finitely_generated,
        "finitely_generated_failing": fg_failing,
        "agree": reg.holds == principal == finitely_generated,
    }


def check_tominaga(T: FiniteRing, max_subset: int = 3) -> dict:
    """One-sided s-unitality must coincide with common units for small subsets."""
    su = s_unitality(T)
    out: dict = {"check": "tominaga", "applicable": True, "bound": max_subset}
    agree = True
    for side, unital in (("left", su.is_left), ("right", su.is_right)):
        failing = None
        ok = True
        for vs in _subsets_up_to(T.order, max_subset):
            if common_unit(T, vs, side) is None:
                ok = False
                failing = list(vs)
                break
        out[side] = {"s_unital": unital, "common_units": ok, "failing_subset": failing,
                     "agree": unital == ok}
        agree = agree and unital == ok
    out["agree"] = agree
    return out
