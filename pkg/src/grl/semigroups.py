"""Finite semigroups as dense Cayley tables.

Elements are the indices 0..order-1; ``table[a][b]`` is the product a*b.
Labels are presentation-only and never affect any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import NotAssociativeError, OutOfRangeError


@dataclass(frozen=True)
class FiniteSemigroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def label(self, s: int) -> str:
        return self.labels[s] if self.labels is not None else str(s)


def _associativity_violation(flat: Sequence[int], n: int) -> Optional[tuple[int, int, int]]:
    for a in range(n):
        an = a * n
        for b in range(n):
            ab = flat[an + b]
            bn = b * n
            abn = ab * n
            for c in range(n):
                if flat[abn + c] != flat[an + flat[bn + c]]:
                    return (a, b, c)
    return None


def validate_semigroup(table: Sequence[Sequence[int]],
                       labels: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """Check closure and associativity; the first violating entry/triple wins."""
    n = len(table)
    if n == 0:
        raise OutOfRangeError("empty table")
    rows = []
    for a, row in enumerate(table):
        if len(row) != n:
            raise OutOfRangeError(f"row {a} has length {len(row)}, expected {n}", (a,))
        for b, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OutOfRangeError(f"table[{a}][{b}] = {v!r} is not an index in [0, {n})",
                                      (a, b, v))
        rows.append(tuple(row))
    flat = [v for row in rows for v in row]
    bad = _associativity_violation(flat, n)
    if bad is not None:
        a, b, c = bad
        raise NotAssociativeError(f"(a*b)*c != a*(b*c) at (a, b, c) = ({a}, {b}, {c})", bad)
    lab = None
    if labels is not None:
        lab = tuple(str(x) for x in labels)
        if len(lab) != n:
            raise OutOfRangeError(f"expected {n} labels, got {len(lab)}")
    return FiniteSemigroup(order=n, table=tuple(rows), labels=lab)


def idempotents(S: FiniteSemigroup) -> tuple[int, ...]:
    """Fixed points of squaring, in ascending index order."""
    return tuple(e for e in S.elements() if S.mul(e, e) == e)


def weak_inverses(S: FiniteSemigroup, s: int) -> tuple[int, ...]:
    """All x with s = s*x*s."""
    return tuple(x for x in S.elements() if S.mul(S.mul(s, x), s) == s)


def inverses(S: FiniteSemigroup, s: int) -> tuple[int, ...]:
    """All x with s = s*x*s and x = x*s*x."""
    out = []
    for x in S.elements():
        if S.mul(S.mul(s, x), s) == s and S.mul(S.mul(x, s), x) == x:
            out.append(x)
    return tuple(out)


def identity_element(S: FiniteSemigroup) -> Optional[int]:
    for e in S.elements():
        if all(S.mul(e, x) == x == S.mul(x, e) for x in S.elements()):
            return e
    return None


@dataclass(frozen=True)
class SemigroupClassification:
    idempotents: tuple[int, ...]
    weak_inverse_sets: tuple[tuple[int, ...], ...]
    inverse_sets: tuple[tuple[int, ...], ...]
    is_regular: bool
    is_inverse: bool
    is_group: bool


def classify_semigroup(S: FiniteSemigroup) -> SemigroupClassification:
    """Regular: every weak-inverse set nonempty. Inverse: every inverse set a singleton."""
    qs = tuple(weak_inverses(S, s) for s in S.elements())
    vs = tuple(inverses(S, s) for s in S.elements())
    e = identity_element(S)
    is_group = e is not None and all(
        any(S.mul(a, b) == e == S.mul(b, a) for b in S.elements()) for a in S.elements()
    )
    return SemigroupClassification(
        idempotents=idempotents(S),
        weak_inverse_sets=qs,
        inverse_sets=vs,
        is_regular=all(len(q) > 0 for q in qs),
        is_inverse=all(len(v) == 1 for v in vs),
        is_group=is_group,
    )


# ---------------------------------------------------------------------------
# named builders


def left_zero_semigroup(n: int) -> FiniteSemigroup:
    """x*y = x for all x, y."""
    return validate_semigroup([[a] * n for a in range(n)])


def cyclic_group(n: int) -> FiniteSemigroup:
    return validate_semigroup([[(a + b) % n for b in range(n)] for a in range(n)])


def chain_semilattice(n: int) -> FiniteSemigroup:
    """Total order 0 < 1 < ... < n-1 under meet (min)."""
    return validate_semigroup([[min(a, b) for b in range(n)] for a in range(n)])


def trivial_semigroup() -> FiniteSemigroup:
    return chain_semilattice(1)


def monogenic_semigroup(index: int, period: int) -> FiniteSemigroup:
    """Single generator a with a^(index+period) = a^index.

    Elements are a^1 .. a^(index+period-1); element i represents a^(i+1).
    """
    if index < 1 or period < 1:
        raise ValueError("index and period must be >= 1")
    n = index + period - 1

    def power(k: int) -> int:
        while k > n:
            k -= period
        return k - 1

    return validate_semigroup([[power(a + b + 2) for b in range(n)] for a in range(n)])


# ---------------------------------------------------------------------------
# exhaustive enumeration and seeded sampling


def enumerate_semigroups(order: int) -> Iterator[FiniteSemigroup]:
    """All associative tables on 0..order-1, lexicographic by flattened table.

    No isomorphism reduction is performed; practical for order <= 3
    (3^9 = 19683 raw candidates).
    """
    cells = order * order
    for flat in product(range(order), repeat=cells):
        if _associativity_violation(flat, order) is None:
            table = tuple(flat[i * order:(i + 1) * order] for i in range(order))
            yield FiniteSemigroup(order=order, table=table)


def count_associative_tables(order: int) -> int:
    return sum(1 for _ in enumerate_semigroups(order))


_ALL_TRIPLES_CACHE: dict[int, list[tuple[int, int, int]]] = {}


def sample_semigroups(order: int, count: int, seed: int,
                      batch: int = 200_000) -> list[FiniteSemigroup]:
    """Uniform rejection sampling: draw raw tables, keep the associative ones.

    Deterministic for a fixed seed.  Candidate batches are filtered one
    associativity triple at a time, which discards almost everything after a
    few triples; survivors have every triple checked.
    """
    if count <= 0:
        return []
    triples = _ALL_TRIPLES_CACHE.setdefault(
        order, [(a, b, c) for a in range(order) for b in range(order) for c in range(order)])
    rng = np.random.Generator(np.random.PCG64(seed))
    found: list[FiniteSemigroup] = []
    while len(found) < count:
        tabs = rng.integers(0, order, size=(batch, order, order), dtype=np.int64)
        for (a, b, c) in triples:
            if len(tabs) == 0:
                break
            idx = np.arange(len(tabs))
            lhs = tabs[idx, tabs[idx, a, b], c]
            rhs = tabs[idx, a, tabs[idx, b, c]]
            tabs = tabs[lhs == rhs]
        for t in tabs:
            found.append(FiniteSemigroup(order=order,
                                         table=tuple(tuple(int(v) for v in row) for row in t)))
    return found[:count]


def isomorphic_under(S1: FiniteSemigroup, S2: FiniteSemigroup,
                     perm: Sequence[int]) -> bool:
    """Does the bijection perm: S1 -> S2 carry the first table onto the second?"""
    if S1.order != S2.order or sorted(perm) != list(range(S1.order)):
        return False
    return all(
        perm[S1.mul(a, b)] == S2.mul(perm[a], perm[b])
        for a in S1.elements() for b in S1.elements()
    )
