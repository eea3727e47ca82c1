"""Named small structures used by the corpus, the CLI and the test suites."""

from __future__ import annotations

import re

from .constructions import matrix_units_semigroup
from .groupoids import (
    FiniteGroupoid,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
)
from .rings import (
    FiniteRing,
    cyclic_ring,
    field_f4,
    matrix_ring,
    multiples_ring,
    product_ring,
    zero_multiplication_ring,
)
from .semigroups import (
    FiniteSemigroup,
    chain_semilattice,
    cyclic_group,
    left_zero_semigroup,
    monogenic_semigroup,
    trivial_semigroup,
)

_SEMIGROUPS = {
    "trivial": trivial_semigroup,
    "L2": lambda: left_zero_semigroup(2),
    "chain2": lambda: chain_semilattice(2),
    "chain3": lambda: chain_semilattice(3),
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "B1": lambda: matrix_units_semigroup(1),
    "B2": lambda: matrix_units_semigroup(2),
    "B3": lambda: matrix_units_semigroup(3),
    "monogenic22": lambda: monogenic_semigroup(2, 1),
}

_RINGS = {
    "F4": field_f4,
    "Z2xZ2": lambda: product_ring(cyclic_ring(2), cyclic_ring(2)),
    "2Z8": lambda: multiples_ring(2, 8),
    "M2(Z2)": lambda: matrix_ring(cyclic_ring(2), 2),
}


def semigroup_names() -> tuple[str, ...]:
    return tuple(sorted(_SEMIGROUPS))


def named_semigroup(name: str) -> FiniteSemigroup:
    if name in _SEMIGROUPS:
        return _SEMIGROUPS[name]()
    raise KeyError(f"unknown semigroup name: {name!r}")


def named_ring(name: str) -> FiniteRing:
    """Resolve a ring name: Z<n>, zero<n>, or one of the explicit entries."""
    if name in _RINGS:
        return _RINGS[name]()
    m = re.fullmatch(r"Z(\d+)", name)
    if m:
        return cyclic_ring(int(m.group(1)))
    m = re.fullmatch(r"zero(\d+)", name)
    if m:
        return zero_multiplication_ring(int(m.group(1)))
    raise KeyError(f"unknown ring name: {name!r}")


def named_groupoid(name: str) -> FiniteGroupoid:
    """Resolve a groupoid name: pair<n>, group_Z<n>, or a "+"-joined union."""
    if "+" in name:
        parts = [named_groupoid(p) for p in name.split("+")]
        out = parts[0]
        for p in parts[1:]:
            out = disjoint_union(out, p)
        return out
    m = re.fullmatch(r"pair(\d+)", name)
    if m:
        return pair_groupoid(int(m.group(1)))
    m = re.fullmatch(r"group_Z(\d+)", name)
    if m:
        return group_groupoid(cyclic_group(int(m.group(1))))
    raise KeyError(f"unknown groupoid name: {name!r}")


# degree maps for the named good gradings; entries are (ring, base name, deg rows)
GOOD_GRADING_SPECS: dict[str, tuple[str, str, tuple[tuple[int, ...], ...]]] = {
    # M_2(A) graded by the 2-element group: diagonal units at the identity
    "M2_Z2_group": ("Z2", "Z2", ((0, 1), (1, 0))),
    "M2_Z4_group": ("Z4", "Z2", ((0, 1), (1, 0))),
    "M2_F4_group": ("F4", "Z2", ((0, 1), (1, 0))),
    # deg(i,j) = e_{i,j}: reproduces the matrix-unit grading
    "M2_Z2_bn": ("Z2", "B2", ((1, 2), (3, 4))),
    # everything in one component: the trivial grading of M_2(A)
    "M2_Z2_trivial": ("Z2", "trivial", ((0, 0), (0, 0))),
}


def good_grading_spec(name: str) -> tuple[FiniteRing, FiniteSemigroup, tuple[tuple[int, ...], ...]]:
    ring_name, base_name, deg = GOOD_GRADING_SPECS[name]
    return named_ring(ring_name), named_semigroup(base_name), deg
