"""Deterministic generation of the structure corpus the theorem suites run over.

Regenerating from the same manifest is bit-identical: entry order follows the
manifest's lists, exhaustive enumeration is lexicographic, and sampling is
seeded.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from . import catalog
from .constructions import (
    GoodGrading,
    good_grading,
    groupoid_ring,
    matrix_bn_grading,
    semigroup_ring,
    validate_degree_map,
)
from .gradings import GradedRing
from .semigroups import enumerate_semigroups, sample_semigroups


@dataclass(frozen=True)
class CorpusManifest:
    seed: int = 20250810
    exhaustive_semigroups_max_order: int = 3
    order4_sample_count: int = 4
    named_semigroups: tuple[str, ...] = (
        "L2", "chain2", "chain3", "Z2", "Z3", "Z4", "B1", "B2", "B3", "monogenic22")
    rings: tuple[str, ...] = (
        "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "F4", "Z2xZ2", "zero2", "zero4", "2Z8")
    groupoids: tuple[str, ...] = (
        "pair1", "pair2", "pair3", "group_Z2", "group_Z3", "pair2+group_Z2")
    semigroup_ring_coefficients: tuple[str, ...] = (
        "Z2", "Z3", "Z4", "Z6", "F4", "Z2xZ2", "zero2", "zero4")
    semigroup_ring_bases: tuple[str, ...] = ("L2", "chain2", "Z2", "B2", "monogenic22")
    matrix_gradings: tuple[tuple[str, int], ...] = (
        ("Z2", 1), ("Z2", 2), ("Z2", 3),
        ("Z4", 1), ("Z4", 2), ("Z4", 3),
        ("Z6", 1), ("Z6", 2), ("Z6", 3))
    good_gradings: tuple[str, ...] = (
        "M2_Z2_group", "M2_Z4_group", "M2_F4_group", "M2_Z2_bn", "M2_Z2_trivial")
    groupoid_ring_pairs: tuple[tuple[str, str], ...] = (
        ("Z2", "pair1"), ("Z2", "pair2"), ("Z2", "pair3"),
        ("Z4", "pair2"), ("Z4", "pair3"), ("Z6", "pair2"),
        ("Z2", "group_Z2"), ("Z4", "group_Z2"),
        ("Z2", "pair2+group_Z2"),
        ("zero2", "group_Z2"), ("zero4", "pair2"))

    def to_json(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_json(data: dict) -> "CorpusManifest":
        kwargs: dict[str, Any] = {}
        for key, value in data.items():
            if isinstance(value, list):
                value = tuple(tuple(v) if isinstance(v, list) else v for v in value)
            kwargs[key] = value
        return CorpusManifest(**kwargs)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str  # semigroup | ring | groupoid | graded_ring
    structure: Any
    meta: dict = field(default_factory=dict)

    @property
    def graded(self) -> GradedRing:
        if isinstance(self.structure, GoodGrading):
            return self.structure.graded
        if isinstance(self.structure, GradedRing):
            return self.structure
        raise TypeError(f"entry {self.id} is not a graded ring")


@dataclass
class Corpus:
    manifest: CorpusManifest
    semigroups: list[CorpusEntry]
    rings: list[CorpusEntry]
    groupoids: list[CorpusEntry]
    graded: list[CorpusEntry]
    counts: dict[str, int]

    def all_entries(self) -> list[CorpusEntry]:
        return self.semigroups + self.rings + self.groupoids + self.graded


def default_manifest() -> CorpusManifest:
    return CorpusManifest()


def generate_corpus(manifest: Optional[CorpusManifest] = None) -> Corpus:
    m = manifest if manifest is not None else default_manifest()
    counts: dict[str, int] = {}

    semigroups: list[CorpusEntry] = []
    for order in range(1, m.exhaustive_semigroups_max_order + 1):
        n = 0
        for i, S in enumerate(enumerate_semigroups(order)):
            semigroups.append(CorpusEntry(
                id=f"sg{order}.{i:03d}", kind="semigroup", structure=S,
                meta={"source": "exhaustive", "order": order}))
            n += 1
        counts[f"semigroups_exhaustive_order_{order}"] = n
    if m.order4_sample_count > 0:
        samples = sample_semigroups(4, m.order4_sample_count, m.seed)
        for i, S in enumerate(samples):
            semigroups.append(CorpusEntry(
                id=f"sg4.s{i:02d}", kind="semigroup", structure=S,
                meta={"source": "sampled", "order": 4, "seed": m.seed}))
        counts["semigroups_sampled_order_4"] = len(samples)
    for name in m.named_semigroups:
        semigroups.append(CorpusEntry(
            id=f"sg:{name}", kind="semigroup", structure=catalog.named_semigroup(name),
            meta={"source": "named", "name": name}))
    counts["semigroups_named"] = len(m.named_semigroups)

    rings = [CorpusEntry(id=f"ring:{name}", kind="ring",
                         structure=catalog.named_ring(name),
                         meta={"name": name})
             for name in m.rings]
    counts["rings"] = len(rings)

    groupoids = [CorpusEntry(id=f"gpd:{name}", kind="groupoid",
                             structure=catalog.named_groupoid(name),
                             meta={"name": name})
                 for name in m.groupoids]
    counts["groupoids"] = len(groupoids)

    graded: list[CorpusEntry] = []
    for a_name in m.semigroup_ring_coefficients:
        A = catalog.named_ring(a_name)
        for s_name in m.semigroup_ring_bases:
            S = catalog.named_semigroup(s_name)
            graded.append(CorpusEntry(
                id=f"gr:sr:{a_name}:{s_name}", kind="graded_ring",
                structure=semigroup_ring(A, S),
                meta={"construction": "semigroup_ring", "A": a_name, "S": s_name}))
    for a_name, n in m.matrix_gradings:
        A = catalog.named_ring(a_name)
        graded.append(CorpusEntry(
            id=f"gr:bn:{a_name}:{n}", kind="graded_ring",
            structure=matrix_bn_grading(A, n),
            meta={"construction": "matrix_bn", "A": a_name, "n": n}))
    for name in m.good_gradings:
        A, base, deg = catalog.good_grading_spec(name)
        gg = good_grading(A, validate_degree_map(base, deg))
        graded.append(CorpusEntry(
            id=f"gr:good:{name}", kind="graded_ring", structure=gg,
            meta={"construction": "good_grading", "name": name,
                  "A": catalog.GOOD_GRADING_SPECS[name][0]}))
    for a_name, g_name in m.groupoid_ring_pairs:
        A = catalog.named_ring(a_name)
        G = catalog.named_groupoid(g_name)
        graded.append(CorpusEntry(
            id=f"gr:gpd:{a_name}:{g_name}", kind="graded_ring",
            structure=groupoid_ring(A, G),
            meta={"construction": "groupoid_ring", "A": a_name, "G": g_name}))
    counts["graded_rings"] = len(graded)

    return Corpus(manifest=m, semigroups=semigroups, rings=rings,
                  groupoids=groupoids, graded=graded, counts=counts)


def write_corpus(corpus: Corpus, directory) -> list[str]:
    """Materialize manifest and structure files; returns the written paths."""
    from pathlib import Path

    from . import jsonio

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    manifest_path = out / "manifest.json"
    manifest_path.write_text(jsonio.dumps_canonical(corpus.manifest.to_json()))
    written.append(str(manifest_path))
    for entry in corpus.all_entries():
        name = entry.id.replace(":", "_").replace("+", "-") + ".json"
        path = out / name
        structure = entry.structure
        if isinstance(structure, GoodGrading):
            structure = structure.graded
        path.write_text(jsonio.dumps_canonical(jsonio.structure_to_json(structure)))
        written.append(str(path))
    return written
