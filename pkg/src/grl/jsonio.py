"""JSON schemas for structure files, plus construction-spec resolution.

Every file carries a top-level "kind" used for auto-detection:

  semigroup   {"kind", "order", "table", "labels"?}
  groupoid    {"kind", "objects", "morphisms": [{"dom", "cod", "inv"}],
               "compose": [[g, h, gh], ...]}
  ring        {"kind", "order", "add", "neg", "mul"} or {"kind", "name"} or
              {"kind", "construct": "Zn" | "product" | "matrix", ...}
  graded_ring {"kind", "base": {"kind", "ref"}, "components": {"<s>": group},
               "products": [{"s", "t", "table"}, ...]}

Absent graded products mean the zero map and must be absent for
non-composable groupoid pairs.  Writers emit canonical bytes: sorted keys,
two-space indent, nonzero products only.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .errors import OutOfRangeError
from .gradings import GradedRing, validate_grading
from .groupoids import FiniteGroupoid, validate_groupoid
from .rings import (
    FiniteAdditiveGroup,
    FiniteRing,
    cyclic_ring,
    matrix_ring,
    product_ring,
    validate_additive_group,
    validate_ring,
)
from .semigroups import FiniteSemigroup, validate_semigroup

Structure = Union[FiniteSemigroup, FiniteGroupoid, FiniteRing, GradedRing]


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# per-kind encoders


def semigroup_to_json(S: FiniteSemigroup) -> dict:
    out = {"kind": "semigroup", "order": S.order,
           "table": [list(row) for row in S.table]}
    if S.labels is not None:
        out["labels"] = list(S.labels)
    return out


def semigroup_from_json(data: dict) -> FiniteSemigroup:
    return validate_semigroup(data["table"], labels=data.get("labels"))


def groupoid_to_json(G: FiniteGroupoid) -> dict:
    morphisms = [{"dom": G.dom[g], "cod": G.cod[g], "inv": G.inv[g]}
                 for g in G.morphisms()]
    compose = [[g, h, G.table[g][h]]
               for g in G.morphisms() for h in G.morphisms()
               if G.table[g][h] is not None]
    out = {"kind": "groupoid",
           "objects": list(G.object_labels) if G.object_labels
           else list(range(G.n_objects)),
           "morphisms": morphisms, "compose": compose}
    if G.morphism_labels is not None:
        out["morphism_labels"] = list(G.morphism_labels)
    return out


def groupoid_from_json(data: dict) -> FiniteGroupoid:
    objects = data["objects"]
    morphisms = data["morphisms"]
    dom = [m["dom"] for m in morphisms]
    cod = [m["cod"] for m in morphisms]
    inv = [m["inv"] for m in morphisms]
    compose = {}
    for item in data.get("compose", []):
        g, h, gh = item
        compose[(g, h)] = gh
    labels = [str(x) for x in objects]
    return validate_groupoid(len(objects), dom, cod, inv, compose,
                             object_labels=labels,
                             morphism_labels=data.get("morphism_labels"))


def ring_to_json(T: FiniteRing) -> dict:
    return {"kind": "ring", "order": T.order,
            "add": [list(row) for row in T.additive.add],
            "neg": list(T.additive.neg),
            "mul": [list(row) for row in T.mul]}


def ring_from_json(data) -> FiniteRing:
    """Accept inline tables, a registry name, or a constructor form."""
    from . import catalog

    if isinstance(data, str):
        return catalog.named_ring(data)
    if "name" in data:
        return catalog.named_ring(data["name"])
    if "construct" in data:
        kind = data["construct"]
        if kind == "Zn":
            return cyclic_ring(int(data["n"]))
        if kind == "product":
            return product_ring(*(ring_from_json(f) for f in data["factors"]))
        if kind == "matrix":
            return matrix_ring(ring_from_json(data["A"]), int(data["n"]))
        raise OutOfRangeError(f"unknown ring constructor: {kind!r}")
    return validate_ring(data["add"], data["neg"], data["mul"])


def _group_to_json(g: FiniteAdditiveGroup) -> dict:
    return {"order": g.order, "add": [list(row) for row in g.add],
            "neg": list(g.neg)}


def _group_from_json(data: dict) -> FiniteAdditiveGroup:
    return validate_additive_group(data["add"], data["neg"])


def graded_to_json(R: GradedRing) -> dict:
    base = {"kind": R.base_kind}
    if R.base_kind == "semigroup":
        base["ref"] = semigroup_to_json(R.base)
    else:
        base["ref"] = groupoid_to_json(R.base)
    components = {str(s): _group_to_json(R.component(s)) for s in R.graders()}
    products = []
    for (s, t) in sorted(R.products):
        table = R.products[(s, t)]
        if all(v == 0 for row in table for v in row):
            continue
        products.append({"s": s, "t": t, "table": [list(row) for row in table]})
    return {"kind": "graded_ring", "base": base,
            "components": components, "products": products}


def graded_from_json(data: dict, base_dir: Optional[Path] = None) -> GradedRing:
    base_spec = data["base"]
    ref = base_spec["ref"]
    if isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        ref = json.loads(path.read_text())
    if base_spec["kind"] == "semigroup":
        base = semigroup_from_json(ref)
        n = base.order
    elif base_spec["kind"] == "groupoid":
        base = groupoid_from_json(ref)
        n = base.n_morphisms
    else:
        raise OutOfRangeError(f"unknown base kind: {base_spec['kind']!r}")
    trivial = {"order": 1, "add": [[0]], "neg": [0]}
    components = [_group_from_json(data["components"].get(str(s), trivial))
                  for s in range(n)]
    products = {}
    for item in data.get("products", []):
        products[(item["s"], item["t"])] = item["table"]
    return validate_grading(base, components, products)


# ---------------------------------------------------------------------------
# dispatch


def structure_to_json(structure: Structure) -> dict:
    if isinstance(structure, FiniteSemigroup):
        return semigroup_to_json(structure)
    if isinstance(structure, FiniteGroupoid):
        return groupoid_to_json(structure)
    if isinstance(structure, FiniteRing):
        return ring_to_json(structure)
    if isinstance(structure, GradedRing):
        return graded_to_json(structure)
    raise TypeError(f"cannot serialize {type(structure).__name__}")


def structure_from_json(data: dict, base_dir: Optional[Path] = None) -> tuple[str, Structure]:
    kind = data.get("kind")
    if kind == "semigroup":
        return kind, semigroup_from_json(data)
    if kind == "groupoid":
        return kind, groupoid_from_json(data)
    if kind == "ring":
        return kind, ring_from_json(data)
    if kind == "graded_ring":
        return kind, graded_from_json(data, base_dir=base_dir)
    raise OutOfRangeError(f"missing or unknown top-level kind: {kind!r}")


def load_structure(path) -> tuple[str, Structure]:
    p = Path(path)
    data = json.loads(p.read_text())
    return structure_from_json(data, base_dir=p.parent)


# ---------------------------------------------------------------------------
# construction specs


def semigroup_from_spec(spec) -> FiniteSemigroup:
    from . import catalog

    if isinstance(spec, str):
        return catalog.named_semigroup(spec)
    return semigroup_from_json(spec)


def groupoid_from_spec(spec) -> FiniteGroupoid:
    from . import catalog

    if isinstance(spec, str):
        return catalog.named_groupoid(spec)
    return groupoid_from_json(spec)


def construction_from_json(spec: dict):
    """Build the structure described by a construction spec.

    Returns (object, meta); the object is a GradedRing except for
    good_grading, which returns its richer wrapper.
    """
    from .constructions import (
        good_grading,
        groupoid_ring,
        matrix_bn_grading,
        semigroup_ring,
        validate_degree_map,
    )

    kind = spec.get("construct")
    if kind == "semigroup_ring":
        A = ring_from_json(spec["A"])
        S = semigroup_from_spec(spec["S"])
        return semigroup_ring(A, S), {"construction": kind, "A": A, "S": S}
    if kind == "matrix_bn":
        A = ring_from_json(spec["A"])
        return matrix_bn_grading(A, int(spec["n"])), {"construction": kind, "A": A}
    if kind == "good_grading":
        A = ring_from_json(spec["A"])
        base = semigroup_from_spec(spec["base"])
        dm = validate_degree_map(base, spec["deg"])
        return good_grading(A, dm), {"construction": kind, "A": A}
    if kind == "groupoid_ring":
        A = ring_from_json(spec["A"])
        G = groupoid_from_spec(spec["G"])
        return groupoid_ring(A, G), {"construction": kind, "A": A, "G": G}
    raise OutOfRangeError(f"unknown construction: {kind!r}")
