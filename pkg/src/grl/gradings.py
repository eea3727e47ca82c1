"""Graded rings over finite semigroup or groupoid bases, and their classifiers.

The total ring is never materialized: a grading is stored as one finite
additive component per base element plus bilinear product tables between
components.  Absent product tables mean the zero map; for a groupoid base,
tables for non-composable pairs must be absent.

Every predicate here quantifies over homogeneous elements only, which is all
the decision procedures need.  Witness searches scan ascending element order,
so verdicts and witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Union

from .errors import (
    BilinearityError,
    CodomainError,
    GradedAssociativityError,
    NonComposableProductError,
    OutOfRangeError,
)
from .groupoids import FiniteGroupoid, to_inverse_semigroup
from .rings import (
    TRIVIAL_GROUP,
    FiniteAdditiveGroup,
    FiniteRing,
    Subgroup,
    additive_closure,
    is_left_ideal,
    idempotent_generator,
    is_von_neumann_regular,
)
from .semigroups import FiniteSemigroup, classify_semigroup, idempotents, inverses

BaseLike = Union[FiniteSemigroup, FiniteGroupoid]
ProductTable = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GradedRing:
    base: BaseLike
    components: tuple[FiniteAdditiveGroup, ...]
    products: dict[tuple[int, int], ProductTable]

    @property
    def base_kind(self) -> str:
        return "semigroup" if isinstance(self.base, FiniteSemigroup) else "groupoid"

    @property
    def n_graders(self) -> int:
        return len(self.components)

    def graders(self) -> range:
        return range(self.n_graders)

    def component(self, s: int) -> FiniteAdditiveGroup:
        return self.components[s]

    def target(self, s: int, t: int) -> Optional[int]:
        """Index of the component receiving R_s * R_t, or None off G^(2)."""
        if isinstance(self.base, FiniteSemigroup):
            return self.base.mul(s, t)
        if self.base.composable(s, t):
            return self.base.compose(s, t)
        return None

    def product(self, s: int, t: int, a: int, b: int) -> int:
        """Index of the product of a in R_s with b in R_t, inside R_{st}."""
        if self.target(s, t) is None:
            raise ValueError(f"graders {s} and {t} are not composable")
        table = self.products.get((s, t))
        return table[a][b] if table is not None else 0

    def base_pairs(self) -> Iterator[tuple[int, int]]:
        """All grader pairs with a defined target."""
        if isinstance(self.base, FiniteSemigroup):
            for s in self.graders():
                for t in self.graders():
                    yield (s, t)
        else:
            yield from self.base.composable_pairs()

    def inverse_pairs(self) -> list[tuple[int, int]]:
        """Pairs (s, t) with t an inverse of s: every t in V(s) for a
        semigroup base, t = s^{-1} for a groupoid base."""
        if isinstance(self.base, FiniteSemigroup):
            return [(s, t) for s in self.graders() for t in inverses(self.base, s)]
        return [(g, self.base.inv[g]) for g in self.base.morphisms()]

    def base_idempotents(self) -> tuple[int, ...]:
        """Idempotent graders: E(S), or the identity morphisms of a groupoid."""
        if isinstance(self.base, FiniteSemigroup):
            return idempotents(self.base)
        return tuple(g for g in self.base.morphisms()
                     if self.base.composable(g, g) and self.base.compose(g, g) == g)

    def component_ring(self, e: int) -> FiniteRing:
        """The component at an idempotent grader, as a ring in its own right."""
        if self.target(e, e) != e:
            raise ValueError(f"grader {e} is not idempotent")
        group = self.components[e]
        table = self.products.get((e, e))
        if table is None:
            table = tuple((0,) * group.order for _ in range(group.order))
        return FiniteRing(additive=group, mul=table)

    def grader_label(self, s: int) -> str:
        if isinstance(self.base, FiniteSemigroup):
            return self.base.label(s)
        return self.base.morphism_label(s)


# ---------------------------------------------------------------------------
# validation


def _zero_table(rows: int, cols: int) -> ProductTable:
    return tuple((0,) * cols for _ in range(rows))


def validate_grading(base: BaseLike,
                     components: Sequence[FiniteAdditiveGroup],
                     products: Mapping[tuple[int, int], Sequence[Sequence[int]]]) -> GradedRing:
    """Exhaustively verify bilinearity, codomains and cross-component associativity.

    ``components`` must already be validated additive groups, one per base
    element (semigroup elements / groupoid morphisms).
    """
    is_semigroup = isinstance(base, FiniteSemigroup)
    n = base.order if is_semigroup else base.n_morphisms
    if len(components) != n:
        raise OutOfRangeError(f"expected {n} components, got {len(components)}")

    draft = GradedRing(base=base, components=tuple(components), products={})
    prods: dict[tuple[int, int], ProductTable] = {}
    for (s, t), raw in products.items():
        if not (0 <= s < n and 0 <= t < n):
            raise OutOfRangeError(f"product key ({s}, {t}) out of range", (s, t))
        st = draft.target(s, t)
        if st is None:
            raise NonComposableProductError(
                f"product table present for non-composable pair ({s}, {t})", (s, t))
        rows, cols, out = components[s].order, components[t].order, components[st].order
        if len(raw) != rows:
            raise CodomainError(f"product ({s}, {t}) has {len(raw)} rows, expected {rows}",
                                (s, t))
        for a, row in enumerate(raw):
            if len(row) != cols:
                raise CodomainError(
                    f"product ({s}, {t}) row {a} has length {len(row)}, expected {cols}",
                    (s, t, a))
            for b, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < out:
                    raise CodomainError(
                        f"product ({s}, {t})[{a}][{b}] = {v!r} not an index in R_{st}",
                        (s, t, a, b, v))
        prods[(s, t)] = tuple(tuple(row) for row in raw)

    R = GradedRing(base=base, components=tuple(components), products=prods)

    # bi-additivity first: it makes every table send 0 to 0, which the
    # associativity shortcuts below rely on
    for (s, t), table in sorted(prods.items()):
        st = R.target(s, t)
        add_s, add_t, add_st = components[s].add, components[t].add, components[st].add
        rows, cols = components[s].order, components[t].order
        for a in range(rows):
            for a2 in range(rows):
                sa = add_s[a][a2]
                for b in range(cols):
                    if table[sa][b] != add_st[table[a][b]][table[a2][b]]:
                        raise BilinearityError(
                            f"(a+a')*b != a*b + a'*b at product ({s}, {t}), "
                            f"(a, a', b) = ({a}, {a2}, {b})", (s, t, a, a2, b))
        for a in range(rows):
            for b in range(cols):
                for b2 in range(cols):
                    sb = add_t[b][b2]
                    if table[a][sb] != add_st[table[a][b]][table[a][b2]]:
                        raise BilinearityError(
                            f"a*(b+b') != a*b + a*b' at product ({s}, {t}), "
                            f"(a, b, b') = ({a}, {b}, {b2})", (s, t, a, b, b2))

    def table_or_zero(s: int, t: int) -> ProductTable:
        got = prods.get((s, t))
        if got is not None:
            return got
        return _zero_table(components[s].order, components[t].order)

    def image(table: ProductTable) -> set[int]:
        return {v for row in table for v in row}

    if is_semigroup:
        triples = ((s, t, u) for s in range(n) for t in range(n) for u in range(n))
    else:
        triples = ((s, t, u) for (s, t) in base.composable_pairs()
                   for u in range(n) if base.composable(t, u))
    for (s, t, u) in triples:
        st = R.target(s, t)
        tu = R.target(t, u)
        left_present = (s, t) in prods
        right_present = (t, u) in prods
        if not left_present and not right_present:
            continue  # both sides are identically zero
        p_st = table_or_zero(s, t)
        p_tu = table_or_zero(t, u)
        p_st_u = table_or_zero(st, u)
        p_s_tu = table_or_zero(s, tu)
        if left_present and right_present:
            for a in range(components[s].order):
                for b in range(components[t].order):
                    ab = p_st[a][b]
                    for c in range(components[u].order):
                        if p_st_u[ab][c] != p_s_tu[a][p_tu[b][c]]:
                            raise GradedAssociativityError(
                                f"(ab)c != a(bc) at graders ({s}, {t}, {u}), "
                                f"elements ({a}, {b}, {c})", (s, t, u, a, b, c))
        elif left_present:
            # right side vanishes; left side must vanish on the image of R_s R_t
            for ab in sorted(image(p_st)):
                for c in range(components[u].order):
                    if p_st_u[ab][c] != 0:
                        raise GradedAssociativityError(
                            f"(ab)c != 0 = a(bc) at graders ({s}, {t}, {u})",
                            (s, t, u, ab, c))
        else:
            for bc in sorted(image(p_tu)):
                for a in range(components[s].order):
                    if p_s_tu[a][bc] != 0:
                        raise GradedAssociativityError(
                            f"a(bc) != 0 = (ab)c at graders ({s}, {t}, {u})",
                            (s, t, u, a, bc))
    return R


# ---------------------------------------------------------------------------
# verdicts and witnesses


@dataclass(frozen=True)
class Verdict:
    holds: bool
    vacuous: bool = False
    witness: object = None
    failing: object = None


@dataclass(frozen=True)
class EpsilonWitness:
    """Unit-like elements inside product spans.

    ``uniform`` maps (s, t) to (eps, eps') with eps in span(R_s R_t) fixing
    every r in R_s from the left and eps' in span(R_t R_s) fixing it from the
    right.  ``per_element`` maps (s, t, r) to such a pair for that r only.
    """

    kind: str
    uniform: Optional[dict[tuple[int, int], tuple[int, int]]] = None
    per_element: Optional[dict[tuple[int, int, int], tuple[int, int]]] = None


@dataclass(frozen=True)
class GradedVnrWitness:
    """(s, r, t) -> first y in R_t with r = r*y*r; or the first failing triple."""

    assignments: dict[tuple[int, int, int], int]
    failing: Optional[tuple[int, int, int]]
    vacuous: bool


# ---------------------------------------------------------------------------
# product spans


def _product_span(R: GradedRing, s: int, t: int) -> Subgroup:
    st = R.target(s, t)
    if st is None:
        raise ValueError(f"graders {s} and {t} are not composable")
    seeds = {R.product(s, t, a, b)
             for a in R.component(s).elements() for b in R.component(t).elements()}
    return additive_closure(R.component(st), seeds)


def product_subgroup(R: GradedRing, s: int, t: int) -> Subgroup:
    """Additive span of the products R_s R_t inside R_{st}.

    When t is an inverse of s the span is additionally verified to be a
    two-sided ideal of the component ring at st; a failure there indicates a
    corrupted grading and raises.
    """
    span = _product_span(R, s, t)
    if (s, t) in set(R.inverse_pairs()):
        st = R.target(s, t)
        ring = R.component_ring(st)
        for u in ring.elements():
            for x in span.elements():
                if ring.times(u, x) not in span or ring.times(x, u) not in span:
                    raise RuntimeError(
                        f"span of R_{s} R_{t} is not an ideal of R_{st}; "
                        "the grading is inconsistent")
    return span


def _triple_span(R: GradedRing, s: int, t: int) -> Subgroup:
    """Additive span of R_s R_t R_s inside R_s (for t an inverse of s)."""
    st = R.target(s, t)
    seeds = set()
    for a in R.component(s).elements():
        for b in R.component(t).elements():
            ab = R.product(s, t, a, b)
            for c in R.component(s).elements():
                seeds.add(R.product(st, s, ab, c))
    return additive_closure(R.component(s), seeds)


# ---------------------------------------------------------------------------
# grading classes


def is_symmetric(R: GradedRing) -> Verdict:
    """Does span(R_s R_t R_s) fill R_s for every s and every inverse t of s?"""
    pairs = R.inverse_pairs()
    for (s, t) in pairs:
        span = _triple_span(R, s, t)
        if len(span) != R.component(s).order:
            return Verdict(holds=False, failing=(s, t))
    return Verdict(holds=True, vacuous=not pairs)


def is_strong(R: GradedRing) -> Verdict:
    """Does span(R_s R_t) fill R_{st} for every defined pair?"""
    for (s, t) in R.base_pairs():
        st = R.target(s, t)
        if len(_product_span(R, s, t)) != R.component(st).order:
            return Verdict(holds=False, failing=(s, t))
    return Verdict(holds=True)


def _subring_unity(ring: FiniteRing, members: Sequence[int]) -> Optional[int]:
    """Two-sided unity of a subgroup viewed as a ring; {0} is unital with u = 0."""
    return next((u for u in members
                 if all(ring.times(u, x) == x == ring.times(x, u) for x in members)),
                None)


def _subring_is_s_unital(ring: FiniteRing, members: Sequence[int]) -> bool:
    for x in members:
        if not any(ring.times(u, x) == x for u in members):
            return False
        if not any(ring.times(x, v) == x for v in members):
            return False
    return True


def is_epsilon_strong(R: GradedRing) -> Verdict:
    """Symmetric, with every span(R_s R_t) for t inverse to s a unital ring.

    The witness records, per pair, the unity of span(R_s R_t) and the unity
    of span(R_t R_s).
    """
    sym = is_symmetric(R)
    if not sym.holds:
        return Verdict(holds=False, failing=("symmetric", *sym.failing))
    uniform: dict[tuple[int, int], tuple[int, int]] = {}
    for (s, t) in R.inverse_pairs():
        st = R.target(s, t)
        ts = R.target(t, s)
        eps = _subring_unity(R.component_ring(st), _product_span(R, s, t).elements())
        if eps is None:
            return Verdict(holds=False, failing=(s, t))
        eps_prime = _subring_unity(R.component_ring(ts), _product_span(R, t, s).elements())
        if eps_prime is None:
            return Verdict(holds=False, failing=(t, s))
        uniform[(s, t)] = (eps, eps_prime)
    return Verdict(holds=True, vacuous=sym.vacuous,
                   witness=EpsilonWitness(kind="uniform", uniform=uniform))


def _per_element_epsilons(R: GradedRing) -> tuple[bool, dict, Optional[tuple]]:
    """For each (s, t, r): search eps in span(R_s R_t) with eps*r = r and
    eps' in span(R_t R_s) with r*eps' = r."""
    out: dict[tuple[int, int, int], tuple[int, int]] = {}
    for (s, t) in R.inverse_pairs():
        st = R.target(s, t)
        ts = R.target(t, s)
        left_span = _product_span(R, s, t).elements()
        right_span = _product_span(R, t, s).elements()
        for r in R.component(s).elements():
            eps = next((u for u in left_span if R.product(st, s, u, r) == r), None)
            eps_prime = next((v for v in right_span if R.product(s, ts, r, v) == r), None)
            if eps is None or eps_prime is None:
                return False, out, (s, t, r)
            out[(s, t, r)] = (eps, eps_prime)
    return True, out, None


def is_nearly_epsilon_strong(R: GradedRing) -> Verdict:
    """Symmetric, with every span(R_s R_t) for t inverse to s an s-unital ring.

    The attached witness carries element-wise unit pairs found by direct
    search; these re-verify by table evaluation.
    """
    sym = is_symmetric(R)
    if not sym.holds:
        return Verdict(holds=False, failing=("symmetric", *sym.failing))
    for (s, t) in R.inverse_pairs():
        st = R.target(s, t)
        span = _product_span(R, s, t)
        if not _subring_is_s_unital(R.component_ring(st), span.elements()):
            return Verdict(holds=False, failing=(s, t))
    ok, per_element, _ = _per_element_epsilons(R)
    witness = EpsilonWitness(kind="per-element", per_element=per_element) if ok else None
    return Verdict(holds=True, vacuous=sym.vacuous, witness=witness)


# ---------------------------------------------------------------------------
# graded regularity


def is_graded_vnr(R: GradedRing) -> Verdict:
    """For every grader s, r in R_s and inverse t of s: some y in R_t with r = r*y*r.

    Vacuous when no grader with a nontrivial component has an inverse.
    """
    pairs = R.inverse_pairs()
    vacuous = not any(R.component(s).order > 1 for (s, _) in pairs)
    assignments: dict[tuple[int, int, int], int] = {}
    for (s, t) in pairs:
        st = R.target(s, t)
        for r in R.component(s).elements():
            y = next((y for y in R.component(t).elements()
                      if R.product(st, s, R.product(s, t, r, y), r) == r), None)
            if y is None:
                return Verdict(holds=False, vacuous=vacuous,
                               witness=GradedVnrWitness(assignments, (s, r, t), vacuous),
                               failing=(s, r, t))
            assignments[(s, r, t)] = y
    return Verdict(holds=True, vacuous=vacuous,
                   witness=GradedVnrWitness(assignments, None, vacuous))


def base_components_vnr(R: GradedRing) -> Verdict:
    """Is the component ring at every idempotent grader von Neumann regular?"""
    for e in R.base_idempotents():
        w = is_von_neumann_regular(R.component_ring(e))
        if not w.holds:
            return Verdict(holds=False, failing=(e, w.failing))
    return Verdict(holds=True)


# ---------------------------------------------------------------------------
# cross-checks: each side computed by an independent code path


def check_eps_characterizations(R: GradedRing) -> dict:
    """Definition-side vs witness-side verdicts for the epsilon-strong and
    nearly epsilon-strong classes; they must coincide.

    When the grading is epsilon-strong, every component at an idempotent
    grader must additionally have a verified two-sided unity.
    """
    eps_def = is_epsilon_strong(R)

    # witness side for epsilon-strong: a single eps per pair fixing all of R_s
    eps_wit = True
    eps_wit_failing = None
    for (s, t) in R.inverse_pairs():
        st = R.target(s, t)
        ts = R.target(t, s)
        left_span = _product_span(R, s, t).elements()
        right_span = _product_span(R, t, s).elements()
        rs = R.component(s).elements()
        eps = next((u for u in left_span
                    if all(R.product(st, s, u, r) == r for r in rs)), None)
        eps_prime = next((v for v in right_span
                          if all(R.product(s, ts, r, v) == r for r in rs)), None)
        if eps is None or eps_prime is None:
            eps_wit = False
            eps_wit_failing = (s, t)
            break

    near_def = is_nearly_epsilon_strong(R)
    near_wit, _, near_wit_failing = _per_element_epsilons(R)

    unit_components = {"checked": False, "holds": True, "unities": {}, "failing": None}
    if eps_def.holds:
        unit_components["checked"] = True
        for e in R.base_idempotents():
            u = _subring_unity(R.component_ring(e), list(R.component(e).elements()))
            if u is None:
                unit_components["holds"] = False
                unit_components["failing"] = e
                break
            unit_components["unities"][str(e)] = u

    agree = (eps_def.holds == eps_wit) and (near_def.holds == near_wit) \
        and (not eps_def.holds or unit_components["holds"])
    return {
        "check": "eps-characterizations",
        "applicable": True,
        "epsilon_strong": {"definition": eps_def.holds, "witness": eps_wit,
                           "agree": eps_def.holds == eps_wit,
                           "witness_failing": list(eps_wit_failing) if eps_wit_failing else None},
        "nearly_epsilon_strong": {"definition": near_def.holds, "witness": near_wit,
                                  "agree": near_def.holds == near_wit,
                                  "witness_failing": list(near_wit_failing) if near_wit_failing else None},
        "unit_components": unit_components,
        "agree": agree,
    }


def check_theorem_main(R: GradedRing) -> dict:
    """Graded regularity must equal: nearly epsilon-strong and every
    idempotent component regular.  Both sides computed independently."""
    if R.base_kind != "semigroup":
        return {"check": "theorem-main", "applicable": False,
                "reason": "needs a semigroup base"}
    lhs = is_graded_vnr(R)
    near = is_nearly_epsilon_strong(R)
    bvnr = base_components_vnr(R)
    rhs = near.holds and bvnr.holds
    return {
        "check": "theorem-main",
        "applicable": True,
        "graded_vnr": lhs.holds,
        "graded_vnr_vacuous": lhs.vacuous,
        "graded_vnr_failing": list(lhs.failing) if lhs.failing else None,
        "nearly_epsilon_strong": near.holds,
        "base_components_vnr": bvnr.holds,
        "rhs": rhs,
        "agree": lhs.holds == rhs,
    }


def check_lemma_technical(R: GradedRing, max_witnesses: Optional[int] = None) -> dict:
    """Under the two theorem hypotheses, every subgroup R_t * r must be a left
    ideal of the component at ts generated by an idempotent found by scan."""
    near = is_nearly_epsilon_strong(R)
    bvnr = base_components_vnr(R)
    if not (near.holds and bvnr.holds):
        return {"check": "lemma-technical", "applicable": False,
                "reason": "hypotheses fail: needs nearly epsilon-strong grading "
                          "with regular idempotent components",
                "nearly_epsilon_strong": near.holds,
                "base_components_vnr": bvnr.holds}
    witnesses = []
    checked = 0
    for (s, t) in R.inverse_pairs():
        ts = R.target(t, s)
        ring_ts = R.component_ring(ts)
        for r in R.component(s).elements():
            gens = {R.product(t, s, b, r) for b in R.component(t).elements()}
            I = additive_closure(R.component(ts), gens)
            if not is_left_ideal(ring_ts, I):
                return {"check": "lemma-technical", "applicable": True, "holds": False,
                        "agree": False,
                        "failing": {"s": s, "t": t, "r": r, "reason": "not a left ideal"}}
            u = idempotent_generator(ring_ts, I)
            if u is None:
                return {"check": "lemma-technical", "applicable": True, "holds": False,
                        "agree": False,
                        "failing": {"s": s, "t": t, "r": r,
                                    "reason": "no idempotent generator",
                                    "ideal": list(I.elements())}}
            checked += 1
            if max_witnesses is None or len(witnesses) < max_witnesses:
                witnesses.append({"s": s, "t": t, "r": r, "idempotent": u,
                                  "ideal": list(I.elements())})
    return {"check": "lemma-technical", "applicable": True, "holds": True,
            "agree": True, "triples_checked": checked, "witnesses": witnesses}


def check_theorem_inverse_semigroup(R: GradedRing) -> dict:
    """Over an inverse-semigroup base, three forms of graded regularity must
    coincide: the all-inverses form, the some-inverse form, and the
    nearly-epsilon-strong + regular-components form."""
    if R.base_kind != "semigroup":
        return {"check": "theorem-inverse", "applicable": False,
                "reason": "needs a semigroup base"}
    cls = classify_semigroup(R.base)
    if not cls.is_inverse:
        return {"check": "theorem-inverse", "applicable": False,
                "reason": "base is not an inverse semigroup"}

    part_i = is_graded_vnr(R).holds

    part_ii = True
    ii_failing = None
    for s in R.graders():
        vs = cls.inverse_sets[s]
        for r in R.component(s).elements():
            found = False
            for t in vs:
                st = R.target(s, t)
                if any(R.product(st, s, R.product(s, t, r, y), r) == r
                       for y in R.component(t).elements()):
                    found = True
                    break
            if not found:
                part_ii = False
                ii_failing = (s, r)
                break
        if not part_ii:
            break

    part_iii = is_nearly_epsilon_strong(R).holds and base_components_vnr(R).holds
    return {
        "check": "theorem-inverse",
        "applicable": True,
        "all_inverses_form": part_i,
        "some_inverse_form": part_ii,
        "some_inverse_failing": list(ii_failing) if ii_failing else None,
        "structural_form": part_iii,
        "agree": part_i == part_ii == part_iii,
    }


def check_corollaries(R: GradedRing) -> dict:
    """Consequences for the epsilon-strong and strong special cases.

    Epsilon-strong: graded regularity must equal regularity of the idempotent
    components.  Strong: nearly epsilon-strong must equal s-unitality of the
    idempotent components, and under that s-unitality the same regularity
    equivalence must hold.
    """
    from .rings import is_s_unital

    out: dict = {"check": "corollaries", "applicable": True}
    agree = True

    eps = is_epsilon_strong(R)
    if eps.holds:
        lhs = is_graded_vnr(R).holds
        rhs = base_components_vnr(R).holds
        out["epsilon_strong_case"] = {"applicable": True, "graded_vnr": lhs,
                                      "base_components_vnr": rhs, "agree": lhs == rhs}
        agree = agree and lhs == rhs
    else:
        out["epsilon_strong_case"] = {"applicable": False}

    strong = is_strong(R)
    if strong.holds:
        components_s_unital = all(is_s_unital(R.component_ring(e))
                                  for e in R.base_idempotents())
        near = is_nearly_epsilon_strong(R).holds
        part = {"applicable": True, "nearly_epsilon_strong": near,
                "components_s_unital": components_s_unital,
                "agree": near == components_s_unital}
        agree = agree and near == components_s_unital
        if components_s_unital:
            lhs = is_graded_vnr(R).holds
            rhs = base_components_vnr(R).holds
            part["regularity"] = {"graded_vnr": lhs, "base_components_vnr": rhs,
                                  "agree": lhs == rhs}
            agree = agree and lhs == rhs
        out["strong_case"] = part
    else:
        out["strong_case"] = {"applicable": False}

    out["agree"] = agree
    return out


# ---------------------------------------------------------------------------
# groupoid gradings


def regrade_groupoid_to_semigroup(R: GradedRing) -> GradedRing:
    """View a groupoid grading over the adjoined-zero inverse semigroup.

    The zero grader gets the trivial component; products that were absent
    (non-composable) stay absent, i.e. zero.
    """
    if R.base_kind != "groupoid":
        raise ValueError("regrade needs a groupoid-graded ring")
    S, embed = to_inverse_semigroup(R.base)
    components = [TRIVIAL_GROUP] + list(R.components)
    products = {(embed[g], embed[h]): table for (g, h), table in R.products.items()}
    return validate_grading(S, components, products)


def check_prop_switch(R: GradedRing) -> dict:
    """The epsilon-strong and nearly epsilon-strong verdicts must be the same
    whether computed over the groupoid or over its adjoined-zero semigroup."""
    if R.base_kind != "groupoid":
        return {"check": "prop-switch", "applicable": False,
                "reason": "needs a groupoid-graded ring"}
    regraded = regrade_groupoid_to_semigroup(R)
    g_eps = is_epsilon_strong(R).holds
    s_eps = is_epsilon_strong(regraded).holds
    g_near = is_nearly_epsilon_strong(R).holds
    s_near = is_nearly_epsilon_strong(regraded).holds
    return {
        "check": "prop-switch",
        "applicable": True,
        "epsilon_strong": {"groupoid": g_eps, "semigroup": s_eps, "agree": g_eps == s_eps},
        "nearly_epsilon_strong": {"groupoid": g_near, "semigroup": s_near,
                                  "agree": g_near == s_near},
        "agree": g_eps == s_eps and g_near == s_near,
    }


def _homogeneous_in_rRr(R: GradedRing, g: int, r: int) -> bool:
    """Membership of r in the span of r * R * r, computed across all graders.

    Only graders h with g h g = g can contribute to the component of r, so
    the span is accumulated from exactly those (found by scan, not assumed).
    """
    seeds = set()
    for h in R.graders():
        gh = R.target(g, h)
        if gh is None or R.target(gh, g) != g:
            continue
        for x in R.component(h).elements():
            seeds.add(R.product(gh, g, R.product(g, h, r, x), r))
    return r in additive_closure(R.component(g), seeds).members


def check_theorem_groupoid(R: GradedRing) -> dict:
    """Three forms of groupoid graded regularity that must coincide:
    span membership of r in r*R*r, a quasi-inverse in the component at g^{-1},
    and nearly epsilon-strong with regular object components."""
    if R.base_kind != "groupoid":
        return {"check": "theorem-groupoid", "applicable": False,
                "reason": "needs a groupoid-graded ring"}
    G = R.base

    part_i = True
    i_failing = None
    for g in G.morphisms():
        for r in R.component(g).elements():
            if not _homogeneous_in_rRr(R, g, r):
                part_i = False
                i_failing = (g, r)
                break
        if not part_i:
            break

    part_ii = True
    ii_failing = None
    for g in G.morphisms():
        gi = G.inv[g]
        ggi = G.compose(g, gi)
        for r in R.component(g).elements():
            if not any(R.product(ggi, g, R.product(g, gi, r, y), r) == r
                       for y in R.component(gi).elements()):
                part_ii = False
                ii_failing = (g, r)
                break
        if not part_ii:
            break

    part_iii = is_nearly_epsilon_strong(R).holds and base_components_vnr(R).holds
    return {
        "check": "theorem-groupoid",
        "applicable": True,
        "span_membership_form": part_i,
        "span_failing": list(i_failing) if i_failing else None,
        "quasi_inverse_form": part_ii,
        "quasi_inverse_failing": list(ii_failing) if ii_failing else None,
        "structural_form": part_iii,
        "agree": part_i == part_ii == part_iii,
    }


# ---------------------------------------------------------------------------
# structural comparison


def _normalized_products(R: GradedRing) -> dict:
    out = {}
    for key, table in R.products.items():
        if any(v != 0 for row in table for v in row):
            out[key] = table
    return out


def structurally_equal(R1: GradedRing, R2: GradedRing) -> bool:
    """Same base tables, same component tables, same nonzero product tables.

    Labels are ignored; absent products compare equal to all-zero tables.
    """
    if R1.base_kind != R2.base_kind:
        return False
    if R1.base_kind == "semigroup":
        if R1.base.table != R2.base.table:
            return False
    else:
        b1, b2 = R1.base, R2.base
        if (b1.dom, b1.cod, b1.inv, b1.table) != (b2.dom, b2.cod, b2.inv, b2.table):
            return False
    if len(R1.components) != len(R2.components):
        return False
    for c1, c2 in zip(R1.components, R2.components):
        if (c1.add, c1.neg) != (c2.add, c2.neg):
            return False
    return _normalized_products(R1) == _normalized_products(R2)
