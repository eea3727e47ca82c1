#!/usr/bin/env python3
"""From groupoid gradings to semigroup gradings and back.

Adjoining an absorbing zero to a finite groupoid gives an inverse semigroup;
for the pair groupoid it is exactly the matrix-unit semigroup.  A groupoid
grading regrades over that semigroup without changing any of the epsilon
verdicts, so the groupoid form of the regularity theorem follows the
semigroup form.
"""

from grl.catalog import named_ring
from grl.constructions import groupoid_ring, matrix_bn_grading
from grl.gradings import (
    check_prop_switch,
    check_theorem_groupoid,
    regrade_groupoid_to_semigroup,
    structurally_equal,
)
from grl.groupoids import pair_groupoid, to_inverse_semigroup
from grl.semigroups import classify_semigroup


def main():
    G = pair_groupoid(2)
    S, embedding = to_inverse_semigroup(G)
    print(f"pair groupoid on 2 objects: {G.n_morphisms} morphisms "
          f"{[G.morphism_label(g) for g in G.morphisms()]}")
    print(f"adjoined-zero semigroup: order {S.order}, "
          f"inverse: {classify_semigroup(S).is_inverse}, "
          f"embedding {list(embedding)}")

    R = groupoid_ring(named_ring("Z2"), G)
    regraded = regrade_groupoid_to_semigroup(R)
    same = structurally_equal(regraded, matrix_bn_grading(named_ring("Z2"), 2))
    print(f"\nregraded pair-groupoid ring over Z2 equals the matrix-unit "
          f"grading of 2x2 matrices: {same}")

    for coeff in ("Z2", "Z4", "Z6"):
        R = groupoid_ring(named_ring(coeff), G)
        switch = check_prop_switch(R)
        thm = check_theorem_groupoid(R)
        print(f"\ncoefficients {coeff}:")
        print(f"  epsilon verdicts survive the regrading: {switch['agree']}")
        print(f"  graded regular (span form / quasi-inverse form / structural "
              f"form): {thm['span_membership_form']} / "
              f"{thm['quasi_inverse_form']} / {thm['structural_form']}")


if __name__ == "__main__":
    main()
