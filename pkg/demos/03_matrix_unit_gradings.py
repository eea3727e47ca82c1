#!/usr/bin/env python3
"""Gradings of matrix rings by their matrix units.

The matrix units of the n-by-n matrix ring, together with zero, form an
inverse semigroup.  Grading the matrix ring by it (one coefficient copy per
unit, trivial component at zero) is always epsilon-strong, and the grading
is graded-regular exactly when the coefficient ring is regular.  The same
story replays for any "good" grading whose matrix units stay homogeneous.
"""

from grl.catalog import named_ring
from grl.constructions import (
    check_good_grading_prop,
    good_grading,
    matrix_bn_grading,
    matrix_units_semigroup,
    validate_degree_map,
)
from grl.gradings import (
    check_theorem_main,
    is_epsilon_strong,
    is_strong,
    is_symmetric,
)
from grl.semigroups import classify_semigroup, cyclic_group, inverses


def main():
    B3 = matrix_units_semigroup(3)
    cls = classify_semigroup(B3)
    e12 = B3.labels.index("e12")
    print(f"matrix-unit semigroup, n=3: order {B3.order}, "
          f"inverse semigroup: {cls.is_inverse}")
    print(f"  V(e12) = {[B3.label(t) for t in inverses(B3, e12)]}")

    for coeff in ("Z2", "Z4"):
        R = matrix_bn_grading(named_ring(coeff), 3)
        rep = check_theorem_main(R)
        print(f"\n3x3 matrices over {coeff}, graded by matrix units:")
        print(f"  symmetric {is_symmetric(R).holds}, strong {is_strong(R).holds}, "
              f"epsilon-strong {is_epsilon_strong(R).holds}")
        print(f"  graded regular: {rep['graded_vnr']}  "
              f"(components regular: {rep['base_components_vnr']}, "
              f"sides agree: {rep['agree']})")

    # a good grading with a bigger identity component: grade 2x2 matrices by
    # the 2-element group, diagonal at the identity, antidiagonal at the flip
    dm = validate_degree_map(cyclic_group(2), [[0, 1], [1, 0]])
    for coeff in ("Z2", "Z4"):
        gg = good_grading(named_ring(coeff), dm)
        rep = check_good_grading_prop(gg)
        print(f"\n2x2 matrices over {coeff}, graded by the 2-element group:")
        print(f"  identity component = diagonal, order "
              f"{gg.graded.component(0).order}; epsilon-strong {rep['epsilon_strong']}")
        print(f"  graded regular {rep['graded_vnr']} == coefficients regular "
              f"{rep['coefficient_vnr']}: {rep['agree']}")


if __name__ == "__main__":
    main()
