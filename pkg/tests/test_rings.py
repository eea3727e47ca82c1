import pytest
from hypothesis import given, settings, strategies as st

from grl.errors import (
    AdditiveGroupError,
    DistributivityError,
    NotAnIdealError,
    OutOfRangeError,
)
from grl.rings import (
    Subgroup,
    additive_closure,
    check_tominaga,
    check_vnr_characterization,
    common_unit,
    cyclic_ring,
    field_f4,
    idempotent_generator,
    is_s_unital,
    is_von_neumann_regular,
    left_ideal,
    matrix_ring,
    multiples_ring,
    opposite_ring,
    product_ring,
    ring_idempotents,
    right_ideal,
    s_unitality,
    unity,
    validate_additive_group,
    validate_ring,
    zero_multiplication_ring,
)

Z2 = cyclic_ring(2)
Z4 = cyclic_ring(4)
Z6 = cyclic_ring(6)
F4 = field_f4()
ZERO2 = zero_multiplication_ring(2)
EVEN8 = multiples_ring(2, 8)  # {0, 2, 4, 6} inside the integers mod 8


class TestValidation:
    def test_cyclic_ring_valid(self):
        assert Z4.order == 4 and Z4.times(3, 3) == 1

    def test_zero_multiplication_valid(self):
        assert all(ZERO2.times(x, y) == 0 for x in ZERO2.elements()
                   for y in ZERO2.elements())

    def test_distributivity_violation(self):
        # right projection x*y = y is associative but breaks (a+b)*c = a*c + b*c
        with pytest.raises(DistributivityError):
            validate_ring([[0, 1], [1, 0]], [0, 1], [[0, 1], [0, 1]])

    def test_additive_zero_must_be_index_zero(self):
        with pytest.raises(AdditiveGroupError):
            validate_additive_group([[1, 0], [0, 1]], [1, 0])

    def test_non_commutative_addition_rejected(self):
        with pytest.raises(AdditiveGroupError):
            validate_additive_group([[0, 1, 2], [2, 0, 1], [1, 2, 0]], [0, 2, 1])

    def test_out_of_range_mul(self):
        with pytest.raises(OutOfRangeError):
            validate_ring([[0, 1], [1, 0]], [0, 1], [[0, 0], [0, 9]])

    def test_field_f4_table(self):
        assert F4.times(2, 2) == 3 and F4.times(2, 3) == 1 and F4.times(3, 3) == 2

    def test_matrix_ring_m2_z2(self):
        m = matrix_ring(Z2, 2)
        assert m.order == 16
        assert unity(m) == 9  # identity matrix (1,0,0,1) encoded big-endian


class TestUnitality:
    def test_cyclic_is_s_unital(self):
        su = s_unitality(Z4)
        assert su.holds and all(u is not None for u in su.left_units)

    def test_zero_ring_not_left_s_unital(self):
        su = s_unitality(ZERO2)
        assert not su.is_left and su.first_left_failure() == 1

    def test_even_subring_not_s_unital(self):
        # the products T*2 = {0, 4} miss 2
        assert {EVEN8.times(t, 1) for t in EVEN8.elements()} == {0, 2}
        assert not is_s_unital(EVEN8)

    def test_unity_values(self):
        assert unity(Z6) == 1
        assert unity(ZERO2) is None
        assert unity(product_ring(Z2, Z2)) == 3  # the pair (1, 1)

    def test_one_sided_unities(self):
        from grl.rings import left_unity, right_unity, ring_from_ops
        # 2x2 matrices with zero bottom row over F2: (a,b)*(c,d) = (ac, ad);
        # (1,0) and (1,1) are left unities, and there is no right unity
        rows = ring_from_ops(
            [(0, 0), (0, 1), (1, 0), (1, 1)],
            lambda x, y: (x[0] ^ y[0], x[1] ^ y[1]),
            lambda x: x,
            lambda x, y: (x[0] & y[0], x[0] & y[1]))
        assert left_unity(rows) == 2  # (1, 0), the first hit
        assert right_unity(rows) is None
        assert unity(rows) is None
        assert left_unity(Z6) == right_unity(Z6) == 1

    def test_zero_ring_of_order_one_is_unital(self):
        one = cyclic_ring(1)
        assert unity(one) == 0

    def test_common_unit_z6(self):
        assert common_unit(Z6, [2, 3]) == 1

    def test_common_unit_unital_ring(self):
        u = unity(F4)
        for vs in ([1], [2, 3], [1, 2, 3]):
            got = common_unit(F4, vs)
            assert got is not None and all(F4.times(got, v) == v for v in vs)
        assert common_unit(ZERO2, [1]) is None


class TestIdeals:
    def test_additive_closure(self):
        assert additive_closure(Z4.additive, [2]).elements() == (0, 2)
        assert additive_closure(Z6.additive, [4]).elements() == (0, 2, 4)
        assert additive_closure(Z6.additive, []).elements() == (0,)

    def test_left_ideal(self):
        assert left_ideal(Z4, [2]).elements() == (0, 2)
        assert left_ideal(Z6, [2, 3]).elements() == (0, 1, 2, 3, 4, 5)
        assert left_ideal(Z6, [0]).elements() == (0,)

    def test_left_ideal_equals_closure_of_products_when_s_unital(self):
        for T in (Z2, Z4, Z6, F4, product_ring(Z2, Z2)):
            for c in T.elements():
                via_products = additive_closure(
                    T.additive, [T.times(t, c) for t in T.elements()])
                assert left_ideal(T, [c]).members == via_products.members

    def test_left_ideal_keeps_generator_without_units(self):
        # in the zero ring T*c = {0}, so the generator itself matters
        assert left_ideal(ZERO2, [1]).elements() == (0, 1)

    def test_right_ideal_matches_left_on_commutative(self):
        for c in Z6.elements():
            assert right_ideal(Z6, [c]).members == left_ideal(Z6, [c]).members

    def test_idempotent_generator_z6(self):
        I = additive_closure(Z6.additive, [2])
        assert idempotent_generator(Z6, I) == 4

    def test_idempotent_generator_missing(self):
        I = additive_closure(Z4.additive, [2])
        assert idempotent_generator(Z4, I) is None
        assert ring_idempotents(Z4) == (0, 1)

    def test_idempotent_generator_zero_ideal(self):
        I = Subgroup(ambient_order=Z6.order, members=frozenset({0}))
        assert idempotent_generator(Z6, I) == 0

    def test_not_an_ideal_raises(self):
        bad = Subgroup(ambient_order=Z4.order, members=frozenset({0, 1}))
        with pytest.raises(NotAnIdealError):
            idempotent_generator(Z4, bad)


class TestRegularity:
    def test_z6_regular_with_verified_witnesses(self):
        w = is_von_neumann_regular(Z6)
        assert w.holds
        for r, y in enumerate(w.quasi_inverses):
            assert Z6.times(Z6.times(r, y), r) == r

    def test_z4_failing_element(self):
        w = is_von_neumann_regular(Z4)
        assert not w.holds and w.failing == 2

    def test_fields_are_regular(self):
        assert is_von_neumann_regular(Z2).holds
        assert is_von_neumann_regular(F4).holds

    def test_regular_implies_s_unital(self, corpus):
        for entry in corpus.rings:
            T = entry.structure
            if is_von_neumann_regular(T).holds:
                assert is_s_unital(T)


class TestVnrCharacterization:
    @pytest.mark.parametrize("ring,expected", [
        (Z6, True), (Z4, False), (F4, True), (Z2, True),
        (product_ring(Z2, Z2), True), (cyclic_ring(8), False), (cyclic_ring(9), False),
    ])
    def test_three_way_agreement(self, ring, expected):
        rep = check_vnr_characterization(ring)
        assert rep["applicable"] and rep["agree"]
        assert rep["vnr"] is expected

    def test_z4_counterexample_ideal(self):
        rep = check_vnr_characterization(Z4)
        assert rep["vnr_failing"] == 2
        assert rep["principal_failing"]["ideal"] == [0, 2]

    def test_not_applicable_without_s_unitality(self):
        rep = check_vnr_characterization(EVEN8)
        assert not rep["applicable"]
        assert rep["left_failing"] is not None

    def test_right_side_on_noncommutative_ring(self):
        m = matrix_ring(Z2, 2)
        left = check_vnr_characterization(m, side="left")
        right = check_vnr_characterization(m, side="right")
        assert left["agree"] and right["agree"]
        assert left["vnr"] is True and right["vnr"] is True

    def test_opposite_ring_reverses_products(self):
        m = matrix_ring(Z2, 2)
        op = opposite_ring(m)
        assert all(op.times(a, b) == m.times(b, a)
                   for a in m.elements() for b in m.elements())


class TestTominaga:
    @pytest.mark.parametrize("ring", [Z2, Z4, Z6, F4, ZERO2, EVEN8,
                                      product_ring(Z2, Z2)])
    def test_equivalence(self, ring):
        rep = check_tominaga(ring)
        assert rep["agree"], rep

    @settings(max_examples=150, derandomize=True)
    @given(st.data())
    def test_random_subsets_have_common_units(self, data):
        T = data.draw(st.sampled_from([Z2, Z4, Z6, F4, cyclic_ring(8), cyclic_ring(9)]))
        size = data.draw(st.integers(1, 3))
        vs = data.draw(st.lists(st.integers(0, T.order - 1),
                                min_size=size, max_size=size))
        for side in ("left", "right"):
            u = common_unit(T, vs, side)
            assert u is not None
            for v in vs:
                assert (T.times(u, v) if side == "left" else T.times(v, u)) == v
