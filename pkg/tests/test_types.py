"""Enumeration order, cardinality, and canonical set behaviour."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpilang.errors import IllTypedValue, NotEnumerable, TypeMismatch
from rpilang.types import (
    BOOL,
    FALSE,
    ONE,
    TRUE,
    UNIT,
    ZERO,
    Left,
    PairV,
    Prod,
    RelT,
    Right,
    SetT,
    SetV,
    Sum,
    XorSet,
    cardinality,
    enumerate_values,
    value_at,
    value_index,
    value_inhabits,
    xor_union,
)

BB = Prod(BOOL, BOOL)


def bools(*bits):
    return XorSet.of(BOOL, [TRUE if b else FALSE for b in bits])


class TestCardinality:
    @pytest.mark.parametrize(
        "t,n",
        [
            (ZERO, 0),
            (ONE, 1),
            (BOOL, 2),
            (Sum(ONE, BOOL), 3),
            (Prod(BOOL, BOOL), 4),
            (SetT(BOOL), 4),
            (SetT(Prod(BOOL, BOOL)), 16),
            (Sum(ZERO, ZERO), 0),
        ],
    )
    def test_values(self, t, n):
        assert cardinality(t) == n

    def test_relation_types_are_not_enumerable(self):
        with pytest.raises(NotEnumerable):
            cardinality(RelT(BOOL, BOOL))
        with pytest.raises(NotEnumerable):
            enumerate_values(Prod(BOOL, RelT(ONE, ONE)))


class TestEnumeration:
    def test_bool_order(self):
        assert enumerate_values(BOOL) == (FALSE, TRUE)

    def test_zero_is_empty(self):
        assert enumerate_values(ZERO) == ()

    def test_set_bool_is_a_binary_counter(self):
        got = enumerate_values(SetT(BOOL))
        want = (
            SetV(bools()),
            SetV(bools(False)),
            SetV(bools(True)),
            SetV(bools(False, True)),
        )
        assert got == want

    def test_left_values_precede_right_values(self):
        got = enumerate_values(Sum(BOOL, ONE))
        assert got == (Left(FALSE), Left(TRUE), Right(UNIT))

    def test_pairs_are_lexicographic_first_major(self):
        got = enumerate_values(Prod(BOOL, Sum(ONE, ONE)))
        # independent oracle: the product of the component enumerations
        want = tuple(
            PairV(a, b)
            for a, b in itertools.product(
                enumerate_values(BOOL), enumerate_values(Sum(ONE, ONE))
            )
        )
        assert got == want

    def test_subsets_match_bitmask_oracle(self):
        base = enumerate_values(BOOL)
        got = enumerate_values(SetT(BOOL))
        for i, sv in enumerate(got):
            members = {base[j] for j in range(len(base)) if (i >> j) & 1}
            assert set(sv.elems.elems) == members

    @pytest.mark.parametrize(
        "t",
        [ONE, BOOL, Sum(ONE, BOOL), Prod(BOOL, BOOL), SetT(BOOL), SetT(SetT(ONE))],
    )
    def test_index_inverts_enumeration(self, t):
        values = enumerate_values(t)
        assert len(values) == cardinality(t)
        assert len(set(values)) == len(values)
        for i, v in enumerate(values):
            assert value_index(t, v) == i
            assert value_at(t, i) == v
            assert value_inhabits(v, t)

    def test_index_rejects_foreign_values(self):
        with pytest.raises(IllTypedValue):
            value_index(BOOL, UNIT)


class TestXorSet:
    def test_examples(self):
        assert xor_union(bools(True), bools(False, True)) == bools(False)
        s = bools(True)
        assert xor_union(s, XorSet.empty(BOOL)) == s
        assert xor_union(bools(False), bools(False)) == XorSet.empty(BOOL)

    def test_literal_parity(self):
        assert XorSet.of(BOOL, [FALSE, FALSE]) == XorSet.empty(BOOL)
        assert XorSet.of(BOOL, [TRUE, FALSE, TRUE, TRUE]) == bools(False, True)

    def test_type_mismatch(self):
        with pytest.raises(TypeMismatch):
            xor_union(bools(True), XorSet.of(ONE, [UNIT]))

    def test_rejects_ill_typed_elements(self):
        with pytest.raises(IllTypedValue):
            XorSet.of(BOOL, [UNIT])

    def test_rejects_relation_element_types(self):
        with pytest.raises(NotEnumerable):
            XorSet.empty(RelT(BOOL, BOOL))

    def test_canonical_form_is_sorted_and_unique(self):
        s = XorSet.of(BB, [PairV(TRUE, TRUE), PairV(FALSE, FALSE)])
        assert s.elems == (PairV(FALSE, FALSE), PairV(TRUE, TRUE))
        with pytest.raises(IllTypedValue):
            XorSet(BOOL, (TRUE, FALSE))  # unsorted raw construction

    @given(st.lists(st.booleans()), st.lists(st.booleans()))
    def test_union_commutes(self, xs, ys):
        s1, s2 = bools(*xs), bools(*ys)
        assert xor_union(s1, s2) == xor_union(s2, s1)

    @given(st.lists(st.booleans()), st.lists(st.booleans()), st.lists(st.booleans()))
    def test_union_associates(self, xs, ys, zs):
        s1, s2, s3 = bools(*xs), bools(*ys), bools(*zs)
        assert xor_union(xor_union(s1, s2), s3) == xor_union(s1, xor_union(s2, s3))

    @given(st.lists(st.booleans()))
    def test_union_self_inverse(self, xs):
        s = bools(*xs)
        assert xor_union(s, s) == XorSet.empty(BOOL)

    def test_sets_of_sets(self):
        inner = SetV(bools(True))
        s = XorSet.of(SetT(BOOL), [inner, SetV(bools()), inner])
        assert s == XorSet.of(SetT(BOOL), [SetV(bools())])
