"""Bit matrices, determinants, denotation, and evaluator/matrix agreement."""

import itertools
import random

import pytest

from gen import SETTY_TYPES, random_comb_from, random_rel_from, random_set
from rpilang.errors import DimensionMismatch
from rpilang.gf2 import (
    Gf2Mat,
    Gf2Vec,
    denote_rel,
    determinant,
    identity,
    is_invertible,
    kron,
    mat_apply,
    mat_mul,
    mat_str,
    set_of_vec,
    soundness_check,
    transpose,
    vec_of_set,
    vec_str,
)
from rpilang.pi import IsoName, IsoType, Prim
from rpilang.rel import (
    Arr,
    Eps,
    Eta,
    SeqR,
    Second,
    State,
    Strength,
    XorSet,
    adjoint_rel,
    s2r,
    xor_union,
)
from rpilang.types import (
    BOOL,
    FALSE,
    ONE,
    TRUE,
    BoolV,
    PairV,
    Prod,
    SetT,
    Sum,
    cardinality,
    enumerate_values,
)

BB = Prod(BOOL, BOOL)


def bools(*bits):
    return XorSet.of(BOOL, [TRUE if b else FALSE for b in bits])


def pairs(*ps):
    return XorSet.of(BB, [PairV(BoolV(a), BoolV(b)) for a, b in ps])


def type_of_card(n):
    """A sum of units with exactly n values."""
    t = ONE
    for _ in range(n - 1):
        t = Sum(ONE, t)
    return t


def random_square(rng, n):
    t = type_of_card(n)
    return Gf2Mat(t, t, tuple(rng.getrandbits(n) for _ in range(n)))


R1 = s2r(pairs((False, False), (True, False), (True, True)))
R2 = s2r(pairs((False, False), (False, True), (True, False)))


class TestVectors:
    def test_entangled_pair_vector(self):
        assert vec_str(vec_of_set(pairs((False, False), (True, True)))) == "T F F T"

    def test_zero_vector(self):
        v = vec_of_set(XorSet.empty(BB))
        assert v.bits == 0 and vec_str(v) == "F F F F"

    def test_uniform_superposition(self):
        assert vec_str(vec_of_set(bools(False, True))) == "T T"

    def test_round_trip(self):
        rng = random.Random(5)
        for t in SETTY_TYPES:
            if cardinality(t) > 16:
                continue
            for _ in range(20):
                s = random_set(rng, t)
                assert set_of_vec(vec_of_set(s)) == s
        for bits in range(16):
            v = Gf2Vec(BB, bits)
            assert vec_of_set(set_of_vec(v)) == v


class TestMatrixOps:
    def test_worked_product(self):
        m1 = denote_rel(R1)
        m2 = denote_rel(R2)
        assert mat_str(m1) == "T T\nF T"
        assert mat_str(m2) == "T T\nT F"
        assert mat_str(mat_mul(m2, m1)) == "T F\nT T"

    def test_identity_is_neutral(self):
        m = denote_rel(R1)
        assert mat_mul(identity(BOOL), m) == m
        assert mat_mul(m, identity(BOOL)) == m

    def test_kron_matches_second(self):
        got = denote_rel(Second(R2, BOOL))
        assert got == kron(identity(BOOL), denote_rel(R2))

    def test_apply_is_column_selection(self):
        m = denote_rel(R2)
        for j, v in enumerate(enumerate_values(BOOL)):
            col = mat_apply(m, Gf2Vec(BOOL, 1 << j))
            assert col.bits == sum(
                1 << i for i in range(m.n_rows) if m.entry(i, j)
            )

    def test_dimension_errors(self):
        with pytest.raises(DimensionMismatch):
            mat_mul(denote_rel(R1), denote_rel(Eta(BOOL)))
        with pytest.raises(DimensionMismatch):
            mat_apply(denote_rel(R1), vec_of_set(XorSet.empty(BB)))
        with pytest.raises(DimensionMismatch):
            determinant(denote_rel(Eta(BOOL)))

    def test_transpose(self):
        m = denote_rel(Eta(BOOL))
        assert mat_str(transpose(m)) == "T F F T"
        rng = random.Random(17)
        for _ in range(50):
            m = random_square(rng, rng.randrange(1, 9))
            assert transpose(transpose(m)) == m


class TestDeterminant:
    def test_all_true_matrix_is_singular(self):
        h = Gf2Mat(BOOL, BOOL, (0b11, 0b11))
        assert determinant(h) is False
        assert not is_invertible(h)
        # squaring it wipes every entry out
        assert mat_mul(h, h).rows == (0, 0)

    def test_identity(self):
        assert determinant(identity(BB)) is True

    def test_exactly_six_invertible_two_by_two(self):
        invertible = [
            rows
            for rows in itertools.product(range(4), repeat=2)
            if determinant(Gf2Mat(BOOL, BOOL, rows))
        ]
        assert len(invertible) == 6

    def test_multiplicative(self):
        rng = random.Random(23)
        for _ in range(220):
            n = rng.randrange(1, 17)
            a, b = random_square(rng, n), random_square(rng, n)
            assert determinant(mat_mul(a, b)) == (determinant(a) and determinant(b))

    def test_permutation_matrices_are_invertible(self):
        from gen import PLAIN_TYPES

        rng = random.Random(29)
        for _ in range(100):
            t = rng.choice(PLAIN_TYPES)
            c, rhs = random_comb_from(rng, t, depth=4)
            assert is_invertible(denote_rel(Arr(c, IsoType(t, rhs))))


class TestDenotation:
    def test_eps_row(self):
        assert mat_str(denote_rel(Eps(BOOL))) == "T F F T"

    def test_eta_column(self):
        assert mat_str(denote_rel(Eta(BOOL))) == "T\nF\nF\nT"

    def test_strength_block(self):
        want = (
            "F T F T F F F F\n"
            "F F T T F F F F\n"
            "F F F F F T F T\n"
            "F F F F F F T T"
        )
        assert mat_str(denote_rel(Strength(BOOL, BOOL))) == want

    def test_arr_identity(self):
        assert denote_rel(Arr(Prim(IsoName.ID), IsoType(BOOL, BOOL))) == identity(BOOL)

    def test_state_is_a_column(self):
        m = denote_rel(State(bools(False, True)))
        assert (m.n_rows, m.n_cols) == (2, 1)
        assert mat_str(m) == "T\nT"

    def test_composite_matrix_and_relation(self):
        m = denote_rel(SeqR(R1, R2))
        assert mat_str(m) == "T F\nT T"
        rel = {
            (j, i)
            for j in range(m.n_cols)
            for i in range(m.n_rows)
            if m.entry(i, j)
        }
        # column/row indices 0,1 stand for F,T
        assert rel == {(0, 0), (0, 1), (1, 1)}


class TestSoundness:
    def test_worked_example(self):
        from rpilang.rel import apply_rel_set

        r = SeqR(R1, R2)
        s = bools(True)
        assert soundness_check(r, s)
        assert apply_rel_set(r, s) == bools(True)

    def test_empty_input(self):
        assert soundness_check(SeqR(R1, R2), XorSet.empty(BOOL))

    def test_randomized_agreement(self):
        rng = random.Random(37)
        cases = 0
        while cases < 1000:
            t = rng.choice([t for t in SETTY_TYPES if cardinality(t) <= 8])
            r, _ = random_rel_from(rng, t, depth=4)
            assert soundness_check(r, random_set(rng, t))
            cases += 1

    def test_functoriality_of_denotation(self):
        rng = random.Random(43)
        for _ in range(200):
            t = rng.choice([t for t in SETTY_TYPES if cardinality(t) <= 8])
            a, mid = random_rel_from(rng, t, depth=3)
            b, _ = random_rel_from(rng, mid, depth=3)
            assert denote_rel(SeqR(a, b), dom=t) == mat_mul(
                denote_rel(b, dom=mid), denote_rel(a, dom=t)
            )


class TestAdjoint:
    def test_transpose_law_and_involution(self):
        rng = random.Random(47)
        checked = 0
        while checked < 200:
            t = rng.choice(
                [t for t in SETTY_TYPES if 0 < cardinality(t) <= 4]
            )
            r, cod = random_rel_from(rng, t, depth=3, max_card=8)
            m = denote_rel(r, dom=t, cod=cod)
            back = adjoint_rel(r, dom=t)
            assert denote_rel(back, dom=cod, cod=t) == transpose(m)
            twice = adjoint_rel(back, dom=cod)
            assert denote_rel(twice, dom=t, cod=cod) == m
            checked += 1

    @pytest.mark.parametrize(
        "t", [ONE, BOOL, Sum(ONE, BOOL), BB], ids=["1", "bool", "1+bool", "bool*bool"]
    )
    def test_snake_composite_is_the_identity(self, t):
        wire = Arr(Prim(IsoName.ID), IsoType(t, t))
        assert denote_rel(adjoint_rel(wire)) == identity(t)


class TestCounting:
    def test_three_nonzero_one_qubit_vectors(self):
        nonzero = [v for v in enumerate_values(SetT(BOOL)) if len(v.elems) > 0]
        assert len(nonzero) == 3
        sets = [v.elems for v in nonzero]
        for s1, s2 in itertools.combinations(sets, 2):
            third = xor_union(s1, s2)
            assert third in sets and third not in (s1, s2)
