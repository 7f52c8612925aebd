"""Dual bases, measurement outcomes, and the invertibility gate."""

import random

import pytest

from rpilang.errors import (
    DimensionMismatch,
    NoOutcome,
    TypeMismatch,
    ZeroVector,
)
from rpilang.gf2 import rank, vec_of_set
from rpilang.measure import (
    DualBasis,
    X_BASIS,
    X_DUAL,
    Y_BASIS,
    Z_BASIS,
    check_dual,
    dual_basis_for,
    measure,
    require_invertible,
)
from rpilang.pi import IsoName, IsoType, Prim, seq_chain
from rpilang.rel import Arr, SeqR, XorSet, first, s2r, apply_rel_set
from rpilang.types import BOOL, BoolV, FALSE, PairV, Prod, TRUE, cardinality

BB = Prod(BOOL, BOOL)


def bools(*bits):
    return XorSet.of(BOOL, [TRUE if b else FALSE for b in bits])


def pairs(*ps):
    return XorSet.of(BB, [PairV(BoolV(a), BoolV(b)) for a, b in ps])


SHARED = pairs((False, False), (True, True))
NEG = Arr(seq_chain(Prim(IsoName.BOOL2SUM), Prim(IsoName.SWAP_PLUS), Prim(IsoName.SUM2BOOL)))
K = s2r(pairs((False, False), (True, False), (True, True)))
ALICES = [Arr(Prim(IsoName.ID), IsoType(BOOL, BOOL)), NEG, K, SeqR(NEG, K)]
DUALS = DualBasis(
    (
        pairs((False, True), (True, False), (True, True)),
        pairs((False, False), (True, False), (True, True)),
        pairs((False, True), (True, False)),
        pairs((False, False), (True, True)),
    )
)


class TestCheckDual:
    def test_x_basis_against_its_dual(self):
        assert check_dual(X_BASIS, X_DUAL.duals)

    def test_z_basis_is_self_dual(self):
        assert check_dual(Z_BASIS, Z_BASIS)

    def test_x_basis_against_z_basis_fails(self):
        assert not check_dual(X_BASIS, Z_BASIS)

    def test_length_mismatch(self):
        with pytest.raises(TypeMismatch):
            check_dual(X_BASIS, (bools(True),))

    def test_duals_imply_full_rank(self):
        for basis in (X_BASIS, Y_BASIS, Z_BASIS):
            duals = dual_basis_for(basis).duals
            bits = [vec_of_set(d).bits for d in duals]
            assert rank(bits, cardinality(BOOL)) == len(duals)


class TestComputedDuals:
    def test_x_dual_matches_the_printed_one(self):
        assert dual_basis_for(X_BASIS).duals == X_DUAL.duals

    def test_y_dual_exists_and_is_unique(self):
        assert dual_basis_for(Y_BASIS).duals == (bools(True), bools(False, True))

    def test_z_dual_exists_and_is_unique(self):
        assert dual_basis_for(Z_BASIS).duals == Z_BASIS

    def test_non_basis_has_no_dual(self):
        with pytest.raises(TypeMismatch):
            dual_basis_for((bools(True), bools(True)))


class TestMeasure:
    def test_deterministic_first_dual(self):
        out = measure(bools(True), X_DUAL, seed=123)
        assert (out.index, out.deterministic) == (0, True)
        assert out.dual == bools(False, True)

    def test_basis_state_in_its_own_dual(self):
        out = measure(bools(False), DualBasis(Z_BASIS))
        assert (out.index, out.deterministic) == (0, True)

    def test_zero_vector_is_rejected(self):
        with pytest.raises(ZeroVector):
            measure(XorSet.empty(BOOL), DualBasis(Z_BASIS))

    def test_no_outcome(self):
        # a dual family that does not span the space can miss a state:
        # {F} has even overlap with the single dual {T}
        duals = DualBasis((bools(True),))
        with pytest.raises(NoOutcome):
            measure(bools(False), duals)

    def test_random_choice_is_seeded(self):
        # {F,T} matches both Z duals, so the choice falls to the seed
        duals = DualBasis(Z_BASIS)
        outs = {measure(bools(False, True), duals, seed=s).index for s in range(32)}
        assert outs == {0, 1}
        fixed = [measure(bools(False, True), duals, seed=9).index for _ in range(5)]
        assert len(set(fixed)) == 1
        assert not measure(bools(False, True), duals, seed=9).deterministic

    def test_outcome_always_has_odd_overlap(self):
        rng = random.Random(77)
        for _ in range(200):
            s = bools(*(rng.random() < 0.5 for _ in range(2)))
            if len(s) == 0:
                continue
            out = measure(s, DualBasis(Z_BASIS), seed=rng.getrandbits(32))
            assert len([v for v in out.dual if v in s]) % 2 == 1


class TestSuperdense:
    def test_decoding_is_deterministic_for_every_message_and_seed(self):
        rng = random.Random(0xC0FFEE)
        seeds = [rng.getrandbits(64) for _ in range(100)]
        for n, alice in enumerate(ALICES):
            state = apply_rel_set(first(alice), SHARED)
            for seed in seeds:
                out = measure(state, DUALS, seed=seed)
                assert (out.index, out.deterministic) == (n, True)


class TestInvertibilityGate:
    def test_lifted_combinators_pass(self):
        assert require_invertible(Arr(Prim(IsoName.ID), IsoType(BB, BB)))

    def test_the_dense_encoder_passes(self):
        assert require_invertible(K)

    def test_the_all_true_matrix_fails(self):
        full = s2r(
            pairs((False, False), (False, True), (True, False), (True, True))
        )
        assert not require_invertible(full)

    def test_non_square_is_an_error(self):
        from rpilang.rel import Eta

        with pytest.raises(DimensionMismatch):
            require_invertible(Eta(BOOL))
