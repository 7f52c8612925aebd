"""Seeded random generators for typed combinators, relations, and sets.

Generators work forward from a required domain type and return the
expression together with its codomain type, so every generated tree is
type-correct by construction and the tests know both endpoints without
running inference.
"""

from __future__ import annotations

import random

from rpilang.pi import IsoName, IsoType, PiComb, Prim, ProdC, Seq, SumC
from rpilang.rel import (
    Arr,
    Eps,
    Eta,
    RelExpr,
    SeqR,
    Second,
    State,
    Strength,
    XorSet,
    curry,
    dot,
    first,
    outer,
    s2r,
)
from rpilang.types import (
    BOOL,
    ONE,
    ZERO,
    BaseType,
    PairV,
    Prod,
    SetT,
    Sum,
    cardinality,
    enumerate_values,
)

# Small SetT-free types for isomorphism endpoints.
PLAIN_TYPES = [
    ONE,
    BOOL,
    Sum(ONE, ONE),
    Sum(ONE, BOOL),
    Sum(BOOL, BOOL),
    Prod(BOOL, BOOL),
    Prod(BOOL, Sum(ONE, ONE)),
    Sum(ZERO, BOOL),
    Prod(ONE, BOOL),
    Sum(Sum(ONE, ONE), BOOL),
    Prod(BOOL, Prod(ONE, BOOL)),
]

# A few set-bearing types for relation endpoints.
SETTY_TYPES = PLAIN_TYPES + [SetT(BOOL), SetT(ONE), Prod(BOOL, SetT(BOOL))]


def random_plain_type(rng: random.Random, max_card: int = 8) -> BaseType:
    while True:
        t = rng.choice(PLAIN_TYPES)
        if cardinality(t) <= max_card:
            return t


def random_set(rng: random.Random, t: BaseType) -> XorSet:
    values = enumerate_values(t)
    return XorSet.of(t, [v for v in values if rng.random() < 0.5])


def random_comb_from(
    rng: random.Random, t: BaseType, depth: int
) -> tuple[PiComb, BaseType]:
    """A combinator whose left endpoint is exactly t, plus its right endpoint."""
    moves = [("id", t)]
    if depth > 0:
        moves += [("seq", None), ("uniti", Prod(ONE, t)), ("zeroi", Sum(ZERO, t))]
        if isinstance(t, Sum):
            moves.append(("swap_plus", Sum(t.right, t.left)))
            moves.append(("sumc", None))
            if isinstance(t.right, Sum):
                moves.append(
                    ("assocl_plus", Sum(Sum(t.left, t.right.left), t.right.right))
                )
            if isinstance(t.left, Sum):
                moves.append(
                    ("assocr_plus", Sum(t.left.left, Sum(t.left.right, t.right)))
                )
            if t.left == ZERO:
                moves.append(("zeroe", t.right))
            if (
                isinstance(t.left, Prod)
                and isinstance(t.right, Prod)
                and t.left.snd == t.right.snd
            ):
                moves.append(
                    ("factor", Prod(Sum(t.left.fst, t.right.fst), t.left.snd))
                )
        if isinstance(t, Prod):
            moves.append(("swap_times", Prod(t.snd, t.fst)))
            moves.append(("prodc", None))
            if isinstance(t.snd, Prod):
                moves.append(
                    ("assocl_times", Prod(Prod(t.fst, t.snd.fst), t.snd.snd))
                )
            if isinstance(t.fst, Prod):
                moves.append(
                    ("assocr_times", Prod(t.fst.fst, Prod(t.fst.snd, t.snd)))
                )
            if t.fst == ONE:
                moves.append(("unite", t.snd))
            if isinstance(t.fst, Sum):
                moves.append(
                    (
                        "distrib",
                        Sum(Prod(t.fst.left, t.snd), Prod(t.fst.right, t.snd)),
                    )
                )
            if t.fst == ZERO:
                moves.append(("distrib0", ZERO))
        if t == BOOL:
            moves.append(("bool2sum", Sum(ONE, ONE)))
        if t == Sum(ONE, ONE):
            moves.append(("sum2bool", BOOL))
        if t == ZERO:
            moves.append(("factor0", Prod(ZERO, random_plain_type(rng))))

    move, rhs = rng.choice(moves)
    if move == "seq":
        c1, mid = random_comb_from(rng, t, depth - 1)
        c2, out = random_comb_from(rng, mid, depth - 1)
        return Seq(c1, c2), out
    if move == "sumc":
        c1, r1 = random_comb_from(rng, t.left, depth - 1)
        c2, r2 = random_comb_from(rng, t.right, depth - 1)
        return SumC(c1, c2), Sum(r1, r2)
    if move == "prodc":
        c1, r1 = random_comb_from(rng, t.fst, depth - 1)
        c2, r2 = random_comb_from(rng, t.snd, depth - 1)
        return ProdC(c1, c2), Prod(r1, r2)
    return Prim(IsoName(move)), rhs


def _has_set(t: BaseType) -> bool:
    if isinstance(t, SetT):
        return True
    if isinstance(t, Sum):
        return _has_set(t.left) or _has_set(t.right)
    if isinstance(t, Prod):
        return _has_set(t.fst) or _has_set(t.snd)
    return False


def random_rel_from(
    rng: random.Random, t: BaseType, depth: int, max_card: int = 32
) -> tuple[RelExpr, BaseType]:
    """A relation whose domain is exactly t, plus its codomain.

    Every generated Arr carries its full annotation, so the whole tree
    types to ground endpoints no matter how it is embedded.  ``max_card``
    bounds the cardinality of every intermediate type, keeping the
    evaluator and the matrix oracle fast.
    """
    moves: list[str] = []
    plain = not _has_set(t)
    if plain:
        moves.append("arr")
    if depth > 0:
        moves.append("seqr")
        if plain:
            moves.append("s2r")
            if cardinality(t) * 2 <= max_card:
                moves.append("curry")
        if isinstance(t, Prod):
            moves.append("second")
            if plain:  # first expands through arr swap_times, a plain iso
                moves.append("first")
            if isinstance(t.snd, SetT):
                moves.append("strength")
            if t.fst == t.snd:
                moves.append("eps")
        if t == ONE:
            moves += ["state", "eta", "dot"]
        moves.append("outer")
    if not moves:
        moves = ["outer"]

    move = rng.choice(moves)
    if move == "arr":
        c, rhs = random_comb_from(rng, t, min(depth, 3))
        return Arr(c, IsoType(t, rhs)), rhs
    if move == "seqr":
        r1, mid = random_rel_from(rng, t, depth - 1, max_card)
        r2, out = random_rel_from(rng, mid, depth - 1, max_card)
        return SeqR(r1, r2), out
    if move == "second":
        budget = max(1, max_card // max(1, cardinality(t.fst)))
        inner, out = random_rel_from(rng, t.snd, depth - 1, budget)
        pin = t.fst if rng.random() < 0.5 else None
        return Second(inner, pin), Prod(t.fst, out)
    if move == "first":
        budget = max(1, max_card // max(1, cardinality(t.snd)))
        inner, out = random_rel_from(rng, t.fst, depth - 1, budget)
        return first(inner), Prod(out, t.snd)
    if move == "strength":
        pinned = rng.random() < 0.5
        return (
            Strength(t.fst, t.snd.elem) if pinned else Strength(),
            Prod(t.fst, t.snd.elem),
        )
    if move == "eps":
        return Eps(t.fst if rng.random() < 0.5 else None), ONE
    if move == "state":
        b = rng.choice([b for b in SETTY_TYPES if cardinality(b) <= 8])
        return State(random_set(rng, b)), b
    if move == "eta":
        b = random_plain_type(rng, max_card=4)
        return Eta(b), Prod(b, b)
    if move == "dot":
        b = random_plain_type(rng, max_card=8)
        return dot(random_set(rng, b), random_set(rng, b)), ONE
    if move == "s2r":
        b = random_plain_type(rng, max_card=4)
        pairs = random_set(rng, Prod(t, b))
        return s2r(pairs), b
    if move == "curry":
        a = ONE if cardinality(t) * 2 > max_card else random_plain_type(rng, 2)
        budget = max(1, max_card // max(1, cardinality(a)))
        inner, out = random_rel_from(rng, Prod(t, a), depth - 1, budget)
        return curry(inner, arg=a), Prod(a, out)
    if move == "outer":
        return outer(random_set(rng, t), random_set(rng, t)), t
    raise AssertionError(move)
