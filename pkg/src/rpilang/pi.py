"""The reversible combinator language: syntax, typing, evaluation, adjoints.

Programs are type isomorphisms between finite types.  Seventeen primitives
witness the standard sum/product isomorphisms; three combinators compose
them sequentially, by sum, and by product.  Every well-typed program is a
bijection between the value sets of its endpoint types and has a
structurally-computed adjoint that runs it backwards.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import AmbiguousType, IllTypedValue, TypeMismatch
from .types import (
    BOOL,
    FALSE,
    ONE,
    TRUE,
    UNIT,
    BaseType,
    BoolV,
    Left,
    One,
    PairV,
    PiValue,
    Prod,
    Right,
    Sum,
    UnitV,
    ZERO,
)
from .unify import TVar, contains_set_or_rel, is_ground, resolve, unify


class IsoName(enum.Enum):
    ID = "id"
    ZEROE = "zeroe"
    ZEROI = "zeroi"
    SWAP_PLUS = "swap_plus"
    ASSOCL_PLUS = "assocl_plus"
    ASSOCR_PLUS = "assocr_plus"
    UNITE = "unite"
    UNITI = "uniti"
    SWAP_TIMES = "swap_times"
    ASSOCL_TIMES = "assocl_times"
    ASSOCR_TIMES = "assocr_times"
    DISTRIB0 = "distrib0"
    FACTOR0 = "factor0"
    DISTRIB = "distrib"
    FACTOR = "factor"
    BOOL2SUM = "bool2sum"
    SUM2BOOL = "sum2bool"

    def __repr__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Prim:
    name: IsoName


@dataclass(frozen=True)
class Seq:
    fst: "PiComb"
    snd: "PiComb"


@dataclass(frozen=True)
class SumC:
    left: "PiComb"
    right: "PiComb"


@dataclass(frozen=True)
class ProdC:
    fst: "PiComb"
    snd: "PiComb"


PiComb = Union[Prim, Seq, SumC, ProdC]


@dataclass(frozen=True)
class IsoType:
    lhs: BaseType
    rhs: BaseType

    def __repr__(self) -> str:
        return f"{self.lhs!r} <-> {self.rhs!r}"


# Adjoint partner of each primitive; the three self-dual ones map to
# themselves.
_DUAL = {
    IsoName.ID: IsoName.ID,
    IsoName.ZEROE: IsoName.ZEROI,
    IsoName.ZEROI: IsoName.ZEROE,
    IsoName.SWAP_PLUS: IsoName.SWAP_PLUS,
    IsoName.ASSOCL_PLUS: IsoName.ASSOCR_PLUS,
    IsoName.ASSOCR_PLUS: IsoName.ASSOCL_PLUS,
    IsoName.UNITE: IsoName.UNITI,
    IsoName.UNITI: IsoName.UNITE,
    IsoName.SWAP_TIMES: IsoName.SWAP_TIMES,
    IsoName.ASSOCL_TIMES: IsoName.ASSOCR_TIMES,
    IsoName.ASSOCR_TIMES: IsoName.ASSOCL_TIMES,
    IsoName.DISTRIB0: IsoName.FACTOR0,
    IsoName.FACTOR0: IsoName.DISTRIB0,
    IsoName.DISTRIB: IsoName.FACTOR,
    IsoName.FACTOR: IsoName.DISTRIB,
    IsoName.BOOL2SUM: IsoName.SUM2BOOL,
    IsoName.SUM2BOOL: IsoName.BOOL2SUM,
}


def prim_scheme(name: IsoName) -> IsoType:
    """The type scheme of a primitive, with fresh variables per call."""
    a, b, c = TVar(), TVar(), TVar()
    if name is IsoName.ID:
        return IsoType(a, a)
    if name is IsoName.ZEROE:
        return IsoType(Sum(ZERO, a), a)
    if name is IsoName.ZEROI:
        return IsoType(a, Sum(ZERO, a))
    if name is IsoName.SWAP_PLUS:
        return IsoType(Sum(a, b), Sum(b, a))
    if name is IsoName.ASSOCL_PLUS:
        return IsoType(Sum(a, Sum(b, c)), Sum(Sum(a, b), c))
    if name is IsoName.ASSOCR_PLUS:
        return IsoType(Sum(Sum(a, b), c), Sum(a, Sum(b, c)))
    if name is IsoName.UNITE:
        return IsoType(Prod(ONE, a), a)
    if name is IsoName.UNITI:
        return IsoType(a, Prod(ONE, a))
    if name is IsoName.SWAP_TIMES:
        return IsoType(Prod(a, b), Prod(b, a))
    if name is IsoName.ASSOCL_TIMES:
        return IsoType(Prod(a, Prod(b, c)), Prod(Prod(a, b), c))
    if name is IsoName.ASSOCR_TIMES:
        return IsoType(Prod(Prod(a, b), c), Prod(a, Prod(b, c)))
    if name is IsoName.DISTRIB0:
        return IsoType(Prod(ZERO, a), ZERO)
    if name is IsoName.FACTOR0:
        return IsoType(ZERO, Prod(ZERO, a))
    if name is IsoName.DISTRIB:
        return IsoType(Prod(Sum(a, b), c), Sum(Prod(a, c), Prod(b, c)))
    if name is IsoName.FACTOR:
        return IsoType(Sum(Prod(a, c), Prod(b, c)), Prod(Sum(a, b), c))
    if name is IsoName.BOOL2SUM:
        return IsoType(BOOL, Sum(ONE, ONE))
    if name is IsoName.SUM2BOOL:
        return IsoType(Sum(ONE, ONE), BOOL)
    raise AssertionError(name)


def comb_constraints(c: PiComb, subst: dict) -> IsoType:
    """Collect typing constraints; the result may still contain variables."""
    if isinstance(c, Prim):
        return prim_scheme(c.name)
    if isinstance(c, Seq):
        t1 = comb_constraints(c.fst, subst)
        t2 = comb_constraints(c.snd, subst)
        unify(t1.rhs, t2.lhs, subst)
        return IsoType(t1.lhs, t2.rhs)
    if isinstance(c, SumC):
        t1 = comb_constraints(c.left, subst)
        t2 = comb_constraints(c.right, subst)
        return IsoType(Sum(t1.lhs, t2.lhs), Sum(t1.rhs, t2.rhs))
    if isinstance(c, ProdC):
        t1 = comb_constraints(c.fst, subst)
        t2 = comb_constraints(c.snd, subst)
        return IsoType(Prod(t1.lhs, t2.lhs), Prod(t1.rhs, t2.rhs))
    raise TypeMismatch(f"not a combinator: {c!r}")


def infer_comb_type(c: PiComb, annotation: Optional[IsoType] = None) -> IsoType:
    """Most general ground type of c, using the annotation to pin variables.

    Raises AmbiguousType when a variable survives at the top level and
    TypeMismatch when the composition rules cannot be satisfied (or a
    set/relation type sneaks into an isomorphism type).
    """
    subst: dict = {}
    t = comb_constraints(c, subst)
    if annotation is not None:
        unify(t.lhs, annotation.lhs, subst)
        unify(t.rhs, annotation.rhs, subst)
    lhs = resolve(t.lhs, subst)
    rhs = resolve(t.rhs, subst)
    for side in (lhs, rhs):
        if contains_set_or_rel(side):
            raise TypeMismatch(
                f"set/relation types cannot appear in an isomorphism type: {side!r}"
            )
    if not (is_ground(lhs) and is_ground(rhs)):
        raise AmbiguousType(
            f"combinator type {lhs!r} <-> {rhs!r} is not ground; add an annotation"
        )
    return IsoType(lhs, rhs)


def _ill(name: IsoName, v: PiValue) -> IllTypedValue:
    return IllTypedValue(f"{name.value} cannot consume {v!r}")


def eval_prim(name: IsoName, v: PiValue) -> PiValue:
    # One clause per transition rule, in table order.
    if name is IsoName.ID:
        return v
    if name is IsoName.ZEROE:
        if isinstance(v, Right):
            return v.value
        raise _ill(name, v)  # Left of an empty type cannot exist
    if name is IsoName.ZEROI:
        return Right(v)
    if name is IsoName.SWAP_PLUS:
        if isinstance(v, Left):
            return Right(v.value)
        if isinstance(v, Right):
            return Left(v.value)
        raise _ill(name, v)
    if name is IsoName.ASSOCL_PLUS:
        if isinstance(v, Left):
            return Left(Left(v.value))
        if isinstance(v, Right) and isinstance(v.value, Left):
            return Left(Right(v.value.value))
        if isinstance(v, Right) and isinstance(v.value, Right):
            return Right(v.value.value)
        raise _ill(name, v)
    if name is IsoName.ASSOCR_PLUS:
        if isinstance(v, Left) and isinstance(v.value, Left):
            return Left(v.value.value)
        if isinstance(v, Left) and isinstance(v.value, Right):
            return Right(Left(v.value.value))
        if isinstance(v, Right):
            return Right(Right(v.value))
        raise _ill(name, v)
    if name is IsoName.UNITE:
        if isinstance(v, PairV) and isinstance(v.fst, UnitV):
            return v.snd
        raise _ill(name, v)
    if name is IsoName.UNITI:
        return PairV(UNIT, v)
    if name is IsoName.SWAP_TIMES:
        if isinstance(v, PairV):
            return PairV(v.snd, v.fst)
        raise _ill(name, v)
    if name is IsoName.ASSOCL_TIMES:
        if isinstance(v, PairV) and isinstance(v.snd, PairV):
            return PairV(PairV(v.fst, v.snd.fst), v.snd.snd)
        raise _ill(name, v)
    if name is IsoName.ASSOCR_TIMES:
        if isinstance(v, PairV) and isinstance(v.fst, PairV):
            return PairV(v.fst.fst, PairV(v.fst.snd, v.snd))
        raise _ill(name, v)
    if name in (IsoName.DISTRIB0, IsoName.FACTOR0):
        # No value inhabits 0 or 0*b, so reaching here is always a type error.
        raise _ill(name, v)
    if name is IsoName.DISTRIB:
        if isinstance(v, PairV) and isinstance(v.fst, Left):
            return Left(PairV(v.fst.value, v.snd))
        if isinstance(v, PairV) and isinstance(v.fst, Right):
            return Right(PairV(v.fst.value, v.snd))
        raise _ill(name, v)
    if name is IsoName.FACTOR:
        if isinstance(v, Left) and isinstance(v.value, PairV):
            return PairV(Left(v.value.fst), v.value.snd)
        if isinstance(v, Right) and isinstance(v.value, PairV):
            return PairV(Right(v.value.fst), v.value.snd)
        raise _ill(name, v)
    if name is IsoName.BOOL2SUM:
        if v == TRUE:
            return Left(UNIT)
        if v == FALSE:
            return Right(UNIT)
        raise _ill(name, v)
    if name is IsoName.SUM2BOOL:
        if v == Left(UNIT):
            return TRUE
        if v == Right(UNIT):
            return FALSE
        raise _ill(name, v)
    raise AssertionError(name)


def eval_comb(c: PiComb, v: PiValue) -> PiValue:
    """Run a combinator forward on one value."""
    if isinstance(c, Prim):
        return eval_prim(c.name, v)
    if isinstance(c, Seq):
        return eval_comb(c.snd, eval_comb(c.fst, v))
    if isinstance(c, SumC):
        if isinstance(v, Left):
            return Left(eval_comb(c.left, v.value))
        if isinstance(v, Right):
            return Right(eval_comb(c.right, v.value))
        raise IllTypedValue(f"sum combinator cannot consume {v!r}")
    if isinstance(c, ProdC):
        if isinstance(v, PairV):
            return PairV(eval_comb(c.fst, v.fst), eval_comb(c.snd, v.snd))
        raise IllTypedValue(f"product combinator cannot consume {v!r}")
    raise IllTypedValue(f"not a combinator: {c!r}")


def adjoint_comb(c: PiComb) -> PiComb:
    """The structural dual: runs c backwards.  An involution."""
    if isinstance(c, Prim):
        return Prim(_DUAL[c.name])
    if isinstance(c, Seq):
        return Seq(adjoint_comb(c.snd), adjoint_comb(c.fst))
    if isinstance(c, SumC):
        return SumC(adjoint_comb(c.left), adjoint_comb(c.right))
    if isinstance(c, ProdC):
        return ProdC(adjoint_comb(c.fst), adjoint_comb(c.snd))
    raise IllTypedValue(f"not a combinator: {c!r}")


def seq_chain(*cs: PiComb) -> PiComb:
    """Right-nested sequential composition of one or more combinators."""
    if not cs:
        raise ValueError("empty composition")
    result = cs[-1]
    for c in reversed(cs[:-1]):
        result = Seq(c, result)
    return result
