"""The relational layer: arrow-style relation expressions over finite sets.

A relation maps sets to sets and is linear over exclusive union, which is
where all the interference in this model comes from.  The evaluator knows
only the seven core forms (``arr``, sequencing, ``second``, ``strength``,
``state``, ``eta``, ``eps``); everything else is built by macro expansion
in the derived-combinator constructors below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Union

from .errors import AmbiguousType, IllTypedValue, NotEnumerable, TypeMismatch
from .pi import IsoName, IsoType, PiComb, Prim, comb_constraints, eval_comb, seq_chain
from .types import (
    BOOL,
    ONE,
    UNIT,
    BaseType,
    BoolV,
    Left,
    PairV,
    PiValue,
    Prod,
    Right,
    SetT,
    SetV,
    Sum,
    UnitV,
    XorSet,
    enumerate_values,
    is_enumerable,
    value_inhabits,
    value_sort_key,
    xor_union,
)
from .unify import TVar, is_ground, resolve, unify

__all__ = [
    "XorSet",
    "xor_union",
    "RelExpr",
    "Arr",
    "SeqR",
    "Second",
    "Strength",
    "State",
    "Eta",
    "Eps",
    "RelType",
    "type_check_rel",
    "apply_rel_value",
    "apply_rel_set",
    "scalar_of",
    "first",
    "curry",
    "uncurry",
    "s2r",
    "trace",
    "adjoint_rel",
    "costate",
    "dot",
    "outer",
    "seq_rel",
]


# ---------------------------------------------------------------------------
# Syntax


@dataclass(frozen=True)
class Arr:
    """A lifted isomorphism; the optional annotation pins its type."""

    comb: PiComb
    ann: Optional[IsoType] = None


@dataclass(frozen=True)
class SeqR:
    fst: "RelExpr"
    snd: "RelExpr"


@dataclass(frozen=True)
class Second:
    """Apply a relation to the second pair component.

    ``first_type`` optionally pins the type of the untouched component,
    which evaluation never needs but matrix denotation does.
    """

    rel: "RelExpr"
    first_type: Optional[BaseType] = None


@dataclass(frozen=True)
class Strength:
    """Push a pair into a set: (v, s) becomes the set of (v, x) for x in s."""

    fst: Optional[BaseType] = None
    snd: Optional[BaseType] = None


@dataclass(frozen=True)
class State:
    """Present a set as a relation from the unit type."""

    set: XorSet


@dataclass(frozen=True)
class Eta:
    """Emit every diagonal pair (v, v) of the given type at once."""

    elem: BaseType


@dataclass(frozen=True)
class Eps:
    """Collapse equal pairs to unit and unequal pairs to nothing."""

    elem: Optional[BaseType] = None


RelExpr = Union[Arr, SeqR, Second, Strength, State, Eta, Eps]


@dataclass(frozen=True)
class RelType:
    dom: BaseType
    cod: BaseType

    def __post_init__(self) -> None:
        for side in (self.dom, self.cod):
            if not is_enumerable(side):
                raise NotEnumerable(f"relation endpoint {side!r} is not enumerable")

    def __repr__(self) -> str:
        return f"{self.dom!r} R {self.cod!r}"


# ---------------------------------------------------------------------------
# Typing


@dataclass(frozen=True)
class TypedRel:
    """A relation expression annotated with ground endpoint types per node."""

    expr: RelExpr
    dom: BaseType
    cod: BaseType
    kids: tuple["TypedRel", ...] = ()


def _collect(r: RelExpr, subst: dict) -> tuple:
    """Return (dom, cod, raw kids) with unification variables still inside."""
    if isinstance(r, Arr):
        t = comb_constraints(r.comb, subst)
        if r.ann is not None:
            unify(t.lhs, r.ann.lhs, subst)
            unify(t.rhs, r.ann.rhs, subst)
        return t.lhs, t.rhs, ()
    if isinstance(r, SeqR):
        k1 = (r.fst,) + _collect(r.fst, subst)
        k2 = (r.snd,) + _collect(r.snd, subst)
        unify(k1[2], k2[1], subst)
        return k1[1], k2[2], (k1, k2)
    if isinstance(r, Second):
        inner = (r.rel,) + _collect(r.rel, subst)
        b = r.first_type if r.first_type is not None else TVar()
        return Prod(b, inner[1]), Prod(b, inner[2]), (inner,)
    if isinstance(r, Strength):
        b1 = r.fst if r.fst is not None else TVar()
        b2 = r.snd if r.snd is not None else TVar()
        return Prod(b1, SetT(b2)), Prod(b1, b2), ()
    if isinstance(r, State):
        return ONE, r.set.elem_type, ()
    if isinstance(r, Eta):
        return ONE, Prod(r.elem, r.elem), ()
    if isinstance(r, Eps):
        b = r.elem if r.elem is not None else TVar()
        return Prod(b, b), ONE, ()
    raise TypeMismatch(f"not a relation expression: {r!r}")


def _finalize(r: RelExpr, raw: tuple, subst: dict) -> TypedRel:
    dom = resolve(raw[0], subst)
    cod = resolve(raw[1], subst)
    if not (is_ground(dom) and is_ground(cod)):
        raise AmbiguousType(
            f"relation type {dom!r} R {cod!r} is not ground; add an annotation"
        )
    kids = tuple(_finalize(k[0], k[1:], subst) for k in raw[2])
    RelType(dom, cod)  # validates enumerability of the endpoints
    return TypedRel(r, dom, cod, kids)


def typed_rel(
    r: RelExpr,
    dom: Optional[BaseType] = None,
    cod: Optional[BaseType] = None,
) -> TypedRel:
    """Type the whole tree, requiring every node to come out ground."""
    subst: dict = {}
    raw = _collect(r, subst)
    if dom is not None:
        unify(raw[0], dom, subst)
    if cod is not None:
        unify(raw[1], cod, subst)
    return _finalize(r, raw, subst)


def type_check_rel(
    r: RelExpr,
    dom: Optional[BaseType] = None,
    cod: Optional[BaseType] = None,
) -> RelType:
    """Endpoint types of r; optional dom/cod hints behave as annotations."""
    subst: dict = {}
    raw = _collect(r, subst)
    if dom is not None:
        unify(raw[0], dom, subst)
    if cod is not None:
        unify(raw[1], cod, subst)
    d = resolve(raw[0], subst)
    c = resolve(raw[1], subst)
    if not (is_ground(d) and is_ground(c)):
        raise AmbiguousType(
            f"relation type {d!r} R {c!r} is not ground; add an annotation"
        )
    return RelType(d, c)


def infer_value_type(v: PiValue):
    """Partial type of a bare value; sum injections leave a variable open."""
    if isinstance(v, UnitV):
        return ONE
    if isinstance(v, BoolV):
        return BOOL
    if isinstance(v, PairV):
        return Prod(infer_value_type(v.fst), infer_value_type(v.snd))
    if isinstance(v, SetV):
        return SetT(v.elems.elem_type)
    if isinstance(v, Left):
        return Sum(infer_value_type(v.value), TVar())
    if isinstance(v, Right):
        return Sum(TVar(), infer_value_type(v.value))
    raise IllTypedValue(f"not a value: {v!r}")


# ---------------------------------------------------------------------------
# Evaluation

# The per-value evaluator returns a plain list of output values whose
# multiset parity is the answer; cancellation is resolved when the list is
# folded back into a canonical set.  Linearity over exclusive union makes
# the deferred cancellation sound.


def _parity(values: list) -> list:
    counts = Counter(values)
    return [v for v, n in counts.items() if n % 2 == 1]


def _eval(r: RelExpr, v: PiValue) -> list:
    if isinstance(r, Arr):
        return [eval_comb(r.comb, v)]
    if isinstance(r, SeqR):
        out: list = []
        for mid in _parity(_eval(r.fst, v)):
            out.extend(_eval(r.snd, mid))
        return out
    if isinstance(r, Second):
        if not isinstance(v, PairV):
            raise IllTypedValue(f"second needs a pair, got {v!r}")
        return [PairV(v.fst, x) for x in _parity(_eval(r.rel, v.snd))]
    if isinstance(r, Strength):
        if not (isinstance(v, PairV) and isinstance(v.snd, SetV)):
            raise IllTypedValue(f"strength needs a pair of value and set, got {v!r}")
        return [PairV(v.fst, x) for x in v.snd.elems]
    if isinstance(r, State):
        if not isinstance(v, UnitV):
            raise IllTypedValue(f"state consumes only (), got {v!r}")
        return list(r.set.elems)
    if isinstance(r, Eta):
        if not isinstance(v, UnitV):
            raise IllTypedValue(f"eta consumes only (), got {v!r}")
        return [PairV(x, x) for x in enumerate_values(r.elem)]
    if isinstance(r, Eps):
        if not isinstance(v, PairV):
            raise IllTypedValue(f"eps needs a pair, got {v!r}")
        return [UNIT] if v.fst == v.snd else []
    raise IllTypedValue(f"not a relation expression: {r!r}")


def _as_set(values: list, elem_type: BaseType) -> XorSet:
    kept = _parity(values)
    kept.sort(key=value_sort_key)
    out = XorSet(elem_type, tuple(kept))
    assert all(value_inhabits(v, elem_type) for v in out)
    return out


def apply_rel_value(r: RelExpr, v: PiValue) -> XorSet:
    """Relate one value; the value's shape helps pin the codomain type."""
    subst: dict = {}
    raw = _collect(r, subst)
    unify(raw[0], infer_value_type(v), subst)
    cod = resolve(raw[1], subst)
    if not is_ground(cod):
        raise AmbiguousType(
            f"output type {cod!r} is not determined; annotate the relation"
        )
    return _as_set(_eval(r, v), cod)


def apply_rel_set(r: RelExpr, s: XorSet) -> XorSet:
    """Relate a whole set: the fold of apply_rel_value under exclusive union."""
    subst: dict = {}
    raw = _collect(r, subst)
    unify(raw[0], s.elem_type, subst)
    cod = resolve(raw[1], subst)
    if not is_ground(cod):
        raise AmbiguousType(
            f"output type {cod!r} is not determined; annotate the relation"
        )
    out: list = []
    for v in s:
        out.extend(_eval(r, v))
    return _as_set(out, cod)


def scalar_of(r: RelExpr) -> bool:
    """Collapse a unit-to-unit relation to its field element, T as True."""
    type_check_rel(r, dom=ONE, cod=ONE)
    return len(apply_rel_value(r, UNIT)) == 1


# ---------------------------------------------------------------------------
# Derived combinators (macro expansion into the seven core forms)


def seq_rel(*rs: RelExpr) -> RelExpr:
    """Right-nested sequencing of one or more relations."""
    if not rs:
        raise ValueError("empty composition")
    result = rs[-1]
    for r in reversed(rs[:-1]):
        result = SeqR(r, result)
    return result


def _arr(*names: IsoName) -> RelExpr:
    return Arr(seq_chain(*(Prim(n) for n in names)))


def first(r: RelExpr) -> RelExpr:
    """Apply r to the first pair component by swapping around second."""
    return seq_rel(_arr(IsoName.SWAP_TIMES), Second(r), _arr(IsoName.SWAP_TIMES))


def _dom_of(r: RelExpr) -> BaseType:
    rt = type_check_rel(r)
    return rt.dom


def curry(r: RelExpr, arg: Optional[BaseType] = None) -> RelExpr:
    """Turn a relation from pairs into a relation producing pairs.

    ``arg`` is the second component of r's domain; inferred when r's type
    is already ground.
    """
    if arg is None:
        d = _dom_of(r)
        if not isinstance(d, Prod):
            raise TypeMismatch(f"curry needs a pair domain, got {d!r}")
        arg = d.snd
    return seq_rel(
        _arr(IsoName.UNITI, IsoName.SWAP_TIMES),
        Second(Eta(arg)),
        _arr(IsoName.ASSOCL_TIMES),
        first(r),
        _arr(IsoName.SWAP_TIMES),
    )


def uncurry(r: RelExpr) -> RelExpr:
    """Inverse companion of curry; consumes the produced pair with eps."""
    return seq_rel(
        first(r),
        _arr(IsoName.SWAP_TIMES, IsoName.ASSOCL_TIMES),
        first(Eps()),
        _arr(IsoName.UNITE),
    )


def s2r(s: XorSet) -> RelExpr:
    """Read a set of pairs as a relation from firsts to seconds."""
    if not isinstance(s.elem_type, Prod):
        raise TypeMismatch(f"s2r needs a set of pairs, got {s.elem_type!r}")
    return seq_rel(_arr(IsoName.UNITI), uncurry(State(s)))


def trace(r: RelExpr, loop: Optional[BaseType] = None) -> RelExpr:
    """Tie the second pair component of r into a feedback loop."""
    if loop is None:
        d = _dom_of(r)
        if not isinstance(d, Prod):
            raise TypeMismatch(f"trace needs a pair domain, got {d!r}")
        loop = d.snd
    return seq_rel(
        _arr(IsoName.UNITI),
        first(Eta(loop)),
        _arr(IsoName.SWAP_TIMES, IsoName.ASSOCL_TIMES),
        first(r),
        _arr(IsoName.ASSOCR_TIMES),
        Second(Eps()),
        _arr(IsoName.SWAP_TIMES, IsoName.UNITE),
    )


def adjoint_rel(r: RelExpr, dom: Optional[BaseType] = None) -> RelExpr:
    """The relation running r backwards, built from eta and eps."""
    if dom is None:
        dom = _dom_of(r)
    return seq_rel(
        _arr(IsoName.UNITI),
        first(Eta(dom)),
        first(Second(r)),
        _arr(IsoName.ASSOCR_TIMES),
        Second(Eps()),
        _arr(IsoName.SWAP_TIMES, IsoName.UNITE),
    )


def costate(s: XorSet) -> RelExpr:
    """Match a given state; the adjoint of presenting it."""
    return adjoint_rel(State(s), dom=ONE)


def dot(s1: XorSet, s2: XorSet) -> RelExpr:
    """Overlap of two states as a unit-to-unit relation (a scalar)."""
    return SeqR(State(s1), costate(s2))


def outer(s1: XorSet, s2: XorSet) -> RelExpr:
    """The rank-one relation matching s2 and then producing s1."""
    return SeqR(costate(s2), State(s1))
