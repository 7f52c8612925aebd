"""Reversible combinators, exclusive-union relations, and their GF(2) semantics.

The package has three layers.  :mod:`rpilang.pi` interprets a small
reversible language whose programs are bijections between finite types.
:mod:`rpilang.rel` adds sets combined by exclusive union and arrow-style
relation combinators on top; :mod:`rpilang.gf2` gives the same language an
independent reading as bit matrices so the two can be checked against each
other.  Around the core sit dual-basis measurement (:mod:`rpilang.measure`),
a small Prolog-like engine with pluggable answer-merging policies
(:mod:`rpilang.logic`), and a surface syntax with a command line driver
(:mod:`rpilang.parser`, :mod:`rpilang.cli`).
"""

from .errors import RpiError
from .pi import IsoName, IsoType, PiComb, Prim, ProdC, Seq, SumC, adjoint_comb, eval_comb, infer_comb_type
from .rel import (
    Arr,
    Eps,
    Eta,
    RelExpr,
    SeqR,
    Second,
    State,
    Strength,
    XorSet,
    adjoint_rel,
    apply_rel_set,
    apply_rel_value,
    costate,
    curry,
    dot,
    first,
    outer,
    s2r,
    scalar_of,
    trace,
    type_check_rel,
    uncurry,
    xor_union,
)
from .types import (
    BOOL,
    FALSE,
    ONE,
    TRUE,
    UNIT,
    ZERO,
    BaseType,
    BoolV,
    Left,
    PairV,
    PiValue,
    Prod,
    RelT,
    Right,
    SetT,
    SetV,
    Sum,
    UnitV,
    cardinality,
    enumerate_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
