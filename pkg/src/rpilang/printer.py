"""Canonical text rendering of types, values, combinators, and programs.

The printer and the parser in :mod:`parser` are inverse enough that
printing any parsed program and reparsing it gives back a structurally
equal program.  Sets always print with their element type so empty and
sum-typed literals stay unambiguous.
"""

from __future__ import annotations

from .pi import IsoName, IsoType, PiComb, Prim, ProdC, Seq, SumC
from .rel import Arr, Eps, Eta, RelExpr, SeqR, Second, State, Strength
from .types import (
    BaseType,
    Bool,
    BoolV,
    Left,
    One,
    PairV,
    PiValue,
    Prod,
    RelT,
    Right,
    SetT,
    SetV,
    Sum,
    UnitV,
    XorSet,
    Zero,
)

__all__ = [
    "type_str",
    "value_str",
    "set_str",
    "comb_str",
    "rel_str",
    "program_str",
]


def type_str(t: BaseType, prec: int = 0) -> str:
    # precedence: + is 1, * is 2, prefix S is 3; both infixes nest right
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Bool):
        return "bool"
    if isinstance(t, Sum):
        s = f"{type_str(t.left, 2)} + {type_str(t.right, 1)}"
        return f"({s})" if prec > 1 else s
    if isinstance(t, Prod):
        s = f"{type_str(t.fst, 3)} * {type_str(t.snd, 2)}"
        return f"({s})" if prec > 2 else s
    if isinstance(t, SetT):
        s = f"S {type_str(t.elem, 4)}"
        return f"({s})" if prec > 3 else s
    if isinstance(t, RelT):
        # no surface syntax; shown in diagnostics only
        return f"({type_str(t.dom)} R {type_str(t.cod)})"
    raise TypeError(f"not a type: {t!r}")


def value_str(v: PiValue) -> str:
    if isinstance(v, UnitV):
        return "()"
    if isinstance(v, BoolV):
        return "T" if v.value else "F"
    if isinstance(v, Left):
        return f"L {value_str(v.value)}"
    if isinstance(v, Right):
        return f"R {value_str(v.value)}"
    if isinstance(v, PairV):
        return f"({value_str(v.fst)}, {value_str(v.snd)})"
    if isinstance(v, SetV):
        return _braces(v.elems)
    raise TypeError(f"not a value: {v!r}")


def _braces(s: XorSet) -> str:
    return "{" + ", ".join(value_str(v) for v in s) + "}"


def set_str(s: XorSet, annotate: bool = True) -> str:
    if annotate:
        return f"{_braces(s)} @ {type_str(s.elem_type)}"
    return _braces(s)


def comb_str(c: PiComb, prec: int = 0) -> str:
    # precedence: ; is 1, (+) is 2, (x) is 3; all nest right
    if isinstance(c, Prim):
        return c.name.value
    if isinstance(c, Seq):
        s = f"{comb_str(c.fst, 2)} ; {comb_str(c.snd, 1)}"
        return f"({s})" if prec > 1 else s
    if isinstance(c, SumC):
        s = f"{comb_str(c.left, 3)} (+) {comb_str(c.right, 2)}"
        return f"({s})" if prec > 2 else s
    if isinstance(c, ProdC):
        s = f"{comb_str(c.fst, 4)} (x) {comb_str(c.snd, 3)}"
        return f"({s})" if prec > 3 else s
    raise TypeError(f"not a combinator: {c!r}")


def _iso_ann(t: IsoType) -> str:
    return f"{type_str(t.lhs)} <-> {type_str(t.rhs)}"


def rel_str(r: RelExpr, prec: int = 0) -> str:
    # precedence: >>> is 1 (nests right); prefix operators sit at 2
    if isinstance(r, SeqR):
        s = f"{rel_str(r.fst, 2)} >>> {rel_str(r.snd, 1)}"
        return f"({s})" if prec > 1 else s
    if isinstance(r, Arr):
        if r.ann is not None:
            return f"arr ({comb_str(r.comb)} : {_iso_ann(r.ann)})"
        if isinstance(r.comb, Prim):
            return f"arr {comb_str(r.comb)}"
        return f"arr ({comb_str(r.comb)})"
    if isinstance(r, Second):
        pin = f" @ {type_str(r.first_type, 4)}" if r.first_type is not None else ""
        return f"second{pin} {rel_str(r.rel, 2)}"
    if isinstance(r, Strength):
        if r.fst is not None and r.snd is not None:
            return f"strength @ {type_str(Prod(r.fst, r.snd))}"
        return "strength"
    if isinstance(r, State):
        return f"state {set_str(r.set)}"
    if isinstance(r, Eta):
        return f"eta @ {type_str(r.elem, 4)}"
    if isinstance(r, Eps):
        if r.elem is not None:
            return f"eps @ {type_str(r.elem, 4)}"
        return "eps"
    raise TypeError(f"not a relation expression: {r!r}")


def program_str(program) -> str:
    """Render a parsed program; derived forms appear expanded."""
    lines = []
    for item in program.items:
        if item.kind == "type":
            lines.append(f"type {item.name} = {type_str(item.value)};")
        elif item.kind == "comb":
            ann = f" : {_iso_ann(item.ann)}" if item.ann is not None else ""
            lines.append(f"comb {item.name} = {comb_str(item.value)}{ann};")
        elif item.kind == "set":
            lines.append(f"def {item.name} = {set_str(item.value)};")
        elif item.kind == "rel":
            lines.append(f"def {item.name} = {rel_str(item.value)};")
        else:
            raise TypeError(f"unknown definition kind {item.kind!r}")
    if program.main is not None:
        m = program.main
        text = f"main = {rel_str(m.rel)} on {set_str(m.input)}"
        if m.duals is not None:
            inner = ", ".join(set_str(d) for d in m.duals)
            text += f" measure [{inner}]"
        lines.append(text + ";")
    return "\n".join(lines) + "\n"
