"""Parser for the relation-language surface syntax.

A program is a sequence of definitions followed by an optional main
declaration::

    type two = 1 + 1;
    comb negb = bool2sum ; swap_plus ; sum2bool;
    def shared = { (F,F), (T,T) };
    def flip = arr negb;
    main = first flip on shared measure [{ (F,T), (T,F) }, ...];

Names resolve to earlier definitions and are inlined on the spot, so the
resulting program is closed.  Derived relation forms (``first``,
``curry``, ``uncurry``, ``s2r``, ``trace``, ``adjointR``, ``costate``,
``dot``, ``outer``) expand into the seven core forms while parsing.

Combinator sequencing ``;`` , ``(+)`` and ``(x)`` nest to the right, with
``;`` loosest and ``(x)`` tightest; the same holds for ``+`` and ``*`` in
types.  Line comments run from ``--`` to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ParseError, UnknownName
from .pi import IsoName, IsoType, PiComb, Prim, ProdC, Seq, SumC
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
    costate,
    curry,
    dot,
    first,
    outer,
    s2r,
    trace,
    uncurry,
)
from .types import (
    BOOL,
    ONE,
    ZERO,
    BaseType,
    PairV,
    PiValue,
    SetT,
    SetV,
    Sum,
    Prod,
    UNIT,
    FALSE,
    TRUE,
    Left,
    Right,
)
from .unify import TVar, is_ground, resolve, unify

__all__ = ["Definition", "MainDecl", "SourceProgram", "parse_rpi"]

_ISO_NAMES = {iso.value: iso for iso in IsoName}

_KEYWORDS = {
    "type",
    "comb",
    "def",
    "main",
    "on",
    "measure",
    "arr",
    "second",
    "strength",
    "state",
    "eta",
    "eps",
    "first",
    "curry",
    "uncurry",
    "s2r",
    "trace",
    "adjointR",
    "costate",
    "dot",
    "outer",
    "S",
    "L",
    "R",
    "T",
    "F",
    "bool",
} | set(_ISO_NAMES)


@dataclass(frozen=True)
class Definition:
    kind: str  # "type" | "comb" | "set" | "rel"
    name: str
    value: object
    ann: Optional[IsoType] = None  # only for comb definitions


@dataclass(frozen=True)
class MainDecl:
    rel: RelExpr
    input: XorSet
    duals: Optional[tuple[XorSet, ...]] = None


@dataclass(frozen=True)
class SourceProgram:
    items: tuple[Definition, ...]
    main: Optional[MainDecl] = None

    def find(self, name: str) -> Definition:
        for item in self.items:
            if item.name == name:
                return item
        raise UnknownName(f"no definition named {name!r}")


# ---------------------------------------------------------------------------
# Lexer

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|--[^\n]*)
  | (?P<op>\(\+\)|\(x\)|>>>|<->|:-)
  | (?P<punct>[(){}\[\],;=@:+*])
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
""",
    re.VERBOSE,
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind != "ws":
            tokens.append((kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Value literals: parsed to a small intermediate form, typed by
# unification, then built into canonical values.


@dataclass(frozen=True)
class _VUnit:
    pass


@dataclass(frozen=True)
class _VBool:
    value: bool


@dataclass(frozen=True)
class _VInj:
    left: bool
    value: "_VLit"


@dataclass(frozen=True)
class _VPair:
    fst: "_VLit"
    snd: "_VLit"


@dataclass(frozen=True)
class _VSet:
    elems: tuple["_VLit", ...]
    ann: Optional[BaseType]


_VLit = Union[_VUnit, _VBool, _VInj, _VPair, _VSet]


def _infer_lit(lit: _VLit, subst: dict):
    if isinstance(lit, _VUnit):
        return ONE
    if isinstance(lit, _VBool):
        return BOOL
    if isinstance(lit, _VInj):
        inner = _infer_lit(lit.value, subst)
        return Sum(inner, TVar()) if lit.left else Sum(TVar(), inner)
    if isinstance(lit, _VPair):
        return Prod(_infer_lit(lit.fst, subst), _infer_lit(lit.snd, subst))
    if isinstance(lit, _VSet):
        elem = TVar()
        for e in lit.elems:
            unify(_infer_lit(e, subst), elem, subst)
        if lit.ann is not None:
            unify(elem, lit.ann, subst)
        return SetT(elem)
    raise AssertionError(lit)


def _build_lit(lit: _VLit, t: BaseType) -> PiValue:
    if isinstance(lit, _VUnit):
        return UNIT
    if isinstance(lit, _VBool):
        return TRUE if lit.value else FALSE
    if isinstance(lit, _VInj):
        assert isinstance(t, Sum)
        if lit.left:
            return Left(_build_lit(lit.value, t.left))
        return Right(_build_lit(lit.value, t.right))
    if isinstance(lit, _VPair):
        assert isinstance(t, Prod)
        return PairV(_build_lit(lit.fst, t.fst), _build_lit(lit.snd, t.snd))
    if isinstance(lit, _VSet):
        assert isinstance(t, SetT)
        return SetV(XorSet.of(t.elem, [_build_lit(e, t.elem) for e in lit.elems]))
    raise AssertionError(lit)


# ---------------------------------------------------------------------------
# Parser proper


class _Parser:
    def __init__(self, text: str, overrides: Optional[dict] = None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.overrides = overrides or {}
        self.types: dict[str, BaseType] = {}
        self.combs: dict[str, tuple[PiComb, Optional[IsoType]]] = {}
        self.sets: dict[str, XorSet] = {}
        self.rels: dict[str, RelExpr] = {}
        self.items: list[Definition] = []
        self.main: Optional[MainDecl] = None

    # -- token plumbing

    def peek(self, ahead: int = 0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, lexeme: str) -> bool:
        return self.peek()[1] == lexeme and self.peek()[0] != "eof"

    def eat(self, lexeme: str) -> bool:
        if self.at(lexeme):
            self.next()
            return True
        return False

    def expect(self, lexeme: str):
        kind, text, line, col = self.next()
        if text != lexeme or kind == "eof":
            raise ParseError(
                f"expected {lexeme!r}, found {text or 'end of input'!r}", line, col
            )

    def fail(self, message: str):
        _, text, line, col = self.peek()
        raise ParseError(f"{message} (found {text or 'end of input'!r})", line, col)

    def name_token(self) -> str:
        kind, text, line, col = self.next()
        if kind != "name":
            raise ParseError(f"expected a name, found {text!r}", line, col)
        return text

    # -- name resolution

    def lookup(self, name: str):
        target = self.overrides.get(name, name)
        for space, kind in (
            (self.rels, "rel"),
            (self.sets, "set"),
            (self.combs, "comb"),
            (self.types, "type"),
        ):
            if target in space:
                return kind, space[target]
        raise UnknownName(f"name {target!r} is not defined (define it before use)")

    # -- types

    def type_expr(self) -> BaseType:
        t = self.type_prod()
        if self.eat("+"):
            return Sum(t, self.type_expr())
        return t

    def type_prod(self) -> BaseType:
        t = self.type_prefix()
        if self.eat("*"):
            return Prod(t, self.type_prod())
        return t

    def type_prefix(self) -> BaseType:
        if self.eat("S"):
            return SetT(self.type_prefix())
        return self.type_atom()

    def type_atom(self) -> BaseType:
        kind, text, line, col = self.peek()
        if text == "0":
            self.next()
            return ZERO
        if text == "1":
            self.next()
            return ONE
        if text == "bool":
            self.next()
            return BOOL
        if text == "(":
            self.next()
            t = self.type_expr()
            self.expect(")")
            return t
        if kind == "name":
            self.next()
            if text in self.types:
                return self.types[text]
            raise ParseError(f"unknown type name {text!r}", line, col)
        self.fail("expected a type")

    # -- values and set literals

    def value_lit(self) -> _VLit:
        kind, text, line, col = self.peek()
        if text == "(":
            self.next()
            if self.eat(")"):
                return _VUnit()
            fst = self.value_lit()
            self.expect(",")
            snd = self.value_lit()
            self.expect(")")
            return _VPair(fst, snd)
        if text == "T":
            self.next()
            return _VBool(True)
        if text == "F":
            self.next()
            return _VBool(False)
        if text == "L":
            self.next()
            return _VInj(True, self.value_lit())
        if text == "R":
            self.next()
            return _VInj(False, self.value_lit())
        if text == "{":
            return self.set_lit()
        self.fail("expected a value")

    def set_lit(self) -> _VSet:
        self.expect("{")
        elems: list[_VLit] = []
        if not self.eat("}"):
            elems.append(self.value_lit())
            while self.eat(","):
                elems.append(self.value_lit())
            self.expect("}")
        ann = self.type_expr() if self.eat("@") else None
        return _VSet(tuple(elems), ann)

    def build_set(self, lit: _VSet) -> XorSet:
        _, _, line, col = self.peek()
        subst: dict = {}
        t = _infer_lit(lit, subst)
        elem = resolve(t.elem, subst)
        if not is_ground(elem):
            raise ParseError(
                "cannot infer the element type of the set literal; "
                "annotate it with `@ type`",
                line,
                col,
            )
        inner = _build_lit(lit, SetT(elem))
        assert isinstance(inner, SetV)
        return inner.elems

    def set_atom(self) -> XorSet:
        if self.at("{"):
            return self.build_set(self.set_lit())
        kind, text, line, col = self.peek()
        if kind == "name":
            self.next()
            dkind, value = self.lookup(text)
            if dkind != "set":
                raise ParseError(f"{text!r} is a {dkind}, not a set", line, col)
            return value
        self.fail("expected a set literal or a set name")

    # -- combinators

    _STATEMENT_KEYWORDS = ("type", "comb", "def", "main")

    def comb_expr(self) -> PiComb:
        # `;` both sequences combinators and ends statements; a `;` that is
        # followed by a new statement (or nothing) terminates instead.
        c = self.comb_sum()
        if self.at(";"):
            following = self.peek(1)
            if following[0] != "eof" and following[1] not in self._STATEMENT_KEYWORDS:
                self.next()
                return Seq(c, self.comb_expr())
        return c

    def comb_sum(self) -> PiComb:
        c = self.comb_prod()
        if self.eat("(+)"):
            return SumC(c, self.comb_sum())
        return c

    def comb_prod(self) -> PiComb:
        c = self.comb_atom()
        if self.eat("(x)"):
            return ProdC(c, self.comb_prod())
        return c

    def comb_atom(self) -> PiComb:
        kind, text, line, col = self.peek()
        if text == "(":
            self.next()
            c = self.comb_expr()
            self.expect(")")
            return c
        if kind == "name":
            self.next()
            if text in _ISO_NAMES:
                return Prim(_ISO_NAMES[text])
            dkind, value = self.lookup(text)
            if dkind != "comb":
                raise ParseError(f"{text!r} is a {dkind}, not a combinator", line, col)
            return value[0]
        self.fail("expected a combinator")

    def iso_annotation(self) -> IsoType:
        lhs = self.type_expr()
        self.expect("<->")
        rhs = self.type_expr()
        return IsoType(lhs, rhs)

    # -- relations
    #
    # rel       := rapp ('>>>' rel)?
    # rapp      := prefix forms | ratom
    # ratom     := 'arr' ... | 'strength' | 'eta' | 'eps' | 'state' |
    #              NAME | '(' rel ')'

    def rel_expr(self) -> RelExpr:
        r = self.rel_app()
        if self.eat(">>>"):
            return SeqR(r, self.rel_expr())
        return r

    def rel_app(self) -> RelExpr:
        kind, text, line, col = self.peek()
        if text == "arr":
            self.next()
            return self.arr_tail()
        if text == "second":
            self.next()
            pin = self.type_prefix() if self.eat("@") else None
            return Second(self.rel_app(), pin)
        if text == "state":
            self.next()
            return State(self.set_atom())
        if text == "first":
            self.next()
            return first(self.rel_app())
        if text == "curry":
            self.next()
            return curry(self.rel_app())
        if text == "uncurry":
            self.next()
            return uncurry(self.rel_app())
        if text == "trace":
            self.next()
            return trace(self.rel_app())
        if text == "adjointR":
            self.next()
            return adjoint_rel(self.rel_app())
        if text == "s2r":
            self.next()
            return s2r(self.set_atom())
        if text == "costate":
            self.next()
            return costate(self.set_atom())
        if text == "dot":
            self.next()
            return dot(self.set_atom(), self.set_atom())
        if text == "outer":
            self.next()
            return outer(self.set_atom(), self.set_atom())
        return self.rel_atom()

    def arr_tail(self) -> RelExpr:
        # `arr iso`, `arr NAME`, `arr (comb)`, or `arr (comb : t <-> t)`
        kind, text, line, col = self.peek()
        if text == "(":
            self.next()
            comb = self.comb_expr()
            ann = self.iso_annotation() if self.eat(":") else None
            self.expect(")")
            return Arr(comb, ann)
        if kind == "name":
            self.next()
            if text in _ISO_NAMES:
                return Arr(Prim(_ISO_NAMES[text]))
            dkind, value = self.lookup(text)
            if dkind != "comb":
                raise ParseError(f"{text!r} is a {dkind}, not a combinator", line, col)
            return Arr(value[0], value[1])
        self.fail("expected a combinator after `arr`")

    def rel_atom(self) -> RelExpr:
        kind, text, line, col = self.peek()
        if text == "strength":
            self.next()
            if self.eat("@"):
                t = self.type_expr()
                if not isinstance(t, Prod):
                    raise ParseError(
                        "strength takes a product annotation, e.g. `@ bool * bool`",
                        line,
                        col,
                    )
                return Strength(t.fst, t.snd)
            return Strength()
        if text == "eta":
            self.next()
            self.expect("@")
            return Eta(self.type_prefix())
        if text == "eps":
            self.next()
            if self.eat("@"):
                return Eps(self.type_prefix())
            return Eps()
        if text == "(":
            self.next()
            r = self.rel_expr()
            self.expect(")")
            return r
        if kind == "name":
            self.next()
            dkind, value = self.lookup(text)
            if dkind == "rel":
                return value
            raise ParseError(f"{text!r} is a {dkind}, not a relation", line, col)
        self.fail("expected a relation expression")

    # -- statements

    def def_name(self) -> str:
        kind, text, line, col = self.next()
        if kind != "name":
            raise ParseError(f"expected a name to define, found {text!r}", line, col)
        if text in _KEYWORDS:
            raise ParseError(f"{text!r} is reserved and cannot be defined", line, col)
        if any(text in space for space in (self.types, self.combs, self.sets, self.rels)):
            raise ParseError(f"{text!r} is already defined", line, col)
        return text

    def statement(self) -> None:
        if self.eat("type"):
            name = self.def_name()
            self.expect("=")
            t = self.type_expr()
            self.expect(";")
            self.types[name] = t
            self.items.append(Definition("type", name, t))
            return
        if self.eat("comb"):
            name = self.def_name()
            self.expect("=")
            c = self.comb_expr()
            ann = self.iso_annotation() if self.eat(":") else None
            self.expect(";")
            self.combs[name] = (c, ann)
            self.items.append(Definition("comb", name, c, ann))
            return
        if self.eat("def"):
            name = self.def_name()
            self.expect("=")
            if self.at("{"):
                s = self.build_set(self.set_lit())
                self.expect(";")
                self.sets[name] = s
                self.items.append(Definition("set", name, s))
                return
            # a lone name copies the referenced definition, whatever it is
            if self.peek()[0] == "name" and self.peek(1)[1] == ";":
                dkind, value = self.lookup(self.next()[1])
                self.expect(";")
                if dkind == "set":
                    self.sets[name] = value
                    self.items.append(Definition("set", name, value))
                elif dkind == "rel":
                    self.rels[name] = value
                    self.items.append(Definition("rel", name, value))
                elif dkind == "comb":
                    self.combs[name] = value
                    self.items.append(Definition("comb", name, value[0], value[1]))
                else:
                    self.types[name] = value
                    self.items.append(Definition("type", name, value))
                return
            r = self.rel_expr()
            self.expect(";")
            self.rels[name] = r
            self.items.append(Definition("rel", name, r))
            return
        if self.eat("main"):
            if self.main is not None:
                self.fail("main is already declared")
            self.expect("=")
            r = self.rel_expr()
            self.expect("on")
            input_set = self.set_atom()
            duals = None
            if self.eat("measure"):
                self.expect("[")
                ds = [self.set_atom()]
                while self.eat(","):
                    ds.append(self.set_atom())
                self.expect("]")
                duals = tuple(ds)
            self.expect(";")
            self.main = MainDecl(r, input_set, duals)
            return
        self.fail("expected `type`, `comb`, `def`, or `main`")

    def program(self) -> SourceProgram:
        while self.peek()[0] != "eof":
            self.statement()
        return SourceProgram(tuple(self.items), self.main)


def parse_rpi(text: str, overrides: Optional[dict] = None) -> SourceProgram:
    """Parse a program; ``overrides`` redirects name references.

    ``overrides={"alice": "alice2"}`` makes every reference to ``alice``
    resolve to the definition of ``alice2`` instead, which is how the
    command line selects one of several prepared relations.
    """
    return _Parser(text, overrides).program()
