"""A miniature logic engine: SLD resolution over finite terms.

Clauses are tried in textual order and body goals left to right, exactly
like plain Prolog, so answer streams are reproducible down to the order
and multiplicity of repeated answers.  What distinguishes runs is only
the post-processing policy on the answer stream: keep everything, keep
first occurrences, or keep the answers that occur an odd number of times.

Program files are a Prolog-compatible subset::

    parent(ann, bob).          % a fact
    gp(X, Z) :- parent(X, Y), parent(Y, Z).

Constants are lowercase atoms or decimal integers, variables start with
an uppercase letter or underscore, and ``(a, b)`` is a pair term.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DepthExceeded, ParseError, UnknownPredicate

__all__ = [
    "Const",
    "Var",
    "Pair",
    "Term",
    "Atom",
    "Clause",
    "UNION_MODES",
    "parse_program",
    "parse_goal",
    "solve",
    "apply_union_mode",
    "format_answers",
]


@dataclass(frozen=True)
class Const:
    value: Union[str, int]

    def __repr__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Pair:
    fst: "Term"
    snd: "Term"

    def __repr__(self) -> str:
        return f"({self.fst!r},{self.snd!r})"


Term = Union[Const, Var, Pair]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...]

    def __repr__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({', '.join(map(repr, self.args))})"


@dataclass(frozen=True)
class Clause:
    head: Atom
    body: tuple[Atom, ...] = ()


UNION_MODES = ("prolog", "set", "xor")

# A ground answer is a tuple of (variable name, ground term) pairs in the
# order the variables first occur in the query.
Answer = tuple


# ---------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<neck>:-)
  | (?P<punct>[(),.])
  | (?P<int>\d+)
  | (?P<atom>[a-z][A-Za-z0-9_]*)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
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


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, lexeme: str):
        kind, text, line, col = self.next()
        if text != lexeme:
            raise ParseError(f"expected {lexeme!r}, found {text or 'end of input'!r}",
                             line, col)

    def fail(self, message: str):
        _, text, line, col = self.peek()
        raise ParseError(message + f" (found {text or 'end of input'!r})", line, col)

    def term(self) -> Term:
        kind, text, line, col = self.peek()
        if kind == "int":
            self.next()
            return Const(int(text))
        if kind == "atom":
            self.next()
            return Const(text)
        if kind == "var":
            self.next()
            return Var(text)
        if text == "(":
            self.next()
            fst = self.term()
            self.expect(",")
            snd = self.term()
            while self.peek()[1] == ",":  # (a,b,c) nests to (a,(b,c))
                self.next()
                snd = Pair(snd, self.term())
            self.expect(")")
            return Pair(fst, snd)
        self.fail("expected a term")

    def atom(self) -> Atom:
        kind, text, line, col = self.next()
        if kind != "atom":
            raise ParseError(f"expected a predicate name, found {text!r}", line, col)
        args: list[Term] = []
        if self.peek()[1] == "(":
            self.next()
            args.append(self.term())
            while self.peek()[1] == ",":
                self.next()
                args.append(self.term())
            self.expect(")")
        return Atom(text, tuple(args))

    def clause(self) -> Clause:
        head = self.atom()
        body: list[Atom] = []
        if self.peek()[1] == ":-":
            self.next()
            body.append(self.atom())
            while self.peek()[1] == ",":
                self.next()
                body.append(self.atom())
        self.expect(".")
        return Clause(head, tuple(body))

    def program(self) -> list[Clause]:
        clauses = []
        while self.peek()[0] != "eof":
            clauses.append(self.clause())
        return clauses

    def goal(self) -> Atom:
        goal = self.atom()
        if self.peek()[1] == ".":
            self.next()
        if self.peek()[0] != "eof":
            self.fail("trailing input after the goal")
        return goal


def parse_program(text: str) -> list[Clause]:
    return _Parser(text).program()


def parse_goal(text: str) -> Atom:
    return _Parser(text).goal()


# ---------------------------------------------------------------------------
# Resolution


def _walk(t: Term, subst: dict) -> Term:
    while isinstance(t, Var) and t in subst:
        t = subst[t]
    return t


def _unify(a: Term, b: Term, subst: dict):
    """Extended substitution or None; no occurs check, as in plain Prolog."""
    a = _walk(a, subst)
    b = _walk(b, subst)
    if a == b:
        return subst
    if isinstance(a, Var):
        out = dict(subst)
        out[a] = b
        return out
    if isinstance(b, Var):
        out = dict(subst)
        out[b] = a
        return out
    if isinstance(a, Pair) and isinstance(b, Pair):
        mid = _unify(a.fst, b.fst, subst)
        if mid is None:
            return None
        return _unify(a.snd, b.snd, mid)
    return None


def _unify_atoms(a: Atom, b: Atom, subst: dict):
    if a.pred != b.pred or len(a.args) != len(b.args):
        return None
    for x, y in zip(a.args, b.args):
        subst = _unify(x, y, subst)
        if subst is None:
            return None
    return subst


def _resolve_term(t: Term, subst: dict) -> Term:
    t = _walk(t, subst)
    if isinstance(t, Pair):
        return Pair(_resolve_term(t.fst, subst), _resolve_term(t.snd, subst))
    return t


def _rename(atom: Atom, suffix: str) -> Atom:
    def go(t: Term) -> Term:
        if isinstance(t, Var):
            return Var(t.name + suffix)
        if isinstance(t, Pair):
            return Pair(go(t.fst), go(t.snd))
        return t

    return Atom(atom.pred, tuple(go(a) for a in atom.args))


def _goal_vars(atom: Atom) -> list[str]:
    seen: list[str] = []

    def go(t: Term):
        if isinstance(t, Var) and t.name not in seen:
            seen.append(t.name)
        elif isinstance(t, Pair):
            go(t.fst)
            go(t.snd)

    for a in atom.args:
        go(a)
    return seen


def solve(
    program: Sequence[Clause],
    query: Atom,
    max_steps: int = 10_000,
) -> list[Answer]:
    """All answers to the query, depth first, in discovery order.

    An answer binds the query's variables, listed by first occurrence.
    ``max_steps`` bounds the number of head unification attempts and
    guards against runaway recursion.
    """
    index: dict[tuple[str, int], list[Clause]] = {}
    for clause in program:
        index.setdefault((clause.head.pred, len(clause.head.args)), []).append(clause)

    steps = 0
    fresh = 0
    answers: list[Answer] = []
    qvars = _goal_vars(query)

    # Depth-first search over an explicit stack so the step bound, not the
    # interpreter recursion limit, is what stops runaway programs.
    stack: list[tuple[list[Atom], dict]] = [([query], {})]
    while stack:
        goals, subst = stack.pop()
        if not goals:
            answers.append(
                tuple((name, _resolve_term(Var(name), subst)) for name in qvars)
            )
            continue
        goal, rest = goals[0], goals[1:]
        key = (goal.pred, len(goal.args))
        if key not in index:
            raise UnknownPredicate(f"no clauses for {goal.pred}/{len(goal.args)}")
        children = []
        for clause in index[key]:
            steps += 1
            if steps > max_steps:
                raise DepthExceeded(f"gave up after {max_steps} resolution steps")
            fresh += 1
            suffix = f"#{fresh}"
            extended = _unify_atoms(goal, _rename(clause.head, suffix), subst)
            if extended is None:
                continue
            body = [_rename(b, suffix) for b in clause.body]
            children.append((body + rest, extended))
        stack.extend(reversed(children))  # first clause explored first
    return answers


def apply_union_mode(answers: Iterable[Answer], mode: str) -> list[Answer]:
    """Post-process a stream: identity, first occurrences, or odd parity."""
    answers = list(answers)
    if mode == "prolog":
        return answers
    if mode == "set":
        seen = set()
        out = []
        for a in answers:
            if a not in seen:
                seen.add(a)
                out.append(a)
        return out
    if mode == "xor":
        counts = Counter(answers)
        seen = set()
        out = []
        for a in answers:
            if counts[a] % 2 == 1 and a not in seen:
                seen.add(a)
                out.append(a)
        return out
    raise ValueError(f"unknown union mode {mode!r}; pick one of {UNION_MODES}")


def format_answers(answers: Sequence[Answer]) -> str:
    """Transcript-style rendering: one answer per line, final full stop."""
    if not answers:
        return "false."
    lines = []
    for a in answers:
        if a:
            lines.append(", ".join(f"{name} = {term!r}" for name, term in a))
        else:
            lines.append("true")
    return " ;\n".join(lines) + "."
