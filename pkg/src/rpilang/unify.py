"""First-order unification over the finite type grammar.

Type variables only ever exist while inference runs; they never escape
into user-visible types.  A substitution is a plain dict from variable to
type, extended in place and read through :func:`walk`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import TypeMismatch
from .types import BaseType, Bool, One, Prod, RelT, SetT, Sum, Zero

_ids = itertools.count()


@dataclass(frozen=True, eq=False)
class TVar:
    """A unification variable; identity is its equality."""

    id: int = field(default_factory=lambda: next(_ids))

    def __repr__(self) -> str:
        return f"?t{self.id}"


Ty = object  # BaseType | TVar, or a composite containing TVar leaves


def walk(t: Ty, subst: dict) -> Ty:
    while isinstance(t, TVar) and t in subst:
        t = subst[t]
    return t


def occurs(var: TVar, t: Ty, subst: dict) -> bool:
    t = walk(t, subst)
    if t is var:
        return True
    if isinstance(t, Sum):
        return occurs(var, t.left, subst) or occurs(var, t.right, subst)
    if isinstance(t, Prod):
        return occurs(var, t.fst, subst) or occurs(var, t.snd, subst)
    if isinstance(t, SetT):
        return occurs(var, t.elem, subst)
    if isinstance(t, RelT):
        return occurs(var, t.dom, subst) or occurs(var, t.cod, subst)
    return False


def unify(a: Ty, b: Ty, subst: dict) -> None:
    """Extend subst so that a and b become equal, or raise TypeMismatch."""
    a = walk(a, subst)
    b = walk(b, subst)
    if a is b:
        return
    if isinstance(a, TVar):
        if occurs(a, b, subst):
            raise TypeMismatch(f"cannot build the infinite type {a!r} = {b!r}")
        subst[a] = b
        return
    if isinstance(b, TVar):
        unify(b, a, subst)
        return
    if isinstance(a, (Zero, One, Bool)) and type(a) is type(b):
        return
    if isinstance(a, Sum) and isinstance(b, Sum):
        unify(a.left, b.left, subst)
        unify(a.right, b.right, subst)
        return
    if isinstance(a, Prod) and isinstance(b, Prod):
        unify(a.fst, b.fst, subst)
        unify(a.snd, b.snd, subst)
        return
    if isinstance(a, SetT) and isinstance(b, SetT):
        unify(a.elem, b.elem, subst)
        return
    if isinstance(a, RelT) and isinstance(b, RelT):
        unify(a.dom, b.dom, subst)
        unify(a.cod, b.cod, subst)
        return
    raise TypeMismatch(f"cannot match {a!r} against {b!r}")


def resolve(t: Ty, subst: dict) -> Ty:
    """Substitute as deeply as possible; unresolved variables survive."""
    t = walk(t, subst)
    if isinstance(t, Sum):
        return Sum(resolve(t.left, subst), resolve(t.right, subst))
    if isinstance(t, Prod):
        return Prod(resolve(t.fst, subst), resolve(t.snd, subst))
    if isinstance(t, SetT):
        return SetT(resolve(t.elem, subst))
    if isinstance(t, RelT):
        return RelT(resolve(t.dom, subst), resolve(t.cod, subst))
    return t


def is_ground(t: Ty) -> bool:
    if isinstance(t, TVar):
        return False
    if isinstance(t, Sum):
        return is_ground(t.left) and is_ground(t.right)
    if isinstance(t, Prod):
        return is_ground(t.fst) and is_ground(t.snd)
    if isinstance(t, SetT):
        return is_ground(t.elem)
    if isinstance(t, RelT):
        return is_ground(t.dom) and is_ground(t.cod)
    return True


def contains_set_or_rel(t: Ty) -> bool:
    """True if a set or relation type occurs anywhere in t."""
    if isinstance(t, (SetT, RelT)):
        return True
    if isinstance(t, Sum):
        return contains_set_or_rel(t.left) or contains_set_or_rel(t.right)
    if isinstance(t, Prod):
        return contains_set_or_rel(t.fst) or contains_set_or_rel(t.snd)
    return False
