"""Finite base types, observable values, and exclusive-union sets.

The type grammar is ``0 | 1 | bool | b + b | b * b | S b | b R b``.  Every
type built without ``R`` has a computable finite cardinality and a canonical
enumeration of its values; that enumeration order is the single convention
that keeps sets, bit vectors, and matrices aligned across the package.

Enumeration order:

* ``()`` is the only value of ``1``;
* ``F`` comes before ``T``;
* every ``L v`` comes before every ``R v`` (recursively ordered);
* pairs are lexicographic with the first component major;
* subsets of ``b`` follow a binary counter over the characteristic bits,
  with the first value of ``b`` as the least significant bit
  (so ``S bool`` enumerates as  {}, {F}, {T}, {F, T}).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .errors import IllTypedValue, NotEnumerable, TypeMismatch

# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class Zero:
    def __repr__(self) -> str:
        return "0"


@dataclass(frozen=True)
class One:
    def __repr__(self) -> str:
        return "1"


@dataclass(frozen=True)
class Bool:
    def __repr__(self) -> str:
        return "bool"


@dataclass(frozen=True)
class Sum:
    left: "BaseType"
    right: "BaseType"

    def __repr__(self) -> str:
        return f"({self.left!r} + {self.right!r})"


@dataclass(frozen=True)
class Prod:
    fst: "BaseType"
    snd: "BaseType"

    def __repr__(self) -> str:
        return f"({self.fst!r} * {self.snd!r})"


@dataclass(frozen=True)
class SetT:
    elem: "BaseType"

    def __repr__(self) -> str:
        return f"(S {self.elem!r})"


@dataclass(frozen=True)
class RelT:
    dom: "BaseType"
    cod: "BaseType"

    def __repr__(self) -> str:
        return f"({self.dom!r} R {self.cod!r})"


BaseType = Union[Zero, One, Bool, Sum, Prod, SetT, RelT]

ZERO = Zero()
ONE = One()
BOOL = Bool()


def is_enumerable(b: BaseType) -> bool:
    """True when b contains no relation type (so its values can be listed)."""
    if isinstance(b, (Zero, One, Bool)):
        return True
    if isinstance(b, Sum):
        return is_enumerable(b.left) and is_enumerable(b.right)
    if isinstance(b, Prod):
        return is_enumerable(b.fst) and is_enumerable(b.snd)
    if isinstance(b, SetT):
        return is_enumerable(b.elem)
    return False


@lru_cache(maxsize=None)
def cardinality(b: BaseType) -> int:
    if isinstance(b, Zero):
        return 0
    if isinstance(b, One):
        return 1
    if isinstance(b, Bool):
        return 2
    if isinstance(b, Sum):
        return cardinality(b.left) + cardinality(b.right)
    if isinstance(b, Prod):
        return cardinality(b.fst) * cardinality(b.snd)
    if isinstance(b, SetT):
        return 2 ** cardinality(b.elem)
    raise NotEnumerable(f"no finite enumeration for {b!r}")


# ---------------------------------------------------------------------------
# Values


@dataclass(frozen=True)
class UnitV:
    def __repr__(self) -> str:
        return "()"


@dataclass(frozen=True)
class BoolV:
    value: bool

    def __repr__(self) -> str:
        return "T" if self.value else "F"


@dataclass(frozen=True)
class Left:
    value: "PiValue"

    def __repr__(self) -> str:
        return f"L {self.value!r}"


@dataclass(frozen=True)
class Right:
    value: "PiValue"

    def __repr__(self) -> str:
        return f"R {self.value!r}"


@dataclass(frozen=True)
class PairV:
    fst: "PiValue"
    snd: "PiValue"

    def __repr__(self) -> str:
        return f"({self.fst!r}, {self.snd!r})"


@dataclass(frozen=True)
class SetV:
    elems: "XorSet"

    def __repr__(self) -> str:
        return repr(self.elems)


PiValue = Union[UnitV, BoolV, Left, Right, PairV, SetV]

UNIT = UnitV()
TRUE = BoolV(True)
FALSE = BoolV(False)


def value_sort_key(v: PiValue):
    """Structural key realizing the canonical enumeration order.

    Only meaningful for comparing values of one common type; set values
    carry their own element type, so no outer type argument is needed.
    """
    if isinstance(v, UnitV):
        return (0,)
    if isinstance(v, BoolV):
        return (int(v.value),)
    if isinstance(v, Left):
        return (0, value_sort_key(v.value))
    if isinstance(v, Right):
        return (1, value_sort_key(v.value))
    if isinstance(v, PairV):
        return (value_sort_key(v.fst), value_sort_key(v.snd))
    if isinstance(v, SetV):
        return (value_index(SetT(v.elems.elem_type), v),)
    raise IllTypedValue(f"not a value: {v!r}")


# ---------------------------------------------------------------------------
# Canonical exclusive-union sets


@dataclass(frozen=True)
class XorSet:
    """A finite set of same-typed values in canonical form.

    Canonical means: no duplicates and elements sorted ascending in the
    enumeration order of ``elem_type``.  Construction through :meth:`of`
    resolves parity, so listing an element twice cancels it.
    """

    elem_type: BaseType
    elems: tuple[PiValue, ...] = ()

    def __post_init__(self) -> None:
        if not is_enumerable(self.elem_type):
            raise NotEnumerable(f"sets over {self.elem_type!r} are not supported")
        previous = None
        for v in self.elems:
            if not value_inhabits(v, self.elem_type):
                raise IllTypedValue(f"{v!r} does not inhabit {self.elem_type!r}")
            key = value_sort_key(v)
            if previous is not None and key <= previous:
                raise IllTypedValue("set elements must be strictly ascending")
            previous = key

    @classmethod
    def of(cls, elem_type: BaseType, values: Iterable[PiValue] = ()) -> "XorSet":
        """Build the canonical set, cancelling values that occur evenly."""
        counts = Counter(values)
        kept = [v for v, n in counts.items() if n % 2 == 1]
        kept.sort(key=value_sort_key)
        return cls(elem_type, tuple(kept))

    @classmethod
    def empty(cls, elem_type: BaseType) -> "XorSet":
        return cls(elem_type, ())

    def __iter__(self) -> Iterator[PiValue]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, v: PiValue) -> bool:
        return v in self.elems

    def __repr__(self) -> str:
        inner = ", ".join(repr(v) for v in self.elems)
        return "{" + inner + "}"


def xor_union(s1: XorSet, s2: XorSet) -> XorSet:
    """Symmetric difference; the only way sets combine in this package."""
    if s1.elem_type != s2.elem_type:
        raise TypeMismatch(
            f"cannot combine sets over {s1.elem_type!r} and {s2.elem_type!r}"
        )
    return XorSet.of(s1.elem_type, s1.elems + s2.elems)


# ---------------------------------------------------------------------------
# Enumeration


def value_inhabits(v: PiValue, b: BaseType) -> bool:
    if isinstance(b, One):
        return isinstance(v, UnitV)
    if isinstance(b, Bool):
        return isinstance(v, BoolV)
    if isinstance(b, Sum):
        if isinstance(v, Left):
            return value_inhabits(v.value, b.left)
        if isinstance(v, Right):
            return value_inhabits(v.value, b.right)
        return False
    if isinstance(b, Prod):
        return (
            isinstance(v, PairV)
            and value_inhabits(v.fst, b.fst)
            and value_inhabits(v.snd, b.snd)
        )
    if isinstance(b, SetT):
        return isinstance(v, SetV) and v.elems.elem_type == b.elem
    return False


def value_index(b: BaseType, v: PiValue) -> int:
    """Rank of v inside the enumeration of b (the bit position it owns)."""
    if isinstance(b, One) and isinstance(v, UnitV):
        return 0
    if isinstance(b, Bool) and isinstance(v, BoolV):
        return int(v.value)
    if isinstance(b, Sum):
        if isinstance(v, Left):
            return value_index(b.left, v.value)
        if isinstance(v, Right):
            return cardinality(b.left) + value_index(b.right, v.value)
    if isinstance(b, Prod) and isinstance(v, PairV):
        return value_index(b.fst, v.fst) * cardinality(b.snd) + value_index(
            b.snd, v.snd
        )
    if isinstance(b, SetT) and isinstance(v, SetV):
        if v.elems.elem_type != b.elem:
            raise IllTypedValue(f"{v!r} is not a set over {b.elem!r}")
        return sum(1 << value_index(b.elem, e) for e in v.elems)
    raise IllTypedValue(f"{v!r} does not inhabit {b!r}")


def value_at(b: BaseType, i: int) -> PiValue:
    """Inverse of value_index: the i-th value of b."""
    n = cardinality(b)
    if not 0 <= i < n:
        raise IllTypedValue(f"index {i} out of range for {b!r}")
    if isinstance(b, One):
        return UNIT
    if isinstance(b, Bool):
        return TRUE if i else FALSE
    if isinstance(b, Sum):
        split = cardinality(b.left)
        if i < split:
            return Left(value_at(b.left, i))
        return Right(value_at(b.right, i - split))
    if isinstance(b, Prod):
        hi, lo = divmod(i, cardinality(b.snd))
        return PairV(value_at(b.fst, hi), value_at(b.snd, lo))
    if isinstance(b, SetT):
        members = tuple(
            value_at(b.elem, j) for j in range(cardinality(b.elem)) if (i >> j) & 1
        )
        return SetV(XorSet(b.elem, members))
    raise NotEnumerable(f"no finite enumeration for {b!r}")


@lru_cache(maxsize=None)
def enumerate_values(b: BaseType) -> tuple[PiValue, ...]:
    """All values of b in canonical order; length equals cardinality(b)."""
    if isinstance(b, Zero):
        return ()
    if isinstance(b, One):
        return (UNIT,)
    if isinstance(b, Bool):
        return (FALSE, TRUE)
    if isinstance(b, Sum):
        return tuple(Left(v) for v in enumerate_values(b.left)) + tuple(
            Right(v) for v in enumerate_values(b.right)
        )
    if isinstance(b, Prod):
        return tuple(
            PairV(x, y)
            for x in enumerate_values(b.fst)
            for y in enumerate_values(b.snd)
        )
    if isinstance(b, SetT):
        base = enumerate_values(b.elem)
        return tuple(
            SetV(XorSet(b.elem, tuple(v for j, v in enumerate(base) if (i >> j) & 1)))
            for i in range(1 << len(base))
        )
    raise NotEnumerable(f"no finite enumeration for {b!r}")


@lru_cache(maxsize=None)
def value_ranks(b: BaseType) -> dict:
    """Value-to-index lookup table over the enumeration of b."""
    return {v: i for i, v in enumerate(enumerate_values(b))}
