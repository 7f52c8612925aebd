"""Dual-basis measurement and the invertibility gate on evolution steps.

A measurement needs a family of dual vectors: pairing dual i with basis
vector j through the scalar overlap must give T exactly on the diagonal.
Measuring a state returns any dual whose overlap with it is T; when
several match, a seeded generator picks one so transcripts stay
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    NoOutcome,
    TypeMismatch,
    ZeroVector,
)
from .gf2 import denote_rel, is_invertible, rank, vec_of_set
from .rel import RelExpr, XorSet, dot, scalar_of, type_check_rel
from .types import BOOL, FALSE, TRUE, BaseType, cardinality

__all__ = [
    "DualBasis",
    "MeasurementOutcome",
    "check_dual",
    "dual_basis_for",
    "measure",
    "require_invertible",
    "X_BASIS",
    "Y_BASIS",
    "Z_BASIS",
]


def _common_type(sets: Sequence[XorSet]) -> BaseType:
    if not sets:
        raise TypeMismatch("a basis needs at least one vector")
    t = sets[0].elem_type
    for s in sets[1:]:
        if s.elem_type != t:
            raise TypeMismatch(f"mixed element types {t!r} and {s.elem_type!r}")
    return t


@dataclass(frozen=True)
class DualBasis:
    """Duals d_i, optionally paired with the basis s_i they were built for.

    Construction checks that the duals are linearly independent and, when
    the source basis is present, that overlaps are T exactly on the
    diagonal.
    """

    duals: tuple[XorSet, ...]
    source_basis: Optional[tuple[XorSet, ...]] = None

    def __post_init__(self) -> None:
        t = _common_type(self.duals)
        vecs = [vec_of_set(d).bits for d in self.duals]
        if rank(vecs, cardinality(t)) != len(vecs):
            raise TypeMismatch("dual vectors are linearly dependent")
        if self.source_basis is not None:
            if len(self.source_basis) != len(self.duals):
                raise TypeMismatch("basis and duals differ in length")
            if _common_type(self.source_basis) != t:
                raise TypeMismatch("basis and duals differ in element type")
            if not check_dual(self.source_basis, self.duals):
                raise TypeMismatch("overlaps are not T exactly on the diagonal")


@dataclass(frozen=True)
class MeasurementOutcome:
    index: int
    dual: XorSet
    deterministic: bool


def check_dual(basis: Sequence[XorSet], duals: Sequence[XorSet]) -> bool:
    """Does every dual pair to T with its own basis vector and F otherwise?"""
    if len(basis) != len(duals):
        raise TypeMismatch("basis and duals differ in length")
    _common_type(list(basis) + list(duals))
    for i, d in enumerate(duals):
        for j, s in enumerate(basis):
            if scalar_of(dot(d, s)) != (i == j):
                return False
    return True


def _nonzero_vectors(t: BaseType) -> list[XorSet]:
    from .gf2 import Gf2Vec, set_of_vec

    n = cardinality(t)
    return [set_of_vec(Gf2Vec(t, bits)) for bits in range(1, 1 << n)]


def dual_basis_for(basis: Sequence[XorSet]) -> DualBasis:
    """Find, by exhaustive search, the unique dual of each basis vector.

    Raises TypeMismatch when some dual does not exist or is not unique,
    which happens exactly when the given vectors do not form a basis.
    """
    basis = tuple(basis)
    t = _common_type(basis)
    candidates = _nonzero_vectors(t)
    duals = []
    for i in range(len(basis)):
        found = [
            d
            for d in candidates
            if all(scalar_of(dot(d, s)) == (i == j) for j, s in enumerate(basis))
        ]
        if len(found) != 1:
            raise TypeMismatch(
                f"basis vector {i} has {len(found)} candidate duals, expected 1"
            )
        duals.append(found[0])
    return DualBasis(tuple(duals), source_basis=basis)


def measure(s: XorSet, duals, seed: int = 0) -> MeasurementOutcome:
    """Measure s along a dual basis.

    All duals with overlap T can be observed; a single match is reported
    as deterministic and returned whatever the seed says.  The empty set
    is not a state and cannot be measured.
    """
    if not isinstance(duals, DualBasis):
        duals = DualBasis(tuple(duals))
    if len(s) == 0:
        raise ZeroVector("cannot measure the empty set")
    matches = [
        i for i, d in enumerate(duals.duals) if scalar_of(dot(d, s))
    ]
    if not matches:
        raise NoOutcome("no dual vector matches the state")
    if len(matches) == 1:
        i = matches[0]
        return MeasurementOutcome(i, duals.duals[i], True)
    i = random.Random(seed).choice(matches)
    return MeasurementOutcome(i, duals.duals[i], False)


def require_invertible(r: RelExpr, dom: Optional[BaseType] = None) -> bool:
    """Is r acceptable as an evolution step (square and invertible)?"""
    rt = type_check_rel(r, dom=dom)
    if cardinality(rt.dom) != cardinality(rt.cod):
        raise DimensionMismatch(
            f"evolution must be square, got {rt.dom!r} R {rt.cod!r}"
        )
    return is_invertible(denote_rel(r, dom=rt.dom, cod=rt.cod))


def _bools(*bits: bool) -> XorSet:
    return XorSet.of(BOOL, [TRUE if b else FALSE for b in bits])


# The three bases of the one-qubit space.  Only the first has its dual
# written down independently; the others go through dual_basis_for.
X_BASIS = (_bools(True), _bools(False, True))
Y_BASIS = (_bools(False, True), _bools(False))
Z_BASIS = (_bools(False), _bools(True))

X_DUAL = DualBasis((_bools(False, True), _bools(False)), source_basis=X_BASIS)
