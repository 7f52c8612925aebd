"""Dense bit vectors and matrices over the two-element field.

Rows are packed into Python ints, bit ``j`` of a row being column ``j``;
addition is xor and multiplication is ``and``.  The matrix denotation of a
relation expression lives here so the evaluator in :mod:`rel` can be
checked against an independent interpretation: column ``j`` carries the
image of the ``j``-th basis vector, i.e. entry ``(i, j)`` is T exactly
when the pair (j-th domain value, i-th codomain value) is in the relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .rel import (
    Arr,
    Eps,
    Eta,
    RelExpr,
    SeqR,
    Second,
    State,
    Strength,
    TypedRel,
    apply_rel_set,
    typed_rel,
)
from .pi import eval_comb
from .types import (
    BaseType,
    PairV,
    Prod,
    SetV,
    XorSet,
    cardinality,
    enumerate_values,
    value_at,
    value_index,
    value_ranks,
)

__all__ = [
    "Gf2Vec",
    "Gf2Mat",
    "vec_of_set",
    "set_of_vec",
    "identity",
    "mat_mul",
    "mat_apply",
    "kron",
    "transpose",
    "determinant",
    "is_invertible",
    "denote_rel",
    "soundness_check",
    "vec_str",
    "mat_str",
]


@dataclass(frozen=True)
class Gf2Vec:
    """A bit per value of ``type_index``, aligned with the enumeration."""

    type_index: BaseType
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> cardinality(self.type_index):
            raise DimensionMismatch(
                f"bit pattern {self.bits:#x} too wide for {self.type_index!r}"
            )

    def __len__(self) -> int:
        return cardinality(self.type_index)

    def bit(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)


@dataclass(frozen=True)
class Gf2Mat:
    """cardinality(cod) rows by cardinality(dom) columns, one int per row."""

    dom: BaseType
    cod: BaseType
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != cardinality(self.cod):
            raise DimensionMismatch(
                f"{len(self.rows)} rows for a codomain of {cardinality(self.cod)}"
            )
        width = cardinality(self.dom)
        for row in self.rows:
            if row < 0 or row >> width:
                raise DimensionMismatch(f"row {row:#x} too wide for {width} columns")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return cardinality(self.dom)

    def entry(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)


def vec_of_set(s: XorSet) -> Gf2Vec:
    ranks = value_ranks(s.elem_type)
    bits = 0
    for v in s:
        bits |= 1 << ranks[v]
    return Gf2Vec(s.elem_type, bits)


def set_of_vec(v: Gf2Vec) -> XorSet:
    elems = tuple(
        value_at(v.type_index, i) for i in range(len(v)) if v.bit(i)
    )
    return XorSet(v.type_index, elems)


def identity(b: BaseType) -> Gf2Mat:
    n = cardinality(b)
    return Gf2Mat(b, b, tuple(1 << i for i in range(n)))


def _parity(x: int) -> int:
    return x.bit_count() & 1


def mat_apply(m: Gf2Mat, v: Gf2Vec) -> Gf2Vec:
    if len(v) != m.n_cols:
        raise DimensionMismatch(f"{m.n_rows}x{m.n_cols} matrix on length-{len(v)} vector")
    bits = 0
    for i, row in enumerate(m.rows):
        bits |= _parity(row & v.bits) << i
    return Gf2Vec(m.cod, bits)


def _columns(m: Gf2Mat) -> list[int]:
    cols = [0] * m.n_cols
    for i, row in enumerate(m.rows):
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            cols[j] |= 1 << i
            rest &= rest - 1
    return cols


def mat_mul(a: Gf2Mat, b: Gf2Mat) -> Gf2Mat:
    """Standard product a.b; compatibility is checked on dimensions."""
    if a.n_cols != b.n_rows:
        raise DimensionMismatch(
            f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}"
        )
    bcols = _columns(b)
    rows = []
    for arow in a.rows:
        bits = 0
        for j, bcol in enumerate(bcols):
            bits |= _parity(arow & bcol) << j
        rows.append(bits)
    return Gf2Mat(b.dom, a.cod, tuple(rows))


def transpose(m: Gf2Mat) -> Gf2Mat:
    return Gf2Mat(m.cod, m.dom, tuple(_columns(m)))


def kron(a: Gf2Mat, b: Gf2Mat) -> Gf2Mat:
    """Tensor product with the first factor major, matching pair enumeration."""
    rows = []
    for arow in a.rows:
        for brow in b.rows:
            bits = 0
            for j in range(a.n_cols):
                if (arow >> j) & 1:
                    bits |= brow << (j * b.n_cols)
            rows.append(bits)
    return Gf2Mat(Prod(a.dom, b.dom), Prod(a.cod, b.cod), tuple(rows))


def determinant(m: Gf2Mat) -> bool:
    """Gaussian elimination; over this field the determinant is the rank test."""
    n = m.n_rows
    if n != m.n_cols:
        raise DimensionMismatch(f"determinant of a {m.n_rows}x{m.n_cols} matrix")
    work = list(m.rows)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            return False
        work[col], work[pivot] = work[pivot], work[col]
        for r in range(n):
            if r != col and ((work[r] >> col) & 1):
                work[r] ^= work[col]
    return True


def is_invertible(m: Gf2Mat) -> bool:
    return determinant(m)


def rank(rows: list[int], n_cols: int) -> int:
    """Row rank of a raw bit-row list."""
    work = rows[:]
    r = 0
    for col in range(n_cols):
        pivot = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


# ---------------------------------------------------------------------------
# Denotation


def _denote(node: TypedRel) -> Gf2Mat:
    r = node.expr
    if isinstance(r, Arr):
        ranks = value_ranks(node.cod)
        rows = [0] * cardinality(node.cod)
        for j, v in enumerate(enumerate_values(node.dom)):
            out = eval_comb(r.comb, v)
            rows[ranks[out]] |= 1 << j
        return Gf2Mat(node.dom, node.cod, tuple(rows))
    if isinstance(r, SeqR):
        m1 = _denote(node.kids[0])
        m2 = _denote(node.kids[1])
        return mat_mul(m2, m1)
    if isinstance(r, Second):
        assert isinstance(node.dom, Prod)
        return kron(identity(node.dom.fst), _denote(node.kids[0]))
    if isinstance(r, Strength):
        # Built straight from the enumeration, independently of the
        # evaluator: column (v, s) holds the basis vectors (v, x), x in s.
        assert isinstance(node.dom, Prod) and isinstance(node.cod, Prod)
        ranks = value_ranks(node.cod)
        rows = [0] * cardinality(node.cod)
        for j, pair in enumerate(enumerate_values(node.dom)):
            assert isinstance(pair, PairV) and isinstance(pair.snd, SetV)
            for x in pair.snd.elems:
                rows[ranks[PairV(pair.fst, x)]] |= 1 << j
        return Gf2Mat(node.dom, node.cod, tuple(rows))
    if isinstance(r, State):
        column = vec_of_set(r.set)
        return Gf2Mat(node.dom, node.cod, tuple(
            int(column.bit(i)) for i in range(len(column))
        ))
    if isinstance(r, Eta):
        ranks = value_ranks(node.cod)
        rows = [0] * cardinality(node.cod)
        for v in enumerate_values(r.elem):
            rows[ranks[PairV(v, v)]] = 1
        return Gf2Mat(node.dom, node.cod, tuple(rows))
    if isinstance(r, Eps):
        bits = 0
        for j, pair in enumerate(enumerate_values(node.dom)):
            assert isinstance(pair, PairV)
            if pair.fst == pair.snd:
                bits |= 1 << j
        return Gf2Mat(node.dom, node.cod, (bits,))
    raise AssertionError(r)


def denote_rel(
    r: RelExpr,
    dom: BaseType | None = None,
    cod: BaseType | None = None,
) -> Gf2Mat:
    """The matrix of r; dom/cod hints pin types the expression leaves open."""
    return _denote(typed_rel(r, dom, cod))


def soundness_check(r: RelExpr, s: XorSet) -> bool:
    """Evaluator output and matrix action agree on s."""
    direct = vec_of_set(apply_rel_set(r, s))
    via_matrix = mat_apply(denote_rel(r, dom=s.elem_type), vec_of_set(s))
    return direct == via_matrix


# ---------------------------------------------------------------------------
# Pretty printing


def vec_str(v: Gf2Vec) -> str:
    return " ".join("T" if v.bit(i) else "F" for i in range(len(v)))


def mat_str(m: Gf2Mat) -> str:
    return "\n".join(
        " ".join("T" if m.entry(i, j) else "F" for j in range(m.n_cols))
        for i in range(m.n_rows)
    )
