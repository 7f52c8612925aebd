"""Program driver: evaluate a main relation and report the results.

The driver runs the main relation on its input set in one of three
modes: ``rel`` applies the evaluator, ``vec`` pushes the bit vector
through the denotation matrices, and ``both`` does the two in lockstep
and insists they agree after every top-level sequencing step (the
executable form of the soundness statement relating the two readings).

Quantum checks are active when a measurement directive is present or the
invertibility gate is requested: each step must then denote a square
invertible matrix (when gated) and the final state must not be the empty
set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import NotInvertible, RpiError, UnknownName, ZeroVector
from .gf2 import Gf2Mat, Gf2Vec, denote_rel, is_invertible, mat_apply, mat_str, vec_of_set, vec_str
from .measure import DualBasis, MeasurementOutcome, measure
from .parser import MainDecl, SourceProgram
from .printer import value_str
from .rel import RelExpr, SeqR, XorSet, apply_rel_set, type_check_rel
from .types import cardinality

__all__ = ["RunConfig", "RunReport", "run", "flatten_steps"]

MODES = ("rel", "vec", "both")


@dataclass(frozen=True)
class RunConfig:
    mode: str = "both"
    seed: int = 0
    require_invertible: bool = False
    show_matrix: bool = False
    union_mode: str = "prolog"  # used by the logic driver, kept for symmetry


@dataclass
class RunReport:
    result: XorSet
    vector: Optional[Gf2Vec] = None
    matrix: Optional[Gf2Mat] = None
    outcome: Optional[MeasurementOutcome] = None

    def text(self) -> str:
        lines = ["{" + ", ".join(value_str(v) for v in self.result) + "}"]
        if self.vector is not None:
            lines.append(f"vector: {vec_str(self.vector)}")
        if self.matrix is not None:
            lines.append("matrix:")
            lines.append(mat_str(self.matrix))
        if self.outcome is not None:
            kind = "deterministic" if self.outcome.deterministic else "random"
            lines.append(f"outcome: {self.outcome.index} ({kind})")
        return "\n".join(lines)

    def json(self) -> str:
        payload: dict = {"result": [value_str(v) for v in self.result]}
        if self.vector is not None:
            payload["vector"] = vec_str(self.vector)
        if self.matrix is not None:
            payload["matrix"] = mat_str(self.matrix).split("\n")
        if self.outcome is not None:
            payload["outcome"] = {
                "index": self.outcome.index,
                "deterministic": self.outcome.deterministic,
            }
        return json.dumps(payload, indent=2)


def flatten_steps(r: RelExpr) -> list[RelExpr]:
    """The top-level sequencing spine of r, in application order."""
    if isinstance(r, SeqR):
        return flatten_steps(r.fst) + flatten_steps(r.snd)
    return [r]


def run(config: RunConfig, program: SourceProgram) -> RunReport:
    if config.mode not in MODES:
        raise ValueError(f"unknown mode {config.mode!r}; pick one of {MODES}")
    if program.main is None:
        raise UnknownName("the program has no main declaration")
    main: MainDecl = program.main
    steps = flatten_steps(main.rel)
    quantum = config.require_invertible or main.duals is not None

    current_set = main.input
    current_vec = vec_of_set(main.input)
    dom = main.input.elem_type
    for i, step in enumerate(steps):
        rt = type_check_rel(step, dom=dom)
        if config.require_invertible:
            if cardinality(rt.dom) != cardinality(rt.cod):
                raise NotInvertible(
                    f"step {i} is not square: {rt!r} cannot be an evolution"
                )
            if not is_invertible(denote_rel(step, dom=rt.dom, cod=rt.cod)):
                raise NotInvertible(f"step {i} denotes a non-invertible matrix")
        if config.mode in ("rel", "both"):
            current_set = apply_rel_set(step, current_set)
        if config.mode in ("vec", "both"):
            m = denote_rel(step, dom=rt.dom, cod=rt.cod)
            current_vec = mat_apply(m, current_vec)
        if config.mode == "both" and vec_of_set(current_set) != current_vec:
            raise RpiError(
                f"evaluator and matrix semantics diverged at step {i}"
            )
        dom = rt.cod

    if config.mode == "vec":
        from .gf2 import set_of_vec

        current_set = set_of_vec(current_vec)

    if quantum and len(current_set) == 0:
        raise ZeroVector("the final state is the empty set")

    report = RunReport(result=current_set)
    if config.mode in ("vec", "both"):
        report.vector = vec_of_set(current_set)
    if config.show_matrix:
        report.matrix = denote_rel(main.rel, dom=main.input.elem_type)
    if main.duals is not None:
        report.outcome = measure(
            current_set, DualBasis(main.duals), seed=config.seed
        )
    return report
