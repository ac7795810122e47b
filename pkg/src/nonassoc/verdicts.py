"""Pass/fail verdicts carrying concrete counterexamples.

A failing verdict always carries a witness; re-evaluating the checked
identity at the witness inputs must reproduce the inequality between
``lhs`` and ``rhs`` exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Witness:
    """Concrete counterexample: the inputs and the two unequal values.

    ``indices`` are basis indices when the check enumerated basis tuples,
    and ``()`` when the inputs were arbitrary elements (random sampling).
    """

    indices: tuple[int, ...]
    inputs: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("passing verdicts carry no witness")
        if not self.passed and self.witness is None:
            raise ValueError("failing verdicts must carry a witness")

    def __bool__(self) -> bool:
        return self.passed

    @staticmethod
    def ok() -> "Verdict":
        return Verdict(True)

    @staticmethod
    def fail(witness: Witness) -> "Verdict":
        return Verdict(False, witness)
