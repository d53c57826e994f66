from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

from gelfand.linalg import ExactMatrix


@dataclass
class ModelRep:
    """A basis of involutions together with named generator matrices.

    ``grading`` holds one integer per basis vector (the sector index); the
    ``generators`` dict preserves insertion order, which fixes export order.
    """

    name: str
    n: int
    basis: list[tuple[int, ...]]
    generators: dict[str, ExactMatrix]
    grading: list[int] = field(default_factory=list)
    meta: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.index: dict[Hashable, int] = {w: k for k, w in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def sector(self, k: int) -> list[int]:
        return [i for i, g in enumerate(self.grading) if g == k]

    def preserves_grading(self, m: ExactMatrix) -> bool:
        return all(self.grading[r] == self.grading[c] for r, c, _ in m.entries())
