"""The signed involution model of the symmetric group.

``pi · I_w = (-1)^{inv_w(pi)} I_{pi w pi^-1}`` on the span of the involutions
of S_n, graded by the number of 2-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, permutations, product

from gelfand import combinatorics as cb
from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep


def sn_act(pi: cb.Permutation, w: cb.Permutation) -> tuple[int, cb.Permutation]:
    """Return ``(sign, pi w pi^-1)``."""
    if len(pi) != len(w):
        raise ValueError("pi and w live in different symmetric groups")
    if not cb.is_involution(w):
        raise ValueError(f"{w} is not an involution")
    sgn = -1 if cb.inv_w(w, pi) % 2 else 1
    return sgn, cb.conjugate(pi, w)


@lru_cache(maxsize=None)
def sn_basis(n: int) -> tuple[cb.Permutation, ...]:
    return tuple(cb.enumerate_involutions_sn(n))


@lru_cache(maxsize=None)
def _basis_index(n: int) -> dict[cb.Permutation, int]:
    return {w: k for k, w in enumerate(sn_basis(n))}


def matrix_on_basis(pi: cb.Permutation, basis, index) -> ExactMatrix:
    cols = []
    for w in basis:
        sgn, target = sn_act(pi, w)
        cols.append({index[target]: sgn})
    return ExactMatrix(len(basis), len(basis), cols)


def sn_matrix(pi: cb.Permutation, n: int | None = None) -> ExactMatrix:
    """Signed permutation matrix of ``pi`` in the canonical involution basis."""
    n = len(pi) if n is None else n
    if len(pi) != n or not cb.is_permutation(pi):
        raise ValueError(f"{pi} is not a permutation of 1..{n}")
    return matrix_on_basis(pi, sn_basis(n), _basis_index(n))


def sn_model(n: int) -> ModelRep:
    basis = list(sn_basis(n))
    gens = {f"s{i}": sn_matrix(cb.simple_transposition(n, i)) for i in range(1, n)}
    return ModelRep(
        name="sn",
        n=n,
        basis=basis,
        generators=gens,
        grading=[cb.two_cycle_count(w) for w in basis],
    )


def _blocks(block_sizes: list[int]) -> list[range]:
    ends = list(accumulate(block_sizes))
    return [range(end - size + 1, end + 1) for size, end in zip(block_sizes, ends)]


def preserves_blocks(pi: cb.Permutation, block_sizes: list[int]) -> bool:
    return all(set(pi[x - 1] for x in blk) == set(blk) for blk in _blocks(block_sizes))


def young_subgroup(block_sizes: list[int]) -> list[cb.Permutation]:
    """All permutations of ``{1..N}`` that preserve the consecutive blocks."""
    parts = []
    for blk in _blocks(block_sizes):
        parts.append(list(permutations(blk)))
    return [tuple(x for piece in combo for x in piece) for combo in product(*parts)]


def young_involutions(block_sizes: list[int]) -> list[cb.Permutation]:
    n = sum(block_sizes)
    return [w for w in sn_basis(n) if preserves_blocks(w, block_sizes)]


@dataclass
class YoungModel(ModelRep):
    """Model of ``S_{n1} ⊕ ... ⊕ S_{nl}`` as block-preserving permutations."""

    block_sizes: list[int] = field(default_factory=list)

    def matrix(self, pi: cb.Permutation) -> ExactMatrix:
        if not preserves_blocks(pi, self.block_sizes):
            raise ValueError(f"{pi} does not preserve blocks {self.block_sizes}")
        return matrix_on_basis(pi, self.basis, self.index)


def sn_young_model(block_sizes: list[int], n: int | None = None) -> YoungModel:
    if any(b <= 0 for b in block_sizes):
        raise ValueError("block sizes must be positive")
    total = sum(block_sizes)
    if n is not None and n != total:
        raise ValueError(f"block sizes sum to {total}, expected {n}")
    basis = young_involutions(block_sizes)
    index = {w: k for k, w in enumerate(basis)}
    boundaries = set(accumulate(block_sizes))
    gens = {
        f"s{i}": matrix_on_basis(cb.simple_transposition(total, i), basis, index)
        for i in range(1, total)
        if i not in boundaries
    }
    return YoungModel(
        name="young",
        n=total,
        basis=basis,
        generators=gens,
        grading=[cb.two_cycle_count(w) for w in basis],
        block_sizes=list(block_sizes),
    )


def sn_character(n: int) -> dict[cb.Partition, int]:
    """Trace of the model on one representative per conjugacy class."""
    return {mu: sn_matrix(cb.class_representative(mu), n).trace() for mu in cb.integer_partitions(n)}


def sector_character(n: int, k: int) -> dict[cb.Partition, int]:
    """Character of the span of involutions with exactly ``k`` 2-cycles."""
    idx = [i for i, w in enumerate(sn_basis(n)) if cb.two_cycle_count(w) == k]
    out = {}
    for mu in cb.integer_partitions(n):
        m = sn_matrix(cb.class_representative(mu), n)
        out[mu] = sum(m[i, i] for i in idx)
    return out


def rs_shapes_by_sector(n: int) -> dict[int, set[cb.Partition]]:
    shapes: dict[int, set[cb.Partition]] = {}
    for w in sn_basis(n):
        p, _ = cb.rs_insert(w)
        shapes.setdefault(cb.two_cycle_count(w), set()).add(cb.tableau_shape(p))
    return shapes
