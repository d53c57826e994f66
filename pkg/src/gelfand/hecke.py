"""Involution model of the Hecke algebra H_n(q) over Z[q].

Generators ``T_i`` act on ``I_w`` (``w`` an involution of S_n) through the
pair ``{w, s_i w s_i}``.  With ``v = s_i w s_i``:

* ``i, i+1`` both fixed by ``w``:           ``q I_w``
* ``w(i) = i+1``:                            ``-I_w``
* otherwise rank ``i`` and ``i+1`` by ``w(i)``, ``w(i+1)`` with fixed
  points counting as infinity; if ``i`` comes first the result is ``I_v``,
  else ``q I_v + (q-1) I_w``.

When exactly one of ``i, i+1`` is moved this is the familiar rule (moved
``i`` gives ``I_v``, moved ``i+1`` gives ``q I_v + (q-1) I_w``).  The
``"support"`` variant sends every ``w`` with both ``i, i+1`` moved to
``-I_w``; it satisfies the defining relations but is not multiplicity-free
once ``n >= 4`` (see the tests), so it is kept for comparison only.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from gelfand import combinatorics as cb
from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep
from gelfand.scalars import QPoly, q
from gelfand.snmodel import sn_basis

Variant = Literal["ordered", "support"]
VARIANTS: tuple[str, ...] = ("ordered", "support")

Combination = dict[cb.Permutation, QPoly]

ONE = QPoly.const(1)
MINUS_ONE = QPoly.const(-1)
Q_MINUS_ONE = q - 1

_INF = float("inf")


def _key(w: cb.Permutation, x: int) -> float:
    y = w[x - 1]
    return _INF if y == x else y


def hecke_act(i: int, w: cb.Permutation, variant: Variant = "ordered") -> Combination:
    """``T_i · I_w`` as ``{involution: coefficient}`` with at most two terms."""
    n = len(w)
    if not 1 <= i < n:
        raise ValueError(f"T_{i} is not a generator of H_{n}(q)")
    if not cb.is_involution(w) or cb.UNDEFINED in w:
        raise ValueError(f"{w} is not an involution of S_{n}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    moved_i, moved_j = w[i - 1] != i, w[i] != i + 1
    if not moved_i and not moved_j:
        return {w: q}
    if w[i - 1] == i + 1 or (variant == "support" and moved_i and moved_j):
        return {w: MINUS_ONE}
    v = cb.conjugate(cb.simple_transposition(n, i), w)
    if _key(w, i) < _key(w, i + 1):
        return {v: ONE}
    return {v: q, w: Q_MINUS_ONE}


def combination_matrix(basis, index, act) -> ExactMatrix:
    cols = []
    for w in basis:
        cols.append({index[u]: c for u, c in act(w).items()})
    return ExactMatrix(len(basis), len(basis), cols)


@lru_cache(maxsize=None)
def hecke_matrices(n: int, variant: Variant = "ordered") -> ModelRep:
    if n < 1:
        raise ValueError("H_n(q) needs n >= 1")
    basis = list(sn_basis(n))
    index = {w: k for k, w in enumerate(basis)}
    gens = {
        f"T{i}": combination_matrix(basis, index, lambda w, i=i: hecke_act(i, w, variant))
        for i in range(1, n)
    }
    return ModelRep(
        name="hecke",
        n=n,
        basis=basis,
        generators=gens,
        grading=[cb.two_cycle_count(w) for w in basis],
        meta={"variant": variant},
    )


BLOCK_Q = "(q)"
BLOCK_MINUS = "(-1)"
BLOCK_PAIR = "[[0,q],[1,q-1]]"


def block_types(T: ExactMatrix) -> list[tuple[str, tuple[int, ...]]] | None:
    """Decompose ``T`` into its diagonal blocks, or None if a block is foreign.

    Two-dimensional blocks are reported with the basis index that is sent
    to the other one (coefficient 1) listed first.
    """
    seen: set[int] = set()
    blocks = []
    for c in range(T.ncols):
        if c in seen:
            continue
        col = T.cols[c]
        if col == {c: q}:
            blocks.append((BLOCK_Q, (c,)))
            seen.add(c)
            continue
        if col == {c: MINUS_ONE}:
            blocks.append((BLOCK_MINUS, (c,)))
            seen.add(c)
            continue
        partner = next((r for r in col if r != c), None)
        if partner is None:
            return None
        first, second = (c, partner) if col.get(c) is None else (partner, c)
        if T.cols[first] != {second: ONE} or T.cols[second] != {first: q, second: Q_MINUS_ONE}:
            return None
        blocks.append((BLOCK_PAIR, (first, second)))
        seen.update((first, second))
    return blocks
