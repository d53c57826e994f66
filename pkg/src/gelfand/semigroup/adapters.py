"""Concrete semigroups: the rook monoid, uniform block bijections, raw tables."""

from __future__ import annotations

import json
from itertools import permutations
from pathlib import Path
from typing import Iterable

from gelfand import combinatorics as cb
from gelfand.semigroup.engine import FiniteSemigroup, GroupIso, SemigroupAdapter


def _render_partial(x: cb.PartialInjection) -> str:
    return "[" + ",".join(map(str, x)) + "]"


class IsnAdapter(SemigroupAdapter):
    """IS_n with ``e_k`` = identity on ``{1..k}`` and ``G_{e_k} -> S_k`` by restriction.

    ``rho_f`` is the order-preserving bijection ``{1..k} -> dom f``, which makes
    the signs agree with the q-rook model at ``q = 1``.
    """

    def __init__(self, n: int):
        self.n = n
        elements = cb.enumerate_partial_injections(n)
        super().__init__(FiniteSemigroup.from_operation(elements, cb.compose, f"isn{n}", _render_partial))

    def choose_idempotent(self, idempotents: list[int]) -> int:
        S = self.semigroup
        k = cb.rank(S.elements[idempotents[0]])
        return S.index[cb.partial_identity(self.n, range(1, k + 1))]

    def group_iso(self, e: int, group: list[int]) -> GroupIso:
        S = self.semigroup
        k = cb.rank(S.elements[e])
        return GroupIso([k] if k else [], {g: tuple(S.elements[g][:k]) for g in group})

    def choose_rho(self, f: int, candidates: list[int]) -> int:
        S = self.semigroup
        for x in candidates:
            values = [y for y in S.elements[x] if y != cb.UNDEFINED]
            if values == sorted(values):
                return x
        return super().choose_rho(f, candidates)

    def basis_key(self, x: int):
        return cb.isn_involution_key(self.semigroup.elements[x])


def isn_adapter(n: int) -> IsnAdapter:
    return IsnAdapter(n)


# -- uniform block bijections ------------------------------------------------

Block = frozenset[int]
BlockBijection = tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _bb(pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> BlockBijection:
    """Canonical form: sorted tuple of (domain block, image block) pairs."""
    return tuple(sorted((tuple(sorted(a)), tuple(sorted(b))) for a, b in pairs))


def block_compose(x: BlockBijection, y: BlockBijection) -> BlockBijection:
    """``x∘y`` (``y`` first): glue image blocks of y to domain blocks of x."""
    nodes = [("y", k) for k in range(len(y))] + [("x", k) for k in range(len(x))]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for ky, (_, img) in enumerate(y):
        for kx, (dom, _) in enumerate(x):
            if set(img) & set(dom):
                parent[find(("y", ky))] = find(("x", kx))
    comps: dict[object, tuple[set[int], set[int]]] = {}
    for ky, (dom, _) in enumerate(y):
        comps.setdefault(find(("y", ky)), (set(), set()))[0].update(dom)
    for kx, (_, img) in enumerate(x):
        comps.setdefault(find(("x", kx)), (set(), set()))[1].update(img)
    return _bb(comps.values())


def block_type(partition: Iterable[Block]) -> cb.Partition:
    return tuple(sorted((len(b) for b in partition), reverse=True))


def uniform_block_bijections(n: int) -> list[BlockBijection]:
    parts = list(cb.set_partitions(n))
    out = []
    for p in parts:
        for q in parts:
            if block_type(p) != block_type(q):
                continue
            for image in permutations(q):
                if all(len(a) == len(b) for a, b in zip(p, image)):
                    out.append(_bb(zip(p, image)))
    return sorted(set(out))


def _render_block(x: BlockBijection) -> str:
    return " ".join(
        "{" + ",".join(map(str, a)) + "}->{" + ",".join(map(str, b)) + "}" for a, b in x
    )


def canonical_partition(lam: cb.Partition) -> list[tuple[int, ...]]:
    """Consecutive intervals with sizes ``lam`` (largest first)."""
    out, start = [], 1
    for part in lam:
        out.append(tuple(range(start, start + part)))
        start += part
    return out


class FstarAdapter(SemigroupAdapter):
    """F*_n: ``e_P`` for ``P`` the interval partition of each block type.

    The maximal subgroup at ``P`` permutes equal-size blocks, so it maps to
    ``prod_d S_{m_d}`` with ``m_d`` the number of blocks of size ``d``.
    """

    def __init__(self, n: int):
        self.n = n
        elements = uniform_block_bijections(n)
        super().__init__(FiniteSemigroup.from_operation(elements, block_compose, f"fstar{n}", _render_block))

    def choose_idempotent(self, idempotents: list[int]) -> int:
        S = self.semigroup
        lam = block_type(frozenset(a) for a, _ in S.elements[idempotents[0]])
        blocks = canonical_partition(lam)
        return S.index[_bb((b, b) for b in blocks)]

    def group_iso(self, e: int, group: list[int]) -> GroupIso:
        S = self.semigroup
        blocks = sorted((a for a, _ in S.elements[e]), key=lambda b: (-len(b), b))
        pos = {b: k for k, b in enumerate(blocks, start=1)}
        sizes: list[int] = []
        for b in blocks:
            if sizes and len(b) == len(blocks[sum(sizes) - 1]):
                sizes[-1] += 1
            else:
                sizes.append(1)
        mapping = {}
        for g in group:
            image_of = dict(S.elements[g])
            mapping[g] = tuple(pos[image_of[b]] for b in blocks)
        return GroupIso(sizes, mapping)

    def basis_key(self, x: int):
        w = self.semigroup.elements[x]
        return (block_type(frozenset(a) for a, _ in w), w)


def fstar_adapter(n: int) -> FstarAdapter:
    return FstarAdapter(n)


# -- user supplied multiplication tables -------------------------------------

class TableAdapter(SemigroupAdapter):
    """Semigroup read from ``{"size": N, "table": [row-major N*N indices]}``.

    An optional ``"groups"`` list supplies isomorphisms for maximal subgroups
    of order above 2: ``{"idempotent": e, "block_sizes": [...],
    "map": {"g": [one-line permutation], ...}}``.  The listed idempotent is
    then used for its D-class.
    """

    def __init__(self, data: dict, name: str = "table"):
        size = int(data["size"])
        flat = [int(v) for v in data["table"]]
        if len(flat) != size * size:
            raise ValueError(f"table has {len(flat)} entries, expected {size * size}")
        table = [flat[r * size:(r + 1) * size] for r in range(size)]
        super().__init__(FiniteSemigroup(list(range(size)), table, name))
        self.supplied: dict[int, GroupIso] = {}
        for g in data.get("groups", []):
            mapping = {int(k): tuple(v) for k, v in g["map"].items()}
            self.supplied[int(g["idempotent"])] = GroupIso(list(g["block_sizes"]), mapping)

    @classmethod
    def from_path(cls, path: str | Path) -> TableAdapter:
        path = Path(path)
        return cls(json.loads(path.read_text()), name=f"table:{path.name}")

    def choose_idempotent(self, idempotents: list[int]) -> int:
        chosen = [e for e in idempotents if e in self.supplied]
        return chosen[0] if chosen else min(idempotents)

    def group_iso(self, e: int, group: list[int]) -> GroupIso | None:
        if e in self.supplied:
            return self.supplied[e]
        return super().group_iso(e, group)


def left_zero_table(size: int = 2) -> dict:
    """The left-zero semigroup ``xy = x`` in table form."""
    return {"size": size, "table": [x for x in range(size) for _ in range(size)]}
