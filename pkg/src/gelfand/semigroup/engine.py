"""Finite semigroups, Green's relations, Brandt coordinates and the involution model.

Elements are addressed by index into ``FiniteSemigroup.elements`` and the
product ``x*y`` is ``table[x][y]``.  For semigroups of maps the adapters use
right-to-left composition, so ``x*e`` restricts ``x`` to the domain of ``e``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from gelfand import combinatorics as cb
from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep
from gelfand.snmodel import young_subgroup


class HypothesisError(Exception):
    """A semigroup does not satisfy the hypotheses of the model construction."""


@dataclass
class FiniteSemigroup:
    elements: list[Hashable]
    table: list[list[int]]
    name: str = "table"
    render: Callable[[Hashable], str] = str

    def __post_init__(self) -> None:
        size = len(self.elements)
        if len(self.table) != size or any(len(row) != size for row in self.table):
            raise ValueError("multiplication table must be size x size")
        if any(not 0 <= v < size for row in self.table for v in row):
            raise ValueError("multiplication table entry out of range")
        self.index = {x: i for i, x in enumerate(self.elements)}

    @classmethod
    def from_operation(
        cls,
        elements: Sequence[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        name: str,
        render: Callable[[Hashable], str] = str,
    ) -> FiniteSemigroup:
        index = {x: i for i, x in enumerate(elements)}
        table = [[index[op(x, y)] for y in elements] for x in elements]
        return cls(list(elements), table, name, render)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def mul_many(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    def idempotents(self) -> list[int]:
        return [x for x in range(len(self)) if self.table[x][x] == x]

    def identity(self) -> int | None:
        n = len(self)
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    def associativity_witness(
        self, sample: int | None = None, seed: int = 0
    ) -> tuple[int, int, int] | None:
        """A triple violating associativity, or None.

        Exhaustive unless ``sample`` is given, in which case that many random
        triples are drawn with ``seed``.
        """
        n = len(self)
        t = self.table
        if sample is None:
            triples: Iterable[tuple[int, int, int]] = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                return a, b, c
        return None


def _number_classes(keys: Sequence[Hashable]) -> list[int]:
    ids: dict[Hashable, int] = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


@dataclass
class GreenData:
    L: list[int]
    R: list[int]
    H: list[int]
    D: list[int]
    J: list[int]
    idempotents: list[int]
    left_ideals: list[frozenset[int]]
    right_ideals: list[frozenset[int]]
    ideals: list[frozenset[int]]

    def leq_J(self, x: int, y: int) -> bool:
        """``x ≤_J y``: the principal two-sided ideal of x sits inside that of y."""
        return self.ideals[x] <= self.ideals[y]

    def classes(self, relation: str) -> list[list[int]]:
        ids = getattr(self, relation)
        out: dict[int, list[int]] = {}
        for x, c in enumerate(ids):
            out.setdefault(c, []).append(x)
        return [out[c] for c in sorted(out)]


def green_relations(S: FiniteSemigroup) -> GreenData:
    """Green's relations from principal one-sided and two-sided ideals of S¹."""
    n = len(S)
    t = S.table
    left = [frozenset({x, *(t[s][x] for s in range(n))}) for x in range(n)]
    right = [frozenset({x, *t[x]}) for x in range(n)]
    ideals = [frozenset().union(*(right[y] for y in left[x])) for x in range(n)]

    L = _number_classes(left)
    R = _number_classes(right)
    H = _number_classes(list(zip(L, R)))
    J = _number_classes(ideals)

    # D = L ∘ R: join of the two partitions
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rel in (L, R):
        first: dict[int, int] = {}
        for x, c in enumerate(rel):
            if c in first:
                parent[find(x)] = find(first[c])
            else:
                first[c] = x
    D = _number_classes([find(x) for x in range(n)])
    return GreenData(L, R, H, D, J, S.idempotents(), left, right, ideals)


@dataclass
class GroupIso:
    """An explicit map from a maximal subgroup onto a Young subgroup."""

    block_sizes: list[int]
    mapping: dict[int, cb.Permutation]


class SemigroupAdapter:
    """Supplies the choices the construction leaves open.

    Subclasses fix the distinguished idempotent of each D-class, the group
    isomorphisms onto direct sums of symmetric groups and the basis order.
    """

    def __init__(self, semigroup: FiniteSemigroup):
        self.semigroup = semigroup

    def choose_idempotent(self, idempotents: list[int]) -> int:
        return min(idempotents)

    def group_iso(self, e: int, group: list[int]) -> GroupIso | None:
        if len(group) == 1:
            return GroupIso([], {e: ()})
        if len(group) == 2:
            (other,) = [g for g in group if g != e]
            return GroupIso([2], {e: (1, 2), other: (2, 1)})
        return None

    def choose_rho(self, f: int, candidates: list[int]) -> int:
        """Representative of ``R_f ∩ L_e``; the least one by default."""
        return min(candidates, key=self.basis_key)

    def basis_key(self, x: int):
        return x


@dataclass
class DClassData:
    members: list[int]
    idempotent: int
    inverse_trace: bool
    idempotent_order: list[int] = field(default_factory=list)
    inverses: dict[int, int] = field(default_factory=dict)
    rho: dict[int, int] = field(default_factory=dict)
    rho_inv: dict[int, int] = field(default_factory=dict)
    group: list[int] = field(default_factory=list)
    iso: GroupIso | None = None
    m: int = 0

    @property
    def block_sizes(self) -> list[int]:
        return self.iso.block_sizes if self.iso else []


@dataclass
class TraceCertificate:
    dclasses: list[DClassData]
    failures: list[str]
    dclass_of: dict[int, int]
    green: GreenData

    @property
    def ok(self) -> bool:
        return not self.failures


def _trace_inverses(S: FiniteSemigroup, members: set[int], x: int) -> list[int]:
    t = S.table
    out = []
    for y in members:
        xy, yx = t[x][y], t[y][x]
        if xy in members and yx in members and t[xy][x] == x and t[yx][y] == y:
            out.append(y)
    return out


def _verify_iso(S: FiniteSemigroup, group: list[int], iso: GroupIso) -> str | None:
    if set(iso.mapping) != set(group):
        return "isomorphism domain differs from the maximal subgroup"
    target = set(young_subgroup(iso.block_sizes))
    images = [iso.mapping[g] for g in group]
    if len(set(images)) != len(images) or set(images) != target:
        return f"map is not a bijection onto the Young subgroup {iso.block_sizes}"
    for g in group:
        for h in group:
            if iso.mapping[S.mul(g, h)] != cb.compose(iso.mapping[g], iso.mapping[h]):
                return f"map is not multiplicative at ({S.render(S.elements[g])}, {S.render(S.elements[h])})"
    return None


def trace_certificate(
    S: FiniteSemigroup, green: GreenData | None = None, adapter: SemigroupAdapter | None = None
) -> TraceCertificate:
    """Check both hypotheses on every regular D-class and record the coordinates.

    Hypotheses: the trace ``D_e ∪ {0}`` is an inverse semigroup, and the
    maximal subgroup ``G_e`` is isomorphic (via the adapter's map) to a
    direct sum of symmetric groups.
    """
    green = green or green_relations(S)
    adapter = adapter or SemigroupAdapter(S)
    idem = set(green.idempotents)
    failures: list[str] = []
    dclasses: list[DClassData] = []
    dclass_of: dict[int, int] = {}

    for members in green.classes("D"):
        es = [x for x in members if x in idem]
        if not es:
            continue  # non-regular: carries no involutions
        e = adapter.choose_idempotent(es)
        label = S.render(S.elements[e])
        mset = set(members)
        data = DClassData(members=members, idempotent=e, inverse_trace=True)

        for x in members:
            invs = _trace_inverses(S, mset, x)
            if len(invs) != 1:
                data.inverse_trace = False
                failures.append(
                    f"trace not inverse: in the D-class of {label}, element "
                    f"{S.render(S.elements[x])} has {len(invs)} inverses in the trace"
                )
                break
            data.inverses[x] = invs[0]

        data.group = [x for x in members if green.H[x] == green.H[e]]
        n_L = len({green.L[x] for x in members})
        n_R = len({green.R[x] for x in members})
        data.m = n_L

        if data.inverse_trace:
            if not (n_L == n_R == len(es)):
                failures.append(f"D-class of {label}: L/R/idempotent counts disagree")
            others = sorted((f for f in es if f != e), key=adapter.basis_key)
            data.idempotent_order = [e, *others]
            for f in data.idempotent_order:
                candidates = [x for x in members if green.R[x] == green.R[f] and green.L[x] == green.L[e]]
                rho = adapter.choose_rho(f, candidates)
                data.rho[f] = rho
                data.rho_inv[f] = data.inverses[rho]

        iso = adapter.group_iso(e, data.group)
        if iso is None:
            failures.append(
                f"D-class of {label}: no isomorphism supplied for a maximal subgroup of order {len(data.group)}"
            )
        else:
            problem = _verify_iso(S, data.group, iso)
            if problem:
                failures.append(f"D-class of {label}: {problem}")
            else:
                data.iso = iso

        for x in members:
            dclass_of[x] = len(dclasses)
        dclasses.append(data)

    return TraceCertificate(dclasses, failures, dclass_of, green)


@dataclass(frozen=True)
class BrandtCoord:
    """``(a, y, b)``: ``a`` indexes the R-class and ``b`` the L-class.

    With this orientation ``(a,y,b)(a',y',b') = (a, yy', b')`` exactly when
    ``b == a'``, matching the product in the trace.
    """

    a: int
    y: cb.Permutation
    b: int

    def __mul__(self, other: BrandtCoord) -> BrandtCoord | None:
        if self.b != other.a:
            return None
        return BrandtCoord(self.a, cb.compose(self.y, other.y), other.b)


class _Coordinates:
    """Brandt coordinatization of all regular D-classes of a certified semigroup."""

    def __init__(self, S: FiniteSemigroup, cert: TraceCertificate):
        if not cert.ok:
            raise HypothesisError("; ".join(cert.failures))
        self.S = S
        self.cert = cert
        self.position = []
        for data in cert.dclasses:
            self.position.append({f: k for k, f in enumerate(data.idempotent_order, start=1)})

    def data(self, x: int) -> DClassData | None:
        k = self.cert.dclass_of.get(x)
        return None if k is None else self.cert.dclasses[k]

    def same_dclass(self, x: int, y: int) -> bool:
        kx = self.cert.dclass_of.get(x)
        return kx is not None and kx == self.cert.dclass_of.get(y)

    def inverse(self, x: int) -> int:
        return self.data(x).inverses[x]

    def coords(self, x: int) -> BrandtCoord | None:
        data = self.data(x)
        if data is None:
            return None
        t = self.S.table
        xinv = data.inverses[x]
        left_idem, right_idem = t[x][xinv], t[xinv][x]
        g = t[t[data.rho_inv[left_idem]][x]][data.rho[right_idem]]
        pos = self.position[self.cert.dclass_of[x]]
        return BrandtCoord(pos[left_idem], data.iso.mapping[g], pos[right_idem])

    def bar(self, x: int) -> cb.Permutation:
        return self.coords(x).y


def brandt_coords(S: FiniteSemigroup, cert: TraceCertificate, x: int) -> BrandtCoord | None:
    return _Coordinates(S, cert).coords(x)


@dataclass
class SemigroupModel:
    rep: ModelRep
    S: FiniteSemigroup
    cert: TraceCertificate
    coordinates: _Coordinates
    involution_idempotent: dict[int, int]
    matrices: list[ExactMatrix]

    def act(self, x: int, w: int) -> tuple[int, int] | None:
        return semigroup_model_act(self.coordinates, self.involution_idempotent, x, w)

    def matrix(self, x: int) -> ExactMatrix:
        return self.matrices[x]


def involutions(S: FiniteSemigroup, cert: TraceCertificate) -> dict[int, int]:
    """Involutions ``w`` (``w ∈ G_e``, ``w² = e``) mapped to their idempotent ``e``."""
    green = cert.green
    out = {}
    for e in green.idempotents:
        if e not in cert.dclass_of:
            continue
        for w in range(len(S)):
            if green.H[w] == green.H[e] and S.mul(w, w) == e:
                out[w] = e
    return out


def semigroup_model_act(
    coords: _Coordinates, involution_idempotent: dict[int, int], x: int, w: int
) -> tuple[int, int] | None:
    """``x · I_w`` as ``(sign, index of the target involution)``, or None for zero."""
    if w not in involution_idempotent:
        raise ValueError(f"element {w} is not an involution of the semigroup")
    S = coords.S
    t = S.table
    e = involution_idempotent[w]
    xe = t[x][e]
    if not coords.same_dclass(xe, e):
        return None
    xe_inv = coords.inverse(xe)
    target = t[t[xe][w]][xe_inv]
    exponent = cb.inv_w(coords.bar(w), coords.bar(xe))
    return (-1 if exponent % 2 else 1), target


def semigroup_model_matrices(
    S: FiniteSemigroup, cert: TraceCertificate, adapter: SemigroupAdapter | None = None
) -> SemigroupModel:
    """One signed monomial matrix per element over the involution basis."""
    adapter = adapter or SemigroupAdapter(S)
    coords = _Coordinates(S, cert)
    inv_idem = involutions(S, cert)
    basis = sorted(inv_idem, key=adapter.basis_key)
    index = {w: k for k, w in enumerate(basis)}
    dim = len(basis)
    mats = []
    for x in range(len(S)):
        cols = []
        for w in basis:
            res = semigroup_model_act(coords, inv_idem, x, w)
            cols.append({} if res is None else {index[res[1]]: res[0]})
        mats.append(ExactMatrix(dim, dim, cols))
    rep = ModelRep(
        name=S.name,
        n=getattr(adapter, "n", len(S)),
        basis=[S.elements[w] for w in basis],
        generators={S.render(S.elements[x]): mats[x] for x in range(len(S))},
        grading=[cert.dclass_of[w] for w in basis],
    )
    rep.meta["basis_indices"] = basis
    return SemigroupModel(rep, S, cert, coords, inv_idem, mats)


def expected_simple_count(cert: TraceCertificate) -> int:
    """Number of simple modules: irreducibles of every ``G_{e_i}``."""
    return sum(_prod(cb.partition_count(b) for b in d.block_sizes) for d in cert.dclasses)


def expected_dimension(cert: TraceCertificate) -> int:
    """``sum_i m_i * (number of involutions of G_{e_i})``, from Young block sizes."""
    return sum(d.m * _prod(cb.involution_count(b) for b in d.block_sizes) for d in cert.dclasses)


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def module_axiom_failures(
    model: SemigroupModel, pairs: Iterable[tuple[int, int]], limit: int = 5
) -> tuple[int, list[tuple[int, int]]]:
    """Count checked pairs and collect up to ``limit`` pairs with M(x)M(y) != M(xy)."""
    t = model.S.table
    checked, bad = 0, []
    for x, y in pairs:
        checked += 1
        if model.matrices[x] @ model.matrices[y] != model.matrices[t[x][y]]:
            if len(bad) < limit:
                bad.append((x, y))
    return checked, bad


def cocycle_check(
    model: SemigroupModel, triples: Iterable[tuple[int, int, int]]
) -> dict[str, int]:
    """Check the sign identity and zero propagation on ``(x, y, w)`` triples.

    Whenever ``x·(y·I_w) != 0`` the exponents must satisfy
    ``inv_w(ye) + inv_{ye·w·ye^-1}(xf) ≡ inv_w(xye)  (mod 2)`` with bars taken
    in Brandt coordinates, and the bar of ``xye`` must equal
    ``bar(xf) bar(ye)``.  Whenever ``x·(y·I_w) = 0`` also ``(xy)·I_w = 0``.
    """
    S, coords, inv_idem = model.S, model.coordinates, model.involution_idempotent
    t = S.table
    stats = {"nonzero": 0, "sign_failures": 0, "bar_failures": 0, "zero": 0, "zero_failures": 0}
    for x, y, w in triples:
        e = inv_idem[w]
        first = semigroup_model_act(coords, inv_idem, y, w)
        second = None if first is None else semigroup_model_act(coords, inv_idem, x, first[1])
        if second is None:
            stats["zero"] += 1
            if semigroup_model_act(coords, inv_idem, t[x][y], w) is not None:
                stats["zero_failures"] += 1
            continue
        stats["nonzero"] += 1
        ye = t[y][e]
        f = t[ye][coords.inverse(ye)]
        xf, xye = t[x][f], t[t[x][y]][e]
        wbar, yebar, xfbar, xyebar = (coords.bar(z) for z in (w, ye, xf, xye))
        if xyebar != cb.compose(xfbar, yebar):
            stats["bar_failures"] += 1
        conj = cb.conjugate(yebar, wbar)
        lhs = cb.inv_w(wbar, yebar) + cb.inv_w(conj, xfbar)
        if (lhs - cb.inv_w(wbar, xyebar)) % 2:
            stats["sign_failures"] += 1
    return stats
