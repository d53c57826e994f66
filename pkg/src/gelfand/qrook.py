"""Involution model of the q-rook monoid algebra I_n(q).

Basis: involutions ``w`` of IS_n (``dom w = im w``, ``w^2 = e_dom``), graded
by ``k = n - |dom w|``.  For partial maps ``s_i w s_i`` is conjugation, so
its domain is ``s_i(dom w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from gelfand import combinatorics as cb
from gelfand.hecke import ONE, Q_MINUS_ONE, Variant, combination_matrix, hecke_act
from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep
from gelfand.scalars import QPoly, q

Combination = dict[cb.PartialInjection, QPoly]


def psi_embed(A, w: cb.PartialInjection) -> cb.Permutation:
    """Extend ``w ∈ G(A)`` by the identity off ``A``."""
    a = frozenset(A)
    if cb.domain(w) != a or cb.image(w) != a:
        raise ValueError(f"{w} is not supported exactly on {sorted(a)}")
    return tuple(x if y == cb.UNDEFINED else y for x, y in enumerate(w, start=1))


def circ_act(i: int, w: cb.PartialInjection, variant: Variant = "ordered") -> Combination:
    """``T_i ∘ I_w``: the Hecke action pulled back through ``psi_dom(w)``."""
    dom = cb.domain(w)
    if i not in dom or i + 1 not in dom:
        raise ValueError(f"T_{i}∘ needs {i}, {i + 1} in dom {sorted(dom)}")
    if not cb.is_involution(w):
        raise ValueError(f"{w} is not an involution of IS_{len(w)}")
    total = hecke_act(i, psi_embed(dom, w), variant)
    return {cb.restrict(u, dom): c for u, c in total.items()}


def qrook_T_act(i: int, w: cb.PartialInjection, variant: Variant = "ordered") -> Combination:
    n = len(w)
    if not 1 <= i < n:
        raise ValueError(f"T_{i} is not a generator of I_{n}(q)")
    dom = cb.domain(w)
    has_i, has_j = i in dom, i + 1 in dom
    if has_i and has_j:
        return circ_act(i, w, variant)
    if not has_i and not has_j:
        return {w: q}
    v = cb.conjugate(cb.simple_transposition(n, i), w)
    if has_i:
        return {v: ONE}
    return {v: q, w: Q_MINUS_ONE}


def qrook_P_act(i: int, w: cb.PartialInjection) -> Combination:
    n = len(w)
    if not 1 <= i <= n:
        raise ValueError(f"P_{i} is not a generator of I_{n}(q)")
    return {w: ONE} if all(x > i for x in cb.domain(w)) else {}


def grade(w: cb.PartialInjection) -> int:
    return len(w) - cb.rank(w)


@lru_cache(maxsize=None)
def qrook_matrices(n: int, variant: Variant = "ordered") -> ModelRep:
    if n < 1:
        raise ValueError("I_n(q) needs n >= 1")
    basis = cb.enumerate_involutions_isn(n)
    index = {w: k for k, w in enumerate(basis)}
    gens: dict[str, ExactMatrix] = {}
    for i in range(1, n):
        gens[f"T{i}"] = combination_matrix(basis, index, lambda w, i=i: qrook_T_act(i, w, variant))
    for i in range(1, n + 1):
        gens[f"P{i}"] = combination_matrix(basis, index, lambda w, i=i: qrook_P_act(i, w))
    return ModelRep(
        name="qrook",
        n=n,
        basis=basis,
        generators=gens,
        grading=[grade(w) for w in basis],
        meta={"variant": variant},
    )


def semigroup_images(n: int) -> dict[str, cb.PartialInjection]:
    """Elements of IS_n matching the generators at q = 1: ``T_i -> s_i``, ``P_i -> e_{i+1..n}``."""
    out = {f"T{i}": cb.simple_transposition(n, i) for i in range(1, n)}
    out.update({f"P{i}": cb.partial_identity(n, range(i + 1, n + 1)) for i in range(1, n + 1)})
    return out


def top_sector_indices(model: ModelRep, k: int) -> list[int]:
    """Indices of the involutions with domain exactly ``{1..n-k}``."""
    target = frozenset(range(1, model.n - k + 1))
    return [idx for idx, w in enumerate(model.basis) if cb.domain(w) == target]


def sector_dimensions(model: ModelRep) -> dict[int, tuple[int, int]]:
    """``k -> (dim V^(k), dim of the span over domain {1..n-k})``."""
    return {
        k: (len(model.sector(k)), len(top_sector_indices(model, k)))
        for k in range(model.n + 1)
    }


def binomial_sector_check(model: ModelRep) -> bool:
    return all(full == comb(model.n, k) * top for k, (full, top) in sector_dimensions(model).items())


# -- conjugation equivariance of the ∘ action ---------------------------------

def conjugate_combination(pi: cb.Permutation, comb_: Combination) -> Combination:
    return {cb.conjugate(pi, u): c for u, c in comb_.items()}


@dataclass
class LemmaReport:
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **witness) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(witness)

    def as_dict(self) -> dict:
        return {"checked": self.checked, "passed": self.ok, "failures": self.failures}


@dataclass
class EquivarianceReport:
    part_a: LemmaReport
    part_b: LemmaReport
    part_a_proof_instances: LemmaReport
    part_b_proof_instances: LemmaReport

    @property
    def ok(self) -> bool:
        return self.part_a.ok and self.part_b.ok

    def as_dict(self) -> dict:
        return {
            "part_a": self.part_a.as_dict(),
            "part_b": self.part_b.as_dict(),
            "part_a_proof_instances": self.part_a_proof_instances.as_dict(),
            "part_b_proof_instances": self.part_b_proof_instances.as_dict(),
        }


def _fmt(c: Combination) -> dict[str, str]:
    return {str(list(u)): str(v) for u, v in sorted(c.items())}


def conj_equivariance_check(n: int, variant: Variant = "ordered") -> EquivarianceReport:
    """Check both conjugation identities for ``T_i∘`` exhaustively.

    (a) ``pi (T_i∘I_w) pi^-1 = T_{i+1}∘I_{pi w pi^-1}`` for every ``pi`` with
        ``pi(i) = i+1`` and ``pi(i+1) = i+2``;
    (b) ``s_j (T_i∘I_w) s_j = T_i∘I_{s_j w s_j}`` for ``|j - i| > 1``.

    The ``*_proof_instances`` reports restrict to the instances used when
    deriving the braid and commuting relations: ``pi = s_i s_{i+1}`` with
    ``i+2 ∉ dom w`` in (a), and exactly one of ``j, j+1`` in ``dom w`` in (b).
    """
    basis = cb.enumerate_involutions_isn(n)
    report = EquivarianceReport(LemmaReport(), LemmaReport(), LemmaReport(), LemmaReport())
    perms = cb.all_permutations(n)
    for i in range(1, n):
        candidates = [w for w in basis if i in cb.domain(w) and i + 1 in cb.domain(w)]
        if i + 2 <= n:
            s_i, s_next = cb.simple_transposition(n, i), cb.simple_transposition(n, i + 1)
            proof_pi = cb.compose(s_i, s_next)
            for pi in perms:
                if pi[i - 1] != i + 1 or pi[i] != i + 2:
                    continue
                for w in candidates:
                    lhs = conjugate_combination(pi, circ_act(i, w, variant))
                    rhs = circ_act(i + 1, cb.conjugate(pi, w), variant)
                    ok = lhs == rhs
                    witness = dict(i=i, pi=list(pi), w=list(w), lhs=_fmt(lhs), rhs=_fmt(rhs))
                    report.part_a.record(ok, **witness)
                    if pi == proof_pi and i + 2 not in cb.domain(w):
                        report.part_a_proof_instances.record(ok, **witness)
        for j in range(1, n):
            if abs(j - i) <= 1:
                continue
            s_j = cb.simple_transposition(n, j)
            for w in candidates:
                lhs = conjugate_combination(s_j, circ_act(i, w, variant))
                rhs = circ_act(i, cb.conjugate(s_j, w), variant)
                ok = lhs == rhs
                witness = dict(i=i, j=j, w=list(w), lhs=_fmt(lhs), rhs=_fmt(rhs))
                report.part_b.record(ok, **witness)
                if (j in cb.domain(w)) != (j + 1 in cb.domain(w)):
                    report.part_b_proof_instances.record(ok, **witness)
    return report


# -- the case analysis behind the braid and commuting relations ---------------

_BRAID_CASES = {
    (True, True, True): 1,
    (True, True, False): 2,
    (True, False, True): 3,
    (False, True, True): 4,
    (False, False, True): 5,
    (False, True, False): 6,
    (True, False, False): 7,
    (False, False, False): 8,
}


def braid_case(i: int, w: cb.PartialInjection) -> int:
    """Case number 1..8 from which of ``i, i+1, i+2`` lie in ``dom w``."""
    dom = cb.domain(w)
    return _BRAID_CASES[(i in dom, i + 1 in dom, i + 2 in dom)]


def commuting_case(i: int, j: int, w: cb.PartialInjection) -> int | None:
    """Case number 1..6 from ``i, i+1, j, j+1``; None for the trivial patterns."""
    dom = cb.domain(w)
    a, b, c, d = (x in dom for x in (i, i + 1, j, j + 1))
    if (not a and not b) or (not c and not d):
        return None
    if a and b and c and d:
        return 1
    if a and b:
        return 2 if c else 3
    if c and d:
        return 2 if a else 3
    if a and c:
        return 4
    if b and d:
        return 6
    return 5


def _apply(model: ModelRep, word: list[str], col: int) -> dict[int, object]:
    vec: dict[int, object] = {col: ONE}
    for name in reversed(word):
        m = model.generators[name]
        out: dict[int, object] = {}
        for k, v in vec.items():
            for r, a in m.cols[k].items():
                out[r] = out.get(r, 0) + a * v
        vec = {r: v for r, v in out.items() if v}
    return vec


def relation_case_coverage(model: ModelRep) -> dict[str, dict[int, dict[str, int]]]:
    """Check braid and commuting relations vector by vector, tallied per case."""
    n = model.n
    braid: dict[int, dict[str, int]] = {c: {"instances": 0, "failures": 0} for c in range(1, 9)}
    commuting: dict[int, dict[str, int]] = {c: {"instances": 0, "failures": 0} for c in range(1, 7)}
    for col, w in enumerate(model.basis):
        for i in range(1, n - 1):
            lhs = _apply(model, [f"T{i}", f"T{i + 1}", f"T{i}"], col)
            rhs = _apply(model, [f"T{i + 1}", f"T{i}", f"T{i + 1}"], col)
            tally = braid[braid_case(i, w)]
            tally["instances"] += 1
            tally["failures"] += lhs != rhs
        for i in range(1, n):
            for j in range(i + 2, n):
                case = commuting_case(i, j, w)
                if case is None:
                    continue
                lhs = _apply(model, [f"T{i}", f"T{j}"], col)
                rhs = _apply(model, [f"T{j}", f"T{i}"], col)
                commuting[case]["instances"] += 1
                commuting[case]["failures"] += lhs != rhs
    return {"braid": braid, "commuting": commuting}


def hecke_sector_match(model: ModelRep, k: int, hecke_model: ModelRep) -> bool:
    """Rows and columns over domain ``{1..n-k}`` reproduce the H_{n-k}(q) model."""
    idx = top_sector_indices(model, k)
    m = model.n - k
    truncated = [tuple(w[:m]) for w in (model.basis[t] for t in idx)]
    if truncated != list(hecke_model.basis):
        order = {w: t for t, w in zip(idx, truncated)}
        idx = [order[w] for w in hecke_model.basis]
    return all(
        model.generators[f"T{i}"].submatrix(idx, idx) == hecke_model.generators[f"T{i}"]
        for i in range(1, m)
    )

