"""Certification: relation checks, character inner products, Gelfand verdicts."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence, Union

from gelfand import combinatorics as cb
from gelfand.linalg import ExactMatrix, commutant_dim, rref
from gelfand.scalars import q, scalar_to_json

__all__ = [
    "GelfandCertificate",
    "Relation",
    "RelationResult",
    "character_inner_products",
    "check_relation",
    "commutant_dim",
    "evaluate",
    "gelfand_certificate",
    "hecke_relations",
    "qrook_relations",
    "rref",
    "check_relations",
]

Word = Union[str, Sequence[str]]
Term = tuple[object, Word]
Expr = Union[Word, Sequence[Term]]


def parse_word(word: Word) -> tuple[str, ...]:
    """``"T1 T2*T1"`` or ``("T1", "T2", "T1")``; the empty word is the identity."""
    if isinstance(word, str):
        return tuple(tok for tok in word.replace("*", " ").split() if tok)
    if not all(isinstance(tok, str) for tok in word):
        raise ValueError(f"malformed word {word!r}")
    return tuple(word)


def _is_sum(expr) -> bool:
    if isinstance(expr, str):
        return False
    return any(isinstance(t, tuple) and len(t) == 2 and not isinstance(t[0], str) for t in expr)


def _terms(expr: Expr) -> list[tuple[object, tuple[str, ...]]]:
    if _is_sum(expr):
        out = []
        for t in expr:
            if not (isinstance(t, tuple) and len(t) == 2):
                raise ValueError(f"malformed term {t!r}")
            out.append((t[0], parse_word(t[1])))
        return out
    return [(1, parse_word(expr))]


def evaluate(mats: Mapping[str, ExactMatrix], expr: Expr, scalar=1) -> ExactMatrix:
    """Value of ``scalar * sum(c * word)``; words multiply left to right as written."""
    if not mats:
        raise ValueError("no generator matrices supplied")
    dim = next(iter(mats.values())).nrows
    total = ExactMatrix.zeros(dim)
    for coeff, word in _terms(expr):
        unknown = [g for g in word if g not in mats]
        if unknown:
            raise ValueError(f"malformed word: unknown generators {unknown}")
        prod = ExactMatrix.identity(dim)
        for g in word:
            prod = prod @ mats[g]
        total = total + prod.scale(coeff * scalar)
    return total


@dataclass
class RelationResult:
    name: str
    passed: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def check_relation(
    mats: Mapping[str, ExactMatrix],
    word_lhs: Expr,
    word_rhs: Expr,
    scalar_lhs=1,
    scalar_rhs=1,
    name: str = "",
) -> RelationResult:
    """Compare two evaluated expressions; a failure carries the first differing entry."""
    lhs = evaluate(mats, word_lhs, scalar_lhs)
    rhs = evaluate(mats, word_rhs, scalar_rhs)
    diff = lhs.first_difference(rhs)
    if diff is None:
        return RelationResult(name, True)
    r, c, a, b = diff
    return RelationResult(
        name, False, {"row": r, "col": c, "lhs": str(a), "rhs": str(b)}
    )


@dataclass
class Relation:
    name: str
    lhs: Expr
    rhs: Expr


def hecke_relations(n: int, prefix: str = "T") -> list[Relation]:
    """Quadratic, commuting and braid relations of H_n(q)."""
    rels = []
    for i in range(1, n):
        t = f"{prefix}{i}"
        rels.append(Relation(f"quadratic[{i}]", [(1, (t, t))], [(q - 1, (t,)), (q, ())]))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(f"commute[{i},{j}]", f"{prefix}{i} {prefix}{j}", f"{prefix}{j} {prefix}{i}"))
    for i in range(1, n - 1):
        rels.append(Relation(
                f"braid[{i}]",
                f"{prefix}{i} {prefix}{i + 1} {prefix}{i}",
                f"{prefix}{i + 1} {prefix}{i} {prefix}{i + 1}",
            ))
    return rels


def qrook_relations(n: int) -> list[Relation]:
    """The Hecke relations plus the ones involving the idempotents ``P_i``."""
    rels = hecke_relations(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            rels.append(Relation(f"TP=PT[{i},{j}]", f"T{i} P{j}", f"P{j} T{i}"))
            rels.append(Relation(f"PT=qP[{i},{j}]", f"P{j} T{i}", [(q, (f"P{j}",))]))
    for j in range(1, n):
        for i in range(j + 1, n):
            rels.append(Relation(f"TP=PT[{i},{j}]", f"T{i} P{j}", f"P{j} T{i}"))
    for i in range(1, n + 1):
        rels.append(Relation(f"idempotent[{i}]", f"P{i} P{i}", f"P{i}"))
    for i in range(1, n):
        rels.append(
            Relation(
                f"P-recursion[{i}]",
                f"P{i + 1}",
                [(1, (f"P{i}", f"T{i}", f"P{i}")), (1 - q, (f"P{i}",))],
            )
        )
    return rels


def check_relations(mats: Mapping[str, ExactMatrix], relations: Sequence[Relation]) -> list[RelationResult]:
    return [check_relation(mats, r.lhs, r.rhs, name=r.name) for r in relations]


def character_inner_products(model_char: Mapping[cb.Partition, object], n: int) -> dict[cb.Partition, Fraction]:
    """``<chi, chi^lambda>`` for every ``lambda |- n``; ``model_char`` is keyed by cycle type."""
    classes = list(cb.integer_partitions(n))
    missing = [mu for mu in classes if mu not in model_char]
    if missing:
        raise ValueError(f"class function is missing cycle types {missing}")
    order = factorial(n)
    out = {}
    for lam in classes:
        total = sum(cb.class_size(mu) * model_char[mu] * cb.mn_character(lam, mu) for mu in classes)
        out[lam] = Fraction(total, order)
    return out


@dataclass
class GelfandCertificate:
    model: str
    dimension: int
    commutant_dimension: int
    expected_simple_count: int
    expected_dimension: int | None = None
    character_inner_products: dict[cb.Partition, Fraction] | None = None
    q0: Fraction | None = None
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        ok = self.commutant_dimension == self.expected_simple_count
        if self.expected_dimension is not None:
            ok = ok and self.dimension == self.expected_dimension
        if self.character_inner_products is not None:
            ok = ok and all(v == 1 for v in self.character_inner_products.values())
        return "gelfand" if ok else "not gelfand"

    def as_dict(self) -> dict:
        ips = None
        if self.character_inner_products is not None:
            ips = {
                " ".join(map(str, lam)): scalar_to_json(v)
                for lam, v in self.character_inner_products.items()
            }
        return {
            "model": self.model,
            "dimension": self.dimension,
            "commutant_dimension": self.commutant_dimension,
            "expected_simple_count": self.expected_simple_count,
            "expected_dimension": self.expected_dimension,
            "character_inner_products": ips,
            "q0": None if self.q0 is None else scalar_to_json(self.q0),
            "verdict": self.verdict,
            **self.extra,
        }


def gelfand_certificate(
    model: str,
    mats: Sequence[ExactMatrix],
    expected_simple_count: int,
    expected_dimension: int | None = None,
    character: Mapping[cb.Partition, object] | None = None,
    n: int | None = None,
    q0: Fraction | None = None,
) -> GelfandCertificate:
    """Commutant dimension of ``mats`` (already specialized) against the expected counts."""
    dim = mats[0].nrows if mats else 0
    ips = character_inner_products(character, n) if character is not None and n is not None else None
    return GelfandCertificate(
        model=model,
        dimension=dim,
        commutant_dimension=commutant_dim(mats),
        expected_simple_count=expected_simple_count,
        expected_dimension=expected_dimension,
        character_inner_products=ips,
        q0=q0,
    )
