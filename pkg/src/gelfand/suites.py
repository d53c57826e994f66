"""Model construction by name and the verification suite behind ``verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from gelfand import combinatorics as cb
from gelfand import hecke as hk
from gelfand import qrook as qr
from gelfand import snmodel as sm
from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep
from gelfand.semigroup import adapters as ad
from gelfand.semigroup import engine as eng
from gelfand.verify import (
    character_inner_products,
    check_relations,
    gelfand_certificate,
    hecke_relations,
    qrook_relations,
)

MODELS = ("sn", "isn", "fstar", "hecke", "qrook")
BUILD_CAP = {"sn": 6, "hecke": 6, "isn": 4, "fstar": 4, "qrook": 4}
COMMUTANT_CAP = {"sn": 5, "hecke": 5, "isn": 3, "fstar": 3, "qrook": 3}
DEEP_COMMUTANT_CAP = {"qrook": 4}
RELATION_CAP = {"qrook": 4}
TABLE_SIZE_CAP = 256
TABLE_COMMUTANT_DIM_CAP = 40
SAMPLED_TRIPLES = 2000


class CapacityError(Exception):
    """The requested size exceeds the configured bound."""


@dataclass
class Options:
    model: str
    n: int | None = None
    q0: Fraction = Fraction(2)
    deep: bool = False
    seed: int = 0
    allow_large: bool = False
    variant: str = "ordered"


def model_kind(model: str) -> str:
    if model.startswith("table:"):
        return "table"
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    return model


def check_build_capacity(opts: Options) -> None:
    kind = model_kind(opts.model)
    if kind == "table":
        return
    if opts.n is None:
        raise ValueError(f"--n is required for model {kind}")
    if opts.n < 1:
        raise ValueError("n must be at least 1")
    if opts.n > BUILD_CAP[kind] and not opts.allow_large:
        raise CapacityError(
            f"n={opts.n} exceeds the build bound {BUILD_CAP[kind]} for {kind}; pass --allow-large to override"
        )
    if kind in ("hecke", "qrook") and opts.q0 == 0:
        raise ValueError("q0 must be nonzero for q-models")


# -- semigroup models -----------------------------------------------------------

@dataclass
class SemigroupBuild:
    adapter: eng.SemigroupAdapter
    cert: eng.TraceCertificate
    model: eng.SemigroupModel | None


def semigroup_adapter(opts: Options) -> eng.SemigroupAdapter:
    kind = model_kind(opts.model)
    if kind == "isn":
        return ad.isn_adapter(opts.n)
    if kind == "fstar":
        return ad.fstar_adapter(opts.n)
    adapter = ad.TableAdapter.from_path(opts.model.split(":", 1)[1])
    if len(adapter.semigroup) > TABLE_SIZE_CAP and not opts.allow_large:
        raise CapacityError(
            f"table has {len(adapter.semigroup)} elements, above the bound {TABLE_SIZE_CAP}"
        )
    return adapter


def build_semigroup(opts: Options) -> SemigroupBuild:
    adapter = semigroup_adapter(opts)
    S = adapter.semigroup
    cert = eng.trace_certificate(S, adapter=adapter)
    model = eng.semigroup_model_matrices(S, cert, adapter) if cert.ok else None
    return SemigroupBuild(adapter, cert, model)


def build_rep(opts: Options) -> ModelRep:
    """Build the model named in ``opts``; semigroups raise HypothesisError on failure."""
    check_build_capacity(opts)
    kind = model_kind(opts.model)
    if kind == "sn":
        return sm.sn_model(opts.n)
    if kind == "hecke":
        return hk.hecke_matrices(opts.n, opts.variant)
    if kind == "qrook":
        return qr.qrook_matrices(opts.n, opts.variant)
    built = build_semigroup(opts)
    if built.model is None:
        raise eng.HypothesisError("; ".join(built.cert.failures))
    return built.model.rep


# -- reports ----------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool | None
    detail: object = None
    required: bool = True

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": _status(self.passed), "required": self.required}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _status(passed: bool | None) -> str:
    return "skipped" if passed is None else ("pass" if passed else "fail")


@dataclass
class SuiteReport:
    model: str
    n: int | None
    checks: list[Check] = field(default_factory=list)
    certificate: dict | None = None
    hypothesis_failures: list[str] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.hypothesis_failures:
            return 2
        return 1 if any(c.required and c.passed is False for c in self.checks) else 0

    def add(self, name: str, passed: bool | None, detail=None, required: bool = True) -> None:
        self.checks.append(Check(name, passed, detail, required))

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "model": self.model,
            "n": self.n,
            "status": ["pass", "verification_failure", "hypothesis_failure"][self.exit_code],
            "checks": [c.as_dict() for c in self.checks],
            "certificate": self.certificate,
        }
        if self.hypothesis_failures:
            out["hypothesis_failures"] = self.hypothesis_failures
        if timing:
            out["timing_seconds"] = {k: round(v, 4) for k, v in self.timing.items()}
        return out


class _Timer:
    def __init__(self, report: SuiteReport, name: str):
        self.report, self.name = report, name

    def __enter__(self):
        self.start = time.perf_counter()

    def __exit__(self, *exc):
        self.report.timing[self.name] = time.perf_counter() - self.start


def _commutant_allowed(opts: Options, kind: str) -> bool:
    cap = COMMUTANT_CAP[kind]
    if opts.deep:
        cap = DEEP_COMMUTANT_CAP.get(kind, cap)
    return opts.allow_large or opts.n <= cap


def _relation_report(report: SuiteReport, rep: ModelRep, relations) -> None:
    results = check_relations(rep.generators, relations)
    failures = [r.as_dict() for r in results if not r.passed]
    report.add("relations", not failures, {"checked": len(results), "failures": failures[:10]})


def _grading_check(report: SuiteReport, rep: ModelRep) -> None:
    bad = [name for name, m in rep.generators.items() if not rep.preserves_grading(m)]
    report.add("grading preserved", not bad, {"violations": bad} if bad else None)


# -- suites -----------------------------------------------------------------------

def verify_sn(opts: Options) -> SuiteReport:
    n = opts.n
    report = SuiteReport("sn", n)
    rep = sm.sn_model(n)
    elements = cb.all_permutations(n)
    with _Timer(report, "homomorphism"):
        mats = {pi: sm.sn_matrix(pi) for pi in elements}
        if n <= 4 or opts.deep:
            pairs = list(product(elements, elements))
        else:
            gens = [cb.simple_transposition(n, i) for i in range(1, n)]
            pairs = list(product(gens, elements))
        bad = [
            (list(a), list(b))
            for a, b in pairs
            if mats[a] @ mats[b] != mats[cb.compose(a, b)]
        ]
        report.add("homomorphism", not bad, {"pairs": len(pairs), "failures": bad[:5]})
    _grading_check(report, rep)
    with _Timer(report, "characters"):
        char = sm.sn_character(n)
        ips = {}
        for k in sorted(set(rep.grading)):
            sector_shapes = sm.rs_shapes_by_sector(n)[k]
            sector = sm.sector_character(n, k)
            expected = {mu: sum(cb.mn_character(lam, mu) for lam in sector_shapes) for mu in sector}
            ips[k] = sector == expected
        report.add("sector characters match RS shapes", all(ips.values()))
        dim_ok = rep.dim == sum(cb.syt_count(lam) for lam in cb.integer_partitions(n))
        report.add("dimension equals sum of f^lambda", dim_ok, {"dimension": rep.dim})
    with _Timer(report, "certificate"):
        if _commutant_allowed(opts, "sn"):
            cert = gelfand_certificate(
                "sn",
                [m.map(Fraction) for m in rep.generators.values()] or [rep_identity(rep)],
                cb.partition_count(n),
                cb.involution_count(n),
                character=char,
                n=n,
            )
            report.certificate = cert.as_dict()
            report.add("gelfand certificate", cert.verdict == "gelfand")
        else:
            report.add("gelfand certificate", None, "commutant above the size bound")
    return report


def verify_hecke(opts: Options) -> SuiteReport:
    n = opts.n
    report = SuiteReport("hecke", n)
    rep = hk.hecke_matrices(n, opts.variant)
    with _Timer(report, "relations"):
        _relation_report(report, rep, hecke_relations(n))
    blocks_ok = all(hk.block_types(m) is not None for m in rep.generators.values())
    report.add("block types", blocks_ok)
    _grading_check(report, rep)
    sn = sm.sn_model(n)
    at_one = all(
        rep.generators[f"T{i}"].specialize(Fraction(1)) == sn.generators[f"s{i}"].map(Fraction)
        for i in range(1, n)
    )
    report.add("q=1 equals sn model", at_one)
    report.add("dimension", rep.dim == cb.involution_count(n), {"dimension": rep.dim})
    with _Timer(report, "certificate"):
        if _commutant_allowed(opts, "hecke"):
            mats = [m.specialize(opts.q0) for m in rep.generators.values()]
            cert = gelfand_certificate(
                "hecke", mats or [rep_identity(rep)], cb.partition_count(n), cb.involution_count(n), q0=opts.q0
            )
            report.certificate = cert.as_dict()
            report.add("gelfand certificate", cert.verdict == "gelfand")
        else:
            report.add("gelfand certificate", None, "commutant above the size bound")
    return report


def rep_identity(rep: ModelRep) -> ExactMatrix:
    return ExactMatrix.identity(rep.dim, Fraction(1))


def qrook_expected_dimension(n: int) -> int:
    return sum(comb(n, k) * cb.involution_count(k) for k in range(n + 1))


def qrook_simple_count(n: int) -> int:
    return sum(cb.partition_count(k) for k in range(n + 1))


def verify_qrook(opts: Options) -> SuiteReport:
    n = opts.n
    report = SuiteReport("qrook", n)
    rep = qr.qrook_matrices(n, opts.variant)
    with _Timer(report, "relations"):
        if n <= RELATION_CAP["qrook"] or opts.allow_large:
            _relation_report(report, rep, qrook_relations(n))
        else:
            report.add("relations", None, "above the size bound")
    _grading_check(report, rep)
    p_ok = all(
        all(set(col) <= {c} and all(v == 1 for v in col.values()) for c, col in enumerate(rep.generators[f"P{i}"].cols))
        for i in range(1, n + 1)
    )
    report.add("P_i diagonal 0/1", p_ok)
    report.add("sector dimensions are binomial multiples", qr.binomial_sector_check(rep))
    report.add(
        "top sectors match Hecke models",
        all(qr.hecke_sector_match(rep, k, hk.hecke_matrices(n - k, opts.variant)) for k in range(n)),
    )
    with _Timer(report, "case coverage"):
        coverage = qr.relation_case_coverage(rep)
        flat = {
            f"{family}:{case}": tally
            for family, cases in coverage.items()
            for case, tally in cases.items()
        }
        ok = all(t["failures"] == 0 for t in flat.values())
        report.add("proof cases", ok, {k: v for k, v in flat.items()})
    with _Timer(report, "conjugation lemma"):
        lemma = qr.conj_equivariance_check(n, opts.variant)
        report.add("lemma (a) on proof instances", lemma.part_a_proof_instances.ok)
        report.add("lemma (b) on proof instances", lemma.part_b_proof_instances.ok)
        report.add(
            "lemma (a) for all pi",
            lemma.part_a.ok,
            {"checked": lemma.part_a.checked, "failures": lemma.part_a.failures[:3]},
            required=False,
        )
        report.add(
            "lemma (b) for all j",
            lemma.part_b.ok,
            {"checked": lemma.part_b.checked, "failures": lemma.part_b.failures[:3]},
            required=False,
        )
    with _Timer(report, "q=1 comparison"):
        if n <= BUILD_CAP["isn"] or opts.allow_large:
            report.add("q=1 equals IS_n model", qrook_matches_semigroup(n, opts.variant))
        else:
            report.add("q=1 equals IS_n model", None, "above the size bound")
    report.add("dimension", rep.dim == qrook_expected_dimension(n), {"dimension": rep.dim})
    with _Timer(report, "certificate"):
        if _commutant_allowed(opts, "qrook"):
            mats = [m.specialize(opts.q0) for m in rep.generators.values()]
            cert = gelfand_certificate(
                "qrook", mats, qrook_simple_count(n), qrook_expected_dimension(n), q0=opts.q0
            )
            report.certificate = cert.as_dict()
            report.add("gelfand certificate", cert.verdict == "gelfand")
        else:
            report.add("gelfand certificate", None, "commutant above the size bound; use --deep for n=4")
    return report


def qrook_matches_semigroup(n: int, variant: str = "ordered") -> bool:
    """Every generator at q = 1 equals the IS_n model matrix of its semigroup image."""
    rep = qr.qrook_matrices(n, variant)
    adapter = ad.isn_adapter(n)
    S = adapter.semigroup
    model = eng.semigroup_model_matrices(S, eng.trace_certificate(S, adapter=adapter), adapter)
    if model.rep.basis != rep.basis:
        return False
    return all(
        rep.generators[name].specialize(Fraction(1)) == model.matrix(S.index[x]).map(Fraction)
        for name, x in qr.semigroup_images(n).items()
    )


def verify_semigroup(opts: Options) -> SuiteReport:
    kind = model_kind(opts.model)
    report = SuiteReport(opts.model, opts.n)
    with _Timer(report, "trace certificate"):
        built = build_semigroup(opts)
    cert, model = built.cert, built.model
    if model is None:
        report.hypothesis_failures = list(cert.failures)
        report.add("trace certificate", False, cert.failures[:10])
        return report
    report.add("trace certificate", True, {"regular D-classes": len(cert.dclasses)})
    S = model.S
    size = len(S)
    report.add("D equals J", cert.green.D == cert.green.J)
    with _Timer(report, "module axiom"):
        pairs = list(product(range(size), range(size)))
        checked, bad = eng.module_axiom_failures(model, pairs)
        report.add(
            "module axiom",
            not bad,
            {"pairs": checked, "failures": [[S.render(S.elements[x]), S.render(S.elements[y])] for x, y in bad]},
        )
    with _Timer(report, "cocycle"):
        basis = model.rep.meta["basis_indices"]
        total = size * size * len(basis)
        if total <= 50_000 or opts.deep:
            triples = product(range(size), range(size), basis)
            mode = "exhaustive"
        else:
            rng = random.Random(opts.seed)
            triples = [
                (rng.randrange(size), rng.randrange(size), rng.choice(basis))
                for _ in range(SAMPLED_TRIPLES)
            ]
            mode = f"sampled (seed {opts.seed})"
        stats = eng.cocycle_check(model, triples)
        ok = stats["sign_failures"] == stats["bar_failures"] == stats["zero_failures"] == 0
        report.add("sign cocycle and zero propagation", ok, {"mode": mode, **stats})
    expected_dim = eng.expected_dimension(cert)
    report.add("dimension", model.rep.dim == expected_dim, {"dimension": model.rep.dim, "expected": expected_dim})
    if kind == "isn":
        closed = qrook_expected_dimension(opts.n)
        report.add("dimension matches binomial formula", model.rep.dim == closed)
    with _Timer(report, "certificate"):
        if kind == "table":
            allowed = model.rep.dim <= TABLE_COMMUTANT_DIM_CAP or opts.allow_large
        else:
            allowed = _commutant_allowed(opts, kind)
        if allowed:
            mats = [m.map(Fraction) for m in model.matrices]
            gc = gelfand_certificate(opts.model, mats, eng.expected_simple_count(cert), expected_dim)
            report.certificate = gc.as_dict()
            report.add("gelfand certificate", gc.verdict == "gelfand")
        else:
            report.add("gelfand certificate", None, "commutant above the size bound")
    return report


def run_suite(opts: Options) -> SuiteReport:
    check_build_capacity(opts)
    kind = model_kind(opts.model)
    if kind == "sn":
        return verify_sn(opts)
    if kind == "hecke":
        return verify_hecke(opts)
    if kind == "qrook":
        return verify_qrook(opts)
    return verify_semigroup(opts)


# -- decomposition of the symmetric group model ------------------------------------

def decompose_sn(n: int) -> dict:
    shapes = sm.rs_shapes_by_sector(n)
    sectors = []
    for k in sorted(shapes):
        char = sm.sector_character(n, k)
        ips = character_inner_products(char, n)
        constituents = [lam for lam, v in ips.items() if v]
        sectors.append(
            {
                "k": k,
                "dimension": char[tuple([1] * n)] if n else 1,
                "character": {" ".join(map(str, mu)): v for mu, v in char.items()},
                "inner_products": {" ".join(map(str, lam)): str(v) for lam, v in ips.items()},
                "constituents": [list(lam) for lam in constituents],
                "rs_shapes": [list(lam) for lam in sorted(shapes[k], reverse=True)],
                "multiplicity_free": all(v in (0, 1) for v in ips.values()),
                "matches_rs_shapes": set(constituents) == shapes[k]
                and all(ips[lam] == 1 for lam in shapes[k]),
            }
        )
    return {"model": "sn", "n": n, "sectors": sectors}
