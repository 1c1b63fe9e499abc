# symcoef/suites.py
"""
CLI の verify / scan から呼ぶ検証スイートと走査。
スイートは VerificationReport を返し、失敗があれば VerificationError を投げる。
走査は表として出力する行（dict）のリストを返す。
"""
from __future__ import annotations

import logging
import math
import random
from typing import Any, Callable, Dict, List

from . import conf
from .characters import character_table, column_orthogonality_holds, row_orthogonality_holds
from .dimensions import dim_irrep, naruse_lower_bound
from .exceptions import ArgumentError
from .extremal import (
    containment_scan,
    monotonicity_scan,
    stabilization_index,
    zeta_rho,
)
from .kronecker import (
    kron_asymptotic_gap,
    kron_sum_squares,
    kron_upper_bound_holds,
    kron_vector,
    kronecker,
    plancherel_triples_report,
    regev_family,
    saxl_scan,
    vanishing_predicates,
)
from .lr import (
    bicolored_count,
    hw_coefficient,
    lr_coefficient,
    lr_coefficient_hive,
    lr_expand,
    monotone_embedding_holds,
    tree_certificate,
    verify_lpp,
    verify_lr_identities,
)
from .partitions import conjugate, enumerate_partitions, sub_partitions
from .reports import VerificationReport
from .shapes import constants
from .skew import (
    SkewShape,
    skew_bounds_report,
    skew_sum_squares,
    skew_sum_squares_bruteforce,
    skew_sum_squares_printed,
    skew_syt_count,
    skew_syt_count_enumerated,
    skew_syt_count_lr,
)

logger = logging.getLogger(__name__)

TREE_SAMPLES = 500
# backends: 全数は |λ| ≤ 8、その先 |λ| ≤ 14 は乱択
BACKEND_EXHAUSTIVE_MAX = 8
BACKEND_RANDOM_MAX = 14
BACKEND_SAMPLES = 1000


def _triples(n: int, positive: bool = True):
    """|λ| = n の (λ, μ, ν)。positive なら c > 0 のものだけ、そうでなければ ν ⊢ n−|μ| 全部"""
    for lam in enumerate_partitions(n):
        for mu in sub_partitions(lam):
            expansion = lr_expand(lam, mu)
            if positive:
                for nu, c in expansion:
                    yield lam, mu, nu, c
            else:
                for nu in enumerate_partitions(n - mu.size):
                    yield lam, mu, nu, expansion.get(nu)


# ===== 検証スイート =====

def _burnside(n_max: int, report: VerificationReport) -> None:
    for n in range(1, n_max + 1):
        total = sum(dim_irrep(lam) ** 2 for lam in enumerate_partitions(n))
        report.record(total == math.factorial(n), "sum (f^lam)^2 = n!", (n,))
        if n <= min(n_max, 8):
            table = character_table(n)
            report.record(row_orthogonality_holds(table), "row orthogonality", (n,))
            report.record(column_orthogonality_holds(table), "column orthogonality", (n,))


def _kron_squares(n_max: int, report: VerificationReport) -> None:
    for n in range(1, n_max + 1):
        result = kron_sum_squares(n)
        report.details[f"A({n})"] = result.value
        if n <= conf.get("KRON_BRUTE_CAP"):
            report.record(result.verified, "sum g^2 = sum z_alpha", (n,))
        if n >= 10:
            report.record(kron_asymptotic_gap(n) <= 12, "n^3 |A(n)/n! - 1 - 2/n^2| <= 12", (n,))


def _kron_inequalities(n_max: int, report: VerificationReport) -> None:
    for n in range(1, min(n_max, conf.get("KRON_BRUTE_CAP")) + 1):
        table = character_table(n)
        for lam in table.partitions:
            for mu in table.partitions:
                for nu, g in zip(table.partitions, kron_vector(table, lam, mu)):
                    report.record(kron_upper_bound_holds(lam, mu, nu, g), "g max(f^mu,f^nu) <= f^lam min", (lam, mu, nu))
                    flags = vanishing_predicates(lam, mu, nu)
                    if flags.regev or flags.dvir_transposed:
                        report.record(g == 0, "vanishing predicate implies g = 0", (lam, mu, nu))
                    if lam <= mu <= nu:
                        report.record(kronecker(nu, lam, mu) == g, "g is symmetric", (lam, mu, nu))


def _lr_identities(n_max: int, report: VerificationReport) -> None:
    for n in range(n_max + 1):
        for k in range(n + 1):
            report.merge(verify_lr_identities(n, k))


def _hw(n_max: int, report: VerificationReport) -> None:
    for n in range(min(n_max, conf.get("LR_IDENTITY_CAP")) + 1):
        for k in range(n + 1):
            brute = sum(c * c for lam in enumerate_partitions(n)
                        for mu in sub_partitions(lam, sizes=(k,))
                        for _, c in lr_expand(lam, mu))
            report.record(hw_coefficient(k, n - k) == brute, "series coefficient = sum c^2", (n, k))
    top = min(40, conf.get("SERIES_CAP"))
    for n in range(25, top + 1):
        ratio = bicolored_count(n) / 2 ** n
        report.record(3.40 <= ratio <= 3.47, "p2(n)/2^n in [3.40, 3.47]", (n,))
    report.details["K"] = constants().K


def _skew_squares(n_max: int, report: VerificationReport) -> None:
    mismatches = []
    for n in range(n_max + 1):
        for m in range(n + 1):
            exact = skew_sum_squares(n, m)
            report.record(exact == skew_sum_squares_bruteforce(n, m), "generating function = brute force", (n, m))
            if m >= 1:
                report.record(skew_bounds_report(n, m).passed, "skew sum-of-squares bounds", (n, m))
            if skew_sum_squares_printed(n, m) != exact:
                mismatches.append((n, m))
    report.details["printed_form_mismatches"] = mismatches


def _lpp(n_max: int, report: VerificationReport) -> None:
    for n in range(1, n_max + 1):
        for lam, mu, nu, _ in _triples(n, positive=False):
            report.record(verify_lpp(lam, mu, nu), "c(mu,nu) <= c(meet,join)", (lam, mu, nu))


def _monotone(n_max: int, report: VerificationReport) -> None:
    for n in range(1, n_max + 1):
        for lam, mu, nu, c in _triples(n):
            report.record(monotone_embedding_holds(lam, mu, nu), "c <= c(lam+1; mu, nu+1)", (lam, mu, nu))
            report.record(c * dim_irrep(nu) <= skew_syt_count(SkewShape(lam, mu)), "c f^nu <= f^{lam/mu}", (lam, mu, nu))


def _naruse(n_max: int, report: VerificationReport) -> None:
    for n in range(1, n_max + 1):
        for lam in enumerate_partitions(n):
            for mu in sub_partitions(lam):
                shape = SkewShape(lam, mu)
                f = skew_syt_count(shape)
                bound = naruse_lower_bound(shape)
                report.record(bound <= f, "outer-hook bound <= f^{lam/mu}", (lam, mu))
                if not mu:
                    report.record(bound == f, "outer-hook bound exact on straight shapes", (lam,))
                report.record(f == skew_syt_count(shape.conjugate()), "f^{lam/mu} = f^{lam'/mu'}", (lam, mu))


def _backends(n_max: int, report: VerificationReport) -> None:
    for n in range(1, min(n_max, BACKEND_EXHAUSTIVE_MAX) + 1):
        for lam in enumerate_partitions(n):
            lam_t = conjugate(lam)
            for mu in sub_partitions(lam):
                shape = SkewShape(lam, mu)
                f = skew_syt_count(shape)
                report.record(f == skew_syt_count_lr(shape) == skew_syt_count_enumerated(shape),
                              "determinant = LR expansion = enumeration", (lam, mu))
                expansion = lr_expand(lam, mu)
                for nu in enumerate_partitions(n - mu.size):
                    c = expansion.get(nu)
                    report.record(c == lr_coefficient_hive(lam, mu, nu), "LR rule = hive count", (lam, mu, nu))
                    if c:
                        report.record(c == lr_coefficient(lam, nu, mu), "c is commutative", (lam, mu, nu))
                        report.record(c == lr_coefficient(lam_t, conjugate(mu), conjugate(nu)),
                                      "c is conjugation invariant", (lam, mu, nu))
    if n_max > BACKEND_EXHAUSTIVE_MAX:
        _backends_random(min(n_max, BACKEND_RANDOM_MAX), report)


def _backends_random(size_max: int, report: VerificationReport, seed: int = 0) -> None:
    """|λ| を BACKEND_EXHAUSTIVE_MAX+1..size_max から選び、μ, ν ⊆ λ を一様に引く"""
    rng = random.Random(seed)
    sizes = range(BACKEND_EXHAUSTIVE_MAX + 1, size_max + 1)
    for _ in range(BACKEND_SAMPLES):
        n = rng.choice(sizes)
        lam = rng.choice(enumerate_partitions(n))
        mu = rng.choice(list(sub_partitions(lam)))
        nu = rng.choice(list(sub_partitions(lam, sizes=(n - mu.size,))))
        report.record(lr_coefficient(lam, mu, nu) == lr_coefficient_hive(lam, mu, nu),
                      "LR rule = hive count (random)", (lam, mu, nu))
    report.details["random_triples"] = BACKEND_SAMPLES


def _tree(n_max: int, report: VerificationReport) -> None:
    n_max = min(n_max, conf.get("TREE_CAP"))
    triples = [(lam, mu, nu) for n in range(1, n_max + 1) for lam, mu, nu, _ in _triples(n)]
    rng = random.Random(0)
    sample = rng.sample(triples, min(TREE_SAMPLES, len(triples)))
    for lam, mu, nu in sorted(sample):
        cert = tree_certificate(lam, mu, nu)
        report.record(cert.product <= cert.dimension, "tree product <= f^lam", (lam, mu, nu))


SUITES: Dict[str, Callable[[int, VerificationReport], None]] = {
    "burnside": _burnside,
    "kron-squares": _kron_squares,
    "kron-inequalities": _kron_inequalities,
    "lr-identities": _lr_identities,
    "hw": _hw,
    "skew-squares": _skew_squares,
    "lpp": _lpp,
    "monotone": _monotone,
    "naruse": _naruse,
    "backends": _backends,
    "tree": _tree,
}


def run_suite(name: str, n_max: int) -> VerificationReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ArgumentError(f"unknown suite: {name}")
    if n_max < 0:
        raise ArgumentError(f"n_max must be nonnegative: {n_max}")
    report = VerificationReport(name)
    logger.info("running suite %s up to n=%d", name, n_max)
    suite(n_max, report)
    logger.info("suite %s: %d checks, %d failures", name, report.checked, len(report.failures))
    return report.raise_on_failure()


# ===== 走査 =====

def _scan_containment(n: int, stretch: bool = False) -> List[Dict[str, Any]]:
    result = containment_scan(n, stretch)
    return [{
        "n": n,
        "C": result.value,
        "flag": result.flag_witness,
        "conjecture_holds": result.conjecture_holds,
        "exceptions": len(result.exceptions),
    }]


def _scan_stabilization(k_max: int) -> List[Dict[str, Any]]:
    rows = []
    for k in range(1, k_max + 1):
        result = stabilization_index(k)
        rows.append({
            "k": k,
            "start": result.start,
            "threshold": result.threshold,
            "exact": result.exact,
            "witness": result.witness,
        })
    return rows


def _scan_saxl(k_max: int) -> List[Dict[str, Any]]:
    rows = []
    for k in range(2, k_max + 1):
        result = saxl_scan(k)
        rows.append({
            "k": k,
            "staircase": result.staircase,
            "holds": result.holds,
            "missing": len(result.missing),
            "diagonal": result.diagonal,
        })
    return rows


def _scan_zeta_rho(n_max: int, stretch: bool = False) -> List[Dict[str, Any]]:
    rows = []
    for n in range(1, n_max + 1):
        zeta, rho = zeta_rho(n, stretch)
        rows.append({"n": n, "zeta": zeta, "rho": rho})
    return rows


def _scan_non_unimodal(n_max: int, stretch: bool = False) -> List[Dict[str, Any]]:
    report = monotonicity_scan(n_max, stretch)
    return [{"n": n, "k": k, "C": value} for n, k, value in report.details["non_unimodal"]]


def _scan_plancherel_triples(n: int) -> List[Dict[str, Any]]:
    return [
        {"lambda": triple[0], "g": g, "log_g": log_g, "half_log_factorial": half}
        for triple, g, log_g, half in plancherel_triples_report(n)
    ]


def _scan_regev(a_max: int) -> List[Dict[str, Any]]:
    rows = []
    for a in range(2, a_max + 1):
        lam, lam_t, flag, flag_t = regev_family(a)
        row = {"a": a, "lambda": lam, "conjugate": lam_t, "flag": flag, "flag_conjugate": flag_t}
        if lam.size <= conf.get("KRON_BRUTE_CAP"):
            row["g_conjugate"] = kronecker(lam_t, lam_t, lam_t)
        rows.append(row)
    return rows


SCANS: Dict[str, Callable[..., List[Dict[str, Any]]]] = {
    "containment": _scan_containment,
    "stabilization": _scan_stabilization,
    "saxl": _scan_saxl,
    "zeta-rho": _scan_zeta_rho,
    "non-unimodal": _scan_non_unimodal,
    "plancherel-triples": _scan_plancherel_triples,
    "regev": _scan_regev,
}

# C(n,k) 表の上限に掛かる走査。--stretch で STRETCH_CAP まで
TABLE_SCANS = frozenset({"containment", "zeta-rho", "non-unimodal"})


def run_scan(name: str, n: int, stretch: bool = False) -> List[Dict[str, Any]]:
    try:
        scan = SCANS[name]
    except KeyError:
        raise ArgumentError(f"unknown scan: {name}")
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    logger.info("running scan %s with n=%d", name, n)
    if name in TABLE_SCANS:
        return scan(n, stretch=stretch)
    return scan(n)
