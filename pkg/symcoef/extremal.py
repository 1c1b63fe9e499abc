# symcoef/extremal.py
"""
最大値・表・予想の走査: C(n,k)、C(n)、C_ℓ(n)、F(m,n)、ζ/ρ、安定化、包含、単調性。

表の走査は λ ごとに μ ⊆ λ（|μ| ≥ n/2）を回し、lr_contents の結果から最大を拾う。
c = 0 の三つ組は作らない。|μ| > n/2 のときは (λ, ν, μ) を k = n − |μ| 側にも入れる。
"""
from __future__ import annotations

import csv
import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import conf
from .dimensions import dim_irrep, max_dim
from .exceptions import ArgumentError, ResourceLimitError, VerificationError
from .lr import lr_contents, lr_expand, refined_max_lr, skew_hive_bound
from .parallel import ordered_map
from .partitions import (
    Partition,
    add_to_first_row,
    as_partition,
    contains,
    enumerate_partitions,
    partition_count,
    partitions_with_length,
    staircase,
    sub_partitions,
)
from .reports import (
    BoundCheck,
    BoundReport,
    MaxRecord,
    MaxTracker,
    VerificationReport,
    log_factorial,
    log_value,
)
from .skew import skew_pairs, skew_syt_count

logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


class LargeTerm(NamedTuple):
    lam: Partition
    coefficient: int
    weight: int


class LargePair(NamedTuple):
    mu: Partition
    nu: Partition
    coefficient: int
    weight: int


class Stabilization(NamedTuple):
    k: int
    start: int
    threshold: int
    exact: bool
    values: Dict[int, int]
    witness: Tuple[Partition, Partition, Partition]


class ContainmentReport(NamedTuple):
    n: int
    value: int
    flag_witness: Optional[Tuple[Partition, Partition, Partition]]
    exceptions: Tuple[Tuple[Partition, Partition, Partition], ...]

    @property
    def conjecture_holds(self) -> bool:
        return not self.exceptions


# ===== C(n,k) の表 =====

@dataclass(frozen=True)
class CnkTable:
    n_max: int
    entries: Dict[Tuple[int, int], MaxRecord]

    def record(self, n: int, k: int) -> MaxRecord:
        return self.entries[(n, k)]

    def value(self, n: int, k: int) -> int:
        return self.entries[(n, k)].value

    def row(self, n: int) -> List[int]:
        return [self.value(n, k) for k in range(n + 1)]

    def max_row(self, n: int) -> int:
        return max(self.row(n))


def _scan_lambda(args: Tuple[Partition, Optional[float]]) -> Dict[int, MaxRecord]:
    lam, deadline = args
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimitError(f"time budget exceeded while scanning {lam}")
    n = lam.size
    trackers: Dict[int, MaxTracker] = {}
    for mu in sub_partitions(lam, sizes=range((n + 1) // 2, n + 1)):
        s = mu.size
        for nu, c in lr_contents(lam, mu).items():
            trackers.setdefault(s, MaxTracker()).add(c, (lam, mu, nu))
            if 2 * s != n:
                trackers.setdefault(n - s, MaxTracker()).add(c, (lam, nu, mu))
    return {k: t.result() for k, t in trackers.items()}


_ROWS: Dict[int, Dict[int, MaxRecord]] = {}


def _row(n: int, threads: Optional[int] = 1, deadline: Optional[float] = None) -> Dict[int, MaxRecord]:
    row = _ROWS.get(n)
    if row is not None:
        return row
    parts = enumerate_partitions(n)
    results = ordered_map(_scan_lambda, [(lam, deadline) for lam in parts], threads, chunksize=8)
    trackers = {k: MaxTracker() for k in range(n + 1)}
    for result in results:
        for k, record in result.items():
            trackers[k].merge(record)
    row = {k: t.result() for k, t in trackers.items()}
    logger.info("C(n,k) row n=%d done (%d shapes)", n, len(parts))
    _ROWS[n] = row
    return row


def _check_table_cap(n: int, stretch: bool) -> None:
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    conf.check_cap("STRETCH_CAP" if stretch else "TABLE_CAP", n)


def table_cnk(n_max: int, stretch: bool = False, threads: Optional[int] = 1,
              time_budget: Optional[float] = None) -> CnkTable:
    _check_table_cap(n_max, stretch)
    deadline = time.monotonic() + time_budget if time_budget else None
    entries: Dict[Tuple[int, int], MaxRecord] = {}
    for n in range(n_max + 1):
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError(f"time budget of {time_budget}s exceeded at n={n}")
        for k, record in _row(n, threads, deadline).items():
            entries[(n, k)] = record
    return CnkTable(n_max, entries)


def cnk_value(n: int, k: int) -> MaxRecord:
    """C(n,k) だけを、大きさ min(k, n−k) の歪シェイプの展開から"""
    if not 0 <= k <= n:
        raise ArgumentError(f"need 0 <= k <= n, got n={n}, k={k}")
    conf.check_cap("LR_CAP", n)
    if n in _ROWS:
        return _ROWS[n][k]
    s = min(k, n - k)
    tracker = MaxTracker()
    for lam in enumerate_partitions(n):
        for mu in sub_partitions(lam, sizes=(n - s,)):
            for nu, c in lr_contents(lam, mu).items():
                tracker.add(c, (lam, mu, nu) if mu.size == k else (lam, nu, mu))
    return tracker.result()


def max_lr(n: int, stretch: bool = False, threads: Optional[int] = 1) -> MaxRecord:
    """C(n) = max_k C(n,k)。witness は (λ, μ, ν)"""
    _check_table_cap(n, stretch)
    tracker = MaxTracker()
    for record in _row(n, threads).values():
        tracker.merge(record)
    return tracker.result()


def max_lr_rows(n: int, ell: int) -> MaxRecord:
    """
    C_ℓ(n): ちょうど ℓ 行の λ に限った最大。
    (n+1)^{ℓ²/2}、hive の内部点数による上界、各 λ での C(λ)² ≤ (λ₁+ℓ)^{ℓ²} を確かめる。
    """
    if not 1 <= ell <= n:
        raise ArgumentError(f"need 1 <= ell <= n, got n={n}, ell={ell}")
    conf.check_cap("LR_CAP", n)
    tracker = MaxTracker()
    for lam in partitions_with_length(n, ell):
        record = refined_max_lr(lam)
        if record.value ** 2 > (lam.first + ell) ** (ell * ell):
            raise VerificationError(f"C({lam}) exceeds (lambda_1+ell)^(ell^2/2)", (lam,))
        for mu, nu in record.witnesses:
            tracker.add(record.value, (lam, mu, nu))
    result = tracker.result()
    if result.value ** 2 > (n + 1) ** (ell * ell):
        raise VerificationError(f"C_{ell}({n})={result.value} exceeds (n+1)^(ell^2/2)", result.witness)
    if result.value > skew_hive_bound(n, ell):
        raise VerificationError(f"C_{ell}({n})={result.value} exceeds the hive count bound", result.witness)
    return result


def max_skew_syt(m: int, n: int) -> MaxRecord:
    """F(m,n)。witness は (λ, μ)。m ≥ 1 なら二乗和の上下界からの挟み込みも確かめる"""
    if not 0 <= m <= n:
        raise ArgumentError(f"need 0 <= m <= n, got m={m}, n={n}")
    conf.check_cap("LR_CAP", n)
    tracker = MaxTracker()
    for shape in skew_pairs(n, m):
        tracker.add(skew_syt_count(shape), (shape.outer, shape.inner))
    result = tracker.result()
    if m >= 1:
        square = result.value ** 2
        low = square * partition_count(m) * partition_count(n) * math.factorial(m - 1) >= math.factorial(n - 1)
        high = square * math.factorial(m) <= math.factorial(n) * partition_count(m)
        if not (low and high):
            raise VerificationError(f"F({m},{n})={result.value} outside its sandwich", result.witness)
    return result


# ===== 走査 =====

def zeta_rho(n: int, stretch: bool = False) -> Tuple[int, Fraction]:
    """ζ(n) = C(n,k) = C(n) となる最小の k、ρ(n) = n/2 − ζ(n)"""
    _check_table_cap(n, stretch)
    row = _row(n)
    best = max(record.value for record in row.values())
    zeta = min(k for k, record in row.items() if record.value == best)
    return zeta, Fraction(n, 2) - zeta


def stabilization_witness(k: int, r: int = 0) -> Tuple[Partition, Partition, Partition]:
    """λ = δ_{k+1}+(r)、ν = δ_k+(r)。λ/ν は互いに離れた k 個のセルで c^λ_{μν} = f^μ"""
    lam = add_to_first_row(staircase(k + 1), r) if r else staircase(k + 1)
    nu = add_to_first_row(staircase(k), r) if r else staircase(k)
    mu = max_dim(k).witness[0] if k else Partition()
    return lam, mu, nu


def stabilization_index(k: int) -> Stabilization:
    """
    C(n,k) = D(k) が n₀ 以降ずっと成り立つ最小の n₀（C(k+1,2)+1 まで調べる）。
    C(n,k) ≤ D(k) は全 n で確かめる。
    """
    if k < 1:
        raise ArgumentError(f"k must be positive: {k}")
    conf.check_cap("STABILIZATION_K_CAP", k, label="k")
    d = max_dim(k).value
    threshold = math.comb(k + 1, 2)
    top = min(threshold + 1, conf.get("LR_CAP"))
    values: Dict[int, int] = {}
    for n in range(k, top + 1):
        value = cnk_value(n, k).value
        if value > d:
            raise VerificationError(f"C({n},{k})={value} exceeds D({k})={d}", (n, k))
        values[n] = value
    start = top + 1
    for n in range(top, k - 1, -1):
        if values[n] != d:
            break
        start = n

    lam, mu, nu = stabilization_witness(k)
    c = lr_expand(lam, nu).get(mu)
    if c != d or c != dim_irrep(mu):
        raise VerificationError(f"staircase construction gives c={c}, expected D({k})={d}", (lam, mu, nu))
    return Stabilization(k, start, threshold, start == threshold, values, (lam, mu, nu))


def containment_scan(n: int, stretch: bool = False) -> ContainmentReport:
    """
    C(n) の最大を与える三つ組について、μ ⊆ ν か ν ⊆ μ となるものが存在すること（必ず成り立つ）と、
    全部がそうなっているか（予想、報告のみ）を調べる。
    """
    record = max_lr(n, stretch)
    nested = [t for t in record.witnesses if contains(t[1], t[2]) or contains(t[2], t[1])]
    if not nested:
        raise VerificationError(f"no nested maximizer for C({n})", record.witness)
    exceptions = tuple(t for t in record.witnesses if t not in nested)
    return ContainmentReport(n, record.value, nested[0], exceptions)


def _valley(row: Sequence[int]) -> Optional[int]:
    for k in range(1, len(row) - 1):
        if max(row[:k]) > row[k] < max(row[k + 1:]):
            return k
    return None


def monotonicity_scan(n_max: int, stretch: bool = False) -> VerificationReport:
    """C(n) ≤ C(n+1)、C(n,k) ≤ C(n+1,k) と、k について単峰でない行"""
    _check_table_cap(n_max, stretch)
    table = table_cnk(n_max, stretch=stretch)
    report = VerificationReport(f"monotone n<={n_max}")
    valleys = []
    for n in range(n_max + 1):
        row = table.row(n)
        if n < n_max:
            report.record(table.max_row(n) <= table.max_row(n + 1), "C(n) <= C(n+1)", (n,))
            for k in range(n + 1):
                report.record(row[k] <= table.value(n + 1, k), "C(n,k) <= C(n+1,k)", (n, k))
        k = _valley(row)
        if k is not None:
            valleys.append((n, k, row[k]))
    report.details["non_unimodal"] = valleys
    return report.raise_on_failure()


# ===== 最大項の構成 =====

def find_large_lr_from_mu_nu(mu: Sequence[int], nu: Sequence[int]) -> LargeTerm:
    """c^λ_{μν}·f^λ が最大の λ（同値なら辞書式最小）"""
    mu, nu = as_partition(mu), as_partition(nu)
    n, k = mu.size + nu.size, mu.size
    conf.check_cap("LR_CAP", n)
    best: Optional[LargeTerm] = None
    for lam in enumerate_partitions(n):
        if not (contains(mu, lam) and contains(nu, lam)):
            continue
        c = lr_expand(lam, mu).get(nu)
        weight = c * dim_irrep(lam)
        if best is None or weight > best.weight or (weight == best.weight and lam < best.lam):
            best = LargeTerm(lam, c, weight)

    # f^μ ≥ √k!/a、f^ν ≥ √(n−k)!/a となる a で読んだ保証
    fm, fn, p = dim_irrep(mu), dim_irrep(nu), partition_count(n)
    log_a = max(0.0, 0.5 * log_factorial(k) - log_value(fm), 0.5 * log_factorial(n - k) - log_value(fn))
    scale = 2 * log_a + math.log(p)
    ok_f = log_value(dim_irrep(best.lam)) >= 0.5 * log_factorial(n) - scale - 1e-9
    ok_c = log_value(best.coefficient) >= 0.5 * log_value(math.comb(n, k)) - scale - 1e-9
    if not (ok_f and ok_c and best.weight * p >= math.comb(n, k) * fm * fn):
        raise VerificationError(f"largest-term guarantee fails for {mu},{nu}", (best.lam, mu, nu))
    return best


def find_large_lr_from_lambda(lam: Sequence[int], k: int) -> LargePair:
    """c^λ_{μν}·f^μ f^ν が最大の (μ, ν)（同値なら辞書式最小）"""
    lam = as_partition(lam)
    n = lam.size
    if not 0 <= k <= n:
        raise ArgumentError(f"need 0 <= k <= |lambda|, got k={k}")
    conf.check_cap("LR_CAP", n)
    best: Optional[LargePair] = None
    for mu in sub_partitions(lam, sizes=(k,)):
        for nu, c in lr_expand(lam, mu):
            weight = c * dim_irrep(mu) * dim_irrep(nu)
            if best is None or weight > best.weight or (weight == best.weight and (mu, nu) < (best.mu, best.nu)):
                best = LargePair(mu, nu, c, weight)

    fl = dim_irrep(lam)
    pk, pm = partition_count(k), partition_count(n - k)
    log_a = max(0.0, 0.5 * log_factorial(n) - log_value(fl))
    scale = log_a + math.log(pk) + math.log(pm)
    ok = (
        log_value(dim_irrep(best.mu)) >= 0.5 * log_factorial(k) - scale - 1e-9
        and log_value(dim_irrep(best.nu)) >= 0.5 * log_factorial(n - k) - scale - 1e-9
        and log_value(best.coefficient) >= 0.5 * log_value(math.comb(n, k)) - scale - 1e-9
        and best.weight * pk * pm >= fl
    )
    if not ok:
        raise VerificationError(f"largest-pair guarantee fails for {lam}, k={k}", (lam, best.mu, best.nu))
    return best


# ===== 上下界 =====

def lr_bounds_report(n: int, k: int, exact: Optional[int] = None) -> BoundReport:
    """√(C(n,k)/(p(k)p(n−k)p(n))) ≤ C(n,k) ≤ √C(n,k) と C(n,k) ≤ D(min(k, n−k))"""
    if not 0 <= k <= n:
        raise ArgumentError(f"need 0 <= k <= n, got n={n}, k={k}")
    witnesses: Tuple[tuple, ...] = ()
    if exact is None:
        record = cnk_value(n, k)
        exact, witnesses = record.value, record.witnesses
    half_binom = 0.5 * log_value(math.comb(n, k))
    log_p = math.log(partition_count(k)) + math.log(partition_count(n - k)) + math.log(partition_count(n))
    small = min(k, n - k)
    d = max_dim(small).value if small else 1
    checks = (
        BoundCheck("binom^(1/2)/sqrt(p(k)p(n-k)p(n)) <= C(n,k) <= binom^(1/2)", log_value(exact),
                   log_lower=half_binom - 0.5 * log_p, log_upper=half_binom),
        BoundCheck(f"C(n,k) <= D({small})", log_value(exact), log_upper=log_value(d)),
        BoundCheck(f"D({small}) <= sqrt({small}!)", log_value(d),
                   log_upper=0.5 * log_factorial(small), asserted=False),
    )
    return BoundReport(f"C({n},{k})", exact, checks, witnesses)


def table_checks(table: CnkTable) -> VerificationReport:
    """対称性、端が 1、C(n,k) ≤ D(min(k,n−k))、印刷値との一致"""
    report = VerificationReport(f"cnk table n<={table.n_max}")
    golden = golden_cnk()
    for n in range(table.n_max + 1):
        for k in range(n + 1):
            value = table.value(n, k)
            report.record(value == table.value(n, n - k), "C(n,k) = C(n,n-k)", (n, k))
            small = min(k, n - k)
            d = max_dim(small).value if small else 1
            report.record(value <= d, "C(n,k) <= D(min(k,n-k))", (n, k))
            if (n, k) in golden:
                report.record(value == golden[(n, k)], "C(n,k) matches published table", (n, k))
        report.record(table.value(n, 0) == 1 and table.value(n, n) == 1, "C(n,0) = C(n,n) = 1", (n,))
    return report


# ===== 印刷値 =====

def _read_golden(name: str) -> List[Dict[str, str]]:
    with open(GOLDEN_DIR / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def golden_cnk() -> Dict[Tuple[int, int], int]:
    """修正済みの値（printed 列は印刷どおり）"""
    return {(int(r["n"]), int(r["k"])): int(r["C"]) for r in _read_golden("cnk.csv")}


def golden_cn() -> Dict[int, int]:
    return {int(r["n"]): int(r["C"]) for r in _read_golden("cn.csv")}


def golden_dn() -> Dict[int, int]:
    return {int(r["n"]): int(r["D"]) for r in _read_golden("dn.csv")}
