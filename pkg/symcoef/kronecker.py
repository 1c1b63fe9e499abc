# symcoef/kronecker.py
"""
Kronecker 係数 g(λ,μ,ν) = Σ_α z_α^{-1} χ^λ(α)χ^μ(α)χ^ν(α) と、その上下界・最大値・消滅条件。
"""
from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from . import conf
from .characters import CharTable, character_table
from .dimensions import dim_irrep, max_dim
from .exceptions import ArgumentError, VerificationError
from .parallel import ordered_map
from .partitions import (
    Partition,
    as_partition,
    centralizer_order,
    conjugate,
    enumerate_partitions,
    meet_join,
    partition_count,
    staircase,
)
from .reports import (
    BoundCheck,
    BoundReport,
    MaxRecord,
    MaxTracker,
    log_factorial,
    log_value,
)
from .shapes import constants

logger = logging.getLogger(__name__)


class KronSquares(NamedTuple):
    value: int
    verified: bool


class VanishingFlags(NamedTuple):
    regev: bool
    dvir: bool
    dvir_transposed: bool


class SaxlReport(NamedTuple):
    k: int
    staircase: Partition
    missing: Tuple[Partition, ...]
    diagonal: int

    @property
    def holds(self) -> bool:
        return not self.missing


def _same_size(*parts: Partition) -> int:
    n = parts[0].size
    for p in parts[1:]:
        if p.size != n:
            raise ArgumentError(f"size mismatch: {' / '.join(str(q) for q in parts)}")
    return n


def _table(n: int) -> CharTable:
    return character_table(n)


def kron_vector(table: CharTable, lam: Partition, mu: Partition) -> List[int]:
    """ν を表の順に並べた g(λ,μ,ν) のリスト"""
    nf = math.factorial(table.n)
    weights = table.class_sizes * table.row(lam) * table.row(mu)
    result = []
    for nu, total in zip(table.partitions, table.matrix.dot(weights)):
        g, remainder = divmod(int(total), nf)
        if remainder or g < 0:
            raise VerificationError(f"non-integral or negative Kronecker coefficient {total}/{nf}", (lam, mu, nu))
        result.append(g)
    return result


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = _same_size(lam, mu, nu)
    if n == 0:
        return 1
    table = _table(n)
    total = sum(
        size * a * b * c
        for size, a, b, c in zip(table.class_sizes, table.row(lam), table.row(mu), table.row(nu))
    )
    g, remainder = divmod(int(total), math.factorial(n))
    if remainder or g < 0:
        raise VerificationError(f"non-integral or negative Kronecker coefficient at {lam},{mu},{nu}", (lam, mu, nu))
    return g


# ===== Σg² と漸近 =====

def centralizer_sum(n: int) -> int:
    """A(n) = Σ_{α⊢n} z_α"""
    return sum(centralizer_order(alpha) for alpha in enumerate_partitions(n))


def kron_sum_squares(n: int) -> KronSquares:
    """Σ z_α。n ≤ KRON_BRUTE_CAP なら Σ_{λ,μ,ν} g² と突き合わせる"""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    value = centralizer_sum(n)
    if n == 0 or n > conf.get("KRON_BRUTE_CAP"):
        return KronSquares(value, n == 0)
    table = _table(n)
    brute = sum(
        g * g
        for lam in table.partitions
        for mu in table.partitions
        for g in kron_vector(table, lam, mu)
    )
    if brute != value:
        raise VerificationError(f"sum of squared Kronecker coefficients {brute} != {value} at n={n}", n)
    return KronSquares(value, True)


def kron_asymptotic_gap(n: int) -> float:
    """n³·|Σz_α/n! − 1 − 2/n²|"""
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    gap = Fraction(centralizer_sum(n), math.factorial(n)) - 1 - Fraction(2, n * n)
    return float(abs(gap)) * n ** 3


# ===== 最大値 =====

def refined_max_kron(lam: Sequence[int], mu: Sequence[int]) -> MaxRecord:
    """K(λ,μ) = max_ν g(λ,μ,ν)"""
    lam, mu = as_partition(lam), as_partition(mu)
    n = _same_size(lam, mu)
    if n == 0:
        return MaxRecord(1, ((Partition(),),), 1)
    table = _table(n)
    tracker = MaxTracker()
    for nu, g in zip(table.partitions, kron_vector(table, lam, mu)):
        tracker.add(g, (nu,))
    return tracker.result()


def _kron_scan_outer(args: Tuple[int, int]) -> Tuple[int, List[Tuple[Partition, Partition, Partition]]]:
    """λ = parts[i] を固定し、i ≤ j ≤ k の範囲で最大を探す"""
    n, i = args
    table = _table(n)
    parts = table.partitions
    best, found = -1, []
    for j in range(i, len(parts)):
        vector = kron_vector(table, parts[i], parts[j])
        for k in range(j, len(parts)):
            g = vector[k]
            if g > best:
                best, found = g, [(parts[i], parts[j], parts[k])]
            elif g == best:
                found.append((parts[i], parts[j], parts[k]))
    return best, found


def max_kron(n: int, threads: Optional[int] = 1) -> MaxRecord:
    """K(n)。λ ⪰ μ ⪰ ν（標準順）だけ走査し、witness は対称性で展開"""
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    conf.check_cap("MAX_KRON_CAP", n)
    _table(n)
    outer = [(n, i) for i in range(len(enumerate_partitions(n)))]
    results = ordered_map(_kron_scan_outer, outer, threads, chunksize=1)
    best = max(value for value, _ in results)
    tracker = MaxTracker()
    for value, triples in results:
        if value != best:
            continue
        for triple in triples:
            for perm in set(itertools.permutations(triple)):
                tracker.add(value, perm)
    return tracker.result()


# ===== 上下界 =====

def kron_bounds_report(n: int, threads: Optional[int] = 1) -> BoundReport:
    """√n!/p(n)^{3/2} ≤ K(n)、D(n)²/√(p(n)n!) ≤ K(n) ≤ D(n)、漸近帯（参考値）"""
    record = max_kron(n, threads)
    d = max_dim(n).value
    p = partition_count(n)
    lf = log_factorial(n)
    log_k = log_value(record.value)
    c = constants()
    checks = (
        BoundCheck("sqrt(n!)/p(n)^1.5 <= K(n)", log_k, log_lower=0.5 * lf - 1.5 * math.log(p)),
        BoundCheck("D(n)^2/sqrt(p(n)n!) <= K(n)", log_k,
                   log_lower=2 * log_value(d) - 0.5 * math.log(p) - 0.5 * lf),
        BoundCheck("K(n) <= D(n)", log_k, log_upper=log_value(d)),
        BoundCheck("sqrt(n!)e^{-3c1 sqrt(n)} <= K(n) <= sqrt(n!)e^{-c2 sqrt(n)}", log_k,
                   log_lower=0.5 * lf - 3 * c.c1 * math.sqrt(n),
                   log_upper=0.5 * lf - c.c2 * math.sqrt(n), asserted=False),
    )
    return BoundReport(f"K({n})", record.value, checks, record.witnesses)


def refined_kron_bounds(lam: Sequence[int], mu: Sequence[int]) -> BoundReport:
    """f^λf^μ/√(p(n)n!) ≤ K(λ,μ) ≤ min(f^λ,f^μ) と A(λ,μ) ≥ (f^λf^μ)²/n!"""
    lam, mu = as_partition(lam), as_partition(mu)
    n = _same_size(lam, mu)
    record = refined_max_kron(lam, mu)
    fl, fm = dim_irrep(lam), dim_irrep(mu)
    p = partition_count(n)
    lf = log_factorial(n)
    log_k = log_value(record.value)
    if n:
        table = _table(n)
        quartic = sum(g * g for g in kron_vector(table, lam, mu))
    else:
        quartic = 1
    checks = (
        BoundCheck("f^l f^m/sqrt(p(n)n!) <= K(l,m)", log_k,
                   log_lower=log_value(fl * fm) - 0.5 * math.log(p) - 0.5 * lf),
        BoundCheck("K(l,m) <= min(f^l,f^m)", log_k, log_upper=log_value(min(fl, fm))),
        # 整数で厳密に比べた結果を log に載せる
        BoundCheck("A(l,m) >= (f^l f^m)^2/n!", log_value(quartic),
                   log_lower=log_value(Fraction((fl * fm) ** 2, math.factorial(n)))),
    )
    notes = () if quartic * math.factorial(n) >= (fl * fm) ** 2 else ("quartic inequality fails exactly",)
    return BoundReport(f"K({lam};{mu})", record.value, checks, record.witnesses, notes)


def kron_upper_bound_holds(lam: Partition, mu: Partition, nu: Partition, g: int) -> bool:
    """g·max(f^μ,f^ν) ≤ f^λ·min(f^μ,f^ν)"""
    fl, fm, fn = dim_irrep(lam), dim_irrep(mu), dim_irrep(nu)
    return g * max(fm, fn) <= fl * min(fm, fn)


# ===== 構成的探索 =====

def find_large_kron(mu: Sequence[int], nu: Sequence[int]) -> Tuple[Partition, int]:
    """g(λ,μ,ν)·f^λ を最大にする λ（同値なら辞書式最小）と g"""
    mu, nu = as_partition(mu), as_partition(nu)
    n = _same_size(mu, nu)
    if n == 0:
        return Partition(), 1
    table = _table(n)
    best_weight, best_lam, best_g = -1, None, 0
    for lam, g in zip(table.partitions, kron_vector(table, mu, nu)):
        weight = g * dim_irrep(lam)
        if weight > best_weight or (weight == best_weight and lam < best_lam):
            best_weight, best_lam, best_g = weight, lam, g
    # 平均論法の保証: g ≥ f^μf^ν/(p(n)D(n))、(f^λ)² ≥ f^μf^ν/p(n)
    fm, fn, p = dim_irrep(mu), dim_irrep(nu), partition_count(n)
    d = max_dim(n).value
    if best_g * p * d < fm * fn or dim_irrep(best_lam) ** 2 * p < fm * fn:
        raise VerificationError(f"largest-term guarantee fails for {mu},{nu}", (best_lam, mu, nu))
    return best_lam, best_g


def concentration_fraction(lam: Sequence[int], mu: Sequence[int], beta: float) -> Fraction:
    """f^ν > √n!·e^{−β√n} を満たす ν だけで Σ g f^ν を取り、f^λf^μ で割る"""
    lam, mu = as_partition(lam), as_partition(mu)
    n = _same_size(lam, mu)
    if beta <= 0:
        raise ArgumentError(f"beta must be positive: {beta}")
    if n == 0:
        return Fraction(1)
    table = _table(n)
    threshold = 0.5 * log_factorial(n) - beta * math.sqrt(n)
    kept = 0
    for nu, g in zip(table.partitions, kron_vector(table, lam, mu)):
        f = dim_irrep(nu)
        if g and log_value(f) > threshold:
            kept += g * f
    return Fraction(kept, dim_irrep(lam) * dim_irrep(mu))


# ===== 消滅条件 =====

def vanishing_predicates(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> VanishingFlags:
    """
    regev: ℓ(λ) > μ₁ν₁
    dvir: ℓ(λ) > |μ∩ν|（表記どおり）
    dvir_transposed: ℓ(λ) > |μ∩ν'|（消滅が保証される形）
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _same_size(lam, mu, nu)
    meet, _ = meet_join(mu, nu)
    meet_t, _ = meet_join(mu, conjugate(nu))
    return VanishingFlags(
        regev=len(lam) > mu.first * nu.first,
        dvir=len(lam) > meet.size,
        dvir_transposed=len(lam) > meet_t.size,
    )


def regev_family(a: int) -> Tuple[Partition, Partition, bool, bool]:
    """
    λ=(a²)^{a−1} と転置 λ'。それぞれ ℓ > (第 1 部分)² を満たすか。
    表記どおりの λ は満たさず、転置が満たす。
    """
    if a < 2:
        raise ArgumentError(f"a must be at least 2: {a}")
    lam = Partition([a * a] * (a - 1))
    lam_t = conjugate(lam)
    return lam, lam_t, len(lam) > lam.first ** 2, len(lam_t) > lam_t.first ** 2


def saxl_scan(k: int) -> SaxlReport:
    """g(δ_k,δ_k,ν)=0 となる ν の一覧と g(δ_k,δ_k,δ_k)"""
    if k < 2:
        raise ArgumentError(f"k must be at least 2: {k}")
    delta = staircase(k)
    n = delta.size
    conf.check_cap("CHAR_TABLE_CAP", n, label="staircase size")
    table = _table(n)
    vector = kron_vector(table, delta, delta)
    missing = tuple(nu for nu, g in zip(table.partitions, vector) if g == 0)
    diagonal = vector[table.index[delta]]
    return SaxlReport(k, delta, tuple(sorted(missing)), diagonal)


def plancherel_triples_report(n: int) -> List[Tuple[Tuple[Partition, Partition, Partition], int, float, float]]:
    """最大次元の形 λ について g(λ,λ,λ) と ½ log n! を並べる（判定はしない）"""
    conf.check_cap("MAX_KRON_CAP", n)
    half = 0.5 * log_factorial(n)
    rows = []
    for (lam,) in max_dim(n).witnesses:
        g = kronecker(lam, lam, lam)
        rows.append(((lam, lam, lam), g, log_value(g), half))
    return rows


def symmetric_values(lam: Partition, mu: Partition, nu: Partition) -> List[int]:
    """6 通りの並べ替えでの g"""
    return [kronecker(*perm) for perm in itertools.permutations((lam, mu, nu))]


def dimension_identity_holds(lam: Partition, mu: Partition) -> bool:
    """Σ_ν g(λ,μ,ν) f^ν = f^λ f^μ"""
    n = _same_size(lam, mu)
    table = _table(n)
    total = sum(g * dim_irrep(nu) for nu, g in zip(table.partitions, kron_vector(table, lam, mu)))
    return total == dim_irrep(lam) * dim_irrep(mu)
