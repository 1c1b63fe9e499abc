# symcoef/skew.py
"""
歪シェイプ λ/μ の標準タブロー数 f^{λ/μ} と、その二乗和。

主実装は行列式 f^{λ/μ} = n!·det[1/((λ_i−i)−(μ_j−j))!]。
行 i に (λ_i−i+ℓ)! を掛けて整数行列にし、sympy の Bareiss 法で割り算なしに解く。
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from sympy import Matrix

from . import conf
from .exceptions import ArgumentError, VerificationError
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    contains,
    enumerate_partitions,
    parse_partition,
    partition_count,
)
from .reports import BoundCheck, BoundReport, log_factorial, log_value
from .series import inverse_power_coeff

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = as_partition(self.outer), as_partition(self.inner)
        if not contains(inner, outer):
            raise ArgumentError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(parse_partition(outer), parse_partition(inner) if inner.strip() else Partition())

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> List[Tuple[int, int]]:
        """(i, j) 1 始まり、行ごとに左から"""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer[i - 1] + 1)
        ]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def as_skew(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    outer, inner = shape
    return SkewShape(as_partition(outer), as_partition(inner))


# ===== f^{λ/μ} =====

@lru_cache(maxsize=1 << 14)
def _determinant_count(outer: Partition, inner: Partition) -> int:
    ell = len(outer)
    n = outer.size - inner.size
    if ell == 0:
        return 1
    scale = [outer[i] - (i + 1) + ell for i in range(ell)]
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            a = (outer[i] - (i + 1)) - (inner.part(j + 1) - (j + 1))
            # M!/a! = perm(M, M−a)、a < 0 なら 0
            row.append(math.perm(scale[i], scale[i] - a) if 0 <= a <= scale[i] else 0)
        rows.append(row)
    det = int(Matrix(rows).det(method="bareiss"))
    denominator = math.prod(math.factorial(m) for m in scale)
    value, remainder = divmod(math.factorial(n) * det, denominator)
    if remainder or value < 0:
        raise VerificationError(f"determinant count not a nonnegative integer for {outer}/{inner}", (outer, inner))
    return value


def skew_syt_count(shape) -> int:
    shape = as_skew(shape)
    return _determinant_count(shape.outer, shape.inner)


def skew_syt_count_lr(shape) -> int:
    """Σ_ν c^λ_{μν} f^ν"""
    from .lr import lr_expand

    shape = as_skew(shape)
    return lr_expand(shape.outer, shape.inner).total_weight()


@lru_cache(maxsize=1 << 16)
def _linear_extensions(current: Partition, outer: Partition) -> int:
    if current == outer:
        return 1
    total = 0
    for i in range(len(outer)):
        row = current.part(i + 1)
        if row < outer[i] and (i == 0 or current.part(i) > row):
            grown = list(current) + [0] * (i + 1 - len(current))
            grown[i] += 1
            total += _linear_extensions(Partition(grown), outer)
    return total


def skew_syt_count_enumerated(shape) -> int:
    """μ から λ へ 1 セルずつ足す道の数"""
    shape = as_skew(shape)
    return _linear_extensions(shape.inner, shape.outer)


# ===== 二乗和 =====

def _check_nm(n: int, m: int) -> None:
    if not 0 <= m <= n:
        raise ArgumentError(f"need 0 <= m <= n, got n={n}, m={m}")
    conf.check_cap("SERIES_CAP", n)


def skew_sum_squares(n: int, m: int) -> int:
    """
    Σ_{λ⊢n} Σ_{μ⊢m} (f^{λ/μ})²
    = (n−m)!·[q^m] (1−q)^{−(n−m)} ∏ 1/(1−qⁱ)
    """
    _check_nm(n, m)
    r = n - m
    coeff = sum(inverse_power_coeff(r, j) * partition_count(m - j) for j in range(m + 1))
    return math.factorial(r) * coeff


def skew_sum_squares_printed(n: int, m: int) -> int:
    """(n−m)!·Σ_{k=1}^{m} C(n−m+k−1, k−1)·p(m−k)。小さい (n, m) で上と食い違う"""
    _check_nm(n, m)
    r = n - m
    return math.factorial(r) * sum(math.comb(r + k - 1, k - 1) * partition_count(m - k) for k in range(1, m + 1))


def skew_sum_squares_bruteforce(n: int, m: int) -> int:
    _check_nm(n, m)
    total = 0
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(m):
            if contains(mu, lam):
                total += skew_syt_count(SkewShape(lam, mu)) ** 2
    return total


def skew_bounds_report(n: int, m: int) -> BoundReport:
    """
    (n−1)!/(m−1)! ≤ Σ(f^{λ/μ})² ≤ (n!/m!)·p(m) と、
    そこから出る F(m,n) の挟み込み √((n−1)!/(m−1)!/(p(m)p(n))) ≤ F ≤ √((n!/m!)p(m))
    """
    from .extremal import max_skew_syt

    if not 1 <= m <= n:
        raise ArgumentError(f"need 1 <= m <= n, got n={n}, m={m}")
    exact = skew_sum_squares(n, m)
    lower = log_factorial(n - 1) - log_factorial(m - 1)
    upper = log_factorial(n) - log_factorial(m) + math.log(partition_count(m))
    record = max_skew_syt(m, n)
    log_pp = math.log(partition_count(m)) + math.log(partition_count(n))
    checks = (
        BoundCheck("(n-1)!/(m-1)! <= S(n,m) <= (n!/m!)p(m)", log_value(exact), log_lower=lower, log_upper=upper),
        BoundCheck("F(m,n) sandwich", log_value(record.value),
                   log_lower=0.5 * (lower - log_pp), log_upper=0.5 * upper),
    )
    printed = skew_sum_squares_printed(n, m)
    notes = ()
    if printed != exact:
        notes = (f"printed closed form gives {printed}, generating function gives {exact}",)
    return BoundReport(f"S({n},{m})", exact, checks, record.witnesses, notes)


def skew_pairs(n: int, m: int) -> List[SkewShape]:
    """λ ⊢ n, μ ⊢ m, μ ⊆ λ の歪シェイプ全部"""
    return [
        SkewShape(lam, mu)
        for lam in enumerate_partitions(n)
        for mu in enumerate_partitions(m)
        if contains(mu, lam)
    ]

