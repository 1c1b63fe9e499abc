# symcoef/lr.py
"""
Littlewood–Richardson 係数。

主実装は LR タブローの列挙: λ/μ のセルを読み順（上の行から、行内は右から左）に埋め、
各時点で読み語の格子条件を確かめる。内容 ν ごとに数えれば lr_expand が 1 回で得られる。
独立な第二実装は hives.lr_coefficient_hive。
"""
from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import conf
from .dimensions import dim_irrep, hook_grid
from .exceptions import ArgumentError, VerificationError
from .hives import Hive, iter_hives, lr_coefficient_hive  # noqa: F401
from .partitions import (
    Partition,
    add_to_first_row,
    as_partition,
    centralizer_order,
    contains,
    enumerate_partitions,
    meet_join,
    multiset_union,
    partition_count,
    sub_partitions,
)
from .reports import MaxRecord, MaxTracker, VerificationReport
from .series import bicolored_series, hw_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LRExpansion:
    """s_{λ/μ} = Σ_ν c^λ_{μν} s_ν。coeffs は ν の降順（辞書式）"""

    lam: Partition
    mu: Partition
    coeffs: Dict[Partition, int] = field(default_factory=dict)

    def __iter__(self):
        return iter(self.coeffs.items())

    def get(self, nu: Sequence[int]) -> int:
        return self.coeffs.get(as_partition(nu), 0)

    def total_weight(self) -> int:
        """Σ_ν c·f^ν = f^{λ/μ}"""
        return sum(c * dim_irrep(nu) for nu, c in self.coeffs.items())


# ===== LR タブローの列挙 =====

def lr_contents(lam: Partition, mu: Partition, target: Optional[Partition] = None) -> Counter:
    """
    λ/μ の LR タブローを内容ごとに数える。target を渡すとその内容だけを探す。
    μ ⊄ λ なら空。
    """
    if not contains(mu, lam):
        return Counter()
    rows = len(lam)
    inner = [mu.part(r + 1) for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, inner[r] - 1, -1)]
    grid = [[0] * lam[r] for r in range(rows)]
    counts = [0] * (rows + 2)
    if target is not None:
        limit = [0] + [target.part(v) for v in range(1, rows + 2)]
    else:
        limit = [0] + [len(cells)] * (rows + 1)
    result: Counter = Counter()
    total = len(cells)

    def rec(idx: int) -> None:
        if idx == total:
            result[Partition(counts[1:])] += 1
            return
        r, c = cells[idx]
        row = grid[r]
        hi = r + 1
        if c + 1 < lam[r]:
            hi = min(hi, row[c + 1])
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        for v in range(lo, hi + 1):
            # 格子条件: #v ≤ #(v−1)
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if counts[v] >= limit[v]:
                continue
            counts[v] += 1
            row[c] = v
            rec(idx + 1)
            counts[v] -= 1
        row[c] = 0

    rec(0)
    return result


@lru_cache(maxsize=1 << 14)
def _expand(lam: Partition, mu: Partition) -> LRExpansion:
    counts = lr_contents(lam, mu)
    return LRExpansion(lam, mu, {nu: counts[nu] for nu in sorted(counts, reverse=True)})


def lr_expand(lam: Sequence[int], mu: Sequence[int]) -> LRExpansion:
    lam, mu = as_partition(lam), as_partition(mu)
    conf.check_cap("LR_CAP", lam.size)
    return _expand(lam, mu)


def _sizes(lam: Partition, mu: Partition, nu: Partition) -> None:
    if mu.size + nu.size != lam.size:
        raise ArgumentError(f"size mismatch: |{mu}| + |{nu}| != |{lam}|")


@lru_cache(maxsize=1 << 16)
def _coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not (contains(mu, lam) and contains(nu, lam)):
        return 0
    return lr_contents(lam, mu, nu)[nu]


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _sizes(lam, mu, nu)
    conf.check_cap("LR_CAP", lam.size)
    return _coefficient(lam, mu, nu)


def skew_hive_bound(n: int, ell: int) -> int:
    """内部点 (ℓ−1)(ℓ−2)/2 個がそれぞれ 0..n を取る場合の数"""
    if n < 0 or ell < 1:
        raise ArgumentError(f"need n >= 0 and ell >= 1, got n={n}, ell={ell}")
    return (n + 1) ** ((ell - 1) * (ell - 2) // 2)


# ===== 恒等式 =====

def _multiplicity_product(alpha: Partition, beta: Partition) -> int:
    ma, mb = alpha.multiplicities(), beta.multiplicities()
    return math.prod(math.comb(ma[i] + mb[i], ma[i]) for i in set(ma) | set(mb))


def verify_lr_identities(n: int, k: int) -> VerificationReport:
    """
    全三つ組を列挙して次を確かめる:
      Σ_{μ,ν} c f^μ f^ν = f^λ、Σ_λ c f^λ = C(n,k) f^μ f^ν、
      Σ c² = Σ_{α,β} ∏ C(m_i(α)+m_i(β), m_i(α)) = Σ z_{α∪β}/(z_α z_β)、
      Σ_λ c² ≤ C(n,k)、Σ_{μ,ν} c² ≤ C(n,k)、C(n,k) ≤ Σ c² ≤ C(n,k)·p(n)
    """
    if not 0 <= k <= n:
        raise ArgumentError(f"need 0 <= k <= n, got n={n}, k={k}")
    conf.check_cap("LR_IDENTITY_CAP", n)
    report = VerificationReport(f"lr-identities n={n} k={k}")
    binom = math.comb(n, k)
    by_lam: Dict[Partition, int] = defaultdict(int)
    by_pair: Dict[Tuple[Partition, Partition], int] = defaultdict(int)
    sq_lam: Dict[Partition, int] = defaultdict(int)
    sq_pair: Dict[Tuple[Partition, Partition], int] = defaultdict(int)
    total = 0
    for lam in enumerate_partitions(n):
        for mu in sub_partitions(lam, sizes=(k,)):
            for nu, c in lr_expand(lam, mu):
                by_lam[lam] += c * dim_irrep(mu) * dim_irrep(nu)
                by_pair[(mu, nu)] += c * dim_irrep(lam)
                sq_lam[lam] += c * c
                sq_pair[(mu, nu)] += c * c
                total += c * c
                report.record(c * c <= binom, "c^2 <= C(n,k)", (lam, mu, nu))

    for lam in enumerate_partitions(n):
        report.record(by_lam[lam] == dim_irrep(lam), "sum c f^mu f^nu = f^lam", (lam,))
        report.record(sq_lam[lam] <= binom, "sum_{mu,nu} c^2 <= C(n,k)", (lam,))
    for mu in enumerate_partitions(k):
        for nu in enumerate_partitions(n - k):
            report.record(by_pair[(mu, nu)] == binom * dim_irrep(mu) * dim_irrep(nu),
                          "sum c f^lam = C(n,k) f^mu f^nu", (mu, nu))
            report.record(sq_pair[(mu, nu)] <= binom, "sum_lam c^2 <= C(n,k)", (mu, nu))

    multiplicity = 0
    centralizer = Fraction(0)
    for alpha in enumerate_partitions(k):
        for beta in enumerate_partitions(n - k):
            multiplicity += _multiplicity_product(alpha, beta)
            centralizer += Fraction(centralizer_order(multiset_union(alpha, beta)),
                                    centralizer_order(alpha) * centralizer_order(beta))
    report.record(total == multiplicity, "sum c^2 = sum of multiplicity binomials", (n, k))
    report.record(centralizer == multiplicity, "centralizer form = multiplicity form", (n, k))
    report.record(binom <= total <= binom * partition_count(n), "C(n,k) <= sum c^2 <= C(n,k) p(n)", (n, k))
    if n <= conf.get("SERIES_CAP"):
        report.record(hw_coefficient(k, n - k) == total, "series coefficient = sum c^2", (n, k))
    report.details.update(total=total, binomial=binom, multiplicity=multiplicity)
    logger.debug("lr identities n=%d k=%d: sum c^2=%d", n, k, total)
    return report.raise_on_failure()


def hw_coefficient(k: int, m: int) -> int:
    """[q^k t^m] ∏ 1/(1−qⁱ−tⁱ)"""
    if k < 0 or m < 0:
        raise ArgumentError(f"need k, m >= 0, got k={k}, m={m}")
    conf.check_cap("SERIES_CAP", k + m, label="k+m")
    return hw_table(conf.get("SERIES_CAP"))[k][m]


def bicolored_count(n: int) -> int:
    """p₂(n) = [tⁿ] ∏ 1/(1−2tⁱ)"""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    conf.check_cap("SERIES_CAP", n)
    return bicolored_series(conf.get("SERIES_CAP"))[n]


# ===== C(λ) と上界 =====

@lru_cache(maxsize=1 << 12)
def _refined_max(lam: Partition) -> MaxRecord:
    tracker = MaxTracker()
    for mu in sub_partitions(lam):
        for nu, c in lr_contents(lam, mu).items():
            tracker.add(c, (mu, nu))
    return tracker.result()


def refined_max_lr(lam: Sequence[int]) -> MaxRecord:
    """C(λ) = max_{μ,ν} c^λ_{μν}。witness は (μ, ν)"""
    lam = as_partition(lam)
    conf.check_cap("LR_CAP", lam.size)
    return _refined_max(lam)


def hook_content_bound(lam: Sequence[int], ell: int, check: bool = True) -> Fraction:
    """∏ (2ℓ+j−i)/(ℓ+j−i)。小さい λ では C(λ)² 以上であることも確かめる"""
    lam = as_partition(lam)
    if ell < len(lam):
        raise ArgumentError(f"ell={ell} is smaller than the length of {lam}")
    cells = hook_grid(lam).hooks
    bound = Fraction(math.prod(2 * ell + j - i for (i, j) in cells),
                     math.prod(ell + j - i for (i, j) in cells))
    if check and lam.size <= conf.get("LR_IDENTITY_CAP"):
        c = refined_max_lr(lam).value
        if c * c > bound:
            raise VerificationError(f"C({lam})^2={c * c} exceeds hook-content bound {bound}", (lam, ell))
    return bound


def lr_coefficient_bound_check(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """c^λ_{μν} ≤ √n·p(k)p(n−k)·C(μ)C(ν)"""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    c = lr_coefficient(lam, mu, nu)
    n, k = lam.size, mu.size
    rhs = partition_count(k) * partition_count(n - k) * refined_max_lr(mu).value * refined_max_lr(nu).value
    return c * c <= n * rhs * rhs


# ===== 木による下界 =====

@dataclass(frozen=True)
class TreeNode:
    shape: Partition
    coefficient: Optional[int] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def product(self) -> int:
        if self.is_leaf:
            return 1
        return self.coefficient * self.left.product() * self.right.product()

    def lines(self, indent: int = 0) -> List[str]:
        pad = "  " * indent
        if self.is_leaf:
            return [f"{pad}{self.shape}"]
        out = [f"{pad}{self.shape} c={self.coefficient}"]
        out.extend(self.left.lines(indent + 1))
        out.extend(self.right.lines(indent + 1))
        return out


@dataclass(frozen=True)
class TreeCertificate:
    root: TreeNode
    depth: int
    product: int
    dimension: int

    @property
    def description(self) -> str:
        return "\n".join(self.root.lines())


def _grow(shape: Partition, level: int, depth: int) -> TreeNode:
    if level >= depth or shape.size <= 1:
        return TreeNode(shape)
    record = refined_max_lr(shape)
    left, right = record.witness
    return TreeNode(shape, record.value, _grow(left, level + 1, depth), _grow(right, level + 1, depth))


def tree_certificate(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> TreeCertificate:
    """
    根の子を μ, ν とし、以下は各節点 ρ を c^ρ_{φψ} 最大の分け方（辞書式最小）で割る。
    深さ ⌈log₂ n⌉ まで。内部節点の c の積が f^λ 以下であることを確かめる。
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _sizes(lam, mu, nu)
    conf.check_cap("TREE_CAP", lam.size)
    c = lr_coefficient(lam, mu, nu)
    if c == 0:
        raise ArgumentError(f"c^{lam}_{{{mu},{nu}}} = 0")
    depth = max(1, math.ceil(math.log2(lam.size))) if lam.size > 1 else 1
    root = TreeNode(lam, c, _grow(mu, 1, depth), _grow(nu, 1, depth))
    product = root.product()
    dimension = dim_irrep(lam)
    if product > dimension:
        raise VerificationError(f"tree product {product} exceeds f^{lam}={dimension}", (lam, mu, nu))
    return TreeCertificate(root, depth, product, dimension)


# ===== その他の性質 =====

def verify_skew_cauchy_square(mu: Sequence[int], nu: Sequence[int]) -> VerificationReport:
    """Σ_λ (c^λ_{μν})² = Σ_{α,β} (Σ_γ c^μ_{αγ} c^ν_{βγ})²"""
    mu, nu = as_partition(mu), as_partition(nu)
    conf.check_cap("SKEW_CAUCHY_CAP", max(mu.size, nu.size), label="|mu|,|nu|")
    n = mu.size + nu.size
    lhs = 0
    for lam in enumerate_partitions(n):
        if contains(mu, lam) and contains(nu, lam):
            c = lr_expand(lam, mu).get(nu)
            lhs += c * c
    left = [lr_expand(mu, alpha).coeffs for alpha in sub_partitions(mu)]
    right = [lr_expand(nu, beta).coeffs for beta in sub_partitions(nu)]
    rhs = 0
    for a in left:
        for b in right:
            inner = sum(c * b.get(gamma, 0) for gamma, c in a.items())
            rhs += inner * inner
    report = VerificationReport(f"skew-cauchy {mu} {nu}")
    report.record(lhs == rhs, "sum_lam c^2 = skew Cauchy quadruple sum", (mu, nu))
    report.details.update(lhs=lhs, rhs=rhs)
    return report.raise_on_failure()


def verify_lpp(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """c^λ_{μν} ≤ c^λ_{μ∧ν, μ∨ν}"""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    meet, join = meet_join(mu, nu)
    return lr_coefficient(lam, mu, nu) <= lr_coefficient(lam, meet, join)


def lr_vanishing_rows(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """ℓ(λ) > ℓ(μ)+ℓ(ν) なら c = 0"""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    _sizes(lam, mu, nu)
    return len(lam) > len(mu) + len(nu)


def monotone_embedding_holds(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """c^λ_{μν} ≤ c^{λ+1}_{μ,ν+1}"""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    return lr_coefficient(lam, mu, nu) <= lr_coefficient(add_to_first_row(lam), mu, add_to_first_row(nu))
