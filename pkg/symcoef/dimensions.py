# symcoef/dimensions.py
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, Optional, Sequence, Tuple

from . import conf
from .exceptions import ArgumentError, VerificationError
from .parallel import ordered_map
from .partitions import Partition, as_partition, enumerate_partitions
from .reports import MaxRecord, MaxTracker, log_factorial, log_le, log_value

if TYPE_CHECKING:
    from .skew import SkewShape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HookGrid:
    shape: Partition
    hooks: Dict[Tuple[int, int], int]

    def product(self) -> int:
        return math.prod(self.hooks.values())


def hook_grid(lam: Sequence[int]) -> HookGrid:
    """h_ij = λ_i + λ'_j − i − j + 1（1 始まり）"""
    lam = as_partition(lam)
    conj = lam.conjugate()
    hooks = {
        (i, j): lam[i - 1] + conj[j - 1] - i - j + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }
    return HookGrid(lam, hooks)


@lru_cache(maxsize=1 << 16)
def _dim(lam: Partition) -> int:
    quotient, remainder = divmod(math.factorial(lam.size), hook_grid(lam).product())
    if remainder:
        raise VerificationError(f"hook-length quotient not integral for {lam}", lam)
    return quotient


def dim_irrep(lam: Sequence[int]) -> int:
    """f^λ = n!/∏h"""
    return _dim(as_partition(lam))


def schur_ones(lam: Sequence[int], m: int) -> int:
    """s_λ(1^m) = ∏(m+j−i)/h_ij。分子と分母を別々に掛けて最後に 1 回だけ割る"""
    lam = as_partition(lam)
    if m < 1:
        raise ArgumentError(f"m must be positive: {m}")
    if len(lam) > m:
        return 0
    grid = hook_grid(lam)
    numerator = math.prod(m + j - i for (i, j) in grid.hooks)
    quotient, remainder = divmod(numerator, grid.product())
    if remainder:
        raise VerificationError(f"hook-content quotient not integral for {lam}, m={m}", (lam, m))
    return quotient


def naruse_lower_bound(shape: "SkewShape") -> Fraction:
    """n!·∏_{λ/μ} 1/h_ij(λ)。h は外側 λ のフック"""
    hooks = hook_grid(shape.outer).hooks
    denominator = math.prod(hooks[cell] for cell in shape.cells())
    return Fraction(math.factorial(shape.size), denominator)


def _dims_of(n: int) -> list:
    return [dim_irrep(lam) for lam in enumerate_partitions(n)]


def max_dim(n: int, threads: Optional[int] = 1) -> MaxRecord:
    """D(n) と達成する λ（witness は (λ,) のタプル）"""
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    conf.check_cap("MAX_DIM_CAP", n)
    parts = enumerate_partitions(n)
    if threads and threads > 1:
        dims = ordered_map(dim_irrep, parts, threads, chunksize=64)
    else:
        dims = _dims_of(n)
    tracker = MaxTracker()
    for lam, f in zip(parts, dims):
        tracker.add(f, (lam,))
    return tracker.result()


def is_plancherel(lam: Sequence[int], a: float) -> bool:
    """log f^λ ≥ ½ log n! − a√n"""
    lam = as_partition(lam)
    if a <= 0:
        raise ArgumentError(f"a must be positive: {a}")
    threshold = 0.5 * log_factorial(lam.size) - a * math.sqrt(lam.size)
    return log_le(threshold, log_value(dim_irrep(lam)))


def dim_lower_bound_holds(n: int, c: float) -> bool:
    """√n!·e^{−c√n} ≤ D(n)"""
    return log_le(0.5 * log_factorial(n) - c * math.sqrt(n), log_value(max_dim(n).value))
