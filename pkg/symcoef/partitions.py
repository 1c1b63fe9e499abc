# symcoef/partitions.py
from __future__ import annotations

import logging
import math
import re
import threading
from collections import Counter
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import ArgumentError

logger = logging.getLogger(__name__)

# "4^2" のような 1 項（部分^重複度）
_TERM_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")
EMPTY_TEXT = "[]"


class Partition(tuple):
    """
    弱減少な正整数列。() が 0 の分割。
    tuple の大小比較がそのまま昇順の辞書式比較になるので、
    「辞書式最小の witness」はソートして先頭を取ればよい。
    """

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        items = [int(p) for p in parts]
        # 末尾の 0 は捨てる（meet/join のゼロ埋めを許す）
        while items and items[-1] == 0:
            items.pop()
        for i, p in enumerate(items):
            if p <= 0:
                raise ArgumentError(f"partition parts must be positive: {items}")
            if i and p > items[i - 1]:
                raise ArgumentError(f"partition parts must be weakly decreasing: {items}")
        return super().__new__(cls, items)

    @cached_property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """1 始まりの i 行目。範囲外は 0"""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(value)


def format_partition(lam: Sequence[int]) -> str:
    if not lam:
        return EMPTY_TEXT
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    """
    "3,2,1" / "4^2,1^3" / "[]" / "[3,2,1]" を受け付ける。
    部分の並びは自由（ソートする）。
    """
    if text is None:
        raise ArgumentError("empty partition text")
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    if not s:
        return Partition()
    parts: List[int] = []
    for term in s.split(","):
        m = _TERM_RE.match(term)
        if not m:
            raise ArgumentError(f"bad partition syntax: {text!r}")
        value = int(m.group(1))
        times = int(m.group(2)) if m.group(2) is not None else 1
        if value == 0:
            raise ArgumentError(f"partition parts must be positive: {text!r}")
        parts.extend([value] * times)
    return Partition(sorted(parts, reverse=True))


# ===== 列挙と個数 =====

def _generate(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=64)
def _partitions_of(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition(p) for p in _generate(n, n))


def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """n の分割を降順の辞書式で全列挙"""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    return _partitions_of(n)


def partitions_with_length(n: int, length: int) -> List[Partition]:
    return [lam for lam in enumerate_partitions(n) if len(lam) == length]


_P_MEMO: List[int] = [1]
_P_LOCK = threading.Lock()


def partition_count(n: int) -> int:
    """p(n)。五角数漸化式でメモ化"""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    if n < len(_P_MEMO):
        return _P_MEMO[n]
    with _P_LOCK:
        for m in range(len(_P_MEMO), n + 1):
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * _P_MEMO[m - g1]
                g2 = k * (3 * k + 1) // 2
                if g2 <= m:
                    total += sign * _P_MEMO[m - g2]
                k += 1
            _P_MEMO.append(total)
    return _P_MEMO[n]


def hardy_ramanujan_ratio(n: int) -> float:
    """p(n) / ((1/(4n√3)) e^{π√(2n/3)})。log で比較してから exp"""
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    log_estimate = math.pi * math.sqrt(2 * n / 3) - math.log(4 * n * math.sqrt(3))
    return math.exp(math.log(partition_count(n)) - log_estimate)


def log_concavity_holds(n: int, k: int = 1) -> bool:
    """p(n)² ≥ p(n−k)·p(n+k)"""
    if not 0 < k <= n:
        raise ArgumentError(f"need 0 < k <= n, got n={n}, k={k}")
    return partition_count(n) ** 2 >= partition_count(n - k) * partition_count(n + k)


# ===== 分割の演算 =====

def centralizer_order(alpha: Sequence[int]) -> int:
    """z_α = ∏ i^{m_i} m_i!"""
    alpha = as_partition(alpha)
    z = 1
    for part, mult in alpha.multiplicities().items():
        z *= part ** mult * math.factorial(mult)
    return z


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def meet_join(mu: Sequence[int], nu: Sequence[int]) -> Tuple[Partition, Partition]:
    mu, nu = as_partition(mu), as_partition(nu)
    width = max(len(mu), len(nu))
    a = [mu.part(i) for i in range(1, width + 1)]
    b = [nu.part(i) for i in range(1, width + 1)]
    meet = Partition(min(x, y) for x, y in zip(a, b))
    join = Partition(max(x, y) for x, y in zip(a, b))
    return meet, join


def multiset_union(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    return Partition(sorted(list(alpha) + list(beta), reverse=True))


def contains(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """μ ⊆ λ"""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def hat_transform(lam: Sequence[int]) -> Partition:
    """(λ₃, λ₄, …) ∪ 1^{λ₁+λ₂}"""
    lam = as_partition(lam)
    return multiset_union(lam[2:], [1] * (lam.part(1) + lam.part(2)))


def staircase(k: int) -> Partition:
    """δ_k = (k−1, k−2, …, 1)"""
    if k < 0:
        raise ArgumentError(f"k must be nonnegative: {k}")
    return Partition(range(k - 1, 0, -1))


def add_to_first_row(lam: Sequence[int], r: int = 1) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition([r])
    return Partition((lam[0] + r,) + tuple(lam[1:]))


def sub_partitions(lam: Sequence[int], sizes: Optional[Iterable[int]] = None) -> Iterator[Partition]:
    """
    μ ⊆ λ を降順の辞書式で列挙。sizes を渡すと |μ| がその中にあるものだけ。
    """
    lam = as_partition(lam)
    wanted = set(sizes) if sizes is not None else None
    lo = min(wanted) if wanted else 0
    hi = max(wanted) if wanted else lam.size
    rows = len(lam)
    # suffix[i] = λ_{i+1} + … （残り行に置ける最大）
    suffix = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        suffix[i] = suffix[i + 1] + lam[i]

    def rec(i: int, cap: int, acc: List[int], total: int) -> Iterator[Partition]:
        if i == rows or cap == 0:
            if lo <= total <= hi and (wanted is None or total in wanted):
                yield Partition(acc)
            return
        for part in range(min(lam[i], cap), -1, -1):
            new_total = total + part
            if new_total > hi:
                continue
            # 以降の行は part 以下・λ 以下
            if new_total + min(suffix[i + 1], part * (rows - i - 1)) < lo:
                break
            if part == 0:
                if lo <= total <= hi and (wanted is None or total in wanted):
                    yield Partition(acc)
                continue
            acc.append(part)
            yield from rec(i + 1, part, acc, new_total)
            acc.pop()

    if wanted is not None and not wanted:
        return iter(())
    return rec(0, lam.first, [], 0)
