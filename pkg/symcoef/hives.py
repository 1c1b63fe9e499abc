# symcoef/hives.py
"""
Knutson–Tao の hive で c^λ_{μν} を数える（LR 規則とは独立な第二の実装）。

頂点 (i, j), i, j ≥ 0, i + j ≤ ℓ。境界は
  j = 0     : μ の部分和
  i + j = ℓ : |μ| + ν の部分和
  i = 0     : λ の部分和
菱形ごとに「鈍角側の和 ≥ 鋭角側の和」。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import conf
from .exceptions import ArgumentError
from .partitions import Partition, as_partition, contains

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class Hive:
    side: int
    entries: Dict[Point, int]
    lam: Partition
    mu: Partition
    nu: Partition

    def entry(self, i: int, j: int) -> int:
        return self.entries[(i, j)]

    def rhombi_hold(self) -> bool:
        return all(
            sum(self.entries[p] for p in pos) >= sum(self.entries[q] for q in neg)
            for pos, neg in _rhombi(self.side - 1)
        )


def _partial_sums(parts: Sequence[int], ell: int) -> List[int]:
    sums = [0]
    for i in range(ell):
        sums.append(sums[-1] + (parts[i] if i < len(parts) else 0))
    return sums


def hive_boundary(lam: Partition, mu: Partition, nu: Partition, ell: int) -> Dict[Point, int]:
    a, b, c = _partial_sums(mu, ell), _partial_sums(nu, ell), _partial_sums(lam, ell)
    boundary: Dict[Point, int] = {}
    for i in range(ell + 1):
        boundary[(i, 0)] = a[i]
    for j in range(ell + 1):
        boundary[(ell - j, j)] = mu.size + b[j]
        boundary[(0, j)] = c[j]
    return boundary


@lru_cache(maxsize=64)
def _rhombi(ell: int) -> Tuple[Tuple[Tuple[Point, Point], Tuple[Point, Point]], ...]:
    """(鈍角の 2 点, 鋭角の 2 点) の一覧"""
    out = []
    for i in range(ell + 1):
        for j in range(ell + 1 - i):
            if i + j + 2 <= ell:
                out.append((((i + 1, j), (i, j + 1)), ((i, j), (i + 1, j + 1))))
            if j >= 1 and i + j + 1 <= ell:
                out.append((((i, j), (i + 1, j)), ((i, j + 1), (i + 1, j - 1))))
            if i >= 1 and i + j + 1 <= ell:
                out.append((((i, j), (i, j + 1)), ((i + 1, j), (i - 1, j + 1))))
    return tuple(out)


def _search(lam: Partition, mu: Partition, nu: Partition, collect: bool) -> Iterator[Optional[Dict[Point, int]]]:
    ell = len(lam)
    values = hive_boundary(lam, mu, nu, ell)
    # 内部点は行優先の固定順
    interior = [(i, j) for i in range(1, ell) for j in range(1, ell - i)]
    rank = {p: k for k, p in enumerate(interior)}
    bounds: Dict[Point, List[Tuple[int, Point, Tuple[Point, Point]]]] = {p: [] for p in interior}
    for pos, neg in _rhombi(ell):
        last = max(rank.get(p, -1) for p in pos + neg)
        if last < 0:
            if sum(values[p] for p in pos) < sum(values[q] for q in neg):
                return
            continue
        target = interior[last]
        if target in pos:
            other = pos[1] if pos[0] == target else pos[0]
            bounds[target].append((1, other, neg))
        else:
            other = neg[1] if neg[0] == target else neg[0]
            bounds[target].append((-1, other, pos))

    def rec(k: int):
        if k == len(interior):
            yield dict(values) if collect else None
            return
        point = interior[k]
        lo, hi = 0, lam.size
        for sign, other, pair in bounds[point]:
            # 下界: x ≥ Σpair − other、上界: x ≤ Σpair − other
            limit = values[pair[0]] + values[pair[1]] - values[other]
            if sign > 0:
                lo = max(lo, limit)
            else:
                hi = min(hi, limit)
        for x in range(lo, hi + 1):
            values[point] = x
            yield from rec(k + 1)
        values.pop(point, None)

    yield from rec(0)


def _prepare(lam, mu, nu) -> Tuple[Partition, Partition, Partition, bool]:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if mu.size + nu.size != lam.size:
        raise ArgumentError(f"size mismatch: |{mu}| + |{nu}| != |{lam}|")
    conf.check_cap("HIVE_SIDE_CAP", len(lam) + 1, label="hive side")
    possible = contains(mu, lam) and contains(nu, lam)
    return lam, mu, nu, possible


def iter_hives(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Iterator[Hive]:
    lam, mu, nu, possible = _prepare(lam, mu, nu)
    if not possible:
        return
    for entries in _search(lam, mu, nu, collect=True):
        yield Hive(len(lam) + 1, entries, lam, mu, nu)


def lr_coefficient_hive(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu, possible = _prepare(lam, mu, nu)
    if not possible:
        return 0
    return sum(1 for _ in _search(lam, mu, nu, collect=False))
