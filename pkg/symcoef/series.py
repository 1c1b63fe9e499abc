# symcoef/series.py
"""切り捨てべき級数（係数は Python int）。"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Tuple

from .exceptions import ArgumentError


def _check_degree(cap: int) -> None:
    if cap < 0:
        raise ArgumentError(f"degree must be nonnegative: {cap}")


@lru_cache(maxsize=4)
def hw_table(cap: int) -> Tuple[Tuple[int, ...], ...]:
    """
    ∏_{i≥1} 1/(1−qⁱ−tⁱ) の係数 B[a][b]（a+b ≤ cap）。
    因子ごとに B[a][b] += B[a−i][b] + B[a][b−i] を昇順にかける。
    """
    _check_degree(cap)
    table: List[List[int]] = [[0] * (cap + 1 - a) for a in range(cap + 1)]
    table[0][0] = 1
    for i in range(1, cap + 1):
        for a in range(cap + 1):
            row = table[a]
            for b in range(cap + 1 - a):
                value = row[b]
                if a >= i:
                    value += table[a - i][b]
                if b >= i:
                    value += row[b - i]
                row[b] = value
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=4)
def bicolored_series(cap: int) -> Tuple[int, ...]:
    """∏ 1/(1−2tⁱ) の係数 p₂(0..cap)"""
    _check_degree(cap)
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for i in range(1, cap + 1):
        for j in range(i, cap + 1):
            coeffs[j] += 2 * coeffs[j - i]
    return tuple(coeffs)


def inverse_power_coeff(r: int, j: int) -> int:
    """[q^j] (1−q)^{−r}"""
    if r < 0 or j < 0:
        raise ArgumentError(f"need r, j >= 0, got r={r}, j={j}")
    if r == 0:
        return 1 if j == 0 else 0
    return math.comb(r + j - 1, j)
