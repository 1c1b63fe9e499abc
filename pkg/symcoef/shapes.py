# symcoef/shapes.py
"""
極限形状まわりの数値計算: VKLS 曲線、フック積分、定数、VKLS への距離。
実数はすべて倍精度。
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from .exceptions import ArgumentError
from .partitions import Partition, as_partition

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
PSI_XTOL = 1e-12


@dataclass(frozen=True)
class Constants:
    c1: float
    c2: float
    d: float
    K: float


@dataclass(frozen=True)
class CurveFn:
    """行方向 u → 行の長さ。定義域上で非増加"""

    domain: Tuple[float, float]
    evaluate: Callable[[np.ndarray], np.ndarray]
    name: str = "curve"

    def __call__(self, x):
        return self.evaluate(np.asarray(x, dtype=float))

    def is_non_increasing(self, points: int = 1000) -> bool:
        xs = np.linspace(self.domain[0], self.domain[1], points)
        ys = self(xs)
        return bool(np.all(np.diff(ys) <= 1e-12))


@lru_cache(maxsize=1)
def constants() -> Constants:
    """c1 = π/√6、c2 = (π−2)/π²、d = π(1+√2)/√6、K = ∏(1−2^{−i})^{−1}"""
    k = 1.0
    i = 1
    while True:
        term = 1.0 / (1.0 - 2.0 ** -i)
        k *= term
        if term - 1.0 < 1e-17:
            break
        i += 1
    return Constants(
        c1=math.pi / math.sqrt(6),
        c2=(math.pi - 2) / math.pi ** 2,
        d=math.pi * (1 + SQRT2) / math.sqrt(6),
        K=k,
    )


# ===== VKLS 曲線 =====

def omega_vkls(x):
    """Ω(x) = (2/π)(x·arcsin(x/2) + √(4−x²))、|x| > 2 では |x|"""
    x = np.asarray(x, dtype=float)
    inside = np.clip(x, -2.0, 2.0)
    value = (2 / np.pi) * (inside * np.arcsin(inside / 2) + np.sqrt(np.maximum(4 - inside ** 2, 0.0)))
    return np.where(np.abs(x) <= 2.0, value, np.abs(x))


def _phi_array(x: np.ndarray) -> np.ndarray:
    # φ(x) = Ω(√2x)/√2
    return omega_vkls(SQRT2 * np.asarray(x, dtype=float)) / SQRT2


def vkls_phi(x: float) -> float:
    """φ(x) = (2/π)(x·arcsin(x/√2) + √(2−x²))"""
    if not -SQRT2 - 1e-12 <= x <= SQRT2 + 1e-12:
        raise ArgumentError(f"x out of [-sqrt2, sqrt2]: {x}")
    x = min(max(x, -SQRT2), SQRT2)
    return (2 / math.pi) * (x * math.asin(x / SQRT2) + math.sqrt(max(2 - x * x, 0.0)))


def vkls_psi(u: float) -> float:
    """u = (φ(x)+x)/√2 を x について解き、ψ = (φ(x)−x)/√2"""
    if not -1e-12 <= u <= 2 + 1e-12:
        raise ArgumentError(f"u out of [0, 2]: {u}")
    u = min(max(u, 0.0), 2.0)
    if u == 0.0:
        return 2.0
    if u == 2.0:
        return 0.0
    x = brentq(lambda t: (vkls_phi(t) + t) / SQRT2 - u, -SQRT2, SQRT2, xtol=PSI_XTOL)
    return (vkls_phi(x) - x) / SQRT2


def psi_array(u: np.ndarray, iterations: int = 64) -> np.ndarray:
    """vkls_psi のベクトル版（二分法）。[0,2] の外は 0"""
    u = np.asarray(u, dtype=float)
    clipped = np.clip(u, 0.0, 2.0)
    lo = np.full(clipped.shape, -SQRT2)
    hi = np.full(clipped.shape, SQRT2)
    for _ in range(iterations):
        mid = (lo + hi) / 2
        above = (_phi_array(mid) + mid) / SQRT2 > clipped
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    x = (lo + hi) / 2
    value = (_phi_array(x) - x) / SQRT2
    return np.where((u >= 0) & (u <= 2), np.maximum(value, 0.0), 0.0)


def vkls_curve() -> CurveFn:
    return CurveFn((0.0, 2.0), psi_array, "psi")


def unit_square_curve() -> CurveFn:
    return CurveFn((0.0, 1.0), lambda x: np.ones_like(np.asarray(x, dtype=float)), "unit-square")


def zero_curve(domain: Tuple[float, float] = (0.0, 2.0)) -> CurveFn:
    return CurveFn(domain, lambda x: np.zeros_like(np.asarray(x, dtype=float)), "zero")


def curve_samples(curve: CurveFn, points: int = 201) -> List[Tuple[float, float]]:
    xs = np.linspace(curve.domain[0], curve.domain[1], points)
    return list(zip(xs.tolist(), curve(xs).tolist()))


# ===== 離散化 =====

def _row_targets(n: int, rows: int) -> np.ndarray:
    # 行 i は中点 (i − ½)/√n で ψ を読む
    root = math.sqrt(n)
    u = (np.arange(1, rows + 1) - 0.5) / root
    return root * psi_array(u)


def vkls_partition(n: int) -> Partition:
    """
    行の長さ √n·ψ((i−½)/√n) を丸め、サイズが n になるまで角のセルを足し引きする。
    足すときは不足が最大の角、引くときは超過が最大の角。同点は小さい行番号。
    """
    if n < 1:
        raise ArgumentError(f"n must be positive: {n}")
    rows = int(math.ceil(2 * math.sqrt(n))) + 2
    targets = _row_targets(n, rows)
    lam = [int(round(t)) for t in targets]
    for i in range(1, rows):
        lam[i] = min(lam[i], lam[i - 1])
    total = sum(lam)
    while total < n:
        best_i, best_gap = None, None
        for i in range(rows):
            if i == 0 or lam[i - 1] > lam[i]:
                gap = targets[i] - lam[i]
                if best_gap is None or gap > best_gap:
                    best_i, best_gap = i, gap
            if lam[i] == 0:
                break
        lam[best_i] += 1
        total += 1
    while total > n:
        best_i, best_gap = None, None
        for i in range(rows):
            if lam[i] == 0:
                break
            nxt = lam[i + 1] if i + 1 < rows else 0
            if lam[i] > nxt:
                gap = lam[i] - targets[i]
                if best_gap is None or gap > best_gap:
                    best_i, best_gap = i, gap
        lam[best_i] -= 1
        total -= 1
    return Partition(lam)


def row_deviation(lam: Sequence[int]) -> float:
    """max_i |λ_i − √n·ψ((i−½)/√n)|（セル単位）"""
    lam = as_partition(lam)
    n = lam.size
    rows = max(len(lam), int(math.ceil(2 * math.sqrt(n))) + 2)
    targets = _row_targets(n, rows)
    padded = np.array([lam.part(i) for i in range(1, rows + 1)], dtype=float)
    return float(np.max(np.abs(padded - targets)))


def vkls_distance(lam: Sequence[int], points: int = 2001) -> float:
    """
    回転座標での sup 偏差: 各 x で図形の境界の高さ P(x) と φ(x) の差の最大。
    単調な曲線同士なら Fréchet 距離の上界になる。
    """
    lam = as_partition(lam)
    n = lam.size
    if n == 0:
        raise ArgumentError("empty partition has no profile")
    root = math.sqrt(n)
    rows = np.array(list(lam) + [0], dtype=float) / root

    def inside(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        idx = np.minimum(np.floor(u * root).astype(int), len(lam))
        return v <= rows[idx]

    reach = max(len(lam), lam.first) / root
    half = max(SQRT2, reach / SQRT2 + 0.1)
    xs = np.linspace(-half, half, points)
    lo = np.abs(xs)
    hi = lo + 2 * reach + 1.0
    for _ in range(60):
        mid = (lo + hi) / 2
        u = (mid + xs) / SQRT2
        v = (mid - xs) / SQRT2
        ok = inside(u, v)
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    return float(np.max(np.abs(lo - _phi_array(xs))))


# ===== フック積分 =====

def hook_integral_partition(lam: Sequence[int]) -> float:
    """−(1/n)·Σ log(h_ij/√n)"""
    lam = as_partition(lam)
    n = lam.size
    if n < 1:
        raise ArgumentError("hook integral needs a nonempty partition")
    conj = np.array(lam.conjugate(), dtype=float)
    total = 0.0
    for i, row in enumerate(lam, start=1):
        j = np.arange(1, row + 1)
        hooks = row + conj[j - 1] - i - j + 1
        total += float(np.sum(np.log(hooks)))
    return -(total - 0.5 * n * math.log(n)) / n


def hook_integral_curve(omega: CurveFn, pi: CurveFn, grid: int = 1000) -> float:
    """
    ω と π の間の領域での −∬ log ℏ（中点則、grid² セル）。
    ℏ(x,y) = ω^{-1}(y) − x + ω(x) − y は外側 ω のフック。
    """
    if grid < 2:
        raise ArgumentError(f"grid too small: {grid}")
    a, b = omega.domain
    xs = a + (np.arange(grid) + 0.5) * (b - a) / grid
    top = omega(xs)
    bottom = pi(xs)
    if np.any(bottom > top + 1e-12):
        raise ArgumentError("inner curve exceeds outer curve")
    dx = (b - a) / grid
    area = float(np.sum(top - bottom) * dx)
    if abs(area - 1.0) > 1e-3:
        raise ArgumentError(f"region area must be 1, got {area:.6f}")

    # ω^{-1}(y) は細かい標本での数え上げ
    fine = 16 * grid
    fx = a + (np.arange(fine) + 0.5) * (b - a) / fine
    neg_values = -omega(fx)

    def inverse(y: np.ndarray) -> np.ndarray:
        count = np.searchsorted(neg_values, -y, side="left")
        return a + count * (b - a) / fine

    height = float(np.max(top))
    ys = (np.arange(grid) + 0.5) * height / grid
    dy = height / grid
    inv = inverse(ys)
    total = 0.0
    for y, x_end in zip(ys, inv):
        mask = (bottom <= y) & (y < top)
        if not np.any(mask):
            continue
        hooks = (x_end - xs[mask]) + (top[mask] - y)
        hooks = np.maximum(hooks, 1e-300)
        total += float(np.sum(np.log(hooks)))
    return -total * dx * dy
