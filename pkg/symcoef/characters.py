# symcoef/characters.py
"""
S_n の既約指標を Murnaghan–Nakayama で計算し、n ごとの全表として保持する。
表はメモリ上と（設定があれば）ディスクにキャッシュ。
"""
from __future__ import annotations

import logging
import math
import os
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import conf
from .exceptions import ArgumentError
from .parallel import ordered_map
from .partitions import (
    Partition,
    as_partition,
    centralizer_order,
    enumerate_partitions,
    format_partition,
    parse_partition,
)

logger = logging.getLogger(__name__)

CACHE_VERSION = "v1"


@dataclass(frozen=True, eq=False)
class CharTable:
    """行 λ・列 α とも enumerate_partitions(n) の順。値は Python int（object 配列）"""

    n: int
    partitions: Tuple[Partition, ...]
    matrix: np.ndarray
    index: Dict[Partition, int] = field(init=False, repr=False)
    centralizers: np.ndarray = field(init=False, repr=False)
    class_sizes: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        nf = math.factorial(self.n)
        z = np.array([centralizer_order(a) for a in self.partitions], dtype=object)
        object.__setattr__(self, "index", {lam: i for i, lam in enumerate(self.partitions)})
        object.__setattr__(self, "centralizers", z)
        # n!/z_α
        object.__setattr__(self, "class_sizes", np.array([nf // v for v in z], dtype=object))

    def value(self, lam: Sequence[int], alpha: Sequence[int]) -> int:
        return int(self.matrix[self.index[as_partition(lam)], self.index[as_partition(alpha)]])

    def __getitem__(self, key: Tuple[Sequence[int], Sequence[int]]) -> int:
        return self.value(*key)

    def row(self, lam: Sequence[int]) -> np.ndarray:
        return self.matrix[self.index[as_partition(lam)]]

    @property
    def dimensions(self) -> np.ndarray:
        # 最後の列が [1^n]
        return self.matrix[:, len(self.partitions) - 1]


# ===== Murnaghan–Nakayama =====

@lru_cache(maxsize=1 << 20)
def _mn(shape: Tuple[int, ...], parts: Tuple[int, ...]) -> int:
    """χ^shape(parts)。parts の先頭（最大部分）から border strip を剥がす"""
    if not parts:
        return 1 if not shape else 0
    r, rest = parts[0], parts[1:]
    ell = len(shape)
    # β 数: 長さ r の border strip 除去 = ビーズを r 戻す
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        crossed = sum(1 for c in beta if t < c < b)
        moved = sorted([c for c in beta if c != b] + [t], reverse=True)
        size = len(moved)
        new_shape = tuple(x for x in (moved[i] - (size - 1 - i) for i in range(size)) if x > 0)
        value = _mn(new_shape, rest)
        total += -value if crossed % 2 else value
    return total


def character_value(lam: Sequence[int], alpha: Sequence[int]) -> int:
    lam, alpha = as_partition(lam), as_partition(alpha)
    if lam.size != alpha.size:
        raise ArgumentError(f"size mismatch: |{lam}| != |{alpha}|")
    table = _TABLES.get(lam.size)
    if table is not None:
        return table.value(lam, alpha)
    return _mn(tuple(lam), tuple(alpha))


def _row_values(lam: Partition) -> List[int]:
    return [_mn(tuple(lam), tuple(alpha)) for alpha in enumerate_partitions(lam.size)]


# ===== 全表とキャッシュ =====

_TABLES: Dict[int, CharTable] = {}
_TABLE_LOCKS: Dict[int, threading.Lock] = {}
_LOCKS_GUARD = threading.Lock()


def _lock_for(n: int) -> threading.Lock:
    with _LOCKS_GUARD:
        return _TABLE_LOCKS.setdefault(n, threading.Lock())


def cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"chartable_n{n}.tsv"


def character_table(n: int, cache_dir: Optional[str] = None, threads: Optional[int] = None) -> CharTable:
    """threads を省くと settings の THREADS（未設定なら 1）"""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative: {n}")
    conf.check_cap("CHAR_TABLE_CAP", n)
    table = _TABLES.get(n)
    if table is not None:
        return table
    with _lock_for(n):
        table = _TABLES.get(n)
        if table is not None:
            return table
        cache_dir = cache_dir if cache_dir is not None else conf.get("CACHE_DIR")
        table = load_table(cache_dir, n) if cache_dir else None
        if table is None:
            table = _build_table(n, threads if threads is not None else conf.get("THREADS") or 1)
            if cache_dir:
                save_table(cache_dir, table)
        _TABLES[n] = table
    return table


def _build_table(n: int, threads: Optional[int]) -> CharTable:
    parts = enumerate_partitions(n)
    logger.info("building character table n=%d (%d classes)", n, len(parts))
    rows = ordered_map(_row_values, parts, threads)
    matrix = np.empty((len(parts), len(parts)), dtype=object)
    for i, row in enumerate(rows):
        matrix[i, :] = row
    return CharTable(n, parts, matrix)


def save_table(cache_dir, table: CharTable) -> Path:
    path = cache_path(cache_dir, table.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"CHARTABLE {CACHE_VERSION} n={table.n}\n")
        for i, lam in enumerate(table.partitions):
            lam_text = format_partition(lam)
            for j, alpha in enumerate(table.partitions):
                fh.write(f"{lam_text}\t{format_partition(alpha)}\t{table.matrix[i, j]}\n")
    os.replace(tmp, path)
    logger.debug("saved character table n=%d to %s", table.n, path)
    return path


def load_table(cache_dir, n: int) -> Optional[CharTable]:
    """バージョン不一致・欠損・壊れたファイルは None（作り直す）"""
    path = cache_path(cache_dir, n)
    if not path.exists():
        logger.debug("character table cache miss n=%d", n)
        return None
    parts = enumerate_partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    matrix = np.empty((len(parts), len(parts)), dtype=object)
    seen = 0
    try:
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().strip()
            if header != f"CHARTABLE {CACHE_VERSION} n={n}":
                logger.warning("ignoring character table cache %s (header %r)", path, header)
                return None
            for line in fh:
                if not line.strip():
                    continue
                lam_text, alpha_text, value = line.rstrip("\n").split("\t")
                matrix[index[parse_partition(lam_text)], index[parse_partition(alpha_text)]] = int(value)
                seen += 1
    except (ValueError, KeyError, ArgumentError) as exc:
        logger.warning("ignoring broken character table cache %s: %s", path, exc)
        return None
    if seen != len(parts) ** 2:
        logger.warning("ignoring incomplete character table cache %s", path)
        return None
    logger.debug("character table cache hit n=%d", n)
    return CharTable(n, parts, matrix)


def clear_memory_cache() -> None:
    _TABLES.clear()


# ===== 直交関係 =====

def row_orthogonality_holds(table: CharTable) -> bool:
    """Σ_α (n!/z_α) χ^λ(α) χ^μ(α) = n! δ_{λμ}"""
    nf = math.factorial(table.n)
    gram = (table.matrix * table.class_sizes).dot(table.matrix.T)
    size = len(table.partitions)
    return all(gram[i, j] == (nf if i == j else 0) for i in range(size) for j in range(size))


def column_orthogonality_holds(table: CharTable) -> bool:
    """Σ_λ χ^λ(α) χ^λ(β) = z_α δ_{αβ}"""
    gram = table.matrix.T.dot(table.matrix)
    z = table.centralizers
    size = len(table.partitions)
    return all(gram[i, j] == (z[i] if i == j else 0) for i in range(size) for j in range(size))
