# symcoef/conf.py
import os
import threading
from contextlib import contextmanager
from typing import Any, Dict

from django.conf import settings

from .exceptions import ResourceLimitError

DEFAULTS = {
    "CHAR_TABLE_CAP": 20,
    "MAX_DIM_CAP": 40,
    "KRON_BRUTE_CAP": 8,
    "MAX_KRON_CAP": 12,
    "LR_IDENTITY_CAP": 10,
    "SERIES_CAP": 40,
    "LR_CAP": 23,
    "TABLE_CAP": 18,
    "STRETCH_CAP": 23,
    "STABILIZATION_K_CAP": 6,
    "HIVE_SIDE_CAP": 16,
    "SKEW_CAUCHY_CAP": 8,
    "TREE_CAP": 16,
    "WITNESS_LIMIT": 64,
    "CACHE_DIR": None,
    "THREADS": None,
}

# 1 回の実行だけ有効な上書き（CLI のフラグ）
_OVERRIDES: Dict[str, Any] = {}
_OVERRIDES_LOCK = threading.Lock()


def get(key: str) -> Any:
    """
    上書き → settings.SYMCOEF[key] → 既定値 の順。
    Django の設定が無い（ライブラリとして直接 import された）場合は既定値。
    """
    if key not in DEFAULTS:
        raise KeyError(key)
    if key in _OVERRIDES:
        return _OVERRIDES[key]
    cfg = getattr(settings, "SYMCOEF", {}) if settings.configured else {}
    return cfg.get(key, DEFAULTS[key])


@contextmanager
def overrides(**values):
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise KeyError(", ".join(sorted(unknown)))
    with _OVERRIDES_LOCK:
        saved = dict(_OVERRIDES)
        _OVERRIDES.update({k: v for k, v in values.items() if v is not None})
    try:
        yield
    finally:
        with _OVERRIDES_LOCK:
            _OVERRIDES.clear()
            _OVERRIDES.update(saved)


def check_cap(key: str, value: int, label: str = "n") -> None:
    cap = get(key)
    if value > cap:
        raise ResourceLimitError(f"{label}={value} exceeds {key}={cap}")


def default_threads() -> int:
    threads = get("THREADS")
    if threads:
        return int(threads)
    return os.cpu_count() or 1
