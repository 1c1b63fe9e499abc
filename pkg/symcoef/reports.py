# symcoef/reports.py
"""最大値レコード・上下界レポート・検証レポートと、対数領域の小道具。"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from scipy.special import gammaln

from . import conf
from .exceptions import VerificationError

LOG_RTOL = 1e-9
# witness 上限は settings から。None を渡すと無制限
DEFAULT_LIMIT: Any = object()


# ===== 対数領域 =====

def log_factorial(n: int) -> float:
    return float(gammaln(n + 1))


def log_value(x: Union[int, Fraction, float]) -> float:
    """巨大整数・有理数でも安全な log。0 は -inf"""
    if isinstance(x, Fraction):
        if x <= 0:
            return -math.inf
        return math.log(x.numerator) - math.log(x.denominator)
    if x <= 0:
        return -math.inf
    return math.log(x)


def log_le(a: float, b: float) -> bool:
    """a ≤ b を相対許容誤差つきで"""
    if a == -math.inf or b == math.inf:
        return True
    return a <= b + LOG_RTOL * max(1.0, abs(b))


# ===== 最大値 =====

@dataclass(frozen=True)
class MaxRecord:
    value: int
    witnesses: Tuple[tuple, ...]
    count: int = 0

    @property
    def witness(self) -> tuple:
        return self.witnesses[0]


class MaxTracker:
    """
    値の最大とその witness を集める。witness は辞書式昇順で limit 個まで、
    count は達成した総数。
    """

    def __init__(self, limit: Optional[int] = DEFAULT_LIMIT):
        self.limit = conf.get("WITNESS_LIMIT") if limit is DEFAULT_LIMIT else limit
        self.value: Optional[int] = None
        self.count = 0
        self._witnesses: List[tuple] = []

    def add(self, value: int, witness: tuple) -> None:
        if self.value is None or value > self.value:
            self.value = value
            self.count = 0
            self._witnesses = []
        if value == self.value:
            self.count += 1
            self._witnesses.append(witness)
            if self.limit is not None and len(self._witnesses) > 4 * self.limit:
                self._witnesses = sorted(set(self._witnesses))[: self.limit]

    def merge(self, record: MaxRecord) -> None:
        if self.value is None or record.value > self.value:
            self.value = record.value
            self.count = 0
            self._witnesses = []
        if record.value == self.value:
            self.count += record.count
            self._witnesses.extend(record.witnesses)

    def result(self) -> MaxRecord:
        if self.value is None:
            raise ValueError("no candidates")
        unique = sorted(set(self._witnesses))
        if self.limit is not None:
            unique = unique[: self.limit]
        return MaxRecord(self.value, tuple(unique), max(self.count, len(unique)))


# ===== 上下界 =====

@dataclass(frozen=True)
class BoundCheck:
    name: str
    log_value: float
    log_lower: Optional[float] = None
    log_upper: Optional[float] = None
    asserted: bool = True

    @property
    def passed(self) -> bool:
        if self.log_lower is not None and not log_le(self.log_lower, self.log_value):
            return False
        if self.log_upper is not None and not log_le(self.log_value, self.log_upper):
            return False
        return True


@dataclass(frozen=True)
class BoundReport:
    subject: str
    exact_value: Optional[Union[int, Fraction]]
    checks: Tuple[BoundCheck, ...]
    witnesses: Tuple[tuple, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def lower(self) -> float:
        lows = [c.log_lower for c in self.checks if c.asserted and c.log_lower is not None]
        return max(lows) if lows else -math.inf

    @property
    def upper(self) -> float:
        ups = [c.log_upper for c in self.checks if c.asserted and c.log_upper is not None]
        return min(ups) if ups else math.inf

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.asserted)

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


# ===== 検証 =====

@dataclass
class VerificationReport:
    name: str
    checked: int = 0
    failures: List[Tuple[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, ok: bool, label: str, witness: Any = None) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append((label, witness))
        return ok

    @property
    def passed(self) -> bool:
        return not self.failures

    def raise_on_failure(self) -> "VerificationReport":
        if self.failures:
            label, witness = self.failures[0]
            raise VerificationError(f"{self.name}: {label} fails at {witness}", witness)
        return self

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        for key, value in other.details.items():
            self.details[f"{other.name}.{key}"] = value

