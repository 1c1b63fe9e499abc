# symcoef/exceptions.py
from typing import Any, Optional


class SymcoefError(Exception):
    """symcoef が投げる例外の基底"""


class ArgumentError(SymcoefError, ValueError):
    """サイズ不一致・包含違反・定義域外・構文エラーなど、入力側の問題"""


class ResourceLimitError(SymcoefError):
    """設定された上限（n の cap、時間予算）を超えた"""


class VerificationError(SymcoefError):
    """恒等式・不等式の検証に失敗した。witness に最小の反例を持つ"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness
