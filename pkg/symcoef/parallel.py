# symcoef/parallel.py
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = 1,
                chunksize: int = 4) -> List[R]:
    """
    func を items に適用し、入力順のリストで返す。
    workers > 1 ならプロセスプールで。func はモジュール直下の関数であること（pickle のため）。
    集約は呼び出し側が入力順に行うので、結果はワーカー数に依存しない。
    """
    items = list(items)
    # ワーカーの中ではプールを入れ子にしない
    nested = multiprocessing.parent_process() is not None
    if nested or not workers or workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    workers = min(workers, len(items))
    logger.debug("ordered_map %s over %d items with %d workers", func.__name__, len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
