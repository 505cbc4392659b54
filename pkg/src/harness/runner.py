"""
Corpus runner: evaluates items sequentially or in a process pool, always
returning results in corpus order
"""
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def run_ordered(func: Callable[[T], R], items: Sequence[T], workers: int = 1,
                desc: str = "Processing", verbose: bool = True) -> List[R]:
    """
    Args:
        func: Picklable (module-level) callable applied to each item
        items: Corpus items
        workers: Process count; 1 runs in this process
        desc: Progress bar label
        verbose: Show the progress bar (on stderr)
    """
    progress = tqdm(total=len(items), desc=desc, disable=not verbose, file=sys.stderr)
    results: List[R] = []
    if workers <= 1:
        for item in items:
            results.append(func(item))
            progress.update(1)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(func, items):
                results.append(result)
                progress.update(1)
    progress.close()
    return results
