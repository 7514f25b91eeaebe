import os
from concurrent.futures import ProcessPoolExecutor

from ..constants import SCHEMA
from ..exceptions import UsageError


def thread_count(environ=None):
    """Worker count from SAITO_FORGE_THREADS, 1 when unset."""
    environ = os.environ if environ is None else environ
    value = environ.get(SCHEMA.THREADS_ENV)
    if value is None or value == "":
        return SCHEMA.DEFAULT_THREADS
    try:
        count = int(value)
    except ValueError:
        raise UsageError(f"{SCHEMA.THREADS_ENV} must be a positive integer, got {value!r}") from None
    if count < 1:
        raise UsageError(f"{SCHEMA.THREADS_ENV} must be a positive integer, got {value!r}")
    return count


def map_ordered(function, items, threads=None):
    """function applied to every item, results in the order of ``items``.

    ``function`` must be a module level callable when threads > 1.
    """
    items = list(items)
    if threads is None:
        threads = thread_count()
    if threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(function, items))
