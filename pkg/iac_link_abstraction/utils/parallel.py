import logging
import os
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger(__name__)

WORKERS_ENV_VAR = 'IACLA_WORKERS'


def default_workers():
    """
    Returns the worker count configured through the environment, 1 when unset
    """
    value = os.environ.get(WORKERS_ENV_VAR, '1')
    try:
        return max(1, int(value))
    except ValueError:
        logger.warning('Ignoring non-integer %s=%r', WORKERS_ENV_VAR, value)
        return 1


def parallel_map(fn, items, workers=1):
    """
    Maps fn over items, in a process pool when workers > 1
    The output order always matches the input order
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(fn, items))
