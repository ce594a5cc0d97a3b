"""Process-local cache of expensive generating-function builds.

Builds are keyed by (kind, t).  Only the highest order built so far is kept;
smaller orders are served by truncation, which is exact because every series
operation commutes with truncation.
"""

from __future__ import annotations

import functools
import threading

_lock = threading.RLock()
_store: dict = {}


def series_cache(kind: str):
    def decorate(build):
        @functools.wraps(build)
        def wrapper(t: int, order: int, *args):
            key = (kind, t) + args
            with _lock:
                hit = _store.get(key)
                if hit is not None and hit.order >= order:
                    return hit if hit.order == order else hit.truncate(order)
                value = build(t, order, *args)
                _store[key] = value
                return value

        wrapper.uncached = build
        return wrapper

    return decorate


def clear():
    with _lock:
        _store.clear()
