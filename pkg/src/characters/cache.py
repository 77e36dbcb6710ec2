"""
Process-wide memo for character values.

Keys are (partition parts, remaining cycle parts) tuples. When the entry cap is reached
the whole cache is discarded; writes of identical values are idempotent, so concurrent
readers and writers never observe a wrong value.
"""

import logging
import threading
from typing import Any, Dict, Hashable, Optional

from src.utils.config import config

logger = logging.getLogger(__name__)


class CharacterCache:
    """Bounded dictionary with discard-all eviction."""

    def __init__(self, capacity: Optional[int] = None):
        self.capacity = int(capacity if capacity is not None else config.CACHE_ENTRIES)
        if self.capacity < 1:
            raise ValueError(f"cache capacity must be positive, got {self.capacity}")
        self._store: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.discards = 0

    def get(self, key: Hashable) -> Any:
        value = self._store.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: Hashable, value: Any) -> None:
        if len(self._store) >= self.capacity:
            with self._lock:
                if len(self._store) >= self.capacity:
                    self._store.clear()
                    self.discards += 1
                    logger.debug("character cache full (%d entries); discarded", self.capacity)
        self._store[key] = value

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def resize(self, capacity: int) -> None:
        if capacity < 1:
            raise ValueError(f"cache capacity must be positive, got {capacity}")
        with self._lock:
            self.capacity = capacity
            if len(self._store) > capacity:
                self._store.clear()
                self.discards += 1

    def __len__(self) -> int:
        return len(self._store)

    def stats(self) -> Dict[str, int]:
        return {
            "entries": len(self._store),
            "capacity": self.capacity,
            "hits": self.hits,
            "misses": self.misses,
            "discards": self.discards,
        }


# Shared instance used by character_value unless a cache is passed explicitly
default_cache = CharacterCache()


def configure_cache(capacity: int) -> CharacterCache:
    """Resize the shared cache (the CLI calls this for --cache-entries)."""
    default_cache.resize(capacity)
    return default_cache
