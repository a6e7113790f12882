"""A single-file JSON cache for enumeration results.

The file carries a schema version; a missing, unreadable or outdated file is
treated as empty and rewritten on the next store. Writes go to a temporary
file in the same directory and are moved into place atomically.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

SCHEMA_VERSION = 1
FILE_NAME = "aksch-cache.json"
ENV_VAR = "AKSCH_CACHE_DIR"

log = logging.getLogger(__name__)


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "aksch"


class EnumerationCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.path = Path(directory if directory is not None else default_dir()) / FILE_NAME
        self._entries: dict | None = None

    def _load(self) -> dict:
        if self._entries is None:
            self._entries = {}
            try:
                data = json.loads(self.path.read_text())
                if isinstance(data, dict) and data.get("version") == SCHEMA_VERSION \
                        and isinstance(data.get("entries"), dict):
                    self._entries = data["entries"]
                else:
                    log.info("ignoring cache with unexpected layout at %s", self.path)
            except FileNotFoundError:
                pass
            except (OSError, ValueError) as exc:
                log.info("ignoring unreadable cache %s: %s", self.path, exc)
        return self._entries

    def get(self, key: str):
        return self._load().get(key)

    def put(self, key: str, value) -> None:
        entries = self._load()
        entries[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=".aksch-", dir=self.path.parent)
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump({"version": SCHEMA_VERSION, "entries": entries}, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def fetch(self, key: str, compute: Callable[[], object]):
        """Cached value for ``key``, computing and storing it on a miss."""
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        # store the JSON round-trip so hits and misses return identical data
        value = json.loads(json.dumps(value))
        self.put(key, value)
        return value


def cache_key(kind: str, n: int, r: int, m) -> str:
    return f"v{SCHEMA_VERSION}:{kind}:n={n}:r={r}:m={','.join(map(str, m))}"
