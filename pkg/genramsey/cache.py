"""A persistent store of oracle verdicts.

The cache is a single JSON-lines file. The first line names the tool version
that wrote it; every following line is one record::

    {"key": "<canonical key>", "verdict": {...}}

A file written by another tool version is discarded as a whole the first
time it is opened.
"""

import json
import logging
import os
import threading
from typing import Dict, Mapping, Optional

from genramsey import __version__
from genramsey.errors import CacheError
from genramsey.oracle.verdict import OracleVerdict
from genramsey.utils import canonical_key

log = logging.getLogger("genramsey")

CACHE_DIR_ENV = "GENRAMSEY_CACHE_DIR"
CACHE_FILE = "results.jsonl"


def default_cache_dir() -> str:
    """The cache directory from the environment, else ``~/.cache/genramsey``."""
    return os.environ.get(CACHE_DIR_ENV) or os.path.join(
        os.path.expanduser("~"), ".cache", "genramsey"
    )


class ResultCache:
    """Oracle verdicts keyed by quantity and parameters.

    Args:
        directory: Where the cache file lives. Created when missing. Defaults
            to ``default_cache_dir()``.
        version: The tool version; records from other versions are dropped.

    Raises:
        CacheError: The directory cannot be created or the file cannot be read.
    """

    def __init__(self, directory: Optional[str] = None, version: str = __version__) -> None:
        self.directory = directory or default_cache_dir()
        self.version = version
        self.path = os.path.join(self.directory, CACHE_FILE)
        self._records: Dict[str, dict] = {}
        self._lock = threading.Lock()

        try:
            os.makedirs(self.directory, exist_ok=True)
        except OSError as e:
            raise CacheError(f"cannot create cache directory {self.directory}: {e}") from e
        self._load()

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, key: str) -> bool:
        return key in self._records

    def _header(self) -> str:
        return json.dumps({"tool_version": self.version})

    def _reset(self) -> None:
        try:
            with open(self.path, "w", encoding="utf-8") as f:
                f.write(self._header() + "\n")
        except OSError as e:
            raise CacheError(f"cannot write cache file {self.path}: {e}") from e
        self._records = {}

    def _load(self) -> None:
        if not os.path.exists(self.path):
            self._reset()
            return
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                lines = f.read().splitlines()
        except OSError as e:
            raise CacheError(f"cannot read cache file {self.path}: {e}") from e

        try:
            header = json.loads(lines[0]) if lines else {}
        except json.JSONDecodeError:
            header = {}
        if header.get("tool_version") != self.version:
            log.warning(
                f"cache {self.path} written by version {header.get('tool_version')}, "
                f"invalidating for {self.version}"
            )
            self._reset()
            return

        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                self._records[record["key"]] = record["verdict"]
            except (json.JSONDecodeError, KeyError, TypeError):
                log.warning(f"skipping corrupt cache line {lineno} in {self.path}")
        log.debug(f"loaded {len(self._records)} cached verdicts from {self.path}")

    def get(self, kind: str, params: Mapping[str, int]) -> Optional[OracleVerdict]:
        """Look up a verdict, or None on a miss."""
        key = canonical_key(kind, params)
        data = self._records.get(key)
        if data is None:
            return None
        log.info(f"cache hit: {key}")
        return OracleVerdict.from_dict(data)

    def put(self, verdict: OracleVerdict) -> None:
        """Store a verdict, appending it to the cache file."""
        key = canonical_key(verdict.quantity, verdict.params)
        data = verdict.to_dict()
        with self._lock:
            try:
                with open(self.path, "a", encoding="utf-8") as f:
                    f.write(json.dumps({"key": key, "verdict": data}) + "\n")
            except OSError as e:
                raise CacheError(f"cannot write cache file {self.path}: {e}") from e
            self._records[key] = data

    def clear(self) -> None:
        """Drop every record."""
        with self._lock:
            self._reset()
