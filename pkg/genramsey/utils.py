"""Utility functions for genramsey."""

import hashlib
import json
import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Mapping, Union

log = logging.getLogger("genramsey")


def parse_range(value: Union[str, int, List[int]]) -> List[int]:
    """Parse an integer range.

    Accepted forms are a single integer (``"4"``), an inclusive range
    (``"4..6"``), a comma separated list (``"2,3,5"``), or a list of integers
    as found in a sweep file.

    Args:
        value: The range, as text, an integer or a list.

    Returns:
        The sorted, deduplicated integers.

    Raises:
        ValueError: The range is malformed or empty.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a range: {value!r}")
    if isinstance(value, int):
        return [value]
    if isinstance(value, (list, tuple)):
        items: List[int] = []
        for item in value:
            items.extend(parse_range(item))
        return sorted(set(items))

    text = str(value).strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            start, stop = int(lo), int(hi)
        except ValueError:
            raise ValueError(f"malformed range: {value!r}") from None
        if start > stop:
            raise ValueError(f"empty range: {value!r}")
        return list(range(start, stop + 1))
    try:
        values = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise ValueError(f"malformed range: {value!r}") from None
    if not values:
        raise ValueError(f"empty range: {value!r}")
    return values


def canonical_key(kind: str, params: Mapping[str, Any]) -> str:
    """Create the canonical string for a quantity and its parameters.

    Parameters are rendered as ``name=value`` pairs in sorted name order, so
    the key does not depend on how the parameters were assembled.

    Args:
        kind: The quantity name (e.g. ``generalized_ramsey``).
        params: The parameter mapping.

    Returns:
        A string such as ``generalized_ramsey:k=3,n=3,pmax=10,r=1,s=1``.
    """
    return kind + ":" + ",".join(f"{k}={params[k]}" for k in sorted(params))


def config_hash(config: Mapping[str, Any]) -> str:
    """A short stable hash of a JSON-serializable configuration."""
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


@contextmanager
def timed(record: Dict[str, float], name: str = "seconds") -> Iterator[None]:
    """Store the wall-clock duration of the block into ``record[name]``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        record[name] = round(time.perf_counter() - start, 6)
