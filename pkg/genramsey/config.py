"""Loading sweep descriptions from YAML files and command line flags."""

import dataclasses
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

import yaml

from genramsey.errors import DomainError
from genramsey.oracle import DEFAULT_PMAX, HARD_CAP
from genramsey.utils import config_hash, parse_range

log = logging.getLogger("genramsey")

# Keys a sweep file may set.
SWEEP_KEYS = ("n", "r", "k", "pmax", "jobs", "soundness_order")

# Order up to which a sweep runs the bound soundness pass by default.
DEFAULT_SOUNDNESS_ORDER = 7


@dataclass
class SweepConfig:
    """A grid of (n, r, k) cells and how to run it.

    Args:
        n: Subset sizes, each at least 4.
        k: Independent set sizes, each at least 2.
        r: Deficiencies to try. None means every r in 1..n-2 for each n;
            values outside that interval are skipped per n.
        pmax: Oracle budget. Cells whose formula value exceeds it are
            reported as skipped.
        jobs: Worker processes.
        soundness_order: Run the bound soundness pass over every graph up to
            this order; 0 disables it.
    """

    n: List[int]
    k: List[int]
    r: Optional[List[int]] = None
    pmax: int = DEFAULT_PMAX
    jobs: int = 1
    soundness_order: int = DEFAULT_SOUNDNESS_ORDER
    source: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.n or not self.k:
            raise ValueError("a sweep needs at least one n and one k")
        if min(self.n) < 4:
            raise DomainError(f"sweep cells need n >= 4 (got {self.n})")
        if min(self.k) < 2:
            raise DomainError(f"sweep cells need k >= 2 (got {self.k})")
        if not 1 <= self.pmax <= HARD_CAP:
            raise DomainError(f"pmax must lie in 1..{HARD_CAP} (got {self.pmax})")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive (got {self.jobs})")
        if not 0 <= self.soundness_order <= HARD_CAP:
            raise DomainError(f"soundness_order must lie in 0..{HARD_CAP}")

    def cells(self) -> List[Tuple[int, int, int]]:
        """The grid cells (n, r, k), in sorted order."""
        out = []
        for n in sorted(self.n):
            rs = range(1, n - 1) if self.r is None else [r for r in self.r if 1 <= r <= n - 2]
            for r in sorted(rs):
                for k in sorted(self.k):
                    out.append((n, r, k))
        return out

    def to_dict(self) -> Dict[str, Any]:
        """The fields that determine a sweep's results."""
        return {
            "n": sorted(self.n),
            "r": None if self.r is None else sorted(self.r),
            "k": sorted(self.k),
            "pmax": self.pmax,
            "soundness_order": self.soundness_order,
        }

    @property
    def hash(self) -> str:
        return config_hash(self.to_dict())

    def with_overrides(self, **overrides: Any) -> "SweepConfig":
        """A copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any], source: Optional[str] = None) -> "SweepConfig":
        """Build a config from a mapping of sweep keys.

        Raises:
            ValueError: Unknown keys or malformed ranges.
        """
        unknown = set(data) - set(SWEEP_KEYS)
        if unknown:
            raise ValueError(f"unknown sweep keys: {sorted(unknown)}")
        if "n" not in data or "k" not in data:
            raise ValueError("a sweep file must set both n and k")
        return cls(
            n=parse_range(data["n"]),
            k=parse_range(data["k"]),
            r=parse_range(data["r"]) if data.get("r") is not None else None,
            pmax=int(data.get("pmax", DEFAULT_PMAX)),
            jobs=int(data.get("jobs", 1)),
            soundness_order=int(data.get("soundness_order", DEFAULT_SOUNDNESS_ORDER)),
            source=source,
        )


def load_sweep_file(path: str) -> SweepConfig:
    """Load a sweep description from a YAML file.

    The file holds a single mapping, for example::

        n: 4..6
        k: [2, 3, 4, 5]
        pmax: 10
        jobs: 8

    Args:
        path: The path to the YAML file.

    Returns:
        The sweep configuration.

    Raises:
        ValueError: The file is not valid YAML or not a single mapping of
            sweep keys.
    """
    with open(path, "r") as f:
        try:
            docs = [d for d in yaml.load_all(f, Loader=yaml.SafeLoader) if d is not None]
        except yaml.YAMLError as e:
            raise ValueError(f"sweep file {path} is not valid YAML: {e}") from e

    if len(docs) != 1 or not isinstance(docs[0], dict):
        raise ValueError(f"sweep file {path} must contain exactly one mapping")
    log.debug(f"loaded sweep file {path}: {docs[0]}")
    return SweepConfig.from_mapping(docs[0], source=path)
