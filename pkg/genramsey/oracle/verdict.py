"""The result record returned by every brute-force oracle query."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Optional, Tuple

from genramsey.graph import Graph
from genramsey.oracle.augment import EnumerationStats

EXCEEDS_BUDGET = "exceeds budget"


@dataclass
class OracleVerdict:
    """One oracle answer.

    Attributes:
        quantity: Which quantity was computed (``extremal_e``, ``alpha_min``,
            ``girth_extremal`` or ``generalized_ramsey``).
        params: The query parameters.
        value: The exact value, or None when no order within the budget
            qualified.
        witness: graph6 text of an extremal or critical graph, chosen as the
            lexicographically smallest canonical form so the choice does not
            depend on enumeration order or parallelism.
        stats: Enumeration counters.
    """

    quantity: str
    params: Dict[str, int]
    value: Optional[int]
    witness: Optional[str] = None
    stats: EnumerationStats = field(default_factory=EnumerationStats)

    @property
    def exceeds_budget(self) -> bool:
        return self.value is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quantity": self.quantity,
            "params": dict(self.params),
            "value": EXCEEDS_BUDGET if self.value is None else self.value,
            "witness": self.witness,
            "stats": self.stats.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OracleVerdict":
        value = data["value"]
        return cls(
            quantity=data["quantity"],
            params=dict(data["params"]),
            value=None if value == EXCEEDS_BUDGET else int(value),
            witness=data.get("witness"),
            stats=EnumerationStats(**data.get("stats", {})),
        )


def select_extreme(nodes: Iterable[Tuple[Graph, bytes]], score: Callable[[Graph], int],
                   maximize: bool = True) -> Tuple[Optional[int], Optional[bytes]]:
    """Best score over the nodes and the smallest certificate attaining it."""
    best: Optional[int] = None
    best_cert: Optional[bytes] = None
    for g, cert in nodes:
        value = score(g)
        better = best is None or (value > best if maximize else value < best)
        if better or (value == best and cert < best_cert):
            best, best_cert = value, cert
    return best, best_cert
