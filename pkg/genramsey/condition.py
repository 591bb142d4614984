"""Named deferred checks, used to build pass/fail verification reports."""

from typing import Any, Callable, Dict, List, Tuple


class Condition:
    """A Condition wraps a predicate and its arguments so it can be evaluated
    later and reported by name.

    The predicate is called in ``check``, which resolves the result to a
    boolean. Predicates that raise a ``ValueError`` (for example a
    ``DomainError`` from a formula evaluator) count as unmet, and the error
    text is kept in ``error``.

    Args:
        name: The name the check is reported under.
        fn: The predicate.
        *args: Positional arguments for the predicate.
        **kwargs: Keyword arguments for the predicate.

    Attributes:
        last_check (bool): The result of the most recent ``check``.
        error (str): The error raised by the most recent ``check``, if any.

    Raises:
        ValueError: The given ``fn`` is not callable.
    """

    def __init__(self, name: str, fn: Callable[..., Any], *args, **kwargs) -> None:
        if not callable(fn):
            raise ValueError("The Condition function must be callable")

        self.name = name
        self.fn = fn
        self.args = args
        self.kwargs = kwargs

        self.last_check = False
        self.error = ""

    def __str__(self) -> str:
        return f"<Condition (name: {self.name}, met: {self.last_check})>"

    def __repr__(self) -> str:
        return self.__str__()

    def check(self) -> bool:
        """Evaluate the predicate.

        Returns:
            True if the condition was met; False otherwise.
        """
        try:
            self.last_check = bool(self.fn(*self.args, **self.kwargs))
            self.error = ""
        except ValueError as e:
            self.last_check = False
            self.error = str(e)
        return self.last_check

    def to_dict(self) -> Dict[str, Any]:
        """The report entry for the last check."""
        entry: Dict[str, Any] = {"name": self.name, "passed": self.last_check}
        if self.error:
            entry["error"] = self.error
        return entry


def check_and_sort(*args: Condition) -> Tuple[List[Condition], List[Condition]]:
    """Check all the given Conditions and sort them into 'met' and 'unmet' buckets.

    Returns:
        The met and unmet condition buckets (in that order).
    """
    met, unmet = [], []

    for c in args:
        if c.check():
            met.append(c)
        else:
            unmet.append(c)

    return met, unmet
