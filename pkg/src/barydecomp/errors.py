"""Domain errors carrying a stable machine-readable code."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an operation's precondition fails.

    ``code`` is a stable identifier (e.g. ``"barycenter_mismatch"``) suitable
    for programmatic dispatch; ``detail`` is a human-readable explanation.
    """

    def __init__(self, code: str, detail: str = ""):
        self.code = code
        self.detail = detail
        super().__init__(f"{code}: {detail}" if detail else code)
