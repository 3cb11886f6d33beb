"""Error types that the CLI maps onto distinct exit codes."""

from __future__ import annotations


class SceneFormatError(ValueError):
    """Scene document is syntactically broken or structurally wrong."""


class TraceFormatError(ValueError):
    """Trace line cannot be parsed or breaks the event schema."""


class InvariantError(ValueError):
    """Well-formed input that violates a semantic invariant."""
