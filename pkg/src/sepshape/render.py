"""ASCII rendering of Ferrers diagrams and tableau grids."""

from __future__ import annotations

from .core import Partition, Tableau

__all__ = ["render_ferrers", "render_tableau"]


def render_ferrers(p: Partition) -> str:
    """One left-justified line of box glyphs per part; deterministic bytes.

    >>> render_ferrers(Partition((2, 1)))
    '■■\\n■'
    """
    return "\n".join("■" * part for part in p.parts)


def render_tableau(t: Tableau) -> str:
    """Rows of entries padded to a common width."""
    if not t.rows:
        return ""
    width = max(len(str(v)) for row in t.rows for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in t.rows)
