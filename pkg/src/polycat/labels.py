"""Labels for positions, directions, objects and morphisms.

A label is a string or a (possibly nested, possibly empty) tuple of labels.
Products build tuple labels out of their inputs, so every construction is
deterministic and printable.
"""

from __future__ import annotations

import json
import re

_BARE = re.compile(r"[A-Za-z0-9_.'+\-/*]+\Z")
_CHUNKS = re.compile(r"(\d+)")


def is_label(x) -> bool:
    if isinstance(x, str):
        return True
    if isinstance(x, tuple):
        return all(is_label(y) for y in x)
    return False


def label_key(x):
    """Total order on labels: strings (natural order) before tuples."""
    if isinstance(x, str):
        parts = _CHUNKS.split(x)
        return (0, tuple(int(p) if i % 2 else p for i, p in enumerate(parts)), x)
    return (1, tuple(label_key(y) for y in x))


def sort_labels(labels):
    return sorted(labels, key=label_key)


def format_label(x) -> str:
    if isinstance(x, str):
        if _BARE.match(x):
            return x
        return json.dumps(x, ensure_ascii=False)
    if isinstance(x, tuple):
        return "(" + ",".join(format_label(y) for y in x) + ")"
    raise TypeError(f"not a label: {x!r}")
