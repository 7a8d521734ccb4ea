# src/skeintail/corpus/__init__.py
"""The bundled diagram corpus and its pinned adequacy manifest."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, List, Tuple

from ..diagram import Diagram, parse_pd

_PACKAGE = "skeintail.corpus"


def _root():
    return resources.files(_PACKAGE)


def names() -> List[str]:
    return sorted(p.name[:-3] for p in _root().iterdir() if p.name.endswith(".pd"))


def read_text(name: str) -> str:
    path = _root() / f"{name}.pd"
    if not path.is_file():
        raise KeyError(f"no corpus diagram named {name!r}")
    return path.read_text(encoding="utf-8")


def load(name: str) -> Diagram:
    return parse_pd(read_text(name), name=name)


@lru_cache(maxsize=1)
def manifest() -> Dict[str, Any]:
    return json.loads((_root() / "manifest.json").read_text(encoding="utf-8"))


def related_pairs(move: str) -> List[Tuple[str, str]]:
    return [tuple(r["pair"]) for r in manifest()["related"] if r["move"] == move]  # type: ignore[misc]


def by_link(link: str) -> List[str]:
    return sorted(k for k, v in manifest()["diagrams"].items() if v["link"] == link)


def select(**fields: Any) -> List[str]:
    """Names whose manifest entry matches every given field, e.g. select(A_adequate=False)."""
    out = []
    for name, entry in manifest()["diagrams"].items():
        if all(entry.get(k) == v for k, v in fields.items()):
            out.append(name)
    return sorted(out)
