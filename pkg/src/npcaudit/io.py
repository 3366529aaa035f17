"""JSON complex files: ``{"name": str (optional), "facets": [[int, ...], ...]}``."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .complex import ComplexError, SimplicialComplex, from_facets

__all__ = ["loads_complex", "load_complex", "dumps_complex", "dump_complex"]


def loads_complex(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "facets" not in data:
        raise ComplexError('complex files must be objects with a "facets" array')
    facets = data["facets"]
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ComplexError('"name" must be a string')
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ComplexError('"facets" must be an array of arrays')
    return from_facets(facets, name=name)


def load_complex(path: Union[str, Path]) -> SimplicialComplex:
    return loads_complex(Path(path).read_text())


def dumps_complex(K: SimplicialComplex, name: str = None) -> str:
    """Canonical text: facets sorted ascending inside and lexicographically overall."""
    data = {}
    name = name if name is not None else K.name
    if name is not None:
        data["name"] = name
    data["facets"] = [list(f) for f in K.sorted_facets()]
    return json.dumps(data, separators=(", ", ": ")) + "\n"


def dump_complex(K: SimplicialComplex, path: Union[str, Path], name: str = None) -> None:
    Path(path).write_text(dumps_complex(K, name))
