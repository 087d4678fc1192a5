"""JSON formats for posets, polytopes and analysis reports.

Posets: ``{"d": int, "covers": [[i, j], ...]}`` meaning ``p_i < p_j``.
Polytopes: ``{"ambient_dim": m, "vertices": [[...], ...]}``.
Rationals are always ``{"num": int, "den": int}``; no floats are written.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ParseError
from .polytope import LatticePolytope
from .posets import Poset, from_cover_relations


def rational(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def parse_rational(obj: Any) -> Fraction:
    try:
        return Fraction(int(obj["num"]), int(obj["den"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad rational {obj!r}") from exc


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def parse_poset(text: str) -> Poset:
    obj = _load(text)
    if not isinstance(obj, dict) or "d" not in obj:
        raise ParseError('poset JSON needs a "d" field')
    d = obj["d"]
    covers = obj.get("covers", [])
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError(f"d must be a positive integer, got {d!r}")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c) for c in covers
    ):
        raise ParseError("covers must be a list of [i, j] integer pairs")
    try:
        return from_cover_relations(d, covers)
    except ValueError as exc:
        if type(exc) is ValueError:
            raise ParseError(str(exc)) from exc
        raise


def poset_to_json(P: Poset) -> dict:
    return {"d": P.d, "covers": [list(c) for c in P.covers()]}


def parse_polytope(text: str) -> LatticePolytope:
    obj = _load(text)
    try:
        m = int(obj["ambient_dim"])
        verts = [[int(x) for x in v] for v in obj["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("polytope JSON needs ambient_dim and integer vertices") from exc
    if any(len(v) != m for v in verts):
        raise ParseError("vertex length differs from ambient_dim")
    return LatticePolytope(verts, m)


def read_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text())


def read_polytope(path: str | Path) -> LatticePolytope:
    return parse_polytope(Path(path).read_text())


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


@dataclass
class AnalysisReport:
    """Invariants of one polytope; ``to_json`` keeps a fixed key order."""

    vertices: list[list[int]]
    facets: list[dict]
    reflexive: bool | None = None
    normal: dict | None = None
    f_vector: list[int] | None = None
    ehrhart: list[Fraction] | None = None
    volume: Fraction | None = None
    normalized_volume: int | None = None
    input: dict = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "facets": self.facets,
            "reflexive": self.reflexive,
            "normal": self.normal,
            "f_vector": self.f_vector,
            "ehrhart": None if self.ehrhart is None else [rational(c) for c in self.ehrhart],
            "volume": None if self.volume is None else rational(self.volume),
            "normalized_volume": self.normalized_volume,
            "vertex_count": self.vertex_count,
            "facet_count": self.facet_count,
            "input": self.input,
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }
