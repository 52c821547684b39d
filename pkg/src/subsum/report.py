"""Invariant reports shared by the closed-form and brute-force engines."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field, fields
from typing import Any

from .graphs import ComponentProfile
from .spectrum import SpectrumSpec

INF = math.inf

# fields compared between engines, in report order
COMPARED_FIELDS = (
    "vertices",
    "edges",
    "component_count",
    "components",
    "clique",
    "independence",
    "chromatic",
    "clique_cover",
    "girth",
    "connected",
    "domination",
    "complement_connected",
    "complement_diameter",
    "complement_radius",
    "complement_domination",
    "spectrum",
)


def profile_counts(profiles) -> tuple[tuple[ComponentProfile, int], ...]:
    counts = Counter(profiles)
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class GraphReport:
    """Invariants of one graph and of its complement.

    ``girth``, ``complement_diameter`` and ``complement_radius`` use ``INF``
    for "no cycle" and "disconnected".  ``spectrum`` is a :class:`SpectrumSpec`
    from the closed-form engine and a sorted tuple of floats from the oracle.
    """

    vertices: int
    edges: int
    component_count: int
    components: tuple[tuple[ComponentProfile, int], ...]
    clique: int
    independence: int
    chromatic: int
    clique_cover: int
    girth: float
    connected: bool
    domination: int
    complement_connected: bool
    complement_diameter: float
    complement_radius: float
    complement_domination: int
    spectrum: Any
    # oracle-only extras
    clique_witness: tuple[int, ...] | None = field(default=None, compare=False)
    domination_witness: tuple[int, ...] | None = field(default=None, compare=False)
    perfect: bool | None = field(default=None, compare=False)
    perfectness_witness: tuple[int, ...] | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None and not f.compare:
                continue
            key = f.name
            if key == "spectrum" and not isinstance(v, SpectrumSpec):
                key = "numeric_spectrum"
            out[key] = _jsonable(f.name, v)
        return out


@dataclass(frozen=True)
class InvariantReport:
    group: str
    subgroup: str
    extended: GraphReport
    sum: GraphReport
    engine: str = "closed"
    params: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "engine": self.engine,
            "group": self.group,
            "subgroup": self.subgroup,
            "params": self.params,
            "extended": self.extended.to_json(),
            "sum": self.sum.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def format_value(v) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def _jsonable(name: str, v):
    if name == "components":
        return [
            {
                "kind": p.kind.value,
                "part_sizes": list(p.part_sizes),
                "matching_size": p.matching_size,
                "count": c,
            }
            for p, c in v
        ]
    if name == "spectrum":
        if isinstance(v, SpectrumSpec):
            return v.to_json()
        return [round(float(x), 12) + 0.0 for x in v]
    if isinstance(v, tuple):
        return list(v)
    return format_value(v)
