"""Cross-check the closed-form engine against the oracle over families of (G, H)."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .closed_form import predict_invariants
from .errors import InvalidParameterError, SubsumError
from .groups import (
    CosetStats,
    Group,
    Subgroup,
    abelian_groups,
    classify_cosets,
    cyclic_groups,
    cyclic_subgroups,
    subgroup_generated,
    subgroup_nG,
)
from .literals import parse_group, parse_subgroup
from .oracle import oracle_invariants
from .report import COMPARED_FIELDS, INF, GraphReport, InvariantReport, format_value
from .spectrum import SpectrumSpec

SPECTRUM_TOL = 1e-6
HARD_MAX_ORDER = 512
SUBGROUP_FAMILIES = ("all-nG", "all-single-generator", "corpus", "explicit")
CSV_COLUMNS = ("group", "subgroup", "invariant", "closed_value", "oracle_value", "match", "flag")


# -- published claims that the computed values can disagree with -----------------------


def _claimed_girth_extended(stats: CosetStats):
    if stats.k > 2:
        return 3
    if stats.k == 2 and stats.sGH != stats.m:
        return 4
    return INF


def _claimed_girth_sum(stats: CosetStats):
    if stats.k > 3:
        return 3
    if stats.k == 3:
        return 6
    if stats.k == 2:
        return INF
    return None


# (graph, field) -> stated value as a function of the census, None where silent
PUBLISHED_CLAIMS: dict[tuple[str, str], Callable[[CosetStats], object]] = {
    ("extended", "girth"): _claimed_girth_extended,
    ("sum", "girth"): _claimed_girth_sum,
}


def claim_flag(graph: str, name: str, stats: CosetStats, value) -> str:
    claim_fn = PUBLISHED_CLAIMS.get((graph, name))
    if claim_fn is None:
        return ""
    claim = claim_fn(stats)
    if claim is None or claim == value:
        return ""
    return f"paper-says-{format_value(claim)}"


# -- comparison ----------------------------------------------------------------------------


def spectra_match(exact: SpectrumSpec, numeric, tol: float = SPECTRUM_TOL) -> bool:
    a = sorted(exact.numeric())
    b = sorted(float(x) for x in numeric)
    return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def _render(name: str, v) -> str:
    if name == "components":
        return " ".join(f"{p}x{c}" for p, c in v)
    if name == "spectrum":
        if isinstance(v, SpectrumSpec):
            return str(v)
        return "[" + ", ".join(f"{x:.6f}" for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


@dataclass(frozen=True)
class FieldDiff:
    graph: str
    name: str
    closed: object
    oracle: object
    match: bool | None
    flag: str = ""

    @property
    def invariant(self) -> str:
        return f"{self.graph}.{self.name}"


def diff_reports(closed: InvariantReport, oracle: InvariantReport | None, stats: CosetStats) -> list[FieldDiff]:
    out = []
    for graph in ("extended", "sum"):
        c_rep: GraphReport = getattr(closed, graph)
        o_rep = getattr(oracle, graph) if oracle is not None else None
        for name in COMPARED_FIELDS:
            cv = getattr(c_rep, name)
            ov = getattr(o_rep, name) if o_rep is not None else None
            if o_rep is None:
                match = None
            elif name == "spectrum":
                match = spectra_match(cv, ov)
            else:
                match = cv == ov
            out.append(FieldDiff(graph, name, cv, ov, match, claim_flag(graph, name, stats, cv)))
    return out


def verify_pair(g: Group, h: Subgroup, group_label: str = "", subgroup_label: str = "",
                engines: str = "both", max_hole: int | None = None) -> list[FieldDiff]:
    stats = classify_cosets(g, h)
    closed = predict_invariants(stats, group_label, subgroup_label)
    oracle = None
    if engines in ("both", "oracle"):
        oracle = oracle_invariants(g, h, max_hole, group_label, subgroup_label)
    return diff_reports(closed, oracle, stats)


# -- corpora -----------------------------------------------------------------------------------


def subgroup_family(g: Group, family: str, explicit: Iterable[str] = ()) -> list[tuple[str, Subgroup]]:
    """Distinct subgroups of a family, each with a literal that rebuilds it."""
    if family not in SUBGROUP_FAMILIES:
        raise InvalidParameterError(f"unknown subgroup family {family!r}")
    found: dict[tuple[int, ...], tuple[str, Subgroup]] = {}
    if family in ("all-nG", "corpus"):
        for n in range(1, g.order + 1):
            h = subgroup_nG(g, n)
            found.setdefault(h.members, (f"n:{n}", h))
    if family in ("all-single-generator", "corpus"):
        for h in cyclic_subgroups(g):
            if h.members in found:
                continue
            gen = _a_generator(g, h)
            found[h.members] = ("gens:(" + ",".join(map(str, gen)) + ")", h)
    if family == "explicit":
        for text in explicit:
            h = parse_subgroup(g, text)
            found.setdefault(h.members, (text, h))
    return sorted(found.values(), key=lambda item: (item[1].k, item[1].members))


def _a_generator(g: Group, h: Subgroup):
    for i in h.members:
        x = g.from_index(i)
        if subgroup_generated(g, [x]).members == h.members:
            return x
    raise AssertionError("subgroup is not cyclic")


def corpus_pairs(max_order: int, min_order: int = 1, family: str = "corpus",
                 groups: Iterable[Group] | None = None) -> list[tuple[Group, str, Subgroup]]:
    if groups is None:
        groups = abelian_groups(max_order, min_order)
    return [(g, label, h) for g in groups for label, h in subgroup_family(g, family)]


# -- sweep -----------------------------------------------------------------------------------------


@dataclass
class SweepConfig:
    max_order: int = 16
    group_family: str = "all-abelian"  # all-abelian | cyclic | given
    groups: list[str] = field(default_factory=list)
    subgroup_family: str = "all-nG"  # all-nG | all-single-generator | corpus | explicit
    subgroups: list[str] = field(default_factory=list)
    engines: str = "both"  # closed | oracle | both
    min_order: int = 2
    max_hole: int | None = None
    jobs: int = 1

    def __post_init__(self):
        if not 2 <= self.max_order <= HARD_MAX_ORDER:
            raise InvalidParameterError(f"max_order must be in [2, {HARD_MAX_ORDER}]")
        if self.engines not in ("closed", "oracle", "both"):
            raise InvalidParameterError(f"unknown engines {self.engines!r}")

    def group_list(self) -> list[Group]:
        if self.group_family == "all-abelian":
            return abelian_groups(self.max_order, self.min_order)
        if self.group_family == "cyclic":
            return cyclic_groups(self.max_order, self.min_order)
        if self.group_family == "given":
            return [parse_group(t) for t in self.groups]
        raise InvalidParameterError(f"unknown group family {self.group_family!r}")


@dataclass(frozen=True)
class SweepRow:
    group: str
    subgroup: str
    invariant: str
    closed_value: str
    oracle_value: str
    match: str
    flag: str

    def as_tuple(self):
        return (self.group, self.subgroup, self.invariant, self.closed_value,
                self.oracle_value, self.match, self.flag)


@dataclass
class SweepResult:
    rows: list[SweepRow]
    pairs: int
    errors: list[str]

    @property
    def mismatches(self) -> list[SweepRow]:
        return [r for r in self.rows if r.match == "false"]

    @property
    def flagged(self) -> list[SweepRow]:
        return [r for r in self.rows if r.flag]

    def summary(self) -> dict:
        return {
            "pairs": self.pairs,
            "rows": len(self.rows),
            "mismatches": len(self.mismatches),
            "flagged": len(self.flagged),
            "unflagged_mismatches": sum(1 for r in self.mismatches if not r.flag),
            "errors": len(self.errors),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(r.as_tuple())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"summary": self.summary(), "errors": self.errors,
             "rows": [dict(zip(CSV_COLUMNS, r.as_tuple())) for r in self.rows]},
            indent=1,
        )


def _rows_for(job) -> tuple[list[SweepRow], str | None]:
    orders, label, members, engines, max_hole = job
    g = Group(orders)
    h = Subgroup.from_indices(g, members, check=False)
    gname = str(g)
    try:
        diffs = verify_pair(g, h, gname, label, engines, max_hole)
    except SubsumError as exc:
        return [], f"{gname} {label}: {exc}"
    rows = []
    for d in diffs:
        rows.append(SweepRow(
            gname, label, d.invariant,
            _render(d.name, d.closed) if engines != "oracle" else "",
            _render(d.name, d.oracle) if d.oracle is not None else "",
            "" if d.match is None else ("true" if d.match else "false"),
            d.flag,
        ))
    return rows, None


def sweep(cfg: SweepConfig) -> SweepResult:
    jobs = []
    for g in cfg.group_list():
        for label, h in subgroup_family(g, cfg.subgroup_family, cfg.subgroups):
            jobs.append((g.orders, label, h.members, cfg.engines, cfg.max_hole))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_rows_for, jobs, chunksize=4))
    else:
        results = [_rows_for(j) for j in jobs]
    rows, errors = [], []
    for r, err in results:
        rows.extend(r)
        if err:
            errors.append(err)
    return SweepResult(rows, len(jobs), errors)
