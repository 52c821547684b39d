"""Text forms for groups and subgroups used on the command line.

Group: comma-separated factor orders, ``4,2,9``.
Subgroup: ``n:<int>`` (the subgroup nG), ``gens:(a,b);(c,d)`` (generated
subgroup; parentheses optional for one-factor groups), ``full`` or ``zero``.
"""

from __future__ import annotations

import re

from .errors import InvalidElementError, InvalidGroupError, ParseError
from .groups import (
    Group,
    Subgroup,
    full_subgroup,
    make_group,
    subgroup_generated,
    subgroup_nG,
    zero_subgroup,
)

_INT = re.compile(r"\s*(-?\d+)\s*")


def parse_group(text: str) -> Group:
    orders = []
    pos = 0
    for part in text.split(","):
        m = _INT.fullmatch(part)
        if not m:
            raise ParseError("expected an integer factor order", text, pos)
        orders.append(int(m.group(1)))
        pos += len(part) + 1
    try:
        return make_group(orders)
    except InvalidGroupError as exc:
        raise ParseError(str(exc), text, 0) from exc


def _parse_tuple(text: str, chunk: str, offset: int) -> tuple[int, ...]:
    body = chunk.strip()
    lead = len(chunk) - len(chunk.lstrip())
    if body.startswith("(") != body.endswith(")"):
        raise ParseError("unbalanced parentheses", text, offset + lead)
    if body.startswith("("):
        body = body[1:-1]
        lead += 1
    out = []
    pos = offset + lead
    for part in body.split(","):
        m = _INT.fullmatch(part)
        if not m:
            raise ParseError("expected an integer coordinate", text, pos)
        out.append(int(m.group(1)))
        pos += len(part) + 1
    return tuple(out)


def parse_subgroup(g: Group, text: str) -> Subgroup:
    s = text.strip()
    if s == "full":
        return full_subgroup(g)
    if s == "zero":
        return zero_subgroup(g)
    if s.startswith("n:"):
        m = _INT.fullmatch(s[2:])
        if not m:
            raise ParseError("expected an integer after 'n:'", text, 2)
        return subgroup_nG(g, int(m.group(1)))
    if s.startswith("gens:"):
        rest = s[5:]
        gens = []
        offset = 5
        if rest.strip():
            for chunk in rest.split(";"):
                coords = _parse_tuple(text, chunk, offset)
                try:
                    gens.append(g.element(coords))
                except InvalidElementError as exc:
                    raise ParseError(str(exc), text, offset) from exc
                offset += len(chunk) + 1
        return subgroup_generated(g, gens)
    raise ParseError("expected 'n:<int>', 'gens:...', 'full' or 'zero'", text, 0)
