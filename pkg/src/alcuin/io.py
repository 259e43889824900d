"""Bit-exact interchange: graph6, edge lists, and JSON documents.

Only short-form graph6 is supported (n <= 62, one-byte size field); extended
headers are rejected outright.  JSON documents use a fixed key order and
sorted arrays so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import (
    Classification,
    ConditionHolds,
    Degenerate,
    MultipleCovers,
    PairWitness,
    SetWitness,
)
from .cover import CoverReport
from .graph import Graph, girth, is_claw_free, is_regular, vertices_of
from .schedule import LEFT_TO_RIGHT, RIGHT_TO_LEFT, Move, Schedule


class FormatError(ValueError):
    """Malformed external input."""


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line, strictly.

    Layout: size byte 63+n, then ceil(n(n-1)/2 / 6) payload bytes in 63..126,
    each holding six upper-triangle adjacency bits (pairs (0,1), (0,2),
    (1,2), (0,3), ... column-major), most significant bit first, zero-padded.
    Wrong length, out-of-range bytes and nonzero padding are all rejected.
    """
    s = text.strip()
    if not s:
        raise FormatError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise FormatError("extended graph6 size fields are not supported")
    n = head - 63
    if not 0 <= n <= 62:
        raise FormatError(f"invalid graph6 size byte {head}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) != need:
        raise FormatError(f"graph6 payload for n={n} must be {need} bytes, got {len(payload)}")
    values = []
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise FormatError(f"graph6 byte {ord(ch)} outside 63..126")
        values.append(v)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = values[k // 6] >> (5 - k % 6) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and values[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return Graph(n, tuple(adj))


def serialize_graph6(g: Graph) -> str:
    """Canonical short-form graph6 encoding of a graph (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 short form is capped at 62 vertices")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Read the line-oriented edge-list format.

    First content line is "n <vertex count>", then one "u v" pair per line.
    '#' starts a comment; duplicate edges collapse; self-loops are rejected.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise FormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer endpoint") from None
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: edge ({u},{v}) outside 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def schedule_json(sched: Schedule) -> str:
    doc = {
        "capacity": sched.capacity,
        "moves": [
            {"dir": m.direction, "cargo": vertices_of(m.cargo)} for m in sched.moves
        ],
    }
    return json.dumps(doc)


def parse_schedule_json(text: str) -> Schedule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad schedule JSON: {exc}") from None
    try:
        capacity = doc["capacity"]
        raw_moves = doc["moves"]
        if not isinstance(capacity, int) or capacity < 0:
            raise FormatError("capacity must be a nonnegative integer")
        moves = []
        for m in raw_moves:
            direction = m["dir"]
            if direction not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
                raise FormatError(f"bad move direction {direction!r}")
            cargo = 0
            for v in m["cargo"]:
                if not isinstance(v, int) or v < 0:
                    raise FormatError(f"bad cargo vertex {v!r}")
                cargo |= 1 << v
            moves.append(Move(direction, cargo))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed schedule document: {exc}") from None
    return Schedule(capacity, tuple(moves))


def _witness_fields(reason: Any) -> dict[str, Any]:
    if isinstance(reason, MultipleCovers):
        return {"covers": [vertices_of(reason.cover), vertices_of(reason.cover2)]}
    if isinstance(reason, PairWitness):
        return {
            "cover": vertices_of(reason.cover),
            "s": vertices_of(reason.s),
            "t": vertices_of(reason.t),
        }
    if isinstance(reason, SetWitness):
        return {"cover": vertices_of(reason.cover), "a": vertices_of(reason.a)}
    if isinstance(reason, ConditionHolds):
        return {"cover": vertices_of(reason.cover)}
    return {}


_REASON_KINDS = {
    MultipleCovers: "multiple_covers",
    PairWitness: "pair_witness",
    SetWitness: "set_witness",
    ConditionHolds: "condition_holds",
    Degenerate: "degenerate",
}


def build_report(g: Graph, cls: Classification, covers: CoverReport) -> dict[str, Any]:
    """Analysis document with a pinned key order."""
    gi = girth(g)
    return {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "alpha": g.n - covers.beta,
        "beta": covers.beta,
        "covers": [vertices_of(c) for c in covers.covers],
        "covers_complete": covers.complete,
        "unique_cover": covers.unique,
        "girth": "acyclic" if gi is None else gi,
        "regular": is_regular(g),
        "claw_free": is_claw_free(g),
        "class": cls.verdict,
        "c": cls.c,
        "reason": _REASON_KINDS[type(cls.reason)],
        "witness": _witness_fields(cls.reason),
    }


def report_json(g: Graph, cls: Classification, covers: CoverReport) -> str:
    return json.dumps(build_report(g, cls, covers))
