"""Bit-exact text formats.

Instance files are DIMACS-compatible for the graph part: ``c shc`` comments
carry k, rho and optional generation provenance; ``p edge n m`` declares the
graph; ``e u v`` lines (1-indexed, u < v, ascending) list edges; ``x v c``
lines assign every vertex its community; ``f v c`` lines list the
precoloured vertices. Writing the parse of a file reproduces it byte for
byte, and parse(write(inst)) == inst for every valid instance.

Experiment records serialize to RFC-4180 CSV with a fixed header.
"""
from __future__ import annotations

import csv
import io

from .colouring import Colouring
from .graph import build_graph
from .records import CSV_COLUMNS, ExperimentRecord
from .sbm import Instance, SbmParams, make_instance


class DimacsError(ValueError):
    pass


def _fmt(x: float) -> str:
    """Shortest decimal that round-trips the float (<= 17 significant digits)."""
    return repr(float(x))


def write_instance(inst: Instance) -> str:
    lines = [f"c shc k {inst.k}", f"c shc rho {_fmt(inst.rho)}"]
    if inst.params is not None:
        pr = inst.params
        lines.append(
            f"c shc params {pr.n} {pr.k} {_fmt(pr.p)} {_fmt(pr.q)} {pr.pcc} {pr.seed}"
        )
    g = inst.graph
    lines.append(f"p edge {g.n} {g.m}")
    for u, v in g.edge_array():
        lines.append(f"e {u + 1} {v + 1}")
    for v in range(g.n):
        lines.append(f"x {v + 1} {inst.communities[v]}")
    for v, c in zip(inst.precoloured_vertices, inst.precoloured_colours):
        lines.append(f"f {v + 1} {c}")
    return "\n".join(lines) + "\n"


def _parse_int(token: str, ln: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsError(f"line {ln}: malformed {what}: {token!r}") from None


def _parse_float(token: str, ln: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise DimacsError(f"line {ln}: malformed {what}: {token!r}") from None


def parse_instance(text: str) -> Instance:
    k = None
    rho = None
    params: SbmParams | None = None
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    communities: dict[int, int] = {}
    precoloured: dict[int, int] = {}

    for ln, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            if len(parts) >= 3 and parts[1] == "shc":
                kind = parts[2]
                if kind == "k":
                    if len(parts) != 4:
                        raise DimacsError(f"line {ln}: malformed 'c shc k' header")
                    k = _parse_int(parts[3], ln, "k")
                elif kind == "rho":
                    if len(parts) != 4:
                        raise DimacsError(f"line {ln}: malformed 'c shc rho' header")
                    rho = _parse_float(parts[3], ln, "rho")
                elif kind == "params":
                    if len(parts) != 9:
                        raise DimacsError(f"line {ln}: malformed 'c shc params' header")
                    params = SbmParams(
                        n=_parse_int(parts[3], ln, "params n"),
                        k=_parse_int(parts[4], ln, "params k"),
                        p=_parse_float(parts[5], ln, "params p"),
                        q=_parse_float(parts[6], ln, "params q"),
                        pcc=_parse_int(parts[7], ln, "params pcc"),
                        seed=_parse_int(parts[8], ln, "params seed"),
                    )
            continue
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {ln}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"line {ln}: malformed problem line")
            n = _parse_int(parts[2], ln, "vertex count")
            m_declared = _parse_int(parts[3], ln, "edge count")
            continue
        if n is None:
            raise DimacsError(f"line {ln}: '{tag}' line before problem line")
        if tag == "e":
            if len(parts) != 3:
                raise DimacsError(f"line {ln}: malformed edge line")
            u = _parse_int(parts[1], ln, "edge endpoint")
            v = _parse_int(parts[2], ln, "edge endpoint")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {ln}: endpoint out of range: ({u}, {v})")
            if u == v:
                raise DimacsError(f"line {ln}: self-loop rejected: ({u}, {v})")
            edges.append((u - 1, v - 1))
        elif tag == "x":
            if len(parts) != 3:
                raise DimacsError(f"line {ln}: malformed community line")
            v = _parse_int(parts[1], ln, "vertex")
            c = _parse_int(parts[2], ln, "community")
            if not (1 <= v <= n):
                raise DimacsError(f"line {ln}: vertex out of range: {v}")
            if v - 1 in communities:
                raise DimacsError(f"line {ln}: duplicate community for vertex {v}")
            communities[v - 1] = c
        elif tag == "f":
            if len(parts) != 3:
                raise DimacsError(f"line {ln}: malformed precolouring line")
            v = _parse_int(parts[1], ln, "vertex")
            c = _parse_int(parts[2], ln, "colour")
            if not (1 <= v <= n):
                raise DimacsError(f"line {ln}: vertex out of range: {v}")
            if v - 1 in precoloured:
                raise DimacsError(f"line {ln}: duplicate precolouring for vertex {v}")
            precoloured[v - 1] = c
        else:
            raise DimacsError(f"line {ln}: unknown line type {tag!r}")

    if n is None:
        raise DimacsError("missing problem line")
    if k is None:
        raise DimacsError("missing 'c shc k' header")
    if rho is None:
        raise DimacsError("missing 'c shc rho' header")
    missing = [v + 1 for v in range(n) if v not in communities]
    if missing:
        raise DimacsError(
            f"community assignment incomplete: vertex {missing[0]} missing"
        )
    if not precoloured:
        raise DimacsError("no precoloured vertices ('f' lines required)")
    graph = build_graph(n, edges)
    if m_declared is not None and graph.m != m_declared:
        raise DimacsError(
            f"edge count mismatch: problem line says {m_declared}, file has {graph.m}"
        )
    comm_arr = [communities[v] for v in range(n)]
    return make_instance(
        graph,
        k,
        rho,
        comm_arr,
        sorted(precoloured.items()),
        params=params,
    )


def write_colouring(col: Colouring) -> str:
    lines = ["c shc colouring", f"k {col.k}", f"n {col.n}"]
    for v in range(col.n):
        lines.append(f"v {v + 1} {col.assignment[v]}")
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> Colouring:
    k = None
    n = None
    values: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "k" and len(parts) == 2:
            k = _parse_int(parts[1], ln, "k")
        elif parts[0] == "n" and len(parts) == 2:
            n = _parse_int(parts[1], ln, "n")
        elif parts[0] == "v" and len(parts) == 3:
            v = _parse_int(parts[1], ln, "vertex")
            values[v - 1] = _parse_int(parts[2], ln, "colour")
        else:
            raise DimacsError(f"line {ln}: malformed colouring line")
    if k is None or n is None:
        raise DimacsError("colouring file missing k or n header")
    missing = [v + 1 for v in range(n) if v not in values]
    if missing:
        raise DimacsError(f"colouring incomplete: vertex {missing[0]} missing")
    import numpy as np

    arr = np.array([values[v] for v in range(n)], dtype=np.int32)
    return Colouring(arr, k)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def write_records(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([_cell(getattr(r, col)) for col in CSV_COLUMNS])
    return buf.getvalue()


def read_records(text: str) -> list[dict]:
    """Rows of a records CSV as string dicts (resume/dedup and tests)."""
    reader = csv.DictReader(io.StringIO(text))
    return list(reader)
