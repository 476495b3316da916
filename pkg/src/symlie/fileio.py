"""Input file formats: ideals, matrices, staged trees, colored graphs.

All formats are line-based UTF-8 text; '#' starts a comment.
"""

from __future__ import annotations

import re
from typing import Optional, Tuple

from .graded import IdealSpec, PreconditionError
from .linalg import ScalarMatrix
from .models import ColoredGraph, StagedTree
from .parser import ParseError, parse_polynomial, parse_scalar
from .poly import PolyRing

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_NODE_RE = re.compile(r"[A-Za-z0-9_]+$")


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_ideal_file(text: str) -> IdealSpec:
    """`ring: x1, x2` then `generators:` then one expression per line.

    An optional `prime: true|false` header sets the primality assertion.
    """
    ring: Optional[PolyRing] = None
    prime = True
    gens = []
    in_generators = False
    for lineno, line in _logical_lines(text):
        if line.startswith("ring:"):
            names = [v.strip() for v in line[len("ring:"):].split(",") if v.strip()]
            for name in names:
                if not _IDENT_RE.match(name) or name == "i":
                    raise ParseError(f"bad variable name {name!r}", lineno, 1)
            try:
                ring = PolyRing(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 1) from None
            continue
        if line.startswith("prime:"):
            value = line[len("prime:"):].strip().lower()
            if value not in ("true", "false"):
                raise ParseError(f"prime must be true or false, got {value!r}", lineno, 1)
            prime = value == "true"
            continue
        if line == "generators:":
            if ring is None:
                raise ParseError("generators before ring declaration", lineno, 1)
            in_generators = True
            continue
        if not in_generators:
            raise ParseError(f"unexpected line {line!r}", lineno, 1)
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column) from None
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1)
    if not gens:
        raise ParseError("no generators given", 1, 1)
    return IdealSpec(ring, tuple(gens), asserted_prime=prime)


def parse_matrix_file(text: str) -> ScalarMatrix:
    """One row per line, comma-separated scalar expressions ('i' allowed)."""
    rows = []
    for lineno, line in _logical_lines(text):
        entries = []
        for piece in line.split(","):
            try:
                entries.append(parse_scalar(piece.strip()))
            except ParseError as exc:
                raise ParseError(exc.message, lineno, exc.column) from None
        rows.append(entries)
    if not rows:
        raise ParseError("empty matrix file", 1, 1)
    width = len(rows[0])
    if any(len(r) != width for r in rows) or width != len(rows):
        raise ParseError("matrix must be square", 1, 1)
    return ScalarMatrix(rows)


def parse_tree_file(text: str) -> StagedTree:
    """`tree:` with `edge parent child` lines, then `stages:` assignments."""
    section = None
    children: dict = {}
    order: list = []
    stages = []
    child_nodes = set()
    for lineno, line in _logical_lines(text):
        if line == "tree:":
            section = "tree"
            continue
        if line == "stages:":
            section = "stages"
            continue
        if section == "tree":
            parts = line.split()
            if len(parts) != 3 or parts[0] != "edge":
                raise ParseError(f"expected 'edge <parent> <child>', got {line!r}",
                                 lineno, 1)
            _, parent, child = parts
            for node in (parent, child):
                if not _NODE_RE.match(node):
                    raise ParseError(f"bad node name {node!r}", lineno, 1)
            if parent not in children:
                children[parent] = []
                order.append(parent)
            children[parent].append(child)
            child_nodes.add(child)
            continue
        if section == "stages":
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected '<node> <stage-id>', got {line!r}", lineno, 1)
            stages.append((parts[0], parts[1]))
            continue
        raise ParseError(f"line outside any section: {line!r}", lineno, 1)
    if not children:
        raise ParseError("tree has no edges", 1, 1)
    roots = [p for p in order if p not in child_nodes]
    if len(roots) != 1:
        raise ParseError(f"tree needs exactly one root, found {roots!r}", 1, 1)
    try:
        return StagedTree(
            root=roots[0],
            children=tuple((p, tuple(children[p])) for p in order),
            stages=tuple(stages),
        )
    except PreconditionError as exc:
        raise ParseError(str(exc), 1, 1) from None


def _parse_edge(token: str, lineno: int) -> Tuple[int, int]:
    m = re.match(r"(\d+)-(\d+)$", token)
    if not m:
        raise ParseError(f"bad edge {token!r}", lineno, 1)
    i, j = int(m.group(1)), int(m.group(2))
    if i == j:
        raise ParseError(f"self-loop {token!r}", lineno, 1)
    return (min(i, j), max(i, j))


def parse_graph_file(text: str) -> ColoredGraph:
    """`vertices: n`, `edges: i-j, ...`, optional vertex/edge colors."""
    n = None
    edges = []
    vertex_colors = {}
    edge_colors = {}
    for lineno, line in _logical_lines(text):
        if line.startswith("vertices:"):
            n = int(line[len("vertices:"):].strip())
            continue
        if line.startswith("edges:"):
            for token in line[len("edges:"):].split(","):
                token = token.strip()
                if token:
                    edges.append(_parse_edge(token, lineno))
            continue
        if line.startswith("vertex_colors:"):
            for token in line[len("vertex_colors:"):].split():
                m = re.match(r"(\d+):(\w+)$", token)
                if not m:
                    raise ParseError(f"bad vertex color {token!r}", lineno, 1)
                vertex_colors[int(m.group(1))] = m.group(2)
            continue
        if line.startswith("edge_colors:"):
            for token in line[len("edge_colors:"):].split():
                m = re.match(r"(\d+)-(\d+):(\w+)$", token)
                if not m:
                    raise ParseError(f"bad edge color {token!r}", lineno, 1)
                i, j = int(m.group(1)), int(m.group(2))
                edge_colors[(min(i, j), max(i, j))] = m.group(3)
            continue
        raise ParseError(f"unexpected line {line!r}", lineno, 1)
    if n is None:
        raise ParseError("missing vertices count", 1, 1)
    try:
        return ColoredGraph.of(n, edges, vertex_colors, edge_colors)
    except PreconditionError as exc:
        raise ParseError(str(exc), 1, 1) from None
