"""Reading and writing graph6, DIMACS ``.col`` and plain edge lists.

Emitters are canonical (edges sorted, minimal whitespace, LF line ends), so
``parse(emit(d))`` reproduces ``d`` and ``emit(parse(b)) == b`` for canonical
``b``. Parse errors carry the 1-based line (text formats) or 0-based byte
offset (graph6) of the problem.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from .errors import GraphError
from .graph import Graph

GRAPH6 = "GRAPH6"
DIMACS_COL = "DIMACS_COL"
EDGE_LIST = "EDGE_LIST"
FORMATS = (GRAPH6, DIMACS_COL, EDGE_LIST)

_ALIASES = {"g6": GRAPH6, "graph6": GRAPH6, "dimacs": DIMACS_COL, "col": DIMACS_COL,
            "edges": EDGE_LIST, "edge": EDGE_LIST, "txt": EDGE_LIST}
_EXTENSIONS = {".g6": GRAPH6, ".col": DIMACS_COL, ".dimacs": DIMACS_COL,
               ".txt": EDGE_LIST, ".edges": EDGE_LIST}
_G6_HEADER = b">>graph6<<"


class FormatError(GraphError):
    def __init__(self, message: str, *, line: Optional[int] = None, offset: Optional[int] = None):
        where = f"line {line}: " if line is not None else f"byte {offset}: " if offset is not None else ""
        super().__init__(where + message)
        self.line = line
        self.offset = offset


@dataclass(frozen=True)
class GraphDocument:
    format: str
    graph: Graph
    name: Optional[str] = None


def normalize_format(fmt: Optional[str]) -> Optional[str]:
    if fmt is None or fmt == "auto":
        return None
    if fmt in FORMATS:
        return fmt
    try:
        return _ALIASES[fmt.lower()]
    except KeyError:
        raise GraphError(f"unknown format {fmt!r}") from None


def detect_format(data: bytes, filename: Optional[str] = None) -> str:
    """Pick a format from the file extension, else from the content."""
    if filename:
        ext = os.path.splitext(filename)[1].lower()
        if ext in _EXTENSIONS:
            return _EXTENSIONS[ext]
    text = data.lstrip()
    if text.startswith(_G6_HEADER):
        return GRAPH6
    first = text.split(b"\n", 1)[0].strip()
    if first[:1] in (b"c", b"p") and (first[1:2] in (b" ", b"\t", b"") ):
        return DIMACS_COL
    if first and all(63 <= b <= 126 for b in first) and not first[:1].isdigit():
        return GRAPH6
    return EDGE_LIST


# -- graph6 -----------------------------------------------------------------------

def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string", offset=0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise FormatError(f"invalid graph6 character {chr(b)!r}", offset=i)
    if data[0] < 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] < 126:
        return ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63), 4
    if len(data) >= 8 and data[1] == 126:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    raise FormatError("truncated graph6 size field", offset=len(data))


def parse_graph6(data: Union[bytes, str]) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    base = 0
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if b"\n" in data:
        raise FormatError("graph6 input holds more than one graph", offset=base + data.index(b"\n"))
    n, head = _g6_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[head:]
    if len(payload) < need:
        raise FormatError(f"truncated graph6 payload: need {need} bytes, got {len(payload)}",
                          offset=base + len(data))
    if len(payload) > need:
        raise FormatError("trailing bytes after graph6 payload", offset=base + head + need)
    for i, b in enumerate(payload):
        if not 63 <= b <= 126:
            raise FormatError(f"invalid graph6 character {chr(b)!r}", offset=base + head + i)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n < 63:
        head = bytes([n + 63])
    elif n < 258048:
        head = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    else:
        head = bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    out = bytearray()
    acc = k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | g.has_edge(i, j)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return head + bytes(out) + b"\n"


# -- text formats ---------------------------------------------------------------

def _ints(tokens: list[bytes], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {b' '.join(tokens).decode(errors='replace')!r}",
                          line=line) from None


def parse_edge_list(data: Union[bytes, str]) -> Graph:
    """``n m`` on the first line, then exactly ``m`` lines ``u v`` (0-indexed)."""
    if isinstance(data, str):
        data = data.encode()
    lines = data.split(b"\n")
    if not lines or not lines[0].strip():
        raise FormatError("missing 'n m' header", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n m'", line=1)
    n, m = _ints(head, 1)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", line=1)
    edges = []
    for no, raw in enumerate(lines[1:], start=2):
        tok = raw.split()
        if not tok:
            continue
        if len(tok) != 2:
            raise FormatError("edge line must be 'u v'", line=no)
        u, v = _ints(tok, no)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1} in edge ({u}, {v})", line=no)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v})", line=no)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}", line=1)
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> bytes:
    edges = g.edges
    body = "".join(f"{u} {v}\n" for u, v in edges)
    return f"{g.n} {len(edges)}\n{body}".encode()


def parse_dimacs(data: Union[bytes, str]) -> Graph:
    """``p edge n m`` then ``e u v`` lines (1-indexed); ``c`` lines are comments.

    Repeated edges are common in published instances, so the edge count in
    the problem line is not enforced.
    """
    if isinstance(data, str):
        data = data.encode()
    n = None
    edges = []
    for no, raw in enumerate(data.split(b"\n"), start=1):
        tok = raw.split()
        if not tok or tok[0] == b"c":
            continue
        if tok[0] == b"p":
            if n is not None:
                raise FormatError("second problem line", line=no)
            if len(tok) != 4 or tok[1] not in (b"edge", b"col"):
                raise FormatError("problem line must be 'p edge n m'", line=no)
            n, _m = _ints(tok[2:], no)
            if n < 0 or _m < 0:
                raise FormatError("negative count in problem line", line=no)
        elif tok[0] == b"e":
            if n is None:
                raise FormatError("edge before problem line", line=no)
            if len(tok) != 3:
                raise FormatError("edge line must be 'e u v'", line=no)
            u, v = _ints(tok[1:], no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex out of range 1..{n} in edge ({u}, {v})", line=no)
            if u == v:
                raise FormatError(f"self-loop ({u}, {v})", line=no)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unknown line type {tok[0].decode(errors='replace')!r}", line=no)
    if n is None:
        raise FormatError("missing problem line 'p edge n m'", line=1)
    return Graph(n, edges)


def emit_dimacs(g: Graph) -> bytes:
    edges = g.edges
    body = "".join(f"e {u + 1} {v + 1}\n" for u, v in edges)
    return f"p edge {g.n} {len(edges)}\n{body}".encode()


_PARSERS = {GRAPH6: parse_graph6, DIMACS_COL: parse_dimacs, EDGE_LIST: parse_edge_list}
_EMITTERS = {GRAPH6: emit_graph6, DIMACS_COL: emit_dimacs, EDGE_LIST: emit_edge_list}


def parse(data: Union[bytes, str], fmt: Optional[str] = "auto", name: Optional[str] = None) -> GraphDocument:
    if isinstance(data, str):
        data = data.encode()
    fmt = normalize_format(fmt) or detect_format(data, name)
    return GraphDocument(fmt, _PARSERS[fmt](data), name)


def emit(doc: Union[GraphDocument, Graph], fmt: Optional[str] = None) -> bytes:
    if isinstance(doc, Graph):
        doc = GraphDocument(fmt or EDGE_LIST, doc)
    fmt = normalize_format(fmt) or doc.format
    return _EMITTERS[fmt](doc.graph)


def read_graph(path: str, fmt: Optional[str] = "auto") -> GraphDocument:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse(data, fmt, name=path)


def write_graph(path: str, doc: Union[GraphDocument, Graph], fmt: Optional[str] = None):
    if fmt is None and not isinstance(doc, GraphDocument):
        fmt = detect_format(b"", path) if os.path.splitext(path)[1] else EDGE_LIST
    with open(path, "wb") as fh:
        fh.write(emit(doc, fmt))
