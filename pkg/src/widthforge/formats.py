"""PACE-style ``.gr`` / ``.td`` files, ordering files and coordinate files.

Files always use 1-based ids.  A graph with arbitrary integer ids is written
with its vertices numbered in increasing id order, and decompositions and
orderings written alongside it use the same numbering.
"""
from __future__ import annotations

from .certificates import TreeDecomposition
from .graph import Graph


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield lineno, line.split()


def parse_graph(text: str) -> Graph:
    """Parse a ``.gr`` file into a graph on ``0..n-1``."""
    n = m = None
    edges = set()
    for lineno, parts in _content_lines(text):
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "tw":
                raise FormatError(f"line {lineno}: malformed header, expected 'p tw n m'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header fields") from None
            continue
        if n is None:
            raise FormatError(f"line {lineno}: edge before header")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: edge lines hold exactly two ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"line {lineno}: vertex id out of range 1..{n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop")
        e = (min(u, v) - 1, max(u, v) - 1)
        if e in edges:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(e)
    if n is None:
        raise FormatError("missing 'p tw n m' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _numbering(g: Graph) -> dict[int, int]:
    return {v: i for i, v in enumerate(sorted(g.vertices), 1)}


def write_graph(g: Graph) -> str:
    num = _numbering(g)
    lines = [f"p tw {g.n} {g.m}"]
    lines += [f"{a} {b}" for a, b in sorted(tuple(sorted((num[u], num[v]))) for u, v in g.edges)]
    return "\n".join(lines) + "\n"


def write_td(td: TreeDecomposition, g: Graph) -> str:
    num = _numbering(g)
    size = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {size} {g.n}"]
    for i, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(i)] + [str(x) for x in sorted(num[v] for v in bag)]))
    lines += [f"{a + 1} {b + 1}" for a, b in td.edges]
    return "\n".join(lines) + "\n"


def parse_td(text: str, g: Graph | None = None) -> TreeDecomposition:
    """Parse a ``.td`` file; vertex numbers map back through ``g``'s numbering (default ``k -> k-1``)."""
    back = {i: v for v, i in _numbering(g).items()} if g is not None else None
    header = None
    bags: dict[int, frozenset] = {}
    edges = []
    for lineno, parts in _content_lines(text):
        try:
            if parts[0] == "s":
                if header is not None or len(parts) != 5 or parts[1] != "td":
                    raise FormatError(f"line {lineno}: malformed 's td N w n' line")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise FormatError(f"line {lineno}: bag before header")
                i = int(parts[1])
                if not 1 <= i <= header[0] or i in bags:
                    raise FormatError(f"line {lineno}: bad or duplicate bag id {i}")
                ids = [int(x) for x in parts[2:]]
                if any(not 1 <= x <= header[2] for x in ids):
                    raise FormatError(f"line {lineno}: vertex id out of range")
                bags[i] = frozenset(back[x] if back else x - 1 for x in ids)
            else:
                if header is None or len(parts) != 2:
                    raise FormatError(f"line {lineno}: malformed tree edge")
                a, b = int(parts[0]), int(parts[1])
                if not (1 <= a <= header[0] and 1 <= b <= header[0]):
                    raise FormatError(f"line {lineno}: tree edge names unknown bag")
                edges.append((a - 1, b - 1))
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: non-integer field") from None
    if header is None:
        raise FormatError("missing 's td' line")
    if len(bags) != header[0]:
        raise FormatError(f"header announces {header[0]} bags, found {len(bags)}")
    return TreeDecomposition(tuple(bags[i] for i in range(1, header[0] + 1)), tuple(edges))


def write_ordering(order, g: Graph) -> str:
    num = _numbering(g)
    return "".join(f"{num[v]}\n" for v in order)


def parse_ordering(text: str, g: Graph | None = None) -> tuple:
    back = {i: v for v, i in _numbering(g).items()} if g is not None else None
    out = []
    for lineno, parts in _content_lines(text):
        if len(parts) != 1:
            raise FormatError(f"line {lineno}: one vertex id per line")
        try:
            k = int(parts[0])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id") from None
        if back is not None and k not in back:
            raise FormatError(f"line {lineno}: vertex id {k} out of range")
        out.append(back[k] if back else k - 1)
    return tuple(out)


def write_coordinates(coords: dict, g: Graph) -> str:
    """One line ``id x y z`` per vertex, ids numbered like :func:`write_graph`."""
    num = _numbering(g)
    return "".join(f"{num[v]} {x} {y} {z}\n" for v, (x, y, z) in sorted(coords.items()))
