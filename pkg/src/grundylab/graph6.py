"""Reader and writer for the graph6 text format.

graph6 packs the upper triangle of the adjacency matrix in column-major
order, x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per printable character
(chr(value + 63)). Orders up to 62 use the single-byte header chr(63 + n);
63 and 64 use the extended header '~' followed by an 18-bit big-endian order.
An optional '>>graph6<<' prefix is accepted on parse and never written.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graphs import MAX_VERTICES, Graph

PREFIX = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(PREFIX):
        base = len(PREFIX)
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 string", base)
    vals = []
    for i, ch in enumerate(line):
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + i)
        vals.append(code)
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated extended order header", base + len(line))
        if vals[1] == 63:
            raise Graph6Error("8-byte order header not supported", base + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | (vals[3])
        data = vals[4:]
        data_base = base + 4
    else:
        n = vals[0]
        data = vals[1:]
        data_base = base + 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_VERTICES}-vertex cap", base)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(data) < nchars:
        raise Graph6Error("truncated edge bit field", base + len(line))
    if len(data) > nchars:
        raise Graph6Error("trailing characters after edge bit field", data_base + nchars)
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            chunk = data[idx // 6]
            if (chunk >> (5 - idx % 6)) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    # padding bits must be zero
    while idx < 6 * nchars:
        if (data[idx // 6] >> (5 - idx % 6)) & 1:
            raise Graph6Error("nonzero padding bit", data_base + idx // 6)
        idx += 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    else:
        header = "~" + chr(63 + (n >> 12)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    out = [header]
    chunk = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            chunk = (chunk << 1) | (g.adj[row] >> col & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + chunk))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr(63 + (chunk << (6 - filled))))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per line, skipping blank lines and '#' comments."""
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_graph6(stripped)
