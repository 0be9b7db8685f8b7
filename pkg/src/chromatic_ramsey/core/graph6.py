"""graph6 codec (bit-exact with nauty's ``formats.txt``).

Size prefix: ``n + 63`` for n <= 62, ``126`` + 3 bytes for n <= 258047, and
``126 126`` + 6 bytes beyond.  Body: the upper triangle read column by column
(x01, x02, x12, x03, ...), six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from ..errors import Graph6Error
from .graph import Graph, iter_bits

HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} too large for graph6")


def encode(g: Graph) -> bytes:
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def decode(data: bytes | str) -> Graph:
    """Parse one graph6 record (optional header and trailing newline allowed)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at offset {pos} outside 63..126")
    n, start = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated edge section: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"{len(body) - nbytes} trailing bytes after edge section")
    rows = [0] * n
    i, j = 0, 1
    for k, b in enumerate(body):
        value = b - 63
        for shift in range(5, -1, -1):
            bit_index = 6 * k + 5 - shift
            if bit_index >= nbits:
                if value >> shift & 1:
                    raise Graph6Error("non-zero padding bits")
                continue
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_file(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line of a file."""
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, decode(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc


def write_file(path: str | Path, graphs) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(encode(g) + b"\n")


def edge_bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        row = g.rows[j]
        for i in iter_bits(row & ((1 << j) - 1)):
            yield i
