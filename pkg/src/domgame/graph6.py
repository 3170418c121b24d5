"""Strict graph6 codec and line-stream reader.

Bit layout follows the standard format: size bytes N(n), then 6-bit
groups of the upper-triangle adjacency bits in column order
(0,1), (0,2), (1,2), (0,3), ...; every byte is 63 + group. Nonzero
padding bits are rejected so corrupted streams surface early.
"""

from __future__ import annotations

import io
from typing import Iterator

from ._bits import pair_count
from .errors import Graph6Error
from .graphs import Graph, from_pair_mask, to_pair_mask

HEADER = b">>graph6<<"

ENCODE_MAX_N = 62
PARSE_MAX_N = 64


def _check_byte(b: int, pos: int) -> int:
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b} at offset {pos} outside graph6 range [63, 126]")
    return b - 63


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 value (optionally prefixed by '>>graph6<<')."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    data = data.strip()
    if not data:
        raise Graph6Error("empty graph6 value")

    pos = 0
    c = _check_byte(data[pos], pos)
    pos += 1
    if c < 63:
        n = c
    else:
        # '~' introduces the 3-byte size form (n up to 258047).
        if len(data) < 4:
            raise Graph6Error("truncated long-form size")
        if data[1] == 126:
            raise Graph6Error("8-byte size form implies n > 64, unsupported")
        n = 0
        for k in range(1, 4):
            n = n << 6 | _check_byte(data[k], k)
        pos = 4
    if n < 1:
        raise Graph6Error(f"order {n} out of range")
    if n > PARSE_MAX_N:
        raise Graph6Error(f"order {n} exceeds supported maximum {PARSE_MAX_N}")

    nbits = pair_count(n)
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != nbytes:
        raise Graph6Error(
            f"payload is {len(payload)} bytes, expected {nbytes} for n={n}"
        )
    mask = 0
    bit = 0
    for k, raw in enumerate(payload):
        group = _check_byte(raw, pos + k)
        for shift in range(5, -1, -1):
            if group >> shift & 1:
                if bit >= nbits:
                    raise Graph6Error("nonzero padding bits")
                mask |= 1 << bit
            bit += 1
    return from_pair_mask(n, mask)


def encode_graph6(g: Graph) -> bytes:
    """Headerless graph6 bytes for the graph's current labeling (n <= 62)."""
    if g.n > ENCODE_MAX_N:
        raise Graph6Error(f"encoding limited to n <= {ENCODE_MAX_N}")
    return encode_pair_mask(g.n, to_pair_mask(g))


def encode_pair_mask(n: int, mask: int) -> bytes:
    """graph6 bytes straight from an upper-triangle bit pattern."""
    if n > ENCODE_MAX_N:
        raise Graph6Error(f"encoding limited to n <= {ENCODE_MAX_N}")
    nbits = pair_count(n)
    out = bytearray([63 + n])
    for start in range(0, nbits, 6):
        group = 0
        for k in range(6):
            bit = start + k
            if bit < nbits and mask >> bit & 1:
                group |= 1 << (5 - k)
        out.append(63 + group)
    return bytes(out)


def read_graph6_stream(fh: io.BufferedIOBase) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, graph) for every graph line of a stream.

    One graph per line; an optional '>>graph6<<' header line is skipped.
    Malformed lines raise Graph6Error tagged with the line number.
    """
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def open_graph6_file(path: str) -> io.BufferedReader:
    return open(path, "rb")
