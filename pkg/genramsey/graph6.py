"""Bit-exact graph6 encoding and decoding.

The format writes N(n) followed by R(x), where x is the upper triangle of the
adjacency matrix in column order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
padded with zeros to a multiple of six bits. Every six bits become one byte
with 63 added. Orders up to 62 use a single byte 63+n; orders 63 to 258047 use
'~' followed by three six-bit bytes.
"""

from typing import List

from genramsey.errors import Graph6Error
from genramsey.graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> shift) & 0x3F)) for shift in (12, 6, 0))


def encode(g: Graph) -> str:
    """Encode a graph as graph6 text (no header, no trailing newline)."""
    bits: List[int] = []
    for j in range(1, g.order):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = value << 1 | bit
        body.append(chr(63 + value))
    return _encode_order(g.order) + "".join(body)


def decode(text: str) -> Graph:
    """Decode graph6 text into a Graph.

    An optional ``>>graph6<<`` header and surrounding whitespace are ignored.

    Raises:
        Graph6Error: The text is empty, has bytes outside [63, 126], has the
            wrong length for its order, has nonzero padding bits, or
            encodes an order above 64.
    """
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"graph6 byte outside [63, 126] in {s!r}")

    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error(f"unsupported or truncated graph6 order field in {s!r}")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} exceeds {MAX_ORDER}")

    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {expected} for order {n}"
        )
    # the last byte is padded with zero bits up to a multiple of six
    pad = -pairs % 6
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error(f"nonzero padding bits in graph6 string {s!r}")

    adj = [0] * n
    index = 0
    for j in range(1, n):
        for i in range(j):
            byte, offset = divmod(index, 6)
            if body[byte] >> (5 - offset) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            index += 1
    return Graph(n, tuple(adj))
