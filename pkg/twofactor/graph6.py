# -*- coding: utf-8 -*-

"""
graph6 codec.  The upper triangle of the adjacency matrix is read
column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed into
6-bit big-endian groups, and each group is written as a byte offset by
63.  The vertex count comes first: one byte ``n+63`` for ``n <= 62``,
``~`` plus three 6-bit bytes up to 258047, ``~~`` plus six beyond that.
"""

import numpy as np

from twofactor.errors import Graph6ParseError
from twofactor.graph import Graph

HEADER = '>>graph6<<'

_SIX_BIT_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)


def _size_prefix(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return '~' + ''.join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return '~~' + ''.join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def _triangle_indices(n):
    # Row-major lower triangle of the transpose is column-major upper triangle.
    cols, rows = np.tril_indices(n, -1)
    return rows, cols


def to_graph6(g, header=False):
    """
    Encode ``g`` as a graph6 string (no trailing newline).

    >>> from twofactor.generators import complete_graph
    >>> to_graph6(complete_graph(3))
    'Bw'
    >>> to_graph6(Graph(0))
    '?'
    """
    rows, cols = _triangle_indices(g.n)
    bits = g.adjacency[rows, cols].astype(np.int64)
    pad = -len(bits) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.int64)])
    values = bits.reshape(-1, 6).dot(_SIX_BIT_WEIGHTS) + 63
    body = ''.join(map(chr, values.tolist()))
    return (HEADER if header else '') + _size_prefix(g.n) + body


def _decode_byte(text, offset):
    value = ord(text[offset]) - 63
    if not 0 <= value <= 63:
        raise Graph6ParseError('byte %r outside graph6 range' % text[offset], offset=offset)
    return value


def _parse_size(text, offset):
    if offset >= len(text):
        raise Graph6ParseError('missing vertex count', offset=offset)
    if text[offset] != '~':
        return _decode_byte(text, offset), offset + 1
    if text[offset + 1:offset + 2] == '~':
        n_bytes, start = 6, offset + 2
    else:
        n_bytes, start = 3, offset + 1
    if start + n_bytes > len(text):
        raise Graph6ParseError('truncated vertex count', offset=len(text))
    n = 0
    for i in range(start, start + n_bytes):
        n = (n << 6) | _decode_byte(text, i)
    return n, start + n_bytes


def from_graph6(text):
    """
    Decode one graph6 string.  A leading ``>>graph6<<`` header and
    surrounding whitespace are tolerated.

    >>> from_graph6('Bw')
    Graph(3, [(0, 1), (0, 2), (1, 2)])
    >>> from_graph6('D?{')
    Graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    >>> from_graph6('B')
    ... #doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
        ...
    twofactor.errors.Graph6ParseError: expected 1 data byte(s) but got 0 at byte 1
    """
    stripped = text.rstrip('\r\n')
    lead = len(stripped) - len(stripped.lstrip())
    offset = lead
    if stripped.startswith(HEADER, offset):
        offset += len(HEADER)
    stripped = stripped.rstrip()
    n, offset = _parse_size(stripped, offset)

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    available = len(stripped) - offset
    if available != n_bytes:
        raise Graph6ParseError('expected %d data byte(s) but got %d' % (n_bytes, available),
                               offset=offset + min(available, n_bytes))

    values = np.array([_decode_byte(stripped, offset + i) for i in range(n_bytes)],
                      dtype=np.int64)
    bits = ((values[:, None] & _SIX_BIT_WEIGHTS) != 0).reshape(-1)
    if bits[n_bits:].any():
        raise Graph6ParseError('nonzero padding bits', offset=offset + n_bytes - 1)

    adjacency = np.zeros((n, n), dtype=bool)
    rows, cols = _triangle_indices(n)
    adjacency[rows, cols] = bits[:n_bits]
    adjacency |= adjacency.T
    return Graph.from_adjacency_matrix(adjacency)


def read_graph6_lines(lines):
    """
    Yield ``(line_number, graph)`` for each non-blank line of a graph6
    corpus.  Parse errors propagate with the byte offset of the line.
    """
    for i_line, line in enumerate(lines, 1):
        if line.strip():
            yield i_line, from_graph6(line)
