"""Short-form graph6 encoding and decoding on top of networkx.

Only graphs with at most 62 vertices are supported. Records are validated
byte by byte before networkx parses them, so malformed input is reported with
the offset of the offending byte.
"""

import networkx as nx

from ..exceptions import ParseError
from ..models.graph import SimpleGraph

HEADER = b">>graph6<<"
MAX_SHORT_FORM = 62


def encode_graph6(g: SimpleGraph) -> bytes:
    """Encode ``g`` as short-form graph6 without header or trailing newline.

    Raises:
        ValueError: If ``g`` has more than 62 vertices.

    Example:
        >>> encode_graph6(SimpleGraph.complete(3))
        b'Bw'
    """
    if g.n > MAX_SHORT_FORM:
        raise ValueError(f"short-form graph6 holds at most {MAX_SHORT_FORM} vertices, got {g.n}")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def _check_record(raw: bytes, start: int) -> None:
    if len(raw) <= start:
        raise ParseError("empty graph6 record", offset=start)
    for offset in range(start, len(raw)):
        if not 63 <= raw[offset] <= 126:
            raise ParseError(f"byte {raw[offset]!r} is outside the graph6 range 63..126", offset=offset)

    n = raw[start] - 63
    if n == 63:
        raise ParseError("long-form graph6 (n > 62) is not supported", offset=start)
    if n == 0:
        raise ParseError("graph6 record describes a graph without vertices", offset=start)

    pair_count = n * (n - 1) // 2
    expected = 1 + (pair_count + 5) // 6
    if len(raw) - start != expected:
        raise ParseError(
            f"expected {expected} bytes for {n} vertices, found {len(raw) - start}",
            offset=start + min(len(raw) - start, expected),
        )
    padding = (6 - pair_count % 6) % 6
    if padding and (raw[-1] - 63) & ((1 << padding) - 1):
        raise ParseError("padding bits must be zero", offset=len(raw) - 1)


def decode_graph6(data: bytes | str) -> SimpleGraph:
    """Decode one short-form graph6 record.

    An optional ``>>graph6<<`` header and surrounding whitespace are accepted.

    Raises:
        ParseError: On malformed input, with the offending byte offset.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    raw = data.strip()
    start = len(HEADER) if raw.startswith(HEADER) else 0
    _check_record(raw, start)
    try:
        graph = nx.from_graph6_bytes(raw[start:])
    except nx.NetworkXError as e:
        raise ParseError(f"networkx rejected the record: {e}", offset=start) from e
    return SimpleGraph.from_networkx(graph)
