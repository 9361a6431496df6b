"""Text formats: graph6 lines, edge lists, and labeling records."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MagiclabError, MalformedInputError, TooLargeError
from .graph import Graph, build_graph
from .magic import Labeling, is_zero_sum, vertex_sums

#: Largest order the short-form graph6 header can carry.
GRAPH6_MAX_N = 62

_G6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    """Standard graph6 line (short form, n <= 62).

    One header character holding n + 63, then the upper triangle of the
    adjacency matrix read column by column, packed into 6-bit groups, each
    offset by 63 into the printable range.

    Raises:
        TooLargeError: more than 62 vertices.
    """
    if g.n > GRAPH6_MAX_N:
        raise TooLargeError(
            f"short-form graph6 encodes at most {GRAPH6_MAX_N} vertices, got {g.n}"
        )
    present = set(g.edges)
    bits: list[int] = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in present else 0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for bit in group:
            value = (value << 1) | bit
        out.append(chr(63 + value))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    """Inverse of :func:`encode_graph6`; tolerates the '>>graph6<<' prefix.

    Raises:
        MalformedInputError: empty line, character outside 63..126, a
            long-form header, wrong length, or nonzero padding bits.
    """
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise MalformedInputError("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedInputError(f"character {ch!r} outside the graph6 range")
    n = ord(s[0]) - 63
    if n == 63:
        raise MalformedInputError("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise MalformedInputError(
            f"expected {expected} characters for n={n}, got {len(s)}"
        )
    bits: list[int] = []
    for ch in s[1:]:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedInputError("nonzero padding bits")
    edges: list[tuple[int, int]] = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Header line 'n m', then one 'u v' line per canonical edge."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format; '#' starts a comment anywhere on a line.

    Loops, duplicate edges, and out-of-range endpoints surface through the
    graph constructor's own error types.

    Raises:
        MalformedInputError: bad header, wrong line count, or non-integer
            tokens.
    """
    rows = _content_rows(text)
    if not rows:
        raise MalformedInputError("missing header line")
    header = rows[0].split()
    if len(header) != 2:
        raise MalformedInputError(f"header must be 'n m', got {rows[0]!r}")
    n, m = (_int_token(tok, "header") for tok in header)
    if n < 0 or m < 0:
        raise MalformedInputError("negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise MalformedInputError(f"expected {m} edge lines, got {len(body)}")
    edges: list[tuple[int, int]] = []
    for row in body:
        parts = row.split()
        if len(parts) != 2:
            raise MalformedInputError(f"edge line must be 'u v', got {row!r}")
        edges.append((_int_token(parts[0], "edge"), _int_token(parts[1], "edge")))
    return build_graph(n, edges)


def _content_rows(text: str) -> list[str]:
    rows = []
    for raw in text.splitlines():
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append(content)
    return rows


def _int_token(token: str, where: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInputError(f"non-integer {where} token {token!r}") from None


@dataclass(frozen=True)
class LabelingRecord:
    """A labeling bound to its graph, with sums and verdict recomputed."""

    h: int
    graph: Graph
    labeling: Labeling
    sums: tuple[int, ...]
    verdict: bool

    @property
    def entries(self) -> tuple[tuple[int, int, int], ...]:
        """(u, v, label) triples in canonical edge order."""
        return tuple(
            (u, v, x) for (u, v), x in zip(self.graph.edges, self.labeling.labels)
        )


def make_labeling_record(g: Graph, labeling: Labeling) -> LabelingRecord:
    return LabelingRecord(
        h=labeling.h,
        graph=g,
        labeling=labeling,
        sums=vertex_sums(g, labeling),
        verdict=is_zero_sum(g, labeling),
    )


def write_labeling_record(record: LabelingRecord) -> str:
    """Line-oriented key-value form, field order fixed for machine parsing:
    h, n, m, the edge triples, the per-vertex sums, then the verdict."""
    lines = [f"h {record.h}", f"n {record.graph.n}", f"m {record.graph.m}"]
    lines += [f"edge {u} {v} {x}" for u, v, x in record.entries]
    lines += [f"sum {v} {s}" for v, s in enumerate(record.sums)]
    lines.append(f"verdict {'zero-sum' if record.verdict else 'not-zero-sum'}")
    return "\n".join(lines) + "\n"


def read_labeling_record(text: str) -> LabelingRecord:
    """Parse a record and recompute its derived fields.

    The graph is rebuilt from the edge triples and the sums and verdict are
    recomputed; 'sum' and 'verdict' lines are optional on input, but when
    present they must agree with the recomputation.

    Raises:
        MalformedInputError: syntax errors, missing or repeated scalar
            keys, count mismatches, labels outside 1..h-1, or stored sums
            or verdict that contradict the recomputed ones.
    """
    scalars: dict[str, int] = {}
    triples: list[tuple[int, int, int]] = []
    stated_sums: dict[int, int] = {}
    stated_verdict: bool | None = None
    for row in _content_rows(text):
        parts = row.split()
        key = parts[0]
        if key in ("h", "n", "m"):
            if len(parts) != 2:
                raise MalformedInputError(f"{key} line must be '{key} K', got {row!r}")
            if key in scalars:
                raise MalformedInputError(f"repeated {key} line")
            scalars[key] = _int_token(parts[1], key)
        elif key == "edge":
            if len(parts) != 4:
                raise MalformedInputError(
                    f"edge line must be 'edge u v label', got {row!r}"
                )
            triples.append(tuple(_int_token(p, "edge") for p in parts[1:]))
        elif key == "sum":
            if len(parts) != 3:
                raise MalformedInputError(f"sum line must be 'sum v s', got {row!r}")
            stated_sums[_int_token(parts[1], "sum")] = _int_token(parts[2], "sum")
        elif key == "verdict":
            if len(parts) != 2 or parts[1] not in ("zero-sum", "not-zero-sum"):
                raise MalformedInputError(f"bad verdict line {row!r}")
            stated_verdict = parts[1] == "zero-sum"
        else:
            raise MalformedInputError(f"unknown record key {key!r}")
    for key in ("h", "n", "m"):
        if key not in scalars:
            raise MalformedInputError(f"missing {key} line")
    if len(triples) != scalars["m"]:
        raise MalformedInputError(
            f"expected {scalars['m']} edge lines, got {len(triples)}"
        )
    try:
        graph = build_graph(scalars["n"], [(u, v) for u, v, _ in triples])
        by_pair = {}
        for u, v, x in triples:
            by_pair[(u, v) if u < v else (v, u)] = x
        labeling = Labeling(
            h=scalars["h"], labels=tuple(by_pair[e] for e in graph.edges)
        )
    except ValueError as exc:  # label range or modulus violations
        raise MalformedInputError(str(exc)) from exc
    record = make_labeling_record(graph, labeling)
    for v, s in stated_sums.items():
        if not 0 <= v < graph.n or record.sums[v] != s:
            raise MalformedInputError(f"stated sum at vertex {v} does not verify")
    if stated_verdict is not None and stated_verdict != record.verdict:
        raise MalformedInputError("stated verdict does not verify")
    return record
