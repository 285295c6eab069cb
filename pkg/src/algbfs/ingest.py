"""SNAP edge-list parsing, a binary graph cache, and source statistics."""

from __future__ import annotations

import re
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import CsrMatrix, EdgeList, GraphError, build_csr, normalize_edges
from .oracle import bfs_combinatorial

CACHE_MAGIC = b"FLAB1"
_SPLIT = re.compile(r"[ \t]+")


class ParseError(GraphError):
    def __init__(self, path, lineno: int, line: str):
        super().__init__(f"{path}:{lineno}: cannot parse edge from {line.strip()!r}")
        self.lineno = lineno


def _parse_lines(path: Path) -> np.ndarray:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            fields = _SPLIT.split(text)
            if len(fields) < 2:
                raise ParseError(path, lineno, line)
            try:
                pairs.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise ParseError(path, lineno, line) from None
    return np.array(pairs, dtype=np.int64).reshape(-1, 2)


def parse_snap(path, directed: bool = False) -> EdgeList:
    """Read a whitespace separated ``u v`` edge list with ``#`` comments.

    External ids are remapped to ``0..n-1`` in ascending numeric order.
    Ids that only occur in self loops are dropped along with the loops.
    """
    path = Path(path)
    raw = _parse_lines(path)
    raw = raw[raw[:, 0] != raw[:, 1]]
    labels = np.unique(raw)
    internal = np.searchsorted(labels, raw)
    return normalize_edges(labels.size, internal, directed, labels)


def write_snap(g: EdgeList, path) -> None:
    """Write ``g`` with its external labels so that re-parsing reproduces it."""
    with open(path, "w", encoding="utf-8") as fh:
        kind = "Directed" if g.directed else "Undirected"
        fh.write(f"# {kind} graph\n# Nodes: {g.n} Edges: {g.m}\n")
        for u, v in g.edges.tolist():
            fh.write(f"{g.label_of(u)}\t{g.label_of(v)}\n")


def write_cache(g: EdgeList, path) -> None:
    """Binary cache: ``FLAB1``, little-endian u64 n, u64 m, then u32 pairs."""
    if g.n > 2**32:
        raise GraphError("graph too large for the u32 cache format")
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<QQ", g.n, g.m))
        fh.write(np.ascontiguousarray(g.edges, dtype="<u4").tobytes())


def read_cache(path, directed: bool = False) -> EdgeList:
    with open(path, "rb") as fh:
        if fh.read(len(CACHE_MAGIC)) != CACHE_MAGIC:
            raise GraphError(f"{path}: not a FLAB1 cache file")
        n, m = struct.unpack("<QQ", fh.read(16))
        body = fh.read(8 * m)
    if len(body) != 8 * m:
        raise GraphError(f"{path}: truncated cache, expected {m} edges")
    data = np.frombuffer(body, dtype="<u4")
    return normalize_edges(int(n), data.astype(np.int64).reshape(-1, 2), directed)


def load_graph(path, directed: bool = False) -> EdgeList:
    """Read a SNAP text file or a FLAB1 cache, decided by the file header."""
    with open(path, "rb") as fh:
        head = fh.read(len(CACHE_MAGIC))
    if head == CACHE_MAGIC:
        return read_cache(path, directed)
    return parse_snap(path, directed)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    source: int
    eccentricity_from_source: int
    components_reached: int

    @property
    def levels(self) -> int:
        return self.eccentricity_from_source + 1


def stats(g: EdgeList, source: int, a: CsrMatrix | None = None) -> GraphStats:
    """Vertex/edge counts plus the exact eccentricity and reach of ``source``."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range for n={g.n}")
    a = build_csr(g) if a is None else a
    out = bfs_combinatorial(a, source)
    return GraphStats(g.n, g.m, int(source), out.eccentricity, out.reached)


def search_source(a: CsrMatrix, tries: int = 8, seed: int = 0) -> tuple[int, int]:
    """Find a source with large eccentricity by repeated double sweeps.

    Returns ``(source, eccentricity)``. The result is a lower bound on the
    diameter of the component searched, not necessarily the maximum.
    """
    if a.n_rows == 0:
        raise GraphError("empty graph")
    rng = np.random.default_rng(seed)
    degrees = a.degrees()
    candidates = np.flatnonzero(degrees > 0)
    if candidates.size == 0:
        return 0, 0
    best = (int(candidates[0]), -1)
    for _ in range(max(1, tries)):
        v = int(rng.choice(candidates))
        for _sweep in range(2):
            out = bfs_combinatorial(a, v)
            if out.eccentricity > best[1]:
                best = (v, out.eccentricity)
            far = np.flatnonzero(out.levels == out.eccentricity)
            v = int(far[0])
        out = bfs_combinatorial(a, v)
        if out.eccentricity > best[1]:
            best = (v, out.eccentricity)
    return best
