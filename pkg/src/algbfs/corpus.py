"""Seeded random graphs used by the test corpus and ``--graph gnp:...``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import EdgeList, normalize_edges


def gnp(n: int, p: float, seed=None, directed: bool = False) -> EdgeList:
    """Erdos-Renyi G(n, p) graph (ordered pairs when ``directed``)."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    if directed:
        np.fill_diagonal(mask, False)
    else:
        mask = np.triu(mask, 1)
    u, v = np.nonzero(mask)
    return normalize_edges(n, np.stack([u, v], axis=1), directed)


def connected_gnp(n: int, p: float, seed=None) -> EdgeList:
    """A random spanning tree plus G(n, p) edges, so always connected."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    tree = [(int(order[i]), int(order[rng.integers(0, i)])) for i in range(1, n)]
    extra = gnp(n, p, rng).edges
    pairs = np.concatenate([np.array(tree, dtype=np.int64).reshape(-1, 2), extra])
    return normalize_edges(n, pairs)


def path(n: int) -> EdgeList:
    return normalize_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> EdgeList:
    return normalize_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def clique(n: int) -> EdgeList:
    return normalize_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid(rows: int, cols: int) -> EdgeList:
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return normalize_edges(rows * cols, pairs)


def labelled_path5() -> EdgeList:
    """The 5-vertex path 2-5-3-4-1 (1-based labels) used as a worked example."""
    labels = np.arange(1, 6)
    pairs = np.array([(2, 5), (5, 3), (3, 4), (4, 1)]) - 1
    return normalize_edges(5, pairs, labels=labels)


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: EdgeList
    connected: bool


def corpus(count: int = 1000, seed: int = 0, max_n: int = 256, directed_share: float = 0.2) -> Iterator[CorpusGraph]:
    """Mixed-density random graphs, connected and not, some directed.

    ``connected`` is only claimed for generators that guarantee it.
    """
    rng = np.random.default_rng(seed)
    fixed = [
        CorpusGraph("path5_labelled", labelled_path5(), True),
        CorpusGraph("star8", star(8), True),
        CorpusGraph("clique12", clique(12), True),
        CorpusGraph("path17", path(17), True),
        CorpusGraph("grid6x7", grid(6, 7), True),
        CorpusGraph("single", normalize_edges(1, []), True),
        CorpusGraph("edge", normalize_edges(2, [(0, 1)]), True),
        CorpusGraph("empty5", normalize_edges(5, []), False),
    ]
    yield from fixed[:count]
    for i in range(len(fixed), count):
        n = int(rng.integers(2, max_n + 1))
        density = float(rng.choice([0.5, 1.0, 2.0, 4.0, 8.0]))
        p = min(1.0, density / n)
        sub = int(rng.integers(0, 2**63 - 1))
        roll = rng.random()
        if roll < directed_share:
            yield CorpusGraph(f"dgnp{i}_n{n}", gnp(n, p, sub, directed=True), False)
        elif roll < directed_share + 0.4:
            yield CorpusGraph(f"cgnp{i}_n{n}", connected_gnp(n, p / 2, sub), True)
        else:
            yield CorpusGraph(f"gnp{i}_n{n}", gnp(n, p, sub), False)
