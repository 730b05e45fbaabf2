"""Clique partitions and greedy maximal-clique decompositions.

Two constructions live here. The greedy decomposition repeatedly removes a
maximal clique from the residual graph until no edge is left, then covers
vertices that were isolated from the start with trivial cliques. The
recursive edge/triangle partition stays within the floor(n^2/4) clique
budget while keeping every vertex's clique-incidence set distinct from every
other vertex's (for n >= 4).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graphs import Graph, bits, lowest_bit

Clique = tuple[int, ...]

LEXICOGRAPHIC_KIND = "lexicographic"
SEEDED_KIND = "seeded-random"


def quarter_square(n: int) -> int:
    """floor(n*n / 4): the clique budget every construction here respects."""
    return n * n // 4


@dataclass(frozen=True)
class GreedyStrategy:
    """Tie-breaking rule for greedy clique growth.

    "lexicographic" always prefers lower vertex indices. "seeded-random" runs
    the identical procedure under a vertex permutation drawn from the seed,
    so a fixed seed reproduces the exact decomposition.
    """

    kind: str = LEXICOGRAPHIC_KIND
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (LEXICOGRAPHIC_KIND, SEEDED_KIND):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.kind == SEEDED_KIND and self.seed is None:
            raise ValueError("seeded-random strategy needs a seed")
        if self.kind == LEXICOGRAPHIC_KIND and self.seed is not None:
            raise ValueError("lexicographic strategy takes no seed")

    def describe(self) -> str:
        return "lex" if self.kind == LEXICOGRAPHIC_KIND else f"random:{self.seed}"

    def vertex_order(self, n: int) -> tuple[int, ...]:
        """Vertices in priority order (highest priority first)."""
        return _strategy_order(self.kind, self.seed, n)


LEXICOGRAPHIC = GreedyStrategy()


def seeded_strategy(seed: int) -> GreedyStrategy:
    return GreedyStrategy(SEEDED_KIND, seed)


@lru_cache(maxsize=4096)
def _strategy_order(kind: str, seed: int | None, n: int) -> tuple[int, ...]:
    order = list(range(n))
    if kind == SEEDED_KIND:
        random.Random(seed).shuffle(order)
    return tuple(order)


@dataclass(frozen=True)
class Violation:
    """One validator finding.

    `kind` names what failed; the optional fields carry whichever coordinates
    make the finding reproducible (clique position, vertex pair, ...).
    """

    kind: str
    position: int | None = None
    pair: tuple[int, int] | None = None
    vertex: int | None = None
    vertices: tuple[int, ...] | None = None
    element: int | None = None
    observed: int | None = None
    expected: int | None = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind}
        for name in ("position", "pair", "vertex", "vertices", "element",
                     "observed", "expected"):
            value = getattr(self, name)
            if value is not None:
                doc[name] = list(value) if isinstance(value, tuple) else value
        return doc


@dataclass(frozen=True)
class CliquePartition:
    """Unordered clique partition of a host graph.

    Every edge lies in exactly one clique, trivial (single-vertex) cliques
    are allowed anywhere and required for isolated vertices, and no two
    cliques share the same vertex set. Cliques are stored sorted.
    """

    host: Graph
    cliques: tuple[Clique, ...]

    @classmethod
    def from_cliques(cls, host: Graph, cliques: Iterable[Iterable[int]]) -> "CliquePartition":
        normalized = sorted(tuple(sorted(c)) for c in cliques)
        return cls(host, tuple(normalized))

    def to_json(self) -> dict:
        return {
            "n": self.host.n,
            "ordered": False,
            "cliques": [list(c) for c in self.cliques],
        }

    @classmethod
    def from_json(cls, doc: dict, host: Graph) -> "CliquePartition":
        return cls.from_cliques(host, _cliques_from_json(doc, host))


@dataclass(frozen=True)
class GreedyDecomposition:
    """Ordered clique sequence; each entry was maximal in the residual graph
    obtained by deleting all earlier entries' edges."""

    host: Graph
    sequence: tuple[Clique, ...]

    def as_partition(self) -> CliquePartition:
        return CliquePartition.from_cliques(self.host, self.sequence)

    def to_json(self) -> dict:
        return {
            "n": self.host.n,
            "ordered": True,
            "cliques": [list(c) for c in self.sequence],
        }

    @classmethod
    def from_json(cls, doc: dict, host: Graph) -> "GreedyDecomposition":
        cliques = _cliques_from_json(doc, host)
        return cls(host, tuple(tuple(sorted(c)) for c in cliques))


def _cliques_from_json(doc: dict, host: Graph) -> list[list[int]]:
    if not isinstance(doc, dict):
        raise ValueError("artifact must be a JSON object")
    for key in ("n", "ordered", "cliques"):
        if key not in doc:
            raise ValueError(f"artifact is missing the {key!r} key")
    if not isinstance(doc["n"], int) or isinstance(doc["n"], bool):
        raise ValueError("artifact 'n' must be an integer")
    if doc["n"] != host.n:
        raise ValueError(f"artifact n={doc['n']} does not match graph n={host.n}")
    if not isinstance(doc["ordered"], bool):
        raise ValueError("artifact 'ordered' must be a boolean")
    cliques = doc["cliques"]
    if not isinstance(cliques, list):
        raise ValueError("artifact 'cliques' must be an array")
    for c in cliques:
        if not isinstance(c, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in c
        ):
            raise ValueError("each clique must be an array of integers")
    return cliques


def greedy_decomposition(g: Graph, strategy: GreedyStrategy = LEXICOGRAPHIC) -> GreedyDecomposition:
    """Remove one maximal clique of the residual graph at a time.

    Each clique is seeded at the highest-priority vertex that still has a
    residual edge, paired with its highest-priority residual neighbor, and
    grown by repeatedly adding the highest-priority vertex adjacent to all
    current members. Once every edge is covered, vertices isolated in g get
    one trivial clique each, in priority order.
    """
    order = strategy.vertex_order(g.n)
    residual = list(g.adj)
    sequence: list[Clique] = []
    while True:
        seed = next((v for v in order if residual[v]), None)
        if seed is None:
            break
        mate = next(v for v in order if residual[seed] >> v & 1)
        mask = (1 << seed) | (1 << mate)
        common = residual[seed] & residual[mate]
        while common:
            grow = next(v for v in order if common >> v & 1)
            mask |= 1 << grow
            common &= residual[grow]
        members = tuple(bits(mask))
        for u, v in combinations(members, 2):
            residual[u] &= ~(1 << v)
            residual[v] &= ~(1 << u)
        sequence.append(members)
    sequence.extend((v,) for v in order if g.adj[v] == 0)
    return GreedyDecomposition(g, tuple(sequence))


def validate_greedy(g: Graph, d: GreedyDecomposition) -> list[Violation]:
    """Replay the sequence against the residual graph; empty result iff valid.

    Findings per position: vertices out of range, repeats inside a clique,
    duplicate cliques, non-adjacent pairs, pairs covered twice, and a witness
    vertex whenever the clique was not maximal in its residual. Edges never
    covered and isolated vertices without a trivial clique are reported at
    the end.
    """
    out: list[Violation] = []
    residual = list(g.adj)
    seen: set[Clique] = set()
    full = (1 << g.n) - 1
    for i, cl in enumerate(d.sequence):
        if len(cl) == 0:
            out.append(Violation("empty_clique", position=i))
            continue
        bad = [v for v in cl if not 0 <= v < g.n]
        if bad:
            out.extend(Violation("bad_vertex", position=i, vertex=v) for v in bad)
            continue
        if len(set(cl)) != len(cl):
            out.append(Violation("repeated_vertex", position=i, vertices=cl))
            continue
        if cl in seen:
            out.append(Violation("duplicate_clique", position=i, vertices=cl))
        seen.add(cl)
        ok_pairs = []
        for u, v in combinations(sorted(cl), 2):
            if not g.has_edge(u, v):
                out.append(Violation("not_a_clique", position=i, pair=(u, v)))
            elif not residual[u] >> v & 1:
                out.append(Violation("double_cover", position=i, pair=(u, v)))
            else:
                ok_pairs.append((u, v))
        mask = 0
        for v in cl:
            mask |= 1 << v
        common = full
        for v in cl:
            common &= residual[v]
        common &= ~mask
        if common:
            out.append(Violation("not_maximal", position=i, vertex=lowest_bit(common)))
        for u, v in ok_pairs:
            residual[u] &= ~(1 << v)
            residual[v] &= ~(1 << u)
    for u in range(g.n):
        rest = residual[u] >> (u + 1) << (u + 1)
        for v in bits(rest):
            out.append(Violation("uncovered_edge", pair=(u, v)))
    for v in range(g.n):
        if g.adj[v] == 0 and (v,) not in seen:
            out.append(Violation("isolated_vertex_uncovered", vertex=v))
    return out


def validate_partition(g: Graph, p: CliquePartition) -> list[Violation]:
    """Check the clique-partition contract; empty result iff valid.

    Reports adjacent pairs covered a number of times other than once,
    non-adjacent pairs covered at all, members that are not cliques,
    duplicate cliques, and isolated vertices lacking a trivial clique.
    """
    out: list[Violation] = []
    seen: set[Clique] = set()
    counts: dict[tuple[int, int], int] = {}
    for i, cl in enumerate(p.cliques):
        if len(cl) == 0:
            out.append(Violation("empty_clique", position=i))
            continue
        bad = [v for v in cl if not 0 <= v < g.n]
        if bad:
            out.extend(Violation("bad_vertex", position=i, vertex=v) for v in bad)
            continue
        if len(set(cl)) != len(cl):
            out.append(Violation("repeated_vertex", position=i, vertices=cl))
            continue
        if cl in seen:
            out.append(Violation("duplicate_clique", position=i, vertices=cl))
        seen.add(cl)
        for u, v in combinations(sorted(cl), 2):
            counts[(u, v)] = counts.get((u, v), 0) + 1
            if not g.has_edge(u, v):
                out.append(Violation("not_a_clique", position=i, pair=(u, v)))
    for u, v in sorted(g.edges):
        c = counts.get((u, v), 0)
        if c != 1:
            out.append(Violation("miscovered_edge", pair=(u, v), observed=c, expected=1))
    for pair, c in sorted(counts.items()):
        if pair not in g.edges:
            out.append(Violation("covered_nonedge", pair=pair, observed=c, expected=0))
    for v in range(g.n):
        if g.adj[v] == 0 and (v,) not in seen:
            out.append(Violation("isolated_vertex_uncovered", vertex=v))
    return out


def erdos_partition(g: Graph) -> CliquePartition:
    """Partition the edges into at most floor(n^2/4) cliques of <= 3 vertices
    whose clique-incidence sets are pairwise distinct (for n >= 4).

    Recursive construction. If some vertex has degree <= floor(n/2), delete
    it, partition the rest, and cover its edges directly. Otherwise take a
    minimum-degree vertex x with degree floor(n/2)+r, greedily pair up 2r of
    its neighbors along r disjoint neighborhood edges (the minimum-degree
    hypothesis guarantees the pairing never stalls; we check and fail loudly
    rather than assume), remove those edges, recurse on the rest without x,
    and cover x's edges with r triangles plus single edges. Base graphs
    (n <= 4) are solved by exhaustive search for a minimum partition with
    the distinctness property. Trivial cliques created for vertices isolated
    at inner levels are kept: the distinctness property can depend on them.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    cliques = _erdos_rec(list(g.adj), list(range(g.n)))
    return CliquePartition.from_cliques(g, cliques)


def _erdos_rec(adj: list[int], labels: list[int]) -> list[Clique]:
    n = len(adj)
    if n <= 4:
        return _erdos_base(adj, labels)
    deg = [m.bit_count() for m in adj]
    x = min(range(n), key=lambda v: (deg[v], v))
    half = n // 2
    lx = labels[x]
    if deg[x] <= half:
        out = _erdos_rec(*_drop_vertex(adj, labels, x))
        if adj[x] == 0:
            out.append((lx,))
        else:
            for u in bits(adj[x]):
                out.append(_sorted_pair(lx, labels[u]))
        return out
    # Every degree exceeds floor(n/2): pair up x's neighbors and use triangles.
    r = deg[x] - half
    nbr_mask = adj[x]
    used = 0
    matches: list[tuple[int, int]] = []
    for u in bits(nbr_mask):
        if len(matches) == r:
            break
        if used >> u & 1:
            continue
        cand = adj[u] & nbr_mask & ~used & ~(1 << u)
        if cand:
            w = lowest_bit(cand)
            matches.append((u, w))
            used |= (1 << u) | (1 << w)
    if len(matches) < r:
        raise RuntimeError(
            f"neighborhood pairing stalled at {len(matches)} of {r} edges; "
            "the minimum-degree guarantee was violated"
        )
    trimmed = list(adj)
    for u, w in matches:
        trimmed[u] &= ~(1 << w)
        trimmed[w] &= ~(1 << u)
    out = _erdos_rec(*_drop_vertex(trimmed, labels, x))
    for u, w in matches:
        out.append(tuple(sorted((lx, labels[u], labels[w]))))
    for u in bits(nbr_mask & ~used):
        out.append(_sorted_pair(lx, labels[u]))
    return out


def _sorted_pair(a: int, b: int) -> Clique:
    return (a, b) if a < b else (b, a)


def _drop_vertex(adj: list[int], labels: list[int], x: int) -> tuple[list[int], list[int]]:
    """Delete vertex x, compacting bit positions above it down by one."""
    low = (1 << x) - 1
    new_adj = []
    for v, m in enumerate(adj):
        if v == x:
            continue
        new_adj.append((m & low) | (m >> (x + 1)) << x)
    return new_adj, labels[:x] + labels[x + 1:]


def _erdos_base(adj: list[int], labels: list[int]) -> list[Clique]:
    """Minimum partition of an n <= 4 graph into cliques of <= 3 vertices with
    pairwise-distinct incidence sets, by exhaustive branching.

    Branches on the smallest uncovered edge, as itself or as a triangle.
    A completed edge partition is charged one trivial clique per isolated
    vertex plus one per extra member of each group of vertices with identical
    incidence sets (the cheapest way to split such a group, since a fresh
    trivial clique can collide with nothing).
    """
    n = len(adj)
    iso = [v for v in range(n) if adj[v] == 0]
    residual = list(adj)
    chosen: list[tuple[int, ...]] = []
    best: list[tuple[int, ...]] | None = None
    best_cost = None

    def smallest_uncovered() -> tuple[int, int] | None:
        for u in range(n):
            if residual[u]:
                return u, lowest_bit(residual[u])
        return None

    def completion() -> tuple[int, list[tuple[int, ...]]]:
        incidence: list[list[int]] = [[] for _ in range(n)]
        for k, cl in enumerate(chosen):
            for v in cl:
                incidence[v].append(k)
        groups: dict[tuple[int, ...], list[int]] = {}
        for v in range(n):
            if adj[v]:
                groups.setdefault(tuple(incidence[v]), []).append(v)
        extras = [v for members in groups.values() if len(members) > 1
                  for v in members[1:]]
        cost = len(chosen) + len(iso) + len(extras)
        return cost, extras

    def rec() -> None:
        nonlocal best, best_cost
        edge = smallest_uncovered()
        if edge is None:
            cost, extras = completion()
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best = list(chosen) + [(v,) for v in iso] + [(v,) for v in sorted(extras)]
            return
        if best_cost is not None and len(chosen) + 1 + len(iso) >= best_cost:
            return
        u, v = edge
        options: list[tuple[int, ...]] = [(u, v)]
        for w in bits(residual[u] & residual[v]):
            options.append(tuple(sorted((u, v, w))))
        for cl in options:
            pairs = list(combinations(cl, 2))
            for a, b in pairs:
                residual[a] &= ~(1 << b)
                residual[b] &= ~(1 << a)
            chosen.append(cl)
            rec()
            chosen.pop()
            for a, b in pairs:
                residual[a] |= 1 << b
                residual[b] |= 1 << a

    rec()
    assert best is not None
    return [tuple(sorted(labels[v] for v in cl)) for cl in best]
