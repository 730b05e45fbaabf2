"""Brute-force ground truth at desk scale.

Exact clique-partition number and exact distinct-family intersection number
by branch and bound, exhaustive enumeration of all clique partitions of a
small graph, exhaustive bound sweeps over every labeled graph of a given
order, and the structural checks that duplicate-set pairs and 2-clique
neighborhoods are promised to satisfy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import get_context
from typing import Iterable, Iterator

from .decompose import (
    Clique,
    CliquePartition,
    GreedyDecomposition,
    GreedyStrategy,
    Violation,
    erdos_partition,
    greedy_decomposition,
    quarter_square,
    validate_greedy,
    validate_partition,
)
from .graphs import Graph, bits, degree, graph_from_bitmask, lowest_bit
from .represent import (
    SetRepresentation,
    augment_to_distinct,
    representation_from_partition,
    validate_representation,
)

#: Search budgets, chosen so every verification run finishes in minutes on
#: one machine. Overridable per call at the caller's risk.
CP_MAX_N = 10
OMEGA_MAX_N = 6
SWEEP_MIN_N = 4
SWEEP_MAX_N = 7

THREADS_ENV = "CLIQUEREP_THREADS"


@dataclass(frozen=True)
class BoundViolation:
    """One bound breach found by a sweep: which graph (edge bitmask), which
    strategy ("erdos" for the recursive partition), which check, and the
    observed value against its bound."""

    graph: int
    strategy: str
    check: str
    observed: int
    bound: int

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "strategy": self.strategy,
            "check": self.check,
            "observed": self.observed,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class BoundReport:
    """Aggregate of one exhaustive sweep over all labeled graphs on n vertices."""

    n: int
    graphs_checked: int
    strategies: tuple[str, ...]
    max_cliques_seen: int
    max_elements_seen: int
    violations: tuple[BoundViolation, ...]

    @property
    def bound(self) -> int:
        return quarter_square(self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "bound": self.bound,
            "strategies": list(self.strategies),
            "max_cliques_seen": self.max_cliques_seen,
            "max_elements_seen": self.max_elements_seen,
            "violations": [v.to_json() for v in self.violations],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BoundReport":
        if not isinstance(doc, dict):
            raise ValueError("report must be a JSON object")
        for key in ("n", "graphs_checked", "bound", "strategies",
                    "max_cliques_seen", "max_elements_seen", "violations"):
            if key not in doc:
                raise ValueError(f"report is missing the {key!r} key")
        report = cls(
            n=doc["n"],
            graphs_checked=doc["graphs_checked"],
            strategies=tuple(doc["strategies"]),
            max_cliques_seen=doc["max_cliques_seen"],
            max_elements_seen=doc["max_elements_seen"],
            violations=tuple(
                BoundViolation(v["graph"], v["strategy"], v["check"],
                               v["observed"], v["bound"])
                for v in doc["violations"]
            ),
        )
        if doc["bound"] != report.bound:
            raise ValueError(f"report bound {doc['bound']} does not match n={report.n}")
        return report


def _cliques_through_edge(adj: list[int], u: int, v: int) -> list[Clique]:
    """All cliques of the (residual) graph containing edge (u, v), largest
    first and lexicographic within a size. Each appears exactly once."""
    found: list[int] = []

    def grow(mask: int, cand: int) -> None:
        found.append(mask)
        c = cand
        while c:
            low = c & -c
            w = low.bit_length() - 1
            c ^= low
            grow(mask | low, cand & adj[w] & ~((low << 1) - 1))

    grow((1 << u) | (1 << v), adj[u] & adj[v])
    cliques = [tuple(bits(m)) for m in found]
    cliques.sort(key=lambda t: (-len(t), t))
    return cliques


def _smallest_uncovered(residual: list[int]) -> tuple[int, int] | None:
    for u, mask in enumerate(residual):
        if mask:
            return u, lowest_bit(mask)
    return None


def min_clique_partition(g: Graph, max_n: int = CP_MAX_N) -> tuple[int, CliquePartition]:
    """Exact clique-partition number with a minimum witness.

    Branch and bound on the lexicographically smallest uncovered edge,
    trying every residual clique through it, largest first; a branch is cut
    once it cannot strictly beat the incumbent. Isolated vertices each
    contribute one trivial clique.
    """
    if g.n > max_n:
        raise ValueError(f"n={g.n} exceeds the n<={max_n} search budget")
    iso = [v for v in range(g.n) if g.adj[v] == 0]
    residual = list(g.adj)
    chosen: list[Clique] = []
    best: list[Clique] | None = None

    def rec() -> None:
        nonlocal best
        edge = _smallest_uncovered(residual)
        if edge is None:
            if best is None or len(chosen) < len(best):
                best = list(chosen)
            return
        if best is not None and len(chosen) + 1 >= len(best):
            return
        u, v = edge
        for cl in _cliques_through_edge(residual, u, v):
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
    assert best is not None  # the all-edges partition always completes
    cliques = best + [(v,) for v in iso]
    witness = CliquePartition.from_cliques(g, cliques)
    return len(cliques), witness


def all_clique_partitions(g: Graph, extra_trivial: bool = False) -> Iterator[CliquePartition]:
    """Every clique partition of g, deterministically.

    Branches on the smallest uncovered edge over all residual cliques
    containing it, so each edge partition is produced exactly once; isolated
    vertices carry their forced trivial cliques. With extra_trivial, every
    variant with additional trivial cliques on non-isolated vertices is
    produced as well. Exhaustive, so meant for small n only.
    """
    iso = [v for v in range(g.n) if g.adj[v] == 0]
    non_iso = [v for v in range(g.n) if g.adj[v]]
    residual = list(g.adj)
    chosen: list[Clique] = []

    def rec() -> Iterator[CliquePartition]:
        edge = _smallest_uncovered(residual)
        if edge is None:
            base = list(chosen) + [(v,) for v in iso]
            if not extra_trivial:
                yield CliquePartition.from_cliques(g, base)
            else:
                for size in range(len(non_iso) + 1):
                    for extra in combinations(non_iso, size):
                        yield CliquePartition.from_cliques(
                            g, base + [(v,) for v in extra]
                        )
            return
        u, v = edge
        for cl in _cliques_through_edge(residual, u, v):
            pairs = list(combinations(cl, 2))
            for a, b in pairs:
                residual[a] &= ~(1 << b)
                residual[b] &= ~(1 << a)
            chosen.append(cl)
            yield from rec()
            chosen.pop()
            for a, b in pairs:
                residual[a] |= 1 << b
                residual[b] |= 1 << a

    yield from rec()


def min_distinct_representation(g: Graph, max_n: int = OMEGA_MAX_N) -> tuple[int, SetRepresentation]:
    """Exact distinct-family intersection number with a minimum witness.

    Trivial cliques are the only way to enlarge a vertex's element set
    without touching any pairwise intersection, so the minimum is found by
    searching clique partitions and charging, per completed partition, one
    trivial clique for each isolated vertex plus one for each extra member
    of a group of vertices with identical incidence sets. For n >= 4 the
    search is pruned against the quarter-square budget, which the witness is
    known to meet.
    """
    if g.n > max_n:
        raise ValueError(f"n={g.n} exceeds the n<={max_n} search budget")
    iso = [v for v in range(g.n) if g.adj[v] == 0]
    budget = quarter_square(g.n) + 1 if g.n >= 4 else len(g.edges) + g.n + 1
    residual = list(g.adj)
    chosen: list[Clique] = []
    best: list[Clique] | None = None
    best_cost = budget

    def completion() -> tuple[int, list[int]]:
        incidence: list[list[int]] = [[] for _ in range(g.n)]
        for k, cl in enumerate(chosen):
            for v in cl:
                incidence[v].append(k)
        groups: dict[tuple[int, ...], list[int]] = {}
        for v in range(g.n):
            if g.adj[v]:
                groups.setdefault(tuple(incidence[v]), []).append(v)
        extras = [v for members in groups.values() if len(members) > 1
                  for v in members[1:]]
        return len(chosen) + len(iso) + len(extras), extras

    def rec() -> None:
        nonlocal best, best_cost
        edge = _smallest_uncovered(residual)
        if edge is None:
            cost, extras = completion()
            if cost < best_cost:
                best_cost = cost
                best = list(chosen) + [(v,) for v in iso] + [(v,) for v in sorted(extras)]
            return
        if len(chosen) + 1 + len(iso) >= best_cost:
            return
        u, v = edge
        for cl in _cliques_through_edge(residual, u, v):
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
    if best is None:
        raise RuntimeError("search exhausted without meeting the quarter-square budget")
    witness_partition = CliquePartition.from_cliques(g, best)
    rep = representation_from_partition(witness_partition)
    assert not validate_representation(g, rep, require_distinct=True)
    return len(best), rep


def check_lemma6(g: Graph, p: CliquePartition) -> list[Violation]:
    """For every pair of vertices with identical clique-incidence sets:
    their one shared clique must be maximal in g, and neither vertex may
    appear in any other clique. Returns counterexamples (expected empty)."""
    problems = validate_partition(g, p)
    if problems:
        raise ValueError(f"invalid partition: {problems[0].to_json()}")
    incidence: list[list[int]] = [[] for _ in range(g.n)]
    for k, cl in enumerate(p.cliques):
        for v in cl:
            incidence[v].append(k)
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(tuple(incidence[v]), []).append(v)
    out: list[Violation] = []
    full = (1 << g.n) - 1
    for key, members in sorted(groups.items()):
        if len(members) < 2:
            continue
        for u, v in combinations(members, 2):
            if len(key) != 1:
                out.append(Violation("multi_membership", pair=(u, v),
                                     observed=len(key), expected=1))
                continue
            shared = p.cliques[key[0]]
            mask = 0
            common = full
            for w in shared:
                mask |= 1 << w
                common &= g.adj[w]
            common &= ~mask
            if common:
                out.append(Violation("not_maximal", pair=(u, v),
                                     vertices=shared, vertex=lowest_bit(common)))
    return out


def check_rs_bound(g: Graph, d: GreedyDecomposition) -> list[Violation]:
    """For each 2-clique {x, y} of the sequence where x or y has degree > 1,
    the other members touching x or y must number at most n - 2. The
    degree-1/degree-1 case is exempt. Returns counterexamples (expected
    empty)."""
    problems = validate_greedy(g, d)
    if problems:
        raise ValueError(f"invalid decomposition: {problems[0].to_json()}")
    out: list[Violation] = []
    for j, cl in enumerate(d.sequence):
        if len(cl) != 2:
            continue
        x, y = cl
        if degree(g, x) <= 1 and degree(g, y) <= 1:
            continue
        touching = {c for i, c in enumerate(d.sequence)
                    if i != j and (x in c or y in c)}
        if len(touching) > g.n - 2:
            out.append(Violation("rs_bound", position=j, pair=(x, y),
                                 observed=len(touching), expected=g.n - 2))
    return out


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(
                f"{THREADS_ENV} must be a positive integer, got {env!r}"
            ) from None
    return os.cpu_count() or 1


def _sweep_range(
    n: int, lo: int, hi: int, strategies: tuple[GreedyStrategy, ...]
) -> tuple[int, int, int, list[BoundViolation]]:
    bound = quarter_square(n)
    max_cliques = 0
    max_elements = 0
    violations: list[BoundViolation] = []
    for mask in range(lo, hi):
        g = graph_from_bitmask(n, mask)
        for strategy in strategies:
            label = strategy.describe()
            d = greedy_decomposition(g, strategy)
            total = len(d.sequence)
            nontrivial = sum(1 for c in d.sequence if len(c) >= 2)
            if total > max_cliques:
                max_cliques = total
            if nontrivial > bound:
                violations.append(BoundViolation(mask, label, "greedy_cliques",
                                                 nontrivial, bound))
            if total > bound:
                violations.append(BoundViolation(mask, label, "greedy_cliques_with_trivial",
                                                 total, bound))
            aug = augment_to_distinct(representation_from_partition(d))
            if aug.ground_size > max_elements:
                max_elements = aug.ground_size
            if aug.ground_size > bound:
                violations.append(BoundViolation(mask, label, "augmented_elements",
                                                 aug.ground_size, bound))
        p = erdos_partition(g)
        count = len(p.cliques)
        if count > max_cliques:
            max_cliques = count
        if count > bound:
            violations.append(BoundViolation(mask, "erdos", "erdos_cliques", count, bound))
        oversize = max((len(c) for c in p.cliques), default=0)
        if oversize > 3:
            violations.append(BoundViolation(mask, "erdos", "erdos_clique_size", oversize, 3))
        problems = validate_partition(g, p)
        if problems:
            violations.append(BoundViolation(mask, "erdos", "erdos_invalid",
                                             len(problems), 0))
        incidence: dict[int, list[int]] = {v: [] for v in range(n)}
        for k, cl in enumerate(p.cliques):
            for v in cl:
                incidence[v].append(k)
        seen_sets: set[tuple[int, ...]] = set()
        duplicates = 0
        for v in range(n):
            key = tuple(incidence[v])
            if key in seen_sets:
                duplicates += 1
            seen_sets.add(key)
        if duplicates:
            violations.append(BoundViolation(mask, "erdos", "erdos_distinctness",
                                             duplicates, 0))
    return hi - lo, max_cliques, max_elements, violations


def _sweep_worker(args: tuple) -> tuple[int, int, int, list[BoundViolation]]:
    return _sweep_range(*args)


def exhaustive_bound_check(
    n: int,
    strategies: Iterable[GreedyStrategy] = (),
    workers: int | None = None,
) -> BoundReport:
    """Sweep every labeled graph on n vertices.

    Per graph and strategy: run the greedy decomposition and compare both
    its non-trivial clique count and its full length (trivial cliques
    included) against floor(n^2/4), then build the augmented representation
    and compare its ground size against the same bound. Per graph: run the
    recursive edge/triangle partition and check its size, its <= 3 clique
    widths, its validity, and the distinctness of its incidence sets.
    max_cliques_seen is the largest clique count seen across greedy runs and
    recursive partitions.

    Work is split over bitmask ranges across processes (capped by the
    CLIQUEREP_THREADS environment variable or the workers argument); chunk
    results merge in bitmask order, so the report is identical regardless of
    worker count.
    """
    if not SWEEP_MIN_N <= n <= SWEEP_MAX_N:
        raise ValueError(f"sweeps support {SWEEP_MIN_N} <= n <= {SWEEP_MAX_N}, got {n}")
    strategies = tuple(strategies)
    total = 1 << (n * (n - 1) // 2)
    nworkers = _worker_count(workers)
    if nworkers <= 1 or total < 4096:
        parts = [_sweep_range(n, 0, total, strategies)]
    else:
        chunks = nworkers * 4
        bounds = [total * i // chunks for i in range(chunks + 1)]
        jobs = [(n, bounds[i], bounds[i + 1], strategies) for i in range(chunks)]
        with get_context().Pool(nworkers) as pool:
            parts = pool.map(_sweep_worker, jobs)
    checked = sum(p[0] for p in parts)
    max_cliques = max(p[1] for p in parts)
    max_elements = max(p[2] for p in parts)
    violations: list[BoundViolation] = []
    for p in parts:
        violations.extend(p[3])
    return BoundReport(
        n=n,
        graphs_checked=checked,
        strategies=tuple(s.describe() for s in strategies),
        max_cliques_seen=max_cliques,
        max_elements_seen=max_elements,
        violations=tuple(violations),
    )
