"""Exhaustive labeled enumeration of event structures and full graphs.

Counting is over vertex set exactly ``{0..n-1}`` (labeled structures, not
isomorphism classes).  The two totals flow through different code paths:
the event-structure count filters conflict candidates directly, while the
full-graph count runs graph-side recognition per edge-set candidate, so
their equality for every n is a real check rather than an identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .bijection import enumerate_admissible_conflicts, enumerate_fullgraph_edge_sets
from .documents import from_event_structure, from_full_graph, serialize_document
from .event_structure import EventStructure
from .fullgraph import FullGraph
from .relation import Relation, pairs_key

DEFAULT_LIMIT = 5


def _check_size(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be a natural number")
    if n > limit:
        raise ValueError(f"n={n} exceeds the configured limit {limit}")


def enumerate_partial_orders(n: int, limit: int = DEFAULT_LIMIT) -> Iterator[Relation]:
    """Every reflexive, transitive, antisymmetric relation with field
    exactly {0..n-1}, each once, in a deterministic order.

    Orders are grown one new maximal vertex at a time over a downward
    closed subset of the existing vertices, deduplicating by exact pair
    set (the same order arises from every peeling sequence).
    """
    _check_size(n, limit)
    states: set[frozenset[tuple[int, int]]] = {frozenset()}
    for _ in range(n):
        grown: set[frozenset[tuple[int, int]]] = set()
        for pairs in states:
            members = {a for a, _ in pairs}
            predecessors = {
                m: frozenset(a for a, b in pairs if b == m) for m in members
            }
            ordered = sorted(members)
            for v in range(n):
                if v in members:
                    continue
                for mask in range(1 << len(ordered)):
                    below = {ordered[i] for i in range(len(ordered)) if mask >> i & 1}
                    if any(not predecessors[m] <= below for m in below):
                        continue  # not downward closed
                    grown.add(
                        pairs | {(a, v) for a in below} | {(v, v)}
                    )
        states = grown
    for pairs in sorted(states, key=sorted):
        yield Relation(n, pairs)


def count_es(n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Number of labeled event structures on exactly n events."""
    return sum(
        len(enumerate_admissible_conflicts(order))
        for order in enumerate_partial_orders(n, limit)
    )


def count_fg(n: int, limit: int = DEFAULT_LIMIT, *, oracle: bool = False) -> int:
    """Number of labeled full graphs on exactly n vertices, via the
    graph-side path; ``oracle=True`` swaps in the brute-force
    fg-representation search (desk scale only)."""
    return sum(
        len(enumerate_fullgraph_edge_sets(order, oracle=oracle))
        for order in enumerate_partial_orders(n, limit)
    )


@dataclass(frozen=True)
class CountReport:
    """Both totals for one n, with the per-order split of the ES side."""

    n: int
    es_count: int
    fg_count: int
    per_order_breakdown: tuple[tuple[Relation, int], ...]
    elapsed_seconds: float

    def __post_init__(self) -> None:
        if self.es_count != sum(c for _, c in self.per_order_breakdown):
            raise ValueError("per-order breakdown does not add up to es_count")


def count_report(n: int, limit: int = DEFAULT_LIMIT) -> CountReport:
    started = time.perf_counter()
    breakdown = tuple(
        (order, len(enumerate_admissible_conflicts(order)))
        for order in enumerate_partial_orders(n, limit)
    )
    es_total = sum(c for _, c in breakdown)
    fg_total = count_fg(n, limit)
    return CountReport(
        n=n,
        es_count=es_total,
        fg_count=fg_total,
        per_order_breakdown=breakdown,
        elapsed_seconds=time.perf_counter() - started,
    )


def emit_structures(
    n: int,
    kind: str,
    write: Callable[[bytes], None],
    limit: int = DEFAULT_LIMIT,
    *,
    canonical: bool = True,
) -> int:
    """Serialize every enumerated structure of the given kind to ``write``,
    one document per call, in a deterministic order; returns how many."""
    _check_size(n, limit)
    if kind not in ("es", "fg"):
        raise ValueError(f"kind must be 'es' or 'fg', got {kind!r}")
    emitted = 0
    for order in enumerate_partial_orders(n, limit):
        if kind == "es":
            for conflict in sorted(enumerate_admissible_conflicts(order), key=pairs_key):
                doc = from_event_structure(EventStructure(order, conflict))
                write(serialize_document(doc, canonical=canonical))
                emitted += 1
        else:
            for undirected in sorted(
                enumerate_fullgraph_edge_sets(order), key=pairs_key
            ):
                doc = from_full_graph(FullGraph(order, undirected))
                write(serialize_document(doc, canonical=canonical))
                emitted += 1
    return emitted
