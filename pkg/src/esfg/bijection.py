"""The computable correspondence between event structures and full graphs.

For a fixed directed relation D, complementing within the incomparability
square swaps valid conflict relations with valid undirected edge sets:
U = incomparable-but-not-T and T = incomparable-but-not-U.  The same
set family witnesses both sides, because disjointness and proper overlap
partition the incomparable pairs once containment is pinned down.

``verify_bijection`` materialises both candidate sets for a given D and
checks the complement map is a size-preserving bijection between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .event_structure import (
    EventStructure,
    EventStructureError,
    is_event_structure,
)
from .fullgraph import FullGraph, FullGraphError, fg_failures, is_full_graph
from .fullgraph import find_fg_representation_bruteforce
from .relation import Relation, pairs_key
from .representation import build_representation


def incomparable_complement(base: Relation, rel: Relation) -> Relation:
    """Complement ``rel`` within the incomparability square of ``base``."""
    return base.sym_complement() - rel


def es_to_fg(structure: EventStructure) -> FullGraph:
    """Convert a valid event structure to its full graph.

    The undirected edges are the incomparable non-conflicts, and the
    attached certificate is the representation family built for the
    structure; the ``FullGraph`` constructor re-validates that the same
    family certifies the graph side.
    """
    if not structure.is_valid:
        raise EventStructureError(structure.failures)
    causality, conflict = structure.causality, structure.conflict
    certificate = build_representation(causality, conflict).family
    undirected = incomparable_complement(causality, conflict)
    return FullGraph(causality, undirected, certificate)


def fg_to_es(graph: FullGraph) -> EventStructure:
    """Convert a recognized full graph back to its event structure."""
    failures = fg_failures(graph.directed, graph.undirected)
    if failures:
        raise FullGraphError(failures)
    conflict = incomparable_complement(graph.directed, graph.undirected)
    return EventStructure(graph.directed, conflict)


def _symmetric_subsets(base: Relation) -> Iterator[Relation]:
    """Every symmetric subset of the incomparability square of ``base``,
    by unordered-pair mask (mirror twins toggled together)."""
    comp = base.sym_complement()
    reps = sorted({(min(a, b), max(a, b)) for a, b in comp.pairs})
    for mask in range(1 << len(reps)):
        pairs: set[tuple[int, int]] = set()
        for i, (a, b) in enumerate(reps):
            if mask >> i & 1:
                pairs.add((a, b))
                pairs.add((b, a))
        yield Relation(base.universe, pairs)


def _is_order(base: Relation) -> bool:
    return (
        base.is_transitive
        and base.is_antisymmetric
        and base.is_reflexive_over_field
    )


def enumerate_admissible_conflicts(base: Relation) -> tuple[Relation, ...]:
    """All conflict relations U making (base, U) a valid event structure.

    Candidates range over symmetric subsets of the incomparability square
    (nothing outside it can ever be admissible).  For a ``base`` that is
    not an order the result is empty.
    """
    if not _is_order(base):
        return ()
    found = [u for u in _symmetric_subsets(base) if is_event_structure(base, u)]
    found.sort(key=pairs_key)
    return tuple(found)


def enumerate_fullgraph_edge_sets(
    base: Relation, *, oracle: bool = False
) -> tuple[Relation, ...]:
    """All undirected edge sets T making (base, T) a full graph.

    Runs the graph-side recognition path; with ``oracle=True`` (test mode,
    desk scale only) each candidate is instead vetted by the exhaustive
    search for an fg-representation, independent of recognition.
    """
    if not _is_order(base):
        return ()
    size = len(base.field)
    if oracle:
        bound = size * size
        keep = [
            t
            for t in _symmetric_subsets(base)
            if find_fg_representation_bruteforce(base, t, bound) is not None
        ]
    else:
        keep = [t for t in _symmetric_subsets(base) if is_full_graph(base, t)]
    keep.sort(key=pairs_key)
    return tuple(keep)


@dataclass(frozen=True)
class BijectionReport:
    """Result of materialising both sides for one base relation.

    When every flag is true the two sizes are forced equal, and the
    constructor refuses inconsistent reports.
    """

    base_relation: Relation
    x_size: int
    y_size: int
    forward_onto: bool
    backward_onto: bool
    injective_on_x: bool
    injective_on_y: bool

    def __post_init__(self) -> None:
        if self.all_hold and self.x_size != self.y_size:
            raise ValueError("a verified bijection cannot change cardinality")

    @property
    def all_hold(self) -> bool:
        return (
            self.forward_onto
            and self.backward_onto
            and self.injective_on_x
            and self.injective_on_y
        )


def verify_bijection(base: Relation, *, max_events: int = 5) -> BijectionReport:
    """Check that complementing within the incomparability square maps the
    full-graph edge sets onto the admissible conflicts and back,
    injectively both ways."""
    if len(base.field) > max_events:
        raise ValueError(
            f"relation has {len(base.field)} vertices; limit is {max_events}"
        )
    x_side = set(enumerate_fullgraph_edge_sets(base))
    y_side = set(enumerate_admissible_conflicts(base))
    forward = {incomparable_complement(base, t) for t in x_side}
    backward = {incomparable_complement(base, u) for u in y_side}
    return BijectionReport(
        base_relation=base,
        x_size=len(x_side),
        y_size=len(y_side),
        forward_onto=(forward == y_side),
        backward_onto=(backward == x_side),
        injective_on_x=(len(forward) == len(x_side)),
        injective_on_y=(len(backward) == len(y_side)),
    )
