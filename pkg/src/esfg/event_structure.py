"""Event structures: a causality order plus a conflict relation.

Causality is stored reflexively (every event carries its self-loop), so
the set of events is exactly the field of the causality relation and
isolated events are representable through their self-loop alone.
Conflict must be symmetric, irreflexive, live on the events, and
propagate along causality: a conflict with a cause is inherited by every
effect of that cause.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .relation import Relation

#: Names of the individual validity conjuncts, in check order.
ES_CONJUNCTS = (
    "conflict-not-propagating",
    "conflict-not-symmetric",
    "conflict-not-irreflexive",
    "causality-not-transitive",
    "causality-not-antisymmetric",
    "causality-not-reflexive-over-field",
    "conflict-events-outside-causality",
)


class EventStructureError(ValueError):
    """Raised when an operation requires a valid event structure.

    ``failures`` names each violated conjunct.
    """

    def __init__(self, failures: tuple[str, ...]):
        self.failures = failures
        super().__init__("not an event structure: " + ", ".join(failures))


def is_conflict_propagating(conflict: Relation, causality: Relation) -> bool:
    """Conflicts inherited along causality: x#z and x<=y imply y#z.

    Evaluated as: for every causality pair (x, y), the conflict image of
    {x} is contained in the conflict image of {y}.
    """
    partners: dict[int, set[int]] = {}
    for a, b in conflict.pairs:
        partners.setdefault(a, set()).add(b)
    empty: set[int] = set()
    return all(
        partners.get(x, empty) <= partners.get(y, empty)
        for x, y in causality.pairs
    )


def es_failures(causality: Relation, conflict: Relation) -> tuple[str, ...]:
    """Every violated validity conjunct, empty when (D, U) is an event
    structure."""
    failed = []
    if not is_conflict_propagating(conflict, causality):
        failed.append("conflict-not-propagating")
    if not conflict.is_symmetric:
        failed.append("conflict-not-symmetric")
    if not conflict.is_irreflexive:
        failed.append("conflict-not-irreflexive")
    if not causality.is_transitive:
        failed.append("causality-not-transitive")
    if not causality.is_antisymmetric:
        failed.append("causality-not-antisymmetric")
    if not causality.is_reflexive_over_field:
        failed.append("causality-not-reflexive-over-field")
    if not set(conflict.field) <= set(causality.field):
        failed.append("conflict-events-outside-causality")
    return tuple(failed)


def is_event_structure(causality: Relation, conflict: Relation) -> bool:
    """True when every validity conjunct holds (short-circuiting)."""
    return (
        causality.is_reflexive_over_field
        and causality.is_transitive
        and causality.is_antisymmetric
        and conflict.is_symmetric
        and conflict.is_irreflexive
        and set(conflict.field) <= set(causality.field)
        and is_conflict_propagating(conflict, causality)
    )


def terminal_events(causality: Relation) -> tuple[int, ...]:
    """Events with no successor other than themselves, sorted."""
    return tuple(
        s for s in causality.field if causality.image((s,)) <= {s}
    )


@dataclass(frozen=True)
class EventStructure:
    """A (causality, conflict) pair over one shared universe.

    Construction requires the conflict field to stay inside the event set
    and both components to share a universe; full validity is available
    through ``failures`` / ``is_valid`` so that rejection diagnostics can
    be reported rather than raised.
    """

    causality: Relation
    conflict: Relation

    def __post_init__(self) -> None:
        if self.causality.universe != self.conflict.universe:
            raise ValueError("causality and conflict must share a universe")
        if not set(self.conflict.field) <= set(self.causality.field):
            raise ValueError("conflict mentions vertices outside the event set")

    @property
    def events(self) -> tuple[int, ...]:
        return self.causality.field

    @cached_property
    def failures(self) -> tuple[str, ...]:
        return es_failures(self.causality, self.conflict)

    @property
    def is_valid(self) -> bool:
        return not self.failures

    def validated(self) -> EventStructure:
        """Self, or EventStructureError naming the violated conjuncts."""
        if self.failures:
            raise EventStructureError(self.failures)
        return self

    @property
    def terminals(self) -> tuple[int, ...]:
        return terminal_events(self.causality)

    def remove_event(self, s: int) -> EventStructure:
        """The structure with event ``s`` excised from both relations."""
        if s not in self.causality.field:
            raise ValueError(f"{s} is not an event of this structure")
        return EventStructure(
            self.causality.remove_vertex_pairs(s, s),
            self.conflict.remove_vertex_pairs(s, s),
        )
