"""Full graphs: mixed graphs realisable by set containment and overlap.

A directed relation D together with a symmetric undirected relation T
forms a full graph when some injective family of nonempty finite sets
certifies it: directed edges coincide with containment, undirected edges
with proper two-sided overlap.

Recognition reduces to the event-structure check: T works exactly when it
sits inside the incomparability square of D and the leftover of that
square (everything incomparable and not in T) is a valid conflict for D.
The family built for that conflict then certifies the full graph as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .event_structure import es_failures
from .familysearch import causes_first_order, search_set_family
from .relation import Relation
from .setfamily import SetFamily


class FullGraphError(ValueError):
    """Raised when recognition fails; ``failures`` names each reason."""

    def __init__(self, failures: tuple[str, ...]):
        self.failures = failures
        super().__init__("not a full graph: " + ", ".join(failures))


def overlaps(a: frozenset[int] | set[int], b: frozenset[int] | set[int]) -> bool:
    """Proper two-sided overlap: a nonempty intersection that is neither
    whole set."""
    inter = set(a) & set(b)
    return bool(inter) and inter != set(a) and inter != set(b)


def is_fg_representation(
    family: SetFamily, directed: Relation, undirected: Relation
) -> bool:
    """Containment matches the directed edges and overlap the undirected
    ones, over every ordered pair of keys."""
    keys = family.keys
    for x in keys:
        fx = family.apply(x)
        for y in keys:
            fy = family.apply(y)
            if ((x, y) in directed.pairs) != (fx >= fy):
                return False
            if ((x, y) in undirected.pairs) != overlaps(fx, fy):
                return False
    return True


def fg_failures(directed: Relation, undirected: Relation) -> tuple[str, ...]:
    """Diagnostics for full-graph recognition, empty when (D, T) is one."""
    failed = []
    if not set(undirected.field) <= set(directed.field):
        failed.append("undirected-field-outside-directed")
    if not undirected.is_symmetric:
        failed.append("undirected-not-symmetric")
    incomparable = directed.sym_complement()
    if not undirected.pairs <= incomparable.pairs:
        failed.append("undirected-not-within-incomparable-pairs")
    failed.extend(
        "complement-" + reason
        for reason in es_failures(directed, incomparable - undirected)
    )
    return tuple(failed)


def is_full_graph(directed: Relation, undirected: Relation) -> bool:
    return not fg_failures(directed, undirected)


def find_fg_representation_bruteforce(
    directed: Relation, undirected: Relation, label_bound: int
) -> SetFamily | None:
    """Exhaustive independent search for an injective, empty-free family
    certifying (D, T) with labels below ``label_bound``; None if there is
    no such family within the bound."""
    order = causes_first_order(directed.field, directed.pairs)
    found = search_set_family(
        order,
        directed.pairs,
        undirected.pairs,
        second_overlap=True,
        label_bound=label_bound,
    )
    if found is None:
        return None
    return SetFamily(found)


@dataclass(frozen=True)
class FullGraph:
    """A (directed, undirected) pair, optionally carrying a certificate.

    The undirected part must be symmetric and live on the directed
    vertices.  When a certificate is attached it is re-validated: it must
    be an injective, empty-free fg-representation covering exactly the
    vertex set, so a ``FullGraph`` with a certificate is a proven one.
    """

    directed: Relation
    undirected: Relation
    certificate: SetFamily | None = None

    def __post_init__(self) -> None:
        if self.directed.universe != self.undirected.universe:
            raise ValueError("directed and undirected must share a universe")
        if not self.undirected.is_symmetric:
            raise ValueError("undirected edges must be stored symmetrically")
        if not set(self.undirected.field) <= set(self.directed.field):
            raise ValueError("undirected edges mention unknown vertices")
        if self.certificate is not None:
            cert = self.certificate
            problems = []
            if not is_fg_representation(cert, self.directed, self.undirected):
                problems.append("certificate-is-not-an-fg-representation")
            if not cert.is_injective():
                problems.append("certificate-not-injective")
            if frozenset() in set(cert.values()):
                problems.append("certificate-contains-empty-set")
            if cert.keys != self.directed.field:
                problems.append("certificate-keys-differ-from-vertices")
            if problems:
                raise FullGraphError(tuple(problems))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.directed.field

    @property
    def is_recognized(self) -> bool:
        return is_full_graph(self.directed, self.undirected)


def recognize_full_graph(
    directed: Relation, undirected: Relation, *, certify: bool = True
) -> FullGraph:
    """Check (D, T) and return it as a ``FullGraph``, with a certificate
    family when requested.  Raises ``FullGraphError`` with the recognition
    diagnostics otherwise."""
    failures = fg_failures(directed, undirected)
    if failures:
        raise FullGraphError(failures)
    certificate = None
    if certify:
        from .representation import build_representation

        conflict = directed.sym_complement() - undirected
        certificate = build_representation(directed, conflict).family
    return FullGraph(directed, undirected, certificate)
