"""Exhaustive search for label-set families under pairwise constraints.

This is the independent existence oracle behind the brute-force checks:
given a containment relation and a second relation (read either as
disjointness or as overlap), it looks for an injective family of nonempty
label sets realising both biconditionals exactly, or certifies that no
such family exists with labels below the given bound.

Candidate sets are bitmasks over ``range(label_bound)``.  The search is a
depth-first assignment of events in a fixed order; a branch is abandoned
only when a biconditional is already violated against the assigned
prefix, or when simple necessary conditions (interval bounds on the
remaining events) show the prefix cannot be completed.  Both prunings
preserve exhaustiveness, and every accepted assignment is re-checked
pairwise against the full biconditionals, so a returned family is exact
and ``None`` means genuinely unsatisfiable within the bound.

The first solution in ascending-mask order along the fixed event order is
returned, which makes results deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Pair = tuple[int, int]


def causes_first_order(events: Iterable[int], containment: Iterable[Pair]) -> list[int]:
    """Events ordered so containment sources come before their targets.

    A topological order of the strict containment pairs with ascending
    tie-breaks; vertices on cycles (possible for garbage inputs) are
    appended in ascending order.  Assigning supersets before their
    subsets lets the search enumerate candidate subsets directly.
    """
    events = sorted(set(events))
    members = set(events)
    strict = {
        (a, b) for a, b in containment if a != b and a in members and b in members
    }
    indegree = {v: 0 for v in events}
    for _, b in strict:
        indegree[b] += 1
    order: list[int] = []
    ready = sorted(v for v in events if indegree[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        changed = False
        for a, b in strict:
            if a == v:
                indegree[b] -= 1
                if indegree[b] == 0:
                    ready.append(b)
                    changed = True
        if changed:
            ready.sort()
    order.extend(sorted(v for v in events if v not in set(order)))
    return order


def _ascending_submasks(low: int, high: int) -> list[int]:
    """All masks S with low <= S <= high (bitwise), ascending as integers."""
    free = high & ~low
    out = []
    sub = free
    while True:
        out.append(sub | low)
        if sub == 0:
            break
        sub = (sub - 1) & free
    out.reverse()
    return out


def search_set_family(
    order: Sequence[int],
    containment: Iterable[Pair],
    second: Iterable[Pair],
    *,
    second_overlap: bool,
    label_bound: int,
) -> dict[int, frozenset[int]] | None:
    """Find an injective family of nonempty subsets of ``range(label_bound)``
    keyed by ``order`` such that, for all keys x, y:

      (x, y) in containment  <=>  family[x] >= family[y]
      (x, y) in second       <=>  family[x] and family[y] are disjoint
                                  (or overlap, with ``second_overlap``)

    Returns the first solution in ascending-mask order, or ``None``.
    """
    order = list(order)
    n = len(order)
    if n == 0:
        return {}
    if label_bound <= 0:
        return None
    containment = frozenset(containment)
    second = frozenset(second)

    # Assignment-independent contradictions: a nonempty set always contains
    # itself and never is disjoint from (or overlaps) itself, and the second
    # biconditional reads the same intersection for (x,y) and (y,x).
    for x in order:
        if (x, x) not in containment:
            return None
        if (x, x) in second:
            return None
    for i, x in enumerate(order):
        for y in order[i + 1 :]:
            if ((x, y) in second) != ((y, x) in second):
                return None

    full = (1 << label_bound) - 1

    def bounds(y: int, assigned: list[tuple[int, int]]) -> tuple[int, int] | None:
        """Interval of masks still permitted for ``y``, or None when the
        assigned prefix already rules out every completion at ``y``."""
        low, high = 0, full
        for x, mx in assigned:
            if (x, y) in containment:
                high &= mx
            if (y, x) in containment:
                low |= mx
            if not second_overlap and (x, y) in second:
                high &= ~mx
        if low & ~high or high == 0:
            return None
        for x, mx in assigned:
            if (x, y) not in containment and (high & ~mx) == 0:
                return None  # every remaining choice would sit inside mx
            if (y, x) not in containment and (mx & ~low) == 0:
                return None  # every remaining choice would contain mx
            s = (x, y) in second
            if second_overlap and s:
                if (high & mx) == 0 or (high & ~mx) == 0 or (mx & ~low) == 0:
                    return None  # proper two-sided overlap impossible
            if not second_overlap and not s:
                if (high & mx) == 0:
                    return None  # required shared label impossible
        return low, high

    def compatible(x: int, mx: int, y: int, my: int) -> bool:
        """Exact biconditional clauses between two assigned events."""
        if ((x, y) in containment) != ((mx | my) == mx):
            return False
        if ((y, x) in containment) != ((mx | my) == my):
            return False
        inter = mx & my
        if second_overlap:
            status = inter != 0 and inter != mx and inter != my
        else:
            status = inter == 0
        return ((x, y) in second) == status

    assigned: list[tuple[int, int]] = []

    def extend(level: int) -> bool:
        if level == n:
            return True
        for z in order[level:]:
            if bounds(z, assigned) is None:
                return False
        y = order[level]
        low, high = bounds(y, assigned)  # feasible: checked just above
        taken = {m for _, m in assigned}
        for candidate in _ascending_submasks(low, high):
            if candidate == 0 or candidate in taken:
                continue
            if all(compatible(x, mx, y, candidate) for x, mx in assigned):
                assigned.append((y, candidate))
                if extend(level + 1):
                    return True
                assigned.pop()
        return False

    if not extend(0):
        return None
    return {
        x: frozenset(b for b in range(label_bound) if mx >> b & 1)
        for x, mx in assigned
    }
