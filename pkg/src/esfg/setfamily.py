"""Set-valued maps: one finite set of natural-number labels per vertex.

A ``SetFamily`` is right-unique by construction (it is a map), immutable,
and total in the lenient sense: applying it outside its keys returns the
empty set.  Strict domain membership is an explicit ``in`` check.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

_EMPTY: frozenset[int] = frozenset()


class SetFamily:
    """Immutable finite map from vertex ids to finite label sets."""

    __slots__ = ("_entries",)

    def __init__(
        self,
        entries: Mapping[int, Iterable[int]] | Iterable[tuple[int, Iterable[int]]] = (),
    ):
        items = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[int, frozenset[int]] = {}
        for key, labels in items:
            key = int(key)
            if key < 0:
                raise ValueError(f"vertex id {key} is not a natural number")
            value = frozenset(int(v) for v in labels)
            if any(v < 0 for v in value):
                raise ValueError(f"labels of {key} must be natural numbers")
            if key in store:
                raise ValueError(f"duplicate key {key}")
            store[key] = value
        self._entries = store

    # ------------------------------------------------------------------

    @property
    def keys(self) -> tuple[int, ...]:
        return tuple(sorted(self._entries))

    def items(self) -> tuple[tuple[int, frozenset[int]], ...]:
        return tuple((k, self._entries[k]) for k in self.keys)

    def values(self) -> tuple[frozenset[int], ...]:
        return tuple(self._entries[k] for k in self.keys)

    def __contains__(self, key: int) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.keys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {sorted(v)}" for k, v in self.items())
        return f"SetFamily({{{body}}})"

    # ------------------------------------------------------------------

    def apply(self, key: int) -> frozenset[int]:
        """The set at ``key``, or the empty set when the key is absent."""
        return self._entries.get(key, _EMPTY)

    def paste(self, key: int, labels: Iterable[int]) -> SetFamily:
        """A copy with ``key`` (re)bound to ``labels``; other keys unchanged."""
        updated = dict(self._entries)
        updated[int(key)] = frozenset(labels)
        return SetFamily(updated)

    def point_union(self, other: SetFamily) -> SetFamily:
        """Pointwise union over the other family's keys.

        Keys of the result are the union of both key sets; on the other
        family's keys the values are unioned, elsewhere they are kept.
        """
        updated = dict(self._entries)
        for key in other.keys:
            updated[key] = self.apply(key) | other.apply(key)
        return SetFamily(updated)

    def is_injective(self) -> bool:
        """No two distinct keys share the same value set."""
        return len(set(self._entries.values())) == len(self._entries)

    def union_of_range(self) -> frozenset[int]:
        """All labels used anywhere in the family."""
        out: set[int] = set()
        for value in self._entries.values():
            out |= value
        return frozenset(out)
