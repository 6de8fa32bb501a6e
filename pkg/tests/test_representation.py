from itertools import combinations

import pytest

from esfg import (
    EventStructureError,
    Relation,
    SetFamily,
    build_representation,
    enumerate_admissible_conflicts,
    enumerate_partial_orders,
    extend_with_terminal,
    find_representation_bruteforce,
    is_representation,
    structure_from_representation,
    terminal_events,
)


def representation_brute(family, causality, conflict):
    """Direct double-loop evaluation of both biconditionals (test oracle)."""
    for x in family.keys:
        for y in family.keys:
            if ((x, y) in causality.pairs) != (family.apply(x) >= family.apply(y)):
                return False
            disjoint = not (family.apply(x) & family.apply(y))
            if ((x, y) in conflict.pairs) != disjoint:
                return False
    return True


def all_small_families():
    """Every family with keys within {0,1,2} and labels within {0,1,2}."""
    labels = [frozenset(s) for k in range(4) for s in combinations(range(3), k)]
    for size in range(4):
        for keys in combinations(range(3), size):
            def grow(prefix, remaining):
                if not remaining:
                    yield SetFamily(dict(prefix))
                    return
                head, *tail = remaining
                for value in labels:
                    yield from grow(prefix + [(head, value)], tail)
            yield from grow([], list(keys))


def test_is_representation_examples():
    assert is_representation(SetFamily(), Relation(0), Relation(0))
    family = SetFamily({0: {0, 1}, 1: {1}})
    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    assert is_representation(family, chain, Relation(2))
    assert representation_brute(family, chain, Relation(2))
    shared = SetFamily({0: {0}, 1: {0}})
    assert not is_representation(shared, Relation(2, {(0, 0), (1, 1)}), Relation(2))


def test_extend_with_terminal_examples():
    grown = extend_with_terminal(SetFamily(), Relation(1, {(0, 0)}), Relation(1), 0)
    assert grown == SetFamily({0: {0}})

    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    grown = extend_with_terminal(SetFamily({0: {0}}), chain, Relation(2), 1)
    assert grown == SetFamily({0: {0, 1}, 1: {1}})

    discrete = Relation(2, {(0, 0), (1, 1)})
    grown = extend_with_terminal(SetFamily({1: {0}}), discrete, Relation(2), 0)
    assert grown == SetFamily({0: {1, 2}, 1: {0, 1}})


def test_extend_with_terminal_precondition_errors():
    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    with pytest.raises(ValueError, match="not terminal"):
        extend_with_terminal(SetFamily({1: {0}}), chain, Relation(2), 0)
    with pytest.raises(ValueError, match="already a key"):
        extend_with_terminal(SetFamily({1: {0}}), chain, Relation(2), 1)
    with pytest.raises(ValueError, match="conflicts with itself"):
        extend_with_terminal(
            SetFamily({0: {0}}), chain, Relation(2, {(1, 1)}), 1
        )
    with pytest.raises(ValueError, match="empty set"):
        extend_with_terminal(SetFamily({0: set()}), chain, Relation(2), 1)


def test_build_representation_examples():
    cert = build_representation(Relation(0), Relation(0))
    assert len(cert.family) == 0 and cert.fresh_label_bound == 0

    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    assert build_representation(chain, Relation(2)).family == SetFamily(
        {0: {0, 1}, 1: {1}}
    )

    discrete = Relation(2, {(0, 0), (1, 1)})
    clash = Relation(2, {(0, 1), (1, 0)})
    assert build_representation(discrete, clash).family == SetFamily({0: {1}, 1: {0}})


def test_build_representation_rejects_invalid_input():
    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    clash = Relation(2, {(0, 1), (1, 0)})
    with pytest.raises(EventStructureError) as err:
        build_representation(chain, clash)
    assert "conflict-not-propagating" in err.value.failures


def test_build_is_deterministic():
    order = Relation(3, {(0, 0), (1, 1), (2, 2), (0, 1)})
    conflict = Relation(3, {(0, 2), (2, 0), (1, 2), (2, 1)})
    first = build_representation(order, conflict)
    second = build_representation(order, conflict)
    assert first.family == second.family
    assert first.fresh_label_bound == second.fresh_label_bound


def test_bruteforce_examples():
    assert find_representation_bruteforce(
        Relation(1, {(0, 0)}), Relation(1), 1
    ) == SetFamily({0: {0}})

    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    clash = Relation(2, {(0, 1), (1, 0)})
    assert find_representation_bruteforce(chain, clash, 9) is None

    discrete = Relation(2, {(0, 0), (1, 1)})
    found = find_representation_bruteforce(discrete, Relation(2), 4)
    assert found is not None
    assert is_representation(found, discrete, Relation(2))
    assert found.is_injective()
    assert frozenset() not in set(found.values())
    assert found.keys == (0, 1)
    # deterministic: repeat runs return the same family
    assert found == find_representation_bruteforce(discrete, Relation(2), 4)


def test_structure_flags_examples():
    assert structure_from_representation(SetFamily(), Relation(0), Relation(0)).all_hold

    family = SetFamily({0: {0, 1}, 1: {1}})
    chain = Relation(2, {(0, 0), (1, 1), (0, 1)})
    assert structure_from_representation(family, chain, Relation(2)).all_hold

    # non-injective probe: both directions of containment hold, so the
    # derived order is not antisymmetric, but the implication is vacuous
    shared = SetFamily({0: {0}, 1: {0}})
    loop = Relation(2, {(0, 0), (1, 1), (0, 1), (1, 0)})
    flags = structure_from_representation(shared, loop, Relation(2))
    assert flags.all_hold
    assert not loop.is_antisymmetric and not shared.is_injective()


def test_structure_flags_rejects_non_representations():
    with pytest.raises(ValueError):
        structure_from_representation(
            SetFamily({0: {0}}), Relation(1), Relation(1)
        )
    with pytest.raises(ValueError):
        structure_from_representation(
            SetFamily(), Relation(1, {(0, 0)}), Relation(1)
        )


def test_soundness_exhaustive_over_small_families():
    """Derive the containment/disjointness relations from every family with
    keys and labels within {0,1,2}; the structural consequences must hold."""
    checked = 0
    for family in all_small_families():
        keys = family.keys
        order = Relation(
            3,
            (
                (x, y)
                for x in keys
                for y in keys
                if family.apply(x) >= family.apply(y)
            ),
        )
        conflict = Relation(
            3,
            ((x, y) for x in keys for y in keys if not family.apply(x) & family.apply(y)),
        )
        assert is_representation(family, order, conflict)
        assert structure_from_representation(family, order, conflict).all_hold
        checked += 1
    assert checked == 729


def test_completeness_and_growth_on_small_structures():
    """Replaying the peel order: each extension step grows every existing
    set, adds one fresh label per concurrent event plus a closing label,
    and the final family is a valid certificate."""
    for n in range(4):
        for order in enumerate_partial_orders(n):
            for conflict in enumerate_admissible_conflicts(order):
                peeled = []
                cur_d, cur_u = order, conflict
                while cur_d.field:
                    s = terminal_events(cur_d)[0]
                    peeled.append((s, cur_d, cur_u))
                    cur_d = cur_d.remove_vertex_pairs(s, s)
                    cur_u = cur_u.remove_vertex_pairs(s, s)
                family = SetFamily()
                for s, step_d, step_u in reversed(peeled):
                    used = family.union_of_range()
                    events = set(step_d.field)
                    ancestors = step_d.converse().image((s,)) - {s}
                    conflicting = step_u.converse().image((s,))
                    concurrent = events - {s} - ancestors - conflicting
                    grown = extend_with_terminal(family, step_d, step_u, s)
                    for x in family.keys:
                        assert family.apply(x) <= grown.apply(x)
                    fresh = grown.apply(s)
                    assert len(fresh) == len(concurrent) + 1
                    assert not fresh & used
                    family = grown
                cert = build_representation(order, conflict)
                assert cert.family == family
                assert cert.fresh_label_bound <= n * n + 1
