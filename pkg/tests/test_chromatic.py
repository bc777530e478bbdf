import random
import sys

import pytest

sys.path.insert(0, "tests")
from oracles import brute_chromatic, random_connected_graph

from sudokugraph import (
    BudgetExceededError,
    PartialColoring,
    Family,
    FamilySpec,
    build,
    chromatic_number,
    count_color_partitions,
    count_labeled_colorings,
    find_k_coloring,
    generate,
    greedy_clique,
    greedy_coloring,
    is_proper,
    is_uniquely_colorable,
)


def make(family, **params):
    return generate(FamilySpec(family, params))


def test_known_chromatic_numbers():
    table = [
        (make(Family.PATH, n=6), 2),
        (make(Family.CYCLE, n=6), 2),
        (make(Family.CYCLE, n=7), 3),
        (make(Family.COMPLETE, n=5), 5),
        (make(Family.COMPLETE_MULTIPARTITE, parts=[2, 2, 2]), 3),
        (make(Family.WHEEL, n=6), 3),
        (make(Family.WHEEL, n=5), 4),
        (make(Family.FRIENDSHIP, m=3), 3),
        (make(Family.LOLLIPOP, n=5, m=2), 5),
        (make(Family.CYCLE_OF_CLIQUES, n=3, m=4), 4),
        (make(Family.CYCLE_OF_CLIQUES_MINUS, n=3, m=5), 4),
        (build(1, []), 1),
        (build(4, []), 1),
        (build(4, [(0, 1), (2, 3)]), 2),
    ]
    for g, want in table:
        chi, witness = chromatic_number(g)
        assert chi == want
        assert witness.k == want
        assert witness.domain == frozenset(range(g.n))
        assert is_proper(g, witness)


def test_witness_uses_every_color():
    for g in (make(Family.CYCLE, n=9), make(Family.WHEEL, n=7), make(Family.COMPLETE, n=4)):
        chi, witness = chromatic_number(g)
        assert witness.colors_used == frozenset(range(1, chi + 1))


def test_find_k_coloring_boundaries():
    g = make(Family.CYCLE, n=5)
    assert find_k_coloring(g, 2) is None
    c3 = find_k_coloring(g, 3)
    assert c3 is not None and is_proper(g, PartialColoring(3, c3))
    c4 = find_k_coloring(g, 4)
    assert c4 is not None and is_proper(g, PartialColoring(4, c4))


def test_greedy_clique_is_a_clique():
    rng = random.Random(11)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 9), extra=0.5)
        clique = greedy_clique(g)
        assert len(clique) >= 2
        for i, u in enumerate(clique):
            for v in clique[i + 1 :]:
                assert g.has_edge(u, v)


def test_greedy_coloring_is_proper_upper_bound():
    rng = random.Random(12)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 9), extra=0.4)
        coloring = greedy_coloring(g)
        assert set(coloring) == set(range(g.n))
        ub = max(coloring.values())
        assert is_proper(g, PartialColoring(ub, coloring))
        assert ub >= chromatic_number(g)[0]


def test_chromatic_matches_brute_force():
    rng = random.Random(13)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 7), extra=rng.choice([0.2, 0.5, 0.8]))
        assert chromatic_number(g)[0] == brute_chromatic(g)


def test_count_labeled_colorings_cycle():
    # chromatic polynomial of C_n at k: (k-1)^n + (-1)^n (k-1)
    g = make(Family.CYCLE, n=5)
    assert count_labeled_colorings(g, 3) == 2**5 - 2
    assert count_labeled_colorings(g, 4) == 3**5 - 3
    g6 = make(Family.CYCLE, n=6)
    assert count_labeled_colorings(g6, 2) == 2
    assert count_labeled_colorings(g6, 3) == 2**6 + 2


def test_count_labeled_colorings_cap_saturates():
    g = make(Family.CYCLE, n=5)
    assert count_labeled_colorings(g, 3, cap=7) == 7
    assert count_labeled_colorings(g, 3, cap=100) == 30


def test_count_color_partitions():
    g5 = make(Family.CYCLE, n=5)
    assert count_color_partitions(g5, 3) == 5
    k4 = make(Family.COMPLETE, n=4)
    assert count_color_partitions(k4, 4) == 1
    p4 = make(Family.PATH, n=4)
    assert count_color_partitions(p4, 2) == 1


def test_is_uniquely_colorable():
    assert is_uniquely_colorable(make(Family.PATH, n=6), 2)
    assert is_uniquely_colorable(make(Family.COMPLETE, n=4), 4)
    assert is_uniquely_colorable(make(Family.COMPLETE_MULTIPARTITE, parts=[2, 3, 2]), 3)
    assert not is_uniquely_colorable(make(Family.CYCLE, n=5), 3)
    with pytest.raises(ValueError):
        is_uniquely_colorable(make(Family.CYCLE, n=5), 4)


def test_labeled_count_is_factorial_times_partitions_at_chi():
    import math

    rng = random.Random(14)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 7), extra=0.4)
        chi, _ = chromatic_number(g)
        parts = count_color_partitions(g, chi)
        labeled = count_labeled_colorings(g, chi)
        assert labeled == parts * math.factorial(chi)


def test_budget_raises():
    with pytest.raises(BudgetExceededError):
        find_k_coloring(make(Family.CYCLE, n=9), 2, budget=2)
    with pytest.raises(BudgetExceededError):
        chromatic_number(make(Family.CYCLE_OF_CLIQUES_MINUS, n=3, m=5), budget=5)
