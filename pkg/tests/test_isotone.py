import random
from itertools import combinations, permutations

import pytest

from polarix.errors import BudgetExceeded, FamilyError, IncompleteFamily
from polarix.isotone import (
    IsotoneFamily,
    at_most_one_qs_edge,
    canonical_form,
    canonical_map,
    check_family,
    enumerate_families,
    enumerate_isotone_maps,
    family_from_qs_pattern,
    is_isomorphic,
    is_ls_edge,
    is_ls_path,
    is_valid_polarization,
    ls_edges,
    ls_path,
    map_violations,
    permute_colors,
    polarization_witness,
    qs_edges,
    qs_pattern_of_map,
    r_ls_spans,
    random_family,
    validate_family,
)
from polarix.lattice import distance, down_edges, edge, enumerate_points, join, support
from polarix.polarization import b_family, standard_family


def test_standard_family_validates():
    assert validate_family(standard_family(2, 2)) is None


def test_rank_violation_is_reported():
    f = standard_family(3, 2).replace(1, (2, 0, 0), {1})
    v = validate_family(f)
    assert v.kind == "rank" and v.color == 1 and v.point == (2, 0, 0)
    with pytest.raises(FamilyError):
        check_family(f)


def test_isotone_violation_is_reported():
    assert validate_family(standard_family(3, 2).replace(1, (1, 1, 0), {2})) is None
    # X_1(1,1,1) = {3} is not inside X_1(2,1,0) = {1,2}
    h = standard_family(3, 3).replace(1, (1, 1, 1), {3}).replace(1, (2, 1, 0), {1, 2})
    v = validate_family(h)
    assert v is not None and v.kind == "isotone" and v.color == 1


def test_second_color_case_by_case():
    # X_2(0,2,0) = {1,2}, X_2(1,1,0) = {2}, X_2(0,1,1) = {1}: both comparisons with (0,2,0) hold
    f = standard_family(3, 2).replace(2, (1, 1, 0), {2}).replace(2, (0, 1, 1), {1})
    assert not list(map_violations(3, 2, 2, f.table[1]))


def test_incomplete_assignment_is_distinct_error():
    mapping = {(i, p): set(range(1, p[i - 1] + 1)) for i in (1, 2, 3) for p in enumerate_points(3, 2)}
    del mapping[(2, (1, 1, 0))]
    with pytest.raises(IncompleteFamily):
        IsotoneFamily.from_mapping(3, 2, mapping)


def test_two_color_support_edges_are_always_ls():
    rng = random.Random(1)
    for _ in range(20):
        f = random_family(3, 3, rng)
        for c in enumerate_points(3, 4):
            if len(support(c)) == 2:
                assert all(is_ls_edge(f, e) for e in down_edges(c))


def test_example_family_qs_edges(ex_family):
    assert not is_ls_edge(ex_family, edge((1, 2, 1), 2, 3))
    assert sorted((e.apex, e.i, e.j) for e in qs_edges(ex_family)) == [
        ((1, 1, 2), 1, 2),
        ((1, 2, 1), 2, 3),
        ((2, 1, 1), 1, 3),
    ]
    for c in enumerate_points(3, 4):
        if min(c) > 0:
            assert len(ls_edges(ex_family, c)) == 2


def test_validity_examples(ex_family, bad_family):
    assert is_valid_polarization(ex_family)
    assert not is_valid_polarization(bad_family)
    assert polarization_witness(bad_family) == (1, 1, 1)


def test_validity_rejects_malformed_family():
    f = standard_family(3, 2).replace(1, (2, 0, 0), {1})
    with pytest.raises(FamilyError):
        is_valid_polarization(f)


def test_every_two_color_family_is_valid():
    for n in (1, 2, 3, 4):
        assert all(is_valid_polarization(f) for f in enumerate_families(2, n))


def test_at_most_one_qs_edge_matches_validity():
    for f in enumerate_families(3, 2):
        assert at_most_one_qs_edge(f) == is_valid_polarization(f)
    rng = random.Random(7)
    maps = [list(enumerate_isotone_maps(3, 3, i)) for i in (1, 2, 3)]
    for _ in range(500):
        f = random_family(3, 3, rng, maps)
        assert at_most_one_qs_edge(f) == is_valid_polarization(f)


def test_restricted_ls_edges_span(ex_family):
    for f in [ex_family, *enumerate_families(4, 2, valid_only=True)][:60]:
        for c in enumerate_points(f.m, f.n + 1):
            supp = support(c)
            for k in range(2, len(supp) + 1):
                for R in combinations(supp, k):
                    assert r_ls_spans(f, c, R)


def test_ls_path_examples(ex_family):
    assert ls_path(ex_family, (1, 1, 1), (1, 1, 1)) == [(1, 1, 1)]
    a, b = (2, 1, 0), (2, 0, 1)
    path = ls_path(ex_family, a, b)
    assert path is not None and is_ls_path(ex_family, path)
    assert all(sum(join(u, v)) == 4 for u, v in zip(path, path[1:]))
    path = ls_path(ex_family, (3, 0, 0), (0, 3, 0))
    assert path[0] == (3, 0, 0) and path[-1] == (0, 3, 0)
    assert is_ls_path(ex_family, path)
    assert all(u[2] == 0 for u in path)  # stays below (3,3,0)


def test_ls_path_at_distance_one_stays_in_one_down_graph(ex_family):
    pts = ex_family.points
    for a in pts:
        for b in pts:
            if distance(a, b) == 1:
                path = ls_path(ex_family, a, b)
                apex = join(a, b)
                assert all(all(x <= y for x, y in zip(u, apex)) for u in path)


def test_qs_pattern_empty_gives_standard_map():
    row = family_from_qs_pattern(2, [])
    expected = tuple(frozenset(range(1, p[0] + 1)) for p in enumerate_points(3, 2))
    assert row == expected


@pytest.mark.parametrize("n", [2, 3])
def test_qs_patterns_give_pairwise_distinct_orbits(n):
    interior = [c for c in enumerate_points(3, n + 1) if min(c) >= 1]
    reps = set()
    for k in range(len(interior) + 1):
        for q in combinations(interior, k):
            row = family_from_qs_pattern(n, q)
            assert not list(map_violations(3, n, 1, row))
            assert qs_pattern_of_map(n, row) == frozenset(q)
            reps.add(canonical_map(row, n))
    assert len(reps) == 2 ** (n * (n - 1) // 2)


def test_qs_pattern_rejects_boundary_points():
    with pytest.raises(ValueError):
        family_from_qs_pattern(2, [(3, 0, 0)])


def test_canonical_form_examples():
    f = standard_family(3, 2)
    cf = canonical_form(f)
    assert canonical_form(cf) == cf
    assert canonical_form(standard_family(2, 2)) == canonical_form(b_family(2, 2))
    assert canonical_form(standard_family(3, 2)) != canonical_form(b_family(3, 2))
    assert is_isomorphic(standard_family(2, 2), b_family(2, 2))


def test_canonical_form_invariant_under_group(ex_family):
    rng = random.Random(3)
    base = canonical_form(ex_family)
    for sigma in permutations((1, 2, 3)):
        g = permute_colors(ex_family, sigma)
        assert is_valid_polarization(g)
        perms = [list(range(1, 4)) for _ in range(3)]
        for p in perms:
            rng.shuffle(p)
        g = IsotoneFamily.from_maps(3, 3, [[{p[j - 1] for j in s} for s in row] for row, p in zip(g.table, perms)])
        assert canonical_form(g) == base


def test_canonical_form_budget():
    with pytest.raises(BudgetExceeded):
        canonical_form(standard_family(4, 4), budget=1000)


def test_enumeration_counts():
    from polarix.polarization import generators_from_family, is_polarization_oracle

    assert sum(1 for _ in enumerate_families(3, 2)) == 64
    valid = list(enumerate_families(3, 2, valid_only=True))
    oracle = [f for f in enumerate_families(3, 2) if is_polarization_oracle(generators_from_family(f), 3, 2)]
    assert valid == oracle and len(valid) == 32
    assert sum(1 for _ in enumerate_families(3, 3, valid_only=True)) == 13824
