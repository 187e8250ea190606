import random
import pytest

from polarix.alexander import alexander_dual_oracle, is_rainbow
from polarix.degree_two import (
    INDEX_MAP,
    DirectedLabeledTree,
    I_of_tree,
    J_of_tree,
    decorations,
    default_decoration,
    enumerate_trees,
    labelled_trees,
    prufer_to_edges,
    tree_canonical_form,
    tree_dot,
    tree_linear_quotients_order,
    vertex_monomial,
)
from polarix.errors import BudgetExceeded
from polarix.isotone import canonical_form
from polarix.monomials import Monomial
from polarix.polarization import b_family, family_from_ideal, generators_from_family, is_polarization_oracle, standard_family

# star: center 0 with arrows out to 1, 2, 3; path: 3 -> 2 -> 1 -> 0 with labels 3, 2, 1
STAR = DirectedLabeledTree(4, ((0, 1, 1), (0, 2, 2), (0, 3, 3)))
PATH = DirectedLabeledTree(4, ((1, 0, 1), (2, 1, 2), (3, 2, 3)))
# two leaves hanging off a vertex that a 2-edge tail points into
FORK = DirectedLabeledTree(5, ((0, 1, 1), (0, 2, 2), (3, 0, 3), (4, 3, 4)))


def quadrics(pairs):
    return {Monomial.from_vars([(a // 10, a % 10), (b // 10, b % 10)]) for a, b in pairs}


def test_star_gives_standard_polarization():
    J = J_of_tree(STAR)
    assert set(J.gens) == quadrics([(11, 12), (11, 21), (21, 22), (11, 31), (21, 31), (31, 32)])
    assert J == generators_from_family(standard_family(3, 2))


def test_path_gives_letterplace():
    J = J_of_tree(PATH)
    assert set(J.gens) == quadrics([(11, 12), (11, 22), (21, 22), (11, 32), (21, 32), (31, 32)])
    assert J == generators_from_family(b_family(3, 2))


def test_fork_tree_quadrics():
    expected = quadrics([(11, 12), (21, 22), (31, 32), (41, 42), (11, 21), (11, 32), (11, 42), (21, 32), (21, 42), (31, 42)])
    assert set(J_of_tree(FORK).gens) == expected


def test_index_map_is_recorded():
    assert INDEX_MAP == {0: 1, 1: 2}


def test_vertex_ideal_shape():
    for t in (STAR, PATH, FORK):
        I = I_of_tree(t)
        assert len(I) == t.vertices
        assert all(is_rainbow(g, t.m) for g in I)


def test_star_duality_both_ways():
    I, J = I_of_tree(STAR), J_of_tree(STAR)
    assert len(I) == 4 and len(J) == 6
    assert alexander_dual_oracle(J) == I
    assert alexander_dual_oracle(I) == J


def test_duality_and_polarization_for_all_decorations_m3():
    for edges in labelled_trees(4):
        for t in decorations(edges):
            J = J_of_tree(t)
            assert alexander_dual_oracle(J) == I_of_tree(t)
            assert is_polarization_oracle(J, 3, 2)


def test_duality_sampled_m5():
    rng = random.Random(5)
    trees = list(labelled_trees(6))
    for _ in range(60):
        edges = rng.choice(trees)
        labels = list(range(1, 6))
        rng.shuffle(labels)
        t = DirectedLabeledTree(6, tuple(((v, u) if rng.random() < 0.5 else (u, v)) + (lab,) for (u, v), lab in zip(edges, labels)))
        assert alexander_dual_oracle(J_of_tree(t)) == I_of_tree(t)


def test_isomorphism_class_follows_underlying_tree():
    rng = random.Random(11)
    for m in (3, 4):
        by_shape: dict = {}
        for edges in labelled_trees(m + 1):
            decs = list(decorations(edges))
            for t in [default_decoration(edges), *rng.sample(decs, 3)]:
                cf = canonical_form(family_from_ideal(J_of_tree(t), m, 2)).key()
                by_shape.setdefault(tree_canonical_form(edges), set()).add(cf)
        assert all(len(v) == 1 for v in by_shape.values())
        forms = [next(iter(v)) for v in by_shape.values()]
        assert len(set(forms)) == len(forms)


def test_enumeration_counts():
    for m in (1, 2, 3, 4, 5):
        assert len(enumerate_trees(m)) == (m + 1) ** (m - 1)
    assert [len(enumerate_trees(m, up_to_iso=True)) for m in (3, 4, 5)] == [2, 3, 6]
    with pytest.raises(BudgetExceeded):
        enumerate_trees(10)
    with pytest.raises(ValueError):
        enumerate_trees(0)


def test_prufer_decoding():
    assert prufer_to_edges((3, 3, 3, 4), 6) == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
    assert prufer_to_edges((), 2) == [(0, 1)]


def test_tree_canonical_form():
    assert tree_canonical_form([(0, 1), (1, 2), (2, 3)]) == tree_canonical_form([(2, 0), (0, 3), (3, 1)])
    assert tree_canonical_form([(0, 1), (0, 2), (0, 3)]) != tree_canonical_form([(0, 1), (1, 2), (2, 3)])


def test_tree_validation():
    with pytest.raises(ValueError):
        DirectedLabeledTree(4, ((0, 1, 1), (0, 2, 2)))
    with pytest.raises(ValueError):
        DirectedLabeledTree(4, ((0, 1, 1), (0, 2, 1), (0, 3, 3)))
    with pytest.raises(ValueError):
        DirectedLabeledTree(4, ((0, 1, 1), (1, 0, 2), (2, 3, 3)))


def test_root_order_starts_at_root():
    for t in (STAR, PATH, FORK):
        for root in range(t.vertices):
            assert tree_linear_quotients_order(t, root)[0] == vertex_monomial(t, root)
    with pytest.raises(ValueError):
        tree_linear_quotients_order(STAR, 9)


def test_dot_export():
    dot = tree_dot(PATH)
    assert dot.startswith("digraph") and 'v3 -> v2 [label="3"]' in dot
