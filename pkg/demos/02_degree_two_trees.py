"""Squarefree polarizations of (x_1, ..., x_m)^2 from decorated trees.

Run with ``python demos/02_degree_two_trees.py``.
"""

from polarix import I_of_tree, J_of_tree, alexander_dual_oracle, canonical_form, enumerate_trees
from polarix.degree_two import DirectedLabeledTree, tree_dot
from polarix.polarization import family_from_ideal, is_polarization

# %% A path on four vertices: one quadric per pair of vertices.
path = DirectedLabeledTree(4, ((1, 0, 1), (2, 1, 2), (3, 2, 3)))
J = J_of_tree(path)
print("J(path):", J)
print("is a polarization of (x,y,z)^2:", is_polarization(J))
print("dual of J(path) is I(path):", alexander_dual_oracle(J) == I_of_tree(path))

# %% One isomorphism class of families per unlabelled tree.
for m in (3, 4, 5):
    trees = enumerate_trees(m, up_to_iso=True)
    classes = {canonical_form(family_from_ideal(J_of_tree(t), m, 2)).key() for t in trees}
    print(f"m={m}: {len(trees)} unlabelled trees, {len(classes)} classes of families")

# %% Graphviz source for the path.
print()
print(tree_dot(path))
