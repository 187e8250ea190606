"""Polarizations of powers of the graded maximal ideal (x_1, ..., x_m)^n.

Construct, validate, classify and dualize squarefree ideals obtained by
polarizing (x_1, ..., x_m)^n, with brute-force cross checks (Hilbert series,
minimal transversals, GF(2) homology, shelling search).
"""

from .lattice import Simplex, enumerate_points, geq_i, down_graph, up_graphs, distance, join
from .isotone import (
    IsotoneFamily,
    FamilyError,
    IncompleteFamily,
    validate_family,
    is_ls_edge,
    is_valid_polarization,
    ls_path,
    family_from_qs_pattern,
    canonical_form,
)
from .monomials import Monomial, MonomialIdeal, var
from .polarization import (
    standard_family,
    b_family,
    generators_from_family,
    family_from_ideal,
    collapse,
    hilbert_numerator,
    is_polarization_oracle,
)
from .alexander import (
    alexander_dual_oracle,
    alexander_dual_from_family,
    rainbow_linear_resolution,
)
from .simplicial import SimplicialComplex, complex_from_ideal, reduced_homology_gf2
from .degree_two import DirectedLabeledTree, I_of_tree, J_of_tree, enumerate_trees

__version__ = "0.1.0"
