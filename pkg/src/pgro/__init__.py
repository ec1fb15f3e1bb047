"""Groebner bases for the relations ideal of modular p-group algebras F_p[G]
under the length-lexicographic, reverse length-lexicographic and Jennings
word orderings."""

from .basis import (AlgebraContext, GrobnerBasis, NontipTree, build_context, evaluate_word,
                    grobner_basis, minimal_tips, nontip_action_matrices, nontips, nontips_jennings,
                    nontips_ll, nontips_rll, oracle_nontips, radical_layers, reduce)
from .groups import PGroup, Selection, close_group, frattini, minimal_generators
from .jennings import jennings_pc_generators, jennings_series, layer_polynomial
from .orderings import Ordering, OrderingSpec, render
from .pipeline import present, run

__version__ = "0.1.0"
