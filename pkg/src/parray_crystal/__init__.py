"""Crystal operators on P-arrays of (3+1)-free posets and Schur expansions of their characters."""

from .crystal import all_components, character, component_of, flipped_set, is_highest_weight, lower, raise_
from .parray import PArray, enumerate_p_tableaux, enumerate_parrays, from_coloring, is_p_tableau, weight
from .poset import FinitePoset, build_poset, figure1_poset, incomparability_graph, poset_q
from .positivity import component_expansion, iota, qsym_refinement
from .symfunc import SymPoly, schur, schur_expand

__version__ = "0.1.0"

__all__ = [
    "FinitePoset", "PArray", "SymPoly",
    "all_components", "build_poset", "character", "component_expansion", "component_of",
    "enumerate_p_tableaux", "enumerate_parrays", "figure1_poset", "flipped_set", "from_coloring",
    "incomparability_graph", "iota", "is_highest_weight", "is_p_tableau", "lower", "poset_q",
    "qsym_refinement", "raise_", "schur", "schur_expand", "weight",
]
