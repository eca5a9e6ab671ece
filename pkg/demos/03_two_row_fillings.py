# Two-row P-tableaux and their diagram fillings.
#
# A P-tableau with at most two rows gives a top-justified diagram.  Filling
# every diagram in its crystal component column by column produces P-arrays
# whose weights add up to a single Schur polynomial.

from parray_crystal import PArray, poset_q
from parray_crystal.diagram import Diagram
from parray_crystal.parray import padded_weight
from parray_crystal.symfunc import format_combination, schur_expand, sym_from_weights
from parray_crystal.tworow import array_of, dfa, diagram_of, filling, residual_components

Q = poset_q()
T = PArray(Q, [["c", "a"], ["d", "b"]], 4)
print(diagram_of(T).render(4), "\n")

D = Diagram([(1, 1), (1, 2), (3, 1), (2, 2)])
L = filling(D, T)
print(D.render(4))
print("rules used per column:", L.rules)
print("array:", array_of(L), "\n")

arrays = dfa(T, 4)
f = sym_from_weights([padded_weight(A) for A in arrays], 4)
print(f"{len(arrays)} fillings, generating function {format_combination(schur_expand(f))}")

# what is left of the crystal does not always split into Schur pieces
for piece in residual_components(Q, T, 4):
    if not piece.schur_expandable:
        kind = "not symmetric" if not piece.symmetric else format_combination(piece.expansion)
        print(f"residual piece of {len(piece.vertices)} arrays: {kind}")
