# A tour of the P-array crystal of the four-element poset Q.
#
# Q has c < a, d < a and d < b.  A P-array puts every element in some row so
# that each row is a chain; the crystal operators f_r / e_r move entries
# between rows r and r+1.

from parray_crystal import PArray, component_of, lower, poset_q, raise_
from parray_crystal.alignment import align
from parray_crystal.positivity import component_expansion
from parray_crystal.symfunc import format_combination

Q = poset_q()
top = PArray(Q, [["c", "a"], ["d", "b"]], 4)
print("start:", top)

# the r alignment of rows r, r+1 decides which entry moves
for r in (1, 2):
    print(f"alignment r={r}:")
    print(align(top, r).render())

A = lower(top, 2)
print("f_2 ->", A)
print("f_1 of that ->", lower(A, 1))
print("e_2 undoes f_2:", raise_(A, 2) == top)

C = component_of(top)
print(f"\nthe component has {len(C)} arrays and {len(C.edges)} edges")
print("highest-weight elements (all P-tableaux):")
for T in C.roots:
    print("   ", T)

print("character =", format_combination(component_expansion(C)))
