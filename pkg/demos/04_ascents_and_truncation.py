# Two robustness checks on random posets.
#
# For a natural unit interval order the ascent statistic is constant on each
# component, which refines the character by powers of q.  Separately, adding
# a row (N -> N+1) leaves the Schur expansion of every component unchanged.

from collections import Counter

from parray_crystal import incomparability_graph
from parray_crystal.chromatic import chromatic_qsym
from parray_crystal.fastcrystal import fast_components
from parray_crystal.poset import figure1_poset, random_nuio
from parray_crystal.positivity import qsym_refinement
from parray_crystal.symfunc import format_combination, schur_expand

P = random_nuio(5, seed=7)
refined = qsym_refinement(P, 5)
print("q-graded character of a random unit interval order:")
for d, f in sorted(refined.terms.items()):
    print(f"  q^{d}: {format_combination(schur_expand(f))}")
print("equals the chromatic quasisymmetric function:", refined == chromatic_qsym(incomparability_graph(P), 5))

P = figure1_poset()
for N in (8, 9):
    comps = fast_components(P, N)
    print(f"\nN={N}: {sum(F.size for F in comps)} arrays in {len(comps)} components")
    tally = Counter(format_combination(F.expansion) for F in comps)
    for text, k in tally.most_common(4):
        print(f"  {k:>4} components with character {text}")
