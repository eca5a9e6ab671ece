# Why every component character is Schur-positive.
#
# The coefficient of s_lam is a signed count over arrays whose weight is a
# permutation of lam + delta - delta.  A sign-reversing involution cancels
# everything except the P-tableaux of weight lam.

from parray_crystal import PArray, component_of, poset_q
from parray_crystal.positivity import check_involution, iota, schur_coeff_signed, signed_classes
from parray_crystal.symfunc import partitions

Q = poset_q()
C = component_of(PArray(Q, [["c", "a"], ["d", "b"]], 4))

for lam in partitions(4, max_len=4):
    classes = signed_classes(C, lam)
    plus = sum(len(k.members) for k in classes if k.sign > 0)
    minus = sum(len(k.members) for k in classes if k.sign < 0)
    fixed, pairs = check_involution(C, lam)
    print(f"s{list(lam)}: +{plus} -{minus} = {schur_coeff_signed(C, lam)}"
          f"   ({pairs} cancelling pairs, fixed: {[str(T) for T in fixed]})")

# one cancelling pair, explicitly
lam = (2, 1, 1)
for k in signed_classes(C, lam):
    for A in k.members:
        B = iota(A, lam)
        if B != A:
            print(f"\niota pairs {A}  <->  {B}")
            break
    else:
        continue
    break
