"""Isomorphism testing and automorphism groups.

The cheap screen is a fingerprint of invariants; the real work is a
backtracking search over generator images.  When two groups agree on
every invariant the search is the only way to tell them apart."""

from integra import (
    aut_list,
    aut_order,
    cyclic,
    dihedral,
    direct_product,
    fingerprint,
    groups_of_order,
    isomorphic,
    klein_four,
    min_generators,
    mu,
    quaternion,
)

fp_c4, fp_v4 = fingerprint(cyclic(4)), fingerprint(klein_four())
print("C4 vs V4 first differing invariant:", fp_c4.first_difference(fp_v4))

w = isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6))
print("C2 x C3 ~ C6 via", w.image.tolist())

print("D4 vs Q8:", isomorphic(dihedral(4), quaternion()))

# Two order-16 groups that agree on every fingerprint field.
buckets = {}
for entry in groups_of_order(16):
    buckets.setdefault(entry.fingerprint, []).append(entry.table)
pair = next(tables for tables in buckets.values() if len(tables) > 1)
print("fingerprint collision at order 16; exhaustive search says:",
      isomorphic(pair[0], pair[1]))

# Automorphism groups.
print("|Aut(Q8)| =", aut_order(quaternion()))
print("|Aut(C2^3)| =", aut_order(direct_product(klein_four(), cyclic(2))), "(= |GL(3,2)|)")
for a in aut_list(cyclic(8)):
    print("  automorphism of C8:", a.image.tolist())

# Generator counts: the minimum, and the largest irredundant set.
for g, name in ((cyclic(6), "C6"), (quaternion(), "Q8"), (dihedral(4), "D4")):
    print(f"{name}: min_generators = {min_generators(g)}, mu = {mu(g)}")
