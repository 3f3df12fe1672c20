"""Building and inspecting finite groups.

A group lives in a GroupTable: a validated Cayley table over indices
0..n-1 with the identity at 0.  Construction always validates, so a
GroupTable in hand is a proof that the table really is a group.
"""

from integra import (
    GroupError,
    GroupTable,
    cyclic,
    dihedral,
    from_permutations,
    parse_group_text,
    symmetric,
)

# From an explicit table: the rotations of a triangle.
c3 = GroupTable([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
print("C3 orders:", c3.orders().tolist())

# From permutation generators in cycle notation.  Elements get labeled
# by their cycle form, which makes later output readable.
s4 = from_permutations(4, ["(1 2 3 4)", "(1 2)"])
print("S4 has", s4.n, "elements; center size", len(s4.center()))
print("a random-ish element:", s4.label(17), "of order", s4.element_order(17))

# From the text format used by the fixture files and the CLI.
d4 = parse_group_text("""
%perm 4
(1 2 3 4)
(1 3)
""")
print("D4 conjugacy class sizes:", sorted(len(c) for c in d4.conjugacy_classes()))

# Bad tables are rejected with a specific complaint.
try:
    GroupTable([[0, 1], [1, 1]])
except GroupError as exc:
    print("rejected:", exc)

# Subgroups, quotients, and the maps connecting them.
rotations = d4.generated_subgroup([1])
sub, embed = d4.subgroup(d4.centralizer(d4.whole()))
print("center of D4 extracted as its own group of order", sub.n)

quotient, projection = d4.quotient(d4.center())
print("D4 / Z(D4) has exponent", quotient.exponent(), "(the Klein four group)")

derived = symmetric(3).commutator_subgroup()
print("derived subgroup of S3:", [symmetric(3).label(x) for x in derived.members])

print("dihedral(6) is abelian?", dihedral(6).is_abelian())
print("cyclic(12) exponent:", cyclic(12).exponent())
