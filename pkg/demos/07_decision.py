"""Deciding integrability: is a given G the derived subgroup of some H?

The search space is finite: if any integral exists, one exists of order
at most (|Aut G| * |Z(G)|^(2 mu(G)))^(d(Z(G))+1).  decide() walks the
multiples of |G| up to that bound (or the enumeration cap) and scans the
catalog of each order."""

from integra import (
    bound,
    cyclic,
    decide,
    klein_four,
    lemma_suite,
    symmetric,
    verify_thm21,
)

for g, name in ((cyclic(2), "C2"), (symmetric(3), "S3"), (cyclic(3), "C3"),
                (klein_four(), "V4")):
    print(f"bound({name}) = {bound(g)}")

print()
out = decide(cyclic(2))
print(f"decide(C2): {out.verdict}; searched {list(out.searched_orders)}, "
      f"witness of order {out.witness_order}")

out = decide(symmetric(3))
print(f"decide(S3): {out.verdict} - no group of order 6 has derived subgroup S3")

# A huge bound forces an honest Inconclusive once the enumeration cap bites.
out = decide(cyclic(30))
print(f"decide(C30): {out.verdict} ({out.reason})")

# Every integral H satisfies a battery of structural facts about
# K = centralizer of the derived subgroup; lemma_suite checks them all.
report = lemma_suite(symmetric(4))
print(f"\nlemma clauses on S4: {sum(c.passed for c in report.clauses)}"
      f"/{len(report.clauses)} pass")

# And a found witness can be checked against the generation/size properties
# that some integral is guaranteed to satisfy.
w = decide(cyclic(2)).witness_group
t = verify_thm21(w, cyclic(2))
for clause in t.clauses:
    print(f"  {clause.clause}: {clause.status}  ({clause.detail})")
