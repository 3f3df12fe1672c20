"""The reduction pipeline: same derived subgroup, bounded size.

The modular 2-groups M_16, M_32, M_64, ... all have derived subgroup C2,
but their centers grow without bound, so as integrals of C2 they are
arbitrarily wasteful.  reduce_integral flattens each of them to a group
of order 16."""

from integra import describe, modular_two_group, reduce_integral

for e in (4, 5, 6):
    h = modular_two_group(e)
    q, report = reduce_integral(h)
    print(f"M_{2**e}: |H| = {h.n:3d}, |Z(H)| = {report.center_order:2d} "
          f"-> |Q| = {q.n}, derived {report.input_derived} -> {report.output_derived}")

# The output order is |H/Z| * |Omega_alpha(X)|, capped by |H/Z|^(d(Z)+1).
h = modular_two_group(6)
q, report = reduce_integral(h)
print()
print("M_64 in detail:")
for key, value in report.to_dict().items():
    print(f"  {key} = {value}")

# Abelian input short-circuits: its derived subgroup is already trivial.
from integra import abelian_group

q, report = reduce_integral(abelian_group([8, 4]))
print()
print("abelian input reduces to", describe(q))
