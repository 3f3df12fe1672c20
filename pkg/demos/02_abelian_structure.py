"""Invariant factors of abelian groups, and the two helpers the reduction
pipeline leans on: the subgroup Omega_m of elements killed by m, and the
enlargement that makes every element an alpha-th multiple."""

from integra import (
    abelian_group,
    alpha_root,
    cyclic,
    d,
    decompose,
    describe,
    direct_product,
    enlarge,
    omega,
)

# decompose() finds the invariant-factor form d1 | d2 | ... | dk.
g = direct_product(cyclic(6), cyclic(4))
t = decompose(g)
print(f"C6 x C4 is {describe(g)} with invariant factors {t.factors}")
print("minimal generator count d =", d(g))

# coords/element convert between a group element and its coordinates.
x = 17
print(f"element {x} has coordinates {t.coords(x)} in the canonical copy")
assert t.element(t.coords(x)) == x

# Omega_m collects everything of order dividing m.
a = abelian_group([4, 2])
for m in (1, 2, 4):
    print(f"Omega_{m}(C4 x C2) has {len(omega(a, m))} elements")

# enlarge() embeds an abelian group Z into X = sum of C_{alpha*m_i} so that
# every element of the image becomes divisible by alpha.  alpha_root finds
# the divisor.
z = decompose(cyclic(6))
alpha = 3
grown = enlarge(z, alpha)
print("C6 enlarged by 3 becomes", describe(grown.x_type.source))
for el in range(6):
    target = int(grown.iota.image[el])
    r = alpha_root(grown.x_type, target, alpha)
    print(f"  iota({el}) = {target} = {alpha} * {r}")
