"""Structure theory for finite abelian groups.

The central computation is `decompose`, which finds the invariant-factor
decomposition m_1 | m_2 | ... | m_k by repeatedly splitting off a cyclic
subgroup of maximal order: pick g of maximal order, decompose the quotient
by <g> recursively, and correct each lifted quotient generator so its order
matches its image (always possible because the order of g equals the group
exponent).  The result carries an explicit isomorphism onto the canonical
direct-sum table, which gives every element coordinates; `enlarge` and
`alpha_root` work in those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .group import GroupError, GroupTable, Hom, Subset, identity_hom
from .named import abelian_group

__all__ = [
    "NotAbelian",
    "NotInImage",
    "AbelianType",
    "Enlargement",
    "decompose",
    "d",
    "omega",
    "enlarge",
    "alpha_root",
    "describe",
]


class NotAbelian(GroupError):
    """An abelian-only operation was called on a non-abelian group."""


class NotInImage(GroupError):
    """No canonical root exists: the element is outside alpha times the group."""


@dataclass(frozen=True)
class AbelianType:
    """Invariant factors of an abelian group plus an explicit isomorphism.

    `factors` is the chain m_1 | m_2 | ... | m_k with every m_i >= 2, and
    `iso` maps the source group onto the canonical direct-sum table in
    row-major coordinate encoding (last factor varies fastest).
    """

    factors: tuple[int, ...]
    iso: Hom

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise GroupError(f"factors {self.factors} violate the divisibility chain")
        if any(m < 2 for m in self.factors):
            raise GroupError(f"factors {self.factors} contain a trivial entry")
        if prod(self.factors) != self.iso.domain.n:
            raise GroupError("factor product does not match the group order")
        if not self.iso.is_bijective():
            raise GroupError("structure isomorphism is not bijective")

    @property
    def source(self) -> GroupTable:
        return self.iso.domain

    @property
    def canonical(self) -> GroupTable:
        return self.iso.codomain

    @property
    def k(self) -> int:
        return len(self.factors)

    def coords(self, x: int) -> tuple[int, ...]:
        """Coordinates of a source element in the canonical decomposition."""
        idx = int(self.iso.image[x])
        out = []
        for m in reversed(self.factors):
            out.append(idx % m)
            idx //= m
        return tuple(reversed(out))

    def element(self, coords) -> int:
        """Source element with the given coordinates."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.k:
            raise GroupError(f"expected {self.k} coordinates, got {len(coords)}")
        idx = 0
        for c, m in zip(coords, self.factors):
            if not 0 <= c < m:
                raise GroupError(f"coordinate {c} outside 0..{m - 1}")
            idx = idx * m + c
        return int(self.iso.inverted().image[idx])


def _basis(a: GroupTable) -> list[tuple[int, int]]:
    """Generators of cyclic summands as (element, order), orders in a divisibility chain."""
    if a.n == 1:
        return []
    orders = a.orders()
    m = int(orders.max())
    g = int(np.nonzero(orders == m)[0][0])
    powers = [0]
    for _ in range(m - 1):
        powers.append(int(a.mul[powers[-1], g]))
    power_index = {p: e for e, p in enumerate(powers)}

    cyc = a.subset(powers, subgroup=True)
    quo, proj = a.quotient(cyc)
    out: list[tuple[int, int]] = []
    for q_elt, r in _basis(quo):
        h = int(np.nonzero(proj.image == q_elt)[0][0])
        rh = 0
        for _ in range(r):
            rh = int(a.mul[rh, h])
        s = power_index[rh]
        if s % r != 0:
            raise GroupError("internal error: maximal-order split failed")
        shift = powers[(-(s // r)) % m]
        h = int(a.mul[h, shift])
        out.append((h, r))
    out.append((g, m))
    return out


def decompose(a: GroupTable) -> AbelianType:
    """Invariant-factor decomposition of a finite abelian group."""
    if not a.is_abelian():
        raise NotAbelian(f"group of order {a.n} is not abelian")
    if "abelian_type" in a._cache:
        return a._cache["abelian_type"]

    basis = _basis(a)
    factors = tuple(r for _, r in basis)
    canonical = abelian_group(factors)
    image = np.full(a.n, -1, dtype=np.int64)
    for idx, coords in enumerate(product(*(range(r) for r in factors))):
        elt = 0
        for (gen, _), c in zip(basis, coords):
            for _ in range(c):
                elt = int(a.mul[elt, gen])
        if image[elt] != -1:
            raise GroupError("internal error: basis does not span the group")
        image[elt] = idx
    result = AbelianType(factors, Hom(a, canonical, image))
    a._cache["abelian_type"] = result
    return result


def d(a: GroupTable) -> int:
    """Number of invariant factors (minimal generator count for abelian groups)."""
    return decompose(a).k


def omega(a: GroupTable, m: int) -> Subset:
    """Subgroup of all x with x^m = identity."""
    if not a.is_abelian():
        raise NotAbelian("omega subgroup is only defined here for abelian groups")
    if m < 1:
        raise GroupError(f"omega exponent must be positive, got {m}")
    members = np.nonzero(m % np.array(a.orders()) == 0)[0]
    return a.subset((int(x) for x in members), subgroup=True)


@dataclass(frozen=True)
class Enlargement:
    """Result of `enlarge`: the bigger group X with alpha*X isomorphic to Z."""

    x_type: AbelianType
    iota: Hom  # embeds the original group into X, hitting exactly alpha*X


def enlarge(z: AbelianType, alpha: int) -> Enlargement:
    """Build X with invariant factors alpha*m_i and the embedding z -> alpha*X.

    The i-th canonical generator of Z maps to alpha times the i-th canonical
    generator of X, so the image of iota is exactly the subgroup alpha*X and
    the invariant-factor count is preserved.
    """
    if alpha < 1:
        raise GroupError(f"alpha must be positive, got {alpha}")
    factors = tuple(alpha * m for m in z.factors)
    x = abelian_group(factors)
    x_type = AbelianType(factors, identity_hom(x))

    image = np.empty(z.source.n, dtype=np.int64)
    for elt in range(z.source.n):
        coords = z.coords(elt)
        idx = 0
        for c, big in zip(coords, factors):
            idx = idx * big + alpha * c
        image[elt] = idx
    iota = Hom(z.source, x, image)
    return Enlargement(x_type, iota)


def alpha_root(x: AbelianType, z: int, alpha: int) -> int:
    """Canonical y with alpha*y = z, for z in alpha*X.

    In each coordinate the value alpha*c (with 0 <= c < m_i) lifts to c; a
    coordinate not divisible by alpha means z is outside alpha*X and raises
    NotInImage.  Requires every invariant factor of X to be a multiple of
    alpha, which holds for the groups produced by `enlarge`.
    """
    if alpha < 1:
        raise GroupError(f"alpha must be positive, got {alpha}")
    coords = x.coords(z)
    root = []
    for c, m in zip(coords, x.factors):
        if m % alpha != 0:
            raise NotInImage(f"factor {m} is not a multiple of alpha = {alpha}")
        if c % alpha != 0:
            raise NotInImage(f"coordinate {c} of element {z} is not divisible by {alpha}")
        root.append(c // alpha)
    return x.element(root)


def describe(g: GroupTable) -> str:
    """Short structural description: cyclic factors for abelian groups."""
    if g.n == 1:
        return "1"
    if g.is_abelian():
        return " x ".join(f"C{m}" for m in decompose(g).factors)
    return f"non-abelian of order {g.n}"
