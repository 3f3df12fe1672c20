"""Constructors for the standard named finite groups used throughout.

All constructors return validated GroupTable instances.  Where a compact
index formula exists (cyclic, dihedral, quaternion, modular 2-groups) the
table is built directly; symmetric and alternating groups are closed from
permutation generators.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .group import GroupError, GroupTable, direct_product, from_permutations, trivial_group

__all__ = [
    "cyclic",
    "abelian_group",
    "klein_four",
    "dihedral",
    "quaternion",
    "modular_two_group",
    "symmetric",
    "alternating",
]


def cyclic(n: int) -> GroupTable:
    """Cyclic group of order n with mul[i, j] = (i + j) mod n."""
    if n < 1:
        raise GroupError(f"cyclic order must be positive, got {n}")
    idx = np.arange(n)
    return GroupTable((idx[:, None] + idx[None, :]) % n)


def abelian_group(factors) -> GroupTable:
    """Direct sum of cyclic groups, one per factor, in row-major encoding."""
    factors = [int(m) for m in factors if int(m) != 1]
    if not factors:
        return trivial_group()
    if any(m < 1 for m in factors):
        raise GroupError(f"factors must be positive, got {factors}")
    return reduce(direct_product, (cyclic(m) for m in factors))


def klein_four() -> GroupTable:
    return abelian_group([2, 2])


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n: rotations r^i and reflections r^i s."""
    if n < 1:
        raise GroupError(f"dihedral parameter must be positive, got {n}")
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    labels = []
    for i in range(n):
        for j in range(2):
            labels.append(f"r{i}" if j == 0 else f"r{i}s")
    # index = 2*i + j encodes r^i s^j
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    j = (j1 + j2) % 2
                    table[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return GroupTable(table, labels)


def quaternion() -> GroupTable:
    """Quaternion group of order 8: a^4 = 1, b^2 = a^2, b a b^-1 = a^-1."""
    table = np.empty((8, 8), dtype=np.int64)
    labels = []
    for i in range(4):
        for j in range(2):
            labels.append(f"a{i}" if j == 0 else f"a{i}b")
    for i1 in range(4):
        for j1 in range(2):
            for i2 in range(4):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2) + (2 if j1 and j2 else 0)) % 4
                    j = (j1 + j2) % 2
                    table[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return GroupTable(table, labels)


def modular_two_group(exponent: int) -> GroupTable:
    """Order-2^exponent group with a^(2^(e-1)) = b^2 = 1, b a b^-1 = a^(1 + 2^(e-2)).

    Requires exponent >= 4 so the twist 1 + 2^(e-2) is nontrivial and squares
    to the identity; the resulting group has cyclic center of order 2^(e-2)
    and derived subgroup of order 2.
    """
    if exponent < 4:
        raise GroupError(f"modular 2-group needs exponent >= 4, got {exponent}")
    half = 1 << (exponent - 1)
    s = 1 + (1 << (exponent - 2))
    table = np.empty((2 * half, 2 * half), dtype=np.int64)
    labels = []
    for i in range(half):
        for j in range(2):
            labels.append(f"a{i}" if j == 0 else f"a{i}b")
    for i1 in range(half):
        for j1 in range(2):
            for i2 in range(half):
                for j2 in range(2):
                    i = (i1 + i2 * (s if j1 else 1)) % half
                    j = (j1 + j2) % 2
                    table[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return GroupTable(table, labels)


def symmetric(n: int) -> GroupTable:
    """Symmetric group on n points from the standard two generators."""
    if n < 1:
        raise GroupError(f"symmetric degree must be positive, got {n}")
    if n == 1:
        return trivial_group()
    if n > 5:
        raise GroupError("symmetric groups beyond degree 5 are out of scope here")
    full_cycle = "(" + " ".join(str(i) for i in range(1, n + 1)) + ")"
    return from_permutations(n, [full_cycle, "(1 2)"])


def alternating(n: int) -> GroupTable:
    """Alternating group on n points."""
    if n < 3:
        return trivial_group()
    if n > 5:
        raise GroupError("alternating groups beyond degree 5 are out of scope here")
    if n == 3:
        return from_permutations(3, ["(1 2 3)"])
    if n == 4:
        return from_permutations(4, ["(1 2 3)", "(1 2)(3 4)"])
    return from_permutations(5, ["(1 2 3 4 5)", "(1 2 3)"])
