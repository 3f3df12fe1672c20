from __future__ import annotations

import pytest

from integra import (
    GroupError,
    abelian_group,
    alternating,
    cyclic,
    dihedral,
    isomorphic,
    klein_four,
    modular_two_group,
    quaternion,
    symmetric,
)


@pytest.mark.parametrize("n", [1, 2, 3, 8, 17, 32])
def test_cyclic(n):
    g = cyclic(n)
    assert g.n == n
    assert g.is_abelian()
    assert g.exponent() == n
    if n > 1:
        assert g.element_order(1) == n


def test_cyclic_rejects_nonpositive():
    with pytest.raises(GroupError):
        cyclic(0)


def test_abelian_group_factors():
    g = abelian_group([2, 4])
    assert g.n == 8
    assert g.is_abelian()
    assert g.exponent() == 4
    assert abelian_group([]).n == 1


def test_klein_four():
    v4 = klein_four()
    assert v4.n == 4 and v4.exponent() == 2
    assert isomorphic(v4, abelian_group([2, 2])) is not None


@pytest.mark.parametrize("n,center", [(3, 1), (4, 2), (5, 1), (6, 2), (12, 2)])
def test_dihedral(n, center):
    g = dihedral(n)
    assert g.n == 2 * n
    assert not g.is_abelian()
    assert len(g.center()) == center
    # half the elements are reflections of order 2, plus rotations
    assert sorted(g.orders().tolist()).count(2) >= n


def test_dihedral_derived_subgroup():
    # index-4 derived subgroup for even n, index-2 for odd n
    assert len(dihedral(4).commutator_subgroup()) == 2
    assert len(dihedral(5).commutator_subgroup()) == 5


def test_quaternion():
    q8 = quaternion()
    assert q8.n == 8
    assert sorted(q8.orders().tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert len(q8.center()) == 2
    # -1 is the unique element of order 2
    assert isomorphic(q8, dihedral(4)) is None


@pytest.mark.parametrize("e", [4, 5, 6])
def test_modular_two_group(e):
    g = modular_two_group(e)
    assert g.n == 2**e
    assert not g.is_abelian()
    assert len(g.commutator_subgroup()) == 2
    z, _ = g.subgroup(g.center())
    assert z.n == 2 ** (e - 2)
    assert z.exponent() == z.n  # cyclic center
    assert g.exponent() == 2 ** (e - 1)


def test_modular_two_group_rejects_small_exponent():
    with pytest.raises(GroupError):
        modular_two_group(2)


def test_symmetric_and_alternating():
    assert symmetric(3).n == 6
    assert symmetric(4).n == 24
    assert alternating(4).n == 12
    assert alternating(5).n == 60
    assert len(alternating(4).commutator_subgroup()) == 4
    # A5 is perfect
    assert len(alternating(5).commutator_subgroup()) == 60
    assert symmetric(1).n == 1


def test_symmetric_degree_cap():
    with pytest.raises(GroupError):
        symmetric(6)
    with pytest.raises(GroupError):
        alternating(6)
