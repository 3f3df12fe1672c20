"""Central extensions, 2-cocycles, transfer maps, and the kernel-shrinking
reduction of a group with a prescribed derived subgroup.

`reduce_integral` is the pipeline this module exists for.  Given H, write
its central extension by Z = Z(H) as a normalized 2-cocycle delta on
Q = H/Z.  Enlarging the kernel to X (each invariant factor multiplied by
alpha = |Q|) makes every element of the embedded kernel an alpha-th power,
so the transfer map Phi(h) = sum_k delta(h, k), which satisfies
alpha*delta = dPhi exactly, admits a root-based shift Psi with
alpha*(delta' + dPsi) = 0.  All values of the shifted cocycle then lie in
the subgroup Omega_alpha(X) of elements killed by alpha, and the twisted
product of Q by that subgroup is a group with the same derived subgroup as
H but order at most |H/Z|^(d(Z)+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .abelian import (
    AbelianType,
    Enlargement,
    alpha_root,
    decompose,
    describe,
    enlarge,
    omega,
)
from .group import GroupError, GroupTable, Hom, Subset, trivial_group

__all__ = [
    "CocycleInvalid",
    "NotCentral",
    "NotNormalizedShift",
    "TransferFailed",
    "ValueEscapedOmega",
    "CentralCocycle",
    "TransferData",
    "TwistedProduct",
    "ReduceReport",
    "cocycle_from_extension",
    "twisted_product",
    "transfer_phi",
    "transfer_data",
    "shift_cocycle",
    "map_kernel",
    "reduce_integral",
]


class CocycleInvalid(GroupError):
    """Values violate normalization or the 2-cocycle identity."""


class NotCentral(GroupError):
    """The chosen kernel is not a central subgroup."""


class NotNormalizedShift(GroupError):
    """A cocycle shift must vanish on the identity."""


class TransferFailed(GroupError):
    """The transfer identity alpha*delta = dPhi failed (internal invariant)."""


class ValueEscapedOmega(GroupError):
    """A shifted cocycle value fell outside Omega_alpha(X) (internal invariant)."""


@dataclass(frozen=True)
class CentralCocycle:
    """A normalized 2-cocycle on `quotient` with values in the abelian `kernel`.

    `values[q1, q2]` is a kernel element index; `alpha` is the quotient
    order, the exponent that the transfer construction works against.
    """

    quotient: GroupTable
    kernel: GroupTable
    kernel_type: AbelianType
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        self.validate()

    @property
    def alpha(self) -> int:
        return self.quotient.n

    def validate(self) -> None:
        q, a, vals = self.quotient, self.kernel, self.values
        if not a.is_abelian():
            raise CocycleInvalid("cocycle kernel must be abelian")
        if self.kernel_type.source is not a:
            raise CocycleInvalid("kernel_type does not describe the kernel table")
        if vals.shape != (q.n, q.n):
            raise CocycleInvalid(f"values shape {vals.shape}, expected {(q.n, q.n)}")
        if vals.min() < 0 or vals.max() >= a.n:
            raise CocycleInvalid("cocycle values outside the kernel")
        if vals[0].any() or vals[:, 0].any():
            where = np.argwhere(vals[0] != 0)
            cell = (0, int(where[0][0])) if where.size else (int(np.argwhere(vals[:, 0] != 0)[0][0]), 0)
            raise CocycleInvalid(f"not normalized: value at {cell} is nonzero")
        # cocycle identity: d(q1,q2) + d(q1q2,q3) == d(q2,q3) + d(q1,q2q3)
        lhs = a.mul[vals[:, :, None], vals[q.mul, :]]
        rhs = a.mul[vals[None, :, :], vals[:, q.mul]]
        if not np.array_equal(lhs, rhs):
            t = tuple(int(x) for x in np.argwhere(lhs != rhs)[0])
            raise CocycleInvalid(f"cocycle identity fails at triple {t}")


class TwistedProduct(NamedTuple):
    group: GroupTable
    kernel_embedding: Hom
    projection: Hom


def cocycle_from_extension(h: GroupTable, z: Subset) -> tuple[CentralCocycle, np.ndarray]:
    """Cocycle of the extension 1 -> Z -> H -> H/Z -> 1 via a least-index transversal.

    Returns the cocycle and the transversal array (quotient index -> H index).
    The section through the smallest element of each coset sends the identity
    coset to the identity, so the cocycle comes out normalized.
    """
    if z.parent is not h:
        raise NotCentral("kernel subset belongs to a different group")
    if not z.subgroup:
        raise NotCentral("kernel subset is not flagged as a subgroup")
    center = h.center().as_set()
    if not z.as_set() <= center:
        outsider = min(z.as_set() - center)
        raise NotCentral(f"element {outsider} of the kernel is not central")

    quo, proj = h.quotient(z)
    kernel, embed = h.subgroup(z)
    kernel_pos = np.full(h.n, -1, dtype=np.int64)
    kernel_pos[np.array(z.members, dtype=np.int64)] = np.arange(len(z.members))

    transversal = np.empty(quo.n, dtype=np.int64)
    for c in range(quo.n):
        transversal[c] = int(np.nonzero(proj.image == c)[0][0])

    s1 = transversal[:, None]
    s2 = transversal[None, :]
    prod = h.mul[s1, s2]
    rep = transversal[quo.mul]
    delta_h = h.mul[prod, h.inverse[rep]]
    values = kernel_pos[delta_h]
    if (values < 0).any():
        raise NotCentral("internal error: cocycle value escaped the kernel")

    cocycle = CentralCocycle(quo, kernel, decompose(kernel), values)
    return cocycle, transversal


def twisted_product(delta: CentralCocycle) -> TwistedProduct:
    """Group on kernel x quotient pairs with multiplication twisted by delta.

    (z1, q1) * (z2, q2) = (z1 + z2 + delta(q1, q2), q1 q2); the kernel embeds
    centrally as (z, identity) and projection onto the quotient is a Hom.
    """
    a, q = delta.kernel, delta.quotient
    qn = q.n
    z1 = np.arange(a.n)[:, None, None, None]
    h1 = np.arange(qn)[None, :, None, None]
    z2 = np.arange(a.n)[None, None, :, None]
    h2 = np.arange(qn)[None, None, None, :]
    zsum = a.mul[a.mul[z1, z2], delta.values[h1, h2]]
    hprod = q.mul[h1, h2]
    table = (zsum * qn + hprod).reshape(a.n * qn, a.n * qn)
    group = GroupTable(table)
    kernel_embedding = Hom(a, group, np.arange(a.n) * qn)
    projection = Hom(group, q, np.tile(np.arange(qn), a.n))
    return TwistedProduct(group, kernel_embedding, projection)


def _scalar_multiples(a: GroupTable, k: int) -> np.ndarray:
    """Array sending every kernel element x to k*x (k-fold sum)."""
    out = np.zeros(a.n, dtype=np.int64)
    idx = np.arange(a.n)
    for _ in range(k):
        out = a.mul[out, idx]
    return out


def transfer_phi(delta: CentralCocycle) -> np.ndarray:
    """Transfer map Phi(q) = sum_k delta(q, k), verified against alpha*delta = dPhi."""
    a, q = delta.kernel, delta.quotient
    phi = np.zeros(q.n, dtype=np.int64)
    for k in range(q.n):
        phi = a.mul[phi, delta.values[:, k]]

    alpha_delta = _scalar_multiples(a, delta.alpha)[delta.values]
    boundary = a.mul[a.mul[phi[:, None], phi[None, :]], a.inverse[phi[q.mul]]]
    if not np.array_equal(alpha_delta, boundary):
        q1, q2 = (int(x) for x in np.argwhere(alpha_delta != boundary)[0])
        raise TransferFailed(
            f"alpha*delta != dPhi at ({q1},{q2}): "
            f"{int(alpha_delta[q1, q2])} vs {int(boundary[q1, q2])}"
        )
    phi.setflags(write=False)
    return phi


@dataclass(frozen=True)
class TransferData:
    """The maps behind the kernel-enlargement step.

    `phi` maps the quotient into the original kernel with dPhi = alpha*delta;
    `roots` maps each kernel element z to an element of the enlarged group X
    with alpha*roots[z] = iota(z); `psi[q] = -roots[phi[q]]` is the shift
    whose coboundary pushes the enlarged cocycle into Omega_alpha(X).
    """

    phi: np.ndarray
    roots: np.ndarray
    psi: np.ndarray


def transfer_data(delta: CentralCocycle, grown: Enlargement) -> TransferData:
    """Build the transfer map and the root-based shift for an enlarged kernel."""
    x_type = grown.x_type
    x = x_type.source
    alpha = delta.alpha
    phi = transfer_phi(delta)
    roots = np.array(
        [
            alpha_root(x_type, int(grown.iota.image[z]), alpha)
            for z in range(delta.kernel.n)
        ],
        dtype=np.int64,
    )
    psi = x.inverse[roots[phi]]
    for arr in (phi, roots, psi):
        arr.setflags(write=False)
    return TransferData(phi=phi, roots=roots, psi=psi)


def shift_cocycle(delta: CentralCocycle, psi: np.ndarray) -> CentralCocycle:
    """Add the coboundary of psi: new(q1,q2) = old(q1,q2) + psi(q1) + psi(q2) - psi(q1 q2)."""
    psi = np.asarray(psi, dtype=np.int64)
    a, q = delta.kernel, delta.quotient
    if psi.shape != (q.n,):
        raise NotNormalizedShift(f"psi has shape {psi.shape}, expected ({q.n},)")
    if psi[0] != 0:
        raise NotNormalizedShift("psi must vanish on the identity")
    shifted = a.mul[
        a.mul[a.mul[delta.values, psi[:, None]], psi[None, :]],
        a.inverse[psi[q.mul]],
    ]
    return CentralCocycle(q, a, delta.kernel_type, shifted)


def map_kernel(delta: CentralCocycle, iota: Hom, target_type: AbelianType) -> CentralCocycle:
    """Push the cocycle values through an injective kernel embedding."""
    if iota.domain is not delta.kernel:
        raise GroupError("kernel map domain mismatch")
    if not iota.is_injective():
        raise GroupError("kernel map must be injective")
    return CentralCocycle(delta.quotient, iota.codomain, target_type, iota.image[delta.values])


@dataclass(frozen=True)
class ReduceReport:
    """What `reduce_integral` did: sizes, factors, and the bound check."""

    input_order: int
    center_order: int
    alpha: int
    center_factors: tuple[int, ...]
    enlarged_factors: tuple[int, ...]
    omega_order: int
    output_order: int
    input_derived: str
    output_derived: str
    bound_value: int
    bound_ok: bool

    def to_dict(self) -> dict:
        return {
            "input_order": self.input_order,
            "center_order": self.center_order,
            "alpha": self.alpha,
            "center_factors": list(self.center_factors),
            "enlarged_factors": list(self.enlarged_factors),
            "omega_order": self.omega_order,
            "output_order": self.output_order,
            "input_derived": self.input_derived,
            "output_derived": self.output_derived,
            "bound_value": self.bound_value,
            "bound_ok": self.bound_ok,
        }


def reduce_integral(h: GroupTable) -> tuple[GroupTable, ReduceReport]:
    """Shrink h to a group Q with the same derived subgroup and bounded order.

    The contract: the derived subgroup of Q is isomorphic to the derived
    subgroup of h, and |Q| = |H/Z| * |Omega_alpha(X)| <= |H/Z|^(d(Z)+1)
    where Z is the center of h.  Abelian input short-circuits to the trivial
    group (its derived subgroup is already trivial).
    """
    derived_in, _ = h.subgroup(h.commutator_subgroup())

    if h.is_abelian():
        q = trivial_group()
        report = ReduceReport(
            input_order=h.n,
            center_order=h.n,
            alpha=1,
            center_factors=decompose(h).factors,
            enlarged_factors=(),
            omega_order=1,
            output_order=1,
            input_derived=describe(derived_in),
            output_derived="1",
            bound_value=1,
            bound_ok=True,
        )
        return q, report

    z = h.center()
    delta, _ = cocycle_from_extension(h, z)
    alpha = delta.alpha
    z_type = delta.kernel_type

    grown = enlarge(z_type, alpha)
    x_type = grown.x_type
    x = x_type.source

    delta_x = map_kernel(delta, grown.iota, x_type)
    transfer = transfer_data(delta, grown)
    shifted = shift_cocycle(delta_x, transfer.psi)

    omega_sub = omega(x, alpha)
    allowed = np.zeros(x.n, dtype=bool)
    allowed[np.array(omega_sub.members, dtype=np.int64)] = True
    if not allowed[shifted.values].all():
        q1, q2 = (int(v) for v in np.argwhere(~allowed[shifted.values])[0])
        raise ValueEscapedOmega(
            f"shifted cocycle value at ({q1},{q2}) has order not dividing {alpha}"
        )

    w, _ = x.subgroup(omega_sub)
    w_pos = np.full(x.n, -1, dtype=np.int64)
    w_pos[np.array(omega_sub.members, dtype=np.int64)] = np.arange(len(omega_sub))
    small = CentralCocycle(delta.quotient, w, decompose(w), w_pos[shifted.values])

    q_group, _, _ = twisted_product(small)
    derived_out, _ = q_group.subgroup(q_group.commutator_subgroup())

    d_z = z_type.k
    bound_value = delta.quotient.n ** (d_z + 1)
    report = ReduceReport(
        input_order=h.n,
        center_order=len(z),
        alpha=alpha,
        center_factors=z_type.factors,
        enlarged_factors=x_type.factors,
        omega_order=len(omega_sub),
        output_order=q_group.n,
        input_derived=describe(derived_in),
        output_derived=describe(derived_out),
        bound_value=bound_value,
        bound_ok=q_group.n <= bound_value,
    )
    return q_group, report
