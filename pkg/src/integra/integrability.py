"""Deciding whether a finite group has an integral.

A group H is an integral of G when its derived subgroup is isomorphic to G.
`bound` computes the order limit below which an integral must exist if any
does; `decide` turns that into a terminating search over the enumeration
catalog; `lemma_suite` and `verify_thm21` evaluate, clause by clause, the
structural facts an integral is known to satisfy, reporting the violating
elements whenever a clause fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .abelian import d as abelian_d
from .group import GroupError, GroupTable, Hom, Subset
from .isomorphism import (
    AutListTooLarge,
    DEFAULT_AUT_CAP,
    aut_list,
    aut_order,
    isomorphic,
    min_generators,
    mu,
)
from .enumeration import (
    ENUMERATION_CAP,
    CatalogEntry,
    NonSolvableOrderUnsupported,
    groups_of_order,
)

__all__ = [
    "INTEGRABLE",
    "NOT_INTEGRABLE",
    "INCONCLUSIVE",
    "NotAnIntegral",
    "DecisionOutcome",
    "ClauseResult",
    "LemmaReport",
    "bound",
    "decide",
    "lemma_suite",
    "verify_thm21",
]

INTEGRABLE = "Integrable"
NOT_INTEGRABLE = "NotIntegrable"
INCONCLUSIVE = "Inconclusive"


class NotAnIntegral(GroupError):
    """The supposed integral's derived subgroup is not isomorphic to the target."""


def bound(g: GroupTable) -> int:
    """Order limit for the integral search: (|Aut G| * |Z(G)|^(2*mu(G)))^(d(Z(G))+1).

    If G has any integral at all, it has one of order at most this; exact
    integer arithmetic, no overflow.  The trivial group integrates itself,
    so its bound is 1.
    """
    if g.n == 1:
        return 1
    z_table, _ = g.subgroup(g.center())
    base = aut_order(g) * len(g.center()) ** (2 * mu(g))
    return base ** (abelian_d(z_table) + 1)


@dataclass(frozen=True, eq=False)
class DecisionOutcome:
    """Result of `decide`, with enough context to audit the verdict.

    searched_orders lists the orders scanned completely without finding a
    witness; a witness's own order is reported through the witness itself.
    """

    verdict: str
    bound: int
    witness_group: GroupTable | None
    witness_hom: Hom | None
    searched_orders: tuple[int, ...]
    cap_applied: int | None
    reason: str | None
    timings: dict[int, float]

    def __post_init__(self):
        if self.verdict not in (INTEGRABLE, NOT_INTEGRABLE, INCONCLUSIVE):
            raise GroupError(f"unknown verdict {self.verdict!r}")
        if self.verdict == INTEGRABLE and (
            self.witness_group is None or self.witness_hom is None
        ):
            raise GroupError("Integrable verdict requires a witness")
        if self.verdict != INTEGRABLE and self.witness_group is not None:
            raise GroupError("witness present on a non-Integrable verdict")
        if self.verdict == INCONCLUSIVE:
            if self.cap_applied is None or self.cap_applied >= self.bound:
                raise GroupError("Inconclusive requires an effective cap below the bound")
        elif self.cap_applied is not None:
            raise GroupError("cap_applied only applies to Inconclusive verdicts")

    @property
    def witness_order(self) -> int | None:
        return self.witness_group.n if self.witness_group is not None else None


def decide(
    g: GroupTable,
    cap: int | None = None,
    include_a5: bool = False,
    provider: Callable[[int], list[CatalogEntry]] | None = None,
) -> DecisionOutcome:
    """Search for an integral of g among all orders |g|, 2|g|, ... up to the bound.

    The scan stops early at `cap` or at the enumeration range limit, in which
    case the verdict is Inconclusive rather than NotIntegrable.  The witness,
    when one exists in range, is the first group in (order, catalog order)
    position whose derived subgroup is isomorphic to g.
    """
    if provider is None:
        def provider(m: int) -> list[CatalogEntry]:
            return groups_of_order(m, include_a5=include_a5)

    b = bound(g)
    limit = b if cap is None else min(b, cap)
    limit = min(limit, ENUMERATION_CAP)

    searched: list[int] = []
    timings: dict[int, float] = {}
    for m in range(g.n, limit + 1, g.n):
        start = time.perf_counter()
        try:
            entries = provider(m)
        except NonSolvableOrderUnsupported as exc:
            return DecisionOutcome(
                verdict=INCONCLUSIVE,
                bound=b,
                witness_group=None,
                witness_hom=None,
                searched_orders=tuple(searched),
                cap_applied=m - 1,
                reason=str(exc),
                timings=timings,
            )
        for entry in entries:
            derived = entry.table.commutator_subgroup()
            if len(derived) != g.n:
                continue
            derived_table, _ = entry.table.subgroup(derived)
            witness_hom = isomorphic(derived_table, g)
            if witness_hom is not None:
                timings[m] = time.perf_counter() - start
                return DecisionOutcome(
                    verdict=INTEGRABLE,
                    bound=b,
                    witness_group=entry.table,
                    witness_hom=witness_hom,
                    searched_orders=tuple(searched),
                    cap_applied=None,
                    reason=None,
                    timings=timings,
                )
        searched.append(m)
        timings[m] = time.perf_counter() - start

    if limit >= b:
        return DecisionOutcome(
            verdict=NOT_INTEGRABLE,
            bound=b,
            witness_group=None,
            witness_hom=None,
            searched_orders=tuple(searched),
            cap_applied=None,
            reason=None,
            timings=timings,
        )
    return DecisionOutcome(
        verdict=INCONCLUSIVE,
        bound=b,
        witness_group=None,
        witness_hom=None,
        searched_orders=tuple(searched),
        cap_applied=limit,
        reason=f"searched orders up to {limit}; the bound {b} is out of range",
        timings=timings,
    )


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    status: str  # pass | fail | skipped
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class LemmaReport:
    """Per-clause evaluation results for one subject group."""

    subject_order: int
    clauses: tuple[ClauseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause == name:
                return c
        raise KeyError(name)


def _commuting_violation(h: GroupTable, left: Subset, right: Subset) -> tuple[int, int] | None:
    la = np.array(left.members, dtype=np.int64)
    ra = np.array(right.members, dtype=np.int64)
    ok = h.mul[np.ix_(la, ra)] == h.mul[np.ix_(ra, la)].T
    if ok.all():
        return None
    i, j = np.argwhere(~ok)[0]
    return int(la[i]), int(ra[j])


def _fmt(h: GroupTable, members) -> str:
    members = list(members)
    labels = [h.label(x) for x in members[:4]]
    if len(members) > 4:
        labels.append(f"... {len(members)} elements in all")
    return "{" + ", ".join(labels) + "}"


def lemma_suite(h: GroupTable, aut_cap: int = DEFAULT_AUT_CAP) -> LemmaReport:
    """Evaluate the structural clauses every group satisfies around K = C_H([H,H]).

    Each clause is checked concretely on the table; failures carry the
    violating elements.  The clause-(vi) automorphism scan respects aut_cap
    and reports "skipped" (never a silent pass) when the list is too large.
    """
    results: list[ClauseResult] = []
    derived = h.commutator_subgroup()
    g_table, g_embed = h.subgroup(derived)
    k_subset = h.centralizer(derived)
    k_table, k_embed = h.subgroup(k_subset)

    zg_in_h = frozenset(int(g_embed.image[x]) for x in g_table.center().members)
    zg_subset = h.subset(sorted(zg_in_h), subgroup=True)
    zk_in_h = frozenset(int(k_embed.image[x]) for x in k_table.center().members)
    zh = h.center().as_set()
    k_set = k_subset.as_set()
    g_set = derived.as_set()

    def add(clause: str, status: str, detail: str) -> None:
        results.append(ClauseResult(clause, status, detail))

    # Clause L3.1: C = K cap [H,H] is normal, and the images of K and
    # [H,H] in H/C intersect trivially.
    c_members = sorted(k_set & g_set)
    c_subset = h.subset(c_members, subgroup=True)
    if not h.is_normal(c_subset):
        add("L3.1", "fail", f"K meet [H,H] = {_fmt(h, c_members)} is not normal in H")
    else:
        _, proj = h.quotient(c_subset)
        im_k = {int(proj.image[x]) for x in k_set}
        im_g = {int(proj.image[x]) for x in g_set}
        overlap = (im_k & im_g) - {0}
        if overlap:
            coset = next(iter(overlap))
            reps = [h.label(x) for x in k_set if int(proj.image[x]) == coset]
            add("L3.1", "fail", f"cosets of {reps} lie in both images modulo K meet [H,H]")
        else:
            add("L3.1", "pass", "images of K and [H,H] modulo their intersection meet trivially")

    # (i) [K, [H,H]] = 1
    violation = _commuting_violation(h, k_subset, derived)
    if violation is None:
        add("L3.2(i)", "pass", f"all {len(k_set)}x{len(g_set)} pairs commute")
    else:
        k, g = violation
        add("L3.2(i)", "fail", f"[{h.label(k)}, {h.label(g)}] != 1")

    # (ii) K cap [H,H] = Z([H,H])
    if k_set & g_set == zg_in_h:
        add("L3.2(ii)", "pass", f"K meet [H,H] = Z([H,H]) = {_fmt(h, sorted(zg_in_h))}")
    else:
        diff = sorted((k_set & g_set) ^ zg_in_h)
        add("L3.2(ii)", "fail", f"sets differ at {_fmt(h, diff)}")

    # (iii) [H/K, H/K] isomorphic to [H,H]/Z([H,H])
    if not h.is_normal(k_subset):
        add("L3.2(iii)", "fail", "K is not normal in H, H/K undefined")
    else:
        hk, _ = h.quotient(k_subset)
        hk_derived, _ = hk.subgroup(hk.commutator_subgroup())
        g_mod_z, _ = g_table.quotient(g_table.center())
        if isomorphic(hk_derived, g_mod_z) is not None:
            add(
                "L3.2(iii)",
                "pass",
                f"[H/K, H/K] isomorphic to [H,H]/Z([H,H]), both of order {g_mod_z.n}",
            )
        else:
            add(
                "L3.2(iii)",
                "fail",
                f"[H/K, H/K] (order {hk_derived.n}) not isomorphic to [H,H]/Z (order {g_mod_z.n})",
            )

    # (iv) K/Z and [H,H]/Z intersect trivially in H/Z, Z = Z([H,H])
    if not h.is_normal(zg_subset):
        add("L3.2(iv)", "fail", "Z([H,H]) is not normal in H")
    else:
        _, proj = h.quotient(zg_subset)
        im_k = {int(proj.image[x]) for x in k_set}
        im_g = {int(proj.image[x]) for x in g_set}
        overlap = (im_k & im_g) - {0}
        if overlap:
            coset = next(iter(overlap))
            reps = [h.label(x) for x in k_set if int(proj.image[x]) == coset]
            add("L3.2(iv)", "fail", f"nontrivial common coset with representatives {reps}")
        else:
            add("L3.2(iv)", "pass", "K/Z and [H,H]/Z meet trivially inside H/Z")

    # (v) K/Z embeds in H/[H,H]; finite witness: K cap [H,H] = Z([H,H])
    if k_set & g_set == zg_in_h:
        add("L3.2(v)", "pass", "K meet [H,H] = Z([H,H]), so K/Z -> H/[H,H] is injective")
    else:
        diff = sorted((k_set & g_set) ^ zg_in_h)
        add("L3.2(v)", "fail", f"injectivity witness fails: sets differ at {_fmt(h, diff)}")

    # (vi) Z([H,H]) characteristic in H, and Z([H,H]) <= Z(K)
    subset_ok = zg_in_h <= zk_in_h
    if not subset_ok:
        stray = sorted(zg_in_h - zk_in_h)
        add("L3.2(vi)", "fail", f"Z([H,H]) not inside Z(K): {_fmt(h, stray)} outside Z(K)")
    else:
        try:
            autos = aut_list(h, cap=aut_cap)
        except AutListTooLarge as exc:
            add(
                "L3.2(vi)",
                "skipped",
                f"Z([H,H]) <= Z(K) holds, but the automorphism scan was skipped: {exc}",
            )
        else:
            moved = None
            zg_arr = np.array(sorted(zg_in_h), dtype=np.int64)
            for theta in autos:
                if set(int(v) for v in theta.image[zg_arr]) != zg_in_h:
                    moved = theta.image
                    break
            if moved is None:
                add(
                    "L3.2(vi)",
                    "pass",
                    f"Z([H,H]) fixed by all {len(autos)} automorphisms and Z([H,H]) <= Z(K)",
                )
            else:
                image = sorted(int(v) for v in moved[zg_arr])
                add("L3.2(vi)", "fail", f"automorphism moves Z([H,H]) to {_fmt(h, image)}")

    # (vii) K normal in H and K/Z central in H/Z
    if not h.is_normal(k_subset):
        add("L3.2(vii)", "fail", "K is not normal in H")
    elif not h.is_normal(zg_subset):
        add("L3.2(vii)", "fail", "Z([H,H]) is not normal in H")
    else:
        hz, proj = h.quotient(zg_subset)
        central = hz.center().as_set()
        im_k = {int(proj.image[x]) for x in k_set}
        stray = im_k - central
        if stray:
            coset = next(iter(stray))
            reps = [h.label(x) for x in k_set if int(proj.image[x]) == coset]
            add("L3.2(vii)", "fail", f"coset of {reps} is not central in H/Z")
        else:
            add("L3.2(vii)", "pass", "K is normal and K/Z is central in H/Z")

    # (viii) [K, H] <= Z([H,H])
    ka = np.array(sorted(k_set), dtype=np.int64)
    ha = np.arange(h.n)
    comm = h.mul[
        h.mul[h.inverse[ka][:, None], h.inverse[ha][None, :]],
        h.mul[np.ix_(ka, ha)],
    ]
    in_zg = np.zeros(h.n, dtype=bool)
    in_zg[list(zg_in_h)] = True
    bad = np.argwhere(~in_zg[comm])
    if bad.size:
        i, j = bad[0]
        add(
            "L3.2(viii)",
            "fail",
            f"[{h.label(int(ka[i]))}, {h.label(int(ha[j]))}] = "
            f"{h.label(int(comm[i, j]))} is outside Z([H,H])",
        )
    else:
        add("L3.2(viii)", "pass", "every commutator [k, h] lands in Z([H,H])")

    # (ix) Z(H) <= Z(K)
    if zh <= zk_in_h:
        add("L3.2(ix)", "pass", f"Z(H) = {_fmt(h, sorted(zh))} <= Z(K)")
    else:
        stray = sorted(zh - zk_in_h)
        add("L3.2(ix)", "fail", f"{_fmt(h, stray)} central in H but not in K")

    # (x) K nilpotent of class at most 2: [[K,K],K] = 1
    k_derived = k_table.commutator_subgroup()
    violation = _commuting_violation(k_table, k_derived, k_table.whole())
    if violation is None:
        add("L3.2(x)", "pass", f"[K,K] (order {len(k_derived)}) is central in K")
    else:
        a, b = violation
        add(
            "L3.2(x)",
            "fail",
            f"[{k_table.label(a)}, {k_table.label(b)}] != 1 with {k_table.label(a)} in [K,K]",
        )

    # (xi) k^n in Z(H) for all k in K, n = exponent([H,H])
    n = g_table.exponent()
    stray = [k for k in sorted(k_set) if h.power(int(k), n) not in zh]
    if stray:
        k = stray[0]
        add(
            "L3.2(xi)",
            "fail",
            f"{h.label(k)}^{n} = {h.label(h.power(k, n))} is outside Z(H)",
        )
    else:
        add("L3.2(xi)", "pass", f"k^{n} lies in Z(H) for all {len(k_set)} elements of K")

    return LemmaReport(subject_order=h.n, clauses=tuple(results))


def verify_thm21(h: GroupTable, g: GroupTable) -> LemmaReport:
    """Check the four advertised properties of a well-behaved integral.

    The underlying theorem promises that SOME integral of g satisfies these;
    a particular h may fail (ii)-(iv) without contradicting anything, so this
    is a diagnostic, not a validity test.  Raises NotAnIntegral when h is not
    an integral of g at all.
    """
    derived_table, _ = h.subgroup(h.commutator_subgroup())
    if isomorphic(derived_table, g) is None:
        raise NotAnIntegral(
            f"derived subgroup of order {derived_table.n} is not isomorphic to the target"
        )

    results: list[ClauseResult] = []
    results.append(
        ClauseResult("T2.1(i)", "pass", f"H is finite of order {h.n}")
    )

    mu_g = mu(g) if g.n > 1 else 0
    gen_h = min_generators(h)
    status = "pass" if gen_h <= 2 * mu_g else "fail"
    results.append(
        ClauseResult("T2.1(ii)", status, f"min_generators(H) = {gen_h}, 2*mu(G) = {2 * mu_g}")
    )

    z_h = h.center()
    quotient_size = h.n // len(z_h)
    rhs = aut_order(g) * len(g.center()) ** (2 * mu_g)
    status = "pass" if quotient_size <= rhs else "fail"
    results.append(
        ClauseResult(
            "T2.1(iii)",
            status,
            f"|H/Z(H)| = {quotient_size}, |Aut(G)|*|Z(G)|^(2mu) = {rhs}",
        )
    )

    zh_table, _ = h.subgroup(z_h)
    zg_table, _ = g.subgroup(g.center())
    d_h = abelian_d(zh_table)
    d_g = abelian_d(zg_table)
    status = "pass" if d_h <= d_g else "fail"
    results.append(
        ClauseResult("T2.1(iv)", status, f"d(Z(H)) = {d_h}, d(Z(G)) = {d_g}")
    )

    return LemmaReport(subject_order=h.n, clauses=tuple(results))
