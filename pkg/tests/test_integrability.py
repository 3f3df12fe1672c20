from __future__ import annotations

import pytest

from integra import (
    GroupError,
    INCONCLUSIVE,
    INTEGRABLE,
    NOT_INTEGRABLE,
    DecisionOutcome,
    NotAnIntegral,
    abelian_group,
    alternating,
    bound,
    cyclic,
    decide,
    dihedral,
    groups_of_order,
    isomorphic,
    klein_four,
    lemma_suite,
    modular_two_group,
    quaternion,
    symmetric,
    trivial_group,
    verify_thm21,
)

from conftest import naive_commutator_closure


@pytest.mark.parametrize(
    "g,value",
    [
        (trivial_group(), 1),
        (cyclic(2), 16),
        (symmetric(3), 6),
        (cyclic(3), 324),
        (cyclic(4), 1024),  # (2 * 4^2)^2
    ],
)
def test_bound_values(g, value):
    assert bound(g) == value


def test_bound_is_exact_big_integer():
    # mu(C30) = 3 (one generator per prime factor), so the bound explodes
    assert bound(cyclic(30)) == (8 * 30**6) ** 2 == 34012224000000000000


def test_decide_trivial_group():
    out = decide(trivial_group())
    assert out.verdict == INTEGRABLE
    assert out.witness_order == 1


def test_decide_c2_finds_d4():
    out = decide(cyclic(2))
    assert out.verdict == INTEGRABLE
    assert out.bound == 16
    assert out.searched_orders == (2, 4, 6)
    assert out.witness_order == 8
    w = out.witness_group
    # independent re-verification of the witness
    derived = naive_commutator_closure(w)
    assert len(derived) == 2
    # the witness is the dihedral group, not the quaternion group
    assert isomorphic(w, dihedral(4)) is not None
    assert out.witness_hom.is_bijective()
    assert out.cap_applied is None


def test_decide_s3_refuted():
    out = decide(symmetric(3))
    assert out.verdict == NOT_INTEGRABLE
    assert out.bound == 6
    assert out.searched_orders == (6,)
    assert out.witness_group is None
    assert out.cap_applied is None


def test_decide_c3_finds_s3():
    out = decide(cyclic(3))
    assert out.verdict == INTEGRABLE
    assert out.witness_order == 6
    assert out.searched_orders == (3,)
    derived = naive_commutator_closure(out.witness_group)
    assert len(derived) == 3


def test_decide_with_cap_is_inconclusive():
    out = decide(cyclic(2), cap=6)
    assert out.verdict == INCONCLUSIVE
    assert out.cap_applied == 6
    assert out.cap_applied < out.bound
    assert out.searched_orders == (2, 4, 6)


def test_decide_hits_the_order_sixty_wall():
    out = decide(cyclic(30))
    assert out.verdict == INCONCLUSIVE
    assert out.searched_orders == (30,)
    assert out.cap_applied == 59
    assert "A5" in out.reason


def test_decide_past_sixty_with_the_fixture():
    out = decide(cyclic(30), include_a5=True)
    assert out.verdict == INCONCLUSIVE
    assert out.searched_orders == (30, 60)
    assert out.cap_applied == 63  # enumeration range exhausted, bound far away
    assert "bound" in out.reason


def test_decide_timings_cover_searched_orders():
    out = decide(symmetric(3))
    assert list(out.timings) == [6]
    assert all(seconds >= 0 for seconds in out.timings.values())


def test_decide_consults_orders_in_sequence():
    calls = []

    def provider(m):
        calls.append(m)
        return groups_of_order(m)

    out = decide(cyclic(2), provider=provider)
    assert calls == [2, 4, 6, 8]
    assert out.verdict == INTEGRABLE


def test_outcome_invariants_enforced():
    with pytest.raises(GroupError, match="witness"):
        DecisionOutcome(
            verdict=INTEGRABLE,
            bound=16,
            witness_group=None,
            witness_hom=None,
            searched_orders=(),
            cap_applied=None,
            reason=None,
            timings=(),
        )
    with pytest.raises(GroupError):
        DecisionOutcome(
            verdict=INCONCLUSIVE,
            bound=16,
            witness_group=None,
            witness_hom=None,
            searched_orders=(2,),
            cap_applied=20,  # must be below the bound
            reason=None,
            timings=(),
        )


# lemma clause checks


def test_lemma_suite_on_abelian_group():
    rep = lemma_suite(abelian_group([4, 2]))
    assert rep.ok
    assert rep.subject_order == 8
    assert all(c.status == "pass" for c in rep.clauses)


@pytest.mark.parametrize("make", [lambda: dihedral(4), quaternion, lambda: modular_two_group(5), lambda: symmetric(4), lambda: alternating(4)])
def test_lemma_suite_passes(make):
    rep = lemma_suite(make())
    assert rep.ok
    assert not any(c.status == "skipped" for c in rep.clauses)


def test_lemma_suite_clause_names():
    rep = lemma_suite(dihedral(4))
    names = [c.clause for c in rep.clauses]
    assert names[0] == "L3.1"
    assert names[1:] == [f"L3.2({k})" for k in ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"]]
    assert rep.clause("L3.2(iii)").passed


def test_lemma_suite_aut_cap_skips_visibly():
    rep = lemma_suite(modular_two_group(5), aut_cap=2)
    vi = rep.clause("L3.2(vi)")
    assert vi.status == "skipped"
    assert "cap" in vi.detail
    assert rep.ok  # skipped is not a failure
    assert not vi.passed


def test_lemma_suite_details_are_concrete():
    rep = lemma_suite(modular_two_group(5))
    xi = rep.clause("L3.2(xi)")
    assert xi.passed
    assert "k^2" in xi.detail  # exponent of the derived subgroup is 2 here


def test_verify_thm21_d4_over_c2():
    rep = verify_thm21(dihedral(4), cyclic(2))
    assert rep.ok
    assert [c.clause for c in rep.clauses] == ["T2.1(i)", "T2.1(ii)", "T2.1(iii)", "T2.1(iv)"]


def test_verify_thm21_m64_over_c2():
    # the checker reports facts about this particular integral; for M64 all
    # four conditions happen to hold
    rep = verify_thm21(modular_two_group(6), cyclic(2))
    assert rep.clause("T2.1(iii)").passed  # |H/Z| = 4 <= 1 * 2^2
    assert rep.clause("T2.1(iv)").passed  # d(Z(H)) = 1 <= d(C2) = 1
    assert rep.ok


def test_verify_thm21_trivial():
    rep = verify_thm21(trivial_group(), trivial_group())
    assert rep.ok


def test_verify_thm21_rejects_non_integral():
    with pytest.raises(NotAnIntegral):
        verify_thm21(cyclic(4), cyclic(2))
    with pytest.raises(NotAnIntegral):
        verify_thm21(symmetric(4), klein_four())  # derived subgroup is A4


def test_verify_thm21_failure_is_reported_not_raised():
    # a checker verdict of False must come back as a failed clause
    candidates = []
    for n in (8, 12, 16):
        for entry in groups_of_order(n):
            h = entry.table
            d_table, _ = h.subgroup(h.commutator_subgroup())
            if d_table.n == 2:
                rep = verify_thm21(h, cyclic(2))
                candidates.append(rep)
    assert candidates
    for rep in candidates:
        for c in rep.clauses:
            assert c.status in ("pass", "fail")
