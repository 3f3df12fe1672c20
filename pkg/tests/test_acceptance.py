"""End-to-end acceptance suite.

Each test covers one numbered criterion, enforces its stated tolerance and
runtime budget, and records a single pass/fail line that is echoed in the
terminal summary.
"""

from __future__ import annotations

import time

import pytest

from integra import (
    INTEGRABLE,
    NOT_INTEGRABLE,
    all_subgroups,
    cocycle_from_extension,
    cyclic,
    decide,
    enlarge,
    groups_of_order,
    isomorphic,
    map_kernel,
    reduce_integral,
    shift_cocycle,
    symmetric,
    transfer_data,
    transfer_phi,
    twisted_product,
)
from integra import d as d_invariants
from integra import lemma_suite
from integra.cli import main as cli_main

from conftest import (
    ACCEPTANCE_LINES,
    fixture_path,
    load_fixture,
    naive_commutator_closure,
)
from test_enumeration import expected_counts


def record(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number:2d}: {status} - {detail}")
    assert ok, f"criterion {number}: {detail}"


def central_subgroups(h):
    """All subgroups of Z(h), returned as subgroup subsets of h itself."""
    z_table, z_embed = h.subgroup(h.center())
    out = []
    for s in all_subgroups(z_table):
        members = sorted(int(z_embed(m)) for m in s.members)
        out.append(h.subset(members, subgroup=True))
    return out


@pytest.fixture(scope="module")
def extension_sweep(fixture_names):
    """Every (fixture, central subgroup) cocycle, shared by criteria 6-8."""
    sweep = []
    for name in fixture_names:
        h = load_fixture(name)
        for z in central_subgroups(h):
            delta, _ = cocycle_from_extension(h, z)
            sweep.append((name, h, delta))
    return sweep


def test_criterion_01_bound_formula(capsys):
    t0 = time.perf_counter()
    values = {}
    for name in ("c2", "s3", "c3"):
        code = cli_main(["bound", str(fixture_path(name))])
        assert code == 0
        out = capsys.readouterr().out
        values[name] = int(out.split("=")[1].split("(")[0].strip())
    elapsed = time.perf_counter() - t0
    ok = values == {"c2": 16, "s3": 6, "c3": 324} and elapsed < 1.0
    record(1, ok, f"cmd_bound C2/S3/C3 -> {values['c2']}/{values['s3']}/{values['c3']} in {elapsed:.2f}s")


def test_criterion_02_decide_positive():
    t0 = time.perf_counter()
    out = decide(cyclic(2))
    elapsed = time.perf_counter() - t0
    derived = naive_commutator_closure(out.witness_group) if out.witness_group else set()
    ok = (
        out.verdict == INTEGRABLE
        and out.witness_order == 8
        and len(derived) == 2
        and out.searched_orders == (2, 4, 6)
        and elapsed < 10.0
    )
    record(2, ok, f"decide(C2) -> {out.verdict}, witness order {out.witness_order}, "
                  f"searched {list(out.searched_orders)} in {elapsed:.2f}s")


def test_criterion_03_decide_negative():
    t0 = time.perf_counter()
    out = decide(symmetric(3))
    elapsed = time.perf_counter() - t0
    ok = (
        out.verdict == NOT_INTEGRABLE
        and out.bound == 6
        and out.searched_orders == (6,)
        and elapsed < 1.0
    )
    record(3, ok, f"decide(S3) -> {out.verdict}, bound {out.bound}, "
                  f"searched {list(out.searched_orders)} in {elapsed:.2f}s")


def test_criterion_04_reduction_flattens_the_tower():
    sizes = {}
    ok = True
    for name, n in (("m16", 4), ("m32", 5), ("m64", 6)):
        h = load_fixture(name)
        # stated fixture properties: order 2^n with cyclic center of order 2^(n-2)
        z_table, _ = h.subgroup(h.center())
        ok &= h.n == 2**n and z_table.n == 2 ** (n - 2) and z_table.exponent() == z_table.n
        t0 = time.perf_counter()
        q, _ = reduce_integral(h)
        elapsed = time.perf_counter() - t0
        derived = naive_commutator_closure(q)
        d_table, _ = q.subgroup(q.subset(sorted(derived), subgroup=True))
        ok &= q.n <= 16 and isomorphic(d_table, cyclic(2)) is not None and elapsed < 5.0
        sizes[name] = q.n
    record(4, ok, f"reduce(M16/M32/M64) -> |Q| = {sizes['m16']}/{sizes['m32']}/{sizes['m64']}, "
                  f"derived C2 each time")


def test_criterion_05_lemma_clauses_hold_everywhere():
    t0 = time.perf_counter()
    checked = 0
    failures = []
    for n in range(1, 25):
        for entry in groups_of_order(n):
            rep = lemma_suite(entry.table)
            checked += 1
            for c in rep.clauses:
                if c.status == "skipped":
                    failures.append(f"order {n}: {c.clause} skipped")
                elif not c.passed:
                    failures.append(f"order {n}: {c.clause} {c.detail}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300.0
    record(5, ok, f"all 12 clauses pass on {checked} groups of order <= 24 in {elapsed:.1f}s"
                  + (f"; first failure: {failures[0]}" if failures else ""))


def test_criterion_06_cocycle_round_trip(extension_sweep):
    t0 = time.perf_counter()
    bad = None
    for name, h, delta in extension_sweep:
        tp = twisted_product(delta)
        if isomorphic(tp.group, h) is None:
            bad = f"{name} with kernel order {delta.kernel.n}"
            break
    elapsed = time.perf_counter() - t0
    ok = bad is None and elapsed < 60.0
    record(6, ok, f"{len(extension_sweep)} extensions rebuild their group in {elapsed:.1f}s"
                  + (f"; failed on {bad}" if bad else ""))


def test_criterion_07_transfer_identity(extension_sweep):
    bad = None
    for name, _, delta in extension_sweep:
        try:
            transfer_phi(delta)  # raises TransferFailed on any violated pair
        except Exception as exc:  # noqa: BLE001 - report the criterion verdict
            bad = f"{name}: {exc}"
            break
    record(7, bad is None, f"boundary of the transfer equals alpha*delta on all "
                           f"{len(extension_sweep)} extensions" + (f"; {bad}" if bad else ""))


def test_criterion_08_omega_containment(extension_sweep):
    bad = None
    for name, _, delta in extension_sweep:
        grown = enlarge(delta.kernel_type, delta.alpha)
        mapped = map_kernel(delta, grown.iota, grown.x_type)
        data = transfer_data(delta, grown)
        shifted = shift_cocycle(mapped, data.psi)
        x = grown.x_type.source
        alpha = shifted.alpha
        for v in set(int(v) for v in shifted.values.ravel()):
            if alpha % x.element_order(v) != 0:
                bad = f"{name}: value of order {x.element_order(v)} vs alpha {alpha}"
                break
        if bad:
            break
    record(8, bad is None, "every shifted cocycle value has order dividing alpha"
                           + (f"; {bad}" if bad else ""))


def test_criterion_09_enumeration_counts(brute_force_cache):
    t0 = time.perf_counter()
    census = expected_counts()
    counts = {n: len(groups_of_order(n)) for n in range(1, 17)}
    mismatches = [n for n in range(1, 17) if counts[n] != census[n]]
    # orders up to 8 are additionally checked against the in-repo brute force
    for n in range(1, 9):
        if len(brute_force_cache(n)) != counts[n]:
            mismatches.append(n)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 600.0
    record(9, ok, f"counts 1..16 = {[counts[n] for n in range(1, 17)]} match census and "
                  f"brute force in {elapsed:.1f}s")


def test_criterion_10_size_inequality_chain():
    t0 = time.perf_counter()
    checked = 0
    bad = None
    for n in range(1, 33):
        for entry in groups_of_order(n):
            h = entry.table
            if len(h.commutator_subgroup()) == 1:
                continue
            q, _ = reduce_integral(h)
            z_table, _ = h.subgroup(h.center())
            limit = (h.n // z_table.n) ** (d_invariants(z_table) + 1)
            checked += 1
            if q.n > limit:
                bad = f"order {n}: |Q| = {q.n} > {limit}"
                break
        if bad:
            break
    elapsed = time.perf_counter() - t0
    record(10, bad is None, f"|Q| <= |H/Z|^(d+1) on {checked} reductions of groups "
                            f"<= 32 in {elapsed:.1f}s" + (f"; {bad}" if bad else ""))
