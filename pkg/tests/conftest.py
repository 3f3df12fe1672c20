from __future__ import annotations

from pathlib import Path

import pytest

from integra import GroupTable, load_group_file

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
DATA_DIR = Path(__file__).resolve().parent / "data"

# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.grp"


def load_fixture(name: str) -> GroupTable:
    return load_group_file(fixture_path(name))


@pytest.fixture(scope="session")
def fixture_names() -> list[str]:
    names = sorted(p.stem for p in FIXTURE_DIR.glob("*.grp"))
    assert names, "fixture library is missing"
    return names


@pytest.fixture(scope="session")
def brute_force_cache():
    """Backtracking enumeration is slow; share one run across the session."""
    from integra import brute_force_groups

    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = brute_force_groups(n)
        return cache[n]

    return get


def naive_associative(table) -> bool:
    """Cubic-time associativity check, kept deliberately dumb as an oracle."""
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    return True


def naive_commutator_closure(g: GroupTable) -> frozenset[int]:
    """Derived subgroup computed by hand: all commutators, closed under product."""
    elems = set()
    for x in range(g.n):
        for y in range(g.n):
            xy = g.mul[x, y]
            yx = g.mul[y, x]
            elems.add(int(g.mul[g.inverse[xy], yx]))
    frontier = list(elems)
    while frontier:
        a = frontier.pop()
        for b in list(elems):
            for c in (int(g.mul[a, b]), int(g.mul[b, a])):
                if c not in elems:
                    elems.add(c)
                    frontier.append(c)
    return frozenset(elems)
