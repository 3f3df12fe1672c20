"""Complete-by-construction lists of all groups of a given order.

The main generator is the cyclic extension method: every group whose order
lies in the supported range (1..63) is solvable, except the simple group of
order 60, so it has a normal subgroup N of prime index p and can be rebuilt
from the pair (N, C_p) by choosing an automorphism phi of N and an element
a with phi(a) = a and phi^p = conjugation-by-a.  Scanning all such choices
over a complete catalog of order n/p therefore reaches every isomorphism
type of order n; a fingerprint-bucketed isomorphism test removes the heavy
duplication.  Order 60 adds the alternating group A5 as a fixture behind an
explicit flag.

A tiny Latin-square backtracking search (`brute_force_groups`, orders <= 8)
serves as an independent oracle for the extension machinery, and a small
checksummed file format persists catalogs between runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .group import GroupError, GroupTable, from_table, trivial_group
from .isomorphism import Fingerprint, aut_list, fingerprint, isomorphic
from .named import alternating

__all__ = [
    "ENUMERATION_CAP",
    "OrderOutOfRange",
    "NonSolvableOrderUnsupported",
    "CorruptCatalog",
    "CatalogEntry",
    "groups_of_order",
    "brute_force_groups",
    "catalog_store",
    "catalog_load",
    "crc64",
]

ENUMERATION_CAP = 63
BRUTE_FORCE_CAP = 8


class OrderOutOfRange(GroupError):
    """Requested order outside the supported range."""


class NonSolvableOrderUnsupported(GroupError):
    """Order 60 admits the non-solvable A5, which the extension method cannot reach."""


class CorruptCatalog(GroupError):
    """A catalog file failed its checksum or structural checks."""


@dataclass(frozen=True)
class CatalogEntry:
    """One isomorphism type: the order, a concrete table, its fingerprint,
    and how it was produced (brute-force | cyclic-extension | fixture)."""

    order: int
    table: GroupTable
    fingerprint: Fingerprint
    provenance: str


def _catalog_sort_key(fp: Fingerprint):
    """Display ordering of a fixed order's entries.

    Abelian groups first, then by descending exponent, then by the element
    order histogram with larger multiplicities of low orders first; the
    remaining fields only break exotic ties.  Construction sequence settles
    anything left (the sort is stable).
    """
    return (
        0 if fp.abelian else 1,
        -fp.exponent,
        tuple((order, -count) for order, count in fp.order_histogram),
        -fp.center_order,
        fp.class_sizes,
        fp.derived_series,
    )


def _dedup(candidates: Iterable[tuple[GroupTable, str]], order: int) -> list[CatalogEntry]:
    """Keep the first representative of each isomorphism type, then sort."""
    kept: list[CatalogEntry] = []
    buckets: dict[Fingerprint, list[int]] = {}
    for table, provenance in candidates:
        fp = fingerprint(table)
        bucket = buckets.setdefault(fp, [])
        if any(isomorphic(kept[i].table, table) is not None for i in bucket):
            continue
        bucket.append(len(kept))
        kept.append(CatalogEntry(order, table, fp, provenance))
    kept.sort(key=lambda e: _catalog_sort_key(e.fingerprint))
    return kept


def _extension_tables(n_group: GroupTable, p: int) -> Iterator[GroupTable]:
    """All extensions of N by C_p: one table per admissible (phi, a) pair.

    Elements are pairs (x, i) ~ x * t^i with x in N, 0 <= i < p, t^p = a and
    t x t^-1 = phi(x); the pair multiplies as
    (x, i)(y, j) = (x * phi^i(y) * a^[i+j >= p], (i+j) mod p).
    """
    m = n_group.n
    idx = np.arange(m)
    # conj[a, y] = a y a^-1
    conj = n_group.mul[n_group.mul, n_group.inverse[:, None]]
    for phi_hom in aut_list(n_group):
        phi = phi_hom.image
        phi_p = idx
        for _ in range(p):
            phi_p = phi[phi_p]
        admissible = np.nonzero((phi == idx) & (conj == phi_p[None, :]).all(axis=1))[0]
        if admissible.size == 0:
            continue
        powers = np.empty((p, m), dtype=np.int64)
        powers[0] = idx
        for i in range(1, p):
            powers[i] = phi[powers[i - 1]]
        for a in admissible:
            table = np.empty((p * m, p * m), dtype=np.int64)
            for i in range(p):
                inner = n_group.mul[idx[:, None], powers[i][None, :]]
                for j in range(p):
                    block = n_group.mul[inner, a] if i + j >= p else inner
                    table[i * m:(i + 1) * m, j * m:(j + 1) * m] = ((i + j) % p) * m + block
            yield GroupTable(table)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_CATALOG_CACHE: dict[tuple[int, bool], list[CatalogEntry]] = {}


def groups_of_order(n: int, include_a5: bool = False) -> list[CatalogEntry]:
    """Every group of order n up to isomorphism, in catalog order.

    Complete for 1 <= n <= 63; n = 60 requires `include_a5` because A5 has
    no normal subgroup of prime index and is shipped as a fixture instead.
    """
    if n < 1 or n > ENUMERATION_CAP:
        raise OrderOutOfRange(f"order {n} outside supported range 1..{ENUMERATION_CAP}")
    if n == 60 and not include_a5:
        raise NonSolvableOrderUnsupported(
            "order 60 includes the non-solvable A5; enable the A5 fixture to proceed"
        )
    key = (n, n == 60)
    cached = _CATALOG_CACHE.get(key)
    if cached is not None:
        return list(cached)

    if n == 1:
        entries = [CatalogEntry(1, trivial_group(), fingerprint(trivial_group()), "fixture")]
    else:
        def candidates() -> Iterator[tuple[GroupTable, str]]:
            for p in _prime_factors(n):
                for sub_entry in groups_of_order(n // p):
                    for table in _extension_tables(sub_entry.table, p):
                        yield table, "cyclic-extension"
            if n == 60:
                yield alternating(5), "fixture"

        entries = _dedup(candidates(), n)

    _CATALOG_CACHE[key] = entries
    return list(entries)


def _latin_group_tables(n: int) -> Iterator[np.ndarray]:
    """Backtracking over Cayley tables with identity 0: Latin rows/columns
    plus incremental associativity checks on every newly filled cell."""
    table = [[-1] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    full_mask = (1 << n) - 1
    row_used = [full_mask if r == 0 else 1 << r for r in range(n)]
    col_used = [full_mask if c == 0 else 1 << c for c in range(n)]
    # products_by_value[v] lists the (a, b) with a*b = v filled so far
    products_by_value = [[] for _ in range(n)]
    for i in range(n):
        products_by_value[i].append((0, i))
        if i:
            products_by_value[i].append((i, 0))

    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def consistent(a: int, b: int, v: int) -> bool:
        # (a, b, r): (ab)r = a(br)
        row_b, row_v, row_a = table[b], table[v], table[a]
        for r in range(n):
            br = row_b[r]
            if br < 0:
                continue
            lhs = row_v[r]
            rhs = row_a[br]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        # (q, a, b): (qa)b = q(ab)
        for q in range(n):
            qa = table[q][a]
            if qa < 0:
                continue
            lhs = table[qa][b]
            rhs = table[q][v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        # (q, r, b) with qr = a: (qr)b = v must equal q(rb)
        for q, r in products_by_value[a]:
            rb = table[r][b]
            if rb < 0:
                continue
            rhs = table[q][rb]
            if rhs >= 0 and rhs != v:
                return False
        # (a, q, r) with qr = b: a(qr) = v must equal (aq)r
        for q, r in products_by_value[b]:
            aq = table[a][q]
            if aq < 0:
                continue
            lhs = table[aq][r]
            if lhs >= 0 and lhs != v:
                return False
        return True

    def fill(pos: int) -> Iterator[np.ndarray]:
        if pos == len(cells):
            yield np.array(table, dtype=np.int64)
            return
        a, b = cells[pos]
        free = full_mask & ~(row_used[a] | col_used[b])
        while free:
            bit = free & -free
            free ^= bit
            v = bit.bit_length() - 1
            if not consistent(a, b, v):
                continue
            table[a][b] = v
            row_used[a] |= bit
            col_used[b] |= bit
            products_by_value[v].append((a, b))
            yield from fill(pos + 1)
            products_by_value[v].pop()
            row_used[a] ^= bit
            col_used[b] ^= bit
            table[a][b] = -1

    if n == 1:
        yield np.zeros((1, 1), dtype=np.int64)
    else:
        yield from fill(0)


def brute_force_groups(n: int) -> list[CatalogEntry]:
    """Independent oracle: all groups of order n <= 8 from raw Latin squares."""
    if n < 1 or n > BRUTE_FORCE_CAP:
        raise OrderOutOfRange(f"brute force supports orders 1..{BRUTE_FORCE_CAP}, got {n}")
    return _dedup(((GroupTable(t), "brute-force") for t in _latin_group_tables(n)), n)


# CRC-64 (ECMA-182 polynomial, most-significant-bit first, zero init/xorout).

_CRC_POLY = 0x42F0E1EBA9EA3693
_CRC_MASK = (1 << 64) - 1


def _crc_table() -> list[int]:
    table = []
    for byte in range(256):
        crc = byte << 56
        for _ in range(8):
            if crc & (1 << 63):
                crc = ((crc << 1) ^ _CRC_POLY) & _CRC_MASK
            else:
                crc = (crc << 1) & _CRC_MASK
        table.append(crc)
    return table


_CRC_TABLE = _crc_table()


def crc64(data: bytes) -> int:
    crc = 0
    for byte in data:
        crc = ((crc << 8) & _CRC_MASK) ^ _CRC_TABLE[((crc >> 56) ^ byte) & 0xFF]
    return crc


def _catalog_path(directory: str | Path, order: int) -> Path:
    return Path(directory) / f"{order}.grp"


def catalog_store(entries: list[CatalogEntry], directory: str | Path) -> Path:
    """Write one order's entries to `<directory>/<order>.grp`."""
    if not entries:
        raise GroupError("refusing to store an empty catalog")
    order = entries[0].order
    if any(e.order != order for e in entries):
        raise GroupError("catalog files hold a single order")

    lines = []
    for pos, entry in enumerate(entries, start=1):
        lines.append(f"# entry {pos} of {len(entries)}: provenance {entry.provenance}")
        lines.append(f"%table {entry.table.n}")
        for row in entry.table.mul:
            lines.append(" ".join(str(int(x)) for x in row))
    payload = ("\n".join(lines) + "\n").encode("utf-8")

    path = _catalog_path(directory, order)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"GRPCAT 1\norder {order}\ncount {len(entries)}\ncrc64 {crc64(payload):016x}\n"
    path.write_bytes(header.encode("utf-8") + payload)
    return path


_ENTRY_COMMENT = re.compile(r"^# entry \d+ of \d+: provenance (\S+)$")


def catalog_load(order: int, directory: str | Path) -> tuple[list[CatalogEntry], bool]:
    """Read back a stored catalog.  Missing file -> ([], False), meaning the
    caller should generate on demand; any structural or checksum problem
    raises CorruptCatalog."""
    path = _catalog_path(directory, order)
    if not path.exists():
        return [], False
    raw = path.read_bytes()

    text = raw.decode("utf-8", errors="replace")
    lines = text.split("\n")
    if len(lines) < 4 or lines[0] != "GRPCAT 1":
        raise CorruptCatalog(f"{path}: missing GRPCAT 1 header")
    try:
        stated_order = int(lines[1].removeprefix("order "))
        stated_count = int(lines[2].removeprefix("count "))
        stated_crc = int(lines[3].removeprefix("crc64 "), 16)
    except ValueError as exc:
        raise CorruptCatalog(f"{path}: malformed header: {exc}") from None
    if stated_order != order:
        raise CorruptCatalog(f"{path}: header order {stated_order}, expected {order}")

    payload = "\n".join(lines[4:]).encode("utf-8")
    actual_crc = crc64(payload)
    if actual_crc != stated_crc:
        raise CorruptCatalog(
            f"{path}: checksum mismatch ({actual_crc:016x} != {stated_crc:016x})"
        )

    entries: list[CatalogEntry] = []
    provenance = "fixture"
    body = lines[4:]
    i = 0
    try:
        while i < len(body):
            line = body[i].strip()
            if not line:
                i += 1
                continue
            match = _ENTRY_COMMENT.match(line)
            if match:
                provenance = match.group(1)
                i += 1
                continue
            if not line.startswith("%table "):
                raise CorruptCatalog(f"{path}: unexpected line {i + 5}: {line!r}")
            size = int(line.removeprefix("%table "))
            rows = [[int(x) for x in body[i + 1 + r].split()] for r in range(size)]
            table = from_table(size, rows)
            entries.append(CatalogEntry(order, table, fingerprint(table), provenance))
            i += 1 + size
    except (GroupError, ValueError, IndexError) as exc:
        if isinstance(exc, CorruptCatalog):
            raise
        raise CorruptCatalog(f"{path}: {exc}") from None

    if len(entries) != stated_count:
        raise CorruptCatalog(f"{path}: {len(entries)} entries, header says {stated_count}")
    return entries, True
