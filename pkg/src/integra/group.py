"""Finite groups as validated multiplication tables over element indices.

Every group here is concrete: an order-n multiplication table over the
indices 0..n-1, with the identity relabeled to index 0 at construction.
The constructor checks the complete group axioms (Latin square, two-sided
identity, unique two-sided inverses, associativity), so downstream code can
rely on every GroupTable being a genuine group.  Tables are immutable and
safe to share; all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "InvalidTable",
    "NotLatinSquare",
    "NoIdentity",
    "NoInverse",
    "NotAssociative",
    "NotNormal",
    "ClosureExceedsCap",
    "GroupTable",
    "Subset",
    "Hom",
    "from_table",
    "from_permutations",
    "direct_product",
    "trivial_group",
    "parse_cycles",
    "cycle_notation",
    "all_subgroups",
]

DEFAULT_CLOSURE_CAP = 20000


class GroupError(Exception):
    """Base class for all errors raised by this library."""


class InvalidTable(GroupError):
    """Table is not square or contains out-of-range entries."""


class NotLatinSquare(GroupError):
    """Some row or column of the table repeats a value."""


class NoIdentity(GroupError):
    """No two-sided identity element exists."""


class NoInverse(GroupError):
    """Some element lacks a unique two-sided inverse."""


class NotAssociative(GroupError):
    """Associativity fails for some triple."""


class NotNormal(GroupError):
    """A quotient was requested by a subset that is not a normal subgroup."""


class ClosureExceedsCap(GroupError):
    """Permutation closure grew past the configured element cap."""


def _check_latin(mul: np.ndarray) -> None:
    n = mul.shape[0]
    expected = np.arange(n)
    for a in range(n):
        row = np.sort(mul[a])
        if not np.array_equal(row, expected):
            counts = np.bincount(mul[a], minlength=n)
            v = int(np.argmax(counts > 1))
            cols = np.nonzero(mul[a] == v)[0]
            raise NotLatinSquare(
                f"row {a} repeats value {v} at columns {cols[0]} and {cols[1]}"
            )
    for b in range(n):
        col = np.sort(mul[:, b])
        if not np.array_equal(col, expected):
            counts = np.bincount(mul[:, b], minlength=n)
            v = int(np.argmax(counts > 1))
            rows = np.nonzero(mul[:, b] == v)[0]
            raise NotLatinSquare(
                f"column {b} repeats value {v} at rows {rows[0]} and {rows[1]}"
            )


def _find_identity(mul: np.ndarray) -> int:
    n = mul.shape[0]
    expected = np.arange(n)
    for e in range(n):
        if np.array_equal(mul[e], expected) and np.array_equal(mul[:, e], expected):
            return e
    raise NoIdentity("no two-sided identity element")


def _check_inverses(mul: np.ndarray, e: int) -> None:
    n = mul.shape[0]
    right = np.argmax(mul == e, axis=1)
    for a in range(n):
        b = int(right[a])
        if mul[b, a] != e:
            raise NoInverse(
                f"element {a}: right inverse {b} is not a left inverse"
            )


def _check_associative(mul: np.ndarray) -> None:
    # (a*b)*c == a*(b*c), chunked over a to bound memory at large orders.
    n = mul.shape[0]
    block = max(1, (1 << 22) // max(1, n * n))
    for start in range(0, n, block):
        stop = min(n, start + block)
        lhs = mul[mul[start:stop]]          # lhs[i, b, c] = (a*b)*c
        rhs = mul[start:stop][:, mul]       # rhs[i, b, c] = a*(b*c)
        bad = lhs != rhs
        if bad.any():
            i, b, c = (int(x) for x in np.argwhere(bad)[0])
            a = start + i
            raise NotAssociative(
                f"({a}*{b})*{c} = {int(lhs[i, b, c])} but "
                f"{a}*({b}*{c}) = {int(rhs[i, b, c])}"
            )


class GroupTable:
    """A finite group given by its multiplication table.

    `mul[a, b]` is the product of elements a and b; the identity sits at
    index 0.  `labels`, when present, give a display name per element.
    """

    __slots__ = ("n", "mul", "inverse", "labels", "_cache")

    def __init__(
        self,
        table: Sequence[Sequence[int]] | np.ndarray,
        labels: Sequence[str] | None = None,
    ):
        mul = np.array(table, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise InvalidTable(f"expected a nonempty square table, got shape {mul.shape}")
        n = int(mul.shape[0])
        if mul.min() < 0 or mul.max() >= n:
            a, b = (int(x) for x in np.argwhere((mul < 0) | (mul >= n))[0])
            raise InvalidTable(f"entry {int(mul[a, b])} at cell ({a},{b}) is outside 0..{n - 1}")
        if labels is not None and len(labels) != n:
            raise InvalidTable(f"got {len(labels)} labels for a group of order {n}")

        _check_latin(mul)
        e = _find_identity(mul)
        _check_inverses(mul, e)
        _check_associative(mul)

        if e != 0:
            q = np.arange(n)
            q[0], q[e] = e, 0
            mul = q[mul[np.ix_(q, q)]]
            if labels is not None:
                labels = [labels[q[x]] for x in range(n)]

        mul.setflags(write=False)
        inverse = np.argmax(mul == 0, axis=1)
        inverse.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inverse", inverse)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("GroupTable is immutable")

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"GroupTable(order={self.n})"

    def validate(self) -> None:
        """Re-assert the full group axioms (identity, Latin, inverses, associativity)."""
        if not (np.array_equal(self.mul[0], np.arange(self.n))
                and np.array_equal(self.mul[:, 0], np.arange(self.n))):
            raise NoIdentity("identity is not at index 0")
        _check_latin(self.mul)
        _check_inverses(self.mul, 0)
        _check_associative(self.mul)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    # -- basic element arithmetic -------------------------------------------------

    def power(self, x: int, k: int) -> int:
        """x**k for any integer k (negative powers via the inverse)."""
        if k < 0:
            x, k = int(self.inverse[x]), -k
        acc = 0
        for _ in range(k % (self.element_order(x) or 1) if k else 0):
            acc = int(self.mul[acc, x])
        return acc

    def orders(self) -> np.ndarray:
        """Array of element orders."""
        if "orders" not in self._cache:
            n = self.n
            out = np.zeros(n, dtype=np.int64)
            cur = np.arange(n)
            k = 1
            while (out == 0).any():
                hit = (cur == 0) & (out == 0)
                out[hit] = k
                cur = self.mul[cur, np.arange(n)]
                k += 1
            out.setflags(write=False)
            self._cache["orders"] = out
        return self._cache["orders"]

    def element_order(self, x: int) -> int:
        return int(self.orders()[x])

    def exponent(self) -> int:
        """Least common multiple of all element orders."""
        return lcm(*(int(o) for o in np.unique(self.orders())))

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            self._cache["abelian"] = bool(np.array_equal(self.mul, self.mul.T))
        return self._cache["abelian"]

    # -- subsets and subgroups ----------------------------------------------------

    def subset(self, members: Iterable[int], subgroup: bool = False) -> Subset:
        return Subset(self, tuple(sorted(set(int(m) for m in members))), subgroup)

    def whole(self) -> Subset:
        return Subset(self, tuple(range(self.n)), True)

    def center(self) -> Subset:
        """Elements commuting with everything; always a subgroup."""
        if "center" not in self._cache:
            members = np.nonzero((self.mul == self.mul.T).all(axis=1))[0]
            self._cache["center"] = Subset(self, tuple(int(x) for x in members), True)
        return self._cache["center"]

    def centralizer(self, s: Subset | Iterable[int]) -> Subset:
        """All h with h*x == x*h for every x in s."""
        members = s.members if isinstance(s, Subset) else tuple(sorted(set(s)))
        if isinstance(s, Subset) and s.parent is not self:
            raise GroupError("centralizer of a subset of a different group")
        cols = self.mul[:, list(members)]           # h*x
        rows = self.mul[list(members), :].T         # x*h
        mask = (cols == rows).all(axis=1)
        return Subset(self, tuple(int(x) for x in np.nonzero(mask)[0]), True)

    def generated_subgroup(self, seeds: Iterable[int]) -> Subset:
        """Closure of the seed elements under multiplication."""
        seeds = sorted(set(int(s) for s in seeds))
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        if seeds:
            while frontier.size:
                prods = self.mul[np.ix_(frontier, seeds)].ravel()
                fresh = np.unique(prods[~seen[prods]])
                seen[fresh] = True
                frontier = fresh
        return Subset(self, tuple(int(x) for x in np.nonzero(seen)[0]), True)

    def commutator_subgroup(self) -> Subset:
        """Subgroup generated by all commutators x^-1 y^-1 x y."""
        if "derived" not in self._cache:
            inv = self.inverse
            left = self.mul[np.ix_(inv, inv)]       # x^-1 * y^-1
            comms = self.mul[left, self.mul]        # (x^-1 y^-1)(x y)
            self._cache["derived"] = self.generated_subgroup(np.unique(comms))
        return self._cache["derived"]

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Partition into conjugacy classes, ordered by smallest member."""
        if "classes" not in self._cache:
            n = self.n
            assigned = np.full(n, -1, dtype=np.int64)
            classes: list[tuple[int, ...]] = []
            for x in range(n):
                if assigned[x] >= 0:
                    continue
                orbit = np.unique(self.mul[self.mul[:, x], self.inverse])
                assigned[orbit] = len(classes)
                classes.append(tuple(int(i) for i in orbit))
            self._cache["classes"] = tuple(classes)
        return self._cache["classes"]

    def is_normal(self, s: Subset) -> bool:
        if s.parent is not self:
            raise GroupError("normality test for a subset of a different group")
        members = np.array(s.members, dtype=np.int64)
        inside = np.zeros(self.n, dtype=bool)
        inside[members] = True
        for g in range(self.n):
            conj = self.mul[self.mul[g, members], self.inverse[g]]
            if not inside[conj].all():
                return False
        return True

    def subgroup(self, s: Subset) -> tuple[GroupTable, Hom]:
        """Materialize a subgroup subset as its own GroupTable plus the embedding."""
        if s.parent is not self:
            raise GroupError("subgroup table for a subset of a different group")
        members = np.array(s.members, dtype=np.int64)
        if members[0] != 0:
            raise GroupError("subgroup subset must contain the identity")
        products = self.mul[np.ix_(members, members)]
        sub = np.searchsorted(members, products)
        if sub.max() >= len(members) or not np.array_equal(members[sub], products):
            raise GroupError("subset is not closed under multiplication")
        labels = None
        if self.labels is not None:
            labels = [self.labels[m] for m in members]
        table = GroupTable(sub, labels)
        embed = Hom(table, self, members)
        return table, embed

    def quotient(self, s: Subset) -> tuple[GroupTable, Hom]:
        """Quotient by a normal subgroup; returns the coset table and projection."""
        if not self.is_normal(s):
            raise NotNormal(f"subset {s.members} is not a normal subgroup")
        members = np.array(s.members, dtype=np.int64)
        coset_of = np.full(self.n, -1, dtype=np.int64)
        reps: list[int] = []
        for x in range(self.n):
            if coset_of[x] >= 0:
                continue
            coset_of[self.mul[x, members]] = len(reps)
            reps.append(x)
        reps_arr = np.array(reps, dtype=np.int64)
        qmul = coset_of[self.mul[np.ix_(reps_arr, reps_arr)]]
        table = GroupTable(qmul)
        proj = Hom(self, table, coset_of)
        return table, proj


@dataclass(frozen=True)
class Subset:
    """A subset of a parent group's elements; `subgroup` marks verified subgroups."""

    parent: GroupTable
    members: tuple[int, ...]
    subgroup: bool = False

    def __post_init__(self):
        if any(m < 0 or m >= self.parent.n for m in self.members):
            raise GroupError(f"subset members {self.members} out of range")
        if tuple(sorted(set(self.members))) != self.members:
            raise GroupError("subset members must be sorted and unique")
        if self.subgroup:
            if not self.members or self.members[0] != 0:
                raise GroupError("a subgroup must contain the identity")
            mem = np.array(self.members, dtype=np.int64)
            inside = np.zeros(self.parent.n, dtype=bool)
            inside[mem] = True
            if not inside[self.parent.mul[np.ix_(mem, mem)]].all():
                raise GroupError("subset flagged subgroup is not closed")
            if not inside[self.parent.inverse[mem]].all():
                raise GroupError("subset flagged subgroup is not inverse-closed")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


class Hom:
    """A homomorphism witness: the image of every domain element.

    Validated at construction: image[x*y] == image[x]*image[y] and
    image[identity] == identity.
    """

    __slots__ = ("domain", "codomain", "image")

    def __init__(self, domain: GroupTable, codomain: GroupTable, image: Sequence[int] | np.ndarray):
        img = np.array(image, dtype=np.int64)
        if img.shape != (domain.n,):
            raise GroupError(f"image has shape {img.shape}, expected ({domain.n},)")
        if img.min() < 0 or img.max() >= codomain.n:
            raise GroupError("image values out of codomain range")
        if img[0] != 0:
            raise GroupError("homomorphism must send identity to identity")
        lhs = codomain.mul[np.ix_(img, img)]
        rhs = img[domain.mul]
        if not np.array_equal(lhs, rhs):
            a, b = (int(v) for v in np.argwhere(lhs != rhs)[0])
            raise GroupError(
                f"not a homomorphism: f({a})*f({b}) = {int(lhs[a, b])} "
                f"but f({a}*{b}) = {int(rhs[a, b])}"
            )
        img.setflags(write=False)
        self.domain = domain
        self.codomain = codomain
        self.image = img

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def __repr__(self) -> str:
        return f"Hom({self.domain.n} -> {self.codomain.n})"

    def is_injective(self) -> bool:
        return len(np.unique(self.image)) == self.domain.n

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.codomain.n

    def is_bijective(self) -> bool:
        return self.domain.n == self.codomain.n and self.is_injective()

    def kernel(self) -> Subset:
        members = np.nonzero(self.image == 0)[0]
        return Subset(self.domain, tuple(int(x) for x in members), True)

    def image_subset(self) -> Subset:
        members = np.unique(self.image)
        return Subset(self.codomain, tuple(int(x) for x in members), True)

    def then(self, other: Hom) -> Hom:
        """Composite map: apply self, then other."""
        if other.domain is not self.codomain:
            raise GroupError("composition mismatch: codomain differs from next domain")
        return Hom(self.domain, other.codomain, other.image[self.image])

    def inverted(self) -> Hom:
        if not self.is_bijective():
            raise GroupError("only bijective homomorphisms can be inverted")
        inv = np.empty(self.domain.n, dtype=np.int64)
        inv[self.image] = np.arange(self.domain.n)
        return Hom(self.codomain, self.domain, inv)


def identity_hom(g: GroupTable) -> Hom:
    return Hom(g, g, np.arange(g.n))


# -- constructors ------------------------------------------------------------------


def from_table(n: int, rows: Sequence[Sequence[int]]) -> GroupTable:
    """Build and validate a group from an explicit n-by-n table."""
    rows = np.asarray(rows)
    if rows.shape != (n, n):
        raise InvalidTable(f"expected a {n}x{n} table, got shape {rows.shape}")
    return GroupTable(rows)


def trivial_group() -> GroupTable:
    return GroupTable([[0]], labels=["e"])


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation like "(1 2 3)(4 5)" into a permutation of 0..degree-1."""
    normalized = text.replace(",", " ")
    remainder = _CYCLE_RE.sub("", normalized).strip()
    if remainder:
        raise GroupError(f"unexpected text {remainder!r} in cycle notation {text!r}")
    perm = list(range(degree))
    for cycle_text in _CYCLE_RE.findall(normalized):
        points = [int(tok) for tok in cycle_text.split()]
        if not points:
            continue
        if any(p < 1 or p > degree for p in points):
            bad = next(p for p in points if p < 1 or p > degree)
            raise GroupError(f"point {bad} outside 1..{degree} in {text!r}")
        if len(set(points)) != len(points):
            raise GroupError(f"repeated point in cycle {cycle_text!r}")
        cyc = [p - 1 for p in points]
        step = list(range(degree))
        for i, p in enumerate(cyc):
            step[p] = cyc[(i + 1) % len(cyc)]
        perm = [step[perm[i]] for i in range(degree)]  # apply previous cycles, then this one
    return tuple(perm)


def cycle_notation(perm: Sequence[int]) -> str:
    """Render a 0-based permutation in 1-based cycle notation."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


def from_permutations(
    degree: int,
    generators: Sequence[str | Sequence[int]],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> GroupTable:
    """Close a set of permutations into a group table, labeling elements by cycles.

    Generators may be cycle-notation strings or 0-based permutation sequences.
    Raises ClosureExceedsCap when the closure grows past `cap` elements.
    """
    if degree < 1:
        raise GroupError(f"degree must be positive, got {degree}")
    gens: list[tuple[int, ...]] = []
    for g in generators:
        if isinstance(g, str):
            gens.append(parse_cycles(g, degree))
        else:
            perm = tuple(int(x) for x in g)
            if sorted(perm) != list(range(degree)):
                raise GroupError(f"{perm} is not a permutation of 0..{degree - 1}")
            gens.append(perm)

    identity = tuple(range(degree))
    elems: list[tuple[int, ...]] = [identity]
    index = {identity: 0}
    queue = [identity]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = tuple(g[x[i]] for i in range(degree))  # apply x, then g
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureExceedsCap(
                        f"closure exceeded the cap of {cap} elements"
                    )
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)

    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(q[p[k]] for k in range(degree))]
    labels = [cycle_notation(p) for p in elems]
    return GroupTable(table, labels)


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Component-wise product on pairs, encoded as index = x*|B| + y."""
    n, m = a.n, b.n
    table = (a.mul[:, None, :, None] * m + b.mul[None, :, None, :]).reshape(n * m, n * m)
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return GroupTable(table, labels)


def all_subgroups(g: GroupTable) -> list[Subset]:
    """Every subgroup of g, found by closing seed sets; meant for small groups."""
    found = {frozenset([0])}
    queue = [frozenset([0])]
    while queue:
        s = queue.pop()
        for x in range(1, g.n):
            if x in s:
                continue
            t = g.generated_subgroup(s | {x}).as_set()
            if t not in found:
                found.add(t)
                queue.append(t)
    subsets = [g.subset(sorted(s), subgroup=True) for s in found]
    subsets.sort(key=lambda s: (len(s.members), s.members))
    return subsets
