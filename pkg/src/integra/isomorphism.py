"""Isomorphism testing, automorphism enumeration, and generating-set ranks.

Isomorphism search is fingerprint-first: cheap invariants (order, element
order histogram, center size, derived series, conjugacy class sizes,
exponent) reject most pairs, and only same-fingerprint pairs enter ordered
backtracking over the images of a fixed greedy generating sequence.  The
backtracking is deterministic, so the witness returned for a given pair is
reproducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .group import GroupError, GroupTable, Hom

__all__ = [
    "AutListTooLarge",
    "Fingerprint",
    "fingerprint",
    "generating_sequence",
    "isomorphic",
    "aut_list",
    "aut_order",
    "mu",
    "min_generators",
]

DEFAULT_AUT_CAP = 10**6


class AutListTooLarge(GroupError):
    """Automorphism list exceeds the configured cap; `count` is still exact."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"automorphism group has order {count}, above the cap {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isomorphism invariants, usable as a dictionary key."""

    order: int
    abelian: bool
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    derived_series: tuple[int, ...]
    class_sizes: tuple[tuple[int, int], ...]
    exponent: int

    def first_difference(self, other: Fingerprint) -> str | None:
        """Name of the first field where the two fingerprints disagree."""
        names = {
            "order": "order",
            "abelian": "abelian flag",
            "order_histogram": "order histogram",
            "center_order": "center order",
            "derived_series": "derived series",
            "class_sizes": "class sizes",
            "exponent": "exponent",
        }
        for attr, label in names.items():
            if getattr(self, attr) != getattr(other, attr):
                return label
        return None


def _derived_series_orders(g: GroupTable) -> tuple[int, ...]:
    orders = [g.n]
    current = g
    while True:
        der = current.commutator_subgroup()
        if len(der) == current.n:  # perfect group, series stabilizes
            break
        orders.append(len(der))
        if len(der) == 1:
            break
        current, _ = current.subgroup(der)
    return tuple(orders)


def fingerprint(g: GroupTable) -> Fingerprint:
    if "fingerprint" not in g._cache:
        hist = tuple(sorted(Counter(int(o) for o in g.orders()).items()))
        sizes = tuple(sorted(Counter(len(c) for c in g.conjugacy_classes()).items()))
        g._cache["fingerprint"] = Fingerprint(
            order=g.n,
            abelian=g.is_abelian(),
            order_histogram=hist,
            center_order=len(g.center()),
            derived_series=_derived_series_orders(g),
            class_sizes=sizes,
            exponent=g.exponent(),
        )
    return g._cache["fingerprint"]


def generating_sequence(g: GroupTable) -> tuple[int, ...]:
    """Greedy generating sequence: repeatedly the smallest element not yet generated."""
    if "gens" not in g._cache:
        gens: list[int] = []
        covered = g.generated_subgroup(gens)
        while len(covered) < g.n:
            nxt = next(x for x in range(g.n) if x not in covered.as_set())
            gens.append(nxt)
            covered = g.generated_subgroup(gens)
        g._cache["gens"] = tuple(gens)
    return g._cache["gens"]


def _bfs_layers(g: GroupTable, gens: tuple[int, ...]) -> list[list[int]]:
    """Per-depth BFS element lists for the subgroups <g_1..g_k>.

    Each layer lists the subgroup's elements in an order where every element
    after the identity is some earlier element times a generator; extending a
    partial map along that order both defines it and checks consistency.
    """
    layers = []
    for k in range(1, len(gens) + 1):
        seen = {0}
        order_list = [0]
        i = 0
        while i < len(order_list):
            x = order_list[i]
            for j in range(k):
                y = int(g.mul[x, gens[j]])
                if y not in seen:
                    seen.add(y)
                    order_list.append(y)
            i += 1
        layers.append(order_list)
    return layers


def _class_size_map(g: GroupTable) -> np.ndarray:
    if "class_size" not in g._cache:
        sizes = np.zeros(g.n, dtype=np.int64)
        for cls in g.conjugacy_classes():
            sizes[list(cls)] = len(cls)
        sizes.setflags(write=False)
        g._cache["class_size"] = sizes
    return g._cache["class_size"]


class _Matcher:
    """Backtracking search for homomorphic, injective extensions of a generator map."""

    def __init__(self, g: GroupTable, h: GroupTable):
        self.g = g
        self.h = h
        self.gens = generating_sequence(g)
        self.layers = _bfs_layers(g, self.gens)
        g_orders = g.orders()
        g_sizes = _class_size_map(g)
        h_orders = h.orders()
        h_sizes = _class_size_map(h)
        self.pools = []
        for gen in self.gens:
            key = (int(g_orders[gen]), int(g_sizes[gen]))
            pool = [
                t
                for t in range(h.n)
                if (int(h_orders[t]), int(h_sizes[t])) == key
            ]
            self.pools.append(pool)

    def _extend(self, images: list[int]) -> np.ndarray | None:
        """Map <g_1..g_k> into h along the BFS order; None on any inconsistency."""
        k = len(images)
        layer = self.layers[k - 1]
        gm, hm = self.g.mul, self.h.mul
        img = {0: 0}
        used = {0}
        for x in layer:
            fx = img[x]
            for j in range(k):
                y = int(gm[x, self.gens[j]])
                fy = int(hm[fx, images[j]])
                known = img.get(y)
                if known is None:
                    if fy in used:
                        return None
                    img[y] = fy
                    used.add(fy)
                elif known != fy:
                    return None
        out = np.zeros(self.g.n, dtype=np.int64)
        for x, fx in img.items():
            out[x] = fx
        return out

    def search(self, collect: list | None, cap: int | None) -> tuple[int, bool]:
        """DFS over generator images; returns (count, overflowed).

        Completions are appended to `collect` (as image arrays over all of g)
        until `cap` is exceeded, after which the list is dropped and only the
        count keeps growing.
        """
        count = 0
        overflowed = False
        if not self.gens:
            if self.h.n == 1:
                if collect is not None:
                    collect.append(np.zeros(1, dtype=np.int64))
                return 1, False
            return 0, False

        def dfs(depth: int, images: list[int]):
            nonlocal count, overflowed
            for t in self.pools[depth]:
                images.append(t)
                full = self._extend(images)
                if full is not None:
                    if depth + 1 == len(self.gens):
                        count += 1
                        if collect is not None and not overflowed:
                            if cap is not None and count > cap:
                                overflowed = True
                                collect.clear()
                            else:
                                collect.append(full)
                    else:
                        dfs(depth + 1, images)
                images.pop()

        dfs(0, [])
        return count, overflowed


def isomorphic(g: GroupTable, h: GroupTable) -> Hom | None:
    """A bijective homomorphism g -> h, or None; deterministic witness."""
    if g.n != h.n:
        return None
    if fingerprint(g) != fingerprint(h):
        return None
    matcher = _Matcher(g, h)
    if not matcher.gens:
        return Hom(g, h, [0])

    witness: list[np.ndarray] = []

    def dfs(depth: int, images: list[int]) -> np.ndarray | None:
        for t in matcher.pools[depth]:
            images.append(t)
            full = matcher._extend(images)
            if full is not None:
                if depth + 1 == len(matcher.gens):
                    return full
                deeper = dfs(depth + 1, images)
                if deeper is not None:
                    return deeper
            images.pop()
        return None

    image = dfs(0, [])
    if image is None:
        return None
    return Hom(g, h, image)


def aut_order(g: GroupTable) -> int:
    """Order of the automorphism group, by exhaustive backtracking."""
    if "aut_order" not in g._cache:
        count, _ = _Matcher(g, g).search(collect=None, cap=None)
        g._cache["aut_order"] = count
    return g._cache["aut_order"]


def aut_list(g: GroupTable, cap: int = DEFAULT_AUT_CAP) -> list[Hom]:
    """All automorphisms of g; raises AutListTooLarge past `cap` (count kept)."""
    collected: list = []
    count, overflowed = _Matcher(g, g).search(collect=collected, cap=cap)
    g._cache["aut_order"] = count
    if overflowed:
        raise AutListTooLarge(count, cap)
    return [Hom(g, g, image) for image in collected]


def _closure_size_cache(g: GroupTable) -> dict:
    return g._cache.setdefault("closures", {})


def _closure(g: GroupTable, seeds: tuple[int, ...]) -> frozenset[int]:
    cache = _closure_size_cache(g)
    if seeds not in cache:
        cache[seeds] = g.generated_subgroup(seeds).as_set()
    return cache[seeds]


def min_generators(g: GroupTable) -> int:
    """Size of the smallest generating set (0 for the trivial group)."""
    if g.n == 1:
        return 0
    full = frozenset(range(g.n))
    for k in range(1, g.n + 1):
        for combo in combinations(range(1, g.n), k):
            if _closure(g, combo) == full:
                return k
    raise GroupError("unreachable: the whole element set generates")


def mu(g: GroupTable) -> int:
    """Largest size of an irredundant generating set.

    A set is irredundant when no proper subset generates the same subgroup;
    the search extends only independent sets (every member stays outside the
    closure of the others), which is exactly the family whose maximal
    generating members realize mu.
    """
    if g.n == 1:
        raise GroupError("mu is defined for nontrivial groups")
    full = frozenset(range(g.n))
    best = 0

    def independent_with(base: tuple[int, ...], extra: int) -> bool:
        candidate = tuple(sorted(base + (extra,)))
        if extra in _closure(g, base):
            return False
        for s in base:
            rest = tuple(x for x in candidate if x != s)
            if s in _closure(g, rest):
                return False
        return True

    def dfs(current: tuple[int, ...], start: int):
        nonlocal best
        for x in range(start, g.n):
            if not independent_with(current, x):
                continue
            nxt = tuple(sorted(current + (x,)))
            if _closure(g, nxt) == full:
                best = max(best, len(nxt))
            else:
                dfs(nxt, x + 1)

    dfs((), 1)
    if best == 0:
        raise GroupError("unreachable: no irredundant generating set found")
    return best
