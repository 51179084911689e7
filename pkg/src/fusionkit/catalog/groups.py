"""Finite groups as multiplication tables, with the element 0 as identity.

Provides the constructors for every shipped fixture family, conjugacy/centralizer
machinery for the double construction, exhaustive subgroup enumeration (closure
search with order pruning), and exact factorizations G = KL.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from ..errors import InvalidInput, ResourceLimit

SUBGROUP_CAP = 120


class FiniteGroup:
    """Immutable multiplication-table group; element 0 is the identity."""

    def __init__(self, mult, name: str = "G"):
        table = np.array(mult, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n):
            raise InvalidInput("multiplication table must be square")
        self.order = n
        self.mult = table
        self.name = name
        self._validate()
        inv = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.nonzero(table[a] == 0)[0]
            inv[a] = hits[0]
        self.inverse = inv

    def _validate(self):
        n, t = self.order, self.mult
        if t.min() < 0 or t.max() >= n:
            raise InvalidInput("table entries out of range")
        if not (np.all(t[0] == np.arange(n)) and np.all(t[:, 0] == np.arange(n))):
            raise InvalidInput("element 0 is not the identity")
        for a in range(n):
            if sorted(t[a]) != list(range(n)) or sorted(t[:, a]) != list(range(n)):
                raise InvalidInput("table rows/columns are not permutations")
        lhs = t[t, :]                                  # lhs[a,b,c] = t[t[a,b], c]
        rhs = t[np.arange(n)[:, None, None], t]        # rhs[a,b,c] = t[a, t[b,c]]
        if not np.array_equal(lhs, rhs):
            raise InvalidInput("multiplication table is not associative")

    def op(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, a: int) -> int:
        """g a g^{-1}."""
        return self.op(self.op(g, a), self.inv(g))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.op(x, a)
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e * o // math.gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def conjugacy_classes(self):
        """Sorted classes (each a sorted tuple), ordered by smallest element; identity first."""
        seen = [False] * self.order
        classes = []
        for a in range(self.order):
            if seen[a]:
                continue
            cls = sorted({self.conj(g, a) for g in range(self.order)})
            for x in cls:
                seen[x] = True
            classes.append(tuple(cls))
        classes.sort(key=lambda c: c[0])
        return classes

    def centralizer(self, a: int):
        return tuple(g for g in range(self.order) if self.op(g, a) == self.op(a, g))

    def center(self):
        return tuple(a for a in range(self.order) if len(self.centralizer(a)) == self.order)

    def closure(self, seed) -> frozenset:
        members = {0} | set(seed)
        frontier = list(members)
        while frontier:
            new = set()
            for a in frontier:
                for b in members:
                    new.add(self.op(a, b))
                    new.add(self.op(b, a))
                new.add(self.inv(a))
            new -= members
            members |= new
            frontier = list(new)
        return frozenset(members)

    def subgroups(self, cap: int = SUBGROUP_CAP):
        """All subgroups, by closure-extension search; sorted by (order, members)."""
        if self.order > cap:
            raise ResourceLimit(f"group order {self.order} exceeds subgroup cap {cap}")
        found = {frozenset({0})}
        frontier = [frozenset({0})]
        while frontier:
            nxt = []
            for h in frontier:
                for x in range(1, self.order):
                    if x in h:
                        continue
                    bigger = self.closure(h | {x})
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def is_subgroup(self, members) -> bool:
        ms = set(members)
        return 0 in ms and all(self.op(a, b) in ms for a in ms for b in ms)

    def is_normal(self, members) -> bool:
        ms = set(members)
        return all(self.conj(g, a) in ms for a in ms for g in range(self.order))

    def subgroup_group(self, members) -> "FiniteGroup":
        """The subgroup as a standalone FiniteGroup; element order = sorted members."""
        members = sorted(members)
        if members[0] != 0:
            raise InvalidInput("subgroup must contain the identity")
        pos = {m: i for i, m in enumerate(members)}
        table = [[pos[self.op(a, b)] for b in members] for a in members]
        return FiniteGroup(table, name=f"{self.name}<{len(members)}>")

    def quotient_map(self, normal_members):
        """(cosets, coset_of) for a normal subgroup: cosets sorted by smallest element."""
        ms = frozenset(normal_members)
        cosets = []
        coset_of = [-1] * self.order
        for a in range(self.order):
            if coset_of[a] >= 0:
                continue
            coset = sorted(self.op(a, h) for h in ms)
            idx = len(cosets)
            cosets.append(tuple(coset))
            for x in coset:
                coset_of[x] = idx
        order = [i for i, _ in sorted(enumerate(cosets), key=lambda t: t[1][0])]
        relabel = {old: new for new, old in enumerate(order)}
        cosets = [cosets[old] for old in order]
        coset_of = [relabel[c] for c in coset_of]
        return cosets, coset_of

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


# -- constructors ----------------------------------------------------------------


def from_permutations(perms, name: str, degree: int) -> FiniteGroup:
    """Group generated by the given permutations of range(degree); identity becomes 0."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    ordered = [ident] + sorted(elems - {ident})
    pos = {p: i for i, p in enumerate(ordered)}
    table = [[pos[tuple(a[b[i]] for i in range(degree))] for b in ordered] for a in ordered]
    return FiniteGroup(table, name=name)


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    n, m = g.order, h.order
    table = [[(g.op(a // m, b // m)) * m + h.op(a % m, b % m) for b in range(n * m)]
             for a in range(n * m)]
    return FiniteGroup(table, name=name or f"{g.name}x{h.name}")


def symmetric(n: int) -> FiniteGroup:
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return from_permutations(gens, f"S{n}", n)


def alternating(n: int) -> FiniteGroup:
    gens = [(1, 2, 0) + tuple(range(3, n))]
    if n > 3:
        if n % 2 == 1:
            gens.append(tuple(range(1, n)) + (0,))
        else:
            gens.append((0,) + tuple(range(2, n)) + (1,))
    return from_permutations(gens, f"A{n}", n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon (order 2n), as permutations of vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return from_permutations([rot, ref], f"D{n}", n)


def quaternion() -> FiniteGroup:
    """Q8 = <i, j>, realized by the regular action on {1,-1,i,-i,j,-j,k,-k}."""
    # Elements indexed 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
    def neg(x):
        return x ^ 1

    def base_mul(a, b):
        # multiplication of the unit quaternions by case analysis on (a//2, b//2)
        sa, sb = a % 2, b % 2
        ua, ub = a - sa, b - sb
        table = {
            (0, 0): 0, (0, 2): 2, (0, 4): 4, (0, 6): 6,
            (2, 0): 2, (2, 2): 1, (2, 4): 6, (2, 6): 5,
            (4, 0): 4, (4, 2): 7, (4, 4): 1, (4, 6): 2,
            (6, 0): 6, (6, 2): 4, (6, 4): 3, (6, 6): 1,
        }
        r = table[(ua, ub)]
        if sa:
            r = neg(r)
        if sb:
            r = neg(r)
        return r

    return FiniteGroup([[base_mul(a, b) for b in range(8)] for a in range(8)], name="Q8")


@lru_cache(maxsize=None)
def fixture_group(name: str) -> FiniteGroup:
    """Groups shipped with the library, addressable by name."""
    key = name.strip()
    if key in ("trivial", "Z1", "1"):
        return cyclic(1)
    if key.startswith("Z") and "x" not in key:
        n = int(key[1:])
        if not 1 <= n <= 12:
            raise InvalidInput(f"cyclic fixture Z{n} out of shipped range 1..12")
        return cyclic(n)
    if key == "Z2xZ2":
        return direct_product(cyclic(2), cyclic(2), name="Z2xZ2")
    if key == "S3":
        return symmetric(3)
    if key == "S4":
        return symmetric(4)
    if key == "D4":
        return dihedral(4)
    if key == "Q8":
        return quaternion()
    if key == "A4":
        return alternating(4)
    if key == "A5":
        return alternating(5)
    raise InvalidInput(f"unknown fixture group {name!r}")


FIXTURE_GROUP_NAMES = tuple(["trivial"] + [f"Z{n}" for n in range(2, 13)]
                            + ["Z2xZ2", "S3", "D4", "Q8", "A4", "S4", "A5"])


def exact_factorizations(g: FiniteGroup, cap: int = SUBGROUP_CAP):
    """All ordered subgroup pairs (K, L) with K cap L = {e} and |K||L| = |G|.

    Exactness forces KL = G.  Returned as sorted member tuples.
    """
    subs = g.subgroups(cap=cap)
    out = []
    for k, l in itertools.product(subs, repeat=2):
        if len(k) * len(l) == g.order and len(k & l) == 1:
            out.append((tuple(sorted(k)), tuple(sorted(l))))
    out.sort(key=lambda pair: (len(pair[0]), pair[0], pair[1]))
    return out
