"""Exact character tables: computed for abelian groups, shipped for the
nonabelian fixtures, validated by the orthogonality relations in all cases.

Class columns follow FiniteGroup.conjugacy_classes() order (sorted by smallest
member, identity class first); the first row is always the trivial character.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import ComputationError, InvalidCharacterTable, InvalidInput
from ..exactnum.cyclotomic import Cyclotomic
from .groups import FiniteGroup, fixture_group


@dataclass
class CharacterTable:
    """Irreducible characters of a finite group, as exact cyclotomic class values.

    The group itself is optional: tables ingested from files carry only the order,
    sizes and values (enough to validate and to form the character ring); element
    lookups (class_of/value) additionally need the group.
    """

    group: FiniteGroup | None
    conductor: int
    class_reps: tuple        # smallest member of each conjugacy class (optional: empty)
    class_sizes: tuple
    values: tuple            # rows = irreps, cols = classes, Cyclotomic entries
    order: int = 0
    _class_of: tuple = None  # element -> class index
    abelian_exponents: tuple | None = None  # linear chars as zeta_N exponent rows

    def __post_init__(self):
        if self.order == 0:
            if self.group is None:
                raise InvalidInput("character table needs a group or an explicit order")
            object.__setattr__(self, "order", self.group.order)
        if self._class_of is None and self.group is not None:
            classes = self.group.conjugacy_classes()
            class_of = [-1] * self.group.order
            for c, cls in enumerate(classes):
                for x in cls:
                    class_of[x] = c
            object.__setattr__(self, "_class_of", tuple(class_of))

    @property
    def group_order(self) -> int:
        return self.order

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    def class_of(self, element: int) -> int:
        if self._class_of is None:
            raise InvalidInput("element lookups require the underlying group")
        return self._class_of[element]

    def value(self, irrep: int, element: int) -> Cyclotomic:
        return self.values[irrep][self.class_of(element)]

    def degree(self, irrep: int) -> int:
        return int(self.values[irrep][0].as_fraction())

    def conjugate_row_index(self, irrep: int) -> int:
        target = tuple(v.conj() for v in self.values[irrep])
        for i, row in enumerate(self.values):
            if all(a == b for a, b in zip(row, target)):
                return i
        raise ComputationError("table not closed under complex conjugation")

    def validate(self) -> None:
        order = self.order
        if sum(self.class_sizes) != order:
            raise InvalidCharacterTable("class sizes do not sum to the group order")
        if len(self.values) != self.n_classes:
            raise InvalidCharacterTable("number of irreducibles differs from number of classes")
        one = Cyclotomic.one(self.conductor)
        if any(v != one for v in self.values[0]):
            raise InvalidCharacterTable("first row is not the trivial character")
        degs = []
        for row in self.values:
            d = row[0]
            if not d.is_rational() or d.as_fraction().denominator != 1 or d.as_fraction() <= 0:
                raise InvalidCharacterTable("degrees must be positive integers")
            degs.append(int(d.as_fraction()))
        if sum(d * d for d in degs) != order:
            raise InvalidCharacterTable("sum of squared degrees differs from the group order")
        # Row orthogonality: sum_c |c| chi_i(c) conj(chi_j(c)) = |G| delta_ij.
        for i, row_i in enumerate(self.values):
            for j, row_j in enumerate(self.values):
                s = Cyclotomic.zero(self.conductor)
                for sz, a, b in zip(self.class_sizes, row_i, row_j):
                    s = s + sz * (a * b.conj())
                want = order if i == j else 0
                if s != Cyclotomic.from_rational(want, self.conductor):
                    raise InvalidCharacterTable(f"row orthogonality fails at ({i},{j})")
        # Column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |C_G(c)|.
        for c in range(self.n_classes):
            for cp in range(self.n_classes):
                s = Cyclotomic.zero(self.conductor)
                for row in self.values:
                    s = s + row[c] * row[cp].conj()
                want = order // self.class_sizes[c] if c == cp else 0
                if s != Cyclotomic.from_rational(want, self.conductor):
                    raise InvalidCharacterTable(f"column orthogonality fails at ({c},{cp})")


def abelian_character_table(g: FiniteGroup) -> CharacterTable:
    """All |G| linear characters of an abelian group, exactly.

    Characters are found as homomorphisms into Z/N (N the exponent) by filtering
    generator-exponent assignments against the full multiplication table.
    """
    if not g.is_abelian():
        raise InvalidInput("abelian_character_table requires an abelian group")
    n = g.order
    N = g.exponent()
    gens = []
    covered = g.closure(())
    while len(covered) < n:
        # Prefer high-order generators to keep the assignment space small.
        best = max((x for x in range(n) if x not in covered), key=g.element_order)
        gens.append(best)
        covered = g.closure(gens)
    table = g.mult
    chars = []
    option_sets = [[(j * N) // g.element_order(x) for j in range(g.element_order(x))]
                   for x in gens]
    for combo in itertools.product(*option_sets):
        vec = np.full(n, -1, dtype=np.int64)
        vec[0] = 0
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for gen, e in zip(gens, combo):
                    b = int(table[a, gen])
                    val = (vec[a] + e) % N
                    if vec[b] == -1:
                        vec[b] = val
                        nxt.append(b)
                    elif vec[b] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok or (vec < 0).any():
            continue
        if np.all(vec[table] == (vec[:, None] + vec[None, :]) % N):
            chars.append(tuple(int(v) for v in vec))
    chars = sorted(set(chars))
    if len(chars) != n:
        raise ComputationError(f"found {len(chars)} characters for an order-{n} abelian group")
    # Trivial character first; classes of an abelian group are singletons in element order.
    chars.sort(key=lambda c: (c != tuple([0] * n), c))
    values = tuple(tuple(Cyclotomic.zeta(N, e) for e in row) for row in chars)
    ct = CharacterTable(g, N, tuple(range(n)), tuple([1] * n), values,
                        abelian_exponents=tuple(chars))
    ct.validate()
    return ct


def _match_columns(g: FiniteGroup, spec_cols):
    """Map template columns (size, element_order) to actual class indices.

    Classes sharing an invariant are matched in order of smallest member; any such
    assignment differs from another by a group automorphism for the shipped fixtures.
    """
    classes = g.conjugacy_classes()
    pool = {}
    for idx, cls in enumerate(classes):
        key = (len(cls), g.element_order(cls[0]))
        pool.setdefault(key, []).append(idx)
    perm = []
    for key in spec_cols:
        if not pool.get(key):
            raise ComputationError(f"no class with invariant {key}")
        perm.append(pool[key].pop(0))
    return classes, perm


def _nonabelian_fixture_rows(name: str):
    """(conductor, template columns as (size, order), integer-or-cyclotomic rows)."""
    if name == "S3":
        cols = [(1, 1), (3, 2), (2, 3)]
        rows = [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
        return 1, cols, rows
    if name in ("D4", "Q8"):
        cols = [(1, 1), (1, 2), (2, 4), (2, 2), (2, 2)] if name == "D4" else \
               [(1, 1), (1, 2), (2, 4), (2, 4), (2, 4)]
        rows = [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1], [1, 1, -1, 1, -1],
                [1, 1, -1, -1, 1], [2, -2, 0, 0, 0]]
        return 1, cols, rows
    if name == "A4":
        w = Cyclotomic.zeta(3)
        w2 = Cyclotomic.zeta(3, 2)
        cols = [(1, 1), (3, 2), (4, 3), (4, 3)]
        rows = [[1, 1, 1, 1], [1, 1, w, w2], [1, 1, w2, w], [3, -1, 0, 0]]
        return 3, cols, rows
    if name == "S4":
        cols = [(1, 1), (6, 2), (3, 2), (8, 3), (6, 4)]
        rows = [[1, 1, 1, 1, 1], [1, -1, 1, 1, -1], [2, 0, 2, -1, 0],
                [3, 1, -1, 0, -1], [3, -1, -1, 0, 1]]
        return 1, cols, rows
    if name == "A5":
        z = Cyclotomic.zeta(5)
        gold = Cyclotomic.one(5) + z + z**4          # (1+sqrt5)/2
        gold_bar = Cyclotomic.one(5) + z**2 + z**3   # (1-sqrt5)/2
        cols = [(1, 1), (15, 2), (20, 3), (12, 5), (12, 5)]
        rows = [[1, 1, 1, 1, 1],
                [3, -1, 0, gold, gold_bar],
                [3, -1, 0, gold_bar, gold],
                [4, 0, 1, -1, -1],
                [5, 1, -1, 0, 0]]
        return 5, cols, rows
    raise InvalidInput(f"no shipped character table for {name!r}")


@lru_cache(maxsize=None)
def fixture_character_table(name: str) -> CharacterTable:
    """Character table of a fixture group (computed for abelian, shipped otherwise)."""
    g = fixture_group(name)
    if g.is_abelian():
        return abelian_character_table(g)
    conductor, cols, rows = _nonabelian_fixture_rows(name)
    classes, perm = _match_columns(g, cols)
    inv = {perm[t]: t for t in range(len(perm))}
    values = []
    for row in rows:
        cyc_row = [v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v, conductor)
                   for v in row]
        values.append(tuple(cyc_row[inv[c]].lift(conductor) for c in range(len(classes))))
    ct = CharacterTable(g, conductor,
                        tuple(cls[0] for cls in classes),
                        tuple(len(cls) for cls in classes),
                        tuple(values))
    ct.validate()
    return ct


def character_table_for(g: FiniteGroup, name_hint: str | None = None) -> CharacterTable:
    """Best available exact table: abelian computation or a fixture lookup by name."""
    if g.is_abelian():
        return abelian_character_table(g)
    if name_hint is not None:
        return fixture_character_table(name_hint)
    raise InvalidInput(
        "exact character table unavailable: group is nonabelian and not a named fixture")
