"""Constructors for the instances the library reasons about: group rings,
character rings, Drinfeld-double modular data, pointed braided data from
quadratic forms, and Tambara-Yamagami rings.

The double's structure constants are computed independently of its S-matrix
(via equivariant convolution characters on commuting pairs), so the Verlinde
round-trip performed at validation is a genuine consistency check.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import (ComputationError, InvalidInput, InvalidQuadraticForm,
                      ResourceLimit)
from ..exactnum.cyclotomic import Cyclotomic
from ..fusionring import FusionRing
from ..modular import ModularDatum, validate_modular
from .chartable import CharacterTable, abelian_character_table, character_table_for
from .groups import FiniteGroup

DOUBLE_ORDER_CAP = 24


def group_ring(g: FiniteGroup) -> FusionRing:
    """The pointed ring Z[G]: basis = elements, product = group law, dual = inverse."""
    nconst = {(a, b, g.op(a, b)): 1 for a in range(g.order) for b in range(g.order)}
    labels = [f"g{a}" for a in range(g.order)]
    return FusionRing(g.order, labels, 0, [g.inv(a) for a in range(g.order)], nconst)


def character_ring(ct: CharacterTable) -> FusionRing:
    """The representation ring: N_{ij}^k = <chi_i chi_j, chi_k>, exactly."""
    ct.validate()
    r = ct.n_classes
    order = ct.group_order
    nconst = {}
    for i in range(r):
        for j in range(r):
            for k in range(r):
                acc = Cyclotomic.zero(ct.conductor)
                for c in range(r):
                    acc = acc + ct.class_sizes[c] * (
                        ct.values[i][c] * ct.values[j][c] * ct.values[k][c].conj())
                if not acc.is_rational():
                    raise InvalidInput(f"non-rational inner product at {(i, j, k)}")
                val = acc.as_fraction() / order
                if val.denominator != 1 or val < 0:
                    raise InvalidInput(f"inner product {val} at {(i, j, k)} is not a "
                                       "nonnegative integer")
                if val:
                    nconst[(i, j, k)] = int(val)
    dual = [ct.conjugate_row_index(i) for i in range(r)]
    labels = [f"chi{i}" for i in range(r)]
    unit = 0
    return FusionRing(r, labels, unit, dual, nconst)


def tambara_yamagami_ring(a: FiniteGroup) -> FusionRing:
    """Basis A u {m}: group law on A, a*m = m*a = m, m*m = sum of A."""
    if not a.is_abelian():
        raise InvalidInput("Tambara-Yamagami requires an abelian group")
    n = a.order
    m = n
    nconst = {(x, y, a.op(x, y)): 1 for x in range(n) for y in range(n)}
    for x in range(n):
        nconst[(x, m, m)] = 1
        nconst[(m, x, m)] = 1
        nconst[(m, m, x)] = 1
    labels = [f"a{x}" for x in range(n)] + ["m"]
    dual = [a.inv(x) for x in range(n)] + [m]
    return FusionRing(n + 1, labels, 0, dual, nconst)


def pointed_braided(a: FiniteGroup, q_values) -> ModularDatum:
    """Braided pointed datum from a quadratic form Q on an abelian group.

    q_values: map/sequence element -> Cyclotomic root of unity with Q(0) = 1 and
    Q(-x) = Q(x); the associated b(x,y) = Q(x+y)/(Q(x)Q(y)) must be bimultiplicative.
    """
    if not a.is_abelian():
        raise InvalidInput("pointed_braided requires an abelian group")
    n = a.order
    q = [q_values[x] for x in range(n)]
    conductor = 1
    for v in q:
        conductor = conductor * v.n // math.gcd(conductor, v.n)
    q = [v.lift(conductor) for v in q]
    one = Cyclotomic.one(conductor)
    if q[0] != one:
        raise InvalidQuadraticForm("Q(0) must be 1")
    for x in range(n):
        if q[a.inv(x)] != q[x]:
            raise InvalidQuadraticForm(f"Q(-x) != Q(x) at x={x}")
    b = [[q[a.op(x, y)] / (q[x] * q[y]) for y in range(n)] for x in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if b[x][a.op(y, z)] != b[x][y] * b[x][z]:
                    raise InvalidQuadraticForm(
                        f"b is not bimultiplicative at ({x},{y},{z})")
    radical = [x for x in range(n) if all(b[x][y] == one for y in range(n))]
    md = ModularDatum(group_ring(a), conductor, b, T=q,
                      braided_only=(len(radical) > 1))
    report = validate_modular(md)
    if not report.ok:
        raise ComputationError(f"pointed braided datum failed validation: {report}")
    return md


def radical_of_form(a: FiniteGroup, q_values):
    """Brute-force radical of b over A x A (independent of pointed_braided internals)."""
    n = a.order
    conductor = 1
    for x in range(n):
        conductor = conductor * q_values[x].n // math.gcd(conductor, q_values[x].n)
    q = [q_values[x].lift(conductor) for x in range(n)]

    def b(x, y):
        return q[a.op(x, y)] / (q[x] * q[y])

    one = Cyclotomic.one(conductor)
    return tuple(x for x in range(n) if all(b(x, y) == one for y in range(n)))


# -- Drinfeld double ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _double_cached(name: str):
    from .groups import fixture_group

    return _drinfeld_double(fixture_group(name), name_hint=name)


def drinfeld_double_modular(g: FiniteGroup, name_hint: str | None = None,
                            order_cap: int = DOUBLE_ORDER_CAP) -> ModularDatum:
    """Modular datum of the double of G: simples are (class, centralizer irrep) pairs.

    Centralizer character tables must be exactly computable: the group's own table
    (fixture or abelian) or an abelian centralizer.
    """
    if g.order > order_cap:
        raise ResourceLimit(f"group order {g.order} exceeds double cap {order_cap}")
    if name_hint is not None:
        return _double_cached(name_hint)
    return _drinfeld_double(g, name_hint=None)


def _drinfeld_double(g: FiniteGroup, name_hint: str | None) -> ModularDatum:
    if g.is_abelian():
        md = _abelian_double(g)
    else:
        md = _nonabelian_double(g, name_hint)
    report = validate_modular(md)
    if not report.ok:
        raise ComputationError(f"double failed validation: {report}")
    return md


def _abelian_double(g: FiniteGroup) -> ModularDatum:
    """For abelian G the double is pointed on G x Ghat with s = conj(chi(b) psi(a))."""
    ct = abelian_character_table(g)
    n = g.order
    N = ct.conductor
    exps = ct.abelian_exponents
    row_of = {row: k for k, row in enumerate(exps)}

    def chr_mul(i, j):
        return row_of[tuple((a + b) % N for a, b in zip(exps[i], exps[j]))]

    def chr_inv(i):
        return row_of[tuple((-a) % N for a in exps[i])]

    pairs = [(a, i) for a in range(n) for i in range(n)]
    index = {p: t for t, p in enumerate(pairs)}
    rank = n * n
    nconst = {}
    for (a, i) in pairs:
        for (b, j) in pairs:
            nconst[(index[(a, i)], index[(b, j)], index[(g.op(a, b), chr_mul(i, j))])] = 1
    dual = [index[(g.inv(a), chr_inv(i))] for (a, i) in pairs]
    labels = [f"c{a}w{i}" for (a, i) in pairs]
    ring = FusionRing(rank, labels, index[(0, 0)], dual, nconst)
    S = [[Cyclotomic.zeta(N, -(exps[i][b] + exps[j][a]))
          for (b, j) in pairs] for (a, i) in pairs]
    T = [Cyclotomic.zeta(N, exps[i][a]) for (a, i) in pairs]
    return ModularDatum(ring, conductor=N, S=S, T=T)


def _nonabelian_double(g: FiniteGroup, name_hint: str | None) -> ModularDatum:
    classes = g.conjugacy_classes()
    own_table = character_table_for(g, name_hint)

    # Per class: representative, centralizer table, conjugators q_x with x = q a q^{-1}.
    blocks = []
    for cls in classes:
        rep = cls[0]
        cent_members = g.centralizer(rep)
        if len(cent_members) == g.order:
            table = own_table
            local = {x: x for x in range(g.order)}
            cent_group = g
        else:
            cent_group = g.subgroup_group(cent_members)
            if not cent_group.is_abelian():
                raise InvalidInput(
                    f"centralizer of element {rep} is a proper nonabelian subgroup; "
                    "its exact character table is not available")
            table = abelian_character_table(cent_group)
            local = {m: t for t, m in enumerate(sorted(cent_members))}
        conjugator = {}
        for x in cls:
            conjugator[x] = next(qq for qq in range(g.order) if g.conj(qq, rep) == x)
        blocks.append({"cls": cls, "rep": rep, "table": table, "local": local,
                       "members": set(cent_members), "conjugator": conjugator})

    conductor = 1
    for b in blocks:
        conductor = conductor * b["table"].conductor // math.gcd(conductor, b["table"].conductor)

    simples = []
    for ci, b in enumerate(blocks):
        for irr in range(b["table"].n_classes):
            simples.append((ci, irr))
    index = {s: t for t, s in enumerate(simples)}
    rank = len(simples)

    def theta_value(ci, irr, x, gg):
        """Character of simple (ci, irr) at the commuting pair (x, gg); 0 off the class."""
        b = blocks[ci]
        if x not in b["cls"]:
            return None
        qx = b["conjugator"][x]
        arg = g.conj(g.inv(qx), gg)
        loc = b["local"][arg]
        return b["table"].value(irr, loc).lift(conductor)

    # Commuting pairs and per-simple character vectors.
    pairs = [(x, gg) for x in range(g.order) for gg in g.centralizer(x)]
    pair_index = {p: t for t, p in enumerate(pairs)}
    zero = Cyclotomic.zero(conductor)
    theta = []
    for (ci, irr) in simples:
        vec = []
        for (x, gg) in pairs:
            v = theta_value(ci, irr, x, gg)
            vec.append(zero if v is None else v)
        theta.append(vec)
    theta_conj = [[v.conj() for v in vec] for vec in theta]

    cent_of = {x: g.centralizer(x) for x in range(g.order)}
    nconst = {}
    for i in range(rank):
        for j in range(rank):
            prod = []
            for (x, gg) in pairs:
                acc = zero
                for uu in cent_of[gg]:
                    a_val = theta[i][pair_index[(uu, gg)]]
                    if a_val.is_zero():
                        continue
                    # v = u^{-1} x lies in C(g) automatically: u and x commute with g.
                    b_val = theta[j][pair_index[(g.op(g.inv(uu), x), gg)]]
                    if not b_val.is_zero():
                        acc = acc + a_val * b_val
                prod.append(acc)
            for k in range(rank):
                acc = zero
                for t, _p in enumerate(pairs):
                    if not prod[t].is_zero() and not theta_conj[k][t].is_zero():
                        acc = acc + prod[t] * theta_conj[k][t]
                val = acc / g.order
                if not val.is_rational():
                    raise ComputationError("double multiplicity is not rational")
                frac = val.as_fraction()
                if frac.denominator != 1 or frac < 0:
                    raise ComputationError(f"double multiplicity {frac} is not admissible")
                if frac:
                    nconst[(i, j, k)] = int(frac)

    labels = [f"c{blocks[ci]['rep']}x{irr}" for (ci, irr) in simples]
    # Dual simple: Theta_{V*}(x, g) = conj(Theta_V(x^{-1}, g)); identified by its
    # character vector (simples are determined by their characters on commuting pairs).
    conj_pair = [pair_index[(g.inv(x), gg)] for (x, gg) in pairs]
    dual = []
    for i in range(rank):
        want = [theta_conj[i][conj_pair[t]] for t in range(len(pairs))]
        found = next((j for j in range(rank)
                      if all(theta[j][t] == want[t] for t in range(len(pairs)))), None)
        if found is None:
            raise ComputationError("dual simple not found in the double")
        dual.append(found)

    unit = index[(0, 0)]
    ring = FusionRing(rank, labels, unit, dual, nconst)

    # S-matrix and twists.
    S = [[zero] * rank for _ in range(rank)]
    for i, (ci, irr_i) in enumerate(simples):
        bi = blocks[ci]
        a_rep = bi["rep"]
        for j, (cj, irr_j) in enumerate(simples):
            bj = blocks[cj]
            b_rep = bj["rep"]
            acc = zero
            for gg in range(g.order):
                bconj = g.conj(gg, b_rep)
                if g.op(a_rep, bconj) != g.op(bconj, a_rep):
                    continue
                chi_arg = bi["local"][bconj]
                psi_arg = bj["local"][g.conj(g.inv(gg), a_rep)]
                acc = acc + (bi["table"].value(irr_i, chi_arg).lift(conductor)
                             * bj["table"].value(irr_j, psi_arg).lift(conductor)).conj()
            scale = Fraction(g.order, len(bi["members"]) * len(bj["members"]))
            S[i][j] = acc * scale
    T = []
    for (ci, irr) in simples:
        b = blocks[ci]
        loc = b["local"][b["rep"]]
        T.append(b["table"].value(irr, loc).lift(conductor)
                 / b["table"].degree(irr))
    return ModularDatum(ring, conductor, S, T)
