"""Named instances: the rings, modular data and groups the test and report
pipelines exercise, addressable as catalog:<family>:<name> from the CLI.

Families:
    group:<name>           fixture groups (trivial, Z2..Z12, Z2xZ2, S3, D4, Q8, A4, S4, A5)
    ring names             trivial | ising | fibonacci | rep:<G> | ty:<abelian G> | group:<G>
    datum names            double:<G> | supervec | semion | pointed:Z3 | sd6 | sym:rep:<G>
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidInput
from ..exactnum.cyclotomic import Cyclotomic
from ..fusionring import FusionRing, deligne_product, fp_dims
from ..modular import ModularDatum, datum_product, validate_modular
from .builders import (character_ring, drinfeld_double_modular, group_ring,
                       pointed_braided, radical_of_form, tambara_yamagami_ring)
from .chartable import (CharacterTable, abelian_character_table,
                        character_table_for, fixture_character_table)
from .groups import (FIXTURE_GROUP_NAMES, FiniteGroup, cyclic, direct_product,
                     exact_factorizations, fixture_group)

__all__ = [
    "CharacterTable", "FiniteGroup", "FIXTURE_GROUP_NAMES",
    "abelian_character_table", "character_ring", "character_table_for", "cyclic",
    "direct_product", "drinfeld_double_modular", "exact_factorizations",
    "fixture_character_table", "fixture_group", "group_ring", "pointed_braided",
    "radical_of_form", "tambara_yamagami_ring",
    "trivial_ring", "ising_ring", "fibonacci_ring", "symmetric_datum",
    "supervec_datum", "rep_z2_datum", "semion_datum", "pointed_z3_datum",
    "slight_degeneracy_fixture", "resolve",
]


def trivial_ring() -> FusionRing:
    return FusionRing(1, ["1"], 0, [0], {(0, 0, 0): 1})


def ising_ring() -> FusionRing:
    """Basis 1, eps, sigma with sigma^2 = 1 + eps."""
    return FusionRing(3, ["1", "eps", "sigma"], 0, [0, 1, 2], {
        (0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1, (1, 0, 1): 1, (2, 0, 2): 1,
        (1, 1, 0): 1, (1, 2, 2): 1, (2, 1, 2): 1, (2, 2, 0): 1, (2, 2, 1): 1})


def fibonacci_ring() -> FusionRing:
    """Basis 1, tau with tau^2 = 1 + tau."""
    return FusionRing(2, ["1", "tau"], 0, [0, 1], {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1})


def symmetric_datum(ring: FusionRing) -> ModularDatum:
    """The symmetric braided datum of an integral ring: s_{X,Y} = d_X d_Y, twists 1."""
    dv = fp_dims(ring)
    dims = []
    for i, d in enumerate(dv.dims):
        if not d.is_rational_integer():
            raise InvalidInput("symmetric datum requires an integral ring")
        dims.append(int(d.as_fraction()))
    one = Cyclotomic.one(1)
    S = [[Cyclotomic.from_rational(dims[i] * dims[j]) for j in range(ring.rank)]
         for i in range(ring.rank)]
    T = [one] * ring.rank
    return ModularDatum(ring, 1, S, T, braided_only=True)


def supervec_datum() -> ModularDatum:
    """Rank 2, S all-ones, twists (1, -1)."""
    z2 = cyclic(2)
    q = {0: Cyclotomic.one(2), 1: Cyclotomic.from_rational(-1, 2)}
    return pointed_braided(z2, q)


def rep_z2_datum() -> ModularDatum:
    """Same S-matrix as SuperVec but Tannakian twists (1, 1)."""
    sv = supervec_datum()
    one = Cyclotomic.one(sv.conductor)
    return ModularDatum(sv.ring, sv.conductor, sv.S, [one, one], braided_only=True)


def semion_datum() -> ModularDatum:
    """Non-degenerate pointed Z/2 datum from Q(1) = i."""
    z2 = cyclic(2)
    q = {0: Cyclotomic.one(4), 1: Cyclotomic.zeta(4)}
    return pointed_braided(z2, q)


def pointed_z3_datum() -> ModularDatum:
    """Non-degenerate pointed Z/3 datum from Q(1) = Q(2) = zeta_3."""
    z3 = cyclic(3)
    q = {0: Cyclotomic.one(3), 1: Cyclotomic.zeta(3), 2: Cyclotomic.zeta(3)}
    return pointed_braided(z3, q)


def slight_degeneracy_fixture() -> ModularDatum:
    """SuperVec (x) nondegenerate pointed Z/3: the slightly degenerate instance."""
    return datum_product(supervec_datum(), pointed_z3_datum())


def _rep_ring(name: str) -> FusionRing:
    if name == "S3xZ10":
        return deligne_product(character_ring(fixture_character_table("S3")),
                               character_ring(fixture_character_table("Z10")))
    return character_ring(fixture_character_table(name))


def resolve(spec: str):
    """Resolve a catalog address (without the leading 'catalog:') to
    ('ring'|'datum'|'group', object)."""
    spec = spec.strip()
    if spec.startswith("group:"):
        return "group", fixture_group(spec.split(":", 1)[1])
    if spec.startswith("double:"):
        name = spec.split(":", 1)[1]
        return "datum", drinfeld_double_modular(fixture_group(name), name)
    if spec.startswith("sym:rep:"):
        return "datum", symmetric_datum(_rep_ring(spec.split(":", 2)[2]))
    if spec.startswith("rep:"):
        return "ring", _rep_ring(spec.split(":", 1)[1])
    if spec.startswith("ty:"):
        return "ring", tambara_yamagami_ring(fixture_group(spec.split(":", 1)[1]))
    if spec == "trivial":
        return "ring", trivial_ring()
    if spec == "ising":
        return "ring", ising_ring()
    if spec == "fibonacci":
        return "ring", fibonacci_ring()
    if spec == "repA5":
        return "ring", _rep_ring("A5")
    if spec == "supervec":
        return "datum", supervec_datum()
    if spec == "repZ2":
        return "datum", rep_z2_datum()
    if spec == "semion":
        return "datum", semion_datum()
    if spec == "pointed:Z3":
        return "datum", pointed_z3_datum()
    if spec == "sd6":
        return "datum", slight_degeneracy_fixture()
    raise InvalidInput(f"unknown catalog address {spec!r}")
