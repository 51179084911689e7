"""Theorem-level verification on concrete instances: Frobenius divisibility,
equivariantization/extension dimension accounting, the Burnside-style pipeline
for total dimension p^a q^b, divisibility reports, and the dimension-60 analysis.

Reports are three-valued (Verified / Violated / NotApplicable): many clauses are
conditional on structure an instance may lack.  Every Violated finding carries an
exact witness.  Full solvability in the sense of the source theory is not a
function of ring + S-matrix data; report headers say exactly which necessary
conditions are checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationError, InvalidInput, InvalidModuleDims
from .exactnum.cyclotomic import Cyclotomic
from .exactnum.realalg import RealAlgebraic
from .fusionring import FusionRing, fp_dims, DimensionVector
from .modular import (ModularDatum, SLIGHTLY_DEGENERATE, SUPER_TANNAKIAN, TANNAKIAN,
                      CentralizerReport, centralizer, find_symmetric_subrings,
                      mueger_center)
from .structure import all_subrings, invertibles

VERIFIED = "Verified"
VIOLATED = "Violated"
NOT_APPLICABLE = "NotApplicable"


@dataclass
class Finding:
    claim: str
    status: str
    witness: dict = field(default_factory=dict)

    def __str__(self):
        w = f" {self.witness}" if self.witness else ""
        return f"{self.claim}: {self.status}{w}"


@dataclass
class TheoremReport:
    subject: str
    findings: list
    header: str = ""

    def status_of(self, claim: str) -> str:
        for f in self.findings:
            if f.claim == claim:
                return f.status
        raise KeyError(claim)

    @property
    def violated(self):
        return [f for f in self.findings if f.status == VIOLATED]

    def __str__(self):
        lines = [f"subject: {self.subject}"]
        if self.header:
            lines.append(f"note: {self.header}")
        lines.extend(str(f) for f in self.findings)
        return "\n".join(lines)


# -- Frobenius property -------------------------------------------------------------


@dataclass
class ModuleDims:
    """FP dimensions of the simples of an indecomposable module, normalized so that
    the sum of squares equals the acting ring's total FP dimension."""

    parent_total: RealAlgebraic
    dims: tuple

    def validate(self) -> None:
        acc = RealAlgebraic.from_rational(0)
        for d in self.dims:
            if d.sign() <= 0:
                raise InvalidModuleDims("module dimensions must be positive")
            acc = acc + d.square()
        if acc != self.parent_total:
            raise InvalidModuleDims("sum of squared module dims differs from the ring total")


def frobenius_check(ring: FusionRing, module_dims: ModuleDims | None = None,
                    dv: DimensionVector | None = None) -> TheoremReport:
    """FPdim(total)/d is an algebraic integer, for ring simples and module simples."""
    dv = dv or fp_dims(ring)
    findings = []
    failures = []
    for i, d in enumerate(dv.dims):
        if not d.divides(dv.total):
            failures.append(i)
    findings.append(Finding("frobenius.ring", VIOLATED if failures else VERIFIED,
                            {"failures": failures} if failures else {"simples": ring.rank}))
    if module_dims is not None:
        module_dims.validate()
        total_ra = dv.total_real()
        if module_dims.parent_total != total_ra:
            raise InvalidModuleDims("module normalization names a different ring total")
        mod_failures = []
        for i, d in enumerate(module_dims.dims):
            q = total_ra / d
            if not q.is_algebraic_integer():
                mod_failures.append({"index": i, "ratio_minpoly": list(q.minpoly.coeffs)})
        findings.append(Finding("frobenius.module", VIOLATED if mod_failures else VERIFIED,
                                {"failures": mod_failures} if mod_failures else
                                {"simples": len(module_dims.dims)}))
    return TheoremReport(f"ring rank {ring.rank}", findings)


# -- equivariantization / extension accounting ---------------------------------------


@dataclass
class EquivariantizationRecord:
    equivariant_dim: RealAlgebraic    # d_N(X) = deg(pi) [H:Stab] d_N(Y)
    ratio: RealAlgebraic              # d_M(X) / d_N(X) = sqrt([G:H])
    module_dim: RealAlgebraic         # d_M(X)
    total_multiplier: int             # FPdim(C^G) = |G| FPdim(C)


def equivariantization_accounting(group_order: int, subgroup_order: int,
                                  stabilizer_order: int, rep_degree: int,
                                  base_dim) -> EquivariantizationRecord:
    if group_order % subgroup_order != 0:
        raise InvalidInput("subgroup order must divide the group order")
    if subgroup_order % stabilizer_order != 0:
        raise InvalidInput("stabilizer order must divide the subgroup order")
    if rep_degree < 1:
        raise InvalidInput("representation degree must be positive")
    base = base_dim if isinstance(base_dim, RealAlgebraic) else RealAlgebraic.from_rational(base_dim)
    dn = base * (rep_degree * (subgroup_order // stabilizer_order))
    ratio = RealAlgebraic.sqrt_of(Fraction(group_order, subgroup_order))
    return EquivariantizationRecord(dn, ratio, ratio * dn, group_order)


@dataclass
class OrbitDatum:
    stabilizer_order: int
    rep_degrees: tuple
    base_dim: RealAlgebraic


def equivariantization_inventory_check(group_order: int, subgroup_order: int,
                                       orbits) -> TheoremReport:
    """Full-inventory identity: sum deg(pi)^2 [H:Stab]^2 d_Y^2 = |H| FPdim(C).

    A complete inventory also satisfies sum_pi deg(pi)^2 = |Stab| per orbit; the
    base total FPdim(C) is recovered as sum over orbits of [H:Stab] d_Y^2.
    """
    if group_order % subgroup_order != 0:
        raise InvalidInput("subgroup order must divide the group order")
    h = subgroup_order
    findings = []
    base_total = RealAlgebraic.from_rational(0)
    lhs = RealAlgebraic.from_rational(0)
    for t, orb in enumerate(orbits):
        if h % orb.stabilizer_order != 0:
            raise InvalidInput(f"orbit {t}: stabilizer must divide |H|")
        if sum(d * d for d in orb.rep_degrees) != orb.stabilizer_order:
            findings.append(Finding("equivariantization.rep_inventory", VIOLATED,
                                    {"orbit": t, "degrees": list(orb.rep_degrees)}))
            continue
        idx = h // orb.stabilizer_order
        base_total = base_total + orb.base_dim.square() * idx
        for deg in orb.rep_degrees:
            lhs = lhs + orb.base_dim.square() * (deg * deg * idx * idx)
    if not any(f.status == VIOLATED for f in findings):
        findings.append(Finding("equivariantization.rep_inventory", VERIFIED,
                                {"orbits": len(list(orbits))}))
        ok = lhs == base_total * h
        findings.append(Finding("equivariantization.sum_identity",
                                VERIFIED if ok else VIOLATED,
                                {} if ok else {"lhs": repr(lhs), "rhs": repr(base_total * h)}))
        ratio = RealAlgebraic.sqrt_of(Fraction(group_order, subgroup_order))
        findings.append(Finding("equivariantization.module_ratio", VERIFIED,
                                {"ratio_squared": str(Fraction(group_order, subgroup_order)),
                                 "ratio_minpoly": list(ratio.minpoly.coeffs)}))
    return TheoremReport(f"equivariantization |G|={group_order}, |H|={subgroup_order}", findings)


@dataclass
class ExtensionRecord:
    extension_total: RealAlgebraic       # |G| * base_total
    component_inflation: RealAlgebraic   # sqrt(|H|)
    combined_ratio: RealAlgebraic        # (|G|/sqrt(|H|)) * (base_total / base_dim)


def extension_accounting(group_order: int, subgroup_order: int,
                         base_total, base_dim) -> ExtensionRecord:
    if group_order % subgroup_order != 0:
        raise InvalidInput("subgroup order must divide the group order")
    bt = base_total if isinstance(base_total, RealAlgebraic) else RealAlgebraic.from_rational(base_total)
    bd = base_dim if isinstance(base_dim, RealAlgebraic) else RealAlgebraic.from_rational(base_dim)
    inflation = RealAlgebraic.sqrt_of(subgroup_order)
    combined = (bt / bd) * (RealAlgebraic.from_rational(group_order) / inflation)
    return ExtensionRecord(bt * group_order, inflation, combined)


# -- decompositions and candidate dimensions -----------------------------------------


def decomposition_search(total: int, parts) -> list:
    """All multisets from `parts` summing to `total`, as descending tuples in
    lexicographic order; exhaustive."""
    parts = sorted(set(int(p) for p in parts), reverse=True)
    if not parts:
        raise InvalidInput("parts must be nonempty")
    if any(p <= 0 for p in parts):
        raise InvalidInput("parts must be positive")
    out = []

    def rec(remaining, start, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for t in range(start, len(parts)):
            p = parts[t]
            if p <= remaining:
                acc.append(p)
                rec(remaining - p, t, acc)
                acc.pop()

    rec(int(total), 0, [])
    out.sort()
    return out


def candidate_dims(total: int, nondegenerate: bool) -> set:
    """Admissible integer simple dimensions: d^2 | total (non-degenerate case) or
    d | total (the coarser braided filter)."""
    if total < 1:
        raise InvalidInput("total must be positive")
    if nondegenerate:
        return {d for d in range(1, total + 1) if d * d <= total and total % (d * d) == 0}
    return {d for d in range(1, total + 1) if total % d == 0}


def factor_integer(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- divisibility reports -------------------------------------------------------------


def _integer_dims(md: ModularDatum):
    dims = []
    for i in range(md.rank):
        d = md.dim(i)
        if not d.is_rational() or d.as_fraction().denominator != 1:
            return None
        dims.append(int(d.as_fraction()))
    return dims


def _dims_squared(md: ModularDatum):
    out = []
    for i in range(md.rank):
        sq = md.dim(i) * md.dim(i)
        if not sq.is_rational() or sq.as_fraction().denominator != 1:
            return None
        out.append(int(sq.as_fraction()))
    return out


def divisibility_report(md: ModularDatum) -> TheoremReport:
    """divis.i: D^2/d_X^2 integral for weakly integral non-degenerate data.
    divis.ii: total^2/d_X^2 integral for weakly integral braided data (the exact
    form of 'FPdim(C)/FPdim(X) is the square root of an integer')."""
    findings = []
    total = md.total()
    if not total.is_rational() or total.as_fraction().denominator != 1:
        findings.append(Finding("divis.i", NOT_APPLICABLE, {"reason": "total not an integer"}))
        findings.append(Finding("divis.ii", NOT_APPLICABLE, {"reason": "total not an integer"}))
        return TheoremReport("divisibility", findings)
    tot = int(total.as_fraction())
    d2 = _dims_squared(md)
    if d2 is None:
        raise ComputationError("weakly integral datum with non-integral squared dimension")
    if md.braided_only:
        findings.append(Finding("divis.i", NOT_APPLICABLE, {"reason": "datum not non-degenerate"}))
    else:
        bad = [i for i, s in enumerate(d2) if tot % s != 0]
        findings.append(Finding("divis.i", VIOLATED if bad else VERIFIED,
                                {"failures": bad} if bad else {"total": tot}))
    bad2 = [i for i, s in enumerate(d2) if (tot * tot) % s != 0]
    findings.append(Finding("divis.ii", VIOLATED if bad2 else VERIFIED,
                            {"failures": bad2} if bad2 else {"total": tot}))
    return TheoremReport("divisibility", findings)


# -- the Burnside-style pipeline -------------------------------------------------------


BURNSIDE_HEADER = ("necessary conditions only: solvability itself depends on "
                   "equivariantization data not recoverable from ring + S-matrix input")


def burnside_report(md: ModularDatum) -> TheoremReport:
    """The p^a q^b pipeline: nontrivial invertibles, prime-power-dimension simples
    force symmetric subrings, degeneracy of the invertible span and its center,
    and the Tannakian/SuperVec case analysis."""
    dims = _integer_dims(md)
    if dims is None:
        raise InvalidInput("burnside_report requires an integral ring")
    total = md.total()
    tot = int(total.as_fraction())
    primes = factor_integer(tot)
    subject = f"rank {md.rank}, total {tot}"
    if len(primes) > 2:
        return TheoremReport(subject,
                             [Finding("burnside.applicable", NOT_APPLICABLE,
                                      {"total": tot, "primes": sorted(primes)})],
                             header=BURNSIDE_HEADER)
    findings = [Finding("burnside.applicable", VERIFIED, {"total": tot, "primes": sorted(primes)})]
    inv = invertibles(md.ring)
    nondeg = not md.braided_only and mueger_center(md).degeneracy == "NonDegenerate"

    # (1) Prop invob: a nontrivial invertible object exists.
    if tot == 1 or not nondeg:
        findings.append(Finding("invob", NOT_APPLICABLE,
                                {"reason": "trivial total" if tot == 1
                                 else "not non-degenerate"}))
    else:
        ok = inv.subring.rank > 1
        findings.append(Finding("invob", VERIFIED if ok else VIOLATED,
                                {"invertibles": list(inv.subring.members)}))

    # (2) Cor primpow: a prime-power-dimension simple forces a symmetric subring.
    pp = [i for i, d in enumerate(dims) if d > 1 and len(factor_integer(d)) == 1]
    if nondeg and pp:
        sym = [rep for rep in find_symmetric_subrings(md) if len(rep.subset) > 1]
        findings.append(Finding("primpow", VERIFIED if sym else VIOLATED,
                                {"prime_power_simples": pp,
                                 "symmetric_subrings": [list(r.subset) for r in sym]}))
    else:
        findings.append(Finding("primpow", NOT_APPLICABLE,
                                {"reason": "no prime-power simples" if nondeg
                                 else "not non-degenerate"}))

    # (3) Degeneracy class of the invertible span and of its center.
    if inv.pointed:
        findings.append(Finding("burnside.invertible_span", NOT_APPLICABLE,
                                {"reason": "ring is pointed"}))
        findings.append(Finding("burnside.center_class", NOT_APPLICABLE,
                                {"reason": "ring is pointed"}))
        chi_center = None
    else:
        b_members = inv.subring.members
        b_center = tuple(sorted(y for y in b_members
                                if all(md.s(x, y) == md.dim(x) * md.dim(y) for x in b_members)))
        degenerate = len(b_center) > 1
        # In a non-degenerate non-pointed p^a q^b datum the span must be degenerate,
        # else E = B x B' with B' lacking invertibles, contradicting invob.
        findings.append(Finding("burnside.invertible_span",
                                VERIFIED if (not nondeg or degenerate) else VIOLATED,
                                {"span": list(b_members), "center": list(b_center)}))
        chi_center = None
        if not degenerate:
            findings.append(Finding("burnside.center_class", NOT_APPLICABLE,
                                    {"reason": "invertible span non-degenerate"}))
        else:
            zdim = len(b_center)
            if zdim > 2:
                tann = None
                if md.T is not None:
                    sub = [y for y in b_center if md.T[y] == Cyclotomic.one(md.conductor)]
                    tann = [y for y in sub if y != md.ring.unit]
                status = VERIFIED if (tann is None or tann) else VIOLATED
                findings.append(Finding("burnside.center_class", status,
                                        {"branch": "pointed symmetric center > 2",
                                         "tannakian_witness": tann}))
            else:
                chi = next(y for y in b_center if y != md.ring.unit)
                theta = None if md.T is None else md.T[chi]
                if theta is not None and theta == -Cyclotomic.one(md.conductor):
                    branch = "SuperVec center"
                    chi_center = chi
                else:
                    branch = "Tannakian rank-2 center" if theta is not None else "width-2, no T"
                findings.append(Finding("burnside.center_class", VERIFIED,
                                        {"branch": branch, "chi": chi}))

    # (4) Slightly degenerate width-2 center with an odd-prime-power simple:
    #     a symmetric-subring candidate for the Tannakian conclusion.
    if chi_center is None:
        findings.append(Finding("almnontan.candidate", NOT_APPLICABLE,
                                {"reason": "no SuperVec-type center in the invertible span"}))
    else:
        cent = centralizer(md, (chi_center,))
        odd_pp = [i for i in cent.centralizer.members
                  if dims[i] > 1 and len(factor_integer(dims[i])) == 1
                  and dims[i] % 2 == 1]
        if not odd_pp:
            findings.append(Finding("almnontan.candidate", NOT_APPLICABLE,
                                    {"reason": "no odd-prime-power simple in the centralizer"}))
        else:
            members = set(cent.centralizer.members)
            sym = [rep for rep in find_symmetric_subrings(md)
                   if len(rep.subset) > 1 and set(rep.subset) <= members]
            findings.append(Finding("almnontan.candidate", VERIFIED if sym else VIOLATED,
                                    {"odd_prime_power_simples": odd_pp,
                                     "candidates": [list(r.subset) for r in sym]}))

    # Theorem's conclusion, checked whenever a witness is found.
    tann_reps = [rep for rep in find_symmetric_subrings(md)
                 if len(rep.subset) > 1 and rep.tannakian_flag == TANNAKIAN]
    hypotheses = nondeg and not inv.pointed and tot > 1
    if tann_reps:
        findings.append(Finding("integ.tannakian", VERIFIED,
                                {"subrings": [list(r.subset) for r in tann_reps]}))
    elif hypotheses:
        findings.append(Finding("integ.tannakian", VIOLATED, {}))
    else:
        findings.append(Finding("integ.tannakian", NOT_APPLICABLE,
                                {"reason": "hypotheses (non-pointed, non-degenerate) unmet"}))
    return TheoremReport(subject, findings, header=BURNSIDE_HEADER)


# -- dimension 60 -----------------------------------------------------------------------


DIM60_PARTS = (6, 10, 15, 30)


def dim60_allowed_dims() -> set:
    """Nontrivial simple dimensions admissible in a simple non-degenerate center of
    a dimension-60 category: divisors d of 60 with d^2 | 3600, excluding 1, prime
    powers (they force symmetric subrings), 60/3 and 60/5 (column-orthogonality
    exclusions), and 60 itself (size)."""
    cands = candidate_dims(3600, True)
    out = set()
    for d in sorted(cands):
        if d == 1 or d == 60 or d in (12, 20):
            continue
        if len(factor_integer(d)) == 1:
            continue
        if 60 % d == 0:
            out.add(d)
    return out


def dim60_analysis(md=None, center_candidate_dims=None) -> TheoremReport:
    """Replay the checkable steps of the dimension-60 argument on an instance.

    Either a validated total-60 datum (md) or, for the center-candidate branch, a
    bare dimension pattern whose entries sum to 60 (the unit-object decomposition
    of the would-be center of total 3600).
    """
    findings = []
    if center_candidate_dims is not None:
        pattern = sorted(int(d) for d in center_candidate_dims)
        if sum(pattern) != 60 or pattern[0] != 1:
            return TheoremReport("dim60 center candidate",
                                 [Finding("dim60.applicable", NOT_APPLICABLE,
                                          {"reason": "pattern must contain 1 and sum to 60"})])
        findings.append(Finding("dim60.applicable", VERIFIED, {"pattern": pattern}))
        allowed = dim60_allowed_dims()
        nontrivial = [d for d in pattern if d != 1]
        bad = sorted(set(d for d in nontrivial if d not in allowed))
        findings.append(Finding("dim60.dims_allowed", VIOLATED if bad else VERIFIED,
                                {"allowed": sorted(allowed), "offending": bad}))
        decomps = decomposition_search(59, DIM60_PARTS)
        unique = len(decomps) == 1
        matches = tuple(sorted(nontrivial, reverse=True)) in decomps
        findings.append(Finding("dim60.decomp59",
                                VERIFIED if (unique and matches) else VIOLATED,
                                {"decompositions": [list(d) for d in decomps]}))
        n_simples = 1 + len(decomps[0]) if decomps else 0
        findings.append(Finding("dim60.eight_simples",
                                VERIFIED if (unique and len(pattern) >= 8 and n_simples >= 8)
                                else VIOLATED,
                                {"summands": len(pattern)}))
        return TheoremReport("dim60 center candidate", findings)

    if md is None:
        raise InvalidInput("dim60_analysis needs a datum or a center-candidate pattern")
    total = md.total()
    if not total.is_rational() or total.as_fraction() != 60:
        return TheoremReport("dim60", [Finding("dim60.applicable", NOT_APPLICABLE,
                                               {"reason": "total is not 60"})])
    dims = _integer_dims(md)
    if dims is None:
        return TheoremReport("dim60", [Finding("dim60.applicable", NOT_APPLICABLE,
                                               {"reason": "ring not integral"})])
    findings.append(Finding("dim60.applicable", VERIFIED, {"dims": sorted(dims)}))
    lattice = all_subrings(md.ring)
    simple = lattice.is_simple

    two_dim = [i for i, d in enumerate(dims) if d == 2]
    if two_dim:
        # An integral simple fusion category cannot contain a 2-dimensional simple:
        # the instance is excluded from the simple branch.
        findings.append(Finding("dim60.no_dim2", VIOLATED if simple else VERIFIED,
                                {"dim2_simples": two_dim, "ring_simple": simple,
                                 "note": "exclusion clause fired"}))
    else:
        findings.append(Finding("dim60.no_dim2", VERIFIED, {"dim2_simples": []}))

    # Symmetric total-60 instances with prime-power simples occupy the Rep(A5)-style
    # branch: the category cannot be non-degenerate (primpow + simplicity).
    symmetric = all(md.s(i, j) == md.dim(i) * md.dim(j)
                    for i in range(md.rank) for j in range(md.rank))
    pp = [i for i, d in enumerate(dims) if d > 1 and len(factor_integer(d)) == 1]
    if symmetric:
        consistent = bool(pp) and sum(d * d for d in dims) == 60
        findings.append(Finding("dim60.symmetric_branch",
                                VERIFIED if consistent else VIOLATED,
                                {"prime_power_simples": pp, "ring_simple": simple}))
    else:
        findings.append(Finding("dim60.symmetric_branch", NOT_APPLICABLE, {}))
    return TheoremReport("dim60", findings)
