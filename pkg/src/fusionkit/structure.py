"""Structural invariants of a fusion ring: subring lattice, adjoint chain,
universal grading, nilpotency and cyclic-nilpotency certificates, invertibles.

All member sets are index sets into the parent ring; outputs are deterministic
(sorted members, canonical component numbering).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog.groups import FiniteGroup
from .errors import ComputationError, ResourceLimit
from .fusionring import FusionRing

SUBRING_RANK_CAP = 24


@dataclass(frozen=True)
class Subring:
    """A fusion-closed, dual-closed index set containing the unit."""

    parent: FusionRing = field(compare=False)
    members: tuple

    @property
    def rank(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return self.members == (self.parent.unit,)

    def is_whole(self) -> bool:
        return self.rank == self.parent.rank

    def ring(self) -> FusionRing:
        return self.parent.restrict(self.members)

    def __contains__(self, i: int) -> bool:
        return i in set(self.members)

    def __le__(self, other: "Subring") -> bool:
        return set(self.members) <= set(other.members)

    def __repr__(self):
        return f"Subring({list(self.members)})"


def _close(ring: FusionRing, seed) -> tuple:
    n = ring.dense()
    members = {ring.unit}
    members.update(int(s) for s in seed)
    members.update(ring.dual[s] for s in list(members))
    frontier = sorted(members)
    while frontier:
        new = set()
        for i in frontier:
            for j in members:
                for k in (np.nonzero(n[i, j])[0]):
                    k = int(k)
                    if k not in members:
                        new.add(k)
                        new.add(ring.dual[k])
        new -= members
        members |= new
        frontier = sorted(new)
    return tuple(sorted(members))


def subring_generated(ring: FusionRing, seed) -> Subring:
    """Least subring containing the seed: closure under fusion constituents and duals."""
    return Subring(ring, _close(ring, seed))


def adjoint_subring(ring: FusionRing) -> Subring:
    """Subring generated by all constituents of X_i (x) X_{i*}."""
    n = ring.dense()
    seed = set()
    for i in range(ring.rank):
        seed.update(int(k) for k in np.nonzero(n[i, ring.dual[i]])[0])
    return subring_generated(ring, seed)


@dataclass
class GradingGroup:
    """The universal grading: a finite group on component labels plus the assignment."""

    group: FiniteGroup           # components as elements 0..m-1, identity = component of unit
    component_of: tuple          # basis index -> component
    components: tuple            # component -> sorted tuple of basis indices

    @property
    def order(self) -> int:
        return self.group.order

    def is_trivial(self) -> bool:
        return self.order == 1

    def trivial_component_members(self) -> tuple:
        return self.components[0]

    def __repr__(self):
        return f"GradingGroup(order={self.order}, components={self.components})"


def universal_grading(ring: FusionRing) -> GradingGroup:
    """Finest faithful grading: components are classes of i ~ j iff some constituent
    of X_i (x) X_{j*} lies in the adjoint subring; law verified before returning."""
    r = ring.rank
    n = ring.dense()
    adj = adjoint_subring(ring)
    adj_mask = np.zeros(r, dtype=bool)
    adj_mask[list(adj.members)] = True

    dual = np.array(ring.dual)
    # related[i, j] = some k with N_{i, j*}^k > 0 lies in the adjoint subring
    related = (n[:, dual, :][:, :, adj_mask].sum(axis=2) > 0)

    parent = list(range(r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i, j in np.argwhere(related):
        union(int(i), int(j))

    reps = sorted({find(i) for i in range(r)})
    unit_rep = find(ring.unit)
    reps = [unit_rep] + [x for x in reps if x != unit_rep]
    comp_index = {rep: c for c, rep in enumerate(reps)}
    component_of = tuple(comp_index[find(i)] for i in range(r))
    m = len(reps)
    components = tuple(tuple(i for i in range(r) if component_of[i] == c) for c in range(m))

    # Induced multiplication on components, with a full consistency check.
    table = np.full((m, m), -1, dtype=np.int64)
    for (i, j, k), _v in ring.nconst.items():
        ci, cj, ck = component_of[i], component_of[j], component_of[k]
        if table[ci, cj] == -1:
            table[ci, cj] = ck
        elif table[ci, cj] != ck:
            raise ComputationError(
                f"inconsistent component product at ({i},{j},{k}); ring is not a valid fusion ring")
    if (table < 0).any():
        raise ComputationError("component product table is incomplete")
    group = FiniteGroup(table.tolist(), name="U")

    # Grading law and dual inversion (faithfulness holds by construction).
    for i in range(r):
        if component_of[ring.dual[i]] != group.inv(component_of[i]):
            raise ComputationError(f"dual of {i} lands outside the inverse component")
    if set(components[0]) != set(adj.members):
        raise ComputationError("trivial component differs from the adjoint subring")
    return GradingGroup(group, component_of, components)


NILPOTENT = "Nilpotent"
NOT_NILPOTENT = "NotNilpotent"


@dataclass
class NilpotencyVerdict:
    verdict: str
    nilpotency_class: int | None
    chain: list       # list of Subring, starting at the whole ring, strictly decreasing

    def __repr__(self):
        cls = f", class={self.nilpotency_class}" if self.nilpotency_class is not None else ""
        return f"NilpotencyVerdict({self.verdict}{cls}, chain={[s.members for s in self.chain]})"


def nilpotency_series(ring: FusionRing) -> NilpotencyVerdict:
    """Iterated adjoint chain C >= C_ad >= ... until stabilization."""
    chain = [Subring(ring, tuple(range(ring.rank)))]
    while True:
        cur = chain[-1]
        sub = cur.ring()
        adj_local = adjoint_subring(sub)
        members = tuple(sorted(cur.members[t] for t in adj_local.members))
        if members == cur.members:
            verdict = NILPOTENT if cur.rank == 1 else NOT_NILPOTENT
            cls = len(chain) - 1 if verdict == NILPOTENT else None
            return NilpotencyVerdict(verdict, cls, chain)
        chain.append(Subring(ring, members))


@dataclass
class CyclicStep:
    """One peeling step: the graded subring, the prime quotient, the component map."""

    members: tuple            # parent indices of the graded ring R_m
    prime: int
    component_of: tuple       # position in members -> Z/prime label (trivial component = 0)


@dataclass
class CyclicCertificate:
    """Ring-level certificate: chain trivial = R_0 c R_1 c ... c R_n = ring, each R_m
    faithfully graded by Z/prime with trivial component R_{m-1}.  Steps are listed
    outermost first (the first step peels the whole ring)."""

    ok: bool
    steps: list
    scope: str = "ring-level"

    @property
    def quotient_orders(self):
        return [s.prime for s in self.steps]

    def __repr__(self):
        if not self.ok:
            return "CyclicCertificate(NotCyclicallyNilpotent)"
        return f"CyclicCertificate(quotients={self.quotient_orders}, scope={self.scope})"


def _prime_index_normal_subgroups(group: FiniteGroup):
    """(members, prime) for every normal subgroup of prime index, smallest prime first,
    then lexicographic member order."""
    out = []
    for sub in group.subgroups(cap=max(group.order, 1)):
        idx = group.order // len(sub)
        if idx >= 2 and _is_prime(idx) and group.is_normal(sub):
            out.append((tuple(sorted(sub)), idx))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cyclic_nilpotency_certificate(ring: FusionRing) -> CyclicCertificate:
    """Search for a chain of faithful prime-cyclic gradings reducing the ring to trivial.

    Recursion: over normal subgroups K of the universal grading group with prime
    cyclic quotient, take the sub-sum of components over K and recurse; backtracks
    over all branches before refusing.
    """

    def search(members: tuple):
        if len(members) == 1:
            return []
        sub = ring.restrict(members)
        grading = universal_grading(sub)
        if grading.is_trivial():
            return None
        for k_members, p in _prime_index_normal_subgroups(grading.group):
            cosets, coset_of = grading.group.quotient_map(k_members)
            inner = tuple(sorted(members[t] for t in range(len(members))
                                 if grading.component_of[t] in set(k_members)))
            rest = search(inner)
            if rest is not None:
                step = CyclicStep(
                    members=members,
                    prime=p,
                    component_of=tuple(coset_of[grading.component_of[t]]
                                       for t in range(len(members))),
                )
                return rest + [step]
        return None

    steps = search(tuple(range(ring.rank)))
    if steps is None:
        return CyclicCertificate(False, [])
    steps.reverse()
    return CyclicCertificate(True, steps)


@dataclass
class InvertiblesReport:
    subring: Subring
    group: FiniteGroup
    pointed: bool


def invertibles(ring: FusionRing) -> InvertiblesReport:
    """Basis elements with X_i (x) X_{i*} = unit; they form a group under fusion."""
    n = ring.dense()
    members = tuple(sorted(i for i in range(ring.rank)
                           if int(n[i, ring.dual[i]].sum()) == 1))
    order = [ring.unit] + [m for m in members if m != ring.unit]
    pos = {m: t for t, m in enumerate(order)}
    table = np.zeros((len(order), len(order)), dtype=np.int64)
    for a in order:
        for b in order:
            ks = np.nonzero(n[a, b])[0]
            if len(ks) != 1 or int(n[a, b, ks[0]]) != 1 or int(ks[0]) not in pos:
                raise ComputationError("invertible elements do not close into a group")
            table[pos[a], pos[b]] = pos[int(ks[0])]
    group = FiniteGroup(table.tolist(), name="Inv")
    sub = Subring(ring, tuple(sorted(order)))
    return InvertiblesReport(sub, group, pointed=(len(order) == ring.rank))


@dataclass
class SubringLattice:
    subrings: list            # sorted by (rank, members)
    is_simple: bool

    def member_sets(self):
        return [s.members for s in self.subrings]


def all_subrings(ring: FusionRing, rank_cap: int = SUBRING_RANK_CAP) -> SubringLattice:
    """Every subring, by closure-extension over dual orbits; exact and exhaustive.

    Every subring is the closure of the dual orbits it contains, so extending each
    found subring by one orbit reaches the whole lattice.
    """
    if ring.rank > rank_cap:
        raise ResourceLimit(f"rank {ring.rank} exceeds subring enumeration cap {rank_cap}")
    orbits = sorted({tuple(sorted({i, ring.dual[i]})) for i in range(ring.rank)})
    trivial = _close(ring, ())
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for s in frontier:
            base = set(s)
            for orb in orbits:
                if orb[0] in base:
                    continue
                bigger = _close(ring, base | set(orb))
                if bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    subs = [Subring(ring, m) for m in sorted(found, key=lambda m: (len(m), m))]
    return SubringLattice(subs, is_simple=(len(subs) == 2))
