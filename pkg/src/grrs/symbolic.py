"""Affine root systems represented symbolically as lattice-coset families.

An infinite system with finite minimal quotient is stored as a finite set of
"lifts" (one vector per class in a fixed complement V' of the radical)
together with, for each lift, the set of radical offsets above it.  Offset
sets are `CosetSet`s: finite unions of cosets of a modulus lattice inside a
single coset of the shared lattice L = ZR cap Ker(-,-).

All axiom checks reduce to finitely many coset computations; no root is ever
materialized beyond representatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    GrrsError,
    KernelTooLarge,
    NotBijective,
    NotInKernel,
    UnknownRoot,
)
from .finite import AxiomCheck, AxiomReport, FiniteRootSystem
from .linalg import (
    BilinearSpace,
    Lattice,
    SubspaceProjection,
    Vector,
    is_zero,
    rank,
    solve_in_span,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vector,
)


class CosetSet:
    """translate + {rep_1, ..., rep_m} + M, all inside one coset of L.

    Canonical on construction: the translate is the canonical residue mod L
    of any member, reps are canonical residues mod M, and M is maximized to
    the full stabilizer of the set, so equal sets with equal ambient compare
    literally equal.
    """

    __slots__ = ("ambient", "modulus", "translate", "reps", "_repset")

    def __init__(
        self,
        ambient: Lattice,
        modulus: Lattice,
        translate: Vector,
        reps: Sequence[Vector],
        _canonical: bool = False,
    ):
        if _canonical:
            self.ambient = ambient
            self.modulus = modulus
            self.translate = translate
            self.reps = tuple(reps)
            self._repset = frozenset(self.reps)
            return
        dim = ambient.dim
        members0 = [vadd(tuple(Q(x) for x in translate), tuple(Q(x) for x in r)) for r in reps]
        if not members0:
            self.ambient = ambient
            self.modulus = Lattice.zero(dim)
            self.translate = zero_vector(dim)
            self.reps = ()
            self._repset = frozenset()
            return
        if not ambient.contains_lattice(modulus):
            raise GrrsError("modulus is not a sublattice of the ambient lattice")
        t = ambient.residue(members0[0])
        rel = []
        for m in members0:
            d = vsub(m, t)
            if not ambient.member(d):
                raise GrrsError("coset members do not lie in a single ambient coset")
            rel.append(d)
        mod = modulus
        reps_c = sorted({mod.residue(r) for r in rel})
        # grow the modulus to the full stabilizer of the set
        while True:
            repset = set(reps_c)
            gained = []
            base = reps_c[0]
            for other in reps_c[1:]:
                d = vsub(other, base)
                if all(mod.residue(vadd(r, d)) in repset for r in reps_c):
                    gained.append(d)
            if not gained:
                break
            new_mod = mod.add(Lattice.from_vectors(dim, gained))
            if new_mod == mod:
                break
            mod = new_mod
            reps_c = sorted({mod.residue(r) for r in reps_c})
        self.ambient = ambient
        self.modulus = mod
        self.translate = t
        self.reps = tuple(reps_c)
        self._repset = frozenset(reps_c)

    # -- basic protocol ----------------------------------------------------

    @classmethod
    def empty(cls, ambient: Lattice) -> "CosetSet":
        return cls(ambient, Lattice.zero(ambient.dim), zero_vector(ambient.dim), [])

    @classmethod
    def full_lattice(cls, ambient: Lattice) -> "CosetSet":
        return cls(ambient, ambient, zero_vector(ambient.dim), [zero_vector(ambient.dim)])

    @property
    def dim(self) -> int:
        return self.ambient.dim

    def is_empty(self) -> bool:
        return not self.reps

    def __eq__(self, other):
        return (
            isinstance(other, CosetSet)
            and self.ambient == other.ambient
            and self.modulus == other.modulus
            and self.translate == other.translate
            and self.reps == other.reps
        )

    def __hash__(self):
        return hash((self.ambient, self.modulus, self.translate, self.reps))

    def __repr__(self):
        return (
            f"CosetSet(reps={len(self.reps)}, modulus_rank={self.modulus.rank}, "
            f"translate={'0' if is_zero(self.translate) else 'shifted'})"
        )

    def key(self):
        return (self.modulus.basis, self.translate, self.reps)

    # -- membership and set algebra ----------------------------------------

    def contains(self, v: Vector) -> bool:
        if self.is_empty():
            return False
        return self.modulus.residue(vsub(tuple(Q(x) for x in v), self.translate)) in self._repset

    def members(self) -> List[Vector]:
        """One representative per coset: translate + reps."""
        return [vadd(self.translate, r) for r in self.reps]

    def shift(self, v: Vector) -> "CosetSet":
        if self.is_empty():
            return self
        return CosetSet(
            self.ambient, self.modulus, vadd(self.translate, tuple(Q(x) for x in v)), self.reps
        )

    def neg(self) -> "CosetSet":
        return self.scale(-1)

    def scale(self, c: int) -> "CosetSet":
        if self.is_empty():
            return self
        c = int(c)
        if c == 0:
            return CosetSet(
                self.ambient,
                Lattice.zero(self.dim),
                zero_vector(self.dim),
                [zero_vector(self.dim)],
            )
        return CosetSet(
            self.ambient,
            self.modulus.scaled(c),
            vscale(c, self.translate),
            [vscale(c, r) for r in self.reps],
        )

    def add(self, other: "CosetSet") -> "CosetSet":
        if self.is_empty() or other.is_empty():
            return CosetSet.empty(self.ambient)
        mod = self.modulus.add(other.modulus)
        reps = [vadd(a, b) for a in self.reps for b in other.reps]
        return CosetSet(self.ambient, mod, vadd(self.translate, other.translate), reps)

    def subset_of(self, other: "CosetSet") -> bool:
        if self.is_empty():
            return True
        if other.is_empty():
            return False
        common = self.modulus.intersect(other.modulus)
        if common.rank < self.modulus.rank:
            return False
        cosreps = self.modulus.coset_representatives(common)
        for r in self.reps:
            base = vadd(self.translate, r)
            for cr in cosreps:
                if not other.contains(vadd(base, cr)):
                    return False
        return True

    def same_set(self, other: "CosetSet") -> bool:
        if (
            self.modulus == other.modulus
            and self.translate == other.translate
            and self.reps == other.reps
        ):
            return True
        return self.subset_of(other) and other.subset_of(self)

    def intersects_coset(self, v: Vector, lat: Lattice) -> bool:
        """Does the set meet v + lat?"""
        if self.is_empty():
            return False
        big = self.modulus.add(lat)
        for r in self.reps:
            if big.member(vsub(vadd(self.translate, r), tuple(Q(x) for x in v))):
                return True
        return False


# ---------------------------------------------------------------------------
# Symbolic systems


@dataclass(frozen=True)
class FamilyEntry:
    lift: Vector
    family: CosetSet


class SymbolicRootSystem:
    """R = union over entries of (lift + family), family inside Ker(-,-)."""

    def __init__(self, space: BilinearSpace, entries: Sequence[Tuple[Vector, CosetSet]]):
        self.space = space
        kb = space.kernel_basis()
        self.kernel_dim = len(kb)
        self._proj = SubspaceProjection(space.dim, kb)

        cleaned: List[Tuple[Vector, CosetSet]] = []
        for lift, fam in entries:
            lift = tuple(Q(x) for x in lift)
            space.check_vector(lift)
            if fam.is_empty():
                continue
            cleaned.append((lift, fam))
        if not cleaned:
            raise GrrsError("symbolic system with no nonempty families")
        lifts = [lift for lift, _ in cleaned]
        if len(set(lifts)) != len(lifts):
            raise GrrsError("duplicate lifts in symbolic system")
        if rank(list(lifts) + list(kb)) != rank(lifts) + len(kb):
            raise GrrsError("lifts are not independent from the radical")

        # kernel-part sanity for all family data
        for _, fam in cleaned:
            for v in list(fam.modulus.basis) + [fam.translate] + list(fam.reps):
                if not space.in_kernel(v):
                    raise GrrsError("family data outside the radical")

        # shared lattice L = ZR cap Ker
        gens: List[Vector] = []
        for lift, fam in cleaned:
            for m in fam.members():
                gens.append(vadd(lift, m))
            gens.extend(fam.modulus.basis)
        self.L = Lattice.from_vectors(space.dim, gens).kernel_part(space)

        anchored = []
        for lift, fam in cleaned:
            anchored.append(
                (lift, CosetSet(self.L, fam.modulus, fam.translate, fam.reps))
            )
        anchored.sort(key=lambda e: e[0])
        self.entries: Tuple[FamilyEntry, ...] = tuple(
            FamilyEntry(lift, fam) for lift, fam in anchored
        )
        self._by_lift: Dict[Vector, CosetSet] = {e.lift: e.family for e in self.entries}
        self._by_cl: Dict[Vector, FamilyEntry] = {
            self._proj.apply(e.lift): e for e in self.entries
        }
        self._cl_cache: Optional[FiniteRootSystem] = None

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, SymbolicRootSystem)
            and self.space == other.space
            and self.entries == other.entries
        )

    def __repr__(self):
        return (
            f"SymbolicRootSystem(dim={self.space.dim}, kernel_dim={self.kernel_dim}, "
            f"classes={len(self.entries)})"
        )

    @property
    def lifts(self) -> Tuple[Vector, ...]:
        return tuple(e.lift for e in self.entries)

    def splitting(self) -> Tuple[Vector, ...]:
        """Lex-first lifts forming a basis of the complement V'."""
        kb = list(self.space.kernel_basis())
        chosen: List[Vector] = []
        for lift in self.lifts:
            if rank(chosen + [lift] + kb) > len(chosen) + len(kb):
                chosen.append(lift)
        return tuple(chosen)

    def family_of_lift(self, lift: Vector) -> CosetSet:
        lift = tuple(Q(x) for x in lift)
        if lift not in self._by_lift:
            raise UnknownRoot(f"{lift} is not a class of the system")
        return self._by_lift[lift]

    def cl(self) -> FiniteRootSystem:
        """Minimal quotient, realized on the non-pivot coordinates of V/Ker."""
        if self._cl_cache is None:
            kept = self._proj.kept
            gram = [[self.space.gram[i][j] for j in kept] for i in kept]
            roots = [self._proj.apply(e.lift) for e in self.entries]
            self._cl_cache = FiniteRootSystem(BilinearSpace(gram), roots)
        return self._cl_cache

    def entry_for_cl(self, cl_root: Vector) -> FamilyEntry:
        cl_root = tuple(Q(x) for x in cl_root)
        if len(cl_root) == self.space.dim:
            cl_root = self._proj.apply(cl_root)
        if cl_root not in self._by_cl:
            raise UnknownRoot(f"{cl_root} is not a root of the minimal quotient")
        return self._by_cl[cl_root]

    def contains(self, v: Vector) -> bool:
        v = tuple(Q(x) for x in v)
        self.space.check_vector(v)
        w = self._proj.apply(v)
        entry = self._by_cl.get(w)
        if entry is None:
            return False
        offset = vsub(v, entry.lift)
        if not self.space.in_kernel(offset):
            return False
        return entry.family.contains(offset)

    def norm_of_lift(self, lift: Vector) -> Q:
        return self.space.norm(lift)

    def resplit(self, offsets: Dict[Vector, Vector]) -> "SymbolicRootSystem":
        """Rebuild with splitting roots shifted by the given family members.

        `offsets` maps splitting lifts to members of their families; the root
        set is unchanged, only the complement V' (hence all lifts and
        families) moves.
        """
        basis = list(self.splitting())
        shifts = []
        for b in basis:
            off = offsets.get(b, zero_vector(self.space.dim))
            off = tuple(Q(x) for x in off)
            if not is_zero(off) and not self.family_of_lift(b).contains(off):
                raise UnknownRoot("offset is not a member of the splitting family")
            shifts.append(off)
        new_entries = []
        for e in self.entries:
            coords = solve_in_span(basis + list(self.space.kernel_basis()), e.lift)
            lam = zero_vector(self.space.dim)
            for c, s in zip(coords[: len(basis)], shifts):
                if c:
                    lam = vadd(lam, vscale(c, s))
            new_lift = vadd(e.lift, lam)
            new_fam = e.family.shift(vneg(lam))
            new_entries.append((new_lift, new_fam))
        return SymbolicRootSystem(self.space, new_entries)


# ---------------------------------------------------------------------------
# Constructions


def from_finite(system: FiniteRootSystem) -> SymbolicRootSystem:
    """View a finite system symbolically with respect to its radical."""
    kb = list(system.space.kernel_basis())
    dim = system.space.dim
    chosen: List[Vector] = []
    for r in system.roots:
        if rank(chosen + [r] + kb) > len(chosen) + len(kb):
            chosen.append(r)
    zero_mod = Lattice.zero(dim)
    groups: Dict[Vector, List[Vector]] = {}
    for r in system.roots:
        coords = solve_in_span(chosen + kb, r)
        if coords is None:
            raise GrrsError("roots do not decompose along the chosen splitting")
        lift = zero_vector(dim)
        for c, b in zip(coords[: len(chosen)], chosen):
            if c:
                lift = vadd(lift, vscale(c, b))
        groups.setdefault(lift, []).append(vsub(r, lift))
    ambient = Lattice.from_vectors(dim, [v for vs in groups.values() for v in vs])
    entries = []
    for lift, offs in groups.items():
        entries.append((lift, CosetSet(ambient, zero_mod, zero_vector(dim), offs)))
    return SymbolicRootSystem(system.space, entries)


def affinize(
    system: Union[FiniteRootSystem, SymbolicRootSystem], n: int = 1
) -> SymbolicRootSystem:
    """Extend by n isotropic central directions; every family gains Z delta_i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(system, FiniteRootSystem):
        system = from_finite(system)
    if n == 0:
        return system
    old = system.space
    dim = old.dim + n
    gram = [
        [old.gram[i][j] if i < old.dim and j < old.dim else Q(0) for j in range(dim)]
        for i in range(dim)
    ]
    space = BilinearSpace(gram)

    def pad(v: Vector) -> Vector:
        return tuple(list(v) + [Q(0)] * n)

    delta_block = [
        tuple(Q(1) if j == old.dim + i else Q(0) for j in range(dim)) for i in range(n)
    ]
    big = Lattice.from_vectors(dim, [pad(b) for b in system.L.basis] + delta_block)
    entries = []
    for e in system.entries:
        mod = Lattice.from_vectors(
            dim, [pad(b) for b in e.family.modulus.basis] + delta_block
        )
        fam = CosetSet(big, mod, pad(e.family.translate), [pad(r) for r in e.family.reps])
        entries.append((pad(e.lift), fam))
    return SymbolicRootSystem(space, entries)


def quotient(
    system: SymbolicRootSystem,
    kernel_vectors: Sequence[Vector],
    require_bijective: bool = False,
) -> SymbolicRootSystem:
    """Push the system forward along V -> V/U for U inside the radical."""
    vecs = [tuple(Q(x) for x in v) for v in kernel_vectors]
    for v in vecs:
        system.space.check_vector(v)
        if not system.space.in_kernel(v):
            raise NotInKernel(f"{v} is not in the radical")
    proj = SubspaceProjection(system.space.dim, vecs)
    if not proj.pivots:
        return system
    kept = proj.kept
    gram = [[system.space.gram[i][j] for j in kept] for i in kept]
    new_space = BilinearSpace(gram)
    new_dim = len(kept)

    if require_bijective:
        for e in system.entries:
            fam = e.family
            pm = Lattice.from_vectors(new_dim, [proj.apply(b) for b in fam.modulus.basis])
            if pm.rank < fam.modulus.rank:
                raise NotBijective("a family coset collapses along the quotient")
            for a, b in itertools.combinations(fam.reps, 2):
                if pm.member(proj.apply(vsub(a, b))):
                    raise NotBijective("two family cosets merge along the quotient")

    entries = []
    for e in system.entries:
        fam = e.family
        mod = Lattice.from_vectors(new_dim, [proj.apply(b) for b in fam.modulus.basis])
        amb = Lattice.from_vectors(
            new_dim, [proj.apply(b) for b in system.L.basis] + list(mod.basis)
        )
        fam2 = CosetSet(
            amb, mod, proj.apply(fam.translate), [proj.apply(r) for r in fam.reps]
        )
        entries.append((proj.apply(e.lift), fam2))
    return SymbolicRootSystem(new_space, entries)


# ---------------------------------------------------------------------------
# Operations of the minimal-quotient calculus


def contains(system: SymbolicRootSystem, v: Vector) -> bool:
    """Exact membership of a concrete vector in the infinite root set."""
    return system.contains(v)


def cl(system: SymbolicRootSystem) -> FiniteRootSystem:
    return system.cl()


def F_of(system: SymbolicRootSystem, cl_root: Vector) -> CosetSet:
    """The offset family above a class of the minimal quotient."""
    return system.entry_for_cl(cl_root).family


@dataclass(frozen=True)
class GapTable:
    """Gap per lift; None marks classes where no single progression exists."""

    entries: Tuple[Tuple[Vector, Optional[int]], ...]

    def by_lift(self) -> Dict[Vector, Optional[int]]:
        return dict(self.entries)

    def defined_values(self) -> List[int]:
        return sorted({g for _, g in self.entries if g is not None})


def gaps(system: SymbolicRootSystem) -> GapTable:
    """Arithmetic-progression indices of the families over a 1-dim radical."""
    if system.kernel_dim > 1:
        raise KernelTooLarge("gaps need a one-dimensional radical")
    L = system.L
    out = []
    for e in system.entries:
        fam = e.family
        iso = system.space.norm(e.lift) == 0
        g: Optional[int] = None
        if len(fam.reps) == 1:
            if fam.modulus.rank == 0:
                g = 0
            elif L.rank == 1:
                idx = fam.modulus.index_in(L)
                g = idx
        if g is None and not iso:
            raise GrrsError(
                f"no single arithmetic progression above non-isotropic class {e.lift}"
            )
        out.append((e.lift, g))
    return GapTable(tuple(out))


# ---------------------------------------------------------------------------
# Axiom checking


def _xor_check(A: CosetSet, B: CosetSet, C: CosetSet, D: CosetSet):
    """For all x in A, y in B: exactly/at least one of y+x in C, y-x in D.

    Returns (gr3_ok, wgr3_ok).  Membership of y+x depends on (x, y) only
    through residues mod the moduli of C and D, so the quantifier is finite
    whenever those moduli are commensurate with the moduli of A and B;
    incommensurate data falls back to the two uniform dichotomies, which are
    the only way the condition can hold in that regime.
    """
    gr3_ok = True
    wgr3_ok = True
    sigma = A.modulus.add(B.modulus)
    for a in A.reps:
        x0 = vadd(A.translate, a)
        for b in B.reps:
            y0 = vadd(B.translate, b)
            splus = vadd(y0, x0)
            sminus = vsub(y0, x0)
            if C.is_empty() and D.is_empty():
                return False, False
            if C.is_empty() or D.is_empty():
                target = D if C.is_empty() else C
                probe = sminus if C.is_empty() else splus
                cos = CosetSet(A.ambient, sigma, probe, [zero_vector(A.dim)])
                if not cos.subset_of(target):
                    return False, False
                continue
            qa = A.modulus.intersect(C.modulus).intersect(D.modulus)
            qb = B.modulus.intersect(C.modulus).intersect(D.modulus)
            if qa.rank == A.modulus.rank and qb.rank == B.modulus.rank:
                for m in A.modulus.coset_representatives(qa):
                    for mp in B.modulus.coset_representatives(qb):
                        inplus = C.contains(vadd(splus, vadd(m, mp)))
                        inminus = D.contains(vadd(sminus, vsub(mp, m)))
                        if inplus and inminus:
                            gr3_ok = False
                        elif not inplus and not inminus:
                            return False, False
                continue
            plus_cos = CosetSet(A.ambient, sigma, splus, [zero_vector(A.dim)])
            minus_cos = CosetSet(A.ambient, sigma, sminus, [zero_vector(A.dim)])
            uniform_minus = (
                not C.intersects_coset(splus, sigma) and minus_cos.subset_of(D)
            )
            uniform_plus = (
                not D.intersects_coset(sminus, sigma) and plus_cos.subset_of(C)
            )
            if not (uniform_minus or uniform_plus):
                return False, False
    return gr3_ok, wgr3_ok


def check_symbolic_axioms(system: SymbolicRootSystem) -> AxiomReport:
    """Same semantics as the finite checker, family-wise."""
    space = system.space

    gr0 = AxiomCheck(True)
    for e in system.entries:
        if is_zero(system._proj.apply(e.lift)):
            gr0 = AxiomCheck(False, (e.lift,))
            break

    gens: List[Vector] = []
    for e in system.entries:
        for m in e.family.members():
            gens.append(vadd(e.lift, m))
        gens.extend(e.family.modulus.basis)
    gr1 = AxiomCheck(Lattice.from_vectors(space.dim, gens).rank == space.dim)

    by_lift = system._by_lift
    gr2_fail = None
    for ea in system.entries:
        na = space.norm(ea.lift)
        if na == 0:
            continue
        for eb in system.entries:
            k = 2 * space.form(ea.lift, eb.lift) / na
            if k.denominator != 1:
                gr2_fail = (ea.lift, eb.lift)
                break
            if k == 0:
                continue
            image = vsub(eb.lift, vscale(k, ea.lift))
            target = by_lift.get(image)
            if target is None:
                gr2_fail = (ea.lift, eb.lift)
                break
            moved = eb.family.add(ea.family.scale(-int(k)))
            if not moved.subset_of(target):
                gr2_fail = (ea.lift, eb.lift)
                break
        if gr2_fail:
            break
    gr2 = AxiomCheck(gr2_fail is None, gr2_fail)

    # R = -R at family level
    gr3_fail = None
    wgr3_fail = None
    for e in system.entries:
        neg_entry = by_lift.get(vneg(e.lift))
        if neg_entry is None or not neg_entry.same_set(e.family.neg()):
            gr3_fail = wgr3_fail = (e.lift,)
            break

    if gr3_fail is None:
        for ea in system.entries:
            if space.norm(ea.lift) != 0:
                continue
            for eb in system.entries:
                if space.form(ea.lift, eb.lift) == 0:
                    continue
                plus_lift = vadd(eb.lift, ea.lift)
                minus_lift = vsub(eb.lift, ea.lift)
                C = by_lift.get(plus_lift)
                D = by_lift.get(minus_lift)
                C = C if C is not None else CosetSet.empty(system.L)
                D = D if D is not None else CosetSet.empty(system.L)
                ok3, okw = _xor_check(ea.family, eb.family, C, D)
                if not ok3:
                    gr3_fail = gr3_fail or (ea.lift, eb.lift)
                if not okw:
                    wgr3_fail = wgr3_fail or (ea.lift, eb.lift)
                if gr3_fail and wgr3_fail:
                    break
            if gr3_fail and wgr3_fail:
                break

    gr3 = AxiomCheck(gr3_fail is None, gr3_fail)
    wgr3 = AxiomCheck(wgr3_fail is None, wgr3_fail)
    return AxiomReport(gr0, gr1, gr2, gr3, wgr3)
