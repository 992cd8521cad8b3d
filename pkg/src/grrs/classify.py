"""Classification of affine systems: canonical F_2^k data and name tables.

Subsets of F_2^k are bitmasks over the 2^k points; the canonical form of a
subset is the lexicographically minimal mask over its orbit under the affine
group.  Class descriptors pair a recognized minimal-quotient type with the
canonicalized discriminating data.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import List, Optional, Tuple

from . import catalog
from .catalog import contains_affine_basis_points
from .errors import (
    BadParameters,
    GrrsError,
    KTooLarge,
    NoName,
    NotClassified,
    UnrecognizedCl,
)
from .finite import FiniteRootSystem, Homothety, isomorphic_finite
from .linalg import Lattice, Vector, vadd, vsub
from .symbolic import CosetSet, SymbolicRootSystem


def _max_k() -> int:
    return int(os.environ.get("GRRS_MAX_K", "4"))


def _check_k(k: int):
    if k > _max_k():
        raise KTooLarge(
            f"k = {k} exceeds the classification cap {_max_k()} "
            "(set GRRS_MAX_K to override)"
        )


# ---------------------------------------------------------------------------
# Subsets of F_2^k


@dataclass(frozen=True)
class F2Subset:
    k: int
    mask: int

    def points(self) -> Tuple[int, ...]:
        return tuple(p for p in range(1 << self.k) if (self.mask >> p) & 1)

    @classmethod
    def from_points(cls, k: int, points) -> "F2Subset":
        mask = 0
        for p in points:
            p = int(p)
            if not 0 <= p < (1 << k):
                raise GrrsError(f"point {p} outside F_2^{k}")
            mask |= 1 << p
        return cls(k, mask)

    def __len__(self):
        return bin(self.mask).count("1")


def _mask_from_points(k: int, points) -> int:
    return F2Subset.from_points(k, points).mask


@lru_cache(maxsize=None)
def _gl_pointmaps(k: int) -> Tuple[Tuple[int, ...], ...]:
    """All invertible linear maps of F_2^k as point permutation tables."""
    if k == 0:
        return ((0,),)
    n = 1 << k
    maps = []

    def build(cols: List[int]):
        if len(cols) == k:
            table = []
            for p in range(n):
                img = 0
                for j in range(k):
                    if (p >> j) & 1:
                        img ^= cols[j]
                table.append(img)
            maps.append(tuple(table))
            return
        span = {0}
        for combo in range(1 << len(cols)):
            v = 0
            for j in range(len(cols)):
                if (combo >> j) & 1:
                    v ^= cols[j]
            span.add(v)
        for c in range(1, n):
            if c not in span:
                build(cols + [c])

    build([])
    return tuple(maps)


def _apply_pointmap(mask: int, table: Tuple[int, ...]) -> int:
    out = 0
    for p in range(len(table)):
        if (mask >> p) & 1:
            out |= 1 << table[p]
    return out


def _translate_mask(mask: int, t: int, k: int) -> int:
    out = 0
    for p in range(1 << k):
        if (mask >> p) & 1:
            out |= 1 << (p ^ t)
    return out


def _min_translate(mask: int, k: int) -> int:
    return min(_translate_mask(mask, t, k) for t in range(1 << k))


def canonical_mask(k: int, mask: int) -> int:
    """Lex-min mask over the affine group orbit."""
    _check_k(k)
    return min(
        _min_translate(_apply_pointmap(mask, g), k) for g in _gl_pointmaps(k)
    )


def affine_canonical(S: F2Subset) -> F2Subset:
    """Canonical representative of S under affine automorphisms of F_2^k."""
    return F2Subset(S.k, canonical_mask(S.k, S.mask))


def contains_affine_basis(S: F2Subset) -> bool:
    return contains_affine_basis_points(S.k, frozenset(S.points()))


def canonical_pair(
    k: int,
    mask1: int,
    mask2: int,
    translate_second: bool,
    complement_first: bool,
) -> Tuple[int, int]:
    """Joint canonical form of a pair of subsets under a shared linear map.

    Translations act on the first subset always, on the second only when
    `translate_second`; `complement_first` adds the replacement of the first
    subset by its complement to the group.
    """
    _check_k(k)
    full = (1 << (1 << k)) - 1
    best: Optional[Tuple[int, int]] = None
    for g in _gl_pointmaps(k):
        m1 = _apply_pointmap(mask1, g)
        m2 = _apply_pointmap(mask2, g)
        firsts = [m1]
        if complement_first:
            firsts.append(full & ~m1)
        for f1 in firsts:
            s2 = _min_translate(m2, k) if translate_second else m2
            cand = (_min_translate(f1, k), s2)
            if best is None or cand < best:
                best = cand
    return best


# ---------------------------------------------------------------------------
# Class descriptors


@dataclass(frozen=True)
class ClassDescriptor:
    """Canonical label of an isomorphism class of affine systems."""

    cl: str
    k: int
    data: Tuple

    def kind(self) -> str:
        return self.data[0]


def _desc_aff(cl: str, k: int) -> ClassDescriptor:
    return ClassDescriptor(cl, k, ("affinization",))


# ---------------------------------------------------------------------------
# Recognition of the minimal quotient


def _candidate_names(fin: FiniteRootSystem) -> List[str]:
    d = fin.space.dim
    count = len(fin)
    n_iso = len(fin.isotropic_roots())
    names: List[str] = []
    if n_iso == 0:
        if d == 2:
            names += ["G2", "C2"]
        if d == 4:
            names.append("F4")
        if d in (6, 7, 8):
            names.append(f"E{d}")
        names.append(f"A{d}")
        if d >= 3:
            names.append(f"D{d}")
        if d >= 2:
            names += [f"B{d}", f"C{d}"]
        names.append(f"BC{d}")
    else:
        if d == 2:
            names.append("C(1,1)")
        if d % 2 == 0 and d >= 4:
            names.append(f"A({d // 2},{d // 2})_f")
        for mm in range(d - 1, -1, -1):
            nn = d - 1 - mm
            if 0 <= nn < mm:
                names.append(f"A({mm},{nn})")
        # super pairs over the full dimension
        for m in range(1, d):
            n = d - m
            names.append(f"B({m},{n})")
        for m in range(2, d):
            n = d - m
            if n >= 1:
                names.append(f"D({m},{n})")
        if d >= 2:
            names.append(f"C({d})")
        if d == 3:
            names += ["G(3)"]
        if d == 4:
            names.append("F(4)")
        for m in range(d - 1, 0, -1):
            n = d - m
            if m >= n:
                names.append(f"C({m},{n})")
                names.append(f"BC({m},{n})")
                if m != n:
                    names.append(f"C({n},{m})")
                    names.append(f"BC({n},{m})")
    return names


def _d21a_candidates(fin: FiniteRootSystem) -> List[Q]:
    norms = sorted({fin.norm(r) for r in fin.roots if fin.norm(r) != 0})
    cands = set()
    for u in norms:
        for v in norms:
            if v != 0:
                a = u / v
                if a not in (0, -1):
                    cands.add(a)
                if -a not in (0, -1):
                    cands.add(-a)
    return sorted(cands)


def recognize_cl(fin: FiniteRootSystem):
    """Match a finite system against the catalog.

    Returns (name, homothety from the catalog copy onto the input, copy).
    """
    d = fin.space.dim
    count = len(fin)
    n_iso = len(fin.isotropic_roots())
    seen = set()
    for name in _candidate_names(fin):
        if name in seen:
            continue
        seen.add(name)
        try:
            cat = catalog.build(name)
        except BadParameters:
            continue
        if len(cat) != count or cat.space.dim != d:
            continue
        if len(cat.isotropic_roots()) != n_iso:
            continue
        h = isomorphic_finite(cat, fin)
        if h is not None:
            return name, h, cat
    if d == 3 and n_iso == 8 and count == 14:
        for a in _d21a_candidates(fin):
            name = f"D(2,1;a={a})"
            try:
                cat = catalog.build(name)
            except BadParameters:
                continue
            h = isomorphic_finite(cat, fin)
            if h is not None:
                orbit = {a, 1 / a, -1 - a}
                orbit |= {1 / x for x in list(orbit) if x != 0}
                orbit |= {-1 - x for x in list(orbit)}
                canon = min(x for x in orbit if x not in (0, -1))
                return f"D(2,1;a={canon})", h, cat
    raise UnrecognizedCl(
        f"no catalog match for dim {d}, {count} roots, {n_iso} isotropic"
    )


def _is_case_i(name: str) -> bool:
    if name.startswith("D(2,1"):
        return True
    if name in ("G(3)", "F(4)"):
        return True
    if name.startswith("A(") and not name.endswith("_f"):
        return True
    if name.startswith(("C(", "D(")) and "," not in name:
        return True
    if name.startswith("C(") and "," in name:
        return False
    if name.startswith("D(") and "," in name:
        return True
    if name.startswith("E"):
        return True
    if name.startswith("D") and name[1:].isdigit():
        return True
    if name.startswith("A") and name[1:].isdigit():
        return int(name[1:]) >= 2
    return False


# ---------------------------------------------------------------------------
# Data extraction helpers


def _family_lattice(fam: CosetSet) -> Lattice:
    """The family as a subgroup; requires a single unshifted full coset."""
    from .linalg import is_zero

    if len(fam.reps) != 1 or not is_zero(fam.translate) or not is_zero(fam.reps[0]):
        raise UnrecognizedCl("family is not a lattice; not of the classified shape")
    return fam.modulus


def _points_mod2(fam: CosetSet, L: Lattice) -> frozenset:
    """Members of the family as points of L/2L, expanding the modulus."""
    two_L = L.scaled(2)
    if not fam.modulus.contains_lattice(two_L):
        raise UnrecognizedCl("family is not a union of doubled-lattice cosets")
    cosreps = fam.modulus.coset_representatives(two_L)
    pts = set()
    for m in fam.members():
        for cr in cosreps:
            coeffs = L.coefficients(vadd(m, cr))
            if coeffs is None:
                raise UnrecognizedCl("family member outside the reference lattice")
            p = 0
            for j, c in enumerate(coeffs):
                if int(c) % 2:
                    p |= 1 << j
            pts.add(p)
    return frozenset(pts)


def _index_power(idx: int, r: int) -> Optional[int]:
    """e with r**e == idx, if any."""
    e = 0
    while idx > 1:
        if idx % r:
            return None
        idx //= r
        e += 1
    return e


def _pullback_families(system: SymbolicRootSystem, hmap: Homothety, name: str):
    """Family lookup normalized to the generated-subsystem convention.

    Roots are chosen above the standard generating classes of the recognized
    quotient; every family is then shifted as if the splitting ran through
    those roots, making the extracted data independent of the presentation.
    """
    from .linalg import solve_in_span, vscale

    gens = catalog.generating_roots(name)
    gen_cl = [hmap.apply(g) for g in gens]
    entries = [system.entry_for_cl(w) for w in gen_cl]
    anchors = [
        vadd(e.lift, min(e.family.members())) for e in entries
    ]

    def fam(cat_root: Vector) -> CosetSet:
        w = hmap.apply(cat_root)
        e = system.entry_for_cl(w)
        coords = solve_in_span(gen_cl, w)
        if coords is None:
            raise UnrecognizedCl("quotient class outside the generated span")
        shift = e.lift
        for c, anchor in zip(coords, anchors):
            if c:
                shift = vsub(shift, vscale(c, anchor))
        return e.family.shift(shift)

    return fam


# ---------------------------------------------------------------------------
# identify


def identify(system: SymbolicRootSystem) -> ClassDescriptor:
    """Canonical class descriptor of a symbolic system.

    The minimal quotient is recognized against the catalog; the family data
    is pulled back along the recognition map and canonicalized.
    """
    k = system.kernel_dim
    cl_sys = system.cl()
    name, hmap, cat = recognize_cl(cl_sys)
    L = system.L
    if L.rank != k:
        raise UnrecognizedCl("offset lattice does not span the radical")

    if _is_case_i(name):
        # every family must be one full coset of L (shift-independent test)
        for e in system.entries:
            if e.family.modulus != L or len(e.family.reps) != 1:
                raise UnrecognizedCl(
                    "transitive-quotient system whose families are not full cosets"
                )
        return _desc_aff(name, k)

    if name == "C(1,1)" or name.endswith("_f"):
        return _identify_ann(system, name, hmap, cat, k, L)

    fam = _pullback_families(system, hmap, name)

    if name == "A1":
        _check_k(k)
        pts = _points_mod2(fam(cat.roots[0]), L)
        mask = canonical_mask(k, _mask_from_points(k, pts))
        return ClassDescriptor("A1", k, ("S", mask))

    if name == "C2":
        _check_k(k)
        short = next(r for r in cat.roots if cat.norm(r) == 2)
        long_ = next(r for r in cat.roots if cat.norm(r) == 4)
        m1 = _mask_from_points(k, _points_mod2(fam(short), L))
        m2 = _mask_from_points(k, _points_mod2(fam(long_), L))
        pair = canonical_pair(k, m1, m2, translate_second=True, complement_first=False)
        return ClassDescriptor("C2", k, ("S1S2",) + pair)

    if name in ("G2", "F4"):
        r = 3 if name == "G2" else 2
        norms = sorted({cat.norm(v) for v in cat.roots})
        short = next(v for v in cat.roots if cat.norm(v) == norms[0])
        long_ = next(v for v in cat.roots if cat.norm(v) == norms[1])
        Lp = _family_lattice(fam(short))
        H2 = _family_lattice(fam(long_))
        idx = H2.index_in(Lp)
        if idx is None:
            raise UnrecognizedCl("long-root family of infinite index")
        e = _index_power(idx, r)
        if e is None or e > k:
            raise UnrecognizedCl("long-root family index is not a pure power")
        return ClassDescriptor(name, k, ("s", k - e))

    if (name.startswith("B") or name.startswith("C")) and name[1:].isdigit():
        n = int(name[1:])
        _check_k(k)
        if name.startswith("B"):
            o1 = next(v for v in cat.roots if cat.norm(v) == 2)
            o2 = next(v for v in cat.roots if cat.norm(v) == 1)
            H1 = _family_lattice(fam(o1))
            Lp = H1.scaled(Q(1, 2))
        else:
            o1 = next(v for v in cat.roots if cat.norm(v) == 2)
            o2 = next(v for v in cat.roots if cat.norm(v) == 4)
            Lp = _family_lattice(fam(o1))
        pts = _points_mod2(fam(o2), Lp)
        mask = canonical_mask(k, _mask_from_points(k, pts))
        return ClassDescriptor(name, k, ("S", mask))

    if name.startswith("B(") :
        _check_k(k)
        mm, nn = (int(x) for x in name[2:-1].split(","))
        non_short = next(
            v
            for v in cat.roots
            if sum(1 for x in v if x != 0) != 1 or abs(next(x for x in v if x)) != 1
        )
        short = next(
            v
            for v in cat.roots
            if sum(1 for x in v if x != 0) == 1 and abs(next(x for x in v if x)) == 1
        )
        H1 = _family_lattice(fam(non_short))
        Lp = H1.scaled(Q(1, 2))
        pts = _points_mod2(fam(short), Lp)
        mask = canonical_mask(k, _mask_from_points(k, pts))
        return ClassDescriptor(name, k, ("S", mask))

    if name.startswith("C(") and "," in name:
        return _identify_cmn(system, name, fam, cat, k, L, with_shorts=False)
    if name.startswith("BC(") and "," in name:
        return _identify_cmn(system, name, fam, cat, k, L, with_shorts=True)

    if name.startswith("BC") and name[2:].isdigit():
        return _identify_bcn(system, int(name[2:]), fam, cat, k, L)

    raise UnrecognizedCl(f"no identification rule for {name}")


def _identify_ann(system, name, hmap, cat, k, L):
    """cl = A(n,n)_f (n > 1) or C(1,1): quotient-type invariants (q, p)."""
    if name == "C(1,1)":
        n = 1
    else:
        n = cat.space.dim // 2

    def fam(cat_root):
        return system.entry_for_cl(hmap.apply(cat_root)).family

    if k >= 2 and n == 1:
        # Split the subset forms C(1,1)(S) from the rational quotients by
        # the position of the isotropic anchor relative to the lattice
        # generated by the two doubled-root families: 2a inside means a
        # subset form, outside means a quotient form.
        nfam = _pullback_families(system, hmap, "C(1,1)")
        dim0 = cat.space.dim
        eps2 = tuple(Q(2) if j == 0 else Q(0) for j in range(dim0))
        dlt2 = tuple(Q(2) if j == 1 else Q(0) for j in range(dim0))
        iso = tuple(Q(1) for _ in range(dim0))
        f_eps, f_dlt, f_iso = nfam(eps2), nfam(dlt2), nfam(iso)
        Lp = Lattice.from_vectors(
            L.dim,
            [v for f in (f_eps, f_dlt) for v in f.members()]
            + [b for f in (f_eps, f_dlt) for b in f.modulus.basis],
        )
        a = f_iso.members()[0]
        if Lp.rank == L.rank and Lp.member(vadd(a, a)):
            _check_k(k)
            pts = _points_mod2(f_eps, Lp)
            mask = canonical_mask(k, _mask_from_points(k, pts))
            full = (1 << (1 << k)) - 1
            mask = min(mask, canonical_mask(k, full & ~mask))
            return ClassDescriptor("C(1,1)", k, ("C11S", mask))

    noniso = next(r for r in cat.roots if cat.norm(r) != 0)
    F = fam(noniso)
    M = F.modulus
    if M.rank < L.rank:
        for r in cat.roots:
            if cat.norm(r) != 0 and fam(r).modulus.rank >= L.rank:
                raise UnrecognizedCl("inconsistent family ranks")
        return ClassDescriptor(name, k, ("gl",))
    if len(F.reps) != 1:
        raise UnrecognizedCl("non-isotropic family is not a single coset")
    q = M.index_in(L)

    if k > 1:
        return ClassDescriptor(name, k, ("Annx", q, None))
    if q == 1:
        return ClassDescriptor(name, k, ("Annx", 1, 0))
    if n > 3:
        raise KTooLarge("the sum invariant is capped at n <= 3")
    lifts = system.lifts
    classes = set()
    for combo in itertools.combinations_with_replacement(lifts, n + 1):
        total = combo[0]
        for v in combo[1:]:
            total = vadd(total, v)
        if any(x != 0 for x in total):
            continue
        s = None
        for v in combo:
            f = system.family_of_lift(v)
            s = f if s is None else s.add(f)
        for m in s.members():
            c = L.coefficients(m)
            if c is None:
                raise UnrecognizedCl("subset sum leaves the offset lattice")
            classes.add(int(c[0]) % q)
    nonzero = {min(c, (q - c) % q) for c in classes if c % q != 0}
    p = min(nonzero) if nonzero else 0
    return ClassDescriptor(name, k, ("Annx", q, p))


def _identify_cmn(system, name, fam, cat, k, L, with_shorts: bool):
    """cl = C(m,n) (mn > 1) or BC(m,n): subset data of Prop-6 shape."""
    _check_k(k)
    inner = name[name.index("(") + 1 : -1]
    mm, nn = (int(x) for x in inner.split(","))
    dim0 = cat.space.dim

    def unit(i, c=1):
        return tuple(Q(c) if j == i else Q(0) for j in range(dim0))

    eps_long = unit(0, 2)
    dlt_long = unit(mm, 2)
    iso = vadd(unit(0), unit(mm))
    f_eps = fam(eps_long)
    f_dlt = fam(dlt_long)
    f_iso = fam(iso)
    Lp = Lattice.from_vectors(L.dim, [
        v for f in (f_eps, f_dlt) for v in f.members()
    ] + [b for f in (f_eps, f_dlt) for b in f.modulus.basis])
    a = f_iso.members()[0]
    if not Lp.member(vadd(a, a)):
        # shifted presentation: enlarge the reference lattice by 2a
        Lp = Lp.add(Lattice.from_vectors(L.dim, [vadd(a, a)]))
    pts = _points_mod2(f_eps, Lp)
    mask = _mask_from_points(k, pts)
    if not with_shorts:
        m1 = canonical_mask(k, mask)
        if mm == nn:
            full = (1 << (1 << k)) - 1
            m1 = min(m1, canonical_mask(k, full & ~mask))
        return ClassDescriptor(name, k, ("S", m1))
    short = unit(0)
    f_short = fam(short).scale(2)
    pts2 = _points_mod2(f_short, Lp)
    mask2 = _mask_from_points(k, pts2)
    pair = canonical_pair(
        k, mask, mask2, translate_second=False, complement_first=(mm == nn)
    )
    return ClassDescriptor(name, k, ("SSp",) + pair)


def _identify_bcn(system, n, fam, cat, k, L):
    """cl = BC_n: partially canonicalized data; the classification of this
    case is incomplete, so descriptor equality is only reliable between
    like presentations.

    For n = 1 the short offsets generate the reference lattice and the
    doubled-root offsets are read modulo four times it; for n >= 2 the
    short offsets live in half the reference lattice and all data reduces
    modulo twice it.
    """
    _check_k(k)

    def unit(i, c=1):
        return tuple(Q(c) if j == i else Q(0) for j in range(cat.space.dim))

    f_short = fam(unit(0))
    f_long = fam(unit(0, 2))

    if n == 1:
        Lp = Lattice.from_vectors(
            L.dim, list(f_short.members()) + list(f_short.modulus.basis)
        )
        s_pts = _points_mod2(f_short, Lp)
        four_L = Lp.scaled(4)
        if not f_long.modulus.contains_lattice(four_L):
            raise UnrecognizedCl("doubled-root family not of (Z/4)-shape")
        digits = set()
        for m in f_long.members():
            for cr in f_long.modulus.coset_representatives(four_L):
                coeffs = Lp.coefficients(vadd(m, cr))
                if coeffs is None:
                    raise UnrecognizedCl("doubled-root family outside the lattice")
                d = 0
                for j, c in enumerate(coeffs):
                    d |= (int(c) % 4) << (2 * j)
                digits.add(d)
        data = ("BCn", 1, _mask_from_points(k, s_pts), tuple(sorted(digits)))
        return ClassDescriptor("BC1", k, data)

    f_pair = fam(vadd(unit(0), unit(1)))
    Lp = Lattice.from_vectors(
        L.dim, list(f_pair.members()) + list(f_pair.modulus.basis)
    )
    s1 = _points_mod2(f_short.scale(2), Lp)
    s2 = _points_mod2(f_long, Lp)
    s3 = _points_mod2(f_pair, Lp)
    data = (
        "BCn",
        n,
        _mask_from_points(k, s1),
        _mask_from_points(k, s2),
        _mask_from_points(k, s3),
    )
    return ClassDescriptor(f"BC{n}", k, data)


# ---------------------------------------------------------------------------
# enumerate_classes


def enumerate_classes(cl_name: str, k: int) -> List[ClassDescriptor]:
    """Complete duplicate-free descriptor list for the classified types."""
    _check_k(k)
    name = cl_name.strip().replace(" ", "")
    if _is_case_i(name):
        return [_desc_aff(name, k)]
    npoints = 1 << k
    full = (1 << npoints) - 1

    if name == "A1":
        out = set()
        for mask in range(1, full + 1):
            pts = frozenset(p for p in range(npoints) if (mask >> p) & 1)
            if contains_affine_basis_points(k, pts):
                out.add(canonical_mask(k, mask))
        return [ClassDescriptor("A1", k, ("S", m)) for m in sorted(out)]

    if name in ("G2", "F4"):
        return [ClassDescriptor(name, k, ("s", s)) for s in range(k + 1)]

    if name == "C2":
        out = set()
        for m1 in range(1, full + 1):
            if not (m1 & 1):
                continue
            pts1 = frozenset(p for p in range(npoints) if (m1 >> p) & 1)
            if not contains_affine_basis_points(k, pts1):
                continue
            for m2 in range(1, full + 1):
                if not (m2 & 1):
                    continue
                ok = all(
                    (m1 >> (a ^ b)) & 1
                    for a in pts1
                    for b in range(npoints)
                    if (m2 >> b) & 1
                )
                if ok:
                    out.add(
                        canonical_pair(
                            k, m1, m2, translate_second=True, complement_first=False
                        )
                    )
        return [ClassDescriptor("C2", k, ("S1S2",) + p) for p in sorted(out)]

    m = catalog._NAME_RE.match(name)
    if m and m.group(1) in ("B", "C") and int(m.group(2)) >= 3:
        out = {canonical_mask(k, mask) for mask in range(1, full + 1)}
        return [ClassDescriptor(name, k, ("S", mm)) for mm in sorted(out)]

    if name.startswith("B(") and "," in name:
        out = {canonical_mask(k, mask) for mask in range(1, full + 1)}
        return [ClassDescriptor(name, k, ("S", mm)) for mm in sorted(out)]

    if name.startswith(("C(", "BC(")) and "," in name:
        # dedupe materialized instances: keeps the listing consistent with
        # the canonical forms `identify` extracts
        inner = name[name.index("(") + 1 : -1]
        mm, nn = (int(x) for x in inner.split(","))
        if name.startswith("C(") and mm * nn <= 1:
            raise NotClassified(
                "C(1,1) admits infinitely many classes (rational quotients)"
            )
        with_shorts = name.startswith("BC(")
        seen = {}
        for m1 in range(1, full):
            pts1 = [p for p in range(npoints) if (m1 >> p) & 1]
            if min(pts1) != 0:
                continue  # subset translation is a definitional collapse
            if with_shorts:
                for m2 in range(1, full + 1):
                    pts2 = [p for p in range(npoints) if (m2 >> p) & 1]
                    d = identify(catalog.family(name, k, S=pts1, Sp=pts2))
                    seen.setdefault(d.data, d)
            else:
                d = identify(catalog.family(name, k, S=pts1))
                seen.setdefault(d.data, d)
        return [seen[key] for key in sorted(seen)]

    if name.startswith("BC") and name[2:].isdigit():
        raise NotClassified(f"no complete classification for cl = {name}")

    raise NotClassified(f"no enumeration rule for {name}")


# ---------------------------------------------------------------------------
# Kac-Moody names (k = 1)


def _subscript(name: str) -> str:
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return f"{head}_{tail}" if tail else name


def kac_moody_name(desc: ClassDescriptor) -> str:
    """Name of the (twisted) affine superalgebra with these real roots."""
    if desc.k != 1:
        raise NoName("the name table covers one-dimensional radicals only")
    kind = desc.kind()
    cl = desc.cl
    if kind == "affinization":
        return f"{_subscript(cl)}^(1)"
    if kind == "S":
        mask = desc.data[1]
        if cl == "A1":
            return "A_1^(1)"
        if cl.startswith("B(") :
            mm, nn = (int(x) for x in cl[2:-1].split(","))
            return f"B({mm},{nn})^(1)" if mask == 0b01 else f"D({mm + 1},{nn})^(2)"
        if cl.startswith("B") and cl[1:].isdigit():
            n = int(cl[1:])
            return f"B_{n}^(1)" if mask == 0b01 else f"D_{n + 1}^(2)"
        if cl.startswith("C(") and "," in cl:
            mm, nn = (int(x) for x in cl[2:-1].split(","))
            return f"A({2 * mm - 1},{2 * nn - 1})^(2)"
        if cl.startswith("C") and cl[1:].isdigit():
            n = int(cl[1:])
            return f"C_{n}^(1)" if mask == 0b11 else f"A_{2 * n - 1}^(2)"
    if kind == "s":
        s = desc.data[1]
        if cl == "G2":
            return "G_2^(1)" if s == 1 else "D_4^(3)"
        if cl == "F4":
            return "F_4^(1)" if s == 1 else "E_6^(2)"
    if kind == "S1S2" and cl == "C2":
        if desc.data[1:] == (0b11, 0b11):
            return "C_2^(1)"
        if desc.data[1:] == (0b11, 0b01):
            return "A_3^(2)"
    if kind == "SSp" and cl.startswith("BC("):
        # calibrated against the zero-subset displays (for m = n the two
        # twisted names coincide, so the epsilon/delta labeling is immaterial)
        mm, nn = (int(x) for x in cl[3:-1].split(","))
        s, sp = desc.data[1], desc.data[2]
        if sp == 0b11:
            return f"A({2 * mm},{2 * nn})^(4)"
        if (s, sp) == (0b01, 0b01):
            return f"A({2 * nn},{2 * mm - 1})^(2)"
        if (s, sp) == (0b01, 0b10):
            return f"A({2 * mm},{2 * nn - 1})^(2)"
    raise NoName(f"no name attached to {desc}")
