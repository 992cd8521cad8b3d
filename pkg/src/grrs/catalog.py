"""Constructors for the named finite and affine systems.

Finite systems are produced in epsilon/delta coordinates with the orthogonal
form diag(+1..+1, -1..-1) (scaled per family), then restricted to the span
of their roots, so every constructor output satisfies the span axiom in its
own space.  Affine families attach coset data over k appended central
directions delta_1..delta_k.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction as Q
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import BadMatrix, BadParameters
from .finite import FiniteRootSystem, reflect
from .linalg import (
    BilinearSpace,
    Lattice,
    Vector,
    standard_space,
    unit_vector,
    vadd,
    vneg,
    vscale,
    vsub,
    vec,
    zero_vector,
)
from .symbolic import CosetSet, SymbolicRootSystem, affinize, from_finite, quotient


def _pm(v: Vector) -> List[Vector]:
    return [v, vneg(v)]


def _eps(dim: int, i: int, sign: int = 1) -> Vector:
    return tuple(Q(sign) if j == i else Q(0) for j in range(dim))


def _pairs_roots(dim, idxs, with_sum=True, with_diff=True):
    out = []
    for i, j in itertools.combinations(idxs, 2):
        if with_diff:
            out += _pm(vsub(_eps(dim, i), _eps(dim, j)))
        if with_sum:
            out += _pm(vadd(_eps(dim, i), _eps(dim, j)))
    return out


def _classical(kind: str, n: int) -> FiniteRootSystem:
    if kind == "A":
        if n < 1:
            raise BadParameters("A_n needs n >= 1")
        dim = n + 1
        roots = []
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.append(vsub(_eps(dim, i), _eps(dim, j)))
        return FiniteRootSystem(standard_space(dim), roots).restricted_to_span()
    if kind == "B":
        if n < 2:
            raise BadParameters("B_n needs n >= 2")
        roots = _pairs_roots(n, range(n))
        for i in range(n):
            roots += _pm(_eps(n, i))
        return FiniteRootSystem(standard_space(n), roots)
    if kind == "C":
        if n < 1:
            raise BadParameters("C_n needs n >= 1")
        roots = _pairs_roots(n, range(n))
        for i in range(n):
            roots += _pm(vscale(2, _eps(n, i)))
        return FiniteRootSystem(standard_space(n), roots)
    if kind == "D":
        if n < 2:
            raise BadParameters("D_n needs n >= 2")
        return FiniteRootSystem(standard_space(n), _pairs_roots(n, range(n)))
    if kind == "BC":
        if n < 1:
            raise BadParameters("BC_n needs n >= 1")
        roots = _pairs_roots(n, range(n))
        for i in range(n):
            roots += _pm(_eps(n, i)) + _pm(vscale(2, _eps(n, i)))
        return FiniteRootSystem(standard_space(n), roots)
    raise BadParameters(f"unknown classical family {kind}")


def _g2() -> FiniteRootSystem:
    # short root norm 1; basis (alpha short, beta long)
    sp = BilinearSpace([[1, Q(-3, 2)], [Q(-3, 2), 3]])
    pos = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    roots = []
    for a, b in pos:
        roots += _pm(vec([a, b]))
    return FiniteRootSystem(sp, roots)


def _f4() -> FiniteRootSystem:
    # short root norm 2: orthogonal coordinates with gram 2*I
    sp = BilinearSpace([[2 if i == j else 0 for j in range(4)] for i in range(4)])
    roots = _pairs_roots(4, range(4))
    for i in range(4):
        roots += _pm(_eps(4, i))
    for signs in itertools.product((1, -1), repeat=4):
        roots.append(tuple(Q(s, 2) for s in signs))
    return FiniteRootSystem(sp, roots)


def _e8_roots() -> List[Vector]:
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Q(0)] * 8
                v[i], v[j] = Q(si), Q(sj)
                roots.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(Q(s, 2) for s in signs))
    return roots


def _e_series(n: int) -> FiniteRootSystem:
    sp = standard_space(8)
    roots = _e8_roots()
    if n == 8:
        return FiniteRootSystem(sp, roots)
    walls = [vadd(_eps(8, 6), _eps(8, 7))]
    if n == 6:
        walls.append(vadd(_eps(8, 5), _eps(8, 7)))
    picked = [
        r for r in roots if all(sp.form(r, w) == 0 for w in walls)
    ]
    return FiniteRootSystem(sp, picked).restricted_to_span()


def _super_a(m: int, n: int) -> FiniteRootSystem:
    dim = m + n + 2
    sp = standard_space(m + 1, n + 1)
    roots = []
    for i in range(dim):
        for j in range(dim):
            if i != j:
                roots.append(vsub(_eps(dim, i), _eps(dim, j)))
    return FiniteRootSystem(sp, roots).restricted_to_span()


def _super_b(m: int, n: int) -> FiniteRootSystem:
    if m < 1 or n < 1:
        raise BadParameters("B(m,n) needs m, n >= 1")
    dim = m + n
    sp = standard_space(m, n)
    eps = list(range(m))
    dlt = list(range(m, dim))
    roots = _pairs_roots(dim, eps) + _pairs_roots(dim, dlt)
    for i in eps:
        roots += _pm(_eps(dim, i))
    for p in dlt:
        roots += _pm(_eps(dim, p)) + _pm(vscale(2, _eps(dim, p)))
    for i in eps:
        for p in dlt:
            roots += _pm(vadd(_eps(dim, i), _eps(dim, p)))
            roots += _pm(vsub(_eps(dim, i), _eps(dim, p)))
    return FiniteRootSystem(sp, roots)


def _super_d(m: int, n: int) -> FiniteRootSystem:
    if m < 2 or n < 1:
        raise BadParameters("D(m,n) needs m >= 2, n >= 1")
    dim = m + n
    sp = standard_space(m, n)
    eps = list(range(m))
    dlt = list(range(m, dim))
    roots = _pairs_roots(dim, eps) + _pairs_roots(dim, dlt)
    for p in dlt:
        roots += _pm(vscale(2, _eps(dim, p)))
    for i in eps:
        for p in dlt:
            roots += _pm(vadd(_eps(dim, i), _eps(dim, p)))
            roots += _pm(vsub(_eps(dim, i), _eps(dim, p)))
    return FiniteRootSystem(sp, roots)


def _super_c(n: int) -> FiniteRootSystem:
    if n < 2:
        raise BadParameters("C(n) needs n >= 2")
    dim = n
    sp = standard_space(1, n - 1)
    dlt = list(range(1, dim))
    roots = _pairs_roots(dim, dlt)
    for p in dlt:
        roots += _pm(vscale(2, _eps(dim, p)))
        roots += _pm(vadd(_eps(dim, 0), _eps(dim, p)))
        roots += _pm(vsub(_eps(dim, 0), _eps(dim, p)))
    return FiniteRootSystem(sp, roots)


def _d21a(a: Q) -> FiniteRootSystem:
    a = Q(a)
    if a in (0, -1):
        raise BadParameters("D(2,1;a) needs a outside {0, -1}")
    sp = BilinearSpace(
        [
            [Q(-(1 + a), 2), 0, 0],
            [0, Q(1, 2), 0],
            [0, 0, Q(a, 2)],
        ]
    )
    roots = []
    for i in range(3):
        roots += _pm(vscale(2, _eps(3, i)))
    for signs in itertools.product((1, -1), repeat=3):
        roots.append(tuple(Q(s) for s in signs))
    return FiniteRootSystem(sp, roots)


def _super_f4() -> FiniteRootSystem:
    sp = BilinearSpace(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -3]]
    )
    roots = _pairs_roots(4, range(3))
    for i in range(3):
        roots += _pm(_eps(4, i))
    roots += _pm(_eps(4, 3))
    for signs in itertools.product((1, -1), repeat=4):
        roots.append(tuple(Q(s, 2) for s in signs))
    return FiniteRootSystem(sp, roots)


def _super_g3() -> FiniteRootSystem:
    # G2 block with short norm 2, plus one odd direction of norm -2
    sp = BilinearSpace([[2, -3, 0], [-3, 6, 0], [0, 0, -2]])
    shorts = [vec([1, 0, 0]), vec([1, 1, 0]), vec([-2, -1, 0])]
    longs = [vec([0, 1, 0]), vec([3, 1, 0]), vec([3, 2, 0])]
    delta = vec([0, 0, 1])
    roots = []
    for v in shorts + longs:
        roots += _pm(v)
    roots += _pm(delta) + _pm(vscale(2, delta))
    for v in shorts:
        for s in (1, -1):
            roots += _pm(vadd(v, vscale(s, delta)))
    return FiniteRootSystem(sp, roots)


def _wgrs_c(m: int, n: int) -> FiniteRootSystem:
    if m < 1 or n < 1:
        raise BadParameters("C(m,n) needs m, n >= 1")
    dim = m + n
    sp = standard_space(m, n)
    eps = list(range(m))
    dlt = list(range(m, dim))
    roots = _pairs_roots(dim, eps) + _pairs_roots(dim, dlt)
    for i in eps:
        roots += _pm(vscale(2, _eps(dim, i)))
    for p in dlt:
        roots += _pm(vscale(2, _eps(dim, p)))
    for i in eps:
        for p in dlt:
            roots += _pm(vadd(_eps(dim, i), _eps(dim, p)))
            roots += _pm(vsub(_eps(dim, i), _eps(dim, p)))
    return FiniteRootSystem(sp, roots)


def _wgrs_bc(m: int, n: int) -> FiniteRootSystem:
    base = _wgrs_c(m, n)
    dim = m + n
    roots = list(base.roots)
    for i in range(dim):
        roots += _pm(_eps(dim, i))
    return FiniteRootSystem(base.space, roots)


_NAME_RE = re.compile(r"^([A-Z]+)(\d+)$")
_SUPER_RE = re.compile(r"^([A-Z]+)\(([^)]*)\)(_f)?$")


def build(name: str) -> FiniteRootSystem:
    """Construct a named finite system (classical, super, or weak)."""
    name = name.strip().replace(" ", "")
    m = _NAME_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind in ("A", "B", "C", "D", "BC"):
            return _classical(kind, n)
        if kind == "G" and n == 2:
            return _g2()
        if kind == "F" and n == 4:
            return _f4()
        if kind == "E" and n in (6, 7, 8):
            return _e_series(n)
        raise BadParameters(f"unknown system {name}")
    m = _SUPER_RE.match(name)
    if not m:
        raise BadParameters(f"cannot parse system name {name}")
    kind, args, f_suffix = m.group(1), m.group(2), m.group(3)
    parts = re.split(r"[;,]", args)
    if kind == "A" and len(parts) == 2 and not f_suffix:
        mm, nn = int(parts[0]), int(parts[1])
        return _super_a(mm, nn)
    if kind == "A" and len(parts) == 2 and f_suffix:
        mm, nn = int(parts[0]), int(parts[1])
        if mm != nn:
            raise BadParameters("the _f quotient applies to A(n,n) only")
        return from_finite(_super_a(nn, nn)).cl()
    if kind == "B" and len(parts) == 2:
        return _super_b(int(parts[0]), int(parts[1]))
    if kind == "D" and len(parts) == 2:
        return _super_d(int(parts[0]), int(parts[1]))
    if kind == "D" and len(parts) == 3 and parts[2].startswith("a="):
        if (int(parts[0]), int(parts[1])) != (2, 1):
            raise BadParameters("the one-parameter family is D(2,1;a)")
        try:
            a = Q(parts[2][2:])
        except (ValueError, ZeroDivisionError):
            raise BadParameters("the parameter of D(2,1;a) must be rational")
        return _d21a(a)
    if kind == "C" and len(parts) == 1:
        return _super_c(int(parts[0]))
    if kind == "C" and len(parts) == 2:
        return _wgrs_c(int(parts[0]), int(parts[1]))
    if kind == "BC" and len(parts) == 2:
        return _wgrs_bc(int(parts[0]), int(parts[1]))
    if kind == "F" and parts == ["4"]:
        return _super_f4()
    if kind == "G" and parts == ["3"]:
        return _super_g3()
    raise BadParameters(f"cannot parse system name {name}")


def generating_roots(name: str) -> List[Vector]:
    """A standard generating set (simple-root style) in catalog coordinates.

    Used to normalize family data to the convention where the generating
    classes carry actual roots.  For the weak C/BC pairs this is the
    C_m + C_n generating set, which generates a proper subsystem.
    """
    name = name.strip().replace(" ", "")
    m = _NAME_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "A":
            sys_ = _classical("A", n)
            basis = sys_.span_basis()
            return list(basis)
        if kind in ("B", "BC"):
            dim = n
            out = [vsub(_eps(dim, i), _eps(dim, i + 1)) for i in range(n - 1)]
            out.append(_eps(dim, n - 1))
            return out
        if kind == "C":
            dim = n
            out = [vsub(_eps(dim, i), _eps(dim, i + 1)) for i in range(n - 1)]
            out.append(vscale(2, _eps(dim, n - 1)))
            return out
        if kind == "G" and n == 2:
            return [vec([1, 0]), vec([0, 1])]
        if kind == "F" and n == 4:
            return [
                vsub(_eps(4, 1), _eps(4, 2)),
                vsub(_eps(4, 2), _eps(4, 3)),
                _eps(4, 3),
                vec([Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)]),
            ]
    sm = _SUPER_RE.match(name)
    if sm and sm.group(1) == "B":
        mm, nn = (int(x) for x in sm.group(2).split(","))
        dim = mm + nn
        out = [vsub(_eps(dim, mm + p), _eps(dim, mm + p + 1)) for p in range(nn - 1)]
        out.append(vsub(_eps(dim, mm + nn - 1), _eps(dim, 0)))
        out += [vsub(_eps(dim, i), _eps(dim, i + 1)) for i in range(mm - 1)]
        out.append(_eps(dim, mm - 1))
        return out
    if sm and sm.group(1) in ("C", "BC") and len(sm.group(2).split(",")) == 2:
        mm, nn = (int(x) for x in sm.group(2).split(","))
        dim = mm + nn
        out = [vsub(_eps(dim, i), _eps(dim, i + 1)) for i in range(mm - 1)]
        out.append(vscale(2, _eps(dim, mm - 1)))
        out += [vsub(_eps(dim, mm + p), _eps(dim, mm + p + 1)) for p in range(nn - 1)]
        out.append(vscale(2, _eps(dim, dim - 1)))
        return out
    raise BadParameters(f"no generating set recorded for {name}")


# ---------------------------------------------------------------------------
# Reflection closures of symmetric matrices


def real_roots_from_matrix(
    matrix: Sequence[Sequence], J: Sequence[int] = (), height_bound: int = 20
) -> Tuple[FiniteRootSystem, bool]:
    """Closure of the unit basis (plus doubled J-entries) under simple
    reflections, truncated at the given height.

    Returns (system, truncated).  Height is the sum of absolute coordinates
    in the simple basis.
    """
    C = [[Q(x) for x in row] for row in matrix]
    n = len(C)
    if any(len(row) != n for row in C):
        raise BadMatrix("matrix is not square")
    for i in range(n):
        for j in range(n):
            if C[i][j] != C[j][i]:
                raise BadMatrix("matrix is not symmetric")
    for i in range(n):
        if C[i][i] == 0:
            raise BadMatrix("zero diagonal entry")
        for j in range(n):
            if (2 * C[i][j] / C[i][i]).denominator != 1:
                raise BadMatrix("2 c_ij / c_ii must be integral")
    J = sorted(set(J))
    for j in J:
        if not 0 <= j < n:
            raise BadMatrix("J index out of range")
        for i in range(n):
            if (C[j][i] / C[j][j]).denominator != 1:
                raise BadMatrix("c_ji / c_jj must be integral for j in J")
    if height_bound < 1:
        raise BadMatrix("height bound must be positive")

    space = BilinearSpace(C)
    simple = [unit_vector(n, i) for i in range(n)]

    def height(v: Vector) -> Q:
        return sum(abs(x) for x in v)

    seeds = list(simple) + [vscale(2, unit_vector(n, j)) for j in J]
    found = set()
    frontier = []
    truncated = False
    for s in seeds:
        for v in (s, vneg(s)):
            if v not in found:
                found.add(v)
                frontier.append(v)
    while frontier:
        v = frontier.pop()
        for a in simple:
            img = reflect(space, a, v)
            if img in found:
                continue
            if height(img) > height_bound:
                truncated = True
                continue
            found.add(img)
            frontier.append(img)
    return FiniteRootSystem(space, sorted(found)), truncated


# ---------------------------------------------------------------------------
# The A(n,n)_x family


def a_nn_x(n: int, p: int, q: int, extra_affinizations: int = 0) -> SymbolicRootSystem:
    """Quotient of the (1+k)-fold affinization of A(n,n) by I + (p/q) delta."""
    if n < 1:
        raise BadParameters("A(n,n) needs n >= 1")
    if q < 1:
        raise BadParameters("q must be positive")
    if gcd(abs(p), q) != 1:
        raise BadParameters("p/q must be in lowest terms")
    if n == 1 and q == 1:
        raise BadParameters("A(1,1)_x needs a non-integral x")
    if extra_affinizations < 0:
        raise BadParameters("extra affinization count must be nonnegative")
    fin = _super_a(n, n)
    sym = from_finite(fin)
    if sym.L.rank != 1:
        raise BadParameters("unexpected radical for A(n,n)")
    Ivec = sym.L.basis[0]
    aff = affinize(fin, 1 + extra_affinizations)
    direction = tuple(
        list(Ivec) + [Q(p, q)] + [Q(0)] * extra_affinizations
    )
    return quotient(aff, [direction], require_bijective=True)


# ---------------------------------------------------------------------------
# Classified affine families over F_2^k data


PointSet = FrozenSet[int]


def _points(k: int, S) -> PointSet:
    pts = frozenset(int(x) for x in S)
    for p in pts:
        if not 0 <= p < (1 << k):
            raise BadParameters(f"point {p} outside F_2^{k}")
    return pts


def _normalize_zero(S: PointSet) -> PointSet:
    """Translate so the set contains 0 (by its minimal element)."""
    if not S:
        return S
    s = min(S)
    return frozenset(p ^ s for p in S)


def _point_vec(k: int, offset: int, p: int, scale: Q = Q(1)) -> Vector:
    return tuple(
        scale * Q(1) if (offset <= j < offset + k and (p >> (j - offset)) & 1) else Q(0)
        for j in range(offset + k)
    )


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank over F_2 of bitmask-encoded vectors."""
    pivots: Dict[int, int] = {}
    for v in vectors:
        cur = v
        while cur:
            h = cur.bit_length() - 1
            if h in pivots:
                cur ^= pivots[h]
            else:
                pivots[h] = cur
                break
    return len(pivots)


def contains_affine_basis_points(k: int, S: PointSet) -> bool:
    """Some k+1 points of S affinely span F_2^k."""
    if not S:
        return False
    base = min(S)
    return gf2_rank([p ^ base for p in S]) >= k


def _family_entries(
    cl_system: FiniteRootSystem,
    k: int,
    orbit_offsets: Sequence[Tuple[Sequence[Vector], CosetSet]],
) -> SymbolicRootSystem:
    """Assemble a symbolic system: cl roots padded by k kernel coordinates."""
    dim0 = cl_system.space.dim
    dim = dim0 + k
    gram = [
        [
            cl_system.space.gram[i][j] if i < dim0 and j < dim0 else Q(0)
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    space = BilinearSpace(gram)

    def pad(v: Vector) -> Vector:
        return tuple(list(v) + [Q(0)] * k)

    entries = []
    for roots, fam in orbit_offsets:
        for r in roots:
            entries.append((pad(r), fam))
    return SymbolicRootSystem(space, entries)


def _kernel_lattices(dim: int, k: int):
    """(L, 2L, half L) for the k appended kernel coordinates."""
    gens = [unit_vector(dim, dim - k + i) for i in range(k)]
    L = Lattice.from_vectors(dim, gens)
    return L, L.scaled(2), L.scaled(Q(1, 2))


def _preimage_coset(dim: int, k: int, S: PointSet, scale: Q = Q(1)) -> CosetSet:
    """scale * (preimage of S under L -> L/2L) on the appended coordinates."""
    L, L2, Lhalf = _kernel_lattices(dim, k)
    ambient = Lhalf if scale != 1 else L
    reps = []
    for p in sorted(S):
        v = [Q(0)] * dim
        for j in range(k):
            if (p >> j) & 1:
                v[dim - k + j] = Q(1)
        reps.append(vscale(scale, tuple(v)))
    return CosetSet(ambient, L2.scaled(scale), zero_vector(dim), reps)


def _full_coset(dim: int, k: int) -> CosetSet:
    L, _, _ = _kernel_lattices(dim, k)
    return CosetSet.full_lattice(L)


def family(cl_name: str, k: int, **params) -> SymbolicRootSystem:
    """Affine system over F_2^k (or scale) data attached to a named quotient.

    Accepted parameter shapes:
      A1:                 S  (points of F_2^k containing an affine basis)
      B_n (n>=3), C_n (n>=3), B(m,n): S (nonempty)
      C2:                 S1, S2
      G2, F4:             s in 0..k
      C(m,n):             S (proper nonempty)
      BC(m,n):            S (proper nonempty), Sp (nonempty)
      BC1:                S, H2 (subset of (Z/4)^k, encoded base-4 digits)
      BC_n (n>=2):        S1, S2, and T for n == 2
    """
    if k < 1:
        raise BadParameters("k must be at least 1")
    name = cl_name.strip().replace(" ", "")

    def pts(key) -> PointSet:
        if key not in params or params[key] is None:
            raise BadParameters(f"missing parameter {key} for {name}")
        return _points(k, params[key])

    m = _NAME_RE.match(name)
    super_m = _SUPER_RE.match(name)

    if name == "A1":
        S = _normalize_zero(pts("S"))
        if not contains_affine_basis_points(k, S):
            raise BadParameters("S must contain an affine basis of F_2^k")
        cl_sys = _classical("A", 1)
        fam = _preimage_coset(cl_sys.space.dim + k, k, S)
        return _family_entries(cl_sys, k, [(cl_sys.roots, fam)])

    if name in ("G2", "F4"):
        s = params.get("s")
        if s is None or not 0 <= int(s) <= k:
            raise BadParameters("s must lie in 0..k")
        s = int(s)
        r = 3 if name == "G2" else 2
        cl_sys = _g2() if name == "G2" else _f4()
        dim = cl_sys.space.dim + k
        L, _, _ = _kernel_lattices(dim, k)
        gens = [unit_vector(dim, dim - k + i) for i in range(s)]
        gens += [vscale(r, unit_vector(dim, dim - k + i)) for i in range(s, k)]
        H2 = CosetSet.full_lattice(Lattice.from_vectors(dim, gens))
        norms = {cl_sys.norm(v) for v in cl_sys.roots}
        long_norm = max(norms)
        longs = [v for v in cl_sys.roots if cl_sys.norm(v) == long_norm]
        shorts = [v for v in cl_sys.roots if cl_sys.norm(v) != long_norm]
        return _family_entries(
            cl_sys, k, [(shorts, _full_coset(dim, k)), (longs, H2)]
        )

    if name == "C2" or (m and m.group(1) == "C" and int(m.group(2)) == 2):
        S1 = _normalize_zero(pts("S1"))
        S2 = _normalize_zero(pts("S2"))
        if not contains_affine_basis_points(k, S1):
            raise BadParameters("S1 must contain an affine basis of F_2^k")
        if not all((a ^ b) in S1 for a in S1 for b in S2):
            raise BadParameters("S1 + S2 must be contained in S1")
        cl_sys = _classical("C", 2)
        dim = cl_sys.space.dim + k
        shorts = [v for v in cl_sys.roots if cl_sys.norm(v) == 2]
        longs = [v for v in cl_sys.roots if cl_sys.norm(v) == 4]
        return _family_entries(
            cl_sys,
            k,
            [
                (shorts, _preimage_coset(dim, k, S1)),
                (longs, _preimage_coset(dim, k, S2)),
            ],
        )

    if m and m.group(1) in ("B", "C") and int(m.group(2)) >= 3:
        kind, n = m.group(1), int(m.group(2))
        S = _normalize_zero(pts("S"))
        cl_sys = _classical(kind, n)
        dim = cl_sys.space.dim + k
        if kind == "B":
            o1 = [v for v in cl_sys.roots if cl_sys.norm(v) == 2]
            o2 = [v for v in cl_sys.roots if cl_sys.norm(v) == 1]
            L, L2, _ = _kernel_lattices(dim, k)
            return _family_entries(
                cl_sys,
                k,
                [
                    (o1, CosetSet.full_lattice(L2)),
                    (o2, _preimage_coset(dim, k, S)),
                ],
            )
        o1 = [v for v in cl_sys.roots if cl_sys.norm(v) == 2]
        o2 = [v for v in cl_sys.roots if cl_sys.norm(v) == 4]
        return _family_entries(
            cl_sys,
            k,
            [(o1, _full_coset(dim, k)), (o2, _preimage_coset(dim, k, S))],
        )

    if m and m.group(1) == "BC":
        n = int(m.group(2))
        return _family_bc_n(n, k, params)

    if super_m and super_m.group(1) == "B":
        mm, nn = (int(x) for x in super_m.group(2).split(","))
        S = _normalize_zero(pts("S"))
        cl_sys = _super_b(mm, nn)
        dim = cl_sys.space.dim + k
        shorts = [
            v
            for v in cl_sys.roots
            if sum(1 for x in v if x != 0) == 1 and abs(next(x for x in v if x)) == 1
        ]
        rest = [v for v in cl_sys.roots if v not in set(shorts)]
        L, L2, _ = _kernel_lattices(dim, k)
        return _family_entries(
            cl_sys,
            k,
            [
                (rest, CosetSet.full_lattice(L2)),
                (shorts, _preimage_coset(dim, k, S)),
            ],
        )

    if super_m and super_m.group(1) in ("C", "BC") and len(super_m.group(2).split(",")) == 2:
        kind = super_m.group(1)
        mm, nn = (int(x) for x in super_m.group(2).split(","))
        S = _normalize_zero(pts("S"))
        comp = frozenset(range(1 << k)) - S
        if not S or not comp:
            raise BadParameters("S must be a proper nonempty subset of F_2^k")
        cl_sys = _wgrs_c(mm, nn)
        dim = cl_sys.space.dim + k
        dim0 = cl_sys.space.dim
        eps_long = []
        dlt_long = []
        others = []
        for v in cl_sys.roots:
            support = [j for j, x in enumerate(v) if x != 0]
            if len(support) == 1 and abs(v[support[0]]) == 2:
                (eps_long if support[0] < mm else dlt_long).append(v)
            else:
                others.append(v)
        orbit_data = [
            (others, _full_coset(dim, k)),
            (eps_long, _preimage_coset(dim, k, S)),
            (dlt_long, _preimage_coset(dim, k, comp)),
        ]
        if kind == "BC":
            Sp = pts("Sp")
            if not Sp:
                raise BadParameters("Sp must be nonempty")
            shorts = []
            for j in range(dim0):
                shorts += _pm(_eps(dim0, j))
            orbit_data.append((shorts, _preimage_coset(dim, k, Sp, Q(1, 2))))
            cl_sys = _wgrs_bc(mm, nn)
        return _family_entries(cl_sys, k, orbit_data)

    raise BadParameters(f"no affine family constructor for {name}")


def _family_bc_n(n: int, k: int, params) -> SymbolicRootSystem:
    def pts(key) -> PointSet:
        if key not in params or params[key] is None:
            raise BadParameters(f"missing parameter {key} for BC{n}")
        return _points(k, params[key])

    cl_sys = _classical("BC", n)
    dim = cl_sys.space.dim + k
    L, L2, Lhalf = _kernel_lattices(dim, k)

    if n == 1:
        S = pts("S")
        H2_digits = params.get("H2")
        if H2_digits is None:
            raise BadParameters("missing parameter H2 for BC1")
        if 0 not in S or not contains_affine_basis_points(k, S):
            raise BadParameters("S must contain zero and a basis of F_2^k")
        h2 = frozenset(int(x) for x in H2_digits)
        for p in h2:
            if not 0 <= p < (1 << (2 * k)):
                raise BadParameters("H2 points must be base-4 digit masks")
        if not h2:
            raise BadParameters("H2 must be nonempty")

        def digits(p):
            return [(p >> (2 * j)) & 3 for j in range(k)]

        # closure H2 + 2 H2 in (Z/4)^k
        def addmod(a, b, mult):
            return [
                (x + mult * y) % 4 for x, y in zip(digits(a), digits(b))
            ]

        def undig(ds):
            return sum(d << (2 * j) for j, d in enumerate(ds))

        for a in h2:
            for b in h2:
                if undig(addmod(a, b, 2)) not in h2:
                    raise BadParameters("H2 + 2 H2 must be contained in H2")
        for a in h2:
            mod2 = sum(((d % 2) << j) for j, d in enumerate(digits(a)))
            if mod2 not in S:
                raise BadParameters("H2 must reduce into S modulo 2")
        h2_reps = []
        for p in sorted(h2):
            v = [Q(0)] * dim
            for j, d in enumerate(digits(p)):
                v[dim - k + j] = Q(d)
            h2_reps.append(tuple(v))
        fam_short = _preimage_coset(dim, k, S)
        fam_long = CosetSet(L, L.scaled(4), zero_vector(dim), h2_reps)
        shorts = [v for v in cl_sys.roots if cl_sys.norm(v) == 1]
        longs = [v for v in cl_sys.roots if cl_sys.norm(v) == 4]
        return _family_entries(cl_sys, k, [(shorts, fam_short), (longs, fam_long)])

    S1 = pts("S1")
    S2 = pts("S2")
    if 0 not in S1:
        raise BadParameters("S1 must contain zero")
    if not S2:
        raise BadParameters("S2 must be nonempty")
    if not all((a ^ b) in S1 for a in S1 for b in S2):
        raise BadParameters("S1 + S2 must be contained in S1")
    if n == 2:
        T = pts("T")
        if 0 not in T or not contains_affine_basis_points(k, T):
            raise BadParameters("T must contain zero and a basis of F_2^k")
        if not all((t ^ b) in T for t in T for b in S2):
            raise BadParameters("H2 + H3 must be contained in H3")
        if not all((t ^ b) in T for t in T for b in S1):
            raise BadParameters("2 H1 + H3 must be contained in H3")
        s1_shifts = frozenset(t ^ b for t in T for b in S1)
        s2_shifts = frozenset(t ^ b for t in T for b in S2)
        if s1_shifts != s2_shifts:
            raise BadParameters("H2 + H3 and 2 H1 + H3 must coincide")
        fam_pairs = _preimage_coset(dim, k, T)
    else:
        fam_pairs = _full_coset(dim, k)
    fam_short = _preimage_coset(dim, k, S1, Q(1, 2))
    fam_long = _preimage_coset(dim, k, S2)
    shorts = [v for v in cl_sys.roots if cl_sys.norm(v) == 1]
    longs = [v for v in cl_sys.roots if cl_sys.norm(v) == 4]
    pairs = [v for v in cl_sys.roots if cl_sys.norm(v) == 2]
    return _family_entries(
        cl_sys, k, [(shorts, fam_short), (longs, fam_long), (pairs, fam_pairs)]
    )
