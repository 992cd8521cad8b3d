import itertools
import random

import pytest

from grrs.catalog import a_nn_x, build, family
from grrs.classify import (
    ClassDescriptor,
    F2Subset,
    affine_canonical,
    canonical_mask,
    contains_affine_basis,
    enumerate_classes,
    identify,
    kac_moody_name,
    recognize_cl,
)
from grrs.errors import KTooLarge, NoName, NotClassified, UnrecognizedCl
from grrs.symbolic import affinize, from_finite


def brute_force_affine_orbit(k, mask):
    """Independent oracle: enumerate AGL(k,2) as matrix/translation pairs."""
    n = 1 << k
    points = list(range(n))

    def gf2_rank(vs):
        pivots = {}
        for v in vs:
            cur = v
            while cur:
                h = cur.bit_length() - 1
                if h in pivots:
                    cur ^= pivots[h]
                else:
                    pivots[h] = cur
                    break
        return len(pivots)

    orbit = set()
    for cols in itertools.product(range(n), repeat=k):
        if gf2_rank(cols) != k:
            continue
        table = []
        for p in points:
            img = 0
            for j in range(k):
                if (p >> j) & 1:
                    img ^= cols[j]
            table.append(img)
        for t in points:
            out = 0
            for p in points:
                if (mask >> p) & 1:
                    out |= 1 << (table[p] ^ t)
            orbit.add(out)
    return orbit


class TestAffineCanonical:
    def test_singleton_translates_to_zero(self):
        assert affine_canonical(F2Subset.from_points(1, [1])) == F2Subset(1, 0b01)

    def test_k1_canonical_count(self):
        # brute force over the 3 nonempty subsets of F_2
        canon = {canonical_mask(1, m) for m in (1, 2, 3)}
        assert canon == {0b01, 0b11}

    def test_k2_three_point_transitivity(self):
        masks = [m for m in range(16) if bin(m).count("1") == 3]
        canon = {canonical_mask(2, m) for m in masks}
        assert len(canon) == 1
        oracle = brute_force_affine_orbit(2, masks[0])
        assert set(masks) <= oracle

    def test_matches_brute_force_orbits(self):
        for mask in range(1, 16):
            orbit = brute_force_affine_orbit(2, mask)
            assert canonical_mask(2, mask) == min(orbit)

    def test_idempotent_and_orbit_constant(self):
        rng = random.Random(5)
        k = 2
        gl = []
        for mask in (0b0110, 0b1011, 0b0001, 0b1111, 0b0111):
            c = affine_canonical(F2Subset(k, mask))
            assert affine_canonical(c) == c
            orbit = sorted(brute_force_affine_orbit(k, mask))
            for _ in range(50):
                m2 = orbit[rng.randrange(len(orbit))]
                assert canonical_mask(k, m2) == c.mask

    def test_k_cap(self):
        with pytest.raises(KTooLarge):
            canonical_mask(5, 1)


class TestContainsAffineBasis:
    def test_k1(self):
        assert contains_affine_basis(F2Subset.from_points(1, [0, 1]))
        assert not contains_affine_basis(F2Subset.from_points(1, [0]))

    def test_k2_line(self):
        assert not contains_affine_basis(F2Subset.from_points(2, [0, 1]))

    def test_k2_triangle(self):
        assert contains_affine_basis(F2Subset.from_points(2, [0, 1, 2]))
        assert contains_affine_basis(F2Subset.from_points(2, [1, 2, 3]))


class TestEnumerate:
    def test_case_i_single_class(self):
        for name in ("A2", "A5", "D4", "E6", "E7", "E8", "A(2,1)", "C(2)",
                      "D(2,2)", "D(2,1;a=1/2)", "G(3)", "F(4)"):
            descs = enumerate_classes(name, 1)
            assert len(descs) == 1
            assert descs[0].data == ("affinization",)

    def test_two_orbit_counts_k1(self):
        for name in ("B3", "C3", "B(1,1)", "B(2,2)"):
            assert len(enumerate_classes(name, 1)) == 2
        for name in ("G2", "F4"):
            assert len(enumerate_classes(name, 1)) == 2

    def test_a1_counts(self):
        assert len(enumerate_classes("A1", 1)) == 1
        assert len(enumerate_classes("A1", 2)) == 2

    def test_a1_k2_against_oracle(self):
        # oracle: all 16 subsets, keep those containing an affine basis,
        # reduce by brute-forced affine orbits
        good = []
        for mask in range(16):
            pts = [p for p in range(4) if (mask >> p) & 1]
            if not pts:
                continue
            base = pts[0]
            diffs = [p ^ base for p in pts]
            pivots = {}
            for v in diffs:
                cur = v
                while cur:
                    h = cur.bit_length() - 1
                    if h in pivots:
                        cur ^= pivots[h]
                    else:
                        pivots[h] = cur
                        break
            if len(pivots) >= 2:
                good.append(mask)
        reps = {min(brute_force_affine_orbit(2, m)) for m in good}
        assert len(reps) == len(enumerate_classes("A1", 2))

    def test_g2_k2(self):
        descs = enumerate_classes("G2", 2)
        assert [d.data for d in descs] == [("s", 0), ("s", 1), ("s", 2)]

    def test_c2_k1(self):
        assert len(enumerate_classes("C2", 1)) == 2

    def test_bc_and_weak_counts(self):
        assert len(enumerate_classes("BC(1,1)", 1)) == 3
        assert len(enumerate_classes("C(2,1)", 1)) == 1

    def test_not_classified(self):
        with pytest.raises(NotClassified):
            enumerate_classes("BC2", 1)
        with pytest.raises(NotClassified):
            enumerate_classes("C(1,1)", 1)


class TestRecognize:
    def test_recognizes_catalog_entries(self):
        for name in ("A3", "B3", "C4", "D4", "G2", "F4", "BC2",
                      "A(2,1)", "B(1,2)", "D(2,2)", "G(3)", "F(4)",
                      "C(2,1)", "BC(1,1)", "C(1,1)"):
            got, _, _ = recognize_cl(build(name))
            assert got == name, (name, got)

    def test_low_rank_coincidence(self):
        # C(2) and A(1,0) have the same root system; the A-name is canonical
        got, _, _ = recognize_cl(build("C(2)"))
        assert got == "A(1,0)"
        from grrs.finite import isomorphic_finite
        assert isomorphic_finite(build("C(2)"), build("A(1,0)")) is not None

    def test_d21a_parameter_recovery(self):
        got, _, _ = recognize_cl(build("D(2,1;a=1/2)"))
        assert got.startswith("D(2,1;a=")

    def test_unrecognized(self):
        from grrs.finite import FiniteRootSystem
        from grrs.linalg import standard_space, vec

        junk = FiniteRootSystem(
            standard_space(2), [vec([1, 0]), vec([-1, 0]), vec([3, 1]), vec([-3, -1])]
        )
        with pytest.raises(UnrecognizedCl):
            recognize_cl(junk)


class TestIdentify:
    def test_affinizations_are_case_i(self):
        for name in ("A2", "D4", "A(2,1)", "C(2)", "D(2,1;a=1/2)", "G(3)", "F(4)"):
            d = identify(affinize(build(name), 1))
            assert d.data == ("affinization",)

    def test_b3_classes_and_names(self):
        d0 = identify(family("B3", 1, S={0}))
        d1 = identify(family("B3", 1, S={0, 1}))
        assert d0 != d1
        assert identify(affinize(build("B3"), 1)) == d0
        assert kac_moody_name(d0) == "B_3^(1)"
        assert kac_moody_name(d1) == "D_4^(2)"

    def test_c3_names(self):
        d0 = identify(family("C3", 1, S={0}))
        d1 = identify(family("C3", 1, S={0, 1}))
        assert kac_moody_name(d0) == "A_5^(2)"
        assert kac_moody_name(d1) == "C_3^(1)"
        assert identify(affinize(build("C3"), 1)) == d1

    def test_g2_f4(self):
        assert kac_moody_name(identify(family("G2", 1, s=0))) == "D_4^(3)"
        assert kac_moody_name(identify(family("F4", 1, s=0))) == "E_6^(2)"
        assert kac_moody_name(identify(affinize(build("F4"), 1))) == "F_4^(1)"
        d = enumerate_classes("G2", 2)
        mats = [identify(family("G2", 2, s=s)) for s in range(3)]
        assert mats == d

    def test_b11_names(self):
        d0 = identify(family("B(1,1)", 1, S={0}))
        d1 = identify(family("B(1,1)", 1, S={0, 1}))
        assert kac_moody_name(d0) == "B(1,1)^(1)"
        assert kac_moody_name(d1) == "D(2,1)^(2)"
        assert identify(affinize(build("B(1,1)"), 1)) == d0

    def test_c2_pair(self):
        aff = identify(affinize(build("B2"), 1))
        tw = identify(family("C2", 1, S1={0, 1}, S2={0}))
        assert aff.cl == "C2" and aff != tw
        assert kac_moody_name(aff) == "C_2^(1)"
        assert kac_moody_name(tw) == "A_3^(2)"

    def test_annx_rules(self):
        d13 = identify(a_nn_x(2, 1, 3, 0))
        d23 = identify(a_nn_x(2, 2, 3, 0))
        d12 = identify(a_nn_x(2, 1, 2, 0))
        d14 = identify(a_nn_x(2, 1, 4, 0))
        d34 = identify(a_nn_x(2, 3, 4, 0))
        assert d13 == d23 and d14 == d34
        assert len({d12.data, d13.data, d14.data}) == 3
        assert identify(a_nn_x(2, 1, 3, 1)) == identify(a_nn_x(2, 2, 3, 1))
        d15 = identify(a_nn_x(2, 1, 5, 0))
        d25 = identify(a_nn_x(2, 2, 5, 0))
        assert d15 != d25  # 1/5 and 2/5 are genuinely different classes

    def test_ann_gl_branch(self):
        d = identify(affinize(build("A(2,2)"), 1))
        assert d.data == ("gl",)
        dq = identify(a_nn_x(2, 1, 3, 0))
        assert d != dq

    def test_c11_collapse_with_half(self):
        # the subset form over one point equals the x = 1/2 quotient
        r0 = identify(family("C(1,1)", 1, S={0}))
        ahalf = identify(a_nn_x(1, 1, 2, 0))
        assert r0 == ahalf
        a13 = identify(a_nn_x(1, 1, 3, 0))
        assert r0 != a13

    def test_c11_k2_subset_vs_quotient(self):
        sub = identify(family("C(1,1)", 2, S={0}))
        quo = identify(a_nn_x(1, 1, 2, 1))
        assert sub.data[0] == "C11S"
        assert quo.data[0] == "Annx"
        assert sub != quo

    def test_bc_pair_classes(self):
        i00 = identify(family("BC(1,1)", 1, S={0}, Sp={0}))
        i10 = identify(family("BC(1,1)", 1, S={1}, Sp={0}))
        i01 = identify(family("BC(1,1)", 1, S={0}, Sp={1}))
        i11 = identify(family("BC(1,1)", 1, S={1}, Sp={1}))
        iF = identify(family("BC(1,1)", 1, S={0}, Sp={0, 1}))
        assert i00 == i10 and i01 == i11
        assert len({i00.data, i01.data, iF.data}) == 3
        assert kac_moody_name(iF) == "A(2,2)^(4)"

    def test_bc21_names(self):
        assert kac_moody_name(identify(family("BC(2,1)", 1, S={0}, Sp={0}))) == "A(2,3)^(2)"
        assert kac_moody_name(identify(family("BC(2,1)", 1, S={0}, Sp={1}))) == "A(4,1)^(2)"
        assert kac_moody_name(identify(family("BC(2,1)", 1, S={0}, Sp={0, 1}))) == "A(4,2)^(4)"

    def test_cmn_single_class_name(self):
        c = identify(family("C(2,1)", 1, S={0}))
        assert identify(family("C(2,1)", 1, S={1})) == c
        assert kac_moody_name(c) == "A(3,1)^(2)"

    def test_cmn_complement_collapse(self):
        a = identify(family("C(2,2)", 2, S={0}))
        b = identify(family("C(2,2)", 2, S={1, 2, 3}))
        assert a == b

    def test_every_instance_maps_to_listed(self):
        listed = {d.data for d in enumerate_classes("BC(1,1)", 1)}
        for S in ({0}, {1}):
            for Sp in ({0}, {1}, {0, 1}):
                assert identify(family("BC(1,1)", 1, S=S, Sp=Sp)).data in listed
        listedB = {d.data for d in enumerate_classes("B3", 2)}
        for mask in range(1, 16):
            pts = [p for p in range(4) if (mask >> p) & 1]
            assert identify(family("B3", 2, S=pts)).data in listedB

    def test_invariant_under_resplit(self):
        rng = random.Random(11)
        for sys_ in (a_nn_x(1, 1, 3, 0), family("B3", 1, S={0, 1}),
                     family("BC(1,1)", 1, S={0}, Sp={1}), family("G2", 2, s=1)):
            d0 = identify(sys_)
            offsets = {}
            for b in sys_.splitting():
                mem = sys_.family_of_lift(b).members()
                offsets[b] = mem[rng.randrange(len(mem))]
            assert identify(sys_.resplit(offsets)) == d0

    def test_bc_n_partial_descriptors(self):
        d1 = identify(family("BC1", 1, S={0, 1}, H2=[0, 2]))
        d2 = identify(family("BC1", 1, S={0, 1}, H2=[0, 1, 2, 3]))
        assert d1.cl == "BC1" and d1.data[0] == "BCn"
        assert d1 != d2
        d3 = identify(family("BC2", 1, S1={0, 1}, S2={0, 1}, T={0, 1}))
        assert d3.cl == "BC2"

    def test_invariant_under_reserialization(self):
        from grrs import serialize

        for sys_ in (a_nn_x(2, 1, 3, 0), family("C2", 1, S1={0, 1}, S2={0})):
            again = serialize.loads(serialize.dumps(sys_))
            assert identify(again) == identify(sys_)


class TestKacMoodyNames:
    def test_case_i_names(self):
        assert kac_moody_name(ClassDescriptor("A3", 1, ("affinization",))) == "A_3^(1)"
        assert kac_moody_name(ClassDescriptor("A(2,1)", 1, ("affinization",))) == "A(2,1)^(1)"

    def test_no_name_for_higher_k(self):
        with pytest.raises(NoName):
            kac_moody_name(ClassDescriptor("B3", 2, ("S", 1)))

    def test_no_name_for_ann(self):
        with pytest.raises(NoName):
            kac_moody_name(identify(a_nn_x(2, 1, 3, 0)))
