"""Shared helpers: the offset-family invariance suite.

Checks, on a symbolic system, the structural identities that every honestly
constructed affine system must satisfy:

  (i)   F(-a) = -F(a)
  (ii)  F(w a) = F(a) for reflections w at embedded non-isotropic roots
  (iii) F(a) = -F(a) for non-isotropic a
  (iv)  same as (ii) for isotropic reflections when the quotient is a GRRS
  (sum) F(a+b) = F(a) + F(b) whenever r_a(b) = a + b
  (full) every family equals the whole offset lattice when the quotient is
         a transitive GRRS other than A1 that embeds back into the system
"""

from fractions import Fraction as Q

from grrs.finite import check_axioms, isotropic_reflect, k_value
from grrs.linalg import is_zero, vadd, vneg, vscale, vsub, zero_vector
from grrs.symbolic import CosetSet, SymbolicRootSystem, check_symbolic_axioms


def _entry_map(system):
    return {e.lift: e.family for e in system.entries}


def f_invariance_failures(system: SymbolicRootSystem):
    """List of (label, lift, lift-or-None) triples for violated identities."""
    fails = []
    fams = _entry_map(system)
    space = system.space
    cl_sys = system.cl()
    cl_is_grrs = check_axioms(cl_sys).is_grrs

    for lift, fam in fams.items():
        neg = fams.get(vneg(lift))
        if neg is None or not neg.same_set(fam.neg()):
            fails.append(("negation", lift, None))
        if space.norm(lift) != 0:
            # F(a) = -F(a) in the root-splitting convention; stated
            # presentation-independently: F is symmetric about each member
            x = fam.members()[0]
            mirrored = fam.neg().shift(vadd(x, x))
            if not mirrored.same_set(fam):
                fails.append(("self-negation", lift, None))

    embedded = [
        lift
        for lift, fam in fams.items()
        if fam.contains(zero_vector(space.dim))
    ]
    for g in embedded:
        ng = space.norm(g)
        if ng == 0:
            continue
        for lift, fam in fams.items():
            k = 2 * space.form(g, lift) / ng
            image = vsub(lift, vscale(k, g))
            target = fams.get(image)
            if target is None or not target.same_set(fam):
                fails.append(("weyl-invariance", g, lift))

    if cl_is_grrs:
        for g in embedded:
            if space.norm(g) != 0:
                continue
            gc = system._proj.apply(g)
            for e in system.entries:
                image = isotropic_reflect(cl_sys, gc, system._proj.apply(e.lift))
                target = system.entry_for_cl(image).family
                if not target.same_set(e.family):
                    fails.append(("gw-invariance", g, e.lift))

    # F(a+b) = F(a) + F(b) whenever r_a b = a + b
    for ea in system.entries:
        na = space.norm(ea.lift)
        for eb in system.entries:
            target_lift = vadd(ea.lift, eb.lift)
            if target_lift not in fams:
                continue
            if na != 0:
                if 2 * space.form(ea.lift, eb.lift) / na != -1:
                    continue
            else:
                if not cl_is_grrs:
                    continue
                ac = system._proj.apply(ea.lift)
                bc = system._proj.apply(eb.lift)
                if cl_sys.space.form(ac, bc) == 0:
                    continue
                if isotropic_reflect(cl_sys, ac, bc) != system._proj.apply(target_lift):
                    continue
            expect = ea.family.add(eb.family)
            if not fams[target_lift].same_set(expect):
                fails.append(("sum-rule", ea.lift, eb.lift))
    return fails


def is_transitive_grrs_quotient(system: SymbolicRootSystem) -> bool:
    from grrs.finite import gw_orbits

    cl_sys = system.cl()
    if not check_axioms(cl_sys).is_grrs:
        return False
    if len(cl_sys) == 2:
        return False
    if not all(
        e.family.contains(zero_vector(system.space.dim)) for e in system.entries
    ):
        return False
    return len(gw_orbits(cl_sys)) == 1


def full_coset_failures(system: SymbolicRootSystem):
    """For transitive quotients: every family must be the full lattice L."""
    fails = []
    full = CosetSet.full_lattice(system.L)
    for e in system.entries:
        if not e.family.same_set(full):
            fails.append(e.lift)
    return fails
