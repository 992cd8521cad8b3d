#!/usr/bin/env python3
"""Tour of the finite side: building systems, checking axioms, reflecting.

Run after `pip install -e .` from the repository root:

    python demos/01_finite_root_systems.py
"""

from grrs import (
    build,
    check_axioms,
    generate_subsystem,
    gw_orbits,
    is_irreducible,
    is_reduced,
    isomorphic_finite,
    weyl_orbits,
)
from grrs.catalog import generating_roots
from grrs.finite import isotropic_reflect, k_value, reflect


def show(title):
    print("\n" + "=" * 72)
    print(title)
    print("=" * 72)


show("Classical systems pass the axioms exactly")
for name in ("A2", "B2", "G2", "BC2"):
    system = build(name)
    report = check_axioms(system)
    print(f"{name:5s} {len(system):3d} roots   verdict: {report.verdict()}")

show("A weak system: the doubled quotient of the smallest super square")
c11 = build("C(1,1)")
report = check_axioms(c11)
print("C(1,1) roots:", [tuple(map(str, r)) for r in c11.roots])
print("verdict:", report.verdict(), "| unique-image axiom witness:", report.gr3.witness)

show("Reflections, linear and isotropic")
b2 = build("B2")
alpha = b2.roots[-1]
print("reflect fixes orthogonal vectors and negates the mirror root:")
print("  r_a(a) =", reflect(b2.space, alpha, alpha))
b11 = build("B(1,1)")
iso = next(r for r in b11.roots if b11.is_isotropic(r))
other = next(r for r in b11.roots if b11.space.form(iso, r) != 0 and r != iso)
print(f"isotropic image of {other} under r_{iso}:", isotropic_reflect(b11, iso, other))

show("Cartan pairings stay in the small window")
vals = sorted({
    k_value(b11.space, a, g)
    for a in b11.nonisotropic_roots()
    for g in b11.roots
})
print("k-values over B(1,1):", vals)

show("Orbits under the two reflection groups")
print("B2 orbit sizes (linear reflections):", [len(o) for o in weyl_orbits(b2)])
print("B(1,1) orbit sizes (all involutions):", [len(o) for o in gw_orbits(b11)])

show("Subsystems generated by a few seeds")
seeds = generating_roots("G2")
g2 = build("G2")
closure = generate_subsystem(g2, seeds)
print(f"two simple seeds of G2 regenerate {len(closure)} of {len(g2)} roots")

show("Isomorphism by homothety")
h = isomorphic_finite(build("B2"), build("C2"))
print("B2 ~ C2 with form scale:", h.scale)
print("B3 ~ C3:", isomorphic_finite(build("B3"), build("C3")) is not None)

show("Reducedness and irreducibility")
print("BC1 reduced:", is_reduced(build("BC1")))
irr, comps = is_irreducible(build("C(2,1)"))
print("C(2,1) irreducible:", irr, "| components:", len(comps))
