#!/usr/bin/env python3
"""Affine systems as finite data: coset families over the radical.

Run after `pip install -e .` from the repository root:

    python demos/02_affine_coset_families.py
"""

from fractions import Fraction as Q

from grrs import (
    a_nn_x,
    affinize,
    build,
    check_symbolic_axioms,
    cl,
    gaps,
    quotient,
)
from grrs.linalg import vadd, vec, vscale
from grrs.symbolic import from_finite


def show(title):
    print("\n" + "=" * 72)
    print(title)
    print("=" * 72)


show("Affinization: every class gains a line of echoes")
aff = affinize(build("B2"), 1)
print(aff)
print("verdict:", check_symbolic_axioms(aff).verdict())
print("a root plus three steps of the central direction is still a root:",
      aff.contains(vec([1, 0, 3])))
print("half a step is not:", aff.contains(vec([1, 0, Q(1, 2)])))
print("the minimal quotient returns the input:", cl(aff) == build("B2"))

show("Gap tables read off the progression index per class")
table = gaps(aff)
print("all gaps of the plain affinization:", sorted({g for _, g in table.entries}))

show("Rational quotients of the doubled square")
s13 = a_nn_x(1, 1, 3, 0)
print(s13, "verdict:", check_symbolic_axioms(s13).verdict())
tbl = gaps(s13)
for lift, g in tbl.entries:
    norm = s13.space.norm(lift)
    print(f"  class {tuple(map(str, lift))}: norm {norm}, gap {g}")

show("Integral parameters break the unique-image axiom")
a11 = build("A(1,1)")
sym = from_finite(a11)
direction = vec(list(sym.L.basis[0]) + [1])
broken = quotient(affinize(a11, 1), [direction])
report = check_symbolic_axioms(broken)
print("x = 1 quotient:", report.verdict(),
      "| unique-image fails at:", report.gr3.witness is not None)

show("Quotients must stay inside the radical, and can be forced injective")
try:
    quotient(aff, [vec([1, 0, 0])])
except Exception as exc:
    print("non-radical direction rejected:", type(exc).__name__)
try:
    quotient(affinize(a11, 1), [direction], require_bijective=True)
except Exception as exc:
    print("collapsing quotient rejected:", type(exc).__name__)
