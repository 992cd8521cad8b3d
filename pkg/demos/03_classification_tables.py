#!/usr/bin/env python3
"""Classification: canonical subset data and affine name tables.

Run after `pip install -e .` from the repository root:

    python demos/03_classification_tables.py
"""

from grrs import (
    a_nn_x,
    affine_canonical,
    affinize,
    build,
    enumerate_classes,
    family,
    identify,
    kac_moody_name,
)
from grrs.classify import F2Subset
from grrs.errors import NoName


def show(title):
    print("\n" + "=" * 72)
    print(title)
    print("=" * 72)


def name_of(desc):
    try:
        return kac_moody_name(desc)
    except NoName:
        return "-"


show("Canonical forms of subsets of F_2^k")
for k, pts in ((1, [1]), (2, [1, 2, 3]), (2, [0, 3])):
    S = F2Subset.from_points(k, pts)
    print(f"k={k} subset {pts} -> canonical points {list(affine_canonical(S).points())}")

show("Class tables at one central direction")
for name in ("A3", "B3", "C3", "G2", "F4", "B(1,1)", "BC(1,1)", "C(2,1)"):
    rows = enumerate_classes(name, 1)
    print(f"{name}:")
    for d in rows:
        print(f"   {d.data}   {name_of(d)}")

show("More central directions, more classes")
for k in (1, 2, 3):
    print(f"G2 with k = {k}: {len(enumerate_classes('G2', k))} classes")
print(f"A1 with k = 2: {len(enumerate_classes('A1', 2))} classes")

show("identify puts a constructed system into its class")
print("plain affinization of B3:", identify(affinize(build("B3"), 1)).data)
print("twisted family over B3:  ", identify(family("B3", 1, S={0, 1})).data)

show("Quotient systems are grouped by the sign-insensitive parameter")
for n, p, q in ((2, 1, 3), (2, 2, 3), (2, 1, 2)):
    d = identify(a_nn_x(n, p, q, 0))
    print(f"x = {p}/{q}: descriptor {d.data}")
