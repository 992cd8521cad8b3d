"""Canonical JSON interchange for all document types.

Rationals serialize as "p/q" (or "p" when the denominator is 1).  Documents
are emitted with sorted keys and fixed separators, and every parser feeds a
canonicalizing constructor, so parse -> serialize round-trips are
byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import List, Optional, Union

from .classify import ClassDescriptor, kac_moody_name
from .errors import GrrsError, NoName
from .finite import AxiomCheck, AxiomReport, FiniteRootSystem
from .linalg import BilinearSpace, Lattice, format_rational, parse_rational
from .symbolic import CosetSet, SymbolicRootSystem

SCHEMA_VERSION = 1

Payload = Union[FiniteRootSystem, SymbolicRootSystem, AxiomReport, List[ClassDescriptor]]


def _ser_vec(v) -> list:
    return [format_rational(x) for x in v]


def _parse_vec(xs) -> tuple:
    return tuple(parse_rational(x) for x in xs)


def _ser_mat(rows) -> list:
    return [_ser_vec(r) for r in rows]


def _parse_mat(rows) -> list:
    return [_parse_vec(r) for r in rows]


def finite_to_dict(system: FiniteRootSystem) -> dict:
    return {
        "dim": system.space.dim,
        "gram": _ser_mat(system.space.gram),
        "roots": _ser_mat(system.roots),
    }


def finite_from_dict(d: dict) -> FiniteRootSystem:
    space = BilinearSpace(_parse_mat(d["gram"]))
    if space.dim != d["dim"]:
        raise GrrsError("dim field does not match the gram matrix")
    return FiniteRootSystem(space, _parse_mat(d["roots"]))


def report_to_dict(report: AxiomReport) -> dict:
    def check(c: AxiomCheck) -> dict:
        out = {"pass": c.passed}
        out["witness"] = None if c.witness is None else _ser_mat(c.witness)
        return out

    return {
        "gr0": check(report.gr0),
        "gr1": check(report.gr1),
        "gr2": check(report.gr2),
        "gr3": check(report.gr3),
        "wgr3": check(report.wgr3),
        "verdict": report.verdict(),
    }


def report_from_dict(d: dict) -> AxiomReport:
    def check(c: dict) -> AxiomCheck:
        w = c.get("witness")
        return AxiomCheck(c["pass"], None if w is None else tuple(_parse_vec(v) for v in w))

    return AxiomReport(
        check(d["gr0"]), check(d["gr1"]), check(d["gr2"]), check(d["gr3"]), check(d["wgr3"])
    )


def symbolic_to_dict(system: SymbolicRootSystem) -> dict:
    families = []
    for e in system.entries:
        families.append(
            {
                "root": _ser_vec(e.lift),
                "translate": _ser_vec(e.family.translate),
                "reps": _ser_mat(e.family.reps),
                "modulusBasis": _ser_mat(e.family.modulus.basis),
                "latticeBasis": _ser_mat(system.L.basis),
            }
        )
    return {
        "dim": system.space.dim,
        "gram": _ser_mat(system.space.gram),
        "kernelDim": system.kernel_dim,
        "cl": finite_to_dict(system.cl()),
        "families": families,
    }


def symbolic_from_dict(d: dict) -> SymbolicRootSystem:
    space = BilinearSpace(_parse_mat(d["gram"]))
    if space.dim != d["dim"]:
        raise GrrsError("dim field does not match the gram matrix")
    entries = []
    for f in d["families"]:
        ambient = Lattice.from_vectors(space.dim, _parse_mat(f["latticeBasis"]))
        modulus = Lattice.from_vectors(space.dim, _parse_mat(f["modulusBasis"]))
        fam = CosetSet(ambient, modulus, _parse_vec(f["translate"]), _parse_mat(f["reps"]))
        entries.append((_parse_vec(f["root"]), fam))
    system = SymbolicRootSystem(space, entries)
    if system.kernel_dim != d["kernelDim"]:
        raise GrrsError("kernelDim field does not match the gram matrix")
    return system


def descriptor_to_dict(desc: ClassDescriptor) -> dict:
    kind = desc.kind()
    data: dict = {"type": kind}
    if kind == "S":
        data["S"] = bin(desc.data[1])
    elif kind == "S1S2":
        data["S1"], data["S2"] = bin(desc.data[1]), bin(desc.data[2])
    elif kind == "SSp":
        data["S"], data["Sp"] = bin(desc.data[1]), bin(desc.data[2])
    elif kind == "s":
        data["s"] = desc.data[1]
    elif kind == "Annx":
        data["q"] = desc.data[1]
        data["p"] = desc.data[2]
    elif kind == "C11S":
        data["S"] = bin(desc.data[1])
    elif kind == "BCn":
        data["n"] = desc.data[1]
        if desc.data[1] == 1:
            data["S"] = bin(desc.data[2])
            data["H2"] = list(desc.data[3])
        else:
            data["S1"] = bin(desc.data[2])
            data["S2"] = bin(desc.data[3])
            data["S3"] = bin(desc.data[4])
    try:
        km: Optional[str] = kac_moody_name(desc)
    except NoName:
        km = None
    return {"cl": desc.cl, "k": desc.k, "data": data, "kacMoody": km}


def descriptor_from_dict(d: dict) -> ClassDescriptor:
    data = d["data"]
    kind = data["type"]
    if kind == "affinization":
        tup = ("affinization",)
    elif kind == "S":
        tup = ("S", int(data["S"], 2))
    elif kind == "S1S2":
        tup = ("S1S2", int(data["S1"], 2), int(data["S2"], 2))
    elif kind == "SSp":
        tup = ("SSp", int(data["S"], 2), int(data["Sp"], 2))
    elif kind == "s":
        tup = ("s", data["s"])
    elif kind == "Annx":
        tup = ("Annx", data["q"], data["p"])
    elif kind == "C11S":
        tup = ("C11S", int(data["S"], 2))
    elif kind == "BCn":
        if data["n"] == 1:
            tup = ("BCn", 1, int(data["S"], 2), tuple(data["H2"]))
        else:
            tup = (
                "BCn",
                data["n"],
                int(data["S1"], 2),
                int(data["S2"], 2),
                int(data["S3"], 2),
            )
    else:
        raise GrrsError(f"unknown descriptor kind {kind}")
    return ClassDescriptor(d["cl"], d["k"], tup)


def document_to_dict(payload: Payload) -> dict:
    if isinstance(payload, FiniteRootSystem):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "type": "finite",
            "payload": finite_to_dict(payload),
        }
    if isinstance(payload, SymbolicRootSystem):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "type": "symbolic",
            "payload": symbolic_to_dict(payload),
        }
    if isinstance(payload, AxiomReport):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "type": "report",
            "payload": report_to_dict(payload),
        }
    if isinstance(payload, list):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "type": "classes",
            "payload": [descriptor_to_dict(x) for x in payload],
        }
    raise GrrsError(f"cannot serialize {type(payload)!r}")


def document_from_dict(d: dict) -> Payload:
    if d.get("schemaVersion") != SCHEMA_VERSION:
        raise GrrsError("unsupported schema version")
    t = d.get("type")
    if t == "finite":
        return finite_from_dict(d["payload"])
    if t == "symbolic":
        return symbolic_from_dict(d["payload"])
    if t == "report":
        return report_from_dict(d["payload"])
    if t == "classes":
        return [descriptor_from_dict(x) for x in d["payload"]]
    raise GrrsError(f"unknown document type {t!r}")


def dumps(payload: Payload) -> str:
    return json.dumps(document_to_dict(payload), sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str) -> Payload:
    return document_from_dict(json.loads(text))
