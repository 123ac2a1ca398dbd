"""Structure files: a small JSON schema for hyperrings, fuzzy rings,
Grassmann-Pluecker functions, and Zariski systems.

Carrier elements are integers 0..n-1 with 0 the additive and 1 the
multiplicative identity.  Hyperaddition rows are arrays of arrays of
indices (subsets); fuzzy addition rows are arrays of indices; k0 is a
sorted index array; epsilon is an index.  Serialization is canonical
(sorted keys, fixed separators), so round-trips are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import bits, mask_of
from .fuzzy import FiniteFuzzyRing, make_fuzzy_ring
from .hyper import FiniteHyperring, make_hyperring
from .ddhyper import PartialDemifield
from .matroid import GPFunction
from .ordgrp import OGSubset, ZariskiSystem, singleton, down

SCHEMA_VERSION = "1"


class StructureError(ValueError):
    """Malformed or inconsistent structure file."""


def _require(cond: bool, msg: str):
    if not cond:
        raise StructureError(msg)


# ---------------------------------------------------------------------------
# object -> plain dict


def hyperring_to_dict(r: FiniteHyperring) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "hyperring",
        "name": r.name,
        "size": r.n,
        "add": [[sorted(bits(m)) for m in row] for row in r.add],
        "mul": [list(row) for row in r.mul],
        "partial": r.partial,
    }


def fuzzyring_to_dict(k: FiniteFuzzyRing) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "fuzzyring",
        "name": k.name,
        "size": k.n,
        "add": [list(row) for row in k.add],
        "mul": [list(row) for row in k.mul],
        "epsilon": k.epsilon,
        "k0": sorted(bits(k.k0)),
    }


def gp_to_dict(phi: GPFunction) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "gp",
        "ground_size": phi.ground_size,
        "rank": phi.rank,
        "values": list(phi.values),
        "coefficient": structure_to_dict(phi.coefficient),
    }


def _ogsubset_to_dict(a: OGSubset) -> dict:
    return {"tag": a.tag, "upper": a.upper}


def zariski_to_dict(s: ZariskiSystem) -> dict:
    _require(s.coefficient == "kgamma", "only symbolic systems serialize")
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "zariski",
        "points": list(s.points),
        "functions": [[_ogsubset_to_dict(v) for v in f] for f in s.functions],
        "coefficient": "kgamma",
    }


def demifield_to_dict(p: PartialDemifield) -> dict:
    # an extension kind beyond the four core ones; see README
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "demifield",
        "hyperfield": hyperring_to_dict(p.hyperfield),
        "family": [sorted(bits(m)) for m in p.family],
        "add": [list(row) for row in p.add],
        "mul": [list(row) for row in p.mul],
        "embedding": list(p.embedding),
    }


def structure_to_dict(obj) -> dict:
    if isinstance(obj, FiniteHyperring):
        return hyperring_to_dict(obj)
    if isinstance(obj, FiniteFuzzyRing):
        return fuzzyring_to_dict(obj)
    if isinstance(obj, GPFunction):
        return gp_to_dict(obj)
    if isinstance(obj, ZariskiSystem):
        return zariski_to_dict(obj)
    if isinstance(obj, PartialDemifield):
        return demifield_to_dict(obj)
    raise StructureError(f"unsupported object {type(obj).__name__}")


# ---------------------------------------------------------------------------
# plain dict -> object


def _check_header(d: dict, kind: str | None):
    _require(isinstance(d, dict), "top level must be an object")
    _require(d.get("schema_version") == SCHEMA_VERSION, "bad schema_version")
    _require("kind" in d, "missing kind")
    if kind is not None:
        _require(d["kind"] == kind, f"expected kind {kind}, found {d['kind']}")


def hyperring_from_dict(d: dict) -> FiniteHyperring:
    _check_header(d, "hyperring")
    n = d.get("size")
    _require(isinstance(n, int) and n >= 2, "size must be an integer >= 2")
    add, mul = d.get("add"), d.get("mul")
    _require(
        isinstance(add, list) and len(add) == n and all(len(r) == n for r in add),
        "add must be an n x n table",
    )
    _require(
        isinstance(mul, list) and len(mul) == n and all(len(r) == n for r in mul),
        "mul must be an n x n table",
    )
    for row in add:
        for cell in row:
            _require(
                isinstance(cell, list)
                and all(isinstance(x, int) and 0 <= x < n for x in cell),
                "add cells must be index arrays",
            )
    for row in mul:
        _require(all(isinstance(x, int) and 0 <= x < n for x in row), "bad mul")
    masks = [[mask_of(cell) for cell in row] for row in add]
    try:
        return make_hyperring(
            masks, mul, partial=bool(d.get("partial", False)), name=d.get("name", "")
        )
    except ValueError as e:
        raise StructureError(str(e)) from e


def fuzzyring_from_dict(d: dict) -> FiniteFuzzyRing:
    _check_header(d, "fuzzyring")
    n = d.get("size")
    _require(isinstance(n, int) and n >= 2, "size must be an integer >= 2")
    add, mul, k0 = d.get("add"), d.get("mul"), d.get("k0")
    for t in (add, mul):
        _require(
            isinstance(t, list)
            and len(t) == n
            and all(
                len(r) == n and all(isinstance(x, int) and 0 <= x < n for x in r)
                for r in t
            ),
            "add/mul must be n x n index tables",
        )
    _require(
        isinstance(k0, list) and all(isinstance(x, int) and 0 <= x < n for x in k0),
        "k0 must be an index array",
    )
    try:
        return make_fuzzy_ring(
            add, mul, mask_of(k0), epsilon=d.get("epsilon"), name=d.get("name", "")
        )
    except ValueError as e:
        raise StructureError(str(e)) from e


def gp_from_dict(d: dict) -> GPFunction:
    _check_header(d, "gp")
    coeff = structure_from_dict(d.get("coefficient"))
    try:
        return GPFunction(
            d.get("ground_size"), d.get("rank"), tuple(d.get("values", ())), coeff
        )
    except (TypeError, ValueError) as e:
        raise StructureError(str(e)) from e


def _ogsubset_from_dict(d: dict) -> OGSubset:
    _require(
        isinstance(d, dict) and d.get("tag") in ("sing", "down"),
        "bad ordered-group value",
    )
    u = d.get("upper")
    _require(u is None or isinstance(u, int), "upper must be an integer or null")
    return singleton(u) if d["tag"] == "sing" else down(u)


def zariski_from_dict(d: dict) -> ZariskiSystem:
    _check_header(d, "zariski")
    _require(d.get("coefficient") == "kgamma", "unknown coefficient")
    points = tuple(d.get("points", ()))
    _require(len(points) > 0, "empty point set")
    fns = []
    for f in d.get("functions", ()):
        _require(isinstance(f, list) and len(f) == len(points), "bad function row")
        fns.append(tuple(_ogsubset_from_dict(v) for v in f))
    return ZariskiSystem(points, tuple(fns), "kgamma")


def demifield_from_dict(d: dict) -> PartialDemifield:
    _check_header(d, "demifield")
    hf = hyperring_from_dict(d.get("hyperfield"))
    family = tuple(mask_of(cell) for cell in d.get("family", ()))
    add = tuple(tuple(row) for row in d.get("add", ()))
    mul = tuple(tuple(row) for row in d.get("mul", ()))
    emb = tuple(d.get("embedding", ()))
    m = len(family)
    _require(m > 0 and len(add) == m and len(mul) == m, "bad tables")
    _require(len(emb) == hf.n, "bad embedding")
    return PartialDemifield(hf, family, add, mul, emb)


_PARSERS = {
    "hyperring": hyperring_from_dict,
    "fuzzyring": fuzzyring_from_dict,
    "gp": gp_from_dict,
    "zariski": zariski_from_dict,
    "demifield": demifield_from_dict,
}


def structure_from_dict(d: dict, kind: str | None = None):
    _check_header(d, kind)
    parser = _PARSERS.get(d["kind"])
    _require(parser is not None, f"unknown kind {d['kind']!r}")
    return parser(d)


# ---------------------------------------------------------------------------
# files


def dumps_canonical(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=1) + "\n"


def save_structure(obj, path) -> None:
    Path(path).write_text(dumps_canonical(structure_to_dict(obj)))


def load_structure(path, kind: str | None = None):
    try:
        d = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise StructureError(f"cannot read {path}: {e}") from e
    return structure_from_dict(d, kind)
