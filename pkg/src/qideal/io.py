"""JSON reading and writing for instances.

Wherever an object is expected, a string is a file reference resolved
against the directory of the containing file.  Rational labels travel
as "p/q" strings.  Shapes:

quantale   {"kind": "boolean4"}
           {"kind": "chain", "tnorm": "godel", "n": 4}            (or "carrier": [...])
           {"kind": "interval", "tnorm": "product", "pieces": [[lo, hi, "kind"], ...]}
           {"kind": "table", "elements": [...], "leq": [[bool]],
            "tensor": [[label]], "unit": label}
qorder     {"base": quantale, "name": "dL", ...params}
           {"base": quantale, "elements": [...], "hom": [[label]]}
           {"base": quantale, "elements": [...], "crisp_leq": [[bool]]}
fuzzy set  {"order": qorder, "values": {element: label} | [label, ...]}
map        {"source": qorder, "target": qorder, "mapping": {...} | [...]}
sequence   {"order": qorder, "cycle": [...], "prefix": [...]}

The instance kind is inferred from the keys, so one loader serves the
whole command line.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction

from .fuzzy import FuzzySet, fuzzy_set
from .ideals import EventuallyPeriodicSequence, periodic_sequence
from .qorder import QMap, QOrderedSet, build_qmap, build_qorder, crisp_qorder, standard_qorder
from .quantale import (
    FiniteQuantale,
    IntervalQuantale,
    boolean4,
    build_finite_quantale,
    chain_quantale,
    interval_quantale,
)

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_label(v):
    """JSON scalar to a carrier label: numbers and "p/q" strings become
    exact rationals, anything else stays as written."""
    if isinstance(v, bool):
        return v
    if isinstance(v, (int, float)):
        return Fraction(v) if isinstance(v, int) else Fraction(str(v))
    if isinstance(v, str) and _RATIONAL.match(v):
        return Fraction(v)
    return v


def unparse_label(v):
    return str(v) if isinstance(v, Fraction) else v


def _resolve(data, base_dir):
    if isinstance(data, str):
        path = data if os.path.isabs(data) else os.path.join(base_dir or ".", data)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh), os.path.dirname(path)
    return data, base_dir


def load_quantale(data, base_dir=None):
    data, base_dir = _resolve(data, base_dir)
    kind = data.get("kind", "chain")
    if kind == "boolean4":
        return boolean4()
    if kind == "chain":
        carrier = data.get("carrier")
        if carrier is not None:
            carrier = [parse_label(c) for c in carrier]
        return chain_quantale(data["tnorm"], n=data.get("n"), carrier=carrier)
    if kind == "interval":
        pieces = tuple(tuple(p) for p in data.get("pieces") or ())
        extra = {}
        if "tolerance" in data:
            extra["tolerance"] = data["tolerance"]
        return interval_quantale(data["tnorm"], pieces=pieces or None, **extra)
    if kind == "table":
        elements = [parse_label(e) for e in data["elements"]]
        leq = [[bool(v) for v in row] for row in data["leq"]]
        tensor = [[parse_label(v) for v in row] for row in data["tensor"]]
        return build_finite_quantale(elements, leq, tensor, parse_label(data["unit"]))
    raise ValueError(f"unknown quantale kind {kind!r}")


def load_qorder(data, base_dir=None):
    data, base_dir = _resolve(data, base_dir)
    base = load_quantale(data["base"], base_dir)
    if "name" in data:
        params = {k: v for k, v in data.items() if k not in ("base", "name")}
        if "labels" in params:
            params["labels"] = [parse_label(e) for e in params["labels"]]
        return standard_qorder(base, data["name"], **params)
    elements = [parse_label(e) for e in data["elements"]]
    if "crisp_leq" in data:
        return crisp_qorder(base, elements, [[bool(v) for v in row]
                                             for row in data["crisp_leq"]])
    hom = [[parse_label(v) for v in row] for row in data["hom"]]
    return build_qorder(base, elements, hom)


def load_fuzzy_set(data, base_dir=None):
    data, base_dir = _resolve(data, base_dir)
    order = load_qorder(data["order"], base_dir)
    values = data["values"]
    if isinstance(values, dict):
        values = {parse_label(k): parse_label(v) for k, v in values.items()}
    else:
        values = [parse_label(v) for v in values]
    return fuzzy_set(order, values)


def load_qmap(data, base_dir=None):
    data, base_dir = _resolve(data, base_dir)
    source = load_qorder(data["source"], base_dir)
    target = load_qorder(data["target"], base_dir)
    mapping = data["mapping"]
    if isinstance(mapping, dict):
        mapping = {parse_label(k): parse_label(v) for k, v in mapping.items()}
    else:
        mapping = [parse_label(v) for v in mapping]
    return build_qmap(source, target, mapping)


def load_sequence(data, base_dir=None):
    data, base_dir = _resolve(data, base_dir)
    order = load_qorder(data["order"], base_dir)
    cycle = [parse_label(v) for v in data["cycle"]]
    prefix = [parse_label(v) for v in data.get("prefix", ())]
    return periodic_sequence(order, cycle, prefix=prefix)


def load_instance(data, base_dir=None):
    """Load whatever the file holds, keyed on its shape."""
    data, base_dir = _resolve(data, base_dir)
    if "cycle" in data:
        return load_sequence(data, base_dir)
    if "mapping" in data:
        return load_qmap(data, base_dir)
    if "values" in data:
        return load_fuzzy_set(data, base_dir)
    if "base" in data:
        return load_qorder(data, base_dir)
    if "kind" in data or "tensor" in data:
        return load_quantale(data, base_dir)
    raise ValueError("cannot infer the instance kind from the keys "
                     f"{sorted(data)}")


def dump_quantale(q):
    if isinstance(q, IntervalQuantale):
        return {"kind": "interval", "tnorm": q.tnorm,
                "pieces": [list(p) for p in q.pieces],
                "tolerance": q.tolerance}
    name, params = q.catalog if q.catalog else ("", {})
    if name == "boolean4":
        return {"kind": "boolean4"}
    if name.endswith("_chain"):
        return {"kind": "chain", "tnorm": name[:-len("_chain")], **params}
    lab = q.elements.__getitem__
    return {"kind": "table",
            "elements": [unparse_label(e) for e in q.elements],
            "leq": [[bool(v) for v in row] for row in q.leq],
            "tensor": [[unparse_label(lab(v)) for v in row]
                       for row in q.tensor_table],
            "unit": unparse_label(lab(q.unit))}


def dump_qorder(A):
    lab = A.quantale.elements.__getitem__
    return {"base": dump_quantale(A.quantale),
            "elements": [unparse_label(e) for e in A.elements],
            "hom": [[unparse_label(lab(v)) for v in row] for row in A.hom]}


def dump_fuzzy_set(phi):
    lab = phi.base.quantale.elements.__getitem__
    return {"order": dump_qorder(phi.base),
            "values": {str(unparse_label(e)): unparse_label(lab(v))
                       for e, v in zip(phi.base.elements, phi.values)}}


def dump_qmap(f):
    tgt = f.target.elements.__getitem__
    return {"source": dump_qorder(f.source),
            "target": dump_qorder(f.target),
            "mapping": {str(unparse_label(e)): unparse_label(tgt(j))
                        for e, j in zip(f.source.elements, f.mapping)}}


def dump_sequence(s):
    lab = s.base.elements.__getitem__
    return {"order": dump_qorder(s.base),
            "cycle": [unparse_label(lab(i)) for i in s.cycle],
            "prefix": [unparse_label(lab(i)) for i in s.prefix]}


def dump_instance(obj):
    if isinstance(obj, (FiniteQuantale, IntervalQuantale)):
        return dump_quantale(obj)
    if isinstance(obj, QOrderedSet):
        return dump_qorder(obj)
    if isinstance(obj, FuzzySet):
        return dump_fuzzy_set(obj)
    if isinstance(obj, QMap):
        return dump_qmap(obj)
    if isinstance(obj, EventuallyPeriodicSequence):
        return dump_sequence(obj)
    raise TypeError(f"cannot dump {type(obj).__name__}")


def save_instance(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dump_instance(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


def jsonable(x):
    """Witness payloads to plain JSON types, recursively."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k if isinstance(k, str) else str(unparse_label(k)): jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, (FiniteQuantale, IntervalQuantale, QOrderedSet, FuzzySet,
                      QMap, EventuallyPeriodicSequence)):
        return dump_instance(x)
    return str(x)
