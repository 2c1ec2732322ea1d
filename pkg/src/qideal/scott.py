"""Scott-style open and closed fuzzy sets for an ideal class.

An upper set is open when its value at every supremum of a class ideal
equals its intersection degree with the ideal; a lower set is closed
when its value there equals the inclusion degree of the ideal into it.
The open sets form a topology-like family (constants, binary meets,
joins), the closed sets a cotopology-like family, and each membership
test quantifies over every supremum so non-separated bases are handled.

Interval-backed checks at the end are grid-plus-probe approximations:
they report what held on the sample, never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DecompositionMismatch,
    GridTooCoarse,
    ShapeMismatch,
    ValidationError,
)
from .fuzzy import (
    DEFAULT_BUDGET,
    FuzzySet,
    _lower_violation,
    _monotone_value_tuples,
    _sub_idx,
    _tensor_idx,
    _upper_violation,
    suprema,
    transport,
)
from .ideals import _as_label_dict, _enumeration_guard, enumerate_ideals, ideal_class_tag

_MODE_ALIASES = {"topology": "topology", "top": "topology",
                 "cotopology": "cotopology", "cotop": "cotopology"}


def _mode_tag(mode):
    try:
        return _MODE_ALIASES[str(mode).lower()]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; use topology or cotopology") from None


def _default_class(mode):
    return "flat" if mode == "topology" else "irreducible"


@lru_cache(maxsize=None)
def _scott_context(A, tag, method, budget):
    """Class ideals of A paired with all their suprema (as indices);
    ideals without a supremum impose no condition and are dropped."""
    out = []
    for p in enumerate_ideals(A, tag, method=method, budget=budget):
        sups = suprema(p)
        if sups:
            out.append((p.values, tuple(A.index(s) for s in sups)))
    return tuple(out)


def _member_violation(A, vals, mode, ctx):
    q = A.quantale
    lab = A.elements.__getitem__
    if mode == "topology":
        w = _upper_violation(A, vals)
        if w is not None:
            return {"reason": "not an upper set", "pair": (lab(w[0]), lab(w[1]))}
        for ivals, sups in ctx:
            t = _tensor_idx(A, ivals, vals)
            for s in sups:
                if vals[s] != t:
                    return {"reason": "misses the supremum equation",
                            "ideal": _as_label_dict(A, ivals),
                            "supremum": lab(s),
                            "at_supremum": q.elements[vals[s]],
                            "tensor_degree": q.elements[t]}
    else:
        w = _lower_violation(A, vals)
        if w is not None:
            return {"reason": "not a lower set", "pair": (lab(w[0]), lab(w[1]))}
        for ivals, sups in ctx:
            d = _sub_idx(A, ivals, vals)
            for s in sups:
                if vals[s] != d:
                    return {"reason": "misses the supremum equation",
                            "ideal": _as_label_dict(A, ivals),
                            "supremum": lab(s),
                            "at_supremum": q.elements[vals[s]],
                            "sub_degree": q.elements[d]}
    return None


def is_scott_member(psi, mode, which=None, method="auto", budget=None):
    """Membership of a fuzzy set in the open (mode topology) or closed
    (mode cotopology) family for the given ideal class.  The class
    defaults to flat for opens and irreducible for closeds.  Returns
    (flag, witness)."""
    mode = _mode_tag(mode)
    tag = ideal_class_tag(which if which is not None else _default_class(mode))
    ctx = _scott_context(psi.base, tag, method, budget)
    w = _member_violation(psi.base, psi.values, mode, ctx)
    return w is None, w


@dataclass
class ScottStructure:
    base: object
    mode: str
    class_tag: str
    members: tuple
    axioms: dict
    stratified: bool
    co_stratified: bool
    strong: bool


def generate_scott_structure(A, mode, which=None, method="auto", budget=None):
    """Filter every monotone fuzzy set by membership and compute the
    axiom flags of the resulting family."""
    mode = _mode_tag(mode)
    tag = ideal_class_tag(which if which is not None else _default_class(mode))
    _enumeration_guard(A, budget or DEFAULT_BUDGET)
    ctx = _scott_context(A, tag, method, budget)
    kind = "upper" if mode == "topology" else "lower"
    members = tuple(FuzzySet(A, vals)
                    for vals in _monotone_value_tuples(A, kind)
                    if _member_violation(A, vals, mode, ctx) is None)
    S = ScottStructure(A, mode, tag, members, {}, False, False, False)
    report = check_structure_axioms(S)
    S.axioms = report["flags"]
    first, last = ("O4", "O5") if mode == "topology" else ("C4", "C5")
    S.stratified = S.axioms[first]
    S.co_stratified = S.axioms[last]
    S.strong = S.stratified and S.co_stratified
    return S


def check_structure_axioms(S):
    """Axiom flags for a member family, each with a witness on failure.

    Topology: O1 constants, O2 pair meets, O3 joins (every pair and the
    whole member list), O4 tensoring by a constant, O5 residuating by a
    constant.  Cotopology: C1 constants, C2 pair joins, C3 meets (pair
    and whole list), C4 residuating, C5 tensoring.
    """
    A, q = S.base, S.base.quantale
    vecs = [p.values for p in S.members]
    have = set(vecs)
    flags, wits = {}, {}

    def member_dicts(*vs):
        return tuple(_as_label_dict(A, v) for v in vs)

    def closed_under(name, table):
        for i, v1 in enumerate(vecs):
            for v2 in vecs[i:]:
                out = tuple(table[a][b] for a, b in zip(v1, v2))
                if out not in have:
                    flags[name] = False
                    wits[name] = {"members": member_dicts(v1, v2),
                                  "result": _as_label_dict(A, out)}
                    return
        flags[name] = True

    def whole_list(name, fold):
        if not vecs:
            flags[name] = flags.get(name, True)
            return
        acc = vecs[0]
        for v in vecs[1:]:
            acc = tuple(fold[a][b] for a, b in zip(acc, v))
        if acc not in have:
            flags[name] = False
            wits.setdefault(name, {"members": "all",
                                   "result": _as_label_dict(A, acc)})
        # pairwise verdict already recorded; whole-list only strengthens

    def scaled(name, op):
        for p in range(q.n):
            for v in vecs:
                out = tuple(op[p][a] for a in v)
                if out not in have:
                    flags[name] = False
                    wits[name] = {"p": q.elements[p],
                                  "member": _as_label_dict(A, v),
                                  "result": _as_label_dict(A, out)}
                    return
        flags[name] = True

    constants_name = "O1" if S.mode == "topology" else "C1"
    flags[constants_name] = True
    for p in range(q.n):
        if (p,) * A.n not in have:
            flags[constants_name] = False
            wits[constants_name] = {"constant": q.elements[p]}
            break

    if S.mode == "topology":
        closed_under("O2", q.meet_table)
        closed_under("O3", q.join_table)
        whole_list("O3", q.join_table)
        scaled("O4", q.tensor_table)
        scaled("O5", q.res_table)
    else:
        closed_under("C2", q.join_table)
        closed_under("C3", q.meet_table)
        whole_list("C3", q.meet_table)
        scaled("C4", q.res_table)
        scaled("C5", q.tensor_table)
    return {"flags": flags, "witnesses": wits}


@lru_cache(maxsize=None)
def _closed_family(B, tag, method, budget):
    _enumeration_guard(B, budget or DEFAULT_BUDGET)
    ctx = _scott_context(B, tag, method, budget)
    return tuple(vals for vals in _monotone_value_tuples(B, "lower")
                 if _member_violation(B, vals, "cotopology", ctx) is None)


@lru_cache(maxsize=None)
def _open_family(B, tag, method, budget):
    _enumeration_guard(B, budget or DEFAULT_BUDGET)
    ctx = _scott_context(B, tag, method, budget)
    return tuple(vals for vals in _monotone_value_tuples(B, "upper")
                 if _member_violation(B, vals, "topology", ctx) is None)


def cocontinuity_equivalence(f, which="irreducible", method="auto", budget=None):
    """Two routes to the same judgment about a map, compared.

    cocontinuous: f preserves the order and sends every existing
    class-ideal supremum to a supremum of the image ideal.
    closed_preimage: composing every closed set of the target with f
    lands in the closed sets of the source.  Order preservation is NOT
    assumed for the second route; the equivalence is the claim under
    test, so the report carries both verdicts and their agreement.
    """
    A, B = f.source, f.target
    tag = ideal_class_tag(which)
    witnesses = {}
    cocontinuous = True
    w = f.order_violation()
    if w is not None:
        cocontinuous = False
        witnesses["order"] = w
    if cocontinuous:
        for ivals, sups in _scott_context(A, tag, method, budget):
            img = transport(f, FuzzySet(A, ivals), "forward")
            targets = set(suprema(img))
            bad = next((s for s in sups
                        if B.elements[f.mapping[s]] not in targets), None)
            if bad is not None:
                cocontinuous = False
                witnesses["sup_not_preserved"] = {
                    "ideal": _as_label_dict(A, ivals),
                    "supremum": A.elements[bad],
                    "image_of_supremum": B.elements[f.mapping[bad]],
                    "suprema_of_image": [b for b in B.elements if b in targets],
                }
                break
    closed_preimage = True
    ctxA = _scott_context(A, tag, method, budget)
    for lvals in _closed_family(B, tag, method, budget):
        pulled = tuple(lvals[j] for j in f.mapping)
        v = _member_violation(A, pulled, "cotopology", ctxA)
        if v is not None:
            closed_preimage = False
            witnesses["preimage_not_closed"] = {
                "closed_set": _as_label_dict(B, lvals), "violation": v}
            break
    return {"cocontinuous": cocontinuous, "closed_preimage": closed_preimage,
            "agree": cocontinuous == closed_preimage, "witnesses": witnesses}


def check_open_preimages(f, which="flat", method="auto", budget=None):
    """One-directional continuity: composites of open sets of the target
    with a cocontinuous map must be open on the source.  Returns
    (flag, witness); callers are expected to have checked
    cocontinuity."""
    A, B = f.source, f.target
    tag = ideal_class_tag(which)
    ctxA = _scott_context(A, tag, method, budget)
    for uvals in _open_family(B, tag, method, budget):
        pulled = tuple(uvals[j] for j in f.mapping)
        v = _member_violation(A, pulled, "topology", ctxA)
        if v is not None:
            return False, {"open_set": _as_label_dict(B, uvals), "violation": v}
    return True, None


def interval_dR_scott_closed(fn, q, grid=257, tolerance=None,
                             probe=2.0 ** -32, jump_threshold=1e-4):
    """Grid check of the closed-set characterization on the interval
    order dR: fn must be right continuous (probe-based) and
    order-preserving as a self-map of the interval under dL.  Sampled,
    not a proof."""
    if getattr(q, "kind", None) != "interval":
        raise ShapeMismatch("the characterization lives on the interval backend")
    if grid < 17:
        raise GridTooCoarse(grid)
    tol = q.tolerance if tolerance is None else tolerance
    pts = [i / (grid - 1) for i in range(grid)]
    vals = [fn(x) for x in pts]
    rc_w = None
    for x in pts[:-1]:
        jump = abs(fn(min(1.0, x + probe)) - fn(x))
        if jump > jump_threshold:
            rc_w = {"at": x, "jump": jump}
            break
    op_w = None
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            lhs = q.residuate(x, y)
            rhs = q.residuate(vals[i], vals[j])
            if lhs > rhs + tol:
                op_w = {"pair": (x, y), "order_degree": lhs,
                        "image_degree": rhs}
                break
        if op_w:
            break
    return {"scott_closed": rc_w is None and op_w is None,
            "right_continuous": rc_w is None,
            "order_preserving": op_w is None,
            "witnesses": {"right_continuity": rc_w,
                          "order_preservation": op_w}}


def _decomposition_pieces(q):
    if q.tnorm in ("min", "nilpotent_minimum"):
        return ()
    if q.tnorm in ("product", "lukasiewicz"):
        return ((0.0, 1.0, q.tnorm),)
    return q.pieces


def _probe_decomposition(q, pieces, tol):
    """Endpoints of every piece and midpoints of every gap must be
    idempotent, otherwise the claimed min-outside/piece-inside shape is
    wrong for this tensor."""
    spots = []
    prev = 0.0
    for lo, hi, _ in pieces:
        spots.extend((lo, hi))
        if lo - prev > 4 * tol:
            spots.append((prev + lo) / 2.0)
        prev = hi
    if 1.0 - prev > 4 * tol:
        spots.append((prev + 1.0) / 2.0)
    spots.extend((0.0, 1.0))
    for e in spots:
        t = q.tensor(e, e)
        if abs(t - e) > tol:
            raise DecompositionMismatch(
                "decomposition point is not idempotent",
                witness=e, detail=f"{e} & {e} = {t}")


def verify_ordinal_sum_generation(fn, q, grid=257, tolerance=None,
                                  probe=1e-12):
    """Rebuild a closed fn >= id as the pointwise infimum of the
    one-parameter family c v (d -> y) dictated by the piece structure of
    the tensor, and report the worst grid deviation.

    The x-sample augments the grid with just-inside piece endpoints and,
    per evaluation point y, the probes y and y + probe: the infimum is
    typically approached, not attained, immediately to the right of y.
    """
    if getattr(q, "kind", None) != "interval":
        raise ShapeMismatch("generation check lives on the interval backend")
    tol = q.tolerance if tolerance is None else tolerance
    pieces = _decomposition_pieces(q)
    _probe_decomposition(q, pieces, tol)
    closed = interval_dR_scott_closed(fn, q, grid=grid, tolerance=tol)
    if not closed["scott_closed"]:
        raise ValidationError("generation needs a closed function on the grid",
                              witness=closed["witnesses"])
    pts = [i / (grid - 1) for i in range(grid)]
    for y in pts:
        if fn(y) < y - tol:
            raise ValidationError("generation needs a function above the "
                                  "identity", witness=(y, fn(y)))

    def family_entry(x):
        fx = fn(x)
        for lo, hi, _ in pieces:
            if lo < x < hi and lo < fx < hi:
                if fx > x + tol:
                    return ("inside-above", fx, q.residuate(fx, x))
                return ("inside-diagonal", fx, hi)
        return ("outside", fx, x)

    xs = list(pts)
    for lo, hi, _ in pieces:
        xs.extend((min(hi, lo + probe), max(lo, hi - probe)))
    entries = {x: family_entry(x) for x in xs}

    worst, worst_at = 0.0, None
    for y in pts:
        extra = (y, min(1.0, y + probe))
        best = 1.0
        for x in extra:
            if x not in entries:
                entries[x] = family_entry(x)
        for x in xs + list(extra):
            _, c, d = entries[x]
            g = max(c, q.residuate(d, y))
            if g < best:
                best = g
        dev = abs(best - fn(y))
        if dev > worst:
            worst, worst_at = dev, y

    spot = [0.0, 0.25, 0.5, 0.75, 1.0]
    members_closed = True
    for x in spot:
        _, c, d = family_entry(x)
        rep = interval_dR_scott_closed(
            lambda y, c=c, d=d: max(c, q.residuate(d, y)), q, grid=65,
            tolerance=tol)
        if not rep["scott_closed"]:
            members_closed = False
            break
    return {"max_deviation": worst, "deviation_at": worst_at,
            "grid": grid, "pieces": pieces,
            "family": sorted((x,) + entries[x] for x in entries),
            "members_closed_on_grid": members_closed}
