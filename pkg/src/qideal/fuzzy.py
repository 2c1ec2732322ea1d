"""Fuzzy lower/upper sets over a Q-ordered set.

A fuzzy set is a value vector over the carrier.  Lower means
phi(y) & A(x,y) <= phi(x), upper means A(x,y) & psi(x) <= psi(y),
inhabited means the values join to 1.  The inclusion degree sub and the
intersection degree tensor are the two pairings everything downstream is
built from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BaseMismatch,
    BudgetExceeded,
    NotLower,
    NotUpper,
    ShapeMismatch,
)
from .qorder import QDistributor, QOrderedSet, point_qorder

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class FuzzySet:
    base: QOrderedSet
    values: tuple   # quantale indices aligned with base.elements

    def value_idx(self, i):
        return self.values[i]

    def value(self, label):
        return self.base.quantale.elements[self.values[self.base.index(label)]]

    def as_dict(self):
        lab = self.base.quantale.elements.__getitem__
        return {e: lab(v) for e, v in zip(self.base.elements, self.values)}


def fuzzy_set(base, values):
    """values: dict carrier label -> quantale label, or an aligned sequence."""
    q = base.quantale
    if isinstance(values, dict):
        vec = []
        for e in base.elements:
            if e not in values:
                raise ShapeMismatch("values miss a carrier element", witness=(e,))
            vec.append(q.index(values[e]))
        if len(values) != base.n:
            extra = set(values) - set(base.elements)
            raise ShapeMismatch("values cover labels outside the carrier",
                                witness=tuple(sorted(map(str, extra))))
    else:
        vec = [q.index(v) for v in values]
        if len(vec) != base.n:
            raise ShapeMismatch("value vector length differs from the carrier")
    return FuzzySet(base, tuple(vec))


def yoneda(A, a):
    """The principal lower set A(-, a)."""
    j = A.index(a)
    return FuzzySet(A, tuple(A.hom[i][j] for i in range(A.n)))


def constant_fuzzy_set(A, p):
    return FuzzySet(A, (A.quantale.index(p),) * A.n)


def _lower_violation(A, vals):
    q = A.quantale
    for y in range(A.n):
        vy = vals[y]
        for x in range(A.n):
            t = q.tensor(vy, A.hom[x][y])
            if not q.leq[t][vals[x]]:
                return (x, y)
    return None


def _upper_violation(A, vals):
    q = A.quantale
    for x in range(A.n):
        vx = vals[x]
        for y in range(A.n):
            t = q.tensor(A.hom[x][y], vx)
            if not q.leq[t][vals[y]]:
                return (x, y)
    return None


def _inhabited(A, vals):
    return A.quantale.join_all(vals) == A.quantale.unit


def classify_fuzzy_set(phi):
    """Flags {lower, upper, inhabited} plus a failing pair per false flag."""
    A = phi.base
    lw = _lower_violation(A, phi.values)
    uw = _upper_violation(A, phi.values)
    lab = A.elements.__getitem__
    return {
        "lower": lw is None,
        "upper": uw is None,
        "inhabited": _inhabited(A, phi.values),
        "witnesses": {
            "lower": None if lw is None else (lab(lw[0]), lab(lw[1])),
            "upper": None if uw is None else (lab(uw[0]), lab(uw[1])),
        },
    }


def _same_base(phi1, phi2):
    if phi1.base != phi2.base:
        raise BaseMismatch("fuzzy sets live on different bases")


def _sub_idx(A, v1, v2):
    q = A.quantale
    return q.meet_all(q.res_table[a][b] for a, b in zip(v1, v2))


def _tensor_idx(A, v1, v2):
    q = A.quantale
    return q.join_all(q.tensor_table[a][b] for a, b in zip(v1, v2))


def sub_degree(phi1, phi2):
    """Inclusion degree: meet over x of phi1(x) -> phi2(x)."""
    _same_base(phi1, phi2)
    A = phi1.base
    return A.quantale.elements[_sub_idx(A, phi1.values, phi2.values)]


def tensor_degree(phi, psi):
    """Intersection degree of a lower set with an upper set:
    join over x of phi(x) & psi(x).  Non-lower/non-upper inputs are
    hard errors carrying the failing pair."""
    _same_base(phi, psi)
    A = phi.base
    lab = A.elements.__getitem__
    w = _lower_violation(A, phi.values)
    if w is not None:
        raise NotLower("left argument is not a fuzzy lower set",
                       witness=(lab(w[0]), lab(w[1])))
    w = _upper_violation(A, psi.values)
    if w is not None:
        raise NotUpper("right argument is not a fuzzy upper set",
                       witness=(lab(w[0]), lab(w[1])))
    return A.quantale.elements[_tensor_idx(A, phi.values, psi.values)]


def lower_as_distributor(phi):
    """A lower set as a distributor into the one-point order."""
    pt = point_qorder(phi.base.quantale)
    return QDistributor(phi.base, pt, tuple((v,) for v in phi.values))


def upper_as_distributor(psi):
    """An upper set as a distributor out of the one-point order."""
    pt = point_qorder(psi.base.quantale)
    return QDistributor(pt, psi.base, (tuple(psi.values),))


def transport(f, phi, direction="forward"):
    """Image of a fuzzy set along a map.

    forward: phi on the source; returns y -> join over x of
    phi(x) & B(y, f(x)) (always a lower set of the target).
    backward: phi on the target; returns phi composed with f.
    """
    q = f.source.quantale
    if direction == "forward":
        if phi.base != f.source:
            raise BaseMismatch("forward transport needs a fuzzy set on the source")
        B = f.target
        vals = tuple(
            q.join_all(q.tensor_table[phi.values[x]][B.hom[y][f.mapping[x]]]
                       for x in range(f.source.n))
            for y in range(B.n))
        return FuzzySet(B, vals)
    if direction == "backward":
        if phi.base != f.target:
            raise BaseMismatch("backward transport needs a fuzzy set on the target")
        return FuzzySet(f.source, tuple(phi.values[j] for j in f.mapping))
    raise ValueError(f"unknown transport direction {direction!r}")


def tensor_pointwise(p, phi):
    q = phi.base.quantale
    i = q.index(p)
    return FuzzySet(phi.base, tuple(q.tensor_table[i][v] for v in phi.values))


def residuate_pointwise(p, phi):
    """x -> (p -> phi(x))."""
    q = phi.base.quantale
    i = q.index(p)
    return FuzzySet(phi.base, tuple(q.res_table[i][v] for v in phi.values))


def residuate_into(phi, p):
    """x -> (phi(x) -> p)."""
    q = phi.base.quantale
    i = q.index(p)
    return FuzzySet(phi.base, tuple(q.res_table[v][i] for v in phi.values))


def join_pointwise(phi1, phi2):
    _same_base(phi1, phi2)
    q = phi1.base.quantale
    return FuzzySet(phi1.base, tuple(q.join_table[a][b]
                                     for a, b in zip(phi1.values, phi2.values)))


def meet_pointwise(phi1, phi2):
    _same_base(phi1, phi2)
    q = phi1.base.quantale
    return FuzzySet(phi1.base, tuple(q.meet_table[a][b]
                                     for a, b in zip(phi1.values, phi2.values)))


def neg_pointwise(phi):
    q = phi.base.quantale
    return FuzzySet(phi.base, tuple(q.neg_vector[v] for v in phi.values))


def suprema(phi):
    """All carrier elements a with A(a, x) = sub(phi, y(x)) for every x.

    Empty tuple: no supremum.  More than one element only in
    non-separated bases.  Requires a lower set.
    """
    A = phi.base
    lab = A.elements.__getitem__
    w = _lower_violation(A, phi.values)
    if w is not None:
        raise NotLower("suprema are defined for fuzzy lower sets only",
                       witness=(lab(w[0]), lab(w[1])))
    q = A.quantale
    target = tuple(
        q.meet_all(q.res_table[phi.values[z]][A.hom[z][x]] for z in range(A.n))
        for x in range(A.n))
    return tuple(A.elements[a] for a in range(A.n) if A.hom[a] == target)


@lru_cache(maxsize=None)
def _monotone_value_tuples(A, kind):
    check = _lower_violation if kind == "lower" else _upper_violation
    out = []
    for vec in itertools.product(range(A.quantale.n), repeat=A.n):
        if check(A, vec) is None:
            out.append(vec)
    return tuple(out)


def enumerate_monotone_sets(A, kind, budget=None):
    """All fuzzy lower (or upper) sets of A, lexicographic in the carrier
    order by quantale element index."""
    if kind not in ("lower", "upper"):
        raise ValueError(f"unknown kind {kind!r}")
    budget = budget or DEFAULT_BUDGET
    count = A.quantale.n ** A.n
    if count > budget:
        raise BudgetExceeded(count, budget, what="fuzzy-set enumeration")
    return tuple(FuzzySet(A, vec) for vec in _monotone_value_tuples(A, kind))


def classify_sampled(order, fn, grid=129, tolerance=None):
    """Grid-sampled lower/upper/inhabited flags for a function on an
    interval order.  Same shape of answer as classify_fuzzy_set, with
    float witnesses."""
    q = order.quantale
    tol = q.tolerance if tolerance is None else tolerance
    pts = [i / (grid - 1) for i in range(grid)]
    vals = [fn(x) for x in pts]
    lw = uw = None
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            h = order.hom(x, y)
            if lw is None and q.tensor(vals[j], h) > vals[i] + tol:
                lw = (x, y)
            if uw is None and q.tensor(h, vals[i]) > vals[j] + tol:
                uw = (x, y)
        if lw and uw:
            break
    return {
        "lower": lw is None,
        "upper": uw is None,
        "inhabited": max(vals) >= 1.0 - tol,
        "witnesses": {"lower": lw, "upper": uw},
    }


def intersection_inclusion_identities(A, budget=None):
    """The intersection degree and the inclusion degree determine each
    other by quantifying over the quantale:

        tensor(phi, psi)  = meet_p (sub(phi, psi -> p) -> p)
        sub(phi1, phi2)   = meet_p (tensor(phi1, phi2 -> p) -> p)

    and under double negation both collapse to one negation each.
    Checks every enumerated pair on a finite base; returns the first
    violation (with both sides as labels) or None.
    """
    q = A.quantale
    limit = DEFAULT_BUDGET if budget is None else budget
    count = q.n ** A.n
    if count > limit:
        raise BudgetExceeded(count, limit, what="fuzzy-set enumeration")
    dn = all(q.neg_vector[q.neg_vector[i]] == i for i in range(q.n))
    res, meet, neg = q.res_table, q.meet_table, q.neg_vector
    lab = q.elements.__getitem__
    lowers = _monotone_value_tuples(A, "lower")
    uppers = _monotone_value_tuples(A, "upper")

    def bad(name, v1, v2, lhs, rhs):
        return {"identity": name,
                "phi": FuzzySet(A, v1).as_dict(), "psi": FuzzySet(A, v2).as_dict(),
                "lhs": lab(lhs), "rhs": lab(rhs)}

    for phi in lowers:
        for psi in uppers:
            t = _tensor_idx(A, phi, psi)
            acc = q.top
            for p in range(q.n):
                arrow = tuple(res[v][p] for v in psi)
                acc = meet[acc][res[_sub_idx(A, phi, arrow)][p]]
            if acc != t:
                return bad("intersection via inclusion", phi, psi, t, acc)
            if dn:
                other = neg[_sub_idx(A, phi, tuple(neg[v] for v in psi))]
                if other != t:
                    return bad("intersection via one negation", phi, psi, t, other)
    for phi1 in lowers:
        for phi2 in lowers:
            s = _sub_idx(A, phi1, phi2)
            acc = q.top
            for p in range(q.n):
                arrow = tuple(res[v][p] for v in phi2)
                acc = meet[acc][res[_tensor_idx(A, phi1, arrow)][p]]
            if acc != s:
                return bad("inclusion via intersection", phi1, phi2, s, acc)
            if dn:
                other = neg[_tensor_idx(A, phi1, tuple(neg[v] for v in phi2))]
                if other != s:
                    return bad("inclusion via one negation", phi1, phi2, s, other)
    return None


def kan_transport_identity(f, budget=None):
    """Forward and backward transport are adjoint through inclusion:
    sub(forward(phi), psi) = sub(phi, backward(psi)) for every lower set
    phi of the source and psi of the target.  Returns the first
    violating pair or None."""
    A, B = f.source, f.target
    q = A.quantale
    if B.quantale is not q:
        raise BaseMismatch("map endpoints live over different quantales")
    limit = DEFAULT_BUDGET if budget is None else budget
    count = q.n ** A.n + q.n ** B.n
    if count > limit:
        raise BudgetExceeded(count, limit, what="fuzzy-set enumeration")
    lab = q.elements.__getitem__
    fwds = [(pv, transport(f, FuzzySet(A, pv), "forward").values)
            for pv in _monotone_value_tuples(A, "lower")]
    for sv in _monotone_value_tuples(B, "lower"):
        back = transport(f, FuzzySet(B, sv), "backward").values
        for pv, fv in fwds:
            lhs = _sub_idx(B, fv, sv)
            rhs = _sub_idx(A, pv, back)
            if lhs != rhs:
                return {"phi": FuzzySet(A, pv).as_dict(),
                        "psi": FuzzySet(B, sv).as_dict(),
                        "forward_side": lab(lhs), "backward_side": lab(rhs)}
    return None
