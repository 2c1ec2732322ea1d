"""Spaces of ideals, weighted joins, saturation, completeness.

The members of a given ideal class form a Q-ordered set of their own
under the inclusion degree, with the base embedded by principal lower
sets.  Weighted joins are suprema in that space; a class is saturated
when weighted joins of class weights land back in the class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseMismatch, BudgetExceeded, NotLower
from .fuzzy import FuzzySet, _lower_violation, _sub_idx, suprema
from .ideals import enumerate_ideals, ideal_class_tag
from .qorder import QMap, QOrderedSet


@dataclass
class IdealSpace:
    """All class ideals of a base ordered by inclusion degree.

    Carrier labels are phi0, phi1, ... in enumeration order.  The
    principal-ideal embedding of the base is kept as a map; building the
    space rechecks that it is fully faithful.
    """

    base: QOrderedSet
    class_tag: str
    carrier: tuple
    space: QOrderedSet
    yoneda_map: QMap

    @property
    def n(self):
        return len(self.carrier)

    def _positions(self):
        pos = getattr(self, "_pos", None)
        if pos is None:
            pos = {p.values: i for i, p in enumerate(self.carrier)}
            self._pos = pos
        return pos

    def index_of(self, phi):
        vals = phi.values if isinstance(phi, FuzzySet) else tuple(phi)
        return self._positions()[vals]

    def contains(self, phi):
        vals = phi.values if isinstance(phi, FuzzySet) else tuple(phi)
        return vals in self._positions()

    def member_label(self, phi):
        return self.space.elements[self.index_of(phi)]


def ideal_space(A, which="flat", method="auto", budget=None):
    """Build the ideal space of A for the named class (fc, flat,
    irreducible, or lower for every lower set)."""
    tag = ideal_class_tag(which)
    carrier = enumerate_ideals(A, tag, method=method, budget=budget)
    labels = tuple(f"phi{i}" for i in range(len(carrier)))
    hom = tuple(tuple(_sub_idx(A, p.values, r.values) for r in carrier)
                for p in carrier)
    space = QOrderedSet(A.quantale, labels, hom,
                        catalog=("ideal_space", {"class": tag}))
    pos = {p.values: i for i, p in enumerate(carrier)}
    mapping = []
    for a in range(A.n):
        yv = tuple(A.hom[i][a] for i in range(A.n))
        i = pos.get(yv)
        if i is None:
            raise RuntimeError(
                f"principal lower set at {A.elements[a]} missing "
                f"from the {tag} carrier")
        mapping.append(i)
    for a in range(A.n):
        for b in range(A.n):
            if hom[mapping[a]][mapping[b]] != A.hom[a][b]:
                raise RuntimeError(
                    "principal-ideal embedding is not fully faithful")
    S = IdealSpace(A, tag, carrier, space, QMap(A, space, tuple(mapping)))
    S._pos = pos
    return S


def weighted_join(S, lam):
    """x -> join over members of lam(phi) & phi(x).

    This is the supremum of lam taken in the space of all lower sets of
    the base; the defining identity sub(join, psi) = sub(lam, y(psi)) is
    rechecked against every member and any failure is an internal error.
    """
    if lam.base != S.space:
        raise BaseMismatch("weight does not live on the ideal space")
    w = _lower_violation(S.space, lam.values)
    if w is not None:
        lab = S.space.elements.__getitem__
        raise NotLower("weights must be fuzzy lower sets of the ideal space",
                       witness=(lab(w[0]), lab(w[1])))
    A, q = S.base, S.base.quantale
    vals = tuple(q.join_all(q.tensor_table[lam.values[i]][p.values[x]]
                            for i, p in enumerate(S.carrier))
                 for x in range(A.n))
    out = FuzzySet(A, vals)
    for j in range(S.n):
        lhs = _sub_idx(A, vals, S.carrier[j].values)
        rhs = q.meet_all(q.res_table[lam.values[i]][S.space.hom[i][j]]
                         for i in range(S.n))
        if lhs != rhs:
            raise RuntimeError("weighted join failed its supremum identity")
    return out


def check_saturation(A, which="flat", method="auto", budget=None, cap=512):
    """Weighted joins of class weights over the ideal space must land
    back in the class; reports every weight that escapes."""
    tag = ideal_class_tag(which)
    S = ideal_space(A, tag, method=method, budget=budget)
    if S.n > cap:
        raise BudgetExceeded(S.n, cap,
                             what="ideal-space members before the second level")
    weights = enumerate_ideals(S.space, tag, method=method, budget=budget)
    violations = []
    for lam in weights:
        w = weighted_join(S, lam)
        if not S.contains(w):
            violations.append({"weight": lam.as_dict(), "join": w.as_dict()})
    return {"class": tag, "carrier_size": S.n,
            "weights_checked": len(weights),
            "saturated": not violations, "violations": violations}


def check_completeness_continuity(A, which="flat", method="auto", budget=None):
    """complete: every class ideal has a supremum in the base.
    continuous: additionally, taking suprema has a left adjoint into the
    ideal space.  The adjunction identity fixes each image on its own,
    so the adjoint search runs element by element over the members."""
    tag = ideal_class_tag(which)
    S = ideal_space(A, tag, method=method, budget=budget)
    report = {"class": tag, "space": S, "witnesses": {},
              "sup": None, "adjoint": None}
    sup_idx = []
    for p in S.carrier:
        sups = suprema(p)
        if not sups:
            report.update(complete=False, continuous=False,
                          witnesses={"no_supremum": p.as_dict()})
            return report
        sup_idx.append(A.index(sups[0]))
    report["sup"] = {S.space.elements[i]: A.elements[sup_idx[i]]
                     for i in range(S.n)}
    adjoint = []
    for a in range(A.n):
        cand = None
        for t in range(S.n):
            if all(S.space.hom[t][i] == A.hom[a][sup_idx[i]]
                   for i in range(S.n)):
                cand = t
                break
        if cand is None:
            report.update(complete=True, continuous=False,
                          witnesses={"no_adjoint_at": A.elements[a]})
            return report
        adjoint.append(cand)
    report.update(complete=True, continuous=True,
                  adjoint=QMap(A, S.space, tuple(adjoint)))
    return report
