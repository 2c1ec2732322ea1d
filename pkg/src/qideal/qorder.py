"""Q-ordered sets: carriers with a quantale-valued hom.

A Q-order on a carrier is a matrix A(x,y) of quantale elements with
A(x,x) = 1 and A(y,z) & A(x,y) <= A(x,z).  Everything here is an explicit
table over a finite carrier, except IntervalOrder, which wraps the unit
interval with one of the two canonical residuation orders for the sampled
checks in the scott module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    EmptyCarrier,
    PowerTooLarge,
    QuantaleMismatch,
    ShapeMismatch,
    ValidationError,
)
from .quantale import FiniteQuantale, IntervalQuantale, label_index

DEFAULT_POWER_BUDGET = 1024


@dataclass(frozen=True)
class QOrderedSet:
    """Finite Q-ordered set: labels plus a hom table of quantale indices."""

    quantale: FiniteQuantale
    elements: tuple
    hom: tuple   # hom[i][j]: quantale index of A(x_i, x_j)
    catalog: tuple | None = field(default=None, compare=False)
    _index: dict = field(default=None, compare=False, repr=False)

    @property
    def n(self):
        return len(self.elements)

    def index(self, label):
        if self._index is None:
            object.__setattr__(self, "_index",
                               {e: i for i, e in enumerate(self.elements)})
        return label_index(self._index, label)

    def label(self, i):
        return self.elements[i]

    def hom_idx(self, i, j):
        return self.hom[i][j]

    def degree(self, x, y):
        """A(x,y) as a quantale label."""
        return self.quantale.elements[self.hom[self.index(x)][self.index(y)]]


def qorder_violation(q, hom):
    """First reflexivity or transitivity failure in an index-level hom
    table, as a dict with the computed sides, or None."""
    n = len(hom)
    for i in range(n):
        if hom[i][i] != q.unit:
            return {"law": "hom is not reflexive", "witness": (i,),
                    "lhs": hom[i][i], "rhs": q.unit}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = q.tensor(hom[y][z], hom[x][y])
                if not q.leq[lhs][hom[x][z]]:
                    return {"law": "hom is not transitive", "witness": (x, y, z),
                            "lhs": lhs, "rhs": hom[x][z]}
    return None


def build_qorder(q, elements, hom, catalog=None):
    """Build a QOrderedSet from labels and a hom table of quantale labels.

    Raises EmptyCarrier, ShapeMismatch for malformed tables, and
    ValidationError with the failing triple for reflexivity/transitivity.
    """
    elements = tuple(elements)
    n = len(elements)
    if n == 0:
        raise EmptyCarrier()
    index = {}
    for i, e in enumerate(elements):
        if e in index:
            raise ShapeMismatch("duplicate element label", witness=(e,))
        index[e] = i
    if len(hom) != n or any(len(row) != n for row in hom):
        raise ShapeMismatch("hom table is not square over the carrier")
    try:
        hom_idx = tuple(tuple(q.index(v) for v in row) for row in hom)
    except KeyError as exc:
        raise ShapeMismatch("hom entry outside the quantale", witness=(exc.args[0],))
    bad = qorder_violation(q, hom_idx)
    if bad is not None:
        lab = q.elements.__getitem__
        raise ValidationError(
            bad["law"], witness=tuple(elements[i] for i in bad["witness"]),
            detail=f"computed {lab(bad['lhs'])} against {lab(bad['rhs'])}")
    return QOrderedSet(q, elements, hom_idx, catalog=catalog, _index=index)


def validate_qorder(A):
    """Recheck the axioms on an already-assembled QOrderedSet.

    Returns None, or the first violation as a dict with label witnesses
    and both computed sides.
    """
    bad = qorder_violation(A.quantale, A.hom)
    if bad is None:
        return None
    lab = A.quantale.elements.__getitem__
    return {"law": bad["law"],
            "witness": tuple(A.elements[i] for i in bad["witness"]),
            "lhs": lab(bad["lhs"]), "rhs": lab(bad["rhs"])}


def opposite(A):
    """Flip the hom matrix."""
    n = A.n
    hom = tuple(tuple(A.hom[j][i] for j in range(n)) for i in range(n))
    cat = ("opposite", {"of": A.catalog}) if A.catalog else None
    return QOrderedSet(A.quantale, A.elements, hom, catalog=cat, _index=A._index)


def point_qorder(q):
    """The one-element Q-ordered set."""
    return QOrderedSet(q, ("*",), ((q.unit,),), catalog=("point", {}), _index={"*": 0})


def crisp_qorder(q, elements, leq, catalog=None):
    """Embed a crisp preorder: hom is 1 where leq holds, 0 elsewhere."""
    lab = q.elements.__getitem__
    hom = [[lab(q.unit) if v else lab(q.bottom) for v in row] for row in leq]
    return build_qorder(q, elements, hom, catalog=catalog)


def standard_qorder(q, name, **params):
    """Named constructions.

    dL: carrier Q with hom p -> r.  dR: carrier Q with hom r -> p.
    discrete: n points (or explicit labels), hom 1 on the diagonal and 0
    off it.  power: all maps from a label set into Q, ordered by pointwise
    inclusion degree; raises PowerTooLarge past the enumeration budget.
    opposite: pass base=A.  point: the one-element order.
    """
    if name == "dL":
        hom = tuple(tuple(q.res_table[i][j] for j in range(q.n)) for i in range(q.n))
        return QOrderedSet(q, q.elements, hom, catalog=("dL", {}),
                           _index=dict(q._index))
    if name == "dR":
        hom = tuple(tuple(q.res_table[j][i] for j in range(q.n)) for i in range(q.n))
        return QOrderedSet(q, q.elements, hom, catalog=("dR", {}),
                           _index=dict(q._index))
    if name == "discrete":
        labels = params.get("labels")
        if labels is None:
            labels = tuple(f"x{i}" for i in range(params["n"]))
        labels = tuple(labels)
        n = len(labels)
        if n == 0:
            raise EmptyCarrier()
        hom = tuple(tuple(q.unit if i == j else q.bottom for j in range(n))
                    for i in range(n))
        return QOrderedSet(q, labels, hom, catalog=("discrete", {"n": n}),
                           _index={e: i for i, e in enumerate(labels)})
    if name == "power":
        labels = params.get("labels")
        if labels is None:
            labels = tuple(f"x{i}" for i in range(params["n"]))
        k = len(labels)
        if k == 0:
            raise EmptyCarrier(detail="power over an empty label set")
        budget = params.get("budget") or DEFAULT_POWER_BUDGET
        count = q.n ** k
        if count > budget:
            raise PowerTooLarge(count, budget)
        carrier = [tuple(q.elements[i] for i in vec)
                   for vec in itertools.product(range(q.n), repeat=k)]
        vecs = list(itertools.product(range(q.n), repeat=k))
        hom = tuple(
            tuple(q.meet_all(q.res_table[a][b] for a, b in zip(f, g)) for g in vecs)
            for f in vecs)
        return QOrderedSet(q, tuple(carrier), hom,
                           catalog=("power", {"labels": list(labels)}),
                           _index={e: i for i, e in enumerate(carrier)})
    if name == "opposite":
        base = params["base"]
        if base.quantale != q:
            raise QuantaleMismatch("opposite asked for over a different quantale")
        return opposite(base)
    if name == "point":
        return point_qorder(q)
    raise ValueError(f"unknown standard Q-order {name!r}")


def is_separated(A):
    """No two distinct elements isomorphic (hom 1 both ways)."""
    n, unit = A.n, A.quantale.unit
    return all(not (A.hom[i][j] == unit and A.hom[j][i] == unit)
               for i in range(n) for j in range(i + 1, n))


def random_qorder(q, n, rng, labels=None):
    """Seeded random Q-order: random hom, forced-diagonal, then the
    quantale-valued transitive closure (iterate to the fixpoint)."""
    if labels is None:
        labels = tuple(f"x{i}" for i in range(n))
    hom = [[rng.randrange(q.n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        hom[i][i] = q.unit
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    v = q.join(hom[x][z], q.tensor(hom[y][z], hom[x][y]))
                    if v != hom[x][z]:
                        hom[x][z] = v
                        changed = True
    return QOrderedSet(q, labels, tuple(tuple(r) for r in hom),
                       catalog=("random", {"n": n}),
                       _index={e: i for i, e in enumerate(labels)})


@dataclass(frozen=True)
class QMap:
    source: QOrderedSet
    target: QOrderedSet
    mapping: tuple   # target indices aligned with source.elements

    def apply_idx(self, i):
        return self.mapping[i]

    def apply(self, label):
        return self.target.elements[self.mapping[self.source.index(label)]]

    def order_violation(self):
        """First pair with A(x1,x2) not below B(f x1, f x2), or None."""
        A, B, q = self.source, self.target, self.source.quantale
        for i in range(A.n):
            for j in range(A.n):
                if not q.leq[A.hom[i][j]][B.hom[self.mapping[i]][self.mapping[j]]]:
                    return (A.elements[i], A.elements[j])
        return None

    @property
    def is_order_preserving(self):
        return self.order_violation() is None


def build_qmap(source, target, mapping):
    """mapping: dict source label -> target label, or a sequence of target
    labels aligned with source.elements."""
    if source.quantale != target.quantale:
        raise QuantaleMismatch("map endpoints live over different quantales")
    if isinstance(mapping, dict):
        idx = []
        for e in source.elements:
            if e not in mapping:
                raise ShapeMismatch("mapping misses a source element", witness=(e,))
            idx.append(target.index(mapping[e]))
        if len(mapping) != source.n:
            extra = set(mapping) - set(source.elements)
            raise ShapeMismatch("mapping has labels outside the source",
                                witness=tuple(sorted(map(str, extra))))
    else:
        vals = list(mapping)
        if len(vals) != source.n:
            raise ShapeMismatch("mapping length differs from the source carrier")
        idx = [target.index(v) for v in vals]
    return QMap(source, target, tuple(idx))


def identity_qmap(A):
    return QMap(A, A, tuple(range(A.n)))


def all_qmaps(A, B):
    """Every set map A -> B, in lexicographic order of the image tuple."""
    for vec in itertools.product(range(B.n), repeat=A.n):
        yield QMap(A, B, vec)


def check_map_and_adjunction(f, g=None):
    """Order preservation of f (and g), and whether (f, g) is an adjoint
    pair: A(x, g(y)) = B(f(x), y) for all x, y.
    """
    out = {"order_preserving": None, "witness": None,
           "g_order_preserving": None, "g_witness": None,
           "adjoint": None, "adjoint_witness": None}
    out["witness"] = f.order_violation()
    out["order_preserving"] = out["witness"] is None
    if g is None:
        return out
    if g.source.quantale != f.source.quantale:
        raise QuantaleMismatch("candidate adjoint lives over a different quantale")
    if g.source != f.target or g.target != f.source:
        raise ShapeMismatch("candidate adjoint does not run target -> source")
    out["g_witness"] = g.order_violation()
    out["g_order_preserving"] = out["g_witness"] is None
    A, B = f.source, f.target
    out["adjoint"] = True
    for i in range(A.n):
        for j in range(B.n):
            if A.hom[i][g.mapping[j]] != B.hom[f.mapping[i]][j]:
                out["adjoint"] = False
                out["adjoint_witness"] = (A.elements[i], B.elements[j])
                return out
    return out


@dataclass(frozen=True)
class QDistributor:
    """Hom-compatible matrix between two Q-ordered sets: lower in the
    source argument, upper in the target argument."""

    source: QOrderedSet
    target: QOrderedSet
    matrix: tuple   # matrix[i][j]: quantale index, i over source, j over target


def _distributor_violation(q, A, B, m):
    for a2 in range(A.n):
        for a in range(A.n):
            for b in range(B.n):
                v = q.tensor(m[a][b], A.hom[a2][a])
                for b2 in range(B.n):
                    if not q.leq[q.tensor(B.hom[b][b2], v)][m[a2][b2]]:
                        return (a2, a, b, b2)
    return None


def build_qdistributor(source, target, matrix, check=True):
    """matrix entries are quantale labels, rows over the source carrier."""
    if source.quantale != target.quantale:
        raise QuantaleMismatch("distributor endpoints live over different quantales")
    q = source.quantale
    if len(matrix) != source.n or any(len(r) != target.n for r in matrix):
        raise ShapeMismatch("distributor matrix shape mismatch")
    m = tuple(tuple(q.index(v) for v in row) for row in matrix)
    if check:
        bad = _distributor_violation(q, source, target, m)
        if bad is not None:
            a2, a, b, b2 = bad
            raise ValidationError(
                "distributor is not hom-compatible",
                witness=(source.elements[a2], source.elements[a],
                         target.elements[b], target.elements[b2]))
    return QDistributor(source, target, m)


def hom_distributor(A):
    return QDistributor(A, A, A.hom)


def compose_distributors(psi, phi):
    """(psi after phi)(a, c) = join over b of psi(b, c) & phi(a, b)."""
    if phi.source.quantale != psi.source.quantale:
        raise QuantaleMismatch("distributors live over different quantales")
    if phi.target != psi.source:
        raise ShapeMismatch("distributors do not share the middle object")
    q = phi.source.quantale
    A, B, C = phi.source, phi.target, psi.target
    m = tuple(
        tuple(q.join_all(q.tensor(psi.matrix[b][c], phi.matrix[a][b])
                         for b in range(B.n))
              for c in range(C.n))
        for a in range(A.n))
    if _distributor_violation(q, A, C, m) is not None:
        raise RuntimeError("internal: composite distributor lost hom-compatibility")
    return QDistributor(A, C, m)


@dataclass(frozen=True)
class IntervalOrder:
    """The unit interval under one of its two canonical orders, for the
    sampled interval checks.  which = "dL": hom(p,r) = p -> r; "dR":
    hom(p,r) = r -> p."""

    quantale: IntervalQuantale
    which: str

    def hom(self, a, b):
        if self.which == "dL":
            return self.quantale.residuate(a, b)
        return self.quantale.residuate(b, a)


def interval_order(q, which):
    if which not in ("dL", "dR"):
        raise ValueError(f"unknown interval order {which!r}")
    return IntervalOrder(q, which)
