"""Finite and unit-interval quantales with derived residuation.

The algebra throughout: a complete lattice carrying a commutative,
associative tensor ``&`` that distributes over joins, whose unit is the
top element.  The residuation ``->`` is the right adjoint of the tensor,

    p & q <= r   iff   q <= p -> r,

computed on finite carriers as the join of every s with p & s <= r, and
on the unit interval by closed forms only (never float sup-search).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ChainNotClosed,
    EmptyCarrier,
    NotALattice,
    NotAssociative,
    NotCommutative,
    NotDistributive,
    NotIntegral,
    ShapeMismatch,
)

DEFAULT_TOLERANCE = 1e-9


def label_index(index, label):
    """Resolve a label in an index map, accepting "p/q" strings and ints
    for Fraction-labelled carriers."""
    try:
        if label in index:
            return index[label]
    except TypeError:
        pass
    if isinstance(label, str):
        try:
            frac = Fraction(label)
        except (ValueError, ZeroDivisionError):
            frac = None
        if frac is not None and frac in index:
            return index[frac]
    if isinstance(label, (int, float)) and not isinstance(label, bool):
        frac = Fraction(label)
        if frac in index:
            return index[frac]
    if isinstance(label, Fraction) and str(label) in index:
        return index[str(label)]
    raise KeyError(f"label {label!r} is not in the carrier")


@dataclass(frozen=True)
class FiniteQuantale:
    """Integral commutative quantale on an explicit finite lattice.

    Elements are addressed by index; ``elements`` holds the labels.  All
    structure (order, tensor, joins, meets, residuation, negation) lives
    in precomputed tables, so every operation is a lookup.  Instances are
    built through :func:`build_finite_quantale`, which validates the laws
    and derives the tables.
    """

    elements: tuple
    leq: tuple            # leq[i][j]: element i below element j
    tensor_table: tuple   # tensor_table[i][j]: index of element i & element j
    unit: int
    join_table: tuple = field(compare=False, repr=False)
    meet_table: tuple = field(compare=False, repr=False)
    res_table: tuple = field(compare=False, repr=False)
    neg_vector: tuple = field(compare=False, repr=False)
    bottom: int = field(compare=False)
    top: int = field(compare=False)
    catalog: tuple | None = field(default=None, compare=False)
    _index: dict = field(default=None, compare=False, repr=False)

    kind = "finite"

    @property
    def n(self):
        return len(self.elements)

    def index(self, label):
        return label_index(self._index, label)

    def label(self, i):
        return self.elements[i]

    # index-level operations
    def leq_idx(self, i, j):
        return self.leq[i][j]

    def tensor(self, i, j):
        return self.tensor_table[i][j]

    def join(self, i, j):
        return self.join_table[i][j]

    def meet(self, i, j):
        return self.meet_table[i][j]

    def residuate(self, i, j):
        return self.res_table[i][j]

    def neg(self, i):
        return self.neg_vector[i]

    def join_all(self, indices):
        out = self.bottom
        for i in indices:
            out = self.join_table[out][i]
        return out

    def meet_all(self, indices):
        out = self.top
        for i in indices:
            out = self.meet_table[out][i]
        return out

    def way_below(self, i, j):
        # finite lattices: every directed set attains its join
        return self.leq[i][j]

    @property
    def is_linear(self):
        n = self.n
        return all(self.leq[i][j] or self.leq[j][i] for i in range(n) for j in range(n))

    @property
    def is_frame(self):
        return self.tensor_table == self.meet_table

    # label-level conveniences
    def tensor_label(self, p, q):
        return self.elements[self.tensor(self.index(p), self.index(q))]

    def res_label(self, p, q):
        return self.elements[self.residuate(self.index(p), self.index(q))]

    def join_label(self, p, q):
        return self.elements[self.join(self.index(p), self.index(q))]

    def meet_label(self, p, q):
        return self.elements[self.meet(self.index(p), self.index(q))]

    def neg_label(self, p):
        return self.elements[self.neg(self.index(p))]

    def leq_label(self, p, q):
        return self.leq[self.index(p)][self.index(q)]


def build_finite_quantale(elements, leq, tensor, unit, catalog=None):
    """Validate the tables and derive joins, meets, residuation, negation.

    ``leq`` rows are booleans, ``tensor`` entries are labels, ``unit`` is a
    label.  Raises the first violated law with a witness of labels, in the
    order: lattice axioms, associativity, commutativity, integrality
    (unit = top and unit acts as identity), distributivity over joins.
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
    if len(leq) != n or any(len(row) != n for row in leq):
        raise ShapeMismatch("leq table is not square over the carrier")
    if len(tensor) != n or any(len(row) != n for row in tensor):
        raise ShapeMismatch("tensor table is not square over the carrier")
    leq_t = tuple(tuple(bool(v) for v in row) for row in leq)
    try:
        tens = tuple(tuple(index[v] for v in row) for row in tensor)
    except KeyError as exc:
        raise ShapeMismatch("tensor entry outside the carrier", witness=(exc.args[0],))
    if unit not in index:
        raise ShapeMismatch("unit label outside the carrier", witness=(unit,))
    unit_i = index[unit]
    lab = elements.__getitem__

    for i in range(n):
        if not leq_t[i][i]:
            raise NotALattice("order is not reflexive", witness=(lab(i),))
    for i in range(n):
        for j in range(n):
            if i != j and leq_t[i][j] and leq_t[j][i]:
                raise NotALattice("order is not antisymmetric", witness=(lab(i), lab(j)))
    for i in range(n):
        for j in range(n):
            if not leq_t[i][j]:
                continue
            for k in range(n):
                if leq_t[j][k] and not leq_t[i][k]:
                    raise NotALattice("order is not transitive", witness=(lab(i), lab(j), lab(k)))

    def lub(i, j):
        ubs = [k for k in range(n) if leq_t[i][k] and leq_t[j][k]]
        least = [k for k in ubs if all(leq_t[k][m] for m in ubs)]
        return least[0] if len(least) == 1 else None

    def glb(i, j):
        lbs = [k for k in range(n) if leq_t[k][i] and leq_t[k][j]]
        greatest = [k for k in lbs if all(leq_t[m][k] for m in lbs)]
        return greatest[0] if len(greatest) == 1 else None

    join_rows, meet_rows = [], []
    for i in range(n):
        jrow, mrow = [], []
        for j in range(n):
            v = lub(i, j)
            if v is None:
                raise NotALattice("pair has no least upper bound", witness=(lab(i), lab(j)))
            jrow.append(v)
            w = glb(i, j)
            if w is None:
                raise NotALattice("pair has no greatest lower bound", witness=(lab(i), lab(j)))
            mrow.append(w)
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    join_t, meet_t = tuple(join_rows), tuple(meet_rows)

    bot = 0
    top = 0
    for i in range(1, n):
        bot = meet_t[bot][i]
        top = join_t[top][i]

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if tens[tens[i][j]][k] != tens[i][tens[j][k]]:
                    raise NotAssociative(
                        "tensor is not associative", witness=(lab(i), lab(j), lab(k)))
    for i in range(n):
        for j in range(n):
            if tens[i][j] != tens[j][i]:
                raise NotCommutative("tensor is not commutative", witness=(lab(i), lab(j)))
    if unit_i != top:
        raise NotIntegral("unit is not the top element", witness=(unit, lab(top)))
    for i in range(n):
        if tens[unit_i][i] != i:
            raise NotIntegral("unit does not act as identity", witness=(lab(i),))
    for p in range(n):
        if tens[p][bot] != bot:
            raise NotDistributive("tensor does not absorb bottom", witness=(lab(p),))
        for q in range(n):
            for r in range(n):
                if tens[p][join_t[q][r]] != join_t[tens[p][q]][tens[p][r]]:
                    raise NotDistributive(
                        "tensor does not distribute over join",
                        witness=(lab(p), lab(q), lab(r)))

    res_rows = []
    for p in range(n):
        row = []
        for r in range(n):
            best = bot
            for s in range(n):
                if leq_t[tens[p][s]][r]:
                    best = join_t[best][s]
            row.append(best)
        res_rows.append(tuple(row))
    res_t = tuple(res_rows)
    # the adjunction is forced by distributivity; cheap insurance against table bugs
    for p in range(n):
        for q in range(n):
            for r in range(n):
                if leq_t[tens[p][q]][r] != leq_t[q][res_t[p][r]]:
                    raise RuntimeError(
                        f"internal: residuation adjunction failed at {lab(p)},{lab(q)},{lab(r)}")
    neg = tuple(res_t[i][bot] for i in range(n))

    return FiniteQuantale(
        elements, leq_t, tens, unit_i, join_t, meet_t, res_t, neg, bot, top,
        catalog=catalog, _index=index)


def boolean4():
    """Four-element Boolean algebra {0, a, b, 1} with tensor = meet."""
    e = ("0", "a", "b", "1")
    leq = (
        (1, 1, 1, 1),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
        (0, 0, 0, 1),
    )
    meet = (
        ("0", "0", "0", "0"),
        ("0", "a", "0", "a"),
        ("0", "0", "b", "b"),
        ("0", "a", "b", "1"),
    )
    return build_finite_quantale(e, leq, meet, "1", catalog=("boolean4", {}))


_CHAIN_TNORMS = {
    "lukasiewicz": lambda a, b: max(a + b - 1, Fraction(0)),
    "godel": min,
    "nilpotent_minimum": lambda a, b: Fraction(0) if a + b <= 1 else min(a, b),
    "product": lambda a, b: a * b,
}


def chain_quantale(tnorm, n=None, carrier=None):
    """Finite chain in [0,1] under a named t-norm, exact rationals.

    Either ``n`` (uniform carrier {0, 1/(n-1), ..., 1}) or an explicit
    ``carrier`` containing 0 and 1.  Raises ChainNotClosed when the
    t-norm leaves the carrier (e.g. product on most grids).
    """
    if tnorm not in _CHAIN_TNORMS:
        raise ValueError(f"unknown chain t-norm {tnorm!r}")
    if carrier is None:
        if n is None or n < 2:
            raise ValueError("need n >= 2 or an explicit carrier")
        points = [Fraction(k, n - 1) for k in range(n)]
        params = {"n": n}
    else:
        points = sorted({Fraction(c) for c in carrier})
        params = {"carrier": [str(c) for c in points]}
    if len(points) < 2 or points[0] != 0 or points[-1] != 1:
        raise ShapeMismatch(
            "chain carrier must run from 0 to 1",
            witness=tuple(str(c) for c in points[:1] + points[-1:]))
    op = _CHAIN_TNORMS[tnorm]
    pset = set(points)
    tensor = []
    for a in points:
        row = []
        for b in points:
            v = op(a, b)
            if v not in pset:
                raise ChainNotClosed(
                    "tensor leaves the carrier", witness=(str(a), str(b), str(v)))
            row.append(v)
        tensor.append(row)
    leq = [[a <= b for b in points] for a in points]
    return build_finite_quantale(
        tuple(points), leq, tensor, Fraction(1), catalog=(f"{tnorm}_chain", params))


def lukasiewicz_chain(n=None, carrier=None):
    return chain_quantale("lukasiewicz", n=n, carrier=carrier)


def godel_chain(n=None, carrier=None):
    return chain_quantale("godel", n=n, carrier=carrier)


def nilpotent_minimum_chain(n=None, carrier=None):
    return chain_quantale("nilpotent_minimum", n=n, carrier=carrier)


_INTERVAL_TAGS = ("min", "product", "lukasiewicz", "nilpotent_minimum", "ordinal_sum")
_PIECE_KINDS = ("lukasiewicz", "product")


@dataclass(frozen=True)
class IntervalQuantale:
    """The unit interval under a catalog t-norm, closed-form residuation.

    ``pieces`` is only used by the ordinal-sum tag: disjoint open
    intervals (lo, hi) with idempotent endpoints, each carrying a
    rescaled Lukasiewicz or product t-norm; outside the closed squares
    the tensor is min.  Comparisons use ``tolerance``.
    """

    tnorm: str
    pieces: tuple = ()
    tolerance: float = DEFAULT_TOLERANCE

    kind = "interval"
    unit = 1.0
    top = 1.0
    bottom = 0.0

    def close(self, a, b):
        return abs(a - b) <= self.tolerance

    def leq(self, a, b):
        return a <= b + self.tolerance

    def join(self, a, b):
        return a if a > b else b

    def meet(self, a, b):
        return a if a < b else b

    def _piece_at(self, a, b):
        for lo, hi, kindname in self.pieces:
            if lo <= a <= hi and lo <= b <= hi:
                return lo, hi, kindname
        return None

    def tensor(self, a, b):
        t = self.tnorm
        if t == "min":
            return a if a < b else b
        if t == "product":
            return a * b
        if t == "lukasiewicz":
            return max(a + b - 1.0, 0.0)
        if t == "nilpotent_minimum":
            return 0.0 if a + b <= 1.0 else min(a, b)
        piece = self._piece_at(a, b)
        if piece is None:
            return a if a < b else b
        lo, hi, kindname = piece
        w = hi - lo
        u, v = (a - lo) / w, (b - lo) / w
        s = max(u + v - 1.0, 0.0) if kindname == "lukasiewicz" else u * v
        return lo + w * s

    def residuate(self, a, b):
        if a <= b:
            return 1.0
        t = self.tnorm
        if t == "min":
            return b
        if t == "product":
            return b / a
        if t == "lukasiewicz":
            return min(1.0, 1.0 - a + b)
        if t == "nilpotent_minimum":
            return max(1.0 - a, b)
        piece = self._piece_at(a, b)
        if piece is None:
            return b
        lo, hi, kindname = piece
        w = hi - lo
        u, v = (a - lo) / w, (b - lo) / w
        # a > b >= lo forces u > 0
        s = min(1.0, 1.0 - u + v) if kindname == "lukasiewicz" else v / u
        return lo + w * s

    def neg(self, a):
        return self.residuate(a, 0.0)

    def way_below(self, p, r):
        return p <= self.tolerance or (r - p) > self.tolerance


def interval_quantale(tnorm, pieces=None, tolerance=DEFAULT_TOLERANCE):
    """Build a unit-interval quantale from the t-norm catalog."""
    if tnorm not in _INTERVAL_TAGS:
        raise ValueError(f"unknown interval t-norm {tnorm!r}")
    ps = ()
    if tnorm == "ordinal_sum":
        cleaned = []
        for lo, hi, kindname in (pieces or ()):
            lo, hi = float(Fraction(lo) if isinstance(lo, str) else lo), \
                float(Fraction(hi) if isinstance(hi, str) else hi)
            if kindname not in _PIECE_KINDS:
                raise ShapeMismatch("unknown ordinal-sum piece kind", witness=(kindname,))
            if not (0.0 <= lo < hi <= 1.0):
                raise ShapeMismatch("piece endpoints out of order", witness=(lo, hi))
            cleaned.append((lo, hi, kindname))
        cleaned.sort()
        last = 0.0
        for lo, hi, _ in cleaned:
            if lo < last:
                raise ShapeMismatch("pieces overlap", witness=(lo, hi))
            last = hi
        ps = tuple(cleaned)
    elif pieces:
        raise ShapeMismatch("pieces are only meaningful for ordinal sums")
    return IntervalQuantale(tnorm, ps, float(tolerance))


def standard_quantale(name, **params):
    """Catalog constructor.

    Names: boolean4; lukasiewicz_chain / godel_chain /
    nilpotent_minimum_chain / product_chain (params: n or carrier);
    chain (params: tnorm plus n or carrier); interval (params: tnorm);
    ordinal_sum (params: pieces).
    """
    if name == "boolean4":
        return boolean4()
    if name.endswith("_chain") and name[:-6] in _CHAIN_TNORMS:
        return chain_quantale(name[:-6], n=params.get("n"), carrier=params.get("carrier"))
    if name == "chain":
        return chain_quantale(
            params["tnorm"], n=params.get("n"), carrier=params.get("carrier"))
    if name == "interval":
        return interval_quantale(
            params.get("tnorm", "min"),
            tolerance=params.get("tolerance", DEFAULT_TOLERANCE))
    if name == "ordinal_sum":
        return interval_quantale(
            "ordinal_sum", pieces=params.get("pieces", ()),
            tolerance=params.get("tolerance", DEFAULT_TOLERANCE))
    raise ValueError(f"unknown catalog name {name!r}")


def residuate(q, p, r):
    """Residuation by label (finite) or by float (interval)."""
    if isinstance(q, IntervalQuantale):
        return q.residuate(float(p), float(r))
    return q.elements[q.res_table[q.index(p)][q.index(r)]]


def way_below(q, p, r):
    """p way below r: on finite lattices this is p <= r; on the interval,
    p = 0 or p strictly below r."""
    if isinstance(q, IntervalQuantale):
        return q.way_below(float(p), float(r))
    return q.leq[q.index(p)][q.index(r)]


@dataclass(frozen=True)
class QuantaleProps:
    is_integral: bool
    is_commutative: bool
    is_prelinear: bool
    is_divisible: bool
    has_double_negation: bool
    is_archimedean: bool | None   # interval backend only
    idempotents: tuple | None     # None when not a finite set
    is_meet_continuous: bool
    is_dually_meet_continuous: bool


def quantale_properties(q):
    """Structural predicate flags.

    Finite backends: every flag from an exhaustive check.  Interval
    backends: analytic catalog facts (idempotents None when the set is
    not finite).  Finite lattices always report both meet-continuity
    flags true: every directed subset attains its join and meet.
    """
    if isinstance(q, FiniteQuantale):
        n = q.n
        rng = range(n)
        prelinear = all(
            q.join(q.residuate(i, j), q.residuate(j, i)) == q.top
            for i in rng for j in rng)
        divisible = all(
            q.tensor(i, q.residuate(i, j)) == q.meet(i, j)
            for i in rng for j in rng)
        dn = all(q.neg(q.neg(i)) == i for i in rng)
        idem = tuple(q.elements[i] for i in rng if q.tensor(i, i) == i)
        return QuantaleProps(
            is_integral=True, is_commutative=True, is_prelinear=prelinear,
            is_divisible=divisible, has_double_negation=dn,
            is_archimedean=None, idempotents=idem,
            is_meet_continuous=True, is_dually_meet_continuous=True)

    t = q.tnorm
    if t == "min":
        pre, div, dn, arch, idem = True, True, False, False, None
    elif t == "product":
        pre, div, dn, arch, idem = True, True, False, True, (0.0, 1.0)
    elif t == "lukasiewicz":
        pre, div, dn, arch, idem = True, True, True, True, (0.0, 1.0)
    elif t == "nilpotent_minimum":
        # idempotents {0} union (1/2, 1]: not a finite set
        pre, div, dn, arch, idem = True, False, True, False, None
    else:
        pre, div = True, True
        single_full = (
            len(q.pieces) == 1
            and q.pieces[0][0] == 0.0 and q.pieces[0][1] == 1.0)
        dn = single_full and q.pieces[0][2] == "lukasiewicz"
        arch = single_full
        covered, prev = True, 0.0
        for lo, hi, _ in q.pieces:
            if lo > prev:
                covered = False
            prev = hi
        covered = covered and prev == 1.0
        if covered:
            ends = sorted({0.0, 1.0} | {x for lo, hi, _ in q.pieces for x in (lo, hi)})
            idem = tuple(ends)
        else:
            idem = None
    return QuantaleProps(
        is_integral=True, is_commutative=True, is_prelinear=pre,
        is_divisible=div, has_double_negation=dn, is_archimedean=arch,
        idempotents=idem, is_meet_continuous=True,
        is_dually_meet_continuous=True)


def check_adjunction_sampled(q, grid=65, tolerance=None):
    """Sampled adjunction check on an interval quantale.

    For triples on a uniform grid: whenever one side of
    p & s <= r  iff  s <= p -> r  holds with slack ``tolerance``, the
    other side must hold up to the same slack.  Returns (ok, witness).
    """
    tol = q.tolerance if tolerance is None else tolerance
    pts = [i / (grid - 1) for i in range(grid)]
    for p in pts:
        res_row = [q.residuate(p, r) for r in pts]
        for s in pts:
            tv = q.tensor(p, s)
            for k, r in enumerate(pts):
                res = res_row[k]
                if tv <= r - tol and s > res + tol:
                    return False, {"triple": (p, s, r), "tensor": tv, "residuum": res}
                if s <= res - tol and tv > r + tol:
                    return False, {"triple": (p, s, r), "tensor": tv, "residuum": res}
    return True, None


def residuation_identity_violations(q, subset_limit=2):
    """Exhaustively check the residuation identities on a finite quantale.

    For all elements p, q, r and index families J of size <= subset_limit
    plus the empty and full families:

      1. 1 -> p = p
      2. p <= q  iff  p -> q = 1
      3. p -> (q -> r) = (p & q) -> r
      4. p & (p -> q) <= q
      5. (join over J) -> q = meet over J of (p_j -> q)
      6. p -> (meet over J) = meet over J of (p -> q_j)
      7. p = meet over all q of ((p -> q) -> q)

    Returns a list of violation records; empty means all identities hold.
    """
    n = q.n
    rng = range(n)
    out = []
    lab = q.elements.__getitem__
    for p in rng:
        if q.residuate(q.unit, p) != p:
            out.append({"identity": 1, "witness": (lab(p),)})
        for r in rng:
            if q.leq[p][r] != (q.residuate(p, r) == q.unit):
                out.append({"identity": 2, "witness": (lab(p), lab(r))})
            if q.tensor(p, q.residuate(p, r)) != q.meet(q.tensor(p, q.residuate(p, r)), r):
                out.append({"identity": 4, "witness": (lab(p), lab(r))})
            for s in rng:
                if q.residuate(p, q.residuate(r, s)) != q.residuate(q.tensor(p, r), s):
                    out.append({"identity": 3, "witness": (lab(p), lab(r), lab(s))})
    families = [(), tuple(rng)]
    for size in range(1, subset_limit + 1):
        families.extend(itertools.combinations(rng, size))
    for fam in families:
        for p in rng:
            lhs = q.residuate(q.join_all(fam), p)
            rhs = q.meet_all(q.residuate(j, p) for j in fam)
            if lhs != rhs:
                out.append({"identity": 5, "witness": (tuple(map(lab, fam)), lab(p))})
            lhs = q.residuate(p, q.meet_all(fam))
            rhs = q.meet_all(q.residuate(p, j) for j in fam)
            if lhs != rhs:
                out.append({"identity": 6, "witness": (lab(p), tuple(map(lab, fam)))})
    for p in rng:
        if q.meet_all(q.residuate(q.residuate(p, j), j) for j in rng) != p:
            out.append({"identity": 7, "witness": (lab(p),)})
    return out


def negation_law_violations(q, subset_limit=3):
    """Check the double-negation laws on a finite quantale that has them.

    Over all pairs: p -> r = neg(p & neg r) = neg r -> neg p, and
    p & r = neg(r -> neg p) = neg(p -> neg r); over all families of size
    <= subset_limit: neg(meet) = join of negs.
    """
    n = q.n
    rng = range(n)
    out = []
    lab = q.elements.__getitem__
    for p in rng:
        for r in rng:
            imp = q.residuate(p, r)
            if imp != q.neg(q.tensor(p, q.neg(r))):
                out.append({"law": "imp-as-neg-tensor", "witness": (lab(p), lab(r))})
            if imp != q.residuate(q.neg(r), q.neg(p)):
                out.append({"law": "contraposition", "witness": (lab(p), lab(r))})
            tv = q.tensor(p, r)
            if tv != q.neg(q.residuate(r, q.neg(p))):
                out.append({"law": "tensor-as-neg-imp", "witness": (lab(p), lab(r))})
            if tv != q.neg(q.residuate(p, q.neg(r))):
                out.append({"law": "tensor-as-neg-imp-sym", "witness": (lab(p), lab(r))})
    for size in range(1, subset_limit + 1):
        for fam in itertools.combinations(rng, size):
            lhs = q.neg(q.meet_all(fam))
            rhs = q.join_all(q.neg(j) for j in fam)
            if lhs != rhs:
                out.append({"law": "neg-meet-is-join-neg", "witness": tuple(map(lab, fam))})
    return out
