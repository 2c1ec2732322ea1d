"""Quantale construction, residuation laws, and the interval backends."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qideal.errors import (
    ChainNotClosed,
    NotAssociative,
    NotDistributive,
    NotIntegral,
    ShapeMismatch,
)
from qideal.quantale import (
    boolean4,
    build_finite_quantale,
    chain_quantale,
    check_adjunction_sampled,
    godel_chain,
    interval_quantale,
    label_index,
    lukasiewicz_chain,
    negation_law_violations,
    nilpotent_minimum_chain,
    quantale_properties,
    residuation_identity_violations,
    standard_quantale,
)

ALL_CHAINS = [f(n) for f in (lukasiewicz_chain, godel_chain,
                             nilpotent_minimum_chain) for n in range(2, 7)]


def test_boolean4_structure():
    q = boolean4()
    assert q.n == 4
    assert q.is_frame and not q.is_linear
    a, b = q.index("a"), q.index("b")
    assert q.tensor(a, b) == q.bottom
    assert q.neg(a) == b and q.neg(b) == a
    props = quantale_properties(q)
    assert props.has_double_negation and props.is_prelinear


def test_chain_tensors_agree_with_definitions():
    q = lukasiewicz_chain(5)
    half, quarter = q.index("1/2"), q.index("1/4")
    assert q.elements[q.tensor(half, quarter)] == Fraction(0)
    assert q.elements[q.residuate(half, quarter)] == Fraction(3, 4)
    g = godel_chain(4)
    lo, hi = g.index("1/3"), g.index("2/3")
    assert g.tensor(lo, hi) == lo
    assert g.residuate(hi, lo) == lo and g.residuate(lo, hi) == g.unit
    nm = nilpotent_minimum_chain(5)
    assert nm.elements[nm.tensor(nm.index("1/4"), nm.index("1/2"))] == 0
    assert nm.elements[nm.tensor(nm.index("3/4"), nm.index("1/2"))] == Fraction(1, 2)


def test_product_leaves_uniform_grids():
    with pytest.raises(ChainNotClosed):
        chain_quantale("product", n=3)


def test_chain_carrier_must_span_unit_interval():
    with pytest.raises(ShapeMismatch):
        chain_quantale("godel", carrier=["0", "1/2"])


@pytest.mark.parametrize("q", ALL_CHAINS, ids=lambda q: q.catalog[0] + str(q.n))
def test_residuation_identities_on_chains(q):
    assert residuation_identity_violations(q) == []


def test_residuation_identities_on_boolean4():
    assert residuation_identity_violations(boolean4()) == []


def test_negation_laws_on_double_negation_instances():
    dn = [q for q in ALL_CHAINS + [boolean4()]
          if quantale_properties(q).has_double_negation]
    assert dn, "battery lost its double-negation instances"
    for q in dn:
        assert negation_law_violations(q) == []


def test_adjunction_exhaustive_on_small_chain():
    q = lukasiewicz_chain(4)
    for p in range(q.n):
        for r in range(q.n):
            for s in range(q.n):
                assert q.leq[q.tensor(p, r)][s] == q.leq[r][q.residuate(p, s)]


@given(st.sets(st.fractions(min_value=0, max_value=1, max_denominator=12),
               min_size=0, max_size=4))
@settings(max_examples=60, deadline=None)
def test_godel_chain_on_arbitrary_carriers(extra):
    carrier = sorted(extra | {Fraction(0), Fraction(1)})
    q = chain_quantale("godel", carrier=carrier)
    assert residuation_identity_violations(q) == []


def test_label_index_accepts_equivalent_spellings():
    q = lukasiewicz_chain(3)
    half = q.index(Fraction(1, 2))
    assert q.index("1/2") == half
    assert q.index(0.5) == half
    assert q.index(1) == q.unit
    with pytest.raises(KeyError):
        q.index("2/3")
    b = boolean4()
    assert b.index("1") == b.top
    assert b.index(Fraction(1)) == b.top  # string-label fallback


def test_build_rejects_broken_tables():
    e = ("0", "1")
    leq = ((1, 1), (0, 1))
    with pytest.raises(NotIntegral):
        # unit must be the top element
        build_finite_quantale(e, leq, (("0", "0"), ("0", "0")), "0")
    e3 = ("0", "m", "1")
    leq3 = ((1, 1, 1), (0, 1, 1), (0, 0, 1))
    tensor = [["0", "0", "0"], ["0", "1", "m"], ["0", "m", "1"]]
    with pytest.raises((NotAssociative, NotDistributive)):
        build_finite_quantale(e3, leq3, tensor, "1")


def test_interval_closed_forms():
    lq = interval_quantale("lukasiewicz")
    assert lq.tensor(0.7, 0.5) == pytest.approx(0.2)
    assert lq.residuate(0.7, 0.3) == pytest.approx(0.6)
    assert lq.neg(0.3) == pytest.approx(0.7)
    pq = interval_quantale("product")
    assert pq.residuate(0.5, 0.25) == pytest.approx(0.5)
    assert pq.residuate(0.0, 0.4) == 1.0
    gq = interval_quantale("min")
    assert gq.residuate(0.7, 0.3) == pytest.approx(0.3)
    assert gq.residuate(0.3, 0.7) == 1.0
    nq = interval_quantale("nilpotent_minimum")
    assert nq.tensor(0.25, 0.5) == 0.0
    assert nq.tensor(0.75, 0.5) == 0.5


def test_ordinal_sum_rescales_inside_pieces():
    q = interval_quantale("ordinal_sum",
                          pieces=((0.0, 0.5, "lukasiewicz"),
                                  (0.5, 1.0, "product")))
    assert q.tensor(0.25, 0.25) == pytest.approx(0.0)
    assert q.tensor(0.75, 0.75) == pytest.approx(0.625)
    # outside every piece the tensor degrades to min
    assert q.tensor(0.25, 0.75) == pytest.approx(0.25)
    ok, witness = check_adjunction_sampled(q)
    assert ok, witness


@pytest.mark.parametrize("tnorm", ["min", "product", "lukasiewicz",
                                   "nilpotent_minimum"])
def test_interval_adjunction_sampled(tnorm):
    ok, witness = check_adjunction_sampled(interval_quantale(tnorm))
    assert ok, witness


def test_standard_quantale_catalog():
    assert standard_quantale("boolean4").n == 4
    assert standard_quantale("lukasiewicz_chain", n=3).n == 3
    with pytest.raises(ValueError):
        standard_quantale("no-such-thing")
