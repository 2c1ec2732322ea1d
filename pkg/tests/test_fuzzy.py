"""Fuzzy lower/upper sets: degrees, transport, suprema, enumeration."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qideal.errors import (
    BaseMismatch,
    BudgetExceeded,
    NotLower,
    NotUpper,
    ShapeMismatch,
)
from qideal.fuzzy import (
    classify_fuzzy_set,
    classify_sampled,
    constant_fuzzy_set,
    enumerate_monotone_sets,
    fuzzy_set,
    intersection_inclusion_identities,
    join_pointwise,
    kan_transport_identity,
    lower_as_distributor,
    meet_pointwise,
    neg_pointwise,
    residuate_into,
    residuate_pointwise,
    sub_degree,
    suprema,
    tensor_degree,
    tensor_pointwise,
    transport,
    upper_as_distributor,
    yoneda,
)
from qideal.qorder import (
    build_qdistributor,
    build_qmap,
    crisp_qorder,
    identity_qmap,
    interval_order,
    point_qorder,
    random_qorder,
    standard_qorder,
)
from qideal.quantale import (
    boolean4,
    godel_chain,
    interval_quantale,
    lukasiewicz_chain,
)

L3 = lukasiewicz_chain(3)
DL3 = standard_qorder(L3, "dL")
HALF = Fraction(1, 2)


def two_chain(q):
    return crisp_qorder(q, ("a", "b"), ((True, True), (False, True)))


def test_fuzzy_set_construction_and_guards():
    A = standard_qorder(L3, "discrete", n=2)
    phi = fuzzy_set(A, {"x0": HALF, "x1": 1})
    assert phi.value("x0") == HALF
    assert phi.as_dict() == {"x0": HALF, "x1": Fraction(1)}
    assert fuzzy_set(A, (HALF, 1)).values == phi.values
    with pytest.raises(ShapeMismatch):
        fuzzy_set(A, {"x0": HALF})
    with pytest.raises(ShapeMismatch):
        fuzzy_set(A, {"x0": HALF, "x1": 1, "zap": 0})
    with pytest.raises(ShapeMismatch):
        fuzzy_set(A, (HALF,))


def test_yoneda_lemma():
    # inclusion degree of a principal lower set is evaluation
    for phi in enumerate_monotone_sets(DL3, "lower"):
        for a in DL3.elements:
            assert sub_degree(yoneda(DL3, a), phi) == phi.value(a)


def test_yoneda_is_fully_faithful():
    for a in DL3.elements:
        for b in DL3.elements:
            assert sub_degree(yoneda(DL3, a), yoneda(DL3, b)) == DL3.degree(a, b)


def test_classify_fuzzy_set_flags():
    A = two_chain(L3)
    rep = classify_fuzzy_set(fuzzy_set(A, {"a": 1, "b": HALF}))
    assert rep["lower"] and not rep["upper"] and rep["inhabited"]
    assert rep["witnesses"]["upper"] == ("a", "b")
    rep = classify_fuzzy_set(fuzzy_set(A, {"a": 0, "b": HALF}))
    assert rep["upper"] and not rep["lower"] and not rep["inhabited"]
    assert rep["witnesses"]["lower"] == ("a", "b")
    # discrete bases make every vector both lower and upper
    D = standard_qorder(L3, "discrete", n=2)
    rep = classify_fuzzy_set(fuzzy_set(D, (HALF, 0)))
    assert rep["lower"] and rep["upper"]


def test_degrees_spot_values():
    A = two_chain(L3)
    phi = fuzzy_set(A, {"a": 1, "b": HALF})
    psi = fuzzy_set(A, {"a": 0, "b": HALF})
    assert sub_degree(phi, constant_fuzzy_set(A, Fraction(1))) == 1
    assert sub_degree(constant_fuzzy_set(A, Fraction(1)), phi) == HALF
    assert tensor_degree(phi, psi) == 0   # 1&0 and 1/2&1/2 under Lukasiewicz
    assert tensor_degree(phi, constant_fuzzy_set(A, Fraction(1))) == 1


def test_degree_guards():
    A = two_chain(L3)
    B = standard_qorder(L3, "discrete", n=2)
    phi = constant_fuzzy_set(A, Fraction(1))
    with pytest.raises(BaseMismatch):
        sub_degree(phi, constant_fuzzy_set(B, Fraction(1)))
    with pytest.raises(NotLower) as err:
        tensor_degree(fuzzy_set(A, {"a": 0, "b": 1}), phi)
    assert err.value.witness == ("a", "b")
    with pytest.raises(NotUpper):
        tensor_degree(phi, fuzzy_set(A, {"a": 1, "b": 0}))


def test_transport_identity_and_closure():
    f = identity_qmap(DL3)
    phi = yoneda(DL3, HALF)
    assert transport(f, phi, "forward").values == phi.values
    assert transport(f, phi, "backward").values == phi.values
    # forward transport lower-closes a non-lower input
    spike = fuzzy_set(DL3, {Fraction(0): 0, HALF: 1, Fraction(1): 0})
    image = transport(f, spike, "forward")
    assert classify_fuzzy_set(image)["lower"]
    assert image.value(Fraction(1)) == HALF


def test_transport_collapses_along_a_map():
    A = two_chain(L3)
    pt = point_qorder(L3)
    f = build_qmap(A, pt, {"a": "*", "b": "*"})
    phi = fuzzy_set(A, {"a": HALF, "b": 0})
    assert transport(f, phi, "forward").value("*") == HALF
    back = transport(f, constant_fuzzy_set(pt, HALF), "backward")
    assert back.as_dict() == {"a": HALF, "b": HALF}
    with pytest.raises(BaseMismatch):
        transport(f, constant_fuzzy_set(pt, HALF), "forward")
    with pytest.raises(BaseMismatch):
        transport(f, phi, "backward")
    with pytest.raises(ValueError):
        transport(f, phi, "sideways")


def test_pointwise_operations():
    A = two_chain(L3)
    phi = fuzzy_set(A, {"a": 1, "b": HALF})
    assert tensor_pointwise(HALF, phi).as_dict() == {"a": HALF, "b": Fraction(0)}
    assert residuate_pointwise(HALF, phi).as_dict() == {"a": Fraction(1), "b": Fraction(1)}
    assert residuate_into(phi, HALF).as_dict() == {"a": HALF, "b": Fraction(1)}
    psi = fuzzy_set(A, {"a": 0, "b": 1})
    assert join_pointwise(phi, psi).as_dict() == {"a": Fraction(1), "b": Fraction(1)}
    assert meet_pointwise(phi, psi).as_dict() == {"a": Fraction(0), "b": HALF}
    assert neg_pointwise(neg_pointwise(phi)).values == phi.values


def test_suprema():
    # principal lower sets recover their generator
    for a in DL3.elements:
        assert suprema(yoneda(DL3, a)) == (a,)
    q = boolean4()
    D = standard_qorder(q, "discrete", n=2)
    assert suprema(fuzzy_set(D, ("a", "b"))) == ()
    A = two_chain(L3)
    assert suprema(constant_fuzzy_set(A, Fraction(0))) == ("a",)
    with pytest.raises(NotLower):
        suprema(fuzzy_set(A, {"a": 0, "b": 1}))


def test_enumerate_monotone_sets():
    A = two_chain(L3)
    lowers = enumerate_monotone_sets(A, "lower")
    uppers = enumerate_monotone_sets(A, "upper")
    assert len(lowers) == len(uppers) == 6
    assert all(classify_fuzzy_set(phi)["lower"] for phi in lowers)
    with pytest.raises(ValueError):
        enumerate_monotone_sets(A, "sideways")
    with pytest.raises(BudgetExceeded):
        enumerate_monotone_sets(A, "lower", budget=3)


def test_fuzzy_sets_as_distributors():
    A = two_chain(L3)
    phi = fuzzy_set(A, {"a": 1, "b": HALF})
    psi = fuzzy_set(A, {"a": 0, "b": HALF})
    lab = L3.elements.__getitem__
    d = lower_as_distributor(phi)
    assert d.matrix == ((L3.index(Fraction(1)),), (L3.index(HALF),))
    # both embeddings are hom-compatible matrices
    build_qdistributor(A, d.target, [[lab(v) for v in row] for row in d.matrix])
    u = upper_as_distributor(psi)
    build_qdistributor(u.source, A, [[lab(v) for v in row] for row in u.matrix])


def test_classify_sampled_on_the_interval():
    order = interval_order(interval_quantale("lukasiewicz"), "dR")
    rep = classify_sampled(order, lambda x: x, grid=65)
    assert rep["lower"] and rep["inhabited"] and not rep["upper"]
    rep = classify_sampled(order, lambda x: 1.0, grid=65)
    assert rep["lower"] and rep["upper"] and rep["inhabited"]
    rep = classify_sampled(order, lambda x: 0.25, grid=65)
    assert not rep["inhabited"]


@pytest.mark.parametrize("q", [lukasiewicz_chain(3), boolean4(), godel_chain(3)])
def test_intersection_inclusion_identities(q):
    A = crisp_qorder(q, ("a", "b"), ((True, True), (False, True)))
    assert intersection_inclusion_identities(A) is None
    D = standard_qorder(q, "discrete", n=2)
    assert intersection_inclusion_identities(D) is None


def test_kan_transport_identity():
    A = two_chain(L3)
    pt = point_qorder(L3)
    assert kan_transport_identity(build_qmap(A, pt, {"a": "*", "b": "*"})) is None
    assert kan_transport_identity(identity_qmap(DL3)) is None


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_yoneda_images_are_lower_and_inhabited(seed):
    A = random_qorder(L3, 3, random.Random(seed))
    for a in A.elements:
        rep = classify_fuzzy_set(yoneda(A, a))
        assert rep["lower"] and rep["inhabited"]
