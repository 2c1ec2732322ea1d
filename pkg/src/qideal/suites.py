"""Named check suites: each ties one desk-checkable claim about ideal
classes, completions, or Scott structures to a reproducible run over
small instances.

Every suite is deterministic for fixed inputs; randomized instance
generation always starts from an explicit 64-bit seed that is echoed in
the result.  Witness payloads embed full instance dumps so a failing
run can be replayed through the loaders.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .completion import check_completeness_continuity, check_saturation, ideal_space
from .errors import BudgetExceeded, DecompositionMismatch, UnknownSuite
from .fuzzy import FuzzySet, fuzzy_set, classify_sampled, transport
from .ideals import (
    approach_terms,
    classify_ideal,
    enumerate_ideals,
    generate_interval_ideal,
    ideal_class_tag,
    irreducible_interval_ideal,
)
from .io import dump_instance, jsonable
from .qorder import QOrderedSet, all_qmaps, crisp_qorder, interval_order, random_qorder, standard_qorder
from .quantale import (
    boolean4,
    godel_chain,
    interval_quantale,
    lukasiewicz_chain,
    nilpotent_minimum_chain,
    quantale_properties,
)
from .scott import (
    check_open_preimages,
    cocontinuity_equivalence,
    generate_scott_structure,
    interval_dR_scott_closed,
    verify_ordinal_sum_generation,
)

DEFAULT_SEED = 20260819


@dataclass
class SuiteResult:
    name: str
    instances: list
    verdict: str
    witnesses: list
    elapsed: float
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {"suite": self.name, "verdict": self.verdict,
                "instances": list(self.instances),
                "witnesses": jsonable(self.witnesses),
                "details": jsonable(self.details),
                "elapsed": round(self.elapsed, 3)}

    def summary(self):
        lines = [f"{self.name}: {self.verdict.upper()} "
                 f"({len(self.instances)} instances, {self.elapsed:.2f} s)"]
        for k, v in self.details.items():
            lines.append(f"  {k}: {jsonable(v)}")
        for w in self.witnesses[:3]:
            lines.append(f"  witness: {jsonable(w)}")
        if len(self.witnesses) > 3:
            lines.append(f"  ... {len(self.witnesses) - 3} more witnesses")
        return "\n".join(lines)


def _two_point_orders(q):
    lab = q.elements.__getitem__
    out = []
    for r01 in range(q.n):
        for r10 in range(q.n):
            hom = ((q.unit, r01), (r10, q.unit))
            A = QOrderedSet(q, ("x0", "x1"), hom,
                            catalog=("two_point", {"r01": lab(r01), "r10": lab(r10)}),
                            _index={"x0": 0, "x1": 1})
            out.append(A)
    return out


def _trio():
    return ((boolean4(), "boolean4"), (lukasiewicz_chain(3), "lukasiewicz-3"),
            (godel_chain(4), "godel-4"))


@lru_cache(maxsize=None)
def _exhaustive_battery():
    out = []
    for q, qd in _trio():
        for A in _two_point_orders(q):
            p = A.catalog[1]
            out.append((f"2-point({p['r01']},{p['r10']}) over {qd}", A))
    return tuple(out)


@lru_cache(maxsize=None)
def _seeded_battery(seed, count=50):
    rng = random.Random(seed)
    qs = _trio()
    out = []
    for k in range(count):
        q, qd = qs[k % len(qs)]
        A = random_qorder(q, 3, rng)
        out.append((f"seeded-3pt#{k} over {qd}", A))
    return tuple(out)


def _full_battery(seed):
    return _exhaustive_battery() + _seeded_battery(seed)


@lru_cache(maxsize=None)
def _census(A, budget):
    return tuple((phi, classify_ideal(phi, budget=budget))
                 for phi in enumerate_ideals(A, "lower", budget=budget))


@lru_cache(maxsize=None)
def _saturation_battery():
    out = []
    for q, qd in ((lukasiewicz_chain(2), "lukasiewicz-2"),
                  (lukasiewicz_chain(3), "lukasiewicz-3")):
        out.append((f"discrete-2 over {qd}", standard_qorder(q, "discrete", n=2)))
        out.append((f"chain-2 over {qd}",
                    crisp_qorder(q, ("x0", "x1"), ((True, True), (False, True)))))
    return tuple(out)


@lru_cache(maxsize=None)
def _crisp_posets(max_points):
    """Every labeled partial order on 1..max_points points, as leq
    matrices."""
    out = []
    for n in range(1, max_points + 1):
        off = [(i, j) for i in range(n) for j in range(n) if i != j]
        for bits in itertools.product((False, True), repeat=len(off)):
            leq = [[i == j for j in range(n)] for i in range(n)]
            for (i, j), b in zip(off, bits):
                leq[i][j] = b
            ok = True
            for i in range(n):
                for j in range(n):
                    if i != j and leq[i][j] and leq[j][i]:
                        ok = False
                        break
                    if not leq[i][j]:
                        continue
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                out.append((n, tuple(tuple(r) for r in leq)))
    return tuple(out)


def _ideal_witness(desc, phi, rep, reason):
    return {"instance": desc, "reason": reason,
            "ideal": dump_instance(phi),
            "flags": {"inhabited": rep.inhabited, "flat": rep.flat,
                      "irreducible": rep.irreducible,
                      "forward_cauchy": rep.forward_cauchy},
            "witnesses": rep.witnesses}


def _inclusion_suite(name, keep_base, offend, reason, seed, budget):
    instances, witnesses = [], []
    ideals = 0
    for desc, A in _full_battery(seed):
        if not keep_base(quantale_properties(A.quantale), A.quantale):
            continue
        instances.append(desc)
        for phi, rep in _census(A, budget):
            ideals += 1
            if offend(rep):
                witnesses.append(_ideal_witness(desc, phi, rep, reason))
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"ideals_checked": ideals, "seed": seed}


def _suite_fc_subset_irr(params, seed, budget, tolerance):
    return _inclusion_suite(
        "FC_SUBSET_IRR", lambda props, q: True,
        lambda r: r.forward_cauchy and not r.irreducible,
        "forward Cauchy ideal that is not irreducible", seed, budget)


def _suite_fc_subset_flat(params, seed, budget, tolerance):
    return _inclusion_suite(
        "FC_SUBSET_FLAT", lambda props, q: True,
        lambda r: r.forward_cauchy and not r.flat,
        "forward Cauchy ideal that is not flat", seed, budget)


def _suite_irr_subset_flat_prelinear(params, seed, budget, tolerance):
    return _inclusion_suite(
        "IRR_SUBSET_FLAT_PRELINEAR", lambda props, q: props.is_prelinear,
        lambda r: r.irreducible and not r.flat,
        "irreducible ideal that is not flat on a prelinear instance",
        seed, budget)


def _suite_flat_eq_irr_doubleneg(params, seed, budget, tolerance):
    return _inclusion_suite(
        "FLAT_EQ_IRR_DOUBLENEG", lambda props, q: props.has_double_negation,
        lambda r: r.flat != r.irreducible,
        "flat and irreducible disagree under double negation",
        seed, budget)


def _suite_linear_irr_eq_fc(params, seed, budget, tolerance):
    return _inclusion_suite(
        "LINEAR_IRR_EQ_FC", lambda props, q: q.is_linear,
        lambda r: r.irreducible != r.forward_cauchy,
        "irreducible and forward Cauchy disagree on a linear quantale",
        seed, budget)


def _suite_boolean4_counterexample(params, seed, budget, tolerance):
    q = boolean4()
    A = standard_qorder(q, "discrete", n=2)
    phi = fuzzy_set(A, {"x0": "a", "x1": "b"})
    rep = classify_ideal(phi, budget=budget)
    expected = (True, True, True, False)
    witnesses = []
    if rep.flags() != expected:
        witnesses.append(_ideal_witness("discrete-2 over boolean4", phi, rep,
                                        f"expected flags {expected}"))
    details = {"flags": {"inhabited": rep.inhabited, "flat": rep.flat,
                         "irreducible": rep.irreducible,
                         "forward_cauchy": rep.forward_cauchy},
               "forward_cauchy_witness": rep.witnesses.get("forward_cauchy")}
    return (["discrete-2 over boolean4"],
            "pass" if not witnesses else "fail", witnesses, details)


def _suite_godel_flat_not_irr(params, seed, budget, tolerance):
    n = int(params.get("n", 5))
    b = Fraction(str(params.get("b", "1/2")))
    a = Fraction(str(params.get("a", "1/4")))
    q = godel_chain(n)
    A = standard_qorder(q, "dL")
    bi, ai = q.index(b), q.index(a)
    vals = tuple(q.join(bi, q.residuate(x, ai)) for x in range(q.n))
    phi = FuzzySet(A, vals)
    rep = classify_ideal(phi, budget=budget)
    witnesses = []
    if not (rep.flat and not rep.irreducible and not rep.forward_cauchy):
        witnesses.append(_ideal_witness(
            f"dL over godel-{n}", phi, rep,
            "expected flat, not irreducible, not forward Cauchy"))
    details = {"n": n, "b": str(b), "a": str(a),
               "irreducible_witness": rep.witnesses.get("irreducible"),
               "forward_cauchy_witness": rep.witnesses.get("forward_cauchy")}
    return ([f"dL over godel-{n} with b={b}, a={a}"],
            "pass" if not witnesses else "fail", witnesses, details)


def _principal_values(A):
    return {tuple(A.hom[x][a] for x in range(A.n)) for a in range(A.n)}


def _suite_cor312_families(params, seed, budget, tolerance):
    tol = 1e-9 if tolerance is None else tolerance
    grid = int(params.get("grid", 257))
    instances, witnesses = [], []
    checked = 0

    for tnorm, n in (("lukasiewicz", 4), ("godel", 4), ("nilpotent_minimum", 4)):
        q = {"lukasiewicz": lukasiewicz_chain, "godel": godel_chain,
             "nilpotent_minimum": nilpotent_minimum_chain}[tnorm](n)
        for which in ("dL", "dR"):
            desc = f"{which} over {tnorm}-{n}"
            instances.append(desc)
            A = standard_qorder(q, which)
            irr = {p.values for p in enumerate_ideals(A, "irr", budget=budget)}
            prin = _principal_values(A)
            checked += 1
            if irr != prin:
                witnesses.append({
                    "instance": desc,
                    "reason": "irreducible ideals do not match the "
                              "principal family on a finite chain",
                    "extra": [dict(zip(A.elements, map(q.elements.__getitem__, v)))
                              for v in sorted(irr ^ prin)]})

    pts = [i / (grid - 1) for i in range(grid)]
    for tnorm in ("lukasiewicz", "product"):
        q = interval_quantale(tnorm)
        for which in ("dL", "dR"):
            order = interval_order(q, which)
            for a in (0.0, 0.25, 0.5, 1.0):
                desc = f"{which} over unit-interval {tnorm}, a={a}"
                instances.append(desc)
                plain = irreducible_interval_ideal(q, which, a)
                gen = generate_interval_ideal(order, [a])
                checked += 1
                worst = max(abs(plain(x) - gen(x)) for x in pts)
                if worst > tol:
                    witnesses.append({"instance": desc, "reason":
                                      "constant-sequence generation misses "
                                      "the plain family member",
                                      "deviation": worst})
                shape = classify_sampled(order, gen, grid=65, tolerance=tol)
                if not (shape["lower"] and shape["inhabited"]):
                    witnesses.append({"instance": desc, "reason":
                                      "generated member is not an inhabited "
                                      "lower set on the sample",
                                      "shape": shape})
                strictable = (which == "dL" and a > 0) or (which == "dR" and a < 1)
                if strictable:
                    side = "below" if which == "dL" else "above"
                    strict = irreducible_interval_ideal(q, which, a, strict=True)
                    gen2 = generate_interval_ideal(order, approach_terms(a, side))
                    checked += 1
                    worst = max(abs(strict(x) - gen2(x)) for x in pts)
                    if worst > tol:
                        witnesses.append({"instance": desc + " (strict)",
                                          "reason": "approach-sequence "
                                          "generation misses the strict member",
                                          "deviation": worst})
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"members_checked": checked,
                                           "grid": grid, "tolerance": tol}


def _saturation_suite(name, tag, budget):
    instances, witnesses = [], []
    weights = 0
    for desc, A in _saturation_battery():
        instances.append(desc)
        rep = check_saturation(A, tag, budget=budget)
        weights += rep["weights_checked"]
        if not rep["saturated"]:
            witnesses.append({"instance": desc, "violations": rep["violations"]})
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"weights_checked": weights}


def _suite_saturation_fc(params, seed, budget, tolerance):
    return _saturation_suite("SATURATION_FC", "fc", budget)


def _suite_saturation_flat(params, seed, budget, tolerance):
    return _saturation_suite("SATURATION_FLAT", "flat", budget)


def _suite_saturation_irr(params, seed, budget, tolerance):
    return _saturation_suite("SATURATION_IRR", "irr", budget)


def _suite_thm42_free(params, seed, budget, tolerance):
    instances, witnesses = [], []
    members = 0
    for desc, A in _saturation_battery():
        instances.append(desc)
        S1 = ideal_space(A, "flat", budget=budget)
        rep = check_completeness_continuity(S1.space, "flat", budget=budget)
        if not (rep["complete"] and rep["continuous"]):
            witnesses.append({"instance": desc,
                              "reason": "ideal space is not complete and "
                              "continuous for its own class",
                              "witnesses": rep["witnesses"]})
            continue
        S2 = rep["space"]
        adjoint = rep["adjoint"]
        members += S1.n
        for i, member in enumerate(S1.carrier):
            expected = transport(S1.yoneda_map, member, "forward").values
            got = S2.carrier[adjoint.mapping[i]].values
            if got != expected:
                witnesses.append({
                    "instance": desc,
                    "reason": "searched left adjoint differs from the "
                              "transported embedding",
                    "member": S1.space.elements[i]})
                break
        sup = rep["sup"]
        for j, lam in enumerate(S2.carrier):
            label = sup[S2.space.elements[j]]
            back = transport(S1.yoneda_map, lam, "backward").values
            if S1.carrier[S1.space.index(label)].values != back:
                witnesses.append({
                    "instance": desc,
                    "reason": "supremum in the ideal space differs from "
                              "composition with the embedding",
                    "member": S2.space.elements[j]})
                break
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"level_one_members": members}


def _suite_scott_axioms(params, seed, budget, tolerance):
    phases = params.get("phases", ("axioms", "classical", "duality"))
    if isinstance(phases, str):
        phases = tuple(p.strip() for p in phases.split(",") if p.strip())
    instances, witnesses = [], []
    details = {"seed": seed}
    finding = False

    if "axioms" in phases:
        strong_t = strong_c = 0
        luk_c5 = []
        bases = _full_battery(seed)
        for desc, A in bases:
            instances.append(desc)
            St = generate_scott_structure(A, "topology", which="flat",
                                          budget=budget)
            Sc = generate_scott_structure(A, "cotopology", which="irr",
                                          budget=budget)
            for axiom in ("O1", "O2", "O3", "O4"):
                if not St.axioms[axiom]:
                    witnesses.append({"instance": desc, "axiom": axiom,
                                      "mode": "topology"})
            for axiom in ("C1", "C2", "C3", "C4"):
                if not Sc.axioms[axiom]:
                    witnesses.append({"instance": desc, "axiom": axiom,
                                      "mode": "cotopology"})
            strong_t += St.strong
            strong_c += Sc.strong
            name = (A.quantale.catalog or ("",))[0]
            if name == "lukasiewicz_chain" and not Sc.axioms["C5"]:
                luk_c5.append(desc)
                finding = True
        details["axioms_bases"] = len(bases)
        details["strong_topologies"] = strong_t
        details["strong_cotopologies"] = strong_c
        if luk_c5:
            details["luk_c5_failures"] = luk_c5

    if "classical" in phases:
        b2 = godel_chain(2)
        unit, bot = b2.unit, b2.bottom
        posets = _crisp_posets(int(params.get("max_points", 4)))
        mismatches = 0
        for n, leq in posets:
            P = crisp_qorder(b2, tuple(f"p{i}" for i in range(n)), leq)
            St = generate_scott_structure(P, "topology", which="flat",
                                          budget=budget)
            Sc = generate_scott_structure(P, "cotopology", which="irr",
                                          budget=budget)
            uppers = set()
            lowers = set()
            for bits in itertools.product((False, True), repeat=n):
                if all(not (bits[i] and leq[i][j]) or bits[j]
                       for i in range(n) for j in range(n)):
                    uppers.add(tuple(unit if b else bot for b in bits))
                if all(not (bits[j] and leq[i][j]) or bits[i]
                       for i in range(n) for j in range(n)):
                    lowers.add(tuple(unit if b else bot for b in bits))
            got_t = {m.values for m in St.members}
            got_c = {m.values for m in Sc.members}
            if got_t != uppers or got_c != lowers:
                mismatches += 1
                witnesses.append({
                    "instance": f"crisp poset on {n} points",
                    "leq": [list(r) for r in leq],
                    "reason": "generated structure differs from the "
                              "classical one",
                    "open_difference": sorted(got_t ^ uppers),
                    "closed_difference": sorted(got_c ^ lowers)})
        instances.append(f"all crisp posets on <= {params.get('max_points', 4)} "
                         f"points over the 2-chain ({len(posets)} posets)")
        details["classical_posets"] = len(posets)
        details["classical_mismatches"] = mismatches

    if "duality" in phases:
        duality_bases = 0
        for q, qd in ((boolean4(), "boolean4"),
                      (nilpotent_minimum_chain(3), "nilpotent-minimum-3"),
                      (nilpotent_minimum_chain(4), "nilpotent-minimum-4"),
                      (nilpotent_minimum_chain(5), "nilpotent-minimum-5")):
            bases = _two_point_orders(q) + [standard_qorder(q, "dL")]
            for k, A in enumerate(bases):
                desc = (f"duality base#{k} over {qd}")
                St = generate_scott_structure(A, "topology", which="irr",
                                              budget=budget)
                Sc = generate_scott_structure(A, "cotopology", which="irr",
                                              budget=budget)
                negged = {tuple(q.neg_vector[v] for v in m.values)
                          for m in St.members}
                if negged != {m.values for m in Sc.members}:
                    witnesses.append({"instance": desc, "reason":
                                      "negated topology differs from the "
                                      "cotopology"})
                duality_bases += 1
            instances.append(f"duality battery over {qd} "
                             f"({len(bases)} bases)")
        details["duality_bases"] = duality_bases

    verdict = "pass" if not witnesses else "fail"
    if verdict == "pass" and finding:
        verdict = "finding"
    return instances, verdict, witnesses, details


def _suite_prop57_equiv(params, seed, budget, tolerance):
    q = lukasiewicz_chain(3)
    A = crisp_qorder(q, ("p0", "p1", "p2"),
                     tuple(tuple(i <= j for j in range(3)) for i in range(3)))
    B = standard_qorder(q, "dL")
    instances = ["crisp 3-chain over lukasiewicz-3", "dL over lukasiewicz-3"]
    witnesses = []
    maps = cocontinuous = 0
    for src, dst in ((A, B), (B, A)):
        for f in all_qmaps(src, dst):
            maps += 1
            rep = cocontinuity_equivalence(f, "irreducible", budget=budget)
            if not rep["agree"]:
                witnesses.append({"mapping": list(f.mapping),
                                  "report": rep})
                continue
            if rep["cocontinuous"]:
                cocontinuous += 1
                ok, w = check_open_preimages(f, "flat", budget=budget)
                if not ok:
                    witnesses.append({"mapping": list(f.mapping),
                                      "reason": "open set pulled back to a "
                                      "non-open set along a cocontinuous map",
                                      "witness": w})
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"maps_checked": maps,
                                           "cocontinuous_maps": cocontinuous}


def _suite_ex58_characterization(params, seed, budget, tolerance):
    tnorm = params.get("tnorm", "lukasiewicz")
    grid = int(params.get("grid", 257))
    q = interval_quantale(tnorm)
    cases = (
        ("identity", lambda x: x, True),
        ("min(1, x+1/4)", lambda x: min(1.0, x + 0.25), True),
        ("left-continuous step at 1/2", lambda x: 0.0 if x <= 0.5 else 1.0, False),
        ("tent map (not order preserving)", lambda x: 0.6 - abs(x - 0.5), False),
    )
    instances, witnesses = [], []
    reports = {}
    for desc, fn, expect in cases:
        instances.append(f"{desc} over unit-interval {tnorm}")
        rep = interval_dR_scott_closed(fn, q, grid=grid, tolerance=tolerance)
        reports[desc] = {"scott_closed": rep["scott_closed"],
                         "right_continuous": rep["right_continuous"],
                         "order_preserving": rep["order_preserving"]}
        if rep["scott_closed"] != expect:
            witnesses.append({"case": desc, "expected": expect, "report": rep})
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"grid": grid, "cases": reports}


def _suite_ex510_generation(params, seed, budget, tolerance):
    tol = 1e-9 if tolerance is None else tolerance
    grid = int(params.get("grid", 257))
    shift = float(Fraction(str(params.get("shift", "1/4"))))
    q = interval_quantale(params.get("tnorm", "lukasiewicz"))
    fn = lambda x: min(1.0, x + shift)
    instances = [f"min(1, x+{shift}) over unit-interval {q.tnorm}, grid {grid}"]
    witnesses = []
    rep = verify_ordinal_sum_generation(fn, q, grid=grid)
    details = {"max_deviation": rep["max_deviation"],
               "deviation_at": rep["deviation_at"],
               "members_closed_on_grid": rep["members_closed_on_grid"],
               "tolerance": tol}
    if rep["max_deviation"] > tol or not rep["members_closed_on_grid"]:
        witnesses.append({"instance": instances[0],
                          "max_deviation": rep["max_deviation"],
                          "at": rep["deviation_at"]})
    try:
        verify_ordinal_sum_generation(fn, interval_quantale("nilpotent_minimum"),
                                      grid=65)
        witnesses.append({"instance": "nilpotent minimum",
                          "reason": "a tensor without the required "
                          "decomposition was accepted"})
    except DecompositionMismatch as e:
        details["nilpotent_minimum"] = f"rejected: {e}"
    osum = interval_quantale(
        "ordinal_sum",
        pieces=((0.0, 0.5, "lukasiewicz"), (0.5, 1.0, "product")))
    rep2 = verify_ordinal_sum_generation(lambda x: min(1.0, x + 0.125), osum,
                                         grid=grid)
    details["ordinal_sum_deviation"] = rep2["max_deviation"]
    if rep2["max_deviation"] > 1e-6:
        witnesses.append({"instance": "ordinal sum spot check",
                          "max_deviation": rep2["max_deviation"]})
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, details


def _suite_classical_degeneration(params, seed, budget, tolerance):
    b2 = godel_chain(2)
    max_points = int(params.get("max_points", 4))
    posets = _crisp_posets(max_points)
    instances = [f"all crisp posets on <= {max_points} points over the 2-chain "
                 f"({len(posets)} posets)"]
    witnesses = []
    ideals = 0
    for n, leq in posets:
        P = crisp_qorder(b2, tuple(f"p{i}" for i in range(n)), leq)
        for phi, rep in _census(P, budget):
            ideals += 1
            S = [i for i in range(n) if phi.values[i] == b2.unit]
            directed = bool(S) and all(
                any(leq[x][z] and leq[y][z] for z in S)
                for x in S for y in S)
            if not (rep.flat == rep.irreducible == rep.forward_cauchy == directed):
                witnesses.append(_ideal_witness(
                    f"crisp poset on {n} points (leq {leq})", phi, rep,
                    "class verdicts differ from the classical "
                    f"directed-lower-set test ({directed})"))
    verdict = "pass" if not witnesses else "fail"
    return instances, verdict, witnesses, {"posets": len(posets),
                                           "ideals_checked": ideals}


_REGISTRY = {
    "FC_SUBSET_IRR": _suite_fc_subset_irr,
    "FC_SUBSET_FLAT": _suite_fc_subset_flat,
    "IRR_SUBSET_FLAT_PRELINEAR": _suite_irr_subset_flat_prelinear,
    "FLAT_EQ_IRR_DOUBLENEG": _suite_flat_eq_irr_doubleneg,
    "LINEAR_IRR_EQ_FC": _suite_linear_irr_eq_fc,
    "BOOLEAN4_COUNTEREXAMPLE": _suite_boolean4_counterexample,
    "GODEL_FLAT_NOT_IRR": _suite_godel_flat_not_irr,
    "COR312_FAMILIES": _suite_cor312_families,
    "SATURATION_FC": _suite_saturation_fc,
    "SATURATION_FLAT": _suite_saturation_flat,
    "SATURATION_IRR": _suite_saturation_irr,
    "THM42_FREE": _suite_thm42_free,
    "SCOTT_AXIOMS": _suite_scott_axioms,
    "PROP57_EQUIV": _suite_prop57_equiv,
    "EX58_CHARACTERIZATION": _suite_ex58_characterization,
    "EX510_GENERATION": _suite_ex510_generation,
    "CLASSICAL_DEGENERATION": _suite_classical_degeneration,
}


def suite_names():
    return tuple(_REGISTRY)


def run_suite(name, seed=None, budget=None, tolerance=None, **params):
    """Execute one named suite and return its SuiteResult.  Verdicts:
    pass, fail (claim violated, witnesses attached), finding (claim
    holds but an asserted side condition failed), budget (enumeration
    gave up)."""
    key = str(name).upper().replace("-", "_")
    if key not in _REGISTRY:
        raise UnknownSuite(name, suite_names())
    seed = DEFAULT_SEED if seed is None else int(seed) & (2 ** 64 - 1)
    start = time.perf_counter()
    try:
        instances, verdict, witnesses, details = _REGISTRY[key](
            params, seed, budget, tolerance)
    except BudgetExceeded as e:
        return SuiteResult(key, [], "budget", [{"budget": str(e)}],
                           time.perf_counter() - start, {"seed": seed})
    return SuiteResult(key, instances, verdict, witnesses,
                       time.perf_counter() - start, details)


_FLAG_FIELDS = {"fc": "forward_cauchy", "flat": "flat",
                "irreducible": "irreducible"}


def search_counterexample(shape, seed=None, budget=None, limit=200):
    """Look for an ideal in class X that misses class Y, shape "X-not-Y"
    with classes named fc, flat, irr.  Exhaustive 2-point instances over
    the standard quantale trio come first, then seeded random 3-point
    instances, until the limit.  Returns a report dict either way."""
    try:
        have_tag, want_tag = [ideal_class_tag(part)
                              for part in str(shape).lower().split("-not-")]
    except (ValueError, KeyError):
        raise ValueError(
            f"shape {shape!r} is not of the form <class>-not-<class> "
            "with classes fc, flat, irr") from None
    if "lower" in (have_tag, want_tag):
        raise ValueError("search wants one of the proper classes: fc, flat, irr")
    seed = DEFAULT_SEED if seed is None else int(seed) & (2 ** 64 - 1)
    have_f, want_f = _FLAG_FIELDS[have_tag], _FLAG_FIELDS[want_tag]
    rng = random.Random(seed)
    qs = _trio()
    checked = {"instances": 0, "ideals": 0}

    def scan(desc, A):
        for phi, rep in _census(A, budget):
            checked["ideals"] += 1
            if getattr(rep, have_f) and not getattr(rep, want_f):
                return {"found": True, "shape": f"{have_tag}-not-{want_tag}",
                        "instance": desc, "seed": seed,
                        "ideal": dump_instance(phi),
                        "flags": {"inhabited": rep.inhabited, "flat": rep.flat,
                                  "irreducible": rep.irreducible,
                                  "forward_cauchy": rep.forward_cauchy},
                        "witnesses": jsonable(rep.witnesses),
                        "checked": dict(checked)}
        return None

    for desc, A in _exhaustive_battery():
        checked["instances"] += 1
        hit = scan(desc, A)
        if hit:
            return hit
        if checked["instances"] >= limit:
            break
    k = 0
    while checked["instances"] < limit:
        q, qd = qs[k % len(qs)]
        A = random_qorder(q, 3, rng)
        checked["instances"] += 1
        hit = scan(f"seeded-3pt#{k} over {qd}", A)
        if hit:
            return hit
        k += 1
    return {"found": False, "shape": f"{have_tag}-not-{want_tag}",
            "seed": seed, "checked": dict(checked)}
