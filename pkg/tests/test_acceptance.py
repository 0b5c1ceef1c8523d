"""Acceptance criteria 1-9, one test each.

Every test records a PASS/FAIL line in ``conftest.ACCEPTANCE`` before it
asserts, so the terminal summary lists all criteria even when some fail.
"""

import random
import subprocess
import sys
import time
from collections import Counter

import pytest

from kecrit import fixtures, poly
from kecrit.generators import all_graphs, gnp
from kecrit.graph import closed_neighborhood, neighborhood
from kecrit.ke import is_ke
from kecrit.matching import max_matching_brute_force, max_matching_general
from kecrit.oracle import ExactOracle
from kecrit.suite import HOLDS, PREMISE_NOT_MET, VIOLATION, theorem_suite

from conftest import ACCEPTANCE

SEED = 20160117
SUITE_CHECKS = (
    "zhang", "th3_enlargement", "th4_i_ker_in_core", "th4_ii_lattice", "prop1",
    "th1_i", "th1_ii", "th1_iii", "th2_i", "th2_ii", "lem1", "th13_chain", "cor8",
    "th12", "th14", "th15", "prop3", "cor_diadem_corona",
)


def record(key, ok, note=""):
    ACCEPTANCE[key] = (bool(ok), note)
    return ok


def prop3_holds(g, o):
    ker = o.ker
    dker = ker.bit_count() - neighborhood(g, ker).bit_count()
    return all(2 * o.alpha_prime == dker + closed_neighborhood(g, s).bit_count() for s in o.max_crit_indep)


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_1_fig1_g1():
    def run():
        g = fixtures.fig1_g1()
        o = ExactOracle(g)
        return g, o, {
            "ker": g.names(o.ker),
            "core": g.names(o.core),
            "nucleus": g.names(o.nucleus),
            "mci": sorted(g.names(s) for s in o.max_crit_indep),
            "diadem_strict": o.diadem & ~o.corona == 0 and o.diadem != o.corona,
            "is_ke": is_ke(g, "both"),
        }

    (g, o, got), secs = timed(run)
    ok = (
        got["ker"] == ["a", "b", "c"]
        and got["core"] == ["a", "b", "c", "d"]
        and got["nucleus"] == ["a", "b", "c", "d", "g"]
        and got["mci"] == [["a", "b", "c", "d", "e", "g"], ["a", "b", "c", "d", "f", "g"]]
        and got["diadem_strict"]
        and got["is_ke"] is False
        and secs < 1
    )
    record("1 fig1_g1", ok, f"{got} in {secs:.3f}s")
    assert ok


def test_criterion_2_fig1_g2():
    def run():
        g = fixtures.fig1_g2()
        o = ExactOracle(g)
        core = o.core
        return g, o, core

    (g, o, core), secs = timed(run)
    d_core = core.bit_count() - neighborhood(g, core).bit_count()
    ok = (
        g.names(core) == ["w", "x", "y", "z"]
        and d_core == 1 < o.d
        and not o.is_critical(core)
        and is_ke(g, "both") is False
        and secs < 1
    )
    record("2 fig1_g2", ok, f"core={g.names(core)} d(core)={d_core} d(G)={o.d} in {secs:.3f}s")
    assert ok


def test_criterion_3_fig2():
    def run():
        g = fixtures.fig2_g()
        o = ExactOracle(g)
        s = o.max_crit_indep.sets[0]
        x = closed_neighborhood(g, s)
        from kecrit.graph import induced_subgraph, lift

        sub, old_to_new = induced_subgraph(g, x)
        omega_x = {lift(t, old_to_new) for t in ExactOracle(sub).omega}
        return g, o, omega_x

    (g, o, omega_x), secs = timed(run)
    t = g.vset("abcdek")
    d_t = t.bit_count() - neighborhood(g, t).bit_count()
    ok = d_t == 1 and o.d == 2 and t in omega_x and t not in o.max_crit_indep and secs < 1
    record("3 fig2_g", ok, f"d(T)={d_t} d(G)={o.d} T in Omega(G[X])={t in omega_x} in {secs:.3f}s")
    assert ok


def test_criterion_4_fig3():
    def run():
        g = fixtures.fig3_g()
        return g, ExactOracle(g)

    (g, o), secs = timed(run)
    gam = [g.vset("abce"), g.vset("abcf")]
    inter, union = gam[0] & gam[1], gam[0] | gam[1]
    ok = (
        g.names(o.core) == ["a", "b"]
        and g.names(o.corona) == ["a", "b", "c", "d", "e", "f"]
        and o.core.bit_count() + o.corona.bit_count() == 2 * o.alpha == 8
        and is_ke(g, "both") is False
        and all(s in o.omega for s in gam)
        and not o.is_critical(inter)
        and not o.is_critical(union)
        and secs < 1
    )
    record("4 fig3_g", ok, f"core={g.names(o.core)} corona={g.names(o.corona)} alpha={o.alpha} in {secs:.3f}s")
    assert ok


@pytest.fixture(scope="module")
def exhaustive():
    counts = {name: Counter() for name in SUITE_CHECKS}
    violations = []
    t = time.perf_counter()
    graphs = 0
    for n in range(7):
        for g in all_graphs(n):
            graphs += 1
            r = theorem_suite(g, SEED, poly_checks=False)
            for c in r.checks:
                if c.name in counts:
                    counts[c.name][c.status] += 1
            violations.extend((c.name, c.detail.get("graph6")) for c in r.violations)
    return graphs, counts, violations, time.perf_counter() - t


@pytest.mark.slow
def test_criterion_5_exhaustive_suite(exhaustive):
    graphs, counts, violations, secs = exhaustive
    never_tested = [k for k, c in counts.items() if c[HOLDS] == 0]
    ok = graphs == 1 + 1 + 2 + 8 + 64 + 1024 + 32768 and not violations and not never_tested and secs < 600
    note = f"{graphs} graphs, {len(violations)} violations, {secs:.0f}s"
    if never_tested:
        note += f", never exercised: {never_tested}"
    record("5 exhaustive n<=6", ok, note)
    assert ok, violations[:5]


@pytest.fixture(scope="module")
def poly_run():
    t = time.perf_counter()
    bad = Counter()
    examples = {}
    prop3_bad = 0
    ker_bad = 0
    checked = 0

    def compare(g, o):
        nonlocal prop3_bad, ker_bad, checked
        checked += 1
        mismatches = []
        if poly.critical_difference_poly(g) != o.d:
            mismatches.append("d")
        if poly.max_crit_set_poly(g) not in o.max_crit_indep:
            mismatches.append("alpha_prime")
        if poly.ker_poly(g) != o.ker:
            mismatches.append("ker")
            ker_bad += 1
        if not prop3_holds(g, o):
            prop3_bad += 1
        for m in mismatches:
            bad[m] += 1
            examples.setdefault(m, g)

    for n in range(7):
        for g in all_graphs(n):
            o = ExactOracle(g)
            compare(g, o)
            if max_matching_brute_force(g) != len(max_matching_general(g)):
                bad["mu"] += 1
    rng = random.Random(SEED)
    for i in range(500):
        g = gnp(12, (0.2, 0.5)[i % 2], seed=rng.getrandbits(32))
        compare(g, ExactOracle(g))
    mu_extra = 0
    for n in range(7, 11):
        for i in range(100):
            g = gnp(n, (0.2, 0.5)[i % 2], seed=rng.getrandbits(32))
            mu_extra += 1
            if max_matching_brute_force(g) != len(max_matching_general(g)):
                bad["mu"] += 1
    return {
        "checked": checked,
        "mu_extra": mu_extra,
        "bad": bad,
        "examples": examples,
        "prop3_bad": prop3_bad,
        "ker_bad": ker_bad,
        "secs": time.perf_counter() - t,
    }


@pytest.mark.slow
def test_criterion_6_poly_equivalence(poly_run):
    bad = {k: v for k, v in poly_run["bad"].items() if k != "ker"}
    ok = not bad and poly_run["secs"] < 300
    record(
        "6 oracle/poly equivalence",
        ok,
        f"{poly_run['checked']} graphs (+{poly_run['mu_extra']} for mu), mismatches={bad}, {poly_run['secs']:.0f}s",
    )
    assert ok


@pytest.mark.slow
def test_criterion_7_prop3(poly_run, exhaustive):
    _, counts, _, _ = exhaustive
    suite_bad = counts["prop3"][VIOLATION]
    ok = poly_run["prop3_bad"] == 0 and suite_bad == 0 and counts["prop3"][PREMISE_NOT_MET] == 0
    record("7 prop3 identity", ok, f"poly corpus failures={poly_run['prop3_bad']}, suite failures={suite_bad}")
    assert ok


@pytest.mark.slow
def test_criterion_8_ker_poly_gate(poly_run):
    gate = "passed" if poly_run["ker_bad"] == 0 else "experimental-failed"
    record("8 ker_poly gate", gate == "passed", f"ker_poly gate: {gate} ({poly_run['ker_bad']} mismatches)")
    assert gate == "passed"


def test_criterion_9_determinism():
    cmd = [sys.executable, "-m", "kecrit", "verify", "--all-n", "5", "--json"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    ok = a.returncode == b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    record("9 determinism", ok, f"{len(a.stdout)} bytes, identical={a.stdout == b.stdout}")
    assert ok
