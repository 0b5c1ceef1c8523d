"""Per-graph verification of every stated result, and a corpus driver.

Each check ends in one of three statuses.  ``holds`` means the statement was
evaluated (at least once, for quantified conditionals) and never failed;
``premise-not-met`` means a conditional statement never had its hypothesis
satisfied on this graph; ``VIOLATION`` means our code disagrees with a proven
result, and the record carries enough data to reproduce it.

Families Γ ⊆ Ω(G) and Γ' ⊆ MaxCritIndep(G) are enumerated exhaustively when
the base family has at most ``MAX_EXHAUSTIVE`` members and sampled
(``SAMPLE_SIZE`` non-empty subfamilies, fixed seed) otherwise.  When Γ' is
sampled, each Γ is paired with the whole set of MaxCritIndep members it
covers, each single such member, and ``PAIR_SAMPLES`` random selections.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any

from kecrit import poly
from kecrit.formats import to_edge_list, to_graph6
from kecrit.graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    induced_subgraph,
    is_subset,
    lift,
    neighbors_of,
)
from kecrit.matching import max_matching_brute_force, max_matching_general
from kecrit.oracle import ExactOracle

HOLDS = "holds"
PREMISE_NOT_MET = "premise-not-met"
VIOLATION = "VIOLATION"

MAX_EXHAUSTIVE = 12
SAMPLE_SIZE = 4096
DEFAULT_SEED = 20160117
BRUTE_MU_MAX_N = 10
# Γ' drawn per sampled Γ in the th14/th15 pairing, on top of the full and singleton ones.
PAIR_SAMPLES = 8

CHECKS = (
    "zhang",
    "th3_enlargement",
    "prop2_local_max",
    "th4_i_ker_in_core",
    "th4_ii_lattice",
    "ker_in_nucleus",
    "diadem_in_corona",
    "prop1",
    "th5_ke_equivalence",
    "th1_i",
    "th1_ii",
    "th1_iii",
    "th2_i",
    "th2_ii",
    "lem1",
    "lem1_corollary",
    "th13_chain",
    "cor8",
    "ker_diadem_bound",
    "th12",
    "cor7",
    "th15",
    "th14",
    "cor_diadem_corona",
    "prop3",
    "poly_d",
    "poly_alpha_prime",
    "poly_ker",
    "poly_mu",
    "poly_ke",
)


@dataclass
class CheckResult:
    name: str
    status: str
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass
class TheoremReport:
    graph6: str
    checks: list[CheckResult]

    @property
    def violations(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == VIOLATION]

    def status(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "checks": {c.name: c.status for c in self.checks},
            "violations": [{"check": c.name, **c.detail} for c in self.violations],
        }


class _Conditional:
    """Accumulates a quantified conditional: premise hits and failures."""

    def __init__(self):
        self.met = 0
        self.failure: dict[str, Any] | None = None

    def record(self, premise: bool, conclusion: bool, **witness) -> None:
        if premise:
            self.met += 1
            if not conclusion and self.failure is None:
                self.failure = witness

    def result(self, name: str) -> CheckResult:
        if self.failure is not None:
            return CheckResult(name, VIOLATION, self.failure)
        if self.met == 0:
            return CheckResult(name, PREMISE_NOT_MET)
        return CheckResult(name, HOLDS, {"premise_met": self.met})


def _plain(name: str, ok: bool, **witness) -> CheckResult:
    return CheckResult(name, HOLDS if ok else VIOLATION, {} if ok else witness)


def _implication(name: str, premise: bool, conclusion: bool, **witness) -> CheckResult:
    c = _Conditional()
    c.record(premise, conclusion, **witness)
    return c.result(name)


@dataclass
class Subfamilies:
    """Non-empty subfamilies of ``sets`` as index masks with ∩ and ∪."""

    sets: tuple[VertexSet, ...]
    masks: list[int]
    inter: dict[int, VertexSet]
    union: dict[int, VertexSet]
    exhaustive: bool

    @classmethod
    def of(cls, sets: tuple[VertexSet, ...], rng: random.Random) -> Subfamilies:
        k = len(sets)
        inter: dict[int, VertexSet] = {}
        union: dict[int, VertexSet] = {}
        if k <= MAX_EXHAUSTIVE:
            masks = list(range(1, 1 << k))
            for mask in masks:
                low = mask & -mask
                i = low.bit_length() - 1
                rest = mask ^ low
                if rest:
                    inter[mask] = inter[rest] & sets[i]
                    union[mask] = union[rest] | sets[i]
                else:
                    inter[mask] = union[mask] = sets[i]
            return cls(sets, masks, inter, union, True)
        chosen = set()
        while len(chosen) < SAMPLE_SIZE:
            mask = rng.getrandbits(k)
            if mask:
                chosen.add(mask)
        masks = sorted(chosen) + [(1 << k) - 1]
        fam = cls(sets, sorted(set(masks)), inter, union, False)
        for mask in fam.masks:
            fam.stats(mask)
        return fam

    def stats(self, mask: int) -> tuple[VertexSet, VertexSet]:
        """(∩, ∪) of the subfamily ``mask``, computed on first use."""
        if mask not in self.inter:
            idx = [i for i in range(len(self.sets)) if mask >> i & 1]
            a = b = self.sets[idx[0]]
            for i in idx[1:]:
                a &= self.sets[i]
                b |= self.sets[i]
            self.inter[mask], self.union[mask] = a, b
        return self.inter[mask], self.union[mask]

    def value(self, mask: int) -> int:
        i, u = self.stats(mask)
        return i.bit_count() + u.bit_count()


def _sampled_submasks(mask: int, rng: random.Random, extra: int) -> Iterator[int]:
    """``mask``, its single bits, then ``extra`` random non-empty submasks."""
    yield mask
    m = mask
    while m:
        low = m & -m
        yield low
        m ^= low
    for _ in range(extra):
        sub = rng.getrandbits(mask.bit_length()) & mask
        if sub:
            yield sub


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _max_value_under(candidates: list[VertexSet], lo: VertexSet, hi: VertexSet) -> int | None:
    """max |∩Γ'| + |∪Γ'| over non-empty Γ' of sets A with lo ⊆ A ⊆ hi.

    For a fixed intersection p, adding every candidate containing p keeps the
    intersection ⊇ p and can only grow the union, so the optimum is attained
    by some ``F_p = {A : p ⊆ A}``; scanning every p between lo and hi is exact.
    """
    pool = [a for a in candidates if is_subset(lo, a) and is_subset(a, hi)]
    if not pool:
        return None
    best = None
    free = hi & ~lo
    for extra in list(_submasks(free)) + [0]:
        p = lo | extra
        fam = [a for a in pool if is_subset(p, a)]
        if not fam:
            continue
        i = fam[0]
        u = fam[0]
        for a in fam[1:]:
            i &= a
            u |= a
        v = i.bit_count() + u.bit_count()
        if best is None or v > best:
            best = v
    return best


def theorem_suite(g: Graph, seed: int = DEFAULT_SEED, poly_checks: bool = True) -> TheoremReport:
    """Evaluate every check in :data:`CHECKS` on ``g``."""
    o = ExactOracle(g)
    rng = random.Random(seed)
    adj = g.adj
    n = g.n
    names = g.names

    def nb(x: VertexSet) -> VertexSet:
        return neighbors_of(adj, x)

    def crit(x: VertexSet) -> bool:
        return o.is_critical(x)

    alpha = o.alpha
    mu = len(max_matching_general(g))
    ke = alpha + mu == n
    d = o.d
    omega = o.omega.sets
    crit_sets = o.critical_independent_sets.sets
    crit_lookup = set(crit_sets)
    mci = o.max_crit_indep.sets
    ap = o.alpha_prime
    ker, core, corona = o.ker, o.core, o.corona
    nucleus, diadem = o.nucleus, o.diadem
    out: list[CheckResult] = []

    # Zhang: both scans agree.
    out.append(_plain("zhang", o.critical_difference == d, d=o.critical_difference, id=d))

    missing = [a for a in crit_sets if not any(is_subset(a, s) for s in omega)]
    out.append(_plain("th3_enlargement", not missing, set=names(missing[0]) if missing else None))

    bad = [a for a in crit_sets if not o.is_local_max_ind(a)]
    out.append(_plain("prop2_local_max", not bad, set=names(bad[0]) if bad else None))

    out.append(_plain("th4_i_ker_in_core", is_subset(ker, core), ker=names(ker), core=names(core)))

    lattice_fail = None
    for i, a in enumerate(crit_sets):
        for b in crit_sets[i + 1:]:
            u, x = a | b, a & b
            ok = crit(u) and x in crit_lookup and (u in crit_lookup or nb(u) & u != 0)
            if not ok:
                lattice_fail = {"A": names(a), "B": names(b)}
                break
        if lattice_fail:
            break
    out.append(_plain("th4_ii_lattice", lattice_fail is None, **(lattice_fail or {})))

    out.append(_plain("ker_in_nucleus", is_subset(ker, nucleus), ker=names(ker), nucleus=names(nucleus)))
    out.append(_plain("diadem_in_corona", is_subset(diadem, corona), diadem=names(diadem), corona=names(corona)))

    gam = Subfamilies.of(omega, rng)
    gamp = Subfamilies.of(mci, rng)

    prop1 = _Conditional()
    th1_ii_fail = None
    for mask in gam.masks:
        i, u = gam.inter[mask], gam.union[mask]
        prop1.record(crit(u), crit(i), union=names(u), intersection=names(i))
        if th1_ii_fail is None and 2 * alpha > gam.value(mask):
            th1_ii_fail = {"intersection": names(i), "union": names(u)}
    out.append(prop1.result("prop1"))

    eq = [crit(s) for s in omega]
    th5 = ke == any(eq) == all(eq)
    out.append(_plain("th5_ke_equivalence", th5, is_ke=ke, some=any(eq), every=all(eq)))

    th1_i = _Conditional()
    seen = set()
    ind = o.independent_sets
    for mask in gam.masks:
        key = (gam.inter[mask], gam.union[mask])
        if key in seen:
            continue
        seen.add(key)
        best = _max_value_under(ind, *key)
        th1_i.record(best is not None, best is None or best <= gam.value(mask),
                     intersection=names(key[0]), union=names(key[1]), best=best)
    out.append(th1_i.result("th1_i"))

    out.append(_plain("th1_ii", th1_ii_fail is None, **(th1_ii_fail or {})))

    th1_iii = _Conditional()
    th1_iii.record(ke, core.bit_count() + corona.bit_count() == 2 * alpha, which="core+corona")
    for mask in gam.masks:
        th1_iii.record(ke, gam.value(mask) == 2 * alpha, intersection=names(gam.inter[mask]))
    out.append(th1_iii.result("th1_iii"))

    xs = {closed_neighborhood(g, s) for s in mci}
    x = min(xs)
    out.append(_plain("th2_i", len(xs) == 1, X=[names(v) for v in sorted(xs)]))
    sub, old_to_new = induced_subgraph(g, x)
    so = ExactOracle(sub, max(n, 1))
    sub_ke = so.alpha + len(max_matching_general(sub)) == sub.n
    out.append(_plain("th2_ii", sub_ke, X=names(x)))

    omega_x = tuple(lift(s, old_to_new) for s in so.omega)
    omega_x_union = 0
    omega_x_inter = omega_x[0]
    for s in omega_x:
        omega_x_union |= s
        omega_x_inter &= s
    lem1 = is_subset(diadem, omega_x_union) and is_subset(omega_x_inter, nucleus)
    strict = sorted(set(omega_x) - set(mci))
    out.append(CheckResult(
        "lem1", HOLDS if lem1 else VIOLATION,
        {"omega_X_minus_maxcritindep": [names(s) for s in strict]} if strict or not lem1 else {},
    ))

    sub_diadem = lift(so.diadem, old_to_new)
    sub_nucleus = lift(so.nucleus, old_to_new)
    out.append(_plain(
        "lem1_corollary",
        is_subset(diadem, sub_diadem) and is_subset(sub_nucleus, nucleus),
        diadem_X=names(sub_diadem), nucleus_X=names(sub_nucleus),
    ))

    max_prime = max(gamp.value(m) for m in gamp.masks)
    min_gamma = min(gam.value(m) for m in gam.masks)
    chain = max_prime <= 2 * ap <= 2 * alpha <= min_gamma
    out.append(_plain("th13_chain", chain, chain=[max_prime, 2 * ap, 2 * alpha, min_gamma]))

    nd = nucleus.bit_count() + diadem.bit_count()
    out.append(_plain("cor8", nd <= 2 * alpha, nucleus_plus_diadem=nd, two_alpha=2 * alpha))
    kd = ker.bit_count() + diadem.bit_count()
    out.append(_plain("ker_diadem_bound", kd <= 2 * alpha, ker_plus_diadem=kd, two_alpha=2 * alpha))

    ke_coll = [gamp.value(m) == 2 * alpha for m in gamp.masks]
    out.append(_plain("th12", ke == all(ke_coll) == any(ke_coll),
                      is_ke=ke, every=all(ke_coll), some=any(ke_coll)))

    out.append(_implication("cor7", nd == 2 * alpha, ke, nucleus_plus_diadem=nd))

    # Coverage: bit j of covered[Γ] is set iff MCI member j lies inside some S ∈ Γ.
    coverers = [sum(1 << i for i, s in enumerate(omega) if is_subset(a, s)) for a in mci]
    th15 = _Conditional()
    th14 = _Conditional()
    for mask in gam.masks:
        covered = sum(1 << j for j, c in enumerate(coverers) if c & mask)
        if not covered:
            continue
        gi, gu = gam.inter[mask], gam.union[mask]
        inter_crit = crit(gi)
        if gamp.exhaustive:
            subs = _submasks(covered)
        else:
            subs = _sampled_submasks(covered, rng, PAIR_SAMPLES)
        for pm in subs:
            pi, pu = gamp.stats(pm)
            if inter_crit:
                i_ok = is_subset(gi, pi)
                ii_ok = is_subset(pu, gu) and is_subset(gi, pi)
                iii_ok = gamp.value(pm) <= gam.value(mask)
                iv_ok = pu != gu or pi == gi
                th15.record(True, i_ok and ii_ok and iii_ok and iv_ok,
                            gamma=[names(omega[i]) for i in range(len(omega)) if mask >> i & 1],
                            gamma_prime=[names(mci[j]) for j in range(len(mci)) if pm >> j & 1],
                            parts=[i_ok, ii_ok, iii_ok, iv_ok])
            else:
                th15.record(False, True)
            th14.record(pu == gu, ke, union=names(gu))
    out.append(th15.result("th15"))
    out.append(th14.result("th14"))

    out.append(_implication("cor_diadem_corona", diadem == corona, ke, diadem=names(diadem)))

    dker = ker.bit_count() - nb(ker).bit_count()
    prop3_bad = [s for s in mci if 2 * ap != dker + closed_neighborhood(g, s).bit_count()]
    out.append(_plain("prop3", not prop3_bad, S=names(prop3_bad[0]) if prop3_bad else None,
                      d_ker=dker, two_alpha_prime=2 * ap))

    if poly_checks:
        pd = poly.critical_difference_poly(g)
        out.append(_plain("poly_d", pd == d, poly=pd, oracle=d))
        try:
            s = poly.max_crit_set_poly(g)
            ok = s in mci
            detail = {"poly": names(s)}
        except poly.ConsistencyError as exc:
            ok, detail = False, {"error": str(exc)}
        out.append(_plain("poly_alpha_prime", ok, oracle=ap, **detail))
        pk = poly.ker_poly(g)
        out.append(_plain("poly_ker", pk == ker, poly=names(pk), oracle=names(ker)))
        if n <= BRUTE_MU_MAX_N:
            bm = max_matching_brute_force(g)
            out.append(_plain("poly_mu", bm == mu, blossom=mu, brute_force=bm))
        else:
            out.append(CheckResult("poly_mu", PREMISE_NOT_MET, {"reason": "n > 10"}))
        pke = poly.is_ke_poly(g)
        out.append(_plain("poly_ke", pke == ke, poly=pke, oracle=ke))

    report = TheoremReport(to_graph6(g).decode(), out)
    for c in report.violations:
        c.detail.setdefault("graph6", report.graph6)
        c.detail.setdefault("edge_list", to_edge_list(g).decode())
    return report


def _run_one(args: tuple[Graph, int, bool]) -> TheoremReport:
    g, seed, poly_checks = args
    return theorem_suite(g, seed, poly_checks)


def run_corpus(
    graphs: Iterable[Graph],
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
    poly_checks: bool = True,
) -> Iterator[TheoremReport]:
    """Reports in input order; ``jobs > 1`` fans graphs out to worker processes."""
    jobs = jobs or os.cpu_count() or 1
    tasks = ((g, seed, poly_checks) for g in graphs)
    if jobs == 1:
        yield from map(_run_one, tasks)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(_run_one, tasks, chunksize=64)


@dataclass
class Summary:
    graphs: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    violations: list[dict[str, Any]] = field(default_factory=list)

    def add(self, index: int, report: TheoremReport) -> None:
        self.graphs += 1
        for c in report.checks:
            self.counts.setdefault(c.name, Counter())[c.status] += 1
        for v in report.to_dict()["violations"]:
            self.violations.append({"index": index, **v})

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        checks = {
            name: {s: self.counts.get(name, Counter())[s] for s in (HOLDS, PREMISE_NOT_MET, VIOLATION)}
            for name in CHECKS
            if name in self.counts
        }
        gate = "n/a"
        if "poly_ker" in self.counts:
            gate = "passed" if self.counts["poly_ker"][VIOLATION] == 0 else "experimental-failed"
        return {
            "graphs": self.graphs,
            "checks": checks,
            "ker_poly_gate": gate,
            "violations": self.violations,
            "ok": self.ok,
        }
