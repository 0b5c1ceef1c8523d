"""König-Egerváry recognition, KE collections, the family preorder, the
approximate-KE classification and full per-graph analysis reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from kecrit import poly
from kecrit.errors import DomainError, SizeLimitError
from kecrit.graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    difference,
    is_independent,
    is_subset,
    neighborhood,
)
from kecrit.matching import max_matching_general
from kecrit.oracle import ExactOracle, SetFamily, oracle_max_n

ENGINES = ("oracle", "poly", "both")

# ker_poly's deletion rule is validated, not derived: it matches the oracle on
# every labelled graph with n <= 7 (scripts/gate_ker_poly.py).
KER_POLY_STATUS = "validated"


def is_ke(g: Graph, engine: str = "oracle") -> bool:
    """``α(G) + μ(G) = |V(G)|``.

    The ``poly`` engine uses ``α'(G) + μ(G) = n`` instead, which is equivalent
    because ``α' ≤ α`` and the two coincide exactly on KE graphs.
    """
    mu = len(max_matching_general(g))
    if engine == "poly":
        return poly.alpha_prime_poly(g) + mu == g.n
    if engine not in ("oracle", "both"):
        raise DomainError(f"unknown engine {engine!r}")
    oracle_ke = ExactOracle(g).alpha + mu == g.n
    if engine == "both" and oracle_ke != (poly.alpha_prime_poly(g) + mu == g.n):
        raise poly.ConsistencyError("oracle and poly KE recognition disagree")
    return oracle_ke


def _nonempty(family: SetFamily | tuple | list) -> SetFamily:
    if not isinstance(family, SetFamily):
        family = SetFamily(tuple(family))
    if not family.sets:
        raise DomainError("family must be non-empty")
    return family


def ke_collection_value(family: SetFamily) -> int:
    """``|∩Γ| + |∪Γ|``."""
    family = _nonempty(family)
    return family.intersection.bit_count() + family.union.bit_count()


def is_ke_collection(g: Graph, family: SetFamily, alpha: int | None = None) -> bool:
    family = _nonempty(family)
    for s in family:
        if not is_independent(g, s):
            raise DomainError("KE collections consist of independent sets")
    if alpha is None:
        alpha = ExactOracle(g).alpha
    return ke_collection_value(family) == 2 * alpha


def preorder_leq(smaller: SetFamily, larger: SetFamily) -> bool:
    """``Γ' ◁ Γ``: ``∪Γ' ⊆ ∪Γ`` and ``∩Γ ⊆ ∩Γ'``."""
    smaller, larger = _nonempty(smaller), _nonempty(larger)
    return is_subset(smaller.union, larger.union) and is_subset(
        larger.intersection, smaller.intersection
    )


@dataclass(frozen=True)
class KEEquivalence:
    is_ke: bool
    some_maximum_critical: bool
    every_maximum_critical: bool

    @property
    def holds(self) -> bool:
        return self.is_ke == self.some_maximum_critical == self.every_maximum_critical


def ke_equivalence_check(g: Graph, oracle: ExactOracle | None = None) -> KEEquivalence:
    o = oracle or ExactOracle(g)
    crit = [o.is_critical(s) for s in o.omega]
    return KEEquivalence(
        o.alpha + len(max_matching_general(g)) == g.n, any(crit), all(crit)
    )


@dataclass(frozen=True)
class ApproxKE:
    """The chain ``2α ≤ |ker| + |N[S]| ≤ |ker| + 2α' ≤ 3α'``.

    ``is_approx`` is ``None`` when α is out of reach of the exact oracle.
    """

    is_approx: bool | None
    two_alpha: int | None
    ker_plus_closed_nbhd: int
    ker_plus_two_alpha_prime: int
    three_alpha_prime: int

    @property
    def chain(self) -> tuple[int | None, int, int, int]:
        return (
            self.two_alpha,
            self.ker_plus_closed_nbhd,
            self.ker_plus_two_alpha_prime,
            self.three_alpha_prime,
        )


def _poly_parts(g: Graph) -> tuple[VertexSet, VertexSet, int]:
    ker = poly.ker_poly(g)
    s = poly.max_crit_set_poly(g)
    return ker, s, s.bit_count()


def approx_ke(g: Graph, alpha: int | None = None) -> ApproxKE:
    ker, s, ap = _poly_parts(g)
    if alpha is None and g.n <= oracle_max_n():
        alpha = ExactOracle(g).alpha
    k = ker.bit_count()
    ns = closed_neighborhood(g, s).bit_count()
    two_alpha = None if alpha is None else 2 * alpha
    verdict = None
    if two_alpha is not None:
        verdict = two_alpha <= k + ns <= k + 2 * ap <= 3 * ap
    return ApproxKE(verdict, two_alpha, k + ns, k + 2 * ap, 3 * ap)


@dataclass(frozen=True)
class AlphaBounds:
    lower: Fraction
    upper_if_approx: Fraction | None
    alpha_prime: int


def alpha_bounds(g: Graph, alpha: int | None = None) -> AlphaBounds:
    """Polynomial bounds on α.

    ``(|ker| + |N[S]| - |N(ker)|) / 2`` always equals α'; the upper bound
    ``(|ker| + |N[S]|) / 2`` is only valid for approximate KE graphs.
    """
    ker, s, ap = _poly_parts(g)
    k = ker.bit_count()
    ns = closed_neighborhood(g, s).bit_count()
    lower = Fraction(k + ns - neighborhood(g, ker).bit_count(), 2)
    if lower != ap:
        raise poly.ConsistencyError(f"lower bound {lower} differs from alpha' = {ap}")
    approx = approx_ke(g, alpha)
    upper = Fraction(k + ns, 2) if approx.is_approx else None
    return AlphaBounds(lower, upper, ap)


@dataclass
class AnalysisReport:
    """Every invariant of one graph, with the engine that produced each."""

    n: int
    m: int
    alpha: int | None
    alpha_prime: int
    mu: int
    d: int
    ker: VertexSet
    core: VertexSet | None
    corona: VertexSet | None
    nucleus: VertexSet | None
    diadem: VertexSet | None
    X: VertexSet
    is_ke: bool
    is_approx_ke: bool | None
    alpha_lower_bound: Fraction
    alpha_upper_bound_if_approx: Fraction | None
    engines: dict[str, str] = field(default_factory=dict)
    ker_poly_status: str = KER_POLY_STATUS

    def check_invariants(self) -> None:
        assert self.d >= 0
        assert self.alpha_prime <= (self.alpha if self.alpha is not None else self.n)
        if self.core is not None:
            assert is_subset(self.ker, self.core) and is_subset(self.core, self.corona)
            assert is_subset(self.ker, self.nucleus)
            assert is_subset(self.diadem, self.corona)
        if self.alpha is not None:
            assert self.is_ke == (self.alpha + self.mu == self.n)

    def to_dict(self, g: Graph) -> dict[str, Any]:
        def sets(x):
            if x is None:
                return None
            return g.names(x) if g.labels is not None else [int(v) for v in g.names(x)]

        def num(x):
            if x is None:
                return None
            return int(x) if x.denominator == 1 else float(x)

        return {
            "n": self.n,
            "edges": self.m,
            "alpha": self.alpha,
            "alpha_prime": self.alpha_prime,
            "mu": self.mu,
            "d": self.d,
            "ker": sets(self.ker),
            "core": sets(self.core),
            "corona": sets(self.corona),
            "nucleus": sets(self.nucleus),
            "diadem": sets(self.diadem),
            "X": sets(self.X),
            "is_ke": self.is_ke,
            "is_approx_ke": self.is_approx_ke,
            "alpha_lower_bound": num(self.alpha_lower_bound),
            "alpha_upper_bound_if_approx": num(self.alpha_upper_bound_if_approx),
            "engines": dict(sorted(self.engines.items())),
            "ker_poly_status": self.ker_poly_status,
        }


def analyze(g: Graph, engine: str = "both") -> AnalysisReport:
    """Full report.  ``both`` computes every number twice where possible and
    raises :class:`poly.ConsistencyError` on any disagreement."""
    if engine not in ENGINES:
        raise DomainError(f"unknown engine {engine!r}")
    if engine in ("oracle", "both") and g.n > oracle_max_n():
        if engine == "oracle":
            raise SizeLimitError(
                f"oracle engine is limited to n <= {oracle_max_n()} (set KECRIT_MAX_N to override)"
            )
        engine = "poly"

    mu = len(max_matching_general(g))
    engines = {"mu": "poly"}
    use_oracle = engine in ("oracle", "both")
    use_poly = engine in ("poly", "both")
    o = ExactOracle(g) if use_oracle else None

    if use_poly:
        d = poly.critical_difference_poly(g)
        s = poly.max_crit_set_poly(g)
        ap = s.bit_count()
        ker = poly.ker_poly(g)
        tag = "poly" if engine == "poly" else "both"
        engines.update(d=tag, alpha_prime=tag, ker=tag, X=tag)
        if o is not None:
            if d != o.d or ap != o.alpha_prime or ker != o.ker or s not in o.max_crit_indep:
                raise poly.ConsistencyError("poly and oracle engines disagree")
    else:
        d, ap, ker = o.d, o.alpha_prime, o.ker
        s = o.max_crit_indep.sets[0]
        engines.update(d="oracle", alpha_prime="oracle", ker="oracle", X="oracle")
    x = closed_neighborhood(g, s)

    alpha = core = corona = nucleus = diadem = None
    if o is not None:
        alpha, core, corona = o.alpha, o.core, o.corona
        nucleus, diadem = o.nucleus, o.diadem
        for key in ("alpha", "core", "corona", "nucleus", "diadem"):
            engines[key] = "oracle"
        ke = alpha + mu == g.n
        if use_poly and ke != (ap + mu == g.n):
            raise poly.ConsistencyError("KE recognition differs between engines")
    else:
        ke = ap + mu == g.n
    engines["is_ke"] = "oracle" if o is not None else "poly"

    k = ker.bit_count()
    ns = x.bit_count()
    lower = Fraction(k + ns - neighborhood(g, ker).bit_count(), 2)
    if lower != ap:
        raise poly.ConsistencyError(f"lower bound {lower} differs from alpha' = {ap}")
    approx = None
    upper = None
    if alpha is not None:
        approx = 2 * alpha <= k + ns <= k + 2 * ap <= 3 * ap
        if approx:
            upper = Fraction(k + ns, 2)
    engines["is_approx_ke"] = "oracle" if alpha is not None else "unknown"

    report = AnalysisReport(
        n=g.n, m=g.m, alpha=alpha, alpha_prime=ap, mu=mu, d=d, ker=ker,
        core=core, corona=corona, nucleus=nucleus, diadem=diadem, X=x,
        is_ke=ke, is_approx_ke=approx, alpha_lower_bound=lower,
        alpha_upper_bound_if_approx=upper, engines=engines,
    )
    report.check_invariants()
    assert difference(g, s) == d
    return report
