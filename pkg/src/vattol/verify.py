"""Mechanical checking of the resilience inequalities on supplied graphs.

Each check compares two exactly-computed (or, for spectral quantities,
tightly-toleranced) sides of one inequality and emits a structured
:class:`TheoremReport`.  Inequalities are judged in non-strict form for
``holds``; strictness is recorded separately, because some of the bounds
are achieved with equality on boundary graphs (the single edge K2 most
prominently) and an equality must be auditable rather than a failure.

Check groups and the inequalities they cover, for a connected d-regular
graph with attack tolerance tau, conductance phi and spectral gap
``gap = 1 - lambda2``:

- ``cheeger``: phi^2 / 2 <= gap and gap <= 2 phi (the classical Cheeger
  sandwich for the normalized adjacency spectrum)
- ``vat_upper``: tau <= d phi whenever phi < 1/d^2, and the
  unconditional weakening tau <= d^2 phi
- ``vat_lower``: phi <= d tau (so tau and phi agree up to the factor d)
- ``spectral_vat``: tau^2 / (2 d^4) <= gap <= 2 d tau, and the sharper
  conditional lower bound tau^2 / (2 d^2) <= gap when phi < 1/d^2

The conditional hypothesis is strict on purpose.  On the boundary
phi == 1/d^2 the sharp bound tau <= d phi can genuinely fail: there is
an 18-vertex cubic graph with phi exactly 1/9 and tau = 3/8 > 1/3, found
by exhaustive search and confirmed against an independent naive
enumeration.  Strictly inside the region no violation is known (the full
test corpus of ~46k graphs has none), so the strict form is what gets
checked; boundary graphs are reported as skipped for the conditional
checks and remain covered by the unconditional bound.
- ``connected_minimizer``: some conductance minimizer induces a
  connected subgraph
- ``fragment_bounds``: with S a minimizing attack set and C_1..C_q+1 the
  surviving components, d|S| bounds the total component boundary, and
  the attack ratio denominator is bounded by the survivor count
- ``value_ranges``: 0 < tau <= 1 (with a nonempty surviving component at
  the witness) and 0 < phi <= 1, on any connected graph

The pure fraction facts used by the bound proofs (the mediant sandwich
and the ratio-series lower bound) live here too, as tested utilities.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, partial
from typing import Iterable, Iterator, Sequence

from .errors import BadParameter, NotRegular, TooLarge, VattolError
from .graph import Graph, cut_size, full_mask, regularity, vertices_from_mask
from .metrics import (
    MetricResult,
    conductance_exact,
    conductance_minimizers,
    enumeration_limit,
    vat_exact,
    vat_witness_components,
)
from .spectral import SpectralResult, lambda2

SPECTRAL_TOL = 1e-9

#: Largest n for which every conductance minimizer is enumerated.
MINIMIZER_LIMIT = 16

CHECK_GROUPS = (
    "cheeger",
    "vat_upper",
    "vat_lower",
    "spectral_vat",
    "connected_minimizer",
    "fragment_bounds",
    "value_ranges",
)

GROUP_THEOREMS: dict[str, tuple[str, ...]] = {
    "cheeger": ("cheeger_lower", "cheeger_upper"),
    "vat_upper": ("vat_upper_conditional", "vat_upper_unconditional"),
    "vat_lower": ("vat_lower",),
    "spectral_vat": (
        "spectral_vat_lower",
        "spectral_vat_upper",
        "spectral_vat_lower_conditional",
    ),
    "connected_minimizer": ("connected_minimizer",),
    "fragment_bounds": ("fragment_cut_bound", "fragment_size_bound"),
    "value_ranges": ("vat_range", "conductance_range"),
}

ALL_THEOREMS = tuple(t for grp in CHECK_GROUPS for t in GROUP_THEOREMS[grp])


@dataclass
class TheoremReport:
    """Outcome of one inequality check on one graph.

    ``lhs <= rhs`` is the checked direction.  Fraction sides compare
    exactly; when either side is a float (a spectral quantity) the
    comparison uses an absolute tolerance.  ``skipped`` reports record a
    precondition that was not met instead of a verdict.
    """

    theorem: str
    graph_id: str
    n: int
    m: int
    d: int | None
    lhs: Fraction | float | None
    rhs: Fraction | float | None
    holds: bool | None
    strict_holds: bool | None
    slack: float | None
    witnesses: dict[str, list[int]] | None = None
    skipped: bool = False
    skip_reason: str = ""

    @property
    def equality(self) -> bool:
        """True when the inequality held but only just (lhs == rhs)."""
        return self.holds is True and self.strict_holds is False


def _compare(lhs, rhs, spectral: bool, tol: float) -> tuple[bool, bool]:
    if spectral:
        l, r = float(lhs), float(rhs)
        return l <= r + tol, l < r - tol
    return lhs <= rhs, lhs < rhs


def _report(
    theorem: str,
    ctx: "MetricCache",
    lhs,
    rhs,
    spectral: bool,
    witnesses: dict[str, list[int]] | None = None,
) -> TheoremReport:
    holds, strict = _compare(lhs, rhs, spectral, ctx.tol)
    return TheoremReport(
        theorem=theorem,
        graph_id=ctx.graph_id,
        n=ctx.g.n,
        m=ctx.g.m,
        d=ctx.d,
        lhs=lhs,
        rhs=rhs,
        holds=holds,
        strict_holds=strict,
        slack=float(rhs) - float(lhs),
        witnesses=witnesses,
    )


class MetricCache:
    """Lazily computed per-graph quantities shared across checks.

    Computing tau, phi and lambda2 once per graph instead of once per
    check keeps large suite runs within their time budget.
    """

    def __init__(
        self,
        g: Graph,
        graph_id: str = "graph",
        limit: int | None = None,
        tol: float = SPECTRAL_TOL,
    ) -> None:
        self.g = g
        self.graph_id = graph_id
        self.limit = limit
        self.tol = tol

    @cached_property
    def d(self) -> int | None:
        return regularity(self.g)

    @cached_property
    def tau(self) -> MetricResult:
        return vat_exact(self.g, self.limit)

    @cached_property
    def phi(self) -> MetricResult:
        return conductance_exact(self.g, self.limit)

    @cached_property
    def spectral(self) -> SpectralResult:
        return lambda2(self.g)

    def require_regular(self) -> int:
        if self.d is None:
            raise NotRegular(f"{self.graph_id}: the check needs a regular graph")
        return self.d

    def hypothesis_small_conductance(self) -> bool:
        """Exact test of the conditional-bound hypothesis phi < 1/d^2.

        Strict: boundary graphs with phi exactly 1/d^2 can violate the
        sharp conditional bound (see the module docstring).
        """
        d = self.require_regular()
        return self.phi.value < Fraction(1, d * d)


def _cache(g, graph_id, cache, limit, tol) -> MetricCache:
    if cache is not None:
        return cache
    return MetricCache(g, graph_id=graph_id, limit=limit, tol=tol)


def check_cheeger(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Cheeger sandwich: phi^2/2 <= gap <= 2 phi on a regular graph."""
    ctx = _cache(g, graph_id, cache, limit, tol)
    ctx.require_regular()
    phi = ctx.phi.value
    gap = ctx.spectral.gap
    wit = {"S": ctx.phi.witness_vertices}
    return [
        _report("cheeger_lower", ctx, phi * phi / 2, gap, True, wit),
        _report("cheeger_upper", ctx, gap, 2 * phi, True, wit),
    ]


def check_vat_upper(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Attack tolerance bounded above by conductance on a regular graph.

    The sharp form tau <= d phi applies when phi < 1/d^2 (otherwise the
    conditional report is emitted as skipped); the weaker tau <= d^2 phi
    is checked unconditionally.
    """
    ctx = _cache(g, graph_id, cache, limit, tol)
    d = ctx.require_regular()
    tau = ctx.tau.value
    phi = ctx.phi.value
    wit = {"S": ctx.tau.witness_vertices}
    reports = []
    if ctx.hypothesis_small_conductance():
        reports.append(_report("vat_upper_conditional", ctx, tau, d * phi, False, wit))
    else:
        reports.append(
            TheoremReport(
                theorem="vat_upper_conditional",
                graph_id=ctx.graph_id,
                n=g.n,
                m=g.m,
                d=d,
                lhs=None,
                rhs=None,
                holds=None,
                strict_holds=None,
                slack=None,
                skipped=True,
                skip_reason="hypothesis not met: conductance not strictly below 1/d^2",
            )
        )
    reports.append(
        _report("vat_upper_unconditional", ctx, tau, d * d * phi, False, wit)
    )
    return reports


def check_vat_lower(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Conductance bounded by d times the attack tolerance; exact."""
    ctx = _cache(g, graph_id, cache, limit, tol)
    d = ctx.require_regular()
    return [
        _report(
            "vat_lower",
            ctx,
            ctx.phi.value,
            d * ctx.tau.value,
            False,
            {"S": ctx.tau.witness_vertices},
        )
    ]


def check_spectral_vat(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Spectral gap sandwiched by attack tolerance on a regular graph.

    General form: tau^2/(2 d^4) <= gap <= 2 d tau.  When phi < 1/d^2
    the sharper lower bound tau^2/(2 d^2) <= gap is checked as well,
    otherwise that report is emitted as skipped.
    """
    ctx = _cache(g, graph_id, cache, limit, tol)
    d = ctx.require_regular()
    tau = ctx.tau.value
    gap = ctx.spectral.gap
    wit = {"S": ctx.tau.witness_vertices}
    reports = [
        _report(
            "spectral_vat_lower", ctx, tau * tau / (2 * d**4), gap, True, wit
        ),
        _report("spectral_vat_upper", ctx, gap, 2 * d * tau, True, wit),
    ]
    if ctx.hypothesis_small_conductance():
        reports.append(
            _report(
                "spectral_vat_lower_conditional",
                ctx,
                tau * tau / (2 * d**2),
                gap,
                True,
                wit,
            )
        )
    else:
        reports.append(
            TheoremReport(
                theorem="spectral_vat_lower_conditional",
                graph_id=ctx.graph_id,
                n=g.n,
                m=g.m,
                d=d,
                lhs=None,
                rhs=None,
                holds=None,
                strict_holds=None,
                slack=None,
                skipped=True,
                skip_reason="hypothesis not met: conductance not strictly below 1/d^2",
            )
        )
    return reports


def check_connected_minimizer(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
    minimizer_limit: int = MINIMIZER_LIMIT,
) -> list[TheoremReport]:
    """Some conductance minimizer induces a connected subgraph.

    Enumerates every minimizing set (so the graph must be small enough,
    ``n <= minimizer_limit``) and records the first connected one.
    """
    ctx = _cache(g, graph_id, cache, limit, tol)
    ctx.require_regular()
    if g.n > minimizer_limit:
        raise TooLarge(
            f"{graph_id}: all-minimizers enumeration capped at n={minimizer_limit}"
        )
    minimizers = conductance_minimizers(g, ctx.limit)
    connected_witness = None
    adj_masks = g.adj_masks
    for s in minimizers:
        # connectivity of the induced subgraph, by mask flood fill
        bit = s & -s
        comp = bit
        frontier = bit
        while frontier:
            nbrs = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nbrs |= adj_masks[b.bit_length() - 1]
            frontier = nbrs & s & ~comp
            comp |= frontier
        if comp == s:
            connected_witness = s
            break
    holds = connected_witness is not None
    return [
        TheoremReport(
            theorem="connected_minimizer",
            graph_id=ctx.graph_id,
            n=g.n,
            m=g.m,
            d=ctx.d,
            lhs=None,
            rhs=None,
            holds=holds,
            strict_holds=None,
            slack=None,
            witnesses=(
                {"S": vertices_from_mask(connected_witness)} if holds else None
            ),
        )
    ]


def check_fragment_bounds(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Structural facts about a minimizing attack set, exact.

    With S the attack witness, T the largest surviving component and
    C_1..C_q the other components: every edge leaving a surviving
    component must end in S, so d|S| bounds the summed component
    boundaries; and the attack denominator |V-S-T| + 1 is bounded by the
    survivor count, the components being a partition of V-S.
    """
    ctx = _cache(g, graph_id, cache, limit, tol)
    d = ctx.require_regular()
    s_mask = ctx.tau.witness
    t_mask, others = vat_witness_components(g, ctx.tau)
    pieces = [t_mask] + others
    cut_total = sum(cut_size(g, c) for c in pieces)
    survivor_count = sum(c.bit_count() for c in pieces)
    s_size = s_mask.bit_count()
    outside = g.n - s_size - t_mask.bit_count()
    wit = {"S": vertices_from_mask(s_mask), "T": vertices_from_mask(t_mask)}
    return [
        _report(
            "fragment_cut_bound",
            ctx,
            Fraction(cut_total),
            Fraction(d * s_size),
            False,
            wit,
        ),
        _report(
            "fragment_size_bound",
            ctx,
            Fraction(outside + 1),
            Fraction(survivor_count),
            False,
            wit,
        ),
    ]


def check_value_ranges(
    g: Graph,
    graph_id: str = "graph",
    cache: MetricCache | None = None,
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
) -> list[TheoremReport]:
    """Both metrics land in (0, 1] on any connected non-trivial graph.

    The attack-tolerance report additionally requires that the witness
    leaves a nonempty largest component (removing everything can never
    be optimal).
    """
    ctx = _cache(g, graph_id, cache, limit, tol)
    tau = ctx.tau.value
    phi = ctx.phi.value
    survivor = full_mask(g.n) & ~ctx.tau.witness
    tau_report = _report(
        "vat_range", ctx, tau, Fraction(1), False, {"S": ctx.tau.witness_vertices}
    )
    if not tau > 0 or survivor == 0:
        tau_report.holds = False
    phi_report = _report(
        "conductance_range",
        ctx,
        phi,
        Fraction(1),
        False,
        {"S": ctx.phi.witness_vertices},
    )
    if not phi > 0:
        phi_report.holds = False
    return [tau_report, phi_report]


_CHECK_FUNCTIONS = {
    "cheeger": check_cheeger,
    "vat_upper": check_vat_upper,
    "vat_lower": check_vat_lower,
    "spectral_vat": check_spectral_vat,
    "connected_minimizer": check_connected_minimizer,
    "fragment_bounds": check_fragment_bounds,
    "value_ranges": check_value_ranges,
}


def _skip_group(
    group: str, graph_id: str, g: Graph, d: int | None, reason: str
) -> list[TheoremReport]:
    return [
        TheoremReport(
            theorem=theorem,
            graph_id=graph_id,
            n=g.n,
            m=g.m,
            d=d,
            lhs=None,
            rhs=None,
            holds=None,
            strict_holds=None,
            slack=None,
            skipped=True,
            skip_reason=reason,
        )
        for theorem in GROUP_THEOREMS[group]
    ]


def normalize_checks(checks: str | Sequence[str]) -> tuple[str, ...]:
    """Resolve a check selection ('all', a name, or a list) to group names."""
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    if list(checks) == ["all"]:
        return CHECK_GROUPS
    for c in checks:
        if c not in CHECK_GROUPS:
            raise BadParameter(
                f"unknown check {c!r}; known: all, {', '.join(CHECK_GROUPS)}"
            )
    return tuple(checks)


def evaluate_graph(
    item: tuple[str, Graph],
    checks: str | Sequence[str] = "all",
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
    minimizer_limit: int = MINIMIZER_LIMIT,
) -> list[TheoremReport]:
    """Run the selected checks on one graph, mapping precondition
    violations to skipped reports instead of raising."""
    graph_id, g = item
    groups = normalize_checks(checks)
    cache = MetricCache(g, graph_id=graph_id, limit=limit, tol=tol)
    reports: list[TheoremReport] = []
    for group in groups:
        fn = _CHECK_FUNCTIONS[group]
        kwargs = {}
        if group == "connected_minimizer":
            kwargs["minimizer_limit"] = minimizer_limit
        try:
            reports.extend(
                fn(g, graph_id=graph_id, cache=cache, limit=limit, tol=tol, **kwargs)
            )
        except VattolError as exc:
            reports.extend(
                _skip_group(group, graph_id, g, regularity(g), f"{type(exc).__name__}: {exc}")
            )
    return reports


def iter_suite(
    graphs: Iterable[tuple[str, Graph]],
    checks: str | Sequence[str] = "all",
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
    minimizer_limit: int = MINIMIZER_LIMIT,
    jobs: int = 1,
) -> Iterator[TheoremReport]:
    """Stream reports for every graph, in input order.

    With ``jobs > 1`` graphs are checked by a process pool; the order of
    the emitted reports is still exactly the input order, so the output
    is byte-for-byte independent of the worker count.
    """
    limit = enumeration_limit(limit)
    groups = normalize_checks(checks)
    worker = partial(
        evaluate_graph,
        checks=groups,
        limit=limit,
        tol=tol,
        minimizer_limit=minimizer_limit,
    )
    if jobs <= 1:
        for item in graphs:
            yield from worker(item)
        return
    with multiprocessing.Pool(processes=jobs) as pool:
        for reports in pool.imap(worker, graphs, chunksize=32):
            yield from reports


@dataclass
class SuiteResult:
    """Materialized suite outcome with summary counters."""

    reports: list[TheoremReport] = field(default_factory=list)

    @property
    def holds_count(self) -> int:
        return sum(1 for r in self.reports if r.holds is True)

    @property
    def strict_count(self) -> int:
        return sum(1 for r in self.reports if r.strict_holds is True)

    @property
    def skipped_count(self) -> int:
        return sum(1 for r in self.reports if r.skipped)

    @property
    def failures(self) -> list[TheoremReport]:
        return [r for r in self.reports if not r.skipped and r.holds is not True]

    @property
    def equalities(self) -> list[TheoremReport]:
        """Every report where the bound held with exact equality."""
        return [r for r in self.reports if r.equality]

    @property
    def all_hold(self) -> bool:
        return not self.failures


def run_suite(
    graphs: Iterable[tuple[str, Graph]],
    checks: str | Sequence[str] = "all",
    limit: int | None = None,
    tol: float = SPECTRAL_TOL,
    minimizer_limit: int = MINIMIZER_LIMIT,
    jobs: int = 1,
) -> SuiteResult:
    """Run the checks over a corpus and collect every report."""
    return SuiteResult(
        reports=list(
            iter_suite(
                graphs,
                checks=checks,
                limit=limit,
                tol=tol,
                minimizer_limit=minimizer_limit,
                jobs=jobs,
            )
        )
    )


# ---------------------------------------------------------------------------
# Fraction facts used by the bound proofs, kept as tested utilities.


def _positive_fraction(x, name: str) -> Fraction:
    f = Fraction(x)
    if f <= 0:
        raise BadParameter(f"{name} must be positive, got {x}")
    return f


def mediant_between(a, x, b, y) -> Fraction:
    """The mediant (a+b)/(x+y) of the fractions a/x and b/y.

    For positive inputs with a/x < b/y the mediant lies strictly between
    the two; that sandwich is what the property tests pin down.
    """
    a, x, b, y = (
        _positive_fraction(a, "a"),
        _positive_fraction(x, "x"),
        _positive_fraction(b, "b"),
        _positive_fraction(y, "y"),
    )
    return (a + b) / (x + y)


def series_lower_bound(pairs: Sequence[tuple], c) -> bool:
    """Exact test of c <= (sum of numerators) / (sum of denominators).

    Whenever c is at most every individual ratio a_i/b_i, this is
    guaranteed true (summing preserves a common lower bound); the
    property tests exercise exactly that implication.
    """
    if not pairs:
        raise BadParameter("need at least one (numerator, denominator) pair")
    nums = []
    dens = []
    for a, b in pairs:
        nums.append(_positive_fraction(a, "numerator"))
        dens.append(_positive_fraction(b, "denominator"))
    return Fraction(c) <= sum(nums) / sum(dens)
