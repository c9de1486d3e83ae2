"""Exact vertex attack tolerance and conductance by subset enumeration.

Everything on the unweighted path is exact: values are
:class:`fractions.Fraction` and comparisons cross-multiply integers, so
downstream inequality checks can never flip on rounding.  Floating point
appears only when real-valued vertex weights or non-integer (alpha, beta)
parameters force it.

Witness determinism contract: whenever several sets achieve the minimum,
the reported witness is the one with the lowest integer encoding of its
bit mask (bit i = vertex i).  Every engine here enforces that tie-break
explicitly, so results do not depend on enumeration order or on how the
subset space is partitioned across workers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    BadParameter,
    EmptySet,
    FullSet,
    TooLarge,
    TrivialGraph,
    VolumeTooLarge,
)
from .graph import (
    Graph,
    VertexMask,
    _check_mask,
    full_mask,
    require_connected,
    vertices_from_mask,
)

#: Hard upper limit on exact enumeration (anything larger is hopeless anyway).
HARD_CAP = 64

#: Environment variable overriding the default enumeration limit.
LIMIT_ENV_VAR = "VATTOL_ENUM_LIMIT"

DEFAULT_LIMIT = 20


def enumeration_limit(limit: int | None = None) -> int:
    """Resolve the effective enumeration limit.

    Explicit argument wins, then the ``VATTOL_ENUM_LIMIT`` environment
    variable, then the default of 20.  Capped at 64 bits.
    """
    if limit is None:
        env = os.environ.get(LIMIT_ENV_VAR)
        limit = int(env) if env else DEFAULT_LIMIT
    if not 1 <= limit <= HARD_CAP:
        raise BadParameter(f"enumeration limit must be in [1, {HARD_CAP}], got {limit}")
    return limit


@dataclass(frozen=True)
class MetricResult:
    """An exact metric value together with the set achieving it."""

    value: Fraction
    witness: VertexMask
    metric: str

    @property
    def witness_vertices(self) -> list[int]:
        return vertices_from_mask(self.witness)


@dataclass(frozen=True)
class WeightedValue:
    """A generalized attack-tolerance value with its witness.

    ``value`` is a :class:`~fractions.Fraction` whenever the inputs allow
    exact arithmetic (unit weights, integer parameters) and a float
    otherwise.
    """

    value: Fraction | float
    witness: VertexMask
    metric: str
    parameters: tuple | None = None

    @property
    def witness_vertices(self) -> list[int]:
        return vertices_from_mask(self.witness)


def _require_metric_graph(g: Graph, limit: int | None = None) -> None:
    if g.n < 2:
        raise TrivialGraph("metrics need at least two vertices")
    require_connected(g)
    if limit is not None and g.n > limit:
        raise TooLarge(
            f"n={g.n} exceeds the enumeration limit {limit}; "
            f"raise it explicitly or via {LIMIT_ENV_VAR}"
        )


def _largest_component_size(adj_masks: tuple[int, ...], remaining: int) -> int:
    """Size of the largest component of the subgraph induced on ``remaining``."""
    best = 0
    left = remaining.bit_count()
    while remaining and left > best:
        bit = remaining & -remaining
        comp = bit
        frontier = bit
        while frontier:
            nbrs = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nbrs |= adj_masks[b.bit_length() - 1]
            frontier = nbrs & remaining & ~comp
            comp |= frontier
        remaining ^= comp
        size = comp.bit_count()
        left -= size
        if size > best:
            best = size
    return best


def _largest_component_mask(adj_masks: tuple[int, ...], remaining: int) -> int:
    """Mask of the largest component (ties toward the smallest vertex id)."""
    best = 0
    best_size = 0
    while remaining:
        bit = remaining & -remaining
        comp = bit
        frontier = bit
        while frontier:
            nbrs = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nbrs |= adj_masks[b.bit_length() - 1]
            frontier = nbrs & remaining & ~comp
            comp |= frontier
        remaining ^= comp
        size = comp.bit_count()
        if size > best_size:  # first max wins: components come in min-id order
            best, best_size = comp, size
    return best


def set_vat(g: Graph, s: VertexMask) -> Fraction:
    """Attack-tolerance ratio of one attack set ``s``.

    ``|s|`` divided by (vertices outside ``s`` and outside the largest
    surviving component, plus one); exact.
    """
    _require_metric_graph(g)
    _check_mask(g, s)
    if s == 0:
        raise EmptySet("the attack set must be nonempty")
    full = full_mask(g.n)
    if s == full:
        raise FullSet("the attack set must be a proper subset")
    k = s.bit_count()
    cmax = _largest_component_size(g.adj_masks, full & ~s)
    return Fraction(k, g.n - k - cmax + 1)


def set_conductance(g: Graph, s: VertexMask) -> Fraction:
    """Conductance ratio of one set: cut edges over set volume; exact.

    Requires ``volume(s) <= volume(V) / 2``.
    """
    _require_metric_graph(g)
    _check_mask(g, s)
    if s == 0:
        raise EmptySet("the set must be nonempty")
    deg = g.deg
    adj_masks = g.adj_masks
    outside = full_mask(g.n) & ~s
    vol = 0
    cut = 0
    t = s
    while t:
        bit = t & -t
        t ^= bit
        v = bit.bit_length() - 1
        vol += deg[v]
        cut += (adj_masks[v] & outside).bit_count()
    if vol > g.m:  # volume(V)/2 == m; the tie is admissible
        raise VolumeTooLarge(f"volume {vol} exceeds half the total {g.m}")
    return Fraction(cut, vol)


def _min_ratio_exact(g: Graph, alpha: int, beta: int) -> tuple[Fraction, int]:
    """Minimize (alpha*|S| + beta) / (n - |S| - cmax + 1) over proper subsets.

    Enumerates subsets by size with Gosper's hack.  Since the denominator
    is at most ``n - |S|``, every size-k set is worth at least
    ``(alpha*k + beta) / (n - k)``, a bound that strictly increases with
    k; sizes whose bound exceeds the best value so far are skipped
    entirely.  The prune is sound: skipped sets can never beat the
    incumbent, and an equal-valued set at the single boundary size is
    still enumerated so the lowest-encoding witness survives.
    """
    n = g.n
    adj_masks = g.adj_masks
    full = full_mask(n)
    best_num = best_den = 0  # best value = best_num / best_den, unset while den == 0
    best_mask = -1
    for k in range(1, n):
        bound_num = alpha * k + beta
        bound_den = n - k
        if best_den and bound_num * best_den > best_num * bound_den:
            break  # every remaining size is strictly worse
        c = (1 << k) - 1
        while c <= full:
            cmax = _largest_component_size(adj_masks, full & ~c)
            den = n - k - cmax + 1
            num = bound_num
            if (
                best_den == 0
                or num * best_den < best_num * den
                or (num * best_den == best_num * den and c < best_mask)
            ):
                best_num, best_den, best_mask = num, den, c
            # Gosper's hack: next k-subset in ascending encoding order
            u = c & -c
            v = c + u
            c = v | (((v ^ c) // u) >> 2)
    return Fraction(best_num, best_den), best_mask


def vat_exact(g: Graph, limit: int | None = None) -> MetricResult:
    """Exact vertex attack tolerance: the minimum attack ratio and its witness.

    The witness is the minimizing set with the lowest bit-mask encoding.
    The value always lies in (0, 1]: a single vertex already achieves at
    most 1, and removing everything is excluded because it can never beat
    a singleton.
    """
    _require_metric_graph(g, enumeration_limit(limit))
    value, witness = _min_ratio_exact(g, 1, 0)
    return MetricResult(value=value, witness=witness, metric="vat")


def alpha_beta_vat_exact(
    g: Graph, alpha: float, beta: float, limit: int | None = None
) -> WeightedValue:
    """Attack tolerance with the attack cost reweighted to ``alpha*|S| + beta``.

    Exact rational arithmetic when both parameters are integers; floats
    otherwise.  ``(1, 0)`` reproduces :func:`vat_exact` exactly.
    """
    if not alpha > 0:
        raise BadParameter(f"alpha must be positive, got {alpha}")
    if beta < 0:
        raise BadParameter(f"beta must be nonnegative, got {beta}")
    _require_metric_graph(g, enumeration_limit(limit))
    if float(alpha).is_integer() and float(beta).is_integer():
        value, witness = _min_ratio_exact(g, int(alpha), int(beta))
    else:
        value, witness = _min_ratio_general(
            g,
            lambda mask, k: alpha * k + beta,
            None,
        )
    return WeightedValue(
        value=value, witness=witness, metric="alpha_beta_vat",
        parameters=(alpha, beta),
    )


def _min_ratio_general(
    g: Graph,
    numerator: Callable[[int, int], float],
    value_vector: tuple[float, ...] | None,
) -> tuple[Fraction | float, int]:
    """Minimize numerator(S) / weighted-remainder(S) over proper subsets.

    Generic engine for the weighted forms: no pruning, every subset is
    visited, sums accumulate in ascending vertex order so results are
    deterministic.  When ``value_vector`` is None the denominator is the
    unweighted ``n - |S| - cmax + 1``.
    """
    n = g.n
    adj_masks = g.adj_masks
    full = full_mask(n)
    if value_vector is not None:
        value_total = sum(value_vector)
    best_num = best_den = 0.0
    best_mask = -1
    have = False
    for c in range(1, full):
        k = c.bit_count()
        num = numerator(c, k)
        if value_vector is None:
            cmax = _largest_component_size(adj_masks, full & ~c)
            den = n - k - cmax + 1
        else:
            cmask = _largest_component_mask(adj_masks, full & ~c)
            drop = 0.0
            t = c | cmask
            while t:
                bit = t & -t
                t ^= bit
                drop += value_vector[bit.bit_length() - 1]
            den = 1.0 + value_total - drop
        if (
            not have
            or num * best_den < best_num * den
            or (num * best_den == best_num * den and c < best_mask)
        ):
            best_num, best_den, best_mask = num, den, c
            have = True
    return best_num / best_den, best_mask


def weighted_vat_exact(g: Graph, limit: int | None = None) -> WeightedValue:
    """Attack tolerance of a cost-value weighted graph.

    Minimizes (sum of attack costs over S) divided by
    (1 + total value - value of S - value of the largest surviving
    component).  With all weights equal to one this coincides exactly
    with :func:`vat_exact` and runs on the integer-exact path.
    """
    _require_metric_graph(g, enumeration_limit(limit))
    if g.unit_weighted:
        value, witness = _min_ratio_exact(g, 1, 0)
        return WeightedValue(value=value, witness=witness, metric="weighted_vat")
    cost = g.cost_vector

    def num(mask: int, k: int) -> float:
        total = 0.0
        while mask:
            bit = mask & -mask
            mask ^= bit
            total += cost[bit.bit_length() - 1]
        return total

    value, witness = _min_ratio_general(g, num, g.value_vector)
    return WeightedValue(value=value, witness=witness, metric="weighted_vat")


def alpha_beta_weighted_vat_exact(
    g: Graph, alpha: float, beta: float, limit: int | None = None
) -> WeightedValue:
    """The fully general form: reweighted attack cost on a weighted graph.

    Reduces to each special case when parameters or weights are trivial;
    with unit weights and integer parameters it runs on the exact path.
    """
    if not alpha > 0:
        raise BadParameter(f"alpha must be positive, got {alpha}")
    if beta < 0:
        raise BadParameter(f"beta must be nonnegative, got {beta}")
    _require_metric_graph(g, enumeration_limit(limit))
    exact_params = float(alpha).is_integer() and float(beta).is_integer()
    if g.unit_weighted and exact_params:
        value, witness = _min_ratio_exact(g, int(alpha), int(beta))
        return WeightedValue(
            value=value, witness=witness, metric="alpha_beta_weighted_vat",
            parameters=(alpha, beta),
        )
    cost = g.cost_vector

    def num(mask: int, k: int) -> float:
        total = 0.0
        while mask:
            bit = mask & -mask
            mask ^= bit
            total += cost[bit.bit_length() - 1]
        return alpha * total + beta

    value, witness = _min_ratio_general(g, num, g.value_vector)
    return WeightedValue(
        value=value, witness=witness, metric="alpha_beta_weighted_vat",
        parameters=(alpha, beta),
    )


def _conductance_scan(
    g: Graph, collect: tuple[int, int] | None = None
) -> tuple[int, int, int] | list[int]:
    """One Gray-code sweep over all subsets maintaining (cut, volume).

    Successive Gray codes differ in one vertex, so the cut updates in
    O(1) bit operations per step.  With ``collect=None`` returns the
    minimizing ``(cut, vol, mask)``; otherwise collects every admissible
    mask whose ratio equals the fraction ``collect = (num, den)``.
    """
    n = g.n
    deg = g.deg
    adj_masks = g.adj_masks
    m = g.m
    cur = 0
    vol = 0
    cut = 0
    best_cut = best_vol = 0
    best_mask = -1
    have = False
    hits: list[int] = []
    want_num = want_den = 0
    if collect is not None:
        want_num, want_den = collect
    for i in range(1, 1 << n):
        bit = i & -i
        v = bit.bit_length() - 1
        av = adj_masks[v]
        if cur & bit:
            cur ^= bit
            vol -= deg[v]
            cut -= deg[v] - 2 * (av & cur).bit_count()
        else:
            cut += deg[v] - 2 * (av & cur).bit_count()
            cur ^= bit
            vol += deg[v]
        if vol > m:
            continue
        if collect is None:
            if (
                not have
                or cut * best_vol < best_cut * vol
                or (cut * best_vol == best_cut * vol and cur < best_mask)
            ):
                best_cut, best_vol, best_mask = cut, vol, cur
                have = True
        elif cut * want_den == want_num * vol:
            hits.append(cur)
    if collect is None:
        return best_cut, best_vol, best_mask
    hits.sort()
    return hits


def conductance_exact(g: Graph, limit: int | None = None) -> MetricResult:
    """Exact conductance: minimum cut/volume over sets of at most half volume.

    The witness is the minimizing set with the lowest bit-mask encoding.
    The value always lies in (0, 1].
    """
    _require_metric_graph(g, enumeration_limit(limit))
    cut, vol, mask = _conductance_scan(g)
    return MetricResult(value=Fraction(cut, vol), witness=mask, metric="conductance")


def conductance_minimizers(g: Graph, limit: int | None = None) -> list[VertexMask]:
    """Every admissible set achieving the exact conductance, sorted by encoding."""
    result = conductance_exact(g, limit)
    return _conductance_scan(
        g, (result.value.numerator, result.value.denominator)
    )


def vat_witness_components(
    g: Graph, result: MetricResult
) -> tuple[VertexMask, list[VertexMask]]:
    """Decompose the survivors of a VAT witness.

    Returns ``(T, others)`` where ``T`` is the largest surviving
    component and ``others`` are the remaining components, largest first.
    """
    from .graph import components

    comps = components(g, result.witness)
    return comps[0], comps[1:]
