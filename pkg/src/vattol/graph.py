"""Immutable simple undirected graphs with bit-vector vertex sets.

Vertices are dense integer ids ``0..n-1``.  Vertex sets are plain Python
integers used as bit vectors: bit ``i`` set means vertex ``i`` is in the
set.  Arbitrary-precision ints make this exact for any ``n``, and it keeps
subset enumeration, component search and witness tie-breaking cheap and
fully deterministic.

Graphs are frozen after construction, so any number of concurrent readers
is safe and every operation here is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable, Iterator, Sequence

from .errors import (
    BadParameter,
    BadVertexId,
    DisconnectedInput,
    DuplicateEdge,
    EmptyRemainder,
    NonPositiveWeight,
    SelfLoop,
)

# A vertex set: bit i set <=> vertex i in the set.
VertexMask = int


def mask_from_vertices(vertices: Iterable[int]) -> VertexMask:
    """Pack an iterable of vertex ids into a bit mask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_from_mask(mask: VertexMask) -> list[int]:
    """Unpack a bit mask into a sorted list of vertex ids."""
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return out


def full_mask(n: int) -> VertexMask:
    """The set of all ``n`` vertices."""
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with optional per-vertex cost/value weights.

    Fields
    ------
    n : vertex count; vertices are ids ``0..n-1``
    adj : per-vertex sorted neighbor tuples; symmetric, no loops, no
        parallel edges
    costs, values : per-vertex positive weights, or ``None`` for the
        unweighted (all ones) case; either both are set or neither is

    Instances should be created through :func:`build_graph`, which
    validates all invariants.  Direct construction skips validation.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    costs: tuple[float, ...] | None = None
    values: tuple[float, ...] | None = None

    @cached_property
    def deg(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(self.deg) // 2

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as a bit mask."""
        return tuple(mask_from_vertices(nbrs) for nbrs in self.adj)

    @cached_property
    def unit_weighted(self) -> bool:
        """True when every cost and value equals one."""
        if self.costs is None and self.values is None:
            return True
        return all(c == 1.0 for c in self.costs) and all(
            v == 1.0 for v in self.values
        )

    @cached_property
    def cost_vector(self) -> tuple[float, ...]:
        return self.costs if self.costs is not None else (1.0,) * self.n

    @cached_property
    def value_vector(self) -> tuple[float, ...]:
        return self.values if self.values is not None else (1.0,) * self.n

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:  # keep reprs short; adj can be huge
        w = "" if self.unit_weighted else ", weighted"
        return f"Graph(n={self.n}, m={self.m}{w})"


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    costs: Sequence[float] | None = None,
    values: Sequence[float] | None = None,
) -> Graph:
    """Validate and build a canonical :class:`Graph`.

    Rejects self-loops, duplicate edges (in either orientation), out of
    range endpoints and non-positive weights.  If only one of ``costs`` /
    ``values`` is given the other defaults to it; if neither is given the
    graph is unweighted.
    """
    if n < 1:
        raise BadParameter(f"vertex count must be at least 1, got {n}")
    seen: set[tuple[int, int]] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise BadVertexId(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)

    cost_t = value_t = None
    if costs is not None or values is not None:
        if costs is None:
            costs = values
        if values is None:
            values = costs
        if len(costs) != n or len(values) != n:
            raise BadParameter(
                f"weight vectors must have length {n}, got {len(costs)}/{len(values)}"
            )
        cost_t = tuple(float(c) for c in costs)
        value_t = tuple(float(v) for v in values)
        for x in cost_t + value_t:
            if not x > 0.0:
                raise NonPositiveWeight(f"weights must be positive, got {x}")

    return Graph(
        n=n,
        adj=tuple(tuple(sorted(lst)) for lst in nbrs),
        costs=cost_t,
        values=value_t,
    )


def _check_mask(g: Graph, mask: VertexMask) -> None:
    if mask < 0 or mask >> g.n:
        raise BadVertexId(f"mask {mask:#x} has bits outside [0, {g.n})")


def components(g: Graph, removed: VertexMask = 0) -> list[VertexMask]:
    """Connected components of the subgraph induced on ``V - removed``.

    Returned as bit masks ordered by decreasing size, ties broken toward
    the component containing the smallest vertex id.  Empty list when
    every vertex is removed.  This ordering is part of the contract so
    that witness sets are reproducible across runs and platforms.
    """
    _check_mask(g, removed)
    remaining = full_mask(g.n) & ~removed
    adj_masks = g.adj_masks
    comps = []
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
        comps.append(comp)
        remaining ^= comp
    comps.sort(key=lambda c: (-c.bit_count(), c & -c))
    return comps


def largest_component(g: Graph, removed: VertexMask = 0) -> VertexMask:
    """The largest surviving component after deleting ``removed``.

    Ties break toward the component containing the smallest vertex id.
    """
    comps = components(g, removed)
    if not comps:
        raise EmptyRemainder("removed every vertex; no component remains")
    return comps[0]


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches all vertices (true for n=1)."""
    if g.n == 1:
        return True
    adj_masks = g.adj_masks
    remaining = full_mask(g.n)
    comp = 1
    frontier = 1
    while frontier:
        nbrs = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nbrs |= adj_masks[b.bit_length() - 1]
        frontier = nbrs & remaining & ~comp
        comp |= frontier
    return comp == remaining


def volume(g: Graph, s: VertexMask) -> int:
    """Sum of degrees of the vertices in ``s``; ``volume(V) == 2m``."""
    _check_mask(g, s)
    deg = g.deg
    total = 0
    while s:
        bit = s & -s
        s ^= bit
        total += deg[bit.bit_length() - 1]
    return total


def cut_size(g: Graph, s: VertexMask) -> int:
    """Number of edges with exactly one endpoint in ``s``.

    Symmetric: ``cut_size(g, s) == cut_size(g, complement(s))``.
    """
    _check_mask(g, s)
    adj_masks = g.adj_masks
    outside = full_mask(g.n) & ~s
    total = 0
    t = s
    while t:
        bit = t & -t
        t ^= bit
        total += (adj_masks[bit.bit_length() - 1] & outside).bit_count()
    return total


def regularity(g: Graph) -> int | None:
    """The common degree ``d`` if the graph is d-regular, else ``None``."""
    degs = set(g.deg)
    if len(degs) == 1:
        return g.deg[0]
    return None


def restrict_to_largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component, ids relabeled to ``0..k-1``.

    Relabeling preserves the relative order of the surviving vertex ids.
    Identity on connected graphs.  This is the explicit opt-in a caller
    uses to give a disconnected graph a non-trivial resilience value.
    """
    if is_connected(g):
        return g
    keep = vertices_from_mask(largest_component(g))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    costs = values = None
    if g.costs is not None:
        costs = [g.costs[v] for v in keep]
        values = [g.values[v] for v in keep]
    return build_graph(len(keep), edges, costs, values)


def require_connected(g: Graph) -> None:
    """Raise :class:`DisconnectedInput` unless ``g`` is connected."""
    if not is_connected(g):
        raise DisconnectedInput(
            "graph is disconnected; restrict_to_largest_component() first"
        )


# ---------------------------------------------------------------------------
# Edge-list file format.
#
#   # comment                      '#' starts a comment line
#   w <u> <cost> <value>           optional vertex weight lines, before edges
#   <u> <v>                        one edge per line, 0-based ids
#
# n is inferred as 1 + the largest vertex id mentioned on any edge or
# weight line.  The writer emits edges with u < v, sorted; weight lines
# are emitted for every vertex whenever the graph is weighted or has
# isolated vertices (so round-trips are lossless).


def write_edge_list(g: Graph, out: IO[str]) -> None:
    """Write ``g`` in the edge-list text format."""
    mentioned = 0
    for u, v in g.edges():
        mentioned = max(mentioned, v + 1)
    need_weights = not g.unit_weighted or mentioned < g.n
    if need_weights:
        cost = g.cost_vector
        value = g.value_vector
        for u in range(g.n):
            out.write(f"w {u} {cost[u]!r} {value[u]!r}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")


def write_edge_list_path(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_edge_list(g, fh)


def read_edge_list(src: IO[str]) -> Graph:
    """Parse the edge-list text format into a :class:`Graph`."""
    edges: list[tuple[int, int]] = []
    weights: dict[int, tuple[float, float]] = {}
    max_id = -1
    saw_edge = False
    for lineno, raw in enumerate(src, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "w":
            if saw_edge:
                raise BadParameter(
                    f"line {lineno}: weight lines must precede edge lines"
                )
            if len(parts) != 4:
                raise BadParameter(f"line {lineno}: expected 'w u cost value'")
            try:
                u = int(parts[1])
                cost = float(parts[2])
                value = float(parts[3])
            except ValueError:
                raise BadParameter(f"line {lineno}: malformed weight line") from None
            if u < 0:
                raise BadVertexId(f"line {lineno}: negative vertex id {u}")
            if u in weights:
                raise BadParameter(f"line {lineno}: duplicate weight for vertex {u}")
            weights[u] = (cost, value)
            max_id = max(max_id, u)
            continue
        if len(parts) != 2:
            raise BadParameter(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BadParameter(f"line {lineno}: malformed edge line") from None
        if u < 0 or v < 0:
            raise BadVertexId(f"line {lineno}: negative vertex id")
        saw_edge = True
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise BadParameter("empty edge list: no vertices mentioned")
    n = max_id + 1
    costs = values = None
    if weights:
        costs = [weights.get(u, (1.0, 1.0))[0] for u in range(n)]
        values = [weights.get(u, (1.0, 1.0))[1] for u in range(n)]
    return build_graph(n, edges, costs, values)


def read_edge_list_path(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_edge_list(fh)
