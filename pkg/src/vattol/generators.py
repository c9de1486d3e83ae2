"""Graph family constructors and exhaustive small-graph enumeration.

All generators return canonical :class:`~vattol.graph.Graph` objects and
are fully deterministic; the random family is seeded and reproduces the
same edge set for the same ``(n, d, seed)`` on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BadParameter, RetryLimitExceeded
from .graph import Graph, build_graph, is_connected

_MASK64 = (1 << 64) - 1
_RETRY_LIMIT = 10_000


def path(n: int) -> Graph:
    """Path on ``n >= 2`` vertices: edges (i, i+1)."""
    if n < 2:
        raise BadParameter(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices; 2-regular and connected."""
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on ``n >= 2`` vertices; (n-1)-regular."""
    if n < 2:
        raise BadParameter(f"complete needs n >= 2, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """Star with a given number of leaves; vertex 0 is the center."""
    if leaves < 2:
        raise BadParameter(f"star needs at least 2 leaves, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hypercube(k: int) -> Graph:
    """k-dimensional hypercube, ``1 <= k <= 6``; 2^k vertices, k-regular."""
    if not 1 <= k <= 6:
        raise BadParameter(f"hypercube dimension must be in [1, 6], got {k}")
    n = 1 << k
    edges = []
    for v in range(n):
        for bit in range(k):
            u = v ^ (1 << bit)
            if v < u:
                edges.append((v, u))
    return build_graph(n, edges)


def complete_bipartite(d: int) -> Graph:
    """Balanced complete bipartite graph K_{d,d}; d-regular on 2d vertices."""
    if d < 1:
        raise BadParameter(f"complete_bipartite needs d >= 1, got {d}")
    return build_graph(2 * d, [(u, d + v) for u in range(d) for v in range(d)])


def circulant(n: int, offsets: list[int]) -> Graph:
    """Circulant graph: edges {i, (i+o) mod n} for each offset.

    Regular with degree ``2 * len(offsets)``, minus one when ``n`` is even
    and ``n/2`` is among the offsets.
    """
    if n < 3:
        raise BadParameter(f"circulant needs n >= 3, got {n}")
    if not offsets:
        raise BadParameter("circulant needs at least one offset")
    if len(set(offsets)) != len(offsets):
        raise BadParameter(f"offsets must be distinct, got {offsets}")
    for o in offsets:
        if not 1 <= o <= n // 2:
            raise BadParameter(f"offset {o} outside [1, {n // 2}] for n={n}")
    edges = set()
    for i in range(n):
        for o in offsets:
            j = (i + o) % n
            edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def petersen() -> Graph:
    """The Petersen graph: 10 vertices, 15 edges, 3-regular."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((i, i + 5))                # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return build_graph(10, sorted((min(u, v), max(u, v)) for u, v in edges))


class _SplitMix64:
    """splitmix64: a small, named, platform-stable 64-bit generator.

    Used for the seeded shuffles so random graphs reproduce bit for bit
    everywhere, independent of any runtime's RNG internals.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            r = self.next64()
            if r < limit:
                return r % bound


def _fisher_yates(items: list[int], rng: _SplitMix64) -> None:
    for i in range(len(items) - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Seeded d-regular graph from the stub-pairing (configuration) model.

    Each vertex contributes ``d`` stubs; the stub list is shuffled with a
    splitmix64-driven Fisher-Yates and paired consecutively.  Attempts
    that produce a self-loop or duplicate edge are discarded and retried
    with ``seed + 1`` (wrapping at 2^64), so failures are reproducible.
    Connectivity is NOT guaranteed; the caller checks.
    """
    if not 1 <= d < n:
        raise BadParameter(f"degree must satisfy 1 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise BadParameter(f"n*d must be even, got n={n}, d={d}")
    attempt_seed = seed & _MASK64
    for _ in range(_RETRY_LIMIT):
        stubs = [v for v in range(n) for _ in range(d)]
        _fisher_yates(stubs, _SplitMix64(attempt_seed))
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (min(u, v), max(u, v))
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return build_graph(n, sorted(edges))
        attempt_seed = (attempt_seed + 1) & _MASK64
    raise RetryLimitExceeded(
        f"no simple {d}-regular pairing on {n} vertices after {_RETRY_LIMIT} attempts"
    )


def connected_random_regular(n: int, d: int, seed: int) -> tuple[Graph, int]:
    """First connected sample at or after ``seed``; returns (graph, seed used)."""
    s = seed & _MASK64
    for _ in range(_RETRY_LIMIT):
        g = random_regular(n, d, s)
        if is_connected(g):
            return g, s
        s = (s + 1) & _MASK64
    raise RetryLimitExceeded(
        f"no connected {d}-regular graph on {n} vertices after {_RETRY_LIMIT} seeds"
    )


def enumerate_small_regular(n: int, d: int) -> Iterator[Graph]:
    """All labeled connected d-regular graphs on ``n <= 8`` vertices.

    Edges of K_n are indexed lexicographically ((0,1), (0,2), ..); each
    edge subset is encoded as the integer with bit i set for edge i, and
    graphs are emitted in increasing order of that encoding.  No
    isomorphism reduction: every labeled edge set appears exactly once.

    The search walks edge indices from highest to lowest, excluding
    before including, which visits encodings in ascending order while
    degree-feasibility pruning keeps the tree near the solution count.
    """
    if not 2 <= n <= 8:
        raise BadParameter(f"exhaustive enumeration needs 2 <= n <= 8, got {n}")
    if not 0 <= d < n:
        raise BadParameter(f"degree must satisfy 0 <= d < n, got d={d}")
    if (n * d) % 2 != 0:
        raise BadParameter(f"n*d must be even, got n={n}, d={d}")

    edge_list = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    avail = [n - 1] * n  # undecided edges incident to each vertex
    chosen: list[tuple[int, int]] = []

    def walk(idx: int) -> Iterator[Graph]:
        if idx < 0:
            # avail is 0 everywhere, so pruning forces deg[v] == d exactly
            g = build_graph(n, list(chosen))
            if is_connected(g):
                yield g
            return
        u, v = edge_list[idx]
        # branch 1: leave edge idx out
        avail[u] -= 1
        avail[v] -= 1
        if deg[u] + avail[u] >= d and deg[v] + avail[v] >= d:
            yield from walk(idx - 1)
        # branch 2: put edge idx in
        if deg[u] < d and deg[v] < d:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from walk(idx - 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        avail[u] += 1
        avail[v] += 1

    yield from walk(len(edge_list) - 1)


_FAMILIES = (
    "cycle",
    "complete",
    "star",
    "path",
    "hypercube",
    "complete_bipartite",
    "circulant",
    "random_regular",
    "petersen",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, e.g. ``cycle:6``.

    Canonical string forms:

    - ``cycle:6``, ``complete:4``, ``star:5``, ``path:7``,
      ``hypercube:3``, ``complete_bipartite:3``
    - ``circulant:8,1+4``  (n, then offsets joined by '+')
    - ``random_regular:20,3,seed=42``
    - ``petersen``
    """

    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def __str__(self) -> str:
        if self.family == "petersen":
            return "petersen"
        if self.family == "circulant":
            n, *offsets = self.params
            return f"circulant:{n},{'+'.join(str(o) for o in offsets)}"
        if self.family == "random_regular":
            n, d = self.params
            return f"random_regular:{n},{d},seed={self.seed}"
        return f"{self.family}:{self.params[0]}"

    def build(self) -> Graph:
        if self.family == "cycle":
            return cycle(self.params[0])
        if self.family == "complete":
            return complete(self.params[0])
        if self.family == "star":
            return star(self.params[0])
        if self.family == "path":
            return path(self.params[0])
        if self.family == "hypercube":
            return hypercube(self.params[0])
        if self.family == "complete_bipartite":
            return complete_bipartite(self.params[0])
        if self.family == "circulant":
            n, *offsets = self.params
            return circulant(n, list(offsets))
        if self.family == "random_regular":
            n, d = self.params
            if self.seed is None:
                raise BadParameter("random_regular spec needs seed=...")
            return random_regular(n, d, self.seed)
        if self.family == "petersen":
            return petersen()
        raise BadParameter(f"unknown family {self.family!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the canonical string form of a :class:`FamilySpec`."""
    text = text.strip()
    if text == "petersen":
        return FamilySpec("petersen")
    if ":" not in text:
        raise BadParameter(f"malformed family spec {text!r}")
    family, _, rest = text.partition(":")
    if family not in _FAMILIES:
        raise BadParameter(f"unknown family {family!r}")
    if family == "petersen":
        raise BadParameter("petersen takes no parameters")
    parts = [p for p in rest.split(",") if p]
    if not parts:
        raise BadParameter(f"family spec {text!r} needs parameters")
    try:
        if family == "circulant":
            if len(parts) != 2:
                raise BadParameter(f"circulant spec needs 'n,o1+o2+..': {text!r}")
            n = int(parts[0])
            offsets = tuple(int(o) for o in parts[1].split("+"))
            return FamilySpec("circulant", (n,) + offsets)
        if family == "random_regular":
            if len(parts) != 3 or not parts[2].startswith("seed="):
                raise BadParameter(
                    f"random_regular spec needs 'n,d,seed=S': {text!r}"
                )
            n, d = int(parts[0]), int(parts[1])
            seed = int(parts[2][len("seed="):])
            return FamilySpec("random_regular", (n, d), seed)
        if len(parts) != 1:
            raise BadParameter(f"{family} takes a single parameter: {text!r}")
        return FamilySpec(family, (int(parts[0]),))
    except ValueError:
        raise BadParameter(f"non-integer parameter in spec {text!r}") from None


def build_family(text: str) -> Graph:
    """Parse a spec string and build the graph."""
    return parse_family_spec(text).build()
