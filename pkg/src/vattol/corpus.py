"""Deterministic graph corpora used by the verification suite and tests.

Two corpora are defined:

- :func:`standard_corpus`: a desk-scale mix (named families, exhaustive
  labeled regular graphs up to n=6, seeded random regular samples up to
  n=10) small enough to cross-check against naive reference
  implementations and to materialize as files.
- :func:`theorem_corpus`: the full verification sweep: every labeled
  connected d-regular graph on up to 8 vertices for every feasible
  degree, the regular families up to n=16, and 100 seeded connected
  random regular graphs with n up to 18.

Both are fully deterministic: the random members record the seed that
produced them in their id string, so any graph can be rebuilt from its
id alone.
"""

from __future__ import annotations

from typing import Iterator

from .generators import (
    FamilySpec,
    circulant,
    connected_random_regular,
    enumerate_small_regular,
    petersen,
)
from .graph import Graph

GraphItem = tuple[str, Graph]

_THEOREM_CIRCULANTS = (
    (8, (1, 2)),
    (8, (1, 4)),
    (10, (1, 2)),
    (10, (2, 5)),
    (12, (1, 3)),
    (12, (1, 6)),
    (13, (1, 5)),
    (14, (1, 7)),
    (15, (1, 4)),
    (16, (1, 3, 8)),
)

_STANDARD_CIRCULANTS = (
    (6, (1, 2)),
    (8, (1, 3)),
    (8, (1, 4)),
    (10, (1, 5)),
)

_RANDOM_SHAPES = tuple(
    (n, d) for n in (8, 10, 12, 14, 16, 18) for d in (3, 4, 5)
)


def _family(family: str, param: int) -> GraphItem:
    spec = FamilySpec(family, (param,))
    return str(spec), spec.build()


def _circulant_item(n: int, offsets: tuple[int, ...]) -> GraphItem:
    spec = FamilySpec("circulant", (n,) + offsets)
    return str(spec), circulant(n, list(offsets))


def exhaustive_regular(max_n: int = 8, min_n: int = 2) -> Iterator[GraphItem]:
    """All labeled connected d-regular graphs for every feasible (n, d).

    Ids are ``exhaustive:<n>,<d>,i=<k>`` with k the position in the
    fixed ascending edge-encoding order.
    """
    for n in range(min_n, max_n + 1):
        for d in range(1, n):
            if (n * d) % 2 != 0:
                continue
            if d == 1 and n > 2:
                continue  # 1-regular graphs on n > 2 vertices are never connected
            for i, g in enumerate(enumerate_small_regular(n, d)):
                yield f"exhaustive:{n},{d},i={i}", g


def random_regular_samples(
    count: int = 100, base_seed: int = 42
) -> Iterator[GraphItem]:
    """Seeded connected random regular graphs, n up to 18.

    Shapes cycle through n in {8..18} x d in {3, 4, 5}; each sample's id
    records the exact seed that produced the connected graph, so the id
    doubles as a family spec string.
    """
    for i in range(count):
        n, d = _RANDOM_SHAPES[i % len(_RANDOM_SHAPES)]
        g, seed = connected_random_regular(n, d, base_seed + 7919 * i)
        yield f"random_regular:{n},{d},seed={seed}", g


def theorem_families(max_n: int = 16) -> Iterator[GraphItem]:
    """The regular families driven up to ``max_n`` vertices."""
    for n in range(3, max_n + 1):
        yield _family("cycle", n)
    for n in range(2, max_n + 1):
        yield _family("complete", n)
    for k in range(1, 5):  # 2^k <= 16
        yield _family("hypercube", k)
    for d in range(1, max_n // 2 + 1):
        yield _family("complete_bipartite", d)
    for n, offsets in _THEOREM_CIRCULANTS:
        if n <= max_n:
            yield _circulant_item(n, offsets)
    yield "petersen", petersen()


def theorem_corpus(
    max_exhaustive_n: int = 8,
    max_family_n: int = 16,
    random_count: int = 100,
    base_seed: int = 42,
) -> Iterator[GraphItem]:
    """The full corpus for the inequality verification sweep."""
    yield from exhaustive_regular(max_exhaustive_n)
    yield from theorem_families(max_family_n)
    yield from random_regular_samples(random_count, base_seed)


def standard_corpus(base_seed: int = 1000) -> list[GraphItem]:
    """The desk-scale corpus: families, exhaustive n <= 6, 30 random samples.

    Contains well over 200 graphs with n <= 10, which is the slice the
    naive-oracle equivalence tests sweep.
    """
    items: list[GraphItem] = []
    for n in range(3, 13):
        items.append(_family("cycle", n))
    for n in range(2, 11):
        items.append(_family("complete", n))
    for leaves in range(2, 9):
        items.append(_family("star", leaves))
    for n in range(2, 11):
        items.append(_family("path", n))
    for k in range(1, 4):
        items.append(_family("hypercube", k))
    for d in range(1, 6):
        items.append(_family("complete_bipartite", d))
    for n, offsets in _STANDARD_CIRCULANTS:
        items.append(_circulant_item(n, offsets))
    items.append(("petersen", petersen()))
    items.extend(exhaustive_regular(6))
    shapes = tuple((n, d) for n in (6, 8, 10) for d in (3, 4, 5))
    for i in range(30):
        n, d = shapes[i % len(shapes)]
        g, seed = connected_random_regular(n, d, base_seed + 101 * i)
        items.append((f"random_regular:{n},{d},seed={seed}", g))
    return items
