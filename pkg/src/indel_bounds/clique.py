"""Exact maximum-clique search on small graphs given as bitset adjacency lists.

Vertex ``v`` is adjacent to ``u`` iff bit ``u`` of ``adj[v]`` is set. The
search is a coloring-bounded branch and bound (MCQ family): candidates are
greedily colored in index order, and a branch is cut as soon as the clique
size plus the number of colors left cannot beat the incumbent.

Results are deterministic: vertices are always visited in the same order and
the first clique found at a given size is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence


@dataclass(frozen=True)
class CliqueResult:
    members: tuple[int, ...]
    exact: bool
    nodes: int

    @property
    def size(self) -> int:
        return len(self.members)


def build_adjacency(count: int, compatible: Callable[[int, int], bool]) -> list[int]:
    """Bitset adjacency for the graph on ``range(count)`` with edges where
    ``compatible(i, j)`` holds (evaluated once per unordered pair)."""
    adj = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if compatible(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def greedy_clique(adj: Sequence[int], candidates: int) -> list[int]:
    """First-fit clique: scan candidates in index order, keep what fits."""
    clique: list[int] = []
    pool = candidates
    while pool:
        low = pool & -pool
        v = low.bit_length() - 1
        clique.append(v)
        pool &= adj[v]
    return clique


def _color_classes(adj: Sequence[int], pool: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = pool
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


class _BudgetExceeded(Exception):
    pass


class _CeilingReached(Exception):
    pass


def max_clique(
    adj: Sequence[int],
    candidates: Optional[int] = None,
    node_limit: Optional[int] = None,
    lower_bound: Sequence[int] = (),
    ceiling: Optional[int] = None,
) -> CliqueResult:
    """Maximum clique among ``candidates`` (default: every vertex).

    ``lower_bound`` seeds the incumbent with a known clique. ``ceiling`` is a
    proven upper bound on the clique number; the search stops as soon as the
    incumbent reaches it. If ``node_limit`` branch nodes are exhausted the
    best clique found so far is returned with ``exact=False``.
    """
    if candidates is None:
        candidates = (1 << len(adj)) - 1
    best = list(lower_bound)
    greedy = greedy_clique(adj, candidates)
    if len(greedy) > len(best):
        best = greedy
    stack: list[int] = []
    nodes = 0
    if ceiling is not None and len(best) >= ceiling:
        return CliqueResult(tuple(sorted(best)), True, nodes)

    def expand(pool: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _BudgetExceeded
        order, colors = _color_classes(adj, pool)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + colors[i] <= len(best):
                return
            v = order[i]
            stack.append(v)
            sub = pool & adj[v]
            if sub:
                expand(sub)
            elif len(stack) > len(best):
                best = list(stack)
                if ceiling is not None and len(best) >= ceiling:
                    raise _CeilingReached
            stack.pop()
            pool &= ~(1 << v)

    try:
        if candidates:
            expand(candidates)
        exact = True
    except _CeilingReached:
        exact = True
    except _BudgetExceeded:
        exact = False
    return CliqueResult(tuple(sorted(best)), exact, nodes)


def max_clique_containing(
    adj: Sequence[int],
    vertex: int,
    candidates: Optional[int] = None,
    node_limit: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> CliqueResult:
    """Maximum clique forced to contain ``vertex``.

    Used when a symmetry group acts transitively on the vertices, so some
    maximum clique passes through any chosen vertex.
    """
    if candidates is None:
        candidates = (1 << len(adj)) - 1
    sub = max_clique(
        adj,
        candidates & adj[vertex],
        node_limit=node_limit,
        ceiling=None if ceiling is None else ceiling - 1,
    )
    return CliqueResult(tuple(sorted((vertex,) + sub.members)), sub.exact, sub.nodes)
