"""Independent brute-force oracles shared by the test modules.

None of these call into the package: they enumerate directly so they can
check it.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product

import pytest


def brute_is_subsequence(short, long) -> bool:
    """Try every index subset of ``long``."""
    return any(
        tuple(long[i] for i in idx) == tuple(short) for idx in combinations(range(len(long)), len(short))
    )


def brute_lcs(x, y) -> int:
    """Longest subsequence of ``x`` (over all index subsets) found in ``y``."""
    for k in range(min(len(x), len(y)), -1, -1):
        for idx in combinations(range(len(x)), k):
            if brute_is_subsequence(tuple(x[i] for i in idx), y):
                return k
    return 0


def bfs_distance(x, y, q: int) -> int:
    """Fewest single-symbol insertions/deletions turning ``x`` into ``y``.

    A shortest path never passes a word longer than ``|x| + |y|``.
    """
    x, y = tuple(x), tuple(y)
    cap = len(x) + len(y)
    seen = {x: 0}
    queue = deque([x])
    while queue:
        w = queue.popleft()
        if w == y:
            return seen[w]
        nxt = [w[:i] + w[i + 1 :] for i in range(len(w))]
        if len(w) < cap:
            nxt += [w[:i] + (a,) + w[i:] for i in range(len(w) + 1) for a in range(q)]
        for v in nxt:
            if v not in seen:
                seen[v] = seen[w] + 1
                queue.append(v)
    raise AssertionError("unreachable")


def brute_max_family(n: int, d: int, w: int) -> int:
    """Largest family of w-subsets of [n] with pairwise Hamming distance >= d,
    by enumerating every valid family (no pruning)."""
    subsets = [frozenset(c) for c in combinations(range(n), w)]
    best = 0

    def grow(size, start, chosen):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(2 * w - 2 * len(s & c) >= d for c in chosen):
                chosen.append(s)
                grow(size + 1, i + 1, chosen)
                chosen.pop()

    grow(0, 0, [])
    return best


def brute_max_code(q: int, n: int, d: int) -> int:
    """Largest subset of [q]^n with pairwise insertion/deletion distance >= d,
    by enumerating every valid code."""
    words = list(product(range(q), repeat=n))
    ok = {
        (i, j): 2 * n - 2 * brute_lcs(words[i], words[j]) >= d
        for i in range(len(words))
        for j in range(i + 1, len(words))
    }
    best = 0

    def grow(size, start, chosen):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(words)):
            if all(ok[(c, i)] for c in chosen):
                chosen.append(i)
                grow(size + 1, i + 1, chosen)
                chosen.pop()

    grow(0, 0, [])
    return best


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(_ACCEPTANCE, key=lambda r: int(r[0].split()[1])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
