"""Binary constant-weight codes as families of ``w``-subsets of ``{1..n}``.

``A(n, d, w)`` is the largest family of ``w``-subsets whose indicator vectors
are pairwise at Hamming distance at least ``d``. Two supports ``E, F`` are at
distance ``2w - 2|E & F|``, so only even distances occur and an odd ``d`` can be
rounded up. Complementing every support maps weight ``w`` to ``n - w`` and
keeps all distances, hence ``A(n, d, w) = A(n, d, n - w)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .clique import build_adjacency, max_clique_containing
from .config import Limits
from .errors import NeedsUpperModeError, ParameterError
from .levenshtein import INFINITE

EXACT = "exact"
UPPER = "upper_bound"
LOWER = "lower_bound"


@dataclass(frozen=True)
class SupportFamily:
    n: int
    w: int
    supports: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(sorted(tuple(sorted(s)) for s in self.supports))
        if len(set(normalized)) != len(normalized):
            raise ParameterError("supports must be pairwise distinct")
        for s in normalized:
            if len(s) != self.w or len(set(s)) != self.w:
                raise ParameterError(f"support {s} does not have weight {self.w}")
            if s and (s[0] < 1 or s[-1] > self.n):
                raise ParameterError(f"support {s} leaves [1, {self.n}]")
        object.__setattr__(self, "supports", normalized)

    def __len__(self) -> int:
        return len(self.supports)

    def __iter__(self):
        return iter(self.supports)

    def complement(self) -> "SupportFamily":
        full = set(range(1, self.n + 1))
        return SupportFamily(
            self.n, self.n - self.w, tuple(tuple(sorted(full - set(s))) for s in self.supports)
        )

    def indicator_vectors(self) -> list[tuple[int, ...]]:
        vectors = []
        for s in self.supports:
            members = set(s)
            vectors.append(tuple(int(i in members) for i in range(1, self.n + 1)))
        return vectors


@dataclass(frozen=True)
class CWQuery:
    n: int
    d: int
    w: int

    def __post_init__(self):
        if not 0 <= self.w <= self.n:
            raise ParameterError(f"need 0 <= w <= n, got n={self.n}, w={self.w}")
        if self.d < 0:
            raise ParameterError(f"d must be nonnegative, got {self.d}")

    def normalized(self) -> "CWQuery":
        """Even distance and weight at most ``n / 2``."""
        return CWQuery(self.n, 2 * ((self.d + 1) // 2), min(self.w, self.n - self.w))


@dataclass(frozen=True)
class CWAnswer:
    query: CWQuery
    value: Optional[int]
    exactness: str
    method: str
    witness: Optional[SupportFamily] = field(default=None, compare=False)
    upper: Optional[int] = None
    applicable: bool = True
    complemented: bool = False

    @property
    def is_exact(self) -> bool:
        return self.exactness == EXACT


def hamming_distance_supports(e: Iterable[int], f: Iterable[int]) -> int:
    e, f = set(e), set(f)
    if len(e) != len(f):
        raise ParameterError(f"supports of unequal weight: {len(e)} vs {len(f)}")
    return 2 * len(e) - 2 * len(e & f)


def min_distance(family: SupportFamily):
    sets = [set(s) for s in family.supports]
    best = INFINITE
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            dist = 2 * family.w - 2 * len(sets[i] & sets[j])
            if dist < best:
                best = dist
    return best


def johnson_ratio(n: int, d: int, w: int) -> Optional[Fraction]:
    """``dn / (dn - 2w(n-w))`` when ``dn > 2w(n-w)``, else None."""
    denom = d * n - 2 * w * (n - w)
    if denom <= 0:
        return None
    return Fraction(d * n, denom)


def johnson_bound_cw(n: int, d: int, w: int) -> CWAnswer:
    query = CWQuery(n, d, w)
    ratio = johnson_ratio(n, d, w)
    if ratio is None:
        return CWAnswer(query, None, UPPER, "johnson", applicable=False)
    return CWAnswer(query, math.floor(ratio), UPPER, "johnson")


@lru_cache(maxsize=None)
def _ceiling(n: int, d: int, w: int) -> tuple[int, str]:
    """Analytic upper bound on A(n, d, w) for even ``d``, with its method tag.

    Combines the trivial bounds, the Johnson ratio and the shortening
    recursions ``A(n,d,w) <= floor(n/w * A(n-1,d,w-1))`` and
    ``A(n,d,w) <= floor(n/(n-w) * A(n-1,d,w))``.
    """
    w = min(w, n - w)
    if d > 2 * w:
        return 1, "trivial"
    if d <= 2:
        return math.comb(n, w), "trivial"
    best, method = math.comb(n, w), "trivial"
    ratio = johnson_ratio(n, d, w)
    if ratio is not None and math.floor(ratio) < best:
        best, method = math.floor(ratio), "johnson"
    if w > 0:
        sub = n * _ceiling(n - 1, d, w - 1)[0] // w
        if sub < best:
            best, method = sub, "johnson_recursive"
    if w < n:
        sub = n * _ceiling(n - 1, d, w)[0] // (n - w)
        if sub < best:
            best, method = sub, "johnson_recursive"
    return best, method


def _family_from_masks(n: int, w: int, masks: Sequence[int]) -> SupportFamily:
    supports = []
    for m in masks:
        supports.append(tuple(i + 1 for i in range(n) if m >> i & 1))
    return SupportFamily(n, w, tuple(supports))


def _in_search_range(q: CWQuery, limits: Limits) -> bool:
    return q.n <= limits.cw_max_n and math.comb(q.n, q.w) <= limits.cw_max_vertices


@lru_cache(maxsize=256)
def _search(norm: CWQuery, node_limit: Optional[int]) -> tuple[SupportFamily, bool]:
    n, d, w = norm.n, norm.d, norm.w
    subsets = list(combinations(range(n), w))
    masks = [sum(1 << i for i in s) for s in subsets]
    max_overlap = w - d // 2
    adj = build_adjacency(
        len(masks), lambda i, j: (masks[i] & masks[j]).bit_count() <= max_overlap
    )
    # Permutations of [n] act transitively on w-subsets, so some optimum
    # contains the lexicographically first support {1..w}.
    result = max_clique_containing(adj, 0, node_limit=node_limit, ceiling=_ceiling(n, d, w)[0])
    return _family_from_masks(n, w, [masks[i] for i in result.members]), result.exact


def _finish(query: CWQuery, norm: CWQuery, family: SupportFamily, **kw) -> CWAnswer:
    complemented = norm.w != query.w
    if complemented:
        family = family.complement()
    return CWAnswer(norm, len(family), witness=family, complemented=complemented, **kw)


def max_constant_weight_exact(
    n: int,
    d: int,
    w: int,
    node_limit: Optional[int] = None,
    limits: Limits = Limits(),
) -> CWAnswer:
    """Exact ``A(n, d, w)`` with a witness family of weight ``w``.

    Raises :class:`NeedsUpperModeError` outside the configured search range.
    If the node budget runs out, the answer carries the best family found,
    ``exactness == "lower_bound"`` and a separate ``upper`` value.
    """
    query = CWQuery(n, d, w)
    norm = query.normalized()
    if norm.d > 2 * norm.w:
        return _finish(query, norm, SupportFamily(n, norm.w, (tuple(range(1, norm.w + 1)),)),
                       exactness=EXACT, method="trivial")
    if not _in_search_range(norm, limits):
        raise NeedsUpperModeError(
            f"A({n},{d},{w}) outside exact search range "
            f"(n <= {limits.cw_max_n}, C(n,w) <= {limits.cw_max_vertices})"
        )
    if norm.d <= 2:
        everything = SupportFamily(
            n, norm.w, tuple(tuple(i + 1 for i in s) for s in combinations(range(n), norm.w))
        )
        return _finish(query, norm, everything, exactness=EXACT, method="trivial")
    budget = limits.cw_node_limit if node_limit is None else node_limit
    family, exact = _search(norm, budget)
    if exact:
        return _finish(query, norm, family, exactness=EXACT, method="search")
    upper = cw_upper_bound(n, d, w, limits=limits, search=False)
    return _finish(query, norm, family, exactness=LOWER, method="search", upper=upper.value)


def cw_upper_bound(
    n: int,
    d: int,
    w: int,
    limits: Limits = Limits(),
    search: bool = True,
    node_limit: int = 200_000,
) -> CWAnswer:
    """Best available upper bound on ``A(n, d, w)``.

    Tries, in order: the ``d > 2w`` rule, a budgeted exact search (when in
    range and ``search`` is set), then the analytic bounds.
    """
    query = CWQuery(n, d, w)
    norm = query.normalized()
    complemented = norm.w != w
    if norm.d > 2 * norm.w or (search and _in_search_range(norm, limits)):
        answer = max_constant_weight_exact(n, d, w, node_limit=node_limit, limits=limits)
        if answer.is_exact:
            return answer
    value, method = _ceiling(norm.n, norm.d, norm.w)
    return CWAnswer(norm, value, UPPER, method, complemented=complemented)
