"""Brute-force ground truth for tiny parameters.

Everything here enumerates: all words of ``[q]^n``, all list centers, or all
codes. Enumerations larger than the configured cap are refused, never
sampled.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np

from .bounds import CodeParams, ListParams
from .clique import build_adjacency, max_clique
from .config import Limits
from .errors import EnumerationCapError, ParameterError
from .levenshtein import Code, _lcs, insertion_ball_size, is_subsequence


class ShorteningCollisionError(AssertionError):
    """Two codewords share the chosen length ``n - s`` subsequence, so the
    code's minimum distance is at most ``2s``."""


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Code
    search_space_size: int
    elapsed: float
    exact: bool = True
    nodes: int = 0

    def to_record(self) -> dict:
        from .formats import code_to_text

        return {
            "bound": "oracle_exact",
            "applicable": True,
            "value_num": self.value,
            "value_den": 1,
            "value": f"{self.value}/1",
            "decimal": float(self.value),
            "exactness": "exact" if self.exact else "lower_bound",
            "params": {"q": self.witness.q, "n": self.witness.n},
            "search_space_size": self.search_space_size,
            "nodes": self.nodes,
            "witness": code_to_text(self.witness),
        }


def all_words(q: int, n: int, limits: Limits = Limits()) -> list[tuple[int, ...]]:
    size = q**n
    if size > limits.max_enum:
        raise EnumerationCapError(f"[{q}]^{n}", size, limits.max_enum)
    return list(product(range(q), repeat=n))


def _distance_graph(words, d: int) -> list[int]:
    n = len(words[0]) if words else 0
    # d_L >= d  <=>  LCS <= n - d/2
    max_common = n - (d + 1) // 2
    return build_adjacency(len(words), lambda i, j: _lcs(words[i], words[j]) <= max_common)


def max_indel_code_exact(
    p: CodeParams, node_limit: Optional[int] = None, limits: Limits = Limits()
) -> OracleResult:
    """Largest code in ``[q]^n`` with pairwise Levenshtein distance ``>= d``."""
    start = time.perf_counter()
    words = all_words(p.q, p.n, limits)
    if p.d <= 2:
        # distinct words of equal length are always at distance >= 2
        code = Code(p.q, p.n, tuple(words))
        return OracleResult(len(words), code, len(words), time.perf_counter() - start)
    adj = _distance_graph(words, p.d)
    result = max_clique(adj, node_limit=node_limit)
    code = Code(p.q, p.n, tuple(words[i] for i in result.members))
    return OracleResult(
        result.size, code, len(words), time.perf_counter() - start, result.exact, result.nodes
    )


@dataclass(frozen=True)
class ListScan:
    max_size: int
    argmax: tuple[int, ...]
    centers: int


def verify_list_bound_everywhere(code: Code, lp: ListParams, limits: Limits = Limits()) -> ListScan:
    """Largest ``|B_L(z, s, t) & C|`` over every center ``z`` of length
    ``n - s + t``; the first maximizer in lexicographic order is reported."""
    m = code.n - lp.s + lp.t
    if m < 0:
        raise ParameterError(f"s={lp.s} exceeds n={code.n}")
    size = code.q**m
    if size > limits.max_enum:
        raise EnumerationCapError(f"centers [{code.q}]^{m}", size, limits.max_enum)
    need = code.n - lp.s  # |z| = n-s+t and |c| = n: membership iff LCS >= n-s
    best, argmax = -1, ()
    for z in product(range(code.q), repeat=m):
        count = sum(1 for c in code.words if _lcs(z, c) >= need)
        if count > best:
            best, argmax = count, z
    return ListScan(best, argmax, size)


@dataclass(frozen=True)
class ExhaustiveListResult:
    max_size: int
    codes: int
    centers: int


def exhaustive_list_sizes(
    q: int, n: int, d: int, s: int, t: int, limits: Limits = Limits()
) -> ExhaustiveListResult:
    """Maximum list size over every code in ``[q]^n`` with minimum distance
    ``>= d`` and every center in ``[q]^(n-s+t)``, enumerating codes one by one."""
    words = all_words(q, n, limits)
    m = n - s + t
    if q**m > limits.max_enum:
        raise EnumerationCapError(f"centers [{q}]^{m}", q**m, limits.max_enum)
    centers = list(product(range(q), repeat=m))
    member = np.array(
        [[_lcs(z, w) >= n - s for w in words] for z in centers], dtype=np.int64
    ).T  # member[w] = indicator over centers
    max_common = n - (d + 1) // 2
    compatible = [
        [j for j in range(i + 1, len(words)) if _lcs(words[i], words[j]) <= max_common]
        for i in range(len(words))
    ]
    compat_sets = [set(c) for c in compatible]
    counts = np.zeros(len(centers), dtype=np.int64)
    best = 0
    n_codes = 1  # the empty code

    def extend(options: list[int]) -> None:
        nonlocal best, n_codes, counts
        for k, v in enumerate(options):
            n_codes += 1
            counts += member[v]
            top = int(counts.max())
            if top > best:
                best = top
            extend([u for u in options[k + 1 :] if u in compat_sets[v]])
            counts -= member[v]

    extend(list(range(len(words))))
    return ExhaustiveListResult(best, n_codes, len(centers))


def _shorten(code: Code, s: int) -> list[tuple[int, ...]]:
    keep = code.n - s
    images = [w[:keep] for w in code.words]
    if len(set(images)) != len(images):
        raise ShorteningCollisionError(f"prefix truncation to length {keep} is not injective")
    return images


def averaging_identity(code: Code, s: int, t: int, limits: Limits = Limits()) -> tuple[Fraction, Fraction]:
    """Mean of ``|D_t(y) & pi(C)|`` over every ``y`` in ``[q]^(n-s+t)``, and the
    closed form ``|C| I_q(n-s, t) / q^(n-s+t)``."""
    images = _shorten(code, s)
    m = code.n - s + t
    size = code.q**m
    if size > limits.max_enum:
        raise EnumerationCapError(f"[{code.q}]^{m}", size, limits.max_enum)
    total = 0
    for y in product(range(code.q), repeat=m):
        total += sum(1 for x in images if is_subsequence(x, y))
    exact = Fraction(total, size)
    closed = Fraction(len(code) * insertion_ball_size(code.q, code.n - s, t), size)
    return exact, closed


@dataclass(frozen=True)
class ShorteningStats:
    mean: float
    stderr: float
    trials: int
    seed: int
    expected: Fraction


def shortening_experiment(code: Code, s: int, t: int, trials: int, seed: int) -> ShorteningStats:
    """Monte Carlo estimate of ``E |D_t(y) & pi(C)|`` for uniform ``y``."""
    if trials < 2:
        raise ParameterError("need at least two trials")
    images = _shorten(code, s)
    m = code.n - s + t
    rng = np.random.default_rng(seed)
    ys = rng.integers(0, code.q, size=(trials, m))
    sizes = np.array([sum(1 for x in images if is_subsequence(x, tuple(y))) for y in ys], dtype=float)
    expected = Fraction(len(code) * insertion_ball_size(code.q, code.n - s, t), code.q**m)
    return ShorteningStats(
        float(sizes.mean()), float(sizes.std(ddof=1) / math.sqrt(trials)), trials, seed, expected
    )
