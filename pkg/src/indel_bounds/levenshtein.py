"""Insertion/deletion metric primitives.

Words are tuples of integer symbols in ``[0, q)``. The public functions accept
either a :class:`Word` (which carries its alphabet size) or any plain integer
sequence; alphabet consistency is only checked when both sides are Words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .config import Limits
from .errors import EnumerationCapError, ParameterError

INFINITE = math.inf


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(a) for a in self.symbols))
        if self.q < 1:
            raise ParameterError(f"alphabet size must be >= 1, got {self.q}")
        for a in self.symbols:
            if not 0 <= a < self.q:
                raise ParameterError(f"symbol {a} outside alphabet [0, {self.q})")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.symbols))

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        """Parse space- or comma-separated symbols; a contiguous digit string
        is accepted when ``q <= 10``."""
        text = text.strip()
        if not text:
            return cls((), q)
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return cls(tuple(int(p) for p in parts), q)
        if q > 10:
            raise ParameterError(
                f"contiguous word {text!r} is ambiguous for q={q}; separate symbols with commas"
            )
        return cls(tuple(int(c) for c in text), q)


WordLike = Union[Word, Sequence[int]]


def _seq(x: WordLike) -> tuple[int, ...]:
    return x.symbols if isinstance(x, Word) else tuple(x)


def _alphabet(*words: WordLike, q: Optional[int] = None) -> Optional[int]:
    sizes = {w.q for w in words if isinstance(w, Word)}
    if q is not None:
        sizes.add(q)
    if len(sizes) > 1:
        raise ParameterError(f"alphabet mismatch: {sorted(sizes)}")
    return sizes.pop() if sizes else None


@dataclass(frozen=True)
class Code:
    """A set of distinct words of common length ``n`` over ``[0, q)``."""

    q: int
    n: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        words = tuple(sorted(set(tuple(w) for w in self.words)))
        for w in words:
            if len(w) != self.n:
                raise ParameterError(f"word {w} has length {len(w)}, expected {self.n}")
            if any(not 0 <= a < self.q for a in w):
                raise ParameterError(f"word {w} leaves alphabet [0, {self.q})")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_words(cls, words: Iterable[WordLike], q: int, n: Optional[int] = None) -> "Code":
        seqs = [_seq(w) for w in words]
        if n is None:
            if not seqs:
                raise ParameterError("length of an empty code must be given")
            n = len(seqs[0])
        return cls(q, n, tuple(seqs))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return (Word(w, self.q) for w in self.words)

    def __contains__(self, w) -> bool:
        return _seq(w) in self.words


def lcs(x: WordLike, y: WordLike) -> int:
    """Length of a longest common subsequence."""
    _alphabet(x, y)
    return _lcs(_seq(x), _seq(y))


def _lcs(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for ai in a:
        cur = [0]
        for j, bj in enumerate(b):
            if ai == bj:
                cur.append(prev[j] + 1)
            else:
                cur.append(cur[j] if cur[j] > prev[j + 1] else prev[j + 1])
        prev = cur
    return prev[-1]


def levenshtein_distance(x: WordLike, y: WordLike) -> int:
    """Insertion/deletion distance, ``|x| + |y| - 2 LCS(x, y)``."""
    _alphabet(x, y)
    a, b = _seq(x), _seq(y)
    return len(a) + len(b) - 2 * _lcs(a, b)


def is_subsequence(short: Sequence[int], long: Sequence[int]) -> bool:
    it = iter(long)
    return all(a in it for a in short)


def _insertions(words: set, q: int) -> set:
    out = set()
    for w in words:
        for i in range(len(w) + 1):
            head, tail = w[:i], w[i:]
            for a in range(q):
                out.add(head + (a,) + tail)
    return out


def _insertion_ball(x: tuple[int, ...], t: int, q: int) -> set[tuple[int, ...]]:
    ball = {x}
    for _ in range(t):
        ball = _insertions(ball, q)
    return ball


def _deletion_ball(y: tuple[int, ...], t: int) -> set[tuple[int, ...]]:
    keep = len(y) - t
    return {tuple(y[i] for i in idx) for idx in combinations(range(len(y)), keep)}


def _check_enum(z_len: int, t: int, limits: Limits) -> None:
    if z_len > limits.ball_len:
        raise EnumerationCapError("ball enumeration word length", z_len, limits.ball_len)
    if t > limits.ball_radius:
        raise EnumerationCapError("ball enumeration radius", t, limits.ball_radius)


def insertion_ball(
    x: WordLike, t: int, q: Optional[int] = None, limits: Limits = Limits()
) -> set[Word]:
    """All words of length ``|x| + t`` containing ``x`` as a subsequence."""
    if t < 0:
        raise ParameterError(f"t must be nonnegative, got {t}")
    q = _alphabet(x, q=q)
    if q is None:
        raise ParameterError("alphabet size required for a plain sequence")
    _check_enum(len(_seq(x)) + t, t, limits)
    return {Word(w, q) for w in _insertion_ball(_seq(x), t, q)}


def deletion_ball(y: WordLike, t: int, limits: Limits = Limits()) -> set[Word]:
    """All distinct subsequences of ``y`` of length ``|y| - t``."""
    seq = _seq(y)
    if t < 0 or t > len(seq):
        raise ParameterError(f"need 0 <= t <= |y| = {len(seq)}, got t={t}")
    _check_enum(len(seq), t, limits)
    q = y.q if isinstance(y, Word) else (max(seq, default=-1) + 1 or 1)
    return {Word(w, q) for w in _deletion_ball(seq, t)}


def in_fixed_radius_ball(w: WordLike, z: WordLike, s: int, t: int) -> bool:
    """Whether ``w`` is reachable from ``z`` with at most ``s`` insertions and
    at most ``t`` deletions.

    The cheapest route deletes ``|z| - L`` and inserts ``|w| - L`` symbols,
    where ``L = LCS(z, w)``; any other route does at least as many of each.
    """
    _alphabet(w, z)
    a, b = _seq(w), _seq(z)
    common = _lcs(a, b)
    return len(b) - common <= t and len(a) - common <= s


def fixed_radius_ball(
    z: WordLike, s: int, t: int, q: Optional[int] = None, limits: Limits = Limits()
) -> set[Word]:
    """Every word obtainable from ``z`` by at most ``s`` insertions and at
    most ``t`` deletions."""
    if s < 0 or t < 0:
        raise ParameterError(f"s and t must be nonnegative, got s={s}, t={t}")
    q = _alphabet(z, q=q)
    if q is None:
        raise ParameterError("alphabet size required for a plain sequence")
    seq = _seq(z)
    t = min(t, len(seq))
    _check_enum(len(seq) + s, max(s, t), limits)
    out: set[tuple[int, ...]] = set()
    for dels in range(t + 1):
        shortened = _deletion_ball(seq, dels)
        for ins in range(s + 1):
            for base in shortened:
                out |= _insertion_ball(base, ins, q)
    return {Word(w, q) for w in out}


def insertion_ball_size(q: int, n: int, t: int) -> int:
    """Number of words obtained from any length-``n`` word by ``t`` insertions:
    ``sum_{i<=t} C(n+t, i) (q-1)^i``."""
    if q < 1 or n < 0 or t < 0:
        raise ParameterError(f"need q >= 1, n >= 0, t >= 0; got q={q}, n={n}, t={t}")
    return sum(math.comb(n + t, i) * (q - 1) ** i for i in range(t + 1))


def min_levenshtein_distance(code: Union[Code, Iterable[WordLike]]):
    """Minimum pairwise distance; ``math.inf`` for fewer than two words."""
    words = code.words if isinstance(code, Code) else [_seq(w) for w in code]
    best = INFINITE
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            dist = len(words[i]) + len(words[j]) - 2 * _lcs(words[i], words[j])
            if dist < best:
                best = dist
    return best
