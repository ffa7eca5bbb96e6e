"""Large-alphabet codes whose list at a designed center meets the
constant-weight list bound, and the reverse map from a list to supports.

Building an instance: take a maximum family of weight-``t`` supports in
``[n-s+t]`` at distance ``d-2s``, complement it to weight ``n-s``, let the
center ``z`` use ``n-s+t`` distinct symbols, and for each support ``F`` form
``c_F`` = ``s`` copies of a fresh marker symbol followed by ``z`` restricted to
``F``. With ``s = 0`` no markers are needed and ``q >= n + t`` suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import CodeParams, ListParams
from .config import Limits
from .constant_weight import SupportFamily, max_constant_weight_exact
from .errors import AlphabetTooSmallError, ParameterError
from .levenshtein import Code, Word, WordLike, _seq, in_fixed_radius_ball, min_levenshtein_distance


@dataclass(frozen=True)
class TightnessInstance:
    params: CodeParams
    list_params: ListParams
    center: Word
    code: Code
    witness_family: SupportFamily
    markers: dict = field(default_factory=dict, compare=False)  # support -> marker symbol


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __iter__(self):
        return iter(self.checks)


def required_alphabet(p: CodeParams, lp: ListParams, family_size: int) -> int:
    if lp.s == 0:
        return p.n + lp.t
    return p.n - lp.s + lp.t + family_size


def build_tightness_instance(
    p: CodeParams, lp: ListParams, limits: Limits = Limits()
) -> TightnessInstance:
    s, t = lp.s, lp.t
    if s > p.max_s:
        raise ParameterError(f"need s <= floor((d-1)/2) = {p.max_s}, got s={s}")
    m = p.n - s + t
    answer = max_constant_weight_exact(m, p.d - 2 * s, t, limits=limits)
    if not answer.is_exact:
        raise ParameterError(f"A({m},{p.d - 2 * s},{t}) could not be settled exactly")
    required = required_alphabet(p, lp, answer.value)
    if p.q < required:
        raise AlphabetTooSmallError(p.q, required)

    family = answer.witness.complement()
    center = tuple(range(m))
    markers = {}
    words = []
    for k, support in enumerate(family.supports):
        prefix: tuple[int, ...] = ()
        if s > 0:
            markers[support] = m + k
            prefix = (m + k,) * s
        words.append(prefix + tuple(center[i - 1] for i in support))
    return TightnessInstance(p, lp, Word(center, p.q), Code(p.q, p.n, tuple(words)), family, markers)


def verify_tightness_instance(
    inst: TightnessInstance, limits: Limits = Limits()
) -> VerificationReport:
    """Re-derive everything the instance claims from the code and center alone."""
    p, s, t = inst.params, inst.list_params.s, inst.list_params.t
    checks = []

    dmin = min_levenshtein_distance(inst.code)
    checks.append(CheckResult("min_distance", dmin >= p.d, f"min d_L = {dmin}, required {p.d}"))

    outside = [w for w in inst.code.words if not in_fixed_radius_ball(w, inst.center, s, t)]
    checks.append(
        CheckResult(
            "list_membership",
            not outside,
            "all codewords in B_L(z,s,t)" if not outside else f"outside the ball: {outside}",
        )
    )

    answer = max_constant_weight_exact(p.n - s + t, p.d - 2 * s, t, limits=limits)
    checks.append(
        CheckResult(
            "list_size",
            answer.is_exact and len(inst.code) == answer.value,
            f"|C| = {len(inst.code)}, A = {answer.value} ({answer.exactness})",
        )
    )
    return VerificationReport(tuple(checks))


def _leftmost_embedding(z: tuple[int, ...], c: tuple[int, ...]) -> list[int]:
    """Lexicographically smallest set of 0-based positions of ``z`` carrying a
    longest common subsequence of ``z`` and ``c``."""
    nz, nc = len(z), len(c)
    # suffix[i][j] = LCS(z[i:], c[j:])
    suffix = [[0] * (nc + 1) for _ in range(nz + 1)]
    for i in range(nz - 1, -1, -1):
        row, below = suffix[i], suffix[i + 1]
        for j in range(nc - 1, -1, -1):
            if z[i] == c[j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = max(below[j], row[j + 1])
    picked = []
    i = j = 0
    while suffix[i][j] > 0:
        for i2 in range(i, nz):
            try:
                j2 = c.index(z[i2], j)
            except ValueError:
                continue
            if suffix[i2 + 1][j2 + 1] + 1 == suffix[i][j]:
                picked.append(i2)
                i, j = i2 + 1, j2 + 1
                break
    return picked


def encode_list_to_constant_weight(
    z: WordLike, codewords, s: int, t: int
) -> SupportFamily:
    """Map each listed codeword ``c`` to a support ``S_c`` of size ``n - s`` in
    ``[n-s+t]`` such that ``z`` restricted to ``S_c`` is a subsequence of ``c``."""
    zs = _seq(z)
    words = [_seq(c) for c in (codewords.words if isinstance(codewords, Code) else codewords)]
    if not words:
        raise ParameterError("empty list")
    n = len(words[0])
    if len(zs) != n - s + t:
        raise ParameterError(f"center has length {len(zs)}, expected n-s+t = {n - s + t}")
    supports = []
    for c in words:
        if len(c) != n:
            raise ParameterError(f"codeword {c} has length {len(c)}, expected {n}")
        positions = _leftmost_embedding(zs, c)
        if len(positions) < n - s:
            raise ParameterError(f"codeword {c} is not in B_L(z, {s}, {t})")
        supports.append(tuple(i + 1 for i in positions[: n - s]))
    if len(set(supports)) != len(supports):
        raise ParameterError("two codewords share a support; list distance must exceed 2s")
    return SupportFamily(len(zs), n - s, tuple(supports))
