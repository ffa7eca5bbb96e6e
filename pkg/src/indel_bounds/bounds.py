"""Finite-length upper bounds for insertion/deletion codes.

Every bound returns a :class:`BoundValue` holding an exact ``Fraction``.
``exactness`` says whether that value is the closed form itself (``exact``)
or has had a constant-weight factor replaced by an upper bound.
A failed hypothesis is reported as ``applicable=False`` rather than raised,
so sweeps can skip it. Floors are left to callers comparing with
cardinalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .config import Limits
from .constant_weight import EXACT, UPPER, cw_upper_bound, johnson_ratio, max_constant_weight_exact
from .errors import ParameterError
from .levenshtein import insertion_ball_size

MODES = ("exact", "upper", "johnson")


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    d: int

    def __post_init__(self):
        if self.q < 2 or self.n < 1:
            raise ParameterError(f"need q >= 2 and n >= 1, got q={self.q}, n={self.n}")
        if not 1 <= self.d <= 2 * self.n:
            raise ParameterError(f"need 1 <= d <= 2n, got d={self.d}, n={self.n}")

    @property
    def max_s(self) -> int:
        """Largest admissible insertion count, floor((d-1)/2)."""
        return (self.d - 1) // 2


@dataclass(frozen=True)
class ListParams:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 0 or self.t < 0:
            raise ParameterError(f"s and t must be nonnegative, got s={self.s}, t={self.t}")


@dataclass(frozen=True)
class BoundValue:
    source: str
    applicable: bool
    value: Optional[Fraction]
    exactness: str = EXACT
    params: dict = field(default_factory=dict, compare=False)

    def to_record(self) -> dict:
        rec = {
            "bound": self.source,
            "applicable": self.applicable,
            "value_num": None,
            "value_den": None,
            "value": None,
            "decimal": None,
            "exactness": self.exactness,
            "params": dict(self.params),
        }
        if self.value is not None:
            rec.update(
                value_num=self.value.numerator,
                value_den=self.value.denominator,
                value=f"{self.value.numerator}/{self.value.denominator}",
                decimal=float(self.value),
            )
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "BoundValue":
        value = None
        if rec.get("value_num") is not None:
            value = Fraction(rec["value_num"], rec["value_den"])
        return cls(rec["bound"], rec["applicable"], value, rec["exactness"], dict(rec["params"]))


def _params(p: CodeParams, **extra) -> dict:
    return {"q": p.q, "n": p.n, "d": p.d, **extra}


def _inapplicable(source: str, p: CodeParams, **extra) -> BoundValue:
    return BoundValue(source, False, None, UPPER, _params(p, **extra))


def trivial_bound(p: CodeParams) -> BoundValue:
    return BoundValue("trivial", True, Fraction(p.q**p.n), EXACT, _params(p))


def hy_list_bound(p: CodeParams, lp: ListParams) -> BoundValue:
    """Johnson-type list-size bound
    ``(n-s+t)(d-2s) / ((n-s+t)(d-2s) - 2t(n-s))``.

    Applicable iff ``d > 2s + 2t(n-s)/(n-s+t)``, which after multiplying
    through by ``n-s+t`` is positivity of the denominator.
    """
    n, d, s, t = p.n, p.d, lp.s, lp.t
    m = n - s + t
    if s > n or m == 0:
        return _inapplicable("hy_list", p, s=s, t=t)
    num = m * (d - 2 * s)
    denom = num - 2 * t * (n - s)
    if denom <= 0:
        return _inapplicable("hy_list", p, s=s, t=t)
    return BoundValue("hy_list", True, Fraction(num, denom), EXACT, _params(p, s=s, t=t))


def _cw_factor(n: int, d: int, w: int, mode: str, limits: Limits, node_limit: Optional[int]):
    """``A(n, d, w)`` (or a bound on it) as ``(Fraction, exactness, method)``."""
    if mode == "exact":
        ans = max_constant_weight_exact(n, d, w, node_limit=node_limit, limits=limits)
        if ans.is_exact:
            return Fraction(ans.value), EXACT, ans.method
        return Fraction(ans.upper), UPPER, ans.method
    if mode == "upper":
        kw = {} if node_limit is None else {"node_limit": node_limit}
        ans = cw_upper_bound(n, d, w, limits=limits, **kw)
        return Fraction(ans.value), ans.exactness if ans.exactness == EXACT else UPPER, ans.method
    if mode == "johnson":
        ratio = johnson_ratio(n, d, w)
        return ratio, UPPER, "johnson"
    raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")


def main_johnson_list_bound(
    p: CodeParams,
    lp: ListParams,
    mode: str = "exact",
    limits: Limits = Limits(),
    node_limit: Optional[int] = None,
) -> BoundValue:
    """List size bound ``|B_L(z,s,t) & C| <= A(n-s+t, d-2s, t)``.

    ``mode`` picks how the constant-weight factor is evaluated: ``exact``
    search, best ``upper`` bound, or the unfloored ``johnson`` ratio.
    """
    s, t = lp.s, lp.t
    if s > p.max_s:
        return _inapplicable("main_johnson_list", p, s=s, t=t, mode=mode)
    value, exactness, method = _cw_factor(p.n - s + t, p.d - 2 * s, t, mode, limits, node_limit)
    if value is None:
        return _inapplicable("main_johnson_list", p, s=s, t=t, mode=mode)
    return BoundValue(
        "main_johnson_list", True, value, exactness, _params(p, s=s, t=t, mode=mode, cw_method=method)
    )


def yasunaga_elias_bound(p: CodeParams, t: int) -> BoundValue:
    """``((n+t)d / ((n+t)d - 2nt)) * q^(n+t) / I_q(n, t)`` for ``t < nd/(2n-d)``."""
    q, n, d = p.q, p.n, p.d
    if d >= 2 * n or t < 0 or t * (2 * n - d) >= n * d:
        return _inapplicable("yasunaga_elias", p, t=t)
    num = (n + t) * d
    factor = Fraction(num, num - 2 * n * t)
    value = factor * Fraction(q ** (n + t), insertion_ball_size(q, n, t))
    return BoundValue("yasunaga_elias", True, value, EXACT, _params(p, t=t))


def main_elias_bound(
    p: CodeParams,
    lp: ListParams,
    mode: str = "exact",
    limits: Limits = Limits(),
    node_limit: Optional[int] = None,
) -> BoundValue:
    """``A(n-s+t, d-2s, t) * q^(n-s+t) / I_q(n-s, t)``."""
    s, t = lp.s, lp.t
    if s > p.max_s:
        return _inapplicable("main_elias", p, s=s, t=t, mode=mode)
    factor, exactness, method = _cw_factor(p.n - s + t, p.d - 2 * s, t, mode, limits, node_limit)
    if factor is None:
        return _inapplicable("main_elias", p, s=s, t=t, mode=mode)
    m = p.n - s + t
    value = factor * Fraction(p.q**m, insertion_ball_size(p.q, p.n - s, t))
    return BoundValue(
        "main_elias", True, value, exactness, _params(p, s=s, t=t, mode=mode, cw_method=method)
    )


def shortened_sphere_packing(p: CodeParams, lp: ListParams) -> BoundValue:
    """``q^(n-s+t) / I_q(n-s, t)`` for ``s + t <= floor((d-1)/2)``."""
    s, t = lp.s, lp.t
    if s + t > p.max_s:
        return _inapplicable("shortened_sphere_packing", p, s=s, t=t)
    value = Fraction(p.q ** (p.n - s + t), insertion_ball_size(p.q, p.n - s, t))
    return BoundValue("shortened_sphere_packing", True, value, EXACT, _params(p, s=s, t=t))


def singleton_bound(p: CodeParams) -> BoundValue:
    """``q^(n - ceil(d/2) + 1)``."""
    return BoundValue("singleton", True, Fraction(p.q ** (p.n - (p.d + 1) // 2 + 1)), EXACT, _params(p))


def sphere_packing_bound(p: CodeParams) -> BoundValue:
    """``q^(n+r) / I_q(n, r)`` with ``r = floor((d-1)/2)``."""
    r = p.max_s
    value = Fraction(p.q ** (p.n + r), insertion_ball_size(p.q, p.n, r))
    return BoundValue("sphere_packing", True, value, EXACT, _params(p))


@dataclass(frozen=True)
class BestBound:
    bound: BoundValue
    s: Optional[int]
    t: Optional[int]
    trivial: bool = False


def best_bound(
    p: CodeParams,
    s_range: Optional[Iterable[int]] = None,
    t_range: Optional[Iterable[int]] = None,
    mode: str = "upper",
    limits: Limits = Limits(),
    node_limit: Optional[int] = 20_000,
) -> BestBound:
    """Smallest applicable cardinality bound over the ``(s, t)`` grid.

    Candidates are the constant-weight Elias bound, Yasunaga's bound (``s=0``)
    and the shortened sphere-packing bound. Ties keep the lexicographically
    smallest ``(s, t)``. Falls back to ``q^n`` when nothing applies.
    """
    s_values = sorted(set(range(p.max_s + 1) if s_range is None else s_range))
    t_values = sorted(set(range(2 * p.n + 1) if t_range is None else t_range))
    best: Optional[BestBound] = None
    for s in s_values:
        for t in t_values:
            lp = ListParams(s, t)
            candidates = [main_elias_bound(p, lp, mode, limits, node_limit)]
            if s == 0:
                candidates.append(yasunaga_elias_bound(p, t))
            candidates.append(shortened_sphere_packing(p, lp))
            for bound in candidates:
                if bound.applicable and (best is None or bound.value < best.bound.value):
                    best = BestBound(bound, s, t)
    if best is None:
        return BestBound(trivial_bound(p), None, None, trivial=True)
    return best
