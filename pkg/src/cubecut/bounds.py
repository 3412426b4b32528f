"""Closed forms and bounds for the cyclic cutwidth and wirelength of Q_n."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import ceil

from .hypercube import GuardError
from .isoperimetric import theta_recursive
from .splits import min_diameter_crossings, theorem_lower_bound


def _need(n: int, low: int) -> None:
    if n < low:
        raise GuardError(f"n must be >= {low}, got {n}")


def ct_value(n: int) -> int:
    """floor(5 * 2^(n-2) / 3), the conjectured cyclic cutwidth of Q_n."""
    _need(n, 2)
    return 5 * (1 << (n - 2)) // 3


def cwl_closed_form(n: int) -> int:
    _need(n, 1)
    if n == 1:
        return 1
    return (1 << (2 * n - 2)) + (1 << (2 * n - 3)) - (1 << (n - 1))


def _odd_sum(top: int) -> int:
    return sum(range(1, top + 1, 2))


def cwl_by_summation(n: int) -> int:
    """Wire-length tally of the Gray layout, group by group.

    Four copies of the odd lengths below 2^(n-1), then 2^j copies of the odd
    lengths below 2^(n-j) for j = 2 .. n-1.
    """
    _need(n, 2)
    total = 4 * _odd_sum((1 << (n - 1)) - 1)
    for j in range(2, n):
        total += (1 << j) * _odd_sum((1 << (n - j)) - 1)
    return total


def cwl_ratio_bound(n: int) -> Fraction:
    """cwl(Q_n) / 2^n = 2^(n-2) + 2^(n-3) - 1/2 as an exact rational."""
    _need(n, 2)
    return Fraction(cwl_closed_form(n), 1 << n)


def lower_bound_from_cwl(n: int) -> int:
    return ceil(cwl_ratio_bound(n))


def lcw_value(n: int) -> int:
    _need(n, 1)
    return max(theta_recursive(n, ell) for ell in range((1 << n) + 1))


def bound_9_16(n: int) -> int:
    _need(n, 2)
    return 9 * lcw_value(n) // 16


def bound_5_8(n: int) -> int:
    _need(n, 2)
    return 5 * lcw_value(n) // 8


def cwl_threshold(n: int) -> int:
    """The wirelength that would force the conjectured cutwidth by averaging."""
    _need(n, 2)
    return (1 << n) * (theorem_lower_bound(n) - 1)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    ct_value: int
    cwl_closed: int
    cwl_summed: int
    lcw_value: int
    lower_from_cwl: int
    lower_from_cwl_exact: str
    lower_half_lcw: int
    lower_9_16: int
    upper_5_8: int
    theorem_bound: int
    diameter_crossings: int
    cwl_threshold: int
    cwl_exceeds_threshold: bool
    chain_holds: bool
    theorem_matches_ct: bool

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(n: int) -> BoundsReport:
    _need(n, 2)
    ct = ct_value(n)
    lcw = lcw_value(n)
    lower_cwl = lower_bound_from_cwl(n)
    half_lcw = -(-lcw // 2)
    upper = bound_5_8(n)
    theorem = theorem_lower_bound(n)
    crossings = min_diameter_crossings(n)
    threshold = cwl_threshold(n)
    cwl = cwl_closed_form(n)
    return BoundsReport(
        n=n,
        ct_value=ct,
        cwl_closed=cwl,
        cwl_summed=cwl_by_summation(n),
        lcw_value=lcw,
        lower_from_cwl=lower_cwl,
        lower_from_cwl_exact=str(cwl_ratio_bound(n)),
        lower_half_lcw=half_lcw,
        lower_9_16=bound_9_16(n),
        upper_5_8=upper,
        theorem_bound=theorem,
        diameter_crossings=crossings,
        cwl_threshold=threshold,
        cwl_exceeds_threshold=cwl > threshold,
        chain_holds=max(half_lcw, lower_cwl) <= ct <= upper,
        theorem_matches_ct=-(-crossings // 2) == theorem == ct,
    )
