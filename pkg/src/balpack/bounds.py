"""Exact counting bounds for balanced families with t-bounded intersections.

Everything here is big-int / Fraction arithmetic; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import NamedTuple

from .core import PreconditionViolated

__all__ = [
    "lemma1_bound",
    "corollary_bound",
    "SteinerSize",
    "steiner_size",
    "GapResult",
    "theorem1_gap",
]


def lemma1_bound(t: int, k: int, p_plus: int, p_minus: int) -> int:
    """Counting bound for a balanced family with blocks of size k over a
    ground set with p_plus positive and p_minus negative points.

    floor( C(p+, floor(t/2)) * C(p-, ceil(t/2))
           / (C(ceil(k/2), floor(t/2)) * C(floor(k/2), ceil(t/2))) )
    """
    if t < 1 or t >= k:
        raise PreconditionViolated(f"need 1 <= t < k, got t={t}, k={k}")
    if p_minus < 0:
        raise PreconditionViolated("p_minus must be >= 0")
    if p_plus < 2 * ((t + 2) // 2):
        raise PreconditionViolated(
            f"need p_plus >= {2 * ((t + 2) // 2)} for t={t}, got {p_plus}"
        )
    t_lo, t_hi = t // 2, (t + 1) // 2
    num = comb(p_plus, t_lo) * comb(p_minus, t_hi)
    den = comb((k + 1) // 2, t_lo) * comb(k // 2, t_hi)
    return num // den


def corollary_bound(t: int, k: int, v: int) -> int:
    """``lemma1_bound`` at the balanced split p+ = ceil(v/2), p- = floor(v/2)."""
    return lemma1_bound(t, k, (v + 1) // 2, v // 2)


class SteinerSize(NamedTuple):
    size: Fraction
    integral: bool


def steiner_size(t: int, k: int, v: int) -> SteinerSize:
    """Block count C(v,t)/C(k,t) of a hypothetical S(t,k,v), kept exact."""
    if not 1 <= t <= k <= v:
        raise PreconditionViolated(f"need 1 <= t <= k <= v, got ({t},{k},{v})")
    size = Fraction(comb(v, t), comb(k, t))
    return SteinerSize(size, size.denominator == 1)


class GapResult(NamedTuple):
    bound: int
    steiner: Fraction
    strict: bool


def theorem1_gap(t: int, k: int, v: int) -> GapResult:
    """Balanced-family ceiling vs. the unrestricted Steiner count.

    ``strict`` records that the balance requirement genuinely costs blocks:
    the balanced bound falls strictly below the Steiner size.
    """
    if not (t < k < v) or v <= 2:
        raise PreconditionViolated(f"need t < k < v and v > 2, got ({t},{k},{v})")
    if 2 * ((v + 1) // 2) <= k + 1:
        raise PreconditionViolated("need ceil(v/2) > (k+1)/2")
    bound = corollary_bound(t, k, v)
    steiner = steiner_size(t, k, v).size
    return GapResult(bound, steiner, bound < steiner)
