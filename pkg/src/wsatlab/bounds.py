"""Closed-form known values and bounds for wsat(n, K_{s,t}), plus the
auxiliary counting bounds the search engine prunes with.

`known_wsat` intersects every clause applicable to (n, s, t); the interval
shape is universal because the n = s+t+1, gcd(s,t) > 1 case is genuinely
two-valued.  A contradictory intersection can only come from a transcription
bug and raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb, gcd


@dataclass(frozen=True)
class WsatBound:
    n: int
    s: int
    t: int
    lower: int
    upper: int
    exact: bool
    sources: tuple[str, ...]


def _clauses(n: int, s: int, t: int):
    """Yield (lower, upper, tag) for every applicable piecewise rule."""
    if s == 1 and n >= t + 1:
        value = comb(t, 2)
        yield value, value, "star"
    if s == 2:
        if t == 2 and n > 4:
            yield n, n, "k22"
        if t >= 3 and n > t + 2:
            base = comb(t, 2)
            if n >= 2 * t - 1 or (t % 2 == 1 and n <= 2 * t - 2):
                yield n - 2 + base, n - 2 + base, "k2t"
            else:
                yield n - 1 + base, n - 1 + base, "k2t"
    if n == s + t and s >= 1:
        value = comb(s + t - 1, 2) + (0 if gcd(s, t) == 1 else 1)
        yield value, value, "n=s+t"
    if n == s + t + 1 and s > 2:
        if s == t:
            value = comb(2 * s + 1, 2) - (4 * s - 4)
            yield value, value, "n=s+t+1 balanced"
        elif gcd(s, t) == 1:
            value = comb(n, 2) - (2 * s + 2 * t - 2)
            yield value, value, "n=s+t+1 coprime"
        else:
            hi = comb(n, 2) - (2 * s + 2 * t - 3)
            lo = comb(n, 2) - (2 * s + 2 * t - 2)
            yield lo, hi, "n=s+t+1 interval"
    j = n - s - t
    if s > 2 and 2 <= j < t - 2:
        yield 0, comb(n, 2) - j * (s + t - 2) - 2 * t + 3, "mid-range upper"
        if j == 2:
            yield comb(n, 2) - 4 * (s + t) + 1, comb(n, 2), "mid-range j=2 lower"
        if 3 <= j and Fraction(j) <= Fraction(2, 3) * (s + t) - Fraction(5, 3):
            lo = comb(n, 2) - Fraction(19, 12) * (j + 1) * (s + t - 1)
            yield ceil(lo), comb(n, 2), "mid-range connectivity lower"
    if s == t and s >= 2 and n >= 3 * s - 3:
        value = (s - 1) * (n + 1) - s * (s - 1) // 2
        yield value, value, "balanced large-n"
    if t == s + 1 and s >= 2 and n >= 3 * s - 3:
        value = (s - 1) * (n + 1) - s * (s - 1) // 2 + 1
        yield value, value, "near-balanced large-n"
    if 2 <= s < t:
        if n >= 2 * (s + t) - 3:
            yield 0, (s - 1) * (n - s) + t * (t - 1) // 2, "asymmetric large-n upper"
        if n >= 3 * t - 3:
            yield (s - 1) * (n - t + 1) + t * (t - 1) // 2, comb(n, 2), "asymmetric large-n lower"


def known_wsat(n: int, s: int, t: int) -> WsatBound:
    """Tightest piecewise bound for wsat(n, K_{s,t}); exact when the interval
    collapses.  Falls back to the trivial interval when no clause applies."""
    if not 1 <= s <= t:
        raise ValueError("need 1 <= s <= t")
    if n < s + t:
        raise ValueError("need n >= s+t")
    lower, upper = 0, comb(n, 2)
    sources: list[str] = []
    for lo, hi, tag in _clauses(n, s, t):
        lower = max(lower, lo)
        upper = min(upper, hi)
        sources.append(tag)
    if not sources:
        lower, upper = max(lower, n - 1), upper
        sources.append("trivial")
    if lower > upper:
        raise AssertionError(
            f"inconsistent bound clauses for (n,s,t)=({n},{s},{t}):"
            f" [{lower},{upper}] from {sources}"
        )
    return WsatBound(n, s, t, lower, upper, lower == upper, tuple(sources))


def fj_alpha_beta(j: int) -> tuple[int, int]:
    alpha = comb(j + 1, 2) + 1
    return alpha, alpha * j + 1


def fj_bound(j: int, k: int) -> int:
    """Maximum edge count of a j-erasable graph with k non-isolated vertices:
    exactly C(k,2) up to k = j+2, and the linear bound alpha*k - beta beyond,
    with alpha = C(j+1,2)+1 and beta = alpha*j + 1."""
    if j < 2:
        raise ValueError("need j >= 2")
    if k < j + 1:
        raise ValueError("need k >= j+1")
    if k <= j + 2:
        return comb(k, 2)
    alpha, beta = fj_alpha_beta(j)
    return alpha * k - beta


@lru_cache(maxsize=None)
def fj_recursive(j: int, k: int) -> int:
    """Closure of the breakdown recursion: a j-erase step splits the
    non-isolated support of sizes k into overlapping halves k1 + k2 = k + j,
    so  f(k) <= 1 + max f(k1) + f(k2)  over j+1 <= k1, k2 <= k-1.  Evaluating
    the recursion exactly cross-checks the closed form in `fj_bound`."""
    if j < 2 or k < j + 1:
        raise ValueError("out of range")
    if k <= j + 2:
        return comb(k, 2)
    best = 0
    for k1 in range(j + 1, k):
        k2 = k + j - k1
        if not j + 1 <= k2 <= k - 1:
            continue
        best = max(best, fj_recursive(j, k1) + fj_recursive(j, k2))
    return 1 + best


def q_step_bound(n: int, f0: int, c0: int) -> int:
    """Maximum number of erase steps compatible with the semi-invariant:
    2n - (f0 + 2*c0), from s_final = 2n and a rise of at least 1 per step."""
    if f0 < 0 or not 1 <= c0 <= n:
        raise ValueError("need f0 >= 0 and 1 <= c0 <= n")
    return max(0, 2 * n - (f0 + 2 * c0))
