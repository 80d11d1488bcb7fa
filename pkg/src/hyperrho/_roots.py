"""Scalar root bracketing by bisection."""

from __future__ import annotations

from typing import Callable


def bisect(f: Callable[[float], float], lo: float, hi: float, max_steps: int = 400) -> float:
    """Root of ``f`` in ``[lo, hi]`` given ``f(lo) <= 0 <= f(hi)``.

    Halves until the midpoint no longer differs from an endpoint, i.e. to
    full double precision.
    """
    flo, fhi = f(lo), f(hi)
    if flo > 0 or fhi < 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    for _ in range(max_steps):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if fm < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def expand_upper(f: Callable[[float], float], start: float, limit: float = 1e300) -> float:
    """Double ``start`` until ``f`` becomes positive."""
    hi = start
    while f(hi) <= 0:
        hi *= 2.0
        if hi > limit:
            raise ValueError("failed to bracket a root")
    return hi
