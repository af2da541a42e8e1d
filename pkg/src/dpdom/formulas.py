"""Closed-form values, bounds and infinity criteria.

All decision logic uses integers or :class:`fractions.Fraction`; nothing
here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .distance import DistanceOracle, radius_and_diameter
from .errors import InvalidParameter, NotApplicable
from .values import INF, ExtNat, Params


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def formula_path(n: int, params: Params) -> ExtNat:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    k = 2 * params.d + 1
    if n <= k:
        return 1
    if params.p >= k:
        return INF
    return ceil_div(n, k)


def formula_cycle(n: int, params: Params) -> ExtNat:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    k = 2 * params.d + 1
    if n <= k:
        return 1
    if params.p >= k:
        return INF
    q = ceil_div(n, k)
    return q if Fraction(n, params.p + 1) >= q else INF


def formula_grid(m: int, n: int, params: Params) -> int:
    if m < 1 or n < 1:
        raise InvalidParameter(f"grid needs m, n >= 1, got {m}x{n}")
    if params.p > 2 * params.d:
        raise NotApplicable(f"grid formula needs p <= 2d (d={params.d}, p={params.p})")
    k = 2 * params.d + 1
    return ceil_div(m, k) * ceil_div(n, k)


def formula_prism(m: int, n: int, params: Params) -> int:
    """Value on P_m x C_n (path first, cycle second)."""
    if m < 1:
        raise InvalidParameter(f"prism needs m >= 1, got {m}")
    if params.p > 2 * params.d:
        raise NotApplicable(f"prism formula needs p <= 2d (d={params.d}, p={params.p})")
    if formula_cycle(n, params) is INF:
        raise NotApplicable(f"cycle C_{n} has infinite value for d={params.d}, p={params.p}")
    k = 2 * params.d + 1
    return ceil_div(m, k) * ceil_div(n, k)


def product_upper_bound(a: ExtNat, b: ExtNat) -> ExtNat:
    if a is INF or b is INF:
        return INF
    return a * b


def torus_lower_bound(m: int, n: int, params: Params) -> int:
    """Row-counting lower bound on C_m x C_n, taken in both orientations."""
    if m < 3 or n < 3:
        raise InvalidParameter(f"torus needs m, n >= 3, got {m}x{n}")
    k = 2 * params.d + 1

    def one_way(a, b):
        x = ceil_div(a, k) * Fraction(b, k)
        return ceil_div(x.numerator, x.denominator)

    return max(one_way(m, n), one_way(n, m))


def torus_equality_cases(m: int, n: int, params: Params) -> int | None:
    """Exact value of C_m x C_n when the counting bound meets the product bound.

    Returns None when neither sufficient condition applies (no claim).
    """
    if m < 3 or n < 3:
        raise InvalidParameter(f"torus needs m, n >= 3, got {m}x{n}")
    if formula_cycle(m, params) is INF or formula_cycle(n, params) is INF:
        return None
    k = 2 * params.d + 1
    for a, b in ((m, n), (n, m)):
        r = b % k
        if r == 0 or (1 - Fraction(r, k)) * ceil_div(a, k) < 1:
            return ceil_div(m, k) * ceil_div(n, k)
    return None


def torus_infinity_test(m: int, n: int, params: Params) -> bool:
    if m < 3 or n < 3:
        raise InvalidParameter(f"torus needs m, n >= 3, got {m}x{n}")
    return formula_cycle(m, params) is INF or formula_cycle(n, params) is INF


def shortcut_value(oracle: DistanceOracle, params: Params) -> ExtNat | None:
    """1 if the radius is at most d, INF if it exceeds d while p >= 2d + 1."""
    if not oracle.connected:
        return None
    rad, _ = radius_and_diameter(oracle)
    if rad <= params.d:
        return 1
    if params.p >= 2 * params.d + 1:
        return INF
    return None


# certificates matching the path and cycle formulas

def path_certificate(n: int, params: Params) -> list[int]:
    """Centres spaced exactly ``2d + 1`` apart, shifted so both ends are covered."""
    value = formula_path(n, params)
    if value is INF:
        raise NotApplicable(f"P_{n} has infinite value for d={params.d}, p={params.p}")
    k = 2 * params.d + 1
    if value == 1:
        return [(n - 1) // 2]
    shift = max(0, n - 1 - params.d - (value - 1) * k)
    return [i * k + shift for i in range(value)]


def cycle_certificate(n: int, params: Params) -> list[int]:
    """``q`` centres spread as evenly as possible around C_n."""
    value = formula_cycle(n, params)
    if value is INF:
        raise NotApplicable(f"C_{n} has infinite value for d={params.d}, p={params.p}")
    return [i * n // value for i in range(value)]
