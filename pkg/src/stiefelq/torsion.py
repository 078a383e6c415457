"""Torsion of the degree-2 integral cohomology class.

The quotient carries a distinguished degree-2 class y generating a cyclic
summand of order m.  The order of y^r is

    m                                   for 1 <= r <= n - k,
    gcd(m, C(n, j) : n - k < j <= r)    for n - k < r <= n,

and these orders come out of the transgression in the spectral sequence of
the relevant circle bundle: the odd generator of degree 2(n - k) + 2j - 1
transgresses onto C(n, k - j) times the (n - k + j)-th power of y.

The height of y is the largest r with y^r nonzero, always between n - k and
n - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from stiefelq.arith import (
    binomial,
    factorize,
    gcd_with_binomials,
    padic_valuation_binomial,
)
from stiefelq.manifold import ManifoldParams

__all__ = [
    "TorsionProfile",
    "torsion_order",
    "torsion_profile",
    "torsion_profile_via_valuations",
    "order_of_power",
    "transgression_coefficient",
]


@dataclass(frozen=True)
class TorsionProfile:
    """orders[r - 1] is the additive order of the r-th power of the degree-2
    class, r = 1..n; height is the largest r whose order exceeds 1."""

    orders: tuple[int, ...]
    height: int

    def order(self, r: int) -> int:
        if not 1 <= r <= len(self.orders):
            raise ValueError(f"power index r must lie in [1, {len(self.orders)}], got {r}")
        return self.orders[r - 1]


def _check_power_index(params: ManifoldParams, r: int) -> None:
    if not 1 <= r <= params.n:
        raise ValueError(f"power index r must lie in [1, {params.n}], got {r}")


def torsion_order(params: ManifoldParams, r: int) -> int:
    """Order of the r-th power of the degree-2 class, straight from the gcd
    definition (no incremental state)."""
    _check_power_index(params, r)
    window_start = params.n - params.k
    if r <= window_start:
        return params.m
    return gcd_with_binomials(params.m, params.n, window_start, r)


def torsion_profile(params: ManifoldParams) -> TorsionProfile:
    """All n orders at once, sharing one incremental gcd along the window."""
    n, k, m = params.n, params.k, params.m
    orders = [m] * (n - k)
    g = m
    for r in range(n - k + 1, n + 1):
        g = math.gcd(g, binomial(n, r))
        orders.append(g)
    return TorsionProfile(orders=tuple(orders), height=_height(orders))


def torsion_profile_via_valuations(params: ManifoldParams) -> TorsionProfile:
    """Fast path to the same profile through p-adic valuations.

    For each prime power p^e dividing m the p-part of the order at r is
    p^min(e, v_p(C(n, j)) : n - k < j <= r), and the valuations are carry
    counts, so the exact binomials are never formed.  Primes whose running
    minimum hits 0 stop contributing and are dropped.
    """
    n, k, m = params.n, params.k, params.m
    orders = [m] * (n - k)
    active = {p: e for p, e in factorize(m)}
    value = m
    for r in range(n - k + 1, n + 1):
        for p in list(active):
            v = padic_valuation_binomial(n, r, p)
            if v < active[p]:
                value //= p ** (active[p] - v)
                if v == 0:
                    del active[p]
                else:
                    active[p] = v
        orders.append(value)
    return TorsionProfile(orders=tuple(orders), height=_height(orders))


def _height(orders: list[int]) -> int:
    # orders[n - k - 1] = m >= 2, so the maximum below exists.
    return max(r for r, o in enumerate(orders, start=1) if o > 1)


def order_of_power(params: ManifoldParams, r: int) -> int:
    """Profile-backed accessor for the order of the r-th power."""
    _check_power_index(params, r)
    return torsion_profile(params).order(r)


def transgression_coefficient(params: ManifoldParams, j: int) -> int:
    """C(n, k - j): the multiple of the (n - k + j)-th power of the degree-2
    class hit by the transgression of the j-th odd generator, 1 <= j <= k."""
    if not 1 <= j <= params.k:
        raise ValueError(f"generator index j must lie in [1, {params.k}], got {j}")
    return binomial(params.n, params.k - j)
