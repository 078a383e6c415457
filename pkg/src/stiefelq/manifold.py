"""Parameter validation and elementary invariants of the frame quotients.

The space under study is the quotient of the complex Stiefel manifold of
unitary k-frames in C^n by the scalar action of the m-th roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ParameterError",
    "ManifoldParams",
    "BasicInvariants",
    "validate",
    "basic_invariants",
]


class ParameterError(ValueError):
    """A rejected user input; ``reason`` is a stable machine-readable code."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class ManifoldParams:
    """The defining triple: k-frames in C^n modulo m-th roots of unity.

    Requires 1 <= k < n and m >= 2.  k = n (the full unitary group quotient)
    and m = 1 (no quotient) are rejected rather than special-cased: the closed
    forms implemented downstream are derived for this range only.
    """

    n: int
    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError("k-too-small", f"k must be >= 1, got {self.k}")
        if self.k >= self.n:
            raise ParameterError(
                "k-not-below-n", f"k must be < n, got k={self.k}, n={self.n}"
            )
        if self.m < 2:
            raise ParameterError("m-too-small", f"m must be >= 2, got {self.m}")

    @property
    def dimension(self) -> int:
        return self.k * (2 * self.n - self.k)


def validate(n: int, k: int, m: int) -> ManifoldParams:
    """Check 1 <= k < n and m >= 2 and return the validated triple."""
    return ManifoldParams(n=n, k=k, m=m)


@dataclass(frozen=True)
class BasicInvariants:
    dimension: int
    pi1_order: int
    euler_characteristic: int
    orientable: bool
    picard_order: int
    almost_complex_guaranteed: bool
    complex_structure_guaranteed: bool


def basic_invariants(params: ManifoldParams) -> BasicInvariants:
    """Dimension, fundamental group, orientability, Picard group, and the
    complex-structure flags.

    The projection from the frame manifold is an m-fold covering, so the
    fundamental group is cyclic of order m and the Euler characteristic is 0;
    the group of isomorphism classes of complex line bundles is cyclic of
    order m, generated by the line bundle of the covering character.  The
    quotient carries an almost complex structure whenever k is even, and an
    integrable complex structure when additionally m divides n.  False means
    "not guaranteed by the implemented criteria", never "does not exist".
    """
    return BasicInvariants(
        dimension=params.dimension,
        pi1_order=params.m,
        euler_characteristic=0,
        orientable=True,
        picard_order=params.m,
        almost_complex_guaranteed=params.k % 2 == 0,
        complex_structure_guaranteed=params.k % 2 == 0 and params.n % params.m == 0,
    )
