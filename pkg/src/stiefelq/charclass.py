"""Pontrjagin and Stiefel-Whitney classes of the frame quotients.

The stable tangent bundle is nk copies of the dual covering line bundle, so
the total Pontrjagin class is (1 + y^2)^(nk) for the degree-2 class y and the
total Stiefel-Whitney class is (1 + x^2)^(nk) for the degree-1 mod-2 class x.
Each term is a binomial coefficient times a power whose additive order the
torsion module knows; a term vanishes exactly when the order divides the
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from stiefelq.arith import binomial, binomial_mod
from stiefelq.manifold import ManifoldParams
from stiefelq.modp import truncation_exponent
from stiefelq.torsion import torsion_order

__all__ = [
    "PontrjaginTerm",
    "StiefelWhitneyTerm",
    "CharClassReport",
    "pontrjagin_class",
    "stiefel_whitney_classes",
    "char_class_report",
]


@dataclass(frozen=True)
class PontrjaginTerm:
    """The degree-4j term: raw_coefficient C(nk, j) on the 2j-th power of the
    degree-2 class, whose additive order is ``modulus``."""

    j: int
    raw_coefficient: int
    modulus: int
    reduced: int
    is_zero: bool


@dataclass(frozen=True)
class StiefelWhitneyTerm:
    degree: int
    present: bool


@dataclass(frozen=True)
class CharClassReport:
    pontrjagin: tuple[PontrjaginTerm, ...]
    stiefel_whitney: tuple[StiefelWhitneyTerm, ...]
    all_pontrjagin_vanish: bool
    all_sw_vanish: bool


def pontrjagin_class(params: ManifoldParams, j: int) -> PontrjaginTerm:
    """The j-th Pontrjagin term.  Powers of the degree-2 class beyond the n-th
    are zero, so for 2j > n the modulus is 1 and the term vanishes outright."""
    if j < 1:
        raise ValueError(f"index j must be >= 1, got {j}")
    raw = binomial(params.n * params.k, j)
    if 2 * j <= params.n:
        modulus = torsion_order(params, 2 * j)
    else:
        modulus = 1
    reduced = raw % modulus
    return PontrjaginTerm(
        j=j,
        raw_coefficient=raw,
        modulus=modulus,
        reduced=reduced,
        is_zero=(modulus == 1 or reduced == 0),
    )


def stiefel_whitney_classes(params: ManifoldParams) -> tuple[StiefelWhitneyTerm, ...]:
    """Even-degree Stiefel-Whitney terms.

    For odd m the degree-1 class is zero; for m = 0 (mod 4) its square is
    zero.  Either way the total class is 1 and the list is empty.  For
    m = 2 (mod 4) the term in degree 2j lives below the mod-2 truncation
    degree and is present iff C(nk, j) is odd.
    """
    m = params.m
    if m % 2 == 1 or m % 4 == 0:
        return ()
    nk = params.n * params.k
    bound = 2 * truncation_exponent(params.n, params.k, 2)
    terms = []
    for j in range(1, (bound + 1) // 2):  # exactly the range 2j < bound
        terms.append(
            StiefelWhitneyTerm(degree=2 * j, present=binomial_mod(nk, j, 2) == 1)
        )
    return tuple(terms)


def char_class_report(params: ManifoldParams) -> CharClassReport:
    """All Pontrjagin terms for 1 <= j <= n/2 (the rest vanish outright) plus
    the Stiefel-Whitney terms and the two summary flags."""
    pont = tuple(pontrjagin_class(params, j) for j in range(1, params.n // 2 + 1))
    sw = stiefel_whitney_classes(params)
    return CharClassReport(
        pontrjagin=pont,
        stiefel_whitney=sw,
        all_pontrjagin_vanish=all(t.is_zero for t in pont),
        all_sw_vanish=not any(t.present for t in sw),
    )
