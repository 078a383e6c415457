"""Mod-p cohomology presentations of the frame quotients.

For a prime p the additive structure takes one of four shapes, decided by how
p meets m:

  COPRIME         p does not divide m.  The quotient map is a mod-p
                  equivalence, so the answer is the frame manifold's own
                  cohomology: an exterior-style algebra on odd-degree
                  generators v_d for d = 2n-2k+1, 2n-2k+3, ..., 2n-1.
  ODD_DIVIDES     p odd, p | m.  Truncated polynomial algebra on the degree-2
                  class, tensor an exterior part on the degree-1 class and
                  the odd run with one degree omitted.
  TWO_MOD_FOUR    p = 2, m = 2 (mod 4).  The degree-1 class itself generates
                  a truncated polynomial algebra (its square is the degree-2
                  class), tensor the reduced odd run.
  ZERO_MOD_FOUR   p = 2, m = 0 (mod 4).  Shaped like ODD_DIVIDES over Z_2;
                  the square of the degree-1 class is zero.

The truncation exponent of the degree-2 class is the least j in [n-k+1, n]
with C(n, j) nonzero mod p; it always exists because C(n, n) = 1.  Twice it
minus one is the odd degree omitted from the exterior run, and twice it is
the truncation of the degree-1 generator in the TWO_MOD_FOUR case.

For p = 2 the exterior parts describe an additive (square-free monomial)
basis; no product structure beyond the recorded square rule is claimed.

The formulas are established for 2 <= k < n.  k = 1 is accepted here because
they then reduce to the classical lens-space answer, but reports flag those
results as extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from stiefelq.arith import binomial_mod, is_prime
from stiefelq.manifold import ManifoldParams

__all__ = [
    "CohomologyCase",
    "SquareRule",
    "PolyGenerator",
    "RingPresentation",
    "truncation_exponent",
    "classify",
    "presentation",
    "poincare_polynomial",
    "betti_mod_p",
    "total_dimension",
]


class CohomologyCase(Enum):
    COPRIME = "COPRIME"
    ODD_DIVIDES = "ODD_DIVIDES"
    TWO_MOD_FOUR = "TWO_MOD_FOUR"
    ZERO_MOD_FOUR = "ZERO_MOD_FOUR"


class SquareRule(Enum):
    """What the square of the degree-1 generator is, when there is one."""

    NONE = "NONE"
    DEG1_SQUARE_ZERO = "DEG1_SQUARE_ZERO"
    DEG1_SQUARE_IS_DEG2 = "DEG1_SQUARE_IS_DEG2"


@dataclass(frozen=True)
class PolyGenerator:
    """A truncated polynomial generator: degree and truncation exponent
    (generator^truncation = 0)."""

    degree: int
    truncation: int


@dataclass(frozen=True)
class RingPresentation:
    """Additive presentation of the mod-p cohomology.

    ``deg2_truncation`` is the truncation exponent of the degree-2 class; it
    is None exactly in the COPRIME case.  ``exterior_degrees`` is sorted
    ascending.
    """

    p: int
    case: CohomologyCase
    poly_generator: PolyGenerator | None
    exterior_degrees: tuple[int, ...]
    square_rule: SquareRule
    deg2_truncation: int | None

    def render(self) -> str:
        """Canonical one-line form.

        Grammar:  the COPRIME case renders as ``Lambda_Z_<p>(v<d>, ...)``;
        the truncated cases as ``Z_<p>[y<g>]/(y<g>^<T>)``, followed by
        `` (x) Lambda(y<d>, ...)`` when the exterior part is nonempty.
        Generators are labelled by degree, ascending.
        """
        if self.case is CohomologyCase.COPRIME:
            gens = ", ".join(f"v{d}" for d in self.exterior_degrees)
            return f"Lambda_Z_{self.p}({gens})"
        g = self.poly_generator
        assert g is not None
        poly = f"Z_{self.p}[y{g.degree}]/(y{g.degree}^{g.truncation})"
        if not self.exterior_degrees:
            return poly
        gens = ", ".join(f"y{d}" for d in self.exterior_degrees)
        return f"{poly} (x) Lambda({gens})"


def truncation_exponent(n: int, k: int, p: int) -> int:
    """Least j in [n-k+1, n] with C(n, j) nonzero mod p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    for j in range(n - k + 1, n + 1):
        if binomial_mod(n, j, p) != 0:
            return j
    raise AssertionError("unreachable: C(n, n) = 1 is nonzero mod every prime")


def classify(m: int, p: int) -> CohomologyCase:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m % p != 0:
        return CohomologyCase.COPRIME
    if p != 2:
        return CohomologyCase.ODD_DIVIDES
    return CohomologyCase.TWO_MOD_FOUR if m % 4 == 2 else CohomologyCase.ZERO_MOD_FOUR


def presentation(params: ManifoldParams, p: int) -> RingPresentation:
    """The additive mod-p presentation for one prime p."""
    n, k = params.n, params.k
    case = classify(params.m, p)
    run = tuple(range(2 * n - 2 * k + 1, 2 * n, 2))
    if case is CohomologyCase.COPRIME:
        return RingPresentation(
            p=p,
            case=case,
            poly_generator=None,
            exterior_degrees=run,
            square_rule=SquareRule.NONE,
            deg2_truncation=None,
        )
    half = truncation_exponent(n, k, p)
    omitted = 2 * half - 1  # always lies inside the odd run
    reduced_run = tuple(d for d in run if d != omitted)
    assert len(reduced_run) == k - 1
    if case is CohomologyCase.TWO_MOD_FOUR:
        return RingPresentation(
            p=2,
            case=case,
            poly_generator=PolyGenerator(degree=1, truncation=2 * half),
            exterior_degrees=reduced_run,
            square_rule=SquareRule.DEG1_SQUARE_IS_DEG2,
            deg2_truncation=half,
        )
    return RingPresentation(
        p=p,
        case=case,
        poly_generator=PolyGenerator(degree=2, truncation=half),
        exterior_degrees=(1,) + reduced_run,
        square_rule=SquareRule.DEG1_SQUARE_ZERO,
        deg2_truncation=half,
    )


def poincare_polynomial(pres: RingPresentation, n: int, k: int) -> list[int]:
    """Coefficients of the mod-p Poincare polynomial, indexed by degree.

    The list has length k(2n - k) + 1 exactly: the top class sits in the
    dimension of the manifold.
    """
    dim = k * (2 * n - k)
    coeffs = [0] * (dim + 1)
    if pres.poly_generator is None:
        coeffs[0] = 1
    else:
        g = pres.poly_generator
        for i in range(g.truncation):
            coeffs[g.degree * i] = 1
    for deg in pres.exterior_degrees:
        # multiply by (1 + t^deg); the snapshot keeps the update aliasing-free
        tail = coeffs[: dim + 1 - deg]
        for i, c in enumerate(tail):
            if c:
                coeffs[i + deg] += c
    return coeffs


def betti_mod_p(params: ManifoldParams, p: int, q: int) -> int:
    """dim of the degree-q mod-p cohomology; 0 above the dimension."""
    if q < 0:
        raise ValueError(f"degree must be >= 0, got {q}")
    pres = presentation(params, p)
    coeffs = poincare_polynomial(pres, params.n, params.k)
    return coeffs[q] if q < len(coeffs) else 0


def total_dimension(pres: RingPresentation, k: int) -> int:
    """Total mod-p dimension: 2^k when p is coprime to m, otherwise twice the
    degree-2 truncation exponent times 2^(k-1)."""
    if pres.case is CohomologyCase.COPRIME:
        return 2**k
    assert pres.deg2_truncation is not None
    return 2 * pres.deg2_truncation * 2 ** (k - 1)
