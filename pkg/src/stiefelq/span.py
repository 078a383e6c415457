"""Span and stable-span bounds, and parallelizability verdicts.

Lower bounds on the span (maximal number of everywhere linearly independent
vector fields) come from the tangent-bundle geometry: k^2 trivial summands
split off, the circle-quotient base contributes its stable span, and a
sphere-bundle recursion climbs in k.  Strict inequalities of the form
span > X are recorded as span >= X + 1.  Upper bounds exist only for k = 1
(the sphere bound via the Radon-Hurwitz number) and the trivial dimension
bound.

Verdicts are three-valued, and the order NO < UNKNOWN < YES makes
"parallelizable <= stably parallelizable" a checkable inequality.  YES needs
a positive construction (k = n - 1: the quotient of a compact Lie group by a
finite subgroup); NO needs a nonzero characteristic class; everything else
stays UNKNOWN.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from stiefelq.arith import radon_hurwitz
from stiefelq.charclass import char_class_report
from stiefelq.manifold import ManifoldParams, ParameterError

__all__ = [
    "TriState",
    "SpanReport",
    "span_lower_bound",
    "span_upper_bound",
    "span_eq_stable_guaranteed",
    "stably_parallelizable_verdict",
    "parallelizable_verdict",
    "lower_bound_from_external_span",
    "span_report",
]


@total_ordering
class TriState(Enum):
    NO = "no"
    UNKNOWN = "unknown"
    YES = "yes"

    @property
    def rank(self) -> int:
        return ("no", "unknown", "yes").index(self.value)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, TriState):
            return NotImplemented
        return self.rank < other.rank


_BASE_REASON = (
    "base case k = 1: one field always exists (odd dimension, zero Euler "
    "characteristic); sharper lens-space tables are out of scope"
)
_LIE_REASON = (
    "quotient of a compact Lie group by a finite subgroup is parallelizable, "
    "so span equals the dimension"
)


def _lower_bound_chain(n: int, k: int) -> tuple[int, str]:
    """Lower bound L(n, k) with the winning rule, built along the k-recursion.

    L(n, 1) = 1; for 2 <= k <= n - 2 the candidates are k^2, dim - 2n + 2
    (dim - 2n + 4 for even n) and L(n, k - 1) + 1; for k = n - 1 the space is
    parallelizable and L = dim (n = 2 included: the full-frame rule beats the
    k = 1 base there).
    """
    val, why = 1, _BASE_REASON
    if k == n - 1 == 1:
        val, why = 2 * n - 1, _LIE_REASON
    for kk in range(2, k + 1):
        dim = kk * (2 * n - kk)
        if kk == n - 1:
            val, why = dim, _LIE_REASON
            continue
        cands = [
            (kk * kk, "k^2 trivial summands split off the tangent bundle"),
            (
                dim - 2 * n + 2,
                "strictly above the stable span of the circle-quotient base, "
                "which is >= dim - 2n + 1; the strict excess rounds up to "
                "dim - 2n + 2",
            ),
            (
                val + 1,
                "strictly above the stable span of the (k-1)-frame quotient; "
                "its own lower bound plus 1",
            ),
        ]
        if n % 2 == 0:
            cands.append(
                (
                    dim - 2 * n + 4,
                    "even n: strictly above dim - 2n + 3, rounding up to "
                    "dim - 2n + 4",
                )
            )
        val, why = max(cands, key=lambda c: c[0])
    return val, why


def span_lower_bound(params: ManifoldParams) -> int:
    return _lower_bound_chain(params.n, params.k)[0]


def span_upper_bound(params: ManifoldParams) -> int:
    """For k = 1 the quotient of the sphere inherits the Radon-Hurwitz bound
    rho(2n) - 1; otherwise only the dimension bound is available."""
    if params.k == 1:
        return radon_hurwitz(2 * params.n) - 1
    return params.dimension


def span_eq_stable_guaranteed(params: ManifoldParams) -> bool:
    """True when an implemented criterion forces span = stable span: k even,
    n odd, or n = 2 (mod 4), all for k >= 2.  k = 1 is not covered and
    returns False (which asserts nothing)."""
    if params.k == 1:
        return False
    return params.k % 2 == 0 or params.n % 2 == 1 or params.n % 4 == 2


def _verdicts(params: ManifoldParams) -> tuple[TriState, TriState, str]:
    """(stably_parallelizable, parallelizable, provenance line)."""
    if params.k == params.n - 1:
        return TriState.YES, TriState.YES, f"verdicts YES: {_LIE_REASON}"
    report = char_class_report(params)
    for t in report.pontrjagin:
        if not t.is_zero:
            return (
                TriState.NO,
                TriState.NO,
                f"verdicts NO: Pontrjagin term j={t.j} has coefficient "
                f"{t.raw_coefficient} = {t.reduced} (mod {t.modulus}), nonzero",
            )
    for t in report.stiefel_whitney:
        if t.present:
            return (
                TriState.NO,
                TriState.NO,
                f"verdicts NO: Stiefel-Whitney class in degree {t.degree} is nonzero",
            )
    return (
        TriState.UNKNOWN,
        TriState.UNKNOWN,
        "verdicts UNKNOWN: every implemented obstruction vanishes and no "
        "positive criterion applies",
    )


def stably_parallelizable_verdict(params: ManifoldParams) -> TriState:
    return _verdicts(params)[0]


def parallelizable_verdict(params: ManifoldParams) -> TriState:
    return _verdicts(params)[1]


def lower_bound_from_external_span(params: ManifoldParams, external_span: int) -> int:
    """Improved stable-span lower bound from an externally supplied span of
    2nk copies of the Hopf line bundle over the real projective space of
    dimension 2n - 1.  Only meaningful for m = 2, where that bundle pulls
    back to the stable tangent bundle; other m are rejected."""
    if params.m != 2:
        raise ParameterError(
            "external-span-needs-m-2",
            f"the external-span bound applies only to m = 2, got m = {params.m}",
        )
    limit = 2 * params.n * params.k
    if not 0 <= external_span <= limit:
        raise ParameterError(
            "external-span-range",
            f"external span must lie in [0, {limit}] (the bundle rank), "
            f"got {external_span}",
        )
    return max(span_lower_bound(params), external_span - params.k**2)


@dataclass(frozen=True)
class SpanReport:
    span_lower: int
    span_upper: int
    stable_span_lower: int
    span_eq_stable_guaranteed: bool
    parallelizable: TriState
    stably_parallelizable: TriState
    provenance: tuple[str, ...]


def span_report(params: ManifoldParams, external_span: int | None = None) -> SpanReport:
    """Assemble every implemented bound and verdict, each with a provenance
    line naming the mechanism that produced it."""
    n, k = params.n, params.k
    lower, why = _lower_bound_chain(n, k)
    prov = [f"span lower bound {lower}: {why}"]

    upper = span_upper_bound(params)
    if k == 1:
        prov.append(
            f"span upper bound {upper}: Radon-Hurwitz sphere bound rho(2n) - 1 "
            "passed down to the k = 1 quotient"
        )
    else:
        prov.append(f"span upper bound {upper}: dimension bound (none sharper implemented)")

    eq = span_eq_stable_guaranteed(params)
    if k == 1:
        prov.append("span = stable span: k = 1 is not covered by the equality criteria")
    elif eq:
        which = "k even" if k % 2 == 0 else ("n odd" if n % 2 == 1 else "n = 2 (mod 4)")
        prov.append(f"span = stable span guaranteed: {which}")
    else:
        prov.append(
            "span = stable span not guaranteed (no criterion applies; "
            "equality is not ruled out)"
        )

    stable_lower = lower
    if external_span is not None:
        improved = lower_bound_from_external_span(params, external_span)
        if improved > stable_lower:
            stable_lower = improved
            prov.append(
                f"stable span lower bound {stable_lower}: externally supplied "
                f"span {external_span} of {2 * n * k} Hopf line bundles over "
                f"RP^{2 * n - 1}, minus k^2 = {k * k}"
            )
            if eq:
                lower = stable_lower
                prov.append(
                    f"span lower bound raised to {lower}: the equality criterion "
                    "transfers the stable-span bound to the span"
                )
        else:
            prov.append(
                f"external span {external_span} does not improve the bound "
                f"(needs more than k^2 = {k * k} over {stable_lower})"
            )

    stably, plain, verdict_why = _verdicts(params)
    prov.append(verdict_why)
    return SpanReport(
        span_lower=lower,
        span_upper=upper,
        stable_span_lower=stable_lower,
        span_eq_stable_guaranteed=eq,
        parallelizable=plain,
        stably_parallelizable=stably,
        provenance=tuple(prov),
    )
