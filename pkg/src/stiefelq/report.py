"""Report assembly, deterministic serialization, and grid tables.

Identical inputs give byte-identical output in every format, independent of
parallelism.  JSON uses a fixed key order and carries a ``schema_version``;
integers that can grow without bound (the raw characteristic-class
coefficients) are serialized as decimal strings so consumers never lose
precision to floating point.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from stiefelq.arith import factorize, is_prime
from stiefelq.charclass import (
    CharClassReport,
    PontrjaginTerm,
    StiefelWhitneyTerm,
    char_class_report,
)
from stiefelq.manifold import (
    BasicInvariants,
    ManifoldParams,
    ParameterError,
    basic_invariants,
    validate,
)
from stiefelq.modp import (
    CohomologyCase,
    PolyGenerator,
    RingPresentation,
    SquareRule,
    poincare_polynomial,
    presentation,
    total_dimension,
)
from stiefelq.span import SpanReport, TriState, span_report
from stiefelq.torsion import TorsionProfile, torsion_profile

__all__ = [
    "SCHEMA_VERSION",
    "CSV_HEADER",
    "CohomologyEntry",
    "InvariantReport",
    "GridSpec",
    "default_primes",
    "compute_report",
    "render",
    "report_from_json",
    "generate_table",
    "render_table",
]

SCHEMA_VERSION = 1
CSV_HEADER = "n,k,m,dim,height,span_lower,span_upper,stably_parallelizable,parallelizable"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyEntry:
    p: int
    presentation: RingPresentation
    poincare: tuple[int, ...]
    total_dimension: int


@dataclass(frozen=True)
class InvariantReport:
    params: ManifoldParams
    basic: BasicInvariants
    torsion: TorsionProfile
    cohomology: tuple[CohomologyEntry, ...]
    char_classes: CharClassReport
    span: SpanReport
    notes: tuple[str, ...]


def default_primes(m: int) -> tuple[int, ...]:
    """The primes dividing m, plus 2 (2 always sees the orientation double
    cover and the Stiefel-Whitney side)."""
    return tuple(sorted({p for p, _ in factorize(m)} | {2}))


def _check_primes(primes: Sequence[int]) -> tuple[int, ...]:
    if not primes:
        raise ParameterError("primes-empty", "the prime list must be nonempty")
    for p in primes:
        if p < 2 or not is_prime(p):
            raise ParameterError("primes-not-prime", f"{p} is not a prime")
    return tuple(sorted(set(primes)))


def compute_report(
    params: ManifoldParams, primes: Sequence[int] | None = None
) -> InvariantReport:
    """Everything the library knows about one (n, k, m), for the given primes
    (default: the primes dividing m, plus 2).  Presentations are listed with
    p ascending."""
    ps = default_primes(params.m) if primes is None else _check_primes(primes)
    cohomology = []
    for p in ps:
        pres = presentation(params, p)
        coeffs = tuple(poincare_polynomial(pres, params.n, params.k))
        cohomology.append(
            CohomologyEntry(
                p=p,
                presentation=pres,
                poincare=coeffs,
                total_dimension=total_dimension(pres, params.k),
            )
        )
    notes: tuple[str, ...] = ()
    if params.k == 1:
        notes = (
            "k = 1: mod-p ring presentations extrapolated from the k >= 2 "
            "truncation formulas (they agree with classical lens-space "
            "cohomology)",
            "k = 1: the span = stable-span criteria make no statement",
        )
    return InvariantReport(
        params=params,
        basic=basic_invariants(params),
        torsion=torsion_profile(params),
        cohomology=tuple(cohomology),
        char_classes=char_class_report(params),
        span=span_report(params),
        notes=notes,
    )


# --- serialization -----------------------------------------------------------


def _presentation_dict(pres: RingPresentation) -> dict:
    pg = pres.poly_generator
    return {
        "p": pres.p,
        "case": pres.case.value,
        "poly_generator": None
        if pg is None
        else {"degree": pg.degree, "truncation": pg.truncation},
        "exterior_degrees": list(pres.exterior_degrees),
        "square_rule": pres.square_rule.value,
        "deg2_truncation": pres.deg2_truncation,
        "rendering": pres.render(),
    }


def report_to_dict(report: InvariantReport) -> dict:
    p, b, s = report.params, report.basic, report.span
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"n": p.n, "k": p.k, "m": p.m},
        "basic": {
            "dimension": b.dimension,
            "pi1_order": b.pi1_order,
            "euler_characteristic": b.euler_characteristic,
            "orientable": b.orientable,
            "picard_order": b.picard_order,
            "almost_complex_guaranteed": b.almost_complex_guaranteed,
            "complex_structure_guaranteed": b.complex_structure_guaranteed,
        },
        "torsion": {
            "orders": list(report.torsion.orders),
            "height": report.torsion.height,
        },
        "cohomology": [
            {
                **_presentation_dict(e.presentation),
                "poincare": list(e.poincare),
                "total_dimension": e.total_dimension,
            }
            for e in report.cohomology
        ],
        "char_classes": {
            "pontrjagin": [
                {
                    "j": t.j,
                    "raw_coefficient": str(t.raw_coefficient),
                    "modulus": t.modulus,
                    "reduced": t.reduced,
                    "is_zero": t.is_zero,
                }
                for t in report.char_classes.pontrjagin
            ],
            "stiefel_whitney": [
                {"degree": t.degree, "present": t.present}
                for t in report.char_classes.stiefel_whitney
            ],
            "all_pontrjagin_vanish": report.char_classes.all_pontrjagin_vanish,
            "all_sw_vanish": report.char_classes.all_sw_vanish,
        },
        "span": {
            "span_lower": s.span_lower,
            "span_upper": s.span_upper,
            "stable_span_lower": s.stable_span_lower,
            "span_eq_stable_guaranteed": s.span_eq_stable_guaranteed,
            "parallelizable": s.parallelizable.value,
            "stably_parallelizable": s.stably_parallelizable.value,
            "provenance": list(s.provenance),
        },
        "notes": list(report.notes),
    }


def report_from_dict(data: dict) -> InvariantReport:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version: {data.get('schema_version')!r}")
    params = validate(**data["params"])
    b = data["basic"]
    basic = BasicInvariants(
        dimension=b["dimension"],
        pi1_order=b["pi1_order"],
        euler_characteristic=b["euler_characteristic"],
        orientable=b["orientable"],
        picard_order=b["picard_order"],
        almost_complex_guaranteed=b["almost_complex_guaranteed"],
        complex_structure_guaranteed=b["complex_structure_guaranteed"],
    )
    t = data["torsion"]
    torsion = TorsionProfile(orders=tuple(t["orders"]), height=t["height"])
    cohomology = []
    for e in data["cohomology"]:
        pg = e["poly_generator"]
        pres = RingPresentation(
            p=e["p"],
            case=CohomologyCase(e["case"]),
            poly_generator=None if pg is None else PolyGenerator(**pg),
            exterior_degrees=tuple(e["exterior_degrees"]),
            square_rule=SquareRule(e["square_rule"]),
            deg2_truncation=e["deg2_truncation"],
        )
        cohomology.append(
            CohomologyEntry(
                p=e["p"],
                presentation=pres,
                poincare=tuple(e["poincare"]),
                total_dimension=e["total_dimension"],
            )
        )
    c = data["char_classes"]
    char = CharClassReport(
        pontrjagin=tuple(
            PontrjaginTerm(
                j=t["j"],
                raw_coefficient=int(t["raw_coefficient"]),
                modulus=t["modulus"],
                reduced=t["reduced"],
                is_zero=t["is_zero"],
            )
            for t in c["pontrjagin"]
        ),
        stiefel_whitney=tuple(
            StiefelWhitneyTerm(degree=t["degree"], present=t["present"])
            for t in c["stiefel_whitney"]
        ),
        all_pontrjagin_vanish=c["all_pontrjagin_vanish"],
        all_sw_vanish=c["all_sw_vanish"],
    )
    s = data["span"]
    span = SpanReport(
        span_lower=s["span_lower"],
        span_upper=s["span_upper"],
        stable_span_lower=s["stable_span_lower"],
        span_eq_stable_guaranteed=s["span_eq_stable_guaranteed"],
        parallelizable=TriState(s["parallelizable"]),
        stably_parallelizable=TriState(s["stably_parallelizable"]),
        provenance=tuple(s["provenance"]),
    )
    return InvariantReport(
        params=params,
        basic=basic,
        torsion=torsion,
        cohomology=tuple(cohomology),
        char_classes=char,
        span=span,
        notes=tuple(data["notes"]),
    )


def report_from_json(text: str | bytes) -> InvariantReport:
    return report_from_dict(json.loads(text))


def _csv_row(report: InvariantReport) -> str:
    p, s = report.params, report.span
    return (
        f"{p.n},{p.k},{p.m},{report.basic.dimension},{report.torsion.height},"
        f"{s.span_lower},{s.span_upper},{s.stably_parallelizable.value},"
        f"{s.parallelizable.value}"
    )


def _text_dossier(report: InvariantReport) -> str:
    p, b, s = report.params, report.basic, report.span
    yesno = {True: "yes", False: "no"}
    lines = [
        f"frame quotient n={p.n} k={p.k} m={p.m}",
        f"  dimension                 {b.dimension}",
        f"  fundamental group         cyclic of order {b.pi1_order}",
        f"  Euler characteristic      {b.euler_characteristic}",
        f"  orientable                {yesno[b.orientable]}",
        f"  Picard group              cyclic of order {b.picard_order}",
        f"  almost complex guaranteed {yesno[b.almost_complex_guaranteed]}",
        f"  complex guaranteed        {yesno[b.complex_structure_guaranteed]}",
        "",
        "torsion of the degree-2 class",
        f"  orders of powers r=1..{p.n}: "
        + ", ".join(str(o) for o in report.torsion.orders),
        f"  height: {report.torsion.height}",
        "  free exterior generators in odd degrees: "
        + ", ".join(str(d) for d in range(2 * p.n - 2 * p.k + 1, 2 * p.n, 2)),
        "",
        "mod-p cohomology",
    ]
    for e in report.cohomology:
        lines.append(f"  p={e.p}  case {e.presentation.case.value}")
        lines.append(f"       {e.presentation.render()}")
        lines.append(f"       total dimension {e.total_dimension}")
    lines.append("")
    lines.append("characteristic classes")
    for t in report.char_classes.pontrjagin:
        state = "zero" if t.is_zero else "NONZERO"
        lines.append(
            f"  Pontrjagin j={t.j}: coefficient {t.raw_coefficient} "
            f"= {t.reduced} (mod {t.modulus}) -> {state}"
        )
    if report.char_classes.stiefel_whitney:
        for t in report.char_classes.stiefel_whitney:
            state = "PRESENT" if t.present else "absent"
            lines.append(f"  Stiefel-Whitney degree {t.degree}: {state}")
    else:
        lines.append("  Stiefel-Whitney classes: none (total class 1)")
    lines.append(
        f"  all Pontrjagin vanish: {yesno[report.char_classes.all_pontrjagin_vanish]}"
    )
    lines.append(f"  all Stiefel-Whitney vanish: {yesno[report.char_classes.all_sw_vanish]}")
    lines.append("")
    lines.append("span")
    lines.append(f"  lower bound             {s.span_lower}")
    lines.append(f"  upper bound             {s.span_upper}")
    lines.append(f"  stable span lower bound {s.stable_span_lower}")
    lines.append(f"  span = stable span guaranteed: {yesno[s.span_eq_stable_guaranteed]}")
    lines.append(f"  parallelizable:         {s.parallelizable.value}")
    lines.append(f"  stably parallelizable:  {s.stably_parallelizable.value}")
    lines.append("  provenance:")
    for line in s.provenance:
        lines.append(f"    - {line}")
    if report.notes:
        lines.append("")
        lines.append("notes")
        for note in report.notes:
            lines.append(f"  - {note}")
    lines.append("")
    return "\n".join(lines)


def render(report: InvariantReport, fmt: str) -> bytes:
    """Serialize a report: ``json`` (indented, fixed key order), ``csv_row``
    (one header-less line) or ``text`` (human-readable dossier)."""
    if fmt == "json":
        return (json.dumps(report_to_dict(report), indent=2) + "\n").encode()
    if fmt == "csv_row":
        return _csv_row(report).encode()
    if fmt == "text":
        return _text_dossier(report).encode()
    raise ParameterError("format-unknown", f"unknown format {fmt!r}")


# --- tables ------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """A rectangular (n, k, m) grid; k_range None means 1..n-1 for each n.

    Grid points that fail validation are skipped with a logged note; the
    ranges themselves must be nonempty.
    """

    n_range: tuple[int, int]
    k_range: tuple[int, int] | None
    m_range: tuple[int, int]
    primes: tuple[int, ...] | None = None
    fmt: str = "csv"
    jobs: int = 1

    def __post_init__(self) -> None:
        for name, rng in (("n", self.n_range), ("m", self.m_range), ("k", self.k_range)):
            if rng is not None and rng[0] > rng[1]:
                raise ParameterError(
                    f"{name}-range-empty", f"empty {name} range {rng[0]}..{rng[1]}"
                )
        if self.fmt not in ("csv", "json"):
            raise ParameterError("format-unknown", f"table format must be csv or json, got {self.fmt!r}")
        if self.jobs < 1:
            raise ParameterError("jobs-too-small", f"jobs must be >= 1, got {self.jobs}")


def _grid_points(spec: GridSpec) -> list[tuple[int, int, int]]:
    points = []
    for n in range(spec.n_range[0], spec.n_range[1] + 1):
        ks: Iterable[int]
        if spec.k_range is None:
            ks = range(1, n)
        else:
            ks = range(spec.k_range[0], spec.k_range[1] + 1)
        for k in ks:
            for m in range(spec.m_range[0], spec.m_range[1] + 1):
                try:
                    validate(n, k, m)
                except ParameterError as exc:
                    log.warning("skipping grid point (n=%d, k=%d, m=%d): %s", n, k, m, exc)
                    continue
                points.append((n, k, m))
    return points


def _table_row(task: tuple[tuple[int, int, int], tuple[int, ...] | None, str]) -> bytes:
    (n, k, m), primes, fmt = task
    report = compute_report(validate(n, k, m), primes)
    if fmt == "csv":
        return render(report, "csv_row")
    # one compact JSON object per row
    return json.dumps(report_to_dict(report), separators=(",", ":")).encode()


def generate_table(spec: GridSpec) -> Iterator[bytes]:
    """Yield rendered rows (no trailing newlines) in lexicographic (n, k, m)
    order; CSV starts with the header row.  The output is byte-identical for
    any ``jobs`` value: workers only compute, ordering is fixed up front."""
    points = _grid_points(spec)
    if spec.fmt == "csv":
        yield CSV_HEADER.encode()
    tasks = [(pt, spec.primes, spec.fmt) for pt in points]
    if spec.jobs == 1 or len(tasks) < 2:
        for task in tasks:
            yield _table_row(task)
        return
    chunk = max(1, len(tasks) // (spec.jobs * 4))
    with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
        yield from pool.map(_table_row, tasks, chunksize=chunk)


def render_table(spec: GridSpec) -> bytes:
    return b"".join(row + b"\n" for row in generate_table(spec))
