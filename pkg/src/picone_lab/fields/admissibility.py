"""Sample-based checks of the hypotheses the identities impose on u, v and f."""

from __future__ import annotations

import logging

import numpy as np

from picone_lab.fields.nonlinearity import NonlinearityProfile, nonlinearity_C1_gap
from picone_lab.jets.expr import FieldExpr, as_points, eval_jet
from picone_lab.jets.jet import laplacian
from picone_lab.models.fields import AdmissibilityReport, ExponentPair, Violation
from picone_lab.quadrature.domain import Domain

logger = logging.getLogger(__name__)

MAX_LISTED_VIOLATIONS = 100


def default_samples(domain: Domain) -> np.ndarray:
    """10^3 cell-centred samples on an interval, 64 x 64 on a rectangle."""
    return domain.interior_samples(1000 if domain.dimension == 1 else 64)


def admissible_pair(
    u: FieldExpr,
    v: FieldExpr,
    domain: Domain,
    samples: np.ndarray | None = None,
    p: float | ExponentPair = 2.0,
    strict_u_positive: bool = False,
    f: NonlinearityProfile | None = None,
) -> AdmissibilityReport:
    """Evaluate u, v (and f on v) at every sample and collect hypothesis violations.

    Requires u >= 0 (u > 0 when ``strict_u_positive``, forced for p < 2), v > 0 and
    -Δv > 0. With a profile also f(v) > 0, the C1 gap >= 0 and f''(v) <= 0.
    """
    pe = ExponentPair.of(p)
    strict = strict_u_positive or pe.p < 2.0
    raw = default_samples(domain) if samples is None else samples
    pts = as_points(raw, domain.dimension).reshape(-1, domain.dimension)

    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    lap_v = np.asarray(laplacian(jv))

    checks: list[tuple[str, np.ndarray, np.ndarray]] = [
        ("u > 0" if strict else "u >= 0", uu > 0.0 if strict else uu >= 0.0, uu),
        ("v > 0", vv > 0.0, vv),
        ("-lap v > 0", lap_v < 0.0, lap_v),
    ]

    extra: dict[str, float] = {}
    if f is not None:
        # f and its conditions are only meaningful where v > 0.
        ys = np.where(vv > 0.0, vv, 1.0)
        f0, _, f2 = f.derivatives(ys)
        ok_f = (f0 > 0.0) | ~(vv > 0.0)
        checks.append(("f(v) > 0", ok_f, f0))
        gap = np.full_like(f0, np.inf)
        if np.any(ok_f):
            gap[ok_f] = nonlinearity_C1_gap(f, ys[ok_f], pe)
        checks.append(("C1", gap >= 0.0, gap))
        checks.append(("C2", f2 <= 0.0, f2))
        extra = {
            "min_f": float(np.min(f0)),
            "min_C1_gap": float(np.min(gap)),
            "max_f2": float(np.max(f2)),
        }

    violations: list[Violation] = []
    count = 0
    for condition, ok, values in checks:
        bad = np.flatnonzero(~ok)
        count += bad.size
        for i in bad[: max(0, MAX_LISTED_VIOLATIONS - len(violations))]:
            violations.append(
                Violation(point=pts[i].tolist(), condition=condition, value=float(values[i]))
            )

    if count:
        logger.info("admissibility: %d violations over %d samples", count, len(pts))
    return AdmissibilityReport(
        sample_count=len(pts),
        min_u=float(np.min(uu)),
        min_v=float(np.min(vv)),
        max_lap_v=float(np.max(lap_v)),
        strict_u_positive=strict,
        violation_count=count,
        violations=violations,
        **extra,
    )
