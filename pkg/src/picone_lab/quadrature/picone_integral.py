"""Integrated form of the identities: ∫L = ∫R over a domain."""

from __future__ import annotations

import numpy as np

from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr
from picone_lab.models.evaluation import PiconeIntegralReport, PiconeVariant
from picone_lab.models.fields import ExponentPair
from picone_lab.picone import check_pair, dunninger_batch, nonlinear_batch, power_batch
from picone_lab.picone.terms import PiconeBatch
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule


def integrate_picone(
    u: FieldExpr,
    v: FieldExpr,
    p: float | ExponentPair,
    domain: Domain,
    rule: QuadratureRule | None = None,
    variant: PiconeVariant = PiconeVariant.POWER,
    f: NonlinearityProfile | None = None,
) -> PiconeIntegralReport:
    """Quadrature of both sides plus the smallest pointwise L seen on the nodes.

    Raises AdmissibilityViolation listing the nodes where the pair hypotheses fail.
    """
    rule = rule or QuadratureRule()
    pe = ExponentPair.of(p).p
    nodes, weights = rule.nodes_weights(domain)
    pts = check_pair(u, v, nodes, pe)

    batch: PiconeBatch
    if variant is PiconeVariant.POWER:
        batch = power_batch(u, v, pts, pe)
    elif variant is PiconeVariant.DUNNINGER_P2:
        batch = dunninger_batch(u, v, pts)
    else:
        if f is None:
            raise ValueError(f"variant {variant} needs a nonlinearity")
        form = "printed" if variant is PiconeVariant.NONLINEAR_PRINTED else "rederived"
        batch = nonlinear_batch(u, v, f, pts, pe, form)

    return PiconeIntegralReport(
        int_L=float(np.dot(weights, batch.L)),
        int_R=float(np.dot(weights, batch.R)),
        min_pointwise_L=float(np.min(batch.L)),
        node_count=len(pts),
    )
