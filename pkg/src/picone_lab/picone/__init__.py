"""Pointwise evaluators for both sides of every identity, and Young's gap."""

from picone_lab.picone.dunninger import dunninger_batch, eval_dunninger_p2, power_mismatch
from picone_lab.picone.nonlinear import (
    eval_L_nonlinear,
    eval_R_nonlinear,
    nonlinear_batch,
    npi1_gap,
    printed_discrepancy,
)
from picone_lab.picone.power import eval_L_power, eval_R_power, power_batch
from picone_lab.picone.sweep import check_pair, sweep_dunninger, sweep_nonlinear, sweep_power
from picone_lab.picone.terms import PiconeBatch
from picone_lab.picone.young import young_equality_partner, young_gap

__all__ = [
    "PiconeBatch",
    "check_pair",
    "dunninger_batch",
    "eval_L_nonlinear",
    "eval_L_power",
    "eval_R_nonlinear",
    "eval_R_power",
    "eval_dunninger_p2",
    "nonlinear_batch",
    "npi1_gap",
    "power_batch",
    "power_mismatch",
    "printed_discrepancy",
    "sweep_dunninger",
    "sweep_nonlinear",
    "sweep_power",
    "young_equality_partner",
    "young_gap",
]
