"""Eigenvalue results from the discrete solver."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field


class EigenResult(BaseModel):
    """Principal eigenvalue with its eigenfunction and convergence diagnostics.

    ``eigenfunction`` is a GridFunction normalized to Σ g|u|^p h^n = 1 and signed
    positive at the node nearest the domain centre. It is left out of JSON; the
    CLI writes it to CSV instead.
    """

    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True)

    lambda_: float = Field(alias="lambda")
    method: Literal["descent", "oracle"]
    p: float
    N: int
    iterations: int
    grad_norm: float
    history: list[float] = []
    converged: bool = True
    positive: bool = True
    eigenfunction: Any = Field(default=None, exclude=True)
