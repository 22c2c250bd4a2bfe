"""Finite-difference p-biharmonic eigenvalue solver with Navier boundary conditions."""

from picone_lab.solver.grid import (
    GridFunction,
    dirichlet_laplacian,
    discrete_laplacian,
    grid_nodes,
    navier_bilaplacian,
    sample,
)
from picone_lab.solver.oracle import linearized_min_eigenvalue, p2_oracle, smallest_eigenpair
from picone_lab.solver.rayleigh import principal_eigenvalue, rayleigh_quotient

__all__ = [
    "GridFunction",
    "dirichlet_laplacian",
    "discrete_laplacian",
    "grid_nodes",
    "linearized_min_eigenvalue",
    "navier_bilaplacian",
    "p2_oracle",
    "principal_eigenvalue",
    "rayleigh_quotient",
    "sample",
    "smallest_eigenpair",
]
