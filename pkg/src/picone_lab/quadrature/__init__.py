"""Domains, sample sets and composite Gauss–Legendre quadrature.

``integrate_picone`` lives in :mod:`picone_lab.quadrature.picone_integral`.
"""

from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule, integrate

__all__ = ["Domain", "QuadratureRule", "integrate"]
