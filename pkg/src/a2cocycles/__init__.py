"""Exact Hopf 2-cocycles for liftings of type A2 Nichols algebras."""

from __future__ import annotations

from a2cocycles.scalar import Cyclotomic, cyc_root, format_cyclotomic, q_binom
from a2cocycles.algebra import Braiding, DeformationParams, RealizationConstraints

__version__ = "0.1.0"

__all__ = [
    "Braiding",
    "Cyclotomic",
    "DeformationParams",
    "RealizationConstraints",
    "cyc_root",
    "format_cyclotomic",
    "q_binom",
    "__version__",
]
