"""Exact numerical verification of non-reduced Hilbert scheme components
formed by triple covers on cones over curves."""

from conecurves.betti import (
    BettiTable,
    cg_transform,
    degree_separation_check,
    hilbert_polynomial,
    pure_betti_from_hilbert,
    rational_normal_betti,
)
from conecurves.covers import CoverData
from conecurves.lattice import BaseCurve, BaseDivisorClass, H0Policy, SurfaceDivisorClass
from conecurves.ledger import (
    expected_dimension,
    family_dimension,
    superabundance,
    tangent_dimension,
    verify_main_theorem,
)

__version__ = "0.1.0"
