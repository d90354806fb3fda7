"""Ramification, branch and pushforward data of the m:1 projection X_m -> Y.

X_m is the image of a curve in |m*G0 + (m*E + q)*f| on the cone; projecting
from the vertex gives an m:1 cover of the base.  Everything here is numerical:
classes in the Picard lattice and their degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from conecurves.errors import UnsupportedMultiplicity
from conecurves.lattice import (
    E,
    ZERO,
    BaseCurve,
    BaseDivisorClass,
    SurfaceDivisorClass,
    cone_curve_class,
    degree_base,
    q,
)


@dataclass(frozen=True)
class CoverData:
    base: BaseCurve
    multiplicity: int

    def __post_init__(self) -> None:
        if isinstance(self.multiplicity, bool) or not isinstance(self.multiplicity, int):
            raise TypeError("multiplicity must be an int")
        if self.multiplicity < 2:
            raise ValueError(f"cover multiplicity must be >= 2, got {self.multiplicity}")
        if not self.base.cg_range:
            raise ValueError(
                f"base curve needs e >= 2*gamma + 1, got gamma={self.base.gamma}, e={self.base.e}"
            )

    @property
    def m(self) -> int:
        return self.multiplicity

    @property
    def degree(self) -> int:
        """Degree m*e + 1 of X_m in P^r."""
        return self.m * self.base.e + 1

    @property
    def genus(self) -> int:
        return math.comb(self.m, 2) * self.base.e + self.m * self.base.gamma


@dataclass(frozen=True)
class CurveLineBundleDegree:
    """Line bundle O_X(n) twisted by ``point_correction`` extra points."""

    hyperplane_twist: int
    point_correction: int = 0

    def total_degree(self, d: int) -> int:
        return self.hyperplane_twist * d + self.point_correction


def ramification_class(c: CoverData) -> SurfaceDivisorClass:
    """(m-2)*G0 + ((m-1)*E + q)*f; its restriction to C_m is the ramification divisor."""
    m = c.m
    return SurfaceDivisorClass(m - 2, (m - 1) * E + q)


def ramification_degree(c: CoverData) -> int:
    return (c.m - 1) * (c.m * c.base.e + 2)


def branch_half_class(c: CoverData) -> BaseDivisorClass:
    """Representative m(m-1)/2 * E + (m-1)*q of one half of the branch divisor."""
    m = c.m
    return BaseDivisorClass(coeff_E=m * (m - 1) // 2, coeff_q=m - 1)


def riemann_hurwitz_check(c: CoverData) -> bool:
    g = c.genus
    gamma = c.base.gamma
    return 2 * g - 2 == c.m * (2 * gamma - 2) + ramification_degree(c)


def pushforward_summands(c: CoverData, twisted_by_vertex: bool) -> list[BaseDivisorClass]:
    """Line-bundle summands of nu_* O_C(q0) (twisted) or nu_* O_C (untwisted), m = 3 only."""
    if c.m != 3:
        raise UnsupportedMultiplicity(
            f"pushforward splitting is only established for m = 3, got m = {c.m}"
        )
    if twisted_by_vertex:
        return [ZERO, -E, -(2 * E) - q]
    return [ZERO, -E - q, -(2 * E) - q]


def pushforward_determinant(c: CoverData, twisted_by_vertex: bool) -> BaseDivisorClass:
    """Determinant class: -3E - q twisted, -3E - 2q untwisted."""
    total = ZERO
    for summand in pushforward_summands(c, twisted_by_vertex):
        total = total + summand
    return total


def summand_degrees(c: CoverData, twisted_by_vertex: bool) -> list[int]:
    return [degree_base(B, c.base) for B in pushforward_summands(c, twisted_by_vertex)]


def twisted_normal_part_degree(curve: BaseCurve, n: int, c: int) -> int:
    """Degree of O_X(n) twisted by c points on the m = 3 cone curve X of degree 3e + 1."""
    return CurveLineBundleDegree(n, c).total_degree(3 * curve.e + 1)


def cone_curve(c: CoverData) -> SurfaceDivisorClass:
    return cone_curve_class(c.m)
