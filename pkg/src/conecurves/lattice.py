"""Picard-lattice arithmetic on the ruled surface S = P(O + O(-E)) over a curve.

Divisors on the base curve live in the integer span of three symbols:
the marked class ``E`` (degree e), a point ``q`` (degree 1) and the canonical
class ``K`` (degree 2*genus - 2).  A divisor on ``S`` is written
``a*G0 + B*f`` where ``G0`` is the section of self-intersection -e and ``f``
is the fiber over a divisor ``B`` of the base.

    >>> curve = BaseCurve(genus=3, marked_degree=17)
    >>> C3 = SurfaceDivisorClass(3, 3 * E + q)
    >>> adjunction_genus(C3, curve), degree_under_embedding(C3, curve)
    (60, 52)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from conecurves.errors import InvariantMismatch, ParityError, SpecialRangeError


def _require_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class BaseCurve:
    """A smooth curve of genus ``genus`` with a marked divisor class of degree ``marked_degree``."""

    genus: int
    marked_degree: int

    def __post_init__(self) -> None:
        _require_int("genus", self.genus)
        _require_int("marked_degree", self.marked_degree)
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.marked_degree < 1:
            raise ValueError(f"marked_degree must be >= 1, got {self.marked_degree}")

    @property
    def gamma(self) -> int:
        return self.genus

    @property
    def e(self) -> int:
        return self.marked_degree

    @property
    def cg_range(self) -> bool:
        return self.marked_degree >= 2 * self.genus + 1

    @property
    def main_theorem_range(self) -> bool:
        return self.genus >= 3 and self.marked_degree >= 4 * self.genus + 5


@dataclass(frozen=True)
class BaseDivisorClass:
    """The class ``coeff_E*E + coeff_q*q + coeff_K*K`` on the base curve."""

    coeff_E: int = 0
    coeff_q: int = 0
    coeff_K: int = 0

    def __post_init__(self) -> None:
        _require_int("coeff_E", self.coeff_E)
        _require_int("coeff_q", self.coeff_q)
        _require_int("coeff_K", self.coeff_K)

    def __add__(self, other: BaseDivisorClass) -> BaseDivisorClass:
        if not isinstance(other, BaseDivisorClass):
            return NotImplemented
        return BaseDivisorClass(
            self.coeff_E + other.coeff_E,
            self.coeff_q + other.coeff_q,
            self.coeff_K + other.coeff_K,
        )

    def __neg__(self) -> BaseDivisorClass:
        return BaseDivisorClass(-self.coeff_E, -self.coeff_q, -self.coeff_K)

    def __sub__(self, other: BaseDivisorClass) -> BaseDivisorClass:
        if not isinstance(other, BaseDivisorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> BaseDivisorClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return BaseDivisorClass(k * self.coeff_E, k * self.coeff_q, k * self.coeff_K)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.coeff_E == 0 and self.coeff_q == 0 and self.coeff_K == 0

    def __str__(self) -> str:
        parts = []
        for coeff, sym in ((self.coeff_E, "E"), (self.coeff_q, "q"), (self.coeff_K, "K")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            parts.append(f"{sign} {mag}{sym}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


ZERO = BaseDivisorClass()
E = BaseDivisorClass(coeff_E=1)
q = BaseDivisorClass(coeff_q=1)
K = BaseDivisorClass(coeff_K=1)


@dataclass(frozen=True)
class SurfaceDivisorClass:
    """The class ``gamma0_coeff*G0 + fiber_part*f`` on S."""

    gamma0_coeff: int
    fiber_part: BaseDivisorClass = ZERO

    def __post_init__(self) -> None:
        _require_int("gamma0_coeff", self.gamma0_coeff)
        if not isinstance(self.fiber_part, BaseDivisorClass):
            raise TypeError("fiber_part must be a BaseDivisorClass")

    def __add__(self, other: SurfaceDivisorClass) -> SurfaceDivisorClass:
        if not isinstance(other, SurfaceDivisorClass):
            return NotImplemented
        return SurfaceDivisorClass(
            self.gamma0_coeff + other.gamma0_coeff, self.fiber_part + other.fiber_part
        )

    def __neg__(self) -> SurfaceDivisorClass:
        return SurfaceDivisorClass(-self.gamma0_coeff, -self.fiber_part)

    def __sub__(self, other: SurfaceDivisorClass) -> SurfaceDivisorClass:
        if not isinstance(other, SurfaceDivisorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> SurfaceDivisorClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return SurfaceDivisorClass(k * self.gamma0_coeff, k * self.fiber_part)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.gamma0_coeff}*G0 + ({self.fiber_part})*f"


GAMMA0 = SurfaceDivisorClass(1)


def fiber(B: BaseDivisorClass = q) -> SurfaceDivisorClass:
    """The pullback ``B*f`` of a base divisor (a single fiber for B = q)."""
    return SurfaceDivisorClass(0, B)


def hyperplane_class() -> SurfaceDivisorClass:
    """G0 + E*f, the class pulled back from hyperplanes of the cone."""
    return SurfaceDivisorClass(1, E)


def cone_curve_class(m: int) -> SurfaceDivisorClass:
    """m*G0 + (m*E + q)*f, the class of the m:1 covers through the vertex."""
    return SurfaceDivisorClass(m, m * E + q)


class H0Policy(enum.Enum):
    STRICT = "strict"
    GENERAL_CLASS = "general-class"


def degree_base(B: BaseDivisorClass, curve: BaseCurve) -> int:
    return B.coeff_E * curve.e + B.coeff_q + B.coeff_K * (2 * curve.gamma - 2)


def intersect(D1: SurfaceDivisorClass, D2: SurfaceDivisorClass, curve: BaseCurve) -> int:
    """Intersection number using G0^2 = -e, G0.f = 1, f.f = 0."""
    a1, a2 = D1.gamma0_coeff, D2.gamma0_coeff
    return (
        -a1 * a2 * curve.e
        + a1 * degree_base(D2.fiber_part, curve)
        + a2 * degree_base(D1.fiber_part, curve)
    )


def canonical_surface(curve: BaseCurve) -> SurfaceDivisorClass:
    return SurfaceDivisorClass(-2, K - E)


def adjunction_genus(D: SurfaceDivisorClass, curve: BaseCurve) -> int:
    """Arithmetic genus (D^2 + D.K_S)/2 + 1 of a curve in the class D.

    Raises ParityError when D^2 + D.K_S is odd.
    """
    twice = intersect(D, D, curve) + intersect(D, canonical_surface(curve), curve)
    if twice % 2:
        raise ParityError(f"D^2 + D.K_S = {twice} is odd for D = {D}")
    return twice // 2 + 1


def degree_under_embedding(D: SurfaceDivisorClass, curve: BaseCurve) -> int:
    return intersect(D, hyperplane_class(), curve)


def h0_base(B: BaseDivisorClass, curve: BaseCurve, policy: H0Policy = H0Policy.STRICT) -> int:
    """Dimension of H^0(O(B)) on the base curve.

    Outside the special range Riemann-Roch decides.  Inside [0, 2g-2] only the
    zero class and multiples of the general point q are known exactly; other
    classes raise SpecialRangeError under ``H0Policy.STRICT`` and are treated as
    general (nonspecial when possible) under ``H0Policy.GENERAL_CLASS``.
    """
    g = curve.gamma
    deg = degree_base(B, curve)
    if deg < 0:
        return 0
    if deg > 2 * g - 2:
        return deg - g + 1
    if B.is_zero():
        return 1
    if B.coeff_E == 0 and B.coeff_K == 0 and B.coeff_q >= 0:
        return max(1, B.coeff_q - g + 1)
    if policy is H0Policy.STRICT:
        raise SpecialRangeError(
            f"h0 of {B} (degree {deg}) is in the special range [0, {2 * g - 2}]"
        )
    return max(0, deg - g + 1)


def h0_surface(
    D: SurfaceDivisorClass, curve: BaseCurve, policy: H0Policy = H0Policy.STRICT
) -> int:
    """h^0(O_S(a*G0 + B*f)) = sum_{k=0..a} h^0(B - k*E); zero when a < 0."""
    a = D.gamma0_coeff
    if a < 0:
        return 0
    return sum(h0_base(D.fiber_part - k * E, curve, policy) for k in range(a + 1))


def _multiplicity_from_invariants(d: int, g: int, curve: BaseCurve) -> int:
    e, gamma = curve.e, curve.gamma
    if (d - 1) % e or (d - 1) // e < 1:
        raise InvariantMismatch(f"d = {d} is not of the form m*{e} + 1 with m >= 1")
    m = (d - 1) // e
    expected_g = math.comb(m, 2) * e + m * gamma
    if g != expected_g:
        raise InvariantMismatch(
            f"g = {g} does not match binom({m},2)*{e} + {m}*{gamma} = {expected_g}"
        )
    return m


def solve_multiplicity(d: int, g: int, curve: BaseCurve) -> set[int]:
    """Integer G0-coefficients a of a class of degree d and genus g on S.

    Solves e*a^2 - ((2m+1)e + 2*gamma)*a + m(m+1)e + 2m*gamma = 0 exactly over Q
    and keeps the integral roots.
    """
    m = _multiplicity_from_invariants(d, g, curve)
    e, gamma = curve.e, curve.gamma
    A = e
    B = -((2 * m + 1) * e + 2 * gamma)
    C = m * (m + 1) * e + 2 * m * gamma
    disc = B * B - 4 * A * C
    if disc < 0:
        return set()
    root = math.isqrt(disc)
    if root * root != disc:
        return set()
    roots = {Fraction(-B + root, 2 * A), Fraction(-B - root, 2 * A)}
    return {int(x) for x in roots if x.denominator == 1}
