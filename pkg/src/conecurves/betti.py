"""Graded Betti tables of curve ideals and the cone-curve resolution transform.

A table stores, for each homological step k >= 1, the multiset of twists b
with O(-b) appearing in the k-th term of a free resolution of the ideal
sheaf of a curve in P^N.  Polynomials are sympy ``Poly`` objects over QQ in
the variable ``t``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import sympy

from conecurves.errors import PurityError, ShapeError
from conecurves.lattice import BaseCurve

t = sympy.Symbol("t")

QUADRIC = "quadric"
CONE = "cone"
_TAGS = (QUADRIC, CONE)


@dataclass(frozen=True)
class BettiTable:
    """Twist multisets of a resolution of a curve ideal in P^ambient.

    Steps are stored sorted; trailing empty steps are dropped.  ``strands``,
    when present, runs parallel to ``steps`` and tags every twist as belonging
    to the ``"quadric"`` strand (inherited from the base curve) or the
    ``"cone"`` strand (added by the cone construction).
    """

    ambient: int
    steps: tuple[tuple[int, ...], ...]
    strands: tuple[tuple[str, ...], ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if isinstance(self.ambient, bool) or not isinstance(self.ambient, int):
            raise ShapeError("ambient dimension must be an int")
        if self.ambient < 1:
            raise ShapeError(f"ambient dimension must be >= 1, got {self.ambient}")
        steps = [list(s) for s in self.steps]
        strands = None if self.strands is None else [list(s) for s in self.strands]
        if strands is not None and (
            len(strands) != len(steps)
            or any(len(a) != len(b) for a, b in zip(steps, strands))
        ):
            raise ShapeError("strand tags must run parallel to the steps")

        normalized, tags = [], []
        for k, step in enumerate(steps, start=1):
            for b in step:
                if isinstance(b, bool) or not isinstance(b, int):
                    raise ShapeError(f"twist {b!r} in step {k} is not an int")
                if b < k + 1:
                    raise ShapeError(f"twist {b} in step {k} is below the minimal bound {k + 1}")
            if strands is None:
                normalized.append(tuple(sorted(step)))
            else:
                for tag in strands[k - 1]:
                    if tag not in _TAGS:
                        raise ShapeError(f"unknown strand tag {tag!r}")
                pairs = sorted(zip(step, strands[k - 1]))
                normalized.append(tuple(b for b, _ in pairs))
                tags.append(tuple(tag for _, tag in pairs))

        while normalized and not normalized[-1]:
            normalized.pop()
            if strands is not None:
                tags.pop()
        if any(not s for s in normalized):
            raise ShapeError("only trailing steps of a resolution may be empty")
        object.__setattr__(self, "steps", tuple(normalized))
        object.__setattr__(self, "strands", None if strands is None else tuple(tags))

    def ranks(self) -> list[int]:
        return [len(s) for s in self.steps]

    def step(self, k: int) -> tuple[int, ...]:
        """Twists of step k (1-based); empty past the end of the resolution."""
        return self.steps[k - 1] if 1 <= k <= len(self.steps) else ()

    def strand(self, k: int, tag: str) -> tuple[int, ...]:
        if self.strands is None:
            raise ValueError("table carries no strand tags")
        if not 1 <= k <= len(self.steps):
            return ()
        return tuple(b for b, s in zip(self.steps[k - 1], self.strands[k - 1]) if s == tag)

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"ambient": self.ambient, "steps": [list(s) for s in self.steps]}
        if self.strands is not None:
            doc["strands"] = [list(s) for s in self.strands]
        return doc

    @classmethod
    def from_dict(cls, doc: Any) -> BettiTable:
        if not isinstance(doc, dict):
            raise ShapeError("Betti table document must be a JSON object")
        if "ambient" not in doc or "steps" not in doc:
            raise ShapeError("Betti table document needs 'ambient' and 'steps'")
        steps = doc["steps"]
        if not isinstance(steps, list) or not all(isinstance(s, list) for s in steps):
            raise ShapeError("'steps' must be a list of lists of integers")
        strands = doc.get("strands")
        if strands is not None and (
            not isinstance(strands, list) or not all(isinstance(s, list) for s in strands)
        ):
            raise ShapeError("'strands' must be a list of lists of tags")
        return cls(doc["ambient"], tuple(tuple(s) for s in steps),
                   None if strands is None else tuple(tuple(s) for s in strands))


def rational_normal_betti(e: int) -> BettiTable:
    """Eagon-Northcott table of the rational normal curve of degree e in P^e."""
    if e < 2:
        raise ValueError(f"rational normal curve needs e >= 2, got {e}")
    steps = tuple((i + 1,) * (i * math.comb(e, i + 1)) for i in range(1, e))
    return BettiTable(e, steps)


def cg_transform(betti_Y: BettiTable, m: int) -> BettiTable:
    """Resolution of X_m in P^r from a resolution of the base curve Y in P^(r-1).

    Step 1 gains r-1 cone generators of degree m+1; step k gains C(r-1, k)
    twists m+k plus the shifts m + b of step k-1; the last step r-1 is
    {m + r - 1} together with the shifts of step r-2.  Missing input steps
    count as empty.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    n = betti_Y.ambient
    r = n + 1
    if n < 2:
        raise ShapeError(f"base curve must lie in P^N with N >= 2, got N = {n}")
    if len(betti_Y.steps) > r - 2:
        raise ShapeError(
            f"a curve in P^{n} has at most {r - 2} resolution steps, table has {len(betti_Y.steps)}"
        )

    steps: list[list[int]] = []
    tags: list[list[str]] = []

    def emit(cone_part: list[int], quadric_part: Sequence[int], shifted: Sequence[int]) -> None:
        degrees = cone_part + list(quadric_part) + [m + b for b in shifted]
        steps.append(degrees)
        tags.append([CONE] * len(cone_part) + [QUADRIC] * len(quadric_part)
                    + [CONE] * len(shifted))

    emit([m + 1] * (r - 1), betti_Y.step(1), ())
    for k in range(2, r - 1):
        emit([m + k] * math.comb(r - 1, k), betti_Y.step(k), betti_Y.step(k - 1))
    emit([m + r - 1], (), betti_Y.step(r - 2))
    return BettiTable(r, tuple(map(tuple, steps)), tuple(map(tuple, tags)))


@functools.lru_cache(maxsize=None)
def _shifted_binomial(shift: int, n: int) -> sympy.Poly:
    """C(t + shift + n, n) expanded as a polynomial in t."""
    poly = sympy.Poly(1, t, domain="QQ")
    for i in range(n):
        poly = poly * sympy.Poly(t + shift + n - i, t, domain="QQ")
    return poly * sympy.Rational(1, math.factorial(n))


def hilbert_polynomial(betti: BettiTable) -> sympy.Poly:
    """chi(O_X(t)) = C(t+N, N) + sum_k (-1)^k sum_j C(t - b_kj + N, N)."""
    n = betti.ambient
    chi = _shifted_binomial(0, n)
    for k, step in enumerate(betti.steps, start=1):
        sign = -1 if k % 2 else 1
        for b in step:
            chi = chi + sign * _shifted_binomial(-b, n)
    return chi


def curve_hilbert_polynomial(d: int, g: int) -> sympy.Poly:
    return sympy.Poly(d * t + 1 - g, t, domain="QQ")


def format_polynomial(poly: sympy.Poly) -> str:
    """Render as ``a*t + b`` (higher powers as ``c*t^k``) with exact rationals."""
    coeffs = poly.all_coeffs()[::-1]
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = sympy.Rational(coeffs[power])
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            var = "t" if power == 1 else f"t^{power}"
            body = var if mag == 1 else f"{mag}*{var}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _hilbert_numerator(curve: BaseCurve) -> list[int]:
    """Integer coefficients of (1 - t)^r * (1 + sum_{n>=1} (n*e + 1 - gamma) t^n)."""
    e, gamma = curve.e, curve.gamma
    r = e - gamma + 1
    length = r + 3
    series = [1] + [n * e + 1 - gamma for n in range(1, length)]
    kernel = [(-1) ** i * math.comb(r, i) for i in range(r + 1)]
    numerator = [
        sum(kernel[i] * series[n - i] for i in range(min(n, r) + 1)) for n in range(length)
    ]
    # (1-t)^2 H(t) is a polynomial of degree <= 2, so nothing survives past t^r
    assert all(c == 0 for c in numerator[r + 1:]), numerator
    while numerator and numerator[-1] == 0:
        numerator.pop()
    return numerator


def pure_betti_from_hilbert(curve: BaseCurve) -> BettiTable:
    """Pure linear Betti table read off the Hilbert numerator, when the signs allow it.

    Raises PurityError (carrying the numerator) if the numerator is not of the
    form 1 - c2 t^2 + c3 t^3 - ... with every c_k > 0.
    """
    if not curve.cg_range:
        raise ValueError("pure_betti_from_hilbert needs e >= 2*gamma + 1")
    numerator = _hilbert_numerator(curve)
    if len(numerator) < 2 or numerator[0] != 1 or numerator[1] != 0:
        raise PurityError("numerator must start 1 + 0*t", numerator)
    steps = []
    for power in range(2, len(numerator)):
        c = numerator[power]
        expected_sign = -1 if power % 2 == 0 else 1
        if c == 0 or (c > 0) != (expected_sign > 0):
            raise PurityError(
                f"coefficient {c} of t^{power} breaks the alternating linear pattern",
                numerator,
            )
        steps.append((power,) * abs(c))
    return BettiTable(curve.e - curve.gamma, tuple(steps))


def degree_separation_check(betti_X: BettiTable, m: int) -> bool:
    """True iff quadric-strand syzygies sit strictly below the cone generators.

    Compares step-2 quadric-strand twists with step-1 cone-strand twists.  The
    quadric strand's step-2 twists are floored by (least quadric generator
    twist + 1), the lowest degree any syzygy among those generators can have;
    this keeps the verdict meaningful when the base resolution has no second
    step.  Untagged tables are split by degree: <= m quadric, >= m + 1 cone.
    """
    if betti_X.strands is not None:
        quad1 = betti_X.strand(1, QUADRIC)
        quad2 = betti_X.strand(2, QUADRIC)
        cone1 = betti_X.strand(1, CONE)
    else:
        quad1 = tuple(b for b in betti_X.step(1) if b <= m)
        quad2 = tuple(b for b in betti_X.step(2) if b <= m)
        cone1 = tuple(b for b in betti_X.step(1) if b >= m + 1)
    if not quad1 or not cone1:
        return True
    syzygy_degrees = set(quad2) | {min(quad1) + 1}
    return max(syzygy_degrees) < min(cone1)


def expected_invariants(betti_Y: BettiTable, m: int) -> tuple[int, int]:
    """(d, g) of X_m predicted from the Hilbert polynomial d_Y*t + 1 - g_Y of Y."""
    poly = hilbert_polynomial(betti_Y)
    if poly.degree() != 1:
        raise ShapeError(f"table is not a curve table: Hilbert polynomial {format_polynomial(poly)}")
    d_coeff, const = (sympy.Rational(c) for c in poly.all_coeffs())
    if d_coeff.q != 1 or const.q != 1:
        raise ShapeError("curve Hilbert polynomial must have integer coefficients")
    d_y, g_y = int(d_coeff), 1 - int(const)
    return m * d_y + 1, math.comb(m, 2) * d_y + m * g_y

