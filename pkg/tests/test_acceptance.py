import math
import time

from conecurves.betti import (
    _shifted_binomial,
    cg_transform,
    curve_hilbert_polynomial,
    degree_separation_check,
    hilbert_polynomial,
    rational_normal_betti,
    t,
)
from conecurves.covers import CoverData, pushforward_summands, riemann_hurwitz_check, summand_degrees
from conecurves.lattice import BaseCurve, cone_curve_class, h0_surface, solve_multiplicity
from conecurves.ledger import (
    ConeCurveInvariants,
    family_dimension,
    superabundance,
    superabundance_closed_form,
    verify_main_theorem,
)

GRID = [(gamma, e) for gamma in range(3, 9) for e in range(4 * gamma + 5, 4 * gamma + 31)]
CG_FIXTURES = [(e, m) for e in range(2, 7) for m in range(2, 6)]


def test_criterion_1_main_theorem_grid(record):
    start = time.perf_counter()
    failures = []
    for gamma, e in GRID:
        report = verify_main_theorem(gamma, e)
        r = ConeCurveInvariants(gamma, e).r
        if not (report.all_pass and report.dim_family == r * r + 7 * e + 4
                and report.dim_tangent == report.dim_family + 1):
            failures.append((gamma, e))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    record("1 main theorem grid", ok, f"{len(GRID)} cells, {elapsed:.3f}s, failures={failures}")
    assert ok


def test_criterion_2_superabundance(record):
    values = {cell: superabundance(*cell) for cell in GRID}
    ok = (superabundance(3, 17) == 224
          and min(values.values()) >= 224
          and all(v == superabundance_closed_form(*cell) for cell, v in values.items()))
    record("2 superabundance", ok, f"sigma(3,17)={values[(3, 17)]}, min={min(values.values())}")
    assert ok


def test_criterion_3_cg_hilbert(record):
    _shifted_binomial.cache_clear()
    start = time.perf_counter()
    bad = []
    for e, m in CG_FIXTURES:
        poly = hilbert_polynomial(cg_transform(rational_normal_betti(e), m))
        target = (m * e + 1) * t + 1 - math.comb(m, 2) * e
        if poly.as_expr() != target or poly != curve_hilbert_polynomial(m * e + 1, math.comb(m, 2) * e):
            bad.append((e, m))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    record("3 CG transform Hilbert polynomials", ok, f"{len(CG_FIXTURES)} fixtures, {elapsed:.3f}s")
    assert ok


def test_criterion_4_riemann_hurwitz(record):
    count = 0
    bad = []
    for m in range(2, 11):
        for gamma in range(0, 11):
            for e in range(2 * gamma + 1, 2 * gamma + 41):
                c = CoverData(BaseCurve(gamma, e), m)
                lhs = 2 * (math.comb(m, 2) * e + m * gamma) - 2
                rhs = m * (2 * gamma - 2) + (m - 1) * (m * e + 2)
                count += 1
                if lhs != rhs or not riemann_hurwitz_check(c):
                    bad.append((m, gamma, e))
    record("4 Riemann-Hurwitz", not bad, f"{count} cases")
    assert not bad


def test_criterion_5_pushforward(record):
    bad = []
    for e in range(7, 61):
        c = CoverData(BaseCurve(3, e), 3)
        if (len(pushforward_summands(c, True)) != 3
                or sum(summand_degrees(c, True)) != -3 * e - 1
                or sum(summand_degrees(c, False)) != -3 * e - 2):
            bad.append(e)
    record("5 pushforward determinants", not bad, "e in 7..60")
    assert not bad


def brute_force_roots(m, curve):
    """Integer search for the roots of e*x^2 - ((2m+1)e + 2gamma)x + m(m+1)e + 2m*gamma."""
    e, gamma = curve.e, curve.gamma
    b, c = (2 * m + 1) * e + 2 * gamma, m * (m + 1) * e + 2 * m * gamma
    return {x for x in range(0, b // e + 2) if e * x * x - b * x + c == 0}


def test_criterion_6_class_identification(record):
    bad = []
    for m in range(2, 11):
        for gamma in range(0, 11):
            for e in range(2 * gamma + 1, 2 * gamma + 21):
                curve = BaseCurve(gamma, e)
                d, g = m * e + 1, math.comb(m, 2) * e + m * gamma
                got = solve_multiplicity(d, g, curve)
                want = {m} if gamma else {m, m + 1}
                if not (got == want == brute_force_roots(m, curve)):
                    bad.append((m, gamma, e, got))
    record("6 class identification", not bad, f"mismatches={bad[:3]}")
    assert not bad


def test_criterion_7_degree_separation(record):
    bad = [(e, m) for e, m in CG_FIXTURES
           if degree_separation_check(cg_transform(rational_normal_betti(e), m), m) != (m >= 3)]
    record("7 degree separation iff m >= 3", not bad, f"{len(CG_FIXTURES)} fixtures, mismatches={bad}")
    assert not bad


def test_criterion_8_ledger_independence(record):
    bad = []
    for gamma, e in GRID:
        curve = BaseCurve(gamma, e)
        recomputed = h0_surface(cone_curve_class(3), curve) - 1
        if not (recomputed == family_dimension(gamma, e).terms[-1].value == 6 * e - 3 * gamma + 6):
            bad.append((gamma, e))
    record("8 linear series term", not bad, f"{len(GRID)} cells")
    assert not bad
