import json

import pytest
from hypothesis import given, strategies as st

from conecurves.errors import HypothesisError
from conecurves.lattice import BaseCurve, h0_base, E, q
from conecurves.ledger import (
    ConeCurveInvariants,
    expected_dimension,
    family_dimension,
    linear_series_dimension,
    superabundance,
    superabundance_closed_form,
    tangent_dimension,
    verify_main_theorem,
)

GRID = [(gamma, e) for gamma in range(3, 9) for e in range(4 * gamma + 5, 4 * gamma + 31)]


def test_invariants():
    inv = ConeCurveInvariants(3, 17)
    assert (inv.d, inv.g, inv.r) == (52, 60, 15)
    assert inv.main_theorem_valid
    assert not ConeCurveInvariants(3, 17, m=2).main_theorem_valid
    assert not ConeCurveInvariants(3, 16).main_theorem_valid


class TestExpectedDimension:
    def test_main_pair(self):
        assert expected_dimension(52, 60, 15) == 124

    @pytest.mark.parametrize("d", [1, 7, 100])
    def test_elliptic_space_curves(self, d):
        assert expected_dimension(d, 1, 3) == 4 * d

    def test_small(self):
        assert expected_dimension(10, 9, 5) == 44


class TestFamilyDimension:
    def test_terms(self):
        ledger = family_dimension(3, 17)
        assert ledger.values() == [6, 3, 255, 1, -16, 99]
        assert ledger.total == 348 == 15**2 + 7 * 17 + 4

    def test_closed_form(self):
        assert family_dimension(4, 21).total == 475

    @pytest.mark.parametrize("gamma,e", [(3, 16), (2, 100), (0, 5)])
    def test_range_guard(self, gamma, e):
        with pytest.raises(HypothesisError):
            family_dimension(gamma, e)

    @pytest.mark.parametrize("gamma,e", GRID)
    def test_linear_series_term_by_hand(self, gamma, e):
        # Riemann-Roch on each summand B - kE of the splitting, written out independently
        curve = BaseCurve(gamma, e)
        by_hand = sum(h0_base(3 * E + q - k * E, curve) for k in range(4)) - 1
        assert family_dimension(gamma, e).terms[-1].value == by_hand == 6 * e - 3 * gamma + 6


class TestTangentDimension:
    def test_terms(self):
        ledger = tangent_dimension(3, 17)
        assert ledger.values() == [101, 233, 15, 0]
        assert ledger.values()[1] + ledger.values()[2] == 248
        assert ledger.total == 349

    def test_one_more_than_family(self):
        assert tangent_dimension(3, 17).total - family_dimension(3, 17).total == 1

    def test_closed_form(self):
        assert tangent_dimension(5, 25).total == 621

    def test_cited_terms_flagged(self):
        flags = [t.assumed for t in tangent_dimension(3, 17).terms]
        assert flags == [False, False, True, True]


class TestSuperabundance:
    def test_minimum(self):
        assert superabundance(3, 17) == 224

    def test_next(self):
        assert superabundance(3, 18) == 257 == superabundance_closed_form(3, 18)

    def test_difference_path(self):
        assert superabundance(4, 21) == 475 - expected_dimension(64, 75, 18)

    def test_grid(self):
        values = {cell: superabundance(*cell) for cell in GRID}
        assert min(values.values()) == 224
        assert [cell for cell, v in values.items() if v == 224] == [(3, 17)]

    @given(st.integers(3, 40), st.integers(0, 500))
    def test_closed_form_agrees(self, gamma, offset):
        e = 4 * gamma + 5 + offset
        assert superabundance(gamma, e) == superabundance_closed_form(gamma, e) >= 224


class TestVerify:
    def test_main_pair(self):
        report = verify_main_theorem(3, 17)
        assert report.all_pass
        assert (report.dim_family, report.dim_tangent, report.superabundance) == (348, 349, 224)

    def test_large(self):
        report = verify_main_theorem(10, 45)
        assert report.all_pass and report.dim_family == 1615

    def test_range_guard(self):
        with pytest.raises(HypothesisError):
            verify_main_theorem(3, 10)

    def test_with_betti(self):
        report = verify_main_theorem(3, 17, with_betti=True)
        assert report.all_pass
        names = [c.name for c in report.checks]
        assert "cg_hilbert_polynomial[gamma=0,e=3,m=3]" in names

    def test_json_schema(self):
        doc = json.loads(json.dumps(verify_main_theorem(3, 17).to_dict()))
        assert set(doc) == {"gamma", "e", "d", "g", "r", "checks", "dim_family",
                            "dim_tangent", "superabundance"}
        for check in doc["checks"]:
            assert set(check) == {"name", "pass", "lhs", "rhs", "assumed"}
        assumed = {c["name"] for c in doc["checks"] if c["assumed"]}
        assert "tangent - family = 1" in assumed

    def test_linear_series_generalizes(self):
        assert linear_series_dimension(3, 17, 3) == 99
        # m = 2: h0(2E+q) + h0(E+q) + h0(q) - 1
        assert linear_series_dimension(3, 17, 2) == (35 - 2) + (18 - 2) + 1 - 1
