import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import brentq

from src.core.exceptions import DomainError, PhysicalityError, ReportInvariantError
from src.models.measurement import WeakStrength
from src.models.report import MeasureReport
from src.models.state import CorrelationTriple, WernerParams
from src.services.correlations import (
    binary_entropy,
    build_report,
    c_max,
    classical_correlation,
    discord_bell_diagonal,
    eof_werner,
    maximal_holevo,
    super_classical_correlation,
    super_discord_bell_diagonal,
    weak_maximal_holevo,
    werner_concurrence,
    werner_discord,
    werner_super_discord,
)
from src.services.qstate import mutual_information
from tests.conftest import physical_triples, strengths, werner_z

WERNER_GRID = np.round(np.arange(1, 101) * 0.01, 2)


def werner(z):
    return WernerParams(z).triple()


class TestBinaryEntropy:
    @pytest.mark.parametrize("p, expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.95, 0.28640)])
    def test_values(self, p, expected):
        assert binary_entropy(p) == pytest.approx(expected, abs=1e-5)

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_symmetric(self, p):
        assert binary_entropy(p) == pytest.approx(binary_entropy(1.0 - p), abs=1e-12)

    @pytest.mark.parametrize("p", [-0.1, 1.1])
    def test_domain(self, p):
        with pytest.raises(DomainError):
            binary_entropy(p)


class TestClosedForms:
    @pytest.mark.parametrize(
        "c, expected",
        [((0.5, 0.3, 0.1), 0.5), ((-0.2, 0.7, 0.1), 0.7), ((0.0, 0.0, 0.0), 0.0)],
    )
    def test_c_max(self, c, expected):
        assert c_max(CorrelationTriple(*c)) == expected

    def test_maximal_holevo_endpoints(self):
        assert maximal_holevo(CorrelationTriple(0, 0, 0)) == pytest.approx(0.0, abs=1e-15)
        assert maximal_holevo(CorrelationTriple(1, 1, -1)) == pytest.approx(1.0, abs=1e-15)

    def test_maximal_holevo_example(self):
        assert maximal_holevo(CorrelationTriple(0.9, 0.0, 0.0)) == pytest.approx(0.71360, abs=1e-5)

    @given(physical_triples)
    def test_classical_correlation_equals_maximal_holevo(self, c):
        assert classical_correlation(c) == pytest.approx(maximal_holevo(c), abs=1e-12)

    def test_werner_classical_correlation(self):
        assert classical_correlation(werner(0.5)) == pytest.approx(0.18872, abs=1e-5)

    def test_weak_werner_example(self):
        assert weak_maximal_holevo(werner(0.5), WeakStrength(0.25)) == pytest.approx(0.01085, abs=1e-4)

    @given(physical_triples, strengths)
    def test_weak_equals_super_classical(self, c, x):
        x = WeakStrength(x)
        assert super_classical_correlation(c, x) == pytest.approx(weak_maximal_holevo(c, x), abs=1e-12)

    @given(physical_triples)
    def test_weak_strong_limit(self, c):
        assert weak_maximal_holevo(c, WeakStrength(20.0)) == pytest.approx(maximal_holevo(c), abs=1e-12)

    def test_weak_vanishes_without_correlation(self):
        assert weak_maximal_holevo(CorrelationTriple(0, 0, 0), WeakStrength(3.0)) == pytest.approx(0.0, abs=1e-15)

    @given(physical_triples)
    def test_weak_nondecreasing_in_strength(self, c):
        values = [weak_maximal_holevo(c, WeakStrength(x)) for x in (0.1, 0.5, 1.0, 2.0, 5.0)]
        assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))

    def test_weak_nondecreasing_in_correlation(self):
        x = WeakStrength(0.7)
        values = [weak_maximal_holevo(CorrelationTriple(c, 0, 0), x) for c in np.linspace(0, 1, 21)]
        assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))


class TestDiscord:
    def test_product_state(self):
        assert discord_bell_diagonal(CorrelationTriple(0, 0, 0)) == pytest.approx(0.0, abs=1e-12)

    def test_singlet(self):
        assert discord_bell_diagonal(CorrelationTriple(-1, -1, -1)) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("z", WERNER_GRID)
    def test_werner_formula_agrees(self, z):
        assert werner_discord(z) == pytest.approx(discord_bell_diagonal(werner(z)), abs=1e-12)

    @pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 2.5])
    def test_werner_super_formula_agrees(self, x):
        x = WeakStrength(x)
        for z in WERNER_GRID:
            expected = super_discord_bell_diagonal(werner(z), x)
            assert werner_super_discord(z, x) == pytest.approx(expected, abs=1e-12)

    @given(physical_triples)
    def test_super_discord_strong_limit(self, c):
        strong = super_discord_bell_diagonal(c, WeakStrength(20.0))
        assert strong == pytest.approx(discord_bell_diagonal(c), abs=1e-10)

    @given(physical_triples, strengths)
    def test_discord_bounds(self, c, x):
        x = WeakStrength(x)
        assert discord_bell_diagonal(c) >= -1e-12
        assert super_discord_bell_diagonal(c, x) >= discord_bell_diagonal(c) - 1e-12
        assert super_discord_bell_diagonal(c, x) <= mutual_information(c) + 1e-12

    def test_unphysical_is_rejected(self):
        with pytest.raises(PhysicalityError):
            discord_bell_diagonal(CorrelationTriple(1, 1, 1))

    def test_unphysical_allowed(self):
        value = discord_bell_diagonal(CorrelationTriple(0.9, 0.9, 0.9), allow_unphysical=True)
        assert math.isfinite(value)


class TestWernerOrdering:
    @pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 2.5])
    def test_ordering(self, x):
        x = WeakStrength(x)
        for z in WERNER_GRID:
            c = werner(z)
            super_discord = super_discord_bell_diagonal(c, x)
            discord = discord_bell_diagonal(c)
            classical = classical_correlation(c)
            weak = super_classical_correlation(c, x)
            assert super_discord >= discord - 1e-12
            assert discord >= classical - 1e-12
            assert classical >= weak - 1e-12

    def test_endpoint(self):
        c = werner(1.0)
        assert classical_correlation(c) == pytest.approx(1.0, abs=1e-9)
        assert discord_bell_diagonal(c) == pytest.approx(1.0, abs=1e-9)
        assert eof_werner(WernerParams(1.0)) == pytest.approx(1.0, abs=1e-9)


class TestEntanglementOfFormation:
    @pytest.mark.parametrize("alpha", [-1.0, -0.5, 0.0, 0.25, 0.5])
    def test_separable_region(self, alpha):
        assert werner_concurrence(WernerParams.from_alpha(alpha)) == 0.0
        assert eof_werner(WernerParams.from_alpha(alpha)) == 0.0

    @given(werner_z)
    def test_concurrence_in_terms_of_z(self, z):
        expected = max(0.0, (3 * z - 1) / 2)
        assert werner_concurrence(WernerParams(z)) == pytest.approx(expected, abs=1e-12)

    def test_value(self):
        params = WernerParams(0.8)
        assert werner_concurrence(params) == pytest.approx(0.7, abs=1e-12)
        expected = binary_entropy(0.5 * (1 + math.sqrt(1 - 0.49)))
        assert eof_werner(params) == pytest.approx(expected, abs=1e-12)

    def test_maximally_entangled(self):
        assert eof_werner(WernerParams.from_alpha(1.0)) == pytest.approx(1.0, abs=1e-12)

    def test_crossing_with_classical_correlation(self):
        def gap(z):
            return classical_correlation(werner(z)) - eof_werner(WernerParams(z))

        assert gap(0.4) > 0
        assert gap(0.95) < 0
        root = brentq(gap, 0.4, 0.95, xtol=1e-12)
        assert 0.4 < root < 0.95
        assert abs(gap(root)) < 1e-9


class TestReport:
    def test_plain(self):
        report = build_report(CorrelationTriple(0.5, 0.3, 0.1))
        assert report.x is None
        assert report.super_discord is None
        assert report.eof is None
        assert report.classical_correlation == report.maximal_holevo
        assert report.discord == pytest.approx(report.mutual_information - report.classical_correlation, abs=1e-12)

    def test_weak_and_werner(self):
        report = build_report(werner(0.5), WeakStrength(1.0))
        assert report.eof == pytest.approx(eof_werner(WernerParams(0.5)), abs=1e-15)
        assert report.super_classical_correlation == report.weak_maximal_holevo
        assert report.super_discord == pytest.approx(werner_super_discord(0.5, WeakStrength(1.0)), abs=1e-12)

    def test_dict_shape(self):
        data = build_report(werner(0.5), WeakStrength(1.0)).to_dict()
        assert data["c"] == [-0.5, -0.5, -0.5]
        assert set(data) >= {
            "mutual_information", "maximal_holevo", "classical_correlation", "discord",
            "weak_maximal_holevo", "super_classical_correlation", "super_discord", "eof",
        }

    def test_unphysical(self):
        with pytest.raises(PhysicalityError):
            build_report(CorrelationTriple(1, 1, 1))
        report = build_report(CorrelationTriple(1, 1, 1), allow_unphysical=True)
        assert report.eof is None

    def test_inconsistent_report_is_an_internal_error(self):
        with pytest.raises(ReportInvariantError):
            MeasureReport(CorrelationTriple(0, 0, 0), 0.5, 0.2, 0.3, 0.3)
        assert not issubclass(ReportInvariantError, ValueError)
