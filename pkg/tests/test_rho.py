import math
from fractions import Fraction

import numpy as np
import pytest

from densediv._constants import EULER_GAMMA
from densediv.errors import DomainError
from densediv.gzero import find_lambda
from densediv.rho import (
    build_rho_table,
    cached_rho_table,
    rho_asymptotic,
    rho_closed_form_12,
)

C1 = 1.0 / (1.0 - math.exp(-EULER_GAMMA))


class TestBasics:
    def test_flat_below_one(self):
        t = cached_rho_table(Fraction(1), u_max=6.0)
        for u in (0.0, 0.25, 0.5, 1.0):
            assert t(u) == 1.0
        assert t(-0.5) == 0.0

    def test_closed_form_on_12(self):
        # rho_a = 1 + log((1+a u)/(u(1+a))) there; derived by substituting
        # omega = 1/t into the recurrence
        for a in (Fraction(0), Fraction(1, 2), Fraction(1)):
            t = cached_rho_table(a, u_max=6.0)
            for u in np.linspace(1.0, 2.0, 33):
                assert abs(t(float(u)) - rho_closed_form_12(a, float(u))) < 1e-9

    def test_known_dickman_values(self):
        t = cached_rho_table(Fraction(0), u_max=6.0)
        assert t(2.0) == pytest.approx(1.0 - math.log(2.0), abs=1e-9)
        assert t(3.0) == pytest.approx(0.0486083882911316, abs=1e-8)

    def test_rho1_at_2(self):
        t = cached_rho_table(Fraction(1), u_max=6.0)
        assert t(2.0) == pytest.approx(1.0 - math.log(4.0 / 3.0), abs=1e-9)


class TestInvariants:
    @pytest.mark.parametrize("a", [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)])
    def test_monotone_and_sandwiched(self, a):
        t = cached_rho_table(a, u_max=30.0)
        t0 = cached_rho_table(Fraction(0), u_max=30.0)
        assert np.all(t.values[t.us <= 1.0] == 1.0)
        assert np.all(np.diff(t.values) <= 1e-12)
        assert np.all(t.values <= 1.0 + 1e-12)
        assert np.all(t0.values <= t.values + 1e-8)

    def test_dickman_delay_equation(self):
        # independent route: u rho(u) = int_{u-1}^{u} rho(t) dt for Dickman
        t = cached_rho_table(Fraction(0), u_max=30.0)
        h = float(t.step)
        per = int(round(1.0 / h))
        vals = t.values
        w = np.ones(per + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        for j in range(per, len(vals), 64):
            integral = h / 3.0 * float(w @ vals[j - per : j + 1])
            # the identity scales the table's 1e-8 absolute budget by u
            assert abs(t.us[j] * vals[j] - integral) < 2e-8 * (1.0 + t.us[j])

    def test_grid_refinement(self):
        coarse = build_rho_table(Fraction(1), u_max=6.0, step=Fraction(1, 128))
        fine = build_rho_table(Fraction(1), u_max=6.0, step=Fraction(1, 256))
        assert np.max(np.abs(coarse.values - fine.values[::2])) < 10 * coarse.accuracy

    def test_asymptote_a1(self):
        t = cached_rho_table(Fraction(1), u_max=30.0)
        for u in np.arange(15.0, 30.0 + 1e-9, 0.5):
            ratio = t(float(u)) * (1.0 + u) / C1
            assert 0.995 <= ratio <= 1.005

    def test_ratio_sandwich_table_set(self):
        # rho_a(u) (1+a u)^lambda_a within [C_a/2, 2 C_a].  The product starts
        # at 1 < C_a/2 (rho_a(0) = 1) and the table cannot resolve rho below
        # its 1e-8 budget, so the band is asserted from the early crossing of
        # C_a/2 through the resolvable range rho_a >= 1e-5.
        for i in range(1, 11):
            a = Fraction(1, i)
            cert = find_lambda(a)
            t = cached_rho_table(a, u_max=30.0)
            prod = t.values * (1.0 + float(a) * t.us) ** cert.lam
            cross = int(np.argmax(prod >= cert.C / 2.0))
            assert prod[cross] >= cert.C / 2.0, f"a=1/{i}: band never entered"
            assert t.us[cross] <= 4.0, f"a=1/{i}: band entered late (u={t.us[cross]})"
            sel = (t.values >= 1e-5) & (t.us >= t.us[cross])
            assert np.all(prod[sel] >= cert.C / 2.0), f"a=1/{i}"
            assert np.all(prod[sel] <= 2.0 * cert.C), f"a=1/{i}"


class TestAsymptoticModel:
    def test_model_at_zero(self):
        cert = find_lambda(Fraction(1))
        assert rho_asymptotic(Fraction(1), 0.0, cert) == pytest.approx(cert.C)

    def test_model_a1(self):
        cert = find_lambda(Fraction(1))
        assert rho_asymptotic(Fraction(1), 9.0, cert) == pytest.approx(C1 / 10.0, rel=1e-5)

    def test_model_half_at_10(self):
        # printed-table arithmetic: 3.7815 / 6^2.46206
        cert = find_lambda(Fraction(1, 2))
        got = rho_asymptotic(Fraction(1, 2), 10.0, cert)
        assert got == pytest.approx(3.7815 / 6.0**2.46206, rel=1e-3)

    def test_certificate_mismatch(self):
        cert = find_lambda(Fraction(1))
        with pytest.raises(DomainError):
            rho_asymptotic(Fraction(1, 2), 1.0, cert)


class TestExport:
    def test_csv(self, tmp_path):
        t = build_rho_table(Fraction(1), u_max=2.0, step=Fraction(1, 128))
        cert = find_lambda(Fraction(1))
        path = tmp_path / "rho.csv"
        t.export_csv(path, cert)
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "u,rho,model,ratio"
        assert len(lines) == len(t.us) + 1


class TestValidation:
    def test_step_too_big(self):
        with pytest.raises(DomainError):
            build_rho_table(Fraction(1), u_max=2.0, step=Fraction(1, 64))

    def test_umax_budget(self):
        from densediv.errors import ResourceLimitError

        with pytest.raises(ResourceLimitError):
            build_rho_table(Fraction(1), u_max=600.0)

    def test_negative_a(self):
        with pytest.raises(DomainError):
            build_rho_table(Fraction(-1, 2), u_max=2.0)
