import math

import pytest

import slet


def test_hydrogen_is_exact():
    b = slet.solve("coulomb", l=1, n_radial=2)
    assert b.E_total == pytest.approx(-1 / 16, abs=1e-10)
    assert abs(b.E2_over_lbar2) < 1e-10


def test_linear_potential_near_airy_root():
    b = slet.solve("r")
    assert b.E_total == pytest.approx(2.338652044387925, rel=1e-10)
    assert len(b.eps) == 4 and len(b.delta) == 6


def test_expression_with_params():
    b = slet.solve("A*r^nu", {"A": 1.0, "nu": 2.0}, l=0, n_radial=1)
    assert b.E_total == pytest.approx(7.0, rel=1e-10)


def test_donor_2d():
    b = slet.solve("donor", {"gamma": 0.0, "m": 0.0}, dim=2)
    assert b.E_total == pytest.approx(-4.0, rel=1e-9)


def test_oracle_agrees():
    r = slet.oracle("r", box_radius=20.0, grid_points=2000)
    assert r.converged
    assert r.energy_extrapolated == pytest.approx(2.338107410459767, abs=1e-7)


def test_closed_forms():
    assert slet.coulomb3d(0, 0) == -1.0
    assert slet.landau(2.0, 1, -1) == pytest.approx(6.0)
    c = slet.logarithmic(1.0, 1.0)
    assert c.lbar == pytest.approx((1 + math.sqrt(2)) / 2)


def test_potential_and_parser():
    p = slet.Potential("harmonic", {"B": 2.0})
    assert p.value(3.0) == pytest.approx(9.0)
    assert p.derivatives(3.0)[:3] == pytest.approx([9.0, 6.0, 2.0])
    assert slet.canonical("1+2*r") == "(1 + (2*r))"


def test_errors():
    with pytest.raises(ValueError):
        slet.Potential("2**/r")
    with pytest.raises(ValueError):
        slet.solve("harmonic")
    with pytest.raises(slet.SletError):
        slet.solve("2/r")


def test_discrepancy_report():
    ids = {d["id"] for d in slet.discrepancies()}
    assert "zero-field-2d-donor" in ids
