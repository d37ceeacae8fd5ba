import math

import pytest

import steklov


def test_closed_form_anchors():
    assert steklov.sigma_dirichlet(3, 1.0, 1.0, 0) == 2.0
    assert steklov.sigma_neumann(3, 1.0, 1.0, 1) == pytest.approx(1.4, rel=1e-15)
    assert steklov.sigma_neumann(4, 1.0, 1.0, 1) == pytest.approx(45 / 19, rel=1e-15)


def test_bound_report():
    rep = steklov.theorem2_bound(3, 1.0, 1.0, 2.0)
    assert rep.bound == pytest.approx(1.4)
    assert rep.attained_by == "neumann"
    assert rep.alpha + rep.beta == pytest.approx(1.0)


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError, match=r"L < \|R1 - R2\|"):
        steklov.theorem2_bound(3, 1.0, 0.5, 0.4)
    with pytest.raises(steklov.InvalidInputError):
        steklov.sigma_dirichlet(2, 1.0, 1.0, 0)


def test_spectrum_of_near_tent():
    p = steklov.degenerate_profile(1.0, 1.0, 2.0, 1e-3, 2001)
    res = steklov.steklov_spectrum(p, 3, 4)
    assert abs(res.eigenvalues[0]) < 1e-8
    assert res.eigenvalues[1] == pytest.approx(1.4, rel=0.02)
    assert res.grid_size == 2001


def test_random_profile_below_bound():
    bound = steklov.theorem2_bound(3, 1.0, 0.5, 1.0).bound
    for seed in range(5):
        p = steklov.random_profile(1.0, 0.5, 1.0, seed, 1001)
        ok, issues = steklov.validate_profile(p)
        assert ok, issues
        assert steklov.steklov_spectrum(p, 3, 1).eigenvalues[1] < bound


def test_lstar_and_b_n():
    assert steklov.lstar(3, 1.0, 1.0, 1e-10) == pytest.approx(3.0176889899461408, abs=1e-8)
    assert steklov.b_n(3, 1.0, 1.0, 1e-10) == pytest.approx(1.6627588219539138, abs=1e-9)


def test_mixed_oracle_matches_closed_form():
    for k in range(1, 4):
        num = steklov.mixed_eigenvalue_extrapolated(3, 1.0, 1.0, k, "neumann", 2001)
        assert math.isclose(num, steklov.sigma_neumann(3, 1.0, 1.0, k), rel_tol=1e-8)


def test_profile_csv(tmp_path):
    p = steklov.random_profile(1.0, 0.7, 1.3, 4, 129)
    path = tmp_path / "p.csv"
    path.write_text("r,h\n" + "".join(f"{r!r},{h!r}\n" for r, h in zip(p.r_grid, p.h_values)))
    q = steklov.read_profile_csv(str(path))
    assert list(q.h_values) == list(p.h_values)
