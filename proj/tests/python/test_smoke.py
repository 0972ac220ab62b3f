import math

import pytest

import halfball


def test_areas_match_closed_forms():
    assert halfball.area("ball", 1.0) == pytest.approx(4 * math.pi * math.sinh(0.5) ** 2, rel=1e-14)
    assert halfball.area("half_ball", 2.0) == halfball.area("ball", 2.0) / 2
    assert halfball.area("rectangle", 1.0) == pytest.approx(2 * math.e, rel=1e-14)
    mean, se = halfball.mc_area("trigonon", 0.0, 1.0, 2.0, 200000, seed=3)
    assert abs(mean - halfball.area("trigonon", 2.0)) <= 4 * se


def test_distances_agree_across_backends():
    d = halfball.distance_h2(0.0, 1.0, 1.0, 2.0)
    assert d == pytest.approx(2 * math.asinh(math.sqrt(2) / (2 * math.sqrt(2))), rel=1e-14)
    assert halfball.dist_s("dr-abelian:1", [], [0.0], 1.0, [], [1.0], 2.0) == pytest.approx(d, rel=1e-12)
    assert halfball.dist_s("dr-heisenberg:1", [0, 0], [0], 1.0, [0, 0], [0], math.e) == pytest.approx(1.0)


def test_membership_and_constants():
    assert halfball.contains("half_ball", 0.0, 1.0, 1.0, 0.0, 0.8)
    assert not halfball.contains("half_ball", 0.0, 1.0, 1.0, 0.0, 1.2)
    assert halfball.nu("dr-heisenberg:1") == 2.0
    assert halfball.lambda_star() == pytest.approx(0.0377141, abs=1e-7)
    assert halfball.eta_chain_radius(2.0**-9) == 3
    assert halfball.eta_kappa() == pytest.approx(0.1446, abs=1e-4)


def test_packing_levels():
    levels = halfball.packing_levels(2)
    assert [lv["n"] for lv in levels[:2]] == [2, 4]
    assert all(lv["disjointness_violations"] == 0 for lv in levels)


def test_run_returns_report():
    report = halfball.run("validate", space="dr-heisenberg:1", seed=5)
    assert report["meta"]["seed"] == 5
    assert all(a["pass"] for a in report["assertions"])
    with pytest.raises(halfball.ExperimentFailed) as info:
        halfball.run("validate", space="nowhere")
    assert info.value.code == 2
