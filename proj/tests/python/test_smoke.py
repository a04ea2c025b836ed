import cmath
import os

import pytest

import htspec

FIXTURES = os.environ.get(
    "HTSPEC_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
)

SINGLE_EDGE = {"k": 3, "n": 3, "edges": [[0, 1, 2]], "weighting": "adjacency-unit"}
LOOSE_PATH = {"k": 3, "n": 5, "edges": [[0, 1, 2], [2, 3, 4]]}


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_matching_polynomial_single_edge():
    poly = htspec.matching_polynomial(SINGLE_EDGE)
    assert poly["backend"] == "rational"
    assert poly["coeffs"] == [-1, 0, 0, 1]


def test_recursion_matches_enumeration():
    doc = fixture("path3_rational.json")
    assert htspec.matching_polynomial(doc)["coeffs"] == htspec.matching_polynomial(doc, enumerate_matchings=True)["coeffs"]


def test_phi_loose_path():
    assert htspec.phi(LOOSE_PATH)["coeffs"] == [-2, 0, 0, 1]


def test_spectrum_loose_path():
    report = htspec.spectrum(LOOSE_PATH)
    values = [complex(*z) for z in report["eigenvalues"]]
    assert len(values) == 7
    cube_two = 2 ** (1 / 3)
    assert any(abs(z - cube_two) < 1e-9 for z in values)
    assert report["counts"]["uncertified"] == 0
    assert abs(report["spectral_radius"] - cube_two) < 1e-9


def test_verify_round_trip():
    report = htspec.spectrum(fixture("star3.json"))
    summary = htspec.verify(fixture("star3.json"), report)
    assert summary["all_certified"]
    assert summary["uncertified"] == 0


def test_radius_agrees_with_power():
    rho = htspec.spectral_radius(fixture("star3_signless.json"))
    power = htspec.power_spectral_radius(fixture("star3_signless.json"))
    assert abs(rho - power["rho"]) < 1e-6


def test_apply_and_residual():
    assert htspec.apply(SINGLE_EDGE, [1, 1, 1]) == [1, 1, 1]
    assert htspec.residual(SINGLE_EDGE, 2, [1, 1, 1]) == pytest.approx(1.0)
    report = htspec.spectrum(SINGLE_EDGE, vectors=True)
    for root in report["roots"]:
        lam = complex(*root["lambda"])
        x = [complex(*z) for z in root["x"]]
        assert htspec.residual(SINGLE_EDGE, lam, x) <= 1e-8


def test_mu_tilde_root():
    assert abs(htspec.mu_tilde(LOOSE_PATH, 2 ** (1 / 3))) < 1e-14
    assert abs(htspec.mu_tilde(SINGLE_EDGE, cmath.exp(2j * cmath.pi / 3))) < 1e-14


def test_subtrees_star():
    assert len(htspec.subtrees(fixture("star3.json"))) == 14


def test_errors():
    with pytest.raises(htspec.DomainError):
        htspec.spectrum(fixture("cyclic_triangle.json"))
    with pytest.raises(ValueError):
        htspec.spectral_radius(fixture("complex_weights.json"))
    assert htspec.validate(fixture("cyclic_triangle.json"))["acyclic"] is False
