"""Smoke tests for the python bindings: one cheap check per exposed area."""

import math

import dualtube_py as dt


def test_chiral_vector_basics():
    cv = dt.ChiralVector(1, 5)  # constructor canonicalizes to q <= p
    assert (cv.p, cv.q) == (5, 1)
    assert cv.circumference() == 6
    assert cv.physical()
    assert not cv.zigzag() and not cv.armchair()
    assert math.isclose(cv.c(), 5 / 6)


def test_canonicalize():
    assert dt.canonicalize(5, 0, 5, 0) == (0, 0)
    assert dt.canonicalize(5, 1, 10, 2) == (0, 0)


def test_walk_counts_and_moments():
    assert dt.closed_walk_count(None, 2) == "15"
    assert dt.closed_walk_count((5, 0), 5) == "4655"
    table = dt.moments(5, 1, 6)
    assert set(table) == {"indicator", "binomial_ratio", "seven_multinomial", "oracle"}
    assert table["oracle"] == ["1", "3", "15", "93", "639", "4653", "35181"]
    tri = dt.moments_triangular(6)
    assert tri["triangular_sum"] == ["1", "3", "15", "93", "639", "4653", "35169"]


def test_sampler_determinism_and_range():
    a = dt.sample(5, 1, 1000, seed=7)
    b = dt.sample(5, 1, 1000, seed=7)
    assert a == b
    assert all(0.0 <= x <= 9.0 for x in a)
    lim = dt.sample_limit(0.5, 1000, seed=7)
    assert all(0.0 <= x <= 9.0 for x in lim)


def test_densities():
    z = dt.build_zigzag_density(5)
    assert abs(z.total_mass() - 1.0) < 1e-6
    assert len(z.piece_intervals()) == 5

    z6 = dt.build_zigzag_density(6)
    assert z6.atoms() == [(1.0, "1/6")]

    a = dt.build_armchair_density(5)
    assert abs(a.total_mass() - 1.0) < 1e-6

    value, err = dt.pdf_triangular(2.0, 80)
    assert abs(value - 0.1504653713) < 1e-6
    assert err < 1e-3


def test_mgf():
    v, _ = dt.mgf(5, 1, 0.0)
    assert abs(v - 1.0) < 1e-12
    lhs, rhs, gap = dt.verify_integral_identity(0.1)
    assert gap < 1e-6
    assert abs(dt.bessel_i0(1.0) - 1.2660658777520084) < 1e-12


def test_finite_graph():
    g = dt.finite_dual_graph(0)
    assert g["n"] == 32
    assert len(g["edges"]) == 90
    assert sorted(set(g["degrees"])) == [5, 6]
    assert g["trace_moments"][0] == "1/1" or g["trace_moments"][0] == "1"
