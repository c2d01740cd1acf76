import math

import numpy as np
import pytest

import pqbezier as pb


def test_pq_integer_and_binomial():
    assert pb.pq_integer(3, 2.0, 1.0) == 7.0
    assert pb.pq_binomial(4, 2, 0.8, 0.5) == pytest.approx(1.1481, rel=1e-14)
    with pytest.raises(pb.DomainError):
        pb.PQParams(-1.0, 1.0)


def test_basis_row_matches_classical_bernstein():
    row = pb.basis_row(3, 1.0, 1.0, 0.5)
    np.testing.assert_allclose(row, [0.125, 0.375, 0.375, 0.125], rtol=1e-15)
    row = pb.basis_row(12, 10.0, 5.0, 0.3)
    assert abs(row.sum() - 1.0) < 1e-12
    assert (row >= 0).all()


def test_curve_roundtrip_through_numpy():
    pts = np.array([[0.0, 0.0], [1.0, 2.0], [2.0, 0.0]])
    c = pb.Curve(pts, 0.9, 0.6)
    np.testing.assert_allclose(c.eval(0.5), [0.9, 1.0], rtol=1e-14)
    np.testing.assert_allclose(c.decasteljau_matrix(0.5), c.eval(0.5), rtol=1e-12)
    up = c.elevate(2)
    for t in np.linspace(0, 1, 21):
        np.testing.assert_allclose(up.eval(t), c.eval(t), atol=1e-12)
    r = c.reverse()
    np.testing.assert_allclose(r.eval(0.75), c.eval(0.25), atol=1e-12)
    samples = c.sample(11)
    assert samples.shape == (11, 2)
    crossings, changes = c.crossings([0.0, 0.5], [2.0, 0.5])
    assert crossings <= changes
    assert c.to_svg().startswith("<?xml")


def test_endpoint_derivative():
    c = pb.Curve(np.array([[0.0, 0.0], [1.0, 3.0], [3.0, 3.0], [4.0, 0.0]]), 0.8, 0.5)
    d0, _ = c.endpoint_derivatives()
    np.testing.assert_allclose(d0, [2.015625, 3 * 2.015625], rtol=1e-14)


def test_surface():
    net = np.zeros((2, 3, 3))
    for i in range(2):
        for j in range(3):
            net[i, j] = [i, j, i * j]
    s = pb.Surface(net, 0.9, 0.5, 1.2, 0.4)
    np.testing.assert_allclose(s.eval(0.0, 0.0), net[0, 0])
    np.testing.assert_allclose(s.eval(1.0, 1.0), net[1, 2], atol=1e-15)
    np.testing.assert_allclose(s.decasteljau(0.3, 0.6), s.eval(0.3, 0.6), atol=1e-12)
    iso = s.iso_curve("v", 0.4)
    np.testing.assert_allclose(iso.eval(0.7), s.eval(0.7, 0.4), atol=1e-12)


def test_operators_accept_callables_and_labels():
    x = 0.3
    assert pb.lupas_operator("t2", 4, 0.9, 0.6, x) == pytest.approx(0.16358974358974358974, rel=1e-14)
    assert pb.lupas_operator(lambda t: t * t, 4, 0.9, 0.6, x) == pytest.approx(0.16358974358974358974, rel=1e-14)
    m0, m1, _ = pb.moments(7, 0.8, 0.4, x)
    assert m0 == 1.0 and m1 == x
    assert pb.limit_operator("t", 0.9, 0.5, 0.4) == pytest.approx(0.4, abs=1e-12)
    lhs, rhs = pb.reflection_pair(math.exp, 5, 1.4, 0.7, 0.3)
    assert lhs == pytest.approx(rhs, abs=1e-10)


def test_convergence_table():
    rows = pb.convergence_table("t2", [8, 16, 32, 64])
    assert [r[0] for r in rows] == [8, 16, 32, 64]
    assert rows[-1][3] < rows[0][3] / 4
    fixed = pb.convergence_table("t2", [8, 64], p=0.9, q=0.5)
    assert all(r[3] > 1e-3 for r in fixed)
    with pytest.raises(pb.DomainError):
        pb.convergence_table("cosh", [8])
