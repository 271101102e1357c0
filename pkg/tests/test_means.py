import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from accretive.errors import DimensionMismatch, NotAccretive
from accretive.matfunc import affine, harm, logmean, logmean_scalar, power
from accretive.means import (
    Perspective,
    arith_t,
    dual_mean,
    geom_t,
    harm_t,
    logmean_op,
    mean_sigma,
    parse_mean,
)
from accretive.rng import make_rng
from accretive.sector import random_pd, random_sector


def pair(k, n=4, alpha=0.8):
    return np.asarray(random_sector(n, alpha, seed=2 * k)), np.asarray(random_sector(n, alpha, seed=2 * k + 1))


@pytest.mark.parametrize(
    "fn, expected",
    [
        (lambda a, b: geom_t(a, b, 0.5), 2.0),
        (lambda a, b: harm_t(a, b, 0.5), 1.6),
        (lambda a, b: arith_t(a, b, 0.5), 2.5),
        (lambda a, b: logmean_op(a, b, 0.5), 3.0 / math.log(4.0)),
        (lambda a, b: geom_t(a, b, 0.0), 1.0),
        (lambda a, b: geom_t(a, b, 1.0), 4.0),
    ],
    ids=["geom", "harm", "arith", "logmean", "geom0", "geom1"],
)
def test_scalar_examples(fn, expected):
    assert fn([[1.0]], [[4.0]]).value[0, 0] == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("t", [0.1, 0.25, 0.5, 0.9])
def test_commuting_diagonals(t):
    a = np.array([0.5, 1 + 1j, 3 - 0.5j])
    b = np.array([2.0, 0.3 + 0.2j, 3 - 0.5j])
    A, B = np.diag(a), np.diag(b)
    assert_allclose(np.diag(geom_t(A, B, t).value), a ** (1 - t) * b**t, rtol=1e-13)
    expect = a * np.array([logmean(t)(x) for x in b / a])
    assert_allclose(np.diag(logmean_op(A, B, t).value), expect, rtol=1e-12)


def test_geometric_mean_solves_riccati():
    # X = A #_{1/2} B is characterised by X A^{-1} X = B
    for k in range(100):
        A, B = pair(k)
        X = geom_t(A, B, 0.5).value
        R = X @ np.linalg.solve(A, X)
        assert np.linalg.norm(R - B, 2) < 1e-9 * np.linalg.cond(A) * np.linalg.norm(B, 2)


def test_geometric_mean_t_composition():
    # A #_t B with t = 1/4 is A #_{1/2} (A #_{1/2} B)
    for k in range(30):
        A, B = pair(k, alpha=0.5)
        lhs = geom_t(A, B, 0.25).value
        rhs = geom_t(A, geom_t(A, B, 0.5).value, 0.5).value
        assert_allclose(lhs, rhs, atol=1e-9 * np.linalg.norm(lhs, 2))


@pytest.mark.parametrize("t", [0.2, 0.5, 0.8])
def test_closed_forms_match_perspective(t):
    for k in range(30):
        A, B = pair(k)
        assert_allclose(mean_sigma(affine(t), A, B).value, arith_t(A, B, t).value, atol=1e-9)
        H = harm_t(A, B, t).value
        assert_allclose(mean_sigma(harm(t), A, B).value, H, atol=1e-9 * np.linalg.norm(H, 2))


@pytest.mark.parametrize("t", [0.3, 0.6])
def test_dual_mean(t):
    # x / x^t = x^(1-t), and the dual of the arithmetic mean is the harmonic one
    for k in range(20):
        A, B = pair(k)
        assert_allclose(dual_mean(power(t), A, B).value, geom_t(A, B, 1 - t).value, atol=1e-12)
        assert_allclose(dual_mean(affine(t), A, B).value, harm_t(A, B, 1 - t).value, atol=1e-9)


@pytest.mark.parametrize("t", [0.3, 0.6])
def test_geometric_mean_is_self_adjoint(t):
    # (A^{-1} #_t B^{-1})^{-1} = A #_t B
    for k in range(20):
        A, B = pair(k)
        lhs = geom_t(A, B, t).value
        rhs = np.linalg.inv(geom_t(np.linalg.inv(A), np.linalg.inv(B), t).value)
        assert_allclose(lhs, rhs, atol=1e-9 * np.linalg.norm(lhs, 2))


def test_swap_symmetry_for_positive_pairs():
    rng = make_rng(1)
    for _ in range(50):
        A, B = random_pd(4, rng), random_pd(4, rng)
        assert_allclose(geom_t(A, B, 0.3).value, geom_t(B, A, 0.7).value, atol=1e-9)


def test_congruence_invariance():
    rng = make_rng(2)
    for k in range(50):
        A, B = pair(k)
        C = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        Ch = C.conj().T
        lhs = Ch @ geom_t(A, B, 0.4).value @ C
        rhs = geom_t(Ch @ A @ C, Ch @ B @ C, 0.4).value
        assert np.linalg.norm(lhs - rhs, 2) < 1e-12 * np.linalg.cond(C) ** 2 * np.linalg.cond(A) * np.linalg.norm(lhs, 2)


@pytest.mark.parametrize("t", [0.1, 0.25, 0.5, 0.9])
def test_logmean_quadrature_matches_representing_function(t):
    for k in range(30):
        A, B = pair(k)
        ref = mean_sigma(logmean(t), A, B).value
        got = logmean_op(A, B, t)
        assert got.residual < 1e-7
        assert_allclose(got.value, ref, atol=1e-10 * np.linalg.norm(ref, 2))


def test_logmean_literal_weights_differ():
    a, b = 1.0, 4.0
    t = 0.25
    literal = logmean_op([[a]], [[b]], t, literal=True).value[0, 0].real
    # (1-t)/t int_0^t 4^p dp + int_t^1 4^p dp
    l4 = math.log(4.0)
    ref = (1 - t) / t * (4**t - 1) / l4 + (4 - 4**t) / l4
    assert literal == pytest.approx(ref, rel=1e-12)
    assert literal != pytest.approx(logmean_scalar(t, 4.0))


def test_hermitian_inputs_give_hermitian_means():
    rng = make_rng(3)
    A, B = random_pd(4, rng), random_pd(4, rng)
    for res in (geom_t(A, B, 0.3), mean_sigma(harm(0.4), A, B), logmean_op(A, B, 0.6)):
        assert np.array_equal(res.value, res.value.conj().T)


def test_perspective_route_and_reuse():
    A, B = pair(0)
    P = Perspective(A, B)
    assert P.route == "diagonalization"
    assert P.residual < 1e-12
    assert_allclose(P.mean(power(0.5)).value, geom_t(A, B, 0.5).value)


def test_errors():
    with pytest.raises(DimensionMismatch):
        geom_t(np.eye(2), np.eye(3), 0.5)
    with pytest.raises(NotAccretive):
        geom_t(np.eye(2), -np.eye(2), 0.5)
    with pytest.raises(ValueError):
        geom_t(np.eye(2), np.eye(2), 1.5)
    with pytest.raises(ValueError):
        logmean_op(np.eye(2), np.eye(2), 1.0)


@pytest.mark.parametrize("spec", ["geom:0.3", "harm:0.3", "arith:0.3", "logmean:0.3", "sigma:power:0.3",
                                  "dual:affine:0.7"])
def test_parse_mean(spec):
    A, B = pair(1)
    assert parse_mean(spec)(A, B).value.shape == (4, 4)


def test_parse_mean_errors():
    for bad in ("geom", "cube:0.3", "sigma:cube"):
        with pytest.raises(ValueError):
            parse_mean(bad)
