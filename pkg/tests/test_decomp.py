import cmath

import numpy as np
import pytest
import scipy.linalg
from numpy.testing import assert_allclose

from accretive.decomp import (
    abs_val,
    gen_eig,
    herm_eig,
    inverse,
    pd_power,
    polar,
    principal_sqrt_accretive,
    sqrt_psd,
)
from accretive.errors import DefectiveMatrix, NearSingular, NotPSD
from accretive.matcore import re_part
from accretive.sector import random_sector


def test_herm_eig_examples():
    r = herm_eig(np.eye(2))
    assert_allclose(r.values, [1, 1])
    assert r.vec_condition == 1.0
    assert_allclose(herm_eig([[0, 1], [1, 0]]).values, [-1, 1])


def test_herm_eig_reconstructs():
    rng = np.random.default_rng(0)
    G = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    H = G + G.conj().T
    w, V, _ = herm_eig(H)
    assert_allclose((V * w) @ V.conj().T, H, atol=1e-10 * np.linalg.norm(H))
    assert_allclose(V.conj().T @ V, np.eye(6), atol=1e-12)


def test_gen_eig():
    assert_allclose(sorted(gen_eig(np.diag([1.0, 2.0])).values.real), [1, 2])
    with pytest.raises(DefectiveMatrix):
        gen_eig([[1, 1], [0, 1]])
    A = np.array([[2, 2j], [0, 2.1]])
    w, V, cond = gen_eig(A)
    assert np.isfinite(cond)
    assert np.linalg.norm(A @ V - V * w) < 1e-9


@pytest.mark.parametrize(
    "A, U, P",
    [
        (np.eye(2), np.eye(2), np.eye(2)),
        ([[0, -1], [1, 0]], [[0, -1], [1, 0]], np.eye(2)),
        ([[2]], [[1]], [[2]]),
    ],
)
def test_polar_examples(A, U, P):
    res = polar(A)
    assert_allclose(res.unitary, U, atol=1e-14)
    assert_allclose(res.modulus, P, atol=1e-14)


def test_polar_invariants_on_accretive_inputs():
    for k in range(50):
        A = np.asarray(random_sector(5, 1.2, seed=k))
        U, P = polar(A)
        assert_allclose(U.conj().T @ U, np.eye(5), atol=1e-10)
        assert np.linalg.eigvalsh(P)[0] >= -1e-10
        assert_allclose(U @ P, A, atol=1e-10 * np.linalg.norm(A, 2))
        assert_allclose(abs_val(A), P, atol=1e-9)
        # scipy's polar is an independent implementation of the same factorization
        Us, Ps = scipy.linalg.polar(A)
        assert_allclose(U, Us, atol=1e-8)


def test_polar_singular():
    with pytest.raises(NearSingular):
        polar([[1, 0], [0, 0]])


@pytest.mark.parametrize(
    "X, expected",
    [
        ([[-3]], [[3]]),
        ([[0, -1], [1, 0]], np.eye(2)),
        ([[0, 2], [0, 0]], np.diag([0, 2])),
    ],
)
def test_abs_val_examples(X, expected):
    assert_allclose(abs_val(X), expected, atol=1e-14)


def test_sqrt_psd():
    assert_allclose(sqrt_psd(4 * np.eye(2)), 2 * np.eye(2))
    assert_allclose(sqrt_psd(np.diag([1.0, 9.0])), np.diag([1, 3]))
    rng = np.random.default_rng(1)
    G = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    H = G @ G.conj().T
    S = sqrt_psd(H)
    assert np.linalg.norm(S @ S - H) < 1e-9 * np.linalg.norm(H)
    # a tiny negative eigenvalue is clamped, a material one is rejected
    assert_allclose(sqrt_psd(np.diag([1.0, -1e-12])), np.diag([1, 0]))
    with pytest.raises(NotPSD):
        sqrt_psd(np.diag([1.0, -1e-3]))


def test_pd_power_matches_scipy():
    rng = np.random.default_rng(2)
    G = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    H = G @ G.conj().T + np.eye(4)
    for p in (-0.5, 0.3, 2.0):
        assert_allclose(pd_power(H, p), scipy.linalg.fractional_matrix_power(H, p), atol=1e-10)


def test_principal_sqrt():
    assert_allclose(principal_sqrt_accretive(np.eye(3)), np.eye(3))
    assert_allclose(principal_sqrt_accretive([[1j]]), [[cmath.exp(1j * cmath.pi / 4)]], atol=1e-15)
    for k in range(100):
        A = np.asarray(random_sector(5, 1.3, seed=k))
        S = principal_sqrt_accretive(A)
        assert np.linalg.norm(S @ S - A) < 1e-9
        assert np.all(np.linalg.eigvals(S).real > 0)
        # the square root of an accretive matrix is accretive
        assert np.linalg.eigvalsh(re_part(S))[0] > 0
        assert_allclose(S, scipy.linalg.sqrtm(A), atol=1e-8)


def test_principal_sqrt_defective_propagates():
    with pytest.raises(DefectiveMatrix):
        principal_sqrt_accretive([[1, 1], [0, 1]])


def test_inverse():
    assert_allclose(inverse(np.eye(2)), np.eye(2))
    assert_allclose(inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    A = np.asarray(random_sector(5, 1.0, seed=3))
    Ai = inverse(A)
    assert np.linalg.norm(A @ Ai - np.eye(5)) < 1e-10 * np.linalg.cond(A)
    with pytest.raises(NearSingular):
        inverse(np.zeros((2, 2)))
