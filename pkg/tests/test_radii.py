import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.errors import NotSquareError
from numrad.radii import (
    numerical_radius,
    numerical_radius_oracle,
    omega_blockdiag,
    spectral_radius,
)

# Frozen cross-checks for matrices multiplied out of the 2x2 reference
# triples A=[[1,2],[3,0]], B=[[3,4],[1,5]], X=[[1,2],[0,1]].
_A2 = np.array([[1, 2], [3, 0]], dtype=complex)
_B2 = np.array([[3, 4], [1, 5]], dtype=complex)
_X2 = np.array([[1, 2], [0, 1]], dtype=complex)

W_ASTAR_X_B = 39.914607000811124
W_XBASTAR = 37.84943324127921
W_BASTARX = 40.135943621178654


def _random_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def test_jordan_block_is_one_half():
    r = numerical_radius([[0, 1], [0, 0]])
    assert r.value == pytest.approx(0.5, abs=1e-9)


def test_norm_not_lambda_max():
    # mu(theta) must use max(lmax, -lmin): for A = -i*diag(-2, 1) the
    # lambda_max branch alone tops out at 1, but w(A) = 2.
    a = -1j * np.diag([-2.0, 1.0])
    assert numerical_radius(a).value == pytest.approx(2.0, abs=1e-9)
    assert numerical_radius_oracle(a) == pytest.approx(2.0, abs=1e-9)


def test_hermitian_radius_is_norm():
    h = np.array([[2, 1], [1, -3.0]])
    want = max(abs(np.linalg.eigvalsh(h)))
    assert numerical_radius(h).value == pytest.approx(want, abs=1e-9)


def test_normal_radius_is_spectral_radius():
    # unitary conjugation of a diagonal: normal, so w(A) = r(A)
    rng = np.random.default_rng(5)
    d = np.diag([1 + 2j, -3, 0.5j])
    q, _ = np.linalg.qr(_random_matrix(rng, 3))
    a = q @ d @ q.conj().T
    assert numerical_radius(a).value == pytest.approx(spectral_radius(a),
                                                      abs=1e-8)


def test_scalar_matrix():
    assert numerical_radius([[3 + 4j]]).value == pytest.approx(5.0)
    assert spectral_radius([[3 + 4j]]) == pytest.approx(5.0)


def test_frozen_product_values():
    w1 = numerical_radius(_A2.conj().T @ _X2 @ _B2).value
    w2 = numerical_radius(_X2 @ _B2 @ _A2.conj().T).value
    w3 = numerical_radius(_B2 @ _A2.conj().T @ _X2).value
    assert w1 == pytest.approx(W_ASTAR_X_B, abs=1e-9)
    assert w2 == pytest.approx(W_XBASTAR, abs=1e-9)
    assert w3 == pytest.approx(W_BASTARX, abs=1e-9)


def test_witness_attains_value():
    rng = np.random.default_rng(17)
    for _ in range(25):
        a = _random_matrix(rng, int(rng.integers(2, 6)))
        r = numerical_radius(a)
        x = r.witness
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
        rayleigh = abs(x.conj() @ (a @ x))
        assert rayleigh == pytest.approx(r.value, abs=1e-8 * (1 + r.value))


def test_theta_in_halfturn_range():
    rng = np.random.default_rng(23)
    for _ in range(10):
        r = numerical_radius(_random_matrix(rng, 4))
        assert 0.0 <= r.theta < np.pi


def test_adjoint_and_conjugation_invariance():
    rng = np.random.default_rng(29)
    for _ in range(10):
        a = _random_matrix(rng, int(rng.integers(2, 5)))
        w = numerical_radius(a).value
        assert numerical_radius(a.conj().T).value == pytest.approx(w, rel=1e-9)
        q, _ = np.linalg.qr(_random_matrix(rng, a.shape[0]))
        assert numerical_radius(q @ a @ q.conj().T).value == pytest.approx(
            w, rel=1e-8)


def test_sweep_agrees_with_ascent_oracle():
    rng = np.random.default_rng(41)
    for _ in range(30):
        a = _random_matrix(rng, int(rng.integers(1, 7)))
        w_sweep = numerical_radius(a).value
        w_climb = numerical_radius_oracle(a, restarts=8, iters=60)
        assert w_climb == pytest.approx(w_sweep, rel=1e-7, abs=1e-9)


def test_radius_bounds_sandwich():
    # ||A||/2 <= w(A) <= ||A||  and  r(A) <= w(A)
    rng = np.random.default_rng(43)
    for _ in range(25):
        a = _random_matrix(rng, int(rng.integers(1, 6)))
        w = numerical_radius(a).value
        nrm = np.linalg.norm(a, 2)
        assert 0.5 * nrm - 1e-9 <= w <= nrm + 1e-9
        assert spectral_radius(a) <= w + 1e-8


@settings(max_examples=40, deadline=None)
@given(
    re=st.floats(-5, 5, allow_nan=False),
    im=st.floats(-5, 5, allow_nan=False),
    seed=st.integers(0, 2**16),
)
def test_scale_covariance(re, im, seed):
    c = complex(re, im)
    rng = np.random.default_rng(seed)
    a = _random_matrix(rng, 3)
    w = numerical_radius(a).value
    assert numerical_radius(c * a).value == pytest.approx(
        abs(c) * w, rel=1e-8, abs=1e-9)


def test_rejects_nonsquare_and_tiny_grid():
    with pytest.raises(NotSquareError):
        numerical_radius(np.zeros((2, 3)))
    with pytest.raises(NotSquareError):
        numerical_radius_oracle(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        numerical_radius(np.eye(2), grid=3)


def test_empty_matrix():
    e = np.zeros((0, 0))
    assert numerical_radius(e).value == 0.0
    assert numerical_radius_oracle(e) == 0.0
    assert spectral_radius(e) == 0.0


def test_omega_blockdiag_is_max_of_blocks():
    blocks = [np.array([[0, 1], [0, 0]]), np.array([[2.0]])]
    assert omega_blockdiag(blocks) == pytest.approx(2.0, abs=1e-9)
    assert omega_blockdiag([]) == 0.0
    # agreement with the assembled direct sum
    big = np.zeros((3, 3), dtype=complex)
    big[:2, :2] = blocks[0]
    big[2, 2] = 2.0
    assert numerical_radius(big).value == pytest.approx(
        omega_blockdiag(blocks), abs=1e-8)
