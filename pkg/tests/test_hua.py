import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qskew import (
    ConvergenceError,
    HuaForm,
    even_multiplicity_check,
    hua_decompose,
    positive_clusters,
)


def random_complex_skew(rng, n, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (m - m.T)


def rank_deficient_skew(rng, n, rank_pairs):
    """Skew matrix whose rank is exactly 2*rank_pairs."""
    z = np.zeros((n, n), dtype=complex)
    for _ in range(rank_pairs):
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        w = rng.normal(size=n) + 1j * rng.normal(size=n)
        z += np.outer(v, w) - np.outer(w, v)
    return z


def check_form(z, form, tol=1e-10):
    n = z.shape[0]
    u = form.u
    sig = form.canonical()
    np.testing.assert_allclose(u @ z @ u.T, sig, atol=tol * max(1.0, np.linalg.norm(z)))
    np.testing.assert_allclose(u @ u.conj().T, np.eye(n), atol=1e-10)
    assert len(form.sigmas) * 2 + form.zero_dim == n
    assert all(s > 0 for s in form.sigmas)
    assert list(form.sigmas) == sorted(form.sigmas, reverse=True)


def test_small_frozen_case():
    z = np.array([[0.0, 2.0], [-2.0, 0.0]], dtype=complex)
    form = hua_decompose(z)
    assert form.zero_dim == 0
    np.testing.assert_allclose(form.sigmas, [2.0], atol=1e-12)
    check_form(z, form)


def test_odd_dimension_has_kernel():
    rng = np.random.default_rng(40)
    z = random_complex_skew(rng, 5)
    form = hua_decompose(z)
    assert form.zero_dim >= 1  # odd-sized skew matrices are singular
    check_form(z, form)


def test_rank_deficient():
    rng = np.random.default_rng(41)
    z = rank_deficient_skew(rng, 6, rank_pairs=2)
    form = hua_decompose(z)
    assert form.zero_dim == 2
    assert len(form.sigmas) == 2
    check_form(z, form)


def test_zero_matrix():
    form = hua_decompose(np.zeros((3, 3), dtype=complex))
    assert form.zero_dim == 3
    assert len(form.sigmas) == 0
    np.testing.assert_allclose(form.u @ form.u.conj().T, np.eye(3), atol=0)


def test_repeated_sigma():
    # two pairs with the same sigma: clustering must not split or merge wrongly
    base = np.array([[0, 3], [-3, 0]], dtype=complex)
    z = np.zeros((4, 4), dtype=complex)
    z[:2, :2] = base
    z[2:, 2:] = base
    rng = np.random.default_rng(42)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    z = q @ z @ q.T  # unitary congruence keeps the canonical sigmas
    form = hua_decompose(z)
    np.testing.assert_allclose(form.sigmas, [3.0, 3.0], atol=1e-10)
    check_form(z, form)


def test_residual_fields_populated():
    rng = np.random.default_rng(43)
    z = random_complex_skew(rng, 8)
    form = hua_decompose(z)
    assert form.residual <= 1e-8 * max(1.0, np.linalg.norm(z))
    assert form.unitarity_residual <= 1e-10
    d = form.to_dict(include_u=False)
    assert set(d) == {"sigmas", "zero_dim", "residual", "unitarity_residual"}


def test_sigma_squared_matches_gram_spectrum():
    rng = np.random.default_rng(44)
    z = random_complex_skew(rng, 7)
    form = hua_decompose(z)
    h = z @ z.conj().T
    lam = np.sort(np.linalg.eigvalsh(h))[::-1]
    sig2 = np.square(np.repeat(form.sigmas, 2))
    np.testing.assert_allclose(sig2, lam[: 2 * len(form.sigmas)], rtol=1e-8)


def test_rejects_non_skew():
    with pytest.raises(ValueError):
        hua_decompose(np.eye(3, dtype=complex))
    with pytest.raises(ValueError):
        hua_decompose(np.zeros((2, 3), dtype=complex))


def test_positive_clusters():
    vals = np.array([0.0, 1e-12, 2.0, 2.0 + 1e-12, 5.0])
    clusters = positive_clusters(vals)
    assert [len(c) for c in clusters] == [2, 1]
    assert sorted(vals[clusters[0]]) == sorted([2.0, 2.0 + 1e-12])
    assert positive_clusters(np.zeros(4)) == []


def test_even_multiplicity_check():
    rng = np.random.default_rng(45)
    for n in (2, 3, 4, 7):
        z = random_complex_skew(rng, n)
        assert even_multiplicity_check(z)
    assert even_multiplicity_check(np.zeros((3, 3), dtype=complex))


@given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=30, deadline=None)
def test_hua_property(n, seed):
    rng = np.random.default_rng(seed)
    z = random_complex_skew(rng, n, scale=float(rng.choice([0.01, 1.0, 100.0])))
    form = hua_decompose(z)
    check_form(z, form, tol=1e-8)
