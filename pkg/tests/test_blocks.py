from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omlab.blocks import (
    Block2x2,
    assemble,
    cartesian,
    cauchy_schwarz_witness,
    classify,
    congruence_scale,
    partition,
)
from omlab.errors import BlockShapeError, NonpositiveScale, NotPSDInput, OddDimension
from omlab.linalg import operator_norm, real_part
from omlab.radius import numerical_radius

from conftest import random_complex, random_hermitian, random_psd

AD = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])


def fro(m):
    return float(np.linalg.norm(m))


def test_partition_examples():
    b = partition([[1, 2], [3, 4]])
    assert [x.item() for x in b.blocks()] == [1, 2, 3, 4]
    b = partition(np.eye(4))
    np.testing.assert_array_equal(b.t11, np.eye(2))
    np.testing.assert_array_equal(b.t12, np.zeros((2, 2)))
    m = random_complex(np.random.default_rng(0), 6)
    np.testing.assert_array_equal(assemble(partition(m)), m)


def test_partition_odd_dimension():
    with pytest.raises(OddDimension):
        partition(np.eye(3))


def test_block_validation_and_immutability():
    with pytest.raises(BlockShapeError):
        Block2x2(np.eye(2), np.eye(2), np.eye(2), np.eye(3))
    with pytest.raises(BlockShapeError):
        Block2x2(np.ones((2, 3)), np.eye(2), np.eye(2), np.eye(2))
    src = np.eye(2)
    b = Block2x2(src, src, src, src)
    src[0, 0] = 5
    assert b.t11[0, 0] == 1
    with pytest.raises(ValueError):
        b.t11[0, 0] = 2


def test_diagonal_and_offdiagonal_parts_sum():
    b = partition(random_complex(np.random.default_rng(1), 4))
    np.testing.assert_array_equal(b.diagonal_part() + b.off_diagonal_part(), b.assemble())


def test_cartesian_examples():
    c = cartesian(partition(AD))
    np.testing.assert_allclose(c.real.assemble(), [[1, 1], [1, 1]])
    np.testing.assert_allclose(c.imag.assemble(), [[1, -1], [-1, 1]])
    np.testing.assert_allclose(c.reassemble(), AD)
    h = random_hermitian(np.random.default_rng(2), 4)
    np.testing.assert_allclose(cartesian(partition(h)).imag.assemble(), 0, atol=1e-15)
    c = cartesian(partition(1j * h))
    np.testing.assert_allclose(c.real.assemble(), 0, atol=1e-15)
    np.testing.assert_allclose(c.imag.assemble(), h, atol=1e-15)


def test_cartesian_invariants(rng):
    for i in range(500):
        n = 1 + i % 4
        t = random_complex(rng, 2 * n)
        c = cartesian(partition(t))
        tol = 1e-10 * (1 + fro(t))
        assert fro(c.a12 - c.a21.conj().T) <= tol
        assert fro(c.b12 - c.b21.conj().T) <= tol
        for x in (c.a11, c.a22, c.b11, c.b22):
            assert fro(x - x.conj().T) <= tol
        assert fro(c.reassemble() - t) <= tol
        if i % 10 == 0:
            assert operator_norm(real_part(t)) <= numerical_radius(t) + 1e-8


def test_classify_examples():
    c = classify(AD)
    assert c.accretive_dissipative and c.accretive and c.dissipative and not c.hermitian
    assert c.min_real_eig == pytest.approx(0, abs=1e-14)
    assert classify(np.diag([1.0, 0.0])).positive
    c = classify([[0, 1], [0, 0]])
    assert not any([c.hermitian, c.positive, c.accretive, c.dissipative, c.accretive_dissipative])
    assert c.min_real_eig == pytest.approx(-0.5)
    assert c.min_imag_eig == pytest.approx(-0.5)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**32 - 1), st.sampled_from(["psd", "herm", "any"]))
def test_property_classify_consistency(n, seed, kind):
    rng = np.random.default_rng(seed)
    m = {"psd": random_psd, "herm": random_hermitian, "any": random_complex}[kind](rng, 2 * n)
    c = classify(m)
    assert c.accretive_dissipative == (c.accretive and c.dissipative)
    if c.positive:
        assert c.hermitian and c.accretive
    if kind == "psd":
        assert c.positive
    # slack sign agrees with the flag
    guard = 1e-8 * (1 + c.norm)
    assert c.accretive == (c.min_real_eig >= -guard)


def test_congruence_examples():
    b = partition(random_complex(np.random.default_rng(3), 4))
    same = congruence_scale(b, 1.0)
    np.testing.assert_array_equal(same.assemble(), b.assemble())
    s = congruence_scale(partition([[2, 1], [1, 2]]), 4)
    np.testing.assert_allclose(s.assemble(), [[8, 1], [1, 0.5]])
    assert classify(s.assemble()).positive
    for bad in (0, -1, float("nan")):
        with pytest.raises(NonpositiveScale):
            congruence_scale(b, bad)


def test_congruence_is_d_t_d(rng):
    n = 3
    b = partition(random_complex(rng, 2 * n))
    t = 2.7
    d = np.diag([np.sqrt(t)] * n + [1 / np.sqrt(t)] * n)
    np.testing.assert_allclose(congruence_scale(b, t).assemble(), d @ b.assemble() @ d, atol=1e-13)


def _psd_blocks(count=200, seed=11):
    rng = np.random.default_rng(seed)
    for i in range(count):
        yield partition(random_psd(rng, 2 * (1 + i % 3)))


@pytest.mark.parametrize("t", [0.1, 0.5, 2.0, 10.0])
def test_congruence_preserves_positivity(t):
    for b in _psd_blocks():
        assert classify(congruence_scale(b, t).assemble()).positive


def test_cs_witness_empty_on_psd_blocks():
    for i, b in enumerate(_psd_blocks()):
        assert cauchy_schwarz_witness(b.t11, b.t22, b.t12, 1000, seed=i) is None


def test_cs_witness_examples():
    i2 = np.eye(2)
    assert cauchy_schwarz_witness(i2, i2, i2, 500, seed=1) is None
    z = np.zeros((2, 2))
    assert cauchy_schwarz_witness(z, z, z, 500, seed=1) is None
    a = np.diag([1.0, 0.0])
    v = cauchy_schwarz_witness(a, a, np.diag([0.0, 1.0]), 1000, seed=7)
    assert v is not None
    assert v.slack < -1e-10
    assert abs(np.linalg.norm(v.x) - 1) < 1e-12 and abs(np.linalg.norm(v.y) - 1) < 1e-12
    # the record reproduces its own numbers
    lhs = abs(np.vdot(v.x, np.diag([0.0, 1.0]) @ v.y)) ** 2
    rhs = np.vdot(v.x, a @ v.x).real * np.vdot(v.y, a @ v.y).real
    assert lhs == pytest.approx(v.lhs) and rhs == pytest.approx(v.rhs)


def test_cs_witness_is_deterministic():
    a = np.diag([1.0, 0.0])
    c = np.diag([0.0, 1.0])
    v1 = cauchy_schwarz_witness(a, a, c, 100, seed=3)
    v2 = cauchy_schwarz_witness(a, a, c, 100, seed=3)
    np.testing.assert_array_equal(v1.x, v2.x)


def test_cs_witness_finds_non_psd_blocks():
    # off-diagonal block too large for the diagonal: the assembled block is not PSD
    a = np.eye(2)
    c = 3 * np.eye(2)
    assert not classify(np.block([[a, c], [c, a]])).positive
    assert cauchy_schwarz_witness(a, a, c, 200, seed=0) is not None


def test_cs_witness_rectangular_c():
    rng = np.random.default_rng(4)
    g = random_complex(rng, 5)
    p = g @ g.conj().T
    a, b, c = p[:2, :2], p[2:, 2:], p[:2, 2:]
    assert cauchy_schwarz_witness(a, b, c, 1000, seed=2) is None


def test_cs_witness_errors():
    with pytest.raises(NotPSDInput):
        cauchy_schwarz_witness(np.diag([1.0, -1.0]), np.eye(2), np.eye(2), 10, 0)
    with pytest.raises(NotPSDInput):
        cauchy_schwarz_witness([[0, 1], [0, 0]], np.eye(2), np.eye(2), 10, 0)
    with pytest.raises(BlockShapeError):
        cauchy_schwarz_witness(np.eye(2), np.eye(3), np.eye(2), 10, 0)
