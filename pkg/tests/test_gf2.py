"""Bit-packed GF(2) linear algebra against brute-force enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (KLEIN_2COMP_CLASSES, KLEIN_2COMP_INCIDENCE,
                      KLEIN_2COMP_RANKS, TORUS_3COMP_CLASSES,
                      TORUS_3COMP_INCIDENCE, TORUS_3COMP_RANKS, as_matrix,
                      brute_rank, row_span)
from regioncc.gf2 import (BitMatrix, BitVector, in_rowspace, nullspace_basis,
                          rank, solve)


@st.composite
def bit_matrices(draw, max_rows=8, max_cols=8):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    masks = draw(st.lists(st.integers(0, (1 << cols) - 1),
                          min_size=rows, max_size=rows))
    return BitMatrix.from_bitrows(masks, cols)


class TestBitVector:
    def test_construction_and_access(self):
        v = BitVector.from_bits([1, 0, 1, 1])
        assert (v.length, v.bits) == (4, 0b1101)
        assert [v[i] for i in range(4)] == [1, 0, 1, 1]
        assert v.support() == (0, 2, 3)
        assert v.weight() == 3
        assert str(v) == "1011"

    def test_from_support(self):
        assert BitVector.from_support([4, 1], 6) == BitVector.from_bits(
            [0, 1, 0, 0, 1, 0])
        with pytest.raises(IndexError):
            BitVector.from_support([6], 6)

    def test_xor_requires_equal_lengths(self):
        a = BitVector.from_bits([1, 0])
        with pytest.raises(ValueError):
            a ^ BitVector.from_bits([1, 0, 0])
        assert (a ^ BitVector.from_bits([1, 1])).to_bits() == (0, 1)

    def test_width_guard(self):
        with pytest.raises(ValueError):
            BitVector(2, 0b100)


class TestBitMatrix:
    def test_from_rows_rejects_ragged(self):
        with pytest.raises(ValueError):
            BitMatrix.from_rows([(1, 0), (1,)])

    def test_identity_and_zero(self):
        eye = BitMatrix.identity(4)
        assert rank(eye) == 4
        assert rank(BitMatrix.zeros(3, 5)) == 0

    def test_transpose_involution(self):
        m = as_matrix(TORUS_3COMP_INCIDENCE)
        assert m.transpose().transpose() == m
        assert m.transpose().rows == m.cols

    def test_mul_vector(self):
        m = BitMatrix.from_rows([(1, 1, 0), (0, 1, 1)])
        x = BitVector.from_bits([1, 1, 1])
        assert m.mul_vector(x).to_bits() == (0, 0)
        with pytest.raises(ValueError):
            m.mul_vector(BitVector.from_bits([1, 0]))


class TestFrozenExamples:
    def test_worked_example_ranks(self):
        assert rank(as_matrix(TORUS_3COMP_INCIDENCE)) == TORUS_3COMP_RANKS[0]
        assert rank(as_matrix(TORUS_3COMP_CLASSES)) == TORUS_3COMP_RANKS[1]
        assert rank(as_matrix(KLEIN_2COMP_INCIDENCE)) == KLEIN_2COMP_RANKS[0]
        assert rank(as_matrix(KLEIN_2COMP_CLASSES)) == KLEIN_2COMP_RANKS[1]

    def test_solve_hits_a_row_combination(self):
        m = as_matrix(TORUS_3COMP_INCIDENCE)
        a = m.transpose()
        b = m.row(0) ^ m.row(1)
        x = solve(a, b)
        assert x is not None
        assert a.mul_vector(x) == b

    def test_solve_reports_absence(self):
        m = as_matrix(TORUS_3COMP_INCIDENCE)
        outside = next(bits for bits in range(1 << 6)
                       if bits not in row_span(m.row_bits))
        assert solve(m.transpose(), BitVector(6, outside)) is None

    def test_nullspace_dimension(self):
        m = as_matrix(TORUS_3COMP_INCIDENCE)
        basis = nullspace_basis(m.transpose())
        assert len(basis) == 6 - TORUS_3COMP_RANKS[0]
        for v in basis:
            assert m.transpose().mul_vector(v).bits == 0


@settings(max_examples=120, deadline=None)
@given(bit_matrices())
def test_rank_matches_span_size(m):
    assert rank(m) == brute_rank(m)
    assert rank(m) <= min(m.rows, m.cols)
    assert rank(m.transpose()) == rank(m)


@settings(max_examples=120, deadline=None)
@given(bit_matrices(), st.integers(0, (1 << 8) - 1))
def test_solve_agrees_with_column_span(m, seed_bits):
    b = BitVector(m.rows, seed_bits & ((1 << m.rows) - 1))
    x = solve(m, b)
    feasible = b.bits in row_span(m.transpose().row_bits)
    if x is None:
        assert not feasible
    else:
        assert feasible
        assert m.mul_vector(x) == b


@settings(max_examples=120, deadline=None)
@given(bit_matrices())
def test_nullspace_properties(m):
    basis = nullspace_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert m.mul_vector(v).bits == 0
    if basis:
        stacked = BitMatrix.from_bitrows([v.bits for v in basis], m.cols)
        assert rank(stacked) == len(basis)


@settings(max_examples=120, deadline=None)
@given(bit_matrices(), st.integers(0, 255))
def test_in_rowspace_recombines(m, picks):
    target = 0
    for i in range(m.rows):
        if (picks >> i) & 1:
            target ^= m.row_bits[i]
    coeffs = in_rowspace(m, BitVector(m.cols, target))
    assert coeffs is not None
    rebuilt = 0
    for i in coeffs.support():
        rebuilt ^= m.row_bits[i]
    assert rebuilt == target


@settings(max_examples=120, deadline=None)
@given(bit_matrices(), st.integers(0, (1 << 8) - 1))
def test_in_rowspace_absence(m, bits):
    v = BitVector(m.cols, bits & ((1 << m.cols) - 1))
    verdict = in_rowspace(m, v) is not None
    assert verdict == (v.bits in row_span(m.row_bits))
