from fractions import Fraction

import pytest

from src.engine.fock import enumerate_sector, matrix_of
from src.engine.linalg import generalized_eigen, joint_nullspace, null_coefficients, nullspace, rank, rref
from src.engine.operators import InvariantKind, build_invariant
from src.errors import HermiticityError
from src.models.fock import ExactMatrix, SectorBasis
from src.models.scalar import ONE, SQRT3, Scalar


def square(entries, size=2):
    basis = SectorBasis.abstract(size)
    return ExactMatrix(basis, basis, {k: Scalar.of(v) for k, v in entries.items()})


def identity(size=2):
    return square({(i, i): 1 for i in range(size)}, size)


def row(*values):
    return [Scalar.of(v) for v in values]


def test_rref_and_rank():
    rows = [row(2, 4), row(1, 2)]
    reduced, pivots = rref(rows, 2)
    assert reduced == [row(1, 2)]
    assert pivots == [0]
    assert rank(rows, 2) == 1
    assert rank([row(1, 0), row(0, 1)], 2) == 2


def test_null_coefficients_are_normalized():
    kernel = null_coefficients([row(2, 4)], 2)
    assert kernel == [row(1, '-1/2')]
    kernel = null_coefficients([row(0, 0, 1)], 3)
    assert kernel == [row(1, 0, 0), row(0, 1, 0)]


def test_trace_annihilator_kernel():
    m = matrix_of(build_invariant(InvariantKind.K_MINUS_AB), enumerate_sector(1, 1, 0, 0))
    kernel = nullspace(m)
    assert len(kernel) == 8
    assert all(m.matvec(v).is_zero for v in kernel)


def test_nullspace_of_zero_and_identity():
    domain = enumerate_sector(1, 0, 0, 0)
    assert len(nullspace(ExactMatrix(domain, domain, {}))) == 3
    assert nullspace(ExactMatrix(domain, domain, {(i, i): ONE for i in range(3)})) == []


def test_joint_nullspace_of_both_traces():
    domain = enumerate_sector(1, 1, 1, 1)
    down_ab = matrix_of(build_invariant(InvariantKind.K_MINUS_AB), domain)
    down_cd = matrix_of(build_invariant(InvariantKind.K_MINUS_CD), domain)
    assert len(joint_nullspace([down_ab, down_cd])) == 64


def test_diagonal_pencil():
    pairs = generalized_eigen(square({(0, 0): Fraction(3, 4)}), identity())
    assert [p.label for p in pairs] == ['3/4', '0']
    assert all(p.exact and p.multiplicity == 1 for p in pairs)
    assert pairs[0].eigenvectors == [row(1, 0)]
    assert pairs[1].eigenvectors == [row(0, 1)]


def test_gram_weighted_scalar():
    pairs = generalized_eigen(square({(0, 0): 3}, 1), square({(0, 0): 2}, 1))
    assert len(pairs) == 1
    assert pairs[0].value == Fraction(3, 2)


def test_degenerate_eigenvalue():
    pairs = generalized_eigen(square({(0, 0): 5, (1, 1): 5}), identity())
    assert len(pairs) == 1
    assert pairs[0].multiplicity == 2
    assert len(pairs[0].eigenvectors) == 2


def test_surd_eigenvalues_stay_exact():
    h = square({(0, 1): 3, (1, 0): 3})
    g = square({(0, 0): 1, (1, 1): 3})
    pairs = generalized_eigen(h, g)
    assert [p.value for p in pairs] == [SQRT3, -SQRT3]
    assert pairs[0].exact
    assert pairs[0].eigenvectors == [[ONE, Scalar(0, 0, Fraction(1, 3))]]


def test_irrational_eigenvalues_are_flagged():
    pairs = generalized_eigen(square({(0, 0): 1, (0, 1): 1, (1, 0): 1}), identity())
    assert [p.exact for p in pairs] == [False, False]
    assert pairs[0].approximation.startswith('1.61803398874989')
    assert pairs[1].approximation.startswith('-0.61803398874989')
    assert pairs[0].digits == 50
    assert pairs[0].to_dict()['exact'] is False


def test_non_hermitian_input():
    with pytest.raises(HermiticityError):
        generalized_eigen(square({(0, 1): 1}), identity())


def test_empty_pencil():
    assert generalized_eigen(square({}, 0), square({}, 0)) == []
