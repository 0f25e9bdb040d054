import pytest

from src.engine.fock import (apply, combine, commutator, enumerate_sector, gram_inner, gram_matrix,
                             matrix_of, sectors_up_to)
from src.engine.operators import (InvariantKind, annihilator, build_generator, build_invariant, build_L,
                                  creator, number_operator)
from src.errors import SectorShiftError
from src.models.fock import MODES, ModeIndex, StateVector, monomial, monomial_weight
from src.models.labels import Weight
from src.models.operator import LinearOperator
from src.models.scalar import I, ONE, Scalar


def ket(**exponents):
    return StateVector.basis(monomial(**exponents))


@pytest.mark.parametrize('counts, dimension', [
    ((0, 0, 0, 0), 1),
    ((1, 0, 0, 0), 3),
    ((2, 1, 0, 0), 18),
    ((1, 1, 1, 1), 81),
])
def test_sector_dimension(counts, dimension):
    assert enumerate_sector(*counts).dimension == dimension


def test_sector_is_lexicographic():
    basis = enumerate_sector(2, 0, 1, 1)
    assert list(basis.monomials) == sorted(basis.monomials)
    assert all(basis.index[m] == i for i, m in enumerate(basis.monomials))


def test_negative_sector_rejected():
    with pytest.raises(ValueError):
        enumerate_sector(-1, 0, 0, 0)


def test_sectors_up_to():
    assert sectors_up_to(0) == [(0, 0, 0, 0)]
    assert len(sectors_up_to(2)) == 15


def test_state_vector_drops_zero_coefficients():
    vec = StateVector({monomial(a1=1): 0, monomial(b2=1): Scalar(2)})
    assert len(vec) == 1
    assert (vec - vec).is_zero


def test_creation_and_annihilation():
    up = LinearOperator.word([creator('a', 1)])
    down = LinearOperator.word([annihilator('a', 1)])
    assert apply(up, StateVector.vacuum()) == ket(a1=1)
    assert apply(down, ket(a1=2)) == ket(a1=1) * 2
    assert apply(down, StateVector.vacuum()).is_zero


def test_trace_annihilator_on_singlet_pair():
    pair = apply(build_invariant(InvariantKind.K_PLUS_AB), StateVector.vacuum())
    assert pair == ket(a1=1, b1=1) + ket(a2=1, b2=1) + ket(a3=1, b3=1)
    assert apply(build_invariant(InvariantKind.K_MINUS_AB), pair) == StateVector.vacuum() * 3


def test_canonical_commutator():
    bracket = commutator(LinearOperator.word([annihilator('c', 2)]), LinearOperator.word([creator('c', 2)]))
    for state in (StateVector.vacuum(), ket(c2=2, b3=1), ket(a1=1, c2=1, d1=3)):
        assert bracket.apply(state) == state


def test_gram_inner():
    assert gram_inner(ket(a1=1), ket(a1=1)) == 1
    assert gram_inner(ket(a1=2), ket(a1=2)) == 2
    assert gram_inner(ket(a1=1), ket(a2=1)) == 0
    assert gram_inner(ket(b1=1) * I, ket(b1=1)) == -I


def test_gram_matrix_of_singlet_pair():
    pair = ket(a1=1, b1=1) + ket(a2=1, b2=1) + ket(a3=1, b3=1)
    g = gram_matrix([pair, ket(a1=1, b2=1)])
    assert g.entry(0, 0) == 3
    assert g.entry(1, 1) == 1
    assert g.entry(0, 1) == 0


def test_number_operator_matrix_is_identity():
    domain = enumerate_sector(1, 0, 0, 0)
    m = matrix_of(number_operator('a'), domain)
    assert m.entries == {(0, 0): ONE, (1, 1): ONE, (2, 2): ONE}
    assert m.to_dict() == {
        'domain': [1, 0, 0, 0],
        'codomain': [1, 0, 0, 0],
        'entries': [[0, 0, '1'], [1, 1, '1'], [2, 2, '1']],
    }


def test_pair_creator_matrix_on_vacuum():
    m = matrix_of(build_invariant(InvariantKind.K_PLUS_AB), enumerate_sector(0, 0, 0, 0))
    assert m.codomain.counts == (1, 1, 0, 0)
    assert m.shape == (9, 1)
    assert len(m.entries) == 3
    assert all(v == 1 for v in m.entries.values())


def test_isospin_generator_matrix():
    domain = enumerate_sector(1, 0, 0, 0)
    m = matrix_of(build_generator(1, 3), domain)
    diagonal = {domain.monomials[r]: v for (r, c), v in m.entries.items() if r == c}
    assert diagonal == {monomial(a1=1): Scalar('1/2'), monomial(a2=1): Scalar('-1/2')}


def test_matrix_of_rejects_sector_mixing():
    with pytest.raises(SectorShiftError):
        matrix_of(build_L(1, 5), enumerate_sector(1, 1, 0, 0))


def test_matvec_agrees_with_apply():
    domain = enumerate_sector(1, 1, 0, 0)
    op = build_generator('total', 6)
    m = matrix_of(op, domain)
    vec = ket(a1=1, b3=1) * 2 + ket(a3=1, b2=1) * I
    assert m.matvec(vec) == op.apply(vec)


def test_conj_transpose_of_pair_creator():
    m = matrix_of(build_invariant(InvariantKind.K_PLUS_AB), enumerate_sector(0, 0, 0, 0))
    down = matrix_of(build_invariant(InvariantKind.K_MINUS_AB), enumerate_sector(1, 1, 0, 0))
    assert m.conj_transpose() == down


def test_combine():
    vectors = [ket(a1=1), ket(a2=1)]
    assert combine(vectors, [ONE, I]) == ket(a1=1) + ket(a2=1) * I


def test_monomial_weight():
    assert monomial_weight(monomial(a1=1)) == Weight(1, 1)
    assert monomial_weight(monomial(b3=1)) == Weight(0, 2)
    assert ket(a1=1, b1=1).weight() == Weight(0, 0)


def test_swap_families():
    vec = ket(a1=1, b2=1) + ket(c3=2) * 3
    swapped = vec.swap_families({'a': 'c', 'c': 'a', 'b': 'd', 'd': 'b'})
    assert swapped == ket(c1=1, d2=1) + ket(a3=2) * 3


def test_counts_of_mixed_state():
    with pytest.raises(SectorShiftError):
        (ket(a1=1) + ket(b1=1)).counts()


def test_restrict_keeps_selected_columns():
    domain = enumerate_sector(1, 0, 0, 0)
    m = matrix_of(build_generator(1, 3), domain)
    keep = [domain.index[monomial(a1=1)]]
    sub = m.restrict(keep)
    assert sub.shape == (3, 1)
    assert sub.matvec(ket(a1=1)) == ket(a1=1) * Scalar('1/2')


def test_mode_index_labels():
    assert [repr(m) for m in MODES[:4]] == ['<ModeIndex a1>', '<ModeIndex a2>', '<ModeIndex a3>', '<ModeIndex b1>']
    with pytest.raises(ValueError):
        ModeIndex('e', 1)
    with pytest.raises(ValueError):
        ModeIndex('a', 4)
