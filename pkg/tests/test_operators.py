from fractions import Fraction

import pytest

from src.engine.operators import (GELL_MANN, IDENTITIES, ISB_KINDS, InvariantKind, L_INDEX_PAIRS, build_c4prime,
                                  build_casimir, build_generator, build_invariant, build_isb, build_L,
                                  build_magnetic, combination, format_operator,
                                  isb_contraction, number_operator, raising_operators)
from src.models.fock import StateVector, monomial
from src.models.scalar import I, ZERO


def ket(**exponents):
    return StateVector.basis(monomial(**exponents))


def singlet(x, y):
    return sum((ket(**{f'{x}{c}': 1, f'{y}{c}': 1}) for c in (1, 2, 3)), StateVector())


VACUUM = StateVector.vacuum()


def test_gell_mann_traces():
    for a, lam in enumerate(GELL_MANN):
        for b, other in enumerate(GELL_MANN):
            value = sum((lam[r][c] * other[c][r] for r in range(3) for c in range(3)), ZERO)
            assert value == (2 if a == b else 0)


def test_isospin_on_triplet_and_antitriplet():
    J3 = build_generator(1, 3)
    assert J3.apply(ket(a1=1)) == ket(a1=1) * Fraction(1, 2)
    assert J3.apply(ket(b1=1)) == ket(b1=1) * Fraction(-1, 2)
    assert build_generator(2, 3).apply(ket(a1=1)).is_zero


def test_flux_algebra_closes():
    J1, J2, J3 = (build_generator('total', a) for a in (1, 2, 3))
    for state in (ket(a1=1), ket(a2=1, b1=1), ket(c1=1, d2=2)):
        lhs = J1.apply(J2.apply(state)) - J2.apply(J1.apply(state))
        assert lhs == J3.apply(state) * I


def test_invariant_kinds():
    assert len(InvariantKind) == 18
    assert InvariantKind.K_PLUS_AB.label == 'k+(ab)'
    assert InvariantKind.KAPPA_ZERO_BD.pair == 'bd'


def test_invariants_on_small_states():
    assert build_invariant(InvariantKind.K_ZERO_AB).apply(VACUUM) == VACUUM * 3
    assert build_invariant(InvariantKind.KAPPA_PLUS_AC).apply(ket(c1=1)) == ket(a1=1)
    assert build_invariant(InvariantKind.K_MINUS_CD).apply(singlet('c', 'd')) == VACUUM * 3
    assert build_invariant(InvariantKind.KAPPA_ZERO_BD).apply(ket(b2=2, d1=1)) == ket(b2=2, d1=1)


@pytest.mark.parametrize('name', sorted(IDENTITIES))
def test_invariant_identities(name):
    lhs, rhs = IDENTITIES[name]
    for state in (VACUUM, ket(a1=1, b2=1), ket(b3=2, c1=1, d2=1), ket(a2=1, c3=3, d1=1)):
        assert combination(lhs).apply(state) == combination(rhs).apply(state)


def test_so42_generators_on_small_states():
    assert build_L(5, 6).apply(VACUUM) == VACUUM * 3
    assert build_L(1, 2).apply(ket(a1=1)) == ket(a1=1) * Fraction(1, 2)
    expected = singlet('a', 'd') * Fraction(1, 2) - singlet('b', 'c') * Fraction(1, 2)
    assert build_L(4, 6).apply(VACUUM) == expected


def test_so42_brackets_on_vacuum():
    L45, L46, L56 = build_L(4, 5), build_L(4, 6), build_L(5, 6)
    lhs = L45.apply(L46.apply(VACUUM)) - L46.apply(L45.apply(VACUUM))
    assert lhs == L56.apply(VACUUM) * I
    state = ket(a1=1, d3=1)
    L12, L13, L23 = build_L(1, 2), build_L(1, 3), build_L(2, 3)
    assert L12.apply(L13.apply(state)) - L13.apply(L12.apply(state)) == L23.apply(state) * I


def test_generator_antisymmetry():
    state = ket(a1=1, c2=1)
    for mu, nu in L_INDEX_PAIRS:
        assert build_L(nu, mu).apply(state) == -build_L(mu, nu).apply(state)


@pytest.mark.parametrize('pair', [(1, 1), (0, 2), (7, 1)])
def test_invalid_generator_index(pair):
    with pytest.raises(ValueError):
        build_L(*pair)


def test_quadratic_casimir_on_vacuum():
    assert build_casimir(2).apply(VACUUM) == VACUUM * -6


def test_unknown_casimir_order():
    with pytest.raises(ValueError):
        build_casimir(5)


def test_magnetic_operators():
    Y = build_magnetic('Y')
    assert Y.apply(ket(a1=1)) == ket(a1=1) * Fraction(1, 3)
    assert Y.apply(ket(a3=1)) == ket(a3=1) * Fraction(-2, 3)
    assert Y.apply(ket(b3=1)) == ket(b3=1) * Fraction(2, 3)
    assert build_magnetic('I2').apply(ket(a1=1)) == ket(a1=1) * Fraction(3, 4)
    with pytest.raises(ValueError):
        build_magnetic('Z')


def test_raising_operators():
    raising = raising_operators()
    assert set(raising) == {'T+', 'U+'}
    assert raising['T+'].apply(ket(a2=1)) == ket(a1=1)
    assert raising['U+'].apply(ket(a3=1)) == ket(a2=1)
    assert raising['T+'].apply(ket(a1=1)).is_zero
    assert raising['U+'].apply(ket(b2=1)) == -ket(b3=1)


def test_irreducible_boson_on_vacuum_and_antitriplet():
    A1 = build_isb('A+', 1)
    assert A1.apply(VACUUM) == ket(a1=1)
    assert A1.apply(ket(b1=1)) == ket(a1=1, b1=1) - singlet('a', 'b') * Fraction(1, 3)
    assert A1.apply(ket(b2=1)) == ket(a1=1, b2=1)


def test_irreducible_boson_stays_traceless():
    down = build_invariant(InvariantKind.K_MINUS_AB)
    for kind, partner in (('A+', 'b'), ('B+', 'a')):
        for color in (1, 2, 3):
            for other in (1, 2, 3):
                image = build_isb(kind, color).apply(ket(**{f'{partner}{other}': 1}))
                assert down.apply(image).is_zero


def test_irreducible_boson_kinds():
    assert len(ISB_KINDS) == 8
    assert build_isb('C', 2).name == 'C[2]'
    with pytest.raises(ValueError):
        build_isb('X+', 1)
    with pytest.raises(ValueError):
        build_isb('A+', 4)


def test_annihilating_boson_kills_vacuum():
    assert isb_contraction('A+', 'C').apply(VACUUM).is_zero
    assert isb_contraction('A+', 'C').apply(ket(c2=1)) == ket(a2=1)


def test_resolving_operator():
    assert build_c4prime().apply(VACUUM).is_zero
    assert build_c4prime().name == "C4'"
    with pytest.raises(ValueError):
        build_c4prime((1, 0, 0))


def test_format_operator():
    assert format_operator(number_operator('a')) == '1 * a+[1] a[1]\n1 * a+[2] a[2]\n1 * a+[3] a[3]'
