"""Factory for every named operator: flux generators, invariants, SO(4,2) generators,
Casimirs, magnetic operators, irreducible Schwinger bosons and the resolving operator C4'.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from sympy.combinatorics import Permutation

from src.config import DEFAULT_LAMBDAS
from src.errors import EngineError
from src.models.fock import COLORS, FAMILIES, mode
from src.models.operator import CountReciprocal, Ladder, LinearOperator
from src.models.scalar import I, ONE, Scalar, ZERO

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_I_HALF = Scalar(0, _HALF)


def _mat(rows):
    return tuple(tuple(Scalar.of(v) for v in row) for row in rows)


_INV_SQRT3 = Scalar(0, 0, Fraction(1, 3))

GELL_MANN = (
    _mat([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    (
        (ZERO, -I, ZERO),
        (I, ZERO, ZERO),
        (ZERO, ZERO, ZERO),
    ),
    _mat([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    _mat([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    (
        (ZERO, ZERO, -I),
        (ZERO, ZERO, ZERO),
        (I, ZERO, ZERO),
    ),
    _mat([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    (
        (ZERO, ZERO, ZERO),
        (ZERO, ZERO, -I),
        (ZERO, I, ZERO),
    ),
    (
        (_INV_SQRT3, ZERO, ZERO),
        (ZERO, _INV_SQRT3, ZERO),
        (ZERO, ZERO, _INV_SQRT3 * -2),
    ),
)

# (2/sqrt3) * lambda8 / 2, rational
HYPERCHARGE_DIAGONAL = (Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3))


def _check_gell_mann():
    for a, lam in enumerate(GELL_MANN, start=1):
        for r in range(3):
            for c in range(3):
                if lam[r][c] != lam[c][r].conjugate():
                    raise EngineError(f'lambda{a} is not hermitian at ({r}, {c})')
        trace = lam[0][0] + lam[1][1] + lam[2][2]
        if not trace.is_zero:
            raise EngineError(f'lambda{a} has trace {trace}')
        for b, other in enumerate(GELL_MANN, start=1):
            value = sum((lam[r][c] * other[c][r] for r in range(3) for c in range(3)), ZERO)
            if value != (2 if a == b else 0):
                raise EngineError(f'Tr(lambda{a} lambda{b}) = {value}')


_check_gell_mann()


def creator(family, color):
    return Ladder(mode(family, color), True)


def annihilator(family, color):
    return Ladder(mode(family, color), False)


# triplet partner of each antitriplet in the flux generators
_GROUPS = {1: ('a', 'b'), 2: ('c', 'd')}


def _flux_words(matrix, triplet, antitriplet):
    """a+ (M) a - b+ (M^T) b for a 3x3 matrix M."""
    terms = []
    for alpha in COLORS:
        for beta in COLORS:
            entry = matrix[alpha - 1][beta - 1]
            if entry.is_zero:
                continue
            terms.append((entry, ((creator(triplet, alpha), annihilator(triplet, beta)),)))
            terms.append((-entry, ((creator(antitriplet, beta), annihilator(antitriplet, alpha)),)))
    return terms


@lru_cache(maxsize=None)
def build_generator(group, a):
    """SU(3) flux generator J^a of group 1 (a, b), group 2 (c, d) or 'total'."""
    if not 1 <= a <= 8:
        raise ValueError(f'no Gell-Mann index {a}')
    half = tuple(tuple(v * _HALF for v in row) for row in GELL_MANN[a - 1])
    if group == 'total':
        groups = (1, 2)
    elif group in _GROUPS:
        groups = (group,)
    else:
        raise ValueError(f'unknown generator group {group!r}')
    terms = []
    for g in groups:
        terms.extend(_flux_words(half, *_GROUPS[g]))
    return LinearOperator(terms, name=f'J{group}^{a}')


@lru_cache(maxsize=None)
def number_operator(family):
    if family not in FAMILIES:
        raise ValueError(f'unknown boson family {family!r}')
    terms = [(ONE, ((creator(family, c), annihilator(family, c)),)) for c in COLORS]
    return LinearOperator(terms, name=f'N{family}')


class InvariantKind(Enum):
    K_PLUS_AB = ('k', '+', 'ab')
    K_MINUS_AB = ('k', '-', 'ab')
    K_ZERO_AB = ('k', '0', 'ab')
    K_PLUS_CD = ('k', '+', 'cd')
    K_MINUS_CD = ('k', '-', 'cd')
    K_ZERO_CD = ('k', '0', 'cd')
    K_PLUS_AD = ('k', '+', 'ad')
    K_MINUS_AD = ('k', '-', 'ad')
    K_ZERO_AD = ('k', '0', 'ad')
    K_PLUS_BC = ('k', '+', 'bc')
    K_MINUS_BC = ('k', '-', 'bc')
    K_ZERO_BC = ('k', '0', 'bc')
    KAPPA_PLUS_AC = ('kappa', '+', 'ac')
    KAPPA_MINUS_AC = ('kappa', '-', 'ac')
    KAPPA_ZERO_AC = ('kappa', '0', 'ac')
    KAPPA_PLUS_BD = ('kappa', '+', 'bd')
    KAPPA_MINUS_BD = ('kappa', '-', 'bd')
    KAPPA_ZERO_BD = ('kappa', '0', 'bd')

    @property
    def symbol(self):
        return self.value[0]

    @property
    def sign(self):
        return self.value[1]

    @property
    def pair(self):
        return self.value[2]

    @property
    def label(self):
        return f'{self.symbol}{self.sign}({self.pair})'


# Doublet-of-triplets arrangement: X^sigma = (a, c), Y^sigma = (b, d), with the tilde
# companion Y~^sigma = eps^{sigma sigma'} Y^sigma', eps^{12} = +1.
PAIR_ARRANGEMENT = {
    'X': ('a', 'c'),
    'Y': ('b', 'd'),
    'epsilon12': 1,
}


@lru_cache(maxsize=None)
def build_invariant(kind):
    x, y = kind.pair
    if kind.sign == '0':
        if kind.symbol == 'k':
            op = number_operator(x) + number_operator(y) + LinearOperator.identity(3)
        else:
            op = number_operator(x) - number_operator(y)
        return op.named(kind.label)
    if kind.symbol == 'k':
        # x+ . y+ and its adjoint
        letters = [(creator(x, c), creator(y, c)) for c in COLORS]
    else:
        # x+ . y
        letters = [(creator(x, c), annihilator(y, c)) for c in COLORS]
    op = LinearOperator([(ONE, (w,)) for w in letters])
    if kind.sign == '-':
        op = op.adjoint()
    return op.named(kind.label)


K = InvariantKind

# L_{mu nu} for mu < nu as (coefficient, invariant) pairs
L_TABLE = {
    (1, 2): ((_HALF, K.KAPPA_ZERO_AC), (_HALF, K.KAPPA_ZERO_BD)),
    (1, 3): ((_I_HALF, K.KAPPA_PLUS_AC), (-_I_HALF, K.KAPPA_MINUS_AC),
             (_I_HALF, K.KAPPA_PLUS_BD), (-_I_HALF, K.KAPPA_MINUS_BD)),
    (2, 3): ((_HALF, K.KAPPA_PLUS_AC), (_HALF, K.KAPPA_MINUS_AC),
             (_HALF, K.KAPPA_PLUS_BD), (_HALF, K.KAPPA_MINUS_BD)),
    (1, 4): ((-_HALF, K.KAPPA_PLUS_AC), (-_HALF, K.KAPPA_MINUS_AC),
             (_HALF, K.KAPPA_PLUS_BD), (_HALF, K.KAPPA_MINUS_BD)),
    (2, 4): ((_I_HALF, K.KAPPA_PLUS_AC), (-_I_HALF, K.KAPPA_MINUS_AC),
             (-_I_HALF, K.KAPPA_PLUS_BD), (_I_HALF, K.KAPPA_MINUS_BD)),
    (3, 4): ((-_HALF, K.KAPPA_ZERO_AC), (_HALF, K.KAPPA_ZERO_BD)),
    (1, 5): ((_HALF, K.K_PLUS_AB), (_HALF, K.K_MINUS_AB),
             (-_HALF, K.K_PLUS_CD), (-_HALF, K.K_MINUS_CD)),
    (1, 6): ((_I_HALF, K.K_PLUS_AB), (-_I_HALF, K.K_MINUS_AB),
             (-_I_HALF, K.K_PLUS_CD), (_I_HALF, K.K_MINUS_CD)),
    (2, 5): ((-_I_HALF, K.K_PLUS_AB), (_I_HALF, K.K_MINUS_AB),
             (-_I_HALF, K.K_PLUS_CD), (_I_HALF, K.K_MINUS_CD)),
    (2, 6): ((_HALF, K.K_PLUS_AB), (_HALF, K.K_MINUS_AB),
             (_HALF, K.K_PLUS_CD), (_HALF, K.K_MINUS_CD)),
    (3, 5): ((-_HALF, K.K_PLUS_AD), (-_HALF, K.K_MINUS_AD),
             (-_HALF, K.K_PLUS_BC), (-_HALF, K.K_MINUS_BC)),
    (3, 6): ((-_I_HALF, K.K_PLUS_AD), (_I_HALF, K.K_MINUS_AD),
             (-_I_HALF, K.K_PLUS_BC), (_I_HALF, K.K_MINUS_BC)),
    (4, 5): ((-_I_HALF, K.K_PLUS_AD), (_I_HALF, K.K_MINUS_AD),
             (_I_HALF, K.K_PLUS_BC), (-_I_HALF, K.K_MINUS_BC)),
    (4, 6): ((_HALF, K.K_PLUS_AD), (_HALF, K.K_MINUS_AD),
             (-_HALF, K.K_PLUS_BC), (-_HALF, K.K_MINUS_BC)),
    # (N + 6) / 2
    (5, 6): ((_HALF, K.K_ZERO_AB), (_HALF, K.K_ZERO_CD)),
}

METRIC = (1, 1, 1, 1, -1, -1)

L_INDEX_PAIRS = tuple(sorted(L_TABLE))


@lru_cache(maxsize=None)
def build_L(mu, nu):
    if mu == nu or not (1 <= mu <= 6 and 1 <= nu <= 6):
        raise ValueError(f'invalid SO(4,2) index pair ({mu}, {nu})')
    if mu > nu:
        return (-build_L(nu, mu)).named(f'L{mu}{nu}')
    op = LinearOperator.zero()
    for coef, kind in L_TABLE[(mu, nu)]:
        op = op + build_invariant(kind) * coef
    return op.collect(name=f'L{mu}{nu}')


def _raised(mu, nu):
    return METRIC[mu - 1] * METRIC[nu - 1]


def _pair_partitions():
    """Ordered sequences of three sorted pairs partitioning 1..6, with the permutation sign."""
    out = []
    for perm in permutations(range(6)):
        if perm[0] < perm[1] and perm[2] < perm[3] and perm[4] < perm[5]:
            sign = Permutation(list(perm)).signature()
            out.append((sign, ((perm[0] + 1, perm[1] + 1), (perm[2] + 1, perm[3] + 1), (perm[4] + 1, perm[5] + 1))))
    return out


def _quadratic():
    op = LinearOperator.zero()
    for mu, nu in L_INDEX_PAIRS:
        L = build_L(mu, nu)
        op = op + (L @ L) * (2 * _raised(mu, nu))
    return op


def _cubic():
    # the product of all six metric signs is +1, and each sorted pair stands for 2 orderings
    op = LinearOperator.zero()
    for sign, (p1, p2, p3) in _pair_partitions():
        op = op + (build_L(*p1) @ (build_L(*p2) @ build_L(*p3))) * (8 * sign)
    return op


def _quartic():
    # Tr (L g)^4 with A_{mu nu} = L_{mu nu} g_nu
    indices = range(1, 7)

    def entry(mu, nu):
        return build_L(mu, nu) * METRIC[nu - 1]

    square = {}
    for mu in indices:
        for rho in indices:
            total = LinearOperator.zero()
            for nu in indices:
                if nu not in (mu, rho):
                    total = total + (entry(mu, nu) @ entry(nu, rho))
            square[(mu, rho)] = total
    op = LinearOperator.zero()
    for mu in indices:
        for rho in indices:
            op = op + (square[(mu, rho)] @ square[(rho, mu)])
    return op


@lru_cache(maxsize=None)
def build_casimir(order):
    builders = {2: _quadratic, 3: _cubic, 4: _quartic}
    if order not in builders:
        raise ValueError(f'no SO(4,2) Casimir of order {order}')
    op = builders[order]()
    logger.debug('built C%d with %d top-level terms', order, len(op.terms))
    return op.named(f'C{order}')


# creating irreducible Schwinger boson -> (own family, partner family, pair)
_ISB_PARTS = {
    'A+': ('a', 'b', 'ab'),
    'B+': ('b', 'a', 'ab'),
    'C+': ('c', 'd', 'cd'),
    'D+': ('d', 'c', 'cd'),
}
ISB_KINDS = ('A+', 'B+', 'C+', 'D+', 'A', 'B', 'C', 'D')


def _pair_reciprocal(pair):
    weights = tuple(1 if f in pair else 0 for f in FAMILIES)
    return CountReciprocal(weights, 1)


@lru_cache(maxsize=None)
def build_isb(kind, color):
    """Irreducible Schwinger boson X+_alpha = x+_alpha - 1/(N_x + N_y + 1) k+(xy) y_alpha.

    The count factor sits leftmost and is evaluated on the counts after the shift.
    Annihilating kinds are the adjoints.
    """
    if kind not in ISB_KINDS:
        raise ValueError(f'unknown irreducible Schwinger boson {kind!r}')
    if color not in COLORS:
        raise ValueError(f'no color {color}')
    if not kind.endswith('+'):
        return build_isb(kind + '+', color).adjoint().named(f'{kind}[{color}]')
    own, partner, pair = _ISB_PARTS[kind]
    reciprocal = _pair_reciprocal(pair)
    terms = [(ONE, ((creator(own, color),),))]
    for beta in COLORS:
        word = (reciprocal, creator(pair[0], beta), creator(pair[1], beta), annihilator(partner, color))
        terms.append((-ONE, (word,)))
    return LinearOperator(terms, name=f'{kind}[{color}]')


def isb_contraction(left, right):
    """sum_alpha left_alpha right_alpha over irreducible Schwinger bosons."""
    op = LinearOperator.zero()
    for color in COLORS:
        op = op + (build_isb(left, color) @ build_isb(right, color))
    return op.named(f'({left}.{right})')


# (outer left, outer right, inner left, inner right) per coefficient
_C4PRIME_TERMS = (
    (('A+', 'C'), ('C+', 'A')),
    (('B+', 'D'), ('D+', 'B')),
    (('A+', 'D+'), ('A', 'D')),
    (('B+', 'C+'), ('B', 'C')),
)


def _coefficients(coeffs):
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) != 4:
        raise ValueError(f'C4prime takes exactly four coefficients, got {len(coeffs)}')
    return coeffs


@lru_cache(maxsize=None)
def _c4prime(coeffs):
    op = LinearOperator.zero()
    for coef, (outer, inner) in zip(coeffs, _C4PRIME_TERMS):
        if coef:
            op = op + (isb_contraction(*outer) @ isb_contraction(*inner)) * coef
    return op.named("C4'")


def build_c4prime(coeffs=DEFAULT_LAMBDAS):
    return _c4prime(_coefficients(coeffs))


@lru_cache(maxsize=None)
def build_magnetic(which):
    if which == 'I3':
        return build_generator('total', 3).named('I3')
    if which == 'I2':
        op = LinearOperator.zero()
        for a in (1, 2, 3):
            J = build_generator('total', a)
            op = op + (J @ J)
        return op.named('I2')
    if which == 'Y':
        diagonal = tuple(tuple(HYPERCHARGE_DIAGONAL[r] if r == c else 0 for c in range(3)) for r in range(3))
        terms = _flux_words(_mat(diagonal), 'a', 'b') + _flux_words(_mat(diagonal), 'c', 'd')
        return LinearOperator(terms, name='Y')
    raise ValueError(f'unknown magnetic operator {which!r}')


def _raising(a, b, name):
    return (build_generator('total', a) + build_generator('total', b) * I).collect(name=name)


@lru_cache(maxsize=None)
def raising_operators():
    """T+ = J1 + iJ2 and U+ = J6 + iJ7 over the total generators."""
    return {
        'T+': _raising(1, 2, 'T+'),
        'U+': _raising(6, 7, 'U+'),
    }


# lhs == rhs as linear combinations of invariants
IDENTITIES = {
    'kappa0(ac)': (((1, K.KAPPA_ZERO_AC),), ((1, K.K_ZERO_AB), (-1, K.K_ZERO_BC))),
    'kappa0(bd)': (((1, K.KAPPA_ZERO_BD),), ((1, K.K_ZERO_AB), (-1, K.K_ZERO_AD))),
    'k0-sum': (((1, K.K_ZERO_AB), (1, K.K_ZERO_CD)), ((1, K.K_ZERO_AD), (1, K.K_ZERO_BC))),
}


def combination(terms):
    op = LinearOperator.zero()
    for coef, kind in terms:
        op = op + build_invariant(kind) * coef
    return op


def format_operator(op):
    """Normal-ordered term list, one 'coefficient * word' per line."""
    lines = []
    for coef, word in op.expand():
        text = ' '.join(str(letter) for letter in word) or '1'
        lines.append(f'{coef} * {text}')
    return '\n'.join(lines)
