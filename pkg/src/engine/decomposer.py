"""Coupled SU(3) irreps in a product of two irreps, with copies labelled by the C4' spectrum."""
import logging
from fractions import Fraction
from functools import lru_cache

from src.config import DEFAULT_LAMBDAS
from src.engine.fock import combine, enumerate_sector, gram_inner, gram_matrix, matrix_of, operator_matrix_on
from src.engine.linalg import generalized_eigen, joint_nullspace, null_coefficients, rref
from src.engine.operators import (
    InvariantKind,
    build_c4prime,
    build_casimir,
    build_invariant,
    build_isb,
    build_magnetic,
    isb_contraction,
    number_operator,
    raising_operators,
)
from src.engine.oracle import tensor_decompose
from src.errors import EngineError, FixtureError, TermLookupError
from src.models.fock import ConstrainedBasis, StateVector, monomial_weight
from src.models.labels import IrrepLabel
from src.models.report import CSCO_OPERATORS, CSCOWitness, DecompositionReport, DecompositionTerm, VerificationReport

logger = logging.getLogger(__name__)

FAMILY_SWAP = {'a': 'c', 'c': 'a', 'b': 'd', 'd': 'b'}


def _constraints():
    return (build_invariant(InvariantKind.K_MINUS_AB), build_invariant(InvariantKind.K_MINUS_CD))


@lru_cache(maxsize=None)
def constrained_basis(p1, q1, p2, q2):
    factors = (IrrepLabel(p1, q1), IrrepLabel(p2, q2))
    sector = enumerate_sector(p1, q1, p2, q2)
    matrices = [matrix_of(op, sector) for op in _constraints()]
    vectors = tuple(joint_nullspace(matrices))
    expected = factors[0].dimension * factors[1].dimension
    if len(vectors) != expected:
        raise EngineError(f'constrained space of {factors} has {len(vectors)} states, expected {expected}')
    logger.info('sector %s: %d monomials, %d constrained states', sector.counts, sector.dimension, len(vectors))
    return ConstrainedBasis(factors, sector, vectors)


def weight_space(basis, weight):
    """Basis of the constrained states of one weight."""
    sector = basis.sector
    projected = []
    for vec in basis.vectors:
        part = StateVector({m: c for m, c in vec.items() if monomial_weight(m) == weight})
        if not part.is_zero:
            projected.append(part)
    if not projected:
        return []
    rows = [[vec.coefficient(m) for m in sector.monomials] for vec in projected]
    reduced, _ = rref(rows, sector.dimension)
    return [StateVector({sector.monomials[j]: c for j, c in enumerate(row) if not c.is_zero}) for row in reduced]


def highest_weight_space(basis, target):
    """States of weight (p, p+2q) killed by T+ and U+; their number is the multiplicity of target."""
    space = weight_space(basis, target.highest_weight())
    if not space:
        return []
    raising = raising_operators()
    rows = []
    for name in ('T+', 'U+'):
        images = [raising[name].apply(v) for v in space]
        support = sorted({m for image in images for m, _ in image.items()})
        rows.extend([image.coefficient(m) for image in images] for m in support)
    return [combine(space, coefficients) for coefficients in null_coefficients(rows, len(space))]


def candidates(p1, q1, p2, q2):
    total = p1 + q1 + p2 + q2
    triality = (p1 - q1 + p2 - q2) % 3
    return [IrrepLabel(p, q) for p in range(total + 1) for q in range(total + 1 - p) if (p - q) % 3 == triality]


def _coefficients(coeffs):
    return tuple(Fraction(c) for c in coeffs)


def _resolve_term(label, vectors, c4prime):
    h = operator_matrix_on(c4prime, vectors)
    g = gram_matrix(vectors)
    return DecompositionTerm(label, len(vectors), generalized_eigen(h, g), vectors)


def _orthogonal_across(term):
    resolved = [(pair, combine(term.highest_weight_vectors, c)) for pair, c in term.resolved_vectors()]
    for i, (first, u) in enumerate(resolved):
        for second, v in resolved[i + 1:]:
            if first is not second and not gram_inner(u, v).is_zero:
                return False
    return True


def _findings(term, coeffs):
    label = f'({term.irrep.p},{term.irrep.q})'
    found = []
    if term.multiplicity > 1 and not term.distinct:
        found.append(f'degenerate C4prime spectrum in {label}: {term.eigenvalue_labels}')
    if not term.exact:
        found.append(f'inexact C4prime eigenvalues in {label}')
    for pair in term.eigenpairs:
        if pair.exact and not pair.value.is_real:
            found.append(f'non-real C4prime eigenvalue {pair.value} in {label}')
        elif pair.exact and coeffs == DEFAULT_LAMBDAS and pair.value.to_sympy().is_negative:
            found.append(f'negative C4prime eigenvalue {pair.value} in {label}')
    if not _orthogonal_across(term):
        found.append(f'eigenvectors of distinct eigenvalues are not Gram-orthogonal in {label}')
    return found


def resolve_target(p1, q1, p2, q2, p, q, coeffs=DEFAULT_LAMBDAS):
    """The term of one coupled irrep, or None when it does not occur."""
    basis = constrained_basis(p1, q1, p2, q2)
    vectors = highest_weight_space(basis, IrrepLabel(p, q))
    if not vectors:
        return None
    return _resolve_term(IrrepLabel(p, q), vectors, build_c4prime(_coefficients(coeffs)))


def resolve(p1, q1, p2, q2, coeffs=DEFAULT_LAMBDAS):
    coeffs = _coefficients(coeffs)
    basis = constrained_basis(p1, q1, p2, q2)
    c4prime = build_c4prime(coeffs)
    report = DecompositionReport(basis.factors, coeffs)
    for label in candidates(p1, q1, p2, q2):
        vectors = highest_weight_space(basis, label)
        if not vectors:
            continue
        term = _resolve_term(label, vectors, c4prime)
        report.terms.append(term)
        report.findings.extend(_findings(term, coeffs))
    report.terms.sort(key=lambda t: t.irrep)
    first, second = basis.factors
    total = sum(t.multiplicity * t.irrep.dimension for t in report.terms)
    report.dimension_check = total == first.dimension * second.dimension
    oracle = tensor_decompose(first, second)
    report.oracle_agreement = oracle == report.multiplicities
    if not report.oracle_agreement:
        logger.error('%r disagrees with the character oracle: %s', report, oracle)
    for finding in report.findings:
        logger.warning(finding)
    return report


def _eigenvalue(op, vec):
    """Eigenvalue of op on vec, or None when vec is not an eigenvector."""
    image = op.apply(vec)
    mono, coef = vec.leading()
    value = image.coefficient(mono) / coef
    return value if image == vec.scale(value) else None


def require_eigenvector(name, op, state, value):
    residual = op.apply(state) - state.scale(value)
    if not residual.is_zero:
        raise FixtureError(name, residual)


def octet_states():
    """X1 = (A+.D+) C+_1 B+_3 |0> and X2 = (B+.C+) A+_1 D+_3 |0>, at the octet highest weight."""
    vacuum = StateVector.vacuum()
    x1 = isb_contraction('A+', 'D+').apply(build_isb('C+', 1).apply(build_isb('B+', 3).apply(vacuum)))
    x2 = isb_contraction('B+', 'C+').apply(build_isb('A+', 1).apply(build_isb('D+', 3).apply(vacuum)))
    return x1, x2


def octet_fixture_check():
    """Asserts X1 - 4 X2 (value 3/4) and X1 + 1/2 X2 (value 0); the printed X1 - 1/2 X2 is only reported in details."""
    c4prime = build_c4prime(DEFAULT_LAMBDAS)
    x1, x2 = octet_states()
    half = Fraction(1, 2)
    octet = x1 - x2.scale(4)
    octet_prime = x1 + x2.scale(half)
    printed = x1 - x2.scale(half)
    report = VerificationReport('octet-fixture', None)
    for name, state, value in (('|8>', octet, Fraction(3, 4)), ("|8'>", octet_prime, 0)):
        report.states_checked += 1
        try:
            require_eigenvector(name, c4prime, state, value)
        except FixtureError as exc:
            logger.error(str(exc))
            report.fail(name, c4prime.apply(state), state.scale(value), residual=repr(exc.residual))
            return report
    symmetric, antisymmetric = x1 + x2, x1 - x2
    report.states_checked += 2
    if symmetric.swap_families(FAMILY_SWAP) != symmetric:
        report.fail('symmetric', symmetric.swap_families(FAMILY_SWAP), symmetric)
        return report
    if antisymmetric.swap_families(FAMILY_SWAP) != -antisymmetric:
        report.fail('antisymmetric', antisymmetric.swap_families(FAMILY_SWAP), -antisymmetric)
        return report
    printed_image = c4prime.apply(printed)
    rayleigh = gram_inner(printed, printed_image) / gram_inner(printed, printed)
    report.details.update({
        'gram_overlap': str(gram_inner(octet, octet_prime)),
        'printed_gram_overlap': str(gram_inner(octet, printed)),
        'printed_rayleigh_quotient': str(rayleigh),
        'printed_is_eigenvector': (printed_image - printed.scale(rayleigh)).is_zero,
    })
    return report


def csco_witness(report, term_index, copy=0):
    if not 0 <= term_index < len(report.terms):
        raise TermLookupError(f'{report!r} has no term {term_index}')
    term = report.terms[term_index]
    resolved = term.resolved_vectors()
    if not 0 <= copy < len(resolved):
        raise TermLookupError(f'term ({term.irrep.p},{term.irrep.q}) has no resolved copy {copy}')
    _, coefficients = resolved[copy]
    vec = combine(term.highest_weight_vectors, coefficients)
    operators = {
        'Na': number_operator('a'),
        'Nb': number_operator('b'),
        'Nc': number_operator('c'),
        'Nd': number_operator('d'),
        'C2': build_casimir(2),
        'C3': build_casimir(3),
        'C4prime': build_c4prime(report.coefficients),
        'I2': build_magnetic('I2'),
        'I3': build_magnetic('I3'),
        'Y': build_magnetic('Y'),
    }
    values = {name: _eigenvalue(operators[name], vec) for name in CSCO_OPERATORS}
    return CSCOWitness(term.irrep, copy, values, all(v is not None for v in values.values()))


def c4prime_commutation_check(p1, q1, p2, q2, coeffs=DEFAULT_LAMBDAS):
    basis = constrained_basis(p1, q1, p2, q2)
    c4prime = build_c4prime(_coefficients(coeffs))
    raising = raising_operators()
    partners = {'T+': raising['T+'], 'U+': raising['U+'],
                'I2': build_magnetic('I2'), 'I3': build_magnetic('I3'), 'Y': build_magnetic('Y')}
    report = VerificationReport('c4prime-commutation', None, states_checked=basis.dimension)
    for vec in basis.vectors:
        image = c4prime.apply(vec)
        for name, op in partners.items():
            lhs = c4prime.apply(op.apply(vec)) - op.apply(image)
            if not lhs.is_zero:
                report.fail(repr(vec), lhs, StateVector(), partner=name)
                return report
    return report


def constraint_preservation_check(p1, q1, p2, q2, coeffs=DEFAULT_LAMBDAS):
    basis = constrained_basis(p1, q1, p2, q2)
    c4prime = build_c4prime(_coefficients(coeffs))
    report = VerificationReport('constraint-preservation', None, states_checked=basis.dimension)
    for vec in basis.vectors:
        image = c4prime.apply(vec)
        for constraint in _constraints():
            leaked = constraint.apply(image)
            if not leaked.is_zero:
                report.fail(repr(vec), leaked, StateVector(), constraint=constraint.name)
                return report
    return report
