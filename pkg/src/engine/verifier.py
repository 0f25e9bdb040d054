"""Exact operator identities decided on the interior states of a truncated Fock space.

An interior state has total quanta at most nmax - margin, so every image taken while
checking an identity stays inside the truncation.
"""
import logging
from itertools import combinations

from src.config import (
    CASIMIR_MARGIN,
    CASIMIR_NMAX,
    DEFAULT_MARGIN,
    DEFAULT_NMAX,
)
from src.engine.fock import enumerate_sector, gram_inner, sectors_up_to
from src.engine.operators import (
    IDENTITIES,
    InvariantKind,
    L_INDEX_PAIRS,
    METRIC,
    build_casimir,
    build_generator,
    build_invariant,
    build_L,
    combination,
)
from src.models.fock import StateVector, format_monomial, monomial_counts
from src.models.report import Truncation, VerificationReport
from src.models.scalar import I

logger = logging.getLogger(__name__)

SUITES = ('so42', 'invariance', 'identities', 'casimirs', 'antisymmetry', 'hermiticity', 'stability')

# pairs re-run at doubled size by the stability check
STABILITY_SAMPLE = (((1, 2), (1, 3)), ((4, 5), (4, 6)), ((1, 5), (1, 6)), ((3, 5), (3, 6)), ((2, 4), (5, 6)))


def default_truncation(suite):
    if suite in ('casimirs', 'casimir2', 'casimir3'):
        return Truncation(CASIMIR_NMAX, CASIMIR_MARGIN)
    return Truncation(DEFAULT_NMAX, DEFAULT_MARGIN)


def interior_states(trunc):
    """Basis monomials with total quanta at most trunc.interior_total."""
    if trunc.interior_total < 0:
        return []
    return [m for counts in sectors_up_to(trunc.interior_total) for m in enumerate_sector(*counts).monomials]


def states_up_to(total):
    return [m for counts in sectors_up_to(total) for m in enumerate_sector(*counts).monomials]


def _all_L():
    return {pair: build_L(*pair) for pair in L_INDEX_PAIRS}


def _g(mu, nu):
    return METRIC[mu - 1] if mu == nu else 0


def _structure_rhs(first, second):
    """i (g_mr L_ns + g_ns L_mr + g_ms L_rn + g_nr L_sm) as (coefficient, (index pair)) terms."""
    (mu, nu), (rho, sigma) = first, second
    terms = []
    for g, pair in ((_g(mu, rho), (nu, sigma)), (_g(nu, sigma), (mu, rho)),
                    (_g(mu, sigma), (rho, nu)), (_g(nu, rho), (sigma, mu))):
        if g and pair[0] != pair[1]:
            terms.append((g, pair))
    return terms


class _ImageCache:
    """Memoized images op(basis monomial), keyed by operator name."""

    def __init__(self):
        self._images = {}

    def image(self, op, vec, key):
        cached = self._images.get((op.name, key))
        if cached is None:
            cached = op.apply(vec)
            self._images[(op.name, key)] = cached
        return cached


def _check_so42_pairs(pairs, trunc, report):
    generators = _all_L()
    trunc.require(2 * max(op.max_quanta_shift for op in generators.values()))
    states = interior_states(trunc)
    report.states_checked = len(states)
    for mono in states:
        vec = StateVector.basis(mono)
        images = {pair: op.apply(vec) for pair, op in generators.items()}
        for first, second in pairs:
            A, B = generators[first], generators[second]
            lhs = A.apply(images[second]) - B.apply(images[first])
            rhs = StateVector()
            for g, pair in _structure_rhs(first, second):
                rhs = rhs + build_L(*pair).apply(vec).scale(I * g)
            if lhs != rhs:
                logger.error('[L%d%d, L%d%d] fails on %s', *first, *second, format_monomial(mono))
                report.fail(format_monomial(mono), lhs, rhs, pair=[list(first), list(second)])
                return report
    return report


def verify_so42(trunc=None):
    trunc = trunc or default_truncation('so42')
    report = VerificationReport('so42', trunc)
    pairs = list(combinations(L_INDEX_PAIRS, 2))
    logger.info('checking %d SO(4,2) commutators on %s', len(pairs), trunc)
    return _check_so42_pairs(pairs, trunc, report)


def verify_invariance(trunc=None):
    trunc = trunc or default_truncation('invariance')
    generators = _all_L()
    flux = [build_generator('total', a) for a in range(1, 9)]
    trunc.require(max(op.max_quanta_shift for op in generators.values()))
    report = VerificationReport('invariance', trunc)
    states = interior_states(trunc)
    report.states_checked = len(states)
    logger.info('checking [J^a, L] for %d generator pairs on %d states', 8 * len(generators), len(states))
    for mono in states:
        vec = StateVector.basis(mono)
        flux_images = [J.apply(vec) for J in flux]
        for pair, L in generators.items():
            image = L.apply(vec)
            for a, J in enumerate(flux, start=1):
                lhs = J.apply(image) - L.apply(flux_images[a - 1])
                if not lhs.is_zero:
                    logger.error('[J^%d, L%d%d] fails on %s', a, *pair, format_monomial(mono))
                    report.fail(format_monomial(mono), lhs, StateVector(), generator=a, pair=list(pair))
                    return report
    return report


def verify_identities(trunc=None):
    """The three k0/kappa0 identities on every state up to nmax; they are diagonal, so no margin."""
    trunc = trunc or default_truncation('identities')
    report = VerificationReport('identities', trunc)
    sides = {name: (combination(lhs), combination(rhs)) for name, (lhs, rhs) in IDENTITIES.items()}
    states = states_up_to(trunc.nmax)
    report.states_checked = len(states)
    for mono in states:
        vec = StateVector.basis(mono)
        for name, (lhs_op, rhs_op) in sides.items():
            lhs, rhs = lhs_op.apply(vec), rhs_op.apply(vec)
            if lhs != rhs:
                logger.error('identity %s fails on %s', name, format_monomial(mono))
                report.fail(format_monomial(mono), lhs, rhs, identity=name)
                return report
    return report


def verify_casimir_commutation(trunc=None, order=2):
    """[C, L_mn] = [C, k-(ab)] = [C, k-(cd)] = 0 on interior states."""
    trunc = trunc or default_truncation(f'casimir{order}')
    casimir = build_casimir(order)
    partners = dict(_all_L())
    partners['k-(ab)'] = build_invariant(InvariantKind.K_MINUS_AB)
    partners['k-(cd)'] = build_invariant(InvariantKind.K_MINUS_CD)
    trunc.require(casimir.max_quanta_shift + max(op.max_quanta_shift for op in partners.values()))
    report = VerificationReport(f'casimir{order}', trunc)
    states = interior_states(trunc)
    report.states_checked = len(states)
    logger.info('checking C%d against %d operators on %d states', order, len(partners), len(states))
    for mono in states:
        vec = StateVector.basis(mono)
        casimir_image = casimir.apply(vec)
        for key, op in partners.items():
            lhs = casimir.apply(op.apply(vec)) - op.apply(casimir_image)
            if not lhs.is_zero:
                label = key if isinstance(key, str) else 'L%d%d' % key
                logger.error('[C%d, %s] fails on %s', order, label, format_monomial(mono))
                report.fail(format_monomial(mono), lhs, StateVector(), partner=label)
                return report
    return report


def verify_antisymmetry(trunc=None):
    trunc = trunc or default_truncation('antisymmetry')
    report = VerificationReport('antisymmetry', trunc)
    states = interior_states(trunc)
    report.states_checked = len(states)
    for mu, nu in L_INDEX_PAIRS:
        total = build_L(mu, nu) + build_L(nu, mu)
        for mono in states:
            image = total.apply(StateVector.basis(mono))
            if not image.is_zero:
                report.fail(format_monomial(mono), image, StateVector(), pair=[mu, nu])
                return report
    return report


def verify_hermiticity(nmax):
    """gram_inner(L u, v) == gram_inner(u, L v) for every basis pair with total quanta <= nmax."""
    report = VerificationReport('hermiticity', Truncation(nmax, 0))
    states = states_up_to(nmax)
    report.states_checked = len(states)
    cache = _ImageCache()
    for pair in L_INDEX_PAIRS:
        L = build_L(*pair)
        for mono in states:
            u = StateVector.basis(mono)
            image = cache.image(L, u, mono)
            for other, _ in image.items():
                if sum(monomial_counts(other)) > nmax:
                    continue
                v = StateVector.basis(other)
                lhs = gram_inner(v, image)
                rhs = gram_inner(cache.image(L, v, other), u)
                if lhs != rhs:
                    report.fail(f'{format_monomial(other)} | {format_monomial(mono)}', lhs, rhs, pair=list(pair))
                    return report
    return report


def verify_stability(trunc=None, pairs=STABILITY_SAMPLE):
    """Re-run a sample of commutators at doubled size; a pass must stay a pass."""
    trunc = trunc or default_truncation('so42')
    base = _check_so42_pairs(pairs, trunc, VerificationReport('stability', trunc))
    if not base.passed:
        return base
    doubled = trunc.doubled()
    report = _check_so42_pairs(pairs, doubled, VerificationReport('stability', doubled))
    report.details['base_states'] = base.states_checked
    return report


def run_suite(name, trunc=None):
    """Reports of one named suite, or every suite for 'all', in a fixed order.

    Under 'all' the Casimir suites keep their own default truncations.
    """
    if name == 'all':
        return [r for suite in SUITES for r in run_suite(suite, None if suite == 'casimirs' else trunc)]
    if name == 'so42':
        return [verify_so42(trunc)]
    if name == 'invariance':
        return [verify_invariance(trunc)]
    if name == 'identities':
        return [verify_identities(trunc)]
    if name == 'antisymmetry':
        return [verify_antisymmetry(trunc)]
    if name == 'hermiticity':
        return [verify_hermiticity((trunc or default_truncation('hermiticity')).interior_total)]
    if name == 'stability':
        return [verify_stability(trunc)]
    if name == 'casimirs':
        return [verify_casimir_commutation(trunc, order=2), verify_casimir_commutation(trunc, order=3)]
    raise ValueError(f'unknown verification suite {name!r}')
