import logging
from functools import lru_cache
from itertools import product

from src.errors import SectorShiftError
from src.models.fock import ExactMatrix, SectorBasis, StateVector, monomial_counts, monomial_norm
from src.models.scalar import ZERO

logger = logging.getLogger(__name__)


def _compositions(total):
    """All exponent triples summing to total, in lexicographic order."""
    return [(i, j, total - i - j) for i in range(total + 1) for j in range(total - i + 1)]


@lru_cache(maxsize=None)
def enumerate_sector(n_a, n_b, n_c, n_d):
    counts = (n_a, n_b, n_c, n_d)
    if min(counts) < 0:
        raise ValueError(f'sector counts must be non-negative, got {counts}')
    parts = [_compositions(n) for n in counts]
    monomials = tuple(a + b + c + d for a, b, c, d in product(*parts))
    return SectorBasis(counts, monomials, {m: i for i, m in enumerate(monomials)})


def _empty_sector(counts):
    return SectorBasis(tuple(counts), (), {})


def sectors_up_to(total):
    """Count tuples of every sector with at most `total` quanta, in lexicographic order."""
    return [(a, b, c, d)
            for a in range(total + 1)
            for b in range(total + 1 - a)
            for c in range(total + 1 - a - b)
            for d in range(total + 1 - a - b - c)]


def apply(op, vec):
    return op.apply(vec)


def commutator(lhs, rhs):
    return (lhs @ rhs) - (rhs @ lhs)


def gram_inner(u, v):
    if len(u) > len(v):
        small, large, conj_small = v, u, False
    else:
        small, large, conj_small = u, v, True
    total = ZERO
    for mono, c in small.items():
        other = large.coefficient(mono)
        if other.is_zero:
            continue
        if conj_small:
            total = total + c.conjugate() * other * monomial_norm(mono)
        else:
            total = total + other.conjugate() * c * monomial_norm(mono)
    return total


def matrix_of(op, domain):
    images = [op.apply(StateVector.basis(m)) for m in domain.monomials]
    found = {monomial_counts(m) for image in images for m, _ in image.items()}
    if len(found) > 1:
        raise SectorShiftError(f'{op!r} maps sector {domain.counts} into {len(found)} sectors', sorted(found))
    if found:
        target = found.pop()
    elif len(op.shifts) == 1:
        target = tuple(n + s for n, s in zip(domain.counts, op.uniform_shift))
    elif (0, 0, 0, 0) in op.shifts:
        target = domain.counts
    else:
        raise SectorShiftError(f'{op!r} has no well-defined codomain on {domain.counts}', sorted(op.shifts))
    codomain = enumerate_sector(*target) if min(target) >= 0 else _empty_sector(target)
    entries = {}
    for col, image in enumerate(images):
        for mono, c in image.items():
            entries[(codomain.index[mono], col)] = c
    logger.debug('matrix of %r on %s: %d nonzero entries', op, domain.counts, len(entries))
    return ExactMatrix(domain, codomain, entries)


def gram_matrix(vectors):
    basis = SectorBasis.abstract(len(vectors))
    entries = {}
    for i, u in enumerate(vectors):
        for j, v in enumerate(vectors):
            value = gram_inner(u, v)
            if not value.is_zero:
                entries[(i, j)] = value
    return ExactMatrix(basis, basis, entries)


def operator_matrix_on(op, vectors):
    """Matrix <v_i | op v_j> of an operator compressed to the span of the given vectors."""
    basis = SectorBasis.abstract(len(vectors))
    images = [op.apply(v) for v in vectors]
    entries = {}
    for i, u in enumerate(vectors):
        for j, image in enumerate(images):
            value = gram_inner(u, image)
            if not value.is_zero:
                entries[(i, j)] = value
    return ExactMatrix(basis, basis, entries)


def combine(vectors, coefficients):
    """Linear combination sum_k coefficients[k] * vectors[k]."""
    total = StateVector()
    for coef, vec in zip(coefficients, vectors):
        if not coef.is_zero:
            total = total + vec.scale(coef)
    return total
