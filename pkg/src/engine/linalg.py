"""Exact linear algebra over Q(i, sqrt 3): row reduction, kernels and the Gram-weighted eigenproblem."""
import logging

import mpmath
import sympy

from src.config import NUMERIC_DIGITS
from src.errors import HermiticityError
from src.models.fock import StateVector
from src.models.report import Eigenpair
from src.models.scalar import ONE, Scalar, ZERO

logger = logging.getLogger(__name__)

_LAMBDA = sympy.Symbol('lam')


def rref(rows, n_cols):
    """Reduced row echelon form; returns the reduced rows and the pivot columns."""
    rows = [list(r) for r in rows if any(not v.is_zero for v in r)]
    pivots = []
    lead = 0
    for col in range(n_cols):
        pivot = next((r for r in range(lead, len(rows)) if not rows[r][col].is_zero), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        inverse = rows[lead][col].invert()
        rows[lead] = [v * inverse if not v.is_zero else v for v in rows[lead]]
        for r in range(len(rows)):
            if r != lead and not rows[r][col].is_zero:
                factor = rows[r][col]
                rows[r] = [a - factor * b if not b.is_zero else a for a, b in zip(rows[r], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows[:lead], pivots


def rank(rows, n_cols):
    return len(rref(rows, n_cols)[1])


def null_coefficients(rows, n_cols):
    """Kernel basis as coefficient lists, each scaled so its first nonzero entry is 1."""
    reduced, pivots = rref(rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [ZERO] * n_cols
        vec[free] = ONE
        for r, col in enumerate(pivots):
            vec[col] = -reduced[r][free]
        first = next(v for v in vec if not v.is_zero)
        if first != ONE:
            inverse = first.invert()
            vec = [v * inverse for v in vec]
        basis.append(vec)
    return basis


def nullspace(matrix):
    n_cols = matrix.domain.dimension
    coefficient_lists = null_coefficients(matrix.rows(), n_cols)
    monomials = matrix.domain.monomials
    return [StateVector({monomials[j]: c for j, c in enumerate(vec) if not c.is_zero})
            for vec in coefficient_lists]


def joint_nullspace(matrices):
    """Common kernel of several matrices sharing one domain."""
    domain = matrices[0].domain
    rows = [row for m in matrices for row in m.rows()]
    coefficient_lists = null_coefficients(rows, domain.dimension)
    return [StateVector({domain.monomials[j]: c for j, c in enumerate(vec) if not c.is_zero})
            for vec in coefficient_lists]


def _check_hermitian(matrix, label):
    n = matrix.domain.dimension
    for r in range(n):
        for c in range(r, n):
            lhs = matrix.entry(r, c)
            rhs = matrix.entry(c, r).conjugate()
            if lhs != rhs:
                logger.error('%s is not hermitian at (%d, %d)', label, r, c)
                raise HermiticityError(r, c, lhs, rhs)


def _to_sympy_matrix(matrix):
    n_rows, n_cols = matrix.shape
    dense = matrix.rows()
    return sympy.Matrix(n_rows, n_cols, lambda r, c: dense[r][c].to_sympy())


def characteristic_polynomial(h, g):
    """det(H - lam G) as a sympy Poly in lam."""
    pencil = _to_sympy_matrix(h) - _LAMBDA * _to_sympy_matrix(g)
    det = sympy.expand(pencil.det(method='berkowitz'))
    return sympy.Poly(det, _LAMBDA)


def _factor(poly, rational):
    """Irreducible factors over Q(i, sqrt 3); rational polynomials are split over Q first."""
    extension = [sympy.sqrt(3), sympy.I]
    if not rational:
        return sympy.factor_list(poly.as_expr(), _LAMBDA, extension=extension)[1]
    factors = []
    for factor_expr, multiplicity in sympy.factor_list(poly.as_expr(), _LAMBDA)[1]:
        if sympy.Poly(factor_expr, _LAMBDA).degree() > 1:
            refined = sympy.factor_list(factor_expr, _LAMBDA, extension=extension)[1]
            factors.extend((f, multiplicity * m) for f, m in refined)
        else:
            factors.append((factor_expr, multiplicity))
    return factors


def _to_mp(value, digits):
    re_part, im_part = sympy.N(value, digits).as_real_imag()
    return mpmath.mpc(mpmath.mpf(str(re_part)), mpmath.mpf(str(im_part)))


def _numeric_roots(factor_poly, digits):
    with mpmath.workdps(digits + 10):
        coefficients = [_to_mp(c, digits + 10) for c in factor_poly.all_coeffs()]
        roots, error = mpmath.polyroots(coefficients, maxsteps=200, extraprec=4 * digits, error=True)
        return [(mpmath.nstr(mpmath.re(r), digits), mpmath.nstr(error, 5)) for r in roots]


def _sort_key(pair):
    if pair.exact:
        return -float(pair.value.to_sympy().evalf())
    return -float(pair.approximation)


def generalized_eigen(h, g, digits=NUMERIC_DIGITS):
    """Solve H x = lam G x for a hermitian H and a positive definite Gram matrix G.

    Rational (and Q(sqrt 3)) roots of det(H - lam G) are extracted exactly; the remaining factors
    are solved numerically and their eigenvalues flagged inexact.
    """
    n = h.domain.dimension
    if n == 0:
        return []
    _check_hermitian(h, 'H')
    _check_hermitian(g, 'G')
    rational = all(v.is_rational for v in h.entries.values()) and all(v.is_rational for v in g.entries.values())
    poly = characteristic_polynomial(h, g)
    factors = _factor(poly, rational)
    h_rows, g_rows = h.rows(), g.rows()
    pairs = []
    for factor_expr, multiplicity in factors:
        factor_poly = sympy.Poly(factor_expr, _LAMBDA)
        if factor_poly.degree() == 0:
            continue
        if factor_poly.degree() == 1:
            c1, c0 = factor_poly.all_coeffs()
            value = Scalar.from_sympy(-c0 / c1)
            shifted = [[hv - value * gv for hv, gv in zip(hr, gr)] for hr, gr in zip(h_rows, g_rows)]
            vectors = null_coefficients(shifted, n)
            pairs.append(Eigenpair(value=value, multiplicity=multiplicity, eigenvectors=vectors))
            continue
        logger.warning('degree %d factor of the characteristic polynomial has no exact roots, solving at %d digits',
                       factor_poly.degree(), digits)
        for approximation, bound in _numeric_roots(factor_poly, digits):
            pairs.append(Eigenpair(value=None, multiplicity=multiplicity, eigenvectors=[], exact=False,
                                   approximation=approximation, digits=digits, error_bound=bound))
    pairs.sort(key=_sort_key)
    return pairs
