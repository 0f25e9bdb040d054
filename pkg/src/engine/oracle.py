"""Character-theoretic SU(3) tensor product decomposition.

Independent of the Fock machinery: weight systems come from Freudenthal's recursion in
integer Dynkin coordinates, and products are decomposed by peeling off highest weights.
"""
import logging
from collections import Counter
from functools import lru_cache
from itertools import product

from src.errors import OracleInconsistencyError
from src.models.labels import IrrepLabel, Weight, WeightSystem

logger = logging.getLogger(__name__)

# positive roots and Weyl vector in Dynkin coordinates
POSITIVE_ROOTS = ((2, -1), (-1, 2), (1, 1))
RHO = (1, 1)


def _form(u, v):
    """Three times the invariant inner product of two weights in Dynkin coordinates."""
    return 2 * u[0] * v[0] + u[0] * v[1] + u[1] * v[0] + 2 * u[1] * v[1]


def _shift(u, v, k=1):
    return (u[0] + k * v[0], u[1] + k * v[1])


def _reflections(a, b):
    return (-a, a + b), (a + b, -b)


def _dominant(a, b):
    while a < 0 or b < 0:
        if a < 0:
            a, b = -a, a + b
        else:
            a, b = a + b, -b
    return a, b


def _below(top, mu):
    """True when top - mu is a non-negative integer combination of simple roots."""
    d1, d2 = top[0] - mu[0], top[1] - mu[1]
    n1, r1 = divmod(2 * d1 + d2, 3)
    n2, r2 = divmod(d1 + 2 * d2, 3)
    return r1 == 0 and r2 == 0 and n1 >= 0 and n2 >= 0


def dim(label):
    return label.dimension


def conjugate(label):
    return label.conjugate()


@lru_cache(maxsize=None)
def _dynkin_multiplicities(p, q):
    top = (p, q)
    depth = p + q
    shifted_top = _shift(top, RHO)
    norm_top = _form(shifted_top, shifted_top)
    mult = {}
    for n1, n2 in sorted(product(range(depth + 1), repeat=2), key=lambda n: (n[0] + n[1], n)):
        mu = (p - 2 * n1 + n2, q + n1 - 2 * n2)
        if not _below(top, _dominant(*mu)):
            continue
        if mu == top:
            mult[mu] = 1
            continue
        numerator = 0
        for alpha in POSITIVE_ROOTS:
            k = 1
            while _shift(mu, alpha, k) in mult:
                nu = _shift(mu, alpha, k)
                numerator += _form(nu, alpha) * mult[nu]
                k += 1
        shifted = _shift(mu, RHO)
        value, remainder = divmod(2 * numerator, norm_top - _form(shifted, shifted))
        if remainder or value <= 0:
            raise OracleInconsistencyError(Weight.from_dynkin(*mu), value)
        mult[mu] = value
    return mult


def weight_system(label):
    multiplicities = {Weight.from_dynkin(a, b): m for (a, b), m in _dynkin_multiplicities(label.p, label.q).items()}
    return WeightSystem(label, multiplicities)


def weyl_orbit(weight):
    seen = {weight.dynkin()}
    frontier = [weight.dynkin()]
    while frontier:
        current = frontier.pop()
        for image in _reflections(*current):
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return sorted(Weight.from_dynkin(a, b) for a, b in seen)


def dominant_conjugate(weight):
    return Weight.from_dynkin(*_dominant(*weight.dynkin()))


def _peel_key(weight):
    a, b = weight.dynkin()
    return (a + b, a, b)


def tensor_decompose(l1, l2):
    """Multiplicity of every irrep in l1 x l2, as a dict sorted by label."""
    table = Counter()
    for w1, m1 in weight_system(l1).multiplicities.items():
        for w2, m2 in weight_system(l2).multiplicities.items():
            table[w1 + w2] += m1 * m2
    result = {}
    while table:
        dominant = [w for w, m in table.items() if all(x >= 0 for x in w.dynkin())]
        if not dominant:
            weight = next(iter(table))
            raise OracleInconsistencyError(weight, table[weight])
        top = max(dominant, key=_peel_key)
        copies = table[top]
        label = IrrepLabel(*top.dynkin())
        result[label] = copies
        for weight, m in weight_system(label).multiplicities.items():
            table[weight] -= copies * m
            if table[weight] < 0:
                raise OracleInconsistencyError(weight, table[weight])
            if table[weight] == 0:
                del table[weight]
    logger.debug('(%d,%d) x (%d,%d) -> %s', l1.p, l1.q, l2.p, l2.q, result)
    return dict(sorted(result.items()))
