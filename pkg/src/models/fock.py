"""Fock-space value types over the twelve Schwinger boson modes.

Monomials are plain 12-tuples of exponents ordered (a1 a2 a3 b1 b2 b3 c1 c2 c3 d1 d2 d3);
a monomial denotes the product of creation operators applied to the vacuum, unnormalized.
"""
from dataclasses import dataclass, field
from math import factorial, prod

from src.errors import SectorShiftError
from src.models.labels import Weight
from src.models.scalar import ONE, Scalar, ZERO

FAMILIES = ('a', 'b', 'c', 'd')
COLORS = (1, 2, 3)
MODE_COUNT = 12

# (twoI3, threeY) carried by one quantum of a triplet family, per color
_TRIPLET_WEIGHTS = ((1, 1), (-1, 1), (0, -2))

VACUUM = (0,) * MODE_COUNT


@dataclass(frozen=True)
class ModeIndex:
    family: str
    color: int

    def __post_init__(self):
        if self.family not in FAMILIES or self.color not in COLORS:
            raise ValueError(f'no boson mode {self.family}{self.color}')

    def __repr__(self):
        return f'<ModeIndex {self.family}{self.color}>'


MODES = tuple(ModeIndex(f, c) for f in FAMILIES for c in COLORS)


def mode(family, color):
    return 3 * FAMILIES.index(family) + color - 1


def monomial(**exponents):
    """Build a monomial from keyword exponents such as monomial(a1=1, b3=2)."""
    exps = [0] * MODE_COUNT
    for key, value in exponents.items():
        exps[mode(key[0], int(key[1:]))] = value
    return tuple(exps)


def monomial_counts(mono):
    return (mono[0] + mono[1] + mono[2], mono[3] + mono[4] + mono[5],
            mono[6] + mono[7] + mono[8], mono[9] + mono[10] + mono[11])


def monomial_weight(mono):
    two_i3 = three_y = 0
    for fam in range(4):
        sign = 1 if fam % 2 == 0 else -1
        for color in range(3):
            n = mono[3 * fam + color]
            if n:
                two_i3 += sign * n * _TRIPLET_WEIGHTS[color][0]
                three_y += sign * n * _TRIPLET_WEIGHTS[color][1]
    return Weight(two_i3, three_y)


def monomial_norm(mono):
    return prod(factorial(n) for n in mono if n > 1)


def format_monomial(mono):
    if not any(mono):
        return '|0>'
    parts = []
    for idx, n in enumerate(mono):
        if n:
            m = MODES[idx]
            parts.append(f'{m.family}{m.color}' + (f'^{n}' if n > 1 else ''))
    return ' '.join(parts)


class StateVector:
    """Finite linear combination of monomials; zero coefficients are never stored."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for mono, coef in terms.items():
                coef = Scalar.of(coef)
                if not coef.is_zero:
                    cleaned[mono] = coef
        self._terms = cleaned

    @classmethod
    def _trusted(cls, terms):
        vec = cls.__new__(cls)
        vec._terms = terms
        return vec

    @classmethod
    def vacuum(cls):
        return cls._trusted({VACUUM: ONE})

    @classmethod
    def basis(cls, mono):
        return cls._trusted({tuple(mono): ONE})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono):
        return self._terms.get(mono, ZERO)

    @property
    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for mono, coef in other._terms.items():
            total = out.get(mono, ZERO) + coef
            if total.is_zero:
                out.pop(mono, None)
            else:
                out[mono] = total
        return StateVector._trusted(out)

    def __neg__(self):
        return StateVector._trusted({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Scalar.of(factor)
        if factor.is_zero:
            return StateVector()
        return StateVector._trusted({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def leading(self):
        """First monomial in lexicographic order together with its coefficient."""
        mono = min(self._terms)
        return mono, self._terms[mono]

    def counts(self):
        found = {monomial_counts(m) for m in self._terms}
        if len(found) != 1:
            raise SectorShiftError(f'state spans {len(found)} sectors', sorted(found))
        return found.pop()

    def weight(self):
        found = {monomial_weight(m) for m in self._terms}
        if len(found) != 1:
            raise ValueError(f'state mixes {len(found)} weights')
        return found.pop()

    def swap_families(self, mapping):
        """Relabel families, e.g. {'a': 'c', 'c': 'a', 'b': 'd', 'd': 'b'}."""
        perm = [FAMILIES.index(mapping.get(f, f)) for f in FAMILIES]
        out = {}
        for mono, coef in self._terms.items():
            exps = [0] * MODE_COUNT
            for fam in range(4):
                exps[3 * perm[fam]:3 * perm[fam] + 3] = mono[3 * fam:3 * fam + 3]
            out[tuple(exps)] = coef
        return StateVector._trusted(out)

    def __repr__(self):
        if self.is_zero:
            return '<StateVector 0>'
        body = ' + '.join(f'({c})*{format_monomial(m)}' for m, c in sorted(self._terms.items()))
        return f'<StateVector {body}>'

    def to_dict(self):
        return {
            'terms': [[list(m), str(c)] for m, c in sorted(self._terms.items())],
        }


@dataclass(frozen=True)
class SectorBasis:
    counts: tuple
    monomials: tuple = field(repr=False)
    index: dict = field(repr=False, compare=False)

    @classmethod
    def abstract(cls, size):
        """Coordinate space of a given size, used for multiplicity-space matrices."""
        labels = tuple(range(size))
        return cls(None, labels, {label: label for label in labels})

    @property
    def dimension(self):
        return len(self.monomials)

    def coordinates(self, vec):
        return {self.index[m]: c for m, c in vec.items()}

    def __repr__(self):
        return f'<SectorBasis {self.counts} dim={self.dimension}>'

    def to_dict(self):
        return {
            'counts': list(self.counts),
            'dimension': self.dimension,
        }


@dataclass(frozen=True)
class ExactMatrix:
    domain: SectorBasis
    codomain: SectorBasis
    entries: dict = field(compare=False)

    @property
    def shape(self):
        return (self.codomain.dimension, self.domain.dimension)

    def entry(self, row, col):
        return self.entries.get((row, col), ZERO)

    def rows(self):
        """Dense row lists."""
        n_rows, n_cols = self.shape
        dense = [[ZERO] * n_cols for _ in range(n_rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def matvec(self, vec):
        coords = self.domain.coordinates(vec)
        out = {}
        for (r, c), v in self.entries.items():
            if c in coords:
                out[r] = out.get(r, ZERO) + v * coords[c]
        return StateVector({self.codomain.monomials[r]: v for r, v in out.items()})

    def restrict(self, positions):
        """Submatrix on the listed domain columns."""
        monomials = tuple(self.domain.monomials[c] for c in positions)
        remap = {c: k for k, c in enumerate(positions)}
        domain = SectorBasis(self.domain.counts, monomials, {m: k for k, m in enumerate(monomials)})
        entries = {(r, remap[c]): v for (r, c), v in self.entries.items() if c in remap}
        return ExactMatrix(domain, self.codomain, entries)

    def conj_transpose(self):
        return ExactMatrix(self.codomain, self.domain,
                           {(c, r): v.conjugate() for (r, c), v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.domain.counts == other.domain.counts
                and self.codomain.counts == other.codomain.counts
                and self.entries == other.entries)

    def __repr__(self):
        return f'<ExactMatrix {self.codomain.counts} <- {self.domain.counts} nnz={len(self.entries)}>'

    def to_dict(self):
        return {
            'domain': list(self.domain.counts),
            'codomain': list(self.codomain.counts),
            'entries': [[r, c, str(v)] for (r, c), v in sorted(self.entries.items())],
        }


@dataclass(frozen=True)
class ConstrainedBasis:
    """States of one sector annihilated by both trace constraints k-(ab) and k-(cd)."""

    factors: tuple
    sector: SectorBasis = field(repr=False)
    vectors: tuple = field(repr=False)

    @property
    def dimension(self):
        return len(self.vectors)

    def __repr__(self):
        first, second = self.factors
        return f'<ConstrainedBasis ({first.p},{first.q})x({second.p},{second.q}) dim={self.dimension}>'

    def to_dict(self):
        return {
            'factors': [[label.p, label.q] for label in self.factors],
            'sector': list(self.sector.counts),
            'dimension': self.dimension,
        }
