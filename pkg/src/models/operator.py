"""Linear operators on the twelve-mode Fock space.

An operator is a sum of terms; each term is a Scalar coefficient times an ordered product
of factors applied right to left. A factor is either a word of letters (ladder symbols and
count-dependent diagonal factors) acting monomial by monomial, or another LinearOperator,
which keeps composites such as Casimirs lazy.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from src.errors import DiagonalDomainError, SectorShiftError
from src.models.fock import FAMILIES, MODES, StateVector, monomial_counts
from src.models.scalar import ONE, Scalar, ZERO

_FLATTEN_LIMIT = 16


class Ladder(NamedTuple):
    mode: int
    create: bool

    def adjoint(self):
        return Ladder(self.mode, not self.create)

    def __str__(self):
        m = MODES[self.mode]
        return f'{m.family}{"+" if self.create else ""}[{m.color}]'


@dataclass(frozen=True)
class CountReciprocal:
    """Diagonal factor 1 / (sum_f weights[f] * N_f + offset), evaluated on the counts of the state it meets."""

    weights: tuple
    offset: int

    def value(self, mono):
        counts = monomial_counts(mono)
        denominator = sum(w * n for w, n in zip(self.weights, counts)) + self.offset
        if denominator == 0:
            raise DiagonalDomainError(self, mono)
        return Fraction(1, denominator)

    def __str__(self):
        parts = []
        for w, fam in zip(self.weights, FAMILIES):
            if w:
                parts.append(f'{"" if w == 1 else w}N{fam}')
        return f'1/({"+".join(parts)}+{self.offset})'


def _word_shift(word):
    shift = [0, 0, 0, 0]
    for letter in word:
        if isinstance(letter, Ladder):
            shift[letter.mode // 3] += 1 if letter.create else -1
    return tuple(shift)


def _act(word, mono):
    exps = list(mono)
    factor = 1
    for letter in reversed(word):
        if type(letter) is Ladder:
            m = letter.mode
            if letter.create:
                exps[m] += 1
            else:
                n = exps[m]
                if n == 0:
                    return None
                factor *= n
                exps[m] = n - 1
        else:
            factor *= letter.value(tuple(exps))
    return factor, tuple(exps)


def _apply_word(word, coef, vec, out):
    for mono, c in vec.items():
        hit = _act(word, mono)
        if hit is None:
            continue
        factor, image = hit
        out[image] = out.get(image, ZERO) + c * coef * factor


def _word_adjoint(word):
    return tuple(l.adjoint() if isinstance(l, Ladder) else l for l in reversed(word))


class LinearOperator:
    __slots__ = ('terms', 'name', '_shifts')

    def __init__(self, terms=(), name=None):
        self.terms = tuple((Scalar.of(c), tuple(f)) for c, f in terms if not Scalar.of(c).is_zero)
        self.name = name
        self._shifts = None

    @classmethod
    def word(cls, letters, coefficient=ONE, name=None):
        return cls([(coefficient, (tuple(letters),))], name=name)

    @classmethod
    def identity(cls, coefficient=ONE):
        return cls.word((), coefficient)

    @classmethod
    def zero(cls):
        return cls()

    @property
    def is_flat(self):
        return all(len(f) == 1 and isinstance(f[0], tuple) for _, f in self.terms)

    def named(self, name):
        op = LinearOperator.__new__(LinearOperator)
        op.terms = self.terms
        op.name = name
        op._shifts = self._shifts
        return op

    def __add__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return LinearOperator(self.terms + other.terms)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        if isinstance(factor, LinearOperator):
            return NotImplemented
        factor = Scalar.of(factor)
        return LinearOperator([(c * factor, f) for c, f in self.terms])

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Composition self * other (other acts first)."""
        if not isinstance(other, LinearOperator):
            return NotImplemented
        if self.is_flat and other.is_flat and len(self.terms) * len(other.terms) <= _FLATTEN_LIMIT:
            return LinearOperator([(c1 * c2, (f1[0] + f2[0],))
                                   for c1, f1 in self.terms for c2, f2 in other.terms])
        return LinearOperator([(ONE, (self, other))])

    def adjoint(self):
        terms = []
        for coef, factors in self.terms:
            adj = tuple(_word_adjoint(f) if isinstance(f, tuple) else f.adjoint() for f in reversed(factors))
            terms.append((coef.conjugate(), adj))
        return LinearOperator(terms, name=f'({self.name})^+' if self.name else None)

    @property
    def shifts(self):
        """Set of family-count shifts (dNa, dNb, dNc, dNd) produced by the individual words."""
        if self._shifts is None:
            found = set()
            for _, factors in self.terms:
                options = [{_word_shift(f)} if isinstance(f, tuple) else f.shifts for f in factors]
                for combo in product(*options):
                    found.add(tuple(map(sum, zip((0, 0, 0, 0), *combo))))
            self._shifts = frozenset(found)
        return self._shifts

    @property
    def uniform_shift(self):
        if len(self.shifts) != 1:
            raise SectorShiftError(f'operator {self.name or ""} shifts counts in {len(self.shifts)} ways',
                                   sorted(self.shifts))
        return next(iter(self.shifts))

    @property
    def max_quanta_shift(self):
        return max((abs(sum(s)) for s in self.shifts), default=0)

    def apply(self, vec):
        if vec.is_zero:
            return vec
        out = {}
        for coef, factors in self.terms:
            if len(factors) == 1 and isinstance(factors[0], tuple):
                _apply_word(factors[0], coef, vec, out)
                continue
            state = vec
            for f in reversed(factors):
                if isinstance(f, tuple):
                    partial = {}
                    _apply_word(f, ONE, state, partial)
                    state = StateVector(partial)
                else:
                    state = f.apply(state)
                if state.is_zero:
                    break
            for mono, c in state.items():
                out[mono] = out.get(mono, ZERO) + c * coef
        return StateVector(out)

    def __call__(self, vec):
        return self.apply(vec)

    def expand(self):
        """Flatten into a list of (coefficient, word) with identical words merged, in first-seen order."""
        merged = {}
        for coef, factors in self.terms:
            pieces = [[(ONE, f)] if isinstance(f, tuple) else f.expand() for f in factors]
            for combo in product(*pieces):
                c = coef
                word = ()
                for pc, pw in combo:
                    c = c * pc
                    word = word + pw
                merged[word] = merged.get(word, ZERO) + c
        return [(c, w) for w, c in merged.items() if not c.is_zero]

    def collect(self, name=None):
        """Flat copy with identical words merged."""
        return LinearOperator([(c, (w,)) for c, w in self.expand()], name=name or self.name)

    def __repr__(self):
        label = self.name or f'{len(self.terms)} terms'
        return f'<LinearOperator {label}>'

    def to_dict(self):
        return {
            'name': self.name,
            'terms': [[str(c), ' '.join(str(l) for l in w)] for c, w in self.expand()],
        }
