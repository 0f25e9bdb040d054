from dataclasses import dataclass, field
from typing import Optional

from src.errors import TruncationError
from src.models.labels import IrrepLabel
from src.models.scalar import Scalar


@dataclass
class Eigenpair:
    value: Optional[Scalar]
    multiplicity: int
    eigenvectors: list = field(default_factory=list, repr=False)
    exact: bool = True
    approximation: Optional[str] = None
    digits: Optional[int] = None
    error_bound: Optional[str] = None

    @property
    def label(self):
        return str(self.value) if self.exact else self.approximation

    def to_dict(self):
        data = {
            'value': self.label,
            'multiplicity': self.multiplicity,
            'exact': self.exact,
        }
        if not self.exact:
            data['digits'] = self.digits
            data['error_bound'] = self.error_bound
        return data


@dataclass(frozen=True)
class Truncation:
    nmax: int
    interior_margin: int

    def __post_init__(self):
        if self.nmax < 0 or self.interior_margin < 0:
            raise ValueError(f'truncation parameters must be non-negative, got {self}')

    @property
    def interior_total(self):
        """Largest total quanta of an interior state; negative means no interior."""
        return self.nmax - self.interior_margin

    def require(self, shift):
        if shift > self.interior_margin:
            raise TruncationError(shift, self.interior_margin)

    def doubled(self):
        """Same margin ratio at twice the size, so the interior doubles too."""
        return Truncation(2 * self.nmax, 2 * self.interior_margin)

    def to_dict(self):
        return {'nmax': self.nmax, 'margin': self.interior_margin}


@dataclass
class VerificationReport:
    identity: str
    truncation: Optional[Truncation]
    states_checked: int = 0
    passed: bool = True
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def status(self):
        return 'exact-pass' if self.passed else 'fail'

    def fail(self, state, lhs, rhs, **context):
        self.passed = False
        self.counterexample = {
            'state': str(state),
            'lhs': str(lhs),
            'rhs': str(rhs),
            **context,
        }

    def __repr__(self):
        return f'<VerificationReport {self.identity} {self.status} states={self.states_checked}>'

    def to_dict(self):
        data = {
            'identity': self.identity,
            'nmax': self.truncation.nmax if self.truncation else None,
            'states_checked': self.states_checked,
            'status': self.status,
        }
        if self.counterexample:
            data['counterexample'] = self.counterexample
        if self.details:
            data['details'] = self.details
        return data


@dataclass
class DecompositionTerm:
    irrep: IrrepLabel
    multiplicity: int
    eigenpairs: list = field(default_factory=list)
    highest_weight_vectors: list = field(default_factory=list, repr=False)

    @property
    def eigenvalue_labels(self):
        """One label per copy: each eigenvalue repeated by its multiplicity."""
        return [pair.label for pair in self.eigenpairs for _ in range(pair.multiplicity)]

    @property
    def exact(self):
        return all(pair.exact for pair in self.eigenpairs)

    @property
    def distinct(self):
        return all(pair.multiplicity == 1 for pair in self.eigenpairs)

    def resolved_vectors(self):
        """(eigenpair, coefficient list) for every exact eigenvector."""
        return [(pair, vec) for pair in self.eigenpairs for vec in pair.eigenvectors]

    def to_dict(self):
        data = {
            'p': self.irrep.p,
            'q': self.irrep.q,
            'multiplicity': self.multiplicity,
            'c4prime_eigenvalues': self.eigenvalue_labels,
            'exact': self.exact,
        }
        if not self.exact:
            # error_bound runs parallel to c4prime_eigenvalues; exact entries are '0'
            data['digits'] = max(pair.digits for pair in self.eigenpairs if not pair.exact)
            data['error_bound'] = [pair.error_bound if not pair.exact else '0'
                                   for pair in self.eigenpairs for _ in range(pair.multiplicity)]
        return data


@dataclass
class DecompositionReport:
    factors: tuple
    coefficients: tuple
    terms: list = field(default_factory=list)
    dimension_check: bool = False
    oracle_agreement: bool = False
    findings: list = field(default_factory=list)

    @property
    def consistent(self):
        return self.dimension_check and self.oracle_agreement

    @property
    def multiplicities(self):
        return {term.irrep: term.multiplicity for term in self.terms}

    def term(self, irrep):
        for term in self.terms:
            if term.irrep == irrep:
                return term
        return None

    def __repr__(self):
        first, second = self.factors
        return f'<DecompositionReport ({first.p},{first.q})x({second.p},{second.q}) terms={len(self.terms)}>'

    def to_dict(self):
        first, second = self.factors
        data = {
            'factors': [[first.p, first.q], [second.p, second.q]],
            'terms': [term.to_dict() for term in self.terms],
            'dimension_check': self.dimension_check,
            'oracle_agreement': self.oracle_agreement,
        }
        if self.findings:
            data['findings'] = list(self.findings)
        return data

    def csv_rows(self):
        first, second = self.factors
        header = ['p1', 'q1', 'p2', 'q2', 'p', 'q', 'multiplicity', 'c4prime_eigenvalues', 'exact']
        rows = [header]
        for term in self.terms:
            rows.append([first.p, first.q, second.p, second.q, term.irrep.p, term.irrep.q,
                         term.multiplicity, ' '.join(term.eigenvalue_labels), str(term.exact).lower()])
        return rows


CSCO_OPERATORS = ('Na', 'Nb', 'Nc', 'Nd', 'C2', 'C3', 'C4prime', 'I2', 'I3', 'Y')


@dataclass
class CSCOWitness:
    irrep: IrrepLabel
    copy: int
    values: dict
    commuting: bool

    def as_tuple(self):
        return tuple(self.values[name] for name in CSCO_OPERATORS)

    def __repr__(self):
        return f'<CSCOWitness {self.irrep} copy={self.copy}>'

    def to_dict(self):
        return {
            'p': self.irrep.p,
            'q': self.irrep.q,
            'copy': self.copy,
            'values': {name: str(self.values[name]) for name in CSCO_OPERATORS},
            'commuting': self.commuting,
        }
