from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.config import DEFAULT_LAMBDAS, NMAX_CEILING


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    labels: tuple = ()
    lambdas: tuple = DEFAULT_LAMBDAS
    nmax: Optional[int] = None
    margin: Optional[int] = None
    bound: Optional[int] = None
    json_path: Optional[str] = None
    csv_path: Optional[str] = None

    def __post_init__(self):
        if any(not isinstance(v, int) or v < 0 for v in self.labels):
            raise ValueError(f'irrep labels must be non-negative integers, got {self.labels}')
        if len(self.lambdas) != 4:
            raise ValueError(f'exactly four C4prime coefficients are supported, got {len(self.lambdas)}')
        object.__setattr__(self, 'lambdas', tuple(Fraction(v) for v in self.lambdas))
        if self.nmax is not None and not 0 <= self.nmax <= NMAX_CEILING:
            raise ValueError(f'--nmax must lie in 0..{NMAX_CEILING}, got {self.nmax}')
        if self.margin is not None and self.margin < 0:
            raise ValueError(f'--margin must be non-negative, got {self.margin}')
        if self.bound is not None and self.bound < 0:
            raise ValueError(f'--bound must be non-negative, got {self.bound}')

    @property
    def format(self):
        if self.json_path:
            return 'json'
        if self.csv_path:
            return 'csv'
        return 'text'

    def __repr__(self):
        return f'<CommandConfig {self.subcommand} {self.labels}>'

    def to_dict(self):
        return {
            'subcommand': self.subcommand,
            'labels': list(self.labels),
            'lambdas': [str(v) for v in self.lambdas],
            'nmax': self.nmax,
            'margin': self.margin,
            'bound': self.bound,
            'format': self.format,
        }
