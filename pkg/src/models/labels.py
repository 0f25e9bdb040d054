from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class IrrepLabel:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f'irrep labels must be non-negative, got ({self.p}, {self.q})')

    @property
    def dimension(self):
        return (self.p + 1) * (self.q + 1) * (self.p + self.q + 2) // 2

    @property
    def triality(self):
        return (self.p - self.q) % 3

    def conjugate(self):
        return IrrepLabel(self.q, self.p)

    def highest_weight(self):
        # highest with respect to T+ = J1 + iJ2 and U+ = J6 + iJ7
        return Weight(self.p, self.p + 2 * self.q)

    def __repr__(self):
        return f'<IrrepLabel ({self.p},{self.q})>'

    def to_dict(self):
        return {'p': self.p, 'q': self.q}


@dataclass(frozen=True, order=True)
class Weight:
    two_i3: int
    three_y: int

    @classmethod
    def from_dynkin(cls, a, b):
        return cls(a, a + 2 * b)

    def dynkin(self):
        """Dynkin labels (a, b) of this weight."""
        a = self.two_i3
        twice_b = self.three_y - self.two_i3
        if twice_b % 2:
            raise ValueError(f'{self} is not in the SU(3) weight lattice')
        return a, twice_b // 2

    def __add__(self, other):
        return Weight(self.two_i3 + other.two_i3, self.three_y + other.three_y)

    def __neg__(self):
        return Weight(-self.two_i3, -self.three_y)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return f'<Weight 2I3={self.two_i3} 3Y={self.three_y}>'

    def to_dict(self):
        return {'twoI3': self.two_i3, 'threeY': self.three_y}


@dataclass(frozen=True)
class WeightSystem:
    irrep: IrrepLabel
    multiplicities: dict = field(compare=False)

    @property
    def dimension(self):
        return sum(self.multiplicities.values())

    def __repr__(self):
        return f'<WeightSystem {self.irrep} weights={len(self.multiplicities)}>'

    def to_dict(self):
        return {
            'irrep': self.irrep.to_dict(),
            'weights': [[w.two_i3, w.three_y, m] for w, m in sorted(self.multiplicities.items())],
        }
