from fractions import Fraction

# Truncations for the closure and invariance suites
DEFAULT_NMAX = 6
DEFAULT_MARGIN = 4

# Casimir commutation: C2 and C3 both shift quanta by at most 4, partners by 2
CASIMIR_NMAX = 8
CASIMIR_MARGIN = 6

NMAX_CEILING = 10

DEFAULT_BATTERY_BOUND = 2

DEFAULT_LAMBDAS = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

# Decimal digits for non-rational eigenvalue factors
NUMERIC_DIGITS = 50
