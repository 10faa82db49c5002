import logging
from dataclasses import dataclass, field

import sympy

from permtab.errors import BoundsError
from permtab.harness.distribution import DistributionTable

logger = logging.getLogger(__name__)

x, y = sympy.symbols("x y")


@dataclass
class BivariatePolynomial:
    """Integer polynomial in x and y keyed by (x-degree, y-degree); no zero coefficients stored."""
    coefficients: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {
            (int(i), int(j)): int(c) for (i, j), c in sorted(self.coefficients.items()) if c != 0
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def to_sympy(self) -> sympy.Poly:
        expr = sum((c * x**i * y**j for (i, j), c in self.coefficients.items()), sympy.Integer(0))
        return sympy.Poly(expr, x, y, domain="ZZ")

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "BivariatePolynomial":
        return cls({(i, j): int(c) for (i, j), c in poly.as_dict().items()})

    @classmethod
    def from_distribution(cls, table: DistributionTable) -> "BivariatePolynomial":
        """Sum of x^a y^b over a two-statistic table; offsets belong in the statistic terms."""
        if len(table.stat_names) != 2:
            raise ValueError(f"need exactly two statistics, got {table.stat_names}")
        coefficients: dict[tuple[int, int], int] = {}
        for (a, b), count in table.counts.items():
            coefficients[(a, b)] = coefficients.get((a, b), 0) + count
        return cls(coefficients)


def rising_factorial(n: int) -> BivariatePolynomial:
    """(x+y)(x+y+1)...(x+y+n-2); the empty product for n = 1."""
    if n < 1:
        raise BoundsError(f"rising_factorial needs n >= 1, got {n}")
    poly = sympy.Poly(sympy.rf(x + y, n - 1), x, y, domain="ZZ")
    return BivariatePolynomial.from_sympy(poly)
