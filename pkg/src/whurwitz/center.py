"""Elements of the center Z(C[S_n]) as coefficient maps over partitions."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import WeightMismatch
from .partitions import all_partitions

CYCLE_SUM = "C"
IDEMPOTENT = "F"


@dataclass(frozen=True)
class CenterElement:
    """A central element in the cycle-sum (``"C"``) or idempotent (``"F"``) basis.

    Zero coefficients are dropped, so equality is equality of elements.
    """

    n: int
    basis: str
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in (CYCLE_SUM, IDEMPOTENT):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, value in self.coeffs.items():
            if sum(lam) != self.n:
                raise WeightMismatch(f"{lam} is not a partition of {self.n}")
            value = Fraction(value)
            if value:
                clean[tuple(lam)] = value
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def unit(cls, n, lam, basis=CYCLE_SUM):
        return cls(n, basis, {tuple(lam): 1})

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), Fraction(0))

    def _check(self, other):
        if self.n != other.n or self.basis != other.basis:
            raise WeightMismatch("elements live in different spaces or bases")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for lam, v in other.coeffs.items():
            out[lam] = out.get(lam, 0) + v
        return CenterElement(self.n, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return CenterElement(self.n, self.basis, {k: c * v for k, v in self.coeffs.items()})

    def vector(self):
        """Dense coefficient list in canonical partition order."""
        return [self[lam] for lam in all_partitions(self.n)]
