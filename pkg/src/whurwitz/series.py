"""Truncated power series in one variable with exact rational coefficients."""

from fractions import Fraction


class TruncatedSeries:
    """A polynomial in z kept modulo z**(degree + 1)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs, degree):
        if degree < 0:
            raise ValueError("degree cap must be nonnegative")
        cs = [Fraction(c) for c in list(coeffs)[: degree + 1]]
        cs += [Fraction(0)] * (degree + 1 - len(cs))
        self.degree = degree
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, degree):
        return cls([c], degree)

    @classmethod
    def one(cls, degree):
        return cls([1], degree)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.degree else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.degree + 1

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, degree={self.degree})"

    def _cap(self, other):
        return min(self.degree, other.degree)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.degree)
        d = self._cap(other)
        return TruncatedSeries([self[i] + other[i] for i in range(d + 1)], d)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = Fraction(other)
            return TruncatedSeries([other * c for c in self.coeffs], self.degree)
        d = self._cap(other)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, d)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TruncatedSeries.one(self.degree)
        for _ in range(k):
            out = out * self
        return out

    def reciprocal(self):
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        out = [1 / a0]
        for k in range(1, self.degree + 1):
            s = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out.append(-s / a0)
        return TruncatedSeries(out, self.degree)

    def rescale(self, c):
        """Substitute z -> c z."""
        c = Fraction(c)
        return TruncatedSeries([a * c**i for i, a in enumerate(self.coeffs)], self.degree)

    def truncate(self, degree):
        return TruncatedSeries(self.coeffs, degree)

    def __call__(self, z):
        z = Fraction(z)
        return sum((a * z**i for i, a in enumerate(self.coeffs)), Fraction(0))
