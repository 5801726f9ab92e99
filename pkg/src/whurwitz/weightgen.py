"""Weight generating functions G(z) = 1 + sum G_i z^i.

A :class:`WeightGenerator` is a preset name, its exact rational parameters
and a ``dualized`` flag; the dual of G is 1/G(-z).  Every quantum preset is
expanded through a closed-form coefficient, never by truncating an
infinite product.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import ParameterError
from .partitions import contents
from .series import TruncatedSeries

PRESETS = ("classical", "exp", "E", "Ek", "H", "Eprime", "Eq", "Hq",
           "macdonald", "hl", "jack")


@dataclass(frozen=True)
class WeightGenerator:
    preset: str
    params: tuple = ()
    dualized: bool = False

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ParameterError(f"unknown preset {self.preset!r}")

    def dual(self):
        return WeightGenerator(self.preset, self.params, not self.dualized)

    @property
    def name(self):
        return ("~" if self.dualized else "") + format_preset(self)


def _fracs(values):
    return tuple(Fraction(v) for v in values)


def classical(c):
    return WeightGenerator("classical", (_fracs(c),))


def exp():
    return WeightGenerator("exp")


def E():
    return WeightGenerator("E")


def Ek(k):
    if int(k) < 1:
        raise ParameterError("Ek needs k >= 1")
    return WeightGenerator("Ek", (int(k),))


def H():
    return WeightGenerator("H")


def eprime(q):
    return WeightGenerator("Eprime", (Fraction(q),))


def eq(q):
    return WeightGenerator("Eq", (Fraction(q),))


def hq(q):
    return WeightGenerator("Hq", (Fraction(q),))


def macdonald(q, t, c):
    return WeightGenerator("macdonald", (Fraction(q), Fraction(t), _fracs(c)))


def hall_littlewood(t, c):
    return WeightGenerator("hl", (Fraction(t), _fracs(c)))


def jack(alpha, c):
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ParameterError("Jack parameter must be nonzero")
    return WeightGenerator("jack", (alpha, _fracs(c)))


# -- coefficients --------------------------------------------------------------


def _poch(a, q, j):
    """(a; q)_j = prod_{k<j} (1 - a q^k)."""
    out = Fraction(1)
    for k in range(j):
        out *= 1 - a * q**k
    return out


def _q_denominator(q, j):
    den = _poch(q, q, j)
    if den == 0:
        raise ParameterError(f"(q;q)_{j} vanishes at q={q}")
    return den


def _elementary_coeffs(c, degree):
    out = [Fraction(1)] + [Fraction(0)] * degree
    for ci in c:
        for i in range(degree, 0, -1):
            out[i] += ci * out[i - 1]
    return out


def _product(factors, degree):
    out = TruncatedSeries.one(degree)
    for f in factors:
        out = out * f
    return out


def _base_coeffs(G, D):
    p = G.params
    if G.preset == "classical":
        return TruncatedSeries(_elementary_coeffs(p[0], D), D)
    if G.preset == "exp":
        return TruncatedSeries([Fraction(1, factorial(i)) for i in range(D + 1)], D)
    if G.preset == "E":
        return TruncatedSeries([1, 1], D)
    if G.preset == "Ek":
        return TruncatedSeries([comb(p[0], i) for i in range(D + 1)], D)
    if G.preset == "H":
        return TruncatedSeries([1] * (D + 1), D)
    if G.preset in ("Eprime", "Eq", "Hq"):
        q = p[0]
        shift = {"Eprime": 1, "Eq": -1, "Hq": None}[G.preset]
        out = []
        for i in range(D + 1):
            num = Fraction(1) if shift is None else q ** (i * (i + shift) // 2)
            out.append(num / _q_denominator(q, i))
        return TruncatedSeries(out, D)
    if G.preset in ("macdonald", "hl"):
        q, t, c = (p[0], p[1], p[2]) if G.preset == "macdonald" else (Fraction(0), p[0], p[1])
        # q-binomial theorem: (tx;q)_inf / (x;q)_inf = sum (t;q)_j/(q;q)_j x^j
        single = TruncatedSeries([_poch(t, q, j) / _q_denominator(q, j) for j in range(D + 1)], D)
        return _product((single.rescale(ci) for ci in c), D)
    if G.preset == "jack":
        alpha, c = p
        a = 1 / alpha
        single, coeff = [], Fraction(1)
        for j in range(D + 1):
            single.append(coeff)
            coeff = coeff * (a + j) / (j + 1)
        single = TruncatedSeries(single, D)
        return _product((single.rescale(ci) for ci in c), D)
    raise ParameterError(f"unknown preset {G.preset!r}")


@lru_cache(maxsize=None)
def taylor_coeffs(G, D):
    """Taylor coefficients G_0..G_D of the (possibly dualized) generator."""
    base = _base_coeffs(G, D)
    return base.rescale(-1).reciprocal() if G.dualized else base


def dual(G, D):
    """Series of 1/G(-z) truncated at degree D."""
    return taylor_coeffs(G.dual(), D)


@lru_cache(maxsize=None)
def content_product_series(G, lam, D):
    """r_lam^{G(z)} = prod over cells of G(z * content), modulo z^(D+1)."""
    g = taylor_coeffs(G, D)
    out = TruncatedSeries.one(D)
    for c in contents(lam):
        if c:
            out = out * g.rescale(c)
    return out


# -- preset strings ------------------------------------------------------------


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"malformed rational {text!r}") from exc


def _parse_list(text):
    return tuple(_parse_rational(x) for x in text.split(",") if x.strip())


def parse_preset(text):
    """Parse CLI preset names such as ``Eprime:1/3`` or ``macdonald:1/2:1/3:1,2``.

    A leading ``~`` selects the dual generator.
    """
    text = text.strip()
    dualized = text.startswith("~")
    if dualized:
        text = text[1:]
    name, _, rest = text.partition(":")
    args = rest.split(":") if rest else []
    try:
        if name == "exp":
            G = exp()
        elif name == "E":
            G = E()
        elif name == "H":
            G = H()
        elif name == "Ek":
            G = Ek(int(args[0]))
        elif name in ("Eprime", "Eq", "Hq"):
            G = {"Eprime": eprime, "Eq": eq, "Hq": hq}[name](_parse_rational(args[0]))
        elif name == "macdonald":
            G = macdonald(_parse_rational(args[0]), _parse_rational(args[1]), _parse_list(args[2]))
        elif name == "hl":
            G = hall_littlewood(_parse_rational(args[0]), _parse_list(args[1]))
        elif name == "jack":
            G = jack(_parse_rational(args[0]), _parse_list(args[1]))
        elif name == "classical":
            G = classical(_parse_list(args[0]))
        else:
            raise ParameterError(f"unknown preset {name!r}")
    except IndexError as exc:
        raise ParameterError(f"preset {text!r} is missing parameters") from exc
    except ValueError as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ParameterError(f"bad preset parameters in {text!r}") from exc
    return G.dual() if dualized else G


def format_preset(G):
    prefix = "~" if G.dualized else ""
    return prefix + _format_base(G)


def _format_base(G):
    p = G.params
    if G.preset in ("exp", "E", "H"):
        return G.preset
    if G.preset == "Ek":
        return f"Ek:{p[0]}"
    if G.preset in ("Eprime", "Eq", "Hq"):
        return f"{G.preset}:{_fmt(p[0])}"
    if G.preset == "classical":
        return "classical:" + ",".join(_fmt(c) for c in p[0])
    if G.preset == "macdonald":
        return f"macdonald:{_fmt(p[0])}:{_fmt(p[1])}:" + ",".join(_fmt(c) for c in p[2])
    if G.preset == "hl":
        return f"hl:{_fmt(p[0])}:" + ",".join(_fmt(c) for c in p[1])
    return f"jack:{_fmt(p[0])}:" + ",".join(_fmt(c) for c in p[1])
