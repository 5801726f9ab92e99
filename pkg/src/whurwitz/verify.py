"""Verification suites: the route-equality and reduction checks as reports.

Each suite is split into independent work items that may run in a process
pool; results are reassembled in submission order, so a report depends
only on its inputs and never on the pool width.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import weightgen as wg
from .characters import character
from .hurwitz import ROUTES, hurwitz_table, hybrid_F, macdonald_decompose, multispecies_F
from .partitions import all_partitions, contents, z_order
from .tau import schur_reexpansion, toda_block

CORE_PRESETS = ("exp", "E", "Ek:2", "Ek:3", "H", "Eprime:1/3", "classical:1,1/2")


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def compare_routes(preset, n, degree, routes=ROUTES):
    """Build one table per route and report the first disagreeing entry."""
    G = wg.parse_preset(preset)
    tables = {r: hurwitz_table(G, n, degree, r) for r in routes}
    ref = tables[routes[0]]
    for key, v in sorted(ref.values.items(), key=lambda kv: (kv[0][0], _order(kv[0][1]), _order(kv[0][2]))):
        for r in routes[1:]:
            w = tables[r].values[key]
            if w != v:
                d, mu, nu = key
                return {"check": "routes", "preset": preset, "n": n, "status": "fail",
                        "first_mismatch": {"preset": preset, "d": d, "mu": list(mu), "nu": list(nu),
                                           routes[0]: fmt(v), r: fmt(w)}}
    return {"check": "routes", "preset": preset, "n": n, "status": "pass",
            "routes": list(routes), "entries": len(ref.values)}


def _order(p):
    return all_partitions(sum(p)).index(p)


def check_tau(preset, n, degree):
    G = wg.parse_preset(preset)
    block = toda_block(G, n, degree)  # raises on disagreement with the Hurwitz table
    parts = all_partitions(n)
    for d in range(degree + 1):
        S = schur_reexpansion(block, d)
        for i, lam in enumerate(parts):
            for j in range(len(parts)):
                expected = block.schur_coeffs[lam][d] if i == j else 0
                if S[i, j] != expected:
                    return {"check": "tau", "preset": preset, "n": n, "status": "fail",
                            "first_mismatch": {"d": d, "row": list(lam), "col": list(parts[j])}}
    return {"check": "tau", "preset": preset, "n": n, "status": "pass"}


def check_quantum(n, degree, q):
    c = (Fraction(1), Fraction(1, 2))
    pairs = [
        (wg.macdonald(q, q, c), wg.classical(c).dual(), "macdonald(q,q,c)=~classical(c)"),
        (wg.hall_littlewood(Fraction(1, 5), c), wg.macdonald(0, Fraction(1, 5), c), "hl(t,c)=macdonald(0,t,c)"),
        (wg.jack(1, c), wg.classical(c).dual(), "jack(1,c)=~classical(c)"),
    ]
    for left, right, label in pairs:
        a, b = hurwitz_table(left, n, degree), hurwitz_table(right, n, degree)
        if a.values != b.values:
            return {"check": "quantum", "n": n, "q": fmt(q), "status": "fail", "identity": label}
    for mu in all_partitions(n):
        for nu in all_partitions(n):
            for d in range(degree + 1):
                macdonald_decompose(q, None, c, mu, nu, d)
    return {"check": "quantum", "n": n, "q": fmt(q), "status": "pass"}


def check_multispecies(n):
    E, H, ex = wg.E(), wg.H(), wg.exp()
    factors = [(E, 1), (H, 2), (ex, 1)]
    ref = multispecies_F(factors, n)
    for order in ([factors[1], factors[0], factors[2]], [factors[2], factors[1], factors[0]]):
        if (multispecies_F(order, n) != ref).any():
            return {"check": "multispecies", "n": n, "status": "fail"}
    return {"check": "multispecies", "n": n, "status": "pass"}


def hybrid_oracle(n, c, d):
    """[w^c z^d] of the character sum for r^Q = prod (1 + j w)/(1 - j z),
    expanded as a bivariate series cell by cell."""
    parts = all_partitions(n)
    coeff = {}
    for lam in parts:
        series = {(0, 0): Fraction(1)}
        for j in contents(lam):
            nxt = {}
            for (a, b), v in series.items():
                for da in (0, 1):
                    for db in range(d - b + 1):
                        if a + da > c:
                            continue
                        key = (a + da, b + db)
                        nxt[key] = nxt.get(key, 0) + v * j ** da * j ** db
            series = nxt
        coeff[lam] = series.get((c, d), Fraction(0))
    return {(mu, nu): sum((character(lam, mu) * character(lam, nu) * coeff[lam] for lam in parts),
                          Fraction(0)) / (z_order(mu) * z_order(nu))
            for mu in parts for nu in parts}


def check_hybrid(n, total=4):
    parts = all_partitions(n)
    for c in range(total + 1):
        for d in range(total + 1 - c):
            m = hybrid_F(c, d, n)
            ref = hybrid_oracle(n, c, d)
            for i, mu in enumerate(parts):
                for j, nu in enumerate(parts):
                    if m[i, j] != ref[(mu, nu)]:
                        return {"check": "hybrid", "n": n, "status": "fail", "c": c, "d": d,
                                "mu": list(mu), "nu": list(nu)}
    return {"check": "hybrid", "n": n, "status": "pass"}


def _run(item):
    kind, args = item
    return {"routes": compare_routes, "tau": check_tau,
            "quantum": check_quantum, "multispecies": check_multispecies,
            "hybrid": check_hybrid}[kind](*args)


def suite_items(suite, n, degree):
    items = []
    if suite in ("core", "all"):
        items += [("routes", (p, m, degree)) for p in CORE_PRESETS for m in range(1, n + 1)]
    if suite in ("tau", "all"):
        items += [("tau", (p, m, degree)) for p in CORE_PRESETS for m in range(1, n + 1)]
    if suite in ("quantum", "all"):
        items += [("quantum", (m, degree, q)) for q in (Fraction(1, 2), Fraction(1, 3))
                  for m in range(1, n + 1)]
    if suite in ("multispecies", "all"):
        items += [("multispecies", (m,)) for m in range(1, n + 1)]
        items += [("hybrid", (m,)) for m in range(1, n + 1)]
    if not items:
        raise ValueError(f"unknown suite {suite!r}")
    return items


def run_suite(suite="core", n=4, degree=3, jobs=1):
    items = suite_items(suite, n, degree)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run, items))
    else:
        results = [_run(item) for item in items]
    failed = [r for r in results if r["status"] != "pass"]
    report = {"suite": suite, "n": n, "degree": degree, "checks": results,
              "status": "fail" if failed else "pass"}
    if failed:
        report["first_failure"] = failed[0]
    return report
