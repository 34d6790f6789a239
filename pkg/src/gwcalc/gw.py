"""
Two-pointed genus-0 GW invariants <O_{h^a} O_{h^b}>_{0,d} of a degree-k
hypersurface in P^{N-1}, d = 1, 2.

Each invariant can be computed three independent ways:

``formula``
    the mirror formula, assembled from quasimap w-invariants (and, for
    d = 2, the three-point degree-1 correction);
``expanded``
    the closed sum of Euler coefficients and truncated binomials;
``stablemap``
    the stable-map integral expanded term by term and evaluated with the
    closed intersection numbers of the stable-map Chow rings.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .kernel import binomial
from .polyring import expand_euler_product
from .quasimap import three_point_deg1, w_invariant
from .stablemap import integral_d1_closed, integral_d2_closed

__all__ = ["GWQuery", "GWResult", "gw_deg1", "gw_deg2", "gw", "METHODS"]

METHODS = ("formula", "expanded", "stablemap")


@dataclass(frozen=True)
class GWQuery:
    N: int
    k: int
    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.N < 3:
            raise ValueError(f"N must be >= 3, got {self.N}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.d not in (1, 2):
            raise ValueError(f"d must be 1 or 2, got {self.d}")
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be non-negative")

    @property
    def expected_sum(self):
        if self.d == 1:
            return 2 * self.N - self.k - 3
        return 3 * self.N - 2 * self.k - 3

    @property
    def is_valid(self):
        return self.a + self.b == self.expected_sum


@dataclass
class GWResult:
    query: GWQuery
    value: Fraction
    paths: dict = field(default_factory=dict)
    consistent: bool = True
    warning: str = ""


def _deg1_formula(q):
    return (w_invariant(q.N, q.k, 1, q.a, q.b)
            - w_invariant(q.N, q.k, 1, q.a + q.b, 0))


def _deg1_expanded(q):
    ell = expand_euler_product(q.k)
    return Fraction(ell(q.N - q.a - 2) - ell(q.k - q.N + 1))


def _deg1_stablemap(q):
    # h0^a h1^b e^k(h0, h1+T) = sum_i ell_i h0^(a+i+1) h1^b (h1+T)^(k-i)
    n = q.N - 1
    ell = expand_euler_product(q.k).ell
    return Fraction(sum(c * integral_d1_closed(n, q.a + i + 1, q.b, q.k - i)
                        for i, c in enumerate(ell)))


def _deg2_formula(q):
    N, k, a, b = q.N, q.k, q.a, q.b
    return (w_invariant(N, k, 2, a, b) - w_invariant(N, k, 2, a + b, 0)
            - Fraction(1, k) * three_point_deg1(N, k, a, b)
            * w_invariant(N, k, 1, a + b - N + k, 0))


def _deg2_expanded(q):
    N, k, a, b = q.N, q.k, q.a, q.b
    ell = expand_euler_product(k)
    total = Fraction(0)
    for i in range(k):
        for j in range(k):
            p = i + j - N + 1
            diff = binomial(p, N - a - k + i - 1) - binomial(p, N - k + j - 1)
            if diff:
                total += Fraction(ell(i) * ell(j) * diff) / Fraction(2) ** (i + j - N + 2)
    corr = sum(ell(i + a + k - N + 1) - ell(i + k - N + 1) for i in range(b))
    return (total - ell(k - N + 1) * corr) / k


def _deg2_stablemap(q, jobs=1):
    # (h0^a - g1^a) h2^b e^k(g0, g1) e^k(g1, g2) / (k g1), expanded
    n = q.N - 1
    k, a, b = q.k, q.a, q.b
    ell = expand_euler_product(k).ell

    def row(i):
        out = Fraction(0)
        for j, lj in enumerate(ell):
            first = integral_d2_closed(n, a + k - i, i + j + 1, k - j, b)
            second = integral_d2_closed(n, k - i, a + i + j + 1, k - j, b)
            out += ell[i] * lj * (first - second)
        return out

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(row, range(k)))
    else:
        rows = [row(i) for i in range(k)]
    return sum(rows, Fraction(0)) / k


_PATHS = {
    1: {"formula": _deg1_formula, "expanded": _deg1_expanded, "stablemap": _deg1_stablemap},
    2: {"formula": _deg2_formula, "expanded": _deg2_expanded, "stablemap": _deg2_stablemap},
}


def _evaluate(q, method, jobs=1):
    if method == "all":
        methods = METHODS
    elif method in METHODS:
        methods = (method,)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not q.is_valid:
        return GWResult(q, Fraction(0), {m: Fraction(0) for m in methods}, True,
                        f"degree mismatch: a+b = {q.a + q.b}, expected {q.expected_sum}")
    paths = {}
    for m in methods:
        fn = _PATHS[q.d][m]
        paths[m] = fn(q, jobs) if fn is _deg2_stablemap else fn(q)
    values = set(paths.values())
    value = paths["expanded"] if "expanded" in paths else next(iter(paths.values()))
    return GWResult(q, value, paths, len(values) == 1)


def gw_deg1(q, method="all"):
    if q.d != 1:
        raise ValueError("gw_deg1 needs d = 1")
    return _evaluate(q, method)


def gw_deg2(q, method="all", jobs=1):
    if q.d != 2:
        raise ValueError("gw_deg2 needs d = 2")
    if 1 + q.k - q.N < 0:
        raise ValueError(f"d = 2 needs k >= N - 1 (insertion h^(1+k-N)), got N={q.N}, k={q.k}")
    return _evaluate(q, method, jobs)


def gw(N, k, d, a, b, method="all", jobs=1):
    q = GWQuery(N, k, d, a, b)
    return gw_deg1(q, method) if d == 1 else gw_deg2(q, method, jobs)
