"""
Intersection numbers on the quasimap space with Chow ring
Q[H_0..H_d] / (H_0^N, H_k^N (H_{k-1} - 2H_k + H_{k+1}), H_d^N).

Monomials are evaluated by a memoized rewrite on exponent vectors: an
interior exponent above N is lowered with
H_j^{N+1} = (H_j^N H_{j-1} + H_j^N H_{j+1}) / 2, and the boundary relations
kill anything with a_0 >= N or a_d >= N.  This behaves like chip firing on a
path with absorbing ends; each firing moves one chip left or right with
weight 1/2.
"""
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .kernel import binomial, rational_row_reduce
from .polyring import expand_euler_product, power_difference_quotient
from .quotient import GradedPresentation, IntegralFunctional
from .toric import chow_presentation, h_ring

__all__ = [
    "QuasimapRing",
    "qm_intersection",
    "qm_intersection_closed_d2",
    "w_invariant",
    "three_point_deg1",
    "three_point_deg1_paths",
    "rewrite_cache_info",
    "PathDisagreement",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class QuasimapRing:
    N: int
    d: int

    @property
    def top_degree(self):
        return self.N * (self.d + 1) - 2

    @property
    def volume_exponents(self):
        return (self.N - 1,) + (self.N,) * (self.d - 1) + (self.N - 1,)

    @cached_property
    def presentation(self):
        rep = chow_presentation(self.N, self.d)
        return GradedPresentation(rep.ring, rep.relations, top_degree=self.top_degree,
                                  name=f"quasimaps N={self.N}, d={self.d}")

    @cached_property
    def functional(self):
        ring = self.presentation.ring
        vol = self.d * ring.monomial(self.volume_exponents)
        return IntegralFunctional(self.presentation, vol, 1)

    def integrate(self, exps):
        return qm_intersection(self.N, self.d, exps)


def _successors(N, d, exps, highest_first):
    """The two monomials one firing step produces, or None if ``exps`` is terminal."""
    if exps[0] >= N or exps[d] >= N:
        return None
    interior = range(d - 1, 0, -1) if highest_first else range(1, d)
    for j in interior:
        if exps[j] >= N + 1:
            left = list(exps)
            left[j] -= 1
            right = list(left)
            left[j - 1] += 1
            right[j + 1] += 1
            return tuple(left), tuple(right)
    return None


def _terminal_value(N, d, exps):
    if exps[0] >= N or exps[d] >= N:
        return Fraction(0)
    if exps == (N - 1,) + (N,) * (d - 1) + (N - 1,):
        return Fraction(1, d)
    # fully reduced and below the volume monomial somewhere: wrong degree
    return Fraction(0)


class _Rewriter:
    """
    Memoized values of the firing rewrite for one (N, d, order).

    For d >= 3 two adjacent interior vertices can hand a chip back and forth,
    so the rewrite graph has cycles and the value of a state is the solution
    of a linear system rather than a plain recursion.  States are processed
    by strongly connected component (iterative Tarjan); each component is
    small and is solved exactly once its successors are known.
    """

    def __init__(self, N, d, highest_first):
        self.N, self.d, self.highest_first = N, d, highest_first
        self.values = {}
        self.lock = threading.Lock()

    def succ(self, exps):
        return _successors(self.N, self.d, exps, self.highest_first)

    def value(self, start):
        with self.lock:
            if start not in self.values:
                self._evaluate(start)
            return self.values[start]

    def _evaluate(self, start):
        values = self.values
        index, low, on_stack, stack = {}, {}, set(), []
        counter = 0
        work = [(start, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            nxt = self.succ(v) or ()
            recurse = False
            while i < len(nxt):
                w = nxt[i]
                i += 1
                if w in values:
                    continue
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                self._solve(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    def _solve(self, comp):
        values = self.values
        if len(comp) == 1:
            s = comp[0]
            nxt = self.succ(s)
            if nxt is None:
                values[s] = _terminal_value(self.N, self.d, s)
                return
            if s not in nxt:
                values[s] = HALF * (values[nxt[0]] + values[nxt[1]])
                return
        # x_s - 1/2 sum_{t in comp} x_t = 1/2 sum_{t outside} value(t)
        pos = {s: i for i, s in enumerate(comp)}
        n = len(comp)
        rows = []
        for s in comp:
            row = [Fraction(0)] * (n + 1)
            row[pos[s]] += 1
            for t in self.succ(s):
                if t in pos:
                    row[pos[t]] -= HALF
                else:
                    row[n] += HALF * values[t]
            rows.append(row)
        rref, rank, _, pivots = rational_row_reduce(rows, n)
        if rank != n or pivots != list(range(n)):
            raise ArithmeticError("singular firing system; the rewrite does not terminate")
        for s, row in zip(comp, rref):
            values[s] = row[n]


_REWRITERS = {}
_REWRITERS_LOCK = threading.Lock()


def _rewriter(N, d, highest_first):
    key = (N, d, highest_first)
    with _REWRITERS_LOCK:
        if key not in _REWRITERS:
            _REWRITERS[key] = _Rewriter(N, d, highest_first)
        return _REWRITERS[key]


def qm_intersection(N, d, exps, order="lowest"):
    """Integral of H_0^{a_0} ... H_d^{a_d}; 0 off the top degree."""
    exps = tuple(int(a) for a in exps)
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    if len(exps) != d + 1:
        raise ValueError(f"need {d + 1} exponents, got {len(exps)}")
    if any(a < 0 for a in exps):
        raise ValueError("exponents must be non-negative")
    if order not in ("lowest", "highest"):
        raise ValueError("order must be 'lowest' or 'highest'")
    if sum(exps) != N * (d + 1) - 2:
        return Fraction(0)
    return _rewriter(N, d, order == "highest").value(exps)


def rewrite_cache_info():
    """Number of memoized states per (N, d, order)."""
    with _REWRITERS_LOCK:
        return {k: len(r.values) for k, r in sorted(_REWRITERS.items())}


def qm_intersection_closed_d2(N, alpha, beta, gamma):
    if (alpha + beta + gamma == 3 * N - 2 and N <= beta <= 3 * N - 2
            and 0 <= alpha <= N - 1 and 0 <= gamma <= N - 1):
        return Fraction(binomial(beta - N, N - alpha - 1), 2 ** (beta - N + 1))
    return Fraction(0)


def _integrand_terms(k, d, a, b):
    """
    Monomials of H_0^a H_d^b prod_i e^k(H_i, H_{i+1}) / prod_j (k H_j).

    e^k(H_i, H_{i+1}) = sum_m ell_m H_i^{k-m} H_{i+1}^{m+1}; each interior
    H_j takes its cancelled factor from the e^k(H_{j-1}, H_j) term, which
    carries H_j^{m+1} with m+1 >= 1.
    """
    ell = expand_euler_product(k).ell
    scale = Fraction(1, k ** (d - 1))
    terms = {}
    for ms in itertools.product(range(k), repeat=d):
        exps = [0] * (d + 1)
        exps[0] += a
        exps[d] += b
        coeff = scale
        for i, m in enumerate(ms):
            coeff *= ell[m]
            exps[i] += k - m
            exps[i + 1] += m + 1
        for j in range(1, d):
            exps[j] -= 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return terms


def w_invariant(N, k, d, a, b):
    if k < 1 or d < 1 or a < 0 or b < 0:
        raise ValueError("need k >= 1, d >= 1, a, b >= 0")
    total = Fraction(0)
    for exps, c in _integrand_terms(k, d, a, b).items():
        if c:
            total += c * qm_intersection(N, d, exps)
    return total


def three_point_deg1_paths(N, k, a, b):
    """
    Three-point degree-1 invariant <h^a h^b h^{1+k-N}> two ways:
    ``integral`` integrates the quasimap integrand on P^{N-1} x P^{N-1},
    ``ell_sum`` is the closed sum of Euler coefficients.
    """
    if 1 + k - N < 0:
        raise ValueError(f"insertion exponent 1+k-N = {1 + k - N} is negative")
    if a < 0 or b < 0:
        raise ValueError("a, b must be non-negative")
    ell = expand_euler_product(k)
    if a + b + (1 + k - N) == 2 * N - k - 2:
        closed = Fraction(sum(ell(i + a + k - N + 1) - ell(i + k - N + 1) for i in range(b)))
    else:
        # unbalanced degrees: the invariant vanishes, the closed sum does not apply
        closed = Fraction(0)
    ring = h_ring(1)
    H0, H1 = ring.gens()
    integrand = ((H1 - H0) * (sum((c * H0 ** (i + 1) * H1 ** (k - i)
                                   for i, c in enumerate(ell.ell)), ring.zero()))
                 * H0 ** a * power_difference_quotient(H0, H1, b - 1)
                 * power_difference_quotient(H0, H1, k - N))
    integral = Fraction(0)
    for exps, c in integrand.terms.items():
        integral += c * qm_intersection(N, 1, exps)
    return {"integral": integral, "ell_sum": closed}


class PathDisagreement(AssertionError):
    pass


def three_point_deg1(N, k, a, b):
    paths = three_point_deg1_paths(N, k, a, b)
    if paths["integral"] != paths["ell_sum"]:
        raise PathDisagreement(f"three-point invariant paths disagree: {paths}")
    return paths["integral"]
