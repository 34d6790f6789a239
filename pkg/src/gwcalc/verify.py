"""
Mechanical checks of the relations and intersection numbers used for the
stable-map formulas.

Identities are checked by ideal membership in the relevant presentation,
intersection numbers by the top-degree functional of the quotient engine.
"""
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .kernel import binomial
from .polyring import VariableSet, power_difference_quotient as pdq, substitute
from .quasimap import QuasimapRing
from .quotient import GradedPresentation, contains_in_ideal
from .stablemap import (
    UncoveredDomainError,
    build_presentation_d1,
    build_presentation_d2,
    d1_classes,
    d1_functional,
    d2_classes,
    d2_functional,
    integral_d1_closed,
    integral_d2_closed,
    key_transform,
)

__all__ = ["Claim", "VerificationReport", "LEMMAS", "verify_lemma", "verify_all"]


@dataclass
class Claim:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    lemma: str
    n: int
    claims: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.claims)

    def check(self, name, passed, detail=""):
        self.claims.append(Claim(name, bool(passed), detail))

    def to_dict(self):
        return {
            "lemma": self.lemma,
            "n": self.n,
            "passed": self.passed,
            "claims": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.claims],
        }


def _member(report, name, pres, p):
    report.check(name, contains_in_ideal(pres, p))


def _mp(n, report):
    c = d2_classes()
    pres = build_presentation_d2(n)
    h0, h1, h2 = c["h0"], c["h1"], c["h2"]
    _member(report, "h0^(n+1) = 0", pres, h0 ** (n + 1))
    _member(report, "h1^(n+1) (h0 - 2h1 + h2) = 0", pres, h1 ** (n + 1) * (h0 - 2 * h1 + h2))
    _member(report, "h2^(n+1) = 0", pres, h2 ** (n + 1))


def _rel14(n, report):
    c = d2_classes()
    pres = build_presentation_d2(n)
    h0, h1, h2, S0, S1, P1, P3 = (c[k] for k in ("h0", "h1", "h2", "S0", "S1", "P1", "P3"))
    _member(report, "P3 = S1 (h2 - h1)", pres, P3 - S1 * (h2 - h1))
    _member(report, "P1 (h2 - h0) = 0", pres, P1 * (h2 - h0))
    _member(report, "P1 (h1 - h0 + S0) = 0", pres, P1 * (h1 - h0 + S0))
    _member(report, "S0 (h1 - h0) = 0", pres, S0 * (h1 - h0))
    _member(report, "S0 (h1 - h2) = 0", pres, S0 * (h1 - h2))
    _member(report, "S1 (h1 - h0)(h1 - h2) = 0", pres, S1 * (h1 - h0) * (h1 - h2))


def _ggg(n, report):
    c = d2_classes()
    pres = build_presentation_d2(n)
    g0, g1, g2 = c["g0"], c["g1"], c["g2"]
    _member(report, "g0^(n+1) = 0", pres, g0 ** (n + 1))
    _member(report, "g1^(n+1) (g0 - 2g1 + g2) = 0", pres, g1 ** (n + 1) * (g0 - 2 * g1 + g2))
    mixed = (g1 - g0) * sum(((g0 ** i + g2 ** i) * g1 ** (n - i) for i in range(n + 1)),
                            g0.ring.zero())
    _member(report, "(g1 - g0) sum_i (g0^i + g2^i) g1^(n-i) = 0", pres, mixed)
    _member(report, "(g1 - g0) g2^(n+1) = 0", pres, (g1 - g0) * g2 ** (n + 1))


def _s1(n, report):
    c = d2_classes()
    f = d2_functional(n)
    S1, h0, h1, h2 = c["S1"], c["h0"], c["h1"], c["h2"]
    top = 3 * n + 1
    bad = []
    count = 0
    for a in range(1, n):
        for b, cc in itertools.product(range(top - a + 1), repeat=2):
            d = top - a - b - cc
            if d < 0:
                continue
            count += 1
            v = f(S1 ** a * h0 ** b * h1 ** cc * h2 ** d)
            if v != 0:
                bad.append(((a, b, cc, d), v))
    report.check(f"int S1^a h0^b h1^c h2^d = 0 for 0 < a < n ({count} cases)", not bad,
                 "; ".join(f"{k}: {v}" for k, v in bad[:5]))
    v = f(S1 ** n * h1 * h0 ** n * h2 ** n)
    report.check("int S1^n h1 h0^n h2^n = -1", v == -1, f"value {v}")


def _dq_expansion(n, report):
    ring = VariableSet(("h0", "h1", "T"))
    h0, h1, T = ring.gens()
    lhs = pdq(h1 + T, h0, n)
    report.check("(h1 - h0 + T) * quotient = (h1+T)^(n+1) - h0^(n+1)",
                 (h1 - h0 + T) * lhs == (h1 + T) ** (n + 1) - h0 ** (n + 1))
    report.check("sum_{i=j}^n C(i,j) = C(n+1, j+1) for 0 <= j <= n",
                 all(sum(binomial(i, j) for i in range(j, n + 1)) == binomial(n + 1, j + 1)
                     for j in range(n + 1)))
    rhs = (sum((h0 ** (n - i) * h1 ** i for i in range(n + 1)), ring.zero())
           + sum((binomial(n + 1, j + 1) * h0 ** (n - j) * T ** j for j in range(1, n + 1)),
                 ring.zero()))
    exceptional = GradedPresentation(ring, [T * (h1 - h0)], name="(T(h1 - h0))")
    report.check("expansion holds modulo T (h1 - h0)", contains_in_ideal(exceptional, lhs - rhs))
    # the same relation read off the degree-1 presentation through the key transform
    kt = key_transform(1)
    H, psi, Tv = build_presentation_d1(n).ring.gens()
    images = {"h0": H, "h1": H + psi, "T": Tv}
    report.check("key transform maps it to the fourth degree-1 relation",
                 substitute(lhs, images) == build_presentation_d1(n).relations[3])
    report.check("key transform round trip", all(
        kt.inverse(kt.forward(g)) == g for g in kt.target.gens()))


def _p2p3(n, report):
    c = d2_classes()
    pres = build_presentation_d2(n)
    _member(report, "P3 = S1 psi + S1 S2", pres, c["P3"] - c["S1"] * c["psi"] - c["S1"] * c["S2"])
    _member(report, "P2 = 0", pres, c["P2"])


def _lemma41(n, report):
    c = d1_classes()
    f = d1_functional(n)
    h0, h1, T = c["h0"], c["h1"], c["T"]
    bad = []
    count = 0
    for alpha in range(2 * n + 1):
        for beta in range(2 * n + 1 - alpha):
            gamma = 2 * n - alpha - beta
            count += 1
            engine = f(h0 ** alpha * h1 ** beta * (h1 + T) ** gamma)
            closed = integral_d1_closed(n, alpha, beta, gamma)
            if engine != closed:
                bad.append(((alpha, beta, gamma), closed, engine))
    report.check(f"closed table = engine on all {count} exponent triples", not bad,
                 "; ".join(f"{k}: closed {a}, engine {b}" for k, a, b in bad[:5]))


def _lemma55(n, report):
    c = d2_classes()
    f = d2_functional(n)
    g0, g1, g2, h2 = c["g0"], c["g1"], c["g2"], c["h2"]
    top = 3 * n + 1
    bad = []
    count = skipped = 0
    for alpha, beta, gamma in itertools.product(range(top + 1), repeat=3):
        delta = top - alpha - beta - gamma
        if delta < 0:
            continue
        try:
            closed = integral_d2_closed(n, alpha, beta, gamma, delta)
        except UncoveredDomainError:
            skipped += 1
            continue
        count += 1
        engine = f(g0 ** alpha * g1 ** beta * g2 ** gamma * h2 ** delta)
        if engine != closed:
            bad.append(((alpha, beta, gamma, delta), closed, engine))
    report.check(f"closed form = engine on {count} covered exponent vectors "
                 f"({skipped} uncovered skipped)", not bad,
                 "; ".join(f"{k}: closed {a}, engine {b}" for k, a, b in bad[:5]))


def _topdim(n, report):
    for label, pres in (("degree-1 stable maps", build_presentation_d1(n)),
                        ("degree-2 stable maps", build_presentation_d2(n))):
        dim = pres.degree_piece(pres.top_degree).dimension
        report.check(f"{label}: top piece has dimension 1", dim == 1, f"dimension {dim}")
    c = d2_classes()
    report.check("degree-2: int 2 h0^n h1^(n+1) h2^n = 1",
                 d2_functional(n)(2 * c["h0"] ** n * c["h1"] ** (n + 1) * c["h2"] ** n) == 1)
    for d in (1, 2):
        q = QuasimapRing(n + 1, d)
        dim = q.presentation.degree_piece(q.top_degree).dimension
        report.check(f"quasimaps N={n + 1}, d={d}: top piece has dimension 1", dim == 1,
                     f"dimension {dim}")


LEMMAS = {
    "mp": _mp,
    "rel14": _rel14,
    "ggg": _ggg,
    "s1": _s1,
    "dq-expansion": _dq_expansion,
    "p2p3": _p2p3,
    "lemma41": _lemma41,
    "lemma55": _lemma55,
    "topdim": _topdim,
}


def verify_lemma(lemma, n):
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma id {lemma!r}; known: {', '.join(LEMMAS)}")
    if n < 1:
        raise ValueError("n must be >= 1")
    report = VerificationReport(lemma, n)
    LEMMAS[lemma](n, report)
    return report


def verify_all(max_n, jobs=1):
    """
    Every lemma for 1 <= n <= max_n, plus the cheap degree-1 checks
    (``lemma41`` up to n = 3, ``dq-expansion`` up to n = 8) regardless.
    Reports come back in the same order whatever ``jobs`` is.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    tasks = [(lemma, n) for n in range(1, max_n + 1) for lemma in LEMMAS]
    tasks += [("lemma41", n) for n in range(max_n + 1, 4)]
    tasks += [("dq-expansion", n) for n in range(max_n + 1, 9)]
    if jobs <= 1:
        return [verify_lemma(*t) for t in tasks]
    # build the shared presentations up front so workers only read them
    for n in range(1, max_n + 1):
        d1_functional(n)
        d2_functional(n)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda t: verify_lemma(*t), tasks))
