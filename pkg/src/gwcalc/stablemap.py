"""
Chow rings of two-pointed stable map spaces to P^n in degrees 1 and 2.

Degree 1 uses generators ``H, psi, T``; degree 2 computes in the extended
ring with generators ``H, psi, T1, T2, U1, U2, S0`` (``T1 = T_{1_D}``,
``T2 = T_{2_D}``, ``U1 = T_{1_D,2_M}``, ``U2 = T_{2_D,2_M}``,
``S0 = T_{1_D,2_D}``).  Only classes built from the symmetric combinations
are ever integrated, so no separate invariant subring is constructed.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .kernel import binomial
from .polyring import VariableSet, power_difference_quotient as pdq, substitute
from .quotient import GradedPresentation, IntegralFunctional

__all__ = [
    "D1_VARIABLES",
    "D2_VARIABLES",
    "build_presentation_d1",
    "build_presentation_d2",
    "KeyTransform",
    "key_transform",
    "d1_classes",
    "d2_classes",
    "d1_functional",
    "d2_functional",
    "integral_d1_closed",
    "integral_d2_closed",
    "UncoveredDomainError",
]

D1_VARIABLES = VariableSet(("H", "psi", "T"))
D2_VARIABLES = VariableSet(("H", "psi", "T1", "T2", "U1", "U2", "S0"))


class UncoveredDomainError(ValueError):
    """Intersection number outside the range where a closed form is known."""


@lru_cache(maxsize=None)
def build_presentation_d1(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    H, psi, T = D1_VARIABLES.gens()
    relations = [
        H ** (n + 1),
        T * psi,
        (H + psi) ** (n + 1),
        pdq(H + psi + T, H, n),
    ]
    return GradedPresentation(D1_VARIABLES, relations, top_degree=2 * n,
                              name=f"stable maps d=1, n={n}")


def d2_relations(n):
    """The 16 generators of the degree-2 ideal, labelled."""
    H, psi, T1, T2, U1, U2, S0 = D2_VARIABLES.gens()
    S2 = U1 + U2
    A = H + psi + S0
    B = H + 2 * psi + 2 * S0
    rel5e = (pdq(B + U1 + T1, A, n) + pdq(B + U2 + T2, A, n)
             - pdq(B + U1, A, n) - pdq(B + U2, A, n)
             + pdq(H + 2 * psi + S2, H + psi, n) - pdq(H + 2 * psi, H + psi, n)
             + 2 * pdq(B, H, n))
    Hn = (n + 1) * H ** n
    return [
        ("rel1", H ** (n + 1)),
        ("rel2:S0U1", S0 * U1),
        ("rel2:S0U2", S0 * U2),
        ("rel2:U1U2", U1 * U2),
        ("rel31:T1T2", T1 * T2 * (psi + S0)),
        ("rel31:T1U2", T1 * U2 * psi),
        ("rel31:T2U1", T2 * U1 * psi),
        ("rel32:T1", T1 * (psi + U1)),
        ("rel32:T2", T2 * (psi + U2)),
        ("rel32:S0", S0 * psi),
        ("rel4", (H + 2 * psi + S2) ** (n + 1)),
        ("rel5e", rel5e),
        ("rel511", T1 * (pdq(H + U2 + T2, H, n) + pdq(A, H, n) - Hn)),
        ("rel512", T2 * (pdq(H + U1 + T1, H, n) + pdq(A, H, n) - Hn)),
        ("rel521", U1 * (pdq(H + T2, H, n) - Hn + pdq(H + psi, H, n))),
        ("rel522", U2 * (pdq(H + T1, H, n) - Hn + pdq(H + psi, H, n))),
    ]


@lru_cache(maxsize=None)
def build_presentation_d2(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    rels = [g for _, g in d2_relations(n)]
    return GradedPresentation(D2_VARIABLES, rels, top_degree=3 * n + 1,
                              name=f"stable maps d=2, n={n}")


def d1_classes():
    H, psi, T = D1_VARIABLES.gens()
    return {"h0": H, "h1": H + psi, "T": T}


def d2_classes():
    """Symmetric classes of the degree-2 ring, expressed in the generators."""
    H, psi, T1, T2, U1, U2, S0 = D2_VARIABLES.gens()
    c = {
        "H": H, "psi": psi, "S0": S0,
        "S1": T1 + T2, "S2": U1 + U2,
        "P1": T1 * T2, "P2": U1 * U2, "P3": T1 * U2 + T2 * U1,
    }
    c["h0"] = H
    c["h1"] = H + psi
    c["h2"] = H + 2 * psi + c["S2"]
    c["g0"] = c["h0"]
    c["g1"] = c["h1"] + S0
    c["g2"] = c["h2"] + 2 * S0 + c["S1"]
    return c


@dataclass(frozen=True)
class KeyTransform:
    """
    Change of generators between ``(H, psi[, S2])`` and ``(h0, h1[, h2])``.

    ``to_h`` gives each h-class in terms of the original generators,
    ``from_h`` the inverse substitution.
    """
    degree: int
    source: VariableSet = field(repr=False)
    target: VariableSet = field(repr=False)
    to_h: dict = field(repr=False)
    from_h: dict = field(repr=False)

    def forward(self, p):
        """Rewrite a polynomial in h-classes as one in the original generators."""
        return substitute(p, self.to_h, self.source)

    def inverse(self, p):
        return substitute(p, self.from_h, self.target)


def key_transform(degree):
    if degree == 1:
        src = VariableSet(("H", "psi"))
        tgt = VariableSet(("h0", "h1"))
        H, psi = src.gens()
        h0, h1 = tgt.gens()
        return KeyTransform(1, src, tgt, {"h0": H, "h1": H + psi},
                            {"H": h0, "psi": h1 - h0})
    if degree == 2:
        src = VariableSet(("H", "psi", "S2"))
        tgt = VariableSet(("h0", "h1", "h2"))
        H, psi, S2 = src.gens()
        h0, h1, h2 = tgt.gens()
        return KeyTransform(2, src, tgt,
                            {"h0": H, "h1": H + psi, "h2": H + 2 * psi + S2},
                            {"H": h0, "psi": h1 - h0, "S2": h0 - 2 * h1 + h2})
    raise ValueError("key transforms exist for degrees 1 and 2 only")


@lru_cache(maxsize=None)
def d1_functional(n):
    c = d1_classes()
    return IntegralFunctional(build_presentation_d1(n), c["h0"] ** n * c["h1"] ** n, 1)


@lru_cache(maxsize=None)
def d2_functional(n):
    c = d2_classes()
    vol = 2 * c["h0"] ** n * c["h1"] ** (n + 1) * c["h2"] ** n
    return IntegralFunctional(build_presentation_d2(n), vol, 1)


def integral_d1_closed(n, alpha, beta, gamma):
    """Integral of h0^alpha h1^beta (h1+T)^gamma over the degree-1 space."""
    if min(alpha, beta, gamma) < 0:
        raise ValueError("exponents must be non-negative")
    if alpha + beta + gamma != 2 * n:
        return 0
    if alpha == n and gamma != n:
        return 1
    if alpha != n and gamma == n:
        return -1
    return 0


def integral_d2_closed(n, alpha, beta, gamma, delta):
    """
    Integral of g0^alpha g1^beta g2^gamma h2^delta over the degree-2 space.

    Raises :class:`UncoveredDomainError` for top-degree inputs with
    ``gamma > 2n - delta`` (``delta <= n``, ``alpha <= n``), where no closed
    form is available.
    """
    if min(alpha, beta, gamma, delta) < 0:
        raise ValueError("exponents must be non-negative")
    if alpha + beta + gamma + delta != 3 * n + 1:
        return Fraction(0)
    # g0^(n+1) = 0 and h2^(n+1) = 0
    if alpha > n or delta > n:
        return Fraction(0)
    if delta == 0:
        if gamma <= 2 * n:
            return Fraction(0)
        raise UncoveredDomainError(f"no closed form for delta=0, gamma={gamma} > 2n")
    if gamma < n or (gamma == n and n - delta + 1 > alpha):
        return (Fraction(binomial(beta - n - 1, n - alpha) - binomial(beta - n - 1, n - gamma))
                / Fraction(2) ** (beta - n))
    if gamma == n:
        return Fraction(-1)
    if gamma <= 2 * n - delta:
        return Fraction(0)
    raise UncoveredDomainError(
        f"no closed form for gamma={gamma} > 2n - delta = {2 * n - delta}")
