"""
Toric data of the two-pointed quasimap space.

The fan is kept as its 1-skeleton plus primitive collections; maximal cones
are never enumerated.  The Chow presentation in ``H_0..H_d`` is obtained by
eliminating the linear ideal and rewriting the Stanley-Reisner generators.
"""
from dataclasses import dataclass
from fractions import Fraction

from .kernel import rational_row_reduce, smith_normal_form
from .polyring import VariableSet, substitute

__all__ = [
    "FanSkeleton",
    "PresentationReport",
    "build_fan_skeleton",
    "primitive_collections",
    "bad_locus",
    "stanley_reisner_and_linear_ideals",
    "chow_presentation",
    "expected_relations",
    "class_group_and_weights",
    "emit",
]


def v_label(i, j):
    return f"v_{i}_{j}"


def u_label(k):
    return f"u_{k}"


def x_var(i, j):
    return f"x_{i}_{j}"


def y_var(k):
    return f"y_{k}"


@dataclass(frozen=True)
class FanSkeleton:
    N: int
    d: int
    rank: int
    labels: tuple
    rays: tuple  # tuple of integer tuples, aligned with labels

    def ray(self, label):
        return self.rays[self.labels.index(label)]

    def ray_sum(self, labels):
        out = [0] * self.rank
        for lab in labels:
            for t, x in enumerate(self.ray(lab)):
                out[t] += x
        return tuple(out)

    def level(self, i):
        return [v_label(i, j) for j in range(1, self.N + 1)]

    def coordinate_names(self):
        return [x_var(*map(int, lab[2:].split("_"))) if lab.startswith("v_")
                else y_var(int(lab[2:])) for lab in self.labels]


def _cartan_block(d):
    """(d-1) x (d+1) matrix whose columns are v'_0..v'_d."""
    rows = []
    for r in range(d - 1):
        row = [0] * (d + 1)
        row[r], row[r + 1], row[r + 2] = -1, 2, -1
        rows.append(row)
    return rows


def build_fan_skeleton(N, d):
    if N < 1 or d < 1:
        raise ValueError("N and d must be >= 1")
    rank = (d + 1) * (N - 1) + (d - 1)
    cart = _cartan_block(d)
    labels, rays = [], []
    for i in range(d + 1):
        for j in range(1, N + 1):
            vec = [0] * rank
            base = i * (N - 1)
            if j < N:
                vec[base + j - 1] = 1
            else:
                for t in range(N - 1):
                    vec[base + t] = -1
                for r in range(d - 1):
                    vec[(d + 1) * (N - 1) + r] = cart[r][i]
            labels.append(v_label(i, j))
            rays.append(tuple(vec))
    for k in range(1, d):
        vec = [0] * rank
        vec[(d + 1) * (N - 1) + k - 1] = -1
        labels.append(u_label(k))
        rays.append(tuple(vec))
    return FanSkeleton(N, d, rank, tuple(labels), tuple(rays))


def _u_coordinates(skel, vec):
    """Coefficients c_k with vec = sum c_k u_k, or None if vec is not in their span."""
    tail = (skel.d + 1) * (skel.N - 1)
    if any(vec[:tail]):
        return None
    return [-x for x in vec[tail:]]


def primitive_collections(skel):
    """
    One collection per level i: the rays v_{i,*} together with every u_k
    that enters the relation sum_j v_{i,j} = sum_k c_k u_k with c_k < 0.
    """
    out = []
    for i in range(skel.d + 1):
        level = skel.level(i)
        coeffs = _u_coordinates(skel, skel.ray_sum(level))
        if coeffs is None:
            raise AssertionError(f"level {i} ray sum is not in the span of the u-rays")
        extra = [u_label(k + 1) for k, c in enumerate(coeffs) if c < 0]
        out.append(tuple(level + extra))
    return out


def bad_locus(skel):
    """Coordinate groups whose simultaneous vanishing is removed (one per collection)."""
    names = dict(zip(skel.labels, skel.coordinate_names()))
    return [tuple(names[lab] for lab in coll) for coll in primitive_collections(skel)]


def coordinate_ring(skel):
    return VariableSet(tuple(skel.coordinate_names()))


def stanley_reisner_and_linear_ideals(skel):
    """
    Returns ``(sr, linear)``: squarefree monomials over the primitive
    collections, and one linear form sum_rho <e_alpha, v_rho> x_rho per
    standard basis vector e_alpha of the dual lattice.
    """
    ring = coordinate_ring(skel)
    gens = ring.gen_dict()
    names = dict(zip(skel.labels, skel.coordinate_names()))
    sr = []
    for coll in primitive_collections(skel):
        m = ring.one()
        for lab in coll:
            m = m * gens[names[lab]]
        sr.append(m)
    linear = []
    for alpha in range(skel.rank):
        form = ring.zero()
        for lab, vec in zip(skel.labels, skel.rays):
            if vec[alpha]:
                form = form + vec[alpha] * gens[names[lab]]
        linear.append(form)
    return sr, linear


@dataclass(frozen=True)
class PresentationReport:
    N: int
    d: int
    ring: VariableSet
    identifications: dict   # coordinate name -> Polynomial in H_0..H_d
    relations: tuple
    class_group_rank: int
    torsion: tuple
    weights: dict           # coordinate name -> exponent tuple over lambda_0..lambda_d


def h_ring(d):
    return VariableSet(tuple(f"H_{i}" for i in range(d + 1)))


def _eliminate(skel, linear, order=None):
    """
    Solve the linear ideal for every coordinate except x_{l,N}, which become
    H_l.  ``order`` permutes the eliminated coordinates (columns).
    """
    coords = skel.coordinate_names()
    kept = [x_var(i, skel.N) for i in range(skel.d + 1)]
    elim = [c for c in coords if c not in kept]
    if order is not None:
        elim = [elim[i] for i in order]
    cols = elim + kept
    matrix = []
    for form in linear:
        row = [Fraction(0)] * len(cols)
        for exps, c in form.terms.items():
            row[cols.index(coords[exps.index(1)])] = c
        matrix.append(row)
    rref, rank, _, pivots = rational_row_reduce(matrix, len(cols))
    if pivots != list(range(len(elim))):
        raise AssertionError("linear ideal does not eliminate all non-H coordinates")
    H = h_ring(skel.d)
    hgens = H.gens()
    ident = {}
    for row, pc in zip(rref, pivots):
        expr = H.zero()
        for t, name in enumerate(kept):
            coef = row[len(elim) + t]
            if coef:
                expr = expr - coef * hgens[t]
        ident[cols[pc]] = expr
    for t, name in enumerate(kept):
        ident[name] = hgens[t]
    return ident


def chow_presentation(N, d, order=None):
    skel = build_fan_skeleton(N, d)
    sr, linear = stanley_reisner_and_linear_ideals(skel)
    ident = _eliminate(skel, linear, order)
    H = h_ring(d)
    relations = []
    for g in sr:
        r = substitute(g, ident, H)
        relations.append(r.normalized())
    rank, torsion = class_group(skel)
    weights = {}
    for name, expr in ident.items():
        exps = [0] * (d + 1)
        for m, c in expr.terms.items():
            if c.denominator != 1:
                raise AssertionError(f"class of {name} is not integral")
            exps[m.index(1)] = int(c)
        weights[name] = tuple(exps)
    return PresentationReport(N, d, H, ident, tuple(relations), rank, torsion, weights)


def expected_relations(N, d):
    """H_0^N, H_k^N (-H_{k-1} + 2H_k - H_{k+1}) for 0<k<d, H_d^N; monic."""
    H = h_ring(d).gens()
    rels = [H[0] ** N]
    for k in range(1, d):
        rels.append(H[k] ** N * (-H[k - 1] + 2 * H[k] - H[k + 1]))
    rels.append(H[d] ** N)
    return tuple(r.normalized() for r in rels)


def class_group(skel):
    """(free rank, torsion invariants) of Z^{rays} / image of the dual lattice."""
    pairing = [list(v) for v in skel.rays]     # rows = rays, columns = e_alpha
    D, _, _ = smith_normal_form(pairing)
    diag = [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
    nonzero = [x for x in diag if x]
    torsion = tuple(x for x in nonzero if x != 1)
    return len(skel.rays) - len(nonzero), torsion


def class_group_and_weights(skel):
    """
    Class group rank, torsion, and the weight of each coordinate under the
    (C*)^{d+1} action as an exponent vector over lambda_0..lambda_d.
    """
    rep = chow_presentation(skel.N, skel.d)
    return rep.class_group_rank, rep.torsion, rep.weights


def emit(N, d):
    """JSON-ready dump of the toric data."""
    skel = build_fan_skeleton(N, d)
    sr, linear = stanley_reisner_and_linear_ideals(skel)
    rep = chow_presentation(N, d)
    return {
        "N": N,
        "d": d,
        "lattice_rank": skel.rank,
        "rays": {lab: list(vec) for lab, vec in zip(skel.labels, skel.rays)},
        "primitive_collections": [list(c) for c in primitive_collections(skel)],
        "stanley_reisner": [g.to_text() for g in sr],
        "linear_ideal": [g.to_text() for g in linear],
        "identifications": {k: v.to_text() for k, v in sorted(rep.identifications.items())},
        "chow_relations": [r.to_text() for r in rep.relations],
        "class_group": {"rank": rep.class_group_rank, "torsion": list(rep.torsion)},
        "weights": {k: list(v) for k, v in sorted(rep.weights.items())},
    }
