"""
Graded Artinian quotients by per-degree exact linear algebra.

For a homogeneous ideal ``I`` and a degree ``D`` the engine builds the
Macaulay rows ``m * g`` (``g`` a generator, ``m`` a monomial with
``deg(m * g) = D``) and brings them to echelon form over Q.  Monomial
generators are handled up front: every degree-``D`` monomial they divide is
already in ``I`` and its column is dropped, which keeps the remaining
system small.

Columns are ordered graded-lex, largest first, and every echelon row is
pivoted on its largest monomial, so the quotient basis consists of the
smallest monomials not in the leading-term span.
"""
import heapq
import threading
from fractions import Fraction

from .polyring import Polynomial

__all__ = [
    "PresentationError",
    "GradedPresentation",
    "DegreePiece",
    "IntegralFunctional",
    "degree_piece",
    "contains_in_ideal",
    "top_integral",
]


class PresentationError(ValueError):
    """A presentation fails a structural check (e.g. top piece not 1-dimensional)."""


class GradedPresentation:
    """
    Variable set plus homogeneous relation generators.

    Degree pieces are memoized; the memo is guarded by a lock so a
    presentation may be shared between threads.
    """

    def __init__(self, ring, relations, top_degree=None, name=""):
        rels = []
        for g in relations:
            if g.ring != ring:
                raise ValueError("relation lives in a different variable set")
            if not g:
                continue
            if not g.is_homogeneous():
                raise ValueError(f"relation is not homogeneous: {g}")
            rels.append(g)
        self.ring = ring
        self.relations = tuple(rels)
        self.top_degree = top_degree
        self.name = name
        self._pieces = {}
        self._lock = threading.Lock()
        self._monomial_gens = [next(iter(g.terms)) for g in rels if g.is_monomial()]
        self._other_gens = [g for g in rels if not g.is_monomial()]

    def __repr__(self):
        return (f"GradedPresentation({self.name or self.ring.names!r}, "
                f"{len(self.relations)} relations)")

    def is_dead(self, exps):
        """True if the monomial is divisible by a monomial generator."""
        return any(all(e >= g for e, g in zip(exps, gen)) for gen in self._monomial_gens)

    def degree_piece(self, degree):
        with self._lock:
            piece = self._pieces.get(degree)
        if piece is None:
            piece = DegreePiece(self, degree)
            with self._lock:
                piece = self._pieces.setdefault(degree, piece)
        return piece

    def contains(self, p):
        return contains_in_ideal(self, p)

    def hilbert_function(self, max_degree):
        return [self.degree_piece(d).dimension for d in range(max_degree + 1)]


class DegreePiece:
    """
    Degree-``D`` slice of a graded quotient.

    Attributes
    ----------
    monomials : list of exponent tuples, graded-lex descending
    rows : dict mapping pivot column -> sparse echelon row ``{column: Fraction}``
        (pivot coefficient normalized to 1, all other columns larger)
    dead : set of columns killed outright by monomial generators
    basis : monomials spanning the quotient in this degree
    rank : rank of the full ideal-span (Macaulay) matrix
    """

    def __init__(self, pres, degree):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.presentation = pres
        self.degree = degree
        ring = pres.ring
        self.monomials = ring.monomials(degree)
        self.column = {m: i for i, m in enumerate(self.monomials)}
        self.dead = {i for i, m in enumerate(self.monomials) if pres.is_dead(m)}
        self.rows = {}
        for g in pres._other_gens:
            gdeg = g.degree
            if gdeg > degree:
                continue
            for m in ring.monomials(degree - gdeg):
                row = {}
                for gm, c in g.terms.items():
                    col = self.column[tuple(x + y for x, y in zip(m, gm))]
                    if col not in self.dead:
                        row[col] = c
                if row:
                    self._insert(row)
        self.basis_columns = [i for i in range(len(self.monomials))
                              if i not in self.dead and i not in self.rows]
        self.basis = [self.monomials[i] for i in self.basis_columns]
        self.rank = len(self.dead) + len(self.rows)
        self._nf_cache = {}

    @property
    def dimension(self):
        return len(self.basis)

    def _reduce_leading(self, row):
        """Reduce by leading terms until the lead is not a pivot; return the row or None."""
        rows = self.rows
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            c = row.get(col)
            if not c:
                continue
            piv = rows.get(col)
            if piv is None:
                # new pivot: normalize
                inv = 1 / c
                return col, {k: v * inv for k, v in row.items()}
            for k, v in piv.items():
                s = row.get(k, 0) - c * v
                if s:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = s
                else:
                    row.pop(k, None)
        return None

    def _insert(self, row):
        res = self._reduce_leading(row)
        if res is not None:
            col, normalized = res
            self.rows[col] = normalized

    def reduce_vector(self, vec):
        """Full reduction of a column vector; returns ``{basis column: coeff}``."""
        row = {k: Fraction(v) for k, v in vec.items() if v and k not in self.dead}
        rows = self.rows
        out = {}
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            c = row.pop(col, None)
            if not c:
                continue
            piv = rows.get(col)
            if piv is None:
                out[col] = c
                continue
            for k, v in piv.items():
                if k == col:
                    continue
                s = row.get(k, 0) - c * v
                if s:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = s
                else:
                    row.pop(k, None)
        return out

    def normal_form(self, p):
        """Coordinates of the homogeneous polynomial ``p`` in the quotient basis."""
        if p.ring != self.presentation.ring:
            raise ValueError("polynomial lives in a different variable set")
        vec = {}
        for m, c in p.terms.items():
            if self.presentation.ring.weighted_degree(m) != self.degree:
                raise ValueError(f"term of degree != {self.degree} in normal_form")
            vec[self.column[m]] = c
        red = self.reduce_vector(vec)
        return {self.monomials[i]: c for i, c in sorted(red.items())}

    def reduction_map(self):
        """Normal form of every monomial of this degree."""
        out = {}
        for i, m in enumerate(self.monomials):
            if i not in self._nf_cache:
                self._nf_cache[i] = self.reduce_vector({i: 1})
            out[m] = {self.monomials[j]: c for j, c in sorted(self._nf_cache[i].items())}
        return out


def degree_piece(pres, degree):
    return pres.degree_piece(degree)


def contains_in_ideal(pres, p):
    """Membership of a homogeneous polynomial in the ideal of ``pres``."""
    if not p:
        return True
    if not p.is_homogeneous():
        raise ValueError("contains_in_ideal needs a homogeneous polynomial")
    return not pres.degree_piece(p.degree).normal_form(p)


class IntegralFunctional:
    """
    Linear functional on the top-degree piece, normalized so that
    ``volume`` integrates to ``normalization``.

    Construction fails with :class:`PresentationError` unless the top piece
    is exactly one-dimensional.
    """

    def __init__(self, pres, volume, normalization=1):
        if not volume or not volume.is_homogeneous():
            raise ValueError("volume element must be a nonzero homogeneous polynomial")
        self.presentation = pres
        self.volume = volume
        self.normalization = Fraction(normalization)
        self.top_degree = volume.degree
        if pres.top_degree is not None and pres.top_degree != self.top_degree:
            raise PresentationError(
                f"volume has degree {self.top_degree}, presentation top degree is {pres.top_degree}")
        self.piece = pres.degree_piece(self.top_degree)
        if self.piece.dimension != 1:
            raise PresentationError(
                f"top-degree piece of {pres!r} has dimension {self.piece.dimension}, expected 1")
        vol_nf = self.piece.normal_form(volume)
        if not vol_nf:
            raise PresentationError("volume element vanishes in the quotient")
        self._scale = self.normalization / next(iter(vol_nf.values()))

    def __call__(self, cls):
        return top_integral(self, cls)


def top_integral(f, cls):
    """Integral of ``cls``; only its top-degree part contributes."""
    if isinstance(cls, Polynomial):
        part = cls.homogeneous_part(f.top_degree)
    else:
        raise TypeError("expected a Polynomial")
    nf = f.piece.normal_form(part)
    if not nf:
        return Fraction(0)
    return next(iter(nf.values())) * f._scale
