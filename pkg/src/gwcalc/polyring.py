"""
Sparse multivariate polynomials over Q.

A polynomial is an immutable map from exponent tuples to nonzero
``Fraction`` coefficients, tied to a :class:`VariableSet`.  Terms iterate
in graded lexicographic order (largest first), which is also the column
order used by the quotient engine.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

__all__ = [
    "VariableSet",
    "Polynomial",
    "EulerCoefficients",
    "monomials_of_degree",
    "substitute",
    "power_difference_quotient",
    "expand_euler_product",
    "euler_class",
]


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, degree):
    """All exponent tuples of total degree ``degree``, largest (lex) first."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def _grlex_key(exps):
    return (sum(exps), exps)


@dataclass(frozen=True)
class VariableSet:
    names: tuple
    degrees: tuple = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        degrees = (1,) * len(names) if self.degrees is None else tuple(self.degrees)
        if len(degrees) != len(names) or any(d < 1 for d in degrees):
            raise ValueError("degrees must be positive and match the names")
        object.__setattr__(self, "degrees", degrees)

    def __len__(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def gens(self):
        return tuple(self.gen(i) for i in range(len(self.names)))

    def gen(self, i):
        if isinstance(i, str):
            i = self.index(i)
        exps = tuple(int(j == i) for j in range(len(self.names)))
        return Polynomial(self, {exps: Fraction(1)})

    def gen_dict(self):
        return dict(zip(self.names, self.gens()))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * len(self.names): Fraction(c)})

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != len(self.names) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        return Polynomial(self, {exps: Fraction(coeff)})

    def weighted_degree(self, exps):
        return sum(e * w for e, w in zip(exps, self.degrees))

    def monomials(self, degree):
        if all(w == 1 for w in self.degrees):
            return list(monomials_of_degree(len(self.names), degree))
        return [m for total in range(degree + 1)
                for m in monomials_of_degree(len(self.names), total)
                if self.weighted_degree(m) == degree]


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different variable sets: "
                                 f"{self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return self.ring.constant(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, Polynomial):
            if not other:
                return self.ring.zero()
            f = Fraction(other)
            return Polynomial._raw(self.ring, {m: c * f for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, Polynomial):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, _RationalABC)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------
    def items(self):
        """(exponents, coefficient) pairs in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def degrees(self):
        return {self.ring.weighted_degree(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        return max(self.degrees(), default=-1)

    def homogeneous_part(self, degree):
        return Polynomial._raw(self.ring, {m: c for m, c in self.terms.items()
                                           if self.ring.weighted_degree(m) == degree})

    def leading(self):
        if not self.terms:
            return None
        return max(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def normalized(self):
        """Scale so the leading coefficient (graded lex) is 1."""
        if not self.terms:
            return self
        return self / self.leading()[1]

    def is_monomial(self):
        return len(self.terms) == 1

    def to_text(self):
        """Canonical text: graded-lex order, coefficients as ``num`` or ``num/den``."""
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def substitute(p, images, target=None):
    """
    Ring homomorphism defined by variable images.

    ``images`` maps every variable name of ``p.ring`` to a polynomial in
    ``target`` (default: the ring of the first image).  Images must be
    homogeneous of the source variable's degree.
    """
    src = p.ring
    missing = [v for v in src.names if v not in images]
    if missing:
        raise KeyError(f"no image for variables {missing}")
    if target is None:
        target = next(iter(images.values())).ring if images else src
    imgs = []
    for name, w in zip(src.names, src.degrees):
        img = images[name]
        if not isinstance(img, Polynomial):
            img = target.constant(img)
        if img.ring != target:
            raise ValueError(f"image of {name} is not in the target ring")
        if img and img.degrees() != {w}:
            raise ValueError(f"image of {name} is not homogeneous of degree {w}")
        imgs.append(img)

    powers = [dict() for _ in imgs]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = imgs[i] ** e
        return cache[e]

    result = target.zero()
    for exps, c in p.terms.items():
        term = target.constant(c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def power_difference_quotient(a, b, n):
    """
    ``sum_{i=0}^n a^i b^(n-i)``, i.e. ``(a^(n+1) - b^(n+1)) / (a - b)``.

    ``n = -1`` gives the empty sum.
    """
    if a.ring != b.ring:
        raise ValueError("operands must share a variable set")
    if n < -1:
        raise ValueError("n must be >= -1")
    result = a.ring.zero()
    apow = a.ring.one()
    bpows = [a.ring.one()]
    for _ in range(n):
        bpows.append(bpows[-1] * b)
    for i in range(n + 1):
        result = result + apow * bpows[n - i]
        apow = apow * a
    return result


@dataclass(frozen=True)
class EulerCoefficients:
    """Coefficients ``ell[i]`` of ``x^(k-i) y^(i+1)`` in prod_{j=0}^k (j x + (k-j) y)."""
    k: int
    ell: tuple

    def __call__(self, i):
        if 0 <= i < self.k:
            return self.ell[i]
        return 0


@lru_cache(maxsize=None)
def expand_euler_product(k):
    if k < 1:
        raise ValueError("k must be >= 1")
    ring = VariableSet(("x", "y"))
    x, y = ring.gens()
    prod = ring.one()
    for j in range(k + 1):
        prod = prod * (j * x + (k - j) * y)
    ell = tuple(int(prod.coefficient((k - i, i + 1))) for i in range(k))
    if sum(ell) != sum(prod.terms.values()):
        raise AssertionError("e^k has terms outside the x^(k-i) y^(i+1) range")
    return EulerCoefficients(k, ell)


def euler_class(k, x, y):
    """``e^k(x, y)`` for polynomials ``x``, ``y`` via the expanded coefficients."""
    ell = expand_euler_product(k).ell
    result = x.ring.zero()
    for i, c in enumerate(ell):
        result = result + c * x ** (k - i) * y ** (i + 1)
    return result
