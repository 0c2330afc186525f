"""Exact arithmetic for homogeneous polynomials over a prime field.

Monomials are exponent tuples over variables x0..xn.  The public monomial
order is reverse lexicographic in the convention where a *lower* total
degree wins, and ties within a degree are broken at the rightmost index
where the exponents differ: the monomial with the smaller exponent there
is the greater one.  All coefficients live in F_p for a configurable
prime p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_PRIME = 32003

Monomial = tuple  # exponent vector, one entry per variable


# ---------------------------------------------------------------------------
# monomial primitives

def mono_degree(m: Monomial) -> int:
    return sum(m)


def _check_same_length(a, b):
    if len(a) != len(b):
        raise ValueError(f"exponent vectors of different lengths: {len(a)} vs {len(b)}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Whether a divides b."""
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; requires b | a."""
    _check_same_length(a, b)
    if not all(x >= y for x, y in zip(a, b)):
        raise ValueError(f"{b} does not divide {a}")
    return tuple(x - y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same_length(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def revlex_key(m: Monomial):
    """Sort key for the reverse lexicographic order; larger key = greater.

    Lower total degree is greater; within a degree the rightmost differing
    exponent decides, smaller exponent winning.
    """
    return (-sum(m), tuple(-e for e in reversed(m)))


def revlex_cmp(a: Monomial, b: Monomial) -> int:
    """+1 if a > b, 0 if equal, -1 if a < b in the reverse lex order."""
    _check_same_length(a, b)
    ka, kb = revlex_key(a), revlex_key(b)
    return (ka > kb) - (ka < kb)


def grevlex_key(m: Monomial):
    """Degree-refining variant of the same tie-break; a well-order.

    Agrees with revlex_key within each degree, which is the only case that
    matters for homogeneous polynomials; used internally wherever a
    terminating division order is required.
    """
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(nvars: int, d: int):
    """Iterate all exponent tuples of total degree d, greatest first."""
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


def count_monomials(nvars: int, d: int) -> int:
    return math.comb(d + nvars - 1, nvars - 1)


# ---------------------------------------------------------------------------
# rings and polynomials

class PolyRing:
    """K[x0..xn] over F_p, with a fixed computational monomial order.

    ``graded=True`` (the default) enforces the homogeneous-only contract:
    sums of nonzero polynomials of different degrees are rejected.  The
    elimination ring used internally by ideal intersection relaxes this.
    """

    def __init__(self, nvars, prime=DEFAULT_PRIME, graded=True, order_key=None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if prime < 2:
            raise ValueError("prime must be at least 2")
        self.nvars = nvars
        self.prime = prime
        self.graded = graded
        self.order_key = order_key if order_key is not None else grevlex_key
        self._zero = Poly(self, ())

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.nvars == other.nvars
                and self.prime == other.prime
                and self.graded == other.graded
                and self.order_key is other.order_key)

    def __hash__(self):
        return hash((self.nvars, self.prime, self.graded, id(self.order_key)))

    def __repr__(self):
        return f"PolyRing(nvars={self.nvars}, prime={self.prime})"

    # -- element constructors

    def zero(self):
        return self._zero

    def one(self):
        return self.monomial((0,) * self.nvars)

    def variable(self, i):
        if not 0 <= i < self.nvars:
            raise ValueError(f"no variable x{i} in a ring with {self.nvars} variables")
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(tuple(e))

    def monomial(self, mono, coeff=1):
        if len(mono) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = coeff % self.prime
        if c == 0:
            return self._zero
        return Poly(self, ((tuple(mono), c),))

    def from_dict(self, coeffs):
        p = self.prime
        terms = [(m, c % p) for m, c in coeffs.items() if c % p != 0]
        terms.sort(key=lambda t: self.order_key(t[0]), reverse=True)
        return Poly(self, tuple(terms))

    def linear_form(self, coeffs):
        """The form sum(coeffs[i] * x_i); rejects the zero vector."""
        if len(coeffs) != self.nvars:
            raise ValueError("coefficient vector has wrong length")
        f = self.from_dict({tuple(1 if j == i else 0 for j in range(self.nvars)): c
                            for i, c in enumerate(coeffs)})
        if f.is_zero():
            raise ValueError("linear form must be nonzero")
        return f

    def random_form(self, degree, rng):
        """Dense random homogeneous form of the given degree."""
        while True:
            f = self.from_dict({m: rng.randrange(self.prime)
                                for m in monomials_of_degree(self.nvars, degree)})
            if not f.is_zero():
                return f

    def general_linear_form(self, rng, nonzero_last=True):
        """Random linear form; by default with a unit coefficient on x_n."""
        while True:
            coeffs = [rng.randrange(self.prime) for _ in range(self.nvars)]
            if nonzero_last and coeffs[-1] == 0:
                continue
            if any(coeffs):
                return self.linear_form(coeffs)

    def restricted(self):
        """The ring in one fewer variable."""
        if self.nvars == 1:
            raise ValueError("cannot drop the last remaining variable")
        return PolyRing(self.nvars - 1, self.prime, graded=self.graded)

    def inv(self, c):
        c %= self.prime
        if c == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(c, self.prime - 2, self.prime)


class Poly:
    """Immutable polynomial; terms are (monomial, coeff) pairs, lead first."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self):
        return len({mono_degree(m) for m, _ in self.terms}) <= 1

    @property
    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no initial monomial")
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead coefficient")
        return self.terms[0][1]

    def coeff(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def monic(self):
        if not self.terms:
            return self
        inv = self.ring.inv(self.terms[0][1])
        if inv == 1:
            return self
        p = self.ring.prime
        return Poly(self.ring, tuple((m, (c * inv) % p) for m, c in self.terms))

    def scale(self, c):
        p = self.ring.prime
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Poly(self.ring, tuple((m, (t * c) % p) for m, t in self.terms))

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        self._check_ring(other)
        if self.ring.graded and self.terms and other.terms \
                and self.degree != other.degree:
            raise ValueError(
                f"inhomogeneous sum: degrees {self.degree} and {other.degree}")
        acc = dict(self.terms)
        p = self.ring.prime
        for m, c in other.terms:
            acc[m] = (acc.get(m, 0) + c) % p
        return self.ring.from_dict(acc)

    def __neg__(self):
        p = self.ring.prime
        return Poly(self.ring, tuple((m, p - c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        acc = {}
        p = self.ring.prime
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring.from_dict(acc)

    def mul_term(self, mono, coeff):
        p = self.ring.prime
        coeff %= p
        if coeff == 0 or not self.terms:
            return self.ring.zero()
        return Poly(self.ring, tuple((mono_mul(m, mono), (c * coeff) % p)
                                     for m, c in self.terms))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring.nvars, self.ring.prime, self.terms))

    def __repr__(self):
        from .parsing import render_poly
        return render_poly(self)


def initial_monomial(f: Poly) -> Monomial:
    """The greatest monomial of f in the reverse lex order."""
    if f.is_zero():
        raise ValueError("zero polynomial has no initial monomial")
    return max((m for m, _ in f.terms), key=revlex_key)


# ---------------------------------------------------------------------------
# linear changes of coordinates

@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution x_i -> sum_j matrix[i][j] * x_j."""

    ring: PolyRing
    matrix: tuple  # (n+1) x (n+1), entries in F_p

    def __post_init__(self):
        n = self.ring.nvars
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix has wrong shape")
        if _det_mod(self.matrix, self.ring.prime) == 0:
            raise ValueError("singular matrix")

    @classmethod
    def identity(cls, ring):
        n = ring.nvars
        return cls(ring, tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    @classmethod
    def random(cls, ring, rng):
        """Uniform invertible matrix, sampled by rejection."""
        n, p = ring.nvars, ring.prime
        while True:
            rows = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
            if _det_mod(rows, p) != 0:
                return cls(ring, rows)

    def inverse(self):
        return LinearChange(self.ring, _inverse_mod(self.matrix, self.ring.prime))

    def apply(self, f: Poly) -> Poly:
        """Substitute each variable by its image row and expand."""
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        ring = self.ring
        images = [ring.linear_form(row) for row in self.matrix]
        powers = [{0: ring.one()} for _ in range(ring.nvars)]
        acc = {}
        p = ring.prime
        for mono, coeff in f.terms:
            prod = ring.one()
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                cache = powers[i]
                if e not in cache:
                    top = max(cache)
                    cur = cache[top]
                    for k in range(top + 1, e + 1):
                        cur = cur * images[i]
                        cache[k] = cur
                prod = prod * cache[e]
            for m, c in prod.terms:
                acc[m] = (acc.get(m, 0) + coeff * c) % p
        return ring.from_dict(acc)


def _det_mod(matrix, p):
    rows = [list(r) for r in matrix]
    n = len(rows)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] % p != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = (det * rows[col][col]) % p
        inv = pow(rows[col][col], p - 2, p)
        for r in range(col + 1, n):
            factor = (rows[r][col] * inv) % p
            if factor:
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], rows[col])]
    return det % p


def _inverse_mod(matrix, p):
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(a * inv) % p for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def apply_change(change: LinearChange, f: Poly) -> Poly:
    return change.apply(f)


def restrict(f: Poly, h: Poly) -> Poly:
    """f modulo the linear form h, written in one fewer variable.

    h must have a nonzero coefficient on the last variable x_n (otherwise
    pre-compose with a variable permutation); x_n is eliminated by the
    substitution x_n = -(1/h_n) * sum_{i<n} h_i x_i.
    """
    if h.is_zero():
        raise ValueError("cannot restrict by the zero form")
    if h.degree != 1:
        raise ValueError("restriction requires a linear form")
    ring = f.ring
    if h.ring != ring:
        raise ValueError("form from a different ring")
    n = ring.nvars - 1
    coeffs = [0] * ring.nvars
    for m, c in h.terms:
        coeffs[m.index(1)] = c
    if coeffs[n] == 0:
        raise ValueError("form has no x_n component; permute variables first")
    small = ring.restricted()
    p = ring.prime
    neg_inv = (-ring.inv(coeffs[n])) % p
    subst = small.from_dict({tuple(1 if j == i else 0 for j in range(n)): (neg_inv * coeffs[i]) % p
                             for i in range(n)})
    powers = {0: small.one()}
    acc = {}
    for mono, coeff in f.terms:
        e = mono[n]
        if e not in powers:
            top = max(powers)
            cur = powers[top]
            for k in range(top + 1, e + 1):
                cur = cur * subst
                powers[k] = cur
        for m, c in powers[e].mul_term(mono[:n], coeff).terms:
            acc[m] = (acc.get(m, 0) + c) % p
    return small.from_dict(acc)
