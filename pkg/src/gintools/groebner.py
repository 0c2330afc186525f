"""Groebner bases and ideal arithmetic for homogeneous ideals.

Buchberger with the normal selection strategy and Gebauer-Moeller pair
elimination.  Intersections (and through them quotients and saturations)
go through the one-auxiliary-variable elimination construction: adjoin t,
form t*I + (1-t)*J, and eliminate t with a block order.  That block order
lives here and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import (Poly, PolyRing, mono_degree, mono_div, mono_divides,
                   mono_lcm, mono_mul, monomials_of_degree, count_monomials,
                   restrict, revlex_key)
from .staircase import MonomialIdeal


class Ideal:
    """Homogeneous ideal with a cached reduced Groebner basis."""

    def __init__(self, ring, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if ring.graded and not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = None

    def groebner_basis(self):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.ring)
        return self._gb

    def is_zero(self):
        return not self.groebner_basis()

    def contains(self, f):
        return normal_form(f, self.groebner_basis()).is_zero()

    def same_ideal(self, other):
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return self.groebner_basis() == other.groebner_basis()

    def gb_key(self):
        """Hashable canonical form (the reduced basis' term tuples)."""
        return tuple(g.terms for g in self.groebner_basis())

    def __repr__(self):
        inside = ", ".join(repr(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


# ---------------------------------------------------------------------------
# division and Buchberger

def normal_form(f: Poly, basis) -> Poly:
    """Remainder of f under division by the polynomials in basis.

    No term of the result is divisible by any lead monomial of the basis;
    the difference f - result lies in the ideal the basis generates.
    """
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    key = ring.order_key
    p = ring.prime
    leads = [(g.lead_monomial, ring.inv(g.lead_coeff), g.terms) for g in basis]
    work = dict(f.terms)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc_inv, terms in leads:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = (c * lc_inv) % p
                for gm, gc in terms[1:]:
                    mm = mono_mul(gm, shift)
                    v = (work.get(mm, 0) - factor * gc) % p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return ring.from_dict(remainder)


def spoly(f: Poly, g: Poly) -> Poly:
    lcm = mono_lcm(f.lead_monomial, g.lead_monomial)
    ring = f.ring
    s1 = f.mul_term(mono_div(lcm, f.lead_monomial), ring.inv(f.lead_coeff))
    s2 = g.mul_term(mono_div(lcm, g.lead_monomial), ring.inv(g.lead_coeff))
    return s1 - s2


def _update(G, P, f, lead):
    """Add f to the basis, pruning pairs by the Gebauer-Moeller criteria."""
    lmf = f.lead_monomial
    kept = set()
    for i, j in P:
        lij = mono_lcm(lead[i], lead[j])
        if (not mono_divides(lmf, lij)
                or lij == mono_lcm(lead[i], lmf)
                or lij == mono_lcm(lead[j], lmf)):
            kept.add((i, j))
    new_index = len(G)
    by_lcm = {}
    for i in range(new_index):
        by_lcm.setdefault(mono_lcm(lead[i], lmf), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=f.ring.order_key):
        if not any(mono_divides(seen, lcm) for seen in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        if not any(mono_lcm(lead[i], lmf) == mono_mul(lead[i], lmf)
                   for i in by_lcm[lcm]):
            kept.add((min(by_lcm[lcm]), new_index))
    G.append(f)
    lead.append(lmf)
    return kept


def buchberger(gens, ring) -> tuple:
    """The reduced Groebner basis of the given generators.

    Pairs are processed in increasing order of their lcm (the normal
    strategy); the result is auto-reduced, monic, and sorted with the
    lowest-degree leads first.
    """
    G, lead, P = [], [], set()
    for f in gens:
        if f.is_zero():
            continue
        r = normal_form(f, G)
        if not r.is_zero():
            P = _update(G, P, r.monic(), lead)
    key = ring.order_key
    while P:
        pair = min(P, key=lambda ij: key(mono_lcm(lead[ij[0]], lead[ij[1]])))
        P.discard(pair)
        r = normal_form(spoly(G[pair[0]], G[pair[1]]), G)
        if not r.is_zero():
            P = _update(G, P, r.monic(), lead)
    return _reduce_basis(G, ring)


def _reduce_basis(G, ring):
    minimal = []
    for g in sorted(G, key=lambda h: ring.order_key(h.lead_monomial)):
        if not any(mono_divides(h.lead_monomial, g.lead_monomial) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda h: revlex_key(h.lead_monomial), reverse=True)
    return tuple(reduced)


def initial_ideal(I: Ideal) -> MonomialIdeal:
    """Minimal monomial generators of the ideal of lead monomials."""
    return MonomialIdeal.from_monomials(
        I.ring.nvars, (g.lead_monomial for g in I.groebner_basis()))


# ---------------------------------------------------------------------------
# Hilbert functions

@dataclass(frozen=True)
class HilbertFunction:
    """Quotient dimensions dim (R/M)_d for 0 <= d <= dmax."""

    values: tuple

    def __getitem__(self, d):
        return self.values[d]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def default_dmax(M: MonomialIdeal) -> int:
    """Past max generator degree + nvars the function is polynomial here."""
    return M.max_degree() + M.nvars


def hilbert_function(M: MonomialIdeal, dmax=None) -> HilbertFunction:
    """Count the degree-d monomials outside M for each d up to dmax."""
    if dmax is None:
        dmax = default_dmax(M)
    if dmax < 0:
        raise ValueError("negative degree bound")
    values = []
    for d in range(dmax + 1):
        gens = [g for g in M.gens if mono_degree(g) <= d]
        if any(mono_degree(g) == 0 for g in gens):
            values.append(0)
            continue
        if not gens:
            values.append(count_monomials(M.nvars, d))
            continue
        values.append(sum(1 for m in monomials_of_degree(M.nvars, d)
                          if not any(mono_divides(g, m) for g in gens)))
    return HilbertFunction(tuple(values))


# ---------------------------------------------------------------------------
# intersection, quotient, saturation

def _elim_key(m):
    return (m[-1], sum(m[:-1]), tuple(-e for e in reversed(m[:-1])))


def _elimination_ring(ring):
    return PolyRing(ring.nvars + 1, ring.prime, graded=False, order_key=_elim_key)


def _lift(f, big, extra=0):
    return Poly(big, tuple((m + (extra,), c) for m, c in f.terms))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I meet J via elimination of t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    ring = I.ring
    big = _elimination_ring(ring)
    gens = [_lift(f, big, extra=1) for f in I.gens]
    for g in J.gens:
        gens.append(_lift(g, big) - _lift(g, big, extra=1))
    basis = buchberger(gens, big)
    kept = [Poly(ring, tuple((m[:-1], c) for m, c in g.terms))
            for g in basis if g.lead_monomial[-1] == 0]
    reduced = _reduce_basis(kept, ring)
    result = Ideal(ring, reduced)
    result._gb = reduced  # elimination returns a basis of the intersection
    return result


def exact_divide(f: Poly, d: Poly) -> Poly:
    """f / d for an exact divisor; raises when the division leaves a remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    key = ring.order_key
    p = ring.prime
    lm, lc_inv = d.lead_monomial, ring.inv(d.lead_coeff)
    work = dict(f.terms)
    quotient = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not mono_divides(lm, m):
            raise ValueError("division is not exact")
        shift = mono_div(m, lm)
        factor = (c * lc_inv) % p
        quotient[shift] = factor
        for gm, gc in d.terms[1:]:
            mm = mono_mul(gm, shift)
            v = (work.get(mm, 0) - factor * gc) % p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return ring.from_dict(quotient)


def ideal_quotient(I: Ideal, f: Poly) -> Ideal:
    """(I : f), as the intersection I meet (f) with f divided back out."""
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    if f.degree == 0:
        return I
    meet = intersect(I, Ideal(I.ring, [f]))
    reduced = _reduce_basis([exact_divide(g, f) for g in meet.gens], I.ring)
    result = Ideal(I.ring, reduced)
    result._gb = reduced  # dividing a basis of I meet (f) by f yields one of (I : f)
    return result


def quotient_by_power(I: Ideal, f: Poly, power: int) -> Ideal:
    """(I : f^power) by iterating the single quotient."""
    if power < 0:
        raise ValueError("negative power")
    current = I
    for _ in range(power):
        current = ideal_quotient(current, f)
    return current


def saturate(I: Ideal, f: Poly) -> Ideal:
    """(I : f^infinity): quotient until two consecutive iterates agree."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    current = I
    while True:
        step = ideal_quotient(current, f)
        if step.same_ideal(current):
            return current
        current = step


def restrict_ideal(I: Ideal, h: Poly) -> Ideal:
    """The ideal generated by the restrictions of I's generators modulo h.

    No saturation is applied; the result can be strictly smaller than the
    full ideal of the hyperplane section.
    """
    restricted = [restrict(g, h) for g in I.gens]
    return Ideal(I.ring.restricted(), [g for g in restricted if not g.is_zero()])


def truncate(I: Ideal, delta: int, strict: bool) -> Ideal:
    """The ideal generated by the elements of I of degree < delta (or <=).

    Generated by the reduced-basis elements below the cutoff: homogeneous
    reduction never raises degree, so those span every graded piece below
    it.
    """
    if delta < 0:
        raise ValueError("negative truncation degree")
    if strict:
        kept = [g for g in I.groebner_basis() if g.degree < delta]
    else:
        kept = [g for g in I.groebner_basis() if g.degree <= delta]
    return Ideal(I.ring, kept)
