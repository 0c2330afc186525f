"""Independent linear-algebra oracles for the test suite.

Everything here works degree by degree with dense coefficient matrices
over F_p and deliberately shares no code with the Groebner machinery it
checks: monomial enumeration goes through itertools and ranks through
numpy Gaussian elimination.
"""

import itertools
from math import comb

import numpy as np


def monomial_basis(nvars, d):
    """Degree-d exponent tuples via stars and bars, in a fixed order."""
    basis = []
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nvars - 2 - prev)
        basis.append(tuple(exps))
    return basis


def rank_mod_p(rows, p):
    """Row rank over F_p by vectorized Gaussian elimination."""
    if not len(rows):
        return 0
    A = np.array(rows, dtype=np.int64) % p
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[r + 1:, c]
        mask = col != 0
        if mask.any():
            A[r + 1:][mask] = (A[r + 1:][mask] - np.outer(col[mask], A[r])) % p
        r += 1
        if r == nrows:
            break
    return r


def poly_row(f, d, index):
    """Coefficient vector of a degree-d polynomial on the monomial basis."""
    row = np.zeros(len(index), dtype=np.int64)
    for mono, coeff in f.terms:
        row[index[mono]] = coeff
    return row


def _multiples(gens, d, nvars, index):
    rows = []
    for g in gens:
        e = g.degree
        if e > d:
            continue
        for m in monomial_basis(nvars, d - e):
            rows.append(poly_row(g.mul_term(m, 1), d, index))
    return rows


def ideal_dim(gens, d, nvars, p):
    """dim of the degree-d piece of the ideal the generators span."""
    if not gens:
        return 0
    index = {m: i for i, m in enumerate(monomial_basis(nvars, d))}
    return rank_mod_p(_multiples(gens, d, nvars, index), p)


def quotient_ring_dims(gens, dmax, nvars, p):
    """Quotient dimensions dim (R/I)_d for d = 0..dmax."""
    return [comb(d + nvars - 1, nvars - 1) - ideal_dim(gens, d, nvars, p)
            for d in range(dmax + 1)]


def is_member(f, gens, nvars, p):
    """Whether homogeneous f lies in the ideal, tested in its own degree."""
    if f.is_zero():
        return True
    d = f.degree
    index = {m: i for i, m in enumerate(monomial_basis(nvars, d))}
    rows = _multiples(gens, d, nvars, index)
    base = rank_mod_p(rows, p)
    return rank_mod_p(rows + [poly_row(f, d, index)], p) == base


def colon_dim(gens, f, d, nvars, p):
    """dim {g of degree d : g * f in I}, by a kernel computation."""
    e = f.degree
    index = {m: i for i, m in enumerate(monomial_basis(nvars, d + e))}
    ideal_rows = _multiples(gens, d + e, nvars, index)
    base = rank_mod_p(ideal_rows, p)
    mult_rows = [poly_row(f.mul_term(m, 1), d + e, index)
                 for m in monomial_basis(nvars, d)]
    combined = rank_mod_p(mult_rows + ideal_rows, p)
    return comb(d + nvars - 1, nvars - 1) - (combined - base)


def saturation_dim(gens, f, d, nvars, p, k_cap=12):
    """dim of the degree-d piece of (I : f^infinity), by stabilizing colons."""
    prev = None
    power = None
    for k in range(1, k_cap + 1):
        power = f if power is None else power * f
        cur = colon_dim(gens, power, d, nvars, p)
        if cur == prev:
            return cur
        prev = cur
    raise RuntimeError("saturation did not stabilize within the cap")


def intersection_dim(gens_i, gens_j, d, nvars, p):
    """dim (I meet J)_d = dim I_d + dim J_d - dim (I + J)_d."""
    index = {m: i for i, m in enumerate(monomial_basis(nvars, d))}
    rows_i = _multiples(gens_i, d, nvars, index)
    rows_j = _multiples(gens_j, d, nvars, index)
    return (rank_mod_p(rows_i, p) + rank_mod_p(rows_j, p)
            - rank_mod_p(rows_i + rows_j, p))
