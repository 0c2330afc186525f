"""Generic initial ideals via randomized coordinates, with verification.

A gin is computed by sampling independent invertible coordinate changes
and voting: unanimity certifies the result (up to the negligible failure
probability over a large prime field), disagreement escalates the sample
count, and a Borel-fixedness check guards the output.  On top of that sit
the harnesses that check the slicing identity, gap truncation, the
connectedness of invariant tables, and the quotient-restriction trace
whose gcd certificate reproduces the computable steps behind the
connectedness statement.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from collections import Counter
from dataclasses import dataclass

from .ring import LinearChange, Poly, mono_degree
from .groebner import (Ideal, ideal_quotient, initial_ideal, intersect,
                       quotient_by_power, restrict_ideal, truncate)
from .staircase import (InvariantTable, MonomialIdeal,
                        colon_by_monomial, gap_degrees, invariant_table,
                        is_borel_fixed, is_connected, profile_at,
                        restrict_last, slice_level, truncate_monomial,
                        UnsaturatedIdealError)


class ComputationError(RuntimeError):
    pass


class GinUnstableError(ComputationError):
    """Votes never agreed; the field may be too small for genericity."""


class DegenerateTraceError(ComputationError):
    pass


def child_rng(seed, *labels) -> random.Random:
    """Deterministic stream derived from the master seed by labeled splitting."""
    tag = "/".join(str(l) for l in labels)
    digest = hashlib.sha256(f"{seed}/{tag}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


# ---------------------------------------------------------------------------
# the gin vote

@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    samples_used: int
    seed: int
    agreed: bool


_MAX_SAMPLES = 5
_gin_cache: dict = {}


def gin(I: Ideal, seed=0, votes=2, max_samples=_MAX_SAMPLES) -> GinResult:
    """The generic initial ideal of I, certified by unanimous sampling.

    ``votes`` independent coordinate changes are drawn; if their initial
    ideals all agree the result is returned with ``agreed=True``.  On
    disagreement the sample count escalates to ``max_samples`` and the
    majority is returned with ``agreed=False``; no majority at all is an
    error.  A unanimous non-Borel-fixed result signals an internal bug.
    """
    if votes < 2:
        raise ValueError("need at least two votes")
    cache_key = (I.ring.nvars, I.ring.prime, I.gb_key(), seed, votes, max_samples)
    if cache_key in _gin_cache:
        return _gin_cache[cache_key]

    def sample(k):
        change = LinearChange.random(I.ring, child_rng(seed, "gin-sample", k))
        moved = Ideal(I.ring, [change.apply(g) for g in I.gens])
        return initial_ideal(moved)

    results = [sample(k) for k in range(votes)]
    agreed = all(r == results[0] for r in results[1:])
    if agreed:
        winner = results[0]
    else:
        while len(results) < max(votes, max_samples):
            results.append(sample(len(results)))
        counts = Counter(results).most_common()
        if len(counts) > 1 and counts[0][1] == counts[1][1]:
            raise GinUnstableError(
                f"no majority among {len(results)} samples at p={I.ring.prime}")
        winner = counts[0][0]
    ok, witness = is_borel_fixed(winner)
    if not ok:
        if agreed:
            raise ComputationError(
                f"unanimous result is not Borel-fixed (witness {witness}); "
                "this is a bug")
        raise GinUnstableError(
            f"majority result is not Borel-fixed (witness {witness})")
    result = GinResult(winner, len(results), seed, agreed)
    _gin_cache[cache_key] = result
    return result


def is_saturated_gin(M: MonomialIdeal) -> bool:
    """Saturation is visible on a gin: no generator touches x_n."""
    return all(g[-1] == 0 for g in M.gens)


# ---------------------------------------------------------------------------
# variety invariants and connectedness

@dataclass(frozen=True)
class VarietyInvariants:
    gin_result: GinResult
    table: InvariantTable
    s_Z: int
    s_Gamma: int


def variety_invariants(I: Ideal, seed=0, votes=2,
                       bounds=None) -> VarietyInvariants:
    """Gin, full invariant table, and the two minimal-degree readings.

    s_Z is the profile s at the zero multi-index; s_Gamma is read from the
    stabilized entry, which matches the generic 2-plane section.  Passing
    ``bounds`` widens (or narrows) the tabulated levels per axis; s_Gamma
    always uses the stabilization bound.
    """
    result = gin(I, seed=seed, votes=votes)
    if not is_saturated_gin(result.gin):
        raise UnsaturatedIdealError(
            "gin has a generator containing the last variable; saturate first")
    table = invariant_table(result.gin, bounds=bounds)
    if bounds is None:
        s_gamma = table.stable_profile.s
    else:
        s_gamma = invariant_table(result.gin).stable_profile.s
    return VarietyInvariants(result, table, table.s_at_zero, s_gamma)


@dataclass(frozen=True)
class ConnectednessReport:
    s_Z: int
    s_Gamma: int
    hypothesis: bool     # s_Z == s_Gamma
    entries: tuple       # (p_hat, profile, connected, violation_index)
    violations: tuple    # (p_hat, index) pairs
    low_levels_ok: bool  # adjacent pairs at indices 0 and 1, all entries

    @property
    def all_connected(self):
        return not self.violations

    def to_json(self):
        return {
            "s_Z": self.s_Z,
            "s_Gamma": self.s_Gamma,
            "hypothesis": self.hypothesis,
            "connected": self.all_connected,
            "low_levels_connected": self.low_levels_ok,
            "violations": [{"p_hat": list(p), "index": i}
                           for p, i in self.violations],
        }


def connectedness_from_table(table: InvariantTable, s_z=None,
                             s_gamma=None) -> ConnectednessReport:
    entries = []
    violations = []
    low_ok = True
    for p_hat, prof in table.entries:
        ok, index = is_connected(prof)
        entries.append((p_hat, prof, ok, index))
        if not ok:
            violations.append((p_hat, index))
        lam = prof.lambdas
        for i in (0, 1):
            if i + 1 < prof.s and not lam[i + 1] + 1 <= lam[i] <= lam[i + 1] + 2:
                low_ok = False
    s_z = table.s_at_zero if s_z is None else s_z
    s_gamma = table.stable_profile.s if s_gamma is None else s_gamma
    return ConnectednessReport(s_z, s_gamma, s_z == s_gamma,
                               tuple(entries), tuple(violations), low_ok)


def check_connectedness(I: Ideal, seed=0, votes=2,
                        bounds=None) -> ConnectednessReport:
    """Connectedness verdict for every profile in the invariant table.

    The adjacent pairs at indices 0 and 1 are reported separately: those
    rows are expected to be connected even when the s_Z == s_Gamma
    hypothesis fails.
    """
    inv = variety_invariants(I, seed=seed, votes=votes, bounds=bounds)
    return connectedness_from_table(inv.table, inv.s_Z, inv.s_Gamma)


# ---------------------------------------------------------------------------
# slicing identity

@dataclass(frozen=True)
class SliceCase:
    form_index: int
    level: int
    equal: bool
    lhs: MonomialIdeal
    rhs: MonomialIdeal


@dataclass(frozen=True)
class SliceIdentityReport:
    cases: tuple
    passed: bool


def verify_slice_identity(I: Ideal, p_max=3, forms=3, seed=0, votes=2,
                          gin_result=None) -> SliceIdentityReport:
    """Compare gin((I : h^p)|_h) against (gin(I) : x_n^p)|_{x_n}.

    The left side runs the analytic pipeline (iterated ideal quotient,
    restriction, then a fresh gin); the right side is pure staircase
    combinatorics on gin(I).  Random general forms h are drawn per trial.
    """
    n = I.ring.nvars - 1
    M = (gin_result or gin(I, seed=seed, votes=votes)).gin
    xn_power = lambda p: tuple(p if i == n else 0 for i in range(I.ring.nvars))
    cases = []
    for trial in range(forms):
        rng = child_rng(seed, "slice-form", trial)
        h = I.ring.general_linear_form(rng)
        quotient = I
        for p in range(p_max + 1):
            if p > 0:
                quotient = ideal_quotient(quotient, h)
            lhs = gin(restrict_ideal(quotient, h), seed=seed, votes=votes).gin
            rhs = restrict_last(colon_by_monomial(M, xn_power(p)))
            cases.append(SliceCase(trial, p, lhs == rhs, lhs, rhs))
    return SliceIdentityReport(tuple(cases), all(c.equal for c in cases))


# ---------------------------------------------------------------------------
# gap truncation

@dataclass(frozen=True)
class GapTruncationReport:
    gaps: tuple
    cases: tuple   # (delta, equal, lhs, rhs)
    vacuous: bool
    passed: bool


def verify_gap_truncation(I: Ideal, seed=0, votes=2,
                          gin_result=None) -> GapTruncationReport:
    """At every internal gap degree, gin of the truncation must equal the
    truncated gin."""
    M = (gin_result or gin(I, seed=seed, votes=votes)).gin
    gaps = gap_degrees(M)
    cases = []
    for delta in gaps:
        lhs = gin(truncate(I, delta, strict=False), seed=seed, votes=votes).gin
        rhs = truncate_monomial(M, delta, strict=False)
        cases.append((delta, lhs == rhs, lhs, rhs))
    return GapTruncationReport(gaps, tuple(cases), not gaps,
                               all(c[1] for c in cases))


# ---------------------------------------------------------------------------
# two-variable gcd

def gcd_two_vars(polys) -> Poly:
    """Monic gcd of homogeneous polynomials in K[x0, x1].

    The common x0^a x1^b factor is tracked separately; the rest is
    dehomogenized at x1 = 1, run through the univariate Euclidean
    algorithm, and rehomogenized.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise ValueError("gcd of an empty or all-zero family")
    ring = polys[0].ring
    if ring.nvars != 2:
        raise ValueError("gcd_two_vars needs polynomials in two variables")
    p = ring.prime
    a = min(min(m[0] for m, _ in f.terms) for f in polys)
    b = min(min(m[1] for m, _ in f.terms) for f in polys)

    def dehomogenize(f):
        # coefficient list in x0, lowest degree first; x1 is set to 1
        e0 = min(m[0] for m, _ in f.terms)
        coeffs = [0] * (max(m[0] for m, _ in f.terms) - e0 + 1)
        for m, c in f.terms:
            coeffs[m[0] - e0] = c
        return coeffs

    g = dehomogenize(polys[0])
    for f in polys[1:]:
        g = _poly_gcd_univariate(g, dehomogenize(f), p)
        if len(g) == 1:
            break
    deg = len(g) - 1
    inv = pow(g[deg], p - 2, p)
    acc = {(k + a, deg - k + b): (c * inv) % p for k, c in enumerate(g) if c % p}
    return ring.from_dict(acc)


def _poly_gcd_univariate(f, g, p):
    """Euclid on coefficient lists over F_p, lowest degree first."""
    def trim(h):
        while h and h[-1] % p == 0:
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    while g:
        inv = pow(g[-1], p - 2, p)
        while len(f) >= len(g):
            factor = (f[-1] * inv) % p
            shift = len(f) - len(g)
            for i, c in enumerate(g):
                f[i + shift] = (f[i + shift] - factor * c) % p
            trim(f)
            if not f:
                break
        f, g = g, f
    return f if f else [0]


# ---------------------------------------------------------------------------
# quotient-restriction trace

@dataclass(frozen=True)
class TraceResult:
    levels: tuple                 # colon exponents, one per axis x2..x_{n-1}
    slice_gin: MonomialIdeal      # combinatorial side, in K[x0, x1]
    analytic_gin: MonomialIdeal   # gin of the iterated quotient-restriction
    step1_ok: bool                # the two sides agree
    delta: int
    delta_is_internal_gap: bool
    gcd_degree: int
    expected_gcd_degree: int      # min x0-exponent among <=delta generators
    step2_ok: bool
    specialization_degrees: tuple
    consistent: bool              # all specializations found the same degree

    @property
    def passed(self):
        return self.step1_ok and self.step2_ok and self.consistent

    def to_json(self):
        return {
            "levels": list(self.levels),
            "delta": self.delta,
            "delta_is_internal_gap": self.delta_is_internal_gap,
            "gcd_degree": self.gcd_degree,
            "expected_gcd_degree": self.expected_gcd_degree,
            "step1": self.step1_ok,
            "step2": self.step2_ok,
            "consistent": self.consistent,
            "passed": self.passed,
        }


def _iterated_restriction(I: Ideal, levels, seed, label):
    """((I|_h : l^levels[-1])|_l : ...)|_..., down to K[x0, x1]."""
    rng = child_rng(seed, "trace-form", label)
    current = restrict_ideal(I, I.ring.general_linear_form(rng))
    for step, level in enumerate(reversed(levels)):
        rng = child_rng(seed, "trace-form", label, step)
        form = current.ring.general_linear_form(rng)
        current = restrict_ideal(quotient_by_power(current, form, level), form)
    return current


def run_trace(I: Ideal, levels, seed=0, votes=2, gin_result=None,
              specializations=3) -> TraceResult:
    """Reproduce the computable steps of the connectedness argument.

    The ideal is restricted once per ambient axis above x1, with a colon
    at the requested level before each restriction after the first; the
    result lives in K[x0, x1].  Its gin must equal the same iterated slice
    of gin(I) (step 1), and the gcd of its generators up to the chosen gap
    degree must have degree equal to the least x0-exponent on the
    staircase there (step 2).  The gcd degree is recomputed at independent
    random specializations of the forms and must not vary.
    """
    n = I.ring.nvars - 1
    if n < 3:
        raise ValueError("trace needs ambient projective dimension >= 3")
    levels = tuple(levels)
    if len(levels) != n - 2:
        raise ValueError(f"need one level per axis x2..x{n - 1}")
    if any(l < 0 for l in levels):
        raise ValueError("levels must be non-negative")

    M = (gin_result or gin(I, seed=seed, votes=votes)).gin
    combinatorial = restrict_last(M)
    for axis in range(n - 1, 1, -1):
        combinatorial = slice_level(combinatorial, axis, levels[axis - 2])

    J = _iterated_restriction(I, levels, seed, 0)
    if J.is_zero():
        raise DegenerateTraceError("iterated restriction collapsed to zero")
    analytic = gin(J, seed=seed, votes=votes).gin
    step1_ok = analytic == combinatorial

    internal = gap_degrees(analytic)
    if internal:
        delta = max(internal)
        is_gap = True
    else:
        delta = analytic.max_degree() + 1
        is_gap = False

    def gcd_degree_of(J_spec):
        gens = truncate(J_spec, delta, strict=False).gens
        if not gens:
            raise DegenerateTraceError("no generators up to the gap degree")
        return gcd_two_vars(gens).degree

    degrees = [gcd_degree_of(J)]
    for k in range(1, specializations):
        degrees.append(gcd_degree_of(_iterated_restriction(I, levels, seed, k)))
    consistent = all(d == degrees[0] for d in degrees)

    eligible = [g for g in analytic.gens if mono_degree(g) <= delta]
    expected = min(g[0] for g in eligible) if eligible else 0
    step2_ok = degrees[0] == expected

    return TraceResult(levels, combinatorial, analytic, step1_ok, delta,
                       is_gap, degrees[0], expected, step2_ok,
                       tuple(degrees), consistent)


# ---------------------------------------------------------------------------
# section quotients (I|_h : m^k) for all k up to saturation

def _colon_by_irrelevant(I: Ideal) -> Ideal:
    """(I : m) for the irrelevant maximal ideal, as the meet of the colons."""
    result = None
    for i in range(I.ring.nvars):
        q = ideal_quotient(I, I.ring.variable(i))
        result = q if result is None else intersect(result, q)
    return result


def check_section_quotients(I: Ideal, seed=0, votes=2):
    """Connectedness of the invariants of (I|_h : m^k) for every k.

    The chain runs until the saturation fixed point.  These ideals are not
    saturated in general, so their profiles are read with the last-axis
    exponent participating in the multi-index.
    """
    rng = child_rng(seed, "section-form")
    current = restrict_ideal(I, I.ring.general_linear_form(rng))
    reports = []
    k = 0
    while True:
        M = gin(current, seed=seed, votes=votes).gin
        axes = tuple(range(2, M.nvars))
        bounds = tuple(M.max_exponent(j) + 1 for j in axes)
        verdicts = []
        for p_tilde in itertools.product(*(range(b + 1) for b in bounds)):
            prof = profile_at(M, p_tilde)
            ok, index = is_connected(prof)
            verdicts.append((p_tilde, prof, ok, index))
        reports.append((k, M, tuple(verdicts),
                        all(v[2] for v in verdicts)))
        step = _colon_by_irrelevant(current)
        if step.same_ideal(current):
            break
        current = step
        k += 1
    return reports
