"""Constructors and data files for the varieties that exercise the checks.

Entries live in ``data/*.ideal``: a small header (name, ambient dimension,
prime, generation seed, tags), the generator polynomials one per line, and
an optional block of expected values produced by the oracle regeneration
pass.  Random entries are seed-pinned; ``scripts/regenerate_corpus.py`` is
the explicit maintenance command that rebuilds them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .ring import PolyRing, count_monomials, DEFAULT_PRIME
from .groebner import Ideal, hilbert_function, initial_ideal, intersect
from .gin import child_rng
from .parsing import parse_polynomial, render_poly


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    n: int                    # ambient projective dimension
    prime: int
    seed: int
    gens: tuple
    tags: frozenset = field(default_factory=frozenset)
    expect: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.gens[0].ring

    def ideal(self):
        return Ideal(self.ring, self.gens)


# ---------------------------------------------------------------------------
# explicit varieties

def twisted_cubic(prime=DEFAULT_PRIME) -> Ideal:
    """The three 2x2 minors cutting out the twisted cubic curve in P^3."""
    ring = PolyRing(4, prime)
    gens = [parse_polynomial(s, ring) for s in
            ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")]
    return Ideal(ring, gens)


def rational_quartic(prime=DEFAULT_PRIME) -> Ideal:
    """The smooth rational quartic curve (s^4, s^3 t, s t^3, t^4) in P^3."""
    ring = PolyRing(4, prime)
    gens = [parse_polynomial(s, ring) for s in
            ("x1*x2 - x0*x3", "x1^3 - x0^2*x2",
             "x2^3 - x1*x3^2", "x0*x2^2 - x1^2*x3")]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# random varieties (seed-pinned when written to data files)

def point_ideal(ring, point) -> Ideal:
    """The saturated ideal of a single projective point."""
    p = ring.prime
    k = max(i for i, c in enumerate(point) if c % p)
    gens = []
    for i in range(ring.nvars):
        if i == k:
            continue
        coeffs = [0] * ring.nvars
        coeffs[i] = point[k] % p
        coeffs[k] = (-point[i]) % p
        gens.append(ring.linear_form(coeffs))
    return Ideal(ring, gens)


def _canonical_point(pt, p):
    k = next(i for i, c in enumerate(pt) if c % p)
    inv = pow(pt[k], p - 2, p)
    return tuple((c * inv) % p for c in pt)


def general_points(N, seed, prime=DEFAULT_PRIME) -> Ideal:
    """Intersection of the ideals of N uniformly random points in P^2.

    Coincident draws are rejected; the result is saturated by
    construction.
    """
    if N < 1:
        raise ValueError("need at least one point")
    if N > prime * prime + prime + 1:
        raise ValueError("more points requested than the plane holds")
    ring = PolyRing(3, prime)
    rng = child_rng(seed, "general-points", N)
    points = []
    seen = set()
    while len(points) < N:
        pt = tuple(rng.randrange(prime) for _ in range(3))
        if not any(pt):
            continue
        canon = _canonical_point(pt, prime)
        if canon in seen:
            continue
        seen.add(canon)
        points.append(canon)
    I = point_ideal(ring, points[0])
    for pt in points[1:]:
        I = intersect(I, point_ideal(ring, pt))
    return I


def collinear_points(N, seed, prime=DEFAULT_PRIME) -> Ideal:
    """N distinct random points on a random line in P^2.

    Degenerate on purpose: the generic initial ideal picks up a linear
    generator and internal gap degrees, which the truncation checks need.
    """
    if N < 2:
        raise ValueError("need at least two points for a collinear family")
    if N > prime + 1:
        raise ValueError("more points requested than the line holds")
    ring = PolyRing(3, prime)
    rng = child_rng(seed, "collinear-points", N)
    # a line through two random points, then N points on it
    while True:
        a = tuple(rng.randrange(prime) for _ in range(3))
        b = tuple(rng.randrange(prime) for _ in range(3))
        if any(a) and any(b) and _canonical_point(a, prime) != _canonical_point(b, prime):
            break
    points = []
    seen = set()
    while len(points) < N:
        t = rng.randrange(prime + 1)
        if t == prime:
            pt = b
        else:
            pt = tuple((x + t * y) % prime for x, y in zip(a, b))
        if not any(pt):
            continue
        canon = _canonical_point(pt, prime)
        if canon in seen:
            continue
        seen.add(canon)
        points.append(canon)
    I = point_ideal(ring, points[0])
    for pt in points[1:]:
        I = intersect(I, point_ideal(ring, pt))
    return I


def _koszul_dims(n, a, b, dmax):
    """Quotient dimensions of a regular sequence of degrees a, b in P^n."""
    def rdim(d):
        return count_monomials(n + 1, d) if d >= 0 else 0
    return [rdim(d) - rdim(d - a) - rdim(d - b) + rdim(d - a - b)
            for d in range(dmax + 1)]


def complete_intersection(a, b, n, seed, prime=DEFAULT_PRIME) -> Ideal:
    """Two dense random forms of degrees a <= b in P^n.

    Degenerate pairs are detected by comparing the quotient Hilbert
    function against the Koszul pattern and resampled.
    """
    if not 2 <= a <= b:
        raise ValueError("need 2 <= a <= b")
    if n < 3:
        raise ValueError("need ambient dimension at least 3")
    ring = PolyRing(n + 1, prime)
    dmax = a + b + 1
    expected = _koszul_dims(n, a, b, dmax)
    for attempt in range(20):
        rng = child_rng(seed, "ci", a, b, n, attempt)
        I = Ideal(ring, [ring.random_form(a, rng), ring.random_form(b, rng)])
        actual = list(hilbert_function(initial_ideal(I), dmax))
        if actual == expected:
            return I
    raise RuntimeError("no regular sequence found; seed exhausted")


def determinantal_from_matrix(rows) -> Ideal:
    """The three 2x2 minors of a 2x3 matrix of linear forms."""
    if len(rows) != 2 or any(len(r) != 3 for r in rows):
        raise ValueError("need a 2x3 matrix")
    top, bottom = rows
    ring = top[0].ring
    minors = [top[i] * bottom[j] - top[j] * bottom[i]
              for i, j in ((0, 1), (0, 2), (1, 2))]
    return Ideal(ring, minors)


def _eagon_northcott_dims(n, dmax):
    """Quotient dimensions of a generic 2x3 linear determinantal in P^n."""
    def rdim(d):
        return count_monomials(n + 1, d) if d >= 0 else 0
    return [rdim(d) - 3 * rdim(d - 2) + 2 * rdim(d - 3) for d in range(dmax + 1)]


def determinantal(n, seed, prime=DEFAULT_PRIME) -> Ideal:
    """Minors of a random 2x3 matrix of linear forms in P^n.

    Degenerate matrices (shared factors among the minors) are detected by
    the Hilbert function against the Eagon-Northcott pattern and
    resampled.
    """
    if n < 3:
        raise ValueError("need ambient dimension at least 3")
    ring = PolyRing(n + 1, prime)
    dmax = 5
    expected = _eagon_northcott_dims(n, dmax)
    for attempt in range(20):
        rng = child_rng(seed, "determinantal", n, attempt)
        rows = [[ring.random_form(1, rng) for _ in range(3)] for _ in range(2)]
        I = determinantal_from_matrix(rows)
        actual = list(hilbert_function(initial_ideal(I), dmax))
        if actual == expected:
            return I
    raise RuntimeError("no nondegenerate matrix found; seed exhausted")


# ---------------------------------------------------------------------------
# entry files

def parse_entry(text, name="entry") -> CorpusEntry:
    from .parsing import ParseError

    header = {}
    gens_lines = []
    expect = {}
    section = "header"
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "gens:":
            section = "gens"
            continue
        if line == "expect:":
            section = "expect"
            continue
        if section == "header":
            key, _, value = line.partition(":")
            header[key.strip()] = value.strip()
        elif section == "gens":
            gens_lines.append(line)
        else:
            key, _, value = line.partition(":")
            expect[key.strip()] = value.strip()
    try:
        n = int(header["n"])
        prime = int(header.get("prime", DEFAULT_PRIME))
        seed = int(header.get("seed", 0))
    except KeyError as exc:
        raise ParseError(f"entry {name!r} is missing the {exc.args[0]}: header")
    except ValueError:
        raise ParseError(f"entry {name!r} has a non-integer header value")
    tags = frozenset(t.strip() for t in header.get("tags", "").split(",") if t.strip())
    ring = PolyRing(n + 1, prime)
    gens = tuple(parse_polynomial(line, ring) for line in gens_lines)
    if not gens:
        raise ParseError(f"entry {name!r} has no generators")
    return CorpusEntry(header.get("name", name), n, prime, seed, gens, tags, expect)


def render_entry(entry: CorpusEntry, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"name: {entry.name}", f"n: {entry.n}",
              f"prime: {entry.prime}", f"seed: {entry.seed}"]
    if entry.tags:
        lines.append("tags: " + ", ".join(sorted(entry.tags)))
    lines.append("gens:")
    lines.extend(render_poly(g) for g in entry.gens)
    if entry.expect:
        lines.append("expect:")
        lines.extend(f"{k}: {v}" for k, v in entry.expect.items())
    return "\n".join(lines) + "\n"


def load_entry_file(path) -> CorpusEntry:
    from pathlib import Path
    path = Path(path)
    return parse_entry(path.read_text(), name=path.stem)


def builtin_entries() -> tuple:
    """The packaged corpus, sorted by name."""
    entries = []
    root = resources.files("gintools").joinpath("data")
    for item in sorted(root.iterdir(), key=lambda p: p.name):
        if item.name.endswith(".ideal"):
            entries.append(parse_entry(item.read_text(), name=item.name[:-6]))
    return tuple(entries)


BUILDERS = {
    "twisted-cubic": lambda seed, prime: twisted_cubic(prime),
    "rational-quartic": lambda seed, prime: rational_quartic(prime),
    "points-3": lambda seed, prime: general_points(3, seed, prime),
    "points-5": lambda seed, prime: general_points(5, seed, prime),
    "points-4-collinear": lambda seed, prime: collinear_points(4, seed, prime),
    "elliptic-quartic": lambda seed, prime: complete_intersection(2, 2, 3, seed, prime),
    "genus4-ci": lambda seed, prime: complete_intersection(2, 3, 3, seed, prime),
    "genus10-ci": lambda seed, prime: complete_intersection(3, 3, 3, seed, prime),
    "ci-surface": lambda seed, prime: complete_intersection(2, 2, 4, seed, prime),
    "scroll-surface": lambda seed, prime: determinantal(4, seed, prime),
}
