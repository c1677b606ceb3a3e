"""Exact coefficient arithmetic and prime-field linear algebra.

Coefficients throughout the library live in a Laurent polynomial ring over
the integers with a fixed tuple of invertible variables (q, the cyclotomic
parameters Q0..Q{r-1}, and eta variables on the Lie side).  Polynomials are
sparse dicts mapping dense exponent tuples to nonzero integer coefficients.

Rank and dimension statements are certified by evaluating at random points
of a large prime field: a rank that agrees at three independently drawn
points is accepted as the generic rank.  Identity statements never go
through specialization; they are checked exactly in the ring.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = (1 << 61) - 1  # Mersenne prime near 2^61
SMALL_PRIME = 33554allow = None  # replaced below
SMALL_PRIME = 33546239  # prime below 2^25; int64-safe matrix products up to dim ~4000


class PolyRing:
    """Laurent polynomial ring ZZ[v^{+-1} for v in names]."""

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        self.index = {v: i for i, v in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self._zero_exp = (0,) * self.nvars
        self.zero = ParamPoly(self, {})
        self.one = ParamPoly(self, {self._zero_exp: 1})

    def gen(self, name: str, power: int = 1) -> ParamPoly:
        exp = [0] * self.nvars
        exp[self.index[name]] = power
        return ParamPoly(self, {tuple(exp): 1})

    def const(self, c: int) -> ParamPoly:
        if c == 0:
            return self.zero
        return ParamPoly(self, {self._zero_exp: int(c)})

    def monomial(self, exps: dict[str, int], coeff: int = 1) -> ParamPoly:
        if coeff == 0:
            return self.zero
        exp = [0] * self.nvars
        for v, e in exps.items():
            exp[self.index[v]] = e
        return ParamPoly(self, {tuple(exp): int(coeff)})

    def __repr__(self) -> str:
        return f"PolyRing({self.names})"


class ParamPoly:
    """Sparse Laurent polynomial with integer coefficients.

    Immutable by convention: no method mutates ``terms`` after construction,
    so values can be shared freely across threads and caches.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[tuple[int, ...], int]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.const(other)
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            other = self.ring.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ParamPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "ParamPoly":
        return (-self) + other

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            return ParamPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return ParamPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "ParamPoly":
        """Inverse of a unit, i.e. a single monomial with coefficient +-1."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in a Laurent ring over ZZ")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError(f"coefficient {c} is not invertible over ZZ")
        return ParamPoly(self.ring, {tuple(-x for x in e): c})

    def evaluate(self, point: "SpecializationPoint") -> int:
        """Image under the ring homomorphism sending each variable to its residue."""
        p = point.prime
        vals = [point.values[v] for v in self.ring.names]
        total = 0
        for e, c in self.terms.items():
            t = c % p
            for v, k in zip(vals, e):
                if k:
                    t = t * pow(v, k, p) % p
            total = (total + t) % p
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.ring.names, e)
                if k
            )
            bits.append(f"{c}" if not mono else (f"{c}*{mono}" if c != 1 else mono))
        return " + ".join(bits)


@dataclass(frozen=True)
class Frac:
    """Fraction of two ring elements, compared by cross multiplication.

    No gcd reduction is attempted; denominators in this library are short
    products of quantum integers, so blowup is bounded by construction.
    """

    num: ParamPoly
    den: ParamPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @staticmethod
    def of(p: ParamPoly) -> "Frac":
        return Frac(p, p.ring.one)

    def __add__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "Frac") -> "Frac":
        return Frac(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        return (self.num * other.den) == (other.num * self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()


def q_int(ring: PolyRing, a: int, qname: str = "q") -> ParamPoly:
    """Balanced quantum integer [a] = (q^a - q^-a)/(q - q^-1) as a Laurent polynomial."""
    if a == 0:
        return ring.zero
    if a < 0:
        return -q_int(ring, -a, qname)
    qi = ring.index[qname]
    terms: dict[tuple[int, ...], int] = {}
    for j in range(a):
        e = [0] * ring.nvars
        e[qi] = a - 1 - 2 * j
        terms[tuple(e)] = 1
    return ParamPoly(ring, terms)


def q_binom(ring: PolyRing, a: int, t: int, qname: str = "q") -> ParamPoly:
    """Balanced Gaussian binomial [a; t] = prod_{s=1..t} [a-s+1]/[s].

    Defined for any integer a and t >= 0; the result is always a Laurent
    polynomial in q.  Negative tops reduce by [-a; t] = (-1)^t [t+a-1; t].
    """
    if t < 0:
        raise ValueError("lower index must be nonnegative")
    if t == 0:
        return ring.one
    if a < 0:
        val = q_binom(ring, t - a - 1, t, qname)
        return -val if t % 2 else val
    if t > a:
        return ring.zero
    q = ring.gen(qname)
    qi = q.inverse()
    # Pascal recursion [n; k] = q^k [n-1; k] + q^{k-n} [n-1; k-1].
    row = [ring.one]
    for n in range(1, a + 1):
        new = [ring.one]
        for k in range(1, min(n, t) + 1):
            left = (q ** k) * row[k] if k < len(row) else ring.zero
            right = (qi ** (n - k)) * row[k - 1]
            new.append(left + right)
        row = new
    return row[t]


# ---------------------------------------------------------------------------
# specialization points


@dataclass(frozen=True)
class SpecializationPoint:
    """Random evaluation point of the parameter ring into F_p.

    Every variable gets a nonzero residue.  Draws are rejected until q avoids
    small multiplicative orders and the Q values stay off the q-power orbits
    of each other, so generic-rank computations are not accidentally
    degenerate.
    """

    prime: int
    values: dict[str, int]
    seed: int

    def __post_init__(self):
        for v, x in self.values.items():
            if x % self.prime == 0:
                raise ValueError(f"parameter {v} specializes to zero")


def _generic_enough(vals: dict[str, int], p: int, order_bound: int = 64) -> bool:
    q = vals.get("q")
    if q is not None and q * q % p == 1:
        return False
    qnames = sorted(v for v in vals if v.startswith("Q"))
    for i, a in enumerate(qnames):
        if any(vals[a] == vals[b] for b in qnames[i + 1:]):
            return False
    if p < (1 << 20):
        # tiny fields are for toy tests only; orbit avoidance is unsatisfiable there
        return True
    if q is not None:
        t = q * q % p
        acc = 1
        for _ in range(order_bound):
            acc = acc * t % p
            if acc == 1:
                return False
        for i, a in enumerate(qnames):
            for b in qnames[i + 1:]:
                ratio = vals[a] * pow(vals[b], -1, p) % p
                acc = pow(t, -order_bound, p)
                for _ in range(2 * order_bound + 1):
                    if acc == ratio:
                        return False
                    acc = acc * t % p
    return True


def draw_spec_points(
    names: Sequence[str],
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    count: int = 3,
) -> list[SpecializationPoint]:
    """Draw ``count`` independent generic points, deterministically from the seed."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        vals = {v: rng.randrange(1, prime) for v in names}
        if _generic_enough(vals, prime):
            points.append(SpecializationPoint(prime, vals, seed))
    return points


# ---------------------------------------------------------------------------
# prime-field linear algebra

Vec = list


def vec_scale(v: Vec, c: int, p: int) -> Vec:
    return [c * x % p for x in v]


def vec_sub_scaled(v: Vec, w: Vec, c: int, p: int) -> Vec:
    return [(a - c * b) % p for a, b in zip(v, w)]


class PrimeMatrix:
    """Dense matrix over F_p with Gaussian elimination utilities."""

    def __init__(self, rows: Iterable[Sequence[int]], p: int):
        self.p = p
        self.rows = [[x % p for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self._rref: list[Vec] | None = None
        self._pivots: list[int] | None = None

    def _eliminate(self):
        if self._rref is not None:
            return
        p = self.p
        rows = [row[:] for row in self.rows]
        pivots: list[int] = []
        rank = 0
        for col in range(self.ncols):
            pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = pow(rows[rank][col], -1, p)
            rows[rank] = vec_scale(rows[rank], inv, p)
            for i in range(len(rows)):
                if i != rank and rows[i][col]:
                    rows[i] = vec_sub_scaled(rows[i], rows[rank], rows[i][col], p)
            pivots.append(col)
            rank += 1
        self._rref = rows[:rank]
        self._pivots = pivots

    def rank(self) -> int:
        self._eliminate()
        return len(self._pivots)

    def nullspace(self) -> list[Vec]:
        """Basis of the right nullspace {x : M x = 0}."""
        self._eliminate()
        p = self.p
        pivots = self._pivots
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            x = [0] * self.ncols
            x[j] = 1
            for i, col in enumerate(pivots):
                x[col] = (-self._rref[i][j]) % p
            basis.append(x)
        return basis

    def solve(self, b: Sequence[int]) -> Vec | None:
        """One solution of M x = b, or None when b is outside the column space."""
        p = self.p
        aug = PrimeMatrix([list(row) + [bi % p] for row, bi in zip(self.rows, b)], p)
        aug._eliminate()
        x = [0] * self.ncols
        for row, col in zip(aug._rref, aug._pivots):
            if col == self.ncols:
                return None
            x[col] = row[-1]
        return x


class IncrementalSpan:
    """Row space accumulator: reduced echelon rows added one vector at a time."""

    def __init__(self, p: int):
        self.p = p
        self.rows: list[Vec] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence[int]) -> Vec:
        p = self.p
        v = [x % p for x in v]
        for row, col in zip(self.rows, self.pivots):
            if v[col]:
                v = vec_sub_scaled(v, row, v[col], p)
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Insert v; returns True when it enlarges the span."""
        v = self.reduce(v)
        col = next((j for j, x in enumerate(v) if x), None)
        if col is None:
            return False
        inv = pow(v[col], -1, self.p)
        v = vec_scale(v, inv, self.p)
        for i, row in enumerate(self.rows):
            if row[col]:
                self.rows[i] = vec_sub_scaled(row, v, row[col], self.p)
        self.rows.append(v)
        self.pivots.append(col)
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)


class CoordinateSolver:
    """Express vectors in a fixed spanning list, over F_p.

    Built from the list of coordinate vectors of a module basis; ``solve``
    then writes any vector of the span in that basis and raises if the
    vector falls outside (which would contradict closure of the module).
    """

    def __init__(self, basis_vectors: Sequence[Sequence[int]], p: int):
        self.p = p
        self.dim = len(basis_vectors)
        self.rows: list[tuple[int, Vec, Vec]] = []  # (pivot, reduced vec, expression)
        for i, v in enumerate(basis_vectors):
            expr = [0] * self.dim
            expr[i] = 1
            v = [x % p for x in v]
            for col, row, rexpr in self.rows:
                if v[col]:
                    c = v[col]
                    v = vec_sub_scaled(v, row, c, p)
                    expr = vec_sub_scaled(expr, rexpr, c, p)
            col = next((j for j, x in enumerate(v) if x), None)
            if col is None:
                raise ValueError("basis vectors are linearly dependent")
            inv = pow(v[col], -1, p)
            self.rows.append((col, vec_scale(v, inv, p), vec_scale(expr, inv, p)))

    def solve(self, v: Sequence[int]) -> Vec:
        p = self.p
        v = [x % p for x in v]
        coeffs = [0] * self.dim
        for col, row, expr in self.rows:
            if v[col]:
                c = v[col]
                v = vec_sub_scaled(v, row, c, p)
                coeffs = [(a + c * b) % p for a, b in zip(coeffs, expr)]
        if any(v):
            raise ValueError("vector outside the span of the basis")
        return coeffs


def mat_mul(a: Sequence[Vec], b: Sequence[Vec], p: int) -> list[Vec]:
    """Product of dense row-major matrices over F_p."""
    if not a or not b:
        return []
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def mat_vec(a: Sequence[Vec], v: Sequence[int], p: int) -> Vec:
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]


def identity_matrix(n: int) -> list[Vec]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
