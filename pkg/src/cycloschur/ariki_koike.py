"""Normal-form engine for the cyclotomic Hecke algebra H_{n,r}.

Elements are exact linear combinations of the monomial basis
L_1^{k_1} ... L_n^{k_n} T_w with 0 <= k_i <= r-1 and w in S_n, where
T_0, ..., T_{n-1} satisfy

    (T_0 - Q_0)(T_0 - Q_1)...(T_0 - Q_{r-1}) = 0,
    (T_i - q)(T_i + q^{-1}) = 0,
    T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0,   braid and commuting relations,

and L_j = T_{j-1}...T_1 T_0 T_1...T_{j-1} are the pairwise commuting
Jucys-Murphy style elements.

Left multiplication by a generator is closed on the basis: T_0 raises the
L_1 exponent (reducing L_1^r by the degree-r polynomial satisfied by T_0),
and T_i exchanges the (L_i, L_{i+1}) exponent pair with corrections whose
exponents never exceed the larger of the pair, then folds into T_w by the
quadratic relation.  General products expand the left factor into its
canonical generator word and apply those moves, so every computed element
is automatically in normal form.

Set ``q_one=True`` to instantiate the same algebra with q specialized to 1;
all rewriting rules hold verbatim and nothing here divides by q - q^{-1}.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from .combinat import (
    MultiComposition,
    Perm,
    all_perms,
    compose,
    identity_perm,
    inverse_perm,
    multicompositions,
    parabolic_subgroup,
    perm_length,
    profile,
    reduced_word,
    s_perm,
)
from .params import ParamPoly, PolyRing, SpecializationPoint


class AKElement:
    """Sparse combination of basis monomials, coefficients in the parameter ring."""

    __slots__ = ("engine", "terms")

    def __init__(self, engine: "AKEngine", terms: dict):
        self.engine = engine
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, AKElement) and self.terms == other.terms

    def __add__(self, other: "AKElement") -> "AKElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return AKElement(self.engine, out)

    def __sub__(self, other: "AKElement") -> "AKElement":
        return self + (-other)

    def __neg__(self) -> "AKElement":
        return AKElement(self.engine, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "AKElement":
        c = self.engine.scalar(c)
        if c.is_zero():
            return self.engine.zero()
        return AKElement(self.engine, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, ParamPoly)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, AKElement):
            return self.engine.multiply(self, other)
        return self.scale(other)

    def support(self):
        return set(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "AK(0)"
        bits = []
        for (k, w), c in sorted(self.terms.items()):
            mono = "".join(f"L{j + 1}^{e}" for j, e in enumerate(k) if e)
            mono += f"T{w}" if w != tuple(range(len(w))) else ""
            bits.append(f"({c})*{mono or '1'}")
        return "AK(" + " + ".join(bits) + ")"


class AKEngine:
    """Arithmetic context for H_{n,r} over a chosen parameter ring."""

    def __init__(self, n: int, r: int, ring: PolyRing | None = None,
                 q_one: bool = False, extra_vars: Sequence[str] = ()):
        if n < 1 or r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        self.n = n
        self.r = r
        self.q_one = q_one
        if ring is None:
            names = () if q_one else ("q",)
            names += tuple(f"Q{k}" for k in range(r)) + tuple(extra_vars)
            ring = PolyRing(names)
        self.ring = ring
        self.q = ring.one if q_one else ring.gen("q")
        self.qi = ring.one if q_one else ring.gen("q", -1)
        self.qd = self.q - self.qi  # q - q^{-1}, zero at q = 1
        self.Q = [ring.gen(f"Q{k}") for k in range(r)]
        # L_1^r = sum_j cyc[j-1] * L_1^{r-j}, from the degree-r relation on T_0
        elem_sym = self._elementary_symmetric()
        self._cyc = [(-1) ** (j - 1) * elem_sym[j] for j in range(1, r + 1)]
        self._e_sym = elem_sym
        self._id = identity_perm(n)
        self._s = {i: s_perm(n, i) for i in range(1, n)}
        self._len_cache: dict[Perm, int] = {}
        self._m_mu_cache: dict[MultiComposition, AKElement] = {}
        self._labels: list[tuple[tuple[int, ...], Perm]] | None = None
        self._label_index: dict | None = None
        self._right_t0: dict | None = None

    def _elementary_symmetric(self) -> list[ParamPoly]:
        e = [self.ring.one]
        for qk in self.Q:
            e = [self.ring.one] + [
                (e[j] if j < len(e) else self.ring.zero)
                + qk * e[j - 1]
                for j in range(1, len(e) + 1)
            ]
        return e

    # -- scalars -----------------------------------------------------------

    def scalar(self, c) -> ParamPoly:
        if isinstance(c, ParamPoly):
            return c
        return self.ring.const(c)

    def q_pow(self, e: int) -> ParamPoly:
        if self.q_one:
            return self.ring.one
        return self.ring.gen("q", e)

    def length(self, w: Perm) -> int:
        ell = self._len_cache.get(w)
        if ell is None:
            ell = perm_length(w)
            self._len_cache[w] = ell
        return ell

    # -- elements ----------------------------------------------------------

    def zero(self) -> AKElement:
        return AKElement(self, {})

    def one(self) -> AKElement:
        return AKElement(self, {((0,) * self.n, self._id): self.ring.one})

    def elem_basis(self, k: Sequence[int], w: Perm) -> AKElement:
        k = tuple(k)
        if len(k) != self.n or any(not 0 <= x < self.r for x in k):
            raise ValueError("exponent vector outside basis range")
        return AKElement(self, {(k, tuple(w)): self.ring.one})

    def basis_labels(self) -> list[tuple[tuple[int, ...], Perm]]:
        if self._labels is None:
            self._labels = [
                (k, w)
                for k in itertools.product(range(self.r), repeat=self.n)
                for w in all_perms(self.n)
            ]
            self._label_index = {lab: i for i, lab in enumerate(self._labels)}
        return self._labels

    @property
    def dim(self) -> int:
        return (self.r ** self.n) * len(all_perms(self.n))

    def coords(self, v: AKElement, pt: SpecializationPoint) -> list[int]:
        self.basis_labels()
        out = [0] * len(self._labels)
        for key, c in v.terms.items():
            out[self._label_index[key]] = c.evaluate(pt)
        return out

    # -- generator moves ---------------------------------------------------

    def _acc(self, out: dict, key, c: ParamPoly):
        s = out.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    def _fold_left(self, out: dict, k, w: Perm, i: int, c: ParamPoly):
        """Accumulate T_i * (L^k T_w) once exponents are already exchanged."""
        sw = compose(self._s[i], w)
        if self.length(sw) > self.length(w):
            self._acc(out, (k, sw), c)
        else:
            self._acc(out, (k, sw), c)
            if not self.qd.is_zero():
                self._acc(out, (k, w), c * self.qd)

    def leftmul_T(self, i: int, v: AKElement) -> AKElement:
        """T_i * v for 1 <= i <= n-1, in normal form."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"T_{i} is not a generator here")
        out: dict = {}
        qd = self.qd
        for (k, w), c in v.terms.items():
            a, b = k[i - 1], k[i]
            if a == b:
                self._fold_left(out, k, w, i, c)
                continue
            swapped = list(k)
            swapped[i - 1], swapped[i] = b, a
            self._fold_left(out, tuple(swapped), w, i, c)
            if qd.is_zero():
                continue
            cq = c * qd
            if a > b:
                for s in range(1, a - b + 1):
                    ks = list(k)
                    ks[i - 1], ks[i] = a - s, b + s
                    self._acc(out, (tuple(ks), w), -cq)
            else:
                for s in range(1, b - a + 1):
                    ks = list(k)
                    ks[i - 1], ks[i] = b - s, a + s
                    self._acc(out, (tuple(ks), w), cq)
        return AKElement(self, out)

    def leftmul_T0(self, v: AKElement) -> AKElement:
        """T_0 * v = L_1 * v, reducing L_1^r by the cyclotomic relation."""
        out: dict = {}
        r = self.r
        for (k, w), c in v.terms.items():
            if k[0] + 1 < r:
                self._acc(out, ((k[0] + 1,) + k[1:], w), c)
            else:
                for j in range(1, r + 1):
                    self._acc(out, ((r - j,) + k[1:], w), c * self._cyc[j - 1])
        return AKElement(self, out)

    def leftmul_gen(self, g: int, v: AKElement) -> AKElement:
        return self.leftmul_T0(v) if g == 0 else self.leftmul_T(g, v)

    def leftmul_T_inv(self, i: int, v: AKElement) -> AKElement:
        # T_i^{-1} = T_i - (q - q^{-1})
        out = self.leftmul_T(i, v)
        if self.qd.is_zero():
            return out
        return out - v.scale(self.qd)

    def leftmul_T0_inv(self, v: AKElement) -> AKElement:
        # T_0^{-1} = (-1)^{r-1} e_r^{-1} (T_0^{r-1} - e_1 T_0^{r-2} + ... )
        powers = [v]
        for _ in range(self.r - 1):
            powers.append(self.leftmul_T0(powers[-1]))
        acc = self.zero()
        for j in range(self.r):
            acc = acc + powers[self.r - 1 - j].scale((-1) ** j * self._e_sym[j])
        unit = ((-1) ** (self.r - 1) * self._e_sym[self.r]).inverse()
        return acc.scale(unit)

    def rightmul_T(self, i: int, v: AKElement) -> AKElement:
        """v * T_i for 1 <= i <= n-1: a cheap fold on the T_w side."""
        out: dict = {}
        for (k, w), c in v.terms.items():
            ws = compose(w, self._s[i])
            if self.length(ws) > self.length(w):
                self._acc(out, (k, ws), c)
            else:
                self._acc(out, (k, ws), c)
                if not self.qd.is_zero():
                    self._acc(out, (k, w), c * self.qd)
        return AKElement(self, out)

    # -- word appliers -----------------------------------------------------

    def lmul_TT(self, i: int, j: int, v: AKElement) -> AKElement:
        """(T_i T_{i+1} ... T_j) * v; empty when j < i."""
        for g in range(j, i - 1, -1):
            v = self.leftmul_T(g, v)
        return v

    def lmul_TTt(self, j: int, i: int, v: AKElement) -> AKElement:
        """(T_j T_{j-1} ... T_i) * v; empty when j < i."""
        for g in range(i, j + 1):
            v = self.leftmul_T(g, v)
        return v

    def lmul_TT_inv(self, i: int, j: int, v: AKElement) -> AKElement:
        """(T_i ... T_j)^{-1} * v = T_j^{-1} ... T_i^{-1} * v."""
        for g in range(i, j + 1):
            v = self.leftmul_T_inv(g, v)
        return v

    def lmul_TTt_inv(self, j: int, i: int, v: AKElement) -> AKElement:
        """(T_j ... T_i)^{-1} * v = T_i^{-1} ... T_j^{-1} * v."""
        for g in range(j, i - 1, -1):
            v = self.leftmul_T_inv(g, v)
        return v

    def apply_L(self, j: int, v: AKElement) -> AKElement:
        """L_j * v via the palindromic word T_{j-1}..T_1 T_0 T_1..T_{j-1}."""
        for g in range(j - 1, 0, -1):
            v = self.leftmul_T(g, v)
        v = self.leftmul_T0(v)
        for g in range(1, j):
            v = self.leftmul_T(g, v)
        return v

    def apply_L_inv(self, j: int, v: AKElement) -> AKElement:
        for g in range(j - 1, 0, -1):
            v = self.leftmul_T_inv(g, v)
        v = self.leftmul_T0_inv(v)
        for g in range(1, j):
            v = self.leftmul_T_inv(g, v)
        return v

    def apply_L_bracket(self, j: int, k: int, v: AKElement) -> AKElement:
        """L_j^{<k>} * v, the partial cyclotomic product conjugated to slot j."""
        if not 1 <= k <= self.r:
            raise ValueError("bracket depth must be in 1..r")
        for g in range(j - 1, 0, -1):
            v = self.leftmul_T(g, v)
        for p in range(k - 1, -1, -1):
            v = self.leftmul_T0(v) - v.scale(self.Q[p])
        for g in range(1, j):
            v = self.leftmul_T(g, v)
        return v

    def apply_Tw(self, w: Perm, v: AKElement) -> AKElement:
        for g in reversed(reduced_word(tuple(w))):
            v = self.leftmul_T(g, v)
        return v

    def apply_x_mu(self, parts: tuple[int, ...], v: AKElement) -> AKElement:
        out = self.zero()
        for w in parabolic_subgroup(parts):
            out = out + self.apply_Tw(w, v).scale(self.q_pow(self.length(w)))
        return out

    def apply_m_mu(self, mu: MultiComposition, v: AKElement) -> AKElement:
        """m_mu * v: the (L_i - Q_k) product then the parabolic q-symmetrizer."""
        pr = profile(mu)
        for k in range(1, mu.r):
            for i in range(1, pr.a[k] + 1):
                v = self.apply_L(i, v) - v.scale(self.Q[k])
        return self.apply_x_mu(mu.flat, v)

    # -- constructors ------------------------------------------------------

    def elem_T0(self) -> AKElement:
        return self.leftmul_T0(self.one())

    def elem_T(self, i: int) -> AKElement:
        return self.elem_basis((0,) * self.n, self._s[i])

    def elem_Tw(self, w: Perm) -> AKElement:
        return self.elem_basis((0,) * self.n, tuple(w))

    def elem_L(self, j: int) -> AKElement:
        return self.apply_L(j, self.one())

    def elem_L_inv(self, j: int) -> AKElement:
        return self.apply_L_inv(j, self.one())

    def elem_L_pow(self, j: int, k: int) -> AKElement:
        v = self.one()
        for _ in range(abs(k)):
            v = self.apply_L(j, v) if k > 0 else self.apply_L_inv(j, v)
        return v

    def elem_L_bracket(self, j: int, k: int) -> AKElement:
        return self.apply_L_bracket(j, k, self.one())

    def elem_TT(self, i: int, j: int) -> AKElement:
        """TT_{i,j} = T_i T_{i+1} ... T_j, the identity when j = i - 1."""
        w = self._id
        for g in range(i, j + 1):
            w = compose(w, self._s[g])
        return self.elem_basis((0,) * self.n, w)

    def elem_TTt(self, j: int, i: int) -> AKElement:
        """TTt_{j,i} = T_j T_{j-1} ... T_i, the identity when j = i - 1."""
        w = self._id
        for g in range(j, i - 1, -1):
            w = compose(w, self._s[g])
        return self.elem_basis((0,) * self.n, w)

    def elem_x_mu(self, parts: tuple[int, ...]) -> AKElement:
        terms = {
            ((0,) * self.n, w): self.q_pow(self.length(w))
            for w in parabolic_subgroup(parts)
        }
        return AKElement(self, terms)

    def elem_m_mu(self, mu: MultiComposition) -> AKElement:
        cached = self._m_mu_cache.get(mu)
        if cached is None:
            cached = self.apply_m_mu(mu, self.one())
            self._m_mu_cache[mu] = cached
        return cached

    # -- products and the anti-automorphism --------------------------------

    def multiply(self, x: AKElement, y: AKElement) -> AKElement:
        """x * y by expanding x into canonical generator words."""
        out = self.zero()
        for (k, w), c in x.terms.items():
            v = self.apply_Tw(w, y)
            for j in range(self.n, 0, -1):
                for _ in range(k[j - 1]):
                    v = self.apply_L(j, v)
            out = out + v.scale(c)
        return out

    def rightmul_T0(self, v: AKElement) -> AKElement:
        """v * T_0 through a cached per-basis-monomial table."""
        if self._right_t0 is None:
            self._right_t0 = {}
        out = self.zero()
        t0 = self.elem_T0()
        for key, c in v.terms.items():
            img = self._right_t0.get(key)
            if img is None:
                img = self.multiply(AKElement(self, {key: self.ring.one}), t0)
                self._right_t0[key] = img
            out = out + img.scale(c)
        return out

    def rightmul_gen(self, g: int, v: AKElement) -> AKElement:
        return self.rightmul_T0(v) if g == 0 else self.rightmul_T(g, v)

    def rightmul_elem(self, v: AKElement, h: AKElement) -> AKElement:
        return self.multiply(v, h)

    def op(self, v: AKElement) -> AKElement:
        """The anti-automorphism fixing every generator: reverses monomial words.

        On the basis, op(L^k T_w) = T_{w^{-1}} L^k, since each L_j is a
        palindromic word and the L_j commute.
        """
        out = self.zero()
        for (k, w), c in v.terms.items():
            out = out + self.apply_Tw(inverse_perm(w), self.elem_basis(k, self._id)).scale(c)
        return out

    def annihilated_by_bracket(self, v: AKElement, j: int, k: int,
                               v_op: AKElement | None = None) -> bool:
        """Exact test of v * L_j^{<k>} = 0, via op(v * g) = g * op(v)."""
        if v_op is None:
            v_op = self.op(v)
        return self.apply_L_bracket(j, k, v_op).is_zero()


def random_basis_element(engine: AKEngine, rng: random.Random) -> AKElement:
    k = tuple(rng.randrange(engine.r) for _ in range(engine.n))
    w = tuple(rng.sample(range(engine.n), engine.n))
    return engine.elem_basis(k, w)
