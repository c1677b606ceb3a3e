"""Compositions, multicompositions and symmetric group combinatorics.

Permutations are tuples in one-line notation on {0, ..., n-1}: ``w[x]`` is the
image of position x.  Composition of permutations is ``(u * v)(x) = u(v(x))``,
and the Coxeter generator ``s_i`` (i = 1..n-1, matching the algebra generator
T_i) swaps i-1 and i.

>>> compose(s_perm(3, 1), s_perm(3, 2))
(1, 2, 0)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Perm = tuple


# ---------------------------------------------------------------------------
# compositions


def compositions(n: int, m: int) -> list[tuple[int, ...]]:
    """All compositions of n with m nonnegative parts, first part descending.

    >>> compositions(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if m == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        out.extend((first,) + rest for rest in compositions(n - first, m - 1))
    return out


def prefix_sums(parts: tuple[int, ...]) -> tuple[int, ...]:
    """N_i = parts_1 + ... + parts_i for i = 1..m."""
    out, acc = [], 0
    for p in parts:
        acc += p
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class MultiComposition:
    """An r-tuple of compositions with fixed block sizes m_1..m_r."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def n(self) -> int:
        return sum(self.flat)

    @staticmethod
    def from_flat(flat: tuple[int, ...], sizes: tuple[int, ...]) -> "MultiComposition":
        if len(flat) != sum(sizes):
            raise ValueError("flat length does not match block sizes")
        blocks, pos = [], 0
        for s in sizes:
            blocks.append(tuple(flat[pos:pos + s]))
            pos += s
        return MultiComposition(tuple(blocks))


def multicompositions(n: int, sizes: tuple[int, ...]) -> list[MultiComposition]:
    """All r-compositions of n with the given block sizes, deterministic order."""
    m = sum(sizes)
    return [MultiComposition.from_flat(c, sizes) for c in compositions(n, m)]


@dataclass(frozen=True)
class Profile:
    """Derived indexing data of a multicomposition.

    N[i-1] = mu_1 + ... + mu_i on the flat composition (1 <= i <= m),
    a[k] = |mu^(1)| + ... + |mu^(k)| (0 <= k <= r), and c[j-1] is the block
    index k with a_{k-1} < j <= a_k (1 <= j <= n).
    """

    N: tuple[int, ...]
    a: tuple[int, ...]
    c: tuple[int, ...]


def profile(mu: MultiComposition) -> Profile:
    flat = mu.flat
    N = prefix_sums(flat)
    a = (0,) + prefix_sums(tuple(sum(b) for b in mu.blocks))
    n = mu.n
    c = []
    for j in range(1, n + 1):
        k = next(k for k in range(1, mu.r + 1) if a[k - 1] < j <= a[k])
        c.append(k)
    return Profile(N, a, tuple(c))


def xi_index(i: int, k: int, sizes: tuple[int, ...]) -> int:
    """Flat column index of position i in block k (all 1-based)."""
    if not (1 <= k <= len(sizes) and 1 <= i <= sizes[k - 1]):
        raise ValueError("position outside the block grid")
    return sum(sizes[:k - 1]) + i


def xi_inverse(j: int, sizes: tuple[int, ...]) -> tuple[int, int]:
    """Block-grid position (i, k) of flat column j (all 1-based)."""
    acc = 0
    for k, s in enumerate(sizes, start=1):
        if acc < j <= acc + s:
            return (j - acc, k)
        acc += s
    raise ValueError("column index outside the grid")


def is_block_boundary(i: int, sizes: tuple[int, ...]) -> bool:
    """True when column i is the last column of its block, i.e. xi^{-1}(i) = (m_k, k)."""
    pos, k = xi_inverse(i, sizes)
    return pos == sizes[k - 1]


def boundary_block(i: int, sizes: tuple[int, ...]) -> int | None:
    """The block number k when column i is a block boundary, else None."""
    pos, k = xi_inverse(i, sizes)
    return k if pos == sizes[k - 1] else None


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def s_perm(n: int, i: int) -> Perm:
    """The adjacent transposition s_i (1 <= i <= n-1), swapping i-1 and i."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, v: Perm) -> Perm:
    """(u * v)(x) = u(v(x))."""
    return tuple(u[x] for x in v)


def inverse_perm(w: Perm) -> Perm:
    out = [0] * len(w)
    for x, y in enumerate(w):
        out[y] = x
    return tuple(out)


def perm_length(w: Perm) -> int:
    """Coxeter length = inversion count."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word, by repeated extraction of the largest descent.

    Returns generator indices (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}
    under ``compose``; deterministic so that T_w expansions are reproducible.

    >>> reduced_word((2, 0, 1))
    (1, 2)
    """
    w = list(w)
    collected = []
    while True:
        desc = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
        if not desc:
            break
        i = desc[-1]
        w[i - 1], w[i] = w[i], w[i - 1]
        collected.append(i)
    return tuple(reversed(collected))


def perm_from_word(n: int, word: tuple[int, ...]) -> Perm:
    w = identity_perm(n)
    for i in word:
        w = compose(w, s_perm(n, i))
    return w


def all_perms(n: int) -> list[Perm]:
    return sorted(itertools.permutations(range(n)))


# ---------------------------------------------------------------------------
# parabolic subgroups and distinguished coset representatives


def parabolic_generator_indices(parts: tuple[int, ...]) -> list[int]:
    """Indices i with s_i inside the Young subgroup of the composition."""
    out = []
    pos = 0
    for p in parts:
        out.extend(range(pos + 1, pos + p))
        pos += p
    return out


@lru_cache(maxsize=None)
def _parabolic_elements(parts: tuple[int, ...]) -> tuple[Perm, ...]:
    n = sum(parts)
    gens = [s_perm(n, i) for i in parabolic_generator_indices(parts)]
    seen = {identity_perm(n)}
    frontier = [identity_perm(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = compose(w, g)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen))


def parabolic_subgroup(parts: tuple[int, ...]) -> list[Perm]:
    """All elements of S_mu inside S_n, n = sum of parts."""
    return list(_parabolic_elements(tuple(parts)))


def is_min_coset_rep(y: Perm, parts: tuple[int, ...]) -> bool:
    """y has no left descent in S_mu, i.e. l(s_i y) > l(y) for generators s_i."""
    pos = inverse_perm(y)
    return all(pos[i - 1] < pos[i] for i in parabolic_generator_indices(tuple(parts)))


def min_coset_reps(parts: tuple[int, ...]) -> list[Perm]:
    """Distinguished representatives of S_mu \\ S_n, sorted.

    >>> len(min_coset_reps((2, 1)))
    3
    """
    n = sum(parts)
    return [y for y in all_perms(n) if is_min_coset_rep(y, parts)]


def coset_decompose(w: Perm, parts: tuple[int, ...]) -> tuple[Perm, Perm]:
    """Unique factorization w = x * y with x in S_mu, y minimal, lengths adding."""
    n = len(w)
    gens = parabolic_generator_indices(tuple(parts))
    x = identity_perm(n)
    y = w
    changed = True
    while changed:
        changed = False
        pos = inverse_perm(y)
        for i in gens:
            if pos[i - 1] > pos[i]:
                y = compose(s_perm(n, i), y)
                x = compose(x, s_perm(n, i))
                changed = True
                break
    return x, y
