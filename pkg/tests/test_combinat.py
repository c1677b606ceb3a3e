import itertools
import math

from cycloschur.combinat import (
    MultiComposition,
    all_perms,
    compose,
    compositions,
    coset_decompose,
    identity_perm,
    inverse_perm,
    is_block_boundary,
    is_min_coset_rep,
    min_coset_reps,
    multicompositions,
    parabolic_subgroup,
    perm_from_word,
    perm_length,
    profile,
    reduced_word,
    s_perm,
    xi_index,
    xi_inverse,
)


def test_compositions_small():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert compositions(1, 2) == [(1, 0), (0, 1)]


def brute_compositions(n, m):
    return sorted(
        c for c in itertools.product(range(n + 1), repeat=m) if sum(c) == n
    )


def test_compositions_count_and_completeness():
    got = compositions(3, 6)
    assert len(got) == 56  # C(8, 5) by stars and bars
    assert len(got) == math.comb(3 + 6 - 1, 6 - 1)
    assert sorted(got) == brute_compositions(3, 6)
    assert len(set(got)) == len(got)


def test_profile_two_blocks():
    mu = MultiComposition(((1, 0), (0, 1)))
    pr = profile(mu)
    assert pr.a == (0, 1, 2)
    assert pr.c == (1, 2)


def test_profile_all_in_first_block():
    mu = MultiComposition(((2,), (0,)))
    pr = profile(mu)
    assert pr.a == (0, 2, 2)
    assert pr.c == (1, 1)


def test_profile_flat_one_block():
    mu = MultiComposition(((2, 0, 1),))
    pr = profile(mu)
    assert pr.N == (2, 2, 3)
    assert pr.c == (1, 1, 1)


def test_profile_monotone_and_constant_on_parts():
    for mu in multicompositions(3, (2, 2)):
        pr = profile(mu)
        assert all(pr.c[j] <= pr.c[j + 1] for j in range(mu.n - 1))
        # constancy across each part of the flat composition
        flat = mu.flat
        N = (0,) + pr.N
        for i in range(len(flat)):
            vals = {pr.c[j] for j in range(N[i], N[i + 1])}
            assert len(vals) <= 1


def test_flatten_unflatten_round_trip():
    for sizes in [(2, 2), (1, 1), (3, 1), (1, 2, 1)]:
        for mu in multicompositions(3, sizes):
            assert MultiComposition.from_flat(mu.flat, sizes) == mu


def test_xi_bijection():
    sizes = (2, 3, 1)
    m = sum(sizes)
    seen = []
    for k in range(1, len(sizes) + 1):
        for i in range(1, sizes[k - 1] + 1):
            seen.append(xi_index(i, k, sizes))
    assert sorted(seen) == list(range(1, m + 1))
    for j in range(1, m + 1):
        i, k = xi_inverse(j, sizes)
        assert xi_index(i, k, sizes) == j
    assert [is_block_boundary(i, sizes) for i in range(1, m + 1)] == [
        False, True, False, False, True, True,
    ]


def test_perm_basics():
    w = compose(s_perm(3, 1), s_perm(3, 2))
    assert w == (1, 2, 0)
    assert perm_length(w) == 2
    assert compose(w, inverse_perm(w)) == identity_perm(3)


def test_reduced_word_round_trip():
    for n in range(1, 5):
        for w in all_perms(n):
            word = reduced_word(w)
            assert len(word) == perm_length(w)
            assert perm_from_word(n, word) == w


def test_parabolic_sizes():
    assert len(parabolic_subgroup((1, 1))) == 1
    assert len(parabolic_subgroup((2,))) == 2
    assert len(parabolic_subgroup((2, 2))) == 4


def test_coset_reps_sizes():
    assert len(min_coset_reps((1, 1))) == 2
    assert len(min_coset_reps((2,))) == 1
    assert len(min_coset_reps((2, 1))) == 3


def brute_min_reps(parts):
    """Minimal length element of each right coset S_mu w, by exhaustion."""
    n = sum(parts)
    sub = set(parabolic_subgroup(parts))
    reps = set()
    seen = set()
    for w in all_perms(n):
        if w in seen:
            continue
        coset = [compose(x, w) for x in sub]
        seen.update(coset)
        best = min(coset, key=lambda u: (perm_length(u), u))
        # minimality must be unique
        assert sum(1 for u in coset if perm_length(u) == perm_length(best)) == 1
        reps.add(best)
    return reps


def test_coset_reps_against_brute_force():
    for parts in [(2, 1), (1, 1, 1), (2, 2), (3, 1), (1, 3)]:
        assert set(min_coset_reps(parts)) == brute_min_reps(parts)


def test_coset_decomposition_properties():
    for parts in [(2, 1), (2, 2), (1, 1, 2)]:
        n = sum(parts)
        count = math.factorial(n) // math.prod(math.factorial(p) for p in parts)
        assert len(min_coset_reps(parts)) == count
        sub = set(parabolic_subgroup(parts))
        for w in all_perms(n):
            x, y = coset_decompose(w, parts)
            assert x in sub
            assert is_min_coset_rep(y, parts)
            assert compose(x, y) == w
            assert perm_length(x) + perm_length(y) == perm_length(w)
