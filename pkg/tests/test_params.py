import random

import pytest

from cycloschur.params import (
    DEFAULT_PRIME,
    Frac,
    IncrementalSpan,
    PolyRing,
    PrimeMatrix,
    draw_spec_points,
    q_binom,
    q_int,
)


@pytest.fixture
def ring():
    return PolyRing(("q", "Q0", "Q1"))


def test_unit_cancellation(ring):
    q = ring.gen("q")
    assert q * q.inverse() == ring.one


def test_binomial_expansion(ring):
    q = ring.gen("q")
    d = q - q.inverse()
    assert d * d == q ** 2 - 2 + q.inverse() ** 2


def test_elementary_symmetric_in_aux_variable():
    ring = PolyRing(("x", "Q0", "Q1"))
    x, q0, q1 = ring.gen("x"), ring.gen("Q0"), ring.gen("Q1")
    assert (x - q0) * (x - q1) == x ** 2 - (q0 + q1) * x + q0 * q1


def test_specialize_basics(ring):
    pt, = draw_spec_points(ring.names, prime=101, seed=5, count=1)
    assert ring.one.evaluate(pt) == 1
    q = ring.gen("q")
    assert (q - q).evaluate(pt) == 0


def test_specialize_direct_evaluation():
    ring = PolyRing(("q", "Q0"))
    from cycloschur.params import SpecializationPoint

    pt = SpecializationPoint(101, {"q": 2, "Q0": 3}, seed=0)
    assert (ring.gen("q") * ring.gen("Q0")).evaluate(pt) == 6


def test_specialize_is_ring_homomorphism(ring):
    rng = random.Random(11)
    pts = draw_spec_points(ring.names, seed=3, count=1)
    pt = pts[0]

    def random_poly():
        out = ring.zero
        for _ in range(rng.randrange(1, 6)):
            exps = {v: rng.randrange(-3, 4) for v in ring.names}
            out = out + ring.monomial(exps, rng.randrange(-9, 10))
        return out

    p = pt.prime
    for _ in range(200):
        a, b = random_poly(), random_poly()
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) % p
        assert (a + b).evaluate(pt) == (a.evaluate(pt) + b.evaluate(pt)) % p


def test_poly_power_and_inverse(ring):
    q0 = ring.gen("Q0")
    assert q0 ** -2 == q0.inverse() * q0.inverse()
    with pytest.raises(ValueError):
        (ring.gen("q") + 1).inverse()


def test_q_int_values(ring):
    q = ring.gen("q")
    assert q_int(ring, 0).is_zero()
    assert q_int(ring, 1) == ring.one
    assert q_int(ring, 2) == q + q.inverse()
    assert q_int(ring, -2) == -(q + q.inverse())
    assert q_int(ring, 3) == q ** 2 + 1 + q.inverse() ** 2


def oracle_q_binom(a: int, t: int, qv: int, p: int) -> int:
    """Product formula, evaluated with modular inverses."""
    num, den = 1, 1
    for s in range(1, t + 1):
        e = a - s + 1
        num = num * ((pow(qv, e, p) - pow(qv, -e, p)) % p) % p
        den = den * ((pow(qv, s, p) - pow(qv, -s, p)) % p) % p
    return num * pow(den, -1, p) % p


def test_q_binom_against_product_oracle(ring):
    p = 10007
    qv = 5
    from cycloschur.params import SpecializationPoint

    pt = SpecializationPoint(p, {"q": qv, "Q0": 2, "Q1": 3}, seed=0)
    for a in range(-5, 9):
        for t in range(0, 7):
            assert q_binom(ring, a, t).evaluate(pt) == oracle_q_binom(a, t, qv, p), (a, t)


def test_q_binom_edges(ring):
    assert q_binom(ring, 3, 0) == ring.one
    assert q_binom(ring, 2, 3).is_zero()
    assert q_binom(ring, 4, 4) == ring.one


def test_frac_cross_multiplication(ring):
    q = ring.gen("q")
    d = q - q.inverse()
    half = Frac(ring.one, d)
    assert half * Frac.of(d) == Frac.of(ring.one)
    assert (half - half).is_zero()
    assert Frac(q * d, d) == Frac.of(q)


def test_rank_identity_and_zero():
    m = PrimeMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 101)
    assert m.rank() == 3
    assert m.nullspace() == []
    z = PrimeMatrix([[0] * 4, [0] * 4], 101)
    assert z.rank() == 0
    assert len(z.nullspace()) == 4


def test_proportional_rows_nullspace():
    m = PrimeMatrix([[1, 2], [2, 4]], 101)
    assert m.rank() == 1
    ns = m.nullspace()
    assert len(ns) == 1
    x, y = ns[0]
    # spanned by (2, -1): check proportionality
    assert (x * (-1) - y * 2) % 101 == 0
    assert (x + 2 * y) % 101 == 0


def test_rank_invariant_under_row_shuffles():
    rng = random.Random(7)
    p = 10007
    rows = [[rng.randrange(p) for _ in range(5)] for _ in range(4)]
    base = PrimeMatrix(rows, p).rank()
    for _ in range(20):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert PrimeMatrix(shuffled, p).rank() == base


def test_solve_consistent_and_inconsistent():
    p = 101
    m = PrimeMatrix([[1, 2], [2, 4]], p)
    x = m.solve([3, 6])
    assert x is not None
    assert [(r[0] * x[0] + r[1] * x[1]) % p for r in m.rows] == [3, 6]
    assert m.solve([1, 0]) is None


def test_rank_nullity():
    rng = random.Random(19)
    p = 10007
    for _ in range(10):
        rows = [[rng.randrange(p) for _ in range(6)] for _ in range(rng.randrange(1, 8))]
        m = PrimeMatrix(rows, p)
        assert m.rank() + len(m.nullspace()) == 6
        assert m.rank() <= min(len(rows), 6)


def test_incremental_span():
    span = IncrementalSpan(101)
    assert span.add([1, 2, 3])
    assert not span.add([2, 4, 6])
    assert span.add([0, 1, 0])
    assert span.rank == 2
    assert span.contains([1, 0, 3])
    assert not span.contains([0, 0, 1])


def test_draw_points_nonzero_and_deterministic():
    pts1 = draw_spec_points(("q", "Q0", "Q1"), seed=42)
    pts2 = draw_spec_points(("q", "Q0", "Q1"), seed=42)
    assert [p.values for p in pts1] == [p.values for p in pts2]
    assert len(pts1) == 3
    for pt in pts1:
        assert all(v % DEFAULT_PRIME != 0 for v in pt.values.values())
        assert pt.values["Q0"] != pt.values["Q1"]
