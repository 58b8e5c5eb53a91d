import itertools
import random

import pytest

from fqx.errors import BudgetExceeded, NotCoprime, NotSeparable
from fqx.gf import embedding, make_field
from fqx.polyring import Poly, squarefree_polys, t_mod, t_mulmod
from fqx.quotalg import QuotAlg
from fqx.transfer import (
    QuadSystem,
    build_system,
    equivalence_check,
    evaluate,
    find_point,
    linear_realisation_scan,
    matrix_rank,
    pencil_rank_check,
    point_enum,
)

from conftest import P


def direct_q(f, g, k, v):
    """s_k(g x^2) (- lam^2 for k = 1) evaluated without the Gram matrix."""
    F = f.field
    n = f.deg
    A = QuotAlg(f)
    x = A(tuple(v[:n]))
    val = (A(g) * x * x).coords()[k]
    if k == 1:
        val = F.sub(val, F.mul(v[n], v[n]))
    return val


def test_build_system_shapes(F3):
    X = Poly.x(F3)
    s = build_system(X ** 3 - X, P(F3, 1))
    assert s.dims == (2, 4)
    for G in s.gram:
        assert all(G[i][j] == G[j][i] for i in range(4) for j in range(4))
    # q_2 entry (i, j) is s_2(theta^(i+j))
    m = (X ** 3 - X).c
    for i, j in itertools.product(range(3), repeat=2):
        c = t_mod(F3, (0,) * (i + j) + (1,), m)
        assert s.gram[1][i][j] == (list(c) + [0, 0, 0])[2]
    s = build_system(X * X + 1, P(F3, 1))
    assert s.gram == [[[0, 1, 0], [1, 0, 0], [0, 0, 2]]]


def test_build_system_errors(F3):
    X = Poly.x(F3)
    with pytest.raises(NotSeparable):
        build_system(X * X * (X + 1), P(F3, 1))
    with pytest.raises(NotCoprime):
        build_system(X ** 3 - X, X)


@pytest.mark.parametrize("pk", [(3, 1), (5, 1)])
def test_polarization(pk):
    F = make_field(*pk)
    X = Poly.x(F)
    rng = random.Random(2)
    f, g = X ** 3 - X + 1 if pk[0] == 3 else X ** 3 + X + 1, X * X + 1
    s = build_system(f, g)
    for _ in range(200):
        v = [rng.randrange(F.q) for _ in range(4)]
        for k in range(len(s.gram)):
            assert evaluate(s, k, v) == direct_q(f, g, k + 1, v)


def test_pencil_rank_examples(F3):
    X = Poly.x(F3)
    assert pencil_rank_check(build_system(X ** 3 - X, P(F3, 1)))
    assert pencil_rank_check(build_system(X * X + 1, P(F3, 1)))
    bad = QuadSystem(None, None, F3, [[[1, 0, 0], [0, 1, 0], [0, 0, 0]]])
    assert not pencil_rank_check(bad)


def test_matrix_rank(F3):
    assert matrix_rank(F3, [[1, 2], [2, 1]]) == 1
    assert matrix_rank(F3, [[1, 0], [0, 1]]) == 2


def test_point_enum_examples(F3):
    X = Poly.x(F3)
    s = build_system(X ** 3 - X, P(F3, 1))
    pts = point_enum(s, 1)
    assert pts.c == []
    # brute force over the 40 points of P^3(F_3)
    brute = [v for v in itertools.product(range(3), repeat=4) if any(v)
             and next(x for x in v if x) == 1
             and all(direct_q(X ** 3 - X, P(F3, 1), k, v) == 0 for k in (1, 2))]
    assert sorted(pts.cprime) == sorted(brute)
    s2 = build_system(X * X + 1, P(F3, 1))
    brute2 = [v for v in itertools.product(range(3), repeat=3) if any(v)
              and next(x for x in v if x) == 1
              and direct_q(X * X + 1, P(F3, 1), 1, v) == 0]
    assert sorted(point_enum(s2, 1).cprime) == sorted(brute2)
    with pytest.raises(BudgetExceeded):
        point_enum(s, 3, budget=1000)


def test_equivalence_examples(F3):
    X = Poly.x(F3)
    r = equivalence_check(X ** 3 - X, P(F3, 1), 1)
    assert r.agree and not r.lhs and not r.rhs
    assert equivalence_check(X * X + 1, P(F3, 1), 1).agree
    assert equivalence_check(X ** 3 - X, P(F3, 1), 2).agree


def test_linear_side_brute_over_f9(F3):
    # (X - a) square mod X^3 - X over F_9: every root value -a, 1-a, 2-a a square
    F9 = make_field(3, 2)
    e = embedding(F3, F9)
    sq = {F9.mul(x, x) for x in range(1, 9)}
    want = [a for a in range(9) if all(F9.sub(e[r], a) in sq for r in range(3))]
    X = Poly.x(F3)
    r = equivalence_check(X ** 3 - X, P(F3, 1), 2)
    assert r.rhs == bool(want)


def test_linear_realisation_examples(F3):
    X = Poly.x(F3)
    m = linear_realisation_scan(X * X + 1)
    A = QuotAlg(X * X + 1)
    for rep, a in m.items():
        if a is not None:
            assert A.class_bits(((-a) % 3, 1)) == A.class_bits(rep.c)
    assert m[A(1)] == 0
    m3 = linear_realisation_scan(X * (X + 1) * (X + 2))
    assert len(m3) == 8 and sum(a is not None for a in m3.values()) <= 3


def test_linear_realisation_constructed(F5):
    X = Poly.x(F5)
    f = X ** 3 + X + 1
    A = QuotAlg(f)
    a0 = 3
    m = linear_realisation_scan(f)
    rep = next(r for r in m if A.class_bits(r.c) == A.class_bits(((-a0) % 5, 1)))
    assert m[rep] is not None and m[rep] <= a0


def test_find_point_small(F3):
    X = Poly.x(F3)
    s = build_system(X * X + 1, P(F3, 1))
    v = find_point(s, 1)
    assert v is not None and v[-1] == 1
