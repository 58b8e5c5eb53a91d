"""Transfer quadrics on E_f x E and the curve they cut out.

For f of degree n and g coprime to f, write x = c_0 + c_1 theta + ... in
E_f and let s_k read off the theta^k coordinate.  The system is

    q_1(x, lam) = s_1(g x^2) - lam^2,    q_k(x, lam) = s_k(g x^2)  (2 <= k < n)

in the variables (c_0, ..., c_{n-1}, lam).  Its points with lam != 0 and
N(x) != 0 correspond to a in E' with (X - a) g a square modulo f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BudgetExceeded, ConsistencyError, DegreeTooSmall, NotCoprime, NotSeparable
from .gf import FieldDesc, embedding, make_field
from .polyring import (
    Poly,
    factor,
    t_eval,
    t_gcd,
    t_is_squarefree,
    t_mod,
    t_mulmod,
    t_resultant,
)
from .quotalg import QuotAlg, t_sqclass

DEFAULT_BUDGET = 2_000_000


@dataclass
class QuadSystem:
    f: Poly | None
    g: Poly | None
    field: FieldDesc
    gram: list[list[list[int]]]   # n-1 symmetric (n+1)x(n+1) matrices

    @property
    def n(self) -> int:
        return len(self.gram[0]) - 1

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.gram), len(self.gram[0])


def _check_inputs(f: Poly, g: Poly) -> None:
    F = f.field
    if f.deg < 2:
        raise DegreeTooSmall("the transfer system needs deg f >= 2")
    if not t_is_squarefree(F, f.c):
        raise NotSeparable(f"{f} is not separable")
    if g.is_zero() or t_gcd(F, f.c, g.c) != (1,):
        raise NotCoprime(f"{g} is not coprime to {f}")


def build_system(f: Poly, g: Poly) -> QuadSystem:
    _check_inputs(f, g)
    F = f.field
    n = f.deg
    m = f.monic().c
    # coordinates of g * theta^e for e = 0 .. 2n-2
    coords = []
    cur = t_mod(F, g.c, m)
    for _ in range(2 * n - 1):
        coords.append(list(cur) + [0] * (n - len(cur)))
        cur = t_mulmod(F, cur, (0, 1), m)
    gram = []
    for k in range(1, n):
        G = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(n):
            for j in range(n):
                G[i][j] = coords[i + j][k]
        if k == 1:
            G[n][n] = F.neg(1)
        gram.append(G)
    return QuadSystem(f, g, F, gram)


def evaluate(sys: QuadSystem, k: int, v, G: FieldDesc | None = None) -> int:
    """v^T G_k v, with v over the field G (default: the base field)."""
    G = G or sys.field
    table = embedding(sys.field, G)
    M = sys.gram[k]
    acc = 0
    for i, vi in enumerate(v):
        if not vi:
            continue
        row = 0
        for j, vj in enumerate(v):
            if vj and M[i][j]:
                row = G.add(row, G.mul(table[M[i][j]], vj))
        acc = G.add(acc, G.mul(vi, row))
    return acc


def matrix_rank(F: FieldDesc, rows: list[list[int]]) -> int:
    A = [list(r) for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = F.inv(A[rank][col])
        A[rank] = [F.mul(inv, x) for x in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][col]:
                c = A[r][col]
                A[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def projective_points(F: FieldDesc, dim: int):
    """Points of P^{dim-1}(F) with the first nonzero coordinate equal to 1."""
    q = F.q
    for lead in range(dim):
        for tail in itertools.product(range(q), repeat=dim - lead - 1):
            yield (0,) * lead + (1,) + tail


def pencil_ranks(sys: QuadSystem) -> list[tuple[tuple, int]]:
    F = sys.field
    size = sys.n + 1
    out = []
    for coeffs in projective_points(F, len(sys.gram)):
        M = [[0] * size for _ in range(size)]
        for c, G in zip(coeffs, sys.gram):
            if c:
                for i in range(size):
                    for j in range(size):
                        if G[i][j]:
                            M[i][j] = F.add(M[i][j], F.mul(c, G[i][j]))
        out.append((coeffs, matrix_rank(F, M)))
    return out


def pencil_rank_check(sys: QuadSystem) -> bool:
    """Every nonzero combination of the Gram matrices has rank >= 3."""
    return all(r >= 3 for _, r in pencil_ranks(sys))


@dataclass
class PointSet:
    ext_degree: int
    field: FieldDesc
    cprime: list[tuple] = field(default_factory=list)
    c: list[tuple] = field(default_factory=list)


def extension(F: FieldDesc, m: int) -> FieldDesc:
    return F if m == 1 else make_field(F.p, F.k * m)


def _lift(f: Poly, G: FieldDesc) -> tuple:
    table = embedding(f.field, G)
    return tuple(table[c] for c in f.c)


def _norm_nonzero(sys: QuadSystem, G: FieldDesc, x: tuple) -> bool:
    fm = _lift(sys.f.monic(), G)
    xs = tuple(x)
    while xs and not xs[-1]:
        xs = xs[:-1]
    return bool(xs) and t_resultant(G, fm, xs) != 0


def point_enum(sys: QuadSystem, ext_degree: int, budget: int = DEFAULT_BUDGET) -> PointSet:
    """All projective zeros over F_{q^m}, split into C' and C."""
    G = extension(sys.field, ext_degree)
    dim = sys.n + 1
    if G.q ** dim > budget:
        raise BudgetExceeded(f"{G.q}^{dim} points exceed the budget {budget}")
    out = PointSet(ext_degree, G)
    nforms = len(sys.gram)
    for v in projective_points(G, dim):
        if all(evaluate(sys, k, v, G) == 0 for k in range(nforms)):
            out.cprime.append(v)
            if v[-1] and sys.f is not None and _norm_nonzero(sys, G, v[:-1]):
                out.c.append(v)
    return out


def find_point(sys: QuadSystem, ext_degree: int, budget: int = DEFAULT_BUDGET) -> tuple | None:
    """First point of C over F_{q^m} in the chart lam = 1."""
    G = extension(sys.field, ext_degree)
    n = sys.n
    if G.q ** n > budget:
        raise BudgetExceeded(f"{G.q}^{n} affine points exceed the budget {budget}")
    nforms = len(sys.gram)
    for x in itertools.product(range(G.q), repeat=n):
        v = x + (1,)
        if all(evaluate(sys, k, v, G) == 0 for k in range(nforms)) and _norm_nonzero(sys, G, x):
            return v
    return None


def linear_side(f: Poly, g: Poly, ext_degree: int) -> int | None:
    """Least a in F_{q^m} with f(a) != 0 and (X - a) g a square modulo f."""
    G = extension(f.field, ext_degree)
    fl = Poly._raw(G, _lift(f.monic(), G))
    gl = _lift(g, G)
    comps = [p.c for p in factor(fl).support]
    for a in range(G.q):
        if t_eval(G, fl.c, a) == 0:
            continue
        lin = (G.neg(a), 1)
        if all(t_sqclass(G, p, t_mod(G, t_mulmod(G, lin, gl, p), p)) == 0 for p in comps):
            return a
    return None


@dataclass
class EquivalenceReport:
    ext_degree: int
    lhs: bool
    rhs: bool
    witness_a: int | None
    points_cprime: int
    points_c: int

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


def equivalence_check(f: Poly, g: Poly, ext_degree: int, budget: int = DEFAULT_BUDGET) -> EquivalenceReport:
    sys = build_system(f, g)
    pts = point_enum(sys, ext_degree, budget)
    a = linear_side(f, g, ext_degree)
    rep = EquivalenceReport(ext_degree, bool(pts.c), a is not None, a, len(pts.cprime), len(pts.c))
    if not rep.agree:
        raise ConsistencyError(
            f"transfer curve disagreement for f={f}, g={g}, m={ext_degree}: "
            f"points={rep.lhs}, linear={rep.rhs}")
    return rep


def linear_realisation_scan(f: Poly) -> dict:
    """Square-class rep of E_f -> least a in E realizing it as theta - a, or None."""
    F = f.field
    if f.deg < 1:
        raise DegreeTooSmall("f must be nonconstant")
    if not t_is_squarefree(F, f.c):
        raise NotSeparable(f"{f} is not separable")
    A = QuotAlg(f)
    reps = A.square_class_reps()
    by_bits = {A.class_bits(r.c): r for r in reps}
    out = {r: None for r in reps}
    for a in range(F.q):
        if t_eval(F, f.c, a) == 0:
            continue
        bits = A.class_bits((F.neg(a), 1))
        r = by_bits[bits]
        if out[r] is None:
            out[r] = a
    return out


__all__ = [
    "EquivalenceReport",
    "PointSet",
    "QuadSystem",
    "build_system",
    "equivalence_check",
    "find_point",
    "linear_realisation_scan",
    "linear_side",
    "matrix_rank",
    "pencil_rank_check",
    "pencil_ranks",
    "point_enum",
]
