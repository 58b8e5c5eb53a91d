"""Odd-degree points on the affine curve Y^2 = f(X)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ConstantPolynomial, NotSquareFree
from .polyring import Poly, t_irreducibles, t_is_squarefree, t_mod
from .quotalg import AlgElem, residue_field, t_sqclass


@dataclass(frozen=True)
class OddPoint:
    degree: int
    p: Poly          # minimal polynomial of the x-coordinate
    y: AlgElem       # y in E_p with y^2 = f(x)

    def verify(self, f: Poly) -> bool:
        E = residue_field(self.p)
        return self.y * self.y == E(f)


@dataclass(frozen=True)
class MinOddDegree:
    degree: int | None
    cap: int
    complete: bool   # True when absence (or minimality) is proven


def _require(f: Poly) -> None:
    if f.deg < 1:
        raise ConstantPolynomial("the curve needs a nonconstant f")
    if not t_is_squarefree(f.field, f.c):
        raise NotSquareFree(f"{f} is not square-free")


def _point_at(f: Poly, p: tuple) -> AlgElem | None:
    F = f.field
    r = t_mod(F, f.c, p)
    E = residue_field(Poly._raw(F, p))
    if not r:
        return E(0)
    if t_sqclass(F, p, r):
        return None
    return E.sqrt(E(r))


def _scan(f: Poly, lo: int, hi: int) -> OddPoint | None:
    F = f.field
    d = lo if lo % 2 else lo + 1
    while d <= hi:
        for p in t_irreducibles(F, d):
            y = _point_at(f, p)
            if y is not None:
                pt = OddPoint(d, Poly._raw(F, p), y)
                if not pt.verify(f):
                    raise ConsistencyError(f"bad point over {pt.p}")
                return pt
        d += 2
    return None


def odd_point_search(f: Poly, degree_cap: int) -> OddPoint | None:
    """First point of odd degree <= cap, by degree then canonical order of p."""
    _require(f)
    return _scan(f, 1, degree_cap)


def odd_degree_cap(f: Poly) -> tuple[int, bool]:
    """(cap, complete): with deg f even and lc non-square, deg f / 2 suffices."""
    _require(f)
    if f.deg % 2 == 0 and not f.field.is_square_int(f.c[-1]):
        return f.deg // 2, True
    return f.deg, False


def min_odd_degree(f: Poly) -> MinOddDegree:
    cap, complete = odd_degree_cap(f)
    pt = _scan(f, 1, cap)
    if pt is not None:
        return MinOddDegree(pt.degree, cap, True)
    return MinOddDegree(None, cap, complete)


__all__ = ["MinOddDegree", "OddPoint", "min_odd_degree", "odd_degree_cap", "odd_point_search"]
