"""The algebra E_f = E[X]/(f) and its square classes.

A residue field E_p is the special case of an irreducible p, so the same
class provides Euler-criterion square tests and Tonelli-Shanks roots there.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import NonInvertible, NotASquare, NotSquareFree, ZeroPolynomial
from .gf import FieldDesc, FieldElem, tonelli_shanks
from .polyring import (
    Factorization,
    Poly,
    factor,
    t_add,
    t_crt,
    t_gcd,
    t_invmod,
    t_key,
    t_mod,
    t_mulmod,
    t_neg,
    t_powmod,
    t_resultant,
    t_sub,
)


def t_sqclass(F: FieldDesc, p: tuple, a: tuple) -> int:
    """1 if a is a non-square in E_p (p monic irreducible, a a unit mod p).

    Uses that the norm E_p -> E is an isomorphism on square classes, so the
    class of a equals the class of Res(p, a) in E.
    """
    r = t_resultant(F, p, a)
    return 0 if F.is_square_int(r) else 1


class QuotAlg:
    """E[X]/(f) for a nonzero f; a constant f gives the zero ring."""

    def __init__(self, f: Poly):
        if f.is_zero():
            raise ZeroPolynomial("E_f needs f != 0")
        self.field: FieldDesc = f.field
        self.f = f
        self.monic_f = f.monic()
        self.lc: FieldElem = f.lc
        self.n = f.deg
        self._fact: Factorization | None = None
        self._ns = None
        self._reps = None

    # -- structure --
    @property
    def factorization(self) -> Factorization:
        if self._fact is None:
            self._fact = factor(self.monic_f)
        return self._fact

    @property
    def components(self) -> tuple[Poly, ...]:
        return self.factorization.support

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factorization.factors)

    def is_field(self) -> bool:
        return self.n >= 1 and len(self.factorization.factors) == 1 and self.factorization.factors[0][1] == 1

    def _require_squarefree(self) -> None:
        if not self.is_squarefree():
            raise NotSquareFree(f"{self.f} is not square-free")

    # -- elements --
    def __call__(self, x) -> "AlgElem":
        if isinstance(x, AlgElem):
            if x.alg != self:
                raise ValueError("element of a different algebra")
            return x
        if isinstance(x, Poly):
            c = x.c
        elif isinstance(x, FieldElem):
            c = (x.v,) if x.v else ()
        elif isinstance(x, int):
            v = self.field.from_int(x)
            c = (v,) if v else ()
        else:
            c = tuple(x)
        return AlgElem(self, t_mod(self.field, c, self.monic_f.c) if self.n > 0 else ())

    @property
    def theta(self) -> "AlgElem":
        return self((0, 1))

    @property
    def one(self) -> "AlgElem":
        return self((1,))

    def elements(self) -> Iterator["AlgElem"]:
        """All elements in canonical order (0 first)."""
        F = self.field
        yield AlgElem(self, ())
        q = F.q
        for d in range(self.n):
            for lc in range(1, q):
                for i in range(q ** d):
                    c = []
                    for _ in range(d):
                        i, r = divmod(i, q)
                        c.append(r)
                    yield AlgElem(self, tuple(c) + (lc,))

    def order(self) -> int:
        return self.field.q ** self.n

    # -- norms and classes --
    def norm(self, a: "AlgElem") -> FieldElem:
        F = self.field
        if self.n == 0:
            return FieldElem(F, 1)
        r = t_resultant(F, self.monic_f.c, a.c) if a.c else 0
        if r == 0:
            raise NonInvertible(f"{a} is not invertible in E_f")
        return FieldElem(F, r)

    def is_square_class(self, a: "AlgElem") -> list[bool]:
        """Per component (canonical order) whether a is a square there."""
        self._require_squarefree()
        F = self.field
        out = []
        for p in self.components:
            red = t_mod(F, a.c, p.c)
            if not red:
                raise NonInvertible(f"{a} is not invertible in E_f")
            out.append(t_sqclass(F, p.c, red) == 0)
        return out

    def class_bits(self, c: tuple) -> tuple[int, ...]:
        """Non-square indicator per component for a raw representative."""
        F = self.field
        return tuple(t_sqclass(F, p.c, t_mod(F, c, p.c)) for p in self.components)

    def square_class_reps(self) -> list["AlgElem"]:
        self._require_squarefree()
        if self._reps is None:
            comps = self.components
            choices = []
            for p in comps:
                ns = residue_field(p).canonical_nonsquare().c
                choices.append(((1,), ns))
            reps = []
            for combo in itertools.product(*choices):
                v, _ = t_crt(self.field, [(p.c, w) for p, w in zip(comps, combo)])
                reps.append(AlgElem(self, v))
            self._reps = reps
        return list(self._reps)

    def norm_condition_filter(self, reps: Sequence["AlgElem"]) -> list["AlgElem"]:
        self._require_squarefree()
        F = self.field
        lc_class = 0 if F.is_square_int(self.lc.v) else 1
        out = []
        for a in reps:
            nc = 0 if F.is_square_int(self.norm(a).v) else 1
            if nc == 0 or nc == lc_class:
                out.append(a)
        return out

    # -- residue-field operations (f irreducible) --
    def _require_field(self) -> None:
        if not self.is_field():
            raise ValueError(f"E_f is not a field for f = {self.f}")

    def is_square(self, a: "AlgElem") -> bool:
        """Euler criterion in the field E_f."""
        self._require_field()
        if not a.c:
            raise NonInvertible("is_square is undefined at 0")
        F = self.field
        e = (F.q ** self.n - 1) // 2
        return t_powmod(F, a.c, e, self.monic_f.c) == (1,)

    def canonical_nonsquare(self) -> "AlgElem":
        self._require_field()
        if self._ns is None:
            F, p = self.field, self.monic_f.c
            for a in self.elements():
                if a.c and t_sqclass(F, p, a.c):
                    self._ns = a
                    break
        return self._ns

    def sqrt(self, a: "AlgElem") -> "AlgElem":
        """Canonical square root (the smaller root in canonical order)."""
        self._require_field()
        if not a.c:
            return a
        if not self.is_square(a):
            raise NotASquare(f"{a} is not a square in E_p")
        F, m = self.field, self.monic_f.c
        r = tonelli_shanks(
            a.c,
            one=(1,),
            mul=lambda x, y: t_mulmod(F, x, y, m),
            power=lambda x, e: t_powmod(F, x, e, m),
            order=F.q ** self.n - 1,
            nonsquare=self.canonical_nonsquare().c,
        )
        other = t_neg(F, r)
        return AlgElem(self, min(r, other, key=t_key))

    def __eq__(self, other):
        return isinstance(other, QuotAlg) and self.f == other.f

    def __hash__(self):
        return hash(("QuotAlg", self.f))

    def __repr__(self):
        return f"QuotAlg({self.f})"


@lru_cache(maxsize=50_000)
def residue_field(p: Poly) -> QuotAlg:
    """E_p for a monic irreducible p (cached)."""
    return QuotAlg(p)


class AlgElem:
    __slots__ = ("alg", "c")

    def __init__(self, alg: QuotAlg, c: tuple):
        self.alg = alg
        self.c = c

    @property
    def rep(self) -> Poly:
        return Poly._raw(self.alg.field, self.c)

    def coords(self) -> list[int]:
        """Coordinates in the power basis 1, theta, ..., theta^(n-1)."""
        return list(self.c) + [0] * (self.alg.n - len(self.c))

    def _other(self, o) -> tuple:
        if isinstance(o, AlgElem):
            if o.alg != self.alg:
                raise ValueError("elements of different algebras")
            return o.c
        return self.alg(o).c

    def __add__(self, o):
        return AlgElem(self.alg, t_add(self.alg.field, self.c, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return AlgElem(self.alg, t_sub(self.alg.field, self.c, self._other(o)))

    def __rsub__(self, o):
        return AlgElem(self.alg, t_sub(self.alg.field, self._other(o), self.c))

    def __neg__(self):
        return AlgElem(self.alg, t_neg(self.alg.field, self.c))

    def __mul__(self, o):
        A = self.alg
        if A.n == 0:
            return self
        return AlgElem(A, t_mulmod(A.field, self.c, self._other(o), A.monic_f.c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        A = self.alg
        if e < 0:
            return self.inverse() ** (-e)
        if A.n == 0:
            return self
        return AlgElem(A, t_powmod(A.field, self.c, e, A.monic_f.c))

    def is_invertible(self) -> bool:
        A = self.alg
        if A.n == 0:
            return True
        return bool(self.c) and t_gcd(A.field, self.c, A.monic_f.c) == (1,)

    def inverse(self) -> "AlgElem":
        A = self.alg
        if A.n == 0:
            return self
        inv = t_invmod(A.field, self.c, A.monic_f.c)
        if inv is None:
            raise NonInvertible(f"{self} is not invertible")
        return AlgElem(A, inv)

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.alg == other.alg and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((self.alg, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"AlgElem({self})"

    def __str__(self):
        from .textio import format_poly

        return format_poly(self.rep).replace("X", "θ")


def norm(a: AlgElem) -> FieldElem:
    return a.alg.norm(a)


def is_square_class(a: AlgElem) -> list[bool]:
    return a.alg.is_square_class(a)


def square_class_reps(alg: QuotAlg) -> list[AlgElem]:
    return alg.square_class_reps()


def norm_condition_filter(alg: QuotAlg, reps: Sequence[AlgElem]) -> list[AlgElem]:
    return alg.norm_condition_filter(reps)
