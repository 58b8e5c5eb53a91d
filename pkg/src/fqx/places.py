"""Places of E(X)/E, valuations, residues, tame symbols and ramification.

Square classes in a residue field are bits (1 = non-square).  At a finite
place p the class of a unit u is read off the norm Res(p, u); at infinity
the residue is the ratio of leading coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidRamSeq, NonUnitAtPlace, ZeroFunction
from .gf import FieldDesc, FieldElem, canonical_nonsquare
from .polyring import (
    Poly,
    t_divmod,
    t_gcd,
    t_key,
    t_monic,
    t_mul,
    t_scale,
    t_support,
)
from .quotalg import AlgElem, residue_field, t_sqclass


@dataclass(frozen=True)
class Place:
    """A monic irreducible ``poly``, or infinity when ``poly`` is None."""

    poly: Poly | None = None

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.deg

    def sort_key(self) -> tuple:
        return (1,) if self.poly is None else (0,) + t_key(self.poly.c)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self) -> str:
        return f"Place({self})"


INF = Place(None)


def finite_place(p: Poly) -> Place:
    from .polyring import is_irreducible

    if not p.is_monic() or not is_irreducible(p):
        raise ValueError(f"{p} is not monic irreducible")
    return Place(p)


def minus_one_bit(F: FieldDesc, degree: int) -> int:
    """Class of -1 in the degree-``degree`` extension of F."""
    return 1 if (F.q ** degree) % 4 == 3 else 0


def _fbit(F: FieldDesc, v: int) -> int:
    return 0 if F.is_square_int(v) else 1


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.field
        if den is None:
            den = Poly._raw(F, (1,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly._raw(F, (1,))
            return
        g = t_gcd(F, num.c, den.c)
        n = t_divmod(F, num.c, g)[0]
        d = t_divmod(F, den.c, g)[0]
        inv = F.inv(d[-1])
        self.num = Poly._raw(F, t_scale(F, n, inv))
        self.den = Poly._raw(F, t_monic(F, d))

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls(x)
        if isinstance(x, tuple) and len(x) == 2:
            return cls(*x)
        raise TypeError(f"cannot read {x!r} as a rational function")

    @property
    def field(self) -> FieldDesc:
        return self.num.field

    def _as(self, o) -> "RatFunc":
        if isinstance(o, (int, FieldElem)):
            return RatFunc(Poly.const(self.field, o))
        return RatFunc.coerce(o)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __mul__(self, o):
        o = self._as(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._as(o)
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __add__(self, o):
        o = self._as(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._as(o))

    def __rsub__(self, o):
        return (-self) + o

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return RatFunc(self.den ** (-e), self.num ** (-e))
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (Poly, int, FieldElem)):
            other = self._as(other)
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        from .textio import format_ratfunc

        return format_ratfunc(self.num, self.den)

    __repr__ = __str__


def _split(F: FieldDesc, a: tuple, p: tuple) -> tuple[int, tuple]:
    """(v_p(a), residue of the unit part of a mod p)."""
    v = 0
    while True:
        quo, rem = t_divmod(F, a, p)
        if rem:
            return v, rem
        a = quo
        v += 1


def _local(F: FieldDesc, p: tuple | None, r: RatFunc) -> tuple[int, int]:
    """(valuation, square-class bit of the unit part's residue)."""
    n, d = r.num.c, r.den.c
    if p is None:
        return len(d) - len(n), _fbit(F, n[-1]) ^ _fbit(F, d[-1])
    vn, rn = _split(F, n, p)
    if d == (1,):
        return vn, t_sqclass(F, p, rn)
    vd, rd = _split(F, d, p)
    return vn - vd, t_sqclass(F, p, rn) ^ t_sqclass(F, p, rd)


def _check(r: RatFunc) -> None:
    if r.is_zero():
        raise ZeroFunction("zero function")


def valuation(place: Place, r) -> int:
    r = RatFunc.coerce(r)
    _check(r)
    F = r.field
    if place.poly is None:
        return r.den.deg - r.num.deg
    p = place.poly.c
    vn = _split(F, r.num.c, p)[0]
    vd = _split(F, r.den.c, p)[0]
    return vn - vd


def residue(place: Place, r):
    """Residue of a unit at the place: AlgElem of E_p, or FieldElem at infinity."""
    r = RatFunc.coerce(r)
    _check(r)
    F = r.field
    if valuation(place, r) != 0:
        raise NonUnitAtPlace(f"{r} is not a unit at {place}")
    if place.poly is None:
        return FieldElem(F, F.div(r.num.c[-1], r.den.c[-1]))
    E = residue_field(place.poly)
    return E(r.num) * E(r.den).inverse()


@dataclass(frozen=True)
class SquareClass:
    place: Place
    nontrivial: bool
    witness: object  # AlgElem of E_p, or FieldElem at infinity

    def __str__(self):
        return str(self.witness)


def class_witness(F: FieldDesc, place: Place, bit: int):
    if place.poly is None:
        return canonical_nonsquare(F) if bit else FieldElem(F, 1)
    E = residue_field(place.poly)
    return E.canonical_nonsquare() if bit else E.one


def _symbol_bit(F: FieldDesc, p: tuple | None, f: RatFunc, g: RatFunc) -> int:
    a, fb = _local(F, p, f)
    b, gb = _local(F, p, g)
    deg = 1 if p is None else len(p) - 1
    return ((a * b) & minus_one_bit(F, deg)) ^ (fb & b) ^ (gb & a)


def tame_symbol(place: Place, f, g) -> SquareClass:
    f, g = RatFunc.coerce(f), RatFunc.coerce(g)
    _check(f)
    _check(g)
    F = f.field
    bit = _symbol_bit(F, None if place.poly is None else place.poly.c, f, g) & 1
    return SquareClass(place, bool(bit), class_witness(F, place, bit))


class RamSeq:
    """A finitely supported map Place -> k_1 E_p; only nontrivial entries kept."""

    __slots__ = ("field", "support")

    def __init__(self, field: FieldDesc, support: Iterable[Place] = (), *, check: bool = True):
        self.field = field
        self.support = frozenset(support)
        if check and len(self.support) % 2:
            raise InvalidRamSeq(
                f"odd support {sorted(self.support)} cannot be a ramification sequence")

    @classmethod
    def from_entries(cls, field: FieldDesc, entries: Mapping[Place, bool], *, check: bool = True) -> "RamSeq":
        return cls(field, (p for p, bit in entries.items() if bit), check=check)

    def is_valid(self) -> bool:
        return len(self.support) % 2 == 0

    @property
    def places(self) -> list[Place]:
        return sorted(self.support)

    @property
    def entries(self) -> dict[Place, SquareClass]:
        return {p: SquareClass(p, True, class_witness(self.field, p, 1)) for p in self.places}

    def __getitem__(self, place: Place) -> int:
        return 1 if place in self.support else 0

    def __add__(self, other: "RamSeq") -> "RamSeq":
        return RamSeq(self.field, self.support ^ other.support, check=False)

    __sub__ = __add__

    def __eq__(self, other):
        return isinstance(other, RamSeq) and self.field == other.field and self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def __len__(self):
        return len(self.support)

    def __bool__(self):
        return bool(self.support)

    def restrict(self, places: Iterable[Place]) -> "RamSeq":
        return RamSeq(self.field, self.support & frozenset(places), check=False)

    def to_json(self) -> list[dict]:
        return [{"place": str(p), "class_witness": str(w)} for p, w in
                ((p, class_witness(self.field, p, 1)) for p in self.places)]

    def __repr__(self):
        return f"RamSeq({[str(p) for p in self.places]})"


def _places_of(F: FieldDesc, *fs: RatFunc) -> list[tuple]:
    seen = set()
    for r in fs:
        for c in (r.num.c, r.den.c):
            if len(c) > 1:
                seen.update(t_support(F, c))
    return sorted(seen, key=t_key)


def ramify(f, g) -> RamSeq:
    """The ramification of the symbol {f, g}."""
    f, g = RatFunc.coerce(f), RatFunc.coerce(g)
    _check(f)
    _check(g)
    F = f.field
    out = []
    for p in _places_of(F, f, g):
        if _symbol_bit(F, p, f, g) & 1:
            out.append(Place(Poly._raw(F, p)))
    if _symbol_bit(F, None, f, g) & 1:
        out.append(INF)
    seq = RamSeq(F, out, check=False)
    assert seq.is_valid(), "ramification with odd support"
    return seq


def nmap(rho: RamSeq) -> FieldElem:
    """Sum of the component norms, as the canonical witness of a class of E."""
    F = rho.field
    bit = 0
    for place in rho.support:
        w = class_witness(F, place, 1)
        if place.poly is None:
            bit ^= _fbit(F, w.v)
        else:
            bit ^= _fbit(F, residue_field(place.poly).norm(w).v)
    return canonical_nonsquare(F) if bit else FieldElem(F, 1)


def symbol_support_polys(F: FieldDesc, rho: RamSeq) -> tuple[tuple, ...]:
    """Finite support of rho as raw tuples in canonical order."""
    return tuple(p.poly.c for p in rho.places if p.poly is not None)


def product_of_places(F: FieldDesc, places: Iterable[Place]) -> Poly:
    acc: tuple = (1,)
    for p in places:
        if p.poly is not None:
            acc = t_mul(F, acc, p.poly.c)
    return Poly._raw(F, acc)


__all__ = [
    "INF",
    "AlgElem",
    "Place",
    "RamSeq",
    "RatFunc",
    "SquareClass",
    "nmap",
    "ramify",
    "residue",
    "tame_symbol",
    "valuation",
]
