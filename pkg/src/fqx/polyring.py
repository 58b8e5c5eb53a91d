"""Univariate polynomials over a finite field.

Coefficients are stored as tuples of field encodings, lowest degree first,
with no trailing zeros.  The bulk of the work happens in the tuple-level
helpers (prefixed ``t_``); :class:`Poly` is a thin immutable wrapper.

Canonical order on polynomials: by degree, then by coefficients compared from
the leading one downwards (element encodings as integers).
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ConstantInput, NonCoprimeModuli, ZeroPolynomial
from .gf import FieldDesc, FieldElem, make_field, prime_factors

_GLOBAL_SEED = 0


def set_global_seed(seed: int) -> None:
    """Seed used to derive per-call seeds for randomized splitting."""
    global _GLOBAL_SEED
    _GLOBAL_SEED = int(seed)


def _derived_rng(F: FieldDesc, a: tuple, tag: str) -> random.Random:
    h = hashlib.sha256(f"{_GLOBAL_SEED}|{F!r}|{F.modulus}|{a}|{tag}".encode()).digest()
    return random.Random(int.from_bytes(h[:8], "big"))


# ---------------------------------------------------------------------------
# tuple-level arithmetic
# ---------------------------------------------------------------------------

def _trim(a: list) -> tuple:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def t_add(F: FieldDesc, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if F.k == 1:
        p = F.p
        out = list(a)
        for i, y in enumerate(b):
            out[i] = (out[i] + y) % p
    else:
        add = F.add
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add(out[i], y)
    return _trim(out)


def t_neg(F: FieldDesc, a: tuple) -> tuple:
    if F.k == 1:
        p = F.p
        return tuple((-x) % p for x in a)
    neg = F.neg
    return tuple(neg(x) for x in a)


def t_sub(F: FieldDesc, a: tuple, b: tuple) -> tuple:
    return t_add(F, a, t_neg(F, b))


def t_scale(F: FieldDesc, a: tuple, c: int) -> tuple:
    if c == 0:
        return ()
    if F.k == 1:
        p = F.p
        return tuple(x * c % p for x in a)
    mul = F.mul
    return tuple(mul(x, c) for x in a)


def t_mul(F: FieldDesc, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if F.k == 1:
        p = F.p
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return _trim([r % p for r in res])
    add, mul = F.add, F.mul
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = add(res[i + j], mul(x, y))
    return _trim(res)


def t_divmod(F: FieldDesc, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = F.inv(b[-1])
    r = list(a)
    qlen = len(a) - db
    quot = [0] * qlen
    if F.k == 1:
        p = F.p
        for i in range(qlen - 1, -1, -1):
            c = r[i + db] * inv % p
            quot[i] = c
            if c:
                for j in range(db):
                    r[i + j] = (r[i + j] - c * b[j]) % p
            r[i + db] = 0
    else:
        mul, sub = F.mul, F.sub
        for i in range(qlen - 1, -1, -1):
            c = mul(r[i + db], inv)
            quot[i] = c
            if c:
                for j in range(db):
                    if b[j]:
                        r[i + j] = sub(r[i + j], mul(c, b[j]))
            r[i + db] = 0
    return _trim(quot), _trim(r[:db])


def t_mod(F: FieldDesc, a: tuple, b: tuple) -> tuple:
    db = len(b) - 1
    if len(a) - 1 < db:
        return a
    if F.k == 1 and b[-1] == 1:
        p = F.p
        r = list(a)
        for i in range(len(a) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                base = i - db
                for j in range(db):
                    r[base + j] -= c * b[j]
        return _trim([x % p for x in r[:db]])
    return t_divmod(F, a, b)[1]


def t_monic(F: FieldDesc, a: tuple) -> tuple:
    if not a or a[-1] == 1:
        return a
    return t_scale(F, a, F.inv(a[-1]))


def t_gcd(F: FieldDesc, a: tuple, b: tuple) -> tuple:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, t_mod(F, a, b)
    return t_monic(F, a)


def t_xgcd(F: FieldDesc, a: tuple, b: tuple) -> tuple[tuple, tuple, tuple]:
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    u0, u1 = (), (1,)
    while r1:
        q, r = t_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, t_sub(F, s0, t_mul(F, q, s1))
        u0, u1 = u1, t_sub(F, u0, t_mul(F, q, u1))
    if not r0:
        return (), (), ()
    inv = F.inv(r0[-1])
    return t_scale(F, r0, inv), t_scale(F, s0, inv), t_scale(F, u0, inv)


def t_invmod(F: FieldDesc, a: tuple, m: tuple) -> tuple | None:
    g, s, _ = t_xgcd(F, t_mod(F, a, m), m)
    if g != (1,):
        return None
    return t_mod(F, s, m)


def t_mulmod(F: FieldDesc, a: tuple, b: tuple, m: tuple) -> tuple:
    return t_mod(F, t_mul(F, a, b), m)


def t_powmod(F: FieldDesc, a: tuple, e: int, m: tuple) -> tuple:
    result = (1,) if len(m) > 1 else ()
    a = t_mod(F, a, m)
    while e:
        if e & 1:
            result = t_mulmod(F, result, a, m)
        e >>= 1
        if e:
            a = t_mulmod(F, a, a, m)
    return result


def t_deriv(F: FieldDesc, a: tuple) -> tuple:
    mul, p = F.mul, F.p
    return _trim([mul(a[i], i % p) for i in range(1, len(a))])


def t_eval(F: FieldDesc, a: tuple, x: int) -> int:
    acc = 0
    if F.k == 1:
        p = F.p
        for c in reversed(a):
            acc = (acc * x + c) % p
        return acc
    add, mul = F.add, F.mul
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def t_pow(F: FieldDesc, a: tuple, e: int) -> tuple:
    result = (1,)
    while e:
        if e & 1:
            result = t_mul(F, result, a)
        e >>= 1
        if e:
            a = t_mul(F, a, a)
    return result


def t_key(a: tuple) -> tuple:
    """Canonical sort key."""
    return (len(a), tuple(reversed(a)))


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------

class Poly:
    """Immutable polynomial over ``field``.

    ``Poly(F, [c0, c1, ...])`` takes coefficients lowest first.  Integer
    coefficients are reduced mod p over a prime field; over an extension
    field they must be element encodings in ``range(q)``.
    """

    __slots__ = ("field", "c", "_hash")

    def __init__(self, field: FieldDesc, coeffs: Iterable = ()):
        self.field = field
        out = []
        for x in coeffs:
            if isinstance(x, FieldElem):
                if x.field != field:
                    raise ValueError("coefficient from a different field")
                out.append(x.v)
            elif field.k == 1:
                out.append(int(x) % field.p)
            else:
                x = int(x)
                if not 0 <= x < field.q:
                    raise ValueError(f"{x} is not an element encoding of {field}")
                out.append(x)
        self.c = _trim(out)
        self._hash = None

    @classmethod
    def _raw(cls, field: FieldDesc, c: tuple) -> "Poly":
        obj = object.__new__(cls)
        obj.field = field
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def x(cls, field: FieldDesc) -> "Poly":
        return cls._raw(field, (0, 1))

    @classmethod
    def const(cls, field: FieldDesc, v) -> "Poly":
        return cls(field, [v])

    # -- basic properties --
    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.field, v) for v in self.c)

    @property
    def deg(self) -> int:
        """Degree; -1 stands in for -infinity on the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    @property
    def lc(self) -> FieldElem:
        if not self.c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElem(self.field, self.c[-1])

    def monic(self) -> "Poly":
        if not self.c:
            raise ZeroPolynomial("zero polynomial has no monic associate")
        return Poly._raw(self.field, t_monic(self.field, self.c))

    def coeff(self, i: int) -> FieldElem:
        return FieldElem(self.field, self.c[i] if 0 <= i < len(self.c) else 0)

    def sort_key(self) -> tuple:
        return t_key(self.c)

    def index(self) -> int:
        """Position among all polynomials of the same degree and below."""
        q = self.field.q
        return sum(v * q ** i for i, v in enumerate(self.c))

    # -- arithmetic --
    def _lift(self, other) -> tuple | None:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other.c
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return _trim([other.v])
        if isinstance(other, int):
            return _trim([self.field.from_int(other)])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.field, t_add(self.field, self.c, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.field, t_sub(self.field, self.c, o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.field, t_sub(self.field, o, self.c))

    def __neg__(self):
        return Poly._raw(self.field, t_neg(self.field, self.c))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Poly._raw(self.field, t_mul(self.field, self.c, o))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        q, r = t_divmod(self.field, self.c, o)
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly._raw(self.field, t_mod(self.field, self.c, o))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        return Poly._raw(self.field, t_pow(self.field, self.c, e))

    def powmod(self, e: int, m: "Poly") -> "Poly":
        return Poly._raw(self.field, t_powmod(self.field, self.c, e, m.c))

    def derivative(self) -> "Poly":
        return Poly._raw(self.field, t_deriv(self.field, self.c))

    def __call__(self, x) -> FieldElem:
        if isinstance(x, int):
            x = self.field.from_int(x)
        elif isinstance(x, FieldElem):
            x = x.v
        return FieldElem(self.field, t_eval(self.field, self.c, x))

    def divides(self, other: "Poly") -> bool:
        return not (other % self).c

    # -- comparison --
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, (int, FieldElem)):
            return self.c == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.c))
        return self._hash

    def __lt__(self, other: "Poly"):
        return self.sort_key() < other.sort_key()

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"Poly({self.field}, {self})"

    def __str__(self):
        from .textio import format_poly

        return format_poly(self)

    def __reduce__(self):
        return (Poly._raw, (self.field, self.c))


def X(field: FieldDesc) -> Poly:
    return Poly.x(field)


def _check_nonzero(f: Poly) -> None:
    if not f.c:
        raise ZeroPolynomial("zero polynomial")


def gcd(a: Poly, b: Poly) -> Poly:
    return Poly._raw(a.field, t_gcd(a.field, a.c, b.c))


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    F = a.field
    g, s, t = t_xgcd(F, a.c, b.c)
    return Poly._raw(F, g), Poly._raw(F, s), Poly._raw(F, t)


def invmod(a: Poly, m: Poly) -> Poly | None:
    r = t_invmod(a.field, a.c, m.c)
    return None if r is None else Poly._raw(a.field, r)


def coprime(a: Poly, b: Poly) -> bool:
    return t_gcd(a.field, a.c, b.c) == (1,)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    unit: FieldElem
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        F = self.unit.field
        acc = Poly._raw(F, (self.unit.v,))
        for p, e in self.factors:
            acc = acc * p ** e
        return acc

    @property
    def support(self) -> tuple[Poly, ...]:
        return tuple(p for p, _ in self.factors)

    def multiplicity(self, p: Poly) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _pth_root(F: FieldDesc, a: tuple) -> tuple:
    p = F.p
    e = F.q // p
    return tuple(F.pow(a[i], e) for i in range(0, len(a), p))


def t_sqfree_decomp(F: FieldDesc, f: tuple) -> list[tuple[tuple, int]]:
    """Square-free decomposition of a monic f: [(g_i, i)] with f = prod g_i^i."""
    out: list[tuple[tuple, int]] = []
    if len(f) <= 1:
        return out
    d = t_deriv(F, f)
    c = t_gcd(F, f, d)
    w = t_divmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = t_gcd(F, w, c)
        z = t_divmod(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = t_divmod(F, c, y)[0]
    if len(c) > 1:
        for g, m in t_sqfree_decomp(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def _frobenius_chain(F: FieldDesc, f: tuple, upto: int) -> list[tuple]:
    """[X^(q^i) mod f for i = 0..upto]."""
    out = [t_mod(F, (0, 1), f)]
    for _ in range(upto):
        out.append(t_powmod(F, out[-1], F.q, f))
    return out


def t_ddf(F: FieldDesc, f: tuple) -> list[tuple[tuple, int]]:
    """Distinct-degree factorization of a monic square-free f."""
    out = []
    h = t_mod(F, (0, 1), f)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = t_powmod(F, h, F.q, f)
        g = t_gcd(F, t_sub(F, h, (0, 1)), f)
        if len(g) > 1:
            out.append((g, d))
            f = t_divmod(F, f, g)[0]
            h = t_mod(F, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def t_edf(F: FieldDesc, f: tuple, d: int, rng: random.Random) -> list[tuple]:
    """Split a monic f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (F.q ** d - 1) // 2
    while True:
        a = _trim([rng.randrange(F.q) for _ in range(n)])
        if len(a) <= 1:
            continue
        g = t_gcd(F, a, f)
        if len(g) <= 1:
            b = t_sub(F, t_powmod(F, a, e, f), (1,))
            g = t_gcd(F, b, f)
        if 1 < len(g) < len(f):
            h = t_divmod(F, f, g)[0]
            return t_edf(F, g, d, rng) + t_edf(F, h, d, rng)


@lru_cache(maxsize=200_000)
def _factor_cached(F: FieldDesc, c: tuple) -> tuple[int, tuple[tuple[tuple, int], ...]]:
    unit = c[-1]
    f = t_monic(F, c)
    rng = _derived_rng(F, c, "factor")
    found: dict[tuple, int] = {}
    for g, m in t_sqfree_decomp(F, f):
        for block, d in t_ddf(F, g):
            for p in t_edf(F, block, d, rng):
                found[p] = found.get(p, 0) + m
    facs = tuple(sorted(found.items(), key=lambda pe: t_key(pe[0])))
    return unit, facs


def factor(f: Poly) -> Factorization:
    _check_nonzero(f)
    F = f.field
    unit, facs = _factor_cached(F, f.c)
    return Factorization(FieldElem(F, unit), tuple((Poly._raw(F, p), e) for p, e in facs))


def t_support(F: FieldDesc, c: tuple) -> tuple[tuple, ...]:
    return tuple(p for p, _ in _factor_cached(F, c)[1])


def support(f: Poly) -> tuple[Poly, ...]:
    """Monic irreducible factors of f in canonical order."""
    _check_nonzero(f)
    return tuple(Poly._raw(f.field, p) for p in t_support(f.field, f.c))


def t_is_squarefree(F: FieldDesc, c: tuple) -> bool:
    if len(c) <= 1:
        return True
    d = t_deriv(F, c)
    if not d:
        return False
    return len(t_gcd(F, c, d)) == 1


def is_squarefree(f: Poly) -> bool:
    _check_nonzero(f)
    return t_is_squarefree(f.field, f.c)


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the irreducible factors of odd multiplicity."""
    _check_nonzero(f)
    F = f.field
    acc: tuple = (1,)
    for p, e in _factor_cached(F, f.c)[1]:
        if e % 2:
            acc = t_mul(F, acc, p)
    return Poly._raw(F, acc)


def t_is_irreducible(F: FieldDesc, c: tuple) -> bool:
    n = len(c) - 1
    f = t_monic(F, c)
    chain = _frobenius_chain(F, f, n)
    x = t_mod(F, (0, 1), f)
    if chain[n] != x:
        return False
    for ell in prime_factors(n):
        h = chain[n // ell]
        if len(t_gcd(F, t_sub(F, h, x), f)) > 1:
            return False
    return True


def is_irreducible(f: Poly) -> bool:
    """Rabin's test."""
    if f.deg < 1:
        raise ConstantInput("irreducibility is defined for nonconstant polynomials")
    return t_is_irreducible(f.field, f.c)


# ---------------------------------------------------------------------------
# resultant, CRT
# ---------------------------------------------------------------------------

def t_resultant(F: FieldDesc, f: tuple, g: tuple) -> int:
    acc = 1
    while True:
        m, n = len(f) - 1, len(g) - 1
        if m == 0:
            return F.mul(acc, F.pow(f[0], n))
        if n == 0:
            return F.mul(acc, F.pow(g[0], m))
        if n >= m:
            r = t_mod(F, g, f)
            if not r:
                return 0
            acc = F.mul(acc, F.pow(f[-1], n - (len(r) - 1)))
            g = r
        else:
            if (m * n) % 2:
                acc = F.neg(acc)
            f, g = g, f


def resultant(f: Poly, g: Poly) -> FieldElem:
    """Res(f, g) = lc(f)^deg(g) * prod g(a) over the roots a of f."""
    _check_nonzero(f)
    _check_nonzero(g)
    return FieldElem(f.field, t_resultant(f.field, f.c, g.c))


def t_crt(F: FieldDesc, pairs: Sequence[tuple[tuple, tuple]]) -> tuple[tuple, tuple]:
    M: tuple = (1,)
    v: tuple = ()
    for m, w in pairs:
        inv = t_invmod(F, M, m) if len(m) > 1 else ()
        if inv is None:
            raise NonCoprimeModuli("moduli are not pairwise coprime")
        if len(m) <= 1:
            if not m:
                raise NonCoprimeModuli("zero modulus")
            continue
        diff = t_mod(F, t_sub(F, w, v), m)
        v = t_add(F, v, t_mul(F, M, t_mulmod(F, diff, inv, m)))
        M = t_mul(F, M, m)
    return t_mod(F, v, M) if len(M) > 1 else (), M


def crt(residues: Sequence[tuple[Poly, Poly]]) -> Poly:
    """The unique p with deg p < sum of modulus degrees and p = v_i mod m_i."""
    residues = list(residues)
    if not residues:
        raise ValueError("crt needs at least one congruence")
    F = residues[0][0].field
    v, _ = t_crt(F, [(m.c, w.c) for m, w in residues])
    return Poly._raw(F, v)


# ---------------------------------------------------------------------------
# enumeration in canonical order
# ---------------------------------------------------------------------------

def _digits_tuple(i: int, q: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        i, d = divmod(i, q)
        out.append(d)
    return out


def t_monic_of_degree(F: FieldDesc, d: int) -> Iterator[tuple]:
    q = F.q
    for i in range(q ** d):
        yield tuple(_digits_tuple(i, q, d)) + (1,)


def t_polys_of_degree(F: FieldDesc, d: int) -> Iterator[tuple]:
    """All polynomials of exact degree d (d >= 0) in canonical order."""
    q = F.q
    for lc in range(1, q):
        for i in range(q ** d):
            yield tuple(_digits_tuple(i, q, d)) + (lc,)


def monic_of_degree(F: FieldDesc, d: int) -> Iterator[Poly]:
    for c in t_monic_of_degree(F, d):
        yield Poly._raw(F, c)


def polys_of_degree(F: FieldDesc, d: int) -> Iterator[Poly]:
    for c in t_polys_of_degree(F, d):
        yield Poly._raw(F, c)


def polys_up_to_degree(F: FieldDesc, d: int) -> Iterator[Poly]:
    """Nonzero polynomials of degree <= d in canonical order."""
    for e in range(d + 1):
        yield from polys_of_degree(F, e)


_SIEVE_LIMIT = 400_000


@lru_cache(maxsize=None)
def t_irreducibles(F: FieldDesc, d: int) -> tuple[tuple, ...]:
    """Monic irreducibles of degree d in canonical order."""
    if d < 1:
        return ()
    q = F.q
    if d == 1:
        return tuple((a, 1) for a in range(q))
    if q ** d > _SIEVE_LIMIT:
        return tuple(c for c in t_monic_of_degree(F, d) if t_is_irreducible(F, c))
    composite = bytearray(q ** d)
    for e in range(1, d // 2 + 1):
        for a in t_irreducibles(F, e):
            for b in t_monic_of_degree(F, d - e):
                prod = t_mul(F, a, b)
                idx = 0
                for v in reversed(prod[:-1]):
                    idx = idx * q + v
                composite[idx] = 1
    out = []
    for i in range(q ** d):
        if not composite[i]:
            out.append(tuple(_digits_tuple(i, q, d)) + (1,))
    return tuple(out)


def irreducibles(F: FieldDesc, d: int) -> tuple[Poly, ...]:
    return tuple(Poly._raw(F, c) for c in t_irreducibles(F, d))


def squarefree_polys(F: FieldDesc, d: int, *, monic: bool = False) -> Iterator[Poly]:
    """Square-free polynomials of exact degree d in canonical order."""
    src = t_monic_of_degree(F, d) if monic else t_polys_of_degree(F, d)
    for c in src:
        if t_is_squarefree(F, c):
            yield Poly._raw(F, c)


def random_poly(F: FieldDesc, d: int, rng: random.Random, *, monic: bool = False) -> Poly:
    """Uniform polynomial of exact degree d."""
    c = [rng.randrange(F.q) for _ in range(d)]
    lc = 1 if monic else rng.randrange(1, F.q)
    return Poly._raw(F, tuple(c) + (lc,))


def poly_from_ints(F: FieldDesc, coeffs: Sequence[int]) -> Poly:
    """Polynomial whose coefficients are integer literals (images of Z)."""
    return Poly._raw(F, _trim([F.from_int(int(x)) for x in coeffs]))


def base_field(p: int) -> FieldDesc:
    return make_field(p)
