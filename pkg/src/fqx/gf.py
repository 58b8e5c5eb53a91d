"""Finite fields F_{p^k} of odd characteristic.

Elements are encoded as integers ``0 <= v < q``.  The base-p digits of ``v``
(lowest first) are the coefficients of the element as a polynomial in the
generator ``t``, so integer order is the canonical element enumeration: the
highest coefficient is the most significant one.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import EvenCharacteristic, NonPrime, NotASquare, NotASubfield, ZeroInput

_ADD_TABLE_LIMIT = 729
_MAX_EXTENSION_ORDER = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def tonelli_shanks(x, *, one, mul, power, order: int, nonsquare):
    """Square root of a square ``x`` in a cyclic group of even order ``order``.

    Generic over the element type; the caller supplies the group operations
    and a fixed non-square, so the result is deterministic.
    """
    m, s = order, 0
    while m % 2 == 0:
        m //= 2
        s += 1
    c = power(nonsquare, m)
    r = power(x, (m + 1) // 2)
    t = power(x, m)
    while t != one:
        i, t2 = 0, t
        while t2 != one:
            t2 = mul(t2, t2)
            i += 1
        b = c
        for _ in range(s - i - 1):
            b = mul(b, b)
        r = mul(r, b)
        c = mul(b, b)
        t = mul(t, c)
        s = i
    return r


class FieldDesc:
    """The field F_q, q = p^k, built as F_p[t]/(modulus)."""

    __slots__ = ("p", "k", "q", "modulus", "_exp", "_log", "_add_t", "_neg_t",
                 "_sq", "_nonsquare", "add", "sub", "neg", "mul")

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        self.p, self.k, self.q = p, k, p ** k
        if k == 1:
            self.modulus = None
            self._exp = self._log = self._add_t = self._neg_t = None
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: a * b % p
        else:
            if self.q > _MAX_EXTENSION_ORDER:
                raise ValueError(f"F_{self.q} is beyond desk scale")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            self.modulus = modulus
            self._build_tables()
        self._sq = None
        self._nonsquare = None

    # -- construction ---------------------------------------------------
    def _digit_mul(self, a: int, b: int) -> int:
        p, k, mod = self.p, self.k, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * mod[j]
        return self.from_digits([c % p for c in prod[:k]])

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        factors = prime_factors(q - 1)
        gen = None
        for g in range(2, q):
            if all(self._slow_pow(g, (q - 1) // r) != 1 for r in factors):
                gen = g
                break
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._digit_mul(x, gen)
        self._exp, self._log = exp, log
        pows = [p ** i for i in range(self.k)]

        def dadd(a, b):
            r = 0
            for pw in pows:
                r += ((a // pw + b // pw) % p) * pw
            return r

        self._neg_t = [self.from_digits([(-d) % p for d in self.digits(a)]) for a in range(q)]
        neg_t = self._neg_t
        if q <= _ADD_TABLE_LIMIT:
            self._add_t = [[dadd(a, b) for b in range(q)] for a in range(q)]
            add_t = self._add_t
            self.add = lambda a, b: add_t[a][b]
            self.sub = lambda a, b: add_t[a][neg_t[b]]
        else:
            self._add_t = None
            self.add = dadd
            self.sub = lambda a, b: dadd(a, neg_t[b])
        self.neg = neg_t.__getitem__
        qm1 = q - 1

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % qm1]

        self.mul = mul

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._digit_mul(r, a)
            a = self._digit_mul(a, a)
            e >>= 1
        return r

    # -- encoding -------------------------------------------------------
    def digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.k):
            v, d = divmod(v, self.p)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d % self.p
        return v

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_q."""
        return n % self.p

    @property
    def generator_index(self) -> int:
        """Encoding of the generator ``t`` (requires k > 1)."""
        return self.p

    # -- arithmetic on encodings ------------------------------------------
    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if self.k == 1:
            if e < 0:
                a, e = self.inv(a), -e
            return pow(a, e, self.p)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_square_int(self, a: int) -> bool:
        """Euler criterion, tabulated; 0 counts as a square here."""
        if self._sq is None:
            self._sq = self._square_table()
        return self._sq[a]

    def _square_table(self) -> list[bool]:
        q = self.q
        if self.k > 1:
            log = self._log
            return [a == 0 or log[a] % 2 == 0 for a in range(q)]
        if q <= 1 << 20:
            t = [False] * q
            for x in range(q):
                t[x * x % q] = True
            return t
        return _LazyEuler(self)

    def sqrt_int(self, a: int) -> int:
        if a == 0:
            return 0
        if not self.is_square_int(a):
            raise NotASquare(f"{self.fmt(a)} is not a square in {self}")
        r = tonelli_shanks(a, one=1, mul=self.mul, power=self.pow,
                           order=self.q - 1, nonsquare=self.nonsquare_int())
        return min(r, self.neg(r))

    def nonsquare_int(self) -> int:
        if self._nonsquare is None:
            self._nonsquare = next(a for a in range(1, self.q) if not self.is_square_int(a))
        return self._nonsquare

    # -- user-facing ------------------------------------------------------
    def __call__(self, v) -> "FieldElem":
        if isinstance(v, FieldElem):
            if v.field != self:
                raise ValueError("element of a different field")
            return v
        return FieldElem(self, self.from_int(v))

    def elem(self, v: int) -> "FieldElem":
        """Element with encoding ``v`` (not an integer literal)."""
        return FieldElem(self, v)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def gen(self) -> "FieldElem":
        if self.k == 1:
            raise ValueError("a prime field has no generator symbol t")
        return FieldElem(self, self.p)

    def elements(self) -> Iterator["FieldElem"]:
        for v in range(self.q):
            yield FieldElem(self, v)

    def fmt(self, v: int) -> str:
        if self.k == 1:
            return str(v)
        terms = []
        for i, d in reversed(list(enumerate(self.digits(v)))):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if d == 1 else f"{d}*{mono}")
        return "+".join(terms) if terms else "0"

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldDesc) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"gf({self.p})" if self.k == 1 else f"gf({self.p}^{self.k})"

    __str__ = __repr__

    def __reduce__(self):
        return (FieldDesc, (self.p, self.k, self.modulus))


class _LazyEuler:
    def __init__(self, field: FieldDesc):
        self.field = field

    def __getitem__(self, a: int) -> bool:
        f = self.field
        return a == 0 or pow(a, (f.q - 1) // 2, f.p) == 1


class FieldElem:
    """An element of a FieldDesc; immutable."""

    __slots__ = ("field", "v")

    def __init__(self, field: FieldDesc, v: int):
        self.field = field
        self.v = v

    @property
    def rep(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.v))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.v
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.add(self.v, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.sub(self.v, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.sub(o, self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.mul(self.v, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.div(self.v, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.div(o, self.v))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.v))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.v, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.v))

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.v == other.v
        if isinstance(other, int):
            return self.v == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.v))

    def __lt__(self, other: "FieldElem"):
        return self.v < other.v

    def __repr__(self):
        return f"FieldElem({self.field}, {self.field.fmt(self.v)})"

    def __str__(self):
        return self.field.fmt(self.v)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldDesc:
    """F_{p^k} with the canonical modulus: the least monic irreducible of
    degree k over F_p when monic polynomials are ordered by their
    coefficients from the X^{k-1} term downwards."""
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if k == 1:
        return FieldDesc(p)
    return FieldDesc(p, k, canonical_modulus(p, k))


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    from .polyring import Poly, is_irreducible

    base = make_field(p)
    for idx in range(p ** k):
        low = [(idx // p ** i) % p for i in range(k)]
        f = Poly(base, low + [1])
        if is_irreducible(f):
            return tuple(low) + (1,)
    raise AssertionError("no irreducible polynomial found")


def is_square(x: FieldElem) -> bool:
    if x.v == 0:
        raise ZeroInput("is_square is undefined at 0")
    return x.field.is_square_int(x.v)


def sqrt(x: FieldElem) -> FieldElem:
    """Canonical square root: the smaller of the two roots in element order."""
    return FieldElem(x.field, x.field.sqrt_int(x.v))


def canonical_nonsquare(field: FieldDesc) -> FieldElem:
    return FieldElem(field, field.nonsquare_int())


@lru_cache(maxsize=None)
def embedding(sub: FieldDesc, big: FieldDesc) -> tuple[int, ...]:
    """Table mapping encodings of ``sub`` into ``big``.

    The generator of ``sub`` goes to the least root of its modulus in ``big``.
    """
    if sub.p != big.p or big.k % sub.k:
        raise NotASubfield(f"{sub} is not a subfield of {big}")
    if sub.k == 1:
        return tuple(range(sub.p))
    mod = sub.modulus
    root = None
    for r in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    if root is None:
        raise AssertionError("modulus has no root in the extension")
    powers = [1]
    for _ in range(sub.k - 1):
        powers.append(big.mul(powers[-1], root))
    table = []
    for v in range(sub.q):
        acc = 0
        for d, pw in zip(sub.digits(v), powers):
            if d:
                acc = big.add(acc, big.mul(d, pw))
        table.append(acc)
    return tuple(table)


def norm_to_prime(x: FieldElem, subfield: FieldDesc) -> FieldElem:
    """Norm from the field of ``x`` down to ``subfield``: x^((Q-1)/(q-1))."""
    big = x.field
    table = embedding(subfield, big)
    e = (big.q - 1) // (subfield.q - 1)
    y = big.pow(x.v, e)
    try:
        return FieldElem(subfield, table.index(y))
    except ValueError:
        raise AssertionError("norm left the subfield") from None


def field_from_order(q: int) -> FieldDesc:
    """``gf(q)`` for a prime power q."""
    if q < 3:
        if q == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        raise NonPrime(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NonPrime(f"{q} is not a prime power")
    p = factors[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return make_field(p, k)


ElemMap = Callable[[int], int]
