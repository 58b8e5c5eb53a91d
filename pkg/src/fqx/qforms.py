"""Diagonal quadratic forms over F_q(X): local and global isotropy.

Entries are kept modulo squares as const * (monic square-free polynomial).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import ConsistencyError, NotSquareFree, PreconditionViolated, ZeroFunction
from .gf import FieldDesc, FieldElem, canonical_nonsquare
from .places import INF, Place, RamSeq, RatFunc, minus_one_bit, product_of_places, ramify
from .polyring import (
    Poly,
    is_irreducible,
    squarefree_part,
    t_divmod,
    t_is_squarefree,
    t_key,
    t_mod,
    t_mul,
    t_support,
)
from .quotalg import t_sqclass
from .sqref import realize_ramification

DEFAULT_VECTOR_CAP = 6
DEFAULT_VECTOR_BUDGET = 6_000_000


class Justification(str, Enum):
    DIM5PLUS = "Dim5Plus"
    SYMBOL_VANISHES = "SymbolVanishes"
    SYMBOL_NONZERO = "SymbolNonzero"
    LOCAL_GLOBAL = "LocalGlobal"
    SLOT_PARTNER = "SlotPartner"
    TWO_DIM_SQUARE = "TwoDimSquare"
    ANISOTROPIC_1DIM = "Anisotropic1Dim"


class DiagForm:
    """<a_1, ..., a_n> with a_i = const_i * sqfree_i."""

    def __init__(self, field: FieldDesc, entries: Sequence[tuple[int, tuple]]):
        if not entries:
            raise ValueError("a form needs at least one entry")
        self.field = field
        self.entries: tuple[tuple[int, tuple], ...] = tuple(entries)

    @classmethod
    def from_values(cls, values: Sequence) -> "DiagForm":
        """Normalize nonzero polynomials / rational functions modulo squares."""
        out = []
        F = None
        for v in values:
            r = RatFunc.coerce(v)
            F = r.field
            if r.is_zero():
                raise ZeroFunction("forms must be regular: zero entry")
            prod = r.num * r.den
            out.append((prod.c[-1], squarefree_part(prod).c))
        return cls(F, out)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int) -> Poly:
        c, s = self.entries[i]
        F = self.field
        return Poly._raw(F, tuple(F.mul(c, x) for x in s))

    def values(self) -> list[Poly]:
        return [self.entry(i) for i in range(self.dim)]

    def scaled(self, lam) -> "DiagForm":
        lam = RatFunc.coerce(lam)
        return DiagForm.from_values([RatFunc(v) * lam for v in self.values()])

    def support(self) -> list[tuple]:
        seen = set()
        for _, s in self.entries:
            if len(s) > 1:
                seen.update(t_support(self.field, s))
        return sorted(seen, key=t_key)

    def places(self) -> list[Place]:
        F = self.field
        return [Place(Poly._raw(F, p)) for p in self.support()] + [INF]

    def evaluate(self, xs: Sequence[Poly]) -> Poly:
        acc = Poly._raw(self.field, ())
        for a, x in zip(self.values(), xs):
            acc = acc + a * x * x
        return acc

    def __str__(self):
        return "<" + ", ".join(str(v) for v in self.values()) + ">"

    __repr__ = __str__


@dataclass
class IsotropyVerdict:
    isotropic: bool
    justification: Justification
    place: Place | None = None
    local_table: list[tuple[Place, bool]] | None = None
    partner: Poly | None = None
    witness: list[Poly] | None = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# local isotropy
# ---------------------------------------------------------------------------

def _residue_form_isotropic(F: FieldDesc, degree: int, bits: list[int]) -> bool:
    if len(bits) >= 3:
        return True
    if len(bits) == 2:
        return (minus_one_bit(F, degree) ^ bits[0] ^ bits[1]) == 0
    return False


def local_parts(phi: DiagForm, place: Place) -> tuple[list[int], list[int]]:
    """Square-class bits of the two residue forms (even / odd valuation)."""
    F = phi.field
    even, odd = [], []
    if place.poly is None:
        for c, s in phi.entries:
            b = 0 if F.is_square_int(c) else 1
            (odd if (len(s) - 1) % 2 else even).append(b)
        return even, odd
    p = place.poly.c
    for c, s in phi.entries:
        quo, rem = t_divmod(F, s, p)
        if rem:
            even.append(t_sqclass(F, p, t_mod(F, tuple(F.mul(c, x) for x in s), p)))
        else:
            u = t_mod(F, tuple(F.mul(c, x) for x in quo), p)
            odd.append(t_sqclass(F, p, u))
    return even, odd


def local_isotropy(phi: DiagForm, place: Place) -> bool:
    """Springer: isotropic over the completion iff a residue form is."""
    F = phi.field
    even, odd = local_parts(phi, place)
    deg = place.degree
    return _residue_form_isotropic(F, deg, even) or _residue_form_isotropic(F, deg, odd)


def local_table(phi: DiagForm) -> list[tuple[Place, bool]]:
    return [(pl, local_isotropy(phi, pl)) for pl in phi.places()]


# ---------------------------------------------------------------------------
# global decision
# ---------------------------------------------------------------------------

def _neg_prod(phi: DiagForm, i: int, j: int) -> Poly:
    return -(phi.entry(i) * phi.entry(j))


def is_isotropic(phi: DiagForm) -> IsotropyVerdict:
    F = phi.field
    n = phi.dim
    if n == 1:
        return IsotropyVerdict(False, Justification.ANISOTROPIC_1DIM)
    if n == 2:
        (c1, s1), (c2, s2) = phi.entries
        iso = s1 == s2 and F.is_square_int(F.neg(F.mul(c1, c2)))
        return IsotropyVerdict(iso, Justification.TWO_DIM_SQUARE)
    if n == 3:
        xi = ramify(_neg_prod(phi, 0, 1), _neg_prod(phi, 0, 2))
        if not xi:
            return IsotropyVerdict(True, Justification.SYMBOL_VANISHES)
        return IsotropyVerdict(False, Justification.SYMBOL_NONZERO, place=xi.places[0])
    if n == 4:
        table = local_table(phi)
        return IsotropyVerdict(all(ok for _, ok in table), Justification.LOCAL_GLOBAL,
                               local_table=table)
    return IsotropyVerdict(True, Justification.DIM5PLUS)


# ---------------------------------------------------------------------------
# slot partners
# ---------------------------------------------------------------------------

def _coerce_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    r = RatFunc.coerce(x)
    return r.num * r.den


def find_slot_partner(f: Poly, g, h) -> Poly | None:
    """q with {g, h} = {f, q}, or None when some completion obstructs it."""
    F = f.field
    if f.is_zero() or not t_is_squarefree(F, f.c):
        raise NotSquareFree(f"{f} is not square-free")
    g, h = _coerce_poly(g), _coerce_poly(h)
    if g.is_zero() or h.is_zero():
        raise ZeroFunction("symbol entries must be nonzero")
    xi = ramify(g, h)
    finite = [p for p in xi.places if p.poly is not None]
    ps = product_of_places(F, finite)
    if f.deg % 2:
        c_inf = canonical_nonsquare(F) if INF in xi.support else FieldElem(F, 1)
        sign = -1 if ps.deg % 2 else 1
        k = ps * (c_inf * sign)
    else:
        k = ps
    rho = ramify(f, k) + xi
    fsupp = set(t_support(F, f.c)) if f.deg > 0 else set()
    if any(p.poly is not None and p.poly.c not in fsupp for p in rho.support):
        return None
    if INF in rho.support and F.is_square_int(f.c[-1]):
        return None
    q = realize_ramification(rho, f)
    partner = k * q
    if ramify(f, partner) != xi:
        raise ConsistencyError(f"slot partner {partner} for {f} does not reproduce {{g, h}}")
    return partner


def dim4_shape(phi: DiagForm) -> tuple[Poly, Poly, Poly]:
    """(f, g, h) with phi similar to <f, -g, -h, gh>.

    With d = abcd the form is similar to <d, -d(-ab), -d(-ac), ...>; every
    entry is then reduced modulo squares.
    """
    if phi.dim != 4:
        raise ValueError("dim4_shape needs a 4-dimensional form")
    a, b, c, d = phi.values()
    delta = a * b * c * d

    def red(x: Poly) -> Poly:
        s = squarefree_part(x)
        return s * x.lc

    f = red(delta)
    g = red(delta * (-(a * b)))
    h = red(delta * (-(a * c)))
    return f, g, h


def slot_verdict(phi: DiagForm) -> IsotropyVerdict:
    """Dim-4 decision through the slot-partner construction."""
    f, g, h = dim4_shape(phi)
    q = find_slot_partner(f, g, h)
    return IsotropyVerdict(q is not None, Justification.SLOT_PARTNER, partner=q,
                           extra={"f": f, "g": g, "h": h})


def refine_places(f: Poly, g: Poly, h: Poly) -> list[Place]:
    """Supp of the symbol {g, h} together with Supp(f) and infinity."""
    F = f.field
    out = set(ramify(g, h).support)
    if f.deg > 0:
        out.update(Place(Poly._raw(F, p)) for p in t_support(F, f.c))
    out.add(INF)
    return sorted(out)


def common_slot(symbols: Sequence[tuple], field: FieldDesc | None = None) -> tuple[Poly, list[Poly]]:
    """A square-free f with non-square leading coefficient serving every symbol.

    Returns (f, partners) with ramify(f, partners[i]) = ramify(*symbols[i]).
    """
    if field is None:
        if not symbols:
            raise ValueError("common_slot of no symbols needs the field")
        field = _coerce_poly(symbols[0][0]).field
    F = field
    ns = canonical_nonsquare(F)
    seqs = []
    places: set[Place] = set()
    for g, h in symbols:
        xi = ramify(_coerce_poly(g), _coerce_poly(h))
        seqs.append(xi)
        places.update(p for p in xi.support if p.poly is not None)
    base = product_of_places(F, sorted(places))
    if base.deg <= 0:
        base = Poly.x(F)
    f = base * ns
    partners = []
    for xi in seqs:
        q = realize_ramification(xi, f)
        if ramify(f, q) != xi:
            raise ConsistencyError("common slot partner does not reproduce its symbol")
        partners.append(q)
    return f, partners


def hyper_example_form(f: Poly, p: Poly) -> DiagForm:
    """<f, -p, X, -pX> for an irreducible factor p of f with f(0)p(0) a nonzero square."""
    F = f.field
    if not p.is_monic() or p.deg < 1 or not is_irreducible(p):
        raise PreconditionViolated(f"{p} is not monic irreducible")
    if f.is_zero() or not t_is_squarefree(F, f.c):
        raise PreconditionViolated(f"{f} is not square-free")
    if not p.divides(f):
        raise PreconditionViolated(f"{p} does not divide {f}")
    v = F.mul(f(0).v, p(0).v)
    if v == 0 or not F.is_square_int(v):
        raise PreconditionViolated("f(0) p(0) is not a nonzero square")
    x = Poly.x(F)
    return DiagForm.from_values([f, -p, x, -(p * x)])


# ---------------------------------------------------------------------------
# bounded isotropic-vector search
# ---------------------------------------------------------------------------

@dataclass
class VectorSearchResult:
    witness: list[Poly] | None
    complete: bool          # every degree up to the cap was searched
    degree_reached: int


def _digit_rows(F: FieldDesc, D: int) -> np.ndarray:
    """All polynomials of degree <= D as rows of coefficient encodings."""
    q = F.q
    n = q ** (D + 1)
    idx = np.arange(n, dtype=np.int64)
    rows = np.empty((n, D + 1), dtype=np.int64)
    for j in range(D + 1):
        rows[:, j] = idx % q
        idx //= q
    return rows


class _Lanes:
    """Polynomials over F_q as vectors over F_p (k lanes per coefficient)."""

    def __init__(self, F: FieldDesc, length: int):
        self.F = F
        self.length = length
        self.width = length * F.k
        self.p = F.p
        self.exact = self.p ** self.width < 2 ** 62
        self.weights = np.array([self.p ** i for i in range(self.width)], dtype=np.int64) \
            if self.exact else None

    def vec(self, c: tuple) -> np.ndarray:
        out = np.zeros(self.width, dtype=np.int64)
        k = self.F.k
        for i, v in enumerate(c):
            ds = self.F.digits(v)
            out[i * k:(i + 1) * k] = ds
        return out

    def keys(self, m: np.ndarray) -> np.ndarray:
        if self.exact:
            return m @ self.weights
        return np.array([hash(r.tobytes()) for r in m], dtype=np.int64)


def _value_table(F: FieldDesc, a: tuple, D: int, lanes: _Lanes) -> np.ndarray:
    """Rows a*x^2 for every x of degree <= D, in digit order of x."""
    q = F.q
    n = q ** (D + 1)
    out = np.zeros((n, lanes.width), dtype=np.int64)
    for i in range(n):
        c = []
        j = i
        for _ in range(D + 1):
            j, r = divmod(j, q)
            c.append(r)
        while c and c[-1] == 0:
            c.pop()
        if c:
            sq = t_mul(F, tuple(c), tuple(c))
            out[i] = lanes.vec(t_mul(F, a, sq))
    return out


def _half(tables: list[np.ndarray], p: int, chunk_limit: int):
    """Yield (start_index, lane sums) over the product of the tables in chunks."""
    sizes = [t.shape[0] for t in tables]
    if len(tables) == 1:
        yield 0, tables[0]
        return
    head, rest = tables[0], tables[1:]
    rest_sum = None
    for _, block in _half(rest, p, chunk_limit):
        rest_sum = block if rest_sum is None else np.vstack([rest_sum, block])
    m = rest_sum.shape[0]
    step = max(1, chunk_limit // max(1, m))
    for s in range(0, sizes[0], step):
        h = head[s:s + step]
        block = (h[:, None, :] + rest_sum[None, :, :]) % p
        yield s * m, block.reshape(-1, block.shape[-1])


def _zero_or_monic_rows(F: FieldDesc, D: int) -> np.ndarray:
    """Row indices (digit order) of 0 and of the monic polynomials of degree <= D."""
    q = F.q
    rows = [0]
    for d in range(D + 1):
        base = q ** d
        rows.extend(range(base, 2 * base))
    return np.array(rows, dtype=np.int64)


def _unravel(index: int, sizes: list[int]) -> list[int]:
    out = []
    for s in reversed(sizes):
        index, r = divmod(index, s)
        out.append(r)
    return list(reversed(out))


def _poly_from_index(F: FieldDesc, i: int, D: int) -> Poly:
    c = []
    for _ in range(D + 1):
        i, r = divmod(i, F.q)
        c.append(r)
    return Poly(F, c)


def vector_search_report(phi: DiagForm, degree_cap: int = DEFAULT_VECTOR_CAP,
                         budget: int = DEFAULT_VECTOR_BUDGET) -> VectorSearchResult:
    """Meet-in-the-middle search for a nonzero isotropic vector.

    For each D = 0..cap, the first half of the coordinates is enumerated and
    hashed, then matched against the negated values of the second half.  A
    degree is skipped only when either half would exceed ``budget`` vectors,
    in which case the result is marked incomplete.
    """
    F = phi.field
    n = phi.dim
    if n < 2:
        raise ValueError("vector search needs dim >= 2")
    vals = [phi.entry(i).c for i in range(n)]
    split = (n + 1) // 2
    for D in range(degree_cap + 1):
        size = F.q ** (D + 1)
        if size ** max(split, n - split) > budget:
            return VectorSearchResult(None, False, D - 1)
        length = max(len(a) for a in vals) + 2 * D
        lanes = _Lanes(F, length)
        tables = [_value_table(F, a, D, lanes) for a in vals]
        p = F.p
        # scaling a solution makes x_1 zero or monic, so only those rows are kept
        keep = _zero_or_monic_rows(F, D)
        tables[0] = tables[0][keep]
        left, right = tables[:split], tables[split:]
        right_neg = [(-t) % p for t in right]
        # right half: keys of -(sum), first occurrence per key
        rkeys = np.concatenate([lanes.keys(b) for _, b in _half(right_neg, p, 1 << 18)])
        order = np.argsort(rkeys, kind="stable")
        rsorted = rkeys[order]
        best = None
        lsizes = [t.shape[0] for t in left]
        rsizes = [t.shape[0] for t in right]
        for start, block in _half(left, p, 1 << 18):
            lk = lanes.keys(block)
            pos = np.searchsorted(rsorted, lk)
            pos[pos >= len(rsorted)] = len(rsorted) - 1
            hit = rsorted[pos] == lk
            for li in np.nonzero(hit)[0]:
                lidx = start + int(li)
                # candidates on the right with this key, skip the all-zero pair
                j = int(pos[li])
                while j < len(rsorted) and rsorted[j] == lk[li]:
                    ridx = int(order[j])
                    if lidx != 0 or ridx != 0:
                        best = (lidx, ridx)
                        break
                    j += 1
                if best:
                    break
            if best:
                break
        if best:
            lidx, ridx = best
            idx = _unravel(lidx, lsizes) + _unravel(ridx, rsizes)
            idx[0] = int(keep[idx[0]])
            xs = [_poly_from_index(F, i, D) for i in idx]
            if not phi.evaluate(xs).is_zero() or all(x.is_zero() for x in xs):
                raise ConsistencyError("vector search produced a non-isotropic vector")
            return VectorSearchResult(xs, True, D)
    return VectorSearchResult(None, True, degree_cap)


def vector_search(phi: DiagForm, degree_cap: int = DEFAULT_VECTOR_CAP) -> list[Poly] | None:
    """A nonzero isotropic vector with coordinate degrees <= cap, or None.

    None within the cap says nothing about anisotropy.
    """
    return vector_search_report(phi, degree_cap).witness


__all__ = [
    "DiagForm",
    "IsotropyVerdict",
    "Justification",
    "common_slot",
    "dim4_shape",
    "find_slot_partner",
    "hyper_example_form",
    "is_isotropic",
    "local_isotropy",
    "local_table",
    "slot_verdict",
    "vector_search",
    "vector_search_report",
]
