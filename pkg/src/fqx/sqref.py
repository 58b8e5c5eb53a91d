"""Square-reflexivity of square-free polynomials over F_q.

A witness for a square class alpha of E_f is a g coprime to f with
g + (f) in alpha * squares and f a square modulo g.  Searches run over
degree <= floor(3 deg f / 2), which is complete for existence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    BadInfinityClass,
    CapExceeded,
    ConsistencyError,
    DegreeTooSmall,
    InvalidRamSeq,
    NotCoprime,
    NotSquareFree,
    UnsupportedSupport,
    ZeroPolynomial,
)
from .gf import FieldDesc
from .places import INF, Place, RamSeq, minus_one_bit, ramify
from .polyring import (
    Poly,
    _derived_rng,
    _trim,
    t_add,
    t_crt,
    t_gcd,
    t_irreducibles,
    t_is_irreducible,
    t_is_squarefree,
    t_mod,
    t_mul,
    t_mulmod,
    t_polys_of_degree,
    t_scale,
    t_support,
    squarefree_part,
)
from .quotalg import AlgElem, QuotAlg, residue_field, t_sqclass

DEFAULT_KORNBLUM_EXTRA = 4
KORNBLUM_RETRIES = 4
_EXHAUSTIVE_LIMIT = 20_000
_SAMPLE_TRIES = 4_000


def certificate_bound(n: int) -> int:
    return (3 * n) // 2


def _fbit(F: FieldDesc, v: int) -> int:
    return 0 if F.is_square_int(v) else 1


# ---------------------------------------------------------------------------
# square modulo g
# ---------------------------------------------------------------------------

def t_is_square_mod(F: FieldDesc, f: tuple, g: tuple) -> bool:
    if len(g) <= 1:
        return True
    for p in t_support(F, g):
        r = t_mod(F, f, p)
        if not r:
            raise NotCoprime("f and g share a factor")
        if t_sqclass(F, p, r):
            return False
    return True


def is_square_mod(f: Poly, g: Poly) -> bool:
    """Whether f is a square in E[X]/(g).

    Only the radical of g matters: a unit that is a square mod p lifts to a
    square mod p^e by Hensel's lemma in odd characteristic.
    """
    if g.is_zero():
        raise ZeroPolynomial("g must be nonzero")
    F = f.field
    if t_gcd(F, f.c, g.c) != (1,):
        raise NotCoprime(f"{f} and {g} are not coprime")
    return t_is_square_mod(F, f.c, g.c)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass
class CertEntry:
    alpha: AlgElem
    witness: Poly
    checks: dict = field(default_factory=dict)


@dataclass
class SqRefCertificate:
    f: Poly
    entries: list[CertEntry]

    def witness_for(self, alpha: AlgElem) -> Poly:
        for e in self.entries:
            if e.alpha == alpha:
                return e.witness
        raise KeyError(str(alpha))


@dataclass
class SqRefRefutation:
    f: Poly
    alpha: AlgElem


def verify_entry(f: Poly, alpha: AlgElem, g: Poly) -> dict:
    """Re-check a witness from scratch; returns the individual checks."""
    F = f.field
    A = QuotAlg(f)
    out = {
        "coprime": not g.is_zero() and t_gcd(F, f.c, g.c) == (1,),
        "degree_bound": g.deg <= certificate_bound(f.deg),
    }
    if out["coprime"]:
        ratio = A(g) * alpha.inverse() if A.n > 0 else A(g)
        out["class"] = A.n == 0 or all(A.is_square_class(ratio))
        out["square_mod_g"] = is_square_mod(f, g)
    else:
        out["class"] = False
        out["square_mod_g"] = False
    return out


def verify_certificate(cert: SqRefCertificate) -> bool:
    f = cert.f
    if f.deg <= 0:
        return not cert.entries
    A = QuotAlg(f)
    admissible = A.norm_condition_filter(A.square_class_reps())
    if sorted(e.alpha.c for e in cert.entries) != sorted(a.c for a in admissible):
        return False
    return all(all(verify_entry(f, e.alpha, e.witness).values()) for e in cert.entries)


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------

def _bits_of(F: FieldDesc, comps: tuple, c: tuple) -> tuple[int, ...] | None:
    out = []
    for p in comps:
        r = t_mod(F, c, p)
        if not r:
            return None
        out.append(t_sqclass(F, p, r))
    return tuple(out)


def _witness_scan(f: Poly, targets: set[tuple[int, ...]], cap: int) -> dict[tuple, tuple]:
    """Find unit or (unit * monic irreducible) witnesses for each target class.

    Degrees are scanned upwards; the first hit per target wins.  The parity
    at infinity is a reciprocity consequence and is used only as a filter.
    """
    F = f.field
    fc = f.c
    n = len(fc) - 1
    comps = tuple(p.c for p in QuotAlg(f).components)
    degs = [len(p) - 1 for p in comps]
    ns = F.nonsquare_int()
    units = ((1, 0), (ns, 1))
    lc_bit = _fbit(F, fc[-1])
    m1 = minus_one_bit(F, 1)
    found: dict[tuple, tuple] = {}
    todo = set(targets)
    for u, ub in units:
        bits = tuple((ub * d) & 1 for d in degs)
        if bits in todo:
            found[bits] = (u,)
            todo.discard(bits)
    for d in range(1, cap + 1):
        if not todo:
            break
        inf_base = ((n * d) & m1) ^ ((d & 1) & lc_bit)
        for q in t_irreducibles(F, d):
            qb = _bits_of(F, comps, q)
            if qb is None:
                continue
            for u, ub in units:
                bits = tuple(b ^ ((ub * dp) & 1) for b, dp in zip(qb, degs))
                if bits not in todo:
                    continue
                inf_bit = inf_base ^ ((n & 1) & ub)
                if inf_bit != (sum(bits) & 1):
                    continue
                r = t_mod(F, fc, q)
                if r and not t_sqclass(F, q, r):
                    found[bits] = t_scale(F, q, u)
                    todo.discard(bits)
            if not todo:
                break
    return found


def _exhaustive_pair(f: Poly, target: tuple[int, ...], cap: int) -> Poly | None:
    F = f.field
    fc = f.c
    comps = tuple(p.c for p in QuotAlg(f).components)
    for d in range(cap + 1):
        for g in t_polys_of_degree(F, d):
            bits = _bits_of(F, comps, g)
            if bits != target:
                continue
            if t_is_square_mod(F, fc, g):
                return Poly._raw(F, g)
    return None


def _require_squarefree(f: Poly) -> None:
    if f.is_zero():
        raise ZeroPolynomial("f must be nonzero")
    if not t_is_squarefree(f.field, f.c):
        raise NotSquareFree(f"{f} is not square-free")


def check_pair(f: Poly, alpha: AlgElem) -> Poly | None:
    """Least witness g (degree, then canonical order) for the class of alpha."""
    _require_squarefree(f)
    A = QuotAlg(f)
    if A.n == 0:
        return Poly._raw(f.field, (1,))
    target = A.class_bits(alpha.c)
    return _exhaustive_pair(f, target, certificate_bound(A.n))


def certify(f: Poly, *, exhaustive: bool = False) -> SqRefCertificate | SqRefRefutation:
    _require_squarefree(f)
    F = f.field
    if f.deg <= 0:
        return SqRefCertificate(f, [])
    A = QuotAlg(f)
    alphas = A.norm_condition_filter(A.square_class_reps())
    bound = certificate_bound(A.n)
    targets = {A.class_bits(a.c): a for a in alphas}
    found = {} if exhaustive else _witness_scan(f, set(targets), bound)
    entries = []
    for bits, a in targets.items():
        g = found.get(bits)
        path = "kornblum"
        if g is None:
            path = "exhaustive"
            gp = _exhaustive_pair(f, bits, bound)
            if gp is None:
                return SqRefRefutation(f, a)
            g = gp.c
        gp = Poly._raw(F, g)
        checks = verify_entry(f, a, gp)
        if not all(checks.values()):
            raise ConsistencyError(f"witness {gp} for {a} fails verification: {checks}")
        checks["path"] = path
        entries.append(CertEntry(a, gp, checks))
    return SqRefCertificate(f, entries)


# ---------------------------------------------------------------------------
# Kornblum search
# ---------------------------------------------------------------------------

def _kornblum_degree(F: FieldDesc, f: tuple, residues: list[tuple], d: int,
                     rng: random.Random) -> tuple | None:
    n = len(f) - 1
    if d < 1:
        return None
    if d < n:
        for r in residues:
            if len(r) - 1 == d and r[-1] == 1 and t_is_irreducible(F, r):
                return r
        return None
    lead = F.inv(f[-1])
    span = d - n
    count = F.q ** span
    if count * len(residues) <= _EXHAUSTIVE_LIMIT:
        hs = (tuple(_digits(i, F.q, span)) + (lead,) for i in range(count))
        for h in hs:
            base = t_mul(F, f, h)
            for r in residues:
                cand = t_add(F, base, r)
                if len(cand) - 1 == d and t_is_irreducible(F, cand):
                    return cand
        return None
    for _ in range(_SAMPLE_TRIES):
        h = tuple(rng.randrange(F.q) for _ in range(span)) + (lead,)
        r = residues[rng.randrange(len(residues))]
        cand = t_add(F, t_mul(F, f, h), r)
        if t_is_irreducible(F, cand):
            return cand
    return None


def _digits(i: int, q: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        i, r = divmod(i, q)
        out.append(r)
    return out


def kornblum_find(f: Poly, g0: Poly, degree_parity: int, degree_cap: int | None = None,
                  *, modulo_squares: bool = False) -> Poly:
    """Monic irreducible q of the given degree parity with q = u*g0 mod f.

    u ranges over nonzero squares of E, so q lies in the square class of g0
    in E_f.  With ``modulo_squares`` any residue in g0 * (E_f^x)^2 is allowed.
    The cap doubles on failure up to a fixed number of retries.
    """
    F = f.field
    if f.is_zero():
        raise ZeroPolynomial("f must be nonzero")
    if g0.is_zero() or t_gcd(F, f.c, g0.c) != (1,):
        raise NotCoprime(f"{g0} is not coprime to {f}")
    fm = f.monic().c
    n = len(fm) - 1
    cap = n + DEFAULT_KORNBLUM_EXTRA if degree_cap is None else degree_cap
    if n == 0:
        residues = [()]
    elif modulo_squares:
        residues = sorted({t_mulmod(F, g0.c, t_mulmod(F, x, x, fm), fm)
                           for x in _units(F, fm)}, key=lambda c: (len(c), c[::-1]))
    else:
        squares = sorted({F.mul(s, s) for s in range(1, F.q)})
        residues = [t_mod(F, t_scale(F, g0.c, s), fm) for s in squares]
    rng = _derived_rng(F, (fm, g0.c, degree_parity), "kornblum")
    lo = 1
    for _ in range(KORNBLUM_RETRIES + 1):
        for d in range(lo, cap + 1):
            if d % 2 != degree_parity % 2:
                continue
            if n == 0:
                irr = t_irreducibles(F, d)
                if irr:
                    return Poly._raw(F, irr[0])
                continue
            hit = _kornblum_degree(F, fm, residues, d, rng)
            if hit is not None:
                return Poly._raw(F, hit)
        lo, cap = cap + 1, cap * 2
    raise CapExceeded(f"no irreducible found up to degree {cap // 2}")


def _units(F: FieldDesc, f: tuple) -> Iterator[tuple]:
    n = len(f) - 1
    for i in range(1, F.q ** n):
        c = _trim(_digits(i, F.q, n))
        if t_gcd(F, c, f) == (1,):
            yield c


# ---------------------------------------------------------------------------
# ramification sequences as single symbols
# ---------------------------------------------------------------------------

def _check_support(rho: RamSeq, f: Poly) -> set:
    F = f.field
    comps = set(t_support(F, f.c)) if f.deg > 0 else set()
    extra = [p for p in rho.support if p.poly is not None and p.poly.c not in comps]
    if extra:
        raise UnsupportedSupport(f"places {[str(p) for p in extra]} are outside Supp(f)")
    return comps


def realize_ramification(rho: RamSeq, f: Poly) -> Poly:
    """A g with ramify(f, g) == rho."""
    _require_squarefree(f)
    F = f.field
    _check_support(rho, f)
    if f.deg % 2 == 0 and INF in rho.support and F.is_square_int(f.c[-1]):
        # for even deg f the class at infinity of {f, g} is deg(g) * [lc f]
        raise BadInfinityClass("rho at infinity must be trivial or the class of lc(f)")
    if not rho.is_valid():
        raise InvalidRamSeq("rho has odd support")
    if not rho:
        return Poly._raw(F, (1,))
    n = f.deg
    comps = QuotAlg(f).components
    target = tuple(rho[Place(p)] for p in comps)
    found = _witness_scan(f, {target}, certificate_bound(n))
    if target in found:
        g = Poly._raw(F, found[target])
        if ramify(f, g) == rho:
            return g
    for d in range(n // 2 + 1):
        for c in t_polys_of_degree(F, d):
            g = Poly._raw(F, c)
            if ramify(f, g) == rho:
                return g
    raise ConsistencyError(f"no realization of {rho} for {f} within degree {n // 2}")


def ram_reduce(rho: RamSeq, f: Poly) -> Poly:
    """CRT-interpolated g, deg g < deg f, matching rho on Supp(f)."""
    _require_squarefree(f)
    F = f.field
    _check_support(rho, f)
    if f.deg <= 0:
        return Poly._raw(F, (1,))
    comps = QuotAlg(f).components
    pairs = []
    for p in comps:
        w = residue_field(p).canonical_nonsquare().c if rho[Place(p)] else (1,)
        pairs.append((p.c, w))
    g = Poly._raw(F, t_crt(F, pairs)[0])
    diff = rho + ramify(f, g)
    gsupp = set(t_support(F, g.c)) if g.deg > 0 else set()
    assert all(p.poly is None or p.poly.c in gsupp for p in diff.support), \
        "ramification difference escapes Supp(g)"
    return g


def bezout_reduce(f: Poly, g: Poly) -> Poly:
    """Monic square-free g* with deg g* < deg f, deg g* = deg f - 1 mod 2,
    and g * g* a square in E_f (a component may vanish: for f = X^2 + 2 and
    g = 1 over F_3 no g* coprime to f exists).

    Scans x in E_f for s(g x^2) = 1, where s reads the top power-basis
    coordinate, then strips squares from g x^2 mod f.
    """
    F = f.field
    if f.deg < 2:
        raise DegreeTooSmall("deg f must be at least 2")
    if g.is_zero() or t_gcd(F, f.c, g.c) != (1,):
        raise NotCoprime(f"{g} is not coprime to {f}")
    fm = f.monic().c
    n = len(fm) - 1
    A = QuotAlg(Poly._raw(F, fm))
    comps = [p.c for p in A.components]
    gr = t_mod(F, g.c, fm)
    for x in A.elements():
        if not x.c:
            continue
        y = t_mulmod(F, gr, t_mulmod(F, x.c, x.c, fm), fm)
        if len(y) != n or y[-1] != 1:
            continue
        gstar = squarefree_part(Poly._raw(F, y))
        prod = t_mul(F, gr, gstar.c)
        ok = True
        for p in comps:
            r = t_mod(F, prod, p)
            if r and t_sqclass(F, p, r):
                ok = False
                break
        if ok:
            return gstar
    raise ConsistencyError(f"transfer form of {f} does not represent 1")
