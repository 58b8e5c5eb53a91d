import itertools
import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from fqx.errors import NotSquareFree, PreconditionViolated, ZeroFunction
from fqx.gf import canonical_nonsquare, make_field
from fqx.places import INF, Place, RatFunc, ramify, residue, tame_symbol, valuation
from fqx.polyring import Poly, is_squarefree
from fqx.qforms import (
    DiagForm,
    Justification,
    common_slot,
    dim4_shape,
    find_slot_partner,
    hyper_example_form,
    is_isotropic,
    local_isotropy,
    local_table,
    refine_places,
    slot_verdict,
    vector_search,
    vector_search_report,
)
from fqx.quotalg import residue_field

from conftest import P


def residue_isotropic_brute(place, units):
    """Isotropy of <u_1, ..., u_r> over the residue field by enumeration."""
    if not units:
        return False
    if place.poly is None:
        F = units[0].field
        elems = list(range(F.q))
        ev = lambda u, x: F.mul(u.v, F.mul(x, x))
        add, zero = F.add, 0
    else:
        E = residue_field(place.poly)
        elems = list(E.elements())
        ev = lambda u, x: u * x * x
        add, zero = (lambda a, b: a + b), E(0)
    if len(units) >= 3:
        units = units[:3]
    for xs in itertools.product(elems, repeat=len(units)):
        if all((x == 0 if isinstance(x, int) else not x.c) for x in xs):
            continue
        acc = zero
        for u, x in zip(units, xs):
            acc = add(acc, ev(u, x))
        if acc == zero:
            return True
    return False


def local_oracle(phi, place):
    F = phi.field
    if place.poly is None:
        pi = RatFunc(Poly(F, [1]), Poly.x(F))
    else:
        pi = RatFunc(place.poly)
    parts = {0: [], 1: []}
    for a in phi.values():
        v = valuation(place, a)
        u = RatFunc(a) * pi ** (-v)
        parts[v % 2].append(residue(place, u))
    return residue_isotropic_brute(place, parts[0]) or residue_isotropic_brute(place, parts[1])


def test_local_isotropy_examples(F3, F5):
    for F, expected in ((F3, False), (F5, True)):
        X = Poly.x(F)
        phi = DiagForm.from_values([P(F, 1), P(F, 1), X, X])
        assert local_isotropy(phi, Place(X)) is expected
    hyp = DiagForm.from_values([P(F3, 1), P(F3, -1)])
    X = Poly.x(F3)
    for pl in (Place(X), Place(X * X + 1), INF):
        assert local_isotropy(hyp, pl)


@pytest.mark.parametrize("pk", [(3, 1), (5, 1)])
def test_local_isotropy_matches_brute_residue_forms(pk):
    F = make_field(*pk)
    rng = random.Random(9)
    X = Poly.x(F)
    places = [Place(X), Place(X + 1), INF]
    if F.q == 3:
        places.append(Place(X * X + 1))
    for _ in range(60):
        vals = []
        for _ in range(rng.randint(1, 4)):
            vals.append(Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(0, 2))] + [rng.randrange(1, F.q)]))
        phi = DiagForm.from_values(vals)
        for pl in places:
            assert local_isotropy(phi, pl) == local_oracle(phi, pl)


def test_is_isotropic_examples(F3):
    X = Poly.x(F3)
    v = is_isotropic(DiagForm.from_values([P(F3, 1)] * 3))
    assert v.isotropic and v.justification == Justification.SYMBOL_VANISHES
    v = is_isotropic(DiagForm.from_values([P(F3, 1), P(F3, -2), -X]))
    assert not v.isotropic and v.justification == Justification.SYMBOL_NONZERO and v.place == Place(X)
    v = is_isotropic(DiagForm.from_values([P(F3, 1), P(F3, 1), X, X]))
    assert not v.isotropic and v.justification == Justification.LOCAL_GLOBAL
    assert (Place(X), False) in v.local_table
    assert not is_isotropic(DiagForm.from_values([X])).isotropic
    assert is_isotropic(DiagForm.from_values([X, X, X, X, X])).justification == Justification.DIM5PLUS
    assert is_isotropic(DiagForm.from_values([X, -X * 4])).isotropic


def test_zero_entry_rejected(F3):
    with pytest.raises(ZeroFunction):
        DiagForm.from_values([P(F3, 1), P(F3)])


def test_normalization(F3):
    X = Poly.x(F3)
    phi = DiagForm.from_values([X ** 3 * 2, RatFunc(X + 1, X * X)])
    assert phi.entries == ((2, (0, 1)), (1, (1, 1)))


def test_find_slot_partner_examples(F3):
    X = Poly.x(F3)
    q = find_slot_partner(X, X, P(F3, 2))
    assert ramify(X, q) == ramify(X, P(F3, 2))
    assert find_slot_partner(X, P(F3, 1), P(F3, 1)) == P(F3, 1)
    with pytest.raises(NotSquareFree):
        find_slot_partner(X * X, X, P(F3, 2))


def test_find_slot_partner_obstructed_example(F3):
    # <X(X+1), -2, -X, 2X> is anisotropic at infinity: both residue forms are <1, 1>
    X = Poly.x(F3)
    f = X * (X + 1)
    phi = DiagForm.from_values([f, P(F3, -2), -X, X * 2])
    assert not local_isotropy(phi, INF)
    assert find_slot_partner(f, P(F3, 2), X) is None


def test_common_slot_examples(F3):
    X = Poly.x(F3)
    syms = [(X, P(F3, 2)), (X + 1, P(F3, 2))]
    f, partners = common_slot(syms)
    assert f.c[-1] == canonical_nonsquare(F3).v and is_squarefree(f)
    assert (f % X).is_zero() and (f % (X + 1)).is_zero()
    for (g, h), q in zip(syms, partners):
        assert ramify(f, q) == ramify(g, h)
    f, partners = common_slot([], F3)
    assert f == X * 2 and partners == []


def test_common_slot_random(F5):
    rng = random.Random(1)
    syms = []
    for _ in range(4):
        g = Poly(F5, [rng.randrange(5) for _ in range(2)] + [rng.randrange(1, 5)])
        h = Poly(F5, [rng.randrange(5) for _ in range(2)] + [rng.randrange(1, 5)])
        syms.append((g, h))
    f, partners = common_slot(syms)
    for (g, h), q in zip(syms, partners):
        assert ramify(f, q) == ramify(g, h)


def test_vector_search_examples(F3):
    X = Poly.x(F3)
    assert vector_search(DiagForm.from_values([P(F3, 1), P(F3, -1)]), 0) == [P(F3, 1), P(F3, 1)]
    assert vector_search(DiagForm.from_values([P(F3, 1)] * 3), 0) == [P(F3, 1)] * 3
    phi = DiagForm.from_values([P(F3, 1), -X, -(X + 1), X * (X + 1)])
    r = vector_search_report(phi, 2)
    assert r.complete
    assert (r.witness is not None) == is_isotropic(phi).isotropic == False


def test_vector_search_incomplete_on_budget(F3):
    X = Poly.x(F3)
    phi = DiagForm.from_values([P(F3, 1), P(F3, 1), X, X])
    r = vector_search_report(phi, 6, budget=1000)
    assert r.witness is None and not r.complete


def test_vector_search_extension_field(F9):
    X = Poly.x(F9)
    phi = DiagForm.from_values([P(F9, 1), X, -X - 1])
    w = vector_search(phi, 2)
    assert w is not None and phi.evaluate(w).is_zero()


def test_hyper_example_form(F3, F5):
    X = Poly.x(F3)
    with pytest.raises(PreconditionViolated):
        hyper_example_form((X + 1) * (X + 2), X + 1)
    phi = hyper_example_form((X + 1) * (X * X + 1), X + 1)
    assert phi.dim == 4
    assert all(ok for _, ok in local_table(phi))
    Y = Poly.x(F5)
    phi = hyper_example_form((Y + 1) * (Y + 4), Y + 1)
    assert all(ok for _, ok in local_table(phi))


# -- properties ---------------------------------------------------------------

entry = st.lists(st.integers(0, 2), min_size=1, max_size=4).filter(lambda c: c[-1] != 0)


def _form(F, cs):
    return DiagForm.from_values([Poly(F, c) for c in cs])


@given(st.lists(entry, min_size=1, max_size=5), entry, entry)
@settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_scaling_invariance(cs, ln, ld):
    F = make_field(3)
    phi = _form(F, cs)
    lam = RatFunc(Poly(F, ln), Poly(F, ld))
    assert is_isotropic(phi).isotropic == is_isotropic(phi.scaled(lam)).isotropic


@given(entry, entry, entry)
@settings(max_examples=150, deadline=None)
def test_dim3_triple_consistency(a, b, c):
    F = make_field(3)
    phi = _form(F, [a, b, c])
    A, B, C = phi.values()
    xi = ramify(-(A * B), -(A * C))
    from_symbols = all(not tame_symbol(p, -(A * B), -(A * C)).nontrivial for p in phi.places())
    assert is_isotropic(phi).isotropic == (not xi) == from_symbols


@given(st.lists(entry, min_size=4, max_size=4))
@settings(max_examples=150, deadline=None)
def test_firstslot_consistency(cs):
    F = make_field(3)
    phi = _form(F, cs)
    f, g, h = dim4_shape(phi)
    shape = DiagForm.from_values([f, -g, -h, g * h])
    q = find_slot_partner(f, g, h)
    verdict = is_isotropic(shape).isotropic
    assert verdict == is_isotropic(phi).isotropic
    if q is not None:
        assert verdict and ramify(f, q) == ramify(g, h)
    else:
        assert not verdict
        assert any(not local_isotropy(shape, p) for p in refine_places(f, g, h))


@given(st.lists(entry, min_size=2, max_size=4))
@settings(max_examples=40, deadline=None)
def test_vector_witness_implies_isotropic(cs):
    F = make_field(3)
    phi = _form(F, cs)
    w = vector_search(phi, 2)
    if w is not None:
        assert phi.evaluate(w).is_zero() and any(not x.is_zero() for x in w)
        assert is_isotropic(phi).isotropic
