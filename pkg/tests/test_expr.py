import random

import pytest
from hypothesis import given, strategies as st

from symsod.expr import (
    Bullet,
    Component,
    ComponentList,
    Curve,
    Opaque,
    PHANTOM,
    POINT,
    Sod,
    Surface,
    Sym,
    SymCurve,
    betti_of,
    blowup,
    canonicalize,
    equal_components,
    is_surface_like,
    make_preset,
    sort_key,
    surface_literal,
)
from symsod.series import BettiVector
from symsod.suites import gen_random_expr


def test_canonicalize_keeps_point_products():
    e = Bullet((POINT, POINT))
    assert canonicalize(e) == Bullet((POINT, POINT))


def test_canonicalize_sorts_bullet_factors():
    a = Bullet((Curve(2), POINT))
    b = Bullet((POINT, Curve(2)))
    assert canonicalize(a) == canonicalize(b) == Bullet((POINT, Curve(2)))


def test_canonicalize_flattens_sods_in_order():
    a, b, c = Opaque("A"), Opaque("B"), Opaque("C")
    assert canonicalize(Sod((Sod((a, b)), c))) == Sod((a, b, c))


def test_canonicalize_respects_orthogonality_flags():
    a, b, c = Opaque("A"), Opaque("B"), Opaque("C")
    nested = Sod((Sod((a, b), orthogonal=True), c))
    flat = canonicalize(nested)
    assert isinstance(flat.parts[0], Sod) and flat.parts[0].orthogonal


def test_canonicalize_unwraps_singletons():
    assert canonicalize(Bullet((Curve(1),))) == Curve(1)
    assert canonicalize(Sod((Curve(1),))) == Curve(1)


@given(st.integers(min_value=0, max_value=10_000))
def test_canonicalize_idempotent_on_random_trees(seed):
    rng = random.Random(seed)
    e = gen_random_expr(rng)
    c = canonicalize(e)
    assert canonicalize(c) == c


@given(st.integers(min_value=0, max_value=10_000))
def test_canonical_form_invariant_under_bullet_shuffles(seed):
    rng = random.Random(seed)
    factors = [gen_random_expr(rng, depth=2) for _ in range(3)]
    shuffled = factors[:]
    rng.shuffle(shuffled)
    assert canonicalize(Bullet(tuple(factors))) == canonicalize(Bullet(tuple(shuffled)))


def test_sort_key_total_order_on_atoms():
    atoms = [Opaque("Z"), PHANTOM, Surface("s", BettiVector(1, 0, 1, 0, 1)),
             SymCurve(0, 2), Curve(3), POINT]
    ordered = sorted(atoms, key=sort_key)
    assert ordered[0] == POINT
    assert isinstance(ordered[1], Curve)
    assert isinstance(ordered[2], SymCurve)
    assert isinstance(ordered[3], Surface)
    assert ordered[4] == PHANTOM
    assert ordered[5] == Opaque("Z")


def test_component_drops_point_units():
    c = Component.of([POINT, Curve(1), POINT])
    assert c.factors == (Curve(1),)
    assert Component.of([POINT, POINT]).is_point()
    assert Component.of([]).is_point()


def test_equal_components_modes():
    a = Component.of([Opaque("A")])
    b = Component.of([Opaque("B")])
    x = ComponentList(((a, 1), (b, 1)))
    y = ComponentList(((b, 1), (a, 1)))
    assert equal_components(x, x, "ordered")
    assert equal_components(x, x, "multiset")
    assert not equal_components(x, y, "ordered")
    assert equal_components(x, y, "multiset")
    assert not equal_components(
        ComponentList(((a, 2),)), ComponentList(((a, 1),)), "multiset"
    )
    with pytest.raises(ValueError):
        equal_components(x, y, "bogus")


def test_presets_p1_p2():
    assert make_preset("P1") == Sod((POINT, POINT))
    assert make_preset("P2") == Sod((POINT, POINT, POINT))


def test_preset_fake_plane():
    e = make_preset("fakeP2", 1)
    assert e == Sod((POINT, POINT, POINT, PHANTOM))
    assert betti_of(e) == BettiVector(1, 0, 1, 0, 1)
    with pytest.raises(ValueError):
        make_preset("fakeP2", 0)


def test_preset_ruled():
    e = make_preset("ruled", 2)
    assert e == Sod((Curve(2), Curve(2)))
    assert betti_of(e) == BettiVector(1, 4, 2, 4, 1)


def test_preset_blowup_of_plane():
    e = make_preset("blowup", make_preset("P2"))
    head, tail = e.parts
    assert tail == POINT
    assert isinstance(head, Surface)
    assert head.betti == BettiVector(1, 0, 1, 0, 1)
    assert head.declared_sod == make_preset("P2")
    assert betti_of(e) == BettiVector(1, 0, 2, 0, 1)


def test_blowup_chi_increments():
    for base in (make_preset("P2"), make_preset("ruled", 1), make_preset("fakeP2", 2)):
        before = betti_of(base).euler()
        after = betti_of(blowup(base)).euler()
        assert after == before + 1


def test_blowup_keeps_opaque_base():
    e = blowup(Opaque("S"))
    assert e == Sod((Opaque("S"), POINT))
    assert betti_of(e) is None


def test_blowup_rejects_non_surface():
    with pytest.raises(ValueError):
        blowup(Curve(2))


def test_surface_literal_requires_duality():
    with pytest.raises(ValueError):
        surface_literal(BettiVector(1, 2, 3, 4, 5))
    s = surface_literal(BettiVector(1, 0, 3, 0, 1))
    assert s.name == "surface(1,0,3,0,1)"


def test_is_surface_like():
    assert is_surface_like(make_preset("P2"))
    assert is_surface_like(make_preset("ruled", 0))
    assert is_surface_like(make_preset("fakeP2", 3))
    assert is_surface_like(blowup(Opaque("S")))
    assert is_surface_like(surface_literal(BettiVector(1, 0, 1, 0, 1)))
    assert not is_surface_like(POINT)
    assert not is_surface_like(make_preset("P1"))
    assert not is_surface_like(Opaque("S"))


def test_hilb_preset_is_sym_sugar():
    e = make_preset("hilb", 3, make_preset("P2"))
    assert e == Sym(3, make_preset("P2"))
    with pytest.raises(ValueError):
        make_preset("hilb", 3, make_preset("P1"))


def test_unknown_preset():
    with pytest.raises(ValueError):
        make_preset("P3")


def test_surface_atom_enforces_duality():
    with pytest.raises(ValueError):
        Surface("bad", BettiVector(1, 2, 0, 0, 1, poincare_dual=False))


def test_blowup_stays_atomic_under_expansion():
    from symsod.rewrite import expand

    components = expand(blowup(make_preset("P2")))
    assert len(components) == 2
    head = components.entries[0][0].factors[0]
    assert isinstance(head, Surface)
