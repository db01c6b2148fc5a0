from symsod.expr import (
    Bullet,
    Component,
    Curve,
    Opaque,
    PHANTOM,
    POINT,
    Sod,
    Sym,
    SymCurve,
    SymPower,
    equal_components,
)
from symsod.partitions import partition_count, q_length
from symsod.rewrite import (
    BlockTrace,
    component_count,
    expand,
    expand_tail_first,
    sym_of_sod,
)

A, B, C = Opaque("A"), Opaque("B"), Opaque("C")


def point_entry(mult):
    return (Component.of([]), mult)


def test_sym_of_sod_n2():
    blocks = sym_of_sod(A, B, 2)
    assert blocks == [Sym(2, A), Bullet((A, B)), Sym(2, B)]


def test_sym_of_sod_n0_is_unit():
    assert sym_of_sod(A, B, 0) == [POINT]


def test_sym_of_sod_n1_recovers_sod():
    assert sym_of_sod(A, B, 1) == [A, B]


def test_sym_of_sod_block_count():
    for n in range(7):
        assert len(sym_of_sod(A, B, n)) == n + 1


def test_expand_atoms_and_trivial_sym():
    assert expand(POINT).entries == (point_entry(1),)
    assert expand(Sym(0, A)).entries == (point_entry(1),)
    assert expand(Sym(1, A)).entries == ((Component.of([A]), 1),)


def test_expand_sym_point_aggregates():
    for n in range(8):
        assert expand(Sym(n, POINT)).entries == (point_entry(partition_count(n)),)


def test_expand_p1_blocks():
    # sym(3, sod(pt, pt)): blocks p(3-i) * p(i) = 3, 2, 2, 3
    components = expand(Sym(3, Sod((POINT, POINT))))
    assert [mult for _, mult in components] == [3, 2, 2, 3]
    assert components.is_purely_exceptional()
    assert components.total_multiplicity() == 10


def test_expand_sym2_of_curve():
    components = expand(Sym(2, Curve(1)))
    assert components.entries == (
        (Component.of([SymCurve(1, 2)]), 1),
        (Component.of([Curve(1)]), 1),
    )


def test_expand_sym_curve_component_count():
    for n in range(1, 9):
        components = expand(Sym(n, Curve(2)))
        assert len(components) == partition_count(n)
        assert all(mult == 1 for _, mult in components)


def test_expand_curve_components_match_partition_oracle():
    # independent oracle: every partition of n, via its exponent vector
    # (a_i = number of parts equal to i), contributes the component with
    # factor degrees {a_i : a_i > 0}; distinct vectors may share a degree
    # multiset, so compare with repetition
    from collections import Counter

    def oracle(n):
        def partitions(remaining, max_part):
            if remaining == 0:
                yield ()
                return
            for first in range(min(max_part, remaining), 0, -1):
                for rest in partitions(remaining - first, first):
                    yield (first,) + rest

        expected = Counter()
        for part in partitions(n, n):
            exponents = Counter(part)
            expected[tuple(sorted(exponents.values()))] += 1
        return expected

    for n in range(1, 9):
        got = Counter()
        for comp, _ in expand(Sym(n, Curve(0))):
            degrees = tuple(
                sorted(
                    (f.degree if isinstance(f, SymCurve) else 1) for f in comp.factors
                )
            )
            got[degrees] += 1
        assert got == oracle(n)


def test_expand_blowup_shape():
    # sym(3, sod(S, pt)) for opaque S: sym^3(S) x1, sym^2(S) x1, S x2, pt x3
    s = Opaque("S")
    components = expand(Sym(3, Sod((s, POINT))))
    assert components.entries == (
        (Component.of([SymPower(3, s)]), 1),
        (Component.of([SymPower(2, s)]), 1),
        (Component.of([s]), 2),
        point_entry(3),
    )


def test_expand_order_law():
    for n in range(2, 7):
        entries = expand(Sym(n, Sod((A, B)))).entries
        assert entries[0][0] == Component.of([SymPower(n, A)])
        assert entries[-1][0] == Component.of([SymPower(n, B)])


def test_expand_sym_sod_criterion_shape():
    components = expand(Sym(2, Sod((A, B))))
    assert components.entries == (
        (Component.of([SymPower(2, A)]), 1),
        (Component.of([A, B]), 1),
        (Component.of([SymPower(2, B)]), 1),
    )


def test_component_count_examples():
    assert component_count(Sym(2, Sod((POINT, POINT, POINT)))) == 9
    assert component_count(Sym(3, Curve(1))) == 3
    assert component_count(Sym(1, Sod((A, B)))) == component_count(Sod((A, B))) == 2


def test_exceptional_count_law():
    for l in range(2, 6):
        sod = Sod(tuple([POINT] * l))
        for n in range(9):
            components = expand(Sym(n, sod))
            assert components.is_purely_exceptional()
            assert components.total_multiplicity() == q_length(n, l)


def test_bracketing_independence_multiset():
    for triple in ((A, B, C), (POINT, A, Curve(1)), (PHANTOM, POINT, Curve(0))):
        sod = Sod(triple)
        for n in range(7):
            head = expand(Sym(n, sod))
            tail = expand_tail_first(Sym(n, sod))
            assert equal_components(head, tail, "multiset")


def test_bracketing_ordered_equality_not_required():
    # opaque atoms contribute one entry per weak composition: C(2+2, 2) = 6;
    # the two bracketings agree as multisets, order is not pinned
    sod = Sod((A, B, C))
    head = expand(Sym(2, sod))
    tail = expand_tail_first(Sym(2, sod))
    assert head.total_multiplicity() == tail.total_multiplicity() == 6
    assert equal_components(head, tail, "multiset")


def test_trace_records_binomials():
    trace: list[BlockTrace] = []
    expand(Sym(4, Sod((A, B))), trace)
    top = [t for t in trace if t.arity == 4]
    assert [t.summands for t in top] == [1, 4, 6, 4, 1]


def test_bullet_distributes_over_sod():
    # bullet(sod(A, B), C) -> sod(bullet(A, C), bullet(B, C))
    components = expand(Bullet((Sod((A, B)), C)))
    assert components.entries == (
        (Component.of([A, C]), 1),
        (Component.of([B, C]), 1),
    )


def test_sym_of_distributed_bullet():
    # the product rule fires inside a symmetric power too
    components = expand(Sym(2, Bullet((Sod((POINT, POINT)), POINT))))
    assert components.is_purely_exceptional()
    assert components.total_multiplicity() == q_length(2, 2)


def test_sym_of_plain_bullet_stays_opaque():
    inner = Bullet((Curve(1), Curve(2)))
    components = expand(Sym(2, inner))
    assert components.entries == ((Component.of([SymPower(2, inner)]), 1),)


def test_sym_of_phantom_stays_opaque():
    components = expand(Sym(3, PHANTOM))
    assert components.entries == ((Component.of([SymPower(3, PHANTOM)]), 1),)


def test_nested_trivial_syms_simplify():
    assert expand(Sym(2, Sym(1, Curve(0)))) == expand(Sym(2, Curve(0)))
    assert expand(Sym(2, Sym(0, A))) == expand(Sym(2, POINT))


def test_orthogonal_sod_merges_repetitions():
    sod = Sod((POINT, POINT, POINT), orthogonal=True)
    components = expand(sod)
    assert components.entries == (point_entry(3),)


def test_ruled_expansion_counts():
    for g in (0, 1):
        for n in range(1, 7):
            components = expand(Sym(n, Sod((Curve(g), Curve(g)))))
            expected = sum(
                partition_count(n - i) * partition_count(i) for i in range(n + 1)
            )
            assert components.total_multiplicity() == expected
            for comp, _ in components:
                assert all(isinstance(f, (Curve, SymCurve)) or f == POINT for f in comp.factors)


def test_expand_never_fails_on_awkward_nesting():
    weird = Sym(2, Sym(3, Sod((A, Bullet((B, C, PHANTOM))))))
    components = expand(weird)
    assert components.total_multiplicity() >= 1
    assert all(mult >= 1 for _, mult in components)


def test_fake_plane_expansion_count_law():
    # sym(n, sod((l+2) points, phantom)) splits the arity between the point
    # part and phantom powers: total count is sum_k q(n-k; l+2)
    from symsod.expr import make_preset

    for l in (1, 2, 3):
        fake = make_preset("fakeP2", l)
        for n in range(1, 7):
            expected = sum(q_length(n - k, l + 2) for k in range(n + 1))
            assert component_count(Sym(n, fake)) == expected


def test_components_are_a_fixed_point_of_expansion():
    # rebuilding an expansion as an SOD of bullet products and expanding
    # again must reproduce the same multiset of components
    import random

    from symsod.expr import Bullet as B, Sod as S, equal_components
    from symsod.suites import gen_random_expr

    rng = random.Random(3)
    for _ in range(60):
        e = gen_random_expr(rng, depth=3)
        components = expand(e)
        parts = []
        for comp, mult in components:
            expr = B(comp.factors) if len(comp.factors) > 1 else comp.factors[0]
            parts.extend([expr] * mult)
        rebuilt = expand(S(tuple(parts)) if len(parts) > 1 else parts[0])
        assert equal_components(rebuilt, components, "multiset")
