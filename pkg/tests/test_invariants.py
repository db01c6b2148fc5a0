import pytest

from symsod.expr import (
    Curve,
    InternalInvariantError,
    Opaque,
    PHANTOM,
    POINT,
    Sod,
    Sym,
    SymCurve,
    SymPower,
    make_preset,
    surface_literal,
)
from symsod.invariants import (
    InvariantReport,
    euler_char,
    exceptional_length,
    hh_total_dim,
    invariant_report,
    phantom_audit,
)
from symsod.partitions import q_length
from symsod.series import BettiVector, gottsche_series


def test_euler_atoms():
    assert euler_char(POINT) == 1
    assert euler_char(Curve(0)) == 2
    assert euler_char(Curve(3)) == -4
    assert euler_char(PHANTOM) == 0
    assert euler_char(surface_literal(BettiVector(1, 0, 1, 0, 1))) == 3


def test_euler_sym_curve_projective_spaces():
    for n in range(2, 7):
        assert euler_char(SymCurve(0, n)) == n + 1


def test_euler_of_expanded_plane_powers():
    assert euler_char(Sym(2, make_preset("P1"))) == 5
    for n in range(1, 7):
        assert euler_char(Sym(n, make_preset("P1"))) == q_length(n, 2)


def test_euler_unknown_absorbs():
    assert euler_char(Opaque("A")) is None
    assert euler_char(Sod((POINT, Opaque("A")))) is None
    assert euler_char(Opaque("A", euler=7, hh=9)) == 7


def test_hh_atoms():
    assert hh_total_dim(PHANTOM) == 0
    assert hh_total_dim(Curve(2)) == 6
    assert hh_total_dim(make_preset("fakeP2", 1)) == 3


def test_hh_of_hilbert_scheme_of_surface_atom():
    plane = surface_literal(BettiVector(1, 0, 1, 0, 1))
    assert hh_total_dim(Sym(2, plane)) == 9
    assert euler_char(Sym(2, plane)) == 9


def test_sym_power_of_phantom_is_phantom():
    assert hh_total_dim(SymPower(4, PHANTOM)) == 0
    assert euler_char(SymPower(4, PHANTOM)) == 0
    assert hh_total_dim(Sym(3, make_preset("fakeP2", 2))) == q_length(3, 4)


def test_exceptional_length_examples():
    assert exceptional_length(make_preset("P2")) == 3
    assert exceptional_length(Sym(2, make_preset("P2"))) == 9
    assert exceptional_length(Sym(2, Curve(1))) is None


def test_euler_two_path_consistency():
    p2 = make_preset("P2")
    series = gottsche_series(BettiVector(1, 0, 1, 0, 1), 8)
    for n in range(1, 9):
        assert euler_char(Sym(n, p2)) == series.q_coefficient_at(n, -1)


def test_hh_two_path_consistency_ruled():
    ruled0 = make_preset("ruled", 0)
    series = gottsche_series(BettiVector(1, 0, 2, 0, 1), 6)
    for n in range(1, 7):
        assert hh_total_dim(Sym(n, ruled0)) == series.q_coefficient_at(n, 1)


def test_report_breakdown_and_consistency():
    report = invariant_report(Sym(2, make_preset("P1")))
    assert report.euler == report.hh_total == report.exceptional_length == 5
    assert sum(r.multiplicity for r in report.components) == 5
    assert all(r.euler == r.hh_total == 1 for r in report.components)
    assert report.to_json_dict() == {"euler": 5, "hh_total": 5, "exceptional_length": 5}


def test_report_unknowns_serialize_to_none():
    report = invariant_report(Sym(2, Sod((Opaque("A"), Opaque("B")))))
    assert report.to_json_dict() == {
        "euler": None,
        "hh_total": None,
        "exceptional_length": None,
    }


def test_report_rejects_inconsistent_totals():
    with pytest.raises(InternalInvariantError):
        InvariantReport(euler=2, hh_total=3, exceptional_length=3, components=())


def test_phantom_audit_fake_plane():
    report = phantom_audit(1, 3)
    assert [(row.n, row.hilb_total_betti, row.q_value) for row in report.rows] == [
        (1, 3, 3),
        (2, 9, 9),
        (3, 22, 22),
    ]
    assert report.all_equal and report.phantom_powers_certified
    assert bool(report)


def test_phantom_audit_all_parameters():
    for l in range(1, 5):
        assert phantom_audit(l, 8).all_equal


def test_phantom_audit_validates_arguments():
    with pytest.raises(ValueError):
        phantom_audit(0, 5)
    with pytest.raises(ValueError):
        phantom_audit(2, 0)


def test_declared_opaque_invariants_multiply():
    from symsod.expr import Bullet

    e = Bullet((Opaque("A", euler=3, hh=5), Curve(1)))
    assert euler_char(e) == 3 * 0
    assert hh_total_dim(e) == 5 * 4


def test_blowup_formula_two_invariant_pipelines():
    # hilb(n, blowup(P2)) expands into sym-powers of the plane whose
    # invariants come from Goettsche for Betti (1,0,1,0,1); the same totals
    # must come straight from Goettsche for the blown-up surface (1,0,2,0,1)
    from symsod.grammar import parse_expr

    blown = gottsche_series(BettiVector(1, 0, 2, 0, 1), 8)
    for n in range(1, 9):
        e = parse_expr(f"hilb({n}, blowup(P2))")
        assert hh_total_dim(e) == blown.q_coefficient_at(n, 1)
        assert euler_char(e) == blown.q_coefficient_at(n, -1)


def test_hh_two_path_genus_two_exercises_odd_betti():
    # the ruled surface over a genus-2 curve has b1 = b3 = 4; this drives the
    # odd-cohomology factors of the Hilbert-scheme series, which the pure
    # curve-power pipeline never touches
    from symsod.expr import ruled_betti

    series = gottsche_series(ruled_betti(2), 5)
    ruled2 = make_preset("ruled", 2)
    for n in range(1, 6):
        assert hh_total_dim(Sym(n, ruled2)) == series.q_coefficient_at(n, 1)
        assert euler_char(Sym(n, ruled2)) == series.q_coefficient_at(n, -1)
