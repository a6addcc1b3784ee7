import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan import (
    CoxeterPresentation,
    DihedralParams,
    Modular,
    Rationals,
    RiordanArray,
    Series,
    builtin,
    delta_embed,
    dihedral_generators,
    dihedral_words,
    is_faithful,
    parse_presentation,
    pascal_generalized,
    render,
    truncate,
    verify_assignment,
)
from riordan.errors import (
    InvalidParameter,
    PresentationSyntaxError,
    PresentationValidationError,
    RingMismatch,
    UnsupportedPresentation,
)
from riordan.presentations import INF, UNBOUNDED, evaluate_word, format_word

Q, Z3 = Rationals(), Modular(3)
N = 16


def arr(ring, g, f):
    return RiordanArray(Series(ring, g, N), Series(ring, f, N))


def test_builtins():
    s3 = builtin("S3")
    assert (s3.k, s3.entry(1, 2)) == (2, 3)
    assert builtin("K4").entry(1, 2) == 2
    assert builtin("Dinfty").entry(1, 2) == INF
    assert builtin("S", 4) == builtin("S4")
    s5 = builtin("S5")
    assert s5.k == 4
    assert [s5.entry(1, j) for j in range(1, 5)] == [1, 3, 2, 2]
    assert s5.entry(2, 3) == 3 and s5.entry(3, 4) == 3 and s5.entry(2, 4) == 2
    assert builtin("S3") == builtin("D3")
    for bad in ("S1", "D1", "X7", "S"):
        with pytest.raises(InvalidParameter):
            builtin(bad)


def test_presentation_invariants():
    with pytest.raises(PresentationValidationError):
        CoxeterPresentation(2, ((1, 3), (2, 1)))
    with pytest.raises(PresentationValidationError):
        CoxeterPresentation(2, ((2, 3), (3, 1)))
    with pytest.raises(PresentationValidationError):
        CoxeterPresentation(2, ((1, 1), (1, 1)))


def test_parse_examples():
    assert parse_presentation("generators 2; m 1 2 = 3;") == builtin("S3")
    assert parse_presentation("generators 2; m 1 2 = inf;") == builtin("Dinfty")
    with pytest.raises(PresentationValidationError, match="diagonal"):
        parse_presentation("generators 2; m 1 1 = 2;")


def test_parse_defaults_and_comments():
    text = "# S4\ngenerators 3;\nm 1 2 = 3;\nm 2 3 = 3;\n"
    assert parse_presentation(text) == builtin("S4")
    assert parse_presentation("generators 2;").entry(1, 2) == 2
    assert parse_presentation("generators 2; m 2 1 = 5; m 1 2 = 5; m 1 1 = 1;").entry(1, 2) == 5


@pytest.mark.parametrize("text,line,column", [
    ("generators x;", 1, 12),
    ("generators 2\nm 1 2 = 3;", 2, 1),
    ("generators 2;\nm 1 2 = 3", 2, 10),
    ("generators 2;\nm 1 2 = oops;", 2, 9),
    ("generators 2;\nm 1 2 = 3!", 2, 10),
    ("gens 2;", 1, 1),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation(text)
    assert (exc.value.line, exc.value.column) == (line, column)


@pytest.mark.parametrize("text,needle", [
    ("generators 2; m 1 3 = 3;", "out of range"),
    ("generators 2; m 1 2 = 1;", ">= 2"),
    ("generators 2; m 1 2 = 3; m 2 1 = 4;", "symmetric"),
    ("generators 0;", "positive"),
])
def test_validation_errors(text, needle):
    with pytest.raises(PresentationValidationError, match=needle):
        parse_presentation(text)


@pytest.mark.parametrize("name", ["S3", "S5", "K4", "Dinfty", "D7"])
def test_render_round_trip(name):
    p = builtin(name)
    text = render(p)
    assert parse_presentation(text) == p
    assert render(parse_presentation(text)) == text


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.sampled_from([2, 3, 4, 6, INF]), min_size=k * (k - 1) // 2, max_size=k * (k - 1) // 2),
)))
def test_render_round_trip_random(case):
    k, values = case
    pairs = dict(zip([(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)], values))
    p = CoxeterPresentation.from_pairs(k, pairs)
    assert parse_presentation(render(p)) == p


def test_verify_examples():
    r1, r2 = dihedral_generators(DihedralParams(3, 1, 1, 1), N)
    report = verify_assignment(builtin("S3"), [r2, r1])
    assert report.overall
    assert all(v.holds is True for v in report.relations)

    k4 = verify_assignment(builtin("K4"), [arr(Q, [1], [0, -1]), arr(Q, [-1], [0, 1])])
    assert k4.overall

    bad = verify_assignment(builtin("S3"), [pascal_generalized(Q, N, 1), pascal_generalized(Q, N, 2)])
    verdicts = {(v.i, v.j): v.holds for v in bad.relations}
    assert verdicts == {(1, 1): True, (2, 2): True, (1, 2): False}
    assert not bad.overall


def test_verify_infinite_dihedral():
    images = [delta_embed(Q, N, 0, -1), delta_embed(Q, N, 1, -1)]
    report = verify_assignment(builtin("Dinfty"), images, cutoff=64)
    verdicts = {(v.i, v.j): v.holds for v in report.relations}
    assert verdicts == {(1, 1): True, (2, 2): True, (1, 2): UNBOUNDED}
    assert report.overall
    assert "unbounded" in report.to_text()


def test_verify_infinite_relation_refuted_by_finite_order():
    r1, r2 = dihedral_generators(DihedralParams(3, 1, 1, 1), N)
    report = verify_assignment(builtin("Dinfty"), [r1, r2])
    assert not report.overall


def test_verify_checks_images():
    with pytest.raises(InvalidParameter):
        verify_assignment(builtin("S3"), [pascal_generalized(Q, N, 1)])
    with pytest.raises(RingMismatch):
        verify_assignment(builtin("K4"), [pascal_generalized(Q, N, 1), pascal_generalized(Z3, N, 1)])


def test_verify_on_matrices():
    r1, r2 = dihedral_generators(DihedralParams(3, 1, 1, 1), N)
    assert verify_assignment(builtin("S3"), [truncate(r2, 3), truncate(r1, 3)]).overall


def test_dihedral_words():
    assert len(dihedral_words(3)) == 6
    assert set(dihedral_words(2)) == {(), (1, 2), (2,), (2, 1, 2)}
    assert format_word((2, 1, 2)) == "r2r1r2" and format_word(()) == "e"
    words = dihedral_words(5)
    r1, r2 = dihedral_generators(DihedralParams(5, 1, 1, 1), N)
    mats = [truncate(evaluate_word(w, [r1, r2]), 5) for w in words]
    assert len(words) == 10 == len(set(mats))
    with pytest.raises(InvalidParameter):
        dihedral_words(1)


def test_is_faithful_examples():
    r1, r2 = dihedral_generators(DihedralParams(3, 1, 1, 1), N)
    assert is_faithful(builtin("S3"), [r1, r2])
    m = arr(Q, [1], [0, -1])
    assert not is_faithful(builtin("D2"), [m, m])
    assert not is_faithful(builtin("S3"), [truncate(r1, 1), truncate(r2, 1)])
    with pytest.raises(UnsupportedPresentation):
        is_faithful(builtin("S4"), [r1, r2, r1])
    with pytest.raises(UnsupportedPresentation):
        is_faithful(builtin("Dinfty"), [r1, r2])


@pytest.mark.parametrize("n", range(3, 10))
def test_dihedral_presentations_hold_and_are_faithful(n):
    for a in [a for a in range(1, n) if a * a % n == 1]:
        for b, s in ((0, 1), (2, 2)):
            images = dihedral_generators(DihedralParams(n, a, b, s), 8)
            assert verify_assignment(builtin(f"D{n}"), images).overall
            assert is_faithful(builtin(f"D{n}"), images)


def test_report_json():
    data = verify_assignment(builtin("Dinfty"), [delta_embed(Q, N, 0, -1), delta_embed(Q, N, 1, -1)]).to_json()
    assert data["overall"] is True
    assert data["relations"][1] == {"i": 1, "j": 2, "m": "inf", "holds": "unbounded"}
