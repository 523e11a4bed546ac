import pytest

from eucrhythm.core import (
    NecklaceClass,
    ParseError,
    Rhythm,
    RhythmError,
    canonical_necklace,
    clockwise_dist,
    format_distance_seq,
    format_subset,
    from_distance_seq,
    gcd,
    geodesic_dist,
    is_periodic,
    mod_inverse,
    parse_box,
    parse_distance_seq,
    parse_rhythm,
    parse_subset,
    period,
    reverse,
    rotate,
    same_necklace,
    scale,
    to_box,
    to_distance_seq,
)


def test_rhythm_validation():
    with pytest.raises(RhythmError):
        Rhythm(0, ())
    with pytest.raises(RhythmError):
        Rhythm(4, (0, 4))
    with pytest.raises(RhythmError):
        Rhythm(4, (2, 1))
    with pytest.raises(RhythmError):
        Rhythm(4, (1, 1))
    assert Rhythm.from_onsets([5, 1, 9], 8) == Rhythm(8, (1, 5))


def test_mask_round_trip():
    r = Rhythm(16, (0, 3, 6, 10, 13))
    assert Rhythm.from_mask(r.mask(), 16) == r


@pytest.mark.parametrize("a,b,g", [(8, 5, 1), (13, 5, 1), (12, 8, 4), (7, 7, 7), (1, 9, 1), (34, 15, 1)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(5, 16) == 13
    assert mod_inverse(4, 8) is None
    for m in range(2, 40):
        for x in range(1, m):
            inv = mod_inverse(x, m)
            if gcd(x, m) == 1:
                assert 1 <= inv < m and x * inv % m == 1
            else:
                assert inv is None


def test_parse_box_forms():
    tresillo = Rhythm(8, (0, 3, 6))
    assert parse_box("x..x..x.") == tresillo
    assert parse_box("[x . . x . . x .]") == tresillo
    assert parse_box("  X..X..X.  ") == tresillo
    assert to_box(tresillo) == "x..x..x."


def test_parse_box_error_index():
    with pytest.raises(ParseError) as info:
        parse_box("x..y")
    assert info.value.index == 3
    with pytest.raises(ParseError):
        parse_box("")
    with pytest.raises(ParseError):
        parse_box("[x..")


def test_distance_sequence_text():
    assert parse_distance_seq("(3,3,2)") == (3, 3, 2)
    assert parse_distance_seq("(332)") == (3, 3, 2)
    assert format_distance_seq((3, 3, 2)) == "(3,3,2)"
    assert format_distance_seq((11,)) == "(11,)"
    assert parse_distance_seq("(11,)") == (11,)
    assert parse_distance_seq("(11)") == (1, 1)
    with pytest.raises(ParseError):
        parse_distance_seq("3,3,2")
    with pytest.raises(ParseError):
        parse_distance_seq("(3,0,2)")


def test_subset_text():
    r = parse_subset("{0, 3, 6}/8")
    assert r == Rhythm(8, (0, 3, 6))
    assert format_subset(r) == "{0,3,6}/8"
    assert parse_subset("{}/5") == Rhythm(5, ())
    with pytest.raises(ParseError):
        parse_subset("{0,8}/8")


def test_parse_rhythm_dispatch():
    r = Rhythm(8, (0, 3, 6))
    assert parse_rhythm("x..x..x.") == r
    assert parse_rhythm("(3,3,2)") == r
    assert parse_rhythm("{0,3,6}/8") == r


def test_distance_sequence_conversion():
    bossa = Rhythm(16, (0, 3, 6, 10, 13))
    assert to_distance_seq(bossa) == (3, 3, 4, 3, 3)
    assert from_distance_seq((3, 3, 4, 3, 3), 0, 16) == bossa
    assert to_distance_seq(Rhythm(5, (2,))) == (5,)
    with pytest.raises(RhythmError):
        to_distance_seq(Rhythm(5, ()))
    with pytest.raises(RhythmError):
        from_distance_seq((3, 3), 0, 8)


def test_distances():
    r = Rhythm(8, (0, 3, 6))
    assert clockwise_dist(r, 0, 1) == 3
    assert clockwise_dist(r, 2, 0) == 2
    assert clockwise_dist(r, 1, 0) == 5
    assert geodesic_dist(r, 1, 0) == 3
    assert geodesic_dist(r, 0, 2) == 2
    assert clockwise_dist(r, 0, 3) == 0  # indices wrap modulo k


def test_rotate_scale_reverse():
    r = Rhythm(8, (0, 3, 6))
    assert rotate(r, 2) == Rhythm(8, (0, 2, 5))
    assert rotate(r, -3) == Rhythm(8, (0, 3, 5))
    assert scale(r, 2) == Rhythm(16, (0, 6, 12))
    assert reverse(r) == Rhythm(8, (0, 2, 5))
    with pytest.raises(RhythmError):
        scale(r, 0)


def test_necklaces():
    assert canonical_necklace(Rhythm(8, (0, 3, 6))) == NecklaceClass((2, 3, 3), 8, 3)
    assert same_necklace(parse_box("x..x..x."), parse_box("x.x..x.."))
    assert not same_necklace(parse_box("x..x..x."), parse_box("x.x.x..."))


def test_period():
    assert period(parse_box("x..x..x..x..")) == 3
    assert period(parse_box("x..x..x.")) == 8
    assert period(Rhythm(6, (0, 1, 2, 3, 4, 5))) == 1
    assert is_periodic is period
