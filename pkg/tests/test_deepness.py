from collections import Counter
from itertools import combinations, permutations

import pytest

from eucrhythm.core import Rhythm, RhythmError, gcd, parse_box, rotate, scale
from eucrhythm.deepness import (
    EXCEPTIONAL,
    GENERATED,
    characterize_deep,
    deep_witnesses,
    distances_by_multiplicity,
    family_masks,
    full_histogram,
    histogram,
    is_erdos_deep,
    is_winograd_deep,
    shelling,
    shelling_from_patterns,
    validate_shelling,
)
from eucrhythm.generators import EXCEPTIONAL_F, generated

BOSSA = Rhythm(16, (0, 3, 6, 10, 13))
BEMBE = Rhythm(12, (0, 2, 4, 5, 7, 9, 11))
D7_16_5 = generated(7, 16, 5)
BEMBE_SHELLING = ["x.x.xx.x.x.x", "x.x.xx.x.x..", "x.x.x..x.x..", "x.x....x.x..", "x.x....x...."]


def naive_histogram(r):
    c = Counter()
    for a, b in combinations(r.onsets, 2):
        d = (b - a) % r.n
        c[min(d, r.n - d)] += 1
    return dict(c)


def naive_erdos(r):
    if r.k <= 2:
        return True
    mults = Counter(naive_histogram(r).values())
    return all(mults[i] == 1 for i in range(1, r.k)) and sum(mults.values()) == r.k - 1


def test_histograms():
    assert histogram(BOSSA) == {4: 1, 7: 2, 6: 3, 3: 4}
    assert histogram(EXCEPTIONAL_F) == {1: 2, 2: 3, 3: 1}
    assert histogram(Rhythm(9, (4,))) == {}
    assert full_histogram(BOSSA) == {1: 0, 2: 0, 3: 4, 4: 1, 5: 0, 6: 3, 7: 2, 8: 0}
    for box in ["x.x.xx.x.x.x", "xx..x...x..x.", "x"]:
        r = parse_box(box)
        assert histogram(r) == naive_histogram(r)
        assert sum(histogram(r).values()) == r.k * (r.k - 1) // 2


def test_erdos_examples():
    assert is_erdos_deep(D7_16_5)
    assert distances_by_multiplicity(D7_16_5) == [2, 7, 4, 1, 6, 5]
    assert is_erdos_deep(BOSSA)
    assert not is_erdos_deep(Rhythm(9, (0, 1, 4)))
    assert histogram(Rhythm(9, (0, 1, 4))) == {1: 1, 3: 1, 4: 1}
    assert is_erdos_deep(Rhythm(7, ()))
    assert is_erdos_deep(Rhythm(7, (2, 5)))


def test_winograd_examples():
    assert is_winograd_deep(BEMBE)
    assert not is_winograd_deep(BOSSA)
    assert is_winograd_deep(EXCEPTIONAL_F)
    # 21 pairs over six distances leaves 3 and 8 both at multiplicity zero
    assert full_histogram(D7_16_5)[3] == full_histogram(D7_16_5)[8] == 0
    assert not is_winograd_deep(D7_16_5)


def test_winograd_degenerate_full_rhythms():
    # with a single distance (n = 3) or multiplicities 4 and 2 (n = 4) the full
    # rhythm passes the Winograd test yet has no multiplicity-1 distance
    for n in (3, 4):
        full = Rhythm(n, tuple(range(n)))
        assert is_winograd_deep(full)
        assert not is_erdos_deep(full)


def test_erdos_matches_naive_definition():
    for n in range(1, 11):
        for k in range(n + 1):
            for on in combinations(range(n), k):
                r = Rhythm(n, on)
                assert is_erdos_deep(r) == naive_erdos(r)


def test_characterize_examples():
    f = characterize_deep(D7_16_5)
    assert (f.kind, f.delta, f.alpha, f.m, f.base_n) == (GENERATED, 0, 1, 5, 16)
    g = characterize_deep(Rhythm(12, (0, 2, 4, 8)))
    assert (g.kind, g.alpha, g.delta) == (EXCEPTIONAL, 2, 0)
    assert g.reconstruct() == Rhythm(12, (0, 2, 4, 8))
    assert characterize_deep(Rhythm(9, (0, 1, 4))) is None
    assert characterize_deep(Rhythm(1, (0,))).m == 0


def test_witness_ordering_prefers_small_alpha_then_m():
    # {0,8}/16 only has a witness once scaled down to a 2-pulse circle
    f = characterize_deep(Rhythm(16, (0, 8)))
    assert (f.alpha, f.base_n, f.m) == (8, 2, 1)
    forms = deep_witnesses(D7_16_5)
    keys = [(w.alpha, w.m, w.delta) for w in forms]
    assert keys == sorted(keys)


def test_witness_invariants():
    for n in range(1, 13):
        for mask in range(1 << n):
            r = Rhythm.from_mask(mask, n)
            f = characterize_deep(r)
            if f is None:
                continue
            assert f.reconstruct() == r
            if f.kind == GENERATED and f.base_n > 1:
                assert f.k <= f.base_n // 2 + 1
                assert 1 <= f.m <= f.base_n // 2
                assert gcd(f.m, f.base_n) == 1


def test_family_enumeration_matches_deepness():
    for n in range(1, 13):
        deep = {m for m in range(1 << n) if naive_erdos(Rhythm.from_mask(m, n))}
        assert family_masks(n) == deep


def test_generated_rhythms_are_deep():
    for n in range(2, 25):
        for m in range(1, n // 2 + 1):
            if gcd(m, n) != 1:
                continue
            for k in range(1, n // 2 + 2):
                assert is_erdos_deep(generated(k, n, m)), (k, n, m)


def test_generated_deep_iff_gcd_bound():
    # with g = gcd(m, n), D_{k,n,m} is deep exactly when k <= n // (2g) + 1
    for n in range(2, 17):
        for m in range(1, n):
            g = gcd(m, n)
            for k in range(1, n // g + 1):
                r = generated(k, n, m)
                assert is_erdos_deep(r) == (k <= n // (2 * g) + 1), (k, n, m)


def test_deepness_symmetries():
    for r in (BOSSA, D7_16_5, EXCEPTIONAL_F, BEMBE):
        for d in range(r.n):
            assert is_erdos_deep(rotate(r, d))
            assert is_winograd_deep(rotate(r, d)) == is_winograd_deep(r)
        assert is_erdos_deep(scale(r, 3))
    assert is_winograd_deep(BEMBE) and not is_winograd_deep(scale(BEMBE, 2))


def test_shelling_examples():
    assert shelling(EXCEPTIONAL_F) == [4, 2, 1, 0]
    assert shelling(D7_16_5) == [14, 9, 4, 15, 10, 5, 0]
    assert validate_shelling(BEMBE, shelling(BEMBE))
    with pytest.raises(RhythmError):
        shelling(Rhythm(9, (0, 1, 4)))


def test_printed_bembe_shelling_validates():
    chain = [parse_box(p) for p in BEMBE_SHELLING]
    assert chain[0] == BEMBE
    assert all(is_erdos_deep(r) for r in chain)
    removed = shelling_from_patterns(chain)
    assert removed == [11, 5, 4, 9]
    tail = shelling(chain[-1])
    assert validate_shelling(BEMBE, removed + tail)


def test_validate_shelling():
    assert not validate_shelling(EXCEPTIONAL_F, [0, 4, 2, 1])
    assert not is_erdos_deep(Rhythm(6, (1, 2, 4)))
    pair = Rhythm(10, (3, 7))
    for order in permutations(pair.onsets):
        assert validate_shelling(pair, list(order))
    with pytest.raises(RhythmError):
        validate_shelling(EXCEPTIONAL_F, [0, 1, 2])
