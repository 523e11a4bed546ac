import pytest

from eucrhythm.classify import AksakClass, StringClass
from eucrhythm.core import gcd, same_necklace
from eucrhythm.corpus import (
    CorpusError,
    corpus_problems,
    default_path,
    find,
    load_corpus,
    query,
    read_entries,
)
from eucrhythm.evenness import evenness_geodesic
from eucrhythm.generators import bjorklund


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


def test_size_and_kinds(corpus):
    euclid = [e for e in corpus if e.is_euclidean]
    claves = [e for e in corpus if not e.is_euclidean]
    assert len(euclid) == 41
    assert sorted(e.id for e in claves) == ["bossa", "gahu", "rumba", "shiko", "son", "soukous"]


def test_euclidean_entry_invariants(corpus):
    for e in corpus:
        if not e.is_euclidean:
            continue
        r = e.rhythm
        assert (r.k, r.n) == (e.k, e.n)
        assert gcd(e.k, e.n) == 1
        assert same_necklace(r, bjorklund(e.k, e.n))


def test_claves(corpus):
    for e in corpus:
        if not e.is_euclidean:
            assert evenness_geodesic(e.rhythm) == 48


def test_named_entries(corpus):
    bossa = find(corpus, "E(5,16)")
    assert bossa.pattern == "x..x..x..x..x..."
    assert "third onset" in bossa.notes
    assert bossa.is_necklace_only
    assert find(corpus, "E(7,12)").string_class == StringClass.NEITHER
    assert find(corpus, "e(3, 8)").id == "E(3,8)"
    assert find(corpus, "E(4,12)") is None


def test_queries(corpus):
    assert len(query(corpus, aksak=AksakClass.AUTHENTIC)) == 10
    assert len(query(corpus, aksak=AksakClass.QUASI)) == 2
    assert len(query(corpus, aksak=AksakClass.PSEUDO)) == 7
    assert [e.id for e in query(corpus, name="tresillo")] == ["E(3,8)"]
    everything = query(corpus)
    assert len(everything) == len(corpus)
    keys = [(e.n, e.k, e.id) for e in everything]
    assert keys == sorted(keys)
    assert [e.id for e in query(corpus, k=5, n=16)] == ["E(5,16)", "bossa", "gahu", "rumba", "shiko", "son", "soukous"]


def test_query_defaults_to_bundled_corpus():
    assert len(query(name="habanera")) == 1


def test_default_path_override(monkeypatch, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# empty\n", encoding="utf-8")
    monkeypatch.setenv("EUCRHYTHM_CORPUS", str(f))
    assert default_path() == str(f)
    assert load_corpus() == []


def _write(tmp_path, lines):
    f = tmp_path / "corpus.txt"
    f.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(f)


GOOD = "E(3,8)|3|8|x..x..x.|(3,3,2)|pseudo|reverse-euclidean|tresillo|"


def test_parse_errors_name_the_line(tmp_path):
    path = _write(tmp_path, ["# header", GOOD, "E(3,8)|3|8|x..x..x."])
    with pytest.raises(CorpusError, match="line 3"):
        read_entries(path)
    path = _write(tmp_path, [GOOD.replace("pseudo", "wobbly")])
    with pytest.raises(CorpusError, match="line 1"):
        read_entries(path)


def test_invariant_violations_name_the_entry(tmp_path):
    bad_flag = GOOD.replace("reverse-euclidean", "euclidean")
    bad_gaps = GOOD.replace("(3,3,2)", "(3,2,3)")
    not_even = "E(3,8)|3|8|xx.x....|(1,2,5)|not-aksak|neither|x|"
    not_coprime = "E(2,4)|2|4|x.x.|(2,2)|not-aksak|both|x|"
    bad_clave = "son|5|16|x..x..x...x.x..x|(3,3,4,2,3,1)|not-aksak|neither|x|clave"
    for line, needle in [
        (bad_flag, "string class"),
        (bad_gaps, "gaps"),
        (not_even, "bjorklund"),
        (not_coprime, "gcd"),
        (bad_clave, "k=6"),
    ]:
        path = _write(tmp_path, [line])
        problems = corpus_problems(read_entries(path))
        assert any(needle in p for p in problems), (line, problems)
        with pytest.raises(CorpusError):
            load_corpus(path)
