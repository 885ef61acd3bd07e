from itertools import product

import pytest

from replab import discovery as D
from replab import morphisms as M
from replab.reference import KNOWN_AVOIDED_BLOCKS
from replab.words import AvoidanceSpec, Word, find_violation

SPEC_F = M.TARGETS["f"]


def brute_block_counts(spec, k, max_blocks, max_len):
    """Survivor counts straight from the definition."""
    counts = {}
    level = [()]
    for n in range(1, max_len + 1):
        level = [w + (a,) for w in level for a in (0, 1) if find_violation(w + (a,), spec) is None]
        if n % k == 0:
            counts[n] = sum(len({w[i:i + k] for i in range(0, n, k)}) <= max_blocks for w in level)
    return counts


@pytest.mark.parametrize("spec,k,blocks,n", [
    (SPEC_F, 2, 3, 16), (SPEC_F, 3, 2, 18), (SPEC_F, 4, 3, 16),
    (AvoidanceSpec.parse(4, "5/2+"), 3, 3, 18), (AvoidanceSpec.parse(2, "3"), 2, 2, 8),
])
def test_block_filter_matches_definition(spec, k, blocks, n):
    a = D.block_filter(spec, k, blocks, n)
    expected = brute_block_counts(spec, k, blocks, n)
    got = a.surviving_word_count_by_length
    assert {m: got.get(m, 0) for m in expected} == expected


def test_single_block_case():
    for spec in (SPEC_F, AvoidanceSpec.parse(7, "7/3+")):
        a = D.block_filter(spec, 5, 3, 5)
        avoiding = [w for w in product((0, 1), repeat=5) if find_violation(w, spec) is None]
        assert a.surviving_word_count_by_length == {5: len(avoiding)}
        assert sorted(b.symbols for b in a.candidate_blocks) == sorted(avoiding)
        assert all(len(s) == 1 for s in a.block_sets)


def test_candidate_blocks_come_from_block_sets():
    a = D.block_filter(SPEC_F, 4, 3, 24)
    assert set(a.candidate_blocks) == {b for s in a.block_sets for b in s}
    assert all(len(s) <= 3 for s in a.block_sets)


def test_exhaustion_is_reported():
    a = D.block_filter(SPEC_F, 4, 3, 80)
    assert a.exhausted and not a.appears_unbounded
    assert a.candidate_blocks == () and a.block_sets == ()
    assert list(a.surviving_word_count_by_length.values())[-1] == 0


def test_k2_survivors_follow_f():
    # f's images split into the 2-blocks 00, 10 and 11, so images of long
    # squarefree words keep surviving the k=2 filter
    blocks = {tuple(im[i:i + 2]) for im in M.get("f").images for i in range(0, 10, 2)}
    assert blocks == {(0, 0), (1, 0), (1, 1)}
    a = D.block_filter(SPEC_F, 2, 3, 20)
    assert not a.exhausted
    assert tuple(Word(b) for b in sorted(blocks)) in a.block_sets


def test_block_filter_validates_arguments():
    for k, m, n in ((0, 3, 10), (3, 0, 9), (3, 3, 10), (4, 3, 2)):
        with pytest.raises(ValueError):
            D.block_filter(SPEC_F, k, m, n)


@pytest.fixture(scope="module")
def k10():
    analysis = D.block_filter(SPEC_F, 10, 3, 60)
    return analysis, D.propose_morphisms(SPEC_F, 10, 3, analysis=analysis)


def test_k10_filter_and_proposals(k10):
    analysis, cands = k10
    assert not analysis.exhausted
    # still shrinking at length 60, so the growth heuristic stays negative
    assert list(analysis.surviving_word_count_by_length.values()) == [234, 10356, 400560, 231232, 129636, 80450]
    assert not analysis.appears_unbounded
    assert set(M.get("f").images) <= {b.symbols for b in analysis.candidate_blocks}
    assert any(set(c.images) == set(M.get("f").images) for c in cands)
    assert [c.images for c in cands] == sorted(c.images for c in cands)
    assert [c.name for c in cands[:2]] == ["candidate0", "candidate1"]


def test_proposals_are_sound(k10):
    _, cands = k10
    src = M.squarefree_ternary(200)
    for c in cands[::17]:
        assert M.verify(c, SPEC_F)["passed"]
        assert find_violation(c(src), SPEC_F) is None


def test_propose_k2_is_empty():
    assert D.propose_morphisms(SPEC_F, 2, 3, corpus_len=20) == []
    assert D.propose_morphisms(SPEC_F, 2, 3, corpus_len=20, exhaustive=True) == []


def test_propose_with_too_few_blocks():
    a = D.block_filter(SPEC_F, 3, 2, 6)
    assert D.propose_morphisms(SPEC_F, 3, 5, analysis=a, exhaustive=True) == []
    with pytest.raises(ValueError):
        D.propose_morphisms(SPEC_F, 3, 1)


def test_exhaustive_proposal_finds_the_same_small_candidates():
    a = D.block_filter(SPEC_F, 6, 3, 36)
    fast = D.propose_morphisms(SPEC_F, 6, 3, analysis=a)
    full = D.propose_morphisms(SPEC_F, 6, 3, analysis=a, exhaustive=True)
    assert {c.images for c in fast} <= {c.images for c in full}


def test_avoided_pairs_examples():
    g1 = D.infer_avoided_blocks(M.get("g1"), M.TARGETS["g"], 2)
    assert Word.parse("01", 8) in g1.avoided

    h1 = D.infer_avoided_blocks(M.get("h1"), M.TARGETS["h"], 2)
    published = {"01", "02", "10", "12", "13", "20", "21", "34", "42", "43"}
    found = {str(b) for b in h1.avoided}
    assert published <= found
    # the rest are squares of a letter, excluded anyway for squarefree sources
    assert found - published == {"00", "11", "22", "33", "44"}


def test_avoided_blocks_empty_when_nothing_fails():
    # two-letter images are too short to hold a square of period 3
    assert D.infer_avoided_blocks(M.identity(3), AvoidanceSpec.parse(3, "inf"), 2).avoided == ()


@pytest.mark.parametrize("name,spec,window", [("g1", M.TARGETS["g"], 13), ("h1", M.TARGETS["h"], 9)])
def test_avoided_blocks_match_published_lists(name, spec, window):
    rep = D.infer_avoided_blocks(M.get(name), spec, window)
    assert [str(b) for b in rep.squarefree()] == KNOWN_AVOIDED_BLOCKS[name]


@pytest.mark.parametrize("name,spec,window", [("h1", M.TARGETS["h"], 6), ("g1", M.TARGETS["g"], 4)])
def test_avoided_blocks_are_minimal(name, spec, window):
    m = M.get(name)
    rep = D.infer_avoided_blocks(m, spec, window)
    reported = {b.symbols for b in rep.avoided}
    expected = set()
    for n in range(1, window + 1):
        for b in product(range(m.source_alphabet), repeat=n):
            if find_violation(m(Word(b, m.source_alphabet)), spec) is None:
                continue
            if n == 1 or all(find_violation(m(Word(b[i:j], m.source_alphabet)), spec) is None
                             for i in range(n) for j in range(i + 1, n + 1) if j - i < n):
                expected.add(b)
    assert reported == expected


def test_avoided_window_validation():
    with pytest.raises(ValueError):
        D.infer_avoided_blocks(M.get("f"), SPEC_F, 1)
