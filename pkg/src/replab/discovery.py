"""Heuristic search for uniform morphisms behind a family of avoiding words.

The idea: if long avoiding words are images of squarefree words under a
``k``-uniform morphism on ``m`` letters, then cutting them into aligned
``k``-blocks leaves at most ``m`` distinct blocks. Filtering the avoiding
words by that condition either dies out (no such morphism for this ``k``)
or keeps growing, in which case the surviving blocks are candidate images.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .morphisms import (UniformMorphism, apply, check_images_avoid, check_inclusion,
                        check_interchange)
from .words import AvoidanceSpec, Checker, Word, find_violation


@dataclass(frozen=True)
class BlockAnalysis:
    k: int
    max_blocks: int
    candidate_blocks: tuple[Word, ...]
    surviving_word_count_by_length: dict
    exhausted: bool
    # distinct block sets used by the longest survivors
    block_sets: tuple[tuple[Word, ...], ...] = ()

    @property
    def appears_unbounded(self) -> bool:
        """Survivor counts did not drop over the last three lengths.

        A heuristic reading of "keeps growing", nothing more.
        """
        counts = list(self.surviving_word_count_by_length.values())
        if self.exhausted or len(counts) < 3:
            return False
        a, b, c = counts[-3:]
        return a <= b <= c

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "max_blocks": self.max_blocks,
            "candidate_blocks": [str(b) for b in self.candidate_blocks],
            "surviving_word_count_by_length": {str(n): c for n, c in
                                               self.surviving_word_count_by_length.items()},
            "exhausted": self.exhausted,
            "appears_unbounded": self.appears_unbounded,
            "block_set_count": len(self.block_sets),
        }


def block_filter(spec: AvoidanceSpec, k: int, max_blocks: int, max_len: int) -> BlockAnalysis:
    """Avoiding binary words of length ``k, 2k, ..., max_len`` whose aligned
    ``k``-blocks take at most ``max_blocks`` distinct values.

    Survivors are grown block by block. Once a word already uses
    ``max_blocks`` distinct blocks, its next block has to be one of them, so
    only those are tried. Only words starting with 0 are grown; the other
    half are their complements.
    """
    if k < 1 or max_blocks < 1 or max_len < k or max_len % k:
        raise ValueError("need k >= 1, max_blocks >= 1 and max_len a positive multiple of k")
    checker = Checker(spec)
    ok = checker.ok

    def grow(x: int, n: int, trie: dict) -> list[tuple[int, int]]:
        """Extend ``x`` by every block in ``trie`` that keeps it avoiding;
        blocks sharing a prefix share the checks on that prefix."""
        out = []
        stack = [(x, n, trie)]
        while stack:
            y, m, node = stack.pop()
            if "block" in node:
                out.append((y, node["block"]))
                continue
            for a in (0, 1):
                child = node.get(a)
                if child is not None:
                    z = (y << 1) | a
                    if ok(z, m + 1):
                        stack.append((z, m + 1, child))
        return out

    def make_trie(blocks) -> dict:
        root: dict = {}
        for b in blocks:
            node = root
            for i in range(k - 1, -1, -1):
                node = node.setdefault((b >> i) & 1, {})
            node["block"] = b
        return root

    full = make_trie(range(1 << k))
    # a survivor is (packed word, frozenset of blocks used)
    first = [b for _, b in grow(0, 0, full)]
    all_blocks = make_trie(first)
    survivors = [(b, frozenset([b])) for b in first if not b >> (k - 1)]
    tries: dict = {}
    counts = {k: 2 * len(survivors)}
    n = k
    while n < max_len and survivors:
        nxt = []
        for x, used in survivors:
            if len(used) >= max_blocks:
                if used not in tries:
                    tries[used] = make_trie(used)
                trie = tries[used]
            else:
                trie = all_blocks
            for y, b in grow(x, n, trie):
                nxt.append((y, used | {b}))
        n += k
        survivors = nxt
        counts[n] = 2 * len(survivors)
    flip = (1 << k) - 1
    sets = {used for _, used in survivors}
    sets |= {frozenset(b ^ flip for b in used) for used in sets}
    blocks = set().union(*sets) if sets else set()

    def word(b: int) -> Word:
        return Word(tuple(int(c) for c in format(b, f"0{k}b")))

    return BlockAnalysis(
        k, max_blocks,
        candidate_blocks=tuple(word(b) for b in sorted(blocks)),
        surviving_word_count_by_length=counts,
        exhausted=not survivors,
        block_sets=tuple(sorted(tuple(word(b) for b in sorted(u)) for u in sets)),
    )


def propose_morphisms(spec: AvoidanceSpec, k: int, alphabet: int = 3, corpus_len: Optional[int] = None,
                      analysis: Optional[BlockAnalysis] = None,
                      exhaustive: bool = False) -> list[UniformMorphism]:
    """Block sets of size ``alphabet`` that pass the inclusion, interchange
    and short-image checks, as morphisms from ``Σ_alphabet``.

    Only sets actually used together by a longest survivor are tried; with
    ``exhaustive=True`` every ``alphabet``-subset of the candidate blocks is.
    Letters are assigned to blocks in lexicographic order; results are
    sorted by their image tuples.
    """
    if alphabet < 2:
        raise ValueError("alphabet must be at least 2")
    if analysis is None:
        analysis = block_filter(spec, k, alphabet, corpus_len or 6 * k)
    if exhaustive:
        subsets = combinations(analysis.candidate_blocks, alphabet)
    else:
        subsets = (s for s in analysis.block_sets if len(s) == alphabet)
    found = []
    for subset in subsets:
        images = tuple(w.symbols for w in sorted(subset))
        m = UniformMorphism(f"cand{len(found)}", alphabet, 2, images)
        if check_inclusion(m) or check_interchange(m):
            continue
        if check_images_avoid(m, spec, 5, first_only=True):
            continue
        found.append(m)
    found.sort(key=lambda m: m.images)
    return [UniformMorphism(f"candidate{i}", m.source_alphabet, 2, m.images)
            for i, m in enumerate(found)]


@dataclass(frozen=True)
class AvoidedBlockReport:
    morphism: str
    spec: AvoidanceSpec
    window: int
    avoided: tuple[Word, ...]

    def squarefree(self) -> list[Word]:
        """Avoided blocks that are not already excluded for containing a square."""
        sq = AvoidanceSpec(1)
        return [b for b in self.avoided if find_violation(b, sq) is None]

    def as_dict(self) -> dict:
        return {
            "morphism": self.morphism,
            "l": self.spec.min_square_period,
            "power": str(self.spec.power),
            "window": self.window,
            "avoided": [str(b) for b in self.avoided],
            "avoided_squarefree": [str(b) for b in self.squarefree()],
        }


def infer_avoided_blocks(m: UniformMorphism, spec: AvoidanceSpec, window: int) -> AvoidedBlockReport:
    """Minimal source words of length at most ``window`` whose image violates
    ``spec``: the image of every proper factor avoids it.

    Words are grown one letter at a time from words whose images avoid the
    spec. The image of the prefix is then clean, and the image of any other
    proper factor sits inside the image of ``b[1:]``, so that is the only
    extra check.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    alive = [()]
    avoided = []
    for length in range(1, window + 1):
        nxt = []
        for w in alive:
            for a in range(m.source_alphabet):
                b = w + (a,)
                if find_violation(apply(m, b), spec) is None:
                    nxt.append(b)
                elif length == 1 or find_violation(apply(m, b[1:]), spec) is None:
                    avoided.append(Word(b, m.source_alphabet))
        alive = nxt
    return AvoidedBlockReport(m.name, spec, window, tuple(avoided))
