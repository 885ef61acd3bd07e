"""Exhaustive search of the tree of binary words avoiding an (l, p) spec.

The root is the empty word. A node that avoids (l, p) is internal and has
children ``w0`` and ``w1``; a node that does not is a leaf. No infinite word
avoids (l, p) exactly when this tree is finite.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

from .words import AvoidanceSpec, Checker, InvalidSpecError, ReplabError, Word

DEFAULT_MAX_DEPTH = 200
# infinite trees grow exponentially long before any depth cutoff is reached
DEFAULT_MAX_NODES = 5_000_000


class NotFiniteError(ReplabError):
    pass


@dataclass(frozen=True)
class TreeReport:
    spec: AvoidanceSpec
    leaves: int
    height: int
    maximal_count: int
    maximal_words_starting_with_zero: tuple[Word, ...]
    internal_count: int
    per_depth_counts: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "l": self.spec.min_square_period,
            "power": str(self.spec.power),
            "leaves": self.leaves,
            "height": self.height,
            "t": self.maximal_count,
            "maximal_words": [str(w) for w in self.maximal_words_starting_with_zero],
            "per_depth_counts": list(self.per_depth_counts),
        }


@dataclass(frozen=True)
class Inconclusive:
    spec: AvoidanceSpec
    depth_reached: int
    frontier_size: int

    def as_dict(self) -> dict:
        return {
            "l": self.spec.min_square_period,
            "power": str(self.spec.power),
            "inconclusive": True,
            "depth_reached": self.depth_reached,
            "frontier_size": self.frontier_size,
        }


SearchOutcome = Union[TreeReport, Inconclusive]


@dataclass
class _Tally:
    per_depth: list[int] = field(default_factory=list)
    frontier: int = 0

    def merge(self, other: "_Tally"):
        if len(other.per_depth) > len(self.per_depth):
            self.per_depth.extend([0] * (len(other.per_depth) - len(self.per_depth)))
        for d, c in enumerate(other.per_depth):
            self.per_depth[d] += c
        self.frontier += other.frontier


def _walk(checker: Checker, roots: list[tuple[int, int]], max_depth: int,
          max_nodes: int = DEFAULT_MAX_NODES) -> _Tally:
    """Depth-first walk below internal nodes given as ``(packed word, depth)``."""
    tally = _Tally()
    per_depth = tally.per_depth
    ok = checker.ok
    stack = list(roots)
    visited = 0
    while stack:
        visited += 1
        if visited > max_nodes:
            tally.frontier += len(stack)
            break
        x, d = stack.pop()
        while d >= len(per_depth):
            per_depth.append(0)
        per_depth[d] += 1
        if d == max_depth:
            # one surviving word at the cutoff settles it; stop here
            tally.frontier += 1 + len(stack)
            break
        n = d + 1
        for a in (1, 0):
            y = (x << 1) | a
            if ok(y, n):
                stack.append((y, n))
    return tally


def _walk_job(args):
    spec, roots, max_depth, max_nodes = args
    return _walk(Checker(spec), roots, max_depth, max_nodes)


def _level(checker: Checker, depth: int) -> list[int]:
    """Packed internal nodes at exactly ``depth``, in increasing order."""
    level = [0]
    for n in range(1, depth + 1):
        level = [y for x in level for y in ((x << 1), (x << 1) | 1) if checker.ok(y, n)]
    return level


def explore(spec: AvoidanceSpec, max_depth: int = DEFAULT_MAX_DEPTH,
            workers: int = 1, max_nodes: int = DEFAULT_MAX_NODES) -> SearchOutcome:
    """Search the whole tree, or give up once an internal node sits at
    ``max_depth`` or more than ``max_nodes`` internal nodes have been visited.

    ``workers > 1`` farms subtrees rooted at a fixed depth out to processes;
    the merged report is identical to the sequential one.
    """
    if not isinstance(spec, AvoidanceSpec):
        raise InvalidSpecError(f"not an AvoidanceSpec: {spec!r}")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    checker = Checker(spec)
    split = 8
    if workers <= 1 or max_depth <= split:
        tally = _walk(checker, [(0, 0)], max_depth, max_nodes)
    else:
        tally = _Tally(per_depth=[len(_level(checker, d)) for d in range(split)])
        seeds = _level(checker, split)
        chunks = [[(x, split) for x in seeds[i::workers]] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub in pool.map(_walk_job, [(spec, c, max_depth, max_nodes // workers) for c in chunks if c]):
                tally.merge(sub)
        while tally.per_depth and tally.per_depth[-1] == 0:
            tally.per_depth.pop()

    per_depth = tally.per_depth
    if tally.frontier:
        return Inconclusive(spec, len(per_depth) - 1, tally.frontier)

    height = len(per_depth)
    deepest = _level(checker, height - 1)
    words = sorted(Word(tuple(int(c) for c in format(x, f"0{height - 1}b"))) for x in deepest)
    zero_words = tuple(w for w in words if w[0] == 0)
    return TreeReport(
        spec=spec,
        leaves=sum(per_depth) + 1,
        height=height,
        maximal_count=per_depth[-1],
        maximal_words_starting_with_zero=zero_words,
        internal_count=sum(per_depth),
        per_depth_counts=tuple(per_depth),
    )


def longest_avoiding_words(spec: AvoidanceSpec, max_depth: int = DEFAULT_MAX_DEPTH) -> list[Word]:
    """All words of maximal length avoiding ``spec``, both complement classes."""
    outcome = explore(spec, max_depth)
    if isinstance(outcome, Inconclusive):
        raise NotFiniteError(
            f"tree for {spec} not finite within depth {max_depth} "
            f"({outcome.frontier_size} words still alive)")
    words = list(outcome.maximal_words_starting_with_zero)
    words += [w.complement() for w in words]
    return sorted(set(words))
