"""Counting avoiding words and bounding their growth rate.

Exact counts come from walking the avoidance tree level by level. Upper
bounds on the growth rate come from a finite set of minimal forbidden words:
words avoiding that set are recognised by a de Bruijn style automaton, whose
transfer matrix has the growth rate as its dominant eigenvalue. Lower bounds
come from a uniform morphism that maps squarefree ternary words to avoiding
words.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy.sparse.csgraph import connected_components

from .words import AvoidanceSpec, Checker, InvalidSpecError, Word, as_word

# squarefree ternary words grow at least like this constant to the power n
SQUAREFREE_TERNARY_GROWTH = 1.109999


@dataclass(frozen=True)
class CountTable:
    spec: Optional[AvoidanceSpec]
    counts: tuple[int, ...]

    def rows(self):
        return list(enumerate(self.counts))


def count_avoiding(spec: AvoidanceSpec, n_max: int) -> CountTable:
    """Number of binary words of each length ``0..n_max`` avoiding ``spec``."""
    if not isinstance(spec, AvoidanceSpec):
        raise InvalidSpecError(f"not an AvoidanceSpec: {spec!r}")
    checker = Checker(spec)
    level = [0]
    counts = [1]
    for n in range(1, n_max + 1):
        ok = checker.ok
        level = [y for x in level for y in (x << 1, (x << 1) | 1) if ok(y, n)]
        counts.append(len(level))
    return CountTable(spec, tuple(counts))


@dataclass(frozen=True)
class ForbiddenSet:
    words: frozenset[Word]
    max_len: int

    def __len__(self):
        return len(self.words)

    def sorted(self) -> list[Word]:
        return sorted(self.words, key=lambda w: (len(w), w.symbols))

    @property
    def longest(self) -> int:
        return max((len(w) for w in self.words), default=0)

    @property
    def pair_count(self) -> int:
        """Size when a word and its complement count once."""
        return len({min(w.symbols, tuple(1 - a for a in w.symbols)) for w in self.words})

    def by_length(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.words:
            out[len(w)] = out.get(len(w), 0) + 1
        return dict(sorted(out.items()))

    def to_text(self) -> str:
        return "".join(f"{w}\n" for w in self.sorted())

    @classmethod
    def of(cls, words: Iterable, max_len: Optional[int] = None) -> "ForbiddenSet":
        ws = frozenset(as_word(w) for w in words)
        return cls(ws, max_len if max_len is not None else max((len(w) for w in ws), default=0))


def minimal_forbidden(spec: AvoidanceSpec, max_len: int) -> ForbiddenSet:
    """Binary words of length at most ``max_len`` that violate ``spec`` while
    every proper factor avoids it."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    checker = Checker(spec)
    found = []
    level = [0]
    for n in range(1, max_len + 1):
        nxt = []
        for x in level:
            for a in (0, 1):
                y = (x << 1) | a
                v = checker.last_violation(y, n)
                if v is None:
                    nxt.append(y)
                elif v.length == n:
                    # the shortest violating suffix is the whole word, so
                    # every proper factor is clean
                    found.append(Word(tuple(int(c) for c in format(y, f"0{n}b"))))
        level = nxt
    return ForbiddenSet(frozenset(found), max_len)


# --- automaton --------------------------------------------------------------

@dataclass(frozen=True)
class Automaton:
    """States are the binary words of length ``order`` avoiding the forbidden
    set; ``w --a--> suffix(wa)`` whenever ``wa`` avoids it as well."""

    order: int
    states: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def matrix(self) -> np.ndarray:
        m = np.zeros((len(self.states), len(self.states)))
        for i, succ in enumerate(self.edges):
            for j in succ:
                m[i, j] += 1
        return m


def _contains_any_suffix(x: int, n: int, forbidden: dict[int, set[int]]) -> bool:
    """True if some forbidden word is a suffix of the length-``n`` packed word."""
    for k, words in forbidden.items():
        if k <= n and (x & ((1 << k) - 1)) in words:
            return True
    return False


def _by_length(forbidden: ForbiddenSet) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for w in forbidden.words:
        out.setdefault(len(w), set()).add(int(str(w), 2) if len(w) else 0)
    return out


def _avoiding_levels(forbidden: ForbiddenSet, depth: int) -> list[list[int]]:
    table = _by_length(forbidden)
    if 0 in table:
        return [[] for _ in range(depth + 1)]
    levels = [[0]]
    for n in range(1, depth + 1):
        levels.append([y for x in levels[-1] for y in (x << 1, (x << 1) | 1)
                       if not _contains_any_suffix(y, n, table)])
    return levels


def build_automaton(forbidden: ForbiddenSet) -> Automaton:
    order = max(forbidden.longest - 1, 0)
    table = _by_length(forbidden)
    states = _avoiding_levels(forbidden, order)[order]
    index = {x: i for i, x in enumerate(states)}
    mask = (1 << order) - 1
    edges = []
    for x in states:
        succ = []
        for a in (0, 1):
            y = (x << 1) | a
            if not _contains_any_suffix(y, order + 1, table):
                succ.append(index[y & mask])
        edges.append(tuple(succ))
    return Automaton(order, tuple(states), tuple(edges))


def automaton_counts(forbidden: ForbiddenSet, n_max: int) -> CountTable:
    """Exact number of binary words of each length avoiding every member of
    ``forbidden`` as a factor."""
    if not forbidden.words:
        return CountTable(None, tuple(2 ** n for n in range(n_max + 1)))
    aut = build_automaton(forbidden)
    levels = _avoiding_levels(forbidden, min(aut.order, n_max))
    counts = [len(lv) for lv in levels]
    # paths of length n - order starting anywhere
    vec = [1] * len(aut.states)
    for _ in range(aut.order + 1, n_max + 1):
        vec = [sum(vec[j] for j in succ) for succ in aut.edges]
        counts.append(sum(vec))
    return CountTable(None, tuple(counts))


# --- growth -----------------------------------------------------------------

class GrowthKind(enum.Enum):
    UPPER_AUTOMATON = "UpperAutomaton"
    LOWER_MORPHISM = "LowerMorphism"
    RECURRENCE_ROOT = "RecurrenceRoot"


@dataclass(frozen=True)
class GrowthEstimate:
    kind: GrowthKind
    value: float
    certified_digits: int
    state_count: Optional[int] = None
    lower: Optional[float] = None
    upper: Optional[float] = None
    forbidden_count: Optional[int] = None

    def as_dict(self) -> dict:
        d = {"kind": self.kind.value, "value": round(self.value, 10),
             "certified_digits": self.certified_digits}
        if self.state_count is not None:
            d["state_count"] = self.state_count
        if self.forbidden_count is not None:
            d["forbidden_count"] = self.forbidden_count
        return d


def perron_root(a: np.ndarray, tol: float = 1e-12, max_iter: int = 200_000) -> tuple[float, float, float]:
    """Spectral radius of an irreducible non-negative matrix.

    Power iteration runs on ``A + I``, which is primitive, so the iterate
    stays positive and the Collatz-Wielandt ratios ``min/max (Ax)_i / x_i``
    bracket the root. Returns ``(estimate, lower, upper)``.
    """
    n = a.shape[0]
    shifted = a + np.eye(n)
    x = np.ones(n)
    prev = np.inf
    lo, hi = 0.0, np.inf
    for _ in range(max_iter):
        y = shifted @ x
        ratios = y / x
        lo, hi = ratios.min() - 1.0, ratios.max() - 1.0
        rayleigh = float(x @ y / (x @ x)) - 1.0
        x = y / np.linalg.norm(y)
        if hi - lo < tol or (abs(rayleigh - prev) < tol * 1e-2 and hi - lo < 1e-8):
            break
        prev = rayleigh
    return float(0.5 * (lo + hi)), float(lo), float(hi)


def spectral_radius(a: np.ndarray) -> tuple[float, float, float]:
    """Largest Perron root over the strongly connected components of ``a``."""
    if a.size == 0:
        return 0.0, 0.0, 0.0
    _, labels = connected_components(a > 0, directed=True, connection="strong")
    best = (0.0, 0.0, 0.0)
    for c in np.unique(labels):
        idx = np.flatnonzero(labels == c)
        sub = a[np.ix_(idx, idx)]
        if not sub.any():
            continue  # a single state without a loop carries no infinite path
        r = perron_root(sub)
        if r[0] > best[0]:
            best = r
    return best


def _digits(lo: float, hi: float) -> int:
    width = hi - lo
    if width <= 0:
        return 15
    return max(0, min(15, int(math.floor(-math.log10(width)))))


def growth_upper(forbidden: ForbiddenSet) -> GrowthEstimate:
    """Growth rate of binary words avoiding a finite forbidden set.

    This bounds from above the growth of words avoiding any spec whose
    violators include the set.
    """
    if not forbidden.words:
        raise ValueError("forbidden set must be non-empty")
    aut = build_automaton(forbidden)
    value, lo, hi = spectral_radius(aut.matrix())
    return GrowthEstimate(GrowthKind.UPPER_AUTOMATON, value, _digits(lo, hi),
                          state_count=len(aut.states), lower=lo, upper=hi,
                          forbidden_count=len(forbidden))


def growth_lower_from_morphism(width: int, base: float = SQUAREFREE_TERNARY_GROWTH) -> GrowthEstimate:
    """``base ** (1 / width)``: a ``width``-uniform morphism injecting
    squarefree ternary words into avoiding words transfers their growth."""
    if width < 1 or base <= 1:
        raise ValueError("need width >= 1 and base > 1")
    return GrowthEstimate(GrowthKind.LOWER_MORPHISM, base ** (1.0 / width), 15)


def recurrence_root(coeffs: Iterable[int]) -> GrowthEstimate:
    """Dominant root of ``x^d = c1 x^(d-1) + ... + cd``."""
    coeffs = list(coeffs)
    roots = np.roots([1] + [-c for c in coeffs])
    value = float(max(abs(r) for r in roots))
    return GrowthEstimate(GrowthKind.RECURRENCE_ROOT, value, 12)
