"""Words, exact exponents and the (l, p) avoidance predicates.

A word is a finite sequence over ``{0, ..., k-1}``. A word *avoids* ``(l, p)``
when it contains no square ``yy`` with ``|y| >= l`` and no factor whose
exponent ``|u| / period(u)`` reaches the power threshold ``p``.

Two independent detectors live here:

* :class:`CheckerState` checks only the factors ending at the last position,
  which is all a depth-first search needs when growing words one letter at a
  time.
* :func:`find_violation` scans a whole word at once, one period at a time,
  using big-integer bit tricks.

Both pack a word into a Python ``int`` with ``bits_per_symbol`` bits per
letter, last letter in the least significant position. Comparing a word with
itself shifted by ``p`` letters then costs one XOR.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence, Union


class ReplabError(ValueError):
    """Base class for invalid input."""


class EmptyWordError(ReplabError):
    pass


class InvalidSymbolError(ReplabError):
    pass


class InvalidSpecError(ReplabError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    symbols: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        if self.alphabet_size < 1 or self.alphabet_size > 10:
            raise InvalidSymbolError(f"alphabet size {self.alphabet_size} outside 1..10")
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise InvalidSymbolError(
                    f"symbol {s} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def parse(cls, text: str, alphabet_size: int = 2) -> "Word":
        """Read a digit string. ``""`` and ``"ε"`` give the empty word."""
        text = text.strip()
        if text in ("ε", "eps"):
            text = ""
        if not text.isdigit() and text:
            raise InvalidSymbolError(f"not a digit string: {text!r}")
        return cls(tuple(int(c) for c in text), alphabet_size)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.symbols[idx], self.alphabet_size)
        return self.symbols[idx]

    def __add__(self, other):
        other = as_word(other, self.alphabet_size)
        return Word(self.symbols + other.symbols, max(self.alphabet_size, other.alphabet_size))

    def __str__(self):
        return "".join(map(str, self.symbols))

    def complement(self) -> "Word":
        """Exchange 0 and 1 (binary words only)."""
        if self.alphabet_size != 2:
            raise InvalidSymbolError("complement is defined for binary words only")
        return Word(tuple(1 - s for s in self.symbols), 2)


WordLike = Union[Word, str, Sequence[int]]


def as_word(w: WordLike, alphabet_size: int = 2) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w, alphabet_size)
    return Word(tuple(int(s) for s in w), alphabet_size)


def minimal_period(w: WordLike) -> int:
    """Smallest ``p >= 1`` with ``w[i] == w[i + p]`` for every valid ``i``.

    Computed from the failure function: the period is ``|w|`` minus the
    longest proper border.
    """
    s = as_word(w).symbols
    n = len(s)
    if n == 0:
        raise EmptyWordError("the empty word has no period")
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


def max_exponent(w: WordLike) -> Fraction:
    w = as_word(w)
    return Fraction(len(w), minimal_period(w))


@dataclass(frozen=True)
class ExponentThreshold:
    """``bound=None`` is unbounded. ``inclusive`` forbids ``e >= bound``
    ("p powers"); otherwise only ``e > bound`` is forbidden ("p+ powers")."""

    bound: Optional[Fraction]
    inclusive: bool = True

    def __post_init__(self):
        if self.bound is not None:
            object.__setattr__(self, "bound", Fraction(self.bound))
            if self.bound <= 1:
                raise InvalidSpecError(f"power bound must exceed 1, got {self.bound}")

    @classmethod
    def unbounded(cls) -> "ExponentThreshold":
        return cls(None, True)

    @classmethod
    def parse(cls, text: str) -> "ExponentThreshold":
        """Grammar: ``inf`` | ``N`` | ``N+`` | ``P/Q`` | ``P/Q+``."""
        text = text.strip()
        if text in ("inf", "∞"):
            return cls.unbounded()
        m = re.fullmatch(r"(\d+)(?:/(\d+))?(\+?)", text)
        if not m or (m.group(2) is not None and int(m.group(2)) == 0):
            raise InvalidSpecError(f"malformed power threshold: {text!r}")
        q = int(m.group(2)) if m.group(2) else 1
        return cls(Fraction(int(m.group(1)), q), inclusive=not m.group(3))

    @property
    def is_unbounded(self) -> bool:
        return self.bound is None

    def forbids(self, exponent: Fraction) -> bool:
        if self.bound is None:
            return False
        return exponent >= self.bound if self.inclusive else exponent > self.bound

    def min_length(self, period: int) -> Optional[int]:
        """Shortest length of a factor with this period that is forbidden."""
        if self.bound is None:
            return None
        a, b = self.bound.numerator, self.bound.denominator
        if self.inclusive:
            return -(-a * period // b)
        return a * period // b + 1

    def __str__(self):
        if self.bound is None:
            return "inf"
        return f"{self.bound}{'' if self.inclusive else '+'}"


@dataclass(frozen=True)
class AvoidanceSpec:
    min_square_period: int
    power: ExponentThreshold = field(default_factory=ExponentThreshold.unbounded)

    def __post_init__(self):
        if self.min_square_period < 1:
            raise InvalidSpecError("minimum square period must be at least 1")
        if isinstance(self.power, str):
            object.__setattr__(self, "power", ExponentThreshold.parse(self.power))

    @classmethod
    def parse(cls, l: int, power: str) -> "AvoidanceSpec":
        return cls(int(l), ExponentThreshold.parse(power))

    def __str__(self):
        return f"({self.min_square_period}, {self.power})"


class ViolationKind(enum.Enum):
    LARGE_SQUARE = "LargeSquare"
    FORBIDDEN_POWER = "ForbiddenPower"


# ties at equal (end, length) report the square
_KIND_ORDER = {ViolationKind.LARGE_SQUARE: 0, ViolationKind.FORBIDDEN_POWER: 1}


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    start: int
    length: int
    period: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    @property
    def end(self) -> int:
        return self.start + self.length

    def sort_key(self):
        return (self.end, self.length, _KIND_ORDER[self.kind])

    def as_dict(self) -> dict:
        e = self.exponent
        return {
            "kind": self.kind.value,
            "start": self.start,
            "length": self.length,
            "period": self.period,
            "exponent": f"{e.numerator}/{e.denominator}",
        }


def bits_per_symbol(alphabet_size: int) -> int:
    return max(1, (alphabet_size - 1).bit_length())


def pack(w: Word) -> int:
    b = bits_per_symbol(w.alphabet_size)
    x = 0
    for s in w.symbols:
        x = (x << b) | s
    return x


class Checker:
    """An :class:`AvoidanceSpec` compiled into per-period match thresholds.

    For period ``p`` a violation ending at the last letter exists exactly when
    the last ``need[p]`` letters each equal the letter ``p`` places earlier,
    where ``need[p]`` is ``p`` for a large square and ``min_length(p) - p``
    for a forbidden power.
    """

    def __init__(self, spec: AvoidanceSpec, alphabet_size: int = 2):
        self.spec = spec
        self.alphabet_size = alphabet_size
        self.bits = bits_per_symbol(alphabet_size)
        self._tests: list[list[tuple[int, int]]] = []

    def square_need(self, p: int) -> Optional[int]:
        return p if p >= self.spec.min_square_period else None

    def power_need(self, p: int) -> Optional[int]:
        m = self.spec.power.min_length(p)
        return None if m is None else m - p

    def need(self, p: int) -> Optional[int]:
        needs = [x for x in (self.square_need(p), self.power_need(p)) if x is not None]
        return min(needs) if needs else None

    def tests(self, n: int) -> list[tuple[int, int]]:
        """``(shift, mask)`` pairs relevant to a word of length ``n``."""
        while len(self._tests) <= n:
            m = len(self._tests)
            row = []
            for p in range(1, m):
                t = self.need(p)
                if t is not None and t <= m - p:
                    row.append((p * self.bits, (1 << (t * self.bits)) - 1))
            self._tests.append(row)
        return self._tests[n]

    def ok(self, x: int, n: int) -> bool:
        """True iff no forbidden factor ends at the last letter of the packed word."""
        for shift, mask in self.tests(n):
            if not (x ^ (x >> shift)) & mask:
                return False
        return True

    def last_violation(self, x: int, n: int) -> Optional[Violation]:
        """Shortest forbidden factor ending at the last letter, if any."""
        if self.ok(x, n):
            return None
        b = self.bits
        best = None
        for p in range(1, n):
            diff = (x ^ (x >> (p * b))) & ((1 << ((n - p) * b)) - 1)
            run = n - p if diff == 0 else ((diff & -diff).bit_length() - 1) // b
            for kind, t in ((ViolationKind.LARGE_SQUARE, self.square_need(p)),
                            (ViolationKind.FORBIDDEN_POWER, self.power_need(p))):
                if t is None or run < t:
                    continue
                v = Violation(kind, n - p - t, p + t, p)
                if best is None or v.sort_key() < best.sort_key():
                    best = v
        return best


@dataclass(frozen=True)
class CheckerState:
    """A word known to avoid a spec, ready to be extended letter by letter."""

    checker: Checker
    packed: int = 0
    length: int = 0

    @classmethod
    def initial(cls, spec: AvoidanceSpec, alphabet_size: int = 2) -> "CheckerState":
        return cls(Checker(spec, alphabet_size))

    @classmethod
    def from_word(cls, w: WordLike, spec: AvoidanceSpec) -> "CheckerState":
        w = as_word(w)
        state = cls.initial(spec, w.alphabet_size)
        for a in w:
            state, v = state.extend(a)
            if v is not None:
                raise InvalidSpecError(f"{w} does not avoid {spec}: {v}")
        return state

    @property
    def word(self) -> Word:
        b = self.checker.bits
        mask = (1 << b) - 1
        syms = [(self.packed >> (b * (self.length - 1 - i))) & mask for i in range(self.length)]
        return Word(tuple(syms), self.checker.alphabet_size)

    def extend(self, a: int) -> tuple["CheckerState", Optional[Violation]]:
        if not 0 <= a < self.checker.alphabet_size:
            raise InvalidSymbolError(f"symbol {a} outside alphabet")
        x = (self.packed << self.checker.bits) | a
        n = self.length + 1
        return CheckerState(self.checker, x, n), self.checker.last_violation(x, n)


def extend_and_check(state: CheckerState, a: int) -> tuple[CheckerState, Optional[Violation]]:
    return state.extend(a)


def _zero_run_ends(diff: int, units: int, t: int, b: int) -> int:
    """Highest unit index ``j`` such that units ``j .. j+t-1`` of ``diff`` are all
    zero, considering only ``j <= units - t``; -1 if none.

    Units are ``b``-bit chunks; only each chunk's lowest bit is used as the
    marker once the chunk has been OR-reduced.
    """
    if t > units:
        return -1
    full = (1 << (units * b)) - 1
    if b == 1:
        low = full
        y = diff
    else:
        low = full // ((1 << b) - 1)  # 0..01 0..01 ... pattern
        y = 0
        for i in range(b):
            y |= diff >> i
        y = (y & low) | (full & ~low)
    covered = 1
    while covered < t:
        step = min(covered, t - covered)
        y |= y >> (step * b)
        covered += step
    z = ~y & low & ((1 << ((units - t + 1) * b)) - 1)
    if not z:
        return -1
    return (z.bit_length() - 1) // b


def find_violation(w: WordLike, spec: AvoidanceSpec) -> Optional[Violation]:
    """First forbidden factor of ``w``, or ``None`` if ``w`` avoids ``spec``.

    "First" means smallest end index, then smallest length; a square wins a
    tie with a power on the same factor.
    """
    w = as_word(w)
    n = len(w)
    if n < 2:
        return None
    checker = Checker(spec, w.alphabet_size)
    b = checker.bits
    x = pack(w)
    best = None
    for p in range(1, n):
        units = n - p
        t_sq, t_pow = checker.square_need(p), checker.power_need(p)
        if (t_sq is None or t_sq > units) and (t_pow is None or t_pow > units):
            continue
        diff = (x ^ (x >> (p * b))) & ((1 << (units * b)) - 1)
        for kind, t in ((ViolationKind.LARGE_SQUARE, t_sq),
                        (ViolationKind.FORBIDDEN_POWER, t_pow)):
            if t is None:
                continue
            j = _zero_run_ends(diff, units, t, b)
            if j < 0:
                continue
            # units j..j+t-1 match: letters n-1-j-t-p+1 .. n-1-j
            v = Violation(kind, n - j - t - p, p + t, p)
            if best is None or v.sort_key() < best.sort_key():
                best = v
    return best


def avoids(w: WordLike, spec: AvoidanceSpec) -> bool:
    return find_violation(w, spec) is None


def all_words(n: int, alphabet_size: int = 2) -> Iterable[Word]:
    """Every word of length ``n`` in lexicographic order."""
    for t in product(range(alphabet_size), repeat=n):
        yield Word(t, alphabet_size)
