"""Uniform morphisms: application, composition and the finite checks that
certify their images avoid an (l, p) spec.

The named registry holds the binary morphisms ``f``, ``g = g1∘g2∘g3`` and
``h = h1∘h2`` (innermost applied first) and their factors.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Optional

from .words import (AvoidanceSpec, CheckerState, InvalidSymbolError, ReplabError,
                    Word, WordLike, as_word, find_violation)


class AlphabetMismatchError(ReplabError):
    pass


class UnknownMorphismError(ReplabError):
    pass


@dataclass(frozen=True)
class UniformMorphism:
    name: str
    source_alphabet: int
    target_alphabet: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.images) != self.source_alphabet:
            raise ValueError(f"{self.name}: expected {self.source_alphabet} images, "
                             f"got {len(self.images)}")
        widths = {len(im) for im in self.images}
        if len(widths) != 1 or 0 in widths:
            raise ValueError(f"{self.name}: images must share one positive length")
        for im in self.images:
            if any(not 0 <= s < self.target_alphabet for s in im):
                raise InvalidSymbolError(f"{self.name}: image symbol outside target alphabet")

    @property
    def width(self) -> int:
        return len(self.images[0])

    @classmethod
    def from_strings(cls, name: str, images, target_alphabet: int = 2) -> "UniformMorphism":
        return cls(name, len(images), target_alphabet,
                   tuple(tuple(int(c) for c in im) for im in images))

    def image(self, a: int) -> Word:
        return Word(self.images[a], self.target_alphabet)

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "width": self.width,
            "source_alphabet": self.source_alphabet,
            "target_alphabet": self.target_alphabet,
            "images": ["".join(map(str, im)) for im in self.images],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "UniformMorphism":
        m = cls.from_strings(d["name"], d["images"], d.get("target_alphabet", 2))
        if d.get("width", m.width) != m.width or d.get("source_alphabet", m.source_alphabet) != m.source_alphabet:
            raise ValueError(f"{d['name']}: declared width/alphabet disagree with images")
        return m


def identity(k: int) -> UniformMorphism:
    return UniformMorphism(f"id{k}", k, k, tuple((a,) for a in range(k)))


def apply(m: UniformMorphism, w: WordLike) -> Word:
    w = as_word(w, m.source_alphabet)
    out = []
    for a in w.symbols:
        if not 0 <= a < m.source_alphabet:
            raise InvalidSymbolError(f"symbol {a} outside the domain of {m.name}")
        out.extend(m.images[a])
    return Word(tuple(out), m.target_alphabet)


def compose(outer: UniformMorphism, inner: UniformMorphism, name: Optional[str] = None) -> UniformMorphism:
    """``outer ∘ inner``: apply ``inner`` first."""
    if inner.target_alphabet > outer.source_alphabet:
        raise AlphabetMismatchError(
            f"{inner.name} produces {inner.target_alphabet} letters, "
            f"{outer.name} accepts {outer.source_alphabet}")
    images = tuple(apply(outer, Word(im, outer.source_alphabet)).symbols for im in inner.images)
    return UniformMorphism(name or f"{outer.name}∘{inner.name}",
                           inner.source_alphabet, outer.target_alphabet, images)


# --- registry ---------------------------------------------------------------

_TABLES = {
    "f": (3, 2, ["0010111010", "0010101110", "0011101010"]),
    "g1": (8, 2, ["0011010010110", "0011010110010", "0011011001011", "0100110110010",
                  "0110100101100", "1001101011001", "1001101100101", "1010011011001"]),
    "g2": (4, 8, ["03523503523453461467", "03523503523453467167",
                  "16703523503523461467", "03523503523461467167"]),
    "g3": (3, 4, ["010203", "010313", "021013"]),
    "h1": (5, 2, ["00110100101100", "00110100110010", "01001100101100",
                  "10011011001011", "11010011011001"]),
    "h2": (3, 5, ["032303241403240314", "032314041403240314", "032414032303240314"]),
}

COMPOSITES = {"g": ("g1", "g2", "g3"), "h": ("h1", "h2")}

REGISTRY_ENV = "REPLAB_REGISTRY"


def embedded_morphisms() -> dict[str, UniformMorphism]:
    out = {}
    for name, (src, tgt, images) in _TABLES.items():
        m = UniformMorphism.from_strings(name, images, tgt)
        assert m.source_alphabet == src
        out[name] = m
    return out


def registry_path() -> str:
    return str(resources.files("replab").joinpath("data/morphisms.json"))


def _with_composites(base: dict[str, UniformMorphism]) -> dict[str, UniformMorphism]:
    out = dict(base)
    for name, parts in COMPOSITES.items():
        if name in out or not all(p in out for p in parts):
            continue
        m = out[parts[-1]]
        for p in reversed(parts[:-1]):
            m = compose(out[p], m)
        out[name] = UniformMorphism(name, m.source_alphabet, m.target_alphabet, m.images)
    return out


def load_registry(path: Optional[str] = None) -> dict[str, UniformMorphism]:
    """Read a registry JSON file (a list of entries or a single entry).

    Without ``path``, ``$REPLAB_REGISTRY`` is consulted, then the bundled file.
    Composites ``g`` and ``h`` are added whenever their factors are present.
    """
    path = path or os.environ.get(REGISTRY_ENV) or registry_path()
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("morphisms", [data])
    base = {}
    for entry in data:
        m = UniformMorphism.from_dict(entry)
        base[m.name] = m
    return _with_composites(base)


def registry() -> dict[str, UniformMorphism]:
    return _with_composites(embedded_morphisms())


def get(name: str, reg: Optional[dict] = None) -> UniformMorphism:
    reg = reg if reg is not None else registry()
    try:
        return reg[name]
    except KeyError:
        raise UnknownMorphismError(f"unknown morphism {name!r}; known: {sorted(reg)}") from None


# --- finite checks ----------------------------------------------------------

def check_inclusion(m: UniformMorphism) -> list[dict]:
    """Occurrences of an image ``m(c)`` inside ``m(a)m(b)`` at an offset other
    than 0 or k. An empty list means the inclusion property holds."""
    k = m.width
    bad = []
    for a in range(m.source_alphabet):
        for b in range(m.source_alphabet):
            ab = m.images[a] + m.images[b]
            for c in range(m.source_alphabet):
                mc = m.images[c]
                for off in range(1, k):
                    if ab[off:off + k] == mc:
                        bad.append({"a": a, "b": b, "c": c, "offset": off})
    return bad


def _common_prefix(u, v) -> int:
    n = 0
    for x, y in zip(u, v):
        if x != y:
            break
        n += 1
    return n


def check_interchange(m: UniformMorphism) -> list[dict]:
    """Triples with ``m(c) = m(a)[:i] + m(b)[i:]`` although ``c`` is neither
    ``a`` nor ``b``. An empty list means the interchange property holds."""
    k = m.width
    bad = []
    rev = [im[::-1] for im in m.images]
    for c in range(m.source_alphabet):
        for a in range(m.source_alphabet):
            if a == c:
                continue
            pre = _common_prefix(m.images[c], m.images[a])
            for b in range(m.source_alphabet):
                if b == c:
                    continue
                suf = _common_prefix(rev[c], rev[b])
                # split points i with i <= pre and k - i <= suf
                for i in range(max(0, k - suf), min(pre, k) + 1):
                    bad.append({"a": a, "b": b, "c": c, "split": i})
    return bad


def check_distinct(m: UniformMorphism) -> list[dict]:
    bad = []
    for a, b in combinations(range(m.source_alphabet), 2):
        if m.images[a] == m.images[b]:
            bad.append({"a": a, "b": b})
    return bad


def distinguishing_lengths(m: UniformMorphism) -> dict:
    """Shortest prefix and suffix lengths at which all images differ
    (``None`` when even the full images coincide)."""
    def shortest(images):
        for n in range(0, m.width + 1):
            if len({im[:n] for im in images}) == len(images):
                return n
        return None
    return {"prefix": shortest(m.images), "suffix": shortest([im[::-1] for im in m.images])}


@lru_cache(maxsize=None)
def squarefree_words(alphabet: int, n: int) -> tuple[Word, ...]:
    """All squarefree words of length exactly ``n``, lexicographically."""
    spec = AvoidanceSpec(1)
    out = []
    stack = [CheckerState.initial(spec, alphabet)]
    while stack:
        st = stack.pop()
        if st.length == n:
            out.append(st.word)
            continue
        for a in reversed(range(alphabet)):
            nxt, v = st.extend(a)
            if v is None:
                stack.append(nxt)
    return tuple(out)


def _is_factor(u: tuple, v: tuple) -> bool:
    k = len(u)
    return any(v[i:i + k] == u for i in range(len(v) - k + 1))


@lru_cache(maxsize=None)
def _image_corpus(alphabet: int, source_len: int):
    corpus = squarefree_words(alphabet, source_len)
    longest = [w.symbols for w in corpus]
    to_check = list(corpus)
    sizes = {source_len: len(corpus)}
    for n in range(1, source_len):
        words = squarefree_words(alphabet, n)
        sizes[n] = len(words)
        to_check += [w for w in words if not any(_is_factor(w.symbols, v) for v in longest)]
    return tuple(to_check), tuple(sorted(sizes.items()))


def check_images_avoid(m: UniformMorphism, spec: AvoidanceSpec, source_len: int = 5,
                       stats: Optional[dict] = None, first_only: bool = False) -> list[dict]:
    """Apply ``m`` to every squarefree source word of length at most
    ``source_len`` and report images that contain a forbidden factor.

    A shorter word that is a factor of some longest squarefree word is
    covered by that word's image, so only the remaining ones are checked
    separately. ``stats`` (if given) receives the corpus sizes;
    ``first_only`` stops at the first failure.
    """
    if source_len < 1:
        raise ValueError("source_len must be at least 1")
    to_check, sizes = _image_corpus(m.source_alphabet, source_len)
    if stats is not None:
        stats["corpus_sizes"] = dict(sizes)
        stats["checked"] = len(to_check)
    bad = []
    for w in to_check:
        v = find_violation(apply(m, w), spec)
        if v is not None:
            bad.append({"word": str(w), "violation": v.as_dict()})
            if first_only:
                break
    return bad


def verify(m: UniformMorphism, spec: AvoidanceSpec, source_len: int = 5) -> dict:
    """Run every finite check; ``result["passed"]`` is the overall verdict."""
    stats: dict = {}
    checks = {
        "distinct": check_distinct(m),
        "inclusion": check_inclusion(m),
        "interchange": check_interchange(m),
        "images_avoid": check_images_avoid(m, spec, source_len, stats),
    }
    return {
        "morphism": m.name,
        "spec": {"l": spec.min_square_period, "power": str(spec.power)},
        "checks": {k: {"passed": not v, "counterexamples": v[:20]} for k, v in checks.items()},
        "corpus": stats,
        "passed": not any(checks.values()),
    }


# --- infinite words ---------------------------------------------------------

_THUE = {2: (2, 1, 0), 1: (2, 0), 0: (1,)}


def squarefree_ternary(n: int) -> Word:
    """Length-``n`` prefix of the fixed point of 2→210, 1→20, 0→1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w = [2]
    while len(w) < n:
        w = [b for a in w for b in _THUE[a]]
    return Word(tuple(w[:n]), 3)


# morphism used for each infinite word and the (l, p) pair its image avoids
TARGETS = {
    "f": AvoidanceSpec.parse(3, "3+"),
    "g": AvoidanceSpec.parse(4, "5/2+"),
    "h": AvoidanceSpec.parse(7, "7/3+"),
}


def generate_avoiding(name: str, n: int, reg: Optional[dict] = None) -> Word:
    if name not in TARGETS:
        raise UnknownMorphismError(f"no infinite word is attached to {name!r}")
    m = get(name, reg)
    if n < 0:
        raise ValueError("n must be non-negative")
    src = squarefree_ternary(-(-n // m.width))
    return apply(m, src)[:n]

