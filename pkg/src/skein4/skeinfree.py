"""Curve generators, words, and free-algebra elements of the 4-holed disk.

Nothing here applies a relation: a :class:`SkeinElement` is a formal
combination of words.  Reduction lives in :mod:`skein4.normalform`.
"""

from __future__ import annotations

from itertools import combinations, groupby
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .laurent import ONE, HalfLaurent

__all__ = [
    "Generator", "GENERATORS", "gen", "LIGHT", "HEAVY", "CENTRAL",
    "Word", "SkeinElement", "rotate", "mirror", "weight", "word_name",
]


class Generator:
    """The curve ``t_S`` around the holes ``S``; there are exactly 15."""

    __slots__ = ("holes", "index", "name")

    def __init__(self, holes: tuple[int, ...], index: int):
        self.holes = holes
        self.index = index
        self.name = "t" + ("0" if holes == (1, 2, 3, 4) else "".join(map(str, holes)))

    @property
    def size(self) -> int:
        return len(self.holes)

    @property
    def is_light(self) -> bool:
        return self.size == 1 or self.holes in _ARC_HOLES

    @property
    def is_heavy(self) -> bool:
        return not self.is_light

    @property
    def is_central(self) -> bool:
        return self.size in (1, 4)

    def rotate(self, k: int = 1) -> "Generator":
        k %= 4
        if not k:
            return self
        return _BY_HOLES[tuple(sorted((h - 1 + k) % 4 + 1 for h in self.holes))]

    def __repr__(self) -> str:
        return self.name

    def __lt__(self, other: "Generator") -> bool:
        return self.index < other.index

    def __reduce__(self):
        return (gen, (self.name,))


_ARC_HOLES = {(1, 2), (2, 3), (3, 4), (1, 4)}

# index order doubles as the canonical ordering of letters inside basis words
_ORDER = [(1,), (2,), (3,), (4,), (1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4),
          (1, 2, 3, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
assert sorted(_ORDER) == sorted(
    c for r in range(1, 5) for c in combinations((1, 2, 3, 4), r))

GENERATORS: tuple[Generator, ...] = tuple(Generator(h, i) for i, h in enumerate(_ORDER))
_BY_HOLES = {g.holes: g for g in GENERATORS}
_BY_NAME = {g.name: g for g in GENERATORS}
_BY_NAME["t1234"] = _BY_HOLES[(1, 2, 3, 4)]

LIGHT = tuple(g for g in GENERATORS if g.is_light)
HEAVY = tuple(g for g in GENERATORS if g.is_heavy)
CENTRAL = tuple(g for g in GENERATORS if g.is_central)


def gen(name: str | Iterable[int]) -> Generator:
    """Look up a generator by name (``"t134"``, ``"t0"``) or by its holes."""
    if isinstance(name, str):
        try:
            return _BY_NAME[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None
    return _BY_HOLES[tuple(sorted(name))]


Word = tuple  # tuple[Generator, ...]


def word_name(w: Sequence[Generator]) -> str:
    """Render a word, writing runs of one letter as powers (``t13^2*t0``)."""
    if not w:
        return "1"
    parts = []
    for g, run in groupby(w):
        k = len(list(run))
        parts.append(g.name if k == 1 else f"{g.name}^{k}")
    return "*".join(parts)


def weight(w: Sequence[Generator]) -> tuple[int, int, int]:
    """``(|u|, |u|_1, |u|_2)``: total hole count, without single-hole letters,
    and without light letters."""
    a = b = c = 0
    for g in w:
        s = g.size
        a += s
        if s > 1:
            b += s
            if g.is_heavy:
                c += s
    return a, b, c


Coeff = Union[int, HalfLaurent]


class SkeinElement:
    """Finite combination of words with :class:`HalfLaurent` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, HalfLaurent] | Iterable[tuple[tuple, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, HalfLaurent] = {}
        for w, c in items:
            c = HalfLaurent.coerce(c)
            if not c:
                continue
            w = tuple(w)
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        self.terms = acc

    @classmethod
    def word(cls, letters: Iterable[Generator | str], coeff: Coeff = 1) -> "SkeinElement":
        w = tuple(gen(g) if isinstance(g, str) else g for g in letters)
        return cls([(w, coeff)])

    @classmethod
    def one(cls) -> "SkeinElement":
        return cls([((), ONE)])

    @classmethod
    def scalar(cls, c: Coeff) -> "SkeinElement":
        return cls([((), c)])

    def __iter__(self) -> Iterator[tuple[tuple, HalfLaurent]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return SkeinElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "SkeinElement":
        return SkeinElement((w, -c) for w, c in self.terms.items())

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + (-other)

    def scale(self, c: Coeff) -> "SkeinElement":
        c = HalfLaurent.coerce(c)
        return SkeinElement((w, c * v) for w, v in self.terms.items())

    def __mul__(self, other) -> "SkeinElement":
        if isinstance(other, (int, HalfLaurent)):
            return self.scale(other)
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return mul_free(self, other)

    def __rmul__(self, other) -> "SkeinElement":
        if isinstance(other, (int, HalfLaurent)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "SkeinElement":
        if k < 0:
            raise ValueError("negative power of a skein element")
        out = SkeinElement.one()
        for _ in range(k):
            out = out * self
        return out

    def rotate(self, k: int = 1) -> "SkeinElement":
        return SkeinElement((tuple(g.rotate(k) for g in w), c) for w, c in self.terms.items())

    def mirror(self) -> "SkeinElement":
        return SkeinElement((w[::-1], c.bar()) for w, c in self.terms.items())

    def sorted_terms(self) -> list[tuple[tuple, HalfLaurent]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), [g.index for g in t[0]]))

    def render(self) -> str:
        from .parse import render_terms
        return render_terms((word_name(w), w == (), c) for w, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"SkeinElement({self.render()!r})"

    __str__ = render


def mul_free(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """Concatenation product, extended bilinearly."""
    return SkeinElement(
        (u + v, c * d) for u, c in a.terms.items() for v, d in b.terms.items())


def rotate(x, k: int = 1):
    """Apply ``sigma^k`` (holes ``i -> i+k mod 4``) to a generator, word or element."""
    if isinstance(x, (Generator, SkeinElement)):
        return x.rotate(k)
    return tuple(g.rotate(k) for g in x)


def mirror(x: SkeinElement) -> SkeinElement:
    """Reverse every word and bar every coefficient."""
    return x.mirror()
