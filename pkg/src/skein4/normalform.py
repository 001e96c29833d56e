"""Reduction of skein elements onto the monomial basis.

A basis monomial is ``t1^a t2^b t3^c t4^d  t12^e t23^f t34^g t14^h  tail``
where the tail is ``1, t0, t123, t124, t134, t234`` or ``t13^k * s`` with
``s in {1, t0, t123, t134}`` (``k >= 1``), or the same with ``t24`` and
``s in {1, t0, t124, t234}``.

:class:`Normalizer` rewrites words by repeatedly replacing one adjacent
pair that cannot occur in a basis word.  The reference strategy picks the
leftmost such pair; ``strategy="rightmost"`` exists to cross-check
confluence.  Every rule strictly decreases :func:`~skein4.relations.measure`,
so the recursion terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple

import numpy as np

from .laurent import ONE, HalfLaurent
from .relations import RuleTable, default_table
from .skeinfree import GENERATORS, Generator, SkeinElement, gen, word_name

__all__ = [
    "BasisMonomial", "NormalElement", "Normalizer", "NormalFormError",
    "normalize", "as_free", "mul_normal", "enumerate_basis", "structure_constants",
    "rotate_normal", "default_normalizer",
]

_CENTRAL = tuple(gen(n) for n in ("t1", "t2", "t3", "t4"))
_LIGHT = tuple(gen(n) for n in ("t12", "t23", "t34", "t14"))
_T13, _T24, _T0 = gen("t13"), gen("t24"), gen("t0")
SUFFIXES = ("one", "t0", "t123", "t124", "t134", "t234")
_AXIS_SUFFIXES = {
    "none": SUFFIXES,
    "d13": ("one", "t0", "t123", "t134"),
    "d24": ("one", "t0", "t124", "t234"),
}
_AXIS_GEN = {"d13": _T13, "d24": _T24}


class NormalFormError(RuntimeError):
    """A word that is not a basis word admits no rule (must not happen)."""


@dataclass(frozen=True, order=True)
class BasisMonomial:
    central: tuple = (0, 0, 0, 0)
    light: tuple = (0, 0, 0, 0)
    axis: str = "none"
    k: int = 0
    suffix: str = "one"

    def __post_init__(self):
        if self.axis not in _AXIS_SUFFIXES:
            raise ValueError(f"unknown axis {self.axis!r}")
        if (self.axis == "none") != (self.k == 0) or self.k < 0:
            raise ValueError("axis 'none' iff k == 0")
        if self.suffix not in _AXIS_SUFFIXES[self.axis]:
            raise ValueError(f"suffix {self.suffix} not allowed after {self.axis}")
        if min(self.central + self.light) < 0:
            raise ValueError("negative exponent")

    @property
    def word(self) -> tuple:
        w = []
        for g, e in zip(_CENTRAL + _LIGHT, self.central + self.light):
            w.extend([g] * e)
        if self.k:
            w.extend([_AXIS_GEN[self.axis]] * self.k)
        if self.suffix != "one":
            w.append(gen(self.suffix))
        return tuple(w)

    @property
    def degree(self) -> int:
        """Number of generator factors."""
        return sum(self.central) + sum(self.light) + self.k + (self.suffix != "one")

    @classmethod
    def from_word(cls, w: Iterable[Generator]) -> "BasisMonomial":
        w = tuple(w)
        exps = [0] * 8
        idx = {g: i for i, g in enumerate(_CENTRAL + _LIGHT)}
        i = 0
        while i < len(w) and w[i] in idx:
            exps[idx[w[i]]] += 1
            i += 1
        axis, k = "none", 0
        while i < len(w) and w[i] in (_T13, _T24):
            a = "d13" if w[i] is _T13 else "d24"
            if axis not in ("none", a):
                raise ValueError(f"{word_name(w)} mixes t13 and t24")
            axis, k = a, k + 1
            i += 1
        suffix = "one"
        if i < len(w):
            suffix = w[i].name
            i += 1
        if i != len(w):
            raise ValueError(f"{word_name(w)} is not a basis word")
        m = cls(tuple(exps[:4]), tuple(exps[4:]), axis, k, suffix)
        if m.word != w:
            raise ValueError(f"{word_name(w)} is not a basis word")
        return m

    def name(self) -> str:
        return word_name(self.word)

    def to_json(self) -> dict:
        return {"central": list(self.central), "light": list(self.light),
                "tail": {"axis": self.axis, "k": self.k, "suffix": self.suffix}}

    @classmethod
    def from_json(cls, d: Mapping) -> "BasisMonomial":
        t = d["tail"]
        return cls(tuple(d["central"]), tuple(d["light"]), t["axis"], t["k"], t["suffix"])

    def __repr__(self) -> str:
        return f"BasisMonomial({self.name()})"


def _word_key(w: tuple) -> tuple:
    return len(w), [g.index for g in w]


class NormalElement:
    """Finite combination of basis monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[BasisMonomial, HalfLaurent] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisMonomial, HalfLaurent] = {}
        for m, c in items:
            c = HalfLaurent.coerce(c)
            s = acc.get(m)
            s = c if s is None else s + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        self.terms = acc

    @classmethod
    def from_words(cls, terms: Mapping[tuple, HalfLaurent]) -> "NormalElement":
        return cls((BasisMonomial.from_word(w), c) for w, c in terms.items())

    @classmethod
    def one(cls) -> "NormalElement":
        return cls({BasisMonomial(): ONE})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NormalElement") -> "NormalElement":
        return NormalElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "NormalElement":
        return NormalElement((m, -c) for m, c in self.terms.items())

    def __sub__(self, other: "NormalElement") -> "NormalElement":
        return self + (-other)

    def scale(self, c) -> "NormalElement":
        c = HalfLaurent.coerce(c)
        return NormalElement((m, c * v) for m, v in self.terms.items())

    def coefficient(self, m: BasisMonomial | str) -> HalfLaurent:
        if isinstance(m, str):
            from .parse import parse_element
            (w, _), = parse_element(m).terms.items()
            m = BasisMonomial.from_word(w)
        return self.terms.get(m, HalfLaurent())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0].word))

    def render(self) -> str:
        from .parse import render_terms
        return render_terms((m.name(), m.word == (), c) for m, c in self.sorted_terms())

    def to_json(self) -> list:
        return [dict(m.to_json(), coeff=c.to_json()) for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list) -> "NormalElement":
        return cls((BasisMonomial.from_json(t), HalfLaurent.from_json(t["coeff"])) for t in data)

    def __repr__(self) -> str:
        return f"NormalElement({self.render()!r})"

    __str__ = render


class Normalizer:
    """Memoised rewriting engine for one rule table and one pair-selection strategy.

    With the leftmost strategy the first violating pair of ``u*g`` lies inside
    ``u`` whenever ``u`` is not yet normal, so ``nf(u*g)`` is computed as
    ``nf(nf(u)*g)``, one letter at a time; the rightmost strategy mirrors this
    from the other end.  The letters ``t1..t4`` are central and never occur in
    a rule's left-hand side, so they are carried as an exponent vector and the
    memo is keyed on the remaining letters only.  A word ``light prefix * tail``
    times a letter is reduced as ``tail * letter`` first.  Coefficients live in
    numpy arrays (int64, promoted to Python ints when a product could
    overflow); the memo is trimmed once it holds about ``_MEMO_ROWS`` rows.
    """

    def __init__(self, table: RuleTable | None = None, strategy: str = "leftmost"):
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.table = table or default_table()
        self.strategy = strategy
        self._memo: dict[tuple, _State] = {}
        self._memo_rows = 0
        self._ids: dict[tuple, int] = {}
        self._ncs: list[tuple] = []
        try:
            self._step = {(g, h): self.table.rewrite(g, h) for g in GENERATORS for h in GENERATORS}
        except LookupError as exc:
            raise NormalFormError(str(exc)) from None

    def _violation(self, w: tuple) -> int | None:
        step = self._step
        rng = range(len(w) - 1)
        if self.strategy == "rightmost":
            rng = reversed(rng)
        for i in rng:
            if step[(w[i], w[i + 1])] is not None:
                return i
        return None

    def rewrite_once(self, w: tuple):
        """One rewriting step on ``w``: ``[(word, coeff), ...]`` or ``None``."""
        i = self._violation(w)
        if i is None:
            return None
        pre, post = w[:i], w[i + 2:]
        return [(pre + sub + post, c) for sub, c in self._step[(w[i], w[i + 1])]]

    # A state is a sparse vector of terms q^(n/2) * t1^a..t4^d * nc, held as
    # parallel arrays (nc id, packed central exponents, n, coefficient) with
    # duplicate (nc, central, n) triples merged.
    def _nc_id(self, nc: tuple) -> int:
        i = self._ids.get(nc)
        if i is None:
            i = self._ids[nc] = len(self._ncs)
            self._ncs.append(nc)
        return i

    def _state(self, nc: tuple, c: HalfLaurent) -> _State:
        n = len(c.coeffs)
        return _State(np.full(n, self._nc_id(nc), dtype=np.int64), np.zeros(n, dtype=np.int64),
                      np.fromiter(c.coeffs, np.int64, n), _values(list(c.coeffs.values())))

    def _apply(self, st: _State, tags: np.ndarray, let: np.ndarray):
        """Multiply row ``r`` of ``st`` by generator ``let[r]`` (``-1``: leave it).

        ``tags`` follows each row to its descendants; rows merge only within a tag."""
        cen = _CENTRAL_SHIFT[let]
        keep = (let < 0) | (cen > 0)
        kept = _State(st.ids[keep], st.ck[keep] + cen[keep], st.qk[keep], st.vals[keep])
        act = np.flatnonzero(~keep)
        attach = self._append if self.strategy == "leftmost" else self._prepend
        pair = st.ids[act] * 16 + let[act]
        return _join(st, tags, act, pair, lambda u: attach(u >> 4, GENERATORS[u & 15]),
                     kept, tags[keep])

    def _times(self, st: _State, g: Generator) -> _State:
        n = len(st.ids)
        return self._apply(st, np.zeros(n, dtype=np.int64), np.full(n, g.index, dtype=np.int64))[0]

    def _expand(self, base: tuple, terms, letters) -> _State:
        # all substitute words advance together, one letter per pass; rows are
        # right-aligned and tagged by their remaining letters, so that rows
        # with a common remainder merge early
        subs = [tuple(g.index for g in letters(sub)) for sub, _ in terms]
        width = max(map(len, subs))
        suffix_id: dict[tuple, int] = {(): 0}
        head, rest = [-1], [0]
        def intern(t):
            i = suffix_id.get(t)
            if i is None:
                nxt = intern(t[1:])
                i = suffix_id[t] = len(head)
                head.append(t[0])
                rest.append(nxt)
            return i
        start = [self._state(base, c) for _, c in terms]
        tags = np.repeat(np.array([intern((-1,) * (width - len(t)) + t) for t in subs], dtype=np.int64),
                         [len(x.ids) for x in start])
        head, rest = np.array(head, dtype=np.int64), np.array(rest, dtype=np.int64)
        st = _concat(start)
        for _ in range(width):
            st, tags = self._apply(st, rest[tags], head[tags])
        return st

    def _append(self, i: int, g: Generator) -> _State:
        key = (i, g)
        hit = self._memo.get(key)
        if hit is None:
            nc = self._ncs[i]
            step = self._step[(nc[-1], g)] if nc else None
            if step is None:
                hit = self._state(nc + (g,), ONE)
            elif nc[0] in _LIGHT and nc[-1] not in _LIGHT:
                hit = self._under_prefix(nc, g)
            else:
                hit = self._expand(nc[:-1], step, lambda sub: sub)
            self._remember(key, hit)
        return hit

    def _remember(self, key, st: _State) -> None:
        self._memo[key] = st
        self._memo_rows += len(st.ids)
        if self._memo_rows > _MEMO_ROWS:
            # forget the bulky entries first; they are the cheapest to lose per row
            self._memo = {k: v for k, v in self._memo.items() if len(v.ids) <= _MEMO_SMALL}
            self._memo_rows = sum(len(v.ids) for v in self._memo.values())
            if self._memo_rows > _MEMO_ROWS // 2:
                self._memo, self._memo_rows = {}, 0

    def _under_prefix(self, nc: tuple, g: Generator) -> _State:
        # nc = light prefix * tail: reduce tail*g on its own, then put the
        # prefix back (plain concatenation unless a term starts with a light letter)
        cut = next(j for j, h in enumerate(nc) if h not in _LIGHT)
        pre = nc[:cut]
        y = self._append(self._nc_id(nc[cut:]), g)
        ncs = self._ncs
        heads = np.array([bool(ncs[j]) and ncs[j][0] in _LIGHT for j in y.ids.tolist()], dtype=bool)
        joined = np.array([self._nc_id(pre + ncs[j]) for j in y.ids[~heads].tolist()], dtype=np.int64)
        kept = _State(joined, y.ck[~heads], y.qk[~heads], y.vals[~heads])
        act = np.flatnonzero(heads)
        tags = np.zeros(len(y.ids), dtype=np.int64)
        st, _ = _join(y, tags, act, y.ids[act],
                      lambda j: self._expand(pre, [(ncs[j], ONE)], lambda sub: sub),
                      kept, tags[~heads])
        return st

    def _prepend(self, i: int, g: Generator) -> _State:
        key = (g, i)
        hit = self._memo.get(key)
        if hit is None:
            nc = self._ncs[i]
            step = self._step[(g, nc[0])] if nc else None
            if step is None:
                hit = self._state((g,) + nc, ONE)
            else:
                hit = self._expand(nc[1:], step, reversed)
            self._remember(key, hit)
        return hit

    def word_state(self, w: tuple) -> _State:
        return self._batch([(tuple(w), ONE)])

    def _batch(self, terms: list) -> _State:
        """State of a whole combination of words, all words advanced together."""
        for w, _ in terms:
            if sum(g.size for g in w) >= _CB:
                raise ValueError(f"word {word_name(w)} has too many holes to normalize")
        if not terms:
            return self._state((), HalfLaurent())
        letters = (lambda w: w) if self.strategy == "leftmost" else reversed
        if all(not w for w, _ in terms):
            return _combine(*_concat([self._state((), c) for _, c in terms]))
        return self._expand((), terms, letters)

    def _terms(self, st: _State):
        """Yield ``(central exponents, nc word, coefficient)`` from a state."""
        grouped: dict = {}
        for i, ck, n, v in zip(st.ids.tolist(), st.ck.tolist(), st.qk.tolist(), st.vals.tolist()):
            grouped.setdefault((i, ck), {})[n] = int(v)
        for (i, ck), coeffs in grouped.items():
            yield _unpack_central(ck), self._ncs[i], HalfLaurent(coeffs)

    def word_normal_form(self, w: tuple) -> dict[tuple, HalfLaurent]:
        """Normal form of one word as ``{basis word: coefficient}``."""
        out = {}
        for ce, nc, c in self._terms(self.word_state(tuple(w))):
            out[tuple(g for g, e in zip(_CENTRAL, ce) for _ in range(e)) + nc] = c
        return out

    def normalize(self, e: SkeinElement) -> NormalElement:
        terms, todo = [], []
        for w, c in e.terms.items():
            if self._violation(w) is None:
                terms.append((BasisMonomial.from_word(w), c))
            else:
                todo.append((w, c))
        if todo:
            terms.extend((_monomial(ce, nc), d) for ce, nc, d in self._terms(self._batch(todo)))
        return NormalElement(terms)

    def is_normal_word(self, w: tuple) -> bool:
        return self._violation(tuple(w)) is None

    def cache_size(self) -> int:
        return len(self._memo)


class _State(NamedTuple):
    ids: np.ndarray
    ck: np.ndarray
    qk: np.ndarray
    vals: np.ndarray


# central exponents t1^a t2^b t3^c t4^d packed as a + B*b + B^2*c + B^3*d; the
# hole count |u| never grows under rewriting and bounds every exponent
_CB = 1 << 8
_SHIFT = (1, _CB, _CB ** 2, _CB ** 3)
# per generator index (plus a trailing slot for -1): central shift, or 0
_CENTRAL_SHIFT = np.array([_SHIFT[g.holes[0] - 1] if g.size == 1 else 0 for g in GENERATORS] + [0],
                          dtype=np.int64)
_SAFE = 1 << 62
_CHUNK = 1 << 21
# memo size limit in rows (about 32 bytes each)
_MEMO_ROWS = 24_000_000
_MEMO_SMALL = 1024


def _unpack_central(ck: int) -> tuple:
    out = []
    for _ in range(4):
        ck, r = divmod(ck, _CB)
        out.append(r)
    return tuple(out)


def _values(vals: list) -> np.ndarray:
    if all(-_SAFE < v < _SAFE for v in vals):
        return np.array(vals, dtype=np.int64)
    return np.array(vals, dtype=object)


def _concat(parts: list) -> _State:
    vals = [p.vals for p in parts]
    if any(v.dtype == object for v in vals):
        vals = [v.astype(object) for v in vals]
    return _State(*(np.concatenate([getattr(p, f) for p in parts]) for f in ("ids", "ck", "qk")),
                  np.concatenate(vals))


def _join(st: _State, tags: np.ndarray, act: np.ndarray, keys: np.ndarray, fetch,
          kept: _State, kept_tags: np.ndarray):
    """Replace row ``act[j]`` of ``st`` by ``fetch(keys[j])`` scaled by that row; rows
    not in ``act`` are already given as ``kept``.  Equal (tag, term) rows are merged."""
    out, out_tags = [kept], [kept_tags]
    if len(act):
        uids, inv = np.unique(keys, return_inverse=True)
        parts = [fetch(int(u)) for u in uids]
        sizes = np.array([len(a.ids) for a in parts], dtype=np.int64)
        offsets = np.cumsum(sizes) - sizes
        cat = _concat(parts)
        reps = sizes[inv]
        ends = np.cumsum(reps)
        # bound the unmerged intermediate to about _CHUNK rows
        cuts = np.searchsorted(ends, np.arange(_CHUNK, int(ends[-1]), _CHUNK), side="right")
        for lo, hi in zip([0, *cuts.tolist()], [*cuts.tolist(), len(act)]):
            if lo == hi:
                continue
            r = reps[lo:hi]
            src = np.repeat(act[lo:hi], r)
            first = np.repeat(np.cumsum(r) - r, r)
            idx = np.repeat(offsets[inv[lo:hi]], r) + (np.arange(len(src)) - first)
            va, vb = st.vals[src], cat.vals[idx]
            if va.dtype != object and vb.dtype != object and _may_overflow(va, vb, len(src)):
                va, vb = va.astype(object), vb.astype(object)
            part, ptags = _merge(_State(cat.ids[idx], st.ck[src] + cat.ck[idx],
                                        st.qk[src] + cat.qk[idx], va * vb), tags[src])
            out.append(part)
            out_tags.append(ptags)
    if len(out) == 1:
        return _merge(kept, kept_tags)
    return _merge(_concat(out), np.concatenate(out_tags))


def _may_overflow(a: np.ndarray, b: np.ndarray, n: int) -> bool:
    if not n:
        return False
    # Python ints: exact bound on any partial sum of products
    return int(np.abs(a).max()) * int(np.abs(b).max()) * n >= _SAFE


def _combine(ids, ck, qk, vals) -> _State:
    """Merge equal (nc, central, q) terms and drop zeros."""
    return _merge(_State(ids, ck, qk, vals), None)[0]


def _merge(st: _State, tags):
    """Merge rows equal in (tag, nc, central, q) and drop zeros."""
    ids, ck, qk, vals = st
    if len(ids) <= 1:
        keep = vals != 0
        return (st, tags) if keep.all() else (_State(*(f[keep] for f in st)),
                                              None if tags is None else tags[keep])
    # one mixed-radix sort key when the field ranges allow it
    qlo = int(qk.min())
    radix = [int(ck.max()) + 1, int(qk.max()) - qlo + 1]
    fields = [ids, ck, qk - qlo]
    if tags is not None:
        fields.insert(0, tags)
    top = (int(ids.max()) + 1) * (int(tags.max()) + 1 if tags is not None else 1)
    if top * radix[0] * radix[1] < 1 << 63:
        key = fields[0].astype(np.int64)
        for f, r in zip(fields[1:], [int(ids.max()) + 1] * (tags is not None) + radix):
            key = key * r + f
        order = np.argsort(key, kind="stable")
        key = key[order]
        new = np.empty(len(key), dtype=bool)
        new[0] = True
        np.not_equal(key[1:], key[:-1], out=new[1:])
    else:
        order = np.lexsort(fields[::-1])
        new = np.zeros(len(ids), dtype=bool)
        new[0] = True
        for f in fields:
            g = f[order]
            new[1:] |= g[1:] != g[:-1]
    starts = np.flatnonzero(new)
    pick = order[starts]
    vals = np.add.reduceat(vals[order], starts)
    keep = (vals != 0).astype(bool)
    merged = _State(ids[pick][keep], ck[pick][keep], qk[pick][keep], vals[keep])
    return merged, (None if tags is None else tags[pick][keep])


@lru_cache(maxsize=None)
def _monomial(ce: tuple, nc: tuple) -> BasisMonomial:
    m = BasisMonomial.from_word(nc)
    return BasisMonomial(ce, m.light, m.axis, m.k, m.suffix)


@lru_cache(maxsize=None)
def _default_normalizer(strategy: str) -> Normalizer:
    return Normalizer(default_table(), strategy)


def default_normalizer(strategy: str = "leftmost") -> Normalizer:
    """Shared engine per strategy (its memo persists across calls)."""
    return _default_normalizer(strategy)


def normalize(e: SkeinElement | str, strategy: str = "leftmost") -> NormalElement:
    """Expand ``e`` over the monomial basis."""
    if isinstance(e, str):
        from .parse import parse_element
        e = parse_element(e)
    return default_normalizer(strategy).normalize(e)


def as_free(n: NormalElement | BasisMonomial) -> SkeinElement:
    """Embed a normal element back into the free algebra via canonical words."""
    if isinstance(n, BasisMonomial):
        return SkeinElement.word(n.word)
    return SkeinElement((m.word, c) for m, c in n.terms.items())


def _as_normal(x) -> NormalElement:
    if isinstance(x, NormalElement):
        return x
    if isinstance(x, BasisMonomial):
        return NormalElement({x: ONE})
    return normalize(x)


def mul_normal(a, b) -> NormalElement:
    """Product of two algebra elements, in normal form."""
    return normalize(as_free(_as_normal(a)) * as_free(_as_normal(b)))


def rotate_normal(n: NormalElement, k: int = 1) -> NormalElement:
    """Action of ``sigma^k`` on normal forms (rotate the canonical words, renormalise)."""
    return normalize(as_free(n).rotate(k))


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_basis(max_factors: int) -> list[BasisMonomial]:
    """Every basis monomial with at most ``max_factors`` generator factors,
    ordered by degree and then by canonical word."""
    if max_factors < 0:
        raise ValueError("max_factors must be >= 0")
    tails = []
    for axis, sufs in _AXIS_SUFFIXES.items():
        for k in ([0] if axis == "none" else range(1, max_factors + 1)):
            for s in sufs:
                tails.append((axis, k, s, k + (s != "one")))
    out = []
    for axis, k, s, tdeg in tails:
        if tdeg > max_factors:
            continue
        for d in range(max_factors - tdeg + 1):
            for exps in _compositions(d, 8):
                out.append(BasisMonomial(exps[:4], exps[4:], axis, k, s))
    out.sort(key=lambda m: (m.degree, _word_key(m.word)))
    return out


def structure_constants(max_factors: int) -> list[tuple[BasisMonomial, BasisMonomial, NormalElement]]:
    """Products of all ordered pairs of basis monomials within the degree bound."""
    basis = enumerate_basis(max_factors)
    return [(a, b, mul_normal(a, b)) for a, b in product(basis, repeat=2)]
