"""Exact Laurent polynomials in a square root of ``q``.

A :class:`HalfLaurent` stores ``{n: c}`` meaning ``sum c * q**(n/2)``; the
half-exponent ``n`` is a plain integer, coefficients are Python ints.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["HalfLaurent", "Q", "q", "qbar", "alpha", "ZERO", "ONE"]

Number = Union[int, "HalfLaurent"]


class HalfLaurent:
    """Element of ``Z[q^(1/2), q^(-1/2)]``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for n, v in items:
            if v:
                c[n] = c.get(n, 0) + v
                if not c[n]:
                    del c[n]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "HalfLaurent":
        # trusted constructor: c must already be free of zeros
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, halfexp: int, coeff: int = 1) -> "HalfLaurent":
        return cls._raw({halfexp: coeff} if coeff else {})

    @classmethod
    def const(cls, value: int) -> "HalfLaurent":
        return cls.monomial(0, value)

    @staticmethod
    def coerce(x: Number) -> "HalfLaurent":
        if isinstance(x, HalfLaurent):
            return x
        if isinstance(x, int):
            return HalfLaurent.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to HalfLaurent")

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        """Copy of the half-exponent -> coefficient table."""
        return dict(self._c)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __add__(self, other: Number) -> "HalfLaurent":
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        elif not isinstance(other, HalfLaurent):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for n, v in other._c.items():
            s = c.get(n, 0) + v
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        return HalfLaurent._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent._raw({n: -v for n, v in self._c.items()})

    def __sub__(self, other: Number) -> "HalfLaurent":
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        elif not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "HalfLaurent":
        return HalfLaurent.coerce(other) - self

    def __mul__(self, other: Number) -> "HalfLaurent":
        if isinstance(other, int):
            if not other:
                return ZERO
            return HalfLaurent._raw({n: v * other for n, v in self._c.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) == 1 and len(b) == 1:
            (n, v), = a.items()
            (m, w), = b.items()
            return HalfLaurent._raw({n + m: v * w})
        c: dict[int, int] = {}
        for n, v in a.items():
            for m, w in b.items():
                c[n + m] = c.get(n + m, 0) + v * w
        return HalfLaurent._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible in Z[q^(+-1/2)]")
            (n, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return HalfLaurent._raw({n * k: v if k & 1 else 1})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- involutions and specialisation -----------------------------------
    def bar(self) -> "HalfLaurent":
        """Replace ``q`` by ``q^-1``."""
        return HalfLaurent._raw({-n: v for n, v in self._c.items()})

    def eval_classical(self) -> int:
        """Value at ``q^(1/2) = -1``."""
        return sum(-v if n & 1 else v for n, v in self._c.items())

    # -- text -------------------------------------------------------------
    def render(self) -> str:
        """Render in the ``Q`` alphabet, highest exponent first (``Q^2 - Q^-6``)."""
        if not self._c:
            return "0"
        parts = []
        for i, n in enumerate(sorted(self._c, reverse=True)):
            v = self._c[n]
            body = _render_term(abs(v), n)
            if i == 0:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append((" - " if v < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> dict[str, str]:
        return {str(n): str(v) for n, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "HalfLaurent":
        return cls((int(n), int(v)) for n, v in data.items())

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render()!r})"

    __str__ = render


def _render_term(v: int, n: int) -> str:
    if n == 0:
        return str(v)
    power = "Q" if n == 1 else f"Q^{n}"
    return power if v == 1 else f"{v}*{power}"


ZERO = HalfLaurent._raw({})
ONE = HalfLaurent._raw({0: 1})
Q = HalfLaurent._raw({1: 1})
q = HalfLaurent._raw({2: 1})
qbar = HalfLaurent._raw({-2: 1})
alpha = HalfLaurent._raw({2: 1, -2: 1})
