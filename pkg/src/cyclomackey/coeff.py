"""
Exact arithmetic in the Laurent ring Z[q, q^-1, Q_1, ..., Q_r].

A polynomial is a sparse map from monomials to non-zero Python integers. Monomials
are stored internally as flat tuples ``(q_exp, Q1_exp, ..., Qr_exp)`` so that the
natural tuple order is the canonical term order (q exponent first, then the Q
exponents lexicographically). The number r of Q-parameters is carried by a
:class:`LaurentRing` value and two polynomials over different rings never mix.

>>> R = LaurentRing(2)
>>> q = R.q
>>> (q - 1) * (q + 1)
LaurentPoly('q^2 - 1')
>>> R.parse(str((q - R.Q(1)) * (q - R.Q(2)))) == (q - R.Q(1)) * (q - R.Q(2))
True
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence


class RingMismatchError(ValueError):
    """Raised when polynomials over rings with different r are combined."""


class SpecializationError(ValueError):
    """Raised for a specialization that sends q to zero or has the wrong arity."""


class Monomial(NamedTuple):
    q_exp: int
    Q_exps: tuple[int, ...]


@dataclass(frozen=True)
class LaurentRing:
    """The ring Z[q, q^-1, Q_1, ..., Q_r] for a fixed r >= 1."""

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")

    def _unit_key(self) -> tuple[int, ...]:
        return (0,) * (self.r + 1)

    def __call__(self, value: int | "LaurentPoly") -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} vs {self}")
            return value
        return self.constant(value)

    def constant(self, c: int) -> "LaurentPoly":
        c = int(c)
        return LaurentPoly(self, {self._unit_key(): c} if c else {})

    @cached_property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    @cached_property
    def one(self) -> "LaurentPoly":
        return self.constant(1)

    @cached_property
    def q(self) -> "LaurentPoly":
        return self.monomial(1)

    @cached_property
    def q_inv(self) -> "LaurentPoly":
        return self.monomial(-1)

    def Q(self, k: int) -> "LaurentPoly":
        """The parameter Q_k, 1-indexed."""
        if not 1 <= k <= self.r:
            raise IndexError(f"Q_{k} does not exist for r={self.r}")
        exps = [0] * self.r
        exps[k - 1] = 1
        return self.monomial(0, exps)

    def monomial(self, q_exp: int = 0, Q_exps: Sequence[int] | None = None, coeff: int = 1) -> "LaurentPoly":
        if Q_exps is None:
            Q_exps = (0,) * self.r
        if len(Q_exps) != self.r:
            raise RingMismatchError(f"expected {self.r} Q exponents, got {len(Q_exps)}")
        if any(e < 0 for e in Q_exps):
            raise ValueError("Q exponents must be non-negative")
        key = (int(q_exp), *map(int, Q_exps))
        return LaurentPoly(self, {key: coeff} if coeff else {})

    @cached_property
    def elementary_symmetric(self) -> tuple["LaurentPoly", ...]:
        """e_0(Q), ..., e_r(Q)."""
        e = [self.one] + [self.zero] * self.r
        for k in range(1, self.r + 1):
            Qk = self.Q(k)
            for j in range(k, 0, -1):
                e[j] = e[j] + e[j - 1] * Qk
        return tuple(e)

    def from_terms(self, terms: Iterable[tuple[Monomial, int]]) -> "LaurentPoly":
        acc: dict[tuple[int, ...], int] = {}
        for mono, c in terms:
            if len(mono.Q_exps) != self.r:
                raise RingMismatchError(f"monomial {mono} does not belong to r={self.r}")
            key = (mono.q_exp, *mono.Q_exps)
            acc[key] = acc.get(key, 0) + c
        return LaurentPoly(self, {k: v for k, v in acc.items() if v})

    def parse(self, text: str) -> "LaurentPoly":
        return parse_poly(self, text)


class LaurentPoly:
    """An immutable element of a :class:`LaurentRing`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: Mapping[tuple[int, ...], int]):
        self.ring = ring
        self._terms = dict(terms)
        self._hash = None

    # -- structure -------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return {Monomial(k[0], tuple(k[1:])): c for k, c in sorted(self._terms.items())}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine r={self.ring.r} with r={other.ring.r}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return self.ring.zero
        out: dict[tuple[int, ...], int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(self.ring, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials with unit coefficient can be inverted")
            (key, c), = self._terms.items()
            if c not in (1, -1) or any(key[1:]):
                raise ValueError("only q-powers with unit coefficient can be inverted")
            return LaurentPoly(self.ring, {(key[0] * e, *key[1:]): c ** (-e)})
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.r, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and printing ----------------------------------------
    def specialize(self, q_val, Q_vals: Sequence) -> Fraction:
        return specialize(self, q_val, Q_vals)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly('{format_poly(self)}')"


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def negate(a: LaurentPoly) -> LaurentPoly:
    return -a


def specialize(p: LaurentPoly, q_val, Q_vals: Sequence) -> Fraction:
    """Evaluate p at q = q_val and Q_k = Q_vals[k-1], exactly over the rationals."""
    q_val = Fraction(q_val)
    if q_val == 0:
        raise SpecializationError("q must be invertible")
    if len(Q_vals) != p.ring.r:
        raise SpecializationError(f"expected {p.ring.r} Q values, got {len(Q_vals)}")
    Qs = [Fraction(v) for v in Q_vals]
    total = Fraction(0)
    for key, c in p._terms.items():
        term = Fraction(c) * q_val ** key[0]
        for v, e in zip(Qs, key[1:]):
            if e:
                term *= v ** e
        total += term
    return total


def _format_monomial(key: tuple[int, ...]) -> list[str]:
    parts = []
    if key[0]:
        parts.append("q" if key[0] == 1 else f"q^{key[0]}")
    for idx, e in enumerate(key[1:], start=1):
        if e:
            parts.append(f"Q{idx}" if e == 1 else f"Q{idx}^{e}")
    return parts


def format_poly(p: LaurentPoly) -> str:
    """Render with terms in decreasing monomial order, e.g. ``3*q^-2*Q1*Q3^2 - 1``."""
    if not p._terms:
        return "0"
    chunks = []
    for key in sorted(p._terms, reverse=True):
        c = p._terms[key]
        mono = _format_monomial(key)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(mag), *mono])
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(q|Q(\d+))(?:\^(-?\d+))?$")


def parse_poly(ring: LaurentRing, text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`; also accepts unspaced input such as ``2*q-Q1``."""
    text = text.strip()
    if text == "0":
        return ring.zero
    if not text:
        raise ValueError("empty polynomial")
    # tokens alternate sign / body; a leading sign is optional
    pieces = _TERM_SPLIT.split(text)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise ValueError(f"malformed polynomial {text!r}")
    # rejoin exponent signs like q^-2 that the splitter cut apart
    terms: list[tuple[str, str]] = []
    i = 0
    while i < len(pieces):
        sign, body = pieces[i], pieces[i + 1]
        while body.endswith("^") and i + 3 <= len(pieces):
            body = body + pieces[i + 2] + pieces[i + 3]
            i += 2
        terms.append((sign, body))
        i += 2
    acc: dict[tuple[int, ...], int] = {}
    for sign, body in terms:
        coeff = 1
        q_exp = 0
        Q_exps = [0] * ring.r
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            e = int(m.group(3)) if m.group(3) is not None else 1
            if m.group(1) == "q":
                q_exp += e
            else:
                k = int(m.group(2))
                if not 1 <= k <= ring.r:
                    raise RingMismatchError(f"Q{k} is not a parameter of r={ring.r}")
                if e < 0:
                    raise ValueError("Q exponents must be non-negative")
                Q_exps[k - 1] += e
        if sign == "-":
            coeff = -coeff
        key = (q_exp, *Q_exps)
        acc[key] = acc.get(key, 0) + coeff
    return LaurentPoly(ring, {k: v for k, v in acc.items() if v})
