"""Exact arithmetic in Cl(p,q) viewed as the twisted group ring R^t[(Z2)^n].

Basis monomials are n-bit masks: bit ``i-1`` set means generator ``e_i`` is
present.  Generators ``e_1..e_p`` square to +1, ``e_{p+1}..e_n`` to -1.
Coefficients are :class:`fractions.Fraction`, so nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping

MAX_N = 32


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature ({self.p},{self.q})")
        if self.p + self.q > MAX_N:
            raise ValueError(f"p+q={self.p + self.q} exceeds engine limit {MAX_N}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def eps(self) -> tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def positive_mask(self) -> int:
        return (1 << self.p) - 1

    @property
    def simple(self) -> bool:
        return (self.p - self.q) % 4 != 1

    def monomials(self) -> list[int]:
        """All 2^n masks in canonical order."""
        return sorted(range(self.dim), key=monomial_key)

    def generator(self, i: int) -> "Multivector":
        if not 1 <= i <= self.n:
            raise ValueError(f"no generator e{i} in Cl{self.p, self.q}")
        return Multivector.monomial(self, 1 << (i - 1))

    def __str__(self):
        return f"Cl({self.p},{self.q})"


# ---------------------------------------------------------------------------
# monomials


def indices(mask: int) -> tuple[int, ...]:
    """Ascending generator indices (1-based) present in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m ^= 1 << (i - 1)
    return m


def grade(mask: int) -> int:
    return mask.bit_count()


def monomial_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key of the canonical order: grade first, then lexicographic indices."""
    return (mask.bit_count(), indices(mask))


def monomial_str(mask: int) -> str:
    if mask == 0:
        return "1"
    idx = indices(mask)
    if idx[-1] > 9:
        return "e{" + ",".join(map(str, idx)) + "}"
    return "e" + "".join(map(str, idx))


def parse_monomial(text: str) -> int:
    text = text.strip()
    if text == "1":
        return 0
    if not text.startswith("e") or len(text) < 2:
        raise ValueError(f"not a monomial: {text!r}")
    body = text[1:]
    if body.startswith("{"):
        if not body.endswith("}"):
            raise ValueError(f"not a monomial: {text!r}")
        idx = [int(t) for t in body[1:-1].split(",")]
    else:
        idx = [int(c) for c in body]
    if sorted(set(idx)) != idx or idx[0] < 1:
        raise ValueError(f"indices must be strictly ascending and positive: {text!r}")
    return mask_of(idx)


def gray_inverse(b: int, n: int) -> int:
    """Prefix parity ``h(b)_i = sum_{j<=i} b_j mod 2`` (inverse Gray code)."""
    h = b
    shift = 1
    while shift < n:
        h ^= h << shift
        shift <<= 1
    return h & ((1 << n) - 1)


def walsh(a: int, c: int) -> int:
    return -1 if (a & c).bit_count() & 1 else 1


_TWIST_TABLE_MAX_N = 14


@lru_cache(maxsize=64)
def _twist_table(sig: Signature) -> tuple[int, ...]:
    pmask = sig.positive_mask
    return tuple(gray_inverse(b, sig.n) ^ (b & pmask) for b in range(sig.dim))


def twist(b: int, sig: Signature) -> int:
    """Mask t(b) with sign(a*b) = (-1)^{|a & t(b)|}; t(b) = h(b) xor (b & positive)."""
    if sig.n <= _TWIST_TABLE_MAX_N:
        return _twist_table(sig)[b]
    return gray_inverse(b, sig.n) ^ (b & sig.positive_mask)


def monomial_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of basis monomials as ``(sign, a ^ b)``.

    The sign is ``(-1)^{sum_{i<=p} a_i b_i} * w_a(h(b))``.
    """
    return (-1 if (a & twist(b, sig)).bit_count() & 1 else 1), a ^ b


def monomial_product_reference(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Same product, computed by sorting the generator word with adjacent swaps."""
    word = list(indices(a)) + list(indices(b))
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    out = []
    for g in word:
        if out and out[-1] == g:
            out.pop()
            sign *= 1 if g <= sig.p else -1
        else:
            out.append(g)
    return sign, mask_of(out)


def cocycle(a: int, b: int, sig: Signature) -> int:
    return monomial_product(a, b, sig)[0]


def monomial_square_sign(m: int, sig: Signature) -> int:
    return monomial_product(m, m, sig)[0]


def monomial_inverse(m: int, sig: Signature) -> tuple[int, int]:
    return monomial_square_sign(m, sig), m


def commutes(a: int, b: int) -> bool:
    """Basis monomials commute iff |a||b| - |a & b| is even (any signature)."""
    return (a.bit_count() * b.bit_count() - (a & b).bit_count()) % 2 == 0


def _reversion_sign(g: int) -> int:
    return -1 if (g * (g - 1) // 2) & 1 else 1


def _conjugation_sign(g: int) -> int:
    return -1 if (g * (g + 1) // 2) & 1 else 1


# ---------------------------------------------------------------------------
# multivectors


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class Multivector:
    """Sparse exact linear combination of basis monomials.

    Immutable; zero coefficients are never stored, so equality of the term
    maps is equality of elements.
    """

    __slots__ = ("sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[int, object] | None = None):
        self.sig = sig
        clean = {}
        if terms:
            full = sig.full_mask
            for m, c in terms.items():
                if m & ~full:
                    raise ValueError(f"monomial mask {m:#b} outside {sig}")
                c = _frac(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, sig: Signature, terms: dict[int, Fraction]) -> "Multivector":
        obj = cls.__new__(cls)
        obj.sig = sig
        obj._terms = {m: c for m, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, sig: Signature, c=1) -> "Multivector":
        return cls(sig, {0: c})

    @classmethod
    def monomial(cls, sig: Signature, mask: int, c=1) -> "Multivector":
        return cls(sig, {mask: c})

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls._raw(sig, {})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms in canonical monomial order."""
        for m in sorted(self._terms, key=monomial_key):
            yield m, self._terms[m]

    def coeff(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def support(self) -> frozenset[int]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "Multivector"):
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    def _coerce(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(self.sig, other)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Multivector) else other
        if o is None:
            return NotImplemented
        return self.sig == o.sig and self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "Multivector":
        c = _frac(c)
        return Multivector._raw(self.sig, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _frac(other))
        return NotImplemented

    def _map_signs(self, sign_of) -> "Multivector":
        return Multivector._raw(self.sig, {m: c * sign_of(m) for m, c in self._terms.items()})

    def grade_involution(self) -> "Multivector":
        return self._map_signs(lambda m: -1 if m.bit_count() & 1 else 1)

    def reversion(self) -> "Multivector":
        return self._map_signs(lambda m: _reversion_sign(m.bit_count()))

    def conjugation(self) -> "Multivector":
        return self._map_signs(lambda m: _conjugation_sign(m.bit_count()))

    def transposition(self) -> "Multivector":
        return transposition(self)

    def __repr__(self):
        return f"Multivector({self.sig}, {self})"

    def __str__(self):
        return format_multivector(self)


def _integral(terms: dict[int, Fraction]) -> tuple[list[tuple[int, int]], int]:
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return [(m, c.numerator * (den // c.denominator)) for m, c in terms.items()], den


def mul(u: Multivector, v: Multivector) -> Multivector:
    """Clifford product; integer accumulation over a common denominator."""
    u._check(v)
    sig = u.sig
    uterms, du = _integral(u._terms)
    vterms, dv = _integral(v._terms)
    acc: dict[int, int] = {}
    get = acc.get
    for b, cb in vterms:
        tb = twist(b, sig)
        for a, ca in uterms:
            m = a ^ b
            if (a & tb).bit_count() & 1:
                acc[m] = get(m, 0) - ca * cb
            else:
                acc[m] = get(m, 0) + ca * cb
    den = du * dv
    return Multivector._raw(sig, {m: Fraction(c, den) for m, c in acc.items() if c})


def add(u: Multivector, v: Multivector) -> Multivector:
    u._check(v)
    return u + v


def scale(u: Multivector, c) -> Multivector:
    return u.scale(c)


def grade_involution(u: Multivector) -> Multivector:
    return u.grade_involution()


def reversion(u: Multivector) -> Multivector:
    return u.reversion()


def conjugation(u: Multivector) -> Multivector:
    return u.conjugation()


def transposition(u: Multivector) -> Multivector:
    """The transposition anti-involution: each monomial goes to its inverse."""
    sig = u.sig
    return u._map_signs(lambda m: monomial_square_sign(m, sig))


def star(u: Multivector) -> Multivector:
    """Twisted-group-ring star map ``(sum a_x x)^* = sum a_x x^{-1}``.

    Deliberately computed from the cocycle (``x^{-1} = gamma(x, x) x``, since
    every element of (Z2)^n is its own inverse and gamma(0, 0) = 1) rather
    than through :func:`transposition`; it serves as an oracle for it.
    """
    sig = u.sig
    gamma11 = cocycle(0, 0, sig)
    out = {}
    for x, a in u._terms.items():
        g = cocycle(x, x, sig) * gamma11
        out[x] = a if g > 0 else -a
    return Multivector._raw(sig, out)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_multivector(u: Multivector) -> str:
    if u.is_zero():
        return "0"
    parts = []
    for m, c in u.items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if m == 0:
            body = _format_coeff(a)
        elif a == 1:
            body = monomial_str(m)
        else:
            body = f"{_format_coeff(a)}*{monomial_str(m)}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def parse_multivector(sig: Signature, text: str) -> Multivector:
    """Inverse of :func:`format_multivector`."""
    text = text.strip()
    if text == "0":
        return Multivector.zero(sig)
    tokens = text.replace(" - ", " -").replace(" + ", " +").split(" ")
    terms: dict[int, Fraction] = {}
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        if "*" in tok:
            c, mono = tok.split("*")
            m, coef = parse_monomial(mono), Fraction(c)
        elif tok.startswith("e"):
            m, coef = parse_monomial(tok), Fraction(1)
        else:
            m, coef = 0, Fraction(tok)
        terms[m] = terms.get(m, 0) + sign * coef
    return Multivector(sig, terms)


def random_multivector(sig: Signature, rng, max_terms: int = 4, bound: int = 5) -> Multivector:
    """Sparse multivector with small random rational coefficients (``rng``: random.Random)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.randrange(sig.dim)
        terms[m] = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    return Multivector(sig, terms)
