"""Primitive idempotents f = prod_j (1 + s_j e_{A_j}) / 2 and their bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import (
    Multivector,
    Signature,
    commutes,
    indices,
    mask_of,
    monomial_key,
    monomial_square_sign,
)

_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


class IdempotentSearchError(RuntimeError):
    """No admissible generator set was found (never expected for real Cl(p,q))."""


def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i, with r_{i+8} = r_i + 4 in both directions."""
    return _RH_BASE[i % 8] + 4 * (i // 8)


def idempotent_rank(sig: Signature) -> int:
    """k = q - r_{q-p}: number of commuting factors in a primitive idempotent."""
    return sig.q - radon_hurwitz(sig.q - sig.p)


def k_dimension(sig: Signature) -> int:
    """dim_R of f Cl f: 1, 2 or 4 by the residue of p - q mod 8."""
    r = (sig.p - sig.q) % 8
    if r in (0, 1, 2):
        return 1
    if r in (3, 7):
        return 2
    return 4


def spinor_dimension_N(sig: Signature) -> int:
    """Matrix size N: 2^k for simple algebras, 2^(k-1) per component otherwise."""
    k = idempotent_rank(sig)
    return 1 << (k if sig.simple else k - 1)


def _gf2_insert(basis: dict[int, int], v: int) -> bool:
    """Insert ``v`` into a GF(2) echelon basis keyed by leading bit."""
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            basis[top] = v
            return True
        v ^= basis[top]
    return False


def _greedy(sig: Signature, pool: list[int], need: int, seed: list[int]) -> list[int] | None:
    """Depth-first search in ``pool`` order for ``need`` more admissible monomials."""
    if need == 0:
        return []
    echelon: dict[int, int] = {}
    for m in seed:
        _gf2_insert(echelon, m)

    def rec(start: int, chosen: list[int], ech: dict[int, int]) -> list[int] | None:
        if len(chosen) == need:
            return chosen
        for i in range(start, len(pool)):
            m = pool[i]
            if not all(commutes(m, c) for c in seed + chosen):
                continue
            e2 = dict(ech)
            if not _gf2_insert(e2, m):
                continue
            found = rec(i + 1, chosen + [m], e2)
            if found is not None:
                return found
        return None

    return rec(0, [], echelon)


def _colex_key(mask: int) -> tuple[int, ...]:
    return tuple(reversed(indices(mask)))


@lru_cache(maxsize=None)
def idempotent_generators(sig: Signature) -> tuple[int, ...]:
    """The k commuting, square +1, independent monomials that define f.

    Positive generators are paired with negative ones from the top down,
    (e_p, e_n), (e_{p-1}, e_{n-1}), ..., each pair giving a square +1
    bivector.  What remains is a definite algebra on the unpaired generators;
    it is completed greedily in canonical order.  The result is listed in
    colexicographic order.  For example Cl(2,2) gets e13, e24 and Cl(1,4)
    gets e234, e15.
    """
    k = idempotent_rank(sig)
    p, q = sig.p, sig.q
    pairs = []
    for j in range(min(p, q, k)):
        pairs.append(mask_of((p - j, sig.n - j)))
    rest_gens = [i for i in range(1, sig.n + 1) if not any(m >> (i - 1) & 1 for m in pairs)]
    rest_mask = mask_of(rest_gens)
    pool = [
        m
        for m in sorted(range(1, sig.dim), key=monomial_key)
        if m & ~rest_mask == 0 and monomial_square_sign(m, sig) == 1
    ]
    extra = _greedy(sig, pool, k - len(pairs), pairs)
    if extra is None:
        # fall back to an unrestricted search over the whole algebra
        pool = [
            m
            for m in sorted(range(1, sig.dim), key=monomial_key)
            if monomial_square_sign(m, sig) == 1
        ]
        gens = _greedy(sig, pool, k, [])
        if gens is None:
            raise IdempotentSearchError(f"no primitive idempotent generators for {sig}")
    else:
        gens = pairs + extra
    return tuple(sorted(gens, key=_colex_key))


@dataclass(frozen=True)
class PrimitiveIdempotent:
    sig: Signature
    gens: tuple[int, ...]
    signs: tuple[int, ...]
    value: Multivector

    @property
    def k(self) -> int:
        return len(self.gens)

    def __str__(self):
        return str(self.value)


def _expand(sig: Signature, gens, signs) -> Multivector:
    f = Multivector.scalar(sig, 1)
    half = Fraction(1, 2)
    for g, s in zip(gens, signs):
        f = f * Multivector(sig, {0: half, g: half * s})
    return f


def primitive_idempotent(sig: Signature, signs=None) -> PrimitiveIdempotent:
    gens = idempotent_generators(sig)
    if signs is None:
        signs = (1,) * len(gens)
    signs = tuple(int(s) for s in signs)
    if len(signs) != len(gens):
        raise ValueError(f"{sig} needs {len(gens)} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    return PrimitiveIdempotent(sig, gens, signs, _expand(sig, gens, signs))


def complete_idempotent_set(sig: Signature) -> list[PrimitiveIdempotent]:
    k = len(idempotent_generators(sig))
    return [primitive_idempotent(sig, s) for s in product((1, -1), repeat=k)]


def grade_involute_idempotent(f: PrimitiveIdempotent) -> Multivector:
    return f.value.grade_involution()


def semisimple_unit(f: PrimitiveIdempotent) -> Multivector:
    return f.value + f.value.grade_involution()
