"""Spinor ideals S = Cl f, the division ring K = f Cl f, and spinor matrices.

Coordinates are taken with respect to the transversal bases:

* K is spanned over R by ``m f`` for the K-basis monomials ``m`` (data6);
* S is a right K-module with basis ``m_j f`` over the data7 monomials.

Two basis vectors ``m f`` and ``m' f`` from different cosets of the
idempotent group have disjoint monomial support, and the coefficient of
``m f`` at ``m`` itself is ``2^-k``.  Coordinates are therefore read off
directly and then confirmed by reconstructing the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import Multivector, Signature, commutes, monomial_key, monomial_product, monomial_square_sign, monomial_str
from .groups import group_lattice
from .idempotents import (
    PrimitiveIdempotent,
    _gf2_insert,
    idempotent_rank,
    k_dimension,
    spinor_dimension_N,
)
from .linalg import Span

FIELD_NAMES = {"R": "real", "C": "complex", "H": "quaternionic", "2R": "real", "2H": "quaternionic"}


class NotInIdeal(ValueError):
    pass


def k_class(sig: Signature) -> str:
    r = (sig.p - sig.q) % 8
    return {0: "R", 1: "2R", 2: "R", 3: "C", 4: "H", 5: "2H", 6: "H", 7: "C"}[r]


@lru_cache(maxsize=512)
def k_basis(f: PrimitiveIdempotent) -> tuple[int, ...]:
    """Monomials spanning K = f Cl f, in canonical order, 1 first.

    m f = f m f holds exactly when m commutes with every generator of f
    (m f is never zero, m being invertible).  Candidates are scanned in
    canonical order and kept when they open a new coset of the idempotent
    group modulo the ones already kept; the answer is the set of monomials
    of the group they generate.  Each K-coset is then represented inside a
    single subgroup meeting T(f) only in +-1, so <+-1, data6> has the
    order of K(f).
    """
    sig = f.sig
    need = k_dimension(sig)
    echelon: dict[int, int] = {}
    for g in f.gens:
        _gf2_insert(echelon, g)
    chosen: list[int] = []
    for m in sorted(range(1, sig.dim), key=monomial_key):
        if (1 << len(chosen)) >= need:
            break
        if not all(commutes(m, g) for g in f.gens):
            continue
        if _gf2_insert(echelon, m):
            chosen.append(m)
    if (1 << len(chosen)) != need:
        raise ArithmeticError(f"could not complete a K basis for {sig}")
    span = {0}
    for m in chosen:
        span |= {x ^ m for x in span}
    return tuple(sorted(span, key=monomial_key))


def k_basis_bruteforce(f: PrimitiveIdempotent) -> list[int]:
    """Monomials m with m f = f m f != 0, straight from the products."""
    sig = f.sig
    fv = f.value
    out = []
    for m in range(sig.dim):
        mf = Multivector.monomial(sig, m) * fv
        if mf and fv * mf == mf:
            out.append(m)
    return sorted(out, key=monomial_key)


# ---------------------------------------------------------------------------
# K as an algebra


@dataclass(frozen=True, eq=False)
class KComponent:
    """One division ring e Cl e (e = f, or its grade involute) in coordinates."""

    sig: Signature
    idem: Multivector
    basis: tuple[int, ...]
    table: tuple[tuple[tuple[int, int], ...], ...]
    conj: tuple[int, ...]
    scale: int

    @classmethod
    def build(cls, sig: Signature, idem: Multivector, basis: Sequence[int], k: int) -> "KComponent":
        basis = tuple(basis)
        scale = 1 << k
        table = []
        for a in basis:
            row = []
            for b in basis:
                prod = Multivector.monomial(sig, a) * Multivector.monomial(sig, b) * idem
                c = _coords_in(sig, prod, idem, basis, scale)
                nz = [(i, x) for i, x in enumerate(c) if x]
                if len(nz) != 1 or abs(nz[0][1]) != 1:
                    raise ArithmeticError("K basis is not closed under multiplication")
                row.append((int(nz[0][1]), nz[0][0]))
            table.append(tuple(row))
        conj = tuple(monomial_square_sign(m, sig) for m in basis)
        return cls(sig, idem, basis, tuple(table), conj, scale)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: Multivector) -> tuple[Fraction, ...]:
        return _coords_in(self.sig, v, self.idem, self.basis, self.scale, check=True)

    def to_multivector(self, coords: Sequence[Fraction]) -> Multivector:
        out = Multivector.zero(self.sig)
        for m, c in zip(self.basis, coords):
            if c:
                out = out + (Multivector.monomial(self.sig, m) * self.idem).scale(c)
        return out

    def mul(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * len(self.basis)
        for a, xa in enumerate(x):
            if not xa:
                continue
            row = self.table[a]
            for b, yb in enumerate(y):
                if yb:
                    s, c = row[b]
                    out[c] += s * xa * yb
        return tuple(out)


def _coords_in(sig, v: Multivector, idem: Multivector, basis, scale, check=False):
    coords = tuple(v.coeff(m) * scale for m in basis)
    if check:
        rebuilt = Multivector.zero(sig)
        for m, c in zip(basis, coords):
            if c:
                rebuilt = rebuilt + (Multivector.monomial(sig, m) * idem).scale(c)
        if rebuilt != v:
            raise NotInIdeal(f"{v} is not of the form lambda*f")
    return coords


@dataclass(frozen=True, eq=False)
class KRing:
    """K (simple case) or K + K-hat (semisimple case)."""

    kclass: str
    components: tuple[KComponent, ...]

    @property
    def doubled(self) -> bool:
        return len(self.components) == 2

    @property
    def dim(self) -> int:
        return self.components[0].dim

    @property
    def basis(self) -> tuple[int, ...]:
        return self.components[0].basis

    def zero(self) -> "KElement":
        z = (Fraction(0),) * self.dim
        return KElement(self, tuple(z for _ in self.components))

    def one(self) -> "KElement":
        e = (Fraction(1),) + (Fraction(0),) * (self.dim - 1)
        return KElement(self, tuple(e for _ in self.components))

    def unit(self, a: int) -> "KElement":
        """The basis element with index ``a`` (in every component)."""
        e = tuple(Fraction(int(i == a)) for i in range(self.dim))
        return KElement(self, tuple(e for _ in self.components))

    def element(self, *parts) -> "KElement":
        parts = tuple(tuple(Fraction(c) for c in part) for part in parts)
        if len(parts) == 1 and self.doubled:
            parts = parts * 2
        return KElement(self, parts)

    def from_multivector(self, v: Multivector, component: int = 0) -> tuple[Fraction, ...]:
        return self.components[component].coords(v)


@dataclass(frozen=True)
class KElement:
    ring: KRing
    parts: tuple[tuple[Fraction, ...], ...]

    def __eq__(self, other):
        if not isinstance(other, KElement):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __add__(self, other: "KElement") -> "KElement":
        return KElement(self.ring, tuple(tuple(a + b for a, b in zip(x, y)) for x, y in zip(self.parts, other.parts)))

    def __neg__(self) -> "KElement":
        return KElement(self.ring, tuple(tuple(-a for a in x) for x in self.parts))

    def __sub__(self, other: "KElement") -> "KElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KElement(self.ring, tuple(tuple(a * other for a in x) for x in self.parts))
        comps = self.ring.components
        return KElement(self.ring, tuple(c.mul(x, y) for c, x, y in zip(comps, self.parts, other.parts)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(a for x in self.parts for a in x)

    def conjugate(self) -> "KElement":
        return k_conjugate(self)

    def real(self) -> tuple[Fraction, ...]:
        """Coefficient of the unit in each component."""
        return tuple(x[0] for x in self.parts)

    def __str__(self):
        return " | ".join(_part_str(x, self.ring.basis) for x in self.parts) if self.ring.doubled else _part_str(
            self.parts[0], self.ring.basis
        )


def _part_str(coords, basis) -> str:
    mv_terms = []
    for m, c in zip(basis, coords):
        if c:
            mv_terms.append(f"{c}" if m == 0 else f"{c}*{monomial_str(m)}")
    return " + ".join(mv_terms).replace("+ -", "- ") or "0"


def k_conjugate(x: KElement) -> KElement:
    """The transposition map restricted to K, in coordinates."""
    comps = x.ring.components
    return KElement(x.ring, tuple(tuple(s * a for s, a in zip(c.conj, part)) for c, part in zip(comps, x.parts)))


# ---------------------------------------------------------------------------
# clidata


@dataclass(frozen=True, eq=False)
class CliData:
    sig: Signature
    kclass: str
    N: int
    simple: bool
    f: PrimitiveIdempotent
    data5: tuple[int, ...]
    data6: tuple[int, ...]
    data7: tuple[int, ...]
    ring: KRing

    @property
    def field(self) -> str:
        return FIELD_NAMES[self.kclass]

    @property
    def type(self) -> str:
        return "simple" if self.simple else "semisimple"

    @property
    def idempotents(self) -> tuple[Multivector, ...]:
        return tuple(c.idem for c in self.ring.components)

    def as_list(self) -> list:
        return [self.field, self.N, self.type, self.f.value, list(self.data5), list(self.data6), list(self.data7)]


@lru_cache(maxsize=256)
def clidata(sig: Signature, signs: tuple[int, ...] | None = None) -> CliData:
    lat = group_lattice(sig, signs)
    f = lat.f
    data6 = k_basis(f)
    k = idempotent_rank(sig)
    kc = k_class(sig)
    comps = [KComponent.build(sig, f.value, data6, k)]
    if not sig.simple:
        comps.append(KComponent.build(sig, f.value.grade_involution(), data6, k))
    return CliData(
        sig=sig,
        kclass=kc,
        N=spinor_dimension_N(sig),
        simple=sig.simple,
        f=f,
        data5=tuple(lat.T_in_G.monomials()),
        data6=data6,
        data7=tuple(lat.Gf_in_G.monomials()),
        ring=KRing(kc, tuple(comps)),
    )


# ---------------------------------------------------------------------------
# spinor coordinates and matrices


def spinor_coords(psi: Multivector, cd: CliData, component: int = 0, check: bool = True) -> list[tuple[Fraction, ...]]:
    """Right-K coordinates: psi = sum_j (m_j e) lambda_j over the data7 basis.

    ``component`` selects e = f (0) or its grade involute (1).  With
    ``check`` the input is rebuilt from the coordinates and compared.
    """
    comp = cd.ring.components[component]
    sig = cd.sig
    out = []
    rebuilt = Multivector.zero(sig)
    for mj in cd.data7:
        lam = []
        for ma in comp.basis:
            s, m = monomial_product(mj, ma, sig)
            lam.append(psi.coeff(m) * comp.scale * s)
        lam = tuple(lam)
        out.append(lam)
        if check and any(lam):
            rebuilt = rebuilt + Multivector.monomial(sig, mj) * comp.to_multivector(lam)
    if check and rebuilt != psi:
        raise NotInIdeal(f"{psi} is not in the spinor ideal")
    return out


def spinor_from_coords(coords: Sequence[KElement], cd: CliData) -> Multivector:
    """Inverse of :func:`spinor_coords`; sums over all components."""
    sig = cd.sig
    out = Multivector.zero(sig)
    for mj, lam in zip(cd.data7, coords):
        mv = Multivector.monomial(sig, mj)
        for comp, part in zip(cd.ring.components, lam.parts):
            if any(part):
                out = out + mv * comp.to_multivector(part)
    return out


def spinor_k_coords(psi: Multivector, cd: CliData) -> list[KElement]:
    """Coordinates of psi in S (simple) or S + S-hat (semisimple) as K-elements."""
    comps = cd.ring.components
    if len(comps) == 1:
        parts = [spinor_coords(psi, cd, 0)]
    else:
        parts = [spinor_coords(psi * c.idem, cd, i) for i, c in enumerate(comps)]
    return [KElement(cd.ring, tuple(p[j] for p in parts)) for j in range(len(cd.data7))]


@dataclass(frozen=True)
class SpinorMatrix:
    entries: tuple[tuple[KElement, ...], ...]
    ring: KRing

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int, ring: KRing) -> "SpinorMatrix":
        return cls(tuple(tuple(ring.one() if i == j else ring.zero() for j in range(n)) for i in range(n)), ring)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ring.zero()
                for t in range(n):
                    a, b = self.entries[i][t], other.entries[t][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return SpinorMatrix(tuple(rows), self.ring)

    def transpose(self) -> "SpinorMatrix":
        n = self.size
        return SpinorMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)), self.ring)

    def conj_transpose(self) -> "SpinorMatrix":
        n = self.size
        return SpinorMatrix(
            tuple(tuple(k_conjugate(self.entries[j][i]) for j in range(n)) for i in range(n)), self.ring
        )

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


def rep_matrix(u: Multivector, cd: CliData) -> SpinorMatrix:
    """Matrix of left multiplication by u on the spinor basis (column j = u m_j e)."""
    sig = cd.sig
    n = len(cd.data7)
    comps = cd.ring.components
    cols = []
    for mj in cd.data7:
        mjv = Multivector.monomial(sig, mj)
        # u m_j e lies in the left ideal by construction, so no rebuild check
        per_comp = [spinor_coords(u * (mjv * c.idem), cd, i, check=False) for i, c in enumerate(comps)]
        cols.append([KElement(cd.ring, tuple(pc[i] for pc in per_comp)) for i in range(n)])
    return SpinorMatrix(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)), cd.ring)


def dagger_kind(sig: Signature) -> str:
    r = (sig.p - sig.q) % 8
    if r in (0, 1, 2):
        return "T"
    if r in (3, 7):
        return "dagger"
    return "ddagger"


def dagger_check(u: Multivector, cd: CliData) -> bool:
    """[T(u)] equals [u]^T, [u]^dagger or [u]^ddagger according to p - q mod 8."""
    lhs = rep_matrix(u.transposition(), cd)
    m = rep_matrix(u, cd)
    rhs = m.transpose() if dagger_kind(cd.sig) == "T" else m.conj_transpose()
    return lhs == rhs


def spinor_space_dimension(f: PrimitiveIdempotent) -> int:
    """dim_R(Cl f) by brute force over all monomials."""
    sig = f.sig
    return _rank([Multivector.monomial(sig, m) * f.value for m in range(sig.dim)])


def k_space_dimension(f: PrimitiveIdempotent) -> int:
    """dim_R(f Cl f) by brute force over all monomials."""
    sig = f.sig
    return _rank([f.value * Multivector.monomial(sig, m) * f.value for m in range(sig.dim)])


def _rank(mvs) -> int:
    span = Span()
    for v in mvs:
        if v:
            span.add(v.terms)
    return len(span)


def span_rank(monos: Sequence[int], idem: Multivector, right: Sequence[int] = (0,)) -> int:
    """Real rank of {m r idem : m in monos, r in right}."""
    sig = idem.sig
    return _rank(
        [Multivector.monomial(sig, m) * Multivector.monomial(sig, r) * idem for m in monos for r in right]
    )
