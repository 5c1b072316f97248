"""The vee group of signed monomials and the subgroups attached to an idempotent."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from .algebra import (
    Multivector,
    Signature,
    commutes,
    monomial_key,
    monomial_product,
    monomial_square_sign,
    monomial_str,
)
from .idempotents import PrimitiveIdempotent, _gf2_insert, idempotent_rank, primitive_idempotent


class VeeElement(NamedTuple):
    sign: int
    mono: int

    def __str__(self):
        s = monomial_str(self.mono)
        return s if self.sign > 0 else "-" + s


def vmul(x: VeeElement, y: VeeElement, sig: Signature) -> VeeElement:
    s, m = monomial_product(x.mono, y.mono, sig)
    return VeeElement(x.sign * y.sign * s, m)


def vinv(x: VeeElement, sig: Signature) -> VeeElement:
    return VeeElement(x.sign * monomial_square_sign(x.mono, sig), x.mono)


def as_multivector(x: VeeElement, sig: Signature) -> Multivector:
    return Multivector.monomial(sig, x.mono, x.sign)


def _key(x: VeeElement):
    return (monomial_key(x.mono), -x.sign)


@dataclass(frozen=True)
class GroupSubset:
    sig: Signature
    elements: frozenset
    kind: str = "custom"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[VeeElement]:
        return sorted(self.elements, key=_key)

    def monomials(self) -> list[int]:
        """Distinct monomials (signs dropped), canonical order."""
        return sorted({x.mono for x in self.elements}, key=monomial_key)

    def is_closed(self) -> bool:
        """Subgroup test.

        When -1 is present and the set is closed under negation, closure is
        equivalent to the monomials forming an XOR subspace, which is a rank
        count.  Otherwise all pairs are multiplied.
        """
        els = self.elements
        if VeeElement(1, 0) not in els:
            return False
        if VeeElement(-1, 0) in els:
            if any(VeeElement(-x.sign, x.mono) not in els for x in els):
                return False
            monos = {x.mono for x in els}
            ech: dict[int, int] = {}
            for m in monos:
                _gf2_insert(ech, m)
            return len(monos) == 1 << len(ech)
        return self.is_closed_pairwise()

    def is_closed_pairwise(self) -> bool:
        sig = self.sig
        els = self.elements
        if VeeElement(1, 0) not in els:
            return False
        return all(vmul(x, y, sig) in els for x in els for y in els)

    def issubset(self, other: "GroupSubset") -> bool:
        return self.elements <= other.elements

    def is_normal_in(self, ambient: "GroupSubset", generators: Iterable[VeeElement] | None = None) -> bool:
        """Invariance under conjugation by ``generators`` (default: all of ambient)."""
        sig = self.sig
        gens = list(ambient.elements if generators is None else generators)
        for g in gens:
            gi = vinv(g, sig)
            for h in self.elements:
                if vmul(vmul(g, h, sig), gi, sig) not in self.elements:
                    return False
        return True

    def product_set(self, other: "GroupSubset") -> frozenset:
        sig = self.sig
        return frozenset(vmul(x, y, sig) for x in self.elements for y in other.elements)

    def label(self) -> str:
        """Compact listing, e.g. ``{±1, ±e12}`` when closed under negation."""
        monos = self.monomials()
        if all(VeeElement(-x.sign, x.mono) in self.elements for x in self.elements):
            return "{" + ", ".join("±" + monomial_str(m) for m in monos) + "}"
        return "{" + ", ".join(str(x) for x in self.sorted()) + "}"

    def __str__(self):
        return self.label()


def generate(sig: Signature, gens: Iterable[VeeElement], kind: str = "custom") -> GroupSubset:
    """Closure of ``gens`` (plus the identity) under the Clifford product."""
    gens = list(gens)
    elems = {VeeElement(1, 0)}
    frontier = [VeeElement(1, 0)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = vmul(x, g, sig)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return GroupSubset(sig, frozenset(elems), kind)


def vee_group(sig: Signature) -> GroupSubset:
    elems = frozenset(VeeElement(s, m) for m in range(sig.dim) for s in (1, -1))
    return GroupSubset(sig, elems, "vee")


def vee_generators(sig: Signature) -> list[VeeElement]:
    return [VeeElement(-1, 0)] + [VeeElement(1, 1 << i) for i in range(sig.n)]


def commutator_subgroup(sig: Signature) -> GroupSubset:
    """Generated by all commutators x y x^-1 y^-1 of the vee group."""
    G = vee_group(sig)
    comms = set()
    gens = vee_generators(sig)
    for x in G.elements:
        xi = vinv(x, sig)
        for y in gens:
            comms.add(vmul(vmul(x, y, sig), vmul(xi, vinv(y, sig), sig), sig))
    return generate(sig, comms, "commutator")


def sign_subgroup(sig: Signature) -> GroupSubset:
    return GroupSubset(sig, frozenset({VeeElement(1, 0), VeeElement(-1, 0)}), "commutator")


def stabilizer(f: PrimitiveIdempotent) -> GroupSubset:
    """All m in the vee group with m f m^{-1} = f (brute force)."""
    sig = f.sig
    fv = f.value
    out = set()
    for m in range(sig.dim):
        mv = Multivector.monomial(sig, m)
        mi = Multivector.monomial(sig, m, monomial_square_sign(m, sig))
        if mv * fv * mi == fv:
            out.add(VeeElement(1, m))
            out.add(VeeElement(-1, m))
    return GroupSubset(sig, frozenset(out), "stabilizer")


def idempotent_group(f: PrimitiveIdempotent) -> GroupSubset:
    gens = [VeeElement(-1, 0)] + [VeeElement(1, g) for g in f.gens]
    return generate(f.sig, gens, "idempotent-group")


def field_group(f: PrimitiveIdempotent, k_monomials: Iterable[int] | None = None) -> GroupSubset:
    if k_monomials is None:
        from .spinors import k_basis

        k_monomials = k_basis(f)
    gens = [VeeElement(-1, 0)] + [VeeElement(1, m) for m in k_monomials]
    return generate(f.sig, gens, "field-group")


def centralizer(xs, ambient: GroupSubset) -> GroupSubset:
    """Elements of ``ambient`` commuting with every element of ``xs``."""
    if isinstance(xs, VeeElement):
        xs = [xs]
    elif isinstance(xs, GroupSubset):
        xs = xs.elements
    monos = {x.mono for x in xs}
    elems = frozenset(g for g in ambient.elements if all(commutes(g.mono, m) for m in monos))
    return GroupSubset(ambient.sig, elems, "centralizer")


def center(G: GroupSubset) -> GroupSubset:
    return centralizer(G, G)


@dataclass(frozen=True)
class Transversal:
    subgroup: GroupSubset
    ambient: GroupSubset
    reps: tuple[VeeElement, ...]

    def monomials(self) -> list[int]:
        return [r.mono for r in self.reps]

    def __len__(self):
        return len(self.reps)

    def label(self) -> str:
        return "{" + ", ".join(str(r) for r in self.reps) + "}"


class NotASubgroup(ValueError):
    pass


def left_coset(b: VeeElement, K: GroupSubset) -> frozenset:
    return frozenset(vmul(b, k, K.sig) for k in K.elements)


def transversal(subgroup: GroupSubset, ambient: GroupSubset) -> Transversal:
    """Canonical left transversal: per coset the positive element of least monomial."""
    if not subgroup.issubset(ambient):
        raise NotASubgroup("subgroup is not contained in the ambient group")
    if not subgroup.is_closed():
        raise NotASubgroup("subgroup is not closed under the product")
    seen: set = set()
    reps = []
    for x in ambient.sorted():
        if x in seen:
            continue
        coset = left_coset(x, subgroup)
        seen |= coset
        best = min(coset, key=_key)
        reps.append(VeeElement(1, best.mono) if VeeElement(1, best.mono) in coset else best)
    reps.sort(key=_key)
    return Transversal(subgroup, ambient, tuple(reps))


def quotient_is_elementary_abelian(big: GroupSubset, small: GroupSubset) -> bool:
    """big/small has exponent <= 2 (hence is elementary abelian)."""
    sig = big.sig
    if not small.is_normal_in(big):
        return False
    return all(vmul(x, x, sig) in small.elements for x in big.elements)


def quotient_order(big: GroupSubset, small: GroupSubset) -> int:
    if big.order % small.order:
        raise ValueError("subgroup order does not divide group order")
    return big.order // small.order


# ---------------------------------------------------------------------------
# order formulas


def expected_vee_order(sig: Signature) -> int:
    return 1 << (1 + sig.n)


def expected_stabilizer_order(sig: Signature) -> int:
    from .idempotents import radon_hurwitz

    e = sig.p + radon_hurwitz(sig.q - sig.p)
    return 1 << (e + (1 if sig.simple else 2))


def expected_idempotent_group_order(sig: Signature) -> int:
    return 1 << (1 + idempotent_rank(sig))


def expected_field_group_order(sig: Signature) -> int:
    r = (sig.p - sig.q) % 8
    if r in (0, 1, 2):
        return 2
    if r in (3, 7):
        return 4
    return 8


# ---------------------------------------------------------------------------
# the group lattice of an idempotent


@dataclass(frozen=True)
class GroupLattice:
    f: PrimitiveIdempotent
    G: GroupSubset
    Gf: GroupSubset
    T: GroupSubset
    K: GroupSubset
    Gprime: GroupSubset
    T_in_G: Transversal = field(repr=False)
    T_in_Gf: Transversal = field(repr=False)
    Gf_in_G: Transversal = field(repr=False)


@lru_cache(maxsize=256)
def group_lattice(sig: Signature, signs: tuple[int, ...] | None = None) -> GroupLattice:
    f = primitive_idempotent(sig, signs)
    G = vee_group(sig)
    Gf = stabilizer(f)
    T = idempotent_group(f)
    K = field_group(f)
    return GroupLattice(
        f=f,
        G=G,
        Gf=Gf,
        T=T,
        K=K,
        Gprime=sign_subgroup(sig),
        T_in_G=transversal(T, G),
        T_in_Gf=transversal(T, Gf),
        Gf_in_G=transversal(Gf, G),
    )


# ---------------------------------------------------------------------------
# mechanical verification of the structure theorem


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    sig: Signature
    results: tuple[ClauseResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[ClauseResult]:
        return [r for r in self.results if not r.passed]

    def __iter__(self):
        return iter(self.results)


def _elementary_witness(big: GroupSubset, small: GroupSubset) -> tuple[int, bool]:
    return quotient_order(big, small), quotient_is_elementary_abelian(big, small)


def _iso(a: tuple[GroupSubset, GroupSubset], b: tuple[GroupSubset, GroupSubset]) -> tuple[bool, str]:
    """Isomorphism of two quotients, both checked to be elementary abelian."""
    oa, ea = _elementary_witness(*a)
    ob, eb = _elementary_witness(*b)
    if not (ea and eb):
        return False, f"quotient not elementary abelian (orders {oa}, {ob}); needs manual review"
    return oa == ob, f"(Z2)^{oa.bit_length() - 1} vs (Z2)^{ob.bit_length() - 1}"


def verify_main_theorem(sig: Signature, signs: tuple[int, ...] | None = None) -> Report:
    """Check clauses (i)-(x) of the structure theorem for one signature.

    Normality here is a computational confirmation over all of G, not a proof.
    """
    from .spinors import clidata, k_space_dimension, spinor_space_dimension, span_rank

    lat = group_lattice(sig, signs)
    G, Gf, T, K, Gp = lat.G, lat.Gf, lat.T, lat.K, lat.Gprime
    cd = clidata(sig, signs)
    f = lat.f
    res = []

    ok = all(vmul(t, k, sig) == vmul(k, t, sig) for t in T.elements for k in K.elements)
    res.append(ClauseResult("i", ok, "T and K commute elementwise"))

    inter = T.elements & K.elements
    res.append(ClauseResult("ii", inter == Gp.elements, f"|T ∩ K| = {len(inter)}"))

    tk = T.product_set(K)
    kt = K.product_set(T)
    res.append(ClauseResult("iii", tk == Gf.elements == kt, f"|TK| = {len(tk)}, |G(f)| = {Gf.order}"))

    ok = Gf.order * 2 == T.order * K.order and len(tk) == Gf.order
    res.append(ClauseResult("iv", ok, f"{Gf.order} = 1/2 * {T.order} * {K.order}"))

    gens = vee_generators(sig)
    ok = all(H.is_normal_in(G, gens) for H in (Gf, T, K)) and T.is_normal_in(Gf) and K.is_normal_in(Gf)
    res.append(ClauseResult("v", ok, "G(f), T, K normal in G (checked by conjugation)"))

    ok1, d1 = _iso((Gf, K), (T, Gp))
    ok2, d2 = _iso((Gf, T), (K, Gp))
    res.append(ClauseResult("vi", ok1 and ok2, f"G(f)/K ≅ T/G': {d1}; G(f)/T ≅ K/G': {d2}"))

    # (G(f)/G')/(T/G') has order |G(f)|/|T|; it is G(f)/T by the third isomorphism theorem
    ok3, d3 = _iso((Gf, T), (K, Gp))
    kdim = k_space_dimension(f)
    rank6 = span_rank(cd.data6, f.value)
    ok = ok3 and quotient_order(Gf, Gp) // quotient_order(T, Gp) == quotient_order(Gf, T)
    ok = ok and rank6 == kdim == len(cd.data6)
    res.append(ClauseResult("vii", ok, f"{d3}; rank of data6 images {rank6}, dim K {kdim}"))

    sdim = spinor_space_dimension(f)
    rank7 = span_rank(cd.data7, f.value, right=cd.data6)
    res.append(ClauseResult("viii", rank7 == sdim, f"rank of data7*K {rank7}, dim S {sdim}"))

    rank5 = span_rank(cd.data5, f.value)
    ok = Gf.is_normal_in(G, gens) and quotient_order(G, T) == quotient_order(Gf, T) * quotient_order(G, Gf)
    ok = ok and len(cd.data5) == len(cd.data6) * len(cd.data7) and rank5 == sdim == len(cd.data5)
    res.append(
        ClauseResult(
            "ix",
            ok,
            f"|G/T| = {quotient_order(G, T)} = {quotient_order(Gf, T)}*{quotient_order(G, Gf)}; rank of data5 images {rank5}",
        )
    )

    cent = centralizer(T, G)
    per_x = frozenset.intersection(*[centralizer(x, G).elements for x in T.elements])
    res.append(ClauseResult("x", cent.elements == Gf.elements == per_x, f"|C_G(T)| = {cent.order}"))
    return Report(sig, tuple(res))


def normal_series_check(sig: Signature, signs: tuple[int, ...] | None = None) -> Report:
    """G >= G(f) >= T >= G' >= 1 and G >= G(f) >= K >= G' >= 1, each step normal."""
    lat = group_lattice(sig, signs)
    trivial = GroupSubset(sig, frozenset({VeeElement(1, 0)}), "trivial")
    res = []
    for name, chain in (("T-series", (lat.G, lat.Gf, lat.T, lat.Gprime, trivial)),
                        ("K-series", (lat.G, lat.Gf, lat.K, lat.Gprime, trivial))):
        ok = all(H.is_closed() for H in chain)
        for big, small in zip(chain, chain[1:]):
            ok = ok and small.issubset(big) and small.is_normal_in(big)
        orders = " >= ".join(str(H.order) for H in chain)
        res.append(ClauseResult(name, ok, orders))
    return Report(sig, tuple(res))
