"""Scalar products on spinor spaces and the groups that preserve them.

Three products are supported, all valued in K (or K + K-hat):

* ``tp``     the transposition product  T(psi) phi
* ``beta+``  s1 * reversion(psi) * phi
* ``beta-``  s2 * conjugation(psi) * phi

Writing psi = sum_i m_i f psi_i with psi_i in K, every one of them takes the
shape  sum_ij sigma(psi_i) G_ij phi_j  where sigma is an anti-involution of K
and G is the Gram matrix on the data7 basis.  Classification reads the group
off (K, sigma, G).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Multivector, Signature
from .idempotents import idempotent_rank
from .linalg import sparse_rank, symmetric_signature
from .spinors import CliData, KElement, SpinorMatrix, clidata

PRODUCTS = ("tp", "beta+", "beta-")

_FIELD_SYMBOL = {"R": "ℝ", "C": "ℂ", "H": "ℍ"}


class ClassificationError(ValueError):
    """The Gram data matched no branch of the decision tree."""


def _check_kind(kind: str) -> str:
    aliases = {"plus": "beta+", "minus": "beta-", "beta_plus": "beta+", "beta_minus": "beta-"}
    kind = aliases.get(kind, kind)
    if kind not in PRODUCTS:
        raise ValueError(f"unknown product {kind!r}; expected one of {', '.join(PRODUCTS)}")
    return kind


def _left_map(kind: str) -> Callable[[Multivector], Multivector]:
    if kind == "tp":
        return Multivector.transposition
    if kind == "beta+":
        return Multivector.reversion
    return Multivector.conjugation


# ---------------------------------------------------------------------------
# the special monomials s1, s2


def find_s(cd: CliData, kind: str) -> int | None:
    """First data7 monomial s with inv(f) = s f s^-1, where inv is reversion
    (kind ``beta+``/``reversion``) or Clifford conjugation (``beta-``/``conjugation``).

    ``None`` means the corresponding beta product vanishes identically.
    """
    kind = {"reversion": "beta+", "conjugation": "beta-"}.get(kind, kind)
    kind = _check_kind(kind)
    if kind == "tp":
        return 0
    sig = cd.sig
    fv = cd.f.value
    target = _left_map(kind)(fv)
    for s in cd.data7:
        sv = Multivector.monomial(sig, s)
        if sv * fv == target * sv:
            return s
    return None


# ---------------------------------------------------------------------------
# evaluating products


def _components(x: Multivector, cd: CliData) -> list[Multivector]:
    """Split a spinor of S (or S + S-hat) into its per-idempotent parts."""
    comps = cd.ring.components
    if len(comps) == 1:
        return [x]
    return [x * c.idem for c in comps]


def _raw_product(kind: str, psi: Multivector, phi: Multivector, s: int | None) -> Multivector:
    sig = psi.sig
    if s is None:
        return Multivector.zero(sig)
    out = _left_map(kind)(psi) * phi
    return Multivector.monomial(sig, s) * out if s else out


def product(psi: Multivector, phi: Multivector, cd: CliData, kind: str = "tp") -> KElement:
    """The scalar product of ``kind`` as an element of K (pairs when doubled).

    Raises :class:`NotInIdeal` if the result is not of the form lambda e.
    """
    kind = _check_kind(kind)
    s = find_s(cd, kind)
    parts = []
    for comp, a, b in zip(cd.ring.components, _components(psi, cd), _components(phi, cd)):
        parts.append(comp.coords(_raw_product(kind, a, b, s)))
    return KElement(cd.ring, tuple(parts))


def tp_product(psi: Multivector, phi: Multivector, cd: CliData) -> KElement:
    return product(psi, phi, cd, "tp")


def beta_product(psi: Multivector, phi: Multivector, cd: CliData, kind: str = "plus") -> KElement:
    return product(psi, phi, cd, kind)


def product_multivector(psi: Multivector, phi: Multivector, cd: CliData, kind: str = "tp") -> Multivector:
    """The product as a multivector (sum over components), for identity checks."""
    kind = _check_kind(kind)
    s = find_s(cd, kind)
    out = Multivector.zero(cd.sig)
    for a, b in zip(_components(psi, cd), _components(phi, cd)):
        out = out + _raw_product(kind, a, b, s)
    return out


# ---------------------------------------------------------------------------
# Gram data


@dataclass(frozen=True, eq=False)
class GramForm:
    cd: CliData
    kind: str
    s: int | None
    sigma: tuple[int, ...]
    matrix: SpinorMatrix

    @property
    def sig(self) -> Signature:
        return self.cd.sig

    @property
    def kclass(self) -> str:
        return self.cd.kclass

    @property
    def N(self) -> int:
        return self.matrix.size

    @property
    def conj(self) -> str:
        """Left-slot map on K: ``none``, ``k-conjugation`` or ``star``."""
        rest = self.sigma[1:]
        if all(x == 1 for x in rest):
            return "none"
        if all(x == -1 for x in rest):
            return "k-conjugation"
        return "star"

    @property
    def is_zero(self) -> bool:
        return all(self.matrix[i, j].is_zero() for i in range(self.N) for j in range(self.N))

    def component(self, c: int) -> list[list[tuple[Fraction, ...]]]:
        n = self.N
        return [[self.matrix[i, j].parts[c] for j in range(n)] for i in range(n)]

    def evaluate(self, x: Sequence[KElement], y: Sequence[KElement]) -> KElement:
        """sum_ij sigma(x_i) G_ij y_j."""
        acc = self.cd.ring.zero()
        for i, xi in enumerate(x):
            sx = sigma_apply(xi, self.sigma)
            for j, yj in enumerate(y):
                acc = acc + sx * self.matrix[i, j] * yj
        return acc


def sigma_apply(x: KElement, sigma: Sequence[int]) -> KElement:
    return KElement(x.ring, tuple(tuple(s * a for s, a in zip(sigma, part)) for part in x.parts))


def _sigma(cd: CliData, kind: str, s: int | None) -> tuple[int, ...]:
    """Signs of the induced anti-involution of K on the data6 basis."""
    comp = cd.ring.components[0]
    if s is None:
        return tuple(1 if a == 0 else -1 for a in range(comp.dim))
    sig = cd.sig
    sv = Multivector.monomial(sig, s)
    sinv = Multivector.monomial(sig, s).transposition()
    fv = comp.idem
    out = []
    for a, m in enumerate(comp.basis):
        x = Multivector.monomial(sig, m) * fv
        y = sv * _left_map(kind)(x) * sinv
        c = comp.coords(y)
        if any(c[b] for b in range(len(c)) if b != a) or abs(c[a]) != 1:
            raise ArithmeticError(f"{kind} does not act diagonally on the K basis of {sig}")
        out.append(int(c[a]))
    return tuple(out)


def gram(cd: CliData, kind: str = "tp") -> GramForm:
    """G_ij = product(m_i e, m_j e) over the data7 basis, per component e."""
    kind = _check_kind(kind)
    sig = cd.sig
    s = find_s(cd, kind)
    comps = cd.ring.components
    n = len(cd.data7)
    rows = []
    for mi in cd.data7:
        row = []
        for mj in cd.data7:
            parts = []
            for comp in comps:
                a = Multivector.monomial(sig, mi) * comp.idem
                b = Multivector.monomial(sig, mj) * comp.idem
                parts.append(comp.coords(_raw_product(kind, a, b, s)))
            row.append(KElement(cd.ring, tuple(parts)))
        rows.append(tuple(row))
    assert len(rows) == n
    return GramForm(cd, kind, s, _sigma(cd, kind, s), SpinorMatrix(tuple(rows), cd.ring))


def coordinate_expansion(cd: CliData, kind: str = "tp", component: int = 0) -> dict:
    """Bilinear coefficients of the product in real spinor coordinates.

    Returns ``{out: {((i, a), (j, b)): c}}`` meaning that the K-coordinate
    ``out`` of product(psi, phi) contains ``c * psi_{i a} * phi_{j b}``, with
    psi = sum_i m_i e (sum_a psi_{i a} u_a).  Indices are 1-based like the
    usual hand-written formulas.  Computed straight from multivector products.
    """
    kind = _check_kind(kind)
    sig = cd.sig
    comp = cd.ring.components[component]
    s = find_s(cd, kind)
    basis = []
    for i, mi in enumerate(cd.data7, 1):
        for a, ma in enumerate(comp.basis, 1):
            v = Multivector.monomial(sig, mi) * Multivector.monomial(sig, ma) * comp.idem
            basis.append(((i, a), v))
    out: dict[int, dict] = {a: {} for a in range(1, comp.dim + 1)}
    for ia, x in basis:
        for jb, y in basis:
            lam = comp.coords(_raw_product(kind, x, y, s))
            for c, val in enumerate(lam, 1):
                if val:
                    out[c][(ia, jb)] = val
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    name: str
    components: tuple[str, ...]
    conj: str
    nonstandard: bool = False
    note: str = ""


def _is_symmetric_kind(g: GramForm, c: int, sign: int) -> bool:
    m = g.component(c)
    n = g.N
    for i in range(n):
        for j in range(n):
            expect = tuple(sign * s * x for s, x in zip(g.sigma, m[i][j]))
            if m[j][i] != expect:
                return False
    return True


def _realify(g: GramForm, c: int, mat, sigma: Sequence[int]) -> list[list[Fraction]]:
    """Real matrix of Re(sigma(x) G y) on the real coordinates."""
    comp = g.cd.ring.components[c]
    d = comp.dim
    n = len(mat)
    units = [tuple(Fraction(int(a == b)) for b in range(d)) for a in range(d)]
    out = [[Fraction(0)] * (n * d) for _ in range(n * d)]
    for i in range(n):
        for j in range(n):
            gij = mat[i][j]
            if not any(gij):
                continue
            for a in range(d):
                left = tuple(sigma[a] * x for x in units[a])
                lg = comp.mul(left, gij)
                for b in range(d):
                    out[i * d + a][j * d + b] = comp.mul(lg, units[b])[0]
    return out


def _nondegenerate(real: list[list[Fraction]]) -> bool:
    rows = [{k: x for k, x in enumerate(r) if x} for r in real]
    return sparse_rank(rows) == len(real)


def _hermitian_signature(g: GramForm, c: int, mat) -> tuple[int, int]:
    """(r, s) of a Hermitian form with the standard K-conjugation."""
    d = g.cd.ring.components[c].dim
    conj = tuple(1 if a == 0 else -1 for a in range(d))
    pos, neg, zero = symmetric_signature(_realify(g, c, mat, conj))
    if zero:
        raise ClassificationError(f"degenerate Hermitian form on {g.sig}")
    return pos // d, neg // d


def _left_mul(g: GramForm, c: int, u: int, mat):
    """u * G entrywise, u a K-basis index."""
    comp = g.cd.ring.components[c]
    unit = tuple(Fraction(int(a == u)) for a in range(comp.dim))
    return [[comp.mul(unit, x) for x in row] for row in mat]


def _indef(prefix: str, r: int, s: int, n: int) -> str:
    r, s = max(r, s), min(r, s)
    return f"{prefix}({n})" if s == 0 else f"{prefix}({r},{s})"


def _classify_component(g: GramForm, c: int) -> tuple[str, bool, str]:
    kc = g.kclass[-1]
    n = g.N
    mat = g.component(c)
    sym = _is_symmetric_kind(g, c, 1)
    anti = _is_symmetric_kind(g, c, -1)
    field = _FIELD_SYMBOL[kc]
    if all(not any(x) for row in mat for x in row):
        return f"GL({n},{field})", False, ""
    if not _nondegenerate(_realify(g, c, mat, g.sigma)):
        raise ClassificationError(f"degenerate {g.kind} form on {g.sig}")
    conj = g.conj
    if kc == "R":
        if sym:
            pos, neg, _ = symmetric_signature([[x[0] for x in row] for row in mat])
            return _indef("O", pos, neg, n), False, ""
        if anti:
            return f"Sp({n},ℝ)", False, ""
    elif kc == "C":
        if conj == "none":
            if sym:
                return f"O({n},ℂ)", False, ""
            if anti:
                return f"Sp({n},ℂ)", False, ""
        else:
            if anti:
                # i * (skew-Hermitian) is Hermitian
                mat = _left_mul(g, c, 1, mat)
            if sym or anti:
                r, s = _hermitian_signature(g, c, mat)
                return _indef("U", r, s, n), False, ""
    else:
        if conj == "k-conjugation":
            if sym:
                r, s = _hermitian_signature(g, c, mat)
                return (f"Sp({n})" if min(r, s) == 0 else f"U_{{{max(r, s)},{min(r, s)}}}ℍ"), False, ""
            if anti:
                return f"SO*({2 * n})", False, ""
        else:
            # sigma(x) = u conj(x) u^-1 for the unit u that sigma negates;
            # u^-1 G is then a form for the standard conjugation
            u = next(a for a in range(1, len(g.sigma)) if g.sigma[a] == -1)
            uinv = _left_mul(g, c, u, [[tuple(-x for x in e) for e in row] for row in mat])
            note = "left slot carries a star map; classical tables list this group as Sp(2,2)-type"
            if anti:
                r, s = _hermitian_signature(g, c, uinv)
                name = f"Sp({n})" if min(r, s) == 0 else f"U_{{{max(r, s)},{min(r, s)}}}ℍ"
                return name, True, note
            if sym:
                return f"SO*({2 * n})", True, note
    raise ClassificationError(f"{g.kind} form on {g.sig} is neither symmetric nor antisymmetric")


def classify(g: GramForm) -> Classification:
    names = []
    nonstandard = False
    notes = []
    for c in range(len(g.cd.ring.components)):
        name, odd, note = _classify_component(g, c)
        names.append(name)
        nonstandard = nonstandard or odd
        if note and note not in notes:
            notes.append(note)
    if len(names) == 1:
        full = names[0]
    elif names[0] == names[1]:
        full = "²" + names[0]
    else:
        full = f"{names[0]} × {names[1]}"
    return Classification(full, tuple(names), g.conj, nonstandard, "; ".join(notes))


def forms_agree(a: GramForm, b: GramForm) -> bool:
    """Same product on every pair of spinors (same sigma and Gram)."""
    return a.sigma == b.sigma and a.matrix == b.matrix


# ---------------------------------------------------------------------------
# tables


FAMILIES = {
    "R": "simple, K = ℝ",
    "C": "simple, K = ℂ",
    "H": "simple, K = ℍ",
    "2R": "semisimple, K = ²ℝ",
    "2H": "semisimple, K = ²ℍ",
}


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    k: int
    N: int
    kclass: str
    group: str
    coincides: tuple[str, ...] = ()
    nonstandard: bool = False

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "N": self.N,
            "KClass": self.kclass,
            "group": self.group,
            "coincides-with": ";".join(self.coincides),
        }


def signatures(max_n: int) -> list[Signature]:
    """All (p, q) with p + q <= max_n, ordered by (p+q, p)."""
    return [Signature(p, n - p) for n in range(max_n + 1) for p in range(n + 1)]


def table_row(sig: Signature, kind: str = "tp") -> TableRow:
    kind = _check_kind(kind)
    cd = clidata(sig)
    g = gram(cd, kind)
    cl = classify(g)
    coincide = []
    if kind == "tp":
        for other in ("beta+", "beta-"):
            if forms_agree(g, gram(cd, other)):
                coincide.append(other)
    return TableRow(sig.p, sig.q, idempotent_rank(sig), cd.N, cd.kclass, cl.name, tuple(coincide), cl.nonstandard)


def _row_job(args):
    p, q, kind = args
    return table_row(Signature(p, q), kind)


def worker_count(jobs: int | None = None) -> int:
    if jobs is None:
        env = os.environ.get("CLIFFTWIST_JOBS")
        jobs = int(env) if env else (os.cpu_count() or 1)
    return max(1, jobs)


def table_sweep(max_n: int, kind: str = "tp", jobs: int | None = None) -> list[TableRow]:
    kind = _check_kind(kind)
    sigs = signatures(max_n)
    jobs = worker_count(jobs)
    if jobs == 1 or len(sigs) < 4:
        rows = [table_row(s, kind) for s in sigs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_row_job, [(s.p, s.q, kind) for s in sigs]))
    return sorted(rows, key=lambda r: (r.p + r.q, r.p))


COLUMNS = ("p", "q", "k", "N", "KClass", "group", "coincides-with")


def render_markdown(rows: Sequence[TableRow], kind: str = "tp") -> str:
    out = []
    for kc, title in FAMILIES.items():
        fam = [r for r in rows if r.kclass == kc]
        if not fam:
            continue
        out.append(f"### {title} ({kind})")
        out.append("")
        out.append("| " + " | ".join(COLUMNS) + " |")
        out.append("|" + "---|" * len(COLUMNS))
        for r in fam:
            d = r.as_dict()
            out.append("| " + " | ".join(str(d[c]) for c in COLUMNS) + " |")
        out.append("")
    return "\n".join(out)


def render_csv(rows: Sequence[TableRow]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()


def render_text(rows: Sequence[TableRow]) -> str:
    lines = []
    for r in rows:
        extra = f"  [= {', '.join(r.coincides)}]" if r.coincides else ""
        lines.append(f"({r.p},{r.q})  k={r.k}  N={r.N}  {r.kclass:<2}  {r.group}{extra}")
    return "\n".join(lines)


__all__ = [
    "ClassificationError",
    "Classification",
    "GramForm",
    "TableRow",
    "beta_product",
    "classify",
    "coordinate_expansion",
    "find_s",
    "gram",
    "product",
    "table_sweep",
    "tp_product",
]
