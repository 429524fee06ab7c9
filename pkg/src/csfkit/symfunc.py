"""Homogeneous symmetric functions with exact Laurent coefficients.

A SymFunc is stored as a map from partitions of its degree to LaurentT
coefficients, tagged with a basis letter: m (monomial), s (Schur) or
e (elementary).  The monomial basis is canonical internally: a degree-n
function is faithfully determined by its coefficients on partitions of
n, all of length <= n, so truncating to n variables loses nothing.

Basis changes run through Kostka data.  The Kostka matrix is
unitriangular with respect to dominance order, and descending
lexicographic order refines dominance, so every inversion is exact
back-substitution over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .laurent import LaurentT, center_to_halfsteps, t_factorial
from .partitions import (
    conjugate,
    count_distinct_permutations,
    distinct_permutations,
    is_partition,
    pad,
    partitions,
)
from .tableaux import SizeMismatch, kostka, lr_tableau_count

BASES = ("m", "s", "e")

JSON_VERSION = "symfunc-v1"


def _coerce_coeff(c) -> LaurentT:
    if isinstance(c, LaurentT):
        return c
    if isinstance(c, int):
        return LaurentT.const(c)
    raise TypeError("coefficient must be LaurentT or int, got %r" % (c,))


class SymFunc:
    """A homogeneous symmetric function in one of the m/s/e bases."""

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, degree: int, coeffs=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        data: dict[tuple[int, ...], LaurentT] = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = tuple(lam)
                if not is_partition(lam) or sum(lam) != degree:
                    raise ValueError(
                        "key %r is not a partition of %d" % (lam, degree)
                    )
                c = _coerce_coeff(c)
                if c:
                    data[lam] = c
        self.basis = basis
        self.degree = degree
        self.coeffs = data

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFunc":
        return cls(basis, degree, {})

    @classmethod
    def unit(cls, basis: str = "m") -> "SymFunc":
        """The multiplicative unit: the empty partition in degree 0."""
        return cls(basis, 0, {(): LaurentT.one()})

    @classmethod
    def single(cls, basis: str, lam, coeff=1) -> "SymFunc":
        lam = tuple(lam)
        return cls(basis, sum(lam), {lam: _coerce_coeff(coeff)})

    # ---- basic queries ------------------------------------------------

    def coefficient(self, lam) -> LaurentT:
        return self.coeffs.get(tuple(lam), LaurentT.zero())

    def items(self):
        """(partition, coefficient) pairs in descending lex order."""
        return [(lam, self.coeffs[lam]) for lam in sorted(self.coeffs, reverse=True)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ---- ring structure -----------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("can only add matching basis and degree")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, LaurentT.zero()) + c
        return SymFunc(self.basis, self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scaled(-1)

    def scaled(self, c) -> "SymFunc":
        c = _coerce_coeff(c)
        return SymFunc(
            self.basis, self.degree, {lam: v * c for lam, v in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        a = self if self.basis == "m" else convert(self, "m")
        b = other if other.basis == "m" else convert(other, "m")
        return a.coeffs == b.coeffs

    __hash__ = None

    # ---- serialization and display --------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "version": JSON_VERSION,
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": c.pairs()}
                for lam, c in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymFunc":
        if data.get("version") != JSON_VERSION:
            raise ValueError("unsupported symfunc version %r" % data.get("version"))
        coeffs = {
            tuple(term["partition"]): LaurentT.from_pairs(term["coeff"])
            for term in data["terms"]
        }
        return cls(data["basis"], data["degree"], coeffs)

    def render(self) -> str:
        """Text form, e.g. 't*s[2,1] + (1+2t+t^2)*s[1,1,1]'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, c in self.items():
            base = "%s[%s]" % (self.basis, ",".join(str(p) for p in lam))
            cstr = c.format()
            if len(c.terms) > 1:
                pieces.append("(%s)*%s" % (cstr, base))
            elif cstr == "1":
                pieces.append(base)
            elif cstr == "-1":
                pieces.append("-%s" % base)
            else:
                pieces.append("%s*%s" % (cstr, base))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "SymFunc(%r, %d, %s)" % (self.basis, self.degree, self.render())


# ---- monomial expansion and products ------------------------------------


def _expand_to_exponents(f: SymFunc, nvars: int) -> dict[tuple[int, ...], LaurentT]:
    """Expand an m-basis function into exponent vectors in nvars
    variables.  Partitions longer than nvars truncate to zero."""
    if f.basis != "m":
        raise ValueError("expansion expects the m basis")
    out: dict[tuple[int, ...], LaurentT] = {}
    for lam, c in f.coeffs.items():
        if len(lam) > nvars:
            continue
        for vec in distinct_permutations(pad(lam, nvars)):
            out[vec] = c
    return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two symmetric functions, returned in the m basis.

    Both operands are expanded into honest monomials in enough
    variables for the product degree, multiplied term by term, and the
    partition-keyed coefficients are read back off.
    """
    fm = f if f.basis == "m" else convert(f, "m")
    gm = g if g.basis == "m" else convert(g, "m")
    degree = f.degree + g.degree
    nvars = max(degree, 1)
    fa = _expand_to_exponents(fm, nvars)
    ga = _expand_to_exponents(gm, nvars)
    prod: dict[tuple[int, ...], LaurentT] = {}
    for v1, c1 in fa.items():
        for v2, c2 in ga.items():
            key = tuple(a + b for a, b in zip(v1, v2))
            c = c1 * c2
            if key in prod:
                prod[key] = prod[key] + c
            else:
                prod[key] = c
    out = {}
    for lam in partitions(degree):
        c = prod.get(pad(lam, nvars))
        if c:
            out[lam] = c
    return SymFunc("m", degree, out)


# ---- Kostka-driven basis changes -----------------------------------------


@lru_cache(maxsize=None)
def _schur_in_m_row(lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Kostka row: the m-expansion of a single Schur function."""
    d = sum(lam)
    row = []
    for mu in partitions(d):
        k = kostka(lam, mu)
        if k:
            row.append((mu, k))
    return tuple(row)


@lru_cache(maxsize=None)
def _elementary_in_m_row(mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """m-expansion of a product of elementary symmetric functions,
    computed by multiplying out the factors."""
    acc = SymFunc.unit("m")
    for part in mu:
        factor = SymFunc("m", part, {(1,) * part: 1})
        acc = multiply(acc, factor)
    row = []
    for lam, c in acc.items():
        val = c.coefficient(0)
        if c != LaurentT.const(val):
            raise RuntimeError("elementary expansion picked up a t power")
        row.append((lam, val))
    return tuple(row)


def _m_from_s(coeffs: dict, degree: int) -> dict:
    out: dict[tuple[int, ...], LaurentT] = {}
    for lam, c in coeffs.items():
        for mu, k in _schur_in_m_row(lam):
            prev = out.get(mu)
            term = c * k
            out[mu] = term if prev is None else prev + term
    return out


def _m_from_e(coeffs: dict, degree: int) -> dict:
    out: dict[tuple[int, ...], LaurentT] = {}
    for mu, c in coeffs.items():
        for lam, k in _elementary_in_m_row(mu):
            prev = out.get(lam)
            term = c * k
            out[lam] = term if prev is None else prev + term
    return out


def _s_from_m(coeffs: dict, degree: int) -> dict:
    """Invert the Kostka matrix by back-substitution.

    Descending lex runs from dominance-maximal partitions downward, so
    when a partition is reached every Schur term that could feed it has
    already been peeled off.
    """
    remaining = dict(coeffs)
    out = {}
    for lam in partitions(degree):
        c = remaining.pop(lam, None)
        if c is None or not c:
            continue
        out[lam] = c
        for mu, k in _schur_in_m_row(lam):
            if mu == lam:
                continue
            prev = remaining.get(mu, LaurentT.zero())
            remaining[mu] = prev - c * k
    leftovers = {k: v for k, v in remaining.items() if v}
    if leftovers:
        raise RuntimeError("Kostka back-substitution left a residue: %r" % leftovers)
    return out


def _e_from_m(coeffs: dict, degree: int) -> dict:
    """Back-substitution against the elementary expansions.

    e_mu = m_{mu'} + dominance-lower monomial terms, so ascending lex
    (which refines dominance upward) peels coefficients off the
    conjugate slot one at a time.
    """
    remaining = dict(coeffs)
    out = {}
    for mu in reversed(partitions(degree)):
        c = remaining.pop(conjugate(mu), None)
        if c is None or not c:
            continue
        out[mu] = c
        lead = conjugate(mu)
        for lam, k in _elementary_in_m_row(mu):
            if lam == lead:
                continue
            prev = remaining.get(lam, LaurentT.zero())
            remaining[lam] = prev - c * k
    leftovers = {k: v for k, v in remaining.items() if v}
    if leftovers:
        raise RuntimeError(
            "elementary back-substitution left a residue: %r" % leftovers
        )
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    """Rewrite f in the target basis (one of m, s, e), exactly."""
    if target not in BASES:
        raise ValueError("unknown basis %r" % (target,))
    if f.basis == target:
        return SymFunc(target, f.degree, dict(f.coeffs))
    if f.basis == "s":
        m_coeffs = _m_from_s(f.coeffs, f.degree)
    elif f.basis == "e":
        m_coeffs = _m_from_e(f.coeffs, f.degree)
    else:
        m_coeffs = dict(f.coeffs)
    if target == "m":
        return SymFunc("m", f.degree, m_coeffs)
    if target == "s":
        return SymFunc("s", f.degree, _s_from_m(m_coeffs, f.degree))
    return SymFunc("e", f.degree, _e_from_m(m_coeffs, f.degree))


# ---- Littlewood-Richardson ------------------------------------------------


def lr_coefficient(lam, mu, nu) -> int:
    """Coefficient of s_nu in s_lam * s_mu.

    Computed two independent ways, ballot-tableau enumeration and
    product-plus-conversion, which must agree.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        raise SizeMismatch(
            "|lam| + |mu| = %d but |nu| = %d" % (sum(lam) + sum(mu), sum(nu))
        )
    by_tableaux = lr_tableau_count(lam, mu, nu)
    prod = multiply(SymFunc.single("s", lam), SymFunc.single("s", mu))
    c = convert(prod, "s").coefficient(nu)
    by_product = c.coefficient(0)
    if c != LaurentT.const(by_product) or by_product != by_tableaux:
        raise RuntimeError(
            "LR routes disagree for %r, %r, %r: tableaux %d vs product %s"
            % (lam, mu, nu, by_tableaux, c.format())
        )
    return by_tableaux


# ---- positivity and palindromy reports ------------------------------------


@dataclass
class PositivityReport:
    basis: str
    center_halfsteps: int
    positive: bool
    palindromic: bool
    negative_terms: list = field(default_factory=list)
    asymmetric_terms: list = field(default_factory=list)


def positivity_and_palindromy(f: SymFunc, basis: str, center) -> PositivityReport:
    """Convert to the requested basis, then report whether every
    coefficient is a nonnegative-integer polynomial and whether the
    whole function is palindromic about the given (half-)integer
    center, coefficient by coefficient."""
    g = convert(f, basis)
    center_hs = center_to_halfsteps(center)
    negative = []
    asymmetric = []
    for lam, c in g.items():
        if not c.is_nonnegative():
            negative.append((lam, c))
        if not c.is_palindromic(center_hs):
            asymmetric.append((lam, c))
    return PositivityReport(
        basis=basis,
        center_halfsteps=center_hs,
        positive=not negative,
        palindromic=not asymmetric,
        negative_terms=negative,
        asymmetric_terms=asymmetric,
    )


def evaluate_at_ones(f: SymFunc, nvars: int) -> int:
    """Value of the degree-n truncation at X_1 = ... = X_nvars = 1, t = 1."""
    fm = f if f.basis == "m" else convert(f, "m")
    total = 0
    for lam, c in fm.coeffs.items():
        if len(lam) > nvars:
            continue
        total += c.at_one() * count_distinct_permutations(pad(lam, nvars))
    return total


__all__ = [
    "BASES",
    "LaurentT",
    "PositivityReport",
    "SizeMismatch",
    "SymFunc",
    "convert",
    "evaluate_at_ones",
    "kostka",
    "lr_coefficient",
    "multiply",
    "positivity_and_palindromy",
    "t_factorial",
]
