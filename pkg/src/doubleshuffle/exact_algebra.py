"""Exact arithmetic substrate: rationals, sparse multivariate polynomials,
and rational matrices with exact rank/nullspace.

Everything here is exact.  Rationals are ``fractions.Fraction`` (always in
lowest terms, positive denominator).  A polynomial is a fixed-arity sparse
map from exponent tuples to nonzero rational coefficients; the zero
polynomial is the empty map.  Matrices support fraction-free (Bareiss)
rank and a deterministic reduced-echelon nullspace.  A modular fast path
(single machine prime, numpy integer arithmetic) is used only to *select*
pivot rows or to certify full column rank; every emitted rank/nullspace
value is established by exact integer arithmetic on top of it.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

Exponent = tuple[int, ...]

# Prime for the modular fast path.  Products of two reduced residues fit in
# int64, so numpy arithmetic below is exact.
_PRIME = 2147483647


def format_rational(q: Fraction) -> str:
    """Render p/q with the denominator omitted when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def grlex_key(exps: Exponent) -> tuple[int, Exponent]:
    """Graded-lexicographic sort key: total degree ascending, then the
    exponent tuple lexicographically ascending.  This is the one canonical
    monomial order used for iteration, serialization and pivot choice."""
    return (sum(exps), exps)


class Poly:
    """Sparse multivariate polynomial over the rationals with fixed arity.

    ``terms`` maps exponent tuples (length == arity) to nonzero Fractions.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict[Exponent, Fraction] | None = None,
                 _clean: bool = False):
        self.arity = arity
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            clean: dict[Exponent, Fraction] = {}
            for exps, coeff in terms.items():
                if len(exps) != arity:
                    raise ValueError(f"exponent {exps} has length != arity {arity}")
                coeff = Fraction(coeff)
                if coeff:
                    clean[exps] = coeff
            self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(arity: int) -> Poly:
        return Poly(arity, {}, _clean=True)

    @staticmethod
    def constant(arity: int, value) -> Poly:
        value = Fraction(value)
        if not value:
            return Poly.zero(arity)
        return Poly(arity, {(0,) * arity: value}, _clean=True)

    @staticmethod
    def variable(arity: int, index: int) -> Poly:
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return Poly(arity, {tuple(exps): Fraction(1)}, _clean=True)

    @staticmethod
    def monomial(exps: Sequence[int], coeff=1) -> Poly:
        return Poly(len(exps), {tuple(exps): Fraction(coeff)})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous polynomial (0 for the zero polynomial)."""
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check_arity(self, other: Poly) -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: Poly) -> Poly:
        self._check_arity(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return Poly(self.arity, terms, _clean=True)

    def __sub__(self, other: Poly) -> Poly:
        self._check_arity(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) - coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return Poly(self.arity, terms, _clean=True)

    def __neg__(self) -> Poly:
        return Poly(self.arity, {e: -c for e, c in self.terms.items()}, _clean=True)

    def scale(self, factor) -> Poly:
        factor = Fraction(factor)
        if not factor:
            return Poly.zero(self.arity)
        return Poly(self.arity, {e: c * factor for e, c in self.terms.items()},
                    _clean=True)

    def __mul__(self, other: Poly) -> Poly:
        self._check_arity(other)
        out: dict[Exponent, Fraction] = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                new = get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return Poly(self.arity, out, _clean=True)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structural operations ----------------------------------------

    def substitute(self, images: Sequence[Poly]) -> Poly:
        """Simultaneous substitution x_i -> images[i], fully expanded.

        All images must share one arity.  Powers of each image are cached,
        which matters when many monomials reuse the same exponents.
        """
        if len(images) != self.arity:
            raise ValueError(f"expected {self.arity} images, got {len(images)}")
        if not self.terms:
            out_arity = images[0].arity if images else 0
            return Poly.zero(out_arity)
        if images:
            out_arity = images[0].arity
            for img in images:
                if img.arity != out_arity:
                    raise ValueError("images have inconsistent arities")
        else:
            out_arity = 0
        one = Poly.constant(out_arity, 1)
        power_cache: list[dict[int, Poly]] = [{0: one, 1: img} for img in images]
        acc: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            piece = one
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                piece = piece * _cached_pow(power_cache[i], e)
            for pe, pc in piece.terms.items():
                new = acc.get(pe, 0) + coeff * pc
                if new:
                    acc[pe] = new
                else:
                    acc.pop(pe, None)
        return Poly(out_arity, acc, _clean=True)

    def permute_variables(self, target: Sequence[int]) -> Poly:
        """Rename variables: old position i becomes position target[i]."""
        if sorted(target) != list(range(self.arity)):
            raise ValueError("target is not a permutation")
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            new = [0] * self.arity
            for i, e in enumerate(exps):
                new[target[i]] = e
            out[tuple(new)] = coeff
        return Poly(self.arity, out, _clean=True)

    def embed(self, arity: int, offset: int = 0) -> Poly:
        """View inside a larger variable ring, shifting variables by offset."""
        if offset + self.arity > arity:
            raise ValueError("embedding does not fit")
        pre = (0,) * offset
        post = (0,) * (arity - offset - self.arity)
        return Poly(arity, {pre + e + post: c for e, c in self.terms.items()},
                    _clean=True)

    def partial(self, index: int) -> Poly:
        """Partial derivative with respect to variable ``index``."""
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            new = exps[:index] + (e - 1,) + exps[index + 1:]
            out[new] = out.get(new, Fraction(0)) + coeff * e
        return Poly(self.arity, out)

    # -- ordering and serialization ------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded-lexicographic order (canonical iteration order)."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def serialize(self) -> str:
        lines = []
        for exps, coeff in self.sorted_terms():
            lines.append(f"{','.join(map(str, exps))} : {format_rational(coeff)}")
        return "\n".join(lines)

    @staticmethod
    def parse(text: str, arity: int) -> Poly:
        terms: dict[Exponent, Fraction] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            exp_part, _, coeff_part = line.partition(":")
            exp_part = exp_part.strip()
            exps = tuple(int(x) for x in exp_part.split(",")) if exp_part else ()
            terms[exps] = parse_rational(coeff_part)
        return Poly(arity, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Poly({self.arity}, 0)"
        bits = []
        for exps, coeff in self.sorted_terms()[:6]:
            mono = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"{format_rational(coeff)}{'*' + mono if mono else ''}")
        suffix = ", ..." if len(self.terms) > 6 else ""
        return f"Poly({self.arity}, {' + '.join(bits)}{suffix})"


def _cached_pow(cache: dict[int, Poly], e: int) -> Poly:
    if e in cache:
        return cache[e]
    half = e // 2
    p = _cached_pow(cache, half) * _cached_pow(cache, half)
    if e & 1:
        p = p * cache[1]
    cache[e] = p
    return p


def divexact(p: Poly, q: Poly) -> Poly:
    """Exact division p / q; raises ValueError when q does not divide p.

    Plain long division against the graded-lex leading term of q.  Only the
    specific divisions needed by period polynomials use this (divisor a
    product of linear forms), so no fancy strategy is required.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check_arity(q)
    lead_exp, lead_coeff = max(q.terms.items(), key=lambda item: grlex_key(item[0]))
    remainder = p
    quotient: dict[Exponent, Fraction] = {}
    while not remainder.is_zero():
        rexp, rcoeff = max(remainder.terms.items(),
                           key=lambda item: grlex_key(item[0]))
        diff = tuple(a - b for a, b in zip(rexp, lead_exp))
        if any(d < 0 for d in diff):
            raise ValueError("not divisible")
        factor = rcoeff / lead_coeff
        quotient[diff] = quotient.get(diff, Fraction(0)) + factor
        remainder = remainder - q * Poly.monomial(diff, factor)
    return Poly(p.arity, quotient)


# ---------------------------------------------------------------------
# Exact rational matrices
# ---------------------------------------------------------------------

class RMatrix:
    """Dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def row_int(self, i: int) -> list[int]:
        """Row i scaled to a primitive integer vector (kept proportional)."""
        row = self.entries[i]
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return ints

    def int_rows(self) -> list[list[int]]:
        return [self.row_int(i) for i in range(self.rows)]


def _normalize_int_row(row: list[int]) -> list[int] | None:
    """Divide by the gcd and make the leading nonzero entry positive."""
    g = 0
    lead = None
    for i, v in enumerate(row):
        if v:
            if lead is None:
                lead = i
            g = gcd(g, v)
    if lead is None:
        return None
    if row[lead] < 0:
        g = -g
    return [v // g for v in row]


def _echelon_insert(echelon: dict[int, list[int]], row: list[int]) -> int | None:
    """Reduce ``row`` against an integer echelon and insert it if independent.

    Returns the pivot column on insertion, None if the row reduced to zero.
    ``echelon`` maps pivot column -> primitive integer row.
    """
    ncols = len(row)
    while True:
        lead = None
        for i in range(ncols):
            if row[i]:
                lead = i
                break
        if lead is None:
            return None
        piv = echelon.get(lead)
        if piv is None:
            norm = _normalize_int_row(row)
            assert norm is not None
            echelon[lead] = norm
            return lead
        a = piv[lead]
        b = row[lead]
        g = gcd(a, b)
        ma = a // g
        mb = b // g
        row = [ma * rv - mb * pv for rv, pv in zip(row, piv)]
        g2 = 0
        for v in row:
            g2 = gcd(g2, v)
        if g2 > 1:
            row = [v // g2 for v in row]


def _echelon_to_rref(echelon: dict[int, list[int]], ncols: int) -> dict[int, list[Fraction]]:
    """Back-substitute an integer echelon into reduced row echelon form."""
    rref: dict[int, list[Fraction]] = {}
    for col in sorted(echelon, reverse=True):
        row = [Fraction(v) for v in echelon[col]]
        piv = row[col]
        row = [v / piv for v in row]
        for other_col, other_row in rref.items():
            factor = row[other_col]
            if factor:
                row = [a - factor * b for a, b in zip(row, other_row)]
        rref[col] = row
    return rref


def _modp_pivot_rows(rows: Iterable[Sequence[int]], ncols: int,
                     p: int = _PRIME) -> tuple[int, list[int]]:
    """Gaussian elimination mod p; returns (rank, indices of pivot rows).

    Deterministic: columns are scanned left to right and the first usable
    row (in input order) becomes the pivot.  The selected rows are linearly
    independent over Q as well, since their mod-p rank is full.
    """
    mat = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    if mat.size == 0:
        return 0, []
    nrows = mat.shape[0]
    order = np.arange(nrows)
    piv_rows: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        col = mat[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            mat[[r, i]] = mat[[i, r]]
            order[[r, i]] = order[[i, r]]
        piv_rows.append(int(order[r]))
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        below = mat[r + 1:, c]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            idx = r + 1 + nzb
            factors = mat[idx, c][:, None]
            mat[idx] = (mat[idx] - factors * mat[r][None, :]) % p
        r += 1
    return r, piv_rows


def nullspace_int(rows: list[list[int]], ncols: int,
                  use_modular: bool = True) -> list[list[Fraction]]:
    """Exact nullspace basis of an integer row system, deterministically.

    The basis is the canonical one obtained from the reduced row echelon
    form: one vector per free column, with coefficient 1 on its free column
    and 0 on every other free column.  When ``use_modular`` is set, a mod-p
    elimination first selects candidate pivot rows; exact elimination then
    runs on those rows only, and every remaining row is verified against
    the computed basis by exact dot products (with a fallback insertion if
    verification ever fails, so the result is exact regardless of p).
    """
    work = [row for row in rows if any(row)]
    if not work:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
                for i in range(ncols)]

    echelon: dict[int, list[int]] = {}
    if use_modular and len(work) * ncols > 4000:
        _, piv = _modp_pivot_rows(work, ncols)
        piv_set = set(piv)
        selected = [work[i] for i in piv]
        rest = [work[i] for i in range(len(work)) if i not in piv_set]
    else:
        selected = work
        rest = []
    for row in selected:
        _echelon_insert(echelon, list(row))
        if len(echelon) == ncols:
            return []

    while True:
        basis = _nullspace_from_echelon(echelon, ncols)
        if not basis:
            return []
        bad = None
        for row in rest:
            support = [j for j, v in enumerate(row) if v]
            for vec in basis:
                if sum(row[j] * vec[j] for j in support):
                    bad = row
                    break
            if bad is not None:
                break
        if bad is None:
            return basis
        _echelon_insert(echelon, list(bad))
        rest = [r for r in rest if r is not bad]


def _nullspace_from_echelon(echelon: dict[int, list[int]],
                            ncols: int) -> list[list[Fraction]]:
    rref = _echelon_to_rref(echelon, ncols)
    pivot_cols = sorted(rref)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p in pivot_cols:
            vec[p] = -rref[p][f]
        basis.append(vec)
    return basis


def nullspace(m: RMatrix) -> list[list[Fraction]]:
    """Basis of the right nullspace in reduced echelon normal form."""
    return nullspace_int(m.int_rows(), m.cols)


def rank_bareiss(rows: list[list[int]]) -> int:
    """Exact rank by fraction-free Bareiss elimination on integer rows."""
    mat = [list(row) for row in rows if any(row)]
    if not mat:
        return 0
    nrows = len(mat)
    ncols = len(mat[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            mat[r], mat[piv] = mat[piv], mat[r]
        pivot = mat[r][c]
        for i in range(r + 1, nrows):
            row_i = mat[i]
            head = row_i[c]
            row_r = mat[r]
            for j in range(c, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def rank(m: RMatrix) -> int:
    return rank_bareiss(m.int_rows())


def rank_modular(rows: list[list[int]], ncols: int, p: int = _PRIME) -> int:
    """Rank mod p.  Always a lower bound for the rank over Q."""
    r, _ = _modp_pivot_rows(rows, ncols, p)
    return r


def full_rank_certificate(rows: list[list[int]], ncols: int) -> bool:
    """True guarantees rank == ncols over Q (mod-p rank is a lower bound)."""
    return rank_modular(rows, ncols) == ncols
