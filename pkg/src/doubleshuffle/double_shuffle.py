"""Linearized double shuffle equations: constraint assembly and solving.

For a fixed weight N and depth r the unknowns are the coefficients of a
homogeneous polynomial f in x_1..x_r of degree N-r.  The constraints come
in two families per split k in 1..r-1:

  * argument-shuffle sums of f itself (the linearized second product), and
  * the same sums applied to the partial-sum transform
    f(x_{i_1}, x_{i_1}+x_{i_2}, ...) (the linearized first product),

where the argument labels run over the shuffles of (1..k) and (k+1..r).
In depth 1 there are no splits; even weights (and the degenerate weight 1)
are forced to zero.  The solution space is extracted as a deterministic
reduced-echelon nullspace.

A word-level route (shuffle constraints on binary words plus index-word
shuffle constraints) is kept fully independent of the polynomial route and
serves as the cross-representation oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import (Poly, RMatrix, full_rank_certificate, grlex_key,
                            nullspace_int)
from .ihara import DepthPoly, bracket, depth1_generator
from .words import (BINARY, WordSum, _shuffle_words, index_word_to_binary,
                    reduced_rep)


@dataclass
class SolutionSpace:
    """Deterministic basis of the weight-N depth-r solution space."""

    weight: int
    depth: int
    basis: list[DepthPoly]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def monomial_basis(N: int, r: int) -> list[tuple[int, ...]]:
    """Exponent tuples of the degree-(N-r) monomials in r variables, in
    graded-lex order."""
    if r < 1 or N < r:
        return []
    degree = N - r
    exps = [tuple(c) for c in _compositions_with_zeros(degree, r)]
    exps.sort(key=grlex_key)
    return exps


def _compositions_with_zeros(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions_with_zeros(total - head, parts - 1):
            yield (head,) + rest


def _label_shuffles(k: int, r: int) -> list[tuple[int, ...]]:
    """Shuffles of the label sequences (1..k) and (k+1..r)."""
    left = tuple(range(1, k + 1))
    right = tuple(range(k + 1, r + 1))
    return [word for word, _ in _shuffle_words(left, right)]


def _expand_partial_sums(m: tuple[int, ...], r: int) -> dict[tuple[int, ...], int]:
    """Integer expansion of prod_j (x_1 + ... + x_j)^{m_j}.

    The transform for an arbitrary label sequence is this expansion with
    the variables relabelled, so it is computed once per monomial.
    """
    acc: dict[tuple[int, ...], int] = {(0,) * r: 1}
    for j, mj in enumerate(m):
        for _ in range(mj):
            new: dict[tuple[int, ...], int] = {}
            for exps, coeff in acc.items():
                for v in range(j + 1):
                    key = exps[:v] + (exps[v] + 1,) + exps[v + 1:]
                    new[key] = new.get(key, 0) + coeff
            acc = new
    return acc


def _relabel(exps: tuple[int, ...], seq: tuple[int, ...]) -> tuple[int, ...]:
    """Move the exponent in position j to position seq[j] - 1."""
    out = [0] * len(exps)
    for j, e in enumerate(exps):
        out[seq[j] - 1] = e
    return tuple(out)


def partial_sum_transform(f: Poly) -> Poly:
    """f(x_1, x_1 + x_2, ..., x_1 + ... + x_r): the change of variables
    carrying the second family of constraints."""
    r = f.arity
    images = []
    acc = Poly.zero(r)
    for i in range(r):
        acc = acc + Poly.variable(r, i)
        images.append(acc)
    return f.substitute(images)


def _constraint_rows_int(N: int, r: int) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    monomials = monomial_basis(N, r)
    ncols = len(monomials)
    rows: list[list[int]] = []

    if r == 1:
        if N % 2 == 0 or N == 1:
            for j in range(ncols):
                row = [0] * ncols
                row[j] = 1
                rows.append(row)
        return rows, monomials

    expansions = [_expand_partial_sums(m, r) for m in monomials]
    for k in range(1, r):
        labels = _label_shuffles(k, r)
        # argument-shuffle family: rows indexed by target monomials
        family: dict[tuple[int, ...], dict[int, int]] = {}
        for j, m in enumerate(monomials):
            for seq in labels:
                slot = family.setdefault(_relabel(m, seq), {})
                slot[j] = slot.get(j, 0) + 1
        rows.extend(_family_to_rows(family, ncols))
        # partial-sum family
        family = {}
        for j, expansion in enumerate(expansions):
            for seq in labels:
                for key, coeff in expansion.items():
                    slot = family.setdefault(_relabel(key, seq), {})
                    slot[j] = slot.get(j, 0) + coeff
        rows.extend(_family_to_rows(family, ncols))
    return rows, monomials


def _family_to_rows(family: dict[tuple[int, ...], dict[int, int]],
                    ncols: int) -> list[list[int]]:
    rows = []
    for key in sorted(family, key=grlex_key):
        entries = family[key]
        row = [0] * ncols
        nonzero = False
        for j, coeff in entries.items():
            if coeff:
                row[j] = coeff
                nonzero = True
        if nonzero:
            rows.append(row)
    return rows


def assemble_constraints(N: int, r: int) -> RMatrix:
    """Full constraint matrix on the monomial coefficient vector."""
    if r < 1 or N < r:
        raise ValueError(f"invalid weight/depth ({N}, {r})")
    rows, monomials = _constraint_rows_int(N, r)
    if not rows:
        rows = [[0] * len(monomials)] if monomials else [[]]
    return RMatrix(rows)


def solve(N: int, r: int) -> SolutionSpace:
    """Deterministic reduced-echelon basis of the solution space."""
    if r < 1 or N < r:
        raise ValueError(f"invalid weight/depth ({N}, {r})")
    rows, monomials = _constraint_rows_int(N, r)
    vectors = nullspace_int(rows, len(monomials))
    basis = []
    for vec in vectors:
        body = Poly(r, {m: c for m, c in zip(monomials, vec) if c})
        basis.append(DepthPoly(r, N, body))
    return SolutionSpace(N, r, basis)


def dimension(N: int, r: int) -> int:
    """dim of the solution space; certifies zero via a modular full-rank
    check (a rank lower bound) before falling back to the exact solver."""
    rows, monomials = _constraint_rows_int(N, r)
    ncols = len(monomials)
    if ncols == 0:
        return 0
    if rows and full_rank_certificate(rows, ncols):
        return 0
    return len(nullspace_int(rows, ncols))


def membership_test(f: DepthPoly) -> bool:
    """True iff f satisfies every linearized double shuffle constraint at
    its own weight and depth."""
    r = f.depth
    body = f.body
    if r == 0:
        return body.is_zero()
    if body.is_zero():
        return True
    if r == 1:
        return f.weight % 2 == 1 and f.weight >= 3
    sharp = partial_sum_transform(body)
    for k in range(1, r):
        arg_sum = Poly.zero(r)
        sharp_sum = Poly.zero(r)
        for seq in _label_shuffles(k, r):
            perm = [seq[i] - 1 for i in range(r)]
            arg_sum = arg_sum + body.permute_variables(perm)
            sharp_sum = sharp_sum + sharp.permute_variables(perm)
        if not arg_sum.is_zero() or not sharp_sum.is_zero():
            return False
    return True


def dims_table(max_weight: int, max_depth: int) -> dict[tuple[int, int], int]:
    """dim of every cell with r <= max_depth and r <= N <= max_weight."""
    out: dict[tuple[int, int], int] = {}
    for r in range(1, max_depth + 1):
        for N in range(r, max_weight + 1):
            out[(N, r)] = dimension(N, r)
    return out


# ---------------------------------------------------------------------
# Span of iterated brackets of depth-1 generators
# ---------------------------------------------------------------------

def _odd_compositions(N: int, r: int):
    """Ordered tuples of r odd parts >= 3 summing to N."""
    if r == 0:
        if N == 0:
            yield ()
        return
    for head in range(3, N - 3 * (r - 1) + 1, 2):
        for rest in _odd_compositions(N - head, r - 1):
            yield (head,) + rest


def iterated_bracket_span(N: int, r: int) -> SolutionSpace:
    """Normalized span of all r-fold brackets of depth-1 generators with
    total weight N.

    Left-normed brackets suffice: by the Jacobi identity they span the same
    subspace as arbitrary bracketings.
    """
    monomials = monomial_basis(N, r)
    col_of = {m: j for j, m in enumerate(monomials)}
    vectors: list[list[Fraction]] = []
    for parts in _odd_compositions(N, r):
        acc = depth1_generator(parts[-1])
        for w in reversed(parts[:-1]):
            acc = bracket(depth1_generator(w), acc)
        if acc.is_zero():
            continue
        vec = [Fraction(0)] * len(monomials)
        for exps, coeff in acc.body.terms.items():
            vec[col_of[exps]] = coeff
        vectors.append(vec)
    basis_vectors = span_rref(vectors, len(monomials))
    basis = []
    for vec in basis_vectors:
        body = Poly(r, {m: c for m, c in zip(monomials, vec) if c})
        basis.append(DepthPoly(r, N, body))
    return SolutionSpace(N, r, basis)


def span_rref(vectors: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Reduced-echelon normalization of a spanning set (deterministic)."""
    from math import gcd

    from .exact_algebra import _echelon_insert, _echelon_to_rref

    echelon: dict[int, list[int]] = {}
    for vec in vectors:
        denom = 1
        for x in vec:
            if x.denominator != 1:
                denom = denom * x.denominator // gcd(denom, x.denominator)
        _echelon_insert(echelon, [int(x * denom) for x in vec])
    rref = _echelon_to_rref(echelon, ncols)
    return [rref[col] for col in sorted(rref)]


# ---------------------------------------------------------------------
# Independent word-level route (cross-representation oracle)
# ---------------------------------------------------------------------

def _binary_words(N: int, r: int) -> list[tuple[int, ...]]:
    words = []
    for ones in itertools.combinations(range(N), r):
        word = [0] * N
        for i in ones:
            word[i] = 1
        words.append(tuple(word))
    words.sort()
    return words


def _index_words(N: int, r: int) -> list[tuple[int, ...]]:
    out = []
    for comp in _compositions_positive(N, r):
        out.append(comp)
    return out


def _compositions_positive(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions_positive(total - head, parts - 1):
            yield (head,) + rest


def solve_words(N: int, r: int) -> list[Poly]:
    """Solve the word-level constraints and return reduced polynomials.

    Completely independent of the polynomial constraint assembly: the
    unknowns are coefficients on all weight-N binary words with r ones, the
    shuffle constraints range over all splittings into two nonempty words,
    and the second family shuffles index words.  The output is the list of
    reduced polynomials of the nullspace basis.
    """
    words = _binary_words(N, r)
    ncols = len(words)
    col_of = {w: j for j, w in enumerate(words)}
    row_set: set[tuple[int, ...]] = set()

    if r == 1 and (N % 2 == 0 or N == 1):
        for j in range(ncols):
            row = [0] * ncols
            row[j] = 1
            row_set.add(tuple(row))

    for i in range(1, N):
        for d in range(0, r + 1):
            for u in _binary_words(i, d):
                for v in _binary_words(N - i, r - d):
                    if (i, d, u) > (N - i, r - d, v):
                        continue  # shuffle is symmetric
                    row = [0] * ncols
                    for word, mult in _shuffle_words(u, v):
                        row[col_of[word]] += mult
                    if any(row):
                        row_set.add(tuple(row))

    for l in range(1, r):
        for i in range(l, N - (r - l) + 1):
            for p in _index_words(i, l):
                for q in _index_words(N - i, r - l):
                    if (l, i, p) > (r - l, N - i, q):
                        continue
                    row = [0] * ncols
                    for word, mult in _shuffle_words(p, q):
                        row[col_of[index_word_to_binary(word)]] += mult
                    if any(row):
                        row_set.add(tuple(row))

    rows = [list(row) for row in sorted(row_set)]
    vectors = nullspace_int(rows, ncols)
    out = []
    for vec in vectors:
        ws = WordSum(BINARY, {w: c for w, c in zip(words, vec) if c})
        reduced = Poly.zero(r)
        for word, coeff in ws.terms.items():
            if word and word[0] == 1:
                reduced = reduced + reduced_rep(word).scale(coeff)
        out.append(reduced)
    return out
