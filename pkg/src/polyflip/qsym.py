"""Graded verification that the admissible monomials complement the ideal
generated by the fundamental quasisymmetric polynomials.

The check is exact integer linear algebra per degree: the ideal's degree-d
component (rows mu * F_c over compositions with 1 <= |c| <= d) must have
rank #monomials - #admissible vectors of that degree, and appending one
unit row per admissible vector must reach full rank.
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd

from .dyck import enumerate_compositions, enumerate_dyck, is_m_composition
from .errors import SizeGuardExceeded, VerificationFailure
from .polynomials import SparsePoly

DEFAULT_MAX_COLUMNS = 4000


def word_of_composition(m: int, c) -> list[tuple[int, int]]:
    """(letter, block) pairs, letters expanded with multiplicity per block."""
    if not is_m_composition(m, c):
        raise ValueError(f"{c!r} is not a valid block word for m={m}")
    word = []
    for b in range(len(c) // m):
        for r in range(1, m + 1):
            word.extend([(r, b + 1)] * c[m * b + r - 1])
    return word


@lru_cache(maxsize=None)
def fundamental_qsym(m: int, c: tuple, n: int) -> SparsePoly:
    """Sum over index maps of the block word: weakly increasing inside a
    block, strictly increasing from block to block, values in 1..n.

    Zero when the word has more blocks than available values; all nonzero
    coefficients are 1.
    """
    word = word_of_composition(m, c)
    blocks = len(c) // m
    nvars = m * n
    poly = SparsePoly.zero(nvars)
    if blocks > n:
        return poly

    sizes = []
    letters = []
    for b in range(1, blocks + 1):
        chunk = [w for w in word if w[1] == b]
        sizes.append(len(chunk))
        letters.append([r for r, _ in chunk])

    def rec(b: int, lowest: int, exponent: tuple):
        if b == blocks:
            poly.terms[exponent] = poly.terms.get(exponent, 0) + 1
            return
        for values in combinations_with_replacement(
            range(lowest, n + 1), sizes[b]
        ):
            exp = list(exponent)
            for r, k in zip(letters[b], values):
                exp[m * (k - 1) + r - 1] += 1
            rec(b + 1, values[-1] + 1, tuple(exp))

    rec(0, 1, (0,) * nvars)
    assert all(v == 1 for v in poly.terms.values())
    return poly


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree d, lexicographic."""
    out = []
    exp = [0] * nvars

    def rec(pos: int, left: int):
        if pos == nvars - 1:
            exp[pos] = left
            out.append(tuple(exp))
            exp[pos] = 0
            return
        for x in range(left + 1):
            exp[pos] = x
            rec(pos + 1, left - x)
        exp[pos] = 0

    if nvars == 0:
        return [()] if d == 0 else []
    rec(0, d)
    return out


def ideal_graded_matrix(
    m: int, n: int, d: int, max_columns: int = DEFAULT_MAX_COLUMNS
) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Degree-d rows of the ideal in the degree-d monomial basis."""
    nvars = m * n
    ncols = comb(nvars + d - 1, d) if d else 1
    if ncols > max_columns:
        raise SizeGuardExceeded(
            f"{ncols} monomial columns exceed the limit {max_columns}"
        )
    monomials = monomials_of_degree(nvars, d)
    col = {e: i for i, e in enumerate(monomials)}
    rows = []
    for c in enumerate_compositions(m, d):
        f = fundamental_qsym(m, c, n)
        if f.is_zero():
            continue
        w = sum(c)
        for mu in monomials_of_degree(nvars, d - w):
            row = [0] * len(monomials)
            for e, coef in f.terms.items():
                shifted = tuple(a + b for a, b in zip(e, mu))
                row[col[shifted]] += coef
            rows.append(row)
    return monomials, rows


def integer_matrix_rank(rows) -> int:
    """Rank by fraction-free elimination; exact over the integers."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][c]
        for r in range(rank + 1, len(mat)):
            x = mat[r][c]
            if not x:
                continue
            row = [p * a - x * b for a, b in zip(mat[r], mat[rank])]
            g = 0
            for a in row:
                g = gcd(g, a)
            mat[r] = [a // g for a in row] if g else row
        rank += 1
        if rank == len(mat):
            break
    return rank


def verify_basis_graded(
    m: int, n: int, max_columns: int = DEFAULT_MAX_COLUMNS
) -> dict:
    """Per-degree certificate for sizes 0..n; raises VerificationFailure
    with the offending degree on any mismatch."""
    dyck_by_degree: dict[int, list[tuple[int, ...]]] = {}
    for v in enumerate_dyck(m, n):
        dyck_by_degree.setdefault(sum(v), []).append(v)
    table = []
    for d in range(n + 1):
        monomials, rows = ideal_graded_matrix(m, n, d, max_columns)
        ideal_rank = integer_matrix_rank(rows)
        admissible = dyck_by_degree.get(d, [])
        expected = len(monomials) - len(admissible)
        if ideal_rank != expected:
            raise VerificationFailure(
                f"degree {d}: ideal rank {ideal_rank}, expected {expected}"
            )
        col = {e: i for i, e in enumerate(monomials)}
        unit_rows = []
        for v in admissible:
            row = [0] * len(monomials)
            row[col[v]] = 1
            unit_rows.append(row)
        full = integer_matrix_rank(rows + unit_rows)
        if full != len(monomials):
            raise VerificationFailure(
                f"degree {d}: admissible monomials do not complete the ideal "
                f"({full} of {len(monomials)})"
            )
        if d == n and ideal_rank != len(monomials):
            raise VerificationFailure(
                f"degree {n}: ideal component not full ({ideal_rank} of "
                f"{len(monomials)})"
            )
        table.append(
            {
                "degree": d,
                "monomials": len(monomials),
                "ideal_rank": ideal_rank,
                "admissible": len(admissible),
            }
        )
    return {"m": m, "n": n, "degrees": table}
