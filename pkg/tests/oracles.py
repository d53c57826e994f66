"""Brute-force reference implementations used only by the tests.

Nothing here imports the package, so agreement is evidence of correctness
rather than self-consistency.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def compose(a, b):
    return tuple(a[x - 1] for x in b)


def is_involution(w):
    return all(w[w[x] - 1] == x + 1 for x in range(len(w)))


def involutions(n):
    return [w for w in permutations(range(1, n + 1)) if is_involution(w)]


def partial_injections(n):
    out = []
    for values in product(range(n + 1), repeat=n):
        defined = [v for v in values if v]
        if len(defined) == len(set(defined)):
            out.append(values)
    return out


def partial_compose(a, b):
    """``a∘b`` with 0 as undefined."""
    return tuple(0 if y == 0 else a[y - 1] for y in b)


def partial_involutions(n):
    out = []
    for w in partial_injections(n):
        dom = {i + 1 for i, v in enumerate(w) if v}
        img = {v for v in w if v}
        if dom == img and all(w[w[x - 1] - 1] == x for x in dom):
            out.append(w)
    return out


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first, *rest))
    return out


def standard_tableaux(shape):
    """All SYT of ``shape`` by removing the largest entry from a corner."""
    n = sum(shape)
    if n == 0:
        return [tuple(() for _ in shape)]
    out = []
    for r, length in enumerate(shape):
        if length == 0:
            continue
        below = shape[r + 1] if r + 1 < len(shape) else 0
        if below == length:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        for t in standard_tableaux(tuple(smaller)):
            rows = [list(row) for row in t]
            rows[r].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return out


def det(m):
    """Leibniz expansion; fine for the tiny matrices used here."""
    k = len(m)
    total = Fraction(0)
    for perm in permutations(range(k)):
        inversions = sum(1 for i, j in combinations(range(k), 2) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(k):
            term *= m[i][perm[i]]
        total += term
    return total


def rank_by_minors(rows):
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    for k in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                if det([[rows[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def sign(pi):
    n = len(pi)
    return -1 if sum(1 for i, j in combinations(range(n), 2) if pi[i] > pi[j]) % 2 else 1


def cycle_type(pi):
    seen, lengths = set(), []
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = pi[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def standard_rep_s3(pi):
    """The 2-dim irreducible of S_3: the permutation action on ``x1+x2+x3 = 0``.

    Basis ``e1 - e2``, ``e2 - e3``; returns a 2x2 list of integers.
    """
    basis = [(1, -1, 0), (0, 1, -1)]

    def act(v):
        out = [0, 0, 0]
        for i, c in enumerate(v):
            out[pi[i] - 1] += c
        return out

    cols = []
    for v in basis:
        x = act(v)
        # x = a(e1-e2) + b(e2-e3): a = x1, b = x1 + x2
        cols.append((x[0], x[0] + x[1]))
    return [[cols[c][r] for c in range(2)] for r in range(2)]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def commutant_dim_dense(mats):
    """Null space of the Sylvester system by rank over Q (dense, small sizes)."""
    d = len(mats[0])
    rows = []
    for m in mats:
        for i in range(d):
            for j in range(d):
                row = [Fraction(0)] * (d * d)
                for k in range(d):
                    row[i * d + k] += m[k][j]
                    row[k * d + j] -= m[i][k]
                rows.append(row)
    return d * d - gauss_rank(rows)


def gauss_rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def set_partitions(n):
    if n == 0:
        return [[]]
    out = []
    for p in set_partitions(n - 1):
        for k in range(len(p)):
            out.append(p[:k] + [p[k] | {n}] + p[k + 1:])
        out.append(p + [{n}])
    return out


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb_ in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb_
    return {e: c for e, c in out.items() if c}


def frobenius_character(lam, mu):
    """chi^lam at cycle type mu: coefficient of x^(lam + delta) in a_delta * p_mu."""
    ell = len(lam)
    delta = tuple(range(ell - 1, -1, -1))
    vandermonde = {}
    for perm in permutations(range(ell)):
        exps = tuple(delta[perm[i]] for i in range(ell))
        vandermonde[exps] = sign(tuple(p + 1 for p in perm))
    poly = vandermonde
    for part in mu:
        power_sum = {tuple(part if j == i else 0 for j in range(ell)): 1 for i in range(ell)}
        poly = _poly_mul(poly, power_sum)
    return poly.get(tuple(l + d for l, d in zip(lam, delta)), 0)


def _longest_decreasing(seq):
    best = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] > seq[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def rs_shape_greene(w):
    """RS shape via Greene: the first k rows hold the largest union of k increasing subsequences."""
    n = len(w)
    sums = [0]
    for k in range(1, n + 1):
        best = 0
        for size in range(n, 0, -1):
            if any(_longest_decreasing([w[i] for i in idx]) <= k for idx in combinations(range(n), size)):
                best = size
                break
        sums.append(best)
        if best == n:
            break
    return tuple(b - a for a, b in zip(sums, sums[1:]) if b - a)
