"""Permutations, partial injections, partitions, tableaux and S_n characters.

Conventions used throughout the package:

* A permutation of ``{1..n}`` is a tuple in one-line notation, ``p[i-1] = p(i)``.
* A partial injection is a tuple of length ``n`` with ``0`` marking an
  undefined point.  A permutation is a partial injection with full domain.
* Composition is right-to-left: ``compose(a, b)`` applies ``b`` first, so
  ``compose(pi, compose(w, inverse(pi)))`` is the conjugate ``pi w pi^-1``.
* Integer partitions are weakly decreasing tuples of positive ints.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Iterator

Permutation = tuple[int, ...]
PartialInjection = tuple[int, ...]
Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

UNDEFINED = 0


# -- permutations -----------------------------------------------------------

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(a: PartialInjection, b: PartialInjection) -> PartialInjection:
    """``a∘b``: apply ``b`` then ``a``.  Works for permutations and partial maps."""
    if len(a) != len(b):
        raise ValueError("composing maps on different sets")
    return tuple(UNDEFINED if x == UNDEFINED else a[x - 1] for x in b)


def inverse(p: PartialInjection) -> PartialInjection:
    inv = [UNDEFINED] * len(p)
    for i, x in enumerate(p, start=1):
        if x != UNDEFINED:
            inv[x - 1] = i
    return tuple(inv)


def conjugate(pi: Permutation, w: PartialInjection) -> PartialInjection:
    """``pi w pi^-1``.  For a partial ``w`` the domain moves to ``pi(dom w)``."""
    out = [UNDEFINED] * len(w)
    for x, y in enumerate(w, start=1):
        if y != UNDEFINED:
            out[pi[x - 1] - 1] = pi[y - 1]
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Permutation:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def simple_transposition(n: int, i: int) -> Permutation:
    """``s_i = (i, i+1)``, ``1 <= i < n``."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not defined in S_{n}")
    return transposition(n, i, i + 1)


def from_cycles(n: int, *cycles: tuple[int, ...]) -> Permutation:
    p = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b
    return tuple(p)


def all_permutations(n: int) -> list[Permutation]:
    return list(permutations(range(1, n + 1)))


def inversion_set(pi: Permutation) -> frozenset[tuple[int, int]]:
    n = len(pi)
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pi[i - 1] > pi[j - 1]
    )


def sign(pi: Permutation) -> int:
    return -1 if len(inversion_set(pi)) % 2 else 1


def is_involution(w: PartialInjection) -> bool:
    """True when ``dom w = im w`` and ``w∘w`` is the identity there."""
    return all(y == UNDEFINED or w[y - 1] == x for x, y in enumerate(w, start=1))


def support(w: Permutation) -> frozenset[int]:
    return frozenset(x for x, y in enumerate(w, start=1) if y != x)


def pair_set(w: PartialInjection) -> frozenset[tuple[int, int]]:
    """The 2-cycles ``(i, j)``, ``i < j``, of an involution."""
    if not is_involution(w):
        raise ValueError(f"{w} is not an involution")
    return frozenset((x, y) for x, y in enumerate(w, start=1) if y != UNDEFINED and x < y)


def inv_w(w: PartialInjection, pi: Permutation) -> int:
    """``|Inv(pi) ∩ Pair(w)|``.

    Only the pairs of ``w`` are inspected, so this is cheaper than building
    the full inversion set.
    """
    return sum(1 for i, j in pair_set(w) if pi[i - 1] > pi[j - 1])


def two_cycle_count(w: PartialInjection) -> int:
    return sum(1 for x, y in enumerate(w, start=1) if y != UNDEFINED and x < y)


def cycle_type(pi: Permutation) -> Partition:
    seen = set()
    lengths = []
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


def class_representative(mu: Partition) -> Permutation:
    """A permutation of cycle type ``mu`` with consecutive cycles."""
    n = sum(mu)
    cycles, start = [], 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(n, *cycles)


def centralizer_size(mu: Partition) -> int:
    """``z_mu = prod_i i^{m_i} m_i!``."""
    return prod(i ** m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_size(mu)


def enumerate_involutions_sn(n: int) -> list[Permutation]:
    """All involutions of S_n ordered by (number of 2-cycles, one-line form).

    Built directly by choosing disjoint pairs, so the cost is proportional
    to the output rather than to ``n!``.
    """
    out: list[Permutation] = []

    def extend(p: list[int], free: list[int]) -> None:
        if not free:
            out.append(tuple(p))
            return
        first, rest = free[0], free[1:]
        extend(p, rest)
        for k, partner in enumerate(rest):
            p[first - 1], p[partner - 1] = partner, first
            extend(p, rest[:k] + rest[k + 1:])
            p[first - 1], p[partner - 1] = first, partner

    extend(list(range(1, n + 1)), list(range(1, n + 1)))
    return sorted(out, key=lambda w: (two_cycle_count(w), w))


def involution_count(n: int) -> int:
    """``t_n`` via ``t_n = t_{n-1} + (n-1) t_{n-2}``."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else 1


# -- partial injections -----------------------------------------------------

def domain(x: PartialInjection) -> frozenset[int]:
    return frozenset(i for i, y in enumerate(x, start=1) if y != UNDEFINED)


def image(x: PartialInjection) -> frozenset[int]:
    return frozenset(y for y in x if y != UNDEFINED)


def rank(x: PartialInjection) -> int:
    return sum(1 for y in x if y != UNDEFINED)


def is_partial_injection(x) -> bool:
    n = len(x)
    vals = [y for y in x if y != UNDEFINED]
    return all(1 <= y <= n for y in vals) and len(set(vals)) == len(vals)


def partial_identity(n: int, subset) -> PartialInjection:
    """The idempotent ``e_A``: identity on ``A``, undefined elsewhere."""
    a = set(subset)
    return tuple(i if i in a else UNDEFINED for i in range(1, n + 1))


def enumerate_partial_injections(n: int) -> list[PartialInjection]:
    """All of IS_n in lexicographic order of the array form (0 sorts first)."""
    out = []
    for images in product(range(n + 1), repeat=n):
        vals = [y for y in images if y]
        if len(set(vals)) == len(vals):
            out.append(images)
    return out


def isn_order(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def isn_involution_key(w: PartialInjection) -> tuple:
    """Canonical basis order: larger domains first, then 2-cycles, then array."""
    return (-rank(w), two_cycle_count(w), w)


def enumerate_involutions_isn(n: int) -> list[PartialInjection]:
    """Involutions of IS_n: ``dom w = im w`` and ``w^2 = e_dom``."""
    out = []
    for mask in product((False, True), repeat=n):
        a = [i for i, keep in zip(range(1, n + 1), mask) if keep]
        for w in enumerate_involutions_sn(len(a)):
            p = [UNDEFINED] * n
            for src, dst in zip(a, w):
                p[src - 1] = a[dst - 1]
            out.append(tuple(p))
    return sorted(out, key=isn_involution_key)


def restrict(pi: Permutation, subset) -> PartialInjection:
    """``pi`` restricted to ``subset`` (that is, ``pi e_A``)."""
    a = set(subset)
    return tuple(y if i in a else UNDEFINED for i, y in enumerate(pi, start=1))


# -- set partitions ---------------------------------------------------------

def set_partitions(n: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Set partitions of ``{1..n}`` via restricted growth strings.

    Blocks are ordered by their least element.
    """
    def rgs(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from rgs(prefix + [b], max(top, b))

    if n == 0:
        yield ()
        return
    for s in rgs([0], 0):
        blocks: dict[int, set[int]] = {}
        for i, b in enumerate(s, start=1):
            blocks.setdefault(b, set()).add(i)
        yield tuple(frozenset(blocks[b]) for b in sorted(blocks))


# -- integer partitions, tableaux, characters -------------------------------

def integer_partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return len(integer_partitions(n))


def is_partition(lam) -> bool:
    return all(p > 0 for p in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def conjugate_partition(lam: Partition) -> Partition:
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0] if lam else 0))


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook lengths)."""
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    conj = conjugate_partition(lam)
    hooks = prod(
        lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])
    )
    return factorial(sum(lam)) // hooks


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        total += (-1) ** height * _mn((beta - {b}) | {c}, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi^lam`` on the class of cycle type ``mu``.

    Murnaghan–Nakayama: border strips are removed as moves on the beta-set
    ``{lam_i + (l - i)}``; the leg length of a strip is the number of beads
    jumped over.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    length = len(lam)
    beta = frozenset(part + length - 1 - i for i, part in enumerate(lam))
    return _mn(beta, tuple(sorted(mu, reverse=True)))


def rs_insert(w: Permutation) -> tuple[Tableau, Tableau]:
    """Robinson–Schensted row insertion; returns (insertion, recording)."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            current = p_rows[row]
            bump = next((k for k, y in enumerate(current) if y > x), None)
            if bump is None:
                current.append(x)
                q_rows[row].append(step)
                break
            current[bump], x = x, current[bump]
            row += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def is_standard(t: Tableau) -> bool:
    entries = sorted(x for r in t for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    rows_ok = all(a < b for r in t for a, b in zip(r, r[1:]))
    cols_ok = all(
        t[i][j] < t[i + 1][j] for i in range(len(t) - 1) for j in range(len(t[i + 1]))
    )
    return rows_ok and cols_ok and is_partition(tableau_shape(t))


def odd_column_count(lam: Partition) -> int:
    return sum(1 for c in conjugate_partition(lam) if c % 2)
