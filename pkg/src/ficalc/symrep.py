"""Exact character theory of the symmetric groups.

Partitions are weakly decreasing tuples of positive ints; the canonical
ordering everywhere is reverse-lexicographic, so ``partitions_of(4)`` starts
at ``(4,)`` and ends at ``(1, 1, 1, 1)``.  Class functions are value tuples
aligned with that ordering (conjugacy classes = cycle types = partitions).

Irreducible characters come from the rim-hook (beta-set) recursion; Kostka
numbers from exhaustive semistandard tableau enumeration; Specht matrices
from standard polytabloids with Garnir straightening.  These are independent
routes, which the test-suite plays against each other.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinat import permutation_sign, word_from_permutation
from .exactla import Matrix

Partition = tuple[int, ...]


class NotACharacterError(ValueError):
    """A class function failed to decompose with non-negative integer multiplicities."""


class StableRangeError(ValueError):
    """An operation was requested below its stable range."""


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {lam}")
    return lam


@functools.lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(m: int, maxp: int):
        if m == 0:
            yield ()
            return
        for first in range(min(m, maxp), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def class_size(cycle_type: Partition) -> int:
    """Size of the conjugacy class with the given cycle type."""
    n = sum(cycle_type)
    z = 1
    for length, mult in _multiplicities(cycle_type).items():
        z *= length**mult * math.factorial(mult)
    return math.factorial(n) // z


def _multiplicities(parts: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


@dataclass(frozen=True)
class ClassFunction:
    """A rational class function on the symmetric group of degree n.

    ``values[i]`` is the value on the class whose cycle type is
    ``partitions_of(n)[i]``.
    """

    n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != len(partitions_of(self.n)):
            raise ValueError("one value per conjugacy class required")

    def __call__(self, cycle_type) -> Fraction:
        ct = check_partition(cycle_type) if cycle_type else ()
        return self.values[partitions_of(self.n).index(ct)]

    @property
    def dimension(self) -> Fraction:
        """Value on the identity class (1^n)."""
        return self.values[-1] if self.n > 0 else self.values[0]


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValueError("class functions live on different groups")
    total = Fraction(0)
    for ct, a, b in zip(partitions_of(f.n), f.values, g.values):
        total += class_size(ct) * a * b
    return total / math.factorial(f.n)


# ---------------------------------------------------------------------------
# shapes, hooks, standard tableaux
# ---------------------------------------------------------------------------


def conjugate_partition(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[list[int]]:
    lam = check_partition(lam)
    conj = conjugate_partition(lam)
    return [
        [(lam[i] - j - 1) + (conj[j] - i - 1) + 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of the given shape, entries 1..n, sorted."""
    lam = check_partition(lam)
    n = sum(lam)

    def build(shape: Partition, n: int):
        if n == 0:
            yield tuple(() for _ in shape) if shape else ()
            return
        for i in range(len(shape)):
            if shape[i] and (i == len(shape) - 1 or shape[i] > shape[i + 1]):
                smaller = tuple(x for x in shape[:i] + (shape[i] - 1,) + shape[i + 1 :])
                trimmed = tuple(x for x in smaller if x)
                for t in build(smaller, n - 1):
                    rows = [tuple(t[r]) if r < len(t) else () for r in range(len(shape))]
                    rows[i] = rows[i] + (n,)
                    yield tuple(rows)

    return sorted(build(lam, n))


def specht_dimension(lam: Partition) -> int:
    """Dimension of the irreducible labelled by ``lam``.

    Computed by the hook length formula and cross-checked against the count
    of standard tableaux.
    """
    lam = check_partition(lam)
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    by_hooks = math.factorial(n) // prod
    by_count = len(standard_tableaux(lam))
    assert by_hooks == by_count, f"hook formula disagrees with tableau count at {lam}"
    return by_hooks


# ---------------------------------------------------------------------------
# Kostka numbers via semistandard tableaux
# ---------------------------------------------------------------------------


def _ssyt_count(lam: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape lam and the given content."""
    rows = len(lam)
    if rows == 0:
        return 1 if not content else 0
    remaining = list(content)
    tableau = [[0] * lam[i] for i in range(rows)]

    cells = [(i, j) for i in range(rows) for j in range(lam[i])]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        lo = 1
        if j > 0:
            lo = max(lo, tableau[i][j - 1])  # weak increase along rows
        if i > 0:
            lo = max(lo, tableau[i - 1][j] + 1)  # strict increase down columns
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            tableau[i][j] = v
            total += fill(idx + 1)
            remaining[v - 1] += 1
        tableau[i][j] = 0
        return total

    return fill(0)


@functools.lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Kostka number: semistandard tableaux of shape lam and content mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("shape and content must have equal size")
    return _ssyt_count(lam, mu)


# ---------------------------------------------------------------------------
# irreducible characters (rim-hook recursion on beta-sets)
# ---------------------------------------------------------------------------


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    padded = lam + (0,) * (length - len(lam))
    return tuple(padded[i] + (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    desc = sorted(beta, reverse=True)
    length = len(desc)
    lam = tuple(desc[i] - (length - 1 - i) for i in range(length))
    return tuple(x for x in lam if x)


@functools.lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    t, rest = mu[0], mu[1:]
    length = max(len(lam), 1)
    beta = _beta_set(lam, length)
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - t
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = tuple(sorted((bset - {b}) | {c}))
        total += (-1) ** height * _mn(_partition_from_beta(new_beta), rest)
    return total


def irreducible_character(lam: Partition, cycle_type: Partition) -> int:
    """Character value of the irreducible ``lam`` on the class ``cycle_type``."""
    lam = check_partition(lam)
    ct = check_partition(cycle_type)
    if sum(lam) != sum(ct):
        raise ValueError("partition and cycle type must have equal size")
    return _mn(lam, tuple(sorted(ct, reverse=True)))


def irreducible_class_function(lam: Partition) -> ClassFunction:
    n = sum(lam)
    return ClassFunction(n, tuple(irreducible_character(lam, ct) for ct in partitions_of(n)))


@functools.lru_cache(maxsize=None)
def character_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows = partitions (revlex), columns = classes (revlex)."""
    parts = partitions_of(n)
    return tuple(tuple(irreducible_character(lam, ct) for ct in parts) for lam in parts)


def young_permutation_character(mu: Partition) -> ClassFunction:
    """Character of the permutation module on ordered set partitions of content mu."""
    mu = check_partition(mu)
    n = sum(mu)

    def fixed(cycle_type: Partition) -> int:
        cycles = list(cycle_type)

        @functools.lru_cache(maxsize=None)
        def count(idx: int, caps: tuple[int, ...]) -> int:
            if idx == len(cycles):
                return 1 if all(c == 0 for c in caps) else 0
            c = cycles[idx]
            total = 0
            for b in range(len(caps)):
                if caps[b] >= c:
                    total += count(idx + 1, caps[:b] + (caps[b] - c,) + caps[b + 1 :])
            return total

        return count(0, mu)

    return ClassFunction(n, tuple(fixed(ct) for ct in partitions_of(n)))


@dataclass
class RepDecomposition:
    """Multiplicities of irreducibles in a virtual character."""

    n: int
    multiplicities: dict[Partition, int]

    def nonzero(self) -> dict[Partition, int]:
        return {lam: m for lam, m in self.multiplicities.items() if m}


def decompose_class_function(f: ClassFunction) -> RepDecomposition:
    """Decompose into irreducibles; raises unless all multiplicities are in Z>=0.

    The reconstruction identity (the multiplicities re-sum to the input) is
    asserted before returning.
    """
    mults: dict[Partition, int] = {}
    for lam in partitions_of(f.n):
        m = inner_product(f, irreducible_class_function(lam))
        if m.denominator != 1 or m < 0:
            raise NotACharacterError(
                f"multiplicity of {lam} is {m}, not a non-negative integer"
            )
        mults[lam] = int(m)
    # reconstruction identity
    for idx, ct in enumerate(partitions_of(f.n)):
        total = sum(m * irreducible_character(lam, ct) for lam, m in mults.items() if m)
        assert total == f.values[idx], "decomposition failed to reconstruct input"
    return RepDecomposition(f.n, mults)


# ---------------------------------------------------------------------------
# Specht matrices: standard polytabloids + Garnir straightening
# ---------------------------------------------------------------------------

Tableau = tuple[tuple[int, ...], ...]


def _columns(t: Tableau) -> list[list[int]]:
    width = len(t[0]) if t else 0
    return [[t[i][j] for i in range(len(t)) if j < len(t[i])] for j in range(width)]


def _from_columns(shape: Partition, cols: list[list[int]]) -> Tableau:
    return tuple(tuple(cols[j][i] for j in range(shape[i])) for i in range(len(shape)))


def _sort_columns(shape: Partition, t: Tableau) -> tuple[Tableau, int]:
    """Sort each column ascending; returns (tableau, sign of the sorting)."""
    sign = 1
    cols = []
    for col in _columns(t):
        order = sorted(range(len(col)), key=lambda i: col[i])
        sign *= permutation_sign(tuple(order))
        cols.append(sorted(col))
    return _from_columns(shape, cols), sign


def _first_row_descent(t: Tableau) -> tuple[int, int] | None:
    for i, row in enumerate(t):
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return i, j
    return None


def _garnir_terms(shape: Partition, t: Tableau, i: int, j: int):
    """Expand a row descent at (i, j): yields (tableau, coefficient) terms.

    Uses the relation: the signed sum of polytabloids over all splittings of
    A u B (A = column j from row i down, B = column j+1 from the top to row i)
    vanishes, so the identity splitting can be rewritten in the others.
    """
    cols = _columns(t)
    a = cols[j][i:]
    b = cols[j + 1][: i + 1]
    union = sorted(a + b)
    pos = {v: p for p, v in enumerate(union)}
    original = a + b
    for a_new in itertools.combinations(union, len(a)):
        if list(a_new) == a:
            continue
        b_new = sorted(set(union) - set(a_new))
        rearranged = list(a_new) + b_new
        perm = [0] * len(union)
        for p in range(len(union)):
            perm[pos[original[p]]] = pos[rearranged[p]]
        sign = permutation_sign(tuple(perm))
        new_cols = [list(c) for c in cols]
        new_cols[j][i:] = list(a_new)
        new_cols[j + 1][: i + 1] = b_new
        yield _from_columns(shape, new_cols), -sign


@functools.lru_cache(maxsize=None)
def _straighten(shape: Partition, t: Tableau) -> tuple[tuple[Tableau, int], ...]:
    """Express the polytabloid of an arbitrary filling in the standard basis."""
    t, sign = _sort_columns(shape, t)
    descent = _first_row_descent(t)
    if descent is None:
        return ((t, sign),)
    out: dict[Tableau, int] = {}
    for term, coeff in _garnir_terms(shape, t, *descent):
        for std, c in _straighten(shape, term):
            total = out.get(std, 0) + sign * coeff * c
            if total:
                out[std] = total
            else:
                out.pop(std, None)
    return tuple(sorted(out.items()))


def _apply_to_entries(t: Tableau, perm: tuple[int, ...]) -> Tableau:
    """Apply a permutation (0-based tuple) to the entries (1-based) of t."""
    return tuple(tuple(perm[x - 1] + 1 for x in row) for row in t)


def specht_matrices(lam: Partition) -> list[Matrix]:
    """Integer matrices of the adjacent transpositions on the Specht module.

    Basis: standard polytabloids in sorted tableau order.  Entry (r, c) is
    the coefficient of standard tableau r in the straightening of (generator
    applied to standard tableau c).
    """
    lam = check_partition(lam)
    n = sum(lam)
    basis = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(basis)}
    d = len(basis)
    mats = []
    for g in range(1, n):
        perm = list(range(n))
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
        perm = tuple(perm)
        entries = [[0] * d for _ in range(d)]
        for c, t in enumerate(basis):
            for std, coeff in _straighten(lam, _apply_to_entries(t, perm)):
                entries[index[std]][c] = coeff
        mats.append(Matrix.from_rows(entries, d))
    return mats


class SpechtRepresentation:
    """Matrices of arbitrary permutations on the Specht module of shape lam."""

    def __init__(self, lam: Partition):
        self.lam = check_partition(lam)
        self.n = sum(self.lam)
        self.dimension = specht_dimension(self.lam) if self.lam or self.n == 0 else 1
        self.generators = specht_matrices(self.lam)
        self._cache: dict[tuple[int, ...], Matrix] = {}

    def matrix(self, perm: tuple[int, ...]) -> Matrix:
        if len(perm) != self.n:
            raise ValueError("permutation degree mismatch")
        m = self._cache.get(perm)
        if m is None:
            m = Matrix.identity(self.dimension)
            for i in word_from_permutation(perm):
                m = m @ self.generators[i - 1]
            self._cache[perm] = m
        return m


# ---------------------------------------------------------------------------
# padded partitions and the layer-character calculus
# ---------------------------------------------------------------------------


def weight(lam: Partition) -> int:
    """Size minus first part: the number of boxes below the first row."""
    lam = check_partition(lam)
    return sum(lam) - (lam[0] if lam else 0)


def pad_partition(lam: Partition, k: int) -> Partition:
    """The padded partition (k - |lam|, lam); defined only for k >= lam_1 + |lam|."""
    lam = check_partition(lam)
    size = sum(lam)
    if k < (lam[0] if lam else 0) + size:
        raise ValueError(f"padding of {lam} undefined at k={k}: need k >= lam_1 + |lam|")
    if k == size:
        return lam
    return (k - size,) + lam


@dataclass(frozen=True)
class PaddedPartition:
    """A partition padded with a long first row to total size k."""

    lam: Partition
    k: int

    def __post_init__(self):
        object.__setattr__(self, "lam", check_partition(self.lam))
        pad_partition(self.lam, self.k)  # validates the range

    @property
    def partition(self) -> Partition:
        return pad_partition(self.lam, self.k)


def unpad_partition(lam: Partition) -> Partition:
    """Strip the first row: the tail (lam_2, lam_3, ...)."""
    lam = check_partition(lam)
    return lam[1:]


def gn_character(n: int, k: int, lam: Partition) -> int:
    """Multiplicity of the irreducible ``lam`` in the weight-n layer at level k.

    Computed as the alternating binomial sum of Kostka numbers
    sum_i (-1)^(n-i) C(n,i) K_{lam, (k-i, 1^i)}; requires k >= 2n.
    """
    lam = check_partition(lam)
    if sum(lam) != k:
        raise ValueError("lam must be a partition of k")
    if k < 2 * n:
        raise StableRangeError(f"layer character needs k >= 2n (got n={n}, k={k})")
    total = 0
    for i in range(n + 1):
        mu = tuple(x for x in (k - i,) + (1,) * i if x)
        total += (-1) ** (n - i) * math.comb(n, i) * kostka(lam, mu)
    return total


def gn_dimension(n: int, k: int) -> int:
    """Dimension of the weight-n layer at level k, for k >= 2n - 1.

    Two routes are computed and must agree: the alternating sum of falling
    factorials, and the sum over partitions mu of n of (standard tableau
    count) x (dimension of the padded irreducible), padded terms below their
    defining range contributing zero.
    """
    if n < 0 or k < 0:
        raise ValueError("n, k must be non-negative")
    if k < 2 * n - 1:
        raise StableRangeError(f"dimension formula needs k >= 2n - 1 (got n={n}, k={k})")
    alternating = sum(
        (-1) ** (n - i) * math.comb(n, i) * (math.factorial(k) // math.factorial(k - i))
        for i in range(n + 1)
        if i <= k
    )
    weighted = 0
    for mu in partitions_of(n):
        first = mu[0] if mu else 0
        if k >= first + n:
            weighted += specht_dimension(mu) * specht_dimension(pad_partition(mu, k))
    assert alternating == weighted, (
        f"internal inconsistency: layer dimension routes disagree at (n={n}, k={k}): "
        f"{alternating} != {weighted}"
    )
    return alternating


def kostka_reduction(lam: Partition, i: int) -> tuple[int, int]:
    """Both sides of the hook-content Kostka reduction at shape lam, index i.

    lhs = K_{lam, (k-i, 1^i)} with k = |lam|; rhs = C(i, lam_1 - k + i) times
    the number of standard tableaux of the tail of lam.  Requires
    k - lam_1 <= k - i (i.e. i <= lam_1) and i <= k - 1 so the content is a
    partition.
    """
    lam = check_partition(lam)
    if not lam:
        raise ValueError("lam must be nonempty")
    k = sum(lam)
    if i < 0 or i > k - 1:
        raise ValueError(f"need 0 <= i <= {k - 1} for a valid content")
    if k - lam[0] > k - i:
        raise StableRangeError(
            f"reduction needs k - lam_1 <= k - i (lam_1={lam[0]}, i={i})"
        )
    mu = tuple(x for x in (k - i,) + (1,) * i if x)
    lhs = kostka(lam, mu)
    tail = lam[1:]
    w = k - lam[0]
    choose = lam[0] - k + i
    if choose < 0 or choose > i:
        rhs = 0
    else:
        tail_count = kostka(tail, (1,) * w) if w else 1
        rhs = math.comb(i, choose) * tail_count
    return lhs, rhs
