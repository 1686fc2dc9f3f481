"""Finitely truncated modules over the category of finite sets and injections.

A module is stored as a window of symmetric-group representations
``E(0), ..., E(K)`` glued by one-step inclusion maps: for each degree the
k-1 adjacent-transposition matrices, and for each k < K the matrix of the
standard inclusion k -> k+1.  Every structure map E(f) is recovered by
factoring f as (permutation) after (standard inclusion chain).

Matrices are kept column-sparse; the constructors produce permutation-like
columns, and all downstream pipelines only ever apply them to sparse vectors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..combinat import (
    Injection,
    factor_injection,
    word_from_permutation,
)
from ..exactla import Matrix, SparseMatrix
from ..symrep import Partition, SpechtRepresentation, check_partition


class WindowError(ValueError):
    """An operation needs degrees beyond the stored window."""


class NotStabilizedError(RuntimeError):
    """The coefficient scan ran out of window before two stages agreed."""

    def __init__(self, message: str, trajectory):
        super().__init__(message)
        self.trajectory = trajectory


class InstabilityError(RuntimeError):
    """An induced map failed a well-definedness check."""


class ModuleFormatError(ValueError):
    """A serialized module violates the interchange schema."""


class FIModule:
    """A window of an injection-functor: dims, transpositions, inclusions."""

    def __init__(
        self,
        name: str,
        max_degree: int,
        generation_bound: int,
        dims,
        transpositions,
        inclusions,
    ):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        if not 0 <= generation_bound <= max_degree:
            raise ValueError("generation_bound must lie inside the window")
        self.name = str(name)
        self.max_degree = int(max_degree)
        self.generation_bound = int(generation_bound)
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != max_degree + 1 or any(d < 0 for d in self.dims):
            raise ValueError("dims must list one non-negative dimension per degree 0..K")
        self.transpositions = tuple(tuple(m for m in transpositions[k]) for k in range(max_degree + 1))
        self.inclusions = tuple(inclusions)
        for k, gens in enumerate(self.transpositions):
            if len(gens) != max(k - 1, 0):
                raise ValueError(f"degree {k} needs {max(k-1,0)} transposition matrices")
            for i, g in enumerate(gens):
                if (g.rows, g.cols) != (self.dims[k], self.dims[k]):
                    raise ValueError(f"transposition {i+1} at degree {k} has wrong shape")
        if len(self.inclusions) != max_degree:
            raise ValueError("need one inclusion matrix per degree 0..K-1")
        for k, inc in enumerate(self.inclusions):
            if (inc.rows, inc.cols) != (self.dims[k + 1], self.dims[k]):
                raise ValueError(f"inclusion at degree {k} has wrong shape")
        self._word_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._coinv_cache: dict = {}

    # -- evaluation ------------------------------------------------------
    def dim(self, k: int) -> int:
        self._check_degree(k)
        return self.dims[k]

    def _check_degree(self, k: int) -> None:
        if not 0 <= k <= self.max_degree:
            raise WindowError(f"degree {k} outside window 0..{self.max_degree}")

    def generator(self, k: int, i: int) -> SparseMatrix:
        """Adjacent transposition i (1-based) at degree k."""
        self._check_degree(k)
        if not 1 <= i <= k - 1:
            raise ValueError(f"generator index {i} out of range at degree {k}")
        return self.transpositions[k][i - 1]

    def inclusion(self, k: int) -> SparseMatrix:
        """Standard inclusion k -> k+1."""
        if not 0 <= k < self.max_degree:
            raise WindowError(f"no inclusion from degree {k} inside window")
        return self.inclusions[k]

    def _word(self, perm: tuple[int, ...]) -> tuple[int, ...]:
        w = self._word_cache.get(perm)
        if w is None:
            w = tuple(word_from_permutation(perm))
            self._word_cache[perm] = w
        return w

    def apply_permutation(self, k: int, perm: tuple[int, ...], vec: dict) -> dict:
        """Apply E(perm) at degree k to a sparse vector."""
        self._check_degree(k)
        if len(perm) != k:
            raise ValueError("permutation degree mismatch")
        gens = self.transpositions[k]
        # E(s_{w1}) ... E(s_{wm}) applied right factor first
        for i in reversed(self._word(perm)):
            vec = gens[i - 1].apply(vec)
        return vec

    def apply_injection(self, f: Injection, vec: dict) -> dict:
        """Apply E(f) to a sparse vector of degree f.source_size."""
        self._check_degree(f.source_size)
        self._check_degree(f.target_size)
        sigma, _ = factor_injection(f)
        for j in range(f.source_size, f.target_size):
            vec = self.inclusions[j].apply(vec)
        return self.apply_permutation(f.target_size, sigma.values, vec)


def evaluate(module: FIModule, f: Injection) -> Matrix:
    """The dense matrix of E(f)."""
    src, tgt = f.source_size, f.target_size
    cols = [module.apply_injection(f, {b: Fraction(1)}) for b in range(module.dim(src))]
    entries = [Fraction(0)] * (module.dim(tgt) * module.dim(src))
    for j, col in enumerate(cols):
        for i, v in col.items():
            entries[i * module.dim(src) + j] = v
    return Matrix(module.dim(tgt), module.dim(src), entries)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def representable(n: int, max_degree: int) -> FIModule:
    """The injection module of rank n: basis at degree k = injections n -> k.

    The symmetric group acts by postcomposition; inclusions send a basis
    injection to itself viewed in the larger target.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bases = [list(itertools.permutations(range(k), n)) for k in range(max_degree + 1)]
    dims = [len(b) for b in bases]
    index = [{f: i for i, f in enumerate(b)} for b in bases]
    transpositions = []
    for k in range(max_degree + 1):
        gens = []
        for i in range(1, k):
            cols = []
            for f in bases[k]:
                g = tuple((i if v == i - 1 else i - 1 if v == i else v) for v in f)
                cols.append({index[k][g]: 1})
            gens.append(SparseMatrix(dims[k], dims[k], cols))
        transpositions.append(gens)
    inclusions = []
    for k in range(max_degree):
        cols = [{index[k + 1][f]: 1} for f in bases[k]]
        inclusions.append(SparseMatrix(dims[k + 1], dims[k], cols))
    return FIModule(f"representable({n})", max_degree, n, dims, transpositions, inclusions)


def free_module(lam: Partition, max_degree: int) -> FIModule:
    """The free module on the irreducible of shape lam placed in degree |lam|.

    Basis at degree k: (n-element subset A of k) x (standard polytabloid of
    lam); a permutation moves the subset and acts on the polytabloid factor
    through the order-preserving identification of A with {0..n-1}.
    """
    lam = check_partition(lam)
    n = sum(lam)
    rep = SpechtRepresentation(lam)
    f = rep.dimension
    blocks = [list(itertools.combinations(range(k), n)) for k in range(max_degree + 1)]
    dims = [len(b) * f for b in blocks]
    index = [{a: i for i, a in enumerate(b)} for b in blocks]
    transpositions = []
    for k in range(max_degree + 1):
        gens = []
        for i in range(1, k):
            cols = [dict() for _ in range(dims[k])]
            for a_idx, a in enumerate(blocks[k]):
                in_low = (i - 1) in a
                in_high = i in a
                if in_low and in_high:
                    p = a.index(i - 1)  # i-1 and i are adjacent in sorted a
                    gmat = rep.generators[p]
                    for b in range(f):
                        col = cols[a_idx * f + b]
                        for r in range(f):
                            v = gmat.entry(r, b)
                            if v:
                                col[a_idx * f + r] = int(v) if v.denominator == 1 else v
                elif in_low or in_high:
                    moved = tuple(sorted((x for x in a if x not in (i - 1, i))) )
                    new = tuple(sorted(moved + ((i,) if in_low else (i - 1,))))
                    t_idx = index[k][new]
                    for b in range(f):
                        cols[a_idx * f + b][t_idx * f + b] = 1
                else:
                    for b in range(f):
                        cols[a_idx * f + b][a_idx * f + b] = 1
            gens.append(SparseMatrix(dims[k], dims[k], cols))
        transpositions.append(gens)
    inclusions = []
    for k in range(max_degree):
        cols = [dict() for _ in range(dims[k])]
        for a_idx, a in enumerate(blocks[k]):
            t_idx = index[k + 1][a]
            for b in range(f):
                cols[a_idx * f + b][t_idx * f + b] = 1
        inclusions.append(SparseMatrix(dims[k + 1], dims[k], cols))
    label = ",".join(str(x) for x in lam)
    return FIModule(f"free(({label}))", max_degree, n, dims, transpositions, inclusions)


def zero_module(max_degree: int) -> FIModule:
    dims = [0] * (max_degree + 1)
    transpositions = [[SparseMatrix(0, 0) for _ in range(max(k - 1, 0))] for k in range(max_degree + 1)]
    inclusions = [SparseMatrix(0, 0) for _ in range(max_degree)]
    return FIModule("zero", max_degree, 0, dims, transpositions, inclusions)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    valid: bool
    violations: list[str] = field(default_factory=list)


def _unit(b: int) -> dict:
    return {b: 1}


def validate(module: FIModule, samples: int = 12, seed: int = 20260826) -> ValidationReport:
    """Structural validity: Coxeter relations, inclusion equivariance,
    sampled functoriality of composite structure maps."""
    violations: list[str] = []
    k_max = module.max_degree

    for k in range(k_max + 1):
        gens = module.transpositions[k]
        d = module.dims[k]
        for i in range(1, k):
            g = gens[i - 1]
            for b in range(d):
                if g.apply(g.apply(_unit(b))) != _unit(b):
                    violations.append(f"degree {k}: Coxeter involution fails for generator {i}")
                    break
        for i in range(1, k - 1):
            a, bgen = gens[i - 1], gens[i]
            for b in range(d):
                lhs = a.apply(bgen.apply(a.apply(_unit(b))))
                rhs = bgen.apply(a.apply(bgen.apply(_unit(b))))
                if lhs != rhs:
                    violations.append(
                        f"degree {k}: Coxeter braid relation fails at generators ({i}, {i+1})"
                    )
                    break
        for i in range(1, k):
            for j in range(i + 2, k):
                a, c = gens[i - 1], gens[j - 1]
                ok = True
                for b in range(d):
                    if a.apply(c.apply(_unit(b))) != c.apply(a.apply(_unit(b))):
                        ok = False
                        break
                if not ok:
                    violations.append(
                        f"degree {k}: Coxeter commutation fails at generators ({i}, {j})"
                    )

    for k in range(k_max):
        inc = module.inclusions[k]
        for i in range(1, k):
            low, high = module.transpositions[k][i - 1], module.transpositions[k + 1][i - 1]
            for b in range(module.dims[k]):
                if inc.apply(low.apply(_unit(b))) != high.apply(inc.apply(_unit(b))):
                    violations.append(
                        f"inclusion {k}->{k+1}: equivariance fails for generator {i}"
                    )
                    break

    rng = random.Random(seed)
    for _ in range(samples):
        a = rng.randint(0, k_max)
        b = rng.randint(a, k_max)
        c = rng.randint(b, k_max)
        f = Injection(a, b, tuple(rng.sample(range(b), a)))
        g = Injection(b, c, tuple(rng.sample(range(c), b)))
        gf = Injection(a, c, tuple(g.values[v] for v in f.values))
        picks = range(module.dims[a]) if module.dims[a] <= 16 else rng.sample(
            range(module.dims[a]), 16
        )
        for basis in picks:
            two_step = module.apply_injection(g, module.apply_injection(f, _unit(basis)))
            one_step = module.apply_injection(gf, _unit(basis))
            if two_step != one_step:
                violations.append(
                    f"functoriality fails on a sampled composite {a}->{b}->{c}"
                )
                break

    return ValidationReport(valid=not violations, violations=violations)
