"""Degreewise truncations, cohomogeneous layers, and polynomiality tests.

The truncation of a module at level n evaluates, at each degree k, the
colimit of E over the poset of subsets of {0..k-1} of size at most n.  For
n at least the generation bound the comparison map to E(k) is an
isomorphism; the cokernel/kernel of consecutive truncations isolate the
"new in degree n" layer.

Polynomiality is tested cube by cube: a module is n-polynomial when every
standard (n+1)-dimensional cube of inclusions inside the window has an
acyclic total complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..combinat import Injection, enumerate_injections, standard_cubes
from ..exactla import (
    Matrix,
    SparseMatrix,
    poset_colimit,
    rank,
    solve_columns,
    sparse_rank,
)
from .coefficients import _insertion, _insertion_sign
from .core import FIModule, WindowError, evaluate


def _subset_poset(k: int, n: int) -> list[tuple[int, ...]]:
    """Subsets of {0..k-1} of size <= n, ordered by (size, lexicographic)."""
    out = []
    for size in range(min(n, k) + 1):
        out.extend(itertools.combinations(range(k), size))
    return out


@dataclass(frozen=True)
class TruncationResult:
    dimension: int
    comparison: Matrix
    is_isomorphism: bool


def _colimit_over_subsets(module: FIModule, n: int, k: int):
    vertices = _subset_poset(k, n)
    index = {v: i for i, v in enumerate(vertices)}
    dims = [module.dims[len(v)] for v in vertices]
    covers = []
    for s in vertices:
        for x in range(k):
            if x in s:
                continue
            t = tuple(sorted(s + (x,)))
            if t not in index:
                continue
            edge = evaluate(module, _insertion(s, x, 0))
            covers.append((index[s], index[t], edge))
    return vertices, poset_colimit(dims, covers)


def q_truncation(module: FIModule, n: int, k: int) -> TruncationResult:
    """Level-n truncation at degree k with its comparison map into E(k)."""
    if not 0 <= k <= module.max_degree:
        raise WindowError(f"degree {k} outside window 0..{module.max_degree}")
    vertices, colim = _colimit_over_subsets(module, n, k)
    # comparison c: colimit -> E(k), determined by c . psi_S = E(incl_S)
    psi = None
    target = None
    for v, structure in zip(vertices, colim.structure_maps):
        block = evaluate(module, Injection(len(v), k, v))
        psi = structure if psi is None else psi.hstack(structure)
        target = block if target is None else target.hstack(block)
    comparison = solve_columns(psi.transpose(), target.transpose()).transpose()
    iso = colim.dimension == module.dims[k] and rank(comparison) == colim.dimension
    return TruncationResult(colim.dimension, comparison, iso)


def cohomogeneous_layer(module: FIModule, n: int, k: int) -> tuple[int, int]:
    """Cokernel and kernel dimensions of the truncation step n-1 -> n at
    degree k."""
    if n < 1:
        raise ValueError("layer index must be at least 1")
    if not 0 <= k <= module.max_degree:
        raise WindowError(f"degree {k} outside window 0..{module.max_degree}")
    small_vertices, small = _colimit_over_subsets(module, n - 1, k)
    big_vertices, big = _colimit_over_subsets(module, n, k)
    big_index = {v: i for i, v in enumerate(big_vertices)}
    psi = None
    target = None
    for v, structure in zip(small_vertices, small.structure_maps):
        t_map = big.structure_maps[big_index[v]]
        psi = structure if psi is None else psi.hstack(structure)
        target = t_map if target is None else target.hstack(t_map)
    induced = solve_columns(psi.transpose(), target.transpose()).transpose()
    r = rank(induced)
    return big.dimension - r, small.dimension - r


@dataclass(frozen=True)
class PolynomialCertificate:
    is_polynomial: bool
    failures: tuple[tuple[int, tuple[int, ...]], ...]

    def __bool__(self) -> bool:
        return self.is_polynomial


def is_polynomial(module: FIModule, n: int) -> PolynomialCertificate:
    """Whether every standard (n+1)-cube in the window has an acyclic total
    complex; failures record (base size, Betti numbers)."""
    cubes = standard_cubes(module.max_degree, n + 1)
    if not cubes:
        raise WindowError(
            f"window {module.max_degree} holds no {n + 1}-dimensional standard cube"
        )
    failures = []
    for cube in cubes:
        betti = _cube_betti(module, cube.base, cube.extension)
        if any(betti):
            failures.append((len(cube.base), betti))
    return PolynomialCertificate(not failures, tuple(failures))


def _cube_insertion(base, subset, x) -> Injection:
    """Position map realizing (base u subset) -> (base u subset u {x})."""
    src = tuple(sorted(tuple(base) + tuple(subset)))
    tgt = tuple(sorted(src + (x,)))
    return Injection(len(src), len(tgt), tuple(tgt.index(v) for v in src))


def _cube_betti(module: FIModule, base, extension) -> tuple[int, ...]:
    b = len(base)
    dim = len(extension)
    levels = [list(itertools.combinations(extension, dim - i)) for i in range(dim + 1)]
    offsets = []
    sizes = []
    for level in levels:
        off = {}
        total = 0
        for s in level:
            off[s] = total
            total += module.dims[b + len(s)]
        offsets.append(off)
        sizes.append(total)
    ranks = []
    for i in range(dim):
        mat = SparseMatrix(sizes[i], sizes[i + 1])
        for s in levels[i + 1]:
            src_off = offsets[i + 1][s]
            for x in extension:
                if x in s:
                    continue
                t = tuple(sorted(s + (x,)))
                sign = _insertion_sign(s, x)
                inj = _cube_insertion(base, s, x)
                tgt_off = offsets[i][t]
                for col in range(module.dims[b + len(s)]):
                    w = module.apply_injection(inj, {col: 1})
                    for r, v in w.items():
                        mat.set(tgt_off + r, src_off + col, sign * v)
        ranks.append(sparse_rank(mat))
    betti = []
    for i in range(dim + 1):
        cycles = sizes[i] - (ranks[i - 1] if i > 0 else 0)
        boundaries = ranks[i] if i < dim else 0
        betti.append(cycles - boundaries)
    return tuple(betti)


def pn_representable(m: int, n: int, k: int) -> int:
    """Dimension of the level-n polynomial approximation of the rank-m
    injection module at degree k, computed as the limit over the poset of
    subsets of the rank set of size <= n (kernel of the cover difference
    map)."""
    if m < 0 or n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    vertices = _subset_poset(m, n)
    index = {v: i for i, v in enumerate(vertices)}
    sizes = sorted({len(v) for v in vertices})
    bases = {t: enumerate_injections(t, k) for t in sizes}
    lookup = {t: {f.values: i for i, f in enumerate(bases[t])} for t in sizes}
    dims = [len(bases[len(v)]) for v in vertices]
    offs = []
    total = 0
    for d in dims:
        offs.append(total)
        total += d
    columns = [dict() for _ in range(total)]
    row_base = 0
    for sv in vertices:
        si = index[sv]
        for x in range(m):
            if x in sv:
                continue
            tv = tuple(sorted(sv + (x,)))
            if tv not in index:
                continue
            ti = index[tv]
            positions = tuple(tv.index(y) for y in sv)
            # restriction(v at tv) - (v at sv) must vanish on the kernel
            for col, f in enumerate(bases[len(tv)]):
                restricted = tuple(f.values[p] for p in positions)
                r_idx = lookup[len(sv)][restricted]
                columns[offs[ti] + col][row_base + r_idx] = 1
            for col in range(dims[si]):
                columns[offs[si] + col][row_base + col] = -1
            row_base += dims[si]
    constraint = SparseMatrix(row_base, total, columns)
    return total - sparse_rank(constraint)
