"""Order complexes of partial-bijection posets and their integral homology.

The nerve of the poset of nonempty partial bijections between sizes n and k
is, in the range k >= 2n-1, a wedge of (n-1)-spheres; ``wedge_certificate``
checks this on the nose: reduced integral homology must be torsion-free,
concentrated in degree n-1, and of rank equal to the stable multiplicity
count from the symmetric-group side.  Below the range the homology is still
reported, with no claim attached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import PartialBijectionPoset, build_poset
from .exactla import ChainComplex, HomologyResult, Matrix, homology
from .symrep import gn_dimension


class TheoremViolationError(RuntimeError):
    """A certified structural claim failed; indicates an implementation bug."""


@dataclass(frozen=True)
class OrderComplex:
    """All chains of a poset, as strictly increasing vertex-index tuples."""

    vertex_count: int
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def size(self, dim: int) -> int:
        """Number of simplices in the given dimension."""
        if 0 <= dim < len(self.simplices):
            return len(self.simplices[dim])
        return 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(batch) for d, batch in enumerate(self.simplices))


def order_complex(poset: PartialBijectionPoset) -> OrderComplex:
    """The full order complex: one simplex per chain, in index order.

    Chains are grown depth-first along the transitive closure of the cover
    relations (rank strictly increases along a chain, so each chain is found
    exactly once); the resulting vertex sets are then named by their sorted
    index tuples, which need not be sorted by rank.
    """
    count = len(poset.elements)
    if count == 0:
        return OrderComplex(0, ())
    successors: list[list[int]] = [[] for _ in range(count)]
    for low, high in poset.cover_relations:
        successors[low].append(high)
    above: list[set[int]] = [set() for _ in range(count)]
    by_rank_desc = sorted(range(count), key=lambda i: -len(poset.elements[i]))
    for i in by_rank_desc:
        for j in successors[i]:
            above[i].add(j)
            above[i] |= above[j]
    upsets = [sorted(s) for s in above]

    chains: list[list[tuple[int, ...]]] = [[(v,) for v in range(count)]]

    def grow(chain: tuple[int, ...]) -> None:
        for nxt in upsets[chain[-1]]:
            extended = chain + (nxt,)
            depth = len(extended) - 1
            while len(chains) <= depth:
                chains.append([])
            chains[depth].append(tuple(sorted(extended)))
            grow(extended)

    for v in range(count):
        grow((v,))
    return OrderComplex(count, tuple(tuple(sorted(batch)) for batch in chains))


def _boundary(complex: OrderComplex, dim: int) -> Matrix:
    """Simplicial boundary from dimension dim to dim-1 (index-order signs)."""
    faces = complex.simplices[dim - 1]
    simps = complex.simplices[dim]
    face_index = {f: i for i, f in enumerate(faces)}
    rows, cols = len(faces), len(simps)
    entries = [0] * (rows * cols)
    for j, simplex in enumerate(simps):
        for i in range(dim + 1):
            face = simplex[:i] + simplex[i + 1 :]
            entries[face_index[face] * cols + j] = -1 if i % 2 else 1
    return Matrix(rows, cols, entries)


def complex_homology(complex: OrderComplex) -> HomologyResult:
    """Reduced integral homology: Betti numbers and torsion per degree."""
    if complex.vertex_count == 0:
        return HomologyResult((), ())
    dims = tuple(len(batch) for batch in complex.simplices)
    differentials = tuple(_boundary(complex, d) for d in range(1, len(dims)))
    result = homology(ChainComplex(dims, differentials), integral=True)
    betti = (result.betti[0] - 1,) + result.betti[1:]
    return HomologyResult(betti, result.torsion)


@dataclass(frozen=True)
class WedgeCertificate:
    """Homology of the nerve of P(n,k) together with the certified claim."""

    n: int
    k: int
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    rank: int

    def __str__(self) -> str:
        return (
            f"nerve of P({self.n},{self.k}): wedge of {self.rank} "
            f"spheres of dimension {self.n - 1}"
        )


def wedge_certificate(n: int, k: int) -> WedgeCertificate:
    """Certify that the nerve of P(n,k) is a wedge of (n-1)-spheres.

    Requires n >= 1 and k >= 2n-1.  Raises :class:`TheoremViolationError`
    if the reduced homology has torsion, lives outside degree n-1, or has
    rank different from ``gn_dimension(n, k)``.
    """
    if n < 1:
        raise ValueError("wedge_certificate needs n >= 1")
    if k < 2 * n - 1:
        raise ValueError(f"wedge_certificate needs k >= {2 * n - 1}, got {k}")
    result = complex_homology(order_complex(build_poset(n, k)))
    return certify_homology(n, k, result)


def certify_homology(n: int, k: int, result: HomologyResult) -> WedgeCertificate:
    """Check an already-computed homology result against the wedge claim."""
    expected = gn_dimension(n, k)
    problems = []
    if any(result.torsion[d] for d in range(len(result.torsion))):
        problems.append(f"torsion {result.torsion}")
    for d, b in enumerate(result.betti):
        if d != n - 1 and b:
            problems.append(f"rank {b} in degree {d}")
    observed = result.betti[n - 1] if n - 1 < len(result.betti) else 0
    if observed != expected:
        problems.append(f"rank {observed} in degree {n - 1}, expected {expected}")
    if problems:
        raise TheoremViolationError(
            f"nerve of P({n},{k}) is not the certified wedge: " + "; ".join(problems)
        )
    return WedgeCertificate(
        n=n, k=k, betti=result.betti, torsion=result.torsion, rank=expected
    )


def connectivity_check(n: int, k: int) -> bool:
    """Whether the nerve of P(n,k) is connected (union-find over covers)."""
    if n < 1 or k < 1:
        raise ValueError("connectivity_check needs n >= 1 and k >= 1")
    poset = build_poset(n, k)
    count = len(poset.elements)
    if count == 0:
        return True
    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in poset.cover_relations:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(count)}) == 1
