"""Cross-effect cubes, their coinvariant homology, and stabilization.

For a module E and cube size n, the stage-k complex has, in homological
degree i, one summand E(|S| + k) for each subset S of {0..n-1} with
|S| = n - i (the full subset sits in degree 0).  The differential out of
the summand at S inserts each missing element x with sign
(-1)^{#{y in S : y < x}}.

Over the rationals, coinvariants by the tail symmetric group are exact,
so the stage homology is computed on the quotient complex where each
summand E(s + k) is divided by the span of v - g.v for the k-1 adjacent
transpositions that fix the first s points.  Those quotients are small
(one dimension per orbit), which is what makes window-scale computation
feasible.

Stabilization: stages are scanned from k = generation bound upward; a
coefficient is declared stable when two consecutive stages have equal
homology dimensions in every degree and the standard inclusion induces an
isomorphism on degree-0 homology.  The later stage is the witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..combinat import (
    Injection,
    conjugacy_class_word,
    permutation_from_word,
    standard_inclusion,
)
from ..exactla import (
    ChainComplex,
    Matrix,
    RationalComplexHomology,
    VectorReducer,
    rank,
    vec_add,
)
from ..symrep import ClassFunction, partitions_of
from .core import FIModule, InstabilityError, NotStabilizedError, WindowError


class CoinvariantQuotient:
    """E(s+k) modulo the span of v - g.v over the k-tail transpositions."""

    def __init__(self, module: FIModule, s: int, k: int):
        d = module.dims[s + k]
        reducer = VectorReducer()
        gens = module.transpositions[s + k]
        for gi in range(s + 1, s + k):
            g = gens[gi - 1]
            for b in range(d):
                w = vec_add({b: Fraction(1)}, g.apply({b: 1}), Fraction(-1))
                if w:
                    reducer.insert(w)
        pivots = set(reducer.pivots())
        self.reducer = reducer
        self.free = tuple(c for c in range(d) if c not in pivots)
        self.index = {c: i for i, c in enumerate(self.free)}
        self.dim = len(self.free)

    def project(self, vec: dict) -> dict:
        """Coordinates of the image of vec in the quotient basis."""
        rem = self.reducer.reduce(vec)
        return {self.index[c]: v for c, v in rem.items()}


def _quotient(module: FIModule, s: int, k: int) -> CoinvariantQuotient:
    key = (s, k)
    q = module._coinv_cache.get(key)
    if q is None:
        q = CoinvariantQuotient(module, s, k)
        module._coinv_cache[key] = q
    return q


def _matvec(a: Matrix, v) -> list:
    out = [Fraction(0)] * a.rows
    for j, x in enumerate(v):
        if x:
            for i in range(a.rows):
                if a.data[i][j]:
                    out[i] += a.data[i][j] * x
    return out


def _insertion(subset: tuple[int, ...], x: int, k: int) -> Injection:
    """The injection |S|+k -> |S|+1+k realizing S+tail -> (S u {x})+tail."""
    s = len(subset)
    values = tuple(p if subset[p] < x else p + 1 for p in range(s)) + tuple(
        p + 1 for p in range(s, s + k)
    )
    return Injection(s + k, s + 1 + k, values)


def _insertion_sign(subset: tuple[int, ...], x: int) -> int:
    below = sum(1 for y in subset if y < x)
    return -1 if below % 2 else 1


def _complement_sign(perm: tuple[int, ...], subset: tuple[int, ...]) -> int:
    """Sign of sorting the images of the complement of ``subset`` under perm."""
    images = [perm[z] for z in range(len(perm)) if z not in subset]
    inv = sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )
    return -1 if inv % 2 else 1


class CubeStage:
    """The stage-k coinvariant cube complex of a module, with its homology."""

    def __init__(self, module: FIModule, cube: int, k: int):
        if cube < 0 or k < 0:
            raise ValueError("cube size and stage must be non-negative")
        if cube + k > module.max_degree:
            raise WindowError(
                f"stage {k} of the {cube}-cube needs degree {cube + k} > window {module.max_degree}"
            )
        self.module = module
        self.cube = cube
        self.k = k
        self.summands = [
            list(itertools.combinations(range(cube), cube - i)) for i in range(cube + 1)
        ]
        self.quotients = {s: _quotient(module, s, k) for s in range(cube + 1)}
        self.offsets = []
        dims = []
        for level in self.summands:
            off = {}
            total = 0
            for subset in level:
                off[subset] = total
                total += self.quotients[len(subset)].dim
            self.offsets.append(off)
            dims.append(total)
        self.dims = tuple(dims)

        differentials = []
        for i in range(cube):
            rows = [[Fraction(0)] * dims[i + 1] for _ in range(dims[i])]
            for subset in self.summands[i + 1]:
                s = len(subset)
                src_q = self.quotients[s]
                src_off = self.offsets[i + 1][subset]
                missing = [x for x in range(cube) if x not in subset]
                for x in missing:
                    bigger = tuple(sorted(subset + (x,)))
                    sign = _insertion_sign(subset, x)
                    inj = _insertion(subset, x, k)
                    tgt_q = self.quotients[s + 1]
                    tgt_off = self.offsets[i][bigger]
                    for local, b in enumerate(src_q.free):
                        w = module.apply_injection(inj, {b: 1})
                        for li, v in tgt_q.project(w).items():
                            rows[tgt_off + li][src_off + local] += sign * v
            differentials.append(Matrix.from_rows(rows, dims[i + 1]))
        self.complex = ChainComplex(self.dims, differentials)
        self.homology = RationalComplexHomology(self.complex)

    # -- symmetric-group action on the cube coordinates ------------------
    def action_matrix(self, perm: tuple[int, ...], degree: int) -> Matrix:
        """Matrix of the cube-coordinate permutation on the degree-th term."""
        if len(perm) != self.cube:
            raise ValueError("permutation must act on the cube coordinates")
        n = self.dims[degree]
        rows = [[Fraction(0)] * n for _ in range(n)]
        for subset in self.summands[degree]:
            s = len(subset)
            q = self.quotients[s]
            image = tuple(sorted(perm[x] for x in subset))
            sign = _complement_sign(perm, subset)
            values = tuple(image.index(perm[subset[p]]) for p in range(s)) + tuple(
                range(s, s + self.k)
            )
            src_off = self.offsets[degree][subset]
            tgt_off = self.offsets[degree][image]
            for local, b in enumerate(q.free):
                w = self.module.apply_permutation(s + self.k, values, {b: 1})
                for li, v in q.project(w).items():
                    rows[tgt_off + li][src_off + local] += sign * v
        return Matrix.from_rows(rows, n)

    def homology_trace(self, perm: tuple[int, ...], degree: int) -> Fraction:
        if not self.homology.dims()[degree]:
            return Fraction(0)
        reps = self.homology.representatives(degree)
        act = self.action_matrix(perm, degree)
        total = Fraction(0)
        for j in range(reps.cols):
            image = _matvec(act, reps.column(j))
            total += self.homology.express(degree, image)[j]
        return total

    def transition_to(self, other: "CubeStage") -> Matrix:
        """Quotient-coordinate matrix of the standard inclusion on degree 0."""
        if other.cube != self.cube or other.k != self.k + 1:
            raise ValueError("transition target must be the next stage")
        inc = standard_inclusion(self.cube + self.k, self.cube + self.k + 1)
        src_q = self.quotients[self.cube]
        tgt_q = other.quotients[self.cube]
        rows = [[Fraction(0)] * src_q.dim for _ in range(tgt_q.dim)]
        for local, b in enumerate(src_q.free):
            w = self.module.apply_injection(inc, {b: 1})
            for li, v in tgt_q.project(w).items():
                rows[li][local] += v
        return Matrix.from_rows(rows, src_q.dim)


def _homology_basis_map(stage: CubeStage, nxt: CubeStage) -> Matrix:
    """Degree-0 homology matrix of the standard-inclusion transition."""
    t = stage.transition_to(nxt)
    h_src = stage.homology.dims()[0]
    h_tgt = nxt.homology.dims()[0]
    reps = stage.homology.representatives(0)
    cols = [
        nxt.homology.express(0, _matvec(t, reps.column(j))) for j in range(reps.cols)
    ]
    return Matrix.from_rows(
        [[cols[j][i] for j in range(h_src)] for i in range(h_tgt)], h_src
    )


def _transition_is_iso(stage: CubeStage, nxt: CubeStage) -> bool:
    h = stage.homology.dims()[0]
    if nxt.homology.dims()[0] != h:
        return False
    if h == 0:
        return True
    return rank(_homology_basis_map(stage, nxt)) == h


@dataclass(frozen=True)
class GradedCoefficient:
    """Stable coinvariant homology of a cross-effect cube.

    ``characters[i]`` is the character of the coordinate-permutation action
    on degree-i homology; for the shifted variant the action group is the
    block of cube coordinates past the shift.
    """

    cube: int
    action_size: int
    dims: tuple[int, ...]
    characters: tuple[ClassFunction, ...]
    witness: int

    def dimension(self, degree: int) -> int:
        return self.dims[degree]


def _embedded_perm(cycle_type, action_start: int, action_size: int, cube: int):
    base = permutation_from_word(conjugacy_class_word(cycle_type), action_size)
    return tuple(range(action_start)) + tuple(action_start + v for v in base) + tuple(
        range(action_start + action_size, cube)
    )


def _stage_coefficient(
    module: FIModule, cube: int, action_start: int, action_size: int
) -> GradedCoefficient:
    trajectory = []
    k = module.generation_bound
    if cube + k > module.max_degree:
        raise WindowError(
            f"cannot form the {cube}-cube at stage {k} inside window {module.max_degree}"
        )
    stage = CubeStage(module, cube, k)
    while cube + k + 1 <= module.max_degree:
        nxt = CubeStage(module, cube, k + 1)
        if stage.homology.dims() == nxt.homology.dims() and _transition_is_iso(stage, nxt):
            classes = partitions_of(action_size)
            characters = []
            for degree in range(cube + 1):
                values = []
                for ct in classes:
                    perm = _embedded_perm(ct, action_start, action_size, cube)
                    values.append(nxt.homology_trace(perm, degree))
                characters.append(ClassFunction(action_size, tuple(values)))
            return GradedCoefficient(
                cube=cube,
                action_size=action_size,
                dims=nxt.homology.dims(),
                characters=tuple(characters),
                witness=k + 1,
            )
        trajectory.append({"stage": k, "dims": stage.homology.dims()})
        stage = nxt
        k += 1
    trajectory.append({"stage": k, "dims": stage.homology.dims()})
    raise NotStabilizedError(
        f"coefficient of the {cube}-cube did not stabilize inside the window; "
        f"trajectory {trajectory}",
        trajectory,
    )


def taylor_coefficient(module: FIModule, n: int) -> GradedCoefficient:
    """The n-th coefficient: stable coinvariant cube homology with its
    symmetric-group character in every homological degree."""
    if n < 0:
        raise ValueError("coefficient index must be non-negative")
    return _stage_coefficient(module, n, 0, n)


def shifted_coefficient(module: FIModule, n: int, i: int) -> GradedCoefficient:
    """The i-th coefficient of the n-fold difference, acting on the last
    i cube coordinates only."""
    return _stage_coefficient(module, n + i, n, i)


@dataclass(frozen=True)
class ShiftCheckResult:
    lhs: GradedCoefficient
    rhs_dims: tuple[int, ...]
    rhs_characters: tuple[ClassFunction, ...]
    equal: bool


def delta_coefficient_shift_check(module: FIModule, n: int, i: int) -> ShiftCheckResult:
    """Compare the i-th coefficient of the n-fold difference against the
    (n+i)-th coefficient with its character restricted to the i-block."""
    lhs = shifted_coefficient(module, n, i)
    full = taylor_coefficient(module, n + i)
    classes = partitions_of(i)
    rhs_chars = []
    for degree in range(n + i + 1):
        values = []
        for ct in classes:
            padded = tuple(sorted(ct + (1,) * n, reverse=True))
            values.append(full.characters[degree](padded))
        rhs_chars.append(ClassFunction(i, tuple(values)))
    equal = lhs.dims == full.dims and all(
        lhs.characters[d].values == rhs_chars[d].values for d in range(n + i + 1)
    )
    return ShiftCheckResult(lhs, full.dims, tuple(rhs_chars), equal)


# ---------------------------------------------------------------------------
# transition maps between coefficients
# ---------------------------------------------------------------------------


def _sum_over_extensions(
    module: FIModule, f: Injection, k: int
) -> tuple[CubeStage, CubeStage, Matrix]:
    """Quotient-level matrix of the extension-sum map at stage k.

    For g = f + j over all injections j from the complement of the image of f
    into the k-tail, the map sums E(f + j~) where j~ fixes the tail except for
    pulling the hit points back.
    """
    n, m = f.source_size, f.target_size
    src = CubeStage(module, n, k)
    tgt = CubeStage(module, m, k)
    src_q = src.quotients[n]
    tgt_q = tgt.quotients[m]
    missing = [x for x in range(m) if x not in f.image]
    rows = [[Fraction(0)] * src_q.dim for _ in range(tgt_q.dim)]
    for j_values in itertools.permutations(range(k), len(missing)):
        lookup = {a: missing[t] for t, a in enumerate(j_values)}
        values = tuple(f.values) + tuple(
            lookup.get(a, m + a) for a in range(k)
        )
        big = Injection(n + k, m + k, values)
        for local, b in enumerate(src_q.free):
            w = module.apply_injection(big, {b: 1})
            for li, v in tgt_q.project(w).items():
                rows[li][local] += v
    return src, tgt, Matrix.from_rows(rows, src_q.dim)


def _transition_at_stage(module: FIModule, f: Injection, k: int):
    """Homology-basis matrix of the extension-sum map at one stage, with the
    boundary-preservation check."""
    src, tgt, t = _sum_over_extensions(module, f, k)
    for col in _boundary_columns(src):
        coords = tgt.homology.express(0, _matvec(t, col))
        if any(coords):
            raise InstabilityError(
                "extension-sum map does not carry boundaries to boundaries"
            )
    h_src = src.homology.dims()[0]
    h_tgt = tgt.homology.dims()[0]
    reps = src.homology.representatives(0)
    cols = [
        tgt.homology.express(0, _matvec(t, reps.column(j))) for j in range(reps.cols)
    ]
    rows = [[cols[j][i] for j in range(h_src)] for i in range(h_tgt)]
    return src, tgt, Matrix.from_rows(rows, h_src)


def coefficient_transition(module: FIModule, f: Injection, k: int) -> Matrix:
    """Matrix of the induced map on degree-0 stable homology, in the
    homology bases of the stage-k cubes at source and target size.

    Two runtime assertions guard against using an unstabilized stage: the
    quotient-level map must carry boundaries to boundaries, and (when the
    window allows forming stage k+1) the matrices at k and k+1 must agree
    under the stabilization transition maps.  Either failure raises
    InstabilityError.
    """
    if f.target_size + k > module.max_degree:
        raise WindowError(
            f"transition at stage {k} needs degree {f.target_size + k} > window"
        )
    src, tgt, mat = _transition_at_stage(module, f, k)
    if f.target_size + k + 1 <= module.max_degree:
        src_next, tgt_next, mat_next = _transition_at_stage(module, f, k + 1)
        s_src = _homology_basis_map(src, src_next)
        s_tgt = _homology_basis_map(tgt, tgt_next)
        if mat_next @ s_src != s_tgt @ mat:
            raise InstabilityError(
                "transition matrices at consecutive stages disagree under the "
                "stabilization maps (stage too small)"
            )
    return mat


def _boundary_columns(stage: CubeStage):
    if stage.cube == 0:
        return []
    d = stage.complex.differentials[0]
    return [d.column(j) for j in range(d.cols)]


# ---------------------------------------------------------------------------
# whole-module profile
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientProfile:
    """All coefficients of a module up to its generation bound, with the
    degree-0 transition matrices along the standard one-step inclusions."""

    module_name: str
    coefficients: tuple[GradedCoefficient, ...]
    transitions: tuple[Matrix, ...]

    @property
    def max_index(self) -> int:
        return len(self.coefficients) - 1


def coefficient_profile(module: FIModule, max_index: int | None = None) -> CoefficientProfile:
    if max_index is None:
        max_index = module.generation_bound
    coefficients = tuple(taylor_coefficient(module, n) for n in range(max_index + 1))
    transitions = []
    for n in range(max_index):
        k = max(coefficients[n].witness, coefficients[n + 1].witness)
        if n + 1 + k > module.max_degree:
            raise WindowError(
                f"transition {n}->{n+1} at stage {k} exceeds window {module.max_degree}"
            )
        inc = standard_inclusion(n, n + 1)
        transitions.append(coefficient_transition(module, inc, k))
    return CoefficientProfile(module.name, coefficients, tuple(transitions))


# ---------------------------------------------------------------------------
# dense cube complex (reference construction, no coinvariants)
# ---------------------------------------------------------------------------


def delta_complex(module: FIModule, n: int, k: int) -> ChainComplex:
    """The full (non-coinvariant) stage-k cube complex, densely assembled."""
    if n < 0 or k < 0:
        raise ValueError("cube size and stage must be non-negative")
    if n + k > module.max_degree:
        raise WindowError(f"degree {n + k} outside window {module.max_degree}")
    from .core import evaluate

    summands = [list(itertools.combinations(range(n), n - i)) for i in range(n + 1)]
    offsets = []
    dims = []
    for level in summands:
        off = {}
        total = 0
        for subset in level:
            off[subset] = total
            total += module.dims[len(subset) + k]
        offsets.append(off)
        dims.append(total)
    differentials = []
    for i in range(n):
        rows = [[Fraction(0)] * dims[i + 1] for _ in range(dims[i])]
        for subset in summands[i + 1]:
            s = len(subset)
            src_off = offsets[i + 1][subset]
            for x in (x for x in range(n) if x not in subset):
                bigger = tuple(sorted(subset + (x,)))
                sign = _insertion_sign(subset, x)
                block = evaluate(module, _insertion(subset, x, k))
                tgt_off = offsets[i][bigger]
                for r in range(block.rows):
                    row = rows[tgt_off + r]
                    for c in range(block.cols):
                        v = block.entry(r, c)
                        if v:
                            row[src_off + c] += sign * v
        differentials.append(Matrix.from_rows(rows, dims[i + 1]))
    return ChainComplex(tuple(dims), differentials)
