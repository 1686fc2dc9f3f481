"""The windowed module type: constructors, evaluation, validation."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ficalc.combinat import Injection, compose, enumerate_injections, identity_injection
from ficalc.exactla import Matrix, SparseMatrix
from ficalc.fimod import (
    FIModule,
    WindowError,
    evaluate,
    free_module,
    representable,
    validate,
    zero_module,
)
from ficalc.symrep import specht_dimension


@pytest.fixture(scope="module")
def f2():
    return representable(2, 5)


def test_representable_dims():
    module = representable(2, 6)
    assert module.dims == (0, 0, 2, 6, 12, 20, 30)
    assert module.generation_bound == 2
    assert representable(0, 3).dims == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        representable(-1, 3)
    with pytest.raises(ValueError):
        representable(2, -1)


def test_free_module_dims():
    # dim at degree k is C(k, |lam|) * f^lam
    for lam in [(), (1,), (2,), (1, 1), (2, 1)]:
        module = free_module(lam, 6)
        size, f_lam = sum(lam), specht_dimension(lam)
        for k in range(7):
            assert module.dim(k) == math.comb(k, size) * f_lam
    assert free_module((1, 1), 6).dims == (0, 0, 1, 3, 6, 10, 15)
    assert free_module((), 3).dims == (1, 1, 1, 1)


def test_zero_module():
    module = zero_module(4)
    assert module.dims == (0, 0, 0, 0, 0)
    assert validate(module).valid


def test_window_checks(f2):
    assert f2.dim(5) == 20
    with pytest.raises(WindowError):
        f2.dim(6)
    with pytest.raises(WindowError):
        f2.inclusion(5)
    assert f2.inclusion(2).rows == 6
    with pytest.raises(ValueError):
        f2.generator(3, 0)
    with pytest.raises(ValueError):
        f2.generator(3, 3)


def test_constructor_shape_validation():
    with pytest.raises(ValueError):
        FIModule("bad", 1, 0, (1,), ((), ()), (SparseMatrix(1, 1),))
    with pytest.raises(ValueError):
        FIModule("bad", 1, 0, (1, 1), ((), ()), ())
    with pytest.raises(ValueError):
        FIModule("bad", 1, 2, (1, 1), ((), ()), (SparseMatrix(1, 1),))
    with pytest.raises(ValueError):
        FIModule("bad", 1, 0, (1, 2), ((), ()), (SparseMatrix(1, 1),))


def test_representable_action_is_postcomposition(f2):
    basis = enumerate_injections(2, 3)
    perm = (1, 2, 0)
    sigma = Injection(3, 3, perm)
    for idx, f in enumerate(basis):
        image = f2.apply_permutation(3, perm, {idx: Fraction(1)})
        assert image == {basis.index(compose(sigma, f)): Fraction(1)}


def test_representable_inclusion_is_identity_on_values(f2):
    basis3 = enumerate_injections(2, 3)
    basis4 = enumerate_injections(2, 4)
    vec = f2.inclusions[3].apply({basis3.index(Injection(2, 3, (2, 0))): Fraction(1)})
    assert vec == {basis4.index(Injection(2, 4, (2, 0))): Fraction(1)}


def test_evaluate_identity_and_functoriality(f2):
    for k in range(f2.max_degree + 1):
        assert evaluate(f2, identity_injection(k)) == Matrix.identity(f2.dim(k))
    f = Injection(2, 4, (3, 1))
    g = Injection(4, 5, (2, 0, 4, 1))
    assert evaluate(f2, compose(g, f)) == evaluate(f2, g) @ evaluate(f2, f)


@st.composite
def composable_pairs_in_window(draw, window=5):
    a = draw(st.integers(min_value=0, max_value=window))
    b = draw(st.integers(min_value=a, max_value=window))
    c = draw(st.integers(min_value=b, max_value=window))
    f = Injection(a, b, tuple(draw(st.permutations(range(b)))[:a]))
    g = Injection(b, c, tuple(draw(st.permutations(range(c)))[:b]))
    return f, g


@given(composable_pairs_in_window())
@settings(max_examples=30, deadline=None)
def test_functoriality_random_pairs(pair):
    module = representable(2, 5)
    f, g = pair
    assert evaluate(module, compose(g, f)) == evaluate(module, g) @ evaluate(module, f)


@given(composable_pairs_in_window())
@settings(max_examples=20, deadline=None)
def test_free_module_functoriality(pair):
    module = free_module((2, 1), 5)
    f, g = pair
    assert evaluate(module, compose(g, f)) == evaluate(module, g) @ evaluate(module, f)


def test_injectivity_of_structure_maps():
    # every E(f) of the constructed modules is injective on the window
    from ficalc.exactla import rank

    for module in (representable(2, 4), free_module((1, 1), 4)):
        for k in range(module.max_degree):
            mat = evaluate(module, Injection(k, k + 1, tuple(range(k))))
            assert rank(mat) == module.dim(k)


def test_validate_passes_on_constructors():
    for module in (
        representable(0, 4),
        representable(1, 4),
        representable(3, 5),
        free_module((2,), 5),
        free_module((2, 1), 5),
    ):
        report = validate(module)
        assert report.valid, report.violations


def _tamper(module, degree, index):
    """Rebuild the module with one transposition generator zeroed out."""
    transpositions = [list(batch) for batch in module.transpositions]
    transpositions[degree][index] = SparseMatrix(
        module.dim(degree), module.dim(degree)
    )
    return FIModule(
        module.name,
        module.max_degree,
        module.generation_bound,
        module.dims,
        transpositions,
        module.inclusions,
    )


def test_validate_detects_fault():
    broken = _tamper(representable(2, 4), 3, 1)
    report = validate(broken)
    assert not report.valid
    assert report.violations


def test_validate_detects_wrong_sign():
    module = free_module((1, 1), 4)
    transpositions = [list(batch) for batch in module.transpositions]
    bad = SparseMatrix(
        module.dim(2), module.dim(2), [dict(c) for c in transpositions[2][0].columns]
    )
    bad.set(0, 0, -bad.columns[0].get(0, Fraction(0)) + 1)
    transpositions[2][0] = bad
    broken = FIModule("broken", 4, 2, module.dims, transpositions, module.inclusions)
    assert not validate(broken).valid
