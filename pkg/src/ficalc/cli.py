"""The ``fi-calc`` command line: module generation, validation, and reports.

Exit statuses: 0 on success, 1 on domain errors (invalid module contents,
non-stabilization, a certified claim failing), 2 on usage errors (bad or
out-of-guard parameters, missing files).  Output is JSON by default, with
markdown and CSV renderings of the same tables; identical inputs always
produce byte-identical output.  The environment variable ``FI_CALC_THREADS``
(a positive integer) caps the worker count used for independent report cells.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .combinat import build_poset, poset_size_formula
from .exactla import invariant_factors, rank, smith_normal_form, Matrix
from .fimod import (
    DictionaryInapplicableError,
    InstabilityError,
    ModuleFormatError,
    NotStabilizedError,
    WindowError,
    coefficient_profile,
    delta_coefficient_shift_check,
    dictionary_prediction,
    free_module,
    is_polynomial,
    load_module,
    module_to_json,
    q_truncation,
    representable,
    representation_stability_check,
    stable_decomposition,
    taylor_coefficient,
    validate,
)
from .nervehom import (
    TheoremViolationError,
    certify_homology,
    complex_homology,
    connectivity_check,
    order_complex,
    wedge_certificate,
)
from .symrep import (
    NotACharacterError,
    StableRangeError,
    gn_character,
    gn_dimension,
    inner_product,
    irreducible_class_function,
    kostka,
    kostka_reduction,
    partitions_of,
    specht_dimension,
    weight,
)

GUARD_N = 5
GUARD_K = 10


class UsageError(ValueError):
    """A parameter is malformed or outside the default desk-scale guard."""


# ---------------------------------------------------------------------------
# parameter parsing and rendering
# ---------------------------------------------------------------------------


def _partition_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of integers"
        )
    if any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"partition parts must be positive: {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise argparse.ArgumentTypeError(f"partition must be weakly decreasing: {text!r}")
    return parts


def _fmt_partition(lam) -> str:
    return ",".join(str(x) for x in lam)


def _fmt_scalar(value):
    """JSON-ready number: int when integral, lowest-terms string otherwise."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


@dataclass
class Table:
    title: str
    headers: tuple[str, ...]
    rows: list


def _render_markdown(heading: str, tables: list) -> str:
    lines = [f"# {heading}", ""]
    for table in tables:
        lines.append(f"## {table.title}")
        lines.append("")
        lines.append("| " + " | ".join(table.headers) + " |")
        lines.append("|" + "|".join(" --- " for _ in table.headers) + "|")
        for row in table.rows:
            lines.append("| " + " | ".join(str(x) for x in row) + " |")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def _render_csv(tables: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, table in enumerate(tables):
        if i:
            writer.writerow([])
        writer.writerow(["table", table.title])
        writer.writerow(table.headers)
        for row in table.rows:
            writer.writerow([str(x) for x in row])
    return buf.getvalue()


def _render(fmt: str, doc: dict, heading: str, tables: list) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "markdown":
        return _render_markdown(heading, tables)
    return _render_csv(tables)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _guard(args, **named) -> None:
    """Reject parameters beyond the desk-scale defaults unless overridden."""
    if getattr(args, "allow_large", False):
        return
    for name, (value, limit) in named.items():
        if value > limit:
            raise UsageError(
                f"--{name} {value} exceeds the default guard {limit}; "
                "pass --allow-large to override"
            )


def _thread_count() -> int:
    raw = os.environ.get("FI_CALC_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"FI_CALC_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"FI_CALC_THREADS must be a positive integer, got {raw!r}")
    return value


def _decomposition_payload(decomposition):
    ordered = [
        (lam, decomposition.multiplicities[lam])
        for lam in partitions_of(decomposition.n)
        if decomposition.multiplicities.get(lam)
    ]
    doc = [
        {"partition": _fmt_partition(lam), "multiplicity": mult} for lam, mult in ordered
    ]
    rows = [
        (_fmt_partition(lam), mult, specht_dimension(lam)) for lam, mult in ordered
    ]
    return doc, rows


# ---------------------------------------------------------------------------
# command handlers: each returns (doc, heading, tables, exit_code)
# ---------------------------------------------------------------------------


def _cmd_validate(args):
    module = load_module(args.input)
    report = validate(module)
    doc = {
        "operation": "validate",
        "module": module.name,
        "max_degree": module.max_degree,
        "dims": list(module.dims),
        "valid": report.valid,
        "violations": list(report.violations),
    }
    tables = [
        Table(
            "module",
            ("name", "max_degree", "valid", "violations"),
            [(module.name, module.max_degree, report.valid, len(report.violations))],
        )
    ]
    if report.violations:
        tables.append(
            Table("violations", ("description",), [(v,) for v in report.violations])
        )
    return doc, f"validate {args.input}", tables, 0 if report.valid else 1


def _module_document(args, module):
    if args.format != "json":
        raise UsageError("module generation emits the JSON interchange format only")
    return module_to_json(module), module.name, [], 0


def _cmd_representable(args):
    _guard(args, n=(args.n, GUARD_N), max_degree=(args.max_degree, GUARD_K))
    return _module_document(args, representable(args.n, args.max_degree))


def _cmd_free(args):
    _guard(args, **{"lambda": (sum(args.lam), GUARD_N), "max-degree": (args.max_degree, GUARD_K)})
    return _module_document(args, free_module(args.lam, args.max_degree))


def _cmd_coefficients(args):
    module = load_module(args.input)
    if args.max_index is not None:
        _guard(args, max_index=(args.max_index, GUARD_N))
    profile = coefficient_profile(module, args.max_index)
    coeff_docs = []
    dim_rows = []
    char_rows = []
    for n, coeff in enumerate(profile.coefficients):
        classes = partitions_of(coeff.action_size)
        coeff_docs.append(
            {
                "index": n,
                "witness_stage": coeff.witness,
                "dims": list(coeff.dims),
                "characters": [
                    {
                        "degree": d,
                        "classes": [_fmt_partition(ct) for ct in classes],
                        "values": [_fmt_scalar(v) for v in chi.values],
                    }
                    for d, chi in enumerate(coeff.characters)
                ],
            }
        )
        dim_rows.append((n, coeff.witness, " ".join(str(d) for d in coeff.dims)))
        for ct, value in zip(classes, coeff.characters[0].values):
            char_rows.append((n, _fmt_partition(ct) or "-", _fmt_scalar(value)))
    transition_rows = [
        (f"{n}->{n + 1}", f"{t.rows}x{t.cols}", rank(t))
        for n, t in enumerate(profile.transitions)
    ]
    doc = {
        "operation": "coefficients",
        "module": module.name,
        "coefficients": coeff_docs,
        "transition_ranks": [rank(t) for t in profile.transitions],
    }
    tables = [
        Table("coefficients", ("index", "witness stage", "homology dims"), dim_rows),
        Table("degree-0 characters", ("index", "class", "trace"), char_rows),
        Table("transitions", ("map", "shape", "rank"), transition_rows),
    ]
    return doc, f"coefficients of {module.name}", tables, 0


def _cmd_decompose(args):
    module = load_module(args.input)
    decomposition = stable_decomposition(module, args.k)
    payload, rows = _decomposition_payload(decomposition)
    doc = {
        "operation": "decompose",
        "module": module.name,
        "k": args.k,
        "multiplicities": payload,
    }
    tables = [Table("irreducibles", ("partition", "multiplicity", "dimension"), rows)]
    return doc, f"decomposition of {module.name} at degree {args.k}", tables, 0


def _cmd_predict(args):
    module = load_module(args.input)
    profile = coefficient_profile(module, args.max_index)
    prediction = dictionary_prediction(profile, args.k)
    payload, rows = _decomposition_payload(prediction)
    doc = {
        "operation": "predict",
        "module": module.name,
        "k": args.k,
        "multiplicities": payload,
    }
    tables = [Table("predicted irreducibles", ("partition", "multiplicity", "dimension"), rows)]
    if args.k <= module.max_degree:
        direct = stable_decomposition(module, args.k)
        agree = direct.nonzero() == prediction.nonzero()
        doc["matches_direct"] = agree
        tables.append(
            Table("cross-check", ("k", "matches direct decomposition"), [(args.k, agree)])
        )
        if not agree:
            raise TheoremViolationError(
                f"prediction at k={args.k} disagrees with the direct decomposition "
                f"of {module.name}"
            )
    return doc, f"predicted decomposition of {module.name} at degree {args.k}", tables, 0


def _cmd_homology(args):
    _guard(args, n=(args.n, GUARD_N), k=(args.k, GUARD_K))
    if args.n < 1 or args.k < 1:
        raise UsageError("homology needs --n >= 1 and --k >= 1")
    complex_ = order_complex(build_poset(args.n, args.k))
    result = complex_homology(complex_)
    doc = {
        "operation": "homology",
        "n": args.n,
        "k": args.k,
        "vertices": complex_.vertex_count,
        "simplices": [len(batch) for batch in complex_.simplices],
        "euler_characteristic": complex_.euler_characteristic(),
        "connected": connectivity_check(args.n, args.k),
        "betti": list(result.betti),
        "torsion": [list(t) for t in result.torsion],
    }
    rows = [
        (d, result.betti[d], " ".join(str(x) for x in result.torsion[d]) or "-")
        for d in range(len(result.betti))
    ]
    tables = [Table("reduced integral homology", ("degree", "rank", "torsion"), rows)]
    if args.k >= 2 * args.n - 1:
        certificate = certify_homology(args.n, args.k, result)
        doc["wedge"] = {"degree": args.n - 1, "rank": certificate.rank}
        tables.append(
            Table(
                "wedge certificate",
                ("sphere dimension", "count"),
                [(args.n - 1, certificate.rank)],
            )
        )
    heading = f"nerve homology of P({args.n},{args.k})"
    return doc, heading, tables, 0


def _cmd_kostka(args):
    value = kostka(args.lam, args.mu)
    doc = {
        "operation": "kostka",
        "lambda": _fmt_partition(args.lam),
        "mu": _fmt_partition(args.mu),
        "kostka": value,
    }
    tables = [
        Table(
            "kostka number",
            ("lambda", "mu", "value"),
            [(_fmt_partition(args.lam), _fmt_partition(args.mu), value)],
        )
    ]
    return doc, "kostka number", tables, 0


def _cmd_gn(args):
    _guard(args, n=(args.n, GUARD_N), k=(args.k, GUARD_K))
    dimension = gn_dimension(args.n, args.k)
    rows = []
    characters = []
    for lam in partitions_of(args.k):
        mult = gn_character(args.n, args.k, lam)
        if mult:
            f_lam = specht_dimension(lam)
            rows.append((_fmt_partition(lam), weight(lam), mult, f_lam, mult * f_lam))
            characters.append(
                {
                    "partition": _fmt_partition(lam),
                    "weight": weight(lam),
                    "multiplicity": mult,
                    "specht_dimension": f_lam,
                }
            )
    doc = {
        "operation": "gn",
        "n": args.n,
        "k": args.k,
        "dimension": dimension,
        "characters": characters,
    }
    tables = [
        Table("layer dimension", ("n", "k", "dimension"), [(args.n, args.k, dimension)]),
        Table(
            "multiplicities",
            ("partition", "weight", "multiplicity", "specht dimension", "contribution"),
            rows,
        ),
    ]
    return doc, f"weight-{args.n} layer at level {args.k}", tables, 0


# ---------------------------------------------------------------------------
# the aggregate report
# ---------------------------------------------------------------------------


def _fi_cells(n_max: int, k_max: int):
    """Cells for the wedge-of-spheres section."""
    cells = []
    for n in range(1, min(3, n_max) + 1):
        for k in range(2 * n - 1, min(n + 4, 7, k_max) + 1):

            def cell(n=n, k=k):
                certificate = wedge_certificate(n, k)
                return True, f"rank {certificate.rank} in degree {n - 1}"

            cells.append((f"P({n},{k})", cell))
    return cells


def _weight_cells(n_max: int, k_max: int):
    cells = []
    for n in range(0, min(3, n_max) + 1):
        for k in range(2 * n, min(8, k_max) + 1):

            def cell(n=n, k=k):
                checked = 0
                for lam in partitions_of(k):
                    expected = 0
                    if weight(lam) == n:
                        content = tuple(x for x in (k - n,) + (1,) * n if x)
                        expected = kostka(lam, content)
                    actual = gn_character(n, k, lam)
                    if actual != expected:
                        return False, f"character at {lam} is {actual}, expected {expected}"
                    checked += 1
                return True, f"{checked} partitions checked"

            cells.append((f"n={n}, k={k}", cell))
    return cells


def _kostka_cells(n_max: int, k_max: int):
    n_eff = min(4, max(n_max, 0))
    cells = []
    for k in range(1, min(10, k_max) + 1):

        def cell(k=k, n_eff=n_eff):
            identities = 0
            for lam in partitions_of(k):
                if not lam or lam[0] < k - n_eff:
                    continue
                for i in range(0, min(n_eff, lam[0], k - 1) + 1):
                    lhs, rhs = kostka_reduction(lam, i)
                    if lhs != rhs:
                        return False, f"{lam}, i={i}: {lhs} != {rhs}"
                    identities += 1
            return True, f"{identities} identities"

        cells.append((f"k={k}", cell))
    return cells


def _representable_cells(n_max: int, k_max: int):
    m_eff = min(4, n_max)
    window = min(9, k_max)
    cells = []
    for m in range(0, m_eff + 1):

        def cell(m=m, window=window):
            module = representable(m, window)
            checked = []
            for n in range(0, m_eff + 1):
                if n + m + 1 > window:
                    continue
                coeff = taylor_coefficient(module, n)
                if n > m:
                    if any(coeff.dims):
                        return False, f"C_{n} nonzero: dims {coeff.dims}"
                    continue
                expected_dim = math.factorial(m) // math.factorial(m - n)
                if coeff.dims[0] != expected_dim or any(coeff.dims[1:]):
                    return False, f"C_{n} dims {coeff.dims}, expected ({expected_dim}, 0...)"
                for ct, value in zip(partitions_of(n), coeff.characters[0].values):
                    fixed = expected_dim if all(p == 1 for p in ct) else 0
                    if value != fixed:
                        return False, f"C_{n} trace at {ct} is {value}, expected {fixed}"
                checked.append(n)
            return True, f"coefficients {checked} match the injection count"

        cells.append((f"m={m}", cell))
    return cells


def _dictionary_modules(n_max: int, k_max: int):
    window = min(8, k_max)
    recipes = [
        ("representable", 0),
        ("representable", 1),
        ("representable", 2),
        ("free", (2,)),
        ("free", (1, 1)),
        ("free", (2, 1)),
    ]
    chosen = []
    for kind, parameter in recipes:
        bound = parameter if kind == "representable" else sum(parameter)
        if bound > min(3, n_max) or window < 2 * bound + 1:
            continue
        chosen.append((kind, parameter, window))
    return chosen


def _build_recipe(kind, parameter, window):
    if kind == "representable":
        return representable(parameter, window)
    return free_module(parameter, window)


def _dictionary_cells(n_max: int, k_max: int):
    cells = []
    for kind, parameter, window in _dictionary_modules(n_max, k_max):

        def cell(kind=kind, parameter=parameter, window=window):
            module = _build_recipe(kind, parameter, window)
            profile = coefficient_profile(module)
            top = profile.max_index
            for k in range(2 * top, window + 1):
                predicted = dictionary_prediction(profile, k).nonzero()
                direct = stable_decomposition(module, k).nonzero()
                if predicted != direct:
                    return False, f"k={k}: {predicted} != {direct}"
            return True, f"k={2 * top}..{window} all equal"

        label = (
            f"representable({parameter})" if kind == "representable"
            else f"free(({_fmt_partition(parameter)}))"
        )
        cells.append((label, cell))
    return cells


def _shift_cells(n_max: int, k_max: int):
    cells = []
    bound = min(2, n_max)
    for kind, parameter, window in _dictionary_modules(n_max, k_max):
        label = (
            f"representable({parameter})" if kind == "representable"
            else f"free(({_fmt_partition(parameter)}))"
        )
        for n in range(0, bound + 1):
            for i in range(0, bound + 1):

                def cell(kind=kind, parameter=parameter, window=window, n=n, i=i):
                    module = _build_recipe(kind, parameter, window)
                    if n + i + module.generation_bound + 1 > window:
                        return True, "window too small; not checked"
                    result = delta_coefficient_shift_check(module, n, i)
                    if not result.equal:
                        return False, f"shifted dims {result.lhs.dims} vs {result.rhs_dims}"
                    return True, f"dims {result.lhs.dims} and characters agree"

                cells.append((f"{label}, n={n}, i={i}", cell))
    return cells


def _stability_cells(n_max: int, k_max: int):
    cells = []
    for kind, parameter, window in _dictionary_modules(n_max, k_max):
        label = (
            f"representable({parameter})" if kind == "representable"
            else f"free(({_fmt_partition(parameter)}))"
        )

        def cell(kind=kind, parameter=parameter, window=window):
            module = _build_recipe(kind, parameter, window)
            start = max(1, 2 * module.generation_bound)
            report = representation_stability_check(module, start)
            if not report.is_stable:
                return False, f"pattern still moving at {report.stable_from}"
            tails = {_fmt_partition(mu) or "-": row[-1] for mu, row in report.trajectories.items()}
            return True, f"constant on [{start},{report.k_max}]: {tails}"

        cells.append((label, cell))
    return cells


def _structural_cells(n_max: int, k_max: int):
    cells = []
    window = min(6, k_max)

    def validity():
        for module in (representable(min(2, n_max), window), free_module((1, 1), max(window, 2))):
            report = validate(module)
            if not report.valid:
                return False, f"{module.name}: {report.violations[:2]}"
        return True, "constructed modules validate"

    cells.append(("module validity", validity))

    def orthogonality():
        top = min(6, max(k_max, 1))
        for n in range(0, top + 1):
            parts = partitions_of(n)
            for a in parts:
                for b in parts:
                    expected = Fraction(1 if a == b else 0)
                    got = inner_product(
                        irreducible_class_function(a), irreducible_class_function(b)
                    )
                    if got != expected:
                        return False, f"<{a},{b}> = {got}"
        return True, f"orthonormal through n={top}"

    cells.append(("character orthogonality", orthogonality))

    def squares():
        top = min(7, max(k_max, 1))
        for n in range(0, top + 1):
            total = sum(specht_dimension(lam) ** 2 for lam in partitions_of(n))
            if total != math.factorial(n):
                return False, f"sum of squares at n={n} is {total}"
        return True, f"sum f^2 = n! through n={top}"

    cells.append(("dimension squares", squares))

    def snf_unimodular():
        import random

        rng = random.Random(20260826)
        for trial in range(6):
            rows_ = rng.randrange(1, 6)
            cols_ = rng.randrange(1, 6)
            a = Matrix(
                rows_, cols_, [rng.randrange(-9, 10) for _ in range(rows_ * cols_)]
            )
            u, d, v = smith_normal_form(a)
            if (u @ a) @ v != d:
                return False, f"trial {trial}: U a V != D"
            for square in (u, v):
                facs = invariant_factors(square)
                if len(facs) != square.rows or any(f != 1 for f in facs):
                    return False, f"trial {trial}: transform not unimodular"
        return True, "6 random shapes: U a V = D with unimodular U, V"

    cells.append(("smith normal form", snf_unimodular))

    def symmetry():
        top = min(4, max(k_max, 1))
        for n in range(1, top + 1):
            for k in range(n, top + 1):
                if poset_size_formula(n, k) != poset_size_formula(k, n):
                    return False, f"sizes differ at ({n},{k})"
                if len(build_poset(n, k).elements) != poset_size_formula(n, k):
                    return False, f"size formula off at ({n},{k})"
        betti_top = min(3, top)
        for n in range(1, betti_top + 1):
            for k in range(n + 1, betti_top + 1):
                left = complex_homology(order_complex(build_poset(n, k))).betti
                right = complex_homology(order_complex(build_poset(k, n))).betti
                if left != right:
                    return False, f"betti differ at ({n},{k})"
        return True, f"sizes through {top}, betti through {betti_top}"

    cells.append(("poset symmetry", symmetry))

    def exhaustion():
        for module in (representable(min(2, n_max), window), free_module((1, 1), max(window, 3))):
            bound = module.generation_bound
            for k in range(module.max_degree + 1):
                if not q_truncation(module, bound, k).is_isomorphism:
                    return False, f"{module.name}: truncation at bound not iso at k={k}"
        return True, "truncation at the generation bound is the identity"

    cells.append(("truncation exhaustion", exhaustion))

    def polynomiality():
        for n in range(0, min(2, n_max) + 1):
            if not is_polynomial(representable(n, window), n).is_polynomial:
                return False, f"representable({n}) not {n}-polynomial"
        negative = is_polynomial(representable(1, window), 0)
        if negative.is_polynomial:
            return False, "representable(1) passed as 0-polynomial"
        return True, "positives pass, negative fails as expected"

    cells.append(("polynomiality", polynomiality))
    return cells


_REPORT_SECTIONS = (
    ("Wedge of spheres", _fi_cells),
    ("Weight concentration", _weight_cells),
    ("Kostka reduction", _kostka_cells),
    ("Representable coefficients", _representable_cells),
    ("Dictionary roundtrip", _dictionary_cells),
    ("Derivative shift", _shift_cells),
    ("Representation stability", _stability_cells),
    ("Structural suites", _structural_cells),
)


def full_report(n_max: int, k_max: int, threads: int = 1):
    """Run every report section at the given scale.

    Returns ``(doc, tables, all_passed)``; cells are independent and may be
    evaluated by up to ``threads`` workers, with deterministic assembly.
    """
    sections = []
    for title, builder in _REPORT_SECTIONS:
        sections.append((title, builder(n_max, k_max)))

    def run(cell):
        try:
            return cell()
        except Exception as exc:  # a crashing cell is a failing cell
            return False, f"{type(exc).__name__}: {exc}"

    flat = [
        (si, ci, cell)
        for si, (_, cells) in enumerate(sections)
        for ci, (_, cell) in enumerate(cells)
    ]
    results = {}
    if threads > 1 and len(flat) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {(si, ci): pool.submit(run, cell) for si, ci, cell in flat}
        for key, future in futures.items():
            results[key] = future.result()
    else:
        for si, ci, cell in flat:
            results[(si, ci)] = run(cell)

    doc_sections = []
    tables = []
    all_passed = True
    for si, (title, cells) in enumerate(sections):
        rows = []
        cell_docs = []
        for ci, (label, _) in enumerate(cells):
            passed, detail = results[(si, ci)]
            all_passed = all_passed and passed
            rows.append((label, "PASS" if passed else "FAIL", detail))
            cell_docs.append({"cell": label, "passed": passed, "detail": detail})
        if not rows:
            rows.append(("(no cells at this scale)", "PASS", "nothing to check"))
            cell_docs.append(
                {"cell": "(no cells at this scale)", "passed": True, "detail": "nothing to check"}
            )
        doc_sections.append({"section": title, "cells": cell_docs})
        tables.append(Table(f"{si + 1}. {title}", ("cell", "status", "detail"), rows))
    doc = {
        "operation": "report",
        "n_max": n_max,
        "k_max": k_max,
        "passed": all_passed,
        "sections": doc_sections,
    }
    return doc, tables, all_passed


def _cmd_report(args):
    _guard(args, n_max=(args.n_max, GUARD_N), k_max=(args.k_max, GUARD_K))
    doc, tables, all_passed = full_report(args.n_max, args.k_max, _thread_count())
    verdict = "PASS" if all_passed else "FAIL"
    tables.append(Table("overall", ("status",), [(verdict,)]))
    heading = f"report at n_max={args.n_max}, k_max={args.k_max}: {verdict}"
    return doc, heading, tables, 0 if all_passed else 1


# ---------------------------------------------------------------------------
# argument parser and dispatch
# ---------------------------------------------------------------------------


def _add_common(parser, default_format="json", guarded=False):
    parser.add_argument(
        "--format", choices=("json", "markdown", "csv"), default=default_format
    )
    parser.add_argument("--output", help="write the document here instead of stdout")
    if guarded:
        parser.add_argument(
            "--allow-large",
            action="store_true",
            help="override the desk-scale parameter guards",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fi-calc",
        description="exact calculus for modules over finite sets and injections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a module file against its axioms")
    p.add_argument("input", help="module JSON file")
    _add_common(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("representable", help="emit the module of injections from a fixed set")
    p.add_argument("--n", type=int, required=True, help="size of the representing set")
    p.add_argument("--max-degree", type=int, required=True, help="window end K")
    _add_common(p, guarded=True)
    p.set_defaults(handler=_cmd_representable)

    p = sub.add_parser("free", help="emit the free module on an irreducible")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--max-degree", type=int, required=True, help="window end K")
    _add_common(p, guarded=True)
    p.set_defaults(handler=_cmd_free)

    p = sub.add_parser("coefficients", help="stabilized Taylor coefficients of a module")
    p.add_argument("input", help="module JSON file")
    p.add_argument("--max-index", type=int, default=None)
    _add_common(p, guarded=True)
    p.set_defaults(handler=_cmd_coefficients)

    p = sub.add_parser("decompose", help="irreducible multiplicities of one stage")
    p.add_argument("input", help="module JSON file")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("predict", help="stable decomposition predicted from coefficients")
    p.add_argument("input", help="module JSON file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-index", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_predict)

    p = sub.add_parser("homology", help="reduced integral homology of a matching-poset nerve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, guarded=True)
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("kostka", help="one Kostka number")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser("gn", help="a stable layer: dimension and multiplicities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, guarded=True)
    p.set_defaults(handler=_cmd_gn)

    p = sub.add_parser("report", help="run every certified check at a chosen scale")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--k-max", dest="k_max", type=int, required=True)
    _add_common(p, default_format="markdown", guarded=True)
    p.set_defaults(handler=_cmd_report)

    return parser


_DOMAIN_ERRORS = (
    ModuleFormatError,
    NotACharacterError,
    NotStabilizedError,
    InstabilityError,
    DictionaryInapplicableError,
    TheoremViolationError,
)
_RANGE_ERRORS = (StableRangeError, WindowError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command
    try:
        _thread_count()  # reject malformed FI_CALC_THREADS up front
        doc, heading, tables, code = args.handler(args)
        _emit(args, _render(args.format, doc, heading, tables))
        return code
    except UsageError as exc:
        print(f"fi-calc {command}: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"fi-calc {command}: {exc}", file=sys.stderr)
        return 1
    except _RANGE_ERRORS as exc:
        print(f"fi-calc {command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fi-calc {command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fi-calc {command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
