"""Command line front end: construct, check, apply, and export.

Conventions (also shown in --help):

* composite indices: the first tensor factor is the most significant digit;
* braid words: comma separated nonzero integers; letter +i / -i is the
  i-th generator or its inverse, and letters are applied to states in
  written order, so the first letter is the rightmost factor of the
  evaluated matrix product;
* exit codes: 0 when every selected check passes, 1 when any check fails,
  2 on usage or I/O errors.  "recorded" entries are documentation-only
  and never affect the exit code.

Reports are deterministic byte for byte for a given command line; wall
times are only included behind --timings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import floatback
from .braidrep import (
    BraidedRMatrix,
    BraidWord,
    ModuleAction,
    braided_r,
    braiding_map,
    check_braid_relations,
    check_braided_ybe,
    check_hexagon,
    check_module_morphism,
    evaluate_braid_word,
)
from .groupalg import (
    GroupSpec,
    check_algebraic_ybe,
    check_hopf_axioms,
    check_quasi_cocommutative,
    check_quasitriangular,
    tensor_to_json,
    universal_r,
    universal_r_fused_phase,
)
from .linalg import (
    Matrix,
    conjugate_transpose,
    flip_operator,
    matrix_from_json,
    matrix_to_json,
    regular_representation,
)
from .quantum import (
    BELL_KINDS,
    StateVector,
    apply_gate,
    bell_matrix,
    bell_state,
    concurrence,
    kauffman_lomonaco_r,
    schmidt_rank,
    verify_bell_actions,
)

ANCHORS = {
    "hopf-axioms": "coassociativity, counit laws, antipode law on the group-like basis",
    "quasi-cocommutativity": "Dop(x) R = R D(x) for every basis element x",
    "quasitriangular-coproducts": "(D x id)(R) = R13 R23 and (id x D)(R) = R13 R12",
    "algebraic-ybe": "R12 R13 R23 = R23 R13 R12 in the triple tensor power",
    "braided-ybe": "(R' x I)(I x R')(R' x I) = (I x R')(R' x I)(I x R')",
    "braid-relations": "far commutation and adjacent braid relations",
    "module-morphism": "the braiding intertwines the diagonal action and is invertible",
    "hexagon": "hexagon identity for the braiding on three regular modules",
    "bell-actions": "phi+ -> psi+, psi+ -> phi+, phi- -> phi-, psi- -> -psi- with exact signs",
    "unitary": "M Mdag = I",
    "entangling-probe": "concurrence of the image of (|0>+|1>) (x) (|0>+|1>)",
    "bell-basis": "all four Bell mappings hold exactly",
}

WHICH_CHOICES = ("hopf", "quasitriangular", "ybe", "braided-ybe", "braid",
                 "hexagon", "bell-actions", "all")


class Report:
    def __init__(self, command: str, backend: str, timings: bool):
        self.command = command
        self.backend = backend
        self.timings = timings
        self.checks: list[dict] = []
        self.artifacts: list[str] = []
        self.info: list[str] = []

    def add_info(self, line: str):
        self.info.append(line)

    def add_check(self, name: str, anchor: str, status: str, detail: str = "",
                  seconds: float | None = None):
        entry = {"name": name, "anchor": anchor, "status": status, "detail": detail}
        if self.timings and seconds is not None:
            entry["seconds"] = round(seconds, 4)
        self.checks.append(entry)

    @property
    def exit_code(self) -> int:
        return 1 if any(c["status"] == "fail" for c in self.checks) else 0

    def render_text(self) -> str:
        lines = [f"command: {self.command}", f"backend: {self.backend}"]
        lines.extend(self.info)
        for c in self.checks:
            suffix = f" ({c['seconds']}s)" if "seconds" in c else ""
            lines.append(f"check {c['name']}: {c['status']}{suffix}")
            lines.append(f"  verifies: {c['anchor']}")
            if c["detail"]:
                lines.append(f"  {c['detail']}")
        for path in self.artifacts:
            lines.append(f"wrote {path}")
        if self.checks:
            npass = sum(1 for c in self.checks if c["status"] == "pass")
            nfail = sum(1 for c in self.checks if c["status"] == "fail")
            nrec = sum(1 for c in self.checks if c["status"] == "recorded")
            lines.append(f"result: {len(self.checks)} checks, {npass} pass, "
                         f"{nfail} fail, {nrec} recorded")
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        payload = {
            "command": self.command,
            "backend": self.backend,
            "checks": self.checks,
            "artifacts": self.artifacts,
        }
        if self.info:
            payload["info"] = self.info
        return json.dumps(payload, indent=2) + "\n"

    def emit(self, as_json: bool) -> int:
        sys.stdout.write(self.render_json() if as_json else self.render_text())
        return self.exit_code


def _parse_orders(text: str) -> GroupSpec:
    try:
        orders = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse orders {text!r}; expected e.g. 2 or 2,3")
    return GroupSpec(orders)


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse braid word {text!r}; expected e.g. 1,2,-1")


def _build_r(spec: GroupSpec, form: str):
    return universal_r(spec) if form == "product" else universal_r_fused_phase(spec)


def _braided_from(spec: GroupSpec, r) -> BraidedRMatrix:
    rep = regular_representation(spec)
    d = spec.dimension
    return BraidedRMatrix(d, flip_operator(d) @ rep.on_tensor(r),
                          provenance=f"orders {spec.orders}")


def _timed(fn):
    t0 = time.perf_counter()
    ok = fn()
    return ok, time.perf_counter() - t0


def _echo(args_namespace, argv) -> str:
    return " ".join(argv)


# -- gen-r -------------------------------------------------------------------


def cmd_gen_r(args, argv) -> int:
    spec = _parse_orders(args.orders)
    report = Report(_echo(args, argv), args.backend, args.timings)
    r = _build_r(spec, args.form)
    rep = regular_representation(spec)
    d = spec.dimension
    gamma = rep.on_tensor(r)
    flip = flip_operator(d)
    braided = flip @ gamma

    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    float_entries = args.backend == "float"
    files = [
        ("universal_r.json", tensor_to_json(r)),
        ("gamma_r.json", matrix_to_json(gamma, float_entries)),
        ("flip.json", matrix_to_json(flip, float_entries)),
        ("braided_r.json", matrix_to_json(braided, float_entries)),
    ]
    for name, payload in files:
        path = out_dir / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        report.artifacts.append(str(path))

    report.add_info(f"universal r: 2 legs over orders {','.join(map(str, spec.orders))}, "
                    f"{len(r.terms)} terms, field order {spec.field_order}")
    report.add_info(f"gamma(r): {gamma.rows}x{gamma.cols}")
    report.add_info(f"flip: {flip.rows}x{flip.cols}")
    report.add_info(f"braided r: {braided.rows}x{braided.cols}")
    return report.emit(args.json)


# -- check -------------------------------------------------------------------


def cmd_check(args, argv) -> int:
    spec = _parse_orders(args.orders)
    d = spec.dimension
    recorded = args.form == "fused"
    report = Report(_echo(args, argv), args.backend, args.timings)
    tol = args.tolerance

    if args.which == "bell-actions" and d != 2:
        raise ValueError("bell-actions requires local dimension 2 (orders product = 2)")

    selected = [args.which] if args.which != "all" else [
        w for w in ("hopf", "quasitriangular", "ybe", "braided-ybe", "braid",
                    "hexagon", "bell-actions")
        if w != "bell-actions" or d == 2
    ]

    need_r = any(w != "hopf" for w in selected)
    r = _build_r(spec, args.form) if need_r else None

    external = None
    if args.r_matrix:
        data = json.loads(Path(args.r_matrix).read_text())
        m = matrix_from_json(data)
        side = round(m.rows ** 0.5)
        if side * side != m.rows or m.rows != m.cols:
            raise ValueError("imported matrix is not d^2 x d^2")
        external = BraidedRMatrix(side, m, provenance=f"file {args.r_matrix}")

    braided = None

    def get_braided():
        nonlocal braided
        if braided is None:
            braided = external if external is not None else _braided_from(spec, r)
        return braided

    use_float = args.backend == "float"

    def run(name, anchor, exact_fn, float_fn, rec):
        fn = float_fn if use_float and float_fn is not None else exact_fn
        ok, dt = _timed(fn)
        detail = f"float backend, tolerance {tol:g}" if use_float else ""
        if rec:
            status = "recorded"
            note = f"result: {'pass' if ok else 'fail'}"
            detail = f"{note}; {detail}" if detail else note
        else:
            status = "pass" if ok else "fail"
        report.add_check(name, anchor, status, detail, dt)

    for which in selected:
        if which == "hopf":
            run("hopf-axioms", ANCHORS["hopf-axioms"],
                lambda: check_hopf_axioms(spec),
                lambda: floatback.check_hopf_axioms_float(spec, tol),
                False)
        elif which == "quasitriangular":
            run("quasi-cocommutativity", ANCHORS["quasi-cocommutativity"],
                lambda: check_quasi_cocommutative(spec, r),
                lambda: floatback.check_quasi_cocommutative_float(spec, r, tol),
                recorded)
            run("quasitriangular-coproducts", ANCHORS["quasitriangular-coproducts"],
                lambda: check_quasitriangular(spec, r),
                lambda: floatback.check_quasitriangular_float(spec, r, tol),
                recorded)
        elif which == "ybe":
            run("algebraic-ybe", ANCHORS["algebraic-ybe"],
                lambda: check_algebraic_ybe(spec, r),
                lambda: floatback.check_algebraic_ybe_float(spec, r, tol),
                recorded)
        elif which == "braided-ybe":
            gate = get_braided()
            run("braided-ybe", ANCHORS["braided-ybe"],
                lambda: check_braided_ybe(gate),
                lambda: floatback.check_braided_ybe_float(
                    floatback.matrix_complex(gate.matrix), gate.dimension, tol),
                recorded)
        elif which == "braid":
            gate = get_braided()
            strands = args.strands
            run(f"braid-relations-{strands}",
                f"{ANCHORS['braid-relations']} on {strands} strands",
                lambda: check_braid_relations(strands, gate),
                lambda: floatback.check_braid_relations_float(
                    strands, floatback.matrix_complex(gate.matrix), gate.dimension, tol),
                recorded)
        elif which == "hexagon":
            reg = ModuleAction.regular(spec)
            cmap = braiding_map(reg, reg, r)
            run("module-morphism", ANCHORS["module-morphism"],
                lambda: check_module_morphism(cmap, reg, reg),
                lambda: floatback.check_module_morphism_float(
                    floatback.matrix_complex(cmap), reg, reg, tol),
                recorded)
            run("hexagon", ANCHORS["hexagon"],
                lambda: check_hexagon(reg, reg, reg, r),
                lambda: floatback.check_hexagon_float(reg, reg, reg, r, tol),
                recorded)
        elif which == "bell-actions":
            gate = get_braided()

            def exact_bell():
                return all(c.ok for c in verify_bell_actions(gate))

            run("bell-actions", ANCHORS["bell-actions"],
                exact_bell,
                lambda: floatback.check_bell_actions_float(
                    floatback.matrix_complex(gate.matrix), tol),
                recorded)

    return report.emit(args.json)


# -- braid -------------------------------------------------------------------


def cmd_braid(args, argv) -> int:
    spec = _parse_orders(args.orders)
    report = Report(_echo(args, argv), args.backend, args.timings)
    word = BraidWord(args.strands, _parse_word(args.word))
    gate = braided_r(spec)
    matrix = evaluate_braid_word(word, gate)
    d = spec.dimension
    report.add_info(f"word {list(word.letters)} on {word.strands} strands, "
                    f"local dimension {d}: matrix {matrix.rows}x{matrix.cols}")

    if args.output:
        path = Path(args.output)
        payload = matrix_to_json(matrix, args.backend == "float")
        path.write_text(json.dumps(payload, indent=2) + "\n")
        report.artifacts.append(str(path))

    if args.state is not None:
        state = _parse_state(args.state, d, word.strands)
        image = apply_gate(matrix, state)
        for i, amp in enumerate(image.amps):
            z = amp.to_complex()
            re, im = round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0
            digits = _index_digits(i, d, word.strands)
            report.add_info(f"amp |{digits}>: {amp}  ~ {re:+.6f}{im:+.6f}j")
        if d == 2 and word.strands == 2:
            report.add_info(f"concurrence: {concurrence(image):.6f}")
        for cut in range(1, word.strands):
            report.add_info(f"schmidt rank across cut {cut}: {schmidt_rank(image, cut)}")

    return report.emit(args.json)


def _index_digits(index: int, d: int, n: int) -> str:
    return "".join(str((index // d ** p) % d) for p in range(n - 1, -1, -1))


def _parse_state(text: str, d: int, n: int) -> StateVector:
    if text in BELL_KINDS:
        if d != 2 or n != 2:
            raise ValueError("named Bell states need local dimension 2 and two strands")
        return bell_state(text)
    if len(text) != n or not text.isdigit():
        raise ValueError(f"state {text!r} must be {n} digits below {d} or a Bell name")
    return StateVector.computational(d, text)


# -- compare-gates -------------------------------------------------------------


def cmd_compare_gates(args, argv) -> int:
    report = Report(_echo(args, argv), args.backend, args.timings)
    one = 1
    gates = [
        ("braided-r(2)", braided_r(GroupSpec((2,))).matrix),
        ("kl(1,1,1,1)", kauffman_lomonaco_r(one, one, one, one)),
        ("kl(1,-1,1,1)", kauffman_lomonaco_r(one, -one, one, one)),
        ("bell-matrix", bell_matrix()),
    ]
    rows = []
    for name, matrix in gates:
        wrapped = BraidedRMatrix(2, matrix, provenance=name)
        ybe = check_braided_ybe(wrapped)
        unitary = matrix @ conjugate_transpose(matrix) == Matrix.identity(4)
        bell_ok = all(c.ok for c in verify_bell_actions(matrix))
        probe = StateVector(2, 2, [1, 1, 1, 1])
        value = concurrence(apply_gate(matrix, probe))
        rows.append((name, ybe, unitary, bell_ok, value))
        report.add_check(f"{name}:braided-ybe", ANCHORS["braided-ybe"], "recorded",
                         f"result: {'pass' if ybe else 'fail'}")
        report.add_check(f"{name}:unitary", ANCHORS["unitary"], "recorded",
                         f"result: {'yes' if unitary else 'no'}")
        report.add_check(f"{name}:bell-basis", ANCHORS["bell-basis"], "recorded",
                         f"result: {'yes' if bell_ok else 'no'}")
        report.add_check(f"{name}:entangling-probe", ANCHORS["entangling-probe"],
                         "recorded", f"concurrence {value:.6f}")

    header = f"{'gate':<16} {'braided-ybe':<12} {'unitary':<8} {'bell-basis':<11} probe-concurrence"
    report.add_info(header)
    for name, ybe, unitary, bell_ok, value in rows:
        report.add_info(
            f"{name:<16} {('pass' if ybe else 'fail'):<12} "
            f"{('yes' if unitary else 'no'):<8} {('yes' if bell_ok else 'no'):<11} {value:.6f}"
        )
    return report.emit(args.json)


# -- parser --------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--backend", choices=("exact", "float"), default="exact",
                     help="exact cyclotomic arithmetic (default) or the "
                          "floating cross-check backend")
    sub.add_argument("--tolerance", type=float, default=floatback.DEFAULT_TOL,
                     help="absolute entrywise tolerance for the float backend")
    sub.add_argument("--json", action="store_true", help="machine readable report")
    sub.add_argument("--timings", action="store_true",
                     help="include wall times (off by default so reports are "
                          "byte-for-byte reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfbraid",
        description="Exact braided R-matrices, braid representations and "
                    "entangling gates from cyclic group algebras.",
        epilog="Composite indices put the first tensor factor in the most "
               "significant position.  Braid word letters are applied to "
               "states in written order: the first letter is the rightmost "
               "factor of the evaluated matrix product.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    gen = subs.add_parser("gen-r", help="construct and export R, gamma(R), flip, R'")
    gen.add_argument("--orders", required=True, help="comma separated cyclic orders, e.g. 2,3")
    gen.add_argument("--form", choices=("product", "fused"), default="product",
                     help="per-factor phase product (default) or single fused exponent")
    gen.add_argument("--output", default=".", help="output directory")
    _add_common(gen)
    gen.set_defaults(func=cmd_gen_r)

    chk = subs.add_parser("check", help="run exact identity checkers")
    chk.add_argument("--orders", required=True, help="comma separated cyclic orders")
    chk.add_argument("--which", choices=WHICH_CHOICES, default="all")
    chk.add_argument("--form", choices=("product", "fused"), default="product",
                     help="fused-form checks are reported as 'recorded' and never "
                          "affect the exit code")
    chk.add_argument("--strands", type=int, default=3,
                     help="strand count for the braid-relations check")
    chk.add_argument("--r-matrix", default=None,
                     help="JSON matrix file to use as R' for braided-ybe/braid checks")
    _add_common(chk)
    chk.set_defaults(func=cmd_check)

    brd = subs.add_parser("braid", help="evaluate a braid word, optionally on a state")
    brd.add_argument("--orders", required=True, help="comma separated cyclic orders")
    brd.add_argument("--strands", type=int, required=True)
    brd.add_argument("--word", default="", help="e.g. 1,2,-1; empty for the identity")
    brd.add_argument("--state", default=None,
                     help="phi+/phi-/psi+/psi- (two qubits) or a digit string per strand")
    brd.add_argument("--output", default=None, help="write the word matrix as JSON")
    _add_common(brd)
    brd.set_defaults(func=cmd_braid)

    cmp_ = subs.add_parser("compare-gates",
                           help="side-by-side diagnostics of the d=2 braided gate, "
                                "the unit-scalar family gates, and the Bell matrix")
    _add_common(cmp_)
    cmp_.set_defaults(func=cmd_compare_gates)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, list(argv))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
