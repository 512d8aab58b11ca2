"""Command-line front end.

Every command writes a line-oriented ``key: value`` report to stdout.  Exit
status: 0 when every verdict holds, 1 when one fails, 2 on usage or parse
errors.  Reports contain no timestamps or machine details; ``--golden PATH``
compares the report byte-for-byte against a stored copy and ``--bless``
rewrites that copy.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import textio
from .algebra import (
    DEFAULT_WITNESS_CAP,
    HomNambuAlgebra,
    IdentityReport,
    verify_hom_lie,
    verify_hom_nambu,
    verify_hom_nambu_multiplicative,
    verify_leibniz,
    verify_morphism,
    verify_multiplicative,
)
from .cohomology import (
    adjoint_module,
    cochain_spaces,
    cocycle_residual,
    semidirect_algebra,
    split_check,
    trivial_module,
    verify_representation,
)
from .constructions import (
    compose_twist,
    tensor_hom_leibniz,
    tensor_leibniz,
    tensor_power_nary,
    twist_by_endomorphism,
)
from .derivations import (
    assemble_der_algebra,
    check_inn_ideal,
    derivation_space,
    is_derivation,
    inner_space,
    omega_derivation_space,
)
from .errors import HomNambuError, ParseError
from .exact import Matrix, format_rational, subspace_membership

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHECKS = ("hom-nambu", "nambu-mult", "multiplicative", "leibniz", "hom-lie")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Report:
    lines: list = field(default_factory=list)
    failed: bool = False

    def add(self, key, value):
        self.lines.append(f"{key}: {value}")

    def block(self, key, rows):
        self.lines.append(f"{key}:")
        self.lines.extend(f"  {r}" for r in rows)

    def verdict(self, name, rep: IdentityReport, one_based=True):
        extra = f"{rep.instances} instances"
        if rep.flagged:
            extra += f", {rep.flagged} out of range"
        self.add(f"verdict {name}", f"{'holds' if rep.holds else 'fails'} ({extra})")
        if not rep.holds:
            self.failed = True
            self.block(f"witnesses {name}", [_witness(w, one_based) for w in rep.witnesses])

    def flag(self, name, ok: bool, detail=""):
        self.add(f"verdict {name}", ("holds" if ok else "fails") + (f" ({detail})" if detail else ""))
        if not ok:
            self.failed = True

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _tuple(ix, one_based):
    return "(" + ", ".join(str(i + 1) if one_based and isinstance(i, int) else str(i)
                           for i in ix) + ")"


def _vec(v):
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _witness(w, one_based):
    ix, left, right = w
    if not left and not right:
        return _tuple(ix, one_based)
    return f"{_tuple(ix, one_based)} left={_vec(left)} right={_vec(right)}"


def _matrix_rows(m: Matrix):
    return [" ".join(format_rational(x) for x in m.row(r)) for r in range(m.rows)]


def _matrix_block(report, key, m: Matrix):
    report.block(key, _matrix_rows(m))


def _sparse_coords(v):
    parts = [f"{i + 1}:{format_rational(x)}" for i, x in enumerate(v) if x]
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# inputs


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_algebra(report, path, label="input"):
    text = _read(path)
    alg = textio.parse_algebra(text)
    canon = textio.serialize_algebra(alg)
    report.add(label, f"{path} sha256={textio.digest(canon)}")
    return alg


def _matrix_arg(text, dim):
    if os.path.isfile(text):
        text = _read(text)
    return textio.parse_matrix(text, dim)


def _module(report, args, alg):
    if getattr(args, "rep", None):
        text = _read(args.rep)
        rep = textio.parse_representation(text)
        report.add("module", f"{args.rep} sha256="
                   f"{textio.digest(textio.serialize_representation(rep))}")
    elif getattr(args, "adjoint", False):
        rep = adjoint_module(alg)
        report.add("module", "adjoint")
    else:
        rep = trivial_module(alg, args.trivial)
        report.add("module", f"trivial {args.trivial}")
    return rep


def _cochain(report, path, label="cochain"):
    text = _read(path)
    name, d, n, m, f = textio.parse_cochain(text)
    report.add(label, f"{path} sha256={textio.digest(textio.serialize_cochain(f, name))}")
    return f


def _emit_algebra(report, args, alg: HomNambuAlgebra, label="output"):
    canon = textio.serialize_algebra(alg)
    again = textio.parse_algebra(canon)
    report.add(f"{label} dim", alg.dim)
    report.add(f"{label} arity", alg.arity)
    report.add(f"{label} constants", len(alg.bracket.constants))
    report.add(f"{label} sha256", textio.digest(canon))
    report.flag("round-trip", again == alg)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canon)


def _precondition(report, exc: HomNambuError):
    report.add("precondition", f"fails ({type(exc).__name__}: {exc})")
    report.failed = True


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args, report):
    alg = _load_algebra(report, args.algebra)
    report.add("dim", alg.dim)
    report.add("arity", alg.arity)
    report.add("twists-equal", "yes" if alg.twists_equal else "no")
    report.add("untwisted", "yes" if alg.untwisted_flag else "no")
    for check in args.check or ["hom-nambu"]:
        if check == "hom-nambu":
            report.verdict(check, verify_hom_nambu(alg, args.cap))
        elif check == "nambu-mult":
            if not alg.twists_equal:
                _precondition(report, HomNambuError("twists are not all equal"))
                continue
            report.verdict(check, verify_hom_nambu_multiplicative(alg, args.cap))
        elif check == "multiplicative":
            report.verdict(check, verify_multiplicative(alg, args.cap))
        elif check == "leibniz":
            report.verdict(check, verify_leibniz(alg, args.cap))
        elif check == "hom-lie":
            if alg.arity != 2:
                _precondition(report, HomNambuError("hom-lie needs a binary bracket"))
                continue
            report.verdict(check, verify_hom_lie(alg, args.cap))


def cmd_morphism(args, report):
    src = _load_algebra(report, args.algebra, "source")
    tgt = _load_algebra(report, args.target, "target") if args.target else src
    text = _read(args.map) if os.path.isfile(args.map) else args.map
    f = textio.parse_matrix(text, src.dim if text.strip() == "id" else None)
    if f.shape != (tgt.dim, src.dim):
        raise UsageError(f"map has shape {f.shape}, expected {(tgt.dim, src.dim)}")
    _matrix_block(report, "map", f)
    report.verdict("morphism", verify_morphism(f, src, tgt, args.cap))


def cmd_twist(args, report):
    alg = _load_algebra(report, args.algebra)
    if (args.rho is None) == (args.beta is None):
        raise UsageError("give exactly one of --rho or --beta")
    label = "rho" if args.rho is not None else "beta"
    m = _matrix_arg(args.rho if args.rho is not None else args.beta, alg.dim)
    _matrix_block(report, label, m)
    try:
        out = twist_by_endomorphism(alg, m) if label == "rho" else compose_twist(alg, m)
    except HomNambuError as exc:
        _precondition(report, exc)
        return
    _emit_algebra(report, args, out)
    report.verdict("multiplicative", verify_multiplicative(out, args.cap))
    report.verdict("hom-nambu", verify_hom_nambu(out, args.cap))


def _basis_block(report, degree, basis):
    report.add(f"degree {degree} dimension", len(basis))
    for t, m in enumerate(basis, 1):
        _matrix_block(report, f"degree {degree} basis {t}", m)


def cmd_derive(args, report):
    alg = _load_algebra(report, args.algebra)
    if (args.k is None) == (args.kmax is None):
        raise UsageError("give exactly one of --k or --kmax")
    if not alg.multiplicative_flag:
        _precondition(report, HomNambuError("algebra is not multiplicative"))
        return
    if args.k is not None:
        space = derivation_space(alg, args.k)
        report.add("degree", args.k)
        report.add("dimension", space.dimension)
        for t, m in enumerate(space.basis, 1):
            _matrix_block(report, f"basis {t}", m)
        report.flag("basis-derivations", all(is_derivation(D, alg, args.k) for D in space.basis))
        return
    gda = assemble_der_algebra(alg, args.kmax)
    report.add("kmax", args.kmax)
    report.add("dimensions", " ".join(str(s.dimension) for s in gda.spaces))
    for s in gda.spaces:
        _basis_block(report, s.degree, s.basis)
    report.add("pairs beyond kmax", gda.out_of_truncation)
    report.flag("additivity", not gda.additivity_failures,
                f"{len(gda.additivity_failures)} failures")
    report.verdict("der-hom-lie", gda.hom_lie_report(args.cap))


def cmd_inner(args, report):
    alg = _load_algebra(report, args.algebra)
    if not alg.multiplicative_flag:
        _precondition(report, HomNambuError("algebra is not multiplicative"))
        return
    inner = inner_space(alg, args.k)
    report.add("degree", args.k)
    report.add("fixed-subspace dimension", len(inner.fixed_basis))
    report.add("generators", len(inner.generators))
    report.add("dimension", inner.dimension)
    for t, m in enumerate(inner.basis, 1):
        _matrix_block(report, f"basis {t}", m)
    ok = all(is_derivation(ad, alg, args.k + 1) for _, ad in inner.generators)
    report.flag(f"generators-in-der-{args.k + 1}", ok)
    report.add("ideal kmax", args.kmax)
    report.verdict("inner-ideal", check_inn_ideal(alg, args.kmax, args.cap), one_based=False)


def cmd_omega_derive(args, report):
    alg = _load_algebra(report, args.algebra)
    omega = alg.bracket
    if args.omega:
        omega = _cochain(report, args.omega, "omega")
        if omega.target_dim != alg.dim or any(s != alg.dim for s in omega.source_dims):
            raise UsageError("omega must map the algebra's space to itself")
    alpha = _matrix_arg(args.alpha, alg.dim) if args.alpha else alg.alpha
    _matrix_block(report, "alpha", alpha)
    space = omega_derivation_space(alg.dim, omega, alpha, args.k)
    report.add("degree", args.k)
    report.add("dimension", space.dimension)
    for t, m in enumerate(space.basis, 1):
        _matrix_block(report, f"basis {t}", m)
    if not args.omega and not args.alpha and alg.multiplicative_flag:
        der = derivation_space(alg, args.k)
        same = (len(der.basis) == len(space.basis)
                and all(subspace_membership(v, space.flat()) for v in der.flat())
                and all(subspace_membership(v, der.flat()) for v in space.flat()))
        report.flag("equals-derivation-space", same)


def cmd_tensor(args, report):
    alg = _load_algebra(report, args.algebra)
    report.add("variant", args.variant)
    try:
        if args.variant == "plain":
            built = tensor_leibniz(alg)
        elif args.variant == "hom":
            built = tensor_hom_leibniz(alg)
        else:
            if args.k is None:
                raise UsageError("--variant power needs --k")
            if (alg.arity - 1) % args.k:
                raise UsageError(f"arity {alg.arity} is not k*n+1 for k={args.k}")
            n = (alg.arity - 1) // args.k
            report.add("k", args.k)
            report.add("n", n)
            built = tensor_power_nary(alg, args.k, n)
    except HomNambuError as exc:
        _precondition(report, exc)
        return
    _emit_algebra(report, args, built.algebra)
    for name, rep in built.verdicts.items():
        report.verdict(name, rep)


def cmd_rep_verify(args, report):
    alg = _load_algebra(report, args.algebra)
    rep = _module(report, args, alg)
    report.add("module_dim", rep.module_dim)
    report.verdict("representation", verify_representation(alg, rep, args.cap))


def cmd_cohomology(args, report):
    alg = _load_algebra(report, args.algebra)
    rep = _module(report, args, alg)
    rep_ok = verify_representation(alg, rep, args.cap)
    report.verdict("representation", rep_ok)
    if not rep_ok.holds:
        return
    cs = cochain_spaces(alg, rep, check=False)
    report.add("cochain dimension", rep.module_dim * alg.dim ** alg.arity)
    report.add("dim Z", cs.z_dim)
    report.add("dim B", cs.b_dim)
    report.add("ext", cs.ext_dim)
    report.block("Z basis", [_sparse_coords(v) for v in cs.z_basis])
    report.block("B basis", [_sparse_coords(v) for v in cs.b_basis])
    report.flag("B-in-Z", all(subspace_membership(v, cs.z_basis) for v in cs.b_basis))


def cmd_split(args, report):
    alg = _load_algebra(report, args.algebra)
    rep = _module(report, args, alg)
    f = _cochain(report, args.cochain)
    rep_ok = verify_representation(alg, rep, args.cap)
    report.verdict("representation", rep_ok)
    if not rep_ok.holds:
        return
    coc = cocycle_residual(alg, rep, f, args.cap, check=False)
    report.verdict("cocycle", coc)
    if not coc.holds:
        return
    h = split_check(alg, rep, f, check=False)
    if h is None:
        report.add("split", "no")
    else:
        report.add("split", "yes")
        _matrix_block(report, "h", h)


def cmd_extension(args, report):
    alg = _load_algebra(report, args.algebra)
    rep = _module(report, args, alg)
    f = _cochain(report, args.cochain) if args.cochain else None
    rep_ok = verify_representation(alg, rep, args.cap)
    report.verdict("representation", rep_ok)
    if not rep_ok.holds:
        return
    H = semidirect_algebra(alg, rep, f, check=False)
    _emit_algebra(report, args, H)
    ext_ok = verify_hom_nambu(H, args.cap)
    report.verdict("extension hom-nambu", ext_ok)
    if f is not None:
        coc = cocycle_residual(alg, rep, f, args.cap, check=False)
        report.verdict("cocycle", coc)
        report.flag("cocycle-iff-extension", coc.holds == ext_ok.holds)


# ---------------------------------------------------------------------------
# dispatch


def _module_opts(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rep", help="representation file")
    g.add_argument("--trivial", type=int, default=1, metavar="M",
                   help="trivial module of dimension M (default)")
    g.add_argument("--adjoint", action="store_true", help="adjoint module")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homnambu", description="Exact checks on n-ary Hom-Nambu algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def command(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--cap", type=int, default=DEFAULT_WITNESS_CAP, help="witnesses listed")
        p.add_argument("--golden", help="compare the report with this file")
        p.add_argument("--bless", action="store_true", help="write the report to --golden")
        return p

    p = command("verify", cmd_verify, "check identities of an algebra")
    p.add_argument("algebra")
    p.add_argument("--check", action="append", choices=CHECKS)

    p = command("morphism", cmd_morphism, "check a linear map is a morphism")
    p.add_argument("algebra")
    p.add_argument("target", nargs="?")
    p.add_argument("--map", required=True)

    p = command("twist", cmd_twist, "twist by an endomorphism or compose with a morphism")
    p.add_argument("algebra")
    p.add_argument("--rho")
    p.add_argument("--beta")
    p.add_argument("--out")

    p = command("derive", cmd_derive, "alpha^k-derivations and the graded Der(g)")
    p.add_argument("algebra")
    p.add_argument("--k", type=int)
    p.add_argument("--kmax", type=int)

    p = command("inner", cmd_inner, "inner derivations and the ideal property")
    p.add_argument("algebra")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kmax", type=int, default=3)

    p = command("omega-derive", cmd_omega_derive, "omega-alpha^k-derivations")
    p.add_argument("algebra")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--omega", help="cochain file used as omega (default: the bracket)")
    p.add_argument("--alpha")

    p = command("tensor", cmd_tensor, "brackets on tensor powers")
    p.add_argument("algebra")
    p.add_argument("--variant", choices=("plain", "hom", "power"), default="plain")
    p.add_argument("--k", type=int)
    p.add_argument("--out")

    p = command("rep-verify", cmd_rep_verify, "check a representation")
    p.add_argument("algebra")
    _module_opts(p)

    p = command("cohomology", cmd_cohomology, "cocycles, coboundaries and Ext")
    p.add_argument("algebra")
    _module_opts(p)

    p = command("split", cmd_split, "does a cocycle split")
    p.add_argument("algebra")
    p.add_argument("cochain")
    _module_opts(p)

    p = command("extension", cmd_extension, "build M ⊕ g and verify it")
    p.add_argument("algebra")
    p.add_argument("cochain", nargs="?")
    _module_opts(p)
    p.add_argument("--out")
    return parser


def _echo(argv: Sequence[str]) -> str:
    out = []
    skip = False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--bless":
            continue
        if tok == "--golden":
            skip = True
            continue
        if tok.startswith("--golden="):
            continue
        out.append(tok)
    return " ".join(out)


def run_command(argv: Sequence[str]) -> tuple:
    """Run one command; return (report text, exit status)."""
    argv = list(argv)
    report = Report()
    try:
        args = build_parser().parse_args(argv)
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        report.add("command", _echo(argv))
        args.fn(args, report)
    except (UsageError, ParseError) as exc:
        return f"error: {exc}\n", EXIT_USAGE
    except HomNambuError as exc:
        _precondition(report, exc)
    code = EXIT_FAIL if report.failed else EXIT_OK
    report.add("status", "fail" if report.failed else "ok")
    text = report.text()
    if args.golden:
        if args.bless:
            os.makedirs(os.path.dirname(args.golden) or ".", exist_ok=True)
            with open(args.golden, "w", encoding="utf-8") as fh:
                fh.write(text)
            text += "golden: blessed\n"
        elif not os.path.isfile(args.golden):
            text += "golden: missing\n"
            code = EXIT_FAIL
        else:
            with open(args.golden, encoding="utf-8") as fh:
                same = fh.read() == text
            text += "golden: match\n" if same else "golden: mismatch\n"
            if not same:
                code = EXIT_FAIL
    elif args.bless:
        return "error: --bless needs --golden\n", EXIT_USAGE
    return text, code


def main(argv: Sequence[str] | None = None) -> int:
    text, code = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
