"""
Command line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
import argparse
import csv
import io
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from pydantic import BaseModel

from claspkit.clasp_engine import KappaTable
from claspkit.config import Settings, configure_logging
from claspkit.engine import no_clock
from claspkit.errors import ClaspKitError
from claspkit.models import (
    DimsResponse, ExpandResponse, FusionResponse, KappaMode, KappaTableResponse, OutputFormat,
    VerifyResponse, VerifyScope,
)
from claspkit.pipelines import run_key, run_verification
from claspkit.render import format_lp
from claspkit.reports import dims_report, expand_report, fusion_report, kappa_table, parse_path, parse_range
from claspkit.rep_combinatorics import WeightWord
from claspkit.root_data import Weight
from claspkit.storage import load_memo, save_memo

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _weight(values: List[int]) -> str:
    return f"({values[0]},{values[1]})"


# ---- text renderers ---------------------------------------------------------

def _kappa_text(response: KappaTableResponse) -> List[str]:
    lines = []
    for r in response.records:
        line = f"kappa[({r.a},{r.b}),{_weight(r.mu)}] = {r.value.text}"
        if r.matches is not None:
            line += "  ok" if r.matches else f"  MISMATCH recursive={r.recursive.text}"
        lines.append(line)
    lines.append(f"{response.count} values, mode {response.mode.value}")
    return lines


def _verify_text(response: VerifyResponse) -> List[str]:
    lines = []
    for cert in response.certificates:
        lines.append(f"{cert.name} {_weight(cert.mu)}: {cert.status}")
        if cert.status != "verified":
            lines.append(f"  difference: {format_lp(cert.difference.to_poly())}")
    if response.grid_report:
        g = response.grid_report
        lines.append(f"grid 0..{g.a_max} x 0..{g.b_max}: {g.compared} compared, "
                     f"{len(g.mismatches)} mismatches, {g.skipped} outside S")
    for check in response.corollary:
        lines.append(f"corollary {_weight(check.varpi)} sign {check.sign:+d}: {check.checked} weights, {check.status}")
    if response.scope != VerifyScope.RECURSIONS:
        lines.append("[2n] = [2][n]_{q^2} for n <= 20: " + ("failed for " + str(response.bracket_failures)
                                                          if response.bracket_failures else "verified"))
    if response.error:
        lines.append(f"error: {response.error}")
    lines.append("PASSED" if response.passed else "FAILED")
    return lines


def _expand_text(response: ExpandResponse) -> List[str]:
    cert = response.certificate
    lines = [f"clasp {_weight(cert.target)} along path {''.join(map(str, cert.path)) or '(empty)'}"]
    for step in cert.steps:
        lines.append(f"  {_weight(step.weight)} + w{step.letter}: {len(step.corrections)} corrections")
        for c in step.corrections:
            lines.append(f"    mu={_weight(c.mu)} -> {_weight(c.child)}  kappa = {c.kappa.text}")
    if response.existence:
        e = response.existence
        if e.exists:
            lines.append(f"exists at ell={e.ell}: yes")
        else:
            lines.append(f"exists at ell={e.ell}: no, kappa[{_weight(e.failing_lambda)},{_weight(e.failing_mu)}] "
                         f"has vanishing {e.vanishing}")
        if e.negligible_steps:
            lines.append("negligible weights on the path: " + ", ".join(_weight(w) for w in e.negligible_steps))
    return lines


def _fusion_text(response: FusionResponse) -> List[str]:
    lines = [
        f"ell={response.ell} ({response.parity})",
        "upper closure: " + ", ".join(_weight(w) for w in response.upper_closure),
        "lowest alcove interior: " + ", ".join(_weight(w) for w in response.interior),
    ]
    for w in response.weights:
        lines.append(f"  {_weight(w.weight)} {w.region}: dim {w.quantum_dim}, "
                     f"{'negligible' if w.negligible else 'not negligible'}")
    lines.append(f"-[6][2]/[3] = -[2]_{{q^2}} at this root: {str(response.ell8_identity).lower()}")
    return lines


def _dims_text(response: DimsResponse) -> List[str]:
    lines = [f"word {response.word}"]
    for e in response.entries:
        lines.append(f"  V{_weight(e.weight)} x{e.multiplicity}  dim {e.weyl_dim}  qdim {e.quantum_dim}")
    lines.append(f"total dim {response.total_dim}, dim End = {response.dim_end}")
    return lines


# ---- csv renderers ------------------------------------------------------------

def _csv_rows(response: BaseModel) -> List[List[str]]:
    if isinstance(response, KappaTableResponse):
        rows = [["a", "b", "mu", "value", "matches"]]
        rows += [[str(r.a), str(r.b), _weight(r.mu), r.value.text, "" if r.matches is None else str(r.matches)]
                 for r in response.records]
    elif isinstance(response, VerifyResponse):
        rows = [["check", "mu", "status"]]
        rows += [[c.name, _weight(c.mu), c.status] for c in response.certificates]
        if response.grid_report:
            rows.append(["grid", "", response.grid_report.status])
        rows += [["corollary", _weight(c.varpi), c.status] for c in response.corollary]
    elif isinstance(response, ExpandResponse):
        rows = [["step", "weight", "letter", "mu", "child", "kappa"]]
        for i, step in enumerate(response.certificate.steps):
            for c in step.corrections:
                rows.append([str(i), _weight(step.weight), str(step.letter), _weight(c.mu), _weight(c.child), c.kappa.text])
    elif isinstance(response, FusionResponse):
        rows = [["weight", "region", "negligible", "quantum_dim"]]
        rows += [[_weight(w.weight), w.region, str(w.negligible), w.quantum_dim] for w in response.weights]
    else:
        rows = [["weight", "multiplicity", "weyl_dim", "quantum_dim"]]
        rows += [[_weight(e.weight), str(e.multiplicity), str(e.weyl_dim), e.quantum_dim] for e in response.entries]
    return rows


TEXT_RENDERERS = {
    KappaTableResponse: _kappa_text,
    VerifyResponse: _verify_text,
    ExpandResponse: _expand_text,
    FusionResponse: _fusion_text,
    DimsResponse: _dims_text,
}


def emit(response: BaseModel, fmt: OutputFormat, out: TextIO) -> None:
    if fmt == OutputFormat.JSON:
        out.write(response.model_dump_json(indent=2) + "\n")
    elif fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="\n").writerows(_csv_rows(response))
        out.write(buffer.getvalue())
    else:
        out.write("\n".join(TEXT_RENDERERS[type(response)](response)) + "\n")


# ---- commands ---------------------------------------------------------------------

def cmd_kappa(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    mode = KappaMode(args.mode)
    mu = Weight.parse(args.mu) if args.mu else None
    recursive = KappaTable("recursive")
    if settings.memo_path and mode != KappaMode.CLOSED:
        load_memo(settings.memo_path, recursive, settings.memo_sample, settings.seed)
    response = kappa_table(parse_range(args.a), parse_range(args.b), mu, mode, recursive)
    if settings.memo_path and mode != KappaMode.CLOSED:
        save_memo(settings.memo_path, recursive)
    emit(response, OutputFormat(args.format), out)
    return EXIT_FAILED if response.mismatches else EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    grid = settings.grid if args.grid is None else args.grid
    scope = VerifyScope(args.scope)
    response = run_verification(scope, grid, args.fail_fast, run_id=run_key(scope, grid, args.fail_fast), clock=no_clock)
    emit(response, OutputFormat(args.format), out)
    return EXIT_OK if response.passed else EXIT_FAILED


def cmd_expand(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    response = expand_report(Weight(args.a, args.b), parse_path(args.path), args.ell)
    emit(response, OutputFormat(args.format), out)
    return EXIT_OK


def cmd_fusion(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    emit(fusion_report(args.ell), OutputFormat(args.format), out)
    return EXIT_OK


def cmd_dims(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    emit(dims_report(WeightWord.parse(args.word)), OutputFormat(args.format), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")

    parser = argparse.ArgumentParser(prog="claspkit", description="Clasp coefficients of the C2 web category")
    commands = parser.add_subparsers(dest="command", required=True)

    kappa = commands.add_parser("kappa", parents=[common], help="tabulate local intersection forms")
    kappa.add_argument("--a", default="0..3", help="range lo..hi of a")
    kappa.add_argument("--b", default="0..3", help="range lo..hi of b")
    kappa.add_argument("--mu", help="only this weight, as x,y")
    kappa.add_argument("--mode", choices=[m.value for m in KappaMode], default=KappaMode.CLOSED.value)
    kappa.set_defaults(handler=cmd_kappa)

    verify = commands.add_parser("verify", parents=[common], help="prove the closed forms")
    verify.add_argument("--scope", choices=[s.value for s in VerifyScope], default=VerifyScope.ALL.value)
    verify.add_argument("--grid", type=int, help="side of the numeric grid (default from CLASPKIT_GRID)")
    verify.add_argument("--fail-fast", action="store_true", help="skip remaining stages after a failure")
    verify.set_defaults(handler=cmd_verify)

    expand = commands.add_parser("expand", parents=[common], help="triple clasp expansion of a weight")
    expand.add_argument("a", type=int)
    expand.add_argument("b", type=int)
    expand.add_argument("--path", help="letters 1 and 2 in order, default 1...12...2")
    expand.add_argument("--ell", type=int, help="also decide existence at q = exp(i pi / ell)")
    expand.set_defaults(handler=cmd_expand)

    fusion = commands.add_parser("fusion", parents=[common], help="negligible objects at a root of unity")
    fusion.add_argument("ell", type=int)
    fusion.set_defaults(handler=cmd_fusion)

    dims = commands.add_parser("dims", parents=[common], help="decomposition of a tensor word")
    dims.add_argument("word")
    dims.set_defaults(handler=cmd_dims)
    return parser


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """Rewrite '--mu -1,1' as '--mu=-1,1' so argparse does not read it as an option"""
    joined: List[str] = []
    args = list(argv)
    i = 0
    while i < len(args):
        if args[i] in ("--mu", "--a", "--b") and i + 1 < len(args) and args[i + 1][:1] == "-" and args[i + 1][1:2].isdigit():
            joined.append(f"{args[i]}={args[i + 1]}")
            i += 2
            continue
        joined.append(args[i])
        i += 1
    return joined


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        settings = Settings.from_env()
        configure_logging(settings, args.verbose)
        return args.handler(args, settings, out)
    except ClaspKitError as e:
        logger.debug("Usage error", exc_info=True)
        print(f"claspkit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
