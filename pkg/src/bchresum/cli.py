"""Command-line entry point.

Exit codes: 0 on success (verify matched / residual zero), 1 when a
verification or residual check fails, 2 on usage errors.  Output is
deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import render
from .diagrams import pi_diagrams, tree_to_dot, tree_to_text
from .kernel import bernoulli, kernel_series_check
from .oracle import verify
from .resummation import ode_residual, psi_by_descendants, q_series
from .trees import leaf_count, node_count


@dataclass
class RunConfig:
    command: str
    max_order: int = 5
    trunc_degree: int = 8
    order: int = 1
    out_format: str = "text"
    out_path: Path | None = None
    out_dir: Path | None = None
    report_json: bool = False
    bernoulli_max: int = 12


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchresum",
        description="Exact resummation of log(e^x e^y) in powers of x+y, "
                    "with a brute-force oracle and diagram export.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_order=False):
        if with_order:
            p.add_argument("--order", type=int, required=True,
                           help="grading order n (power of x+y)")
        else:
            p.add_argument("--max-order", type=int, default=5,
                           help="highest grading order N (default 5)")
        p.add_argument("--degree", type=int, default=8,
                       help="word-length truncation D (default 8)")

    p_q = sub.add_parser("qseries", help="print q_1..q_N over the (u, w) alphabet")
    add_common(p_q)
    p_q.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_q.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")

    p_pi = sub.add_parser("pi", help="print one graded part with its symbolic t powers")
    add_common(p_pi, with_order=True)
    p_pi.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_pi.add_argument("--out", type=Path, default=None)

    p_v = sub.add_parser("verify", help="compare the resummed series with log(e^x e^y)")
    add_common(p_v)
    p_v.add_argument("--report", choices=("json",), default=None,
                     help="emit the comparison report as JSON")

    p_r = sub.add_parser("residual", help="check the flow-equation residual is zero")
    add_common(p_r)

    p_d = sub.add_parser("diagrams", help="emit the diagrams of one grading order")
    p_d.add_argument("--order", type=int, required=True)
    p_d.add_argument("--format", choices=("dot", "text"), default="dot")
    p_d.add_argument("--out-dir", type=Path, default=None,
                     help="write one file per diagram instead of stdout")

    p_b = sub.add_parser("bernoulli", help="print exact Bernoulli numbers")
    p_b.add_argument("--max", type=int, required=True, help="largest index to print")
    return parser


def _emit(text: str, out_path: Path | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        out_path.write_text(text)


def cmd_qseries(cfg: RunConfig) -> int:
    polys = q_series(cfg.max_order, cfg.trunc_degree)
    if cfg.out_format == "json":
        doc = {"max_order": cfg.max_order, "trunc_degree": cfg.trunc_degree,
               "series": [{"order": m + 1, **render.poly_to_dict(p)}
                          for m, p in enumerate(polys)]}
        _emit(render.dumps(doc), cfg.out_path)
    else:
        to_str = render.poly_to_latex if cfg.out_format == "latex" else render.poly_to_text
        lines = [f"q_{m + 1} = {to_str(p)}" for m, p in enumerate(polys)]
        _emit("\n".join(lines) + "\n", cfg.out_path)
    return 0


def cmd_pi(cfg: RunConfig) -> int:
    part = psi_by_descendants(cfg.order, cfg.trunc_degree).part(cfg.order)
    if cfg.out_format == "json":
        doc = {"order": cfg.order, **render.tseries_to_dict(part)}
        _emit(render.dumps(doc), cfg.out_path)
    elif cfg.out_format == "latex":
        _emit(render.tseries_to_latex(part) + "\n", cfg.out_path)
    else:
        _emit(render.tseries_to_text(part) + "\n", cfg.out_path)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    report = verify(cfg.max_order, cfg.trunc_degree)
    if cfg.report_json:
        doc = {
            "degree": report.degree,
            "max_order": report.max_order,
            "matched": report.matched,
            "first_discrepancy": None if report.first_discrepancy is None else {
                "word": report.first_discrepancy[0],
                "expected": render.scalar_str(report.first_discrepancy[1]),
                "actual": render.scalar_str(report.first_discrepancy[2]),
            },
            "per_degree_term_counts": [
                {"degree": deg, "direct_terms": a, "resummed_terms": b}
                for deg, a, b in report.per_degree_term_counts],
        }
        sys.stdout.write(render.dumps(doc))
    else:
        status = "MATCH" if report.matched else "MISMATCH"
        sys.stdout.write(
            f"{status}: resummed series vs direct log(e^x e^y) "
            f"at degree {report.degree}, max order {report.max_order}\n")
        if report.first_discrepancy is not None:
            word, expected, actual = report.first_discrepancy
            sys.stdout.write(f"first differing word {word!r}: "
                             f"expected {expected}, got {actual}\n")
    return 0 if report.matched else 1


def cmd_residual(cfg: RunConfig) -> int:
    graded = psi_by_descendants(cfg.max_order, cfg.trunc_degree)
    residual = ode_residual(graded)
    if residual.is_zero():
        sys.stdout.write(f"residual is identically zero "
                         f"(max order {cfg.max_order}, degree {cfg.trunc_degree})\n")
        return 0
    sys.stdout.write("nonzero residual:\n" + render.tseries_to_text(residual) + "\n")
    return 1


def cmd_diagrams(cfg: RunConfig) -> int:
    doc = pi_diagrams(cfg.order)
    if cfg.out_dir is not None:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
    chunks = []
    for index, (tree, weight, _) in enumerate(doc.entries):
        if cfg.out_format == "dot":
            body = tree_to_dot(tree, weight)
            name = f"pi{cfg.order}_diagram{index}.dot"
        else:
            body = (f"weight {weight}  r={leaf_count(tree)} s={node_count(tree)}  "
                    f"{tree_to_text(tree, leaf_name='psi0')}\n")
            name = f"pi{cfg.order}_diagram{index}.txt"
        if cfg.out_dir is not None:
            (cfg.out_dir / name).write_text(body)
        else:
            chunks.append(body)
    if cfg.out_dir is None:
        sys.stdout.write("\n".join(chunks) if cfg.out_format == "dot" else "".join(chunks))
    return 0


def cmd_bernoulli(cfg: RunConfig) -> int:
    for n in range(cfg.bernoulli_max + 1):
        sys.stdout.write(f"{n}: {render.scalar_str(bernoulli(n))}\n")
    return 0


_HANDLERS = {
    "qseries": cmd_qseries,
    "pi": cmd_pi,
    "verify": cmd_verify,
    "residual": cmd_residual,
    "diagrams": cmd_diagrams,
    "bernoulli": cmd_bernoulli,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    cfg = RunConfig(command=args.command)
    if hasattr(args, "max_order"):
        cfg.max_order = args.max_order
    if hasattr(args, "degree"):
        cfg.trunc_degree = args.degree
    if hasattr(args, "order"):
        cfg.order = args.order
    if hasattr(args, "format"):
        cfg.out_format = args.format
    if hasattr(args, "out"):
        cfg.out_path = args.out
    if hasattr(args, "out_dir"):
        cfg.out_dir = args.out_dir
    if getattr(args, "report", None) == "json":
        cfg.report_json = True
    if hasattr(args, "max"):
        cfg.bernoulli_max = args.max

    def usage_error(message: str) -> int:
        sys.stderr.write(f"bchresum {cfg.command}: {message}\n")
        return 2

    if cfg.command in ("qseries", "verify", "residual") and cfg.max_order < 1:
        return usage_error("--max-order must be at least 1")
    if cfg.command in ("pi", "diagrams") and cfg.order < 1:
        return usage_error("--order must be at least 1")
    if cfg.command in ("qseries", "pi", "verify", "residual") and cfg.trunc_degree < 1:
        return usage_error("--degree must be at least 1")
    if cfg.command == "verify" and cfg.max_order < cfg.trunc_degree:
        return usage_error(
            "--max-order must be >= --degree: a grading-order-m part has degree >= m, "
            "so lower orders cannot cover all words up to the requested degree")
    if cfg.command == "bernoulli" and cfg.bernoulli_max < 0:
        return usage_error("--max must be nonnegative")

    return _HANDLERS[cfg.command](cfg)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
