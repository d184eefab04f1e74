"""
latticectl 하위 명령
- graph-lattice: DSL 그래프 → 고유값별 격자 리포트
- table1 / table2: 표 재현 및 기대값 비교
- frame: 프레임 CSV 분석 (유리성, 조임, 격자 식별, 비이산성 탐지)
- cs: Steiner ETF 압축 센싱 실험
- identify-gram: Gram 행렬 파일/표준입력 식별
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd

from cli.dsl import grammar_help, parse_graph
from cli.pipeline import run_pipeline
from cli.reports import FrameReport, IdentificationReport
from cli.tables import TableRun, run_table1, run_table2
from config import Config
from database.recorder import ReportRecorder
from frames.analysis import analyze
from frames.discreteness import detect_non_discreteness
from frames.frame import Frame, frame_from_numeric, lattice_from_frame, simplex_etf
from frames.frame_io import read_frame_csv, write_frame_csv
from frames.rationality import verify_rationality_theorem
from identify.identifier import identify_matches
from lattices.enumeration import minimal_vectors
from lattices.eutaxy import EutaxyKind, eutaxy_check, perfection_check
from lattices.geometry import coherence
from lattices.gram_io import format_minimal_vectors, parse_gram
from lattices.lattice import Lattice
from spectral.eigen import rational_spectrum
from steinercs.designs import steiner_triple_system
from steinercs.etf import steiner_etf, welch_bound
from steinercs.experiment import run_experiment, write_results
from steinercs.solvers import SOLVERS, PrOMPSolver
from utils.db import get_run_db, log_event
from utils.errors import FrameError, NumericReconstructionError, ReportError


def _say(args: argparse.Namespace, message: str) -> None:
    """--json 이 아닐 때만 진행 메시지 출력"""
    if not getattr(args, "json", False):
        print(message)


# =============================================================================
# graph-lattice
# =============================================================================

def cmd_graph_lattice(args: argparse.Namespace) -> int:
    g = parse_graph(args.graph)
    if args.spectrum:
        print(json.dumps(rational_spectrum(g).to_json_dict(), indent=2))
        return 0
    eigenvalues = [Fraction(args.eigenvalue)] if args.eigenvalue is not None else []
    _say(args, f"🔄 {g.label}: {g.n} vertices, running pipeline...")
    report = run_pipeline(g, eigenvalues, identify=not args.no_identify,
                          check_complement=args.complement, workers=args.workers)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_table())
        failed = [r for r in report.records if not r.success]
        status = "⚠️ " if failed else "✅"
        print(f"{status} {len(report.records) - len(failed)}/{len(report.records)} eigenvalues "
              f"in {report.processing_time:.2f}s")
    return 0


# =============================================================================
# table1 / table2
# =============================================================================

def _print_table_run(run: TableRun, as_json: bool) -> int:
    if as_json:
        print(json.dumps([r.model_dump() for r in run.results], indent=2))
    else:
        for r in run.results:
            mark = {"PASS": "✅", "FAIL": "❌"}.get(r.status, "⚠️ ")
            print(f"{mark} {r.key:<34} {r.observed}")
            if r.status == "FAIL":
                print(f"   expected: {r.expected}")
        print(f"\n📊 {run.name}: {len(run.results) - len(run.failures)}/{len(run.results)} rows "
              f"match ({run.processing_time:.1f}s)")
        if Config.is_db_logging_enabled():
            ReportRecorder().print_run_summary(run.name, limit=3)
    return 0 if run.passed else 1


def cmd_table1(args: argparse.Namespace) -> int:
    _say(args, "🔄 Checking the vertex-transitive graph rows (14 rows)...")
    return _print_table_run(run_table1(check_complement=args.complement), args.json)


def cmd_table2(args: argparse.Namespace) -> int:
    _say(args, f"🔄 Checking Johnson graph rows J(n,2), n = 4..{args.n_max}...")
    return _print_table_run(run_table2(args.n_max), args.json)


# =============================================================================
# frame / 격자 요약
# =============================================================================

def _lattice_summary(l: Lattice) -> dict:
    mv = minimal_vectors(l)
    cert = eutaxy_check(l)
    matches = identify_matches(l)
    return {
        "min_norm_sq": str(mv.min_norm_sq),
        "kissing": mv.kissing_number,
        "strongly_eutactic": cert.kind is EutaxyKind.STRONG,
        "perfect": perfection_check(l),
        "eutaxy": cert.kind.value,
        "coherence_sq": str(coherence(l).cos_sq) if l.rank >= 2 else None,
        "identified": [m.name for m in matches],
        "confidence": {m.name: m.confidence.value for m in matches},
    }


def analyze_frame(f: Frame, source: str) -> FrameReport:
    """유리 프레임 분석 리포트"""
    tight = analyze(f)
    fields = {
        "source": source,
        "ambient_dim": f.ambient_dim,
        "vectors": f.count,
        "rational": True,
        "tight": tight.is_tight,
        "gamma": str(tight.gamma) if tight.gamma is not None else None,
        "uniform": tight.is_uniform,
        "equiangular": tight.is_equiangular,
        "coherence_sq": str(tight.coherence_sq),
    }
    if tight.is_tight:
        fields["rationality_verified"] = verify_rationality_theorem(f)
    lattice = lattice_from_frame(f)
    fields["lattice_identified"] = [m.name for m in identify_matches(lattice)]
    fields["note"] = f"span is a rank-{lattice.rank} lattice"
    return FrameReport(**fields)


def analyze_numeric_frame(values, source: str, max_denominator: Optional[int] = None) -> FrameReport:
    """수치 프레임: 유리 복원 성공 시 정확 분석, 실패 시 비이산성 탐지"""
    try:
        f = frame_from_numeric(values, max_denominator=max_denominator, label=source)
    except NumericReconstructionError as e:
        log_event("frames", "INFO", f"{source}: {e}")
        values = np.atleast_2d(np.asarray(values, dtype=float))
        report = detect_non_discreteness(values)
        return FrameReport(
            source=source,
            ambient_dim=values.shape[0],
            vectors=values.shape[1],
            rational=False,
            discreteness=report.verdict.value,
            note="not rational; a tight frame that is not rational does not span a lattice",
        )
    return analyze_frame(f, source)


def cmd_frame(args: argparse.Namespace) -> int:
    if args.simplex is not None:
        f = simplex_etf(args.simplex)
        if args.write:
            write_frame_csv(f, args.write)
            _say(args, f"✅ wrote {f.label} to {args.write}")
        report = analyze_frame(f, f.label)
    elif args.file is None:
        raise FrameError("frame needs a CSV file or --simplex K")
    elif args.numeric:
        path = Path(args.file)
        if not path.exists():
            raise FrameError(f"frame file not found: {path}")
        try:
            values = pd.read_csv(path, comment="#", header=None).astype(float).to_numpy()
        except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise FrameError(f"{path}: malformed numeric frame ({e})") from e
        report = analyze_numeric_frame(values, path.stem, args.max_denominator)
    else:
        f = read_frame_csv(args.file)
        report = analyze_frame(f, f.label)

    if args.json:
        print(report.to_json())
    else:
        for key, value in report.model_dump().items():
            if value not in (None, [], {}):
                print(f"  {key:<22} {value}")
    return 0


# =============================================================================
# cs
# =============================================================================

def cmd_cs(args: argparse.Namespace) -> int:
    settings = Config.get_cs_settings()
    sts = steiner_triple_system(args.sts)
    a = steiner_etf(sts)
    welch = welch_bound(a.rows, a.cols)
    _say(args, f"🔄 {a.provenance}: {a.rows}x{a.cols}, coherence {a.coherence:.6f}, Welch {welch:.6f}")

    max_sparsity = args.max_sparsity or settings["max_sparsity"]
    trials = args.trials or settings["trials"]
    parameters = {
        "sts": args.sts,
        "rows": a.rows,
        "cols": a.cols,
        "trials": trials,
        "noise": args.noise if args.noise is not None else settings["noise"],
        "seed": args.seed if args.seed is not None else settings["seed"],
        "max_amp": args.max_amp or settings["max_amp"],
        "sparsities": list(range(1, max_sparsity + 1)),
    }
    solvers = list(SOLVERS.values())
    if args.rounding_path:
        solvers.append(PrOMPSolver(fallback=False))
    df = run_experiment(a, parameters["sparsities"], trials, parameters["noise"], parameters["seed"],
                        parameters["max_amp"], workers=args.workers or 1, solvers=solvers)
    paths = write_results(df, args.output_dir or settings["output_dir"], f"sts{args.sts}", parameters)
    if Config.is_db_logging_enabled():
        get_run_db().save_cs_run(parameters, df.to_dict(orient="records"))

    if args.json:
        print(json.dumps({"parameters": parameters, "results": df.to_dict(orient="records"),
                          "files": {k: str(v) for k, v in paths.items()}}, indent=2))
    else:
        print(df.pivot(index="sparsity", columns="method", values="success_rate").to_string())
        print(f"✅ results written to {paths['csv']}")
    return 0


# =============================================================================
# identify-gram
# =============================================================================

def cmd_identify_gram(args: argparse.Namespace) -> int:
    if args.file in (None, "-"):
        text, source = sys.stdin.read(), "stdin"
    else:
        path = Path(args.file)
        if not path.exists():
            raise ReportError(f"Gram file not found: {path}")
        text, source = path.read_text(encoding="utf-8"), path.stem
    lattice = Lattice.from_gram(parse_gram(text), source)
    summary = _lattice_summary(lattice)
    report = IdentificationReport(source=source, rank=lattice.rank,
                                  determinant=str(lattice.determinant), **summary)
    if args.json:
        print(report.to_json())
    else:
        names = ", ".join(f"{n} ({report.confidence[n]})" for n in report.identified) or "no catalog match"
        print(f"🔍 {source}: rank {report.rank}, det {report.determinant}, min {report.min_norm_sq}, "
              f"kissing {report.kissing}, eutaxy {report.eutaxy}, perfect {report.perfect}")
        print(f"   lattice: {names}")
        if args.minimal_vectors:
            print(format_minimal_vectors(minimal_vectors(lattice)))
    return 0


# =============================================================================
# 파서
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticectl",
        description="Lattices from graph eigenspaces and tight frames",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="graph DSL:\n" + grammar_help(),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph-lattice", help="lattices of every rational eigenvalue of a graph",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=grammar_help())
    p.add_argument("graph", help="graph expression, e.g. 'complement(schlafli)'")
    p.add_argument("--eigenvalue", help="only this eigenvalue (rational, e.g. -2 or 1/2)")
    p.add_argument("--spectrum", action="store_true", help="print the rational spectrum as JSON and stop")
    p.add_argument("--complement", action="store_true", help="also compare with the complement's projection")
    p.add_argument("--no-identify", action="store_true", help="skip catalog identification")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_graph_lattice)

    p = sub.add_parser("table1", help="reproduce the vertex-transitive graph table")
    p.add_argument("--complement", action="store_true", help="check complement projections too")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="reproduce the Johnson J(n,2) table")
    p.add_argument("--n-max", type=int, default=7)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("frame", help="analyse a frame CSV")
    p.add_argument("file", nargs="?", help="frame CSV (rows = coordinates, columns = vectors)")
    p.add_argument("--numeric", action="store_true", help="decimal entries; reconstruct rationals")
    p.add_argument("--max-denominator", type=int, default=None)
    p.add_argument("--simplex", type=int, default=None, metavar="K", help="use the (K, K+1) simplex ETF")
    p.add_argument("--write", default=None, help="write the generated frame to this CSV")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("cs", help="compressed sensing recovery experiment on a Steiner ETF")
    p.add_argument("--sts", type=int, default=7, help="Steiner triple system order v")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--noise", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-amp", type=int, default=None)
    p.add_argument("--max-sparsity", type=int, default=None)
    p.add_argument("--output-dir", default=None)
    p.add_argument("--rounding-path", action="store_true",
                   help="also report PrOMP without the rounded-OMP fallback (PrOMP-R)")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_cs)

    p = sub.add_parser("identify-gram", help="identify a lattice from its Gram matrix")
    p.add_argument("file", nargs="?", default="-", help="Gram matrix file ('-' for stdin)")
    p.add_argument("--minimal-vectors", action="store_true", help="also dump the minimal vectors")
    p.set_defaults(func=cmd_identify_gram)

    for action in sub.choices.values():
        action.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
