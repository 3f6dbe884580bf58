"""Command-line front end.

Exit codes: 0 success / predicate true, 1 predicate false or the object
does not exist, 2 usage or parse error. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Callable, Optional, Sequence

from .decomposition import decompose
from .dmpgi import METHODS, dmpgi, dmpgi_exists
from .dual import DualMatrix, penrose_profile
from .errors import DimensionError, ParseError, RankError
from .io import dual_matrix_to_dict, dumps, format_dual_matrix, grid, load_dual_matrix
from .matrix import full_rank_decompose, pinv, rank
from .penrose import verify_mixed_membership
from .special import (
    ep_via_decomposition,
    ep_via_factors,
    ep_via_parts,
    idempotent_characterization,
    is_dual_ep,
    is_dual_idempotent,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> DualMatrix:
    if path == "-":
        return load_dual_matrix(sys.stdin)
    try:
        with open(path, encoding="utf-8") as fh:
            return load_dual_matrix(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


@contextmanager
def _writer(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _existence_report(a: DualMatrix) -> tuple[bool, dict]:
    w = dmpgi_exists(a)
    return w.holds, {"rank": rank(a.real), "exists": w.holds, "residual": grid(w.residual)}


def _real_p(args):
    if args.p is None:
        return None
    p = _read(args.p)
    if not p.is_real():
        raise UsageError("--p must be a real matrix (no dual part)")
    return p.real


def cmd_rank(a: DualMatrix, args) -> tuple[int, str]:
    return EXIT_OK, dumps({"rank": rank(a.real)}) + "\n"


def cmd_fullrank(a: DualMatrix, args) -> tuple[int, str]:
    if a.real.is_zero():
        print("real part has rank 0; no full-rank decomposition", file=sys.stderr)
        return EXIT_FALSE, dumps({"rank": 0}) + "\n"
    fg = full_rank_decompose(a.real)
    doc = {"rank": fg.r, "F": dual_matrix_to_dict(fg.F), "G": dual_matrix_to_dict(fg.G)}
    return EXIT_OK, dumps(doc) + "\n"


def cmd_pinv(a: DualMatrix, args) -> tuple[int, str]:
    if not a.is_real():
        raise UsageError("pinv takes a real matrix; use 'dmpgi' for dual input")
    return EXIT_OK, format_dual_matrix(pinv(a.real))


def cmd_exists(a: DualMatrix, args) -> tuple[int, str]:
    ok, report = _existence_report(a)
    return (EXIT_OK if ok else EXIT_FALSE), dumps(report) + "\n"


def cmd_ddecomp(a: DualMatrix, args) -> tuple[int, str]:
    if a.real.is_zero():
        print("real part has rank 0; no dual r-rank decomposition", file=sys.stderr)
        return EXIT_FALSE, dumps({"rank": 0}) + "\n"
    ok, report = _existence_report(a)
    if not ok:
        print("dual r-rank decomposition does not exist", file=sys.stderr)
        return EXIT_FALSE, dumps(report) + "\n"
    factors = decompose(a, _real_p(args))
    doc = {
        "rank": factors.r,
        "left": dual_matrix_to_dict(factors.left),
        "right": dual_matrix_to_dict(factors.right),
    }
    return EXIT_OK, dumps(doc) + "\n"


def cmd_dmpgi(a: DualMatrix, args) -> tuple[int, str]:
    ok, report = _existence_report(a)
    if not ok:
        print("dual Moore-Penrose inverse does not exist", file=sys.stderr)
        return EXIT_FALSE, dumps(report) + "\n"
    method = args.method
    if method != "direct" and a.real.is_zero():
        # Factor methods need rank >= 1; the inverse of 0 is 0 either way.
        method = "direct"
    return EXIT_OK, format_dual_matrix(dmpgi(a, method, _real_p(args)))


def cmd_check_idempotent(a: DualMatrix, args) -> tuple[int, str]:
    holds = is_dual_idempotent(a)
    doc = {"idempotent": holds, "characterization": idempotent_characterization(a)}
    return (EXIT_OK if holds else EXIT_FALSE), dumps(doc) + "\n"


def cmd_check_ep(a: DualMatrix, args) -> tuple[int, str]:
    if a.rows != a.cols:
        raise DimensionError(f"check-ep needs a square matrix, got {a.shape}")
    ok, report = _existence_report(a)
    if not ok:
        print("dual Moore-Penrose inverse does not exist; EP is undefined", file=sys.stderr)
        return EXIT_FALSE, dumps(report) + "\n"
    holds = is_dual_ep(a)
    doc = {"ep": holds, "via_parts": ep_via_parts(a)}
    if not a.real.is_zero():
        factors = decompose(a, _real_p(args))
        doc["via_factors"] = ep_via_factors(factors)
        doc["via_decomposition"] = ep_via_decomposition(factors)
    return (EXIT_OK if holds else EXIT_FALSE), dumps(doc) + "\n"


def cmd_penrose_profile(a: DualMatrix, args) -> tuple[int, str]:
    x = _read(args.candidate)
    profile = penrose_profile(a, x)
    return EXIT_OK, dumps({"satisfied": sorted(profile)}) + "\n"


def cmd_mixed_membership(a: DualMatrix, args) -> tuple[int, str]:
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    if a.real.is_zero():
        print("real part has rank 0; no dual r-rank decomposition", file=sys.stderr)
        return EXIT_FALSE, dumps({"rank": 0}) + "\n"
    ok, report = _existence_report(a)
    if not ok:
        print("dual r-rank decomposition does not exist", file=sys.stderr)
        return EXIT_FALSE, dumps(report) + "\n"
    result = verify_mixed_membership(decompose(a, _real_p(args)), args.samples, args.seed)
    return (EXIT_OK if result.ok else EXIT_FALSE), dumps(result.to_dict()) + "\n"


COMMANDS: dict[str, tuple[Callable, str]] = {
    "rank": (cmd_rank, "rank of the real part"),
    "fullrank": (cmd_fullrank, "canonical full-rank factors F, G of the real part"),
    "pinv": (cmd_pinv, "Moore-Penrose inverse of a real matrix"),
    "exists": (cmd_exists, "test whether the dual r-rank decomposition / DMPGI exists"),
    "ddecomp": (cmd_ddecomp, "dual r-rank decomposition for parameter P"),
    "dmpgi": (cmd_dmpgi, "dual Moore-Penrose inverse"),
    "check-idempotent": (cmd_check_idempotent, "test A @ A == A"),
    "check-ep": (cmd_check_ep, "test whether A is dual EP"),
    "penrose-profile": (cmd_penrose_profile, "which dual Penrose equations a candidate meets"),
    "mixed-membership": (cmd_mixed_membership, "sample mixed {i}-inverse products"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualrank", description="Exact dual-matrix decompositions and inverses."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--input", default="-", metavar="PATH", help="matrix document (default stdin)")
        sp.add_argument("--output", default=None, metavar="PATH", help="default stdout")
        if name in ("ddecomp", "dmpgi", "check-ep", "mixed-membership"):
            sp.add_argument("--p", default=None, metavar="PATH", help="r x r parameter P (default 0)")
        if name == "dmpgi":
            sp.add_argument("--method", choices=METHODS, default="direct")
        if name == "penrose-profile":
            sp.add_argument("--candidate", required=True, metavar="PATH")
        if name == "mixed-membership":
            sp.add_argument("--samples", type=int, default=100)
            sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        a = _read(args.input)
        code, text = handler(a, args)
    except (UsageError, ParseError, DimensionError, RankError) as exc:
        print(f"dualrank {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _writer(args.output) as out:
        out.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
