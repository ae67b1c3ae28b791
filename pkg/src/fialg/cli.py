"""Batch command-line surface.

Subcommands validate input files, generate seeded test instances, and run the
map checks and the near-sum decomposition.  Reports are JSON with sorted keys
and canonical scalars (byte-identical across runs for identical inputs);
human-readable summaries go to standard error.

Exit codes: 0 = all checks passed, 1 = checks ran and failed (report still
written), 2 = input or precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import incidence_algebra
from .errors import FialgError
from .jordan import decompose, random_jordan_iso, verify_paper_identities
from .linmaps import LinMap, check_homomorphism, check_jordan
from .posets import Poset, random_poset
from .rings import ring_from_json


class CliError(Exception):
    """An input problem worth a clean diagnostic instead of a traceback."""


def _read_json(path: str, what: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"{what} file {path!r}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise CliError(
            f"{what} file {path!r}: invalid JSON (line {exc.lineno}: {exc.msg})"
        )


def _load_poset(path: str) -> Poset:
    obj = _read_json(path, "poset")
    try:
        return Poset.from_json(obj)
    except FialgError as exc:
        raise CliError(f"poset file {path!r}: {exc}")


def _load_ring(path: str):
    obj = _read_json(path, "ring")
    try:
        return ring_from_json(obj)
    except FialgError as exc:
        raise CliError(f"ring file {path!r}: {exc}")


def _load_map(path: str, algebra) -> LinMap:
    obj = _read_json(path, "map")
    try:
        return LinMap.from_json(algebra, algebra, obj)
    except FialgError as exc:
        raise CliError(f"map file {path!r}: {exc}")


def _emit(obj, out_path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _thread_cap() -> int | None:
    """Validate FIALG_THREADS.  Evaluation is sequential in this
    implementation, so the cap only needs to be well-formed."""
    raw = os.environ.get("FIALG_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"FIALG_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise CliError(f"FIALG_THREADS must be >= 1, got {value}")
    return value


def _report_exit(report, ring, out_path) -> int:
    _emit(report.to_json(ring.format), out_path)
    _note(report.summary())
    total = len(report.checks)
    good = sum(1 for c in report.checks if c.passed)
    _note(f"{good}/{total} checks passed")
    return 0 if report.passed else 1


# -- subcommand handlers ------------------------------------------------------


def _cmd_validate_poset(args) -> int:
    poset = _load_poset(args.file)
    _emit(poset.to_json(), args.out)
    _note(
        f"poset ok: {poset.size} element(s), "
        f"{len(poset.covers())} covering relation(s)"
    )
    return 0


def _cmd_gen_poset(args) -> int:
    if args.n < 1:
        raise CliError(f"--n must be >= 1, got {args.n}")
    if not 0.0 <= args.p <= 1.0:
        raise CliError(f"--p must lie in [0, 1], got {args.p}")
    poset = random_poset(args.n, args.p, args.seed)
    _emit(poset.to_json(), args.out)
    _note(f"generated poset on {poset.size} element(s) with seed {args.seed}")
    return 0


def _cmd_gen_jordan(args) -> int:
    poset = _load_poset(args.poset)
    ring = _load_ring(args.ring)
    phi = random_jordan_iso(poset, ring, args.seed)
    _emit(phi.to_json(), args.out)
    _note(
        f"generated Jordan isomorphism of dimension {phi.domain.dimension} "
        f"over {ring!r} with seed {args.seed}"
    )
    return 0


def _cmd_check_map(args) -> int:
    poset = _load_poset(args.poset)
    ring = _load_ring(args.ring)
    algebra = incidence_algebra(poset, ring)
    phi = _load_map(args.map, algebra)
    if args.jordan:
        report = check_jordan(phi, allow_torsion=args.allow_torsion)
    elif args.anti:
        report = check_homomorphism(phi, anti=True)
    else:
        report = check_homomorphism(phi)
    return _report_exit(report, ring, args.out)


def _cmd_decompose(args) -> int:
    poset = _load_poset(args.poset)
    ring = _load_ring(args.ring)
    algebra = incidence_algebra(poset, ring)
    phi = _load_map(args.map, algebra)
    dec = decompose(phi, allow_torsion=args.allow_torsion)
    _emit(dec.to_json(), args.out)
    _note(dec.report.summary())
    return 0 if dec.report.passed else 1


def _cmd_verify(args) -> int:
    poset = _load_poset(args.poset)
    ring = _load_ring(args.ring)
    algebra = incidence_algebra(poset, ring)
    phi = _load_map(args.map, algebra)
    if args.identities:
        report = verify_paper_identities(
            phi, seed=args.seed, allow_torsion=args.allow_torsion
        )
    else:
        report = decompose(phi, allow_torsion=args.allow_torsion).report
    return _report_exit(report, ring, args.out)


# -- parser -------------------------------------------------------------------


def _add_out(p):
    p.add_argument("--out", help="write the JSON report here instead of stdout")


def _add_context(p):
    p.add_argument("--poset", required=True, help="poset JSON file")
    p.add_argument("--ring", required=True, help="ring JSON file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fialg",
        description=(
            "Incidence-algebra toolkit: validate posets, generate Jordan "
            "isomorphisms, check map laws, and run near-sum decompositions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-poset", help="check a poset file's axioms")
    p.add_argument("file", help="poset JSON file")
    _add_out(p)
    p.set_defaults(handler=_cmd_validate_poset)

    p = sub.add_parser("gen-poset", help="generate a random poset")
    p.add_argument("--n", type=int, required=True, help="number of elements")
    p.add_argument("--p", type=float, required=True, help="edge probability")
    p.add_argument("--seed", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_gen_poset)

    p = sub.add_parser("gen-jordan", help="generate a seeded Jordan isomorphism")
    _add_context(p)
    p.add_argument("--seed", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_gen_jordan)

    p = sub.add_parser("check-map", help="test a map against the chosen law")
    _add_context(p)
    p.add_argument("--map", required=True, help="linear-map JSON file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument(
        "--anti", action="store_true", help="check the anti-homomorphism law"
    )
    kind.add_argument(
        "--jordan", action="store_true", help="check the Jordan pair+triple laws"
    )
    p.add_argument("--allow-torsion", action="store_true")
    _add_out(p)
    p.set_defaults(handler=_cmd_check_map)

    p = sub.add_parser("decompose", help="near-sum decomposition of a Jordan map")
    _add_context(p)
    p.add_argument("--map", required=True, help="linear-map JSON file")
    p.add_argument("--allow-torsion", action="store_true")
    _add_out(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "verify", help="re-verify a decomposition or the full identity suite"
    )
    _add_context(p)
    p.add_argument("--map", required=True, help="linear-map JSON file")
    p.add_argument(
        "--identities",
        action="store_true",
        help="run the sampled identity families instead of the near-sum checks",
    )
    p.add_argument("--seed", type=int, default=7, help="identity sampling seed")
    p.add_argument("--allow-torsion", action="store_true")
    _add_out(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _thread_cap()
        return args.handler(args)
    except CliError as exc:
        _note(f"error: {exc}")
        return 2
    except FialgError as exc:
        _note(f"error: {type(exc).__name__}: {exc}")
        return 2


def entry() -> None:
    raise SystemExit(run())
