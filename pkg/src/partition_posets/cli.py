"""Command-line interface.

Subcommands: ``solve`` an instance file, ``profile`` a poset's exact rank
structure, ``hasse`` export a cover DAG as deterministic DOT, and ``verify``
run the structural / counting / solver cross-checks.  Exit codes: 0 success,
1 verification failure, 2 usage, parse, or guard error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import counting, poset, solver
from .core import normalize_instance
from .errors import EmptyInput, ParseError, PartitionPosetsError, UnknownCheck
from .poset import CheckResult, PosetKind

_VERIFY_EXTRA = ("profiles", "solvers")
_PROFILE_ENUM_MAX_N = 14
_SOLVERS_CHECK_MAX_N = 16


def read_instance_file(path: str) -> list[int]:
    """Whitespace-separated nonnegative decimal integers; '#' lines are comments."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    values = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        for tok in line.split():
            if not tok.isdigit():
                raise ParseError(f"not a nonnegative integer: {tok!r}")
            values.append(int(tok))
    if not values:
        raise EmptyInput(f"no weights found in {path}")
    return values


def _print_kv(pairs: list[tuple[str, object]]) -> None:
    for key, value in pairs:
        if isinstance(value, bool):
            value = "yes" if value else "no"
        elif isinstance(value, (list, tuple)):
            value = " ".join(str(x) for x in value)
        print(f"{key}: {value}")


def _cmd_solve(args: argparse.Namespace) -> int:
    raw = read_instance_file(args.file)
    inst = normalize_instance(raw)
    sol = solver.solve(inst, args.algo)
    if sol is None:
        payload = {"n": inst.n, "total": inst.total, "algo": args.algo, "fired": False}
        if args.json:
            print(json.dumps(payload))
        else:
            _print_kv(list(payload.items()))
            print(f"note: {args.algo} produced no certificate; try --algo auto")
        return 0
    payload = {
        "n": inst.n,
        "total": inst.total,
        "algo": sol.algorithm,
        "abs_delta": sol.abs_delta,
        "delta": sol.delta,
        "subset": list(sol.subset.indices),
        "nodes_visited": sol.nodes_visited,
        "optimal": sol.optimal,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        _print_kv(list(payload.items()))
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    kind = PosetKind(args.poset)
    n = args.n
    if kind is PosetKind.P:
        profile = counting.p_rank_profile(n)
        size = 1 << n
        height = counting.height_formula(n, kind)
    else:
        profile = counting.q_rank_profile(n)
        size = counting.q_size(n)
        height = counting.height_formula(n, kind) if n >= 3 else None
    checks = counting.profile_checks(profile)
    height_dag = None
    if n <= 12 and size > 0:
        height_dag = poset.poset_height(poset.build_hasse(n, kind))
    payload = {
        "poset": kind.value,
        "n": n,
        "size": size,
        "profile": list(profile.counts),
        "width": counting.width_value(n) if size > 0 else 0,
        "max_level": checks.max_level,
        "height": height,
        "height_dag": height_dag,
        "symmetric": checks.symmetric,
        "unimodal": checks.unimodal,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        _print_kv(list(payload.items()))
    return 0


def render_dot(dag: poset.HasseDag) -> str:
    """Deterministic DOT text: sign-string node ids, one rank per layer."""
    lines = [f'digraph "{dag.kind.value}{dag.n}" {{', "  rankdir=LR;", "  node [shape=box];"]
    by_rank: dict[int, list] = {}
    for v in dag.nodes:  # nodes are in ascending bitmask order
        by_rank.setdefault(dag.rank_of[v], []).append(v)
    for r in sorted(by_rank):
        ids = " ".join(f'"{v.sign_string()}";' for v in by_rank[r])
        lines.append(f"  {{ rank=same; {ids} }}")
    for v, w in sorted(dag.edges, key=lambda e: (e[0].mask, e[1].mask)):
        lines.append(f'  "{v.sign_string()}" -> "{w.sign_string()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_hasse(args: argparse.Namespace) -> int:
    if args.force:
        print("warning: size guards lifted; this may take a long time", file=sys.stderr)
    dag = poset.build_hasse(args.n, PosetKind(args.poset), force=args.force)
    dot = render_dot(dag)
    if args.out:
        Path(args.out).write_text(dot, encoding="ascii")
    else:
        print(dot, end="")
    return 0


def _check_profiles(n: int) -> CheckResult:
    if n > counting.MAX_COUNT_N:
        return CheckResult("profiles", True, skipped=True,
                           detail=f"capped at n = {counting.MAX_COUNT_N}")
    p = counting.p_rank_profile(n)
    rp = counting.rplus_rank_profile(n)
    rm = counting.rminus_rank_profile(n)
    q = counting.q_rank_profile(n)
    full = list(q.counts)
    r = n * (n + 1) // 2
    padded = [0] * (r + 1)
    for i, v in enumerate(full):
        padded[n + i] = v
    for rho in range(r + 1):
        if p.counts[rho] != padded[rho] + rp.counts[rho] + rm.counts[rho]:
            return CheckResult("profiles", False,
                               detail=f"conservation fails at rank {rho}")
    if q.total != counting.q_size(n):
        return CheckResult("profiles", False, detail="Q size mismatch")
    if n <= _PROFILE_ENUM_MAX_N:
        hist = [0] * (r + 1)
        for v in poset.iter_poset(n, PosetKind.R_PLUS):
            hist[poset.rank(v)] += 1
        if tuple(hist) != rp.counts:
            return CheckResult("profiles", False,
                               detail="R+ profile disagrees with enumeration")
        qhist = [0] * max(len(q.counts), 1)
        for v in poset.iter_poset(n, PosetKind.Q):
            qhist[poset.rank(v, PosetKind.Q)] += 1
        if tuple(qhist) != q.counts and q.counts:
            return CheckResult("profiles", False,
                               detail="Q profile disagrees with enumeration")
    return CheckResult("profiles", True)


def _check_solvers(n: int) -> CheckResult:
    if n > _SOLVERS_CHECK_MAX_N:
        return CheckResult("solvers", True, skipped=True,
                           detail=f"capped at n = {_SOLVERS_CHECK_MAX_N}")
    rng = random.Random(20_000 + n)
    for trial in range(20):
        raw = [rng.randint(0, 1000) for _ in range(n)]
        inst = normalize_instance(raw)
        ref = solver.solve_brute(inst).abs_delta
        results = {"dp": solver.solve_dp(inst).abs_delta}
        if n >= 3:
            results["qenum"] = solver.solve_q_enum(inst).abs_delta
            results["pruned"] = solver.solve_pruned(inst).abs_delta
        for name, value in results.items():
            if value != ref:
                return CheckResult(
                    "solvers", False,
                    detail=f"{name} got {value}, brute got {ref} on {raw}",
                )
    return CheckResult("solvers", True)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.checks == "all":
        names = list(poset.CHECKS) + list(_VERIFY_EXTRA)
        structural: list[str] | str = "all"
    else:
        names = [s.strip() for s in args.checks.split(",") if s.strip()]
        known = set(poset.CHECKS) | set(_VERIFY_EXTRA)
        for name in names:
            if name not in known:
                raise UnknownCheck(f"unknown check {name!r}")
        structural = [s for s in names if s in poset.CHECKS]
    results: list[CheckResult] = []
    if structural:
        results.extend(poset.verify_structure(args.n, structural))
    if "profiles" in names:
        results.append(_check_profiles(args.n))
    if "solvers" in names:
        results.append(_check_solvers(args.n))
    failed = False
    payload = []
    for res in results:
        status = "skip" if res.skipped else ("pass" if res.passed else "fail")
        failed |= status == "fail"
        payload.append({"name": res.name, "status": status, "detail": res.detail})
        if not args.json:
            suffix = f" ({res.detail})" if res.detail else ""
            print(f"{res.name}: {status.upper()}{suffix}")
    if args.json:
        print(json.dumps({"n": args.n, "checks": payload}))
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-posets",
        description="Sign-vector posets for the number-partitioning problem: "
        "solve instances, report structure, export Hasse diagrams, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a partition instance file")
    p_solve.add_argument("file", help="instance file: whitespace-separated weights")
    p_solve.add_argument("--algo", default="auto", choices=solver.ALGORITHMS)
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_profile = sub.add_parser("profile", help="exact size/rank structure report")
    p_profile.add_argument("n", type=int)
    p_profile.add_argument("--poset", default="Q", choices=["P", "Q"])
    p_profile.add_argument("--json", action="store_true")
    p_profile.set_defaults(func=_cmd_profile)

    p_hasse = sub.add_parser("hasse", help="export the cover DAG as DOT")
    p_hasse.add_argument("n", type=int)
    p_hasse.add_argument("--poset", default="Q", choices=["P", "Q"])
    p_hasse.add_argument("--out", default=None, help="output path (default: stdout)")
    p_hasse.add_argument("--force", action="store_true",
                         help="lift the size guards (may be very slow)")
    p_hasse.set_defaults(func=_cmd_hasse)

    p_verify = sub.add_parser("verify", help="run structure/counting/solver checks")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--checks", default="all",
                          help="comma-separated check names, or 'all'")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except PartitionPosetsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
