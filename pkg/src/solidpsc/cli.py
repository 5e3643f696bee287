"""Command-line front end.

Exit codes: 0 success or PSC pass, 1 PSC violation or tree/brute-force mismatch,
2 usage, parse or budget error (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .errors import PSCError
from .generate import gen_blocs, gen_impartial
from .md import parse_policy, run_md
from .profile import format_quota, make_quota, parse_profile, serialize_profile
from .tree import DEFAULT_NODE_BUDGET, check_theorem1, enumerate_outcomes
from .verify import verify_psc

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_profile(text)


def _split_quota(args, extra: list[str], n_required: int):
    """Peel an optional positional quota off the front of ``extra``."""
    if len(extra) == n_required + 1:
        if args.quota is not None:
            raise UsageError("quota given both positionally and via --quota")
        return extra[0], extra[1:]
    if len(extra) == n_required:
        return args.quota, extra
    raise UsageError(f"expected {n_required} argument(s) after the profile file (plus an optional quota)")


def _quota(profile, cli_spec):
    spec = cli_spec or profile.quota_spec or "hare"
    return make_quota(profile.n, profile.k, spec)


def _names(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def cmd_verify(args) -> int:
    qspec, (committee,) = _split_quota(args, args.rest, 1)
    profile = _load(args.profile)
    q = _quota(profile, qspec)
    w = profile.indices(_names(committee))
    verdict = verify_psc(profile, q, w)
    _emit(verdict.to_json(profile))
    return EXIT_OK if verdict.satisfies_psc else EXIT_FAIL


def cmd_md(args) -> int:
    qspec, (policy_spec,) = _split_quota(args, args.rest, 1)
    profile = _load(args.profile)
    q = _quota(profile, qspec)
    policy = parse_policy(policy_spec)
    committee, trace = run_md(profile, q, policy)
    _emit({"committee": profile.names(committee)})
    if args.trace:
        sys.stdout.write(trace.to_jsonl(profile))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    qspec, _ = _split_quota(args, args.rest, 0)
    profile = _load(args.profile)
    q = _quota(profile, qspec)
    budget = args.node_budget or DEFAULT_NODE_BUDGET
    if args.check_theorem1:
        rep = check_theorem1(profile, q, budget)
        out = enumerate_outcomes(profile, q, budget).to_json(profile)
        out.update(rep.to_json(profile))
        out["quota"] = format_quota(q)
        _emit(out)
        return EXIT_OK if rep.equal else EXIT_FAIL
    out = enumerate_outcomes(profile, q, budget).to_json(profile)
    out["quota"] = format_quota(q)
    _emit(out)
    return EXIT_OK


_BLOC_RE = re.compile(r"^\s*(\d+)\s*:\s*\{([^}]*)\}\s*$")


def parse_bloc_specs(text: str) -> list[tuple[int, list[str]]]:
    """``"2:{a,b};2:{c,d}"`` -> ``[(2, ["a", "b"]), (2, ["c", "d"])]``."""
    blocs = []
    for part in text.split(";"):
        if not part.strip():
            continue
        match = _BLOC_RE.match(part)
        if not match:
            raise UsageError(f"bad bloc spec {part!r}; expected SIZE:{{c1,c2,...}}")
        blocs.append((int(match.group(1)), _names(match.group(2))))
    return blocs


def _params(items: list[str], allowed: set[str]) -> dict[str, int]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or key not in allowed:
            raise UsageError(f"bad parameter {item!r}; expected one of {', '.join(sorted(allowed))} as key=value")
        try:
            out[key] = int(val, 0)
        except ValueError:
            raise UsageError(f"parameter {key} needs an integer, got {val!r}") from None
    return out


def cmd_gen(args) -> int:
    items = list(args.params)
    if args.kind == "impartial":
        p = _params(items, {"n", "m", "k", "seed"})
        missing = {"n", "m", "k"} - p.keys()
        if missing:
            raise UsageError(f"missing parameter(s): {', '.join(sorted(missing))}")
        profile = gen_impartial(p["n"], p["m"], p["k"], p.get("seed", 0))
    else:
        if not items or "=" in items[0]:
            raise UsageError('blocs needs a spec such as "2:{a,b};2:{c,d}" before the parameters')
        blocs = parse_bloc_specs(items[0])
        p = _params(items[1:], {"m", "k", "seed"})
        missing = {"m", "k"} - p.keys()
        if missing:
            raise UsageError(f"missing parameter(s): {', '.join(sorted(missing))}")
        profile = gen_blocs(blocs, p["m"], p["k"], p.get("seed", 0))
    text = serialize_profile(profile)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common.add_argument("--quota", default=argparse.SUPPRESS, help="hare, midpoint or p/r (overrides the file)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output (the default)")
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS, help="md: print the decision trace as JSON lines")
    common.add_argument("--node-budget", type=int, default=argparse.SUPPRESS, help=f"tree state limit (default {DEFAULT_NODE_BUDGET})")

    parser = argparse.ArgumentParser(
        prog="solidpsc",
        description="Proportionality of Solid Coalitions: verify committees, run Minimal Demand, enumerate the Dummett tree.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a committee for q-PSC")
    p.add_argument("profile")
    p.add_argument("rest", nargs="+", metavar="[QUOTA] COMMITTEE", help='e.g. hare "a,c"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("md", parents=[common], help="run the Minimal Demand rule")
    p.add_argument("profile")
    p.add_argument("rest", nargs="+", metavar="[QUOTA] POLICY", help="lex, borda, random:SEED, script:c1,c2,...")
    p.set_defaults(func=cmd_md)

    p = sub.add_parser("enumerate", parents=[common], help="list every Dummett-tree outcome")
    p.add_argument("profile")
    p.add_argument("rest", nargs="*", metavar="QUOTA")
    p.add_argument("--check-theorem1", action="store_true", help="compare against brute-force PSC committees")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen", parents=[common], help="write a generated ballot file")
    p.add_argument("kind", choices=["impartial", "blocs"])
    p.add_argument("params", nargs="*", help='impartial: n=6 m=4 k=2 seed=1; blocs: "2:{a,b};2:{c,d}" m=4 k=2 seed=1')
    p.add_argument("-o", "--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("quota", None), ("json", False), ("trace", False), ("node_budget", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (UsageError, PSCError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else type(exc).__name__
        print(f"solidpsc: error: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
