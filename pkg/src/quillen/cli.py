"""Command-line front end: parse group specs, run analyses, emit
human-readable and JSON reports, and run the pinned verification suite.

Exit codes: 0 success, 1 input error, 2 red alert (a verdict with
``agrees`` false, or a decomposition guaranteed by a structure result
that could not be exhibited)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import constructions as cs
from . import group as gp
from . import poset as ps
from . import theorems as th
from .errors import (
    DecompositionNotFound,
    GroupTooLarge,
    HypothesisViolated,
    InvalidSpec,
    PreconditionFailed,
    QuillenError,
    UnknownName,
)
from .group import DEFAULT_ELEMENT_CAP, Group
from .homology import (
    HOMOLOGY_PROXY_CAVEAT,
    is_cohen_macaulay,
    reduced_homology,
)
from .report import VERSION, AnalysisReport, group_stats

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RED_ALERT = 2

CAP_ENV_VAR = "QUILLEN_ELEMENT_CAP"

SUITE_CHECKS = ("quillen", "brown", "cm", "decompose", "pw", "plength",
                "main", "certs")


def _element_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ELEMENT_CAP
    try:
        return max(int(raw), DEFAULT_ELEMENT_CAP)
    except ValueError:
        raise InvalidSpec(f"{CAP_ENV_VAR} must be an integer, got {raw!r}")


def _load_spec(args) -> tuple:
    """(spec echo dict, GroupSpec) from --name or a spec-file path."""
    if args.name and args.spec:
        raise InvalidSpec("give either --name or a spec file, not both")
    if args.name:
        spec = cs.catalog(args.name)
        return {"catalog_name": args.name,
                "group_spec": spec.to_json()}, spec
    if not args.spec:
        raise InvalidSpec("a group is required: --name NAME or a spec file")
    if args.spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.spec) as fh:
                text = fh.read()
        except OSError as e:
            raise InvalidSpec(f"cannot read spec file: {e}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidSpec(f"spec file is not valid JSON: {e}")
    spec = cs.GroupSpec.from_json(data)
    return {"group_spec": spec.to_json()}, spec


def _load_group(args) -> tuple:
    echo, spec = _load_spec(args)
    G = cs.build(spec, cap=_element_cap())
    if args.max_order and G.order > args.max_order:
        raise GroupTooLarge(
            f"group order {G.order} exceeds --max-order {args.max_order}")
    return echo, G


def _require_prime(args) -> int:
    if args.prime is None:
        raise InvalidSpec("--prime is required for this command")
    p = args.prime
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise InvalidSpec(f"--prime must be a prime, got {p}")
    return p


def _emit(report_text: str, args) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report_text)
    else:
        sys.stdout.write(report_text)


def _finish(report: AnalysisReport, args, exit_code: int) -> int:
    if args.format == "json":
        _emit(report.dumps(), args)
    else:
        _emit(report.render_text(), args)
    return exit_code


def _red(*agrees_values) -> int:
    return EXIT_RED_ALERT if any(v is False for v in agrees_values) \
        else EXIT_OK


# -- subcommands --------------------------------------------------------

def cmd_quillen(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    P = ps.quillen_poset(G, p)
    C = ps.order_complex(P)
    timings["complex"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    prof = reduced_homology(C)
    timings["homology"] = time.perf_counter() - t0

    analyses = {"quillen": {"poset_nodes": len(P), "dim": C.dim,
                            "profile": prof.to_json()}}
    brown_agrees = None
    if args.brown:
        t0 = time.perf_counter()
        # the homotopy equivalence with the torus complex holds for the
        # poset of ALL nontrivial p-subgroups (whole group included when
        # G itself is a p-group)
        B = ps.order_complex(ps.brown_poset(G, p,
                                            include_whole_group=True))
        bprof = reduced_homology(B)
        timings["brown"] = time.perf_counter() - t0
        brown_agrees = bprof == prof
        analyses["brown"] = {"dim": B.dim, "profile": bprof.to_json(),
                             "profiles_equal": brown_agrees}
    if args.export_complex:
        with open(args.export_complex, "w") as fh:
            fh.write(C.export_text())
        analyses["quillen"]["exported_to"] = args.export_complex

    report = AnalysisReport("quillen", echo, group_stats(G, p),
                            analyses, timings)
    return _finish(report, args, _red(brown_agrees))


def cmd_cm_check(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    C = ps.order_complex(ps.quillen_poset(G, p))
    cm = is_cohen_macaulay(C)
    timings["cm_check"] = time.perf_counter() - t0
    analyses = {"cohen_macaulay": cm.to_json(), "dim": C.dim}
    report = AnalysisReport("cm-check", echo, group_stats(G, p),
                            analyses, timings)
    return _finish(report, args, EXIT_OK)


def _decompose_sylow(G: Group, p: int) -> th.StructureReport:
    P = gp.sylow_subgroup(G, p)
    O = gp.omega1(P, p)
    if p == 2:
        return th.decompose_2group(O)
    return th.classify_odd_p_group(O, p)


def cmd_decompose(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    try:
        rep = _decompose_sylow(G, p)
        analyses = {"structure": rep.to_json(),
                    "all_checks_pass": rep.all_checks_pass()}
        code = _red(rep.all_checks_pass())
    except DecompositionNotFound as e:
        # a guaranteed decomposition that cannot be exhibited is a
        # red-alert finding, not an input error
        analyses = {"structure": None, "all_checks_pass": False,
                    "error": str(e)}
        code = EXIT_RED_ALERT
    timings["decompose"] = time.perf_counter() - t0
    report = AnalysisReport("decompose", echo, group_stats(G, p),
                            analyses, timings)
    return _finish(report, args, code)


def _resolve_above(P, p: int, selector: str):
    G = P.parent
    if selector == "omega1z":
        return gp.omega1(gp.center(P), p)
    if selector == "center":
        return gp.center(P)
    if selector.startswith("gens:"):
        try:
            ids = [int(t) for t in selector[len("gens:"):].split(",")]
        except ValueError:
            raise InvalidSpec(f"bad --above selector {selector!r}")
        bad = [i for i in ids if not 0 <= i < G.order]
        if bad:
            raise InvalidSpec(f"element ids out of range: {bad}")
        return gp.subgroup_generated(G, ids)
    raise InvalidSpec(
        f"--above must be omega1z, center, or gens:i,j,... (got {selector!r})")


def cmd_upper_interval(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    P = gp.sylow_subgroup(G, p)
    X = _resolve_above(P, p, args.above)
    t0 = time.perf_counter()
    verdict = th.upper_interval_check(P, p, X)
    timings["interval"] = time.perf_counter() - t0
    analyses = {"upper_interval": verdict.to_json(),
                "above": {"selector": args.above, "order": X.order}}
    report = AnalysisReport("upper-interval", echo, group_stats(G, p),
                            analyses, timings)
    return _finish(report, args, _red(verdict.agrees))


def cmd_pw_verify(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    verdict = th.verify_pulkus_welker(G, p)
    timings["verify"] = time.perf_counter() - t0
    report = AnalysisReport("pw-verify", echo, group_stats(G, p),
                            {"wedge_formula": verdict.to_json()}, timings)
    return _finish(report, args, _red(verdict.agrees))


def cmd_plength(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    verdict = th.p_length_bound_check(G, p)
    timings["plength"] = time.perf_counter() - t0
    report = AnalysisReport("plength", echo, group_stats(G, p),
                            {"p_length": verdict.to_json()}, timings)
    return _finish(report, args, _red(verdict.agrees))


def cmd_main_check(args) -> int:
    p = _require_prime(args)
    timings = {}
    t0 = time.perf_counter()
    echo, G = _load_group(args)
    timings["build"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    verdict = th.main_theorem_check(G, p)
    timings["main"] = time.perf_counter() - t0
    report = AnalysisReport("main-check", echo, group_stats(G, p),
                            {"main_theorem": verdict.to_json()}, timings)
    return _finish(report, args, _red(verdict.agrees))


def cmd_homology(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as e:
            raise InvalidSpec(f"cannot read complex file: {e}")
    C = ps.SimplicialComplex.import_text(text)
    prof = reduced_homology(C)
    out = {"version": VERSION, "command": "homology", "dim": C.dim,
           "profile": prof.to_json(), "caveat": HOMOLOGY_PROXY_CAVEAT}
    if args.format == "json":
        _emit(json.dumps(out, sort_keys=True, indent=2) + "\n", args)
    else:
        _emit(f"dim {C.dim}\n{prof.describe()}\n", args)
    return EXIT_OK


# -- suite --------------------------------------------------------------

def _default_manifest_path() -> str:
    return os.path.join(os.path.dirname(__file__), "suite_manifest.json")


def _run_instance(inst: dict, max_order: Optional[int]) -> dict:
    name, p, checks = inst["name"], inst["prime"], inst["checks"]
    results = {}
    timings = {}
    out = {"name": name, "prime": p, "results": results,
           "timings": timings}
    try:
        G = cs.catalog_group(name)
    except QuillenError as e:
        results["build"] = {"agrees": False,
                            "error": f"{type(e).__name__}: {e}"}
        return out
    if max_order and G.order > max_order:
        out["skipped"] = f"order {G.order} exceeds --max-order {max_order}"
        del out["results"], out["timings"]
        return out

    cache = {}

    def quillen_data():
        if "prof" not in cache:
            P = ps.quillen_poset(G, p)
            C = ps.order_complex(P)
            cache["P"], cache["C"] = P, C
            cache["prof"] = reduced_homology(C)
        return cache["P"], cache["C"], cache["prof"]

    for chk in checks:
        t0 = time.perf_counter()
        try:
            if chk == "quillen":
                P, C, prof = quillen_data()
                results[chk] = {"agrees": None, "poset_nodes": len(P),
                                "dim": C.dim, "profile": prof.to_json()}
            elif chk == "brown":
                _, _, prof = quillen_data()
                B = ps.order_complex(
                    ps.brown_poset(G, p, include_whole_group=True))
                bprof = reduced_homology(B)
                results[chk] = {"agrees": bprof == prof,
                                "profile": bprof.to_json()}
            elif chk == "cm":
                _, C, _ = quillen_data()
                cm = is_cohen_macaulay(C)
                results[chk] = {"agrees": cm.cohen_macaulay,
                                "verdict": cm.to_json()}
            elif chk == "decompose":
                rep = _decompose_sylow(G, p)
                results[chk] = {"agrees": rep.all_checks_pass(),
                                "structure": rep.to_json()}
            elif chk == "pw":
                v = th.verify_pulkus_welker(G, p)
                results[chk] = {"agrees": v.agrees,
                                "verdict": v.to_json()}
            elif chk == "plength":
                v = th.p_length_bound_check(G, p)
                results[chk] = {"agrees": v.agrees, "verdict": v.to_json()}
            elif chk == "main":
                v = th.main_theorem_check(G, p)
                results[chk] = {"agrees": v.agrees, "claim": v.claim,
                                "verdict": v.to_json()}
            elif chk == "certs":
                P, _, prof = quillen_data()
                op_nontrivial = gp.o_p(G, p).order > 1
                acyclic = prof.is_trivial()
                conj = ps.find_conjunctive_element(P)
                conj_ok = conj is None or acyclic
                results[chk] = {
                    "agrees": (op_nontrivial == acyclic) and conj_ok,
                    "o_p_nontrivial": op_nontrivial, "acyclic": acyclic,
                    "conjunctive_found": conj is not None}
            else:
                results[chk] = {"agrees": False,
                                "error": f"unknown check {chk!r}"}
        except DecompositionNotFound as e:
            results[chk] = {"agrees": False,
                            "error": f"DecompositionNotFound: {e}"}
        except QuillenError as e:
            results[chk] = {"agrees": False,
                            "error": f"{type(e).__name__}: {e}"}
        timings[chk] = round(time.perf_counter() - t0, 3)
    return out


def cmd_suite(args) -> int:
    path = args.manifest or _default_manifest_path()
    try:
        with open(path) as fh:
            manifest = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidSpec(f"cannot load suite manifest: {e}")
    instances = manifest.get("instances", [])
    if args.only:
        wanted = set(args.only)
        instances = [i for i in instances if i["name"] in wanted]
        missing = wanted - {i["name"] for i in instances}
        if missing:
            raise InvalidSpec(f"names not in manifest: {sorted(missing)}")
    for inst in instances:
        bad = [c for c in inst.get("checks", []) if c not in SUITE_CHECKS]
        if bad:
            raise InvalidSpec(f"unknown checks in manifest: {bad}")

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(
                lambda i: _run_instance(i, args.max_order), instances))
    else:
        rows = [_run_instance(i, args.max_order) for i in instances]

    failures = []
    for row in rows:
        for chk, res in row.get("results", {}).items():
            if res.get("agrees") is False:
                failures.append({"name": row["name"], "prime": row["prime"],
                                 "check": chk,
                                 "error": res.get("error")})
    out = {"version": VERSION, "command": "suite",
           "manifest_version": manifest.get("version"),
           "instances": rows, "failures": failures,
           "caveat": HOMOLOGY_PROXY_CAVEAT}
    if args.format == "json":
        _emit(json.dumps(out, sort_keys=True, indent=2,
                         ensure_ascii=False) + "\n", args)
    else:
        lines = []
        for row in rows:
            if "skipped" in row:
                lines.append(f"{row['name']} p={row['prime']}: "
                             f"skipped ({row['skipped']})")
                continue
            for chk, res in row["results"].items():
                a = res.get("agrees")
                tag = {True: "ok", False: "RED ALERT", None: "info"}[a]
                lines.append(f"{row['name']} p={row['prime']} {chk}: {tag}")
        lines.append(f"failures: {len(failures)}")
        lines.append(f"note: {HOMOLOGY_PROXY_CAVEAT}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_RED_ALERT if failures else EXIT_OK


# -- argument parsing ---------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quillen",
        description="Construct solvable groups, build p-subgroup "
                    "complexes, compute exact integral homology, and "
                    "verify structural predictions.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default="text", help="output format")
    common.add_argument("--out", help="write the report to this path")

    grp = argparse.ArgumentParser(add_help=False, parents=[common])
    grp.add_argument("spec", nargs="?",
                     help="path to a group-spec JSON file ('-' for stdin)")
    grp.add_argument("--name", help="catalog group name")
    grp.add_argument("--prime", type=int, help="the prime p")
    grp.add_argument("--max-order", type=int, default=0,
                     help="refuse groups larger than this order")

    q = sub.add_parser("quillen", parents=[grp],
                       help="build the torus complex and its homology")
    q.add_argument("--brown", action="store_true",
                   help="also build the full p-subgroup complex and "
                        "compare homology profiles")
    q.add_argument("--export-complex",
                   help="write the complex in simplex-list text format")
    q.set_defaults(func=cmd_quillen)

    c = sub.add_parser("cm-check", parents=[grp],
                       help="Cohen-Macaulay check for the torus complex")
    c.set_defaults(func=cmd_cm_check)

    d = sub.add_parser("decompose", parents=[grp],
                       help="structure decomposition of the Sylow "
                            "p-subgroup's order-p part")
    d.set_defaults(func=cmd_decompose)

    u = sub.add_parser("upper-interval", parents=[grp],
                       help="predict and verify an upper-interval profile")
    u.add_argument("--above", default="omega1z",
                   help="torus selector: omega1z | center | gens:i,j,...")
    u.set_defaults(func=cmd_upper_interval)

    w = sub.add_parser("pw-verify", parents=[grp],
                       help="verify the wedge formula over O_{p'}(G)")
    w.set_defaults(func=cmd_pw_verify)

    l = sub.add_parser("plength", parents=[grp],
                       help="verify p-length bounds and section structure")
    l.set_defaults(func=cmd_plength)

    m = sub.add_parser("main-check", parents=[grp],
                       help="full main-theorem pipeline for one group")
    m.set_defaults(func=cmd_main_check)

    h = sub.add_parser("homology", parents=[common],
                       help="homology of a simplex-list text file")
    h.add_argument("file", help="complex file ('-' for stdin)")
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("suite", parents=[common],
                       help="run the pinned verification suite")
    s.add_argument("--manifest", help="alternate suite manifest path")
    s.add_argument("--only", action="append",
                   help="restrict to this catalog name (repeatable)")
    s.add_argument("--jobs", type=int, default=1,
                   help="worker threads (results are unaffected)")
    s.add_argument("--max-order", type=int, default=0,
                   help="skip instances larger than this order")
    s.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpec, UnknownName, GroupTooLarge, HypothesisViolated,
            PreconditionFailed) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
