"""Command-line front end.

Exit codes: 0 the checked property holds (or nothing was checked),
1 a checked property fails, 2 bad input, 3 two routes to the same
quantity disagreed, 4 a work budget was exceeded.

JSON output is the stable machine contract and is byte-identical for
identical inputs and seeds, independent of --workers.  Text output is a
human summary; csv (where offered) is a flat table.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import __version__
from .codes import compare_bundles, invariant_bundle, linearized_factor_check
from .errors import BudgetExceeded, FieldMismatch, InputError, MethodDisagreement
from .family import (
    N6_FORMS,
    FamilyParams,
    construct,
    dillon_trinomial,
    enumerate_params,
    find_dillon_u,
    gold,
    known,
    random_params,
    specialize_n6,
)
from .field import FieldCtx, make_field, primitive_elements
from .proofsteps import proof_report
from .spectra import ddt, diff_uniformity_exhaustive, diff_uniformity_quadratic, walsh_spectrum
from .vbf import load_function_spec, load_table_file

DDT_DUMP_MAX_N = 8


# -- argument parsing helpers --------------------------------------------------


def _parse_int(text: str) -> int:
    text = text.strip()
    try:
        return int(text, 16) if text.lower().startswith("0x") else int(text)
    except ValueError as exc:
        raise InputError(f"not an integer: {text!r}") from exc


def _parse_kv(text: str, what: str, allowed: tuple) -> dict:
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, eq, value = piece.partition("=")
        if not eq or not value:
            raise InputError(f"bad {what} fragment {piece!r}; expected key=value")
        key = key.strip()
        if key not in allowed:
            raise InputError(f"unknown {what} key {key!r}; allowed: {', '.join(allowed)}")
        if key in out:
            raise InputError(f"duplicate {what} key {key!r}")
        out[key] = value.strip()
    return out


def parse_field_spec(text: str) -> FieldCtx:
    if "=" not in text:
        return make_field(_parse_int(text))
    kv = _parse_kv(text, "--field", ("n", "modulus"))
    if "n" not in kv:
        raise InputError("--field needs n=<degree>")
    modulus = kv.get("modulus", "default")
    if modulus != "default":
        modulus = _parse_int(modulus)
    return make_field(_parse_int(kv["n"]), modulus)


def parse_params_spec(text: str) -> FamilyParams:
    kv = _parse_kv(text, "--params", ("k", "s", "u", "v", "w"))
    missing = [key for key in ("k", "s", "u", "v", "w") if key not in kv]
    if missing:
        raise InputError(f"--params missing {', '.join(missing)}")
    return FamilyParams(
        k=_parse_int(kv["k"]),
        s=_parse_int(kv["s"]),
        u=_parse_int(kv["u"]),
        v=_parse_int(kv["v"]),
        w=_parse_int(kv["w"]),
    )


def _resolve_source(args, prefix: str = ""):
    """Build (ctx, function, echo) from exactly one function source."""

    def get(name):
        return getattr(args, prefix + name, None)

    ctx = parse_field_spec(args.field) if getattr(args, "field", None) else None
    sources = [get("params"), get("known"), get("spec_file"), get("table_file")]
    dashed = prefix.replace("_", "-")
    if sum(s is not None for s in sources) != 1:
        raise InputError(
            f"exactly one of --{dashed}params/--{dashed}known/"
            f"--{dashed}spec-file/--{dashed}table-file is required"
        )
    if get("spec_file") is not None:
        f = load_function_spec(get("spec_file"))
        if ctx is not None and f.field != ctx:
            raise FieldMismatch(f"--field disagrees with the field inside {get('spec_file')}")
        return f.field, f, {"kind": "spec_file", "path": get("spec_file")}
    if ctx is None:
        raise InputError("--field is required unless the function comes from --spec-file")
    if get("table_file") is not None:
        f = load_table_file(ctx, get("table_file"))
        return ctx, f, {"kind": "table_file", "path": get("table_file")}
    if get("known") is not None:
        return ctx, known(ctx, get("known")), {"kind": "known", "id": get("known")}
    params = parse_params_spec(get("params"))
    return ctx, construct(ctx, params), {"kind": "params", "params": params.as_dict()}


def _frame(command: str, ctx: FieldCtx) -> dict:
    return {
        "tool": {"name": "apnquad", "version": __version__},
        "command": command,
        "field": ctx.descriptor(),
    }


# -- output --------------------------------------------------------------------


def _text_lines(obj, prefix: str = "") -> list:
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            lines.extend(_text_lines(obj[key], f"{prefix}{key}." if prefix else f"{key}."))
        return lines
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return [f"{prefix[:-1]}: {' '.join(str(v) for v in obj)}"]
        lines = []
        for i, v in enumerate(obj):
            lines.extend(_text_lines(v, f"{prefix[:-1]}[{i}]."))
        return lines
    return [f"{prefix[:-1]}: {obj}"]


def _emit(args, payload: dict, csv_rows=None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        if csv_rows is None:
            raise InputError(f"csv output is not defined for {payload.get('command')}")
        for row in csv_rows:
            print(",".join(str(v) for v in row))
    else:
        for line in _text_lines(payload):
            print(line)


# -- subcommand handlers -------------------------------------------------------


def cmd_field_info(args) -> int:
    ctx = parse_field_spec(args.field)
    payload = _frame("field-info", ctx)
    payload.update(
        {
            "order": ctx.order,
            "group_order": ctx.group_order,
            "group_order_factors": list(ctx.group_order_factors),
            "generator": f"0x{ctx.generator:x}",
            "primitive_count": len(primitive_elements(ctx)),
            "subfield_degrees": [d for d in range(1, ctx.n + 1) if ctx.n % d == 0],
            "trace_mask": f"0x{ctx.trace_mask:x}",
        }
    )
    _emit(args, payload)
    return 0


def cmd_verify(args) -> int:
    ctx, f, echo = _resolve_source(args)
    payload = _frame("verify", ctx)
    payload["function"] = echo
    payload["method"] = args.method
    u_ex = u_ker = None
    if args.method in ("exhaustive", "both"):
        ds = diff_uniformity_exhaustive(f, workers=args.workers)
        payload["differential_spectrum"] = ds.as_dict()
        u_ex = ds.uniformity
    if args.method in ("quadratic", "both"):
        kr = diff_uniformity_quadratic(f, workers=args.workers)
        payload["kernel_report"] = kr.as_dict()
        u_ker = kr.max_kernel
    if u_ex is not None and u_ker is not None and u_ex != u_ker:
        raise MethodDisagreement(
            f"exhaustive uniformity {u_ex} != quadratic kernel bound {u_ker}"
        )
    uniformity = u_ex if u_ex is not None else u_ker
    payload["uniformity"] = uniformity
    payload["apn"] = uniformity == 2
    if args.expect_uniformity is not None:
        payload["expected_uniformity"] = args.expect_uniformity
        payload["pass"] = uniformity == args.expect_uniformity
    else:
        payload["pass"] = payload["apn"]
    _emit(args, payload)
    return 0 if payload["pass"] else 1


def cmd_spectrum(args) -> int:
    ctx, f, echo = _resolve_source(args)
    ds = diff_uniformity_exhaustive(f, workers=args.workers)
    payload = _frame("spectrum", ctx)
    payload["function"] = echo
    payload.update(ds.as_dict())
    if args.dump_ddt:
        if ctx.n > DDT_DUMP_MAX_N:
            raise BudgetExceeded(
                f"DDT dump is a 2^{ctx.n} x 2^{ctx.n} table; capped at n = {DDT_DUMP_MAX_N}"
            )
        table = ddt(f)
        with open(args.dump_ddt, "w") as fh:
            for row in table:
                fh.write(",".join(str(int(v)) for v in row) + "\n")
        payload["ddt_file"] = args.dump_ddt
    rows = [("count", "frequency")] + [tuple(entry) for entry in ds.histogram]
    _emit(args, payload, csv_rows=rows)
    return 0


def cmd_walsh(args) -> int:
    ctx, f, echo = _resolve_source(args)
    ws = walsh_spectrum(f, workers=args.workers)
    payload = _frame("walsh", ctx)
    payload["function"] = echo
    payload.update(ws.as_dict())
    rows = [("abs_value", "count")] + [tuple(entry) for entry in ws.values]
    _emit(args, payload, csv_rows=rows)
    return 0


def cmd_invariants(args) -> int:
    ctx, f, echo = _resolve_source(args)
    bundle = invariant_bundle(f, workers=args.workers)
    payload = _frame("invariants", ctx)
    payload["function"] = echo
    payload["bundle"] = bundle.as_dict()
    _emit(args, payload)
    return 0


def cmd_compare(args) -> int:
    ctx, f, echo = _resolve_source(args)
    ctx2, g, echo2 = _resolve_source(args, prefix="other_")
    if ctx != ctx2:
        raise FieldMismatch("the two functions live in different fields")
    left = invariant_bundle(f, workers=args.workers)
    right = invariant_bundle(g, workers=args.workers)
    verdict = compare_bundles(left, right)
    payload = _frame("compare", ctx)
    payload["left"] = {"function": echo, "bundle": left.as_dict()}
    payload["right"] = {"function": echo2, "bundle": right.as_dict()}
    payload["verdict"] = verdict.as_dict()
    _emit(args, payload)
    if args.expect is None:
        return 0
    wanted = "indistinguishable" if args.expect == "equal" else "distinguished"
    return 0 if verdict.status == wanted else 1


def cmd_enumerate(args) -> int:
    ctx = parse_field_spec(args.field)
    rows = []
    count = 0
    for params in enumerate_params(ctx, args.k, args.s):
        if args.limit is not None and count >= args.limit:
            break
        count += 1
        row = {"params": params.as_dict()}
        if ctx.n == 6:
            row["form"] = specialize_n6(params)
        if args.check:
            f = construct(ctx, params)
            row["uniformity"] = diff_uniformity_quadratic(f, workers=args.workers).max_kernel
            row["apn"] = row["uniformity"] == 2
        rows.append(row)
    if args.format == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    elif args.format == "csv":
        header = ["k", "s", "u", "v", "w"]
        extras = (["form"] if ctx.n == 6 else []) + (["apn"] if args.check else [])
        print(",".join(header + extras))
        for row in rows:
            p = row["params"]
            cells = [p["k"], p["s"], p["u"], p["v"], p["w"]]
            cells += [row[e] for e in extras]
            print(",".join(str(c) for c in cells))
    else:
        for row in rows:
            p = row["params"]
            bits = [f"k={p['k']} s={p['s']} u={p['u']} v={p['v']} w={p['w']}"]
            if "form" in row:
                bits.append(f"form={row['form']}")
            if "apn" in row:
                bits.append(f"apn={row['apn']}")
            print(" ".join(bits))
    return 0


def cmd_proofcheck(args) -> int:
    ctx = parse_field_spec(args.field)
    if args.params is not None:
        if args.all_params or args.sample is not None:
            raise InputError("--params cannot be combined with --all-params/--sample")
        params = parse_params_spec(args.params)
        report = proof_report(
            ctx,
            params,
            theta_samples=args.theta_samples,
            seed=args.seed,
            match_q_samples=args.match_q_samples,
        )
        payload = _frame("proofcheck", ctx)
        payload["seed"] = args.seed
        payload["theta_samples"] = args.theta_samples
        payload.update(report.as_dict())
        _emit(args, payload)
        return 0 if report.all_passed else 1

    if args.all_params and args.sample is not None:
        raise InputError("choose one of --all-params or --sample N")
    if not args.all_params and args.sample is None:
        raise InputError("proofcheck needs --params, --all-params or --sample N")
    if args.k is None or args.s is None:
        raise InputError("sweeps need --k and --s")
    if args.sample is not None:
        rng = random.Random(args.seed)
        seen = set()
        tuples = []
        while len(tuples) < args.sample:
            p = random_params(ctx, args.k, args.s, rng)
            if p not in seen:
                seen.add(p)
                tuples.append(p)
    else:
        tuples = list(enumerate_params(ctx, args.k, args.s))
    failures = []
    for params in tuples:
        report = proof_report(
            ctx,
            params,
            theta_samples=args.theta_samples,
            seed=args.seed,
            match_q_samples=args.match_q_samples,
        )
        if not report.all_passed:
            failures.append(
                {
                    "params": params.as_dict(),
                    "failed": [c.name for c in report.checks if not c.passed],
                }
            )
    payload = _frame("proofcheck", ctx)
    payload["seed"] = args.seed
    payload["theta_samples"] = args.theta_samples
    payload["mode"] = "all-params" if args.all_params else f"sample-{args.sample}"
    payload["tuples"] = len(tuples)
    payload["failures"] = failures[:20]
    payload["failure_count"] = len(failures)
    payload["all_pass"] = not failures
    _emit(args, payload)
    return 0 if not failures else 1


def cmd_reproduce_n6(args) -> int:
    ctx = parse_field_spec(args.field) if args.field else make_field(6)
    if ctx.n != 6:
        raise InputError(f"this workflow is specific to n = 6, got n = {ctx.n}")
    k, s = 2, 1
    counts = {form: 0 for form in N6_FORMS}
    reps: dict = {}
    total = 0
    non_apn = []
    for params in enumerate_params(ctx, k, s):
        total += 1
        f = construct(ctx, params)
        u_ex = diff_uniformity_exhaustive(f, workers=args.workers).uniformity
        u_ker = diff_uniformity_quadratic(f, workers=args.workers).max_kernel
        if u_ex != u_ker:
            raise MethodDisagreement(
                f"methods disagree at {params.as_dict()}: {u_ex} vs {u_ker}"
            )
        form = specialize_n6(params)
        counts[form] += 1
        if form not in reps:
            reps[form] = (params, f)
        if u_ex != 2:
            non_apn.append(params.as_dict())

    payload = _frame("reproduce-n6", ctx)
    payload["tuples_total"] = total
    payload["form_counts"] = counts
    payload["non_apn"] = non_apn[:20]
    verdicts = []
    verdicts.append(
        {
            "claim": "every valid parameter tuple is APN by both methods",
            "pass": not non_apn,
            "detail": {"tuples": total, "failures": len(non_apn)},
        }
    )

    payload["representatives"] = {
        form: {
            "params": reps[form][0].as_dict(),
            "term_exponents": sorted(e for _, e in reps[form][1].poly.terms),
        }
        for form in N6_FORMS
        if form in reps
    }

    dillon_u = find_dillon_u(ctx)
    payload["trinomial_u"] = f"0x{dillon_u:x}"
    trinomial = dillon_trinomial(ctx, dillon_u)
    cube = gold(ctx, 1)
    bundles = {
        name: invariant_bundle(fn, workers=args.workers)
        for name, fn in [("trinomial", trinomial), ("cube", cube)]
        + [(form, reps[form][1]) for form in N6_FORMS if form in reps]
    }
    payload["bundle_digests"] = {
        name: b.as_dict()["content_hash"] for name, b in bundles.items()
    }

    for form in ("quadrinomial", "v_only", "w_only"):
        if form not in bundles:
            continue
        verdict = compare_bundles(bundles[form], bundles["trinomial"])
        verdicts.append(
            {
                "claim": f"{form} representative shares all invariants with the APN trinomial",
                "pass": verdict.status == "indistinguishable",
                "detail": verdict.as_dict(),
            }
        )
        verdict = compare_bundles(bundles[form], bundles["cube"])
        verdicts.append(
            {
                "claim": f"{form} representative is distinguished from x^3",
                "pass": verdict.status == "distinguished",
                "detail": verdict.as_dict(),
            }
        )

    if "binomial" in reps:
        witness = linearized_factor_check(reps["binomial"][1], 3)
        verdicts.append(
            {
                "claim": "binomial representative factors as L(x^3) with L linear and invertible",
                "pass": witness is not None,
                "detail": None
                if witness is None
                else {"columns": [f"0x{c:x}" for c in witness.cols], "constant": f"0x{witness.constant:x}"},
            }
        )
    payload["verdicts"] = verdicts
    payload["all_pass"] = all(v["pass"] for v in verdicts)
    _emit(args, payload)
    return 0 if payload["all_pass"] else 1


# -- parser assembly -----------------------------------------------------------


def _default_workers() -> int:
    raw = os.environ.get("APNQUAD_WORKERS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"APNQUAD_WORKERS is not an integer: {raw!r}")
    return value


def _add_common(p, formats=("json", "text")) -> None:
    p.add_argument("--format", choices=formats, default="json")
    p.add_argument("--workers", type=int, default=None, help="parallel shards (env APNQUAD_WORKERS)")


def _add_source(p, prefix: str = "") -> None:
    dashed = prefix.replace("_", "-")
    p.add_argument(f"--{dashed}params", help="family tuple k=..,s=..,u=..,v=..,w=..")
    p.add_argument(f"--{dashed}known", help="catalog id, e.g. gold:1 or dillon_trinomial")
    p.add_argument(f"--{dashed}spec-file", help="JSON polynomial file (carries its field)")
    p.add_argument(f"--{dashed}table-file", help="hex value table, needs --field")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apnquad",
        description="Quadrinomial APN family over GF(2^(3k)): "
        "verification, spectra, invariants and proof-step checks.",
    )
    parser.add_argument("--version", action="version", version=f"apnquad {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="field constants and table sanity")
    p.add_argument("--field", required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_field_info)

    p = sub.add_parser("verify", help="differential uniformity / APN verdict")
    p.add_argument("--field")
    _add_source(p)
    p.add_argument("--method", choices=("exhaustive", "quadratic", "both"), default="both")
    p.add_argument("--expect-uniformity", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("spectrum", help="full differential spectrum")
    p.add_argument("--field")
    _add_source(p)
    p.add_argument("--dump-ddt", metavar="PATH", help=f"write the DDT as csv (n <= {DDT_DUMP_MAX_N})")
    _add_common(p, formats=("json", "text", "csv"))
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("walsh", help="absolute Walsh value distribution and nonlinearity")
    p.add_argument("--field")
    _add_source(p)
    _add_common(p, formats=("json", "text", "csv"))
    p.set_defaults(handler=cmd_walsh)

    p = sub.add_parser("invariants", help="equivalence-invariant bundle")
    p.add_argument("--field")
    _add_source(p)
    _add_common(p)
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("compare", help="compare two functions by their invariant bundles")
    p.add_argument("--field")
    _add_source(p)
    _add_source(p, prefix="other_")
    p.add_argument("--expect", choices=("equal", "different"), default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("enumerate", help="list valid family tuples as JSON lines")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify each tuple (quadratic method)")
    p.add_argument("--limit", type=int, default=None)
    _add_common(p, formats=("json", "text", "csv"))
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("proofcheck", help="machine checks of the APN argument")
    p.add_argument("--field", required=True)
    p.add_argument("--params", help="single tuple k=..,s=..,u=..,v=..,w=..")
    p.add_argument("--all-params", action="store_true", help="sweep every valid tuple")
    p.add_argument("--sample", type=int, default=None, help="sweep N seeded-random tuples")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--theta-samples", type=int, default=50)
    p.add_argument("--match-q-samples", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(handler=cmd_proofcheck)

    p = sub.add_parser("reproduce-n6", help="sweep, classify and compare all n = 6 members")
    p.add_argument("--field", help="defaults to n=6 with the default modulus")
    _add_common(p)
    p.set_defaults(handler=cmd_reproduce_n6)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "workers", None) is None:
            args.workers = _default_workers()
        if args.workers < 1:
            raise InputError(f"--workers must be >= 1, got {args.workers}")
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MethodDisagreement as exc:
        print(f"method disagreement: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
