"""Command-line front end.

Every report is TSV with a one-line header (``--json`` for the same fields as
JSON).  A ``# generated`` timestamp line is prepended unless ``--no-timestamp``
is given or SKEINQUOT_NO_TIMESTAMP=1.  Exit codes: 0 all checks passed,
1 some check failed, 2 usage error, 3 invalid configuration, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import os
import re
import sys
import time
from pathlib import Path

from . import blocks, quotients, rep
from .cyclo import LevelError, check_level, is_prime, level_flags, smallest_split_prime

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3, 4
OUT_ENV = "SKEINQUOT_OUT"
NO_TS_ENV = "SKEINQUOT_NO_TIMESTAMP"


class ConfigError(ValueError):
    pass


# output --------------------------------------------------------------------------

class Reporter:
    def __init__(self, args, stream=None):
        self.json = args.json
        self.timestamp = not (args.no_timestamp or os.environ.get(NO_TS_ENV) == "1")
        self.stream = stream or sys.stdout
        self.failures: list[tuple[str, str]] = []
        self.tables: list[tuple[list[str], list[dict]]] = []
        self.notes: list[str] = []

    def table(self, fields: list[str], rows: list[dict]) -> None:
        self.tables.append((fields, rows))

    def fail(self, name: str, detail: str = "") -> None:
        self.failures.append((name, detail))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def flush(self) -> None:
        out = self.stream
        if self.json:
            doc = {}
            if self.timestamp:
                doc["generated"] = _now()
            doc["tables"] = [{"fields": f, "rows": r} for f, r in self.tables]
            doc["notes"] = self.notes
            doc["failures"] = [{"check": n, "detail": d} for n, d in self.failures]
            out.write(json.dumps(doc, indent=1, sort_keys=False) + "\n")
        else:
            if self.timestamp:
                out.write(f"# generated {_now()}\n")
            for i, (fields, rows) in enumerate(self.tables):
                if i:
                    out.write("\n")
                out.write("\t".join(fields) + "\n")
                for r in rows:
                    out.write("\t".join(_cell(r.get(k, "")) for k in fields) + "\n")
            for n in self.notes:
                out.write(n + "\n")
        for n, d in self.failures:
            sys.stderr.write(f"FAIL\t{n}\t{d}\n")


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()


def _cell(v) -> str:
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v)) if v else "-"
    return str(v)


# argument helpers --------------------------------------------------------------------

def _labels(text: str) -> tuple[int, ...]:
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"bad label tuple {text!r}") from None


def _level(p: int) -> int:
    try:
        return check_level(p)
    except LevelError as exc:
        raise ConfigError(str(exc)) from None


def _check_labels(p: int, labels) -> None:
    for c in labels:
        if c not in blocks.colors(p):
            raise ConfigError(f"label {c} violates: even and 0 <= c <= p-3 = {p - 3}")


def _spec(text: str, p: int) -> rep.SurfaceSpec:
    try:
        spec = rep.parse_spec(text.replace("p-3", str(p - 3)))
    except (rep.SpecError, ValueError) as exc:
        raise ConfigError(f"bad spec {text!r}: {exc}") from None
    _check_labels(p, spec.labels)
    return spec


def _out_dir(args) -> Path:
    return Path(args.out_dir or os.environ.get(OUT_ENV) or ".")


def _safe(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_")


def _elapsed(rep_: Reporter, seconds: float) -> str:
    return f"{seconds:.2f}" if rep_.timestamp else "-"


# subcommands -----------------------------------------------------------------------

def cmd_dims(args, out: Reporter) -> None:
    tuples = [_labels(t) for t in args.labels] if args.labels else [tuple(args.label or ())]
    methods = ["enumeration", "recursion", "verlinde"] if args.method == "all" else [args.method]
    rows = []
    for p in args.p:
        try:
            _level(p)
        except ConfigError:
            if args.method != "enumeration" or p < 4:
                raise
            out.note(f"# p={p}: composite level, coloring counts only")
        else:
            for flag in level_flags(p):
                out.note(f"# p={p}: {flag}")
        for g in args.g:
            if g < 0:
                raise ConfigError("g must be >= 0")
            for labels in tuples:
                _check_labels(p, labels)
                if g == 0 and len(labels) < 3:
                    raise ConfigError("genus 0 needs at least three labels")
                vals = []
                for m in methods:
                    r = blocks.dim_row(g, p, labels, m)
                    rows.append({"g": g, "p": p, "labels": labels, "dim": r.dim, "method": m})
                    vals.append(r.dim)
                if len(set(vals)) > 1:
                    out.fail(f"dims g={g} p={p} labels={labels}", f"methods disagree: {vals}")
    out.table(["g", "p", "labels", "dim", "method"], rows)


def cmd_verify_lemmas(args, out: Reporter) -> None:
    rows = []

    def add(check, g, p, passed, detail, method="recursion"):
        rows.append({"check": check, "g": g, "p": p, "passed": passed, "detail": detail,
                     "method": method})
        if not passed:
            out.fail(f"{check} g={g} p={p}", detail)

    for p in args.p:
        _level(p)
        for g in range(2, args.gmax + 1):
            c = blocks.check_compare(g, p)
            add("compare", g, p, c.passed, c.detail)
            c = blocks.check_growth(g, p)
            add("growth", g, p, c.passed, c.detail)
        for g in range(1, args.gmax):
            lhs, rhs = blocks.block_decomposition(g, p)
            add("decomposition", g, p, lhs == rhs, f"{lhs} = {rhs}")
    for p in args.ratio_p or ():
        _level(p)
        r = blocks.growth_ratio(p)
        add("growth-ratio", 3, p, abs(float(r) - 0.7) < 0.01, f"{float(r):.9f} ~ 0.7")
    out.table(["check", "g", "p", "passed", "detail", "method"], rows)


def cmd_square_scan(args, out: Reporter) -> None:
    if args.max < 5:
        raise ConfigError("--max must be >= 5")
    hits = blocks.square_scan(args.max, args.min)
    primes = sum(1 for q in range(max(args.min, 5), args.max + 1) if is_prime(q))
    out.table(["p_min", "p_max", "primes", "squares", "method"],
              [{"p_min": max(args.min, 5), "p_max": args.max, "primes": primes,
                "squares": len(hits), "method": "recursion"}])
    if hits:
        out.table(["p", "dim", "method"],
                  [{"p": p, "dim": blocks.genus3_top_fast(p), "method": "recursion"} for p in hits])
        out.fail("square-scan", f"squares at {hits}")
    out.note(f"{len(hits)} squares found")


def cmd_build_rep(args, out: Reporter) -> None:
    p = _level(args.p)
    spec = _spec(args.spec, p)
    B = rep.build(spec, p, args.t)
    path = Path(args.file) if args.file else _out_dir(args) / f"{_safe(spec.name)}_p{p}.bundle"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(rep.BundleFile.from_bundle(B).serialize())
    out.table(["spec", "p", "t", "dim", "matrices", "file"],
              [{"spec": spec.name, "p": p, "t": B.t, "dim": B.space.dim,
                "matrices": len(B.named()), "file": str(path)}])


def cmd_check_rep(args, out: Reporter) -> None:
    rows = []
    for p in args.p:
        _level(p)
        specs = [_spec(s, p) for s in args.spec] if args.spec else rep.supported_specs(p)
        for spec in specs:
            B = rep.build(spec, p, args.t)
            lines = rep.check_bundle(B)
            conj = rep.conj_symmetry_check(spec, p, args.t)
            lines.append(rep.CheckLine("conj-symmetry", all(conj.values()),
                                       ",".join(k for k, v in sorted(conj.items()) if not v)))
            for s in range(2, p):
                gc = rep.galois_coherence(spec, p, s, args.t)
                lines.append(rep.CheckLine(f"galois:{s}", all(gc.values())))
            if spec.kind == "OneHoledTorus":
                m = rep.modular_check(spec, p, args.t)
                lines.append(rep.CheckLine("modular:(ST)^3=lambda*S^2", m["lambda_root_of_unity"]))
                lines.append(rep.CheckLine("modular:S^2-central", m["s2_commutes"]))
            lines.append(rep.CheckLine("weights-positive", rep.weights_positive(B.space)
                                       if args.t is None else True,
                                       "" if args.t is None else "skipped at non-unitary root"))
            for c in lines:
                rows.append({"spec": spec.name, "p": p, "check": c.name, "passed": c.passed,
                             "detail": c.detail or "-", "method": "exact"})
                if not c.passed:
                    out.fail(f"{spec.name} p={p} {c.name}", c.detail)
        if args.pentagon:
            ok = rep.pentagon_check(p, t=args.t)
            rows.append({"spec": "HoledSphere(2,2,2,2,2)", "p": p, "check": "pentagon",
                         "passed": ok, "detail": "-", "method": "exact"})
            if not ok:
                out.fail(f"pentagon p={p}")
    out.table(["spec", "p", "check", "passed", "detail", "method"], rows)


def _report_row(word, report: quotients.SpectrumReport) -> dict:
    w = report.witness
    if w.get("kind") == "non-cyclotomic factor":
        wit = f"factor {w['factor']}"
        if "modulus" in w:
            wit += f"; |eigenvalue|={w['modulus']:.9f} at embedding {w['embedding']}"
    elif w.get("kind") == "unipotent part":
        wit = f"M^{w['power']} != Id"
    else:
        wit = f"M^{w['power']} = Id"
    return {"word": word or "-", "verdict": report.verdict, "order": report.order or "-",
            "witness": wit, "method": "exact-charpoly-norm"}


def cmd_push_explore(args, out: Reporter) -> None:
    p = _level(args.p)
    spec = _spec(args.spec or f"TwiceHoledTorus(2,{p - 3})", p)
    B = rep.build(spec, p, args.t)
    if not B.loops:
        raise ConfigError(f"{spec.name} has no named based loops")
    fields = ["word", "verdict", "order", "witness", "method"]
    if args.word:
        rows = []
        for w in args.word:
            try:
                M = quotients.word_matrix(B, w)
            except (rep.SpecError, KeyError) as exc:
                raise ConfigError(f"bad word {w!r}: {exc}") from None
            rows.append(_report_row(w, quotients.spectrum_report(M)))
        out.table(fields, rows)
        return
    ex = quotients.push_explore(B, args.max_len)
    rows = [{"search": "non-scalar commutator", "result": "[" + ",".join(ex.commutator) + "]"
             if ex.commutator else "none", "bound": args.max_len}]
    rows.append({"search": "infinite-order word", "result": ex.witness_word or "none",
                 "bound": args.max_len})
    out.table(["search", "result", "bound"], rows)
    if ex.report:
        out.table(fields, [_report_row(ex.witness_word, ex.report)])
    if ex.commutator is None:
        out.fail("push-explore commutator", f"no non-scalar commutator among loops of {spec.name}")
    if ex.witness_word is None:
        out.fail("push-explore witness", f"no infinite-order word of length <= {args.max_len}")


def _q_for(args, p: int, bundle=None) -> int:
    if args.q in (None, "auto"):
        return smallest_split_prime(p)
    try:
        q = int(args.q)
    except ValueError:
        raise ConfigError(f"bad q {args.q!r}") from None
    return q


def _reduce(bundle, q: int, index: int):
    try:
        return quotients.reduce_rep(bundle, q, index)
    except (quotients.BadPrimeError, IndexError) as exc:
        raise ConfigError(str(exc)) from None


def cmd_reduce(args, out: Reporter) -> None:
    p = _level(args.p)
    spec = _spec(args.spec, p)
    B = rep.build(spec, p, args.t)
    q = _q_for(args, p)
    R = _reduce(B, q, args.index)
    herm = quotients.hermitian_check(B, R)
    names = sorted(B.named())
    homo = quotients.homomorphism_check(B, R, list(zip(names, names[1:] + names[:1])))
    path = Path(args.file) if args.file else _out_dir(args) / f"{_safe(spec.name)}_p{p}_q{q}_{args.index}.residue"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(R.serialize())
    out.table(["spec", "p", "q", "f", "index", "hermitian", "homomorphism", "file"],
              [{"spec": spec.name, "p": p, "q": q, "f": R.f, "index": args.index,
                "hermitian": herm, "homomorphism": homo, "file": str(path)}])
    if not herm:
        out.fail("reduce hermitian", spec.name)
    if not homo:
        out.fail("reduce homomorphism", spec.name)


def _closure_target(args):
    """(p, spec name, ResidueRep, generator names, generator-set label)."""
    if args.sl2 is not None:
        q = args.sl2
        if not is_prime(q):
            raise ConfigError(f"q={q} is not prime")
        R = quotients.ResidueRep.from_integer_matrices(
            q, {"u": [[1, 1], [0, 1]], "l": [[1, 0], [1, 1]]}, "transvections")
        return "-", f"SL(2,{q})", R, ["u", "l"], "transvections"
    p = _level(args.p)
    if args.burau:
        try:
            k, a = (int(x) for x in args.burau.split(","))
            bb = rep.burau_block(k, a, p, args.t)
        except (ValueError, rep.SpecError) as exc:
            raise ConfigError(f"bad Burau cell {args.burau!r}: {exc}") from None
        B = bb.bundle
        gens = [f"s{m}" for m in range(1, k)]
        label = "burau"
    else:
        spec = _spec(args.spec, p)
        B = rep.build(spec, p, args.t)
        gens = args.gens.split(",") if args.gens else list(B.generators)
        label = args.gens or "generators"
    q = _q_for(args, p)
    R = _reduce(B, q, args.index)
    missing = [g for g in gens if g not in R.mats]
    if missing:
        raise ConfigError(f"unknown generators {missing}")
    return p, B.spec.name, R, gens, label


def cmd_closure(args, out: Reporter) -> None:
    if args.cap < 1:
        raise ConfigError("--cap must be >= 1")
    p, name, R, gens, label = _closure_target(args)
    res = quotients.closure(R, gens, args.cap, args.projective)
    out.table(["p", "q", "f", "spec", "generators", "projective", "status", "order", "visited",
               "method", "time"],
              [{"p": p, "q": R.q, "f": R.f, "spec": name, "generators": label,
                "projective": "yes" if args.projective else "no", "status": res.status,
                "order": res.order_text(), "visited": res.visited, "method": "closure",
                "time": _elapsed(out, res.seconds)}])


def cmd_compare_images(args, out: Reporter) -> None:
    p = _level(args.p)
    spec = _spec(args.spec or f"TwiceHoledTorus(2,{p - 3})", p)
    B = rep.build(spec, p, args.t)
    if not B.loops:
        raise ConfigError(f"{spec.name} has no point-pushing loops")
    q = _q_for(args, p)
    R = _reduce(B, q, args.index)
    pi = [f"push:{x}" for x in sorted(B.loops)]
    mcg = list(B.generators)
    projective = not args.linear
    t0 = time.perf_counter()
    d = quotients.compare_subgroups(R, pi, mcg, args.cap, projective)
    t1 = time.perf_counter()
    nv = quotients.normality_check(R, pi, mcg, args.cap, projective)
    t2 = time.perf_counter()
    rows = [
        {"p": p, "q": q, "f": R.f, "spec": spec.name, "test": "same_subgroup(pi,mcg)",
         "verdict": d.verdict, "method": d.method, "time": _elapsed(out, t1 - t0)},
        {"p": p, "q": q, "f": R.f, "spec": spec.name, "test": "normal(pi,mcg)",
         "verdict": nv, "method": "closure" if nv != "undecided" else "membership",
         "time": _elapsed(out, t2 - t1)},
    ]
    out.table(["p", "q", "f", "spec", "test", "verdict", "method", "time"], rows)
    if d.certificate and args.certificate:
        out.table(["target", "word"],
                  [{"target": k, "word": " ".join(v) or "1"} for k, v in sorted(d.certificate.items())
                   if isinstance(v, list)])
    for r in rows:
        if r["verdict"] != "true":
            out.fail(r["test"], r["verdict"])


def cmd_roundtrip(args, out: Reporter) -> None:
    try:
        data = Path(args.path).read_bytes()
    except OSError as exc:
        raise OSError(f"cannot read {args.path}: {exc}") from exc
    text = data.decode()
    kind, err, again = "unknown", "", None
    try:
        if text.startswith("# skein bundle"):
            kind = "bundle"
            again = rep.BundleFile.parse(text).serialize()
        elif text.startswith("# residue-rep"):
            kind = "residue"
            again = quotients.ResidueRep.parse(text).serialize()
        elif text.startswith("g\tp\tlabels"):
            kind = "dim-table"
            again = blocks.dim_table_tsv(blocks.parse_dim_table(text))
        else:
            err = "unrecognized file type (byte offset 0)"
    except rep.BundleFormatError as exc:
        err = str(exc)
    except (ValueError, IndexError, KeyError) as exc:
        err = f"corrupt {kind} file: {exc}"
    if again is not None and again.encode() != data:
        a = again.encode()
        off = next((i for i, (x, y) in enumerate(zip(a, data)) if x != y), min(len(a), len(data)))
        err = f"re-serialization differs (byte offset {off})"
    ok = not err
    out.table(["file", "kind", "roundtrip", "detail"],
              [{"file": args.path, "kind": kind, "roundtrip": ok, "detail": err or "byte-identical"}])
    if not ok:
        out.fail("roundtrip", err)


# parser --------------------------------------------------------------------------

COMMANDS = {
    "dims": cmd_dims,
    "verify-lemmas": cmd_verify_lemmas,
    "square-scan": cmd_square_scan,
    "build-rep": cmd_build_rep,
    "check-rep": cmd_check_rep,
    "push-explore": cmd_push_explore,
    "reduce": cmd_reduce,
    "closure": cmd_closure,
    "compare-images": cmd_compare_images,
    "roundtrip": cmd_roundtrip,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp line")
    common.add_argument("--json", action="store_true", help="JSON instead of TSV")
    common.add_argument("--config", help="key=value file mirroring the flags")
    common.add_argument("--out-dir", help=f"directory for written files (default ${OUT_ENV} or .)")

    ap = argparse.ArgumentParser(prog="skeinquot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dims", parents=[common], help="conformal-block dimension tables")
    s.add_argument("--g", type=int, nargs="+", default=[2])
    s.add_argument("--p", type=int, nargs="+", default=[7])
    s.add_argument("--label", type=int, action="append", help="one boundary color (repeatable)")
    s.add_argument("--labels", action="append", help="comma tuple, '-' for none (repeatable)")
    s.add_argument("--method", default="recursion",
                   choices=["recursion", "enumeration", "verlinde", "closed-form", "all"])

    s = sub.add_parser("verify-lemmas", parents=[common], help="compare/growth/decomposition checks")
    s.add_argument("--p", type=int, nargs="+", default=[7, 11, 19])
    s.add_argument("--gmax", type=int, default=4)
    s.add_argument("--ratio-p", type=int, nargs="*")

    s = sub.add_parser("square-scan", parents=[common], help="perfect-square scan over primes")
    s.add_argument("--max", type=int, default=10000)
    s.add_argument("--min", type=int, default=5)

    def rep_args(s, spec_required=True):
        s.add_argument("--spec", required=spec_required,
                       help="e.g. TwiceHoledTorus(2,4); 'p-3' is substituted")
        s.add_argument("--p", type=int, default=7)
        s.add_argument("--t", type=int, help="root exponent (default: unitary root)")

    s = sub.add_parser("build-rep", parents=[common], help="write a matrix bundle")
    rep_args(s)
    s.add_argument("--file")

    s = sub.add_parser("check-rep", parents=[common], help="relations and invariance checks")
    s.add_argument("--spec", action="append")
    s.add_argument("--p", type=int, nargs="+", default=[5, 7])
    s.add_argument("--t", type=int)
    s.add_argument("--pentagon", action="store_true")

    s = sub.add_parser("push-explore", parents=[common], help="point-pushing words and spectra")
    rep_args(s, spec_required=False)
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--word", action="append")

    s = sub.add_parser("reduce", parents=[common], help="write a residue bundle")
    rep_args(s)
    s.add_argument("--q", default="auto")
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--file")

    s = sub.add_parser("closure", parents=[common], help="finite group closure")
    rep_args(s, spec_required=False)
    s.add_argument("--q", default="auto")
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--gens", help="comma-separated generator names")
    s.add_argument("--burau", help="k,a: braid generators on the Burau block")
    s.add_argument("--sl2", type=int, help="transvection generators of SL(2,q)")
    s.add_argument("--cap", type=int, default=quotients.DEFAULT_CAP)
    s.add_argument("--projective", action="store_true")

    s = sub.add_parser("compare-images", parents=[common], help="surface-group vs mapping-class image")
    rep_args(s, spec_required=False)
    s.add_argument("--q", default="auto")
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--cap", type=int, default=quotients.DEFAULT_CAP)
    s.add_argument("--linear", action="store_true", help="compare without quotienting scalars")
    s.add_argument("--certificate", action="store_true", help="print membership words")

    s = sub.add_parser("roundtrip", parents=[common], help="parse and re-serialize a file")
    s.add_argument("path")
    return ap


def load_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    cfg = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {n}: expected key=value")
        k, _, v = line.partition("=")
        cfg[k.strip().replace("-", "_")] = v.strip()
    return cfg


def apply_config(parser: argparse.ArgumentParser, args, cfg: dict[str, str], argv=()) -> None:
    """Fill flags not given on the command line from the config (command line wins)."""
    sub = next(a for a in parser._subparsers._group_actions[0].choices.values()
               if a.prog.endswith(" " + args.command))
    actions = {a.dest: a for a in sub._actions}
    given = {a.dest for a in sub._actions
             if any(tok == o or tok.startswith(o + "=") for o in a.option_strings for tok in argv)}
    for key, raw in cfg.items():
        if key not in actions or key in ("help", "config"):
            raise ConfigError(f"unknown config key {key!r} for {args.command}")
        act = actions[key]
        if key in given:
            continue
        if isinstance(act, argparse._StoreTrueAction):
            val = raw.lower() in ("1", "true", "yes", "on")
        else:
            parts = raw.split()
            conv = act.type or str
            try:
                if act.nargs in ("+", "*") or isinstance(act, argparse._AppendAction):
                    val = [conv(x) for x in parts]
                else:
                    val = conv(raw)
            except ValueError:
                raise ConfigError(f"config key {key!r}: bad value {raw!r}") from None
        setattr(args, key, val)


def run(argv=None, stream=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Reporter(args, stream)
    try:
        if args.config:
            apply_config(parser, args, load_config(args.config), argv)
            out = Reporter(args, stream)
        COMMANDS[args.command](args, out)
    except (ConfigError, LevelError, rep.SpecError, quotients.BadPrimeError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO
    out.flush()
    return EXIT_FAIL if out.failures else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
