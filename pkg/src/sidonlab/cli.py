"""Command-line entry point.

Exit codes: 0 success, 1 a checked property came out False, 2 usage or
validation error, 3 internal exactness assertion failed.
"""

import argparse
import hashlib
import json
import os
import sys

import numpy as np

from . import families, graphdist, sidon, viz
from .errors import (CapabilityError, DomainError, InternalCheckError,
                     SidonlabError, ValidationError)
from .field import DEFAULT_MODULI, make_field
from .sidon import IN_SET, PointSet
from .vbf import (TruthTable, algebraic_degree, components_all_unbalanced,
                  cyclotomic_equivalent, graph_of, is_ab, is_apn, is_plateaued)

VERSION_TAG = "sidonlab-1"


# -- spec strings -------------------------------------------------------------

def parse_function_spec(text, n=None, modulus=None):
    """Parse 'gold:k=1', 'inverse', 'table:path', ... into a truth table.

    Returns (normalized spec string, TruthTable, field-or-None, params).
    """
    name, _, paramtext = text.partition(":")
    name = name.strip().lower()
    if name == "table":
        path = paramtext
        with open(path) as fh:
            vals = [int(line, 16) for line in fh if line.strip()]
        dim = (len(vals) - 1).bit_length()
        if len(vals) != 1 << dim:
            raise ValidationError(f"table file must have a power-of-two line count")
        if n is not None and n != dim:
            raise ValidationError(f"table file has n={dim}, --n says {n}")
        return text, TruthTable.of(dim, vals), None, {}
    params = {}
    if paramtext:
        for item in paramtext.split(","):
            k, _, v = item.partition("=")
            if not _:
                raise ValidationError(f"malformed parameter {item!r}")
            params[k.strip()] = int(v, 0)
    if name == "dillon6":
        n = 6 if n is None else n
    if n is None:
        raise ValidationError(f"spec {text!r} needs an explicit --n")
    field = make_field(n, modulus)
    if name in ("tracequad1", "tracequad2") and "a" not in params:
        params["a"] = field.generator
    spec = families.FamilySpec(name, n, params)
    return spec.spec_string(), families.build(spec, field), field, params


def load_pointset(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("m="):
        raise ValidationError(f"{path}: first line must be m=<int>")
    m = int(lines[0][2:])
    return PointSet.of(m, (int(ln, 16) for ln in lines[1:]))


def save_pointset(path, s):
    with open(path, "w") as fh:
        fh.write(f"m={s.m}\n")
        for p in s.points:
            fh.write(f"{int(p):x}\n")


def _load_config(path):
    """Modulus overrides: JSON {"modulus": {"6": "0x43"}} or modulus.6=0x43."""
    with open(path) as fh:
        text = fh.read()
    overrides = {}
    try:
        data = json.loads(text)
        for k, v in data.get("modulus", {}).items():
            overrides[int(k)] = int(v, 0)
        return overrides
    except json.JSONDecodeError:
        pass
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition("=")
        key = key.strip()
        if key.startswith("modulus."):
            overrides[int(key[len("modulus."):])] = int(val.strip(), 0)
    return overrides


def _resolve_modulus(args):
    overrides = _load_config(args.config) if getattr(args, "config", None) else {}
    if getattr(args, "modulus", None):
        return int(args.modulus, 0)
    if args.n is not None:
        return overrides.get(args.n)
    return None


# -- distribution reports -----------------------------------------------------

def _cache_dir(args):
    if getattr(args, "no_cache", False):
        return None
    return getattr(args, "cache_dir", None) or os.environ.get("SIDONLAB_CACHE_DIR")


def _cached_mult(cache_dir, key_parts, compute):
    if cache_dir is None:
        return compute()
    os.makedirs(cache_dir, exist_ok=True)
    key = hashlib.sha256("|".join(key_parts).encode()).hexdigest()
    path = os.path.join(cache_dir, f"{key}.npy")
    if os.path.exists(path):
        return np.load(path)
    mult = compute()
    np.save(path, mult)
    return mult


def build_dist_report(spec_string, table, field, params, *,
                      oracle=False, per_coset=False, cache_dir=None):
    n = table.n
    modulus = field.modulus if field is not None else 0

    def compute():
        return graphdist.exclude_dist(table).mult.copy()

    mult = _cached_mult(
        cache_dir, (VERSION_TAG, spec_string, str(n), hex(modulus)), compute)
    dist = sidon.ExcludeDistribution(2 * n, graph_of(table), mult)
    oracle_ok = None
    if oracle:
        brute = graphdist.exclude_dist_bruteforce(table)
        oracle_ok = bool(np.array_equal(brute.mult, dist.mult))
    report = {
        "function_spec": spec_string,
        "n": n,
        "modulus": hex(modulus),
        "params": {k: int(v) for k, v in params.items()},
        "histogram": {str(k): v for k, v in sorted(dist.histogram.items())},
        "e_min": sidon.e_min(dist),
        "e_max": sidon.e_max(dist),
        "maximal": sidon.is_maximal(dist),
        "k_cover": sidon.k_cover_value(dist),
        "uniform_Q": graphdist.uniform_on_Q(table, dist),
        "uniform_Qstar": graphdist.uniform_on_Qstar(table, dist),
        "theorem_checks": {
            "conservation": True,  # enforced by ExcludeDistribution construction
            "maximality_bound": sidon.maximality_bound_check(dist, n),
            "oracle_agreement": oracle_ok,
        },
    }
    if per_coset:
        report["per_coset"] = {
            str(a): {str(k): v
                     for k, v in sorted(graphdist.coset_histogram(table, a, dist).items())}
            for a in range(table.size)
        }
    return report, dist


def _emit(report, args):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    print(text, end="")


def _write_csv(path, dist):
    with open(path, "w") as fh:
        fh.write("point,multiplicity\n")
        for x in range(1 << dist.m):
            k = int(dist.mult[x])
            if k != IN_SET:
                fh.write(f"{x:x},{k}\n")


# -- subcommands --------------------------------------------------------------

def cmd_dist(args):
    spec_string, table, field, params = parse_function_spec(
        args.spec, args.n, _resolve_modulus(args))
    report, dist = build_dist_report(
        spec_string, table, field, params,
        oracle=args.oracle, per_coset=args.per_coset, cache_dir=_cache_dir(args))
    if args.csv:
        _write_csv(args.csv, dist)
    _emit(report, args)
    if args.oracle and not report["theorem_checks"]["oracle_agreement"]:
        raise InternalCheckError("walsh and brute-force routes disagree")
    return 0


def cmd_check(args):
    spec_string, table, field, params = parse_function_spec(
        args.spec, args.n, _resolve_modulus(args))
    report = {
        "function_spec": spec_string,
        "n": table.n,
        "modulus": hex(field.modulus) if field else None,
        "apn": is_apn(table),
        "ab": is_ab(table),
        "plateaued": is_plateaued(table),
        "components_unbalanced": components_all_unbalanced(table),
        "algebraic_degree": algebraic_degree(table),
    }
    _emit(report, args)
    return 0


def cmd_uniform(args):
    spec_string, table, field, params = parse_function_spec(
        args.spec, args.n, _resolve_modulus(args))
    dist = graphdist.exclude_dist(table)
    report = {
        "function_spec": spec_string,
        "n": table.n,
        "uniform_Q": graphdist.uniform_on_Q(table, dist),
        "uniform_Qstar": graphdist.uniform_on_Qstar(table, dist),
    }
    _emit(report, args)
    return 0 if report["uniform_Q"] else 1


TABLE3_ROWS = [
    (4, "gold:k=1"), (4, "tracequad1"),
    (5, "inverse"), (5, "dobbertin"),
    (6, "gold:k=1"), (6, "tracequad1"), (6, "tracequad2"), (6, "dillon6"),
    (7, "inverse"),
    (8, "gold:k=1"), (8, "tracequad1"),
]
TABLE3_ROWS_LARGE = [
    (9, "inverse"),
    (10, "gold:k=1"), (10, "dobbertin"), (10, "tracequad1"),
]


def cmd_table3(args):
    rows = TABLE3_ROWS + (TABLE3_ROWS_LARGE if args.include_n10 else [])
    out = []
    for n, spec in rows:
        spec_string, table, field, params = parse_function_spec(spec, n)
        dist = graphdist.exclude_dist(table)
        out.append({
            "n": n,
            "function_spec": spec_string,
            "uniform_Q": graphdist.uniform_on_Q(table, dist),
            "uniform_Qstar": graphdist.uniform_on_Qstar(table, dist),
        })
    _emit({"rows": out}, args)
    return 0


def cmd_verify(args):
    name = args.theorem
    if name == "gold-kasami":
        spec = args.spec or "gold:k=1"
        spec_string, table, field, params = parse_function_spec(
            spec, args.n, _resolve_modulus(args))
        report = graphdist.verify_gold_kasami(table)
        report["function_spec"] = spec_string
    elif name == "carlet":
        spec = args.spec or "gold:k=1"
        spec_string, table, field, params = parse_function_spec(
            spec, args.n, _resolve_modulus(args))
        report = graphdist.verify_carlet_cases(table, field)
        report["function_spec"] = spec_string
    elif name == "zero-flat":
        spec_string, table, field, params = parse_function_spec(
            args.spec, args.n, _resolve_modulus(args))
        report = {
            "function_spec": spec_string,
            "ok": graphdist.conjecture_zero_flat_check(table),
        }
    elif name == "uniform-maximal":
        spec_string, table, field, params = parse_function_spec(
            args.spec, args.n, _resolve_modulus(args))
        dist = graphdist.exclude_dist(table)
        uq = graphdist.uniform_on_Q(table, dist)
        report = {
            "function_spec": spec_string,
            "uniform_Q": uq,
            "maximal": sidon.is_maximal(dist),
            "ok": (not uq) or sidon.is_maximal(dist),
        }
    elif name == "dillon-dproperty":
        spec_string, table, field, params = parse_function_spec(
            args.spec, args.n, _resolve_modulus(args))
        report = {
            "function_spec": spec_string,
            "ok": graphdist.dillon_dproperty(table),
        }
    else:
        raise ValidationError(f"unknown theorem {name!r}")
    _emit(report, args)
    return 0 if report["ok"] else 1


def cmd_render(args):
    if args.setfile:
        s = load_pointset(args.setfile)
        dist = sidon.exclude_distribution(s) if not args.no_dist else None
    else:
        spec_string, table, field, params = parse_function_spec(
            args.spec, args.n, _resolve_modulus(args))
        s = graph_of(table)
        dist = graphdist.exclude_dist(table) if not args.no_dist else None
    if args.text or not args.out:
        print(viz.render_text(s, dist), end="")
    if args.out:
        viz.write_svg(args.out, s, dist,
                      cell_size=args.cell_size, labels=not args.no_labels)
    return 0


def cmd_equiv(args):
    if args.kind == "cyclotomic":
        if args.n is None or len(args.args) != 2:
            raise ValidationError("usage: equiv cyclotomic --n N d d2")
        d, d2 = (int(a, 0) for a in args.args)
        eq = cyclotomic_equivalent(args.n, d, d2)
        _emit({"kind": "cyclotomic", "n": args.n, "d": d, "d2": d2,
               "equivalent": eq}, args)
        return 0 if eq else 1
    if args.kind == "ed":
        if len(args.args) != 2:
            raise ValidationError("usage: equiv ed setA.pts setB.pts")
        d1 = sidon.exclude_distribution(load_pointset(args.args[0]))
        d2 = sidon.exclude_distribution(load_pointset(args.args[1]))
        eq = sidon.ed_equivalent(d1, d2)
        _emit({"kind": "ed", "equivalent": eq}, args)
        return 0 if eq else 1
    raise ValidationError(f"unknown equivalence kind {args.kind!r}")


# -- argument parsing ---------------------------------------------------------

def _add_common(p, spec=True):
    if spec:
        p.add_argument("spec", help="function spec, e.g. gold:k=1, inverse, table:f.txt")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--modulus", help="field modulus override as a hex mask")
    p.add_argument("--config", help="config file with modulus.<n>=<hex> overrides")
    p.add_argument("--out", help="write the JSON report here as well as stdout")


def build_parser():
    ap = argparse.ArgumentParser(prog="sidonlab")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exclude distribution of a graph")
    _add_common(p)
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force route and compare")
    p.add_argument("--per-coset", action="store_true")
    p.add_argument("--csv", help="write point,multiplicity CSV here")
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("check", help="APN/AB/plateaued/degree property table")
    _add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("uniform", help="uniformity on the coset partitions")
    _add_common(p)
    p.set_defaults(fn=cmd_uniform)

    p = sub.add_parser("table3", help="uniformity matrix over the built-in roster")
    _add_common(p, spec=False)
    p.add_argument("--include-n10", action="store_true")
    p.set_defaults(fn=cmd_table3)

    p = sub.add_parser("verify", help="run a named verification recipe")
    p.add_argument("theorem", choices=["gold-kasami", "carlet", "zero-flat",
                                       "uniform-maximal", "dillon-dproperty"])
    p.add_argument("spec", nargs="?", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--modulus")
    p.add_argument("--config")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="text or SVG picture of a Sidon set")
    p.add_argument("spec", nargs="?", default=None)
    p.add_argument("--setfile", help="render a point-set file instead of a graph")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--modulus")
    p.add_argument("--config")
    p.add_argument("--out", help="SVG output path")
    p.add_argument("--text", action="store_true")
    p.add_argument("--no-dist", action="store_true")
    p.add_argument("--cell-size", type=int, default=24)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("equiv", help="ED or cyclotomic equivalence")
    p.add_argument("kind", choices=["ed", "cyclotomic"])
    p.add_argument("args", nargs="*")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_equiv)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, DomainError, CapabilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SidonlabError as exc:  # pragma: no cover
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
