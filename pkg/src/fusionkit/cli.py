"""Command-line front end: family configs, result envelopes, disk cache.

Every run prints one JSON ResultEnvelope to stdout and exits 0 on success,
1 on a computation error, 2 on a configuration error.  Outputs are
deterministic for a given config and engine version; multiplicities are
serialized as decimal strings throughout because they routinely exceed
native integer ranges in downstream consumers.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys as _sys
import tempfile
import time
import warnings
from dataclasses import dataclass

from . import __version__
from .core import FusionElement, FusionError, FusionSystem, IrrLabel
from .families import (
    GroupDualSystem,
    element_to_json,
    format_label,
    parse_element,
    parse_label,
    system_from_config,
)
from . import amenability, characters, geometry, params, powers, towers

CACHE_ENV_VAR = "FUSIONKIT_CACHE_DIR"


class ConfigError(FusionError):
    """Invalid configuration file or flags."""


# ---------------------------------------------------------------------------
# persistent pair cache
# ---------------------------------------------------------------------------

class DiskCache:
    """Content-addressed cache of irreducible pair products.

    Keys combine the family fingerprint with the label pair; entries are
    JSON files written atomically (temp file + rename), so concurrent
    processes can share a cache directory.  Corrupt entries are ignored
    and recomputed; I/O failures degrade to memory-only with a warning.
    """

    def __init__(self, directory: str):
        self.directory = directory
        self.enabled = True
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as exc:
            warnings.warn(f"cache directory unusable ({exc}); falling back to memory")
            self.enabled = False

    def _path(self, sys: FusionSystem, a: IrrLabel, b: IrrLabel) -> str:
        key = json.dumps([sys.fingerprint(), format_label(sys, a), format_label(sys, b)])
        digest = hashlib.sha256(key.encode()).hexdigest()
        return os.path.join(self.directory, digest[:2], digest + ".json")

    def lookup(self, sys: FusionSystem, a: IrrLabel, b: IrrLabel) -> FusionElement | None:
        if not self.enabled:
            return None
        path = self._path(sys, a, b)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            from .families import element_from_json
            return element_from_json(sys, data)
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError, FusionError):
            return None  # corrupt or stale entry: recompute

    def store(self, sys: FusionSystem, a: IrrLabel, b: IrrLabel,
              value: FusionElement) -> None:
        if not self.enabled:
            return
        path = self._path(sys, a, b)
        try:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(element_to_json(sys, value), fh)
            os.replace(tmp, path)
        except OSError as exc:
            warnings.warn(f"cache write failed ({exc}); continuing without disk cache")
            self.enabled = False


def cache_lookup(cache: DiskCache, sys: FusionSystem, a: IrrLabel,
                 b: IrrLabel) -> FusionElement | None:
    return cache.lookup(sys, a, b)


def cache_store(cache: DiskCache, sys: FusionSystem, a: IrrLabel, b: IrrLabel,
                value: FusionElement) -> None:
    cache.store(sys, a, b, value)


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class ParamsConfig:
    generators: list[str]
    fundamental_list: params.ParamList | None
    values: dict[str, float]


@dataclass(slots=True)
class FamilyConfig:
    system: FusionSystem
    params: ParamsConfig | None
    cache_dir: str | None
    raw: dict


def load_family_config(path: str) -> FamilyConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"config {path!r} is not valid JSON: {exc}") from exc
    try:
        system = system_from_config(raw)
    except FusionError as exc:
        raise ConfigError(str(exc)) from exc
    pcfg = None
    if "params" in raw:
        block = raw["params"]
        if not isinstance(block, dict):
            raise ConfigError("'params' must be a mapping")
        unknown = set(block) - {"generators", "fundamental_list", "values"}
        if unknown:
            raise ConfigError(f"unknown params keys: {sorted(unknown)}")
        gens = block.get("generators", [])
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise ConfigError("'generators' must be a list of names")
        fund = None
        if "fundamental_list" in block:
            entries = block["fundamental_list"]
            if not isinstance(entries, list):
                raise ConfigError("'fundamental_list' must be a list of parameter strings")
            try:
                fund = params.ParamList.parse(entries)
            except FusionError as exc:
                raise ConfigError(str(exc)) from exc
        values = {}
        for name, val in block.get("values", {}).items():
            if isinstance(val, str):
                from fractions import Fraction
                values[name] = Fraction(val)
            elif isinstance(val, (int, float)):
                values[name] = val
            else:
                raise ConfigError(f"bad numeric value for {name!r}: {val!r}")
        pcfg = ParamsConfig(generators=gens, fundamental_list=fund, values=values)
    cache_dir = raw.get("cache_dir")
    if cache_dir is not None and not isinstance(cache_dir, str):
        raise ConfigError("'cache_dir' must be a string")
    return FamilyConfig(system=system, params=pcfg, cache_dir=cache_dir, raw=raw)


def _resolve_cache(args, cfg: FamilyConfig) -> DiskCache | None:
    directory = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV_VAR) \
        or cfg.cache_dir
    if directory:
        cache = DiskCache(directory)
        cfg.system.attach_disk_cache(cache)
        return cache
    return None


# ---------------------------------------------------------------------------
# envelope
# ---------------------------------------------------------------------------

def make_envelope(command: str, inputs: dict, outputs, exact: bool = True,
                  elapsed_ms: float | None = None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "exact": exact,
        "engine_version": __version__,
        "elapsed_ms": elapsed_ms,
    }


def emit(envelope: dict) -> None:
    print(json.dumps(envelope, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_decompose(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    x = parse_element(sys_, args.x)
    y = parse_element(sys_, args.y)
    product = sys_.tensor(x, y)
    outputs = {format_label(sys_, lab): str(m) for lab, m in sys_.sorted_items(product)}
    return make_envelope("decompose", {"family": args.family, "x": args.x, "y": args.y},
                         outputs)


def _cmd_moments(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    u = parse_element(sys_, args.u)
    reports: list[dict] = []
    if args.word is not None:
        w = characters.StarWord.from_string(args.word)
        reports.append({"word": str(w), "value": str(characters.moment(sys_, u, w))})
    else:
        if args.k is None:
            raise ConfigError("moments needs --word or --k")
        if args.k < 1:
            raise ConfigError("--k must be >= 1")
        lengths = range(2, 2 * args.k + 1, 2) if args.even else range(1, args.k + 1)
        seq = characters.moment_sequence(sys_, u, max(lengths))
        for l in lengths:
            word = characters.StarWord.plain(l)
            reports.append({"word": str(word), "value": str(seq[l - 1])})
    if args.jsonl:
        for rep in reports:
            print(json.dumps(rep, sort_keys=True))
    inputs = {"family": args.family, "u": args.u, "word": args.word,
              "k": args.k, "even": args.even}
    return make_envelope("moments", inputs, reports)


def _cmd_distance(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    v = parse_element(sys_, args.v)
    a = parse_label(sys_, args.a)
    b = parse_label(sys_, args.b)
    d = geometry.distance(sys_, v, a, b, budget=args.budget)
    inputs = {"family": args.family, "v": args.v, "a": args.a, "b": args.b,
              "budget": args.budget}
    return make_envelope("distance", inputs, {"distance": d})


def _cmd_ball(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    v = parse_element(sys_, args.v)
    center = parse_label(sys_, args.center)
    labels = geometry.ball(sys_, v, center, args.r)
    out = sorted(format_label(sys_, lab) for lab in labels)
    inputs = {"family": args.family, "v": args.v, "center": args.center, "r": args.r}
    return make_envelope("ball", inputs, {"size": len(out), "labels": out})


def _cmd_growth(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    v = parse_element(sys_, args.v)
    center = parse_label(sys_, args.center)
    rows = geometry.growth_table(sys_, v, center, args.rmax)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("radius,ball_size\n")
            for r, size in rows:
                fh.write(f"{r},{size}\n")
    inputs = {"family": args.family, "v": args.v, "center": args.center,
              "rmax": args.rmax, "csv": args.csv}
    return make_envelope("growth", inputs, [{"radius": r, "ball_size": s} for r, s in rows])


def _cmd_amenable(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    u = parse_element(sys_, args.u) if args.u else None
    report = amenability.amenability_verdict(sys_, u, K=args.depth, tol=args.tol,
                                             method=args.method)
    inputs = {"family": args.family, "u": args.u, "depth": args.depth,
              "tol": args.tol, "method": args.method}
    return make_envelope("amenable", inputs, report.to_json(), exact=False)


def _cmd_list_invariant(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    if cfg.params is None or cfg.params.fundamental_list is None:
        raise ConfigError("list-invariant needs a params block with a fundamental_list")
    lists = params.derive_irreducible_lists(sys_, cfg.params.fundamental_list, args.depth)
    outputs = {format_label(sys_, lab): [str(p) for p in plist.entries()]
               for lab, plist in sorted(lists.items(), key=lambda it: sys_.sort_key(it[0]))}
    inputs = {"family": args.family, "depth": args.depth}
    return make_envelope("list-invariant", inputs, outputs)


def _cmd_modular_spectrum(args) -> dict:
    cfg = load_family_config(args.family)
    if args.list:
        plist = params.ParamList.parse(args.list.split(","))
    else:
        if cfg.params is None or cfg.params.fundamental_list is None:
            raise ConfigError("modular-spectrum needs --list or a config fundamental_list")
        plist = cfg.params.fundamental_list
    lattice = params.modular_spectrum(plist)
    outputs = lattice.describe()
    if args.member:
        outputs["membership"] = {
            text: params.lattice_membership(lattice, params.Param.parse(text))
            for text in args.member.split(",")
        }
    inputs = {"family": args.family, "list": args.list, "member": args.member}
    return make_envelope("modular-spectrum", inputs, outputs)


def _cmd_graph(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    u = parse_element(sys_, args.u)
    diagram = towers.tower(sys_, u, args.depth)
    graph = towers.principal_graph(diagram)
    if cfg.params is not None and cfg.params.fundamental_list is not None:
        lists = params.derive_irreducible_lists(sys_, cfg.params.fundamental_list,
                                                args.depth + 1, fund=None)
        towers.attach_qdim_weights(graph, lists, cfg.params.values or None)
    dot = towers.export_dot(graph)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    outputs = {
        "vertices": [{"label": format_label(sys_, lab), "level": lev}
                     for lab, lev in graph.vertices],
        "edges": [{"a": format_label(sys_, a), "b": format_label(sys_, b), "mult": str(m)}
                  for a, b, m in graph.edges],
        "end_dims": [str(d) for d in diagram.end_dims()],
        "dot_file": args.dot,
    }
    inputs = {"family": args.family, "u": args.u, "depth": args.depth}
    return make_envelope("graph", inputs, outputs)


def _parse_irrset(sys_, spec) -> object:
    if isinstance(spec, list):
        if isinstance(sys_, GroupDualSystem):
            return powers.WordSet.finite(sys_, [parse_label(sys_, t) for t in spec])
        return powers.FiniteIrrSet(sys_, frozenset(parse_label(sys_, t) for t in spec))
    if not isinstance(spec, dict):
        raise ConfigError(f"bad set descriptor: {spec!r}")
    kind = spec.get("type")
    if kind == "finite":
        return _parse_irrset(sys_, spec.get("labels", []))
    if kind == "cylinder":
        if not isinstance(sys_, GroupDualSystem):
            raise ConfigError("cylinder sets need a group-dual family")
        unknown = set(spec) - {"type", "prefixes", "except", "include"}
        if unknown:
            raise ConfigError(f"unknown set descriptor keys: {sorted(unknown)}")
        return powers.WordSet.make(
            sys_,
            cylinders=[parse_label(sys_, t).payload for t in spec.get("prefixes", [])],
            includes=[parse_label(sys_, t).payload for t in spec.get("include", [])],
            excludes=[parse_label(sys_, t).payload for t in spec.get("except", [])])
    raise ConfigError(f"unknown set type {kind!r}")


def _cmd_powers_check(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    try:
        with open(args.witness, "r", encoding="utf-8") as fh:
            wdata = json.load(fh)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read witness {args.witness!r}: {exc}") from exc
    needed = {"F", "D", "E", "r"}
    if not isinstance(wdata, dict) or not needed.issubset(wdata):
        raise ConfigError(f"witness file must define keys {sorted(needed)}")
    r = [parse_label(sys_, t) for t in wdata["r"]]
    if len(r) != 3:
        raise ConfigError("witness needs exactly three r labels")
    witness = powers.PowersWitness(
        F=[parse_label(sys_, t) for t in wdata["F"]],
        D=_parse_irrset(sys_, wdata["D"]),
        E=_parse_irrset(sys_, wdata["E"]),
        r1=r[0], r2=r[1], r3=r[2],
        truncation_radius=wdata.get("truncation_radius"))
    verdict = powers.check_witness(sys_, witness)
    inputs = {"family": args.family, "witness": args.witness}
    outputs = {"holds": verdict.holds, "exact": verdict.exact, "detail": verdict.detail}
    return make_envelope("powers-check", inputs, outputs, exact=verdict.exact)


def _cmd_powers_search(args) -> dict:
    cfg = load_family_config(args.family)
    _resolve_cache(args, cfg)
    sys_ = cfg.system
    F = [parse_label(sys_, t.strip()) for t in args.f.split(",") if t.strip()]
    witness = powers.search_witness(sys_, F, budget=args.budget)
    inputs = {"family": args.family, "f": args.f, "budget": args.budget}
    if witness is None:
        return make_envelope("powers-search", inputs,
                             {"found": False,
                              "note": "bounded search exhausted; proves nothing"})
    def describe(S):
        return {
            "type": "cylinder",
            "prefixes": sorted(format_label(sys_, sys_.word(p)) for p in S.cylinders),
            "include": sorted(format_label(sys_, sys_.word(w)) for w in S.includes),
            "except": sorted(format_label(sys_, sys_.word(w)) for w in S.excludes),
        }
    outputs = {
        "found": True,
        "F": [format_label(sys_, lab) for lab in witness.F],
        "D": describe(witness.D),
        "E": describe(witness.E),
        "r": [format_label(sys_, lab) for lab in witness.r_labels()],
    }
    return make_envelope("powers-search", inputs, outputs)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionkit",
        description="Exact fusion-semiring computations for compact quantum groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_cmd(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--family", required=True, help="family config JSON path")
        p.add_argument("--cache-dir", default=None,
                       help=f"pair-product cache directory (or ${CACHE_ENV_VAR})")
        p.set_defaults(fn=fn)
        return p

    p = family_cmd("decompose", _cmd_decompose, help="tensor product decomposition")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = family_cmd("moments", _cmd_moments, help="character star-moments")
    p.add_argument("--u", required=True)
    p.add_argument("--word", default=None, help='star word, e.g. "XX*XX*"')
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--even", action="store_true", help="even word lengths 2..2k")
    p.add_argument("--jsonl", action="store_true", help="also print one JSON line per moment")

    p = family_cmd("distance", _cmd_distance, help="generator metric between irreducibles")
    p.add_argument("--v", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--budget", type=int, default=64)

    p = family_cmd("ball", _cmd_ball, help="metric ball contents")
    p.add_argument("--v", required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--r", type=int, required=True)

    p = family_cmd("growth", _cmd_growth, help="ball growth table (CSV)")
    p.add_argument("--v", required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--csv", default=None)

    p = family_cmd("amenable", _cmd_amenable, help="Kesten-type amenability estimate")
    p.add_argument("--u", default=None, help="generator element (default: fundamental)")
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--method", default="extrapolated-ratio",
                   choices=["root", "ratio", "extrapolated-ratio"])

    p = family_cmd("list-invariant", _cmd_list_invariant,
                   help="derive parameter lists of irreducibles")
    p.add_argument("--depth", type=int, default=6)

    p = family_cmd("modular-spectrum", _cmd_modular_spectrum,
                   help="exponent lattice generated by the squared list products")
    p.add_argument("--list", default=None, help='comma-separated parameters, e.g. "2^1/2,2^-1/2"')
    p.add_argument("--member", default=None, help="comma-separated membership queries")

    p = family_cmd("graph", _cmd_graph, help="tower and principal graph (DOT export)")
    p.add_argument("--u", required=True)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--dot", default=None)

    p = family_cmd("powers-check", _cmd_powers_check, help="check a paradoxicality witness")
    p.add_argument("--witness", required=True, help="witness JSON path")

    p = family_cmd("powers-search", _cmd_powers_search,
                   help="bounded search for a paradoxicality witness")
    p.add_argument("--f", required=True, help="comma-separated F labels")
    p.add_argument("--budget", type=int, default=2)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        envelope = args.fn(args)
    except ConfigError as exc:
        emit(make_envelope(args.command, {}, {"error": str(exc), "kind": "config"}))
        return 2
    except FusionError as exc:
        emit(make_envelope(args.command, {}, {"error": str(exc), "kind": "computation"}))
        return 1
    envelope["elapsed_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    emit(envelope)
    return 0


def main() -> None:
    _sys.exit(run())


if __name__ == "__main__":
    main()
