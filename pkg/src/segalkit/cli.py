"""Command-line driver: build objects, run checks, print Hall tables, serialize to JSON.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import gf
from .delta_combinatorics import OverOneObject
from .fin_groupoid import FinGroupoid, GroupoidFunctor, TableGroupoid
from .fin_groupoid import validate as validate_groupoid
from .segal_checks import (
    CheckReport,
    is_1_segal,
    is_2_segal,
    is_active_equifibered,
    is_decomposition_space,
    is_relative_2_segal_family,
    is_relative_2_segal_morphism,
    is_relative_segal,
)
from .simplicial_objects import (
    KINDS,
    LEQ,
    OVER,
    SIMPLEX,
    FunctionalSimplicial,
    IndexShape,
    InsufficientDepth,
    SimplicialMorphism,
    TruncatedSimplicialGroupoid,
    forget_to_simplex,
    restrict_shape,
    theta_L_inverse,
)
from .simplicial_objects import validate as validate_simplicial

WORKERS_ENV = "SEGALKIT_WORKERS"
FORMATS = ("text", "json", "csv")


class InputError(ValueError):
    """Malformed input; the message starts with the location of the problem."""


@dataclass
class RunConfig:
    command: str
    q: int = 2
    dmax: int = 2
    levels: int | None = None
    seed: int = 0
    format: str = "text"
    parallelism: int = 1
    output: str | None = None
    input: str | None = None
    builtin: str | None = None
    check: str = "2-segal"
    bound: int | None = None
    size: int = 200
    module: str = "hermitian"
    orientation: str = "quotient-first"
    sub: str | None = None

    def __post_init__(self) -> None:
        if not gf.is_prime(self.q):
            raise InputError(f"--q: {self.q} is not prime")
        if self.levels is not None and self.levels < 1:
            raise InputError("--levels: must be at least 1")
        if self.dmax < 1:
            raise InputError("--dmax: must be at least 1")
        if self.format not in FORMATS:
            raise InputError(f"--format: expected one of {', '.join(FORMATS)}")


# -- serialization ------------------------------------------------------------------------------


def _label(x) -> str:
    return x if isinstance(x, str) else repr(x)


def _plain(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return repr(v)


def key_to_str(key) -> str:
    return f"{key.n}:{key.t}" if isinstance(key, OverOneObject) else str(key)


def key_from_str(s: str, kind: str, where: str):
    try:
        if kind == SIMPLEX:
            return int(s)
        n, t = s.split(":")
        return OverOneObject(int(n), int(t))
    except ValueError:
        raise InputError(f"{where}: bad level key {s!r} for shape {kind}") from None


def _morphisms(G: FinGroupoid) -> list:
    out = []
    for comp in G.components().members:
        for a in comp:
            for b in comp:
                out.extend(G.hom(a, b))
    return out


def groupoid_to_json(G: FinGroupoid) -> tuple[dict, dict, dict]:
    """The groupoid as JSON plus the object and morphism id tables."""
    oid = {x: _label(x) for x in G.objects()}
    if len(set(oid.values())) != len(oid):
        oid = {x: f"o{i}" for i, x in enumerate(G.objects())}
    mors = _morphisms(G)
    mid = {m: f"m{i}" for i, m in enumerate(mors)}
    by_src: dict = {}
    for m in mors:
        by_src.setdefault(G.src(m), []).append(m)
    compose = []
    for f in mors:
        for g in by_src.get(G.dst(f), ()):
            compose.append([mid[g], mid[f], mid[G.compose(g, f)]])
    data = {
        "objects": [oid[x] for x in G.objects()],
        "morphisms": [{"id": mid[m], "src": oid[G.src(m)], "dst": oid[G.dst(m)], "data": _plain(m)} for m in mors],
        "compose": compose,
    }
    return data, oid, mid


def simplicial_to_json(X: TruncatedSimplicialGroupoid) -> dict:
    levels, ids = {}, {}
    for key in X.keys():
        data, oid, mid = groupoid_to_json(X.level(key))
        levels[key_to_str(key)] = data
        ids[key] = (oid, mid)
    gens = {}
    for key in X.keys():
        for kind, i, k2 in X.shape.generators_out(key):
            F = X.generator(kind, key, i)
            oid, mid = ids[key]
            oid2, mid2 = ids[k2]
            gens[f"{kind}:{key_to_str(key)}:{i}"] = {
                "source": key_to_str(key),
                "target": key_to_str(k2),
                "objects": {oid[x]: oid2[F.obj(x)] for x in oid},
                "morphisms": {mid[m]: mid2[F.mor(m)] for m in mid},
            }
    return {"name": X.name, "shape": X.shape.kind, "truncation": X.N, "levels": levels, "generators": gens}


def _need(d: dict, field: str, where: str, typ=None):
    if not isinstance(d, dict) or field not in d:
        raise InputError(f"{where}: missing field {field!r}")
    v = d[field]
    if typ is not None and not isinstance(v, typ):
        raise InputError(f"{where}.{field}: expected {typ.__name__}")
    return v


def groupoid_from_json(d: dict, where: str = "groupoid") -> TableGroupoid:
    objects = _need(d, "objects", where, list)
    obj_set = set(objects)
    mors: dict = {}
    for k, m in enumerate(_need(d, "morphisms", where, list)):
        w = f"{where}.morphisms[{k}]"
        i, s, t = _need(m, "id", w), _need(m, "src", w), _need(m, "dst", w)
        if s not in obj_set or t not in obj_set:
            raise InputError(f"{w}: endpoint is not a listed object")
        mors[i] = (s, t)
    table = {}
    for k, row in enumerate(_need(d, "compose", where, list)):
        if not (isinstance(row, list) and len(row) == 3 and all(r in mors for r in row)):
            raise InputError(f"{where}.compose[{k}]: expected three known morphism ids")
        table[(row[0], row[1])] = row[2]
    G = TableGroupoid(objects, mors, table)
    rep = validate_groupoid(G)
    if not rep.ok:
        raise InputError(f"{where}: not a groupoid ({rep.violations[0]})")
    return G


def simplicial_from_json(d: dict, where: str = "$") -> FunctionalSimplicial:
    kind = _need(d, "shape", where, str)
    if kind not in KINDS:
        raise InputError(f"{where}.shape: unknown shape {kind!r}")
    N = _need(d, "truncation", where, int)
    shape = IndexShape(kind, N)
    raw_levels = _need(d, "levels", where, dict)
    levels = {}
    for key in shape.keys():
        s = key_to_str(key)
        if s not in raw_levels:
            raise InputError(f"{where}.levels: missing level {s}")
        levels[key] = groupoid_from_json(raw_levels[s], f"{where}.levels[{s}]")
    for s in raw_levels:
        if key_from_str(s, kind, f"{where}.levels") not in levels:
            raise InputError(f"{where}.levels[{s}]: level outside the {kind} shape truncated at {N}")
    raw_gens = _need(d, "generators", where, dict)
    gens = {}
    for key in shape.keys():
        for gk, i, k2 in shape.generators_out(key):
            s = f"{gk}:{key_to_str(key)}:{i}"
            w = f"{where}.generators[{s}]"
            if s not in raw_gens:
                raise InputError(f"{w}: missing")
            om, mm = _need(raw_gens[s], "objects", w, dict), _need(raw_gens[s], "morphisms", w, dict)
            G, H = levels[key], levels[k2]
            for x in G.objects():
                if not H.contains(om.get(x)):
                    raise InputError(f"{w}.objects: {x!r} has no image in level {key_to_str(k2)}")
            for m in G.morphisms():
                if mm.get(m) is None:
                    raise InputError(f"{w}.morphisms: {m!r} has no image")
            gens[(gk, key, i)] = GroupoidFunctor(G, H, om.__getitem__, mm.__getitem__, s)
    X = FunctionalSimplicial(
        shape,
        levels.__getitem__,
        lambda key, i: gens[("d", key, i)],
        lambda key, i: gens[("s", key, i)],
        _need(d, "name", where, str) if "name" in d else "loaded",
    )
    rep = validate_simplicial(X)
    if not rep.ok:
        raise InputError(f"{where}: simplicial identities fail ({rep.violations[0]!r})")
    return X


def load_simplicial(path: str) -> FunctionalSimplicial:
    try:
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return simplicial_from_json(d, path)


# -- built-in objects -------------------------------------------------------------------------------


def _sub_dims(cfg: RunConfig) -> list[int]:
    if cfg.sub is None:
        return list(range(cfg.dmax))
    try:
        return [int(x) for x in cfg.sub.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--sub: expected comma separated dimensions, got {cfg.sub!r}") from None


def build_s(cfg: RunConfig, levels: int):
    from .waldhausen import FqVect, build_S

    return build_S(FqVect(cfg.q, cfg.dmax), levels)


def build_rel(cfg: RunConfig, levels: int):
    """``(S^rel, iota, pi)`` for the inclusion of the ``--sub`` dimensions."""
    from .waldhausen import FqVect, build_S, build_S_rel

    D = FqVect(cfg.q, cfg.dmax)
    SD = build_S(D, levels + 1)
    SC = build_S(D.sub(_sub_dims(cfg)), levels + 1)
    return build_S_rel(SC, SD, levels)


def build_r(cfg: RunConfig, levels: int):
    from .hermitian import build_R

    return build_R(build_s(cfg, 2 * levels + 1), levels)


def hermitian_module(cfg: RunConfig, levels: int):
    """The left relative object glued from ``R -> S``; its level ``n`` needs ``S`` to ``2n - 1``."""
    from .hermitian import project_R_to_S

    R = build_r(cfg, max(levels - 1, 0))
    return theta_L_inverse(project_R_to_S(R))


def regular_module(cfg: RunConfig, levels: int):
    return restrict_shape(forget_to_simplex(build_s(cfg, levels), OVER), LEQ)


def builtin_object(name: str, cfg: RunConfig, levels: int):
    """A simplicial object or morphism by name."""
    from .hermitian import project_R_to_S, tw_to_product
    from .waldhausen import FqVect, build_S, induced_map_S

    if name == "s":
        return build_s(cfg, levels)
    if name == "s-rel":
        return build_rel(cfg, levels)[0]
    if name == "r":
        return build_r(cfg, levels)
    if name == "hermitian-module":
        return hermitian_module(cfg, levels)
    if name == "regular-module":
        return regular_module(cfg, levels)
    if name == "pi":
        return build_rel(cfg, levels)[2]
    if name == "iota":
        return build_rel(cfg, levels)[1]
    if name == "s-f":
        D = FqVect(cfg.q, cfg.dmax)
        return induced_map_S(build_S(D.sub(_sub_dims(cfg)), levels), build_S(D, levels))
    if name == "r-to-s":
        return project_R_to_S(build_r(cfg, levels))
    if name == "tw-to-product":
        return tw_to_product(build_s(cfg, 2 * levels + 1), levels)
    raise InputError(f"--builtin: unknown object {name!r}")


BUILTINS = ("s", "s-rel", "r", "hermitian-module", "regular-module", "pi", "iota", "s-f", "r-to-s", "tw-to-product")
CHECKS = ("1-segal", "2-segal", "decomposition", "relative-2-segal", "active-equifibered", "relative-segal")


def run_check(obj, check: str, levels: int | None) -> CheckReport:
    if isinstance(obj, SimplicialMorphism):
        if check == "relative-2-segal":
            return is_relative_2_segal_morphism(obj, levels)
        if check == "active-equifibered":
            return is_active_equifibered(obj, levels)
        if check == "relative-segal":
            return is_relative_segal(obj, levels)
        raise InputError(f"--check: {check} applies to simplicial objects, not morphisms")
    if check in ("active-equifibered", "relative-segal"):
        raise InputError(f"--check: {check} applies to morphisms")
    if obj.shape.kind != SIMPLEX:
        if check not in ("relative-2-segal", "decomposition", "2-segal"):
            raise InputError(f"--check: {check} needs a simplicial object, got shape {obj.shape.kind}")
        if check == "decomposition":
            return is_decomposition_space(obj, levels)
        return is_relative_2_segal_family(obj, levels)
    if check == "1-segal":
        return is_1_segal(obj, levels)
    if check == "2-segal":
        return is_2_segal(obj, levels)
    if check == "decomposition":
        return is_decomposition_space(obj, levels)
    raise InputError(f"--check: {check} needs a relative object or a morphism")


# -- output -----------------------------------------------------------------------------------------


def report_text(rep: CheckReport) -> str:
    head = f"{rep.name}: {'pass' if rep.passed else 'FAIL'} ({rep.instances} instances)"
    lines = [head]
    for f in rep.failures:
        d = f.as_dict()
        idx = " ".join(f"{k}={v}" for k, v in d.items() if k not in ("condition", "witness"))
        lines.append(f"  {f.condition} {idx} witness={d['witness']}")
    return "\n".join(lines) + "\n"


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def rows_out(rows: list[tuple], header: Sequence[str], cfg: RunConfig) -> str:
    from .hall import to_csv, to_json

    if cfg.format == "csv":
        return to_csv(rows, header)
    if cfg.format == "json":
        return to_json(rows, header) + "\n"
    widths = [max(len(str(h)), *(len(str(r[k])) for r in rows)) if rows else len(h) for k, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- subcommands ------------------------------------------------------------------------------------


def cmd_check_segal(cfg: RunConfig) -> int:
    if cfg.input:
        obj = load_simplicial(cfg.input)
    elif cfg.builtin:
        obj = builtin_object(cfg.builtin, cfg, cfg.levels or 3)
    else:
        raise InputError("check-segal: give --input FILE or --builtin NAME")
    rep = run_check(obj, cfg.check, cfg.levels)
    emit(dump_json(rep.as_dict()) if cfg.format == "json" else report_text(rep), cfg)
    return 0 if rep.passed else 1


def _cmd_build(builder):
    def run(cfg: RunConfig) -> int:
        X = builder(cfg, cfg.levels or 3)
        data = simplicial_to_json(X)
        simplicial_from_json(json.loads(json.dumps(data)), X.name)
        emit(dump_json(data), cfg)
        return 0

    return run


def cmd_span_check(cfg: RunConfig) -> int:
    from .corpus import span_suite
    from .spans import is_2_segal_span

    N = cfg.levels or 3
    rows, ok = [], True
    for sp in span_suite(cfg.q, cfg.dmax, N):
        rep = is_2_segal_span(sp, N)
        ok &= rep.passed
        rows.append((sp.name, "pass" if rep.passed else "FAIL", rep.instances))
    emit(rows_out(rows, ("span", "result", "instances"), cfg), cfg)
    return 0 if ok else 1


def cmd_compose_spans(cfg: RunConfig) -> int:
    from .corpus import composable_pairs, span_suite
    from .spans import compose_spans, is_2_segal_span

    N = cfg.levels or 3
    rows, ok = [], True
    for a, b in composable_pairs(span_suite(cfg.q, cfg.dmax, N)):
        rep = is_2_segal_span(compose_spans(a, b), N)
        ok &= rep.passed
        rows.append((a.name, b.name, "pass" if rep.passed else "FAIL", rep.instances))
    emit(rows_out(rows, ("first", "second", "result", "instances"), cfg), cfg)
    return 0 if ok else 1


def cmd_hall_table(cfg: RunConfig) -> int:
    from .hall import structure_constants, table_rows

    X = build_s(cfg, 2)
    rows = table_rows(structure_constants(X, cfg.orientation))
    emit(rows_out(rows, ("a", "b", "c", "numerator", "denominator"), cfg), cfg)
    return 0


def form_label(x) -> str:
    """``[d]`` plus the Gram matrix of a hermitian module class; plain ``[d]`` for an algebra class."""
    from .hall import dimension_label

    if isinstance(x[0], int):
        return dimension_label(x)
    (d, _), (u, _) = x
    return f"[{d}]" + ("" if not u else "<" + ";".join("".join(map(str, row)) for row in u) + ">")


def module_rows(M, cfg: RunConfig) -> list[tuple]:
    from .hall import dimension_label, hall_module_action, left_action_span

    span = left_action_span(M)
    label_m = form_label if cfg.module == "hermitian" else dimension_label
    rows = []
    for a in span.left.target.components().reps:
        for m in span.right.target.components().reps:
            for c, v in hall_module_action(M, a, m).items():
                rows.append((dimension_label(a), label_m(m), label_m(c), v.numerator, v.denominator))
    return sorted(rows)


def _module(cfg: RunConfig):
    if cfg.module == "hermitian":
        return hermitian_module(cfg, cfg.levels or 2)
    if cfg.module == "regular":
        return regular_module(cfg, cfg.levels or 2)
    raise InputError(f"--module: expected hermitian or regular, got {cfg.module!r}")


def cmd_module_table(cfg: RunConfig) -> int:
    rows = module_rows(_module(cfg), cfg)
    emit(rows_out(rows, ("algebra", "module", "result", "numerator", "denominator"), cfg), cfg)
    return 0


def cmd_verify_laws(cfg: RunConfig) -> int:
    from .hall import dimension_label, verify_associativity, verify_module_law

    bound = cfg.bound if cfg.bound is not None else cfg.dmax
    S = build_s(cfg, 3)
    dim = lambda x: x[0]  # noqa: E731
    reports = [("associativity", verify_associativity(S, dim, bound, cfg.orientation), dimension_label)]
    M = _module(RunConfig(**{**cfg.__dict__, "levels": 3}))
    if cfg.module == "hermitian":
        mod = verify_module_law(M, dim, lambda m: m[0][0], bound, weight=2)
        reports.append(("hermitian module", mod, form_label))
    else:
        reports.append(("regular module", verify_module_law(M, dim, dim, bound), dimension_label))
    ok = all(r.passed for _, r, _ in reports)
    if cfg.format == "json":
        emit(dump_json([r.as_dict(lab) | {"name": n} for n, r, lab in reports]), cfg)
    else:
        rows = [(n, "pass" if r.passed else "FAIL", r.checked, len(r.out_of_bound)) for n, r, _ in reports]
        emit(rows_out(rows, ("law", "result", "checked", "out_of_bound"), cfg), cfg)
    return 0 if ok else 1


def cmd_localize_demo(cfg: RunConfig) -> int:
    from .delta_combinatorics import check_functoriality, verify_initial_objects

    bound = cfg.bound if cfg.bound is not None else 4
    rep = verify_initial_objects(bound, workers=cfg.parallelism)
    checked, bad = check_functoriality(min(bound, 2), seed=cfg.seed)
    ok = rep.passed and not bad
    if cfg.format == "json":
        emit(
            dump_json(
                {
                    "bound": bound,
                    "objects": rep.objects,
                    "fiber_objects": rep.fiber_objects,
                    "e_morphisms": rep.e_morphisms,
                    "cases": {str(k): v for k, v in sorted(rep.cases.items())},
                    "failures": [_plain(f) for f in rep.failures],
                    "functoriality_checked": checked,
                    "functoriality_failures": [_plain(f) for f in bad],
                    "passed": ok,
                }
            ),
            cfg,
        )
    else:
        lines = [
            f"objects of total size <= {bound}: {rep.objects}",
            f"fiber objects enumerated: {rep.fiber_objects}",
            f"E-morphisms collapsed: {rep.e_morphisms}",
            "support cases: " + ", ".join(f"{k}={v}" for k, v in sorted(rep.cases.items())),
            f"functoriality composites checked: {checked}",
        ]
        lines += [f"failure: {_plain(f)}" for f in rep.failures + bad]
        lines.append("all initial objects verified" if ok else "verification FAILED")
        emit("\n".join(lines) + "\n", cfg)
    return 0 if ok else 1


def _agreement(args: tuple[int, int, int]) -> tuple:
    from .corpus import corpus_item

    seed, index, N = args
    it = corpus_item(seed, index, N)
    return index, it.name, it.origin, is_2_segal(it.obj, N).passed, is_decomposition_space(it.obj, N).passed


def cmd_corpus(cfg: RunConfig) -> int:
    N = cfg.levels or 4
    jobs = [(cfg.seed, k, N) for k in range(cfg.size)]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            results = list(pool.map(_agreement, jobs, chunksize=4))
    else:
        results = [_agreement(j) for j in jobs]
    results.sort()
    rows = [(i, name, origin, a, b, "agree" if a == b else "DISAGREE") for i, name, origin, a, b in results]
    agree = sum(r[3] == r[4] for r in results)
    if cfg.format == "text":
        lines = [f"{i:4d} {origin:9s} 2-segal={a!s:5} decomposition={b!s:5} {tag}  {name}" for i, name, origin, a, b, tag in rows]
        lines.append(f"agreement {agree}/{len(results)}")
        emit("\n".join(lines) + "\n", cfg)
    else:
        emit(rows_out(rows, ("index", "name", "origin", "two_segal", "decomposition", "verdict"), cfg), cfg)
    return 0 if agree == len(results) else 1


COMMANDS = {
    "check-segal": cmd_check_segal,
    "build-s": _cmd_build(build_s),
    "build-rel": _cmd_build(lambda cfg, n: build_rel(cfg, n)[0]),
    "build-r": _cmd_build(build_r),
    "span-check": cmd_span_check,
    "compose-spans": cmd_compose_spans,
    "hall-table": cmd_hall_table,
    "module-table": cmd_module_table,
    "verify-laws": cmd_verify_laws,
    "localize-demo": cmd_localize_demo,
    "corpus": cmd_corpus,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="prime field size")
    common.add_argument("--dmax", type=int, default=2, help="largest vector space dimension")
    common.add_argument("--levels", type=int, default=None, help="truncation level to build or check")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--output", default=None, help="write here instead of stdout")
    common.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p = argparse.ArgumentParser(prog="segalkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "check-segal":
            sp.add_argument("--input", help="serialized simplicial groupoid (JSON)")
            sp.add_argument("--builtin", choices=BUILTINS)
            sp.add_argument("--check", choices=CHECKS, default="2-segal")
        if name in ("check-segal", "build-rel", "module-table", "verify-laws"):
            sp.add_argument("--sub", default=None, help="dimensions of the subcategory, e.g. 0,1")
        if name in ("module-table", "verify-laws"):
            sp.add_argument("--module", choices=("hermitian", "regular"), default="hermitian")
        if name in ("hall-table", "verify-laws"):
            sp.add_argument("--orientation", choices=("quotient-first", "sub-first"), default="quotient-first")
        if name in ("verify-laws", "localize-demo"):
            sp.add_argument("--bound", type=int, default=None)
        if name == "corpus":
            sp.add_argument("--size", type=int, default=200)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    workers = ns.workers if ns.workers is not None else int(os.environ.get(WORKERS_ENV, "1") or 1)
    fmt = ns.format or ("csv" if ns.command == "hall-table" else "text")
    extra = {k: getattr(ns, k) for k in ("input", "builtin", "check", "bound", "size", "module", "orientation", "sub") if hasattr(ns, k)}
    return RunConfig(
        command=ns.command,
        q=ns.q,
        dmax=ns.dmax,
        levels=ns.levels,
        seed=ns.seed,
        format=fmt,
        parallelism=max(1, workers),
        output=ns.output,
        **extra,
    )


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    ns = make_parser().parse_args(argv)
    try:
        return run(config_from_args(ns))
    except (InputError, InsufficientDepth) as exc:
        sys.stderr.write(f"segalkit {ns.command}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
