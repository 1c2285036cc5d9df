"""Command-line surface: analyze instances, export graphs, localize, run the corpus.

Instance specs are strict JSON: {"ring": [n1, ...], "module": [{"d": d, "c": c},
...]} with optional {"options": ...}; unknown fields are rejected and factor
validation reports every offending entry.  All outputs are deterministic byte
for byte for a given input and package version.

Exit codes: 0 ok, 2 theorem violation, 3 resource cap hit (or corpus skips,
unless --skips-ok), 64 usage or spec errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, aggraph, finmod, theorems
from .errors import (
    AgmodError,
    DomainError,
    ResourceLimitError,
    SpecError,
    StructuralError,
)
from .finmod import Module
from .finring import Ring
from .localization import (
    check_product_decomposition,
    localize,
    min_prime_complement,
    mult_closure,
)

_OPTION_KEYS = {"localize_at_min_primes", "localize_gens"}


def parse_instance(obj) -> tuple[Module, dict]:
    """Validate a spec object into a module plus normalized options."""
    if not isinstance(obj, dict):
        raise SpecError("instance spec must be a JSON object")
    unknown = sorted(set(obj) - {"ring", "module", "options"})
    if unknown:
        raise SpecError(f"unknown spec fields: {unknown}", unknown)
    if "ring" not in obj or "module" not in obj:
        raise SpecError("spec needs 'ring' and 'module' fields")

    ring_spec = obj["ring"]
    if (
        not isinstance(ring_spec, list)
        or not ring_spec
        or not all(isinstance(n, int) and n >= 2 for n in ring_spec)
    ):
        raise SpecError("'ring' must be a nonempty list of integers >= 2")
    ring = Ring(ring_spec)

    mod_spec = obj["module"]
    if not isinstance(mod_spec, list):
        raise SpecError("'module' must be a list of {'d': ..., 'c': ...} factors")
    bad = []
    factors = []
    for i, item in enumerate(mod_spec):
        if (
            not isinstance(item, dict)
            or set(item) != {"d", "c"}
            or not isinstance(item.get("d"), int)
            or not isinstance(item.get("c"), int)
        ):
            bad.append({"index": i, "factor": item, "error": "needs integer fields d, c"})
            continue
        d, c = item["d"], item["c"]
        if not 0 <= c < len(ring.moduli):
            bad.append({"index": i, "factor": item, "error": "no such ring component"})
        elif d < 1 or ring.moduli[c] % d != 0:
            bad.append(
                {"index": i, "factor": item, "error": f"d must divide {ring.moduli[c]}"}
            )
        else:
            factors.append((d, c))
    if bad:
        raise SpecError(f"invalid module factors: {bad}", bad)
    if not factors:
        raise SpecError("'module' needs at least one factor")

    options = obj.get("options", {})
    if not isinstance(options, dict):
        raise SpecError("'options' must be an object")
    unknown = sorted(set(options) - _OPTION_KEYS)
    if unknown:
        raise SpecError(f"unknown option fields: {unknown}", unknown)
    return Module(ring, factors), options


def instance_echo(module: Module, options: dict | None = None) -> dict:
    echo = {
        "ring": list(module.ring.moduli),
        "module": [{"d": d, "c": c} for d, c in module.factors],
    }
    if options:
        echo["options"] = options
    return echo


def load_spec(path: str) -> tuple[Module, dict]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc}")
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"malformed JSON in {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        )
    return parse_instance(obj)


def parse_gens(ring: Ring, text: str):
    """Ring elements as comma-separated residue tuples, residues joined by ':'."""
    gens = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        residues = part.split(":")
        if len(residues) != len(ring.moduli):
            raise SpecError(
                f"element {part!r} has {len(residues)} residues, ring has "
                f"{len(ring.moduli)} components"
            )
        try:
            gens.append(ring.element(int(x) for x in residues))
        except ValueError:
            raise SpecError(f"element {part!r} is not a tuple of integers")
    if not gens:
        raise SpecError("no generators given")
    return gens


def _dump(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_dict(graph: aggraph.AnnGraph) -> dict:
    return {
        "vertices": [
            {"id": v.id, "label": v.label, "size": v.size}
            for v in graph.vertices
        ],
        "edges": sorted(
            sorted((graph.vertices[i].id, graph.vertices[j].id))
            for i, j in graph.edges()
        ),
        "invariants": aggraph.invariants(graph).to_dict(),
    }


def _localization_dict(module: Module, s, include_components: bool) -> dict:
    loc = localize(module, s)
    inv_before = aggraph.invariants(aggraph.build_AG(module))
    inv_after = aggraph.invariants(aggraph.build_AG(loc.image))
    out = {
        "mult_set": {
            "generator_count": len(s.gens),
            "size": len(s.closure),
            "contains_zero": s.contains_zero,
        },
        "idempotent": list(loc.idem),
        "image_size": loc.image.size,
        "kernel_size": loc.kernel.size,
        "zero_divisor_free": not (s.closure & module.zero_divisors()),
        "invariants_before": inv_before.to_dict(),
        "invariants_after": inv_after.to_dict(),
        "comparison": {
            "clique_before": inv_before.clique_number,
            "clique_after": inv_after.clique_number,
            "chromatic_before": inv_before.chromatic_number,
            "chromatic_after": inv_after.chromatic_number,
            "semiprime": module.is_semiprime(),
        },
    }
    if include_components and module.is_cyclic():
        rep = check_product_decomposition(module)
        out["components"] = {
            "idempotents": [list(e) for e in rep.component_idempotents],
            "sizes": rep.sizes(),
        }
    return out


def cmd_analyze(args) -> int:
    module, options = load_spec(args.spec)
    if args.localize_at_min_primes:
        options = dict(options, localize_at_min_primes=True)
    if args.localize_gens:
        options = dict(options, localize_gens=args.localize_gens)
    lat = module.lattice()
    ag = aggraph.build_AG(module)
    ag_star = aggraph.build_AG_star(module)
    mins = module.min_primes()
    gen = module.cyclic_generator()
    report = {
        "schema": 1,
        "version": __version__,
        "instance": instance_echo(module),
        "cardinalities": {"ring": module.ring.cardinality, "module": module.size},
        "submodules": [
            {
                "id": s.id,
                "size": s.size,
                "gens": [list(g) for g in s.gens],
                "label": s.label,
            }
            for s in lat.all
        ],
        "lattice": {
            "count": len(lat),
            "minimal": [s.id for s in module.minimal_submodules()],
            "primes": [s.id for s in module.primes()],
            "min_primes": [s.id for s in mins],
            "radical_zero": lat.find(
                module.radical(module.zero_submodule()).elements
            ).id,
            "annihilator": list(module.annihilator().divisors),
            "annihilator_nil": module.annihilator().is_nil(),
            "semiprime": module.is_semiprime(),
            "cyclic": gen is not None,
            "cyclic_generator": None if gen is None else list(gen),
            "classification": list(module.classify()),
        },
        "graphs": {"AG": _graph_dict(ag), "AG_star": _graph_dict(ag_star)},
    }
    if options.get("localize_at_min_primes"):
        report["localization"] = _localization_dict(
            module, min_prime_complement(module), include_components=True
        )
    elif options.get("localize_gens"):
        gens_opt = options["localize_gens"]
        if isinstance(gens_opt, str):
            gens = parse_gens(module.ring, gens_opt)
        else:
            gens = [module.ring.element(g if isinstance(g, list) else [g]) for g in gens_opt]
        report["localization"] = _localization_dict(
            module, mult_closure(module.ring, gens), include_components=False
        )
    if gen is not None:
        witnesses, wreport = module.min_prime_clique_witness()
        report["clique_witness"] = {
            "submodules": [
                {"id": lat.find(w.elements).id, "label": w.label, "size": w.size}
                for w in witnesses
            ],
            **wreport,
        }
    _dump(report, args.out)
    return 0


def cmd_graph(args) -> int:
    module, _ = load_spec(args.spec)
    graph = aggraph.build_AG_star(module) if args.star else aggraph.build_AG(module)
    text = aggraph.to_dot(graph)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_localize(args) -> int:
    module, _ = load_spec(args.spec)
    if args.at_min_primes:
        s = min_prime_complement(module)
        include_components = True
    else:
        s = mult_closure(module.ring, parse_gens(module.ring, args.gens))
        include_components = False
    report = {
        "schema": 1,
        "version": __version__,
        "instance": instance_echo(module),
        "localization": _localization_dict(module, s, include_components),
    }
    _dump(report, args.out)
    return 0


def cmd_corpus(args) -> int:
    spec = theorems.CorpusSpec(
        max_ring_card=args.max_ring, max_module_card=args.max_module
    )
    ids = None
    if args.theorems:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
        unknown = [t for t in ids if t not in theorems.PREDICATES]
        if unknown:
            raise SpecError(f"unknown theorem ids: {unknown}", unknown)
    corpus = theorems.generate_corpus(spec)
    report = theorems.run_suite(corpus, ids, corpus_spec=spec, jobs=args.jobs)
    payload = report.to_dict()
    payload["version"] = __version__
    payload["instances"] = len(corpus)
    _dump(payload, args.out)
    if report.violations:
        return 2
    if report.skips and not args.skips_ok:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agmod",
        description="Annihilating-submodule graphs of finite modules: exact "
        "invariants and structural-theorem checking.",
    )
    parser.add_argument("--version", action="version", version=f"agmod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for one instance")
    p.add_argument("spec", help="instance spec JSON file")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument(
        "--localize-at-min-primes",
        action="store_true",
        help="add a localization section at the minimal-prime complement",
    )
    p.add_argument(
        "--localize-gens",
        help="add a localization section at the closure of these ring elements "
        "(comma-separated; residues within an element joined by ':')",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="DOT output for AG (or AG* with --star)")
    p.add_argument("spec")
    p.add_argument("--star", action="store_true", help="export AG* instead of AG")
    p.add_argument("--dot", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("localize", help="localize an instance and compare invariants")
    p.add_argument("spec")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--at-min-primes", action="store_true")
    group.add_argument("--gens", help="ring elements generating the multiplicative set")
    p.add_argument("--out")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("corpus", help="run the structural predicates over a corpus")
    p.add_argument("--max-ring", type=int, default=36)
    p.add_argument("--max-module", type=int, default=128)
    p.add_argument("--theorems", help="comma-separated predicate ids (default: all)")
    p.add_argument("--out", help="write the suite report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--skips-ok",
        action="store_true",
        help="exit 0 even when resource-capped instances were skipped",
    )
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    cap = os.environ.get("AGMOD_MAX_SUBMODULES")
    if cap:
        try:
            finmod.LATTICE_CAP = int(cap)
        except ValueError:
            print(f"agmod: AGMOD_MAX_SUBMODULES must be an integer, got {cap!r}",
                  file=sys.stderr)
            return 64
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 64 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"agmod: resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (SpecError, StructuralError, DomainError) as exc:
        print(f"agmod: {exc}", file=sys.stderr)
        details = getattr(exc, "details", None)
        if details:
            for d in details:
                print(f"agmod:   {d}", file=sys.stderr)
        return 64
    except AgmodError as exc:
        print(f"agmod: internal error (this is a bug): {exc}", file=sys.stderr)
        return 70


if __name__ == "__main__":
    sys.exit(main())
