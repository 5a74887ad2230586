"""Command-line driver.  All output is JSON with sorted keys; errors are JSON objects too."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .char_theory import character_table, table_to_json
from .chen_ruan import RepSpec
from .config import COMMANDS, RunConfig
from .errors import ConfigInvalid, OrbGWError
from .graph_sum import GraphSum
from .graphs import enumerate_graphs
from .group_core import from_descriptor
from .psi import psi_integral
from .rmatrix import default_order, r_matrix
from .serialize import dumps, rational_to_json, value_to_json
from .suite import SuiteConfig, run_suite
from .type_d import reproduce_type_d


def _ints(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ConfigInvalid(f"expected comma-separated integers, got {text!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigInvalid(f"cannot read JSON from {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbgw", description="Exact Gromov-Witten invariants of [C^r/G].")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="JSON file with RunConfig fields (flags override it)")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--group", metavar="FILE", help="JSON group descriptor")
    src.add_argument("--family", help="built-in family: cyclic, dihedral, binary_dihedral, symmetric, quaternion")
    p.add_argument("--n", type=int, help="family parameter (and the BD(n) parameter for example-d)")
    p.add_argument("--rep", help="irrep indices of the summands, e.g. '1,0'")
    p.add_argument("--g", type=int, help="genus")
    p.add_argument("--insertions", metavar="FILE",
                   help="JSON list of {basis, label, a}, or a full correlator request")
    p.add_argument("--unordered", action="store_true", help="treat identical insertions as unordered")
    p.add_argument("--mode", choices=("X", "tw"), help="[C^r/G] or twisted-BG normalization")
    p.add_argument("--order", type=int, help="truncation order D")
    p.add_argument("--exponents", help="psi exponents, e.g. '1,0,0,0'")
    p.add_argument("--ordered-leaves", type=int, dest="n_ordered", help="graphs: ordered leaves")
    p.add_argument("--unordered-leaves", type=int, dest="n_unordered", help="graphs: unordered leaves")
    p.add_argument("--heights", type=int, help="verify: height cap per insertion")
    p.add_argument("--budget", type=int, help="enumeration budget")
    p.add_argument("--cap", type=int, help="group order cap")
    p.add_argument("--seed", type=int, help="seed for randomized steps")
    p.add_argument("--out", help="write JSON here instead of stdout")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    data = _load_json(args.config) if args.config else {}
    if not isinstance(data, dict):
        raise ConfigInvalid("config file must hold a JSON object")
    data = dict(data)
    data["command"] = args.command
    if args.group:
        data["group"] = _load_json(args.group)
    elif args.family:
        if args.n is None:
            raise ConfigInvalid("--family needs --n")
        data["group"] = {"family": args.family, "n": args.n}
    if args.n is not None:
        data["n"] = args.n
    if args.insertions:
        req = _load_json(args.insertions)
        if isinstance(req, dict):
            for key in ("group", "rep", "g", "ordered"):
                if key in req:
                    data[key] = req[key]
            if isinstance(data.get("rep"), dict):
                data["rep"] = data["rep"].get("summands", [])
            req = req.get("insertions", [])
        data["insertions"] = req
    if args.rep is not None:
        data["rep"] = _ints(args.rep)
    if args.exponents is not None:
        data["exponents"] = _ints(args.exponents)
    if args.unordered:
        data["ordered"] = False
    for name in ("g", "mode", "order", "n_ordered", "n_unordered", "heights", "budget", "cap", "seed", "out"):
        v = getattr(args, name)
        if v is not None:
            data[name] = v
    return RunConfig.from_dict(data)


def _rep(cfg: RunConfig) -> RepSpec:
    G = from_descriptor(cfg.group, cap=cfg.cap)
    return RepSpec.of(character_table(G, seed=cfg.seed), cfg.rep)


def cmd_group(cfg: RunConfig) -> dict:
    G = from_descriptor(cfg.group, cap=cfg.cap)
    G.verify()
    reps = G.representatives
    return {
        "name": G.name,
        "order": G.order,
        "exponent": G.exponent,
        "abelian": G.is_abelian(),
        "classes": [
            {
                "representative": reps[c],
                "label": G.labels[reps[c]] if G.labels else str(reps[c]),
                "size": G.class_sizes[c],
                "element_order": G.class_order(c),
                "centralizer_order": G.class_centralizer_order(c),
                "inverse_class": G.inverse_class(c),
            }
            for c in range(G.num_classes)
        ],
    }


def cmd_chartable(cfg: RunConfig) -> dict:
    table = character_table(from_descriptor(cfg.group, cap=cfg.cap), seed=cfg.seed)
    table.validate()
    return table_to_json(table)


def cmd_rmatrix(cfg: RunConfig) -> dict:
    rep = _rep(cfg)
    order = cfg.order or default_order(cfg.g, max(3, len(cfg.insertions)))
    R = r_matrix(rep, order)
    return {
        "basis": "normalized idempotent",
        "order": order,
        "rep": list(rep.summands),
        "entries": [[[value_to_json(x) for x in R[a, b].coeffs] for b in range(R.size)] for a in range(R.size)],
    }


def cmd_psi(cfg: RunConfig) -> dict:
    return {"g": cfg.g, "exponents": cfg.exponents, "value": rational_to_json(psi_integral(cfg.g, cfg.exponents))}


def cmd_graphs(cfg: RunConfig) -> dict:
    if 2 * cfg.g - 2 + cfg.n_ordered + cfg.n_unordered <= 0:
        raise ConfigInvalid("(g, n) is unstable")
    graphs = enumerate_graphs(cfg.g, cfg.n_ordered, cfg.n_unordered)
    return {"g": cfg.g, "count": len(graphs), "graphs": [gr.to_json() for gr in graphs]}


def cmd_correlator(cfg: RunConfig) -> dict:
    rep = _rep(cfg)
    engine = GraphSum(rep, cfg.mode, cfg.order)
    ins = [(d["basis"], d["label"], d["a"]) for d in cfg.insertions]
    if cfg.ordered:
        value = engine.correlator(cfg.g, ins)
    else:
        value = engine.correlator_unordered(cfg.g, len(ins), ins[0])
    return {"value": value_to_json(value)}


def cmd_verify(cfg: RunConfig) -> dict:
    suite = SuiteConfig(height_cap=cfg.heights)
    if cfg.group is not None:
        if set(cfg.group) != {"family", "n"}:
            raise ConfigInvalid("verify takes a built-in family")
        suite = replace(suite, groups=((cfg.group["family"], cfg.group["n"]),))
    if cfg.rep:
        suite = replace(suite, reps=(tuple(cfg.rep),))
    report = run_suite(suite)
    report["seed"] = cfg.seed
    report["groups"] = [f"{f}({k})" for f, k in suite.groups]
    report["gn"] = [list(x) for x in suite.gn]
    return report


def cmd_example_d(cfg: RunConfig) -> dict:
    return reproduce_type_d(cfg.n, order=cfg.order or 3)


HANDLERS = {
    "group": cmd_group,
    "chartable": cmd_chartable,
    "rmatrix": cmd_rmatrix,
    "psi": cmd_psi,
    "graphs": cmd_graphs,
    "correlator": cmd_correlator,
    "verify": cmd_verify,
    "example-d": cmd_example_d,
}


def run(cfg: RunConfig) -> tuple:
    """Execute a validated config; returns (exit status, JSON-ready object)."""
    try:
        cfg.validate()
        return 0, HANDLERS[cfg.command](cfg)
    except OrbGWError as exc:
        return 1, {"error": {"code": exc.code, "message": str(exc)}}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_path = args.out
    try:
        cfg = config_from_args(args)
        out_path = cfg.out
        status, obj = run(cfg)
    except OrbGWError as exc:
        status, obj = 1, {"error": {"code": exc.code, "message": str(exc)}}
    text = dumps(obj)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
