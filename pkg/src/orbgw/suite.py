"""The graph-sum versus oracle comparison matrix."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .char_theory import character_table
from .chen_ruan import RepSpec
from .errors import MismatchFound
from .graph_sum import GraphSum
from .group_core import builtin
from .oracle import compare_with_graphsum

DEFAULT_GROUPS = (("cyclic", 1), ("cyclic", 2), ("cyclic", 3), ("symmetric", 3), ("binary_dihedral", 2))
DEFAULT_GN = ((0, 3), (1, 1), (0, 4), (1, 2))


def default_reps(num_irreps: int) -> list:
    """One-summand and two-summand representations used by the matrix."""
    last = num_irreps - 1
    return [(min(1, last),), (last,), (last, 0)]


@dataclass
class SuiteConfig:
    groups: tuple = DEFAULT_GROUPS
    gn: tuple = DEFAULT_GN
    height_cap: int = 3
    modes: tuple = ("tw", "X")
    reps: tuple | None = None  # None -> default_reps per group
    dilaton: str = "shifted"
    quadratic: str = "verbatim"
    stop_on_mismatch: bool = False
    timings: bool = False  # wall-clock fields make the report non-reproducible


def run_suite(cfg: SuiteConfig, progress=None) -> dict:
    runs = []
    mismatches = 0
    t_start = time.perf_counter()
    for family, k in cfg.groups:
        table = character_table(builtin(family, k))
        reps = cfg.reps if cfg.reps is not None else default_reps(table.num_irreps)
        seen = set()
        for summands in reps:
            if summands in seen:
                continue
            seen.add(summands)
            rep = RepSpec.of(table, summands)
            for mode in cfg.modes:
                engine = GraphSum(rep, mode)
                for g, n in cfg.gn:
                    t0 = time.perf_counter()
                    entry = {"group": f"{family}({k})", "rep": list(summands), "mode": mode, "g": g, "n": n,
                             "height_cap": cfg.height_cap}
                    try:
                        rpt = compare_with_graphsum(rep, g, n, cfg.height_cap, engine, cfg.dilaton,
                                                    cfg.quadratic, mode)
                        entry.update(checked=rpt["checked"], mismatches=0)
                    except MismatchFound as exc:
                        mismatches += 1
                        entry.update(mismatches=1, first_mismatch=str(exc.monomial))
                        if cfg.stop_on_mismatch:
                            raise
                    if cfg.timings:
                        entry["seconds"] = round(time.perf_counter() - t0, 3)
                    runs.append(entry)
                    if progress is not None:
                        progress(entry)
    report = {
        "dilaton_convention": cfg.dilaton,
        "quadratic_convention": cfg.quadratic,
        "runs": runs,
        "mismatches": mismatches,
        "checked": sum(r.get("checked", 0) for r in runs),
    }
    if cfg.timings:
        report["seconds"] = round(time.perf_counter() - t_start, 3)
    return report
