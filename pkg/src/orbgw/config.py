"""Run configuration for the command-line driver."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields

from .errors import ConfigInvalid
from .group_core import DEFAULT_CAP

COMMANDS = ("group", "chartable", "rmatrix", "psi", "graphs", "correlator", "verify", "example-d")
BASES = ("class", "phi", "classbar", "phibar")


@dataclass
class RunConfig:
    command: str
    group: dict | None = None
    rep: list = field(default_factory=list)
    g: int = 0
    insertions: list = field(default_factory=list)
    ordered: bool = True
    mode: str = "X"
    order: int | None = None
    exponents: list = field(default_factory=list)
    n_ordered: int = 0
    n_unordered: int = 0
    heights: int = 3
    budget: int = 10**8
    cap: int = DEFAULT_CAP
    seed: int = 0
    out: str | None = None
    n: int = 2

    @classmethod
    def from_dict(cls, data: dict) -> RunConfig:
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigInvalid(f"unknown config fields: {unknown}")
        if "command" not in data:
            raise ConfigInvalid("missing field 'command'")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        return asdict(self)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigInvalid(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        needs_group = self.command in ("group", "chartable", "rmatrix", "correlator")
        if needs_group and not isinstance(self.group, dict):
            raise ConfigInvalid(f"command {self.command!r} needs a group descriptor")
        if self.command in ("rmatrix", "correlator") and not self.rep:
            raise ConfigInvalid(f"command {self.command!r} needs a representation (--rep)")
        for name in ("g", "n_ordered", "n_unordered", "heights", "seed"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ConfigInvalid(f"{name} must be a nonnegative integer")
        for name in ("budget", "cap", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ConfigInvalid(f"{name} must be a positive integer")
        if self.order is not None and (not isinstance(self.order, int) or self.order < 1):
            raise ConfigInvalid("order must be a positive integer")
        if self.mode not in ("X", "tw"):
            raise ConfigInvalid("mode must be 'X' or 'tw'")
        if not all(isinstance(r, int) and r >= 0 for r in self.rep):
            raise ConfigInvalid("rep must be a list of irrep indices")
        if not all(isinstance(a, int) and a >= 0 for a in self.exponents):
            raise ConfigInvalid("exponents must be nonnegative integers")
        for ins in self.insertions:
            if not isinstance(ins, dict) or set(ins) != {"basis", "label", "a"}:
                raise ConfigInvalid(f"insertion {ins!r} must have exactly the keys basis, label, a")
            if ins["basis"] not in BASES:
                raise ConfigInvalid(f"unknown basis {ins['basis']!r}")
            if not isinstance(ins["label"], int) or not isinstance(ins["a"], int) or ins["a"] < 0:
                raise ConfigInvalid(f"insertion {ins!r} needs integer label and a >= 0")
        if self.command == "correlator":
            if not self.insertions:
                raise ConfigInvalid("correlator needs insertions")
            if 2 * self.g - 2 + len(self.insertions) <= 0:
                raise ConfigInvalid("(g, n) is unstable")
            if not self.ordered and len({(d["basis"], d["label"], d["a"]) for d in self.insertions}) != 1:
                raise ConfigInvalid("unordered correlators need identical insertions")
