"""Experiment configuration stored as a single JSON document."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field

from fractonprod import __version__

KINDS = ("fig2", "fig3", "rank-scan", "confinement", "laplacian-square-demo")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    params: dict = field(default_factory=dict)
    sizes: tuple[int, ...] = ()
    trials: int = 1
    seed: int = 0
    output_dir: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["sizes"] = list(self.sizes)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentConfig:
        unknown = set(d) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ExperimentConfig:
        return cls.from_dict(json.loads(text))

    def canonical(self) -> str:
        """Compact form hashed for provenance; the output directory is excluded."""
        d = self.to_dict()
        d.pop("output_dir")
        return json.dumps(d, sort_keys=True, separators=(",", ":"))

    def sha256(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def override(self, **changes) -> ExperimentConfig:
        """Replace fields whose new value is not None; ``params`` keys are merged."""
        params = dict(self.params)
        params.update(changes.pop("params", None) or {})
        kept = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, params=params, **kept)

    def provenance(self) -> list[str]:
        return [f"fractonprod {__version__}", f"config-sha256 {self.sha256()}", f"config {self.canonical()}"]


def load_config(path: str) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return ExperimentConfig.from_json(fh.read())


def save_config(config: ExperimentConfig, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(config.to_json())
