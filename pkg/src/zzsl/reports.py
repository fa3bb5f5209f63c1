"""Structured pass/fail reports with stable JSON renderings.

Verifiers record failures as data instead of aborting, so a report can be
inspected, exported, and used to compare candidate formula variants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = [
    "CheckFailure",
    "AxiomReport",
    "RelationFailure",
    "RelationReport",
    "RepresentationReport",
    "VariantOutcome",
    "DiscriminationReport",
    "OccupancyReport",
]


@dataclass
class CheckFailure:
    identity: str
    indices: tuple[int, ...]
    residual: Any = None

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "residual": self.residual,
        }


@dataclass
class AxiomReport:
    """Outcome of the bracket-axiom sweep over a full matrix-unit basis."""

    params: tuple[int, int, int, int]
    pairs_checked: int
    triples_checked: int
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "pairs_checked": self.pairs_checked,
            "triples_checked": self.triples_checked,
            "failures": [f.to_json() for f in self.failures],
        }


@dataclass
class RelationFailure:
    relation: str
    indices: tuple[int, ...]
    residual: Any = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"relation": self.relation}
        for name, value in zip(("i", "j", "k"), self.indices):
            out[name] = value
        out["residual"] = self.residual
        return out


@dataclass
class RelationReport:
    params: tuple[int, int, int, int]
    label: str
    checked: int
    failures: list[RelationFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def vacuous(self) -> bool:
        return self.checked == 0

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "label": self.label,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "failures": [f.to_json() for f in self.failures],
        }


@dataclass
class RepresentationReport:
    """Bundle of suites: triple relations, vacuum conditions, adjointness, spanning."""

    params: tuple[int, int, int, int]
    p: int
    variant: str
    suites: list[RelationReport]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def suite(self, label: str) -> RelationReport:
        for s in self.suites:
            if s.label == label:
                return s
        raise KeyError(label)

    @property
    def first_relation_failure(self) -> tuple[str, RelationFailure] | None:
        """First failing triple-relation instance, if any suite has one."""
        for s in self.suites:
            if s.label.startswith("relations"):
                for f in s.failures:
                    if f.relation.startswith("rel"):
                        return s.label, f
        return None

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "p": self.p,
            "variant": self.variant,
            "passed": self.passed,
            "suites": [s.to_json() for s in self.suites],
        }


@dataclass
class VariantOutcome:
    variant: str
    passed: bool
    relation_failure: dict | None = None

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "passed": self.passed,
            "relation_failure": self.relation_failure,
        }


@dataclass
class DiscriminationReport:
    """Verification outcome for each slot variant of the f-tilde action rules."""

    params: tuple[int, int, int, int]
    p: int
    outcomes: list[VariantOutcome]

    def outcome(self, variant_label: str) -> VariantOutcome:
        for o in self.outcomes:
            if o.variant == variant_label:
                return o
        raise KeyError(variant_label)

    @property
    def corrected_only_passes(self) -> bool:
        flags = [o.passed for o in self.outcomes]
        return flags[0] and not any(flags[1:])

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "p": self.p,
            "corrected_only_passes": self.corrected_only_passes,
            "outcomes": [o.to_json() for o in self.outcomes],
        }


@dataclass
class OccupancyReport:
    params: tuple[int, int, int, int]
    p: int
    dimension: int
    max_r: list[int]
    max_l: list[int]
    max_theta: list[int]
    max_lam: list[int]
    max_total: int

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "p": self.p,
            "dimension": self.dimension,
            "max_r": self.max_r,
            "max_l": self.max_l,
            "max_theta": self.max_theta,
            "max_lambda": self.max_lam,
            "max_total": self.max_total,
        }
