"""Verification reports shared by the identity-checking suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["IdentityReport", "IDENTITY_IDS", "all_passed"]

IDENTITY_IDS = (
    "T1.11",
    "T1.12",
    "T1.13",
    "T1.14",
    "T1.15",
    "T1.16",
    "T2.17",
    "T3.18",
    "T3.19",
    "T4.20",
    "T4.21",
    "T5",
    "C1",
    "E1",
    "E2",
    "E3",
    "ORACLE",
)

_WITNESS_LIMIT = 240


def _clip(text: str) -> str:
    if len(text) <= _WITNESS_LIMIT:
        return text
    return text[: _WITNESS_LIMIT - 3] + "..."


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity over a parameter grid.

    ``witness`` carries the first failing parameters and the discrepancy; it
    is empty exactly when the check passed.
    """

    identity_id: str
    detail: str
    n_range: str
    k_range: str
    passed: bool
    witness: str = ""

    def __post_init__(self):
        if self.identity_id not in IDENTITY_IDS:
            raise ValueError(f"unknown identity id: {self.identity_id!r}")
        if self.passed and self.witness:
            raise ValueError("a passing report cannot carry a witness")
        if not self.passed and not self.witness:
            raise ValueError("a failing report must carry a witness")
        object.__setattr__(self, "witness", _clip(self.witness))

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"

    def as_json_obj(self) -> dict:
        obj = {
            "id": self.identity_id,
            "detail": self.detail,
            "n": self.n_range,
            "k": self.k_range,
            "status": "pass" if self.passed else "fail",
        }
        if self.witness:
            obj["witness"] = self.witness
        return obj

    def format_line(self) -> str:
        k_text = "" if self.k_range == "-" else f"k={self.k_range}"
        line = f"{self.identity_id:<7} {self.status:<5} n={self.n_range:<9} {k_text:<13} {self.detail}"
        if self.witness:
            line += f"\n        witness: {self.witness}"
        return line


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
