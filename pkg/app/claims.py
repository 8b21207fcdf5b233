"""Engine tags and verification records shared by the radical checks and the
theorem verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping


class Engine(str, Enum):
    CHAR0 = "char0"
    BRUTE = "brute"
    DEFINITIONAL = "definitional"


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    UNDECIDABLE = "undecidable"
    # mod-p disagreement with a characteristic-0 statement; reported, never failed
    FINDING = "finding"


@dataclass(frozen=True)
class ClaimResult:
    """One (theorem, claim) verdict. ``theorem`` is the CLI id, e.g. ``thm8``."""

    theorem: str
    claim: str
    status: ClaimStatus
    detail: str = ""
    engine: str = ""
    evidence: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def check(
        cls,
        theorem: str,
        claim: str,
        holds: bool,
        detail: str = "",
        engine: str = "",
        **evidence: Any,
    ) -> "ClaimResult":
        status = ClaimStatus.PASS if holds else ClaimStatus.FAIL
        return cls(theorem, claim, status, detail, engine, evidence)

    @classmethod
    def relation(
        cls,
        theorem: str,
        claim: str,
        holds: bool,
        char0_statement: bool,
        field_is_rational: bool,
        engine: str = "",
        **evidence: Any,
    ) -> "ClaimResult":
        """Like ``check``, but a failed characteristic-0 statement over GF(p) is a finding."""
        if not holds and char0_statement and not field_is_rational:
            return cls.finding(
                theorem, claim, "fails after reduction mod p", engine, **evidence
            )
        return cls.check(theorem, claim, holds, engine=engine, **evidence)

    @classmethod
    def undecidable(
        cls, theorem: str, claim: str, detail: str, engine: str = ""
    ) -> "ClaimResult":
        return cls(theorem, claim, ClaimStatus.UNDECIDABLE, detail, engine)

    @classmethod
    def finding(
        cls, theorem: str, claim: str, detail: str, engine: str = "", **evidence: Any
    ) -> "ClaimResult":
        return cls(theorem, claim, ClaimStatus.FINDING, detail, engine, evidence)

    @property
    def passed(self) -> bool:
        return self.status is ClaimStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is ClaimStatus.FAIL
