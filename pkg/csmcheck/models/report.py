from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .. import __version__


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    OBSERVED = "observed"  # a reported property with no expected value


class CheckOutcome(BaseModel):
    name: str
    status: CheckStatus
    passed: Optional[bool] = Field(None, description="None when the check was skipped")
    witness: Any = Field(None, description="Row, column or coefficient data behind the verdict")
    message: Optional[str] = None

    @classmethod
    def expect(cls, name: str, passed: bool, witness: Any = None, message: Optional[str] = None) -> "CheckOutcome":
        return cls(
            name=name,
            status=CheckStatus.PASSED if passed else CheckStatus.FAILED,
            passed=passed,
            witness=witness,
            message=message,
        )

    @classmethod
    def info(cls, name: str, value: bool, witness: Any = None, message: Optional[str] = None) -> "CheckOutcome":
        return cls(name=name, status=CheckStatus.OBSERVED, passed=value, witness=witness, message=message)

    @classmethod
    def skip(cls, name: str, reason: str) -> "CheckOutcome":
        return cls(name=name, status=CheckStatus.SKIPPED, message=reason)

    @property
    def failed(self) -> bool:
        return self.status == CheckStatus.FAILED


class RunReport(BaseModel):
    """Machine-readable result of one CLI command."""
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    version: str = __version__
    inputs_digest: str = Field(..., description="SHA-256 of the canonical JSON of the parsed inputs")
    checks: List[CheckOutcome] = Field(default_factory=list)
    exit_status: int = 0
    data: Dict[str, Any] = Field(default_factory=dict)

    @property
    def failures(self) -> List[CheckOutcome]:
        return [c for c in self.checks if c.failed]
