import json
from enum import Enum

from pydantic import BaseModel, Field

from permtab.harness.distribution import DistributionDocument


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class CheckResult(BaseModel):
    name: str
    n: int
    status: Status
    witness: str | None = Field(None, description="Replayable counterexample in the domain's text format")
    detail: str | None = None
    table: DistributionDocument | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


class SuiteReport(BaseModel):
    suite: str
    n: int = Field(..., description="Largest n requested")
    status: Status
    witness: str | None = None
    checks: list[CheckResult] = Field(default_factory=list)

    @classmethod
    def from_checks(cls, suite: str, n: int, checks: list[CheckResult]) -> "SuiteReport":
        failed = [check for check in checks if not check.passed]
        return cls(
            suite=suite,
            n=n,
            status=Status.FAIL if failed else Status.PASS,
            witness=failed[0].witness if failed else None,
            checks=checks,
        )

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True)
