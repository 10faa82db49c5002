from dataclasses import dataclass
from datetime import datetime
from typing import Optional


@dataclass
class Run:
    """One archived verification run"""
    id: Optional[int]
    suite: str
    max_n: int
    status: str
    digest: str
    workers: Optional[int] = None
    created_at: Optional[datetime] = None


@dataclass
class StoredCheck:
    id: Optional[int]
    run_id: int
    name: str
    n: int
    status: str
    witness: Optional[str] = None
    detail: Optional[str] = None


@dataclass
class RecordOutcome:
    """Result of archiving a run; `matches_previous` is None for the first run of a (suite, max_n)."""
    run_id: int
    digest: str
    matches_previous: Optional[bool]
