# Archive of verification reports

from permtab.database.db import ReportArchive, report_digest
from permtab.database.models import RecordOutcome, Run, StoredCheck

__all__ = [
    "ReportArchive",
    "report_digest",
    "RecordOutcome",
    "Run",
    "StoredCheck",
]
