import hashlib
import logging
import sqlite3
from pathlib import Path
from typing import List, Optional

from permtab.database.models import RecordOutcome, Run, StoredCheck
from permtab.harness.report import SuiteReport

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).parent / "schema.sql"


def report_digest(report: SuiteReport) -> str:
    """md5 of the canonical JSON form of a report"""
    return hashlib.md5(report.to_json().encode()).hexdigest()


class ReportArchive:
    """
    SQLite archive of verification runs.
    Identical invocations must produce identical digests; a mismatch with the
    previous run of the same suite and n is reported as a determinism warning.
    """

    def __init__(self, db_path: str = "./data/permtab_reports.db"):
        Path(db_path).parent.mkdir(parents=True, exist_ok=True)
        self.conn = sqlite3.connect(db_path)
        self.conn.row_factory = sqlite3.Row
        self.conn.executescript(SCHEMA_PATH.read_text())
        logger.info(f"Report archive opened at {db_path}")

    def close(self):
        self.conn.close()

    def record_run(self, report: SuiteReport, workers: Optional[int] = None) -> RecordOutcome:
        """Store a report with its checks and compare it with the previous run"""
        digest = report_digest(report)
        previous = self.latest_run(report.suite, report.n)

        with self.conn:
            cursor = self.conn.execute(
                "INSERT INTO runs (suite, max_n, status, digest, workers) VALUES (?, ?, ?, ?, ?)",
                (report.suite, report.n, report.status.value, digest, workers)
            )
            run_id = cursor.lastrowid
            self.conn.executemany(
                "INSERT INTO check_results (run_id, name, n, status, witness, detail) VALUES (?, ?, ?, ?, ?, ?)",
                [
                    (run_id, check.name, check.n, check.status.value, check.witness, check.detail)
                    for check in report.checks
                ]
            )
        logger.info(f"Archived {report.suite} run (ID: {run_id}, digest {digest})")

        matches = None
        if previous is not None:
            matches = previous.digest == digest
            if not matches:
                logger.warning(
                    f"Report for {report.suite} at n={report.n} differs from run {previous.id} "
                    f"({previous.digest} != {digest})"
                )
        return RecordOutcome(run_id=run_id, digest=digest, matches_previous=matches)

    def latest_run(self, suite: str, max_n: int) -> Optional[Run]:
        row = self.conn.execute(
            "SELECT * FROM runs WHERE suite = ? AND max_n = ? ORDER BY id DESC LIMIT 1",
            (suite, max_n)
        ).fetchone()
        return Run(**dict(row)) if row else None

    def list_runs(self, suite: Optional[str] = None) -> List[Run]:
        if suite:
            rows = self.conn.execute("SELECT * FROM runs WHERE suite = ? ORDER BY id", (suite,))
        else:
            rows = self.conn.execute("SELECT * FROM runs ORDER BY id")
        return [Run(**dict(row)) for row in rows]

    def get_checks(self, run_id: int) -> List[StoredCheck]:
        rows = self.conn.execute("SELECT * FROM check_results WHERE run_id = ? ORDER BY id", (run_id,))
        return [StoredCheck(**dict(row)) for row in rows]
