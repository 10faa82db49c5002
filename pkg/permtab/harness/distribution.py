import csv
import io
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable

from pydantic import BaseModel

from permtab.errors import PermtabError, UnknownStatisticError
from permtab.harness.catalogue import Domain, evaluate, resolve
from permtab.harness.domains import AVOIDANCE_FILTERS, check_bounds, iter_chunk, run_chunks

logger = logging.getLogger(__name__)

Key = tuple[int, ...]


class DistributionRow(BaseModel):
    key: list[int]
    count: int


class DistributionDocument(BaseModel):
    n: int
    domain: str
    stats: list[str]
    avoid: str | None = None
    total: int
    rows: list[DistributionRow]


@dataclass
class DistributionTable:
    """Exact multiset of statistic tuples over one enumerated domain."""
    n: int
    domain: Domain
    stat_names: list[str]
    counts: dict[Key, int] = field(default_factory=dict)
    avoid: str | None = None

    def __post_init__(self):
        self.domain = Domain(self.domain)
        self.counts = {tuple(k): v for k, v in sorted(self.counts.items()) if v}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def keys(self) -> list[Key]:
        return list(self.counts)

    def same_counts(self, other: "DistributionTable") -> bool:
        return self.counts == other.counts

    def first_difference(self, other: "DistributionTable") -> tuple[Key, int, int] | None:
        """Smallest key whose counts differ, with both counts."""
        for key in sorted(set(self.counts) | set(other.counts)):
            mine, theirs = self.counts.get(key, 0), other.counts.get(key, 0)
            if mine != theirs:
                return key, mine, theirs
        return None

    def to_document(self) -> DistributionDocument:
        return DistributionDocument(
            n=self.n,
            domain=self.domain.value,
            stats=list(self.stat_names),
            avoid=self.avoid,
            total=self.total,
            rows=[DistributionRow(key=list(k), count=v) for k, v in self.counts.items()],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_document().model_dump(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(list(self.stat_names) + ["count"])
        for key, count in self.counts.items():
            writer.writerow(list(key) + [count])
        return buffer.getvalue()

    @classmethod
    def from_document(cls, document: DistributionDocument) -> "DistributionTable":
        return cls(
            n=document.n,
            domain=Domain(document.domain),
            stat_names=list(document.stats),
            counts={tuple(row.key): row.count for row in document.rows},
            avoid=document.avoid,
        )

    @classmethod
    def from_json(cls, text: str) -> "DistributionTable":
        return cls.from_document(DistributionDocument.model_validate_json(text))

    @classmethod
    def from_csv(cls, text: str, n: int, domain: Domain | str, avoid: str | None = None) -> "DistributionTable":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0][-1] != "count":
            raise PermtabError("distribution CSV needs a header ending in 'count'")
        counts = {tuple(int(v) for v in row[:-1]): int(row[-1]) for row in rows[1:] if row}
        return cls(n=n, domain=Domain(domain), stat_names=rows[0][:-1], counts=counts, avoid=avoid)


def _count_chunk(domain: Domain, n: int, key: Hashable, stats: list[str], avoid: str | None) -> Counter:
    accepts = AVOIDANCE_FILTERS[avoid] if avoid else None
    counter: Counter = Counter()
    for obj in iter_chunk(domain, n, key):
        if accepts is not None and not accepts(obj):
            continue
        counter[evaluate(domain, stats, obj)] += 1
    return counter


def joint_distribution(
    n: int,
    domain: Domain | str,
    stats: list[str],
    avoid: str | None = None,
    workers: int = 1,
) -> DistributionTable:
    """Joint distribution of `stats` over S_n, I_n or PT(n).

    `avoid` restricts S_n to a pattern class (only "321"). Chunks are merged by
    addition, so the table does not depend on `workers`.
    """
    domain = Domain(domain)
    check_bounds(domain, n)
    if not stats:
        raise UnknownStatisticError("at least one statistic is required")
    for name in stats:
        resolve(domain, name)
    if avoid is not None:
        if domain is not Domain.S:
            raise PermtabError(f"pattern avoidance applies to domain S only, not {domain.value}")
        if avoid not in AVOIDANCE_FILTERS:
            raise PermtabError(f"unsupported avoidance class '{avoid}'")

    total: Counter = Counter()
    for counter in run_chunks(_count_chunk, domain, n, stats, avoid, workers=workers):
        total.update(counter)

    table = DistributionTable(n=n, domain=domain, stat_names=list(stats), counts=dict(total), avoid=avoid)
    logger.info(f"Distribution of {','.join(stats)} over {domain.value}_{n}: {len(table.counts)} keys, total {table.total}")
    return table
