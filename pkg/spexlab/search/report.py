import csv
import json

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional


OBJECTIVE_EDGES = 'edges'


def lambda_objective(alpha):
    return f'lambda({alpha:g})'


@dataclass
class SearchReport:
    """Result of an extremal query.

    `witnesses` are the canonical graph6 codes of all optimizers, sorted, and `values` holds the
    objective value of each witness. For the lambda objective, witnesses are all graphs within the
    tie tolerance of the optimum; remaining ties carry the ``'tie'`` flag.
    """
    query: str
    n: int
    family: str
    objective: str
    optimum: Any
    witnesses: List[str]
    values: List[Any]
    enumerated: int
    runtime_ms: int = 0
    restricted_to: Optional[str] = None
    flags: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self, timestamp=True):
        """Serializable form. Without `timestamp`, run-dependent fields (runtime, creation time)
        are omitted so that identical queries produce identical documents."""
        result = {
            'query': self.query,
            'n': self.n,
            'family': self.family,
            'objective': self.objective,
            'optimum': self.optimum,
            'witnesses': list(self.witnesses),
            'values': list(self.values),
            'enumerated': self.enumerated,
            'restricted_to': self.restricted_to,
            'flags': sorted(set(self.flags)),
            'details': self.details
        }
        if timestamp:
            result['runtime_ms'] = self.runtime_ms
            result['created'] = datetime.now(timezone.utc).isoformat(timespec='seconds')
        return result

    def to_json(self, timestamp=True, indent=2):
        return json.dumps(self.to_dict(timestamp=timestamp), indent=indent, sort_keys=True)

    def merge(self, other, tie_tol=0.0):
        """Combines two partial reports of the same query (e.g. from disjoint search branches).

        The result does not depend on the order in which partial reports are merged.
        """
        if (self.query, self.n, self.family, self.objective, self.restricted_to) != \
                (other.query, other.n, other.family, other.objective, other.restricted_to):
            raise ValueError('Only reports of the same query can be merged')

        pairs = dict(zip(self.witnesses, self.values))
        pairs.update(zip(other.witnesses, other.values))
        optimum = max(pairs.values()) if len(pairs) > 0 else None
        kept = sorted((code, value) for code, value in pairs.items()
                      if optimum - value <= tie_tol)

        flags = sorted(set(self.flags) | set(other.flags))
        return SearchReport(self.query, self.n, self.family, self.objective, optimum,
                            [code for code, _ in kept], [value for _, value in kept],
                            self.enumerated + other.enumerated,
                            runtime_ms=self.runtime_ms + other.runtime_ms,
                            restricted_to=self.restricted_to, flags=flags,
                            details={**other.details, **self.details})


def write_reports_csv(reports, path):
    """Writes one ``(n, optimum)`` row per report, ordered by n."""
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['n', 'optimum'])
        for report in sorted(reports, key=lambda r: r.n):
            writer.writerow([report.n, report.optimum])
