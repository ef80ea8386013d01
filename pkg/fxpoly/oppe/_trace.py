from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, Iterator, List, Optional


@unique
class OpKind(Enum):
    ADD = 'ADD'
    MUL_cc = 'MUL_cc'
    MUL_pc = 'MUL_pc'
    GT = 'GT'


@dataclass(frozen=True)
class TraceRecord:
    kind: OpKind
    length: int
    stage: str = ''


# Append-only record of the secure operations one evaluation performed
class OpTrace:
    def __init__(self, records: Iterable[TraceRecord] = ()):
        self._records: List[TraceRecord] = list(records)

    def append(self, kind: OpKind, length: int, stage: str = ''):
        self._records.append(TraceRecord(kind, length, stage))

    def extend(self, other: 'OpTrace'):
        self._records.extend(other)

    def __iter__(self) -> Iterator[TraceRecord]:
        return iter(self._records)

    def __len__(self):
        return len(self._records)

    def __eq__(self, other):
        if not isinstance(other, OpTrace):
            return NotImplemented
        return self._records == other._records

    def __repr__(self):
        return f'OpTrace({len(self._records)} records)'

    def _matching(self, kind: OpKind, stage: Optional[str]):
        return [r for r in self._records if r.kind == kind and (stage is None or r.stage == stage)]

    def count(self, kind: OpKind, stage: Optional[str] = None) -> int:
        # element-wise operation count
        return sum(r.length for r in self._matching(kind, stage))

    def rounds(self, kind: OpKind, stage: Optional[str] = None) -> int:
        return len(self._matching(kind, stage))

    def stages(self) -> List[str]:
        seen = []
        for r in self._records:
            if r.stage not in seen:
                seen.append(r.stage)
        return seen

    def dump(self) -> str:
        return '\n'.join(f'{r.kind.value} {r.length}' for r in self._records)

    @classmethod
    def parse(cls, text: str) -> 'OpTrace':
        records = []
        for line in text.splitlines():
            if not line.strip():
                continue
            kind, length = line.split()
            records.append(TraceRecord(OpKind(kind), int(length)))
        return cls(records)
