from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class CnfFormula:
    """Clauses over variables ``1..num_vars``; literal ``-v`` negates ``v``."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} outside 1..{self.num_vars}")

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Sequence[int]]) -> CnfFormula:
        return cls(num_vars, tuple(tuple(c) for c in clauses))

    @property
    def k(self) -> int:
        """Largest clause width."""
        return max((len(c) for c in self.clauses), default=0)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def padded(self, k: int) -> CnfFormula:
        """Every clause widened to exactly ``k`` literals by repeating its last one."""
        if self.k > k:
            raise ValueError(f"clause wider than {k}")
        return CnfFormula(self.num_vars, tuple(c + (c[-1],) * (k - len(c)) for c in self.clauses))

    def occurrences(self) -> Counter:
        """How often each literal occurs, counting repeats."""
        return Counter(lit for c in self.clauses for lit in c)

    def satisfied_by(self, assignment: Mapping[int, bool] | Sequence[bool]) -> bool:
        """``assignment`` maps variables to truth values (a sequence is indexed by var - 1)."""
        if isinstance(assignment, Mapping):
            values = [bool(assignment.get(v, False)) for v in range(1, self.num_vars + 1)]
        else:
            values = [bool(x) for x in assignment]
        return all(any(values[abs(lit) - 1] == (lit > 0) for lit in c) for c in self.clauses)
