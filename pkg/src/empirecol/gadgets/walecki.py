from __future__ import annotations

from dataclasses import dataclass

from ..core import Edge, norm_edge


@dataclass(frozen=True)
class HamiltonianDecomposition:
    """``r`` Hamiltonian cycles of K_{2r+1}; vertex ``2r`` plays the fixed point."""

    r: int
    cycles: tuple[tuple[int, ...], ...]

    def cycle_edges(self, i: int) -> set[Edge]:
        c = self.cycles[i]
        return {norm_edge(c[k], c[(k + 1) % len(c)]) for k in range(len(c))}


def walecki(r: int) -> HamiltonianDecomposition:
    """Walecki's decomposition of K_{2r+1} into ``r`` edge-disjoint Hamiltonian cycles.

    The first cycle zig-zags 0, 1, 2r-1, 2, 2r-2, ..., r-1, r+1, r, inf with
    inf = 2r; cycle i adds i (mod 2r) to every label except inf.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    first = [0]
    for k in range(1, r):
        first += [k, 2 * r - k]
    first += [r, 2 * r]
    cycles = tuple(
        tuple(x if x == 2 * r else (x + i) % (2 * r) for x in first) for i in range(r)
    )
    return HamiltonianDecomposition(r, cycles)
