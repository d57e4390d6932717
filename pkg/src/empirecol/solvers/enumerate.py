from __future__ import annotations

from typing import Iterator

from ..core import Colouring, ReducedGraph

ENUMERATION_GUARD = 10_000_000


def iter_colourings(rg: ReducedGraph, s: int, canonical: bool = False) -> Iterator[Colouring]:
    """Yield the proper s-colourings of ``rg`` in lexicographic order.

    With ``canonical`` only colourings whose colours first appear in the
    order 0, 1, 2, ... are produced: one per class under renaming colours.
    A canonical colouring using ``u`` colours stands for s!/(s-u)! colourings.
    """
    n = rg.num_empires
    earlier = [[w for w in rg.neighbours[v] if w < v] for v in range(n)]
    colour = [0] * n

    def rec(v: int, used: int) -> Iterator[Colouring]:
        if v == n:
            yield Colouring(tuple(colour), s)
            return
        top = min(s, used + 1) if canonical else s
        for c in range(top):
            if all(colour[w] != c for w in earlier[v]):
                colour[v] = c
                yield from rec(v + 1, max(used, c + 1))

    yield from rec(0, 0)


def enumerate_colourings(
    rg: ReducedGraph, s: int, cap: int | None = None, guard: int = ENUMERATION_GUARD
) -> list[Colouring]:
    """All proper s-colourings of ``rg`` in lexicographic order, at most ``cap`` of them.

    Without a cap the search space s^n must stay below ``guard``.
    """
    n = rg.num_empires
    if cap is None and s**n > guard:
        raise ValueError(f"{s}^{n} assignments exceed the enumeration guard; pass a cap")
    out: list[Colouring] = []
    if cap == 0:
        return out
    for c in iter_colourings(rg, s):
        out.append(c)
        if cap is not None and len(out) >= cap:
            break
    return out
