"""Text formats: empire graphs with role tags, colourings, and DIMACS CNF.

Empire graph::

    eg <num_vertices> <r> <num_empires> <num_edges>
    # role <tag> <ids...>
    v <vid> <empire_id>
    e <u> <v>

Colouring::

    col <s>
    c <empire_id> <colour>
"""

from __future__ import annotations

from .cnf import CnfFormula
from .core import Colouring, EmpireGraph
from .gadgets.artifact import GadgetArtifact


def write_artifact(a: GadgetArtifact | EmpireGraph) -> str:
    art = a if isinstance(a, GadgetArtifact) else GadgetArtifact(a)
    g = art.graph
    lines = [f"eg {g.num_vertices} {g.r} {g.num_empires} {len(g.edges)}"]
    for tag, ids in art.roles.items():
        lines.append(" ".join(["# role", tag, *map(str, ids)]))
    lines += [f"v {v} {e}" for v, e in enumerate(g.empire_of)]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def read_artifact(text: str) -> GadgetArtifact:
    header: list[int] | None = None
    roles: dict[str, tuple[int, ...]] = {}
    empire: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "#":
            if len(parts) >= 3 and parts[1] == "role":
                if parts[2] in roles:
                    raise ValueError(f"line {lineno}: duplicate role {parts[2]}")
                roles[parts[2]] = tuple(_ints(parts[3:], lineno))
            continue
        if parts[0].startswith("#"):
            continue
        kind, rest = parts[0], _ints(parts[1:], lineno)
        if kind == "eg":
            if header is not None or len(rest) != 4:
                raise ValueError(f"line {lineno}: bad header")
            header = rest
        elif header is None:
            raise ValueError(f"line {lineno}: missing 'eg' header")
        elif kind == "v" and len(rest) == 2:
            if rest[0] in empire:
                raise ValueError(f"line {lineno}: vertex {rest[0]} listed twice")
            empire[rest[0]] = rest[1]
        elif kind == "e" and len(rest) == 2:
            edges.append((rest[0], rest[1]))
        else:
            raise ValueError(f"line {lineno}: unrecognised line {raw!r}")
    if header is None:
        raise ValueError("missing 'eg' header")
    n, r, k, m = header
    if sorted(empire) != list(range(n)):
        raise ValueError(f"vertex lines must cover 0..{n - 1} exactly once")
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {(u, v)} refers to a missing vertex")
    g = EmpireGraph.build(n, edges, [empire[v] for v in range(n)], r)
    if len(g.edges) != m:
        raise ValueError("duplicate edges in file")
    if g.num_empires != k:
        raise ValueError(f"header promises {k} empires, found {g.num_empires}")
    sizes = [len(mem) for mem in g.members]
    if sizes and all(x == r for x in sizes):
        g = EmpireGraph(g.num_vertices, g.edges, g.empire_of, r, strict_size=True)
    return GadgetArtifact(g, roles)


def write_colouring(c: Colouring) -> str:
    return "\n".join([f"col {c.s}"] + [f"c {e} {x}" for e, x in enumerate(c.colour_of)]) + "\n"


def read_colouring(text: str) -> Colouring:
    s: int | None = None
    colour: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "col" and len(parts) == 2 and s is None:
            (s,) = _ints(parts[1:], lineno)
        elif parts[0] == "c" and len(parts) == 3 and s is not None:
            e, x = _ints(parts[1:], lineno)
            if e in colour:
                raise ValueError(f"line {lineno}: empire {e} coloured twice")
            colour[e] = x
        else:
            raise ValueError(f"line {lineno}: unrecognised line {raw!r}")
    if s is None:
        raise ValueError("missing 'col' header")
    if sorted(colour) != list(range(len(colour))):
        raise ValueError("colouring must cover empires 0..k-1 exactly once")
    return Colouring(tuple(colour[e] for e in range(len(colour))), s)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; every clause must end with 0."""
    header: tuple[int, int] | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] in ("c", "%") or parts[0].startswith("c"):
            continue
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line")
            n, m = _ints(parts[2:], lineno)
            if n < 0 or m < 0:
                raise ValueError(f"line {lineno}: negative counts")
            header = (n, m)
            continue
        if header is None:
            raise ValueError(f"line {lineno}: clause before 'p cnf' line")
        for lit in _ints(parts, lineno):
            if lit == 0:
                if not current:
                    raise ValueError(f"line {lineno}: empty clause")
                clauses.append(current)
                current = []
            elif abs(lit) > header[0]:
                raise ValueError(f"line {lineno}: literal {lit} out of range")
            else:
                current.append(lit)
    if header is None:
        raise ValueError("missing 'p cnf' line")
    if current:
        raise ValueError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ValueError(f"header promises {header[1]} clauses, found {len(clauses)}")
    return CnfFormula.of(header[0], clauses)


def write_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    lines += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"
