from __future__ import annotations

from dataclasses import dataclass, field

from ..core import EmpireGraph


@dataclass(frozen=True)
class GadgetArtifact:
    """An empire graph plus named vertex or empire sets.

    Tags starting with ``empire:`` hold empire ids; all other tags hold
    vertex ids.  Insertion order of ``roles`` is preserved on disk.
    """

    graph: EmpireGraph
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        g = self.graph
        for tag, ids in self.roles.items():
            if " " in tag or not tag:
                raise ValueError(f"bad role tag {tag!r}")
            bound = g.num_empires if tag.startswith("empire:") else g.num_vertices
            for i in ids:
                if not 0 <= i < bound:
                    raise ValueError(f"role {tag} refers to missing id {i}")

    def role(self, tag: str) -> tuple[int, ...]:
        return self.roles[tag]

    def empire(self, tag: str) -> int:
        (e,) = self.roles[f"empire:{tag}"]
        return e
