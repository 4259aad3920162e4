"""Family tree: robots are leaves, synthetic ancestors are internal nodes.

Built bottom-up: shuffle the current frontier, carve it into groups of
2..group_size_max (a remainder of one joins the last group, so a group can
reach group_size_max+1), give each group a fresh parent id, repeat with the
parents until a single root remains.
"""

from dataclasses import dataclass

from ..errors import GenerationError


@dataclass(frozen=True)
class FamilyTree:
    root: int
    children: dict  # internal node id -> tuple of child ids
    parent: dict  # node id -> parent id (root absent)

    def is_leaf(self, node_id: int) -> bool:
        return node_id not in self.children

    def leaves(self) -> list:
        return sorted(n for n in self.parent if n not in self.children)

    def internal_ids(self) -> list:
        return sorted(self.children)

    def siblings(self, node_id: int) -> list:
        """Other children of this node's parent (empty for the root)."""
        if node_id == self.root:
            return []
        return [c for c in self.children[self.parent[node_id]] if c != node_id]

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "children": {str(k): list(v) for k, v in sorted(self.children.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyTree":
        children = {int(k): tuple(v) for k, v in d["children"].items()}
        parent = {}
        for node, kids in children.items():
            for kid in kids:
                parent[kid] = node
        return cls(root=int(d["root"]), children=children, parent=parent)


def gen_family_tree(rng, robot_ids, config) -> FamilyTree:
    """Group robots (then groups of groups) until one ancestor remains."""
    if len(robot_ids) < 2:
        raise GenerationError("family tree needs at least 2 robots")
    size_lo, size_hi = config.group_size_range

    next_id = max(robot_ids) + 1
    children: dict = {}
    parent: dict = {}
    frontier = list(robot_ids)

    while len(frontier) > 1:
        rng.shuffle(frontier)
        grouped = []
        i = 0
        while i < len(frontier):
            remaining = len(frontier) - i
            size = rng.randint(size_lo, size_hi)
            if remaining - size == 1:
                size += 1  # a remainder of one joins this group
            size = min(size, remaining)
            group = frontier[i : i + size]
            node = next_id
            next_id += 1
            children[node] = tuple(group)
            for member in group:
                parent[member] = node
            grouped.append(node)
            i += size
        frontier = grouped

    return FamilyTree(root=frontier[0], children=children, parent=parent)
