"""Scale-free social network via growth with preferential attachment.

Holme-Kim style construction: start from m isolated nodes, then attach
each new node with exactly m edges.  The first edge of a node always goes
to a preferentially-chosen target; each further edge closes a triangle
around the previous target with probability p, otherwise preferentially
attaches again.  Duplicate and self edges are rejected and resampled, so
every grown node contributes exactly m edges and the graph is connected
(the first grown node must link to all m seeds).
"""

from dataclasses import dataclass

from ..errors import GenerationError


@dataclass(frozen=True)
class SocialNetwork:
    n: int
    edges: tuple  # (u, v) with u < v, insertion order

    @property
    def adjacency(self) -> dict:
        if not hasattr(self, "_adjacency"):
            adj = {i: [] for i in range(self.n)}
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            object.__setattr__(self, "_adjacency", {k: tuple(v) for k, v in adj.items()})
        return self._adjacency

    def neighbors(self, node: int) -> tuple:
        return self.adjacency[node]

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d: dict) -> "SocialNetwork":
        return cls(n=int(d["n"]), edges=tuple((int(u), int(v)) for u, v in d["edges"]))


def gen_social_network(rng, n: int, m: int, p: float) -> SocialNetwork:
    """Grow a connected scale-free graph on nodes 0..n-1."""
    if not 1 <= m < n:
        raise GenerationError(f"network needs n > m >= 1, got n={n}, m={m}")

    edges = []
    adjacency = {i: set() for i in range(n)}
    # One entry per edge endpoint: sampling uniformly from this list is
    # degree-proportional (preferential attachment).
    endpoint_pool = list(range(m))

    def add_edge(u: int, v: int) -> None:
        edges.append((min(u, v), max(u, v)))
        adjacency[u].add(v)
        adjacency[v].add(u)
        endpoint_pool.append(v)

    for source in range(m, n):
        target = _draw_target(rng, endpoint_pool, adjacency, source)
        add_edge(source, target)
        for _ in range(m - 1):
            neighborhood = None
            if rng.random() < p:
                neighborhood = [
                    nbr for nbr in sorted(adjacency[target])
                    if nbr != source and nbr not in adjacency[source]
                ]
            if neighborhood:
                # Triad edge: close a triangle around the last preferential
                # target (target itself stays the anchor for further triads).
                nbr = neighborhood[rng.randrange(len(neighborhood))]
                add_edge(source, nbr)
            else:
                target = _draw_target(rng, endpoint_pool, adjacency, source)
                add_edge(source, target)
        endpoint_pool.extend([source] * m)

    return SocialNetwork(n=n, edges=tuple(edges))


def _draw_target(rng, endpoint_pool, adjacency, source) -> int:
    # Reject self and already-linked targets so each attachment is a new edge.
    while True:
        candidate = endpoint_pool[rng.randrange(len(endpoint_pool))]
        if candidate != source and candidate not in adjacency[source]:
            return candidate
