"""Brute-force oracles, written independently of the library code paths.

Everything here works by exhaustive enumeration directly from definitions;
the library must agree with these on small instances.
"""

from itertools import combinations, product

from chordcrit.graph import Graph


def brute_stable_ksubsets(n: int, k: int) -> list[tuple[int, ...]]:
    out = []
    for sub in combinations(range(1, n + 1), k):
        if any(sub[i + 1] - sub[i] < 2 for i in range(k - 1)):
            continue
        if sub[0] == 1 and sub[-1] == n:
            continue
        out.append(sub)
    return out


def brute_chords(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a, b in brute_stable_ksubsets(n, 2)]


def brute_pair_class(p: tuple[int, int], q: tuple[int, int]) -> str:
    if set(p) & set(q):
        return "intersecting"
    (a, b), (c, d) = sorted([p, q])
    if a < c < b < d:
        return "crossing"
    if a < c < d < b:
        return "nested-through-1" if a == 1 else "transverse"
    return "lateral"


def brute_gn_edges(n: int) -> set[tuple[int, int]]:
    """Edges of gn(n) as index pairs into the lexicographic chord list."""
    chords = brute_chords(n)
    edges = set()
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if brute_pair_class(chords[i], chords[j]) in ("crossing", "transverse"):
                edges.add((i, j))
    return edges


def brute_sg2_edges(n: int) -> int:
    chords = brute_chords(n)
    return sum(
        1
        for i in range(len(chords))
        for j in range(i + 1, len(chords))
        if not set(chords[i]) & set(chords[j])
    )


def brute_census(n: int) -> dict[str, int]:
    chords = brute_chords(n)
    counts = {
        "crossing": 0,
        "transverse": 0,
        "lateral": 0,
        "nested-through-1": 0,
        "intersecting": 0,
    }
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            counts[brute_pair_class(chords[i], chords[j])] += 1
    return counts


def brute_proper(g: Graph, coloring: dict[int, int]) -> bool:
    """Direct double loop: total and no monochromatic edge."""
    for v in range(g.n):
        if v not in coloring:
            return False
    for u in range(g.n):
        for v in g.adj[u]:
            if coloring[u] == coloring[v]:
                return False
    return True


def brute_is_k_colorable(g: Graph, k: int) -> bool:
    edges = [(e.u, e.v) for e in g.edges()]
    for assign in product(range(k), repeat=g.n):
        if all(assign[u] != assign[v] for u, v in edges):
            return True
    return False


def brute_chromatic(g: Graph) -> int:
    """Minimal k over exhaustive enumeration of all k-colourings (n <= 8)."""
    assert g.n <= 8, "oracle is exponential; keep it to tiny graphs"
    for k in range(g.n + 1):
        if brute_is_k_colorable(g, k):
            return k
    return g.n


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def is_cycle(g: Graph, length: int) -> bool:
    """Canonical structure check: connected, |V| = |E| = length, 2-regular."""
    return (
        g.n == length
        and g.edge_count == length
        and all(g.degree(v) == 2 for v in range(g.n))
        and is_connected(g)
    )


def is_single_edge(g: Graph) -> bool:
    return g.n == 2 and g.edge_count == 1
