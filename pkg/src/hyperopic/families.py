"""Deterministic generators for the graph families used in experiments and audits."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for a generated graph: family id, integer parameters, options.

    base nests another spec for the subdivision family; mode selects the
    t_family attachment vertex ("hub" or "eccentric").
    """

    family: str
    params: tuple = ()
    base: "FamilySpec | None" = None
    mode: str = "hub"


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m, n):
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m, n >= 1")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def caterpillar(leaf_counts):
    """Spine path s_0..s_{p-1} with leaf_counts[i] pendant leaves at s_i."""
    p = len(leaf_counts)
    if p < 1:
        raise ValueError("caterpillar needs a nonempty spine")
    edges = [(i, i + 1) for i in range(p - 1)]
    nxt = p
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def t_hat():
    """The 7-vertex spider with three legs of length two (hub = vertex 0)."""
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def g_k(m, k):
    """Three mutually joined m-cliques plus three pendant paths of k vertices.

    X_i = {(i-1)m .. im-1}, all 3m clique vertices pairwise adjacent; path i
    starts at 3m+(i-1)k, its first vertex adjacent to every vertex of X_i.
    3m+3k vertices, diameter 2k+1.
    """
    if m < 3 or k < 1:
        raise ValueError("g_k needs m >= 3 and k >= 1")
    edges = [(i, j) for i in range(3 * m) for j in range(i + 1, 3 * m)]
    for i in range(3):
        start = 3 * m + i * k
        for x in range(i * m, (i + 1) * m):
            edges.append((x, start))
        for j in range(k - 1):
            edges.append((start + j, start + j + 1))
    return build_graph(3 * m + 3 * k, edges)


def _eccentric_leaf(g, hub):
    d = g.distances()[hub]
    far = max(d)
    return min(v for v in range(g.n) if d[v] == far)


def t_family(m, attach="hub"):
    """Canonical member of the m-th spider family: K_1 at m=1, then a fresh
    claw whose leaves each attach to the previous canonical member.

    attach="hub" joins y_i to the hub (vertex 0) of each copy; attach="eccentric"
    joins it to a deepest leaf instead (diameter experiments). Vertex counts
    follow |T_m| = 3|T_{m-1}| + 4.
    """
    if m < 1:
        raise ValueError("t_family needs m >= 1")
    if attach not in ("hub", "eccentric"):
        raise ValueError(f"unknown attach mode {attach!r}")
    if m == 1:
        return build_graph(1, [])
    sub = t_family(m - 1, attach)
    point = 0 if attach == "hub" else _eccentric_leaf(sub, 0)
    edges = [(0, 1), (0, 2), (0, 3)]
    for i in range(3):
        off = 4 + i * sub.n
        edges.extend((off + u, off + v) for u, v in sub.edges)
        edges.append((i + 1, off + point))
    return build_graph(4 + 3 * sub.n, edges)


def tree_diam10():
    """34-vertex tree: each leaf of the 7-vertex spider becomes the center of a
    claw with every edge subdivided twice. Diameter 10."""
    g = t_hat()
    edges = list(g.edges)
    nxt = g.n
    for leaf in (2, 4, 6):
        for _ in range(3):
            edges.extend([(leaf, nxt), (nxt, nxt + 1), (nxt + 1, nxt + 2)])
            nxt += 3
    return build_graph(nxt, edges)


def subdivide(g, t):
    """Replace every edge with a path through t fresh internal vertices."""
    if t < 0:
        raise ValueError("subdivision count must be >= 0")
    if t == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges:
        chain = [u] + list(range(nxt, nxt + t)) + [v]
        nxt += t
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


_GENERATORS = {
    "path": lambda p: path(*p),
    "cycle": lambda p: cycle(*p),
    "complete": lambda p: complete(*p),
    "complete_bipartite": lambda p: complete_bipartite(*p),
    "caterpillar": lambda p: caterpillar(list(p)),
    "t_hat": lambda p: t_hat(),
    "g_k": lambda p: g_k(*p),
    "tree_diam10": lambda p: tree_diam10(),
}


def generate(spec):
    """Build the graph described by a FamilySpec."""
    if spec.family == "t_family":
        return t_family(*spec.params, attach=spec.mode)
    if spec.family == "subdivision":
        if spec.base is None:
            raise ValueError("subdivision spec needs a base family")
        return subdivide(generate(spec.base), *spec.params)
    try:
        gen = _GENERATORS[spec.family]
    except KeyError:
        raise ValueError(f"unknown family {spec.family!r}") from None
    return gen(spec.params)


def all_trees(n):
    """All non-isomorphic trees on n vertices (n <= 12), deterministic order."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 12:
        raise ValueError("tree enumeration capped at n = 12")
    if n == 1:
        return [build_graph(1, [])]
    import networkx as nx

    out = []
    for t in nx.nonisomorphic_trees(n):
        out.append(build_graph(n, [tuple(sorted(e)) for e in t.edges()]))
    return out


def tree_canonical_form(g):
    """AHU canonical string of a free tree, rooting at the centroid set."""
    if g.n == 1:
        return "()"

    def encode(root, avoid):
        def rec(v, parent):
            subs = sorted(rec(w, v) for w in g.adj[v] if w != parent and w != avoid)
            return "(" + "".join(subs) + ")"

        return rec(root, None)

    # centroid(s): vertices minimizing the largest component of T - v
    best, cents = None, []
    for v in range(g.n):
        seen = {v}
        worst = 0
        for w in g.adj[v]:
            if w in seen:
                continue
            stack, comp = [w], 0
            seen.add(w)
            while stack:
                x = stack.pop()
                comp += 1
                for y in g.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            worst = max(worst, comp)
        if best is None or worst < best:
            best, cents = worst, [v]
        elif worst == best:
            cents.append(v)
    return min(encode(c, None) for c in cents)


def _noncross_chord(a, b, c, d):
    return not ((a < c < b < d) or (c < a < d < b))


def all_two_connected_outerplanar(n):
    """All 2-connected outerplanar graphs on n vertices (3 <= n <= 10), as
    non-crossing chord sets over the n-cycle deduplicated by dihedral symmetry."""
    if not 3 <= n <= 10:
        raise ValueError("outerplanar enumeration supports 3 <= n <= 10")
    chords = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]

    subsets = []

    def grow(idx, chosen):
        subsets.append(tuple(chosen))
        for k in range(idx, len(chords)):
            c = chords[k]
            if all(_noncross_chord(*p, *c) for p in chosen):
                chosen.append(c)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])

    def canon(chordset):
        forms = []
        for refl in (False, True):
            for r in range(n):
                mapped = []
                for u, v in chordset:
                    a = (n - u) % n if refl else u
                    b = (n - v) % n if refl else v
                    a, b = (a + r) % n, (b + r) % n
                    mapped.append((min(a, b), max(a, b)))
                forms.append(tuple(sorted(mapped)))
        return min(forms)

    seen = {}
    for s in subsets:
        key = canon(s)
        if key not in seen:
            seen[key] = key
    out = []
    for key in sorted(seen):
        edges = [(i, (i + 1) % n) for i in range(n)] + list(key)
        out.append(build_graph(n, edges))
    return out
