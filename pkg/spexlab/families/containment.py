"""Containment tests: (non-induced) subgraphs, minors and topological minors."""
from spexlab.base import MINOR_GRAPH_CAP, MINOR_PATTERN_CAP, check_cap
from spexlab.families.cycles import cycle_spectrum
from spexlab.graphs.canonical import canonical_certificate
from spexlab.utils.bits import full_mask, iter_bits, popcount


def _degree_dominated(g, f):
    g_degrees = sorted((popcount(row) for row in g.adj), reverse=True)
    f_degrees = sorted((popcount(row) for row in f.adj), reverse=True)
    return all(a <= b for a, b in zip(f_degrees, g_degrees))


def _matching_order(f, core):
    """Orders the pattern vertices such that each vertex has as many earlier neighbors as
    possible."""
    order = []
    placed = 0
    remaining = set(core)
    while remaining:
        v = max(remaining, key=lambda u: (popcount(f.adj[u] & placed), popcount(f.adj[u]), -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_subgraph(g, f):
    """Returns an injective map ``V(f) -> V(g)`` (as a list) which maps edges of `f` to edges of
    `g`, or None if `f` is not a subgraph of `g`."""
    if f.n > g.n or f.num_edges > g.num_edges or not _degree_dominated(g, f):
        return None

    core = [v for v in range(f.n) if f.adj[v]]
    order = _matching_order(f, core)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in iter_bits(f.adj[v]) if position[u] < i] for i, v in enumerate(order)]

    g_degrees = [popcount(row) for row in g.adj]
    candidates_by_degree = dict()
    for v in order:
        d = popcount(f.adj[v])
        if d not in candidates_by_degree:
            candidates_by_degree[d] = sum(1 << x for x in range(g.n) if g_degrees[x] >= d)

    mapping = [-1] * f.n

    def extend(i, used):
        if i == len(order):
            return True
        v = order[i]
        candidates = candidates_by_degree[popcount(f.adj[v])] & ~used
        for u in earlier[i]:
            candidates &= g.adj[mapping[u]]
        for x in iter_bits(candidates):
            mapping[v] = x
            if extend(i + 1, used | 1 << x):
                return True
        mapping[v] = -1
        return False

    if not extend(0, 0):
        return None

    used = sum(1 << mapping[v] for v in core)
    free = iter_bits(full_mask(g.n) & ~used)
    for v in range(f.n):
        if mapping[v] == -1:
            mapping[v] = next(free)
    return mapping


def contains_subgraph(g, f):
    """Returns True iff `f` is a (not necessarily induced) subgraph of `g`."""
    return find_subgraph(g, f) is not None


def _check_minor_caps(g, f, graph_cap, pattern_cap):
    check_cap('minor search pattern order', f.n, pattern_cap)
    check_cap('minor search host order', g.n, graph_cap)


def has_minor(g, f, graph_cap=MINOR_GRAPH_CAP, pattern_cap=MINOR_PATTERN_CAP):
    """Returns True iff `f` is a minor of `g`.

    `f` is a minor of `g` iff it is a subgraph of a graph obtained from `g` by edge contractions,
    so the search contracts edges recursively and tests containment at each step. Contracted
    graphs are remembered by isomorphism class.

    Raises
    ------
    CapExceededError
        If `f` or `g` exceed the minor search caps.
    """
    _check_minor_caps(g, f, graph_cap, pattern_cap)
    seen = set()

    def search(h):
        if h.n < f.n or h.num_edges < f.num_edges:
            return False
        if contains_subgraph(h, f):
            return True
        if h.n == f.n:
            return False
        key = canonical_certificate(h)
        if key in seen:
            return False
        seen.add(key)
        return any(search(h.contract_edge(u, v)) for u, v in h.edges())

    return search(g)


def _is_cycle(f):
    return f.n >= 3 and f.is_connected() and all(popcount(row) == 2 for row in f.adj)


def _subdivision_steps(f):
    """Returns the search steps: ('root', v) starts a component, ('edge', a, b) routes an edge
    whose endpoint `a` is already placed."""
    steps = []
    placed = 0
    for component in f.components():
        if popcount(component) == 1:
            continue
        root = max(iter_bits(component), key=lambda v: (popcount(f.adj[v]), -v))
        steps.append(('root', root))
        placed |= 1 << root
        order = [root]
        # breadth-first discovery; an edge is routed as soon as one endpoint is placed
        index = 0
        while index < len(order):
            v = order[index]
            index += 1
            for u in iter_bits(f.adj[v]):
                if not placed >> u & 1:
                    placed |= 1 << u
                    order.append(u)
        position = {v: i for i, v in enumerate(order)}
        edges = [(a, b) if position[a] < position[b] else (b, a)
                 for a, b in f.edges() if component >> a & 1]
        edges.sort(key=lambda e: (position[e[1]], position[e[0]]))
        steps.extend(('edge', a, b) for a, b in edges)
    return steps


def has_subdivision(g, f, graph_cap=MINOR_GRAPH_CAP, pattern_cap=MINOR_PATTERN_CAP):
    """Returns True iff `g` contains a subdivision of `f`, i.e. branch vertices for the vertices of
    `f` joined by internally disjoint paths for its edges.

    Raises
    ------
    CapExceededError
        If `f` or `g` exceed the minor search caps.
    """
    _check_minor_caps(g, f, graph_cap, pattern_cap)
    if f.n > g.n or f.num_edges > g.num_edges:
        return False
    if contains_subgraph(g, f):
        return True
    if _is_cycle(f):
        return any(length >= f.n for length in cycle_spectrum(g, cap=graph_cap))

    f_degrees = [popcount(row) for row in f.adj]
    g_degrees = [popcount(row) for row in g.adj]
    isolated = sum(1 for row in f.adj if row == 0)
    steps = _subdivision_steps(f)
    mapping = dict()

    def paths(start, target, used):
        # yields (internal vertices, end vertex) of paths from start over unused vertices
        stack = [(start, 0)]
        while stack:
            v, internal = stack.pop()
            for u in iter_bits(g.adj[v]):
                if target is not None:
                    if u == target:
                        yield internal, u
                    elif not (used | internal) >> u & 1:
                        stack.append((u, internal | 1 << u))
                elif not (used | internal) >> u & 1:
                    yield internal, u
                    stack.append((u, internal | 1 << u))

    def search(i, used):
        if i == len(steps):
            return g.n - popcount(used) >= isolated
        step = steps[i]
        if step[0] == 'root':
            v = step[1]
            for x in range(g.n):
                if not used >> x & 1 and g_degrees[x] >= f_degrees[v]:
                    mapping[v] = x
                    if search(i + 1, used | 1 << x):
                        return True
            mapping.pop(v, None)
            return False

        _, a, b = step
        if b in mapping:
            for internal, _ in paths(mapping[a], mapping[b], used):
                if search(i + 1, used | internal):
                    return True
            return False

        for internal, end in paths(mapping[a], None, used):
            if g_degrees[end] < f_degrees[b]:
                continue
            mapping[b] = end
            if search(i + 1, used | internal | 1 << end):
                return True
        mapping.pop(b, None)
        return False

    return search(0, 0)
