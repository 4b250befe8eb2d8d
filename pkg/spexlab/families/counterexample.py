"""Decision procedure for the seven-item family whose extremal and spectral extremal graphs differ.

The family consists of

1. three disjoint copies of K_{1,4};
2. K_{2,6} plus two disjoint connected graphs on 5 vertices;
3. K_{2,6} plus K_{1,3} plus a disjoint connected graph on 5 vertices;
4. K_{2,6} plus a disjoint connected graph on 9 vertices;
5. K_{2,6} plus a disjoint connected graph on 8 vertices other than P_8;
6. four disjoint connected graphs on 5 vertices;
7. three disjoint cycles of lengths between 3 and 7.

A connected graph on s vertices is a subgraph of `g` iff some s-set of vertices induces a connected
subgraph, so items 2 to 6 reduce to packings of connected vertex sets. The K_{2,6} is placed by
choosing the pair of its 2-side; any six common neighbors left unused by the other parts complete
it.
"""
from itertools import combinations

from spexlab.base import CYCLE_CAP_MAX
from spexlab.families.containment import contains_subgraph
from spexlab.families.cycles import cycle_masks, minimal_masks, pack_disjoint
from spexlab.graphs.named import star
from spexlab.utils.bits import full_mask, iter_bits, popcount


COUNTEREXAMPLE_CAP = CYCLE_CAP_MAX


def connected_sets(g, avail, size):
    """Returns the sorted bitsets of all `size`-subsets of `avail` which induce a connected
    subgraph."""
    frontier = {1 << v for v in iter_bits(avail)}
    for _ in range(size - 1):
        grown = set()
        for mask in frontier:
            reach = 0
            for v in iter_bits(mask):
                reach |= g.adj[v]
            for u in iter_bits(reach & avail & ~mask):
                grown.add(mask | 1 << u)
        frontier = grown
    return sorted(frontier)


def _claw_sets(g, avail):
    sets = set()
    for center in iter_bits(avail):
        leaves = list(iter_bits(g.adj[center] & avail))
        for chosen in combinations(leaves, 3):
            sets.add(1 << center | 1 << chosen[0] | 1 << chosen[1] | 1 << chosen[2])
    return sorted(sets)


def _induces_path(g, mask):
    if g.edges_within(mask) != popcount(mask) - 1:
        return False
    return all(popcount(g.adj[v] & mask) <= 2 for v in iter_bits(mask))


def counterexample_items(g, first_only=False):
    """Returns the numbers (1 to 7) of the family items which `g` contains."""
    found = []
    n = g.n

    def record(item):
        found.append(item)
        return first_only

    if n >= 15 and contains_subgraph(g, star(4).repeat(3)):
        if record(1):
            return found

    if n >= 16:
        double_side = _double_side_items(g)
        for item in double_side:
            if record(item):
                return found

    if n >= 20:
        sets5 = connected_sets(g, full_mask(n), 5)
        if pack_disjoint([sets5] * 4):
            if record(6):
                return found

    if n >= 9:
        short_cycles = minimal_masks(cycle_masks(g, max_length=7, cap=COUNTEREXAMPLE_CAP))
        if pack_disjoint([short_cycles] * 3):
            record(7)

    return found


def _double_side_items(g):
    n = g.n
    items = set()
    for a in range(n):
        for b in range(a + 1, n):
            common = g.adj[a] & g.adj[b]
            if popcount(common) < 6:
                continue
            avail = full_mask(n) & ~(1 << a | 1 << b)

            def reserve_left(used, common=common):
                return popcount(common & ~used) >= 6

            cache = dict()

            def sets(size, avail=avail):
                if size not in cache:
                    cache[size] = connected_sets(g, avail, size)
                return cache[size]

            if 2 not in items and n >= 18 and pack_disjoint([sets(5), sets(5)], reserve_left):
                items.add(2)
            if 3 not in items and n >= 17 \
                    and pack_disjoint([_claw_sets(g, avail), sets(5)], reserve_left):
                items.add(3)
            if 4 not in items and n >= 17 and any(reserve_left(s) for s in sets(9)):
                items.add(4)
            if 5 not in items and any(reserve_left(s) and not _induces_path(g, s)
                                      for s in sets(8)):
                items.add(5)
    return sorted(items)
