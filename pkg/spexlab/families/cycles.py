"""Cycle structure: vertex sets of cycles, cycle spectra, chords and disjoint packings."""
from functools import lru_cache

from spexlab.base import CYCLE_CAP, check_cap
from spexlab.utils.bits import iter_bits, popcount


def cycle_masks(g, max_length=None, cap=CYCLE_CAP):
    """Returns the vertex sets (as bitsets) which carry a cycle of `g`.

    A set M is returned iff the subgraph induced by M has a Hamiltonian cycle. Sets larger than
    `max_length` are skipped.

    Raises
    ------
    CapExceededError
        If `g` has more than `cap` vertices.
    """
    check_cap('cycle enumeration vertex count', g.n, cap)
    return _cycle_masks(g, max_length)


@lru_cache(maxsize=1024)
def _cycle_masks(g, max_length):
    if max_length is None:
        max_length = g.n
    if g.num_edges < 3 or g.num_edges <= g.n - len(g.components()):
        return frozenset()

    adj = g.adj
    result = set()
    for start in range(g.n):
        allowed = ~((1 << (start + 1)) - 1)
        closing = adj[start]
        # layer: path vertex set -> bitset of possible path ends
        layer = {1 << start: 1 << start}
        length = 1
        while layer and length < max_length:
            extended = dict()
            for mask, ends in layer.items():
                for v in iter_bits(ends):
                    for u in iter_bits(adj[v] & allowed & ~mask):
                        key = mask | 1 << u
                        extended[key] = extended.get(key, 0) | 1 << u
            length += 1
            if length >= 3:
                result.update(mask for mask, ends in extended.items() if ends & closing)
            layer = extended
    return frozenset(result)


def cycle_spectrum(g, cap=CYCLE_CAP):
    """Returns the set of cycle lengths occurring in `g` (empty iff `g` is a forest)."""
    return frozenset(popcount(mask) for mask in cycle_masks(g, cap=cap))


def chord_count(g, mask):
    """Number of chords of any cycle through all vertices of `mask`."""
    return g.edges_within(mask) - popcount(mask)


def max_incident_chords(g, mask):
    """The largest number of chords of a cycle on `mask` which all meet one vertex."""
    return max(popcount(g.adj[v] & mask) for v in iter_bits(mask)) - 2


def minimal_masks(masks):
    """Drops every mask which contains another mask of the collection."""
    kept = []
    for mask in sorted(masks, key=lambda m: (popcount(m), m)):
        if not any(other & mask == other for other in kept):
            kept.append(mask)
    return kept


def pack_disjoint(candidate_lists, accept=None, used=0):
    """Returns True iff one mask per list can be chosen such that the masks are pairwise disjoint
    (and disjoint from `used`), and `accept(union)` holds if given.

    Consecutive entries which are the same list object are treated as interchangeable, i.e. they
    pick masks in increasing index order.
    """
    def search(i, used, first):
        if i == len(candidate_lists):
            return accept is None or accept(used)
        options = candidate_lists[i]
        start = first if i > 0 and options is candidate_lists[i - 1] else 0
        for j in range(start, len(options)):
            mask = options[j]
            if mask & used == 0 and search(i + 1, used | mask, j + 1):
                return True
        return False

    return search(0, used, 0)
