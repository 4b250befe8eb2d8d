"""Saturation and the bipartite threshold k, i.e. the largest j with K_{j,infinity} free."""
import warnings

from dataclasses import dataclass, field
from typing import List

from spexlab.graphs.graph import Graph
from spexlab.graphs.named import (complete,
                                  complete_bipartite,
                                  empty,
                                  matching,
                                  maximal_union,
                                  path,
                                  star)


def is_saturated(g, spec):
    """Returns True iff `g` is free and adding any missing edge creates a member of `spec`."""
    if not spec.is_free(g):
        return False
    return all(not spec.is_free(g.add_edge(u, v)) for u, v in g.non_edges())


@dataclass
class BipartiteThreshold:
    k: int
    m_cap: int
    truncated: bool = False
    empty_member: bool = False

    def to_dict(self):
        return {'k': self.k, 'm_cap': self.m_cap, 'truncated': self.truncated,
                'empty_member': self.empty_member}


def bipartite_threshold(spec, m_cap=None):
    """Finds the largest j such that K_{j,m_cap} is free.

    For a finite list whose members have at most m' vertices, any member inside K_{j,infinity}
    uses at most m' right-side vertices, so the truncation is exact once ``m_cap >= m'``. For
    structural families the result is flagged as truncated.

    Parameters
    ----------
    spec : FamilySpec
        The family.
    m_cap : int, default=None
        Size of the right side. Defaults to ``spec.default_m_cap``.

    Returns
    -------
    threshold : BipartiteThreshold
        The threshold and its flags.
    """
    if m_cap is None:
        m_cap = spec.default_m_cap
    if spec.is_finite and m_cap < spec.max_member_order:
        raise ValueError(f'm_cap must be at least the largest member order '
                         f'{spec.max_member_order}, got {m_cap}')

    truncated = not spec.is_finite
    if not spec.is_free(empty(m_cap)):
        warnings.warn(f'Family {spec} contains an edgeless graph on at most {m_cap} vertices; '
                      'no bipartite graph is free', RuntimeWarning)
        return BipartiteThreshold(0, m_cap, truncated=truncated, empty_member=True)

    j = 1
    while j <= m_cap and spec.is_free(complete_bipartite(j, m_cap)):
        j += 1
    if j > m_cap:
        truncated = True
    if truncated:
        warnings.warn(f'Bipartite threshold of {spec} is truncated at m_cap={m_cap}',
                      RuntimeWarning)
    return BipartiteThreshold(j - 1, m_cap, truncated=truncated)


def max_bipartite_k(spec, m_cap=None):
    """Returns the largest j such that K_{j,m_cap} is free (see :py:func:`bipartite_threshold`)."""
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', RuntimeWarning)
        return bipartite_threshold(spec, m_cap=m_cap).k


def star_threshold(spec, k, n):
    """Returns the largest d such that K_{k,n-k} plus a star K_{1,d} inside the right side is free,
    or -1 if K_{k,n-k} itself is not free.

    A free supergraph of K_{k,n-k} thus has no right-side vertex with more than d right-side
    neighbors.
    """
    right = n - k
    if not spec.is_free(complete_bipartite(k, right)):
        return -1
    d = 0
    while d + 1 < right:
        x = star(d + 1).union(empty(right - d - 2))
        if not spec.is_free(empty(k).join(x)):
            break
        d += 1
    return d


@dataclass
class TheoremCase:
    """Classification of a family by the saturation-type certificates of the main theorem.

    `label` is the letter of the theorem case: ``'a'`` (K_{k,n-k} saturated), ``'b'`` (K_k plus
    an empty graph is the largest free join), ``'c'`` (K_k + (K_2 u empty graph)), ``'d'`` (the
    right side is close to a maximal union of P_2 or P_3), ``'f'`` (K_k + c*K_{1,d+1} fails for
    some tested c while the right side holds more than a union of P_3, with `star_degree` d) or
    ``'undetermined'``. Case e has no finite certificate and is never reported.
    """
    label: str
    k: int
    m: int
    star_degree: int = None
    truncated: bool = True
    notes: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'label': self.label, 'k': self.k, 'm': self.m, 'star_degree': self.star_degree,
                'truncated': self.truncated, 'notes': list(self.notes)}


def _star_degree(spec, clique, m, max_copies, notes):
    for d in range(1, m):
        for copies in range(1, max_copies + 1):
            if copies * (d + 2) > m:
                break
            x = star(d + 1).repeat(copies).union(Graph(m - copies * (d + 2)))
            if not spec.is_free(clique.join(x)):
                notes.append(f'K_k + {copies}*K_1,{d + 1} is not free')
                return d
    return None


def theorem_case(spec, m=None, max_copies=3):
    """Classifies `spec` using joins with a right side on `m` vertices.

    All certificates are finite truncations of statements about infinite graphs, which is why the
    result is always flagged as truncated.
    """
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', RuntimeWarning)
        threshold = bipartite_threshold(spec, m_cap=m)
    k, m = threshold.k, threshold.m_cap
    notes = []
    if threshold.empty_member:
        notes.append('family contains an edgeless graph')
        return TheoremCase('undetermined', k, m, notes=notes)

    left = empty(k)
    if is_saturated(left.join(empty(m)), spec):
        return TheoremCase('a', k, m, notes=notes)

    clique = complete(k)
    if not spec.is_free(clique.join(empty(m))):
        notes.append('K_k + empty graph is not free')
        return TheoremCase('undetermined', k, m, notes=notes)
    if not spec.is_free(clique.join(complete(2).union(empty(m - 2)))):
        return TheoremCase('b', k, m, notes=notes)
    if not spec.is_free(clique.join(matching(4).union(empty(m - 4)))):
        return TheoremCase('c', k, m, notes=notes)

    d = _star_degree(spec, clique, m, max_copies, notes)
    if d is None:
        notes.append(f'no star certificate with at most {max_copies} copies')
        return TheoremCase('undetermined', k, m, notes=notes)
    denser = [maximal_union(path(4), m)] + ([maximal_union(complete(3), m)] if d == 2 else [])
    if d >= 3 or any(spec.is_free(clique.join(x)) for x in denser):
        return TheoremCase('f', k, m, star_degree=d, notes=notes)
    if d == 1 and not spec.is_free(clique.join(maximal_union(complete(2), m))):
        notes.append('K_k + M is not free')
        return TheoremCase('undetermined', k, m, star_degree=d, notes=notes)
    return TheoremCase('d', k, m, star_degree=d, notes=notes)
