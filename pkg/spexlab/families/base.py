from abc import ABC, abstractmethod

from spexlab.base import CYCLE_CAP, MINOR_GRAPH_CAP, MINOR_PATTERN_CAP, check_cap
from spexlab.families.containment import contains_subgraph, has_minor, has_subdivision
from spexlab.families.counterexample import COUNTEREXAMPLE_CAP, counterexample_items
from spexlab.families.cycles import (chord_count,
                                     cycle_masks,
                                     cycle_spectrum,
                                     max_incident_chords,
                                     minimal_masks,
                                     pack_disjoint)
from spexlab.families.trees import all_trees_on
from spexlab.graphs.graph6 import graph6_encode
from spexlab.utils.bits import popcount


class FamilySpec(ABC):
    """Abstract base class for forbidden families.

    A graph is free (of the family) iff it contains no member of the family as a subgraph. Every
    family here is closed under taking supergraphs, so freeness is inherited by subgraphs.
    """

    hereditary = True

    @abstractmethod
    def is_free(self, g):
        """Returns True iff `g` contains no member of the family.

        Parameters
        ----------
        g : spexlab.graphs.Graph
            The host graph.

        Returns
        -------
        free : bool
            True iff `g` is free of the family.

        Raises
        ------
        CapExceededError
            If deciding freeness exceeds a search cap.
        """
        pass

    @property
    def max_member_order(self):
        """The largest member order if the family is a finite list, otherwise None."""
        return None

    @property
    def is_finite(self):
        return self.max_member_order is not None

    @property
    def default_m_cap(self):
        """Size of the right side used to truncate K_{j,infinity}."""
        return 10


class FiniteList(FamilySpec):
    """A finite list of forbidden graphs."""

    def __init__(self, graphs, names=None):
        """
        Parameters
        ----------
        graphs : list of spexlab.graphs.Graph
            The members. Must be nonempty.
        names : list of str, default=None
            Display names of the members (e.g. their expressions). Defaults to graph6 codes.
        """
        graphs = list(graphs)
        if len(graphs) == 0:
            raise ValueError('A finite family needs at least one member')
        self.graphs = sorted(graphs, key=lambda f: (f.n, f.num_edges))
        if names is None:
            names = [graph6_encode(f) for f in graphs]
        self.names = list(names)

    def is_free(self, g):
        return not any(contains_subgraph(g, f) for f in self.graphs)

    @property
    def max_member_order(self):
        return max(f.n for f in self.graphs)

    @property
    def default_m_cap(self):
        return 2 * self.max_member_order

    def __str__(self):
        return 'list:' + ';'.join(self.names)


class _CycleFamily(FamilySpec):

    def __init__(self, cycle_cap=CYCLE_CAP):
        self.cycle_cap = cycle_cap

    def spectrum(self, g):
        return cycle_spectrum(g, cap=self.cycle_cap)


class CyclesAtLeast(_CycleFamily):
    """All cycles of length at least `length`."""

    def __init__(self, length, cycle_cap=CYCLE_CAP):
        if length < 3:
            raise ValueError(f'Cycle length must be at least 3: {length}')
        super().__init__(cycle_cap=cycle_cap)
        self.length = length

    def is_free(self, g):
        return g.n < self.length or max(self.spectrum(g), default=0) < self.length

    def __str__(self):
        return f'cycles-ge:{self.length}'


class CyclesModulo(_CycleFamily):
    """All cycles whose length is congruent to `length` modulo `modulus`."""

    def __init__(self, length, modulus, cycle_cap=CYCLE_CAP):
        if not 0 <= length < modulus:
            raise ValueError(f'Expected 0 <= length < modulus, got length={length}, '
                             f'modulus={modulus}')
        super().__init__(cycle_cap=cycle_cap)
        self.length = length
        self.modulus = modulus

    def is_free(self, g):
        return not any(c % self.modulus == self.length for c in self.spectrum(g))

    def __str__(self):
        return f'cycles-mod:{self.length},{self.modulus}'


class ConsecutiveEvenCycles(_CycleFamily):
    """All graphs containing cycles of `k` consecutive even lengths 2t, 2t+2, ..., 2t+2(k-1)."""

    def __init__(self, k, cycle_cap=CYCLE_CAP):
        if k < 1:
            raise ValueError(f'k must be positive: {k}')
        super().__init__(cycle_cap=cycle_cap)
        self.k = k

    def is_free(self, g):
        spectrum = self.spectrum(g)
        return not any(all(length + 2 * i in spectrum for i in range(self.k))
                       for length in spectrum if length % 2 == 0)

    def __str__(self):
        return f'consec-even:{self.k}'


class DisjointCycles(_CycleFamily):
    """All graphs containing `count` vertex-disjoint cycles.

    Every cycle must have length at least `min_length` (and at most `max_length`, if given). The
    i-th cycle must additionally carry a chord if ``chorded[i]`` is set. With `equal_length`, all
    cycles must have the same length.
    """

    def __init__(self, count, min_length=3, max_length=None, chorded=None, equal_length=False,
                 cycle_cap=CYCLE_CAP):
        if count < 1:
            raise ValueError(f'count must be positive: {count}')
        if min_length < 3:
            raise ValueError(f'min_length must be at least 3: {min_length}')
        if max_length is not None and max_length < min_length:
            raise ValueError('max_length must not be smaller than min_length')
        chorded = tuple(bool(flag) for flag in chorded) if chorded is not None \
            else (False,) * count
        if len(chorded) != count:
            raise ValueError(f'Expected {count} chord flags, got {len(chorded)}')
        if equal_length and any(chorded):
            raise ValueError('Chord flags cannot be combined with equal_length')

        super().__init__(cycle_cap=cycle_cap)
        self.count = count
        self.min_length = min_length
        self.max_length = max_length
        self.chorded = chorded
        self.equal_length = equal_length

    def _masks(self, g):
        return [mask for mask in cycle_masks(g, max_length=self.max_length, cap=self.cycle_cap)
                if popcount(mask) >= self.min_length]

    def is_free(self, g):
        if self.count * self.min_length > g.n:
            return True
        masks = self._masks(g)
        if self.equal_length:
            by_length = dict()
            for mask in masks:
                by_length.setdefault(popcount(mask), []).append(mask)
            return not any(len(group) >= self.count and pack_disjoint([group] * self.count)
                           for group in by_length.values())

        plain = minimal_masks(masks)
        with_chord = minimal_masks([mask for mask in masks if chord_count(g, mask) >= 1])
        lists = [with_chord if flag else plain for flag in sorted(self.chorded, reverse=True)]
        return not pack_disjoint(lists)

    def __str__(self):
        text = f'disjoint-cycles:{self.count}'
        if self.min_length != 3:
            text += f',min={self.min_length}'
        if self.max_length is not None:
            text += f',max={self.max_length}'
        if any(self.chorded):
            text += ',chorded=' + ''.join('1' if flag else '0' for flag in self.chorded)
        if self.equal_length:
            text += ',equal'
        return text


class ChordedCycles(_CycleFamily):
    """All graphs containing `count` vertex-disjoint cycles with at least `min_chords` chords each.

    With `incident`, the chords of each cycle must all meet a single vertex of the cycle.
    """

    def __init__(self, count=1, min_chords=1, incident=False, cycle_cap=CYCLE_CAP):
        if count < 1 or min_chords < 1:
            raise ValueError('count and min_chords must be positive')
        super().__init__(cycle_cap=cycle_cap)
        self.count = count
        self.min_chords = min_chords
        self.incident = incident

    def _has_chords(self, g, mask):
        if self.incident:
            return max_incident_chords(g, mask) >= self.min_chords
        return chord_count(g, mask) >= self.min_chords

    def is_free(self, g):
        if 4 * self.count > g.n:
            return True
        masks = minimal_masks(mask for mask in cycle_masks(g, cap=self.cycle_cap)
                              if self._has_chords(g, mask))
        return not pack_disjoint([masks] * self.count)

    def __str__(self):
        text = f'chorded:{self.count}'
        if self.min_chords != 1:
            text += f',chords={self.min_chords}'
        if self.incident:
            text += ',incident'
        return text


class MinorsOf(FamilySpec):
    """All graphs which have `pattern` as a minor."""

    def __init__(self, pattern, name=None, graph_cap=MINOR_GRAPH_CAP,
                 pattern_cap=MINOR_PATTERN_CAP):
        self.pattern = pattern
        self.name = name if name is not None else graph6_encode(pattern)
        self.graph_cap = graph_cap
        self.pattern_cap = pattern_cap

    def is_free(self, g):
        return not has_minor(g, self.pattern, graph_cap=self.graph_cap,
                             pattern_cap=self.pattern_cap)

    @property
    def default_m_cap(self):
        return max(self.pattern.n, self.graph_cap - self.pattern.n)

    def __str__(self):
        return f'minor:{self.name}'


class SubdivisionsOf(MinorsOf):
    """All graphs which contain a subdivision of `pattern`."""

    def is_free(self, g):
        return not has_subdivision(g, self.pattern, graph_cap=self.graph_cap,
                                   pattern_cap=self.pattern_cap)

    def __str__(self):
        return f'subdiv:{self.name}'


class AllTreesOn(FamilySpec):
    """All graphs which contain every tree on `t` vertices.

    A graph is free iff at least one tree on `t` vertices is missing from it.
    """

    def __init__(self, t):
        self.t = t
        trees = all_trees_on(t)
        # stars and paths are the trees most often missing
        self.trees = sorted(trees, key=lambda tree: (-tree.max_degree, tree.num_edges))
        if len(self.trees) > 1:
            path_tree = min(trees, key=lambda tree: tree.max_degree)
            self.trees.remove(path_tree)
            self.trees.insert(1, path_tree)

    def is_free(self, g):
        return g.n < self.t or not all(contains_subgraph(g, tree) for tree in self.trees)

    def __str__(self):
        return f'all-trees:{self.t}'


class Counterexample7(FamilySpec):
    """The seven-item family separating extremal and spectral extremal graphs."""

    def is_free(self, g):
        check_cap('counterexample family host order', g.n, COUNTEREXAMPLE_CAP)
        return len(counterexample_items(g, first_only=True)) == 0

    def __str__(self):
        return 'counterexample7'


def is_free(g, spec):
    """Returns True iff `g` contains no member of the family `spec`."""
    return spec.is_free(g)
