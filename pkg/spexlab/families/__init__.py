from spexlab.families.exceptions import FamilySyntaxError
from spexlab.families.base import (
    AllTreesOn,
    ChordedCycles,
    ConsecutiveEvenCycles,
    Counterexample7,
    CyclesAtLeast,
    CyclesModulo,
    DisjointCycles,
    FamilySpec,
    FiniteList,
    is_free,
    MinorsOf,
    SubdivisionsOf
)
from spexlab.families.containment import (contains_subgraph,
                                          find_subgraph,
                                          has_minor,
                                          has_subdivision)
from spexlab.families.counterexample import connected_sets, counterexample_items
from spexlab.families.cycles import (chord_count,
                                     cycle_masks,
                                     cycle_spectrum,
                                     max_incident_chords,
                                     minimal_masks,
                                     pack_disjoint)
from spexlab.families.dsl import parse_family
from spexlab.families.thresholds import (bipartite_threshold,
                                         BipartiteThreshold,
                                         is_saturated,
                                         max_bipartite_k,
                                         star_threshold,
                                         theorem_case,
                                         TheoremCase)
from spexlab.families.trees import all_trees_on

