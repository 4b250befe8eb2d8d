from spexlab.graphs.exceptions import (ExpressionSyntaxError,
                                       Graph6FormatError,
                                       ParameterRangeError)
from spexlab.graphs.graph import Graph
from spexlab.graphs.canonical import (canonical_certificate,
                                      canonical_form,
                                      canonical_graph,
                                      canonical_labeling,
                                      canonical_last_vertex,
                                      canonical_order,
                                      from_certificate,
                                      is_isomorphic,
                                      refine_partition)
from spexlab.graphs.expressions import (
    Atom,
    Complement,
    GraphExpr,
    Join,
    Repeat,
    Union,
    parse_expr,
    realize
)
from spexlab.graphs.graph6 import graph6_decode, graph6_encode, read_graph6_file
from spexlab.graphs.named import (
    almost_regular,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    double_star_extended,
    empty,
    friendship,
    matching,
    maximal_union,
    path,
    petersen,
    spider,
    star,
    turan
)
