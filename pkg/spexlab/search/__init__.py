from spexlab.search.exceptions import NoFreeGraphError, NotFreeError
from spexlab.search.enumeration import enumerate_graphs, enumeration_cap, iter_graphs
from spexlab.search.report import (lambda_objective,
                                   OBJECTIVE_EDGES,
                                   SearchReport,
                                   write_reports_csv)
from spexlab.search.extremal import ex, radius_polynomial, resolve_ties, spex
from spexlab.search.restricted import (ex_restricted,
                                       restricted_pattern,
                                       RestrictedPattern,
                                       RESTRICTED_K_MAX)
from spexlab.search.compare import (candidate_compare,
                                    CandidateResult,
                                    ComparisonReport)
