from spexlab.verification.exceptions import InvalidOrderError, NotATreeError, UnknownCaseError
from spexlab.verification.catalog import (bipartite,
                                          CATALOG,
                                          CaseRecord,
                                          CaseResult,
                                          case_names,
                                          CatalogCase,
                                          get_case,
                                          join_edge,
                                          join_empty,
                                          join_matching,
                                          observed_threshold,
                                          run_case)
from spexlab.verification.counterexample import (construction_g,
                                                 construction_h,
                                                 counterexample_report,
                                                 CounterexampleRecord,
                                                 CounterexampleReport,
                                                 find_crossover,
                                                 printed_b_g,
                                                 printed_b_h,
                                                 printed_p_g,
                                                 printed_p_h)
from spexlab.verification.trees import (good_tree,
                                        good_tree_consistency,
                                        good_tree_sides,
                                        is_nondecreasing_within,
                                        tree_edge_counts,
                                        tree_from_prufer,
                                        tree_stats,
                                        tree_trend,
                                        TreeConsistency,
                                        TreeEdgeCounts,
                                        TreeStats)
from spexlab.verification.reporting import (run_report,
                                            write_case_csv,
                                            write_case_json,
                                            write_json,
                                            write_markdown_report)
