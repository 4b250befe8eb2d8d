from spexlab.spectral.exceptions import (NoRootError,
                                         PartitionNotEquitableError,
                                         SpectralConvergenceError)
from spexlab.spectral.matrices import a_alpha, a_alpha_sparse
from spexlab.spectral.eigen import (eigen_equation_residuals,
                                    eigenvalues,
                                    spectral_radius,
                                    Spectrum)
from spexlab.spectral.partitions import (equitable_partition,
                                         is_equitable,
                                         quotient,
                                         quotient_alpha,
                                         quotient_from_matrix,
                                         QuotientMatrix)
from spexlab.spectral.polynomials import (
    char_poly,
    check_second_root_below,
    compare_max_roots,
    count_roots_above,
    count_roots_between,
    max_real_root,
    Polynomial,
    RootComparison,
    sturm_sequence
)
from spexlab.spectral.bounds import (
    alpha_join_radius,
    alpha_spex_lower_bound,
    check_alpha_bounds,
    check_forest_edge_bound,
    forest_edge_constant,
    forest_edge_count,
    initial_lambda_bound,
    weyl_upper_bound
)
