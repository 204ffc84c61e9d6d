"""Cobweb posets and their incidence algebra, with exact arithmetic.

A cobweb poset is the layered order designated by an integer sequence:
level s holds F_s vertices and every vertex sits below all vertices of
every higher level.  This package materializes the finite truncations,
represents their incidence algebra as exact upper triangular matrices,
evaluates the classical functions (zeta, Mobius, chain counters) in
closed form at arbitrary coordinates, and ships a brute-force oracle
that re-derives every number by exhaustive counting.
"""

from .errors import (AdmissibilityError, CobwebError, NonInvertibleError,
                     NotInPosetError, PosetMismatchError, SequenceError)
from .sequence import CobwebSequence, parse_sequence
from .poset import (FinitePoset, Vertex, build_subposet, covers, leq,
                    level_width, lt, rank, validate_vertex)
from .incidence import (IncidenceFunction, add, chain_kernel, chi, convolve,
                        delta, eta, geometric_inverse_of_delta_minus, invert,
                        matrix_from_csv, matrix_to_csv, matrix_to_json_dict,
                        maximal_chain_kernel, mu, power, scale, sub,
                        to_matrix, zeta)
from .formulas import (card_interval, chain_kernel_at, chi_at, chi_pow_at,
                       count_all_chains, count_maximal_chains, down_set_sums,
                       eta_at, eta_pow_at, maximal_chain_kernel_at,
                       mobius_inversion, mu_at, zeta_at)
from .oracle import (ChainQuery, CheckFailure, CheckResult,
                     VerificationReport, count_all_chains_brute,
                     count_chains_of_length, count_maximal_chains_brute,
                     enumerate_chains, interval_size_brute,
                     moebius_by_recurrence, verify_suite)

__version__ = "0.1.0"
