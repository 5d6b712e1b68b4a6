"""Information-disturbance trade-off in generalized entanglement swapping."""

from .errors import *  # noqa: F401,F403
from .measure import (
    TradeoffReport,
    chsh_max,
    com_closed_forms,
    correlation_matrix,
    direct_info_bell_diagonal,
    info,
    m_value,
    rank2_closed_forms,
    tradeoff_report,
    white_noise_closed_forms,
)
from .linalg import (
    conjugate_in_computational_basis,
    dagger,
    hermitian_eig,
    kron,
    psd_sqrt,
    reduced_density,
)
from .povm import (
    BellDiagonalPovmSpec,
    Povm,
    bell_diagonal_family,
    bell_measurement,
    com_from_basis,
    povm_from_file,
    povm_to_file,
    random_povm,
    rank2_family,
    validate,
    white_noise_family,
)
from .states import (
    bell_diagonal_state,
    bell_sign_matrix,
    bell_vector,
    initial_state,
    is_ppt_separable,
)
from .swap import (
    OutcomeRecord,
    bell_diagonal_reduced_closed_form,
    outcome_probability,
    post_measurement_state,
    rho14_closed_form,
    run_swap,
)

__version__ = "0.1.0"

__all__ = [
    "BellDiagonalPovmSpec",
    "OutcomeRecord",
    "Povm",
    "TradeoffReport",
    "bell_diagonal_family",
    "bell_diagonal_reduced_closed_form",
    "bell_diagonal_state",
    "bell_measurement",
    "bell_sign_matrix",
    "bell_vector",
    "chsh_max",
    "com_closed_forms",
    "com_from_basis",
    "conjugate_in_computational_basis",
    "correlation_matrix",
    "dagger",
    "direct_info_bell_diagonal",
    "hermitian_eig",
    "info",
    "initial_state",
    "is_ppt_separable",
    "kron",
    "m_value",
    "outcome_probability",
    "post_measurement_state",
    "povm_from_file",
    "povm_to_file",
    "psd_sqrt",
    "random_povm",
    "rank2_closed_forms",
    "rank2_family",
    "reduced_density",
    "rho14_closed_form",
    "run_swap",
    "tradeoff_report",
    "validate",
    "white_noise_closed_forms",
    "white_noise_family",
]
