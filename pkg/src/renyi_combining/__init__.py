"""Conditional Renyi entropies and information-combining bounds with
classical and quantum side information.

The public surface mirrors the layered build: scalar binary-entropy helpers,
classical joint distributions, hybrid classical-quantum states, binary-input
CQ channels, extremal channel families, and the seeded experiment harness.
"""

from .binary import (
    ALPHA_ONE_TOL,
    LN2,
    Alpha,
    binary_renyi_entropy,
    inverse_binary_renyi,
    is_shannon_order,
    star,
)
from .channels import (
    CQChannel,
    DualityContractError,
    channel_entropy,
    check_entropy,
    combine_cq,
    dual_channel,
    exact_check_entropy_alpha2,
    exact_variable_entropy_half,
    pgm_operators,
    pretty_good_guess,
    symmetry_check,
    transform_channel,
    variable_entropy,
)
from .classical import (
    JointDistribution,
    arimoto_entropy,
    bec,
    bec_bound_arimoto,
    bec_bound_hayashi,
    bsc,
    bsc_bound_arimoto,
    bsc_bound_hayashi,
    chain_rule_transform,
    combine_check,
    combine_variable,
    hayashi_entropy,
    inverse_chain_rule_transform,
)
from .families import (
    BoundCurve,
    bec_bound_sandwiched,
    bec_channel,
    bsc_channel,
    bsc_psc_bound,
    channel_for_entropy,
    curve_family,
    family_parameter_for_entropy,
    parse_channel_shorthand,
    psc_channel,
    write_curves_csv,
)
from .harness import (
    ExperimentConfig,
    ScatterRecord,
    SuiteReport,
    ViolationReport,
    run_scatter,
    run_verify,
    sample_random_channel,
    write_scatter_csv,
)
from .linalg import (
    eig_hermitian,
    matrix_power_on_support,
    partial_trace,
    spectral_entropy,
)
from .states import (
    HybridState,
    classical_embedding,
    conditional_renyi_entropy,
    petz_down_entropy,
    petz_up_entropy,
    quantum_chain_transform,
    sandwiched_down_entropy,
    von_neumann_conditional,
)

__version__ = "0.1.0"
