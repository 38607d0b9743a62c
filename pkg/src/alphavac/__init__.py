"""Quantum correlations of scalar-field modes in de Sitter alpha-vacua.

Negativity, mutual information and quantum discord between an inertial
observer and a static observer's region-I mode, for the whole family of
de Sitter invariant vacua labelled by ``alpha``.
"""

__version__ = "0.1.0"

from .correlations import (  # noqa: E402
    CorrelationReport,
    Entropies,
    MeasurementDirection,
    MinimizerConfig,
    NegativityVariant,
    conditional_entropy,
    conditional_states,
    correlation_report,
    discord,
    discord_from_matrix,
    entropies,
    measurement_projectors,
    mutual_information_closed,
    mutual_information_spectral,
    negativity_closed,
    negativity_spectral,
    von_neumann_entropy,
)
from .errors import *  # noqa: E402,F401,F403
from .fock import (  # noqa: E402
    Basis,
    DensityMatrix,
    TruncatedState,
    alpha_vacuum_state,
    joint_density_matrix,
    one_particle_state,
    partial_transpose_alice,
    reduce_alice,
    reduce_rob,
)
from .vacuum import (  # noqa: E402
    EUCLIDEAN,
    EffectiveParams,
    ModeSpec,
    Truncation,
    alpha_for_T,
    effective_parameters,
    tail_mass,
    truncation_level,
)
