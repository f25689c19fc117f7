"""Pairwise quantum discord and entanglement of symmetric multiqubit states."""

__version__ = "0.1.0"

from .xstate import (  # noqa: E402
    XState,
    MeasurementAngles,
    ConditionalOutcome,
    CorrelationReport,
    binary_entropy,
    xstate_spectrum,
    joint_entropy,
    reduced_entropy,
    mutual_information,
    conditional_outcome,
    conditional_entropy,
    optimal_phi,
    s0_s1,
    discord_compact,
    concurrence_closed,
    eof_from_concurrence,
    full_report,
)
from .families import (  # noqa: E402
    CollectiveExpectations,
    SymmetricState,
    Dicke,
    Superposition,
    SCS,
    expectations_to_xstate,
    dicke_expectations,
    dicke_xstate,
    superposition_expectations,
    scs_expectations,
    scs_coefficients,
    expectation_oracle,
    family_xstate,
    scs_large_n_xstate,
    scs_large_n_discord,
)
from .oracle import discord_numeric, concurrence_rmatrix, tightness_scan  # noqa: E402
