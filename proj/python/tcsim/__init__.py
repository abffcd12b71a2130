"""Simulator for autonomous stabilization of a parametrically coupled qubit.

Thin Python layer over the C++ core: circuit quantization, rotating-frame
Hamiltonians, dressed-frame rates and fidelity formulas, and the Lindblad
master-equation engine. All frequencies are angular (rad/s); multiply
ordinary frequencies by 2*pi at the boundary.
"""

from ._core import (  # noqa: F401
    CircuitParams,
    DriveSettings,
    Liouvillian,
    SystemParams,
    TwoModeModel,
    __version__,
    bloch_vector,
    build_liouvillian,
    chi_from_coupling,
    corrected_angle,
    coupler_inductance,
    coupling_vs_flux,
    create,
    destroy,
    dominant_frequency,
    dressed_rates,
    dressing_unitary,
    eig_hermitian,
    expect,
    g_from_number_splitting,
    golden_rule_rate,
    h_blue_rotating,
    h_longitudinal,
    h_purple_rotating,
    h_red_rotating,
    h_static,
    interaction_comparison,
    modulation_harmonics,
    nbar_max,
    number,
    optimal_detunings,
    partial_trace_cavity,
    pop_main_text,
    pop_strong_coupling,
    pop_weak_coupling,
    propagate,
    quantize,
    qubit_cavity_ket,
    rabi_rate_calibration,
    sigma_minus,
    sigma_plus,
    sigma_x,
    sigma_y,
    sigma_z,
    spectroscopy_map,
    stabilization_sweep,
    steady_state,
    tensor,
    vacuum_rabi_trace,
)
