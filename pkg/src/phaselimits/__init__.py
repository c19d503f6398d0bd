"""Quantum limits on perfectly distinguishable phase shifts in multimode interferometers."""

from .bounds import (
    BoundKind,
    BoundReport,
    de_broglie_wavelength,
    eta_opt,
    general_phi_bound,
    general_phitot_bound,
    limits_table,
    manifold_bounds,
    nphoton_phi_bound,
    nphoton_phitot_bound,
    solve_eta_opt,
)
from .certify import (
    CertificateReport,
    LambdaScheme,
    ScanRecord,
    SearchSpec,
    linear_profile_demo,
    min_phi_search,
    min_phitot_search,
    overlap_scan,
)
from .fock import (
    PureState,
    enumerate_manifold,
    inner_product,
    manifold_projection,
    mean_photon_number,
)
from .phase import (
    PhaseProfile,
    ReducedProfile,
    apply_phase_shift,
    is_distinguishable,
    is_manifoldwise_distinguishable,
    manifold_overlaps,
    overlap_after_shift,
    reduce_profile,
    sigma_of_manifold,
    total_phase,
)
from .states import (
    StateRecipe,
    check_stationarity,
    make_omega_N,
    make_phi_N,
    make_upsilon_N,
    make_xi,
    reduce_to_vacuum_plus_manifold,
)

__version__ = "0.1.0"
