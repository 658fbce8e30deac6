"""
Time averages and temporal standard deviations: simulated, closed-form,
asymptotic and resonance-sum.
"""
from .closed_form import (
    TrigSums,
    alpha_minimiser,
    asymptotic_sigma_origin,
    closed_form_sigma,
    exact_profile,
    relative_error,
    riemann_limits,
    sigma3_alpha,
    sigma3_profile,
    sigma_origin,
    trig_sums,
)
from .empirical import (
    RunMoments,
    default_mean,
    empirical_profile,
    empirical_sigma,
    run_moments,
    time_averaged_distribution,
)
from .profile import Method, SigmaProfile, peak_sites, top_sites
from .resonance import (
    ResonanceTerm,
    resonance_profile,
    resonance_sigma,
    resonance_terms,
    resonant_tuples,
    rule_tuples,
)
