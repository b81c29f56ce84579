//! Quantities derived from the moments: densities and their asymptotics,
//! phase integrals, excess counts, nearest-vortex statistics and the
//! isotropic reference correlations.

mod curve;
mod densities;
mod excess;
mod isotropic;
mod nearest;

pub use curve::{linear_grid, tabulate, Normalization, Quantity, RadialCurve};
pub use densities::{
    asymptotic_large_r, charge_density, densities, expansion_small_r, mean_phase_gradient_azimuthal, phase_integral,
    signed_densities, small_r_coefficients, vortex_density, IsotropicConstants, DELTA_IRW,
    MEAN_PHASE_GRADIENT_RADIAL,
};
pub use excess::{
    mean_excess, phase_charge_power_law, total_charge, total_charge_by_quadrature, vortex_excess, HEAD_RADIUS,
};
pub use isotropic::{
    charge_correlation_asymptote, charge_correlation_asymptote_printed, isotropic_charge_correlation,
    isotropic_like_unlike, number_correlation_asymptote,
};
pub use nearest::{
    nearest_vortex_cdf, nearest_vortex_conditional_mean, nearest_vortex_conditional_mean_by_quadrature,
    nearest_vortex_partial_moment, nearest_vortex_pdf, nearest_vortex_probability,
};
