//! Seeded Monte Carlo ensembles compared bin by bin with the analytic results.
//!
//! Samples are generated in parallel and reduced in index order, so every
//! number in a report is independent of the thread count.

mod experiments;
mod report;

pub use experiments::{
    run_density_experiment, run_mean_gradient_experiment, run_nearest_vortex_experiment,
    run_pair_correlation_experiment, run_phase_integral_experiment, DensityReport, GradientReport,
    NearestVortexReport, PairCorrelationReport, PhaseIntegralReport, DEFAULT_DOMAIN_RADIUS, DEFAULT_SAMPLES,
};
pub use report::{ComparisonBin, ComparisonReport, OUTLIER_ALLOWANCE, Z_THRESHOLD};
