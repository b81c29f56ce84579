//! Aharonov–Bohm waves: the deterministic scattering solution and seeded
//! Gaussian ensembles of them sampled on square grids.

mod ensemble;
mod field;
mod plane;

pub use ensemble::{
    modal_normal, sample_modal_coefficients, EnsembleSpec, ModalCoefficients, RadialTable, Truncation,
};
pub use field::{
    deterministic_ab_wave, synthesize_ab_field, synthesize_isotropic_field, FieldSynthesizer, Grid, SampledField,
    DEFAULT_GRID_H, MAX_GRID_H,
};
pub use plane::{synthesize_plane_wave_field, PlaneWaveSample};
