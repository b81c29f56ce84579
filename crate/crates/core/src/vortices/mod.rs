//! Vortex detection by discrete phase winding, circle windings, and the
//! estimators built from detected vortices.

mod detect;
mod histogram;
mod pair;
mod polar;
mod winding;

pub use detect::{detect_vortices, origin_block_charge, plaquette_winding, write_vortex_csv, Vortex, VortexSet};
pub use histogram::{accumulate_radial, RadialHistogram};
pub use pair::{pair_correlation, PairCorrelation};
pub use polar::{nearest_vortex, PolarMesh};
pub use winding::{boundary_winding, circle_winding, modal_circle_winding};
