//! Numerical calculus for quantum kinematics on the unit circle.
//!
//! The crate provides, in one consistent basis convention
//! (e_k(θ) = e^{ikθ}/√(2π) on [-π, π)):
//!
//! - [`spectral`] — coefficient sequences, transforms, inner products and
//!   empirical growth classification of coefficient tails;
//! - [`distribution`] — periodic distributions as slow-growth coefficient
//!   generators: Dirac measures, dual pairing, translations, derivatives and
//!   the generalised sesquilinear product;
//! - [`operators`] — the rotor's kinematic operators J, H, V_y, U_n, the
//!   spectral measure of the angle and its eigenoperator decompositions;
//! - [`colombeau`] — ε-nets of smooth periodic functions: the wrapped
//!   Gaussian family, the minimum-uncertainty residual and its analytic
//!   bound, moderate/negligible certification, distribution embedding and
//!   association checks;
//! - [`uncertainty`] — circular means, interval variances, the ΔΘ·ΔJ product
//!   and the shifted state family;
//! - [`cli`] — batch runners behind the `planar-rotor` binary.
//!
//! Run `cargo run --example minimum_uncertainty` (or any other example) for
//! a guided tour; the acceptance suite lives in `tests/acceptance.rs`.

pub mod cli;
pub mod colombeau;
pub mod distribution;
pub mod error;
pub mod operators;
pub mod quad;
pub mod spectral;
pub mod uncertainty;

pub use error::{Error, Result};

/// Commonly used types and functions.
pub mod prelude {
    pub use crate::colombeau::{
        association_check, classify_net, embed_distribution, mudec_certificate, residual_bound,
        ClassifyParams, EpsGrid, GeneralizedNumber, GrowthVerdict, Net, NetTag,
    };
    pub use crate::distribution::{
        sesquilinear_product, DistributionSpectrum, PairingResult,
    };
    pub use crate::error::{Error, Result};
    pub use crate::operators::{
        angular_momentum, borel_decomposition_pairing, hamiltonian, ladder, projector_pairing,
        rotate, spectral_measure, weyl_defect, BandLimitedState, BorelSet,
    };
    pub use crate::spectral::{
        classify_coeffs, classify_generator, inner_product, CoeffSeq, GrowthClass, GrowthParams,
        GrowthTag, SampledFunction,
    };
    pub use crate::uncertainty::{
        mean_direction, mean_j, shift_state, uncertainty_product, uncertainty_report_raw,
        variance_j, variance_theta, UncertaintyReport,
    };
}
