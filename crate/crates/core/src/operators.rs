//! Kinematic operators of the planar rotor on band-limited states.
//!
//! The angular momentum J acts diagonally on the e_k basis (J e_k = k e_k),
//! the rotation group V_y = e^{-iyJ} multiplies coefficients by e^{-iyk},
//! and the ladder group U_n = e^{inΘ} shifts the index, e_k ↦ e_{k+n}. The
//! angle operator Θ itself never acts as a coefficient-space endomorphism
//! here: its spectral measure and the eigenoperator decompositions of Borel
//! functions f(Θ̃) are exposed in point space, through quadrature pairings.

use crate::error::{Error, Result};
use crate::spectral::{inner_product, l2_distance, CoeffSeq, SampledFunction};
use num_complex::Complex64;
use std::f64::consts::PI;

/// A state carried by a truncated coefficient window.
#[derive(Debug, Clone)]
pub struct BandLimitedState {
    coeffs: CoeffSeq,
    normalized: bool,
}

impl BandLimitedState {
    pub fn new(coeffs: CoeffSeq) -> Self {
        Self {
            coeffs,
            normalized: false,
        }
    }

    /// Normalize to unit L² norm.
    pub fn normalized(coeffs: CoeffSeq) -> Result<Self> {
        let n = coeffs.norm();
        if n <= 0.0 || !n.is_finite() {
            return Err(Error::Domain("cannot normalize a zero state".into()));
        }
        Ok(Self {
            coeffs: coeffs.scale(Complex64::new(1.0 / n, 0.0)),
            normalized: true,
        })
    }

    /// The k-th basis state e_k (already unit norm).
    pub fn basis(k: i64) -> Self {
        Self {
            coeffs: CoeffSeq::basis(k),
            normalized: true,
        }
    }

    pub fn coeffs(&self) -> &CoeffSeq {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> CoeffSeq {
        self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized && (self.norm() - 1.0).abs() <= 1e-10
    }

    fn with_map(&self, keep_norm: bool, f: impl Fn(i64, Complex64) -> Complex64) -> Self {
        Self {
            coeffs: self.coeffs.map(f),
            normalized: self.normalized && keep_norm,
        }
    }
}

/// J: coefficient map f_k ↦ k·f_k.
pub fn angular_momentum(f: &BandLimitedState) -> BandLimitedState {
    f.with_map(false, |k, c| c * k as f64)
}

/// H = J²/(2I): coefficient map f_k ↦ (k²/2I)·f_k, with ħ = 1.
pub fn hamiltonian(f: &BandLimitedState, inertia: f64) -> Result<BandLimitedState> {
    if inertia <= 0.0 || !inertia.is_finite() {
        return Err(Error::Domain(format!(
            "moment of inertia must be positive, got {inertia}"
        )));
    }
    Ok(f.with_map(false, |k, c| c * ((k * k) as f64 / (2.0 * inertia))))
}

/// V_y = e^{-iyJ}: coefficient map f_k ↦ e^{-iyk} f_k. In point space this
/// is the rotation f(x) ↦ f(x-y); it is unitary, so normalization survives.
pub fn rotate(f: &BandLimitedState, y: f64) -> BandLimitedState {
    f.with_map(true, |k, c| c * Complex64::from_polar(1.0, -y * k as f64))
}

/// U_n = e^{inΘ}: index shift e_k ↦ e_{k+n}. The window grows by |n| so no
/// coefficient is lost; unitary.
pub fn ladder(f: &BandLimitedState, n: i64) -> BandLimitedState {
    let old = f.coeffs();
    let nb = old.bandwidth() + n.unsigned_abs() as usize;
    let mut out = CoeffSeq::zeros(nb);
    for k in -(nb as i64)..=(nb as i64) {
        out.set(k, old.coeff(k - n));
    }
    BandLimitedState {
        coeffs: out,
        normalized: f.normalized,
    }
}

/// ‖U_n V_y f − e^{iyn} V_y U_n f‖: the defect of the Weyl commutation
/// relation, which vanishes identically in exact arithmetic.
pub fn weyl_defect(n: i64, y: f64, f: &BandLimitedState) -> f64 {
    let lhs = ladder(&rotate(f, y), n);
    let rhs = rotate(&ladder(f, n), y);
    let phase = Complex64::from_polar(1.0, y * n as f64);
    l2_distance(lhs.coeffs(), &rhs.coeffs().scale(phase))
}

// ---------------------------------------------------------------------------
// Spectral measure of the angle operator
// ---------------------------------------------------------------------------

/// A finite union of pairwise disjoint half-open intervals [a, b) ⊆ [-π, π).
#[derive(Debug, Clone)]
pub struct BorelSet {
    intervals: Vec<(f64, f64)>,
}

impl BorelSet {
    pub fn new(mut intervals: Vec<(f64, f64)>) -> Result<Self> {
        for &(a, b) in &intervals {
            if !(a >= -PI && a < b && b <= PI) {
                return Err(Error::Domain(format!(
                    "interval [{a}, {b}) is not inside [-π, π)"
                )));
            }
        }
        intervals.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in intervals.windows(2) {
            if w[0].1 > w[1].0 {
                return Err(Error::Domain(format!(
                    "intervals [{}, {}) and [{}, {}) overlap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(Self { intervals })
    }

    pub fn full_circle() -> Self {
        Self {
            intervals: vec![(-PI, PI)],
        }
    }

    pub fn empty() -> Self {
        Self { intervals: vec![] }
    }

    pub fn indicator(&self, theta: f64) -> f64 {
        for &(a, b) in &self.intervals {
            if theta >= a && theta < b {
                return 1.0;
            }
        }
        0.0
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }
}

/// Result of applying the spectral measure E(B): the re-projected state and
/// the L² mass dropped by the bandwidth truncation. Idempotence of E(B)
/// holds only in the grid/bandwidth limit, so the loss is reported rather
/// than hidden.
#[derive(Debug, Clone)]
pub struct MeasureOutcome {
    pub state: BandLimitedState,
    pub truncation_loss: f64,
    pub grid_size: usize,
}

/// E(B) f: point-space multiplication by the indicator of B, re-projected
/// onto the bandwidth-`out_bandwidth` window with an M-point grid.
pub fn spectral_measure(
    f: &BandLimitedState,
    b: &BorelSet,
    out_bandwidth: usize,
    grid_size: usize,
) -> Result<MeasureOutcome> {
    if grid_size < 2 * out_bandwidth + 1 {
        return Err(Error::GridTooSmall {
            grid: grid_size,
            required: 2 * out_bandwidth + 1,
        });
    }
    let mut samples = f.coeffs().evaluate(grid_size);
    let h = 2.0 * PI / grid_size as f64;
    for j in 0..grid_size {
        let theta = -PI + h * j as f64;
        let ind = b.indicator(theta);
        samples.samples_mut()[j] *= ind;
    }
    let quad_mass = samples.quad_norm_sqr();
    let coeffs = CoeffSeq::from_samples(&samples, out_bandwidth)?;
    let kept = coeffs.norm().powi(2);
    Ok(MeasureOutcome {
        state: BandLimitedState::new(coeffs),
        truncation_loss: (quad_mass - kept).max(0.0),
        grid_size,
    })
}

// ---------------------------------------------------------------------------
// Eigenoperator decompositions of Borel functions of the angle
// ---------------------------------------------------------------------------

/// ⟨Π(θ)φ, ψ⟩ = φ*(θ)·ψ(θ), the matrix element of the generalised projector
/// onto the angle eigenfunction at θ.
pub fn projector_pairing(theta: f64, phi: &CoeffSeq, psi: &CoeffSeq) -> Complex64 {
    phi.eval_at(theta).conj() * psi.eval_at(theta)
}

/// Reported accuracy order of a Borel-function quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorOrder {
    /// Integrand is smooth and periodic on the circle: error decays faster
    /// than any power of 1/M.
    Spectral,
    /// Integrand is smooth on the interval only: composite trapezoid error
    /// O(M⁻ᵏ) with the stated k.
    Algebraic(u32),
}

#[derive(Debug, Clone, Copy)]
pub struct BorelPairing {
    pub value: Complex64,
    pub nodes: usize,
    pub order: ErrorOrder,
}

/// ⟨f(Θ̃)φ, ψ⟩ = ∫ f(θ) φ*(θ) ψ(θ) dθ by the closed trapezoid rule with M
/// panels (endpoints half-weighted, so periodic integrands lose nothing).
pub fn borel_decomposition_pairing(
    f: impl Fn(f64) -> Complex64,
    phi: &CoeffSeq,
    psi: &CoeffSeq,
    panels: usize,
) -> Result<BorelPairing> {
    if panels < 2 {
        return Err(Error::Domain("quadrature needs at least 2 panels".into()));
    }
    let h = 2.0 * PI / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..=panels {
        let theta = -PI + h * j as f64;
        let fv = f(theta);
        if !fv.re.is_finite() || !fv.im.is_finite() {
            return Err(Error::NonFinite {
                context: format!("Borel function at θ = {theta}"),
            });
        }
        let w = if j == 0 || j == panels { 0.5 } else { 1.0 };
        acc += fv * phi.eval_at(theta).conj() * psi.eval_at(theta) * w;
    }
    let ends_match = (f(-PI) - f(PI)).norm() <= 1e-12 * (1.0 + f(PI).norm());
    Ok(BorelPairing {
        value: acc * h,
        nodes: panels + 1,
        order: if ends_match {
            ErrorOrder::Spectral
        } else {
            ErrorOrder::Algebraic(2)
        },
    })
}

/// Richardson-extrapolated Borel pairing: evaluates at M and 2M panels and
/// removes the leading O(M⁻²) boundary term. Use for non-periodic weights
/// like θⁿ when 1e-8 class accuracy is needed.
pub fn borel_decomposition_pairing_refined(
    f: impl Fn(f64) -> Complex64 + Copy,
    phi: &CoeffSeq,
    psi: &CoeffSeq,
    panels: usize,
) -> Result<BorelPairing> {
    let coarse = borel_decomposition_pairing(f, phi, psi, panels)?;
    let fine = borel_decomposition_pairing(f, phi, psi, 2 * panels)?;
    let fine2 = borel_decomposition_pairing(f, phi, psi, 4 * panels)?;
    let r1 = (fine.value * 4.0 - coarse.value) / 3.0;
    let r2 = (fine2.value * 4.0 - fine.value) / 3.0;
    let value = (r2 * 16.0 - r1) / 15.0;
    Ok(BorelPairing {
        value,
        nodes: 4 * panels + 1,
        order: match fine.order {
            ErrorOrder::Spectral => ErrorOrder::Spectral,
            ErrorOrder::Algebraic(_) => ErrorOrder::Algebraic(6),
        },
    })
}
