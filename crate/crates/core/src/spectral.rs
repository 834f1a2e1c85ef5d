//! Fourier coefficient arithmetic on the unit circle.
//!
//! Everything in this crate trades in two-sided coefficient arrays against
//! the orthonormal basis e_k(θ) = e^{ikθ}/√(2π), with point values taken on
//! the uniform grid θ_j = -π + 2πj/M (endpoint π excluded). Transforms are
//! direct O(M·N) sums; the accuracy contract is 1e-12 relative agreement on
//! round trips, not bit-exactness.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// 1/√(2π), the basis normalization constant.
#[inline]
pub fn inv_sqrt_2pi() -> f64 {
    1.0 / (2.0 * PI).sqrt()
}

/// Reduce an angle to the canonical half-open interval [-π, π).
#[inline]
pub fn reduce_angle(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y >= PI {
        y - 2.0 * PI
    } else {
        y
    }
}

// ---------------------------------------------------------------------------
// CoeffSeq
// ---------------------------------------------------------------------------

/// Two-sided truncated coefficient array: entry k ∈ [-N, N] multiplies e_k.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    bandwidth: usize,
    coeffs: Vec<Complex64>,
}

impl CoeffSeq {
    pub fn zeros(bandwidth: usize) -> Self {
        Self {
            bandwidth,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * bandwidth + 1],
        }
    }

    /// The basis element e_k as a coefficient sequence (bandwidth |k|).
    pub fn basis(k: i64) -> Self {
        let mut s = Self::zeros(k.unsigned_abs() as usize);
        s.set(k, Complex64::new(1.0, 0.0));
        s
    }

    /// Build from a raw array of length 2N+1 ordered k = -N..N.
    pub fn from_coeffs(bandwidth: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * bandwidth + 1 {
            return Err(Error::Domain(format!(
                "coefficient array has length {}, expected {}",
                coeffs.len(),
                2 * bandwidth + 1
            )));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "coefficient array".into(),
            });
        }
        Ok(Self { bandwidth, coeffs })
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// Coefficient of e_k; zero outside the stored window.
    #[inline]
    pub fn coeff(&self, k: i64) -> Complex64 {
        let n = self.bandwidth as i64;
        if k < -n || k > n {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + n) as usize]
        }
    }

    #[inline]
    pub fn set(&mut self, k: i64, value: Complex64) {
        let n = self.bandwidth as i64;
        assert!(k >= -n && k <= n, "index {k} outside bandwidth {n}");
        self.coeffs[(k + n) as usize] = value;
    }

    /// Iterate (k, c_k) over the stored window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let n = self.bandwidth as i64;
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - n, c))
    }

    /// New sequence with each coefficient replaced by `f(k, c_k)`.
    pub fn map(&self, f: impl Fn(i64, Complex64) -> Complex64) -> Self {
        let n = self.bandwidth as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| f(i as i64 - n, c))
            .collect();
        Self {
            bandwidth: self.bandwidth,
            coeffs,
        }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        self.map(|_, c| c * z)
    }

    /// Pointwise sum; the result takes the larger bandwidth.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.bandwidth.max(other.bandwidth);
        let mut out = Self::zeros(n);
        for k in -(n as i64)..=(n as i64) {
            out.set(k, self.coeff(k) + other.coeff(k));
        }
        out
    }

    /// L² norm, √(Σ |c_k|²).
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Truncated Fourier synthesis at a single angle.
    pub fn eval_at(&self, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.iter() {
            if c != Complex64::new(0.0, 0.0) {
                acc += c * Complex64::from_polar(1.0, k as f64 * theta);
            }
        }
        acc * inv_sqrt_2pi()
    }

    /// Pointwise synthesis f(θ_j) = Σ c_k e_k(θ_j) on an M-point grid.
    pub fn evaluate(&self, grid_size: usize) -> SampledFunction {
        assert!(grid_size >= 1);
        let n = self.bandwidth as i64;
        let h = 2.0 * PI / grid_size as f64;
        let samples = (0..grid_size)
            .map(|j| {
                let theta = -PI + h * j as f64;
                // run k from -N to N with a phase recurrence
                let step = Complex64::from_polar(1.0, theta);
                let mut w = Complex64::from_polar(1.0, -(n as f64) * theta);
                let mut acc = Complex64::new(0.0, 0.0);
                for k in -n..=n {
                    acc += self.coeffs[(k + n) as usize] * w;
                    w *= step;
                }
                acc * inv_sqrt_2pi()
            })
            .collect();
        SampledFunction { samples }
    }

    /// Projection onto the bandwidth-N window by the periodic trapezoid rule:
    /// c_k = (2π/M) Σ_j f(θ_j) e^{-ikθ_j} / √(2π).
    ///
    /// Spectrally accurate for smooth periodic f; exact up to rounding for
    /// band-limited f when M ≥ 2N+1.
    pub fn from_samples(f: &SampledFunction, bandwidth: usize) -> Result<Self> {
        let m = f.grid_size();
        if m < 2 * bandwidth + 1 {
            return Err(Error::GridTooSmall {
                grid: m,
                required: 2 * bandwidth + 1,
            });
        }
        let n = bandwidth as i64;
        let h = 2.0 * PI / m as f64;
        let scale = h * inv_sqrt_2pi();
        let mut coeffs = Vec::with_capacity(2 * bandwidth + 1);
        for k in -n..=n {
            let step = Complex64::from_polar(1.0, -(k as f64) * h);
            // phase at θ_0 = -π
            let mut w = Complex64::from_polar(1.0, k as f64 * PI);
            // compensated summation: coefficients can sit many orders below
            // the sample magnitudes and plain accumulation would drown them
            let mut sum = Complex64::new(0.0, 0.0);
            let mut comp = Complex64::new(0.0, 0.0);
            for j in 0..m {
                let term = f.samples[j] * w - comp;
                let t = sum + term;
                comp = (t - sum) - term;
                sum = t;
                w *= step;
            }
            coeffs.push(sum * scale);
        }
        Ok(Self { bandwidth, coeffs })
    }
}

/// Sesquilinear inner product Σ_k f_k* g_k (conjugate-linear in `f`).
///
/// Coefficients outside either window count as zero, so sequences of
/// different bandwidths pair without padding.
pub fn inner_product(f: &CoeffSeq, g: &CoeffSeq) -> Complex64 {
    let n = f.bandwidth.min(g.bandwidth) as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        acc += f.coeff(k).conj() * g.coeff(k);
    }
    acc
}

/// Largest per-coefficient difference over the union of the two windows.
pub fn max_abs_diff(a: &CoeffSeq, b: &CoeffSeq) -> f64 {
    let n = a.bandwidth.max(b.bandwidth) as i64;
    (-n..=n)
        .map(|k| (a.coeff(k) - b.coeff(k)).norm())
        .fold(0.0, f64::max)
}

/// L² distance over the union of the two windows.
pub fn l2_distance(a: &CoeffSeq, b: &CoeffSeq) -> f64 {
    let n = a.bandwidth.max(b.bandwidth) as i64;
    (-n..=n)
        .map(|k| (a.coeff(k) - b.coeff(k)).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

// ---------------------------------------------------------------------------
// SampledFunction
// ---------------------------------------------------------------------------

/// Point values on the uniform grid θ_j = -π + 2πj/M, j = 0..M-1.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    samples: Vec<Complex64>,
}

impl SampledFunction {
    pub fn from_fn(grid_size: usize, f: impl Fn(f64) -> Complex64) -> Self {
        assert!(grid_size >= 1);
        let h = 2.0 * PI / grid_size as f64;
        Self {
            samples: (0..grid_size).map(|j| f(-PI + h * j as f64)).collect(),
        }
    }

    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    pub fn theta(&self, j: usize) -> f64 {
        -PI + 2.0 * PI * j as f64 / self.samples.len() as f64
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.samples
    }

    /// (2π/M) Σ_j |f(θ_j)|², the quadrature estimate of ∫|f|².
    pub fn quad_norm_sqr(&self) -> f64 {
        let h = 2.0 * PI / self.samples.len() as f64;
        self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>() * h
    }
}

// ---------------------------------------------------------------------------
// Growth classification
// ---------------------------------------------------------------------------

/// Strength-ordered verdict for a coefficient tail: rapid decay implies
/// square summability implies slow growth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthTag {
    RapidDecay,
    SquareSummable,
    SlowGrowth,
    Unclassified,
}

/// Classification result with its fitted evidence. `exponent` is the slope
/// of log|c_k| against log(1+k²) over the tail window; `fit_residual` is the
/// RMS fit residual expressed in slope units.
#[derive(Debug, Clone)]
pub struct GrowthClass {
    pub tag: GrowthTag,
    pub exponent: f64,
    pub fit_residual: f64,
}

impl GrowthClass {
    pub fn slow_growth(exponent: f64) -> Self {
        Self {
            tag: GrowthTag::SlowGrowth,
            exponent,
            fit_residual: 0.0,
        }
    }

    pub fn rapid_decay(exponent: f64) -> Self {
        Self {
            tag: GrowthTag::RapidDecay,
            exponent,
            fit_residual: 0.0,
        }
    }
}

/// Tunable thresholds for the empirical growth tests. The limits being
/// probed are asymptotic statements; a finite-window verdict is evidence,
/// not proof, so every knob is exposed instead of hard-coded.
#[derive(Debug, Clone)]
pub struct GrowthParams {
    /// Largest polynomial order tested, both for the rapid-decay weighting
    /// (1+k²)^j and as the slow-growth slope cap.
    pub j_max: u32,
    /// Fraction of the index range forming the tail window [fK, K].
    pub tail_fraction: f64,
    /// Largest admissible RMS fit residual, in log-log slope units.
    pub slope_residual_tol: f64,
    /// Dyadic block-sum ratio below which Σ|c_k|² counts as convergent.
    pub block_ratio_max: f64,
    /// Safety margin on the square-summability slope threshold -1/4.
    pub sq_slope_margin: f64,
}

impl Default for GrowthParams {
    fn default() -> Self {
        Self {
            j_max: 8,
            tail_fraction: 0.5,
            slope_residual_tol: 0.1,
            block_ratio_max: 0.75,
            sq_slope_margin: 0.05,
        }
    }
}

/// Classify the tail of a stored coefficient window (K = bandwidth).
pub fn classify_coeffs(c: &CoeffSeq, params: &GrowthParams) -> Result<GrowthClass> {
    classify_generator(|k| c.coeff(k), c.bandwidth(), params)
}

/// Classify a coefficient generator sampled up to |k| = k_max.
pub fn classify_generator(
    f: impl Fn(i64) -> Complex64,
    k_max: usize,
    params: &GrowthParams,
) -> Result<GrowthClass> {
    if k_max < 16 {
        return Err(Error::Domain(format!(
            "growth classification needs k_max >= 16, got {k_max}"
        )));
    }
    let k_lo = ((k_max as f64 * params.tail_fraction).floor() as usize).max(2);

    // tail magnitudes, both signs, ordered by |k|
    let mut mags: Vec<(usize, f64)> = Vec::with_capacity(2 * (k_max - k_lo + 1));
    for ka in k_lo..=k_max {
        for k in [-(ka as i64), ka as i64] {
            let v = f(k).norm();
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    context: format!("coefficient at k = {k}"),
                });
            }
            mags.push((ka, v));
        }
    }

    let nonzero: Vec<(usize, f64)> = mags.iter().copied().filter(|&(_, v)| v > 0.0).collect();
    if nonzero.is_empty() {
        return Ok(GrowthClass {
            tag: GrowthTag::RapidDecay,
            exponent: 0.0,
            fit_residual: 0.0,
        });
    }
    if nonzero.len() < 6 {
        // too sparse to fit anything
        return Ok(GrowthClass {
            tag: GrowthTag::Unclassified,
            exponent: f64::NAN,
            fit_residual: f64::NAN,
        });
    }

    // least-squares fit of ln|c_k| against ln(1+k²)
    let pts: Vec<(f64, f64)> = nonzero
        .iter()
        .map(|&(ka, v)| (((ka * ka) as f64 + 1.0).ln(), v.ln()))
        .collect();
    let (slope, _intercept, rms) = linear_fit(&pts);
    let x_span = pts.iter().map(|p| p.0).fold(f64::MIN, f64::max)
        - pts.iter().map(|p| p.0).fold(f64::MAX, f64::min);
    let residual = if x_span > 0.0 { rms / x_span } else { 0.0 };

    // rapid decay: |c_k|(1+k²)^j decreasing toward 0 for every tested j
    let rapid = (1..=params.j_max).all(|j| {
        let weighted: Vec<f64> = nonzero
            .iter()
            .map(|&(ka, v)| v.ln() + j as f64 * ((ka * ka) as f64 + 1.0).ln())
            .collect();
        let third = weighted.len() / 3;
        if third == 0 {
            return false;
        }
        let head: f64 = weighted[..third].iter().sum::<f64>() / third as f64;
        let tail: f64 = weighted[weighted.len() - third..].iter().sum::<f64>() / third as f64;
        tail < head
    });

    // square summability: dyadic block sums of |c_k|² shrink and the fitted
    // slope clears the -1/4 borderline
    let k_mid = (k_lo + k_max) / 2;
    let block = |lo: usize, hi: usize| -> f64 {
        mags.iter()
            .filter(|&&(ka, _)| ka >= lo && ka < hi)
            .map(|&(_, v)| v * v)
            .sum()
    };
    let t_in = block(k_lo, k_mid);
    let t_out = block(k_mid, k_max + 1);
    let sq_raw = t_out == 0.0
        || (t_in > 0.0
            && t_out <= params.block_ratio_max * t_in
            && slope <= -0.25 - params.sq_slope_margin);

    // slow growth: bounded by (1+k²)^j for a fitted j within the cap
    let slow_raw = slope <= params.j_max as f64 + 0.1 && residual <= params.slope_residual_tol;

    // the classes nest: each certificate implies the weaker ones
    let rapid = rapid;
    let sq = rapid || sq_raw;
    let slow = sq || slow_raw;

    let tag = if rapid {
        GrowthTag::RapidDecay
    } else if sq {
        GrowthTag::SquareSummable
    } else if slow {
        GrowthTag::SlowGrowth
    } else {
        GrowthTag::Unclassified
    };
    Ok(GrowthClass {
        tag,
        exponent: slope,
        fit_residual: residual,
    })
}

/// Least squares y = a·x + b; returns (a, b, rms residual).
pub(crate) fn linear_fit(pts: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let det = n * sxx - sx * sx;
    if det.abs() < 1e-300 {
        return (0.0, sy / n, 0.0);
    }
    let a = (n * sxy - sx * sy) / det;
    let b = (sy - a * sx) / n;
    let rms = (pts
        .iter()
        .map(|&(x, y)| {
            let r = y - (a * x + b);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    (a, b, rms)
}

// ---------------------------------------------------------------------------
// JSON form {"bandwidth": N, "re": [...], "im": [...]}
// ---------------------------------------------------------------------------

#[derive(serde::Serialize, serde::Deserialize)]
struct CoeffSeqJson {
    bandwidth: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl CoeffSeq {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CoeffSeqJson {
            bandwidth: self.bandwidth,
            re: self.coeffs.iter().map(|c| c.re).collect(),
            im: self.coeffs.iter().map(|c| c.im).collect(),
        })
        .expect("plain arrays always serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: CoeffSeqJson = serde_json::from_value(value.clone())?;
        if raw.re.len() != raw.im.len() {
            return Err(Error::Domain(
                "re/im arrays have different lengths".into(),
            ));
        }
        let coeffs = raw
            .re
            .iter()
            .zip(&raw.im)
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        Self::from_coeffs(raw.bandwidth, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn wrapped_gaussian(eps: f64, theta: f64) -> f64 {
        // Σ_{|k|≤6} e^{-(θ+2πk)²/ε} / √(πε)
        let mut s = 0.0;
        for k in -6i64..=6 {
            let x = theta + 2.0 * PI * k as f64;
            s += (-x * x / eps).exp();
        }
        s / (PI * eps).sqrt()
    }

    #[test]
    fn basis_element_transforms_to_unit_coefficient() {
        let f = SampledFunction::from_fn(64, |t| Complex64::from_polar(inv_sqrt_2pi(), t));
        let c = CoeffSeq::from_samples(&f, 4).unwrap();
        for k in -4i64..=4 {
            let expect = if k == 1 { 1.0 } else { 0.0 };
            assert!(
                (c.coeff(k) - Complex64::new(expect, 0.0)).norm() < 1e-14,
                "k={k}: {:?}",
                c.coeff(k)
            );
        }
    }

    #[test]
    fn constant_function_transforms_to_k0() {
        let f = SampledFunction::from_fn(32, |_| Complex64::new(inv_sqrt_2pi(), 0.0));
        let c = CoeffSeq::from_samples(&f, 4).unwrap();
        assert!((c.coeff(0) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        for k in [-4i64, -2, 1, 3] {
            assert!(c.coeff(k).norm() < 1e-15);
        }
    }

    #[test]
    fn wrapped_gaussian_coefficients_match_closed_form() {
        // coefficients of the wrapped Gaussian are e^{-εk²/4}/√(2π)
        let eps = 0.5;
        let f = SampledFunction::from_fn(512, |t| Complex64::new(wrapped_gaussian(eps, t), 0.0));
        let c = CoeffSeq::from_samples(&f, 32).unwrap();
        for k in -32i64..=32 {
            let expect = (-eps * (k * k) as f64 / 4.0).exp() * inv_sqrt_2pi();
            assert!(
                (c.coeff(k).re - expect).abs() < 1e-13 && c.coeff(k).im.abs() < 1e-13,
                "k={k}"
            );
        }
    }

    #[test]
    fn grid_too_small_is_rejected() {
        let f = SampledFunction::from_fn(8, |_| Complex64::new(1.0, 0.0));
        match CoeffSeq::from_samples(&f, 4) {
            Err(Error::GridTooSmall { grid: 8, required: 9 }) => {}
            other => panic!("expected sizing error, got {other:?}"),
        }
    }

    #[test]
    fn evaluate_constant_and_cosine() {
        let c = CoeffSeq::basis(0);
        let s = c.evaluate(16);
        for v in s.samples() {
            assert!((v.re - inv_sqrt_2pi()).abs() < 1e-15 && v.im.abs() < 1e-16);
        }
        // e_1 + e_{-1} = 2cos(θ)/√(2π)
        let mut c = CoeffSeq::zeros(1);
        c.set(1, Complex64::new(1.0, 0.0));
        c.set(-1, Complex64::new(1.0, 0.0));
        let s = c.evaluate(64);
        for j in 0..64 {
            let expect = 2.0 * s.theta(j).cos() * inv_sqrt_2pi();
            assert!((s.samples()[j].re - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn synthesis_matches_direct_comb_summation() {
        // wrapped-Gaussian coefficients synthesize back to the comb
        let eps = 0.5;
        let mut c = CoeffSeq::zeros(32);
        for k in -32i64..=32 {
            c.set(
                k,
                Complex64::new((-eps * (k * k) as f64 / 4.0).exp() * inv_sqrt_2pi(), 0.0),
            );
        }
        let s = c.evaluate(128);
        for j in 0..128 {
            let direct = wrapped_gaussian(eps, s.theta(j));
            assert!(
                (s.samples()[j].re - direct).abs() < 1e-10,
                "θ={}",
                s.theta(j)
            );
        }
    }

    #[test]
    fn roundtrip_is_identity_when_grid_resolves_bandwidth() {
        let mut c = CoeffSeq::zeros(12);
        for k in -12i64..=12 {
            let x = (k as f64 * 0.37).sin();
            let y = (k as f64 * 0.91).cos() * 0.2;
            c.set(k, Complex64::new(x, y));
        }
        let back = CoeffSeq::from_samples(&c.evaluate(25), 12).unwrap();
        assert!(max_abs_diff(&c, &back) < 1e-12 * c.norm().max(1.0));
    }

    #[test]
    fn inner_product_basics() {
        let e0 = CoeffSeq::basis(0);
        let e1 = CoeffSeq::basis(1);
        let s = e0.add(&e1);
        assert_relative_eq!(inner_product(&s, &s).re, 2.0, max_relative = 1e-15);
        assert!(inner_product(&CoeffSeq::basis(2), &CoeffSeq::basis(3)).norm() < 1e-300);
    }

    #[test]
    fn inner_product_of_wrapped_gaussian_matches_coefficient_sum() {
        let eps = 0.5;
        let mut c = CoeffSeq::zeros(32);
        for k in -32i64..=32 {
            c.set(
                k,
                Complex64::new((-eps * (k * k) as f64 / 4.0).exp() * inv_sqrt_2pi(), 0.0),
            );
        }
        let direct: f64 = (-32i64..=32)
            .map(|k| (-eps * (k * k) as f64 / 2.0).exp() / (2.0 * PI))
            .sum();
        assert_relative_eq!(inner_product(&c, &c).re, direct, max_relative = 1e-14);

        // quadrature oracle on ∫|ψ_ε|²
        let quad = c.evaluate(512).quad_norm_sqr();
        assert_relative_eq!(inner_product(&c, &c).re, quad, max_relative = 1e-12);
    }

    #[test]
    fn parseval_against_quadrature() {
        let mut c = CoeffSeq::zeros(20);
        let mut seed = 11u64;
        for k in -20i64..=20 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
            c.set(k, Complex64::new(a, b));
        }
        let ip = inner_product(&c, &c).re;
        let quad = c.evaluate(128).quad_norm_sqr();
        assert!((ip - quad).abs() <= 1e-10 * ip);
    }

    #[test]
    fn transform_is_linear() {
        let f = SampledFunction::from_fn(64, |t| Complex64::new(t.cos(), t.sin() * 0.5));
        let g = SampledFunction::from_fn(64, |t| Complex64::new((2.0 * t).sin(), 0.3));
        let a = Complex64::new(0.7, -0.2);
        let b = Complex64::new(-1.1, 0.4);
        let mut combo = SampledFunction::from_fn(64, |_| Complex64::new(0.0, 0.0));
        for j in 0..64 {
            combo.samples_mut()[j] = a * f.samples()[j] + b * g.samples()[j];
        }
        let cf = CoeffSeq::from_samples(&f, 10).unwrap();
        let cg = CoeffSeq::from_samples(&g, 10).unwrap();
        let cc = CoeffSeq::from_samples(&combo, 10).unwrap();
        let expect = cf.scale(a).add(&cg.scale(b));
        assert!(max_abs_diff(&cc, &expect) < 1e-14);
    }

    #[test]
    fn classify_constant_modulus_is_slow_growth() {
        let g = classify_generator(
            |_k| Complex64::new(inv_sqrt_2pi(), 0.0),
            64,
            &GrowthParams::default(),
        )
        .unwrap();
        assert_eq!(g.tag, GrowthTag::SlowGrowth);
        assert!(g.exponent.abs() < 0.05, "exponent {}", g.exponent);
    }

    #[test]
    fn classify_gaussian_tail_is_rapid_decay() {
        let g = classify_generator(
            |k| Complex64::new((-((k * k) as f64) / 8.0).exp(), 0.0),
            32,
            &GrowthParams::default(),
        )
        .unwrap();
        assert_eq!(g.tag, GrowthTag::RapidDecay);
    }

    #[test]
    fn classify_harmonic_tail_is_square_summable_only() {
        // Σ 1/(1+|k|)² converges while Σ 1/(1+|k|) diverges: the dyadic
        // block sums of the squares shrink, those of the magnitudes do not.
        let blocks = |p: f64| -> (f64, f64) {
            let s = |lo: usize, hi: usize| -> f64 {
                (lo..hi).map(|k| (1.0 / (1.0 + k as f64)).powf(p)).sum()
            };
            (s(32, 48), s(48, 65))
        };
        let (i2, o2) = blocks(2.0);
        let (i1, o1) = blocks(1.0);
        assert!(o2 / i2 < 0.75 && o1 / i1 > 0.9, "oracle: {o2}/{i2} vs {o1}/{i1}");

        let g = classify_generator(
            |k| Complex64::new(1.0 / (1.0 + k.abs() as f64), 0.0),
            64,
            &GrowthParams::default(),
        )
        .unwrap();
        assert_eq!(g.tag, GrowthTag::SquareSummable);
    }

    #[test]
    fn classify_zero_tail_is_rapid_decay_with_zero_exponent() {
        let c = CoeffSeq::basis(1);
        // widen so the tail window is genuinely zero
        let mut wide = CoeffSeq::zeros(32);
        wide.set(1, c.coeff(1));
        let g = classify_coeffs(&wide, &GrowthParams::default()).unwrap();
        assert_eq!(g.tag, GrowthTag::RapidDecay);
        assert_eq!(g.exponent, 0.0);
    }

    #[test]
    fn classification_is_scale_invariant() {
        let p = GrowthParams::default();
        for scale in [1e-9, 1.0, 3.7e6] {
            let g = classify_generator(
                |k| Complex64::new(scale / (1.0 + k.abs() as f64), 0.0),
                64,
                &p,
            )
            .unwrap();
            assert_eq!(g.tag, GrowthTag::SquareSummable, "scale {scale}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let mut c = CoeffSeq::zeros(3);
        c.set(-2, Complex64::new(0.5, -1.5));
        c.set(3, Complex64::new(2.0, 0.25));
        let back = CoeffSeq::from_json(&c.to_json()).unwrap();
        assert_eq!(c, back);
    }
}
