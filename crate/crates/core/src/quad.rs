//! Quadrature rules on [-π, π].
//!
//! Two trapezoidal flavours are used throughout: the periodic rule (no
//! endpoint, spectrally accurate for smooth periodic integrands) and the
//! closed rule (both endpoints half-weighted, O(h²) for integrands that are
//! smooth on the interval but not periodic). Richardson extrapolation of the
//! closed rule removes the leading boundary terms of the Euler–Maclaurin
//! expansion.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Periodic trapezoidal rule on θ_j = -π + 2πj/m, j = 0..m-1.
///
/// Exact (up to rounding) for trigonometric polynomials of degree < m.
pub fn trapezoid_periodic<F>(f: F, m: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(m >= 1);
    let h = 2.0 * PI / m as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = -PI + h * j as f64;
        sum += f(theta);
    }
    sum * h
}

/// Closed trapezoidal rule with `panels` panels: nodes -π..π inclusive,
/// endpoints half-weighted.
pub fn trapezoid_closed<F>(f: F, panels: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(panels >= 1);
    let h = 2.0 * PI / panels as f64;
    let mut sum = 0.5 * (f(-PI) + f(PI));
    for j in 1..panels {
        sum += f(-PI + h * j as f64);
    }
    sum * h
}

/// Richardson-extrapolated closed trapezoid (Romberg table with `levels`
/// refinements starting from `base_panels`). Returns the extrapolated value
/// and the magnitude of the last correction as an error gauge.
pub fn romberg_closed<F>(f: F, base_panels: usize, levels: usize) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    assert!(levels >= 1);
    let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(levels + 1);
    for level in 0..=levels {
        let panels = base_panels << level;
        let t = trapezoid_closed(&f, panels);
        let mut row = vec![t];
        for k in 1..=level {
            let factor = 4.0f64.powi(k as i32);
            let prev = rows[level - 1][k - 1];
            let cur = row[k - 1];
            row.push((cur * factor - prev) / (factor - 1.0));
        }
        rows.push(row);
    }
    let best = *rows[levels].last().unwrap();
    let prev = *rows[levels - 1].last().unwrap();
    (best, (best - prev).norm())
}
