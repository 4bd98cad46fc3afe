//! Third side of an SAS triangle as a power series in the curvature.
//!
//! Writing `w = a²`, the generalized half-angle law
//! `V_κ(a) = V_κ(b − c) + 2·sin²(α/2)·S_κ(b)·S_κ(c)` with
//! `V_κ(y) = (1 − cos √κ y)/κ = Σ (−κ)^k y^(2k+2)/(2k+2)!` becomes an
//! equation between series in `κ`, solved order by order. The payoff is
//! the deficit `a(0) − a(κ) = −Σ_{n≥1} a_n κ^n` without cancellation.

use crate::kernel::{sas_unchecked, Curvature};

const TERMS: usize = 14;
/// Above this value of `κ·(b + c)²` the deficit is taken by direct
/// subtraction, which is already accurate there.
const SERIES_SWITCH: f64 = 0.05;

type Series = [f64; TERMS];

fn mul(x: &Series, y: &Series) -> Series {
    let mut out = [0.0; TERMS];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y[..TERMS - i].iter().enumerate() {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `S_κ(y)` as a series in `κ`.
fn sine_series(y: f64) -> Series {
    std::array::from_fn(|k| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * y.powi(2 * k as i32 + 1) / factorial(2 * k + 1)
    })
}

/// `V_κ(y)` as a series in `κ`.
fn versine_series(y: f64) -> Series {
    std::array::from_fn(|k| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * y.powi(2 * k as i32 + 2) / factorial(2 * k + 2)
    })
}

/// Coefficients of the SAS third side `a(κ)`.
fn third_side_series(b: f64, c: f64, alpha: f64) -> Series {
    let h = (0.5 * alpha).sin().powi(2);
    let sbc = mul(&sine_series(b), &sine_series(c));
    let mut rhs = versine_series(b - c);
    for (r, s) in rhs.iter_mut().zip(sbc) {
        *r += 2.0 * h * s;
    }

    // w = 2·rhs − 2·Σ_{k≥1} (−κ)^k w^(k+1)/(2k+2)!, one more order per pass.
    let mut w: Series = rhs.map(|r| 2.0 * r);
    for _ in 0..TERMS {
        let mut next = rhs.map(|r| 2.0 * r);
        let mut power = w;
        for k in 1..TERMS {
            power = mul(&power, &w);
            let coef = 2.0 * if k % 2 == 0 { -1.0 } else { 1.0 } / factorial(2 * k + 2);
            for n in k..TERMS {
                next[n] += coef * power[n - k];
            }
        }
        w = next;
    }

    let mut q = [0.0; TERMS];
    q[0] = w[0].sqrt();
    for n in 1..TERMS {
        let cross: f64 = (1..n).map(|j| q[j] * q[n - j]).sum();
        q[n] = (w[n] - cross) / (2.0 * q[0]);
    }
    q
}

/// Planar third side for the same two sides and included angle.
pub(crate) fn planar_third_side(b: f64, c: f64, alpha: f64) -> f64 {
    sas_unchecked(b, c, alpha, Curvature::PLANE)
}

/// `a(0) − a(κ)` for the SAS triangle `(b, c, α)`.
pub(crate) fn sas_deficit(b: f64, c: f64, alpha: f64, k: Curvature) -> f64 {
    let kappa = k.kappa();
    if kappa == 0.0 {
        return 0.0;
    }
    if kappa * (b + c).powi(2) > SERIES_SWITCH {
        return planar_third_side(b, c, alpha) - sas_unchecked(b, c, alpha, k);
    }
    let q = third_side_series(b, c, alpha);
    // Horner over the tail, highest order first.
    let tail = q[1..].iter().rev().fold(0.0, |acc, &qn| acc * kappa + qn);
    -tail * kappa
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_leading_term_is_planar() {
        let q = third_side_series(0.7, 1.1, 1.3);
        assert!((q[0] - planar_third_side(0.7, 1.1, 1.3)).abs() < 1e-15);
    }

    #[test]
    fn series_matches_direct_evaluation() {
        for &(b, c, al) in &[(1.0, 1.0, 1.2), (0.4, 1.3, 2.5), (0.9, 0.2, 0.3)] {
            let q = third_side_series(b, c, al);
            for &kappa in &[0.002, 0.01, 0.05] {
                let k = Curvature::new(kappa).unwrap();
                let summed = q.iter().rev().fold(0.0, |acc, &qn| acc * kappa + qn);
                let direct = sas_unchecked(b, c, al, k);
                assert!(
                    (summed - direct).abs() < 1e-14,
                    "b={b} c={c} κ={kappa}: {summed} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn deficit_is_continuous_across_switch() {
        let (b, c, al) = (1.0, 1.0, 1.0);
        let kappa = SERIES_SWITCH / 4.0;
        let below = sas_deficit(b, c, al, Curvature::new(kappa * (1.0 - 1e-9)).unwrap());
        let above = sas_deficit(b, c, al, Curvature::new(kappa * (1.0 + 1e-9)).unwrap());
        // the deficit is linear in κ to leading order, so the two sides differ by ~2e-9 relative
        assert!((below - above).abs() < 1e-8 * below);
        assert!(below > 0.0);
    }

    #[test]
    fn deficit_scales_linearly_for_tiny_curvature() {
        let d1 = sas_deficit(1.0, 0.8, 1.4, Curvature::new(1e-20).unwrap());
        let d2 = sas_deficit(1.0, 0.8, 1.4, Curvature::new(1e-21).unwrap());
        assert!(d1 > 0.0 && d2 > 0.0);
        assert!((d1 / d2 - 10.0).abs() < 1e-9);
    }
}
