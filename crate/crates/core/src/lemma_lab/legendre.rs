use crate::error::{GeomError, Result};
use crate::kernel::{solve_sss, spherical_excess, Curvature, Triangle};

/// Residuals below this are rounding noise.
pub const NOISE_FLOOR: f64 = 1e-12;
/// Window of fitted exponents read as a fourth-order residual.
pub const ORDER_WINDOW: (f64, f64) = (3.5, 4.6);

/// Planar angles approximated by removing a third of the excess from each
/// curved angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreApprox {
    pub curved: [f64; 3],
    pub excess: f64,
    pub approx: [f64; 3],
    pub planar: [f64; 3],
    /// `planar − approx`; sums to zero.
    pub residuals: [f64; 3],
}

impl LegendreApprox {
    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

pub fn legendre_planar_angles(tri: &Triangle) -> Result<LegendreApprox> {
    if tri.curvature().is_plane() {
        return Err(GeomError::domain("the Legendre comparison needs κ > 0"));
    }
    let curved = solve_sss(tri).as_array();
    let excess = spherical_excess(tri);
    let planar = solve_sss(&tri.with_curvature(Curvature::PLANE)?).as_array();
    let approx = curved.map(|t| t - excess / 3.0);
    let residuals = std::array::from_fn(|i| planar[i] - approx[i]);
    Ok(LegendreApprox {
        curved,
        excess,
        approx,
        planar,
        residuals,
    })
}

/// How the family of scaled triangles treats curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScaleMode {
    /// Sides scaled by `t`, curvature fixed: residuals shrink like `t⁴`.
    #[default]
    FixedCurvature,
    /// Curvature divided by `t²` as well, so the shape is unchanged.
    KeepShape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderFit {
    pub slope: f64,
    /// `(scale, max |residual|)` per sample.
    pub samples: Vec<(f64, f64)>,
    /// Residuals hit the noise floor, or the fitted order exceeds the window.
    pub inconclusive: bool,
}

impl OrderFit {
    pub fn in_window(&self) -> bool {
        (ORDER_WINDOW.0..=ORDER_WINDOW.1).contains(&self.slope)
    }
}

/// Least-squares slope of `log max|residual|` against `log scale`.
pub fn legendre_order_fit(tri: &Triangle, scales: &[f64], mode: ScaleMode) -> Result<OrderFit> {
    if scales.len() < 2 {
        return Err(GeomError::domain("need at least two scales"));
    }
    if scales.iter().any(|&t| !(t > 0.0) || !t.is_finite()) {
        return Err(GeomError::domain("scales must be positive"));
    }
    let (lo, hi) = scales
        .iter()
        .fold((f64::INFINITY, 0.0_f64), |(lo, hi), &t| {
            (lo.min(t), hi.max(t))
        });
    if hi / lo < 10.0 {
        return Err(GeomError::domain(format!(
            "scales must span at least one decade, got {lo}..{hi}"
        )));
    }
    let samples = scales
        .iter()
        .map(|&t| {
            let curv = match mode {
                ScaleMode::FixedCurvature => tri.curvature(),
                ScaleMode::KeepShape => Curvature::new(tri.curvature().kappa() / (t * t))?,
            };
            let scaled = Triangle::from_sides(tri.sides().map(|s| s * t), curv)?;
            Ok((t, legendre_planar_angles(&scaled)?.max_abs_residual()))
        })
        .collect::<Result<Vec<_>>>()?;

    let n = samples.len() as f64;
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(t, r)| (t.ln(), r.max(f64::MIN_POSITIVE).ln()))
        .collect();
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let at_floor = mode == ScaleMode::FixedCurvature && samples.iter().any(|s| s.1 <= NOISE_FLOOR);
    Ok(OrderFit {
        slope,
        inconclusive: at_floor || slope > ORDER_WINDOW.1,
        samples,
    })
}

/// `count` geometric points from `from` to `to` inclusive.
pub fn geometric_grid(from: f64, to: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![from],
        _ => {
            let ratio = (to / from).powf(1.0 / (count - 1) as f64);
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        to
                    } else {
                        from * ratio.powi(i as i32)
                    }
                })
                .collect()
        }
    }
}
