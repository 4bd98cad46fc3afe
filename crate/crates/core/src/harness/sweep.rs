use crate::chain::{endpoint_distance, ConvexChain};
use crate::error::Result;
use crate::kernel::Curvature;

/// One point of a curvature sweep.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub kappa: f64,
    /// `None` on the plane.
    pub radius: Option<f64>,
    /// Endpoint distance, or why the chain does not fit at this `κ`.
    pub distance: Result<f64>,
}

/// Endpoint distance of `chain` at every curvature of `grid`. Points where
/// the chain is not embeddable carry their error; the rest still run.
pub fn sweep_radius(chain: &ConvexChain, grid: &[f64]) -> Vec<SweepPoint> {
    grid.iter()
        .map(|&k| match Curvature::new(k) {
            Ok(curv) => SweepPoint {
                kappa: k,
                radius: curv.radius(),
                distance: endpoint_distance(chain, curv),
            },
            Err(e) => SweepPoint {
                kappa: k,
                radius: None,
                distance: Err(e),
            },
        })
        .collect()
}

/// Distances of the successful points, ordered by `κ`, strictly decrease.
pub fn strictly_decreasing_in_kappa(points: &[SweepPoint]) -> bool {
    let mut ok: Vec<(f64, f64)> = points
        .iter()
        .filter_map(|p| p.distance.as_ref().ok().map(|d| (p.kappa, *d)))
        .collect();
    ok.sort_by(|x, y| x.0.total_cmp(&y.0));
    ok.windows(2).all(|w| w[1].1 < w[0].1)
}
