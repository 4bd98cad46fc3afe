//! Seed-deterministic random instances.

use std::f64::consts::PI;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{is_convex, ConvexChain};
use crate::error::{GeomError, Result};
use crate::kernel::{solve_sas, Curvature, Triangle};

pub const MAX_ATTEMPTS: usize = 10_000;

/// Interior angles below this make near-degenerate slivers whose
/// comparison gaps sit under the rounding floor.
pub const MIN_ANGLE: f64 = 0.1 * PI;

/// Parameters for [`random_convex_chain`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n_edges: RangeInclusive<usize>,
    /// Log-uniform range for individual edge lengths.
    pub length_scale: (f64, f64),
    /// `(κ, κ')` with `κ > κ' ≥ 0`; chains must fit the budget of `κ`.
    pub curvature_pair: (Curvature, Curvature),
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(
        n_edges: RangeInclusive<usize>,
        length_scale: (f64, f64),
        curvature_pair: (Curvature, Curvature),
        seed: u64,
    ) -> Result<Self> {
        if *n_edges.start() < 2 || n_edges.is_empty() {
            return Err(GeomError::domain(
                "n_edges must be a non-empty range starting at >= 2",
            ));
        }
        let (lo, hi) = length_scale;
        if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
            return Err(GeomError::domain(format!("bad length range ({lo}, {hi})")));
        }
        if !(curvature_pair.0.kappa() > curvature_pair.1.kappa()) {
            return Err(GeomError::domain("curvature pair needs κ > κ'"));
        }
        Ok(GeneratorConfig {
            n_edges,
            length_scale,
            curvature_pair,
            seed,
        })
    }

    /// 2–8 edges, lengths 0.05–1, unit sphere against the plane.
    pub fn standard(seed: u64) -> Self {
        GeneratorConfig {
            n_edges: 2..=8,
            length_scale: (0.05, 1.0),
            curvature_pair: (Curvature::UNIT_SPHERE, Curvature::PLANE),
            seed,
        }
    }
}

/// Instance seed for the `index`-th item of a run started from `base`.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = base.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejection-sample a chain that is convex on the more curved surface of
/// the pair: log-uniform lengths, rescaled into the length budget, and
/// angles close to `π` obtained by spreading a random total turn.
pub fn random_convex_chain(cfg: &GeneratorConfig) -> Result<ConvexChain> {
    let mut rng = rng_for(cfg.seed);
    random_convex_chain_with(cfg, &mut rng)
}

pub(crate) fn random_convex_chain_with<R: Rng>(
    cfg: &GeneratorConfig,
    rng: &mut R,
) -> Result<ConvexChain> {
    random_convex_chain_on(cfg, cfg.curvature_pair.0, rng)
}

/// As [`random_convex_chain`], but convex on `k` and drawn from `rng`.
/// Lengths still respect the budget of the more curved surface of the pair.
pub fn random_convex_chain_on<R: Rng>(
    cfg: &GeneratorConfig,
    k: Curvature,
    rng: &mut R,
) -> Result<ConvexChain> {
    let budget = cfg.curvature_pair.0.half_circumference();
    let (lo, hi) = cfg.length_scale;
    let (mut rejected_convexity, mut rejected_sliver, mut rejected_other) =
        (0usize, 0usize, 0usize);
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.random_range(cfg.n_edges.clone());
        let mut lengths: Vec<f64> = (0..n)
            .map(|_| (lo.ln() + rng.random::<f64>() * (hi / lo).ln()).exp())
            .collect();
        let total: f64 = lengths.iter().sum();
        if total > 0.95 * budget {
            let target = budget * rng.random_range(0.3..0.95);
            lengths.iter_mut().for_each(|l| *l *= target / total);
        }
        let weights: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.05..1.0)).collect();
        let wsum: f64 = weights.iter().sum();
        let turn_total = rng.random_range(0.1..1.8) * PI;
        let angles: Vec<f64> = weights.iter().map(|w| PI - turn_total * w / wsum).collect();
        if angles.iter().any(|&a| a < MIN_ANGLE) {
            rejected_sliver += 1;
            continue;
        }
        let Ok(chain) = ConvexChain::new(lengths, angles) else {
            rejected_other += 1;
            continue;
        };
        match is_convex(&chain, k) {
            Ok(true) => return Ok(chain),
            Ok(false) => rejected_convexity += 1,
            Err(_) => rejected_other += 1,
        }
    }
    Err(GeomError::GeneratorExhausted {
        attempts: MAX_ATTEMPTS,
        diagnostics: format!(
            "{rejected_convexity} non-convex, {rejected_sliver} sliver, {rejected_other} invalid; n_edges {:?}, lengths {:?}, {}",
            cfg.n_edges, cfg.length_scale, k
        ),
    })
}

/// Increments opening a random nonempty subset of angles, sometimes all
/// the way to `π`.
pub fn random_increments<R: Rng>(chain: &ConvexChain, rng: &mut R) -> Vec<f64> {
    let angles = chain.interior_angles();
    loop {
        let inc: Vec<f64> = angles
            .iter()
            .map(|&th| {
                if rng.random_bool(0.5) {
                    return 0.0;
                }
                let room = PI - th;
                if rng.random_bool(0.1) {
                    room
                } else {
                    room * rng.random_range(0.05..1.0)
                }
            })
            .collect();
        if inc.iter().any(|&d| d > 0.0) {
            return inc;
        }
    }
}

/// Random triangle on `curv` with sides drawn from `range`, kept away from
/// degeneracy: each `s − side` is at least 2% of the perimeter.
pub fn random_triangle<R: Rng>(
    rng: &mut R,
    curv: Curvature,
    range: (f64, f64),
) -> Result<Triangle> {
    for _ in 0..MAX_ATTEMPTS {
        let sides: [f64; 3] = std::array::from_fn(|_| rng.random_range(range.0..range.1));
        let p: f64 = sides.iter().sum();
        if sides.iter().any(|&s| 0.5 * p - s < 0.02 * p) {
            continue;
        }
        if let Ok(t) = Triangle::from_sides(sides, curv) {
            return Ok(t);
        }
    }
    Err(GeomError::GeneratorExhausted {
        attempts: MAX_ATTEMPTS,
        diagnostics: format!("no feasible triangle with sides in {range:?} on {curv}"),
    })
}

/// Thin triangle on `curv`: two long sides and a small apex angle between
/// them, with the short side as side `a`.
pub fn random_thin_triangle<R: Rng>(rng: &mut R, curv: Curvature) -> Result<Triangle> {
    let b = rng.random_range(0.5..1.5);
    let c = rng.random_range(0.5..1.5);
    let apex = rng.random_range(0.02..0.1);
    let a = solve_sas(b, c, apex, curv)?;
    Triangle::new(a, b, c, curv)
}
