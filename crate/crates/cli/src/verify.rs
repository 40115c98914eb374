//! Seeded cross-checks of the closed forms against independent routes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use unruh_min::correlations::{self, MeasurementSearch};
use unruh_min::dynamics::{log_grid, t_sc_oracle, Side};
use unruh_min::states::{bloch_decompose, Couplings, XStateParams};
use unruh_min::unruh::{build_tripartite, closed_form_ai, closed_form_aii, reduce_ai, reduce_aii, UnruhPoint};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_160_411;
pub const DEFAULT_DRAWS: usize = 200;

/// Bell-diagonal vertices: every physical `c` is a convex mixture of these.
const VERTICES: [[f64; 3]; 4] = [[1.0, -1.0, 1.0], [-1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [-1.0, -1.0, -1.0]];

/// A uniformly weighted mixture of Bell states; a quarter of the draws sit
/// on a face or edge of the tetrahedron.
pub fn random_state(rng: &mut impl Rng) -> XStateParams {
    let mut w: [f64; 4] = std::array::from_fn(|_| -rng.gen::<f64>().ln());
    if rng.gen_bool(0.25) {
        w[rng.gen_range(0..4)] = 0.0;
    }
    let total: f64 = w.iter().sum();
    let c: [f64; 3] = std::array::from_fn(|i| (0..4).map(|k| w[k] * VERTICES[k][i]).sum::<f64>() / total);
    XStateParams::new(c[0], c[1], c[2])
        .or_else(|_| XStateParams::new(c[0].clamp(-1.0, 1.0), c[1].clamp(-1.0, 1.0), c[2].clamp(-1.0, 1.0)))
        .expect("convex mixtures of Bell states are states")
}

/// `w` log-uniform in `[0.1, 10]`, `w/T` log-uniform in `[1e-3, 1e3]`, with
/// occasional `T = 0` and `T = inf`.
pub fn random_point(rng: &mut impl Rng) -> UnruhPoint {
    let w = 10f64.powf(rng.gen_range(-1.0..1.0));
    let t = match rng.gen_range(0..20) {
        0 => 0.0,
        1 => f64::INFINITY,
        _ => w / 10f64.powf(rng.gen_range(-3.0..3.0)),
    };
    UnruhPoint::new(w, t).expect("valid by construction")
}

/// Box couplings with a sudden change on `side` at `T_sc / w` log-uniform in
/// `[0.05, 20]`.
pub fn random_sudden(rng: &mut impl Rng, side: Side) -> Couplings {
    let tau = 10f64.powf(rng.gen_range(-1.3..1.3));
    // T_sc / w = -+1 / ln(q - 1) with q = c3^2 / m^2
    let q = match side {
        Side::AI => 1.0 + (-1.0 / tau).exp(),
        Side::AII => 1.0 + (1.0 / tau).exp(),
    };
    let c3 = rng.gen_range(0.2..1.0);
    let m = c3 / q.sqrt();
    let other = m + (1.0 - m) * rng.gen::<f64>();
    let (a, b) = if rng.gen_bool(0.5) { (m, other) } else { (other, m) };
    let s: [f64; 3] = std::array::from_fn(|_| if rng.gen_bool(0.5) { 1.0 } else { -1.0 });
    Couplings::new(a * s[0], b * s[1], c3 * s[2]).expect("inside the box")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub tolerance: f64,
    pub checked: usize,
    pub max_error: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub draws: usize,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

struct Tally {
    name: &'static str,
    tolerance: f64,
    relative: bool,
    checked: usize,
    max_error: f64,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64, relative: bool) -> Self {
        Self { name, tolerance, relative, checked: 0, max_error: 0.0 }
    }

    fn record(&mut self, got: f64, want: f64) {
        let mut err = (got - want).abs();
        if self.relative {
            err /= want.abs().max(f64::MIN_POSITIVE);
        }
        self.checked += 1;
        // NaN must fail
        self.max_error = if err.is_nan() { f64::INFINITY } else { self.max_error.max(err) };
    }

    /// Records a one-sided check `value >= 0`.
    fn record_nonnegative(&mut self, value: f64) {
        self.record((-value).max(0.0), 0.0);
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            tolerance: self.tolerance,
            checked: self.checked,
            max_error: self.max_error,
            passed: self.checked > 0 && self.max_error <= self.tolerance,
        }
    }
}

pub fn run(seed: u64, draws: usize) -> Result<VerificationReport, CliError> {
    if draws == 0 {
        return Err(CliError::Usage("draws must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut channel = Tally::new("channel", 1e-12, false);
    let mut variational = Tally::new("min_variational", 1e-8, false);
    let mut identity = Tally::new("bmax_identity", 1e-12, false);
    let mut ordering = Tally::new("ordering", 1e-12, false);
    let mut tsc = Tally::new("tsc", 1e-8, true);
    let search = MeasurementSearch::default();

    for _ in 0..draws {
        let p = random_state(&mut rng);
        let u = random_point(&mut rng);
        let tri = build_tripartite(&p, &u);
        for (rho, closed) in [(reduce_ai(&tri)?, closed_form_ai(&p, &u)), (reduce_aii(&tri)?, closed_form_aii(&p, &u))] {
            channel.record(bloch_decompose(&rho)?.max_abs_diff(&closed), 0.0);
            let r = correlations::report(&closed);
            variational.record(correlations::min_variational(&rho, &search)?, r.n);
            identity.record(r.n, r.bmax * r.bmax / 16.0);
            ordering.record_nonnegative(r.n - r.d);
        }
        for side in [Side::AI, Side::AII] {
            let c = random_sudden(&mut rng, side);
            let w = u.w();
            let analytic = unruh_min::dynamics::classify(&c, side).t_sc(w).ok_or_else(|| {
                CliError::Usage(format!("sampler produced a non-sudden coupling {c}"))
            })?;
            let grid: Vec<f64> = log_grid(1e-3, 1e3, 400).into_iter().map(|t| t * w).collect();
            tsc.record(t_sc_oracle(&c, &grid, side, w)?, analytic);
        }
    }

    let suites: Vec<SuiteResult> =
        [channel, variational, identity, ordering, tsc].into_iter().map(Tally::finish).collect();
    let passed = suites.iter().all(|s| s.passed);
    Ok(VerificationReport { seed, draws, suites, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let a = run(7, 5).unwrap();
        assert!(a.passed, "{a:?}");
        assert_eq!(a, run(7, 5).unwrap());
        assert_eq!(a.suites.len(), 5);
        assert!(a.suites.iter().all(|s| s.checked > 0));
    }

    #[test]
    fn zero_draws_is_usage_error() {
        assert!(matches!(run(1, 0), Err(CliError::Usage(_))));
    }

    #[test]
    fn samplers_stay_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            assert!(random_state(&mut rng).is_physical());
            for side in [Side::AI, Side::AII] {
                let c = random_sudden(&mut rng, side);
                assert!(unruh_min::dynamics::classify(&c, side).t_sc_per_w.is_some(), "{c} {side:?}");
            }
        }
    }
}
