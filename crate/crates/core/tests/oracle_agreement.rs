//! Main paths versus the oracle module on randomized inputs. The two sides
//! share no algorithm: series-plus-Gauss-Kronrod against adaptive Simpson,
//! compensated descending sums against plain ascending ones. Agreement is
//! required within the summed declared bounds plus an explicit machine
//! rounding term.

use arcsl_core::lemniscate::arcsl;
use arcsl_core::lerch::{lerch_phi, LerchParams};
use arcsl_core::oracle::{lerch_bruteforce, quad_adaptive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Covers the final-rounding noise of the two independent computations; both
/// sides are otherwise accounted for by their declared bounds.
fn rounding_term(value: f64) -> f64 {
    4.0 * f64::EPSILON * (1.0 + value.abs())
}

#[test]
fn arcsl_agrees_with_simpson_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x41524353);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let x: f64 = rng.random_range(1e-3..=0.999);
        let main = arcsl(x, 1e-11).unwrap();
        let direct = quad_adaptive(|t| 1.0 / (1.0 - t * t * t * t).sqrt(), 0.0, x, 1e-12)
            .unwrap();
        let diff = (main.value - direct.value).abs();
        let allowance = main.error_bound + direct.error_estimate + rounding_term(main.value);
        assert!(
            diff <= allowance,
            "arcsl({x}): main {} vs oracle {} differ by {diff}, allowance {allowance}",
            main.value,
            direct.value
        );
        worst = worst.max(diff);
    }
    assert!(worst <= 1e-10, "worst observed discrepancy {worst}");
}

#[test]
fn lerch_agrees_with_bruteforce_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c455243);
    const N_TERMS: u64 = 20_000;
    for _ in 0..50 {
        let z: f64 = rng.random_range(0.0..=0.99);
        let s: f64 = rng.random_range(1.05..=6.0);
        let a: f64 = rng.random_range(0.1..=3.0);
        let main = lerch_phi(LerchParams::new(z, s, a).unwrap(), 1e-12).unwrap();
        let (partial, tail) = lerch_bruteforce(z, s, a, N_TERMS).unwrap();
        // The oracle's plain ascending sum of n nonnegative terms carries at
        // most n * eps * sum of rounding, on top of the enclosure
        // partial <= Phi <= partial + tail.
        let summation_noise = N_TERMS as f64 * f64::EPSILON * partial.abs();
        let lo = partial - main.error_bound - summation_noise - rounding_term(partial);
        let hi = partial + tail + main.error_bound + summation_noise + rounding_term(partial);
        assert!(
            lo <= main.value && main.value <= hi,
            "Phi({z},{s},{a}): main {} outside oracle enclosure [{lo}, {hi}]",
            main.value
        );
    }
}

// The complement quadrature branch (x past the series switch) against the
// untransformed integrand, which Simpson can still sample up to 0.999.
#[test]
fn arcsl_complement_branch_agrees_with_simpson() {
    for x in [0.91, 0.95, 0.97, 0.99, 0.995, 0.999] {
        let main = arcsl(x, 1e-11).unwrap();
        let direct = quad_adaptive(|t| 1.0 / (1.0 - t * t * t * t).sqrt(), 0.0, x, 1e-12)
            .unwrap();
        let diff = (main.value - direct.value).abs();
        // The integrand steepens toward 1, so weight the oracle estimate up;
        // everything stays far below any structural disagreement.
        let allowance =
            main.error_bound + 10.0 * direct.error_estimate + rounding_term(main.value) + 1e-11;
        assert!(diff <= allowance, "arcsl({x}) differs by {diff}");
    }
}

// Declared bounds stay honest when the request is coarse.
#[test]
fn coarse_bounds_remain_honest_near_the_switch() {
    for x in [0.85, 0.9, 0.905, 0.95] {
        let coarse = arcsl(x, 1e-6).unwrap();
        let tight = arcsl(x, 1e-12).unwrap();
        assert!(
            (coarse.value - tight.value).abs()
                <= coarse.error_bound + tight.error_bound + 1e-13
        );
    }
}
