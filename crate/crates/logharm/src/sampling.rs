//! Seeded deterministic sampling for verification sweeps.
//!
//! A hand-rolled SplitMix64 keeps runs reproducible across platforms and
//! dependency upgrades; the default seed everywhere is 0.

use num_complex::Complex64;

/// SplitMix64 generator (Steele, Lea, Flood 2014). Full 2^64 period, passes
/// BigCrush, two lines of state transition.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// `count` points distributed over the annulus min_abs <= |z| <= max_abs,
/// uniform in area.
pub fn annulus_points(seed: u64, count: usize, min_abs: f64, max_abs: f64) -> Vec<Complex64> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let u = rng.next_f64();
            let r = (min_abs * min_abs + u * (max_abs * max_abs - min_abs * min_abs)).sqrt();
            let theta = rng.in_range(-std::f64::consts::PI, std::f64::consts::PI);
            Complex64::from_polar(r, theta)
        })
        .collect()
}

/// `count` points in the disk |z| <= max_abs, uniform in area.
pub fn disk_points(seed: u64, count: usize, max_abs: f64) -> Vec<Complex64> {
    annulus_points(seed, count, 0.0, max_abs)
}
