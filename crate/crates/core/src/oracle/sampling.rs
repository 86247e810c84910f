//! Seeded, platform-stable random instance generation for test corpora.
//!
//! The generator is a SplitMix64, so identical seeds give identical corpora
//! on every platform. Instance policies: sides uniform on [1, 10] with a
//! 0.05 margin in every triangle inequality; weights uniform on [-5, 5]
//! rejecting coordinates below 0.01 in magnitude and `|J|` below 0.01 of its
//! term scale, which keeps bulk tests clear of boundary cases.

use crate::extremum::WeightTriple;
use crate::geom::coords::BaryPoint;
use crate::geom::triangle::Triangle;

/// SplitMix64 pseudo-random generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn index(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Sides uniform on [1, 10], kept when every inequality has margin 0.05.
pub fn random_triangle(rng: &mut SplitMix64) -> Triangle {
    loop {
        let a = rng.uniform(1.0, 10.0);
        let b = rng.uniform(1.0, 10.0);
        let c = rng.uniform(1.0, 10.0);
        if b + c - a > 0.05 && c + a - b > 0.05 && a + b - c > 0.05 {
            return Triangle::from_sides(a, b, c).unwrap();
        }
    }
}

/// Random acute triangle: angles strictly below a right angle with margin
/// 0.02 rad, sides scaled by a diameter uniform on [1, 10].
pub fn random_acute_triangle(rng: &mut SplitMix64) -> Triangle {
    const MARGIN: f64 = 0.02;
    let half_pi = std::f64::consts::FRAC_PI_2;
    loop {
        let alpha = rng.uniform(2.0 * MARGIN, half_pi - MARGIN);
        let beta = rng.uniform(half_pi - alpha + MARGIN, half_pi - MARGIN);
        if beta <= 0.0 || alpha + beta >= std::f64::consts::PI {
            continue;
        }
        let gamma = std::f64::consts::PI - alpha - beta;
        if gamma <= MARGIN || gamma >= half_pi - MARGIN {
            continue;
        }
        let diameter = rng.uniform(1.0, 10.0);
        let (a, b, c) = (diameter * alpha.sin(), diameter * beta.sin(), diameter * gamma.sin());
        if let Ok(t) = Triangle::from_sides(a, b, c) {
            return t;
        }
    }
}

/// Weights uniform on [-5, 5] with all coordinates and `J` clear of zero.
pub fn random_weights(rng: &mut SplitMix64, t: &Triangle) -> WeightTriple {
    loop {
        let l = rng.uniform(-5.0, 5.0);
        let m = rng.uniform(-5.0, 5.0);
        let n = rng.uniform(-5.0, 5.0);
        if l.abs() < 0.01 || m.abs() < 0.01 || n.abs() < 0.01 {
            continue;
        }
        let terms = [t.a() * t.a() / l, t.b() * t.b() / m, t.c() * t.c() / n];
        let j: f64 = terms.iter().sum();
        let scale = terms.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if j.abs() < 0.01 * scale {
            continue;
        }
        return WeightTriple::new(l, m, n).unwrap();
    }
}

/// Zero-sum weights with every coordinate at least 0.05 in magnitude.
pub fn random_zero_sum_weights(rng: &mut SplitMix64) -> WeightTriple {
    loop {
        let l = rng.uniform(-5.0, 5.0);
        let m = rng.uniform(-5.0, 5.0);
        let n = -(l + m);
        if l.abs() < 0.05 || m.abs() < 0.05 || n.abs() < 0.05 || n.abs() > 10.0 {
            continue;
        }
        return WeightTriple::new(l, m, n).unwrap();
    }
}

/// Finite homogeneous point with all coordinates and the sum clear of zero.
pub fn random_finite_bary(rng: &mut SplitMix64) -> BaryPoint {
    loop {
        let l = rng.uniform(-5.0, 5.0);
        let m = rng.uniform(-5.0, 5.0);
        let n = rng.uniform(-5.0, 5.0);
        let scale = l.abs().max(m.abs()).max(n.abs());
        if l.abs() < 0.01 * scale || m.abs() < 0.01 * scale || n.abs() < 0.01 * scale {
            continue;
        }
        if (l + m + n).abs() < 0.01 * scale {
            continue;
        }
        return BaryPoint::new(l, m, n).unwrap();
    }
}

/// Point whose sum-normalized coordinates are all positive.
pub fn random_interior_bary(rng: &mut SplitMix64) -> BaryPoint {
    let l = rng.uniform(0.05, 3.0);
    let m = rng.uniform(0.05, 3.0);
    let n = rng.uniform(0.05, 3.0);
    BaryPoint::new(l, m, n).unwrap()
}

/// Point with exactly one negative sum-normalized coordinate, at a random
/// position.
pub fn random_one_negative_bary(rng: &mut SplitMix64) -> BaryPoint {
    loop {
        let k = rng.index(3);
        let neg = -rng.uniform(0.01, 2.0);
        let p1 = rng.uniform(0.01, 3.0);
        let p2 = rng.uniform(0.01, 3.0);
        if p1 + p2 + neg < 0.02 {
            continue;
        }
        let mut c = [p1, p2, 0.0];
        c[2] = c[k];
        c[k] = neg;
        return BaryPoint::new(c[0], c[1], c[2]).unwrap();
    }
}

/// Point with exactly two negative sum-normalized coordinates, positive one
/// at a random position.
pub fn random_two_negative_bary(rng: &mut SplitMix64) -> BaryPoint {
    let k = rng.index(3);
    let u = rng.uniform(0.01, 1.5);
    let v = rng.uniform(0.01, 1.5);
    let pos = u + v + rng.uniform(0.02, 3.0);
    let mut c = [-u, -v, 0.0];
    c[2] = c[k];
    c[k] = pos;
    BaryPoint::new(c[0], c[1], c[2]).unwrap()
}
