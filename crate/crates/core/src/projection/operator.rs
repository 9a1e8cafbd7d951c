//! Random projection operators on a shape's support.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::shape::Shape;
use crate::{Error, Result};

/// A zero-mean, unit-norm random vector over the shape's support pixels, in
/// canonical rho-order. Carries the shape so it can be applied on its own.
#[derive(Clone, Debug)]
pub struct ProjectionOperator {
    shape: Shape,
    values: Vec<f64>,
    seed: u64,
}

impl ProjectionOperator {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Stable 64-bit mixer used to derive per-pass seeds from a master seed.
/// Kept in-crate so seed derivation never changes underneath saved reports.
pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for pass `pass` of a scoring run with the given master seed.
pub fn pass_seed(master_seed: u64, pass: u32) -> u64 {
    splitmix64(master_seed ^ splitmix64(pass as u64 + 1))
}

/// Draws i.i.d. standard normal values per support pixel, subtracts their
/// mean and divides by the L2 norm. Centering then normalizing gaussians
/// samples uniformly from the unit sphere intersected with the zero-sum
/// hyperplane. Deterministic given (shape, seed).
pub fn sample_operator(shape: &Shape, seed: u64) -> Result<ProjectionOperator> {
    let n = shape.support_size();
    if n < 2 {
        return Err(Error::DegenerateShape(n));
    }

    let mut draw_seed = seed;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(draw_seed);
        let mut values: Vec<f64> = (0..n)
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let mean = values.iter().sum::<f64>() / n as f64;
        for v in &mut values {
            *v -= mean;
        }
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            for v in &mut values {
                *v /= norm;
            }
            return Ok(ProjectionOperator {
                shape: shape.clone(),
                values,
                seed,
            });
        }
        // All draws identical (probability zero): redraw with the next sub-seed.
        draw_seed = splitmix64(draw_seed.wrapping_add(1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_is_zero_mean_unit_norm() {
        let shape = Shape::square(5).unwrap();
        for seed in 0..20 {
            let op = sample_operator(&shape, seed).unwrap();
            let sum: f64 = op.values().iter().sum();
            let norm: f64 = op.values().iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(sum.abs() <= 1e-9, "sum {sum}");
            assert!((norm - 1.0).abs() <= 1e-9, "norm {norm}");
        }
    }

    #[test]
    fn two_pixel_support_is_forced_up_to_sign() {
        let shape = Shape::rect(2, 1).unwrap();
        let op = sample_operator(&shape, 99).unwrap();
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((op.values()[0].abs() - inv_sqrt2).abs() <= 1e-12);
        assert!((op.values()[1].abs() - inv_sqrt2).abs() <= 1e-12);
        assert!((op.values()[0] + op.values()[1]).abs() <= 1e-12);
    }

    #[test]
    fn same_shape_and_seed_is_bit_identical() {
        let shape = Shape::square(7).unwrap();
        let a = sample_operator(&shape, 1234).unwrap();
        let b = sample_operator(&shape, 1234).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn degenerate_support_rejected() {
        let err = Shape::from_mask(1, 1, vec![true]);
        assert!(err.is_err());
    }

    #[test]
    fn pass_seeds_are_distinct() {
        let seeds: Vec<u64> = (0..100).map(|i| pass_seed(7, i)).collect();
        let mut dedup = seeds.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), seeds.len());
    }
}
