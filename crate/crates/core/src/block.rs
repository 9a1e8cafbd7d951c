//! Blocks (shape-masked cuts of an image) and distances between them.

use crate::shape::Origin;
use crate::{Error, Result};

/// The values of one block in canonical rho-order, tagged with its origin.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    values: Vec<f64>,
    origin: Origin,
}

impl Block {
    pub fn new(values: Vec<f64>, origin: Origin) -> Self {
        Block { values, origin }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Block distance norm. L2 is the default; L1 gives similar rankings.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Norm {
    #[default]
    L2,
    L1,
}

/// Distance between two equal-length blocks.
pub fn block_distance(a: &Block, b: &Block, norm: Norm) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::BlockLengthMismatch(a.len(), b.len()));
    }
    Ok(match norm {
        Norm::L2 => a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| {
                let d = x - y;
                d * d
            })
            .sum::<f64>()
            .sqrt(),
        Norm::L1 => a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x - y).abs())
            .sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(values: &[f64]) -> Block {
        Block::new(values.to_vec(), Origin::new(0, 0))
    }

    #[test]
    fn identical_blocks_have_zero_distance() {
        let a = block(&[0.1, 0.7, 0.3]);
        assert_eq!(block_distance(&a, &a, Norm::L2).unwrap(), 0.0);
        assert_eq!(block_distance(&a, &a, Norm::L1).unwrap(), 0.0);
    }

    #[test]
    fn three_four_five() {
        let a = block(&[0.0, 0.0]);
        let b = block(&[3.0, 4.0]);
        assert_eq!(block_distance(&a, &b, Norm::L2).unwrap(), 5.0);
        assert_eq!(block_distance(&a, &b, Norm::L1).unwrap(), 7.0);
    }

    #[test]
    fn length_mismatch_rejected() {
        let a = block(&[0.0, 0.0]);
        let b = block(&[1.0]);
        assert!(matches!(
            block_distance(&a, &b, Norm::L2),
            Err(Error::BlockLengthMismatch(2, 1))
        ));
    }
}
