//! Grayscale intensity field and block extraction.

use crate::shape::{Origin, OriginRegion, Shape};
use crate::{block::Block, Error, Result};

/// A 2-D grayscale image, row-major. Loaders normalize intensities to [0,1];
/// the type itself only requires finite values, so tests can build shifted or
/// synthetic fields directly.
#[derive(Clone, Debug, PartialEq)]
pub struct Image {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl Image {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::BadImageDims { width, height });
        }
        if data.len() != width * height {
            return Err(Error::BadImageLen {
                width,
                height,
                len: data.len(),
            });
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteIntensity);
        }
        Ok(Image {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        debug_assert!(x < self.width && y < self.height);
        self.data[y * self.width + x]
    }

    /// Cuts the block under `shape` placed at `origin`: the values
    /// A(rho + r) for every support pixel rho, in canonical rho-order.
    pub fn cut_block(&self, shape: &Shape, origin: Origin) -> Result<Block> {
        let region = OriginRegion::of(self, shape)?;
        if !region.contains(origin) {
            return Err(Error::OriginOutOfRegion {
                x: origin.x,
                y: origin.y,
                region_width: region.width(),
                region_height: region.height(),
            });
        }
        let values = shape
            .support()
            .iter()
            .map(|&(dx, dy)| self.get(origin.x + dx, origin.y + dy))
            .collect();
        Ok(Block::new(values, origin))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn constant_image_yields_constant_block() {
        let img = Image::new(6, 6, vec![0.5; 36]).unwrap();
        let s = Shape::square(3).unwrap();
        let b = img.cut_block(&s, Origin::new(2, 1)).unwrap();
        assert!(b.values().iter().all(|&v| v == 0.5));
        assert_eq!(b.values().len(), 9);
    }

    #[test]
    fn block_values_follow_index_arithmetic() {
        // 3x3 image with data (0..8)/8 row-major, 2x2 square at (1,1).
        let data: Vec<f64> = (0..9).map(|v| v as f64 / 8.0).collect();
        let img = Image::new(3, 3, data).unwrap();
        let s = Shape::square(2).unwrap();
        let b = img.cut_block(&s, Origin::new(1, 1)).unwrap();
        let expected: Vec<f64> = [4.0, 5.0, 7.0, 8.0].iter().map(|v| v / 8.0).collect();
        assert_eq!(b.values(), expected.as_slice());
    }

    #[test]
    fn ring_mask_block_matches_independent_gather() {
        // Oracle: walk the mask pixel by pixel and gather directly.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let data: Vec<f64> = (0..256).map(|_| rng.random::<f64>()).collect();
        let img = Image::new(16, 16, data).unwrap();

        // 5x5 ring: border 1, interior 0.
        let mut mask = vec![false; 25];
        for y in 0..5 {
            for x in 0..5 {
                if x == 0 || y == 0 || x == 4 || y == 4 {
                    mask[y * 5 + x] = true;
                }
            }
        }
        let s = Shape::from_mask(5, 5, mask.clone()).unwrap();
        let r = Origin::new(3, 2);
        let b = img.cut_block(&s, r).unwrap();

        let mut expected = Vec::new();
        for dy in 0..5 {
            for dx in 0..5 {
                if mask[dy * 5 + dx] {
                    expected.push(img.get(r.x + dx, r.y + dy));
                }
            }
        }
        assert_eq!(b.values(), expected.as_slice());
    }

    #[test]
    fn out_of_region_origin_is_rejected_with_coordinates() {
        let img = Image::new(4, 4, vec![0.0; 16]).unwrap();
        let s = Shape::square(2).unwrap();
        let err = img.cut_block(&s, Origin::new(3, 0)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(3, 0)"), "message was: {msg}");
    }

    #[test]
    fn non_finite_data_rejected() {
        assert!(matches!(
            Image::new(2, 1, vec![0.0, f64::NAN]),
            Err(Error::NonFiniteIntensity)
        ));
    }
}
