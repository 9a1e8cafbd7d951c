//! Block geometry: shapes, valid origins and placement disjointness.

use crate::{Error, Image, Result};

/// Top-left corner of a block placement, in image pixel coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Origin {
    pub x: usize,
    pub y: usize,
}

impl Origin {
    pub fn new(x: usize, y: usize) -> Self {
        Origin { x, y }
    }

    /// Chebyshev (L-infinity) distance between two origins.
    pub fn chebyshev(self, other: Origin) -> usize {
        let dx = self.x.abs_diff(other.x);
        let dy = self.y.abs_diff(other.y);
        dx.max(dy)
    }
}

/// Binary mask defining the geometry of the searched part.
///
/// The mask is stored over its tight bounding box; `from_mask` trims empty
/// boundary rows and columns, so placement origins always refer to the
/// bounding-box corner of the actual support.
#[derive(Clone, Debug)]
pub struct Shape {
    width: usize,
    height: usize,
    mask: Vec<bool>,
    /// Support pixels in canonical order: row-major over the mask's 1-pixels.
    support: Vec<(usize, usize)>,
}

impl Shape {
    /// Full square of the given side.
    pub fn square(side: usize) -> Result<Self> {
        Shape::from_mask(side, side, vec![true; side * side])
    }

    /// Full rectangle.
    pub fn rect(width: usize, height: usize) -> Result<Self> {
        Shape::from_mask(width, height, vec![true; width * height])
    }

    /// Builds a shape from a row-major mask, trimming to the tight bounding
    /// box of its 1-pixels. Supports of fewer than 2 pixels are rejected: a
    /// single pixel cannot carry a zero-mean unit-norm operator.
    pub fn from_mask(width: usize, height: usize, mask: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 || mask.len() != width * height {
            return Err(Error::BadImageLen {
                width,
                height,
                len: mask.len(),
            });
        }
        let support_total = mask.iter().filter(|&&m| m).count();
        if support_total < 2 {
            return Err(Error::DegenerateShape(support_total));
        }

        // Tight bounding box.
        let (mut x0, mut y0, mut x1, mut y1) = (width, height, 0usize, 0usize);
        for y in 0..height {
            for x in 0..width {
                if mask[y * width + x] {
                    x0 = x0.min(x);
                    y0 = y0.min(y);
                    x1 = x1.max(x);
                    y1 = y1.max(y);
                }
            }
        }
        let (tw, th) = (x1 - x0 + 1, y1 - y0 + 1);
        let mut trimmed = vec![false; tw * th];
        let mut support = Vec::with_capacity(support_total);
        for dy in 0..th {
            for dx in 0..tw {
                if mask[(y0 + dy) * width + (x0 + dx)] {
                    trimmed[dy * tw + dx] = true;
                    support.push((dx, dy));
                }
            }
        }

        Ok(Shape {
            width: tw,
            height: th,
            mask: trimmed,
            support,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of 1-pixels in the mask.
    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    /// Support pixels in canonical order (row-major over 1-pixels).
    pub fn support(&self) -> &[(usize, usize)] {
        &self.support
    }

    pub fn mask_at(&self, x: usize, y: usize) -> bool {
        self.mask[y * self.width + x]
    }

    /// Side of the separation square: two placements whose origins are at
    /// Chebyshev distance >= this value cannot share a pixel.
    pub fn chebyshev_extent(&self) -> usize {
        self.width.max(self.height)
    }

    /// Bounding-box diagonal, the diameter used by the Euclidean separation
    /// rule.
    pub fn euclidean_diameter(&self) -> f64 {
        let w = (self.width - 1) as f64;
        let h = (self.height - 1) as f64;
        (w * w + h * h).sqrt()
    }
}

/// How two block placements are declared non-intersecting.
///
/// `Chebyshev` requires the origin offset to reach the bounding-box side; for
/// full squares this is exactly pixel-set disjointness, and for sparse masks
/// it is conservative. `Euclidean` requires the origin distance to exceed the
/// bounding-box diagonal, which excludes more pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SeparationRule {
    #[default]
    Chebyshev,
    Euclidean,
}

/// True iff the two placements cannot intersect under the default
/// (Chebyshev) separation rule.
pub fn origins_disjoint(a: Origin, b: Origin, shape: &Shape) -> bool {
    origins_disjoint_with(a, b, shape, SeparationRule::Chebyshev)
}

pub fn origins_disjoint_with(a: Origin, b: Origin, shape: &Shape, rule: SeparationRule) -> bool {
    match rule {
        SeparationRule::Chebyshev => a.chebyshev(b) >= shape.chebyshev_extent(),
        SeparationRule::Euclidean => {
            let dx = a.x.abs_diff(b.x) as f64;
            let dy = a.y.abs_diff(b.y) as f64;
            let diam = shape.euclidean_diameter();
            dx * dx + dy * dy > diam * diam
        }
    }
}

/// The set of origins r such that the shape placed at r stays inside the
/// image: 0 <= x <= width - w_s, 0 <= y <= height - h_s.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OriginRegion {
    width: usize,
    height: usize,
}

impl OriginRegion {
    /// Errors when the shape does not fit inside the image in either axis.
    pub fn of(image: &Image, shape: &Shape) -> Result<Self> {
        if shape.width() > image.width() || shape.height() > image.height() {
            return Err(Error::ShapeTooLarge {
                shape_width: shape.width(),
                shape_height: shape.height(),
                image_width: image.width(),
                image_height: image.height(),
            });
        }
        Ok(OriginRegion {
            width: image.width() - shape.width() + 1,
            height: image.height() - shape.height() + 1,
        })
    }

    pub fn from_dims(width: usize, height: usize) -> Self {
        OriginRegion { width, height }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, o: Origin) -> bool {
        o.x < self.width && o.y < self.height
    }

    /// Row-major linear index of an origin.
    pub fn index(&self, o: Origin) -> usize {
        o.y * self.width + o.x
    }

    pub fn origin_at(&self, index: usize) -> Origin {
        Origin::new(index % self.width, index / self.width)
    }

    /// Origins in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Origin> + '_ {
        let w = self.width;
        (0..self.len()).map(move |i| Origin::new(i % w, i / w))
    }
}
