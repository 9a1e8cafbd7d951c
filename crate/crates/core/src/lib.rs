//! Locate the most unusual fixed-shape part of a grayscale image.
//!
//! The rarest block of shape `S` is the one whose distance to its nearest
//! non-overlapping block of the same shape is largest. Computing that
//! directly costs a quadratic sweep over all block pairs ([`oracle`]), so the
//! main path estimates it instead: project every block onto `M` random
//! zero-mean unit-norm operators and count, per block, how often the
//! projection magnitude lands in the tail of the per-operator distribution
//! ([`projection`]). A Hopfield-style network with negative couplings between
//! blocks that project alike refines the scores so that repeated structures
//! suppress each other ([`network`]).
//!
//! [`synth`] generates seeded planted-anomaly images used as ground truth by
//! the statistical tests, and [`io`] handles PGM/PNG ingestion and heatmap
//! output for the command-line front end.

pub mod block;
pub mod image;
pub mod io;
pub mod network;
pub mod oracle;
pub mod projection;
pub mod shape;
pub mod synth;

pub use block::{block_distance, Block, Norm};
pub use image::Image;
pub use shape::{origins_disjoint, origins_disjoint_with, Origin, OriginRegion, SeparationRule, Shape};

/// Errors shared across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("image dimensions must be positive, got {width}x{height}")]
    BadImageDims { width: usize, height: usize },
    #[error("image data length {len} does not match {width}x{height}")]
    BadImageLen { width: usize, height: usize, len: usize },
    #[error("image intensities must be finite")]
    NonFiniteIntensity,
    #[error("shape support must contain at least 2 pixels, got {0}")]
    DegenerateShape(usize),
    #[error("shape {shape_width}x{shape_height} does not fit inside image {image_width}x{image_height}")]
    ShapeTooLarge {
        shape_width: usize,
        shape_height: usize,
        image_width: usize,
        image_height: usize,
    },
    #[error("origin ({x}, {y}) outside valid origin region {region_width}x{region_height}")]
    OriginOutOfRegion {
        x: usize,
        y: usize,
        region_width: usize,
        region_height: usize,
    },
    #[error("block length mismatch: {0} vs {1}")]
    BlockLengthMismatch(usize, usize),
    #[error("no pair of disjoint origins exists for this image and shape")]
    NoDisjointPair,
    #[error("expected {expected} projection fields, got {got}")]
    FieldCountMismatch { expected: usize, got: usize },
    #[error("cannot balance fluxes: {0}")]
    FluxBalance(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("synthesis spec invalid: {0}")]
    BadSynthSpec(String),
    #[error("pgm: {0}")]
    Pgm(String),
    #[error("png: {0}")]
    Png(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
