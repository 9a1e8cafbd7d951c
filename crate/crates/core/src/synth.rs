//! Seeded synthetic images with planted anomalies.
//!
//! Every statistical test in the suite runs against images produced here, so
//! generation is fully deterministic: the same spec and seed always yield the
//! same pixels. Specs serialize to JSON with the same schema the CLI accepts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::shape::Origin;
use crate::{Error, Image, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SynthSpec {
    pub width: usize,
    pub height: usize,
    pub seed: u64,
    pub background: Background,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plant: Option<Plant>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Background {
    /// Independent per-pixel gaussian noise.
    Gaussian { mean: f64, sd: f64 },
    /// A random `period` x `period` tile repeated exactly across the image.
    Periodic { period: usize },
    Constant { value: f64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Plant {
    /// Top-left corner of the planted patch, [x, y].
    pub origin: [usize; 2],
    pub patch: Patch,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Patch {
    /// Gaussian noise with its own mean and deviation.
    Gaussian {
        mean: f64,
        sd: f64,
        width: usize,
        height: usize,
    },
    /// Replaces each covered pixel v with 1 - v.
    InvertedTile { width: usize, height: usize },
    /// Hard 0/1 checkerboard at pixel scale.
    Checker { width: usize, height: usize },
}

impl Patch {
    fn dims(&self) -> (usize, usize) {
        match *self {
            Patch::Gaussian { width, height, .. }
            | Patch::InvertedTile { width, height }
            | Patch::Checker { width, height } => (width, height),
        }
    }
}

/// Renders the spec. Returns the image and the planted origin, if any.
/// Intensities are clamped to [0,1] after planting, so the background
/// distribution is unchanged away from the plant.
pub fn generate(spec: &SynthSpec) -> Result<(Image, Option<Origin>)> {
    if spec.width == 0 || spec.height == 0 {
        return Err(Error::BadSynthSpec(format!(
            "dimensions must be positive, got {}x{}",
            spec.width, spec.height
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.width * spec.height;

    let mut data = match spec.background {
        Background::Gaussian { mean, sd } => {
            if sd < 0.0 {
                return Err(Error::BadSynthSpec(format!("negative background sd {sd}")));
            }
            (0..n)
                .map(|_| mean + sd * rng.sample::<f64, _>(StandardNormal))
                .collect::<Vec<f64>>()
        }
        Background::Periodic { period } => {
            if period == 0 {
                return Err(Error::BadSynthSpec("period must be positive".into()));
            }
            let tile: Vec<f64> = (0..period * period).map(|_| rng.random::<f64>()).collect();
            let mut data = vec![0.0; n];
            for y in 0..spec.height {
                for x in 0..spec.width {
                    data[y * spec.width + x] = tile[(y % period) * period + (x % period)];
                }
            }
            data
        }
        Background::Constant { value } => vec![value; n],
    };

    let mut truth = None;
    if let Some(plant) = &spec.plant {
        let [px, py] = plant.origin;
        let (pw, ph) = plant.patch.dims();
        if pw == 0 || ph == 0 {
            return Err(Error::BadSynthSpec("patch dimensions must be positive".into()));
        }
        if px + pw > spec.width || py + ph > spec.height {
            return Err(Error::BadSynthSpec(format!(
                "plant {pw}x{ph} at ({px}, {py}) exceeds image {}x{}",
                spec.width, spec.height
            )));
        }
        for dy in 0..ph {
            for dx in 0..pw {
                let idx = (py + dy) * spec.width + (px + dx);
                data[idx] = match plant.patch {
                    Patch::Gaussian { mean, sd, .. } => {
                        mean + sd * rng.sample::<f64, _>(StandardNormal)
                    }
                    Patch::InvertedTile { .. } => 1.0 - data[idx],
                    Patch::Checker { .. } => {
                        if (dx + dy) % 2 == 0 {
                            1.0
                        } else {
                            0.0
                        }
                    }
                };
            }
        }
        truth = Some(Origin::new(px, py));
    }

    for v in &mut data {
        *v = v.clamp(0.0, 1.0);
    }

    Ok((Image::new(spec.width, spec.height, data)?, truth))
}
