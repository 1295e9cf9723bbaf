//! Raster images of expansion digits, one row per family member.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::Result;
use crate::expander::GreedyExpander;
use crate::family::{pisot_root_of, FamilySeries};

pub const ZERO_RGB: [u8; 3] = [0, 255, 0];
pub const ONE_RGB: [u8; 3] = [0, 0, 0];
pub const NO_ROOT_RGB: [u8; 3] = [255, 255, 255];

/// Row-major RGB pixels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasterImage {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>,
}

impl RasterImage {
    pub fn pixel(&self, row: usize, col: usize) -> [u8; 3] {
        let i = 3 * (row * self.width + col);
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    /// Binary PPM (P6, maxval 255).
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }
}

/// The first `width` digits of the expansion of `series.at(n)`, or `None`
/// when that member has no Pisot root in `(1, 2)`.
pub fn row_digits(series: &FamilySeries, n: u32, width: usize) -> Result<Option<Vec<u8>>> {
    let Some(beta) = pisot_root_of(&series.at(n)?)? else {
        return Ok(None);
    };
    Ok(Some(GreedyExpander::new(&beta)?.digits(width)))
}

/// One row per `n` in ascending order: digit 0 green, digit 1 black,
/// members without a root white.
pub fn render_series(series: &FamilySeries, ns: RangeInclusive<u32>, width: usize) -> Result<RasterImage> {
    let ns: Vec<u32> = ns.collect();
    let rows = ns
        .par_iter()
        .map(|&n| row_digits(series, n, width))
        .collect::<Result<Vec<_>>>()?;
    let mut pixels = Vec::with_capacity(3 * width * rows.len());
    for row in &rows {
        match row {
            Some(digits) => {
                for &d in digits {
                    pixels.extend_from_slice(if d == 0 { &ZERO_RGB } else { &ONE_RGB });
                }
            }
            None => (0..width).for_each(|_| pixels.extend_from_slice(&NO_ROOT_RGB)),
        }
    }
    Ok(RasterImage { width, height: rows.len(), pixels })
}
