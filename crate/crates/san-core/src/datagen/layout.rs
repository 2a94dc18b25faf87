//! The canonical UV atlas: named semantic cells at fixed pixel rectangles.

use crate::error::{Result, SanError};

/// One semantic cell: a half-open pixel rectangle `[x0, x1) x [y0, y1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub name: &'static str,
    pub x0: usize,
    pub y0: usize,
    pub x1: usize,
    pub y1: usize,
}

impl Cell {
    pub fn width(&self) -> usize {
        self.x1 - self.x0
    }
    pub fn height(&self) -> usize {
        self.y1 - self.y0
    }
    pub fn area(&self) -> usize {
        self.width() * self.height()
    }
    pub fn contains(&self, y: usize, x: usize) -> bool {
        x >= self.x0 && x < self.x1 && y >= self.y0 && y < self.y1
    }
}

/// Cell rectangles on a 16x16 fractional grid, scaled to the atlas resolution.
/// The grid is identical for every identity; that is the alignment guarantee.
const GRID: usize = 16;
const CELL_FRACTIONS: &[(&str, usize, usize, usize, usize)] = &[
    // (name, x0, y0, x1, y1) in 16ths of the atlas
    ("head", 6, 0, 10, 3),
    ("torso_front", 0, 3, 8, 9),
    ("torso_back", 8, 3, 16, 9),
    ("left_arm", 0, 9, 4, 12),
    ("right_arm", 4, 9, 8, 12),
    ("left_leg", 8, 9, 12, 16),
    ("right_leg", 12, 9, 16, 16),
    ("left_hand", 0, 12, 2, 16),
    ("right_hand", 2, 12, 4, 16),
    ("feet", 4, 12, 8, 16),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UVAtlasLayout {
    pub resolution: usize,
    pub cells: Vec<Cell>,
    /// Per-pixel cell index, `-1` for neutral (non-cell) pixels.
    cell_index: Vec<i16>,
}

impl UVAtlasLayout {
    /// Builds the canonical layout for a square atlas. The resolution must be
    /// a multiple of 16 so the fractional grid lands on integer pixels.
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution == 0 || resolution % GRID != 0 {
            return Err(SanError::Config(format!(
                "atlas resolution {resolution} must be a positive multiple of {GRID}"
            )));
        }
        let s = resolution / GRID;
        let cells: Vec<Cell> = CELL_FRACTIONS
            .iter()
            .map(|&(name, x0, y0, x1, y1)| Cell {
                name,
                x0: x0 * s,
                y0: y0 * s,
                x1: x1 * s,
                y1: y1 * s,
            })
            .collect();

        let mut cell_index = vec![-1i16; resolution * resolution];
        for (ci, cell) in cells.iter().enumerate() {
            for y in cell.y0..cell.y1 {
                for x in cell.x0..cell.x1 {
                    let slot = &mut cell_index[y * resolution + x];
                    assert_eq!(*slot, -1, "cells overlap at ({y},{x})");
                    *slot = ci as i16;
                }
            }
        }

        let layout = Self {
            resolution,
            cells,
            cell_index,
        };
        debug_assert!(layout.coverage() >= 0.8);
        Ok(layout)
    }

    /// Index of the cell containing an atlas pixel, if any.
    #[inline]
    pub fn cell_of(&self, y: usize, x: usize) -> Option<usize> {
        let v = self.cell_index[y * self.resolution + x];
        (v >= 0).then_some(v as usize)
    }

    /// Fraction of atlas pixels covered by cells.
    pub fn coverage(&self) -> f64 {
        let covered: usize = self.cells.iter().map(Cell::area).sum();
        covered as f64 / (self.resolution * self.resolution) as f64
    }

    /// Pixel coordinates of a cell, used by alignment checks.
    pub fn cell_pixels(&self, cell: usize) -> Vec<(usize, usize)> {
        let c = &self.cells[cell];
        let mut px = Vec::with_capacity(c.area());
        for y in c.y0..c.y1 {
            for x in c.x0..c.x1 {
                px.push((y, x));
            }
        }
        px
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_are_disjoint_and_cover_enough() {
        for res in [64usize, 256] {
            let layout = UVAtlasLayout::new(res).unwrap();
            // disjointness is asserted during construction; check coverage
            assert!(
                layout.coverage() >= 0.8,
                "coverage {} at res {res}",
                layout.coverage()
            );
        }
    }

    #[test]
    fn layout_is_resolution_scaled_copy() {
        let small = UVAtlasLayout::new(64).unwrap();
        let big = UVAtlasLayout::new(256).unwrap();
        for (a, b) in small.cells.iter().zip(&big.cells) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.x0 * 4, b.x0);
            assert_eq!(a.y1 * 4, b.y1);
        }
    }

    #[test]
    fn non_multiple_resolution_is_rejected() {
        assert!(UVAtlasLayout::new(100).is_err());
        assert!(UVAtlasLayout::new(0).is_err());
    }

    #[test]
    fn cell_of_matches_rectangles() {
        let layout = UVAtlasLayout::new(64).unwrap();
        for y in 0..64 {
            for x in 0..64 {
                let by_index = layout.cell_of(y, x);
                let by_scan = layout.cells.iter().position(|c| c.contains(y, x));
                assert_eq!(by_index, by_scan);
            }
        }
    }
}
