//! Small RGB image buffer used throughout the pipeline.
//!
//! Pixels are `f32` in `[0, 1]`, row-major `(y, x, channel)`. PNG IO
//! quantizes to 8-bit; loading dequantizes by `v / 255`.

use std::path::Path;

use crate::error::{Result, SanError};

#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuf {
    pub h: usize,
    pub w: usize,
    data: Vec<f32>,
}

impl ImageBuf {
    pub fn new(h: usize, w: usize) -> Self {
        Self::filled(h, w, [0.0; 3])
    }

    pub fn filled(h: usize, w: usize, rgb: [f32; 3]) -> Self {
        let mut data = Vec::with_capacity(h * w * 3);
        for _ in 0..h * w {
            data.extend_from_slice(&rgb);
        }
        Self { h, w, data }
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> [f32; 3] {
        let i = (y * self.w + x) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, rgb: [f32; 3]) {
        let i = (y * self.w + x) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }

    pub fn as_slice(&self) -> &[f32] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f32] {
        &mut self.data
    }

    /// Quantized 8-bit RGB bytes (the on-disk representation).
    pub fn to_u8(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8)
            .collect()
    }

    pub fn from_u8(h: usize, w: usize, bytes: &[u8]) -> Self {
        assert_eq!(bytes.len(), h * w * 3, "byte length mismatch");
        Self {
            h,
            w,
            data: bytes.iter().map(|&b| b as f32 / 255.0).collect(),
        }
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| SanError::io(dir, e))?;
        }
        let img =
            image::RgbImage::from_raw(self.w as u32, self.h as u32, self.to_u8()).expect("size");
        img.save_with_format(path, image::ImageFormat::Png)
            .map_err(|e| SanError::Data(format!("png encode {}: {e}", path.display())))
    }

    pub fn load_png(path: &Path) -> Result<Self> {
        let img = image::open(path)
            .map_err(|e| SanError::Data(format!("png decode {}: {e}", path.display())))?
            .to_rgb8();
        Ok(Self::from_u8(
            img.height() as usize,
            img.width() as usize,
            img.as_raw(),
        ))
    }

    /// Axis-aligned crop; the window must lie inside the image.
    pub fn crop(&self, y0: usize, x0: usize, h: usize, w: usize) -> Self {
        assert!(y0 + h <= self.h && x0 + w <= self.w, "crop out of bounds");
        let mut out = ImageBuf::new(h, w);
        for y in 0..h {
            for x in 0..w {
                out.set(y, x, self.get(y0 + y, x0 + x));
            }
        }
        out
    }

    /// Bilinear resize. Same-size requests return an exact copy.
    pub fn resize_bilinear(&self, out_h: usize, out_w: usize) -> Self {
        if out_h == self.h && out_w == self.w {
            return self.clone();
        }
        let mut out = ImageBuf::new(out_h, out_w);
        let sy = self.h as f32 / out_h as f32;
        let sx = self.w as f32 / out_w as f32;
        for oy in 0..out_h {
            // pixel-center mapping
            let fy = ((oy as f32 + 0.5) * sy - 0.5).clamp(0.0, self.h as f32 - 1.0);
            let y0 = fy.floor() as usize;
            let y1 = (y0 + 1).min(self.h - 1);
            let wy = fy - y0 as f32;
            for ox in 0..out_w {
                let fx = ((ox as f32 + 0.5) * sx - 0.5).clamp(0.0, self.w as f32 - 1.0);
                let x0 = fx.floor() as usize;
                let x1 = (x0 + 1).min(self.w - 1);
                let wx = fx - x0 as f32;
                let mut rgb = [0.0f32; 3];
                for c in 0..3 {
                    let top = self.get(y0, x0)[c] * (1.0 - wx) + self.get(y0, x1)[c] * wx;
                    let bot = self.get(y1, x0)[c] * (1.0 - wx) + self.get(y1, x1)[c] * wx;
                    rgb[c] = top * (1.0 - wy) + bot * wy;
                }
                out.set(oy, ox, rgb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u8_roundtrip_is_stable() {
        let mut img = ImageBuf::new(2, 3);
        img.set(0, 0, [0.0, 0.5, 1.0]);
        img.set(1, 2, [0.25, 0.75, 0.1]);
        let once = ImageBuf::from_u8(2, 3, &img.to_u8());
        let twice = ImageBuf::from_u8(2, 3, &once.to_u8());
        assert_eq!(once, twice);
    }

    #[test]
    fn same_size_resize_is_identity() {
        let mut img = ImageBuf::new(4, 5);
        img.set(2, 3, [0.3, 0.6, 0.9]);
        assert_eq!(img.resize_bilinear(4, 5), img);
    }

    #[test]
    fn crop_extracts_window() {
        let mut img = ImageBuf::new(4, 4);
        img.set(1, 2, [1.0, 0.0, 0.0]);
        let c = img.crop(1, 2, 2, 2);
        assert_eq!(c.get(0, 0), [1.0, 0.0, 0.0]);
        assert_eq!(c.get(1, 1), [0.0, 0.0, 0.0]);
    }
}
