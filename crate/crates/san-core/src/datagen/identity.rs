//! Identity appearance: per-cell colors and patterns, deterministic in
//! `(id, seed)`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SanError};
use crate::img::ImageBuf;
use crate::rng::stream_n;

use super::layout::UVAtlasLayout;

/// Color of atlas pixels that belong to no cell.
pub const NEUTRAL: [f32; 3] = [0.5, 0.5, 0.5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    Solid,
    Stripes,
    Checker,
    Gradient,
    Dots,
}

impl PatternKind {
    pub const ALL: [PatternKind; 5] = [
        PatternKind::Solid,
        PatternKind::Stripes,
        PatternKind::Checker,
        PatternKind::Gradient,
        PatternKind::Dots,
    ];

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "solid" => Ok(PatternKind::Solid),
            "stripes" => Ok(PatternKind::Stripes),
            "checker" => Ok(PatternKind::Checker),
            "gradient" => Ok(PatternKind::Gradient),
            "dots" => Ok(PatternKind::Dots),
            other => Err(SanError::Config(format!("unknown pattern kind '{other}'"))),
        }
    }
}

/// Appearance of one semantic cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellAppearance {
    pub kind: PatternKind,
    pub base: [f32; 3],
    pub accent: [f32; 3],
    /// Pattern period in atlas pixels (stripes/checker/dots).
    pub period: usize,
    /// Pattern phase offset in atlas pixels.
    pub phase: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySpec {
    pub id: u32,
    pub seed: u64,
    pub cells: Vec<CellAppearance>,
}

fn hsv_to_rgb(h: f32, s: f32, v: f32) -> [f32; 3] {
    let h = (h.rem_euclid(1.0)) * 6.0;
    let i = h.floor() as i32 % 6;
    let f = h - h.floor();
    let p = v * (1.0 - s);
    let q = v * (1.0 - f * s);
    let t = v * (1.0 - (1.0 - f) * s);
    match i {
        0 => [v, t, p],
        1 => [q, v, p],
        2 => [p, v, t],
        3 => [p, q, v],
        4 => [t, p, v],
        _ => [v, p, q],
    }
}

impl IdentitySpec {
    /// Derives the appearance deterministically from `(id, seed)`.
    ///
    /// The torso-front hue follows a golden-ratio sequence in `id`, so any
    /// two distinct ids differ in at least that cell; remaining parameters
    /// are drawn from the per-identity stream.
    pub fn derive(
        id: u32,
        seed: u64,
        layout: &UVAtlasLayout,
        allowed: &[PatternKind],
    ) -> Result<Self> {
        if allowed.is_empty() {
            return Err(SanError::Config("empty pattern kind list".into()));
        }
        let mut rng: ChaCha8Rng = stream_n(seed, "identity", &[id as u64]);
        let scale = layout.resolution / 16; // pattern sizes scale with the atlas
        let mut cells = Vec::with_capacity(layout.cells.len());
        for (ci, _cell) in layout.cells.iter().enumerate() {
            let kind = allowed[rng.gen_range(0..allowed.len())];
            let (hue, sat, val);
            if ci == 1 {
                // torso_front: id-keyed hue guarantees distinct identities
                hue = ((id as f32 + 1.0) * 0.618_034).fract();
                sat = 0.55 + 0.4 * rng.gen::<f32>();
                val = 0.55 + 0.4 * rng.gen::<f32>();
            } else {
                hue = rng.gen::<f32>();
                sat = 0.3 + 0.65 * rng.gen::<f32>();
                val = 0.35 + 0.6 * rng.gen::<f32>();
            }
            let base = hsv_to_rgb(hue, sat, val);
            let accent = hsv_to_rgb(
                hue + 0.2 + 0.6 * rng.gen::<f32>(),
                0.3 + 0.6 * rng.gen::<f32>(),
                0.3 + 0.65 * rng.gen::<f32>(),
            );
            let period = (1 + rng.gen_range(1..=4)) * scale.max(1);
            let phase = rng.gen_range(0..period);
            cells.push(CellAppearance {
                kind,
                base,
                accent,
                period,
                phase,
            });
        }
        Ok(Self { id, seed, cells })
    }
}

fn pattern_color(app: &CellAppearance, dy: usize, dx: usize) -> [f32; 3] {
    let p = app.period.max(1);
    match app.kind {
        PatternKind::Solid => app.base,
        PatternKind::Stripes => {
            if ((dx + app.phase) / p) % 2 == 0 {
                app.base
            } else {
                app.accent
            }
        }
        PatternKind::Checker => {
            if (((dx + app.phase) / p) + ((dy + app.phase) / p)) % 2 == 0 {
                app.base
            } else {
                app.accent
            }
        }
        PatternKind::Gradient => {
            let t = ((dy + app.phase) % (2 * p)) as f32 / (2 * p) as f32;
            [
                app.base[0] * (1.0 - t) + app.accent[0] * t,
                app.base[1] * (1.0 - t) + app.accent[1] * t,
                app.base[2] * (1.0 - t) + app.accent[2] * t,
            ]
        }
        PatternKind::Dots => {
            let cx = (dx + app.phase) % p;
            let cy = (dy + app.phase) % p;
            let r = p as f32 * 0.3;
            let (fx, fy) = (cx as f32 - p as f32 / 2.0, cy as f32 - p as f32 / 2.0);
            if fx * fx + fy * fy <= r * r {
                app.accent
            } else {
                app.base
            }
        }
    }
}

/// Renders the identity's canonical texture image: each cell filled with its
/// pattern, non-cell pixels neutral.
pub fn make_identity_texture(spec: &IdentitySpec, layout: &UVAtlasLayout) -> Result<ImageBuf> {
    if spec.cells.len() != layout.cells.len() {
        return Err(SanError::Config(format!(
            "identity spec has {} cells, layout has {}",
            spec.cells.len(),
            layout.cells.len()
        )));
    }
    let res = layout.resolution;
    let mut tex = ImageBuf::filled(res, res, NEUTRAL);
    for (cell, app) in layout.cells.iter().zip(&spec.cells) {
        for y in cell.y0..cell.y1 {
            for x in cell.x0..cell.x1 {
                tex.set(y, x, pattern_color(app, y - cell.y0, x - cell.x0));
            }
        }
    }
    Ok(tex)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout() -> UVAtlasLayout {
        UVAtlasLayout::new(64).unwrap()
    }

    #[test]
    fn texture_is_deterministic() {
        let l = layout();
        let s1 = IdentitySpec::derive(3, 42, &l, &PatternKind::ALL).unwrap();
        let s2 = IdentitySpec::derive(3, 42, &l, &PatternKind::ALL).unwrap();
        assert_eq!(s1, s2);
        let t1 = make_identity_texture(&s1, &l).unwrap();
        let t2 = make_identity_texture(&s2, &l).unwrap();
        assert_eq!(t1.to_u8(), t2.to_u8());
    }

    #[test]
    fn distinct_ids_differ_on_at_least_one_percent_of_pixels() {
        let l = layout();
        let a = make_identity_texture(
            &IdentitySpec::derive(0, 7, &l, &PatternKind::ALL).unwrap(),
            &l,
        )
        .unwrap();
        let b = make_identity_texture(
            &IdentitySpec::derive(1, 7, &l, &PatternKind::ALL).unwrap(),
            &l,
        )
        .unwrap();
        // oracle: count differing pixels directly
        let (ab, bb) = (a.to_u8(), b.to_u8());
        let diff = ab
            .chunks(3)
            .zip(bb.chunks(3))
            .filter(|(x, y)| x != y)
            .count();
        let total = 64 * 64;
        assert!(
            diff as f64 / total as f64 >= 0.01,
            "only {diff}/{total} pixels differ"
        );
    }

    #[test]
    fn neutral_pixels_outside_cells() {
        let l = layout();
        let t = make_identity_texture(
            &IdentitySpec::derive(5, 9, &l, &PatternKind::ALL).unwrap(),
            &l,
        )
        .unwrap();
        for y in 0..64 {
            for x in 0..64 {
                if l.cell_of(y, x).is_none() {
                    assert_eq!(t.get(y, x), NEUTRAL);
                }
            }
        }
    }

    #[test]
    fn unknown_pattern_kind_is_config_error() {
        assert!(matches!(
            PatternKind::parse("plaid"),
            Err(SanError::Config(_))
        ));
    }
}
