//! Static pictures of assemblies.
//!
//! Text mode prints one character per cell, the first character of the
//! tile's label, with `.` for empty cells and the top row first. Image
//! mode writes a binary PPM with each tile filled in its color.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::model::{Assembly, Pos, TileSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Text,
    /// Square cells of `scale` pixels.
    Ppm {
        scale: usize,
    },
}

/// Columns to draw; `None` draws the bounding box.
pub type Crop = Option<RangeInclusive<i32>>;

fn extent(assembly: &Assembly, crop: &Crop) -> Option<(RangeInclusive<i32>, RangeInclusive<i32>)> {
    let (lo, hi) = assembly.bounds()?;
    let cols = crop.clone().unwrap_or(lo.x..=hi.x);
    Some((cols, lo.y..=hi.y))
}

pub fn render_text(system: &TileSystem, assembly: &Assembly, crop: &Crop) -> String {
    let Some((cols, rows)) = extent(assembly, crop) else {
        return String::new();
    };
    let mut out = String::new();
    for y in rows.rev() {
        for x in cols.clone() {
            let c = assembly
                .get(Pos::new(x, y))
                .and_then(|t| system.tiles.get(t))
                .and_then(|t| t.label.chars().next())
                .unwrap_or('.');
            out.push(c);
        }
        out.push('\n');
    }
    out
}

fn rgb(color: &str) -> [u8; 3] {
    match color.to_ascii_lowercase().as_str() {
        "red" => [220, 30, 30],
        "white" => [255, 255, 255],
        "blue" => [40, 80, 220],
        "purple" => [130, 50, 160],
        "gray" | "grey" => [150, 150, 150],
        "yellow" => [240, 220, 60],
        "green" => [40, 170, 70],
        "cyan" => [40, 200, 210],
        "orange" => [240, 140, 30],
        "pink" => [240, 150, 190],
        "black" => [0, 0, 0],
        _ => [255, 0, 255],
    }
}

pub fn render_ppm(system: &TileSystem, assembly: &Assembly, crop: &Crop, scale: usize) -> Vec<u8> {
    let scale = scale.max(1);
    let Some((cols, rows)) = extent(assembly, crop) else {
        return b"P6\n0 0\n255\n".to_vec();
    };
    let (w, h) = (cols.clone().count(), rows.clone().count());
    let mut out = Vec::new();
    let mut header = String::new();
    let _ = write!(header, "P6\n{} {}\n255\n", w * scale, h * scale);
    out.extend_from_slice(header.as_bytes());
    for y in rows.rev() {
        let line: Vec<[u8; 3]> = cols
            .clone()
            .map(|x| {
                assembly.get(Pos::new(x, y)).and_then(|t| system.tiles.get(t)).map_or([0, 0, 0], |t| rgb(&t.color))
            })
            .collect();
        for _ in 0..scale {
            for px in &line {
                for _ in 0..scale {
                    out.extend_from_slice(px);
                }
            }
        }
    }
    out
}

pub fn render(system: &TileSystem, assembly: &Assembly, style: RenderStyle, crop: &Crop) -> Vec<u8> {
    match style {
        RenderStyle::Text => render_text(system, assembly, crop).into_bytes(),
        RenderStyle::Ppm { scale } => render_ppm(system, assembly, crop, scale),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::fig1_system;

    #[test]
    fn seed_only_text() {
        let sys = fig1_system();
        assert_eq!(render_text(&sys, &sys.seed, &None), "s.\nss\n");
    }

    #[test]
    fn crop_limits_columns() {
        let sys = fig1_system();
        assert_eq!(render_text(&sys, &sys.seed, &Some(1..=1)), ".\ns\n");
    }

    #[test]
    fn ppm_size_and_colors() {
        let sys = fig1_system();
        let img = render_ppm(&sys, &sys.seed, &None, 2);
        let header = b"P6\n4 4\n255\n";
        assert_eq!(&img[..header.len()], header);
        assert_eq!(img.len(), header.len() + 4 * 4 * 3);
        // Top-right cell is empty.
        let top_right = header.len() + 2 * 3;
        assert_eq!(&img[top_right..top_right + 3], &[0, 0, 0]);
    }
}
