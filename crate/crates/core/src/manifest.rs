//! Line-oriented text manifest for [`TileSystem`]s.
//!
//! ```text
//! # comment
//! tileset add8 temperature=2
//! glue add8:$1 2
//! tile 0 BR N=add8:r1 E=- S=- W=add8:$1 color=gray
//! seed 8 0 0
//! ```
//!
//! The null glue is written as `-`. Only whole lines starting with `#` are
//! comments, since glue names may contain `#`. Labels and colors must not contain
//! whitespace; [`write_manifest`] replaces any with `_`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{GlueId, ModelError, Pos, TileSystem, TileSystemBuilder};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifestError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `tileset` header")]
    MissingHeader,
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn token(s: &str) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect()
    }
}

pub fn write_manifest(system: &TileSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tileset {} temperature={}", token(&system.name), system.temperature);
    for g in &system.glues[1..] {
        let _ = writeln!(out, "glue {} {}", g.name, g.strength);
    }
    let name = |g: GlueId| if g.is_null() { "-".to_string() } else { system.glue(g).name.clone() };
    for t in &system.tiles {
        let [n, e, s, w] = t.edges.map(name);
        let _ = writeln!(out, "tile {} {} N={n} E={e} S={s} W={w} color={}", t.id, token(&t.label), token(&t.color));
    }
    for (p, t) in system.seed.iter() {
        let _ = writeln!(out, "seed {} {} {}", p.x, p.y, t);
    }
    out
}

pub fn parse_manifest(text: &str) -> Result<TileSystem, ManifestError> {
    let mut builder: Option<TileSystemBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| ManifestError::Syntax { line: line_no, message };
        let line = raw.trim();
        // Glue names may contain `#`, so only whole-line comments exist.
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "tileset" => {
                let [_, name, temp] = fields[..] else {
                    return Err(err("expected `tileset <name> temperature=<t>`".into()));
                };
                let t = temp
                    .strip_prefix("temperature=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| err(format!("bad temperature `{temp}`")))?;
                let mut b = TileSystemBuilder::new(name);
                b.temperature(t);
                builder = Some(b);
            }
            "glue" => {
                let b = builder.as_mut().ok_or(ManifestError::MissingHeader)?;
                let [_, name, strength] = fields[..] else {
                    return Err(err("expected `glue <name> <strength>`".into()));
                };
                let s = strength.parse().map_err(|_| err(format!("bad strength `{strength}`")))?;
                b.glue(name, s)?;
            }
            "tile" => {
                let b = builder.as_mut().ok_or(ManifestError::MissingHeader)?;
                let [_, id, label, n, e, s, w, color] = fields[..] else {
                    return Err(err("expected `tile <id> <label> N= E= S= W= color=`".into()));
                };
                let id: usize = id.parse().map_err(|_| err(format!("bad tile id `{id}`")))?;
                if id != b.tile_count() {
                    return Err(err(format!("tile id {id} out of order")));
                }
                let mut edges = [GlueId::NULL; 4];
                for (slot, (field, key)) in edges.iter_mut().zip([(n, "N="), (e, "E="), (s, "S="), (w, "W=")]) {
                    let g = field.strip_prefix(key).ok_or_else(|| err(format!("expected `{key}` in `{field}`")))?;
                    if g != "-" {
                        *slot = b.glue_id(g).ok_or_else(|| err(format!("undeclared glue `{g}`")))?;
                    }
                }
                let color = color.strip_prefix("color=").ok_or_else(|| err("expected `color=`".into()))?;
                b.tile(label, edges, color);
            }
            "seed" => {
                let b = builder.as_mut().ok_or(ManifestError::MissingHeader)?;
                let [_, x, y, t] = fields[..] else {
                    return Err(err("expected `seed <x> <y> <tileid>`".into()));
                };
                let parse = |v: &str| v.parse::<i64>().map_err(|_| err(format!("bad integer `{v}`")));
                let (x, y, t) = (parse(x)?, parse(y)?, parse(t)?);
                b.seed(Pos::new(x as i32, y as i32), t as usize)?;
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    Ok(builder.ok_or(ManifestError::MissingHeader)?.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TileSystemBuilder;

    fn sample() -> TileSystem {
        let mut b = TileSystemBuilder::new("sample");
        let g = b.glue("g", 2).unwrap();
        let h = b.glue("h", 1).unwrap();
        let s = b.tile("seed", [g, GlueId::NULL, GlueId::NULL, h], "gray");
        b.tile("up", [GlueId::NULL, GlueId::NULL, g, GlueId::NULL], "red");
        b.seed(Pos::new(0, 0), s).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn round_trip() {
        let sys = sample();
        let text = write_manifest(&sys);
        assert_eq!(parse_manifest(&text).unwrap(), sys);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# hello\n\n{}", write_manifest(&sample()));
        assert_eq!(parse_manifest(&text).unwrap(), sample());
    }

    #[test]
    fn undeclared_glue_is_positioned() {
        let text = "tileset x temperature=2\ntile 0 a N=nope E=- S=- W=- color=gray\nseed 0 0 0\n";
        match parse_manifest(text) {
            Err(ManifestError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
