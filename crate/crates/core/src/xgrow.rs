//! xgrow `.tiles` files.
//!
//! ```text
//! % tileset add_8_tile_12,6
//! % temperature=2
//! tile edges matches {{N E S W}*}
//! num tile types=3
//! num binding types=2
//! tile edges={
//! {1 0 0 2}(blue) % BR
//! ...
//! }
//! binding strengths={2 1}
//! % seed 6 0 0
//! ```
//!
//! Glue 0 is the null glue. Other glues are numbered by first use, walking
//! the seed tiles and then all tile types in id order, edges in N E S W
//! order; glues no tile uses come last. Temperature and seed positions are
//! carried in `%` comments. Seed tile ids are 0-based rows of the
//! `tile edges` block. A file without seed comments gets tile 0 at the
//! origin as its seed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{GlueId, ModelError, Pos, TileId, TileSystem, TileSystemBuilder, DEFAULT_TEMPERATURE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum XgrowError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` stanza")]
    MissingStanza(&'static str),
    #[error("`{stanza}` declares {declared} entries but lists {found}")]
    CountMismatch { stanza: &'static str, declared: usize, found: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XgrowTile {
    /// Glue indices, N E S W.
    pub edges: [usize; 4],
    pub color: Option<String>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XgrowDocument {
    pub name: Option<String>,
    pub temperature: u32,
    pub tiles: Vec<XgrowTile>,
    /// Strength of glue `i + 1`.
    pub binding_strengths: Vec<u32>,
    pub seed: Vec<(Pos, TileId)>,
    /// Comments and directives this module does not interpret, verbatim.
    pub extra: Vec<String>,
}

impl XgrowDocument {
    pub fn num_tile_types(&self) -> usize {
        self.tiles.len()
    }

    pub fn num_binding_types(&self) -> usize {
        self.binding_strengths.len()
    }

    pub fn from_system(system: &TileSystem) -> Self {
        let mut index: BTreeMap<GlueId, usize> = BTreeMap::new();
        let mut order: Vec<GlueId> = Vec::new();
        let mut visit = |g: GlueId| {
            if !g.is_null() && !index.contains_key(&g) {
                order.push(g);
                index.insert(g, order.len());
            }
        };
        for (_, t) in system.seed.iter() {
            system.tiles[t].edges.iter().for_each(|&g| visit(g));
        }
        for t in &system.tiles {
            t.edges.iter().for_each(|&g| visit(g));
        }
        for g in 1..system.glues.len() {
            visit(GlueId(g));
        }
        let tiles = system
            .tiles
            .iter()
            .map(|t| XgrowTile {
                edges: t.edges.map(|g| if g.is_null() { 0 } else { index[&g] }),
                color: (!t.color.is_empty()).then(|| t.color.clone()),
                label: (!t.label.is_empty()).then(|| t.label.clone()),
            })
            .collect();
        XgrowDocument {
            name: Some(system.name.clone()),
            temperature: system.temperature,
            tiles,
            binding_strengths: order.iter().map(|&g| system.glue(g).strength).collect(),
            seed: system.seed.iter().collect(),
            extra: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "% tileset {}", ascii(name));
        }
        let _ = writeln!(out, "% temperature={}", self.temperature);
        for e in &self.extra {
            let _ = writeln!(out, "{e}");
        }
        out.push_str("tile edges matches {{N E S W}*}\n");
        let _ = writeln!(out, "num tile types={}", self.num_tile_types());
        let _ = writeln!(out, "num binding types={}", self.num_binding_types());
        out.push_str("tile edges={\n");
        for t in &self.tiles {
            let [n, e, s, w] = t.edges;
            let _ = write!(out, "{{{n} {e} {s} {w}}}");
            if let Some(c) = &t.color {
                let _ = write!(out, "({})", ascii(c));
            }
            if let Some(l) = &t.label {
                let _ = write!(out, " % {}", ascii(l));
            }
            out.push('\n');
        }
        out.push_str("}\n");
        let strengths: Vec<String> = self.binding_strengths.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "binding strengths={{{}}}", strengths.join(" "));
        for (p, t) in &self.seed {
            let _ = writeln!(out, "% seed {} {} {t}", p.x, p.y);
        }
        out
    }

    /// Glues are named `g<index>`.
    pub fn to_system(&self) -> Result<TileSystem, XgrowError> {
        let mut b = TileSystemBuilder::new(self.name.clone().unwrap_or_else(|| "xgrow".into()));
        b.temperature(self.temperature);
        let mut glues = vec![GlueId::NULL];
        for (i, &s) in self.binding_strengths.iter().enumerate() {
            glues.push(b.glue(&format!("g{}", i + 1), s)?);
        }
        for (id, t) in self.tiles.iter().enumerate() {
            let mut edges = [GlueId::NULL; 4];
            for (slot, &g) in edges.iter_mut().zip(&t.edges) {
                *slot = *glues.get(g).ok_or(ModelError::UnknownGlue(g))?;
            }
            let label = t.label.clone().unwrap_or_else(|| format!("t{id}"));
            b.tile(label, edges, t.color.clone().unwrap_or_default());
        }
        if self.seed.is_empty() && !self.tiles.is_empty() {
            b.seed(Pos::new(0, 0), 0)?;
        }
        for &(p, t) in &self.seed {
            b.seed(p, t)?;
        }
        Ok(b.build()?)
    }
}

fn ascii(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_graphic() { c } else { '_' }).collect()
}

pub fn emit_tiles(system: &TileSystem) -> (XgrowDocument, String) {
    let doc = XgrowDocument::from_system(system);
    let text = doc.to_text();
    (doc, text)
}

/// `<system name>.tiles`; the generators name systems
/// `<op>_<variant>_<inputs joined by ','>`.
pub fn tiles_file_name(system: &TileSystem) -> String {
    format!("{}.tiles", ascii(&system.name))
}

/// Equal up to glue names.
pub fn structurally_equal(a: &TileSystem, b: &TileSystem) -> bool {
    let strip = |s: &TileSystem| XgrowDocument { name: None, ..XgrowDocument::from_system(s) };
    a.temperature == b.temperature && strip(a) == strip(b)
}

fn braces(line: usize, text: &str) -> Result<&str, XgrowError> {
    text.trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| XgrowError::Syntax { line, message: format!("expected `{{...}}`, found `{text}`") })
}

fn parse_tile_row(line: usize, text: &str) -> Result<XgrowTile, XgrowError> {
    let err = |message: String| XgrowError::Syntax { line, message };
    let (body, label) = match text.split_once('%') {
        Some((b, l)) => (b.trim(), Some(l.trim().to_string()).filter(|l| !l.is_empty())),
        None => (text.trim(), None),
    };
    let close = body.find('}').ok_or_else(|| err("unterminated tile row".into()))?;
    let fields: Vec<usize> = braces(line, &body[..=close])?
        .split_whitespace()
        .map(|f| f.parse().map_err(|_| err(format!("bad glue index `{f}`"))))
        .collect::<Result<_, _>>()?;
    let edges: [usize; 4] = fields.try_into().map_err(|_| err("tile row needs 4 glue indices".into()))?;
    let rest = body[close + 1..].trim();
    let color = if rest.is_empty() {
        None
    } else {
        let c = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err(format!("bad color `{rest}`")))?;
        Some(c.to_string())
    };
    Ok(XgrowTile { edges, color, label })
}

fn count(line: usize, v: &str) -> Result<usize, XgrowError> {
    v.trim().parse().map_err(|_| XgrowError::Syntax { line, message: format!("bad count `{v}`") })
}

pub fn parse_document(text: &str) -> Result<XgrowDocument, XgrowError> {
    let mut doc = XgrowDocument {
        name: None,
        temperature: DEFAULT_TEMPERATURE,
        tiles: Vec::new(),
        binding_strengths: Vec::new(),
        seed: Vec::new(),
        extra: Vec::new(),
    };
    let (mut num_tiles, mut num_bindings) = (None, None);
    let (mut saw_tiles, mut saw_strengths) = (false, false);
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    while let Some((ln, line)) = lines.next() {
        let err = |message: String| XgrowError::Syntax { line: ln, message };
        if line.is_empty() || line.starts_with("tile edges matches") {
            continue;
        }
        if let Some(c) = line.strip_prefix('%') {
            let c = c.trim();
            if let Some(t) = c.strip_prefix("temperature=") {
                doc.temperature = t.trim().parse().map_err(|_| err(format!("bad temperature `{t}`")))?;
            } else if let Some(n) = c.strip_prefix("tileset ") {
                doc.name = Some(n.trim().to_string());
            } else if let Some(s) = c.strip_prefix("seed ") {
                let v: Vec<i64> = s
                    .split_whitespace()
                    .map(|f| f.parse().map_err(|_| err(format!("bad seed field `{f}`"))))
                    .collect::<Result<_, _>>()?;
                let [x, y, t] = v[..] else {
                    return Err(err("expected `% seed <x> <y> <tileid>`".into()));
                };
                if t < 0 {
                    return Err(err("negative seed tile id".into()));
                }
                doc.seed.push((Pos::new(x as i32, y as i32), t as usize));
            } else {
                doc.extra.push(line.to_string());
            }
        } else if let Some(v) = line.strip_prefix("num tile types=") {
            num_tiles = Some(count(ln, v)?);
        } else if let Some(v) = line.strip_prefix("num binding types=") {
            num_bindings = Some(count(ln, v)?);
        } else if let Some(rest) = line.strip_prefix("tile edges=") {
            saw_tiles = true;
            let rest = rest.trim();
            if rest != "{" {
                return Err(err("expected `tile edges={` on its own line".into()));
            }
            loop {
                let Some((ln, row)) = lines.next() else {
                    return Err(XgrowError::Syntax { line: ln, message: "unterminated `tile edges` block".into() });
                };
                if row == "}" {
                    break;
                }
                if row.is_empty() || row.starts_with('%') {
                    continue;
                }
                doc.tiles.push(parse_tile_row(ln, row)?);
            }
        } else if let Some(rest) = line.strip_prefix("binding strengths=") {
            saw_strengths = true;
            doc.binding_strengths = braces(ln, rest)?
                .split_whitespace()
                .map(|f| f.parse().map_err(|_| err(format!("bad strength `{f}`"))))
                .collect::<Result<_, _>>()?;
        } else {
            doc.extra.push(format!("% {line}"));
        }
    }
    if !saw_tiles {
        return Err(XgrowError::MissingStanza("tile edges"));
    }
    if !saw_strengths {
        return Err(XgrowError::MissingStanza("binding strengths"));
    }
    if let Some(d) = num_tiles {
        if d != doc.tiles.len() {
            return Err(XgrowError::CountMismatch { stanza: "num tile types", declared: d, found: doc.tiles.len() });
        }
    }
    if let Some(d) = num_bindings {
        if d != doc.binding_strengths.len() {
            return Err(XgrowError::CountMismatch {
                stanza: "num binding types",
                declared: d,
                found: doc.binding_strengths.len(),
            });
        }
    }
    Ok(doc)
}

pub fn parse_tiles(text: &str) -> Result<TileSystem, XgrowError> {
    parse_document(text)?.to_system()
}
