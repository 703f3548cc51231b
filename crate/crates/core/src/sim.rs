//! Seeded growth under the temperature-τ attachment rule.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{binding_strength, Assembly, GlueIndex, ModelError, Pos, TileId, TileSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("invalid tile system: {0}")]
    Invalid(#[from] ModelError),
    #[error("trace step {step}: tile {tile} at {pos} binds with strength {strength} < τ")]
    InvalidTrace { step: usize, pos: Pos, tile: TileId, strength: u32 },
    #[error("trace line {line}: {message}")]
    TraceSyntax { line: usize, message: String },
}

/// How the next site is picked among all attachable frontier sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrontierOrder {
    /// Lowest `(y, x)` first.
    #[default]
    Lexicographic,
    /// Oldest attachable site first.
    Fifo,
    /// Newest attachable site first.
    Lifo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub terminal: Assembly,
    pub steps: usize,
    pub trace: Vec<(Pos, TileId)>,
    /// False if any chosen site admitted two or more tile types.
    pub deterministic: bool,
    /// False if `max_steps` ran out with a non-empty frontier.
    pub halted: bool,
    /// Sites where more than one tile type could attach.
    pub conflicts: Vec<(Pos, Vec<TileId>)>,
}

pub fn grow(system: &TileSystem, max_steps: usize) -> Result<SimulationReport, SimError> {
    grow_with_order(system, max_steps, FrontierOrder::default())
}

pub fn grow_with_order(
    system: &TileSystem,
    max_steps: usize,
    order: FrontierOrder,
) -> Result<SimulationReport, SimError> {
    system.validate()?;
    let index = GlueIndex::new(system);
    let mut assembly = system.seed.clone();
    let mut frontier = Frontier::new(order);
    for p in assembly.perimeter() {
        frontier.offer(p, index.attachable(system, &assembly, p));
    }

    let mut trace = Vec::new();
    let mut conflicts = Vec::new();
    while trace.len() < max_steps {
        let Some((pos, tiles)) = frontier.take() else { break };
        if tiles.len() > 1 {
            conflicts.push((pos, tiles.clone()));
        }
        let tile = tiles[0];
        assembly.place(pos, tile)?;
        trace.push((pos, tile));
        for (_, q) in pos.neighbors() {
            if !assembly.is_occupied(q) {
                frontier.offer(q, index.attachable(system, &assembly, q));
            }
        }
    }

    Ok(SimulationReport {
        steps: trace.len(),
        halted: frontier.is_empty(),
        deterministic: conflicts.is_empty(),
        terminal: assembly,
        trace,
        conflicts,
    })
}

struct Frontier {
    order: FrontierOrder,
    sites: BTreeMap<Pos, Vec<TileId>>,
    queue: VecDeque<Pos>,
}

impl Frontier {
    fn new(order: FrontierOrder) -> Self {
        Frontier { order, sites: BTreeMap::new(), queue: VecDeque::new() }
    }

    fn offer(&mut self, pos: Pos, tiles: Vec<TileId>) {
        if tiles.is_empty() {
            return;
        }
        if self.sites.insert(pos, tiles).is_none() && self.order != FrontierOrder::Lexicographic {
            self.queue.push_back(pos);
        }
    }

    fn take(&mut self) -> Option<(Pos, Vec<TileId>)> {
        let pos = match self.order {
            FrontierOrder::Lexicographic => *self.sites.keys().next()?,
            FrontierOrder::Fifo => self.queue.pop_front()?,
            FrontierOrder::Lifo => self.queue.pop_back()?,
        };
        let tiles = self.sites.remove(&pos).expect("queued sites are tracked");
        Some((pos, tiles))
    }

    fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }
}

/// Re-applies `trace` on top of the seed, checking each attachment.
pub fn replay(system: &TileSystem, trace: &[(Pos, TileId)]) -> Result<Assembly, SimError> {
    system.validate()?;
    let mut assembly = system.seed.clone();
    for (step, &(pos, tile)) in trace.iter().enumerate() {
        let strength = binding_strength(system, &assembly, pos, tile)?;
        if strength < system.temperature {
            return Err(SimError::InvalidTrace { step, pos, tile, strength });
        }
        assembly.place(pos, tile)?;
    }
    Ok(assembly)
}

/// One `attach <step> <x> <y> <tileid>` line per step.
pub fn write_trace(trace: &[(Pos, TileId)]) -> String {
    let mut out = String::new();
    for (i, (p, t)) in trace.iter().enumerate() {
        let _ = writeln!(out, "attach {i} {} {} {t}", p.x, p.y);
    }
    out
}

pub fn parse_trace(text: &str) -> Result<Vec<(Pos, TileId)>, SimError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let err = |message: &str| SimError::TraceSyntax { line: idx + 1, message: message.to_string() };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let ["attach", step, x, y, t] = f[..] else {
            return Err(err("expected `attach <step> <x> <y> <tileid>`"));
        };
        if step.parse::<usize>().ok() != Some(out.len()) {
            return Err(err("step out of sequence"));
        }
        let x = x.parse().map_err(|_| err("bad x"))?;
        let y = y.parse().map_err(|_| err("bad y"))?;
        let t = t.parse().map_err(|_| err("bad tile id"))?;
        out.push((Pos::new(x, y), t));
    }
    Ok(out)
}
