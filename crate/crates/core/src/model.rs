//! Glues, tile types, tile systems and assemblies of the abstract Tile
//! Assembly Model.
//!
//! Coordinates follow a single convention everywhere in the crate: `+x` is
//! east and `+y` is north. Tiles are never rotated, so each edge of a
//! [`TileType`] keeps its compass role.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Dense index of a tile type inside its [`TileSystem`].
pub type TileId = usize;

/// Default temperature used by every construction in this crate.
pub const DEFAULT_TEMPERATURE: u32 = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("site {0} is already occupied")]
    OccupiedSite(Pos),
    #[error("unknown tile id {0}")]
    UnknownTile(TileId),
    #[error("unknown glue id {0}")]
    UnknownGlue(usize),
    #[error("glue `{name}` declared with strengths {first} and {second}")]
    GlueRedeclared { name: String, first: u32, second: u32 },
    #[error("glue name `{0}` is reserved or contains whitespace")]
    BadGlueName(String),
    #[error("temperature must be at least 1")]
    ZeroTemperature,
    #[error("seed assembly is empty")]
    EmptySeed,
    #[error("seed assembly is not connected")]
    DisconnectedSeed,
    #[error("tile id {found} at index {index}; ids must be contiguous from 0")]
    NonContiguousIds { index: usize, found: TileId },
    #[error("glue table slot 0 must be the null glue")]
    MissingNullGlue,
    #[error("duplicate glue name `{0}`")]
    DuplicateGlue(String),
}

/// Lattice position. Ordering is lexicographic on `(y, x)`, which is the
/// simulator's default frontier selection order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pos {
    pub x: i32,
    pub y: i32,
}

impl Pos {
    pub const fn new(x: i32, y: i32) -> Self {
        Pos { x, y }
    }

    pub fn step(self, dir: Dir) -> Pos {
        let (dx, dy) = dir.offset();
        Pos::new(self.x + dx, self.y + dy)
    }

    pub fn neighbors(self) -> impl Iterator<Item = (Dir, Pos)> {
        Dir::ALL.into_iter().map(move |d| (d, self.step(d)))
    }
}

impl Ord for Pos {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Pos {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

impl Dir {
    /// Edge order used by xgrow and by [`TileType::edges`].
    pub const ALL: [Dir; 4] = [Dir::North, Dir::East, Dir::South, Dir::West];

    pub fn offset(self) -> (i32, i32) {
        match self {
            Dir::North => (0, 1),
            Dir::East => (1, 0),
            Dir::South => (0, -1),
            Dir::West => (-1, 0),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::East => Dir::West,
            Dir::South => Dir::North,
            Dir::West => Dir::East,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Index into a system's glue table. Slot 0 is always the null glue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GlueId(pub usize);

impl GlueId {
    pub const NULL: GlueId = GlueId(0);

    pub fn is_null(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glue {
    pub name: String,
    pub strength: u32,
}

impl Glue {
    pub fn null() -> Self {
        Glue { name: String::new(), strength: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileType {
    pub id: TileId,
    pub label: String,
    /// Glues in N, E, S, W order.
    pub edges: [GlueId; 4],
    pub color: String,
}

impl TileType {
    pub fn glue(&self, dir: Dir) -> GlueId {
        self.edges[dir.index()]
    }
}

/// Partial map from lattice positions to tile ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assembly {
    placements: BTreeMap<Pos, TileId>,
}

impl Assembly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, pos: Pos) -> Option<TileId> {
        self.placements.get(&pos).copied()
    }

    pub fn is_occupied(&self, pos: Pos) -> bool {
        self.placements.contains_key(&pos)
    }

    /// Places `tile` at `pos`; fails if the site is taken.
    pub fn place(&mut self, pos: Pos, tile: TileId) -> Result<(), ModelError> {
        if self.placements.contains_key(&pos) {
            return Err(ModelError::OccupiedSite(pos));
        }
        self.placements.insert(pos, tile);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Placements in `(y, x)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Pos, TileId)> + '_ {
        self.placements.iter().map(|(p, t)| (*p, *t))
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> + '_ {
        self.placements.keys().copied()
    }

    /// `(min, max)` corners of the bounding box, or `None` when empty.
    pub fn bounds(&self) -> Option<(Pos, Pos)> {
        let mut it = self.placements.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }

    /// Connectivity under 4-neighbour adjacency. The empty assembly is not
    /// considered connected.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.placements.keys().next().copied() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for (_, q) in p.neighbors() {
                if self.is_occupied(q) && seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen.len() == self.placements.len()
    }

    /// Empty positions with at least one occupied neighbour.
    pub fn perimeter(&self) -> BTreeSet<Pos> {
        self.placements.keys().flat_map(|p| p.neighbors().map(|(_, q)| q)).filter(|q| !self.is_occupied(*q)).collect()
    }
}

impl FromIterator<(Pos, TileId)> for Assembly {
    fn from_iter<I: IntoIterator<Item = (Pos, TileId)>>(iter: I) -> Self {
        Assembly { placements: iter.into_iter().collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileSystem {
    pub name: String,
    /// Slot 0 holds the null glue.
    pub glues: Vec<Glue>,
    pub tiles: Vec<TileType>,
    pub seed: Assembly,
    pub temperature: u32,
}

impl TileSystem {
    pub fn glue(&self, id: GlueId) -> &Glue {
        &self.glues[id.0]
    }

    pub fn tile(&self, id: TileId) -> Result<&TileType, ModelError> {
        self.tiles.get(id).ok_or(ModelError::UnknownTile(id))
    }

    pub fn glue_by_name(&self, name: &str) -> Option<GlueId> {
        self.glues.iter().position(|g| g.name == name).map(GlueId)
    }

    pub fn tile_by_label(&self, label: &str) -> Option<TileId> {
        self.tiles.iter().find(|t| t.label == label).map(|t| t.id)
    }

    /// Strength contributed by two abutting edges: the glue strength when
    /// the names match, zero otherwise.
    pub fn edge_strength(&self, a: GlueId, b: GlueId) -> u32 {
        if a.is_null() || b.is_null() || a != b {
            0
        } else {
            self.glues[a.0].strength
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.temperature == 0 {
            return Err(ModelError::ZeroTemperature);
        }
        match self.glues.first() {
            Some(g) if g.name.is_empty() && g.strength == 0 => {}
            _ => return Err(ModelError::MissingNullGlue),
        }
        let mut names = BTreeSet::new();
        for g in &self.glues[1..] {
            if g.name.is_empty() || g.name.chars().any(char::is_whitespace) || g.name == "-" {
                return Err(ModelError::BadGlueName(g.name.clone()));
            }
            if !names.insert(g.name.as_str()) {
                return Err(ModelError::DuplicateGlue(g.name.clone()));
            }
        }
        for (index, t) in self.tiles.iter().enumerate() {
            if t.id != index {
                return Err(ModelError::NonContiguousIds { index, found: t.id });
            }
            for g in t.edges {
                if g.0 >= self.glues.len() {
                    return Err(ModelError::UnknownGlue(g.0));
                }
            }
        }
        if self.seed.is_empty() {
            return Err(ModelError::EmptySeed);
        }
        for (_, t) in self.seed.iter() {
            self.tile(t)?;
        }
        if !self.seed.is_connected() {
            return Err(ModelError::DisconnectedSeed);
        }
        Ok(())
    }
}

/// Summed glue strength `tile` would bind with if placed at `pos`.
pub fn binding_strength(system: &TileSystem, assembly: &Assembly, pos: Pos, tile: TileId) -> Result<u32, ModelError> {
    if assembly.is_occupied(pos) {
        return Err(ModelError::OccupiedSite(pos));
    }
    let candidate = system.tile(tile)?;
    let mut total = 0;
    for (dir, q) in pos.neighbors() {
        if let Some(other) = assembly.get(q) {
            let other = system.tile(other)?;
            total += system.edge_strength(candidate.glue(dir), other.glue(dir.opposite()));
        }
    }
    Ok(total)
}

/// All empty sites adjacent to `assembly` paired with the tile ids that can
/// attach there. Sites with no attachable tile are omitted, so the result is
/// empty exactly when the assembly is terminal.
pub fn frontier(system: &TileSystem, assembly: &Assembly) -> BTreeMap<Pos, Vec<TileId>> {
    let index = GlueIndex::new(system);
    assembly
        .perimeter()
        .into_iter()
        .filter_map(|p| {
            let tiles = index.attachable(system, assembly, p);
            (!tiles.is_empty()).then_some((p, tiles))
        })
        .collect()
}

/// Lookup from `(side, glue)` to the tiles exposing that glue on that side.
#[derive(Debug, Clone)]
pub(crate) struct GlueIndex {
    by_side: [Vec<Vec<TileId>>; 4],
}

impl GlueIndex {
    pub(crate) fn new(system: &TileSystem) -> Self {
        let empty = || vec![Vec::new(); system.glues.len()];
        let mut by_side = [empty(), empty(), empty(), empty()];
        for t in &system.tiles {
            for d in Dir::ALL {
                let g = t.glue(d);
                if !g.is_null() && g.0 < system.glues.len() {
                    by_side[d.index()][g.0].push(t.id);
                }
            }
        }
        GlueIndex { by_side }
    }

    /// Sorted ids of tiles binding at `pos` with strength at least the
    /// system temperature.
    pub(crate) fn attachable(&self, system: &TileSystem, assembly: &Assembly, pos: Pos) -> Vec<TileId> {
        if assembly.is_occupied(pos) {
            return Vec::new();
        }
        let mut strength: HashMap<TileId, u32> = HashMap::new();
        for (dir, q) in pos.neighbors() {
            let Some(other) = assembly.get(q) else { continue };
            let facing = system.tiles[other].glue(dir.opposite());
            if facing.is_null() {
                continue;
            }
            let s = system.glue(facing).strength;
            if s == 0 {
                continue;
            }
            for &t in &self.by_side[dir.index()][facing.0] {
                *strength.entry(t).or_default() += s;
            }
        }
        let mut out: Vec<TileId> =
            strength.into_iter().filter(|&(_, s)| s >= system.temperature).map(|(t, _)| t).collect();
        out.sort_unstable();
        out
    }
}

/// Incremental constructor for [`TileSystem`]s. Glues are interned by name.
#[derive(Debug, Clone)]
pub struct TileSystemBuilder {
    name: String,
    glues: Vec<Glue>,
    by_name: HashMap<String, GlueId>,
    tiles: Vec<TileType>,
    seed: Assembly,
    temperature: u32,
}

impl TileSystemBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        TileSystemBuilder {
            name: name.into(),
            glues: vec![Glue::null()],
            by_name: HashMap::new(),
            tiles: Vec::new(),
            seed: Assembly::new(),
            temperature: DEFAULT_TEMPERATURE,
        }
    }

    pub fn temperature(&mut self, t: u32) -> &mut Self {
        self.temperature = t;
        self
    }

    /// Interns a glue, returning the existing id if the name is known.
    pub fn glue(&mut self, name: &str, strength: u32) -> Result<GlueId, ModelError> {
        if name.is_empty() || name == "-" || name.chars().any(char::is_whitespace) {
            return Err(ModelError::BadGlueName(name.to_string()));
        }
        if let Some(&id) = self.by_name.get(name) {
            let first = self.glues[id.0].strength;
            if first != strength {
                return Err(ModelError::GlueRedeclared { name: name.to_string(), first, second: strength });
            }
            return Ok(id);
        }
        let id = GlueId(self.glues.len());
        self.glues.push(Glue { name: name.to_string(), strength });
        self.by_name.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn glue_id(&self, name: &str) -> Option<GlueId> {
        self.by_name.get(name).copied()
    }

    /// Adds a tile with edges in N, E, S, W order.
    pub fn tile(&mut self, label: impl Into<String>, edges: [GlueId; 4], color: impl Into<String>) -> TileId {
        let id = self.tiles.len();
        self.tiles.push(TileType { id, label: label.into(), edges, color: color.into() });
        id
    }

    pub fn seed(&mut self, pos: Pos, tile: TileId) -> Result<&mut Self, ModelError> {
        self.seed.place(pos, tile)?;
        Ok(self)
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn build(self) -> Result<TileSystem, ModelError> {
        let system = TileSystem {
            name: self.name,
            glues: self.glues,
            tiles: self.tiles,
            seed: self.seed,
            temperature: self.temperature,
        };
        system.validate()?;
        Ok(system)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Three-tile seed with a strength-2 glue exposed on the east side of
    /// its top-right tile, plus one tile that binds there.
    pub(crate) fn fig1_system() -> TileSystem {
        let mut b = TileSystemBuilder::new("fig1");
        let a1 = b.glue("a1", 2).unwrap();
        let h = b.glue("h", 1).unwrap();
        let v = b.glue("v", 1).unwrap();
        let x = b.glue("x", 1).unwrap();
        let n = GlueId::NULL;
        let s0 = b.tile("s0", [v, h, n, n], "gray");
        let s1 = b.tile("s1", [n, n, n, h], "gray");
        let s2 = b.tile("s2", [n, a1, v, n], "gray");
        b.tile("out", [x, x, x, a1], "red");
        b.seed(Pos::new(0, 0), s0).unwrap();
        b.seed(Pos::new(1, 0), s1).unwrap();
        b.seed(Pos::new(0, 1), s2).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn fig1_strength_two_glue_binds() {
        let sys = fig1_system();
        assert_eq!(binding_strength(&sys, &sys.seed, Pos::new(1, 1), 3).unwrap(), 2);
        let f = frontier(&sys, &sys.seed);
        assert_eq!(f.len(), 1);
        assert_eq!(f[&Pos::new(1, 1)], vec![3]);
    }

    #[test]
    fn null_glues_bind_nothing() {
        let mut b = TileSystemBuilder::new("null");
        let g = b.glue("g", 2).unwrap();
        let n = GlueId::NULL;
        let s = b.tile("s", [g, g, g, g], "gray");
        b.tile("blank", [n, n, n, n], "white");
        b.seed(Pos::new(0, 0), s).unwrap();
        let sys = b.build().unwrap();
        for (_, p) in Pos::new(0, 0).neighbors() {
            assert_eq!(binding_strength(&sys, &sys.seed, p, 1).unwrap(), 0);
        }
    }

    #[test]
    fn corner_between_two_weak_neighbours() {
        // Tiles at (0,0), (1,0), (0,1); candidate at (1,1) sees (0,1) to the
        // west and (1,0) to the south, one strength-1 match each.
        let mut b = TileSystemBuilder::new("corner");
        let p = b.glue("p", 1).unwrap();
        let q = b.glue("q", 1).unwrap();
        let z = b.glue("z", 2).unwrap();
        let miss = b.glue("miss", 1).unwrap();
        let n = GlueId::NULL;
        let base = b.tile("base", [z, z, n, n], "gray");
        let east = b.tile("east", [q, n, n, z], "gray");
        let north = b.tile("north", [n, p, z, n], "gray");
        let cand = b.tile("cand", [miss, miss, q, p], "red");
        b.seed(Pos::new(0, 0), base).unwrap();
        b.seed(Pos::new(1, 0), east).unwrap();
        b.seed(Pos::new(0, 1), north).unwrap();
        let sys = b.build().unwrap();
        assert_eq!(binding_strength(&sys, &sys.seed, Pos::new(1, 1), cand).unwrap(), 2);
    }

    #[test]
    fn occupied_and_unknown_are_errors() {
        let sys = fig1_system();
        assert_eq!(binding_strength(&sys, &sys.seed, Pos::new(0, 0), 3), Err(ModelError::OccupiedSite(Pos::new(0, 0))));
        assert_eq!(binding_strength(&sys, &sys.seed, Pos::new(1, 1), 99), Err(ModelError::UnknownTile(99)));
    }

    #[test]
    fn weak_only_frontier_is_empty() {
        let mut b = TileSystemBuilder::new("weak");
        let g = b.glue("g", 1).unwrap();
        let s = b.tile("s", [g, g, g, g], "gray");
        b.tile("t", [g, g, g, g], "gray");
        b.seed(Pos::new(0, 0), s).unwrap();
        let sys = b.build().unwrap();
        assert!(frontier(&sys, &sys.seed).is_empty());
    }

    #[test]
    fn validation_rejects_bad_systems() {
        let b = TileSystemBuilder::new("empty");
        assert_eq!(b.build().unwrap_err(), ModelError::EmptySeed);

        let mut b = TileSystemBuilder::new("apart");
        let t = b.tile("t", [GlueId::NULL; 4], "gray");
        b.seed(Pos::new(0, 0), t).unwrap();
        b.seed(Pos::new(2, 0), t).unwrap();
        assert_eq!(b.build().unwrap_err(), ModelError::DisconnectedSeed);

        let mut b = TileSystemBuilder::new("cold");
        let t = b.tile("t", [GlueId::NULL; 4], "gray");
        b.seed(Pos::new(0, 0), t).unwrap();
        b.temperature(0);
        assert_eq!(b.build().unwrap_err(), ModelError::ZeroTemperature);

        let mut b = TileSystemBuilder::new("redeclared");
        b.glue("g", 1).unwrap();
        assert!(matches!(b.glue("g", 2), Err(ModelError::GlueRedeclared { .. })));
        assert!(matches!(b.glue("has space", 1), Err(ModelError::BadGlueName(_))));
    }

    #[test]
    fn pos_orders_by_row_then_column() {
        let mut v = vec![Pos::new(3, 1), Pos::new(0, 2), Pos::new(1, 1), Pos::new(9, 0)];
        v.sort();
        assert_eq!(v, vec![Pos::new(9, 0), Pos::new(1, 1), Pos::new(3, 1), Pos::new(0, 2)]);
    }
}
