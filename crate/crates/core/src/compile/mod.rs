//! Generators that turn arithmetic problems into tile systems.
//!
//! Every generator lays out its interior bit columns at `x = 1..=width`
//! with the most significant bit at `x = 1`, a left frame column at `x = 0`
//! and a right frame column at `x = width + 1`. Row 0 holds the input.
//! Growth starts from a single seed tile in the bottom-right corner.

mod add8;
mod add_l;
mod mul;
mod prime;
mod signed;
mod zigzag;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::model::{GlueId, ModelError, Pos, TileId, TileSystem, TileSystemBuilder};

pub use add8::compile_add8;
pub use add_l::compile_add_l;
pub use mul::compile_mul;
pub use prime::compile_prime;
pub use signed::{compile_addsub, compile_modexpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompileError {
    #[error("need at least {needed} operands, got {got}")]
    Arity { needed: usize, got: usize },
    #[error("value {value} does not fit in {width} bits")]
    Overflow { value: u64, width: usize },
    #[error("multiplication operands must be positive")]
    ZeroOperand,
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("primality input must be at least 2, got {0}")]
    Domain(u64),
    #[error("{0} is not a variant of this construction")]
    WrongVariant(AddVariant),
    #[error("signed expression needs a modulus for this construction")]
    MissingModulus,
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AddVariant {
    EightTile,
    SixTile,
    LType,
}

impl fmt::Display for AddVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AddVariant::EightTile => "8_tile",
            AddVariant::SixTile => "6_tile",
            AddVariant::LType => "L_tile",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditionSpec {
    pub inputs: Vec<u64>,
    pub variant: AddVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, v: u64) -> i128 {
        match self {
            Sign::Plus => v as i128,
            Sign::Minus => -(v as i128),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedExpressionSpec {
    pub terms: Vec<(Sign, u64)>,
    pub modulus: Option<u64>,
}

impl SignedExpressionSpec {
    pub fn value(&self) -> i128 {
        self.terms.iter().map(|&(s, v)| s.apply(v)).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationSpec {
    pub inputs: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalitySpec {
    pub n: u64,
}

/// What kind of answer a compiled system computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Add,
    Mul,
    Signed,
    SignedMod,
    Prime,
}

/// Role of a tile type, following the tile families the constructions are
/// described with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Corner,
    LeftFrame,
    RightFrame,
    TopFrame,
    Input,
    Computational,
    ComputationalPlus,
    ComputationalMinus,
    OtherComputational,
    Seed,
    HorizontalFrame,
    VerticalFrame,
    Converter,
    CheckGreaterThanOne,
    CheckCompare,
    MoveRightToLeft,
    SubtractBMinusC,
    SubtractCMinusOne,
    DivisionLoad,
    DivisionCompare,
    DivisionSubtract,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Corner => "corner",
            Family::LeftFrame => "left-frame",
            Family::RightFrame => "right-frame",
            Family::TopFrame => "top-frame",
            Family::Input => "input",
            Family::Computational => "computational",
            Family::ComputationalPlus => "computational(+)",
            Family::ComputationalMinus => "computational(-)",
            Family::OtherComputational => "other-computational",
            Family::Seed => "seed",
            Family::HorizontalFrame => "horizontal-frame",
            Family::VerticalFrame => "vertical-frame",
            Family::Converter => "one-to-three-bit-converter",
            Family::CheckGreaterThanOne => "check-greater-than-one",
            Family::CheckCompare => "check-c-greater-than-b",
            Family::MoveRightToLeft => "move-right-to-left",
            Family::SubtractBMinusC => "subtract-b-minus-c",
            Family::SubtractCMinusOne => "subtract-c-minus-one",
            Family::DivisionLoad => "division-load",
            Family::DivisionCompare => "division-compare",
            Family::DivisionSubtract => "division-subtract",
        })
    }
}

/// Which row holds the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultRow {
    Fixed(i32),
    /// The highest row that contains bit-carrying tiles; used when the
    /// number of rows depends on the data.
    Topmost,
}

/// Where and how a compiled system displays its answer.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layout {
    /// Number of interior bit columns, at `x = 1..=width`, MSB first.
    pub width: usize,
    pub result_row: Option<ResultRow>,
    /// Cell whose tile carries the sign of a signed result.
    pub sign_cell: Option<Pos>,
    /// Bit displayed by each tile type that displays one.
    pub bit_of: BTreeMap<TileId, bool>,
    /// `true` for tile types that mark a negative value.
    pub sign_of: BTreeMap<TileId, bool>,
    /// `true` = prime.
    pub verdict_of: BTreeMap<TileId, bool>,
}

impl Layout {
    pub fn columns(&self) -> impl Iterator<Item = i32> {
        1..=self.width as i32
    }
}

/// Output of a generator: the tile system plus what is needed to check and
/// read it.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub kind: Kind,
    pub system: TileSystem,
    /// Family of each tile type, indexed by tile id.
    pub families: Vec<Family>,
    pub layout: Layout,
    /// Upper bound on the number of tiles in the terminal assembly.
    pub expected_area: usize,
}

impl Compiled {
    /// Step budget for [`crate::sim::grow`].
    pub fn default_max_steps(&self) -> usize {
        16 * self.expected_area.max(1)
    }

    pub fn type_counts(&self) -> BTreeMap<Family, usize> {
        let mut out = BTreeMap::new();
        for f in &self.families {
            *out.entry(*f).or_default() += 1;
        }
        out
    }

    pub fn usage_counts(&self, terminal: &crate::model::Assembly) -> BTreeMap<Family, usize> {
        let mut out = BTreeMap::new();
        for (_, t) in terminal.iter() {
            *out.entry(self.families[t]).or_default() += 1;
        }
        out
    }
}

/// Number of binary digits of `v`; zero has none.
pub fn bit_len(v: u64) -> usize {
    (u64::BITS - v.leading_zeros()) as usize
}

pub(crate) fn bit(v: u64, i: usize) -> bool {
    i < 64 && (v >> i) & 1 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Least significant bit at the east end.
    RightToLeft,
    /// Least significant bit at the west end.
    LeftToRight,
}

/// Zero-padded bit row of exactly `width` bits, listed west to east.
pub fn encode_input(value: u64, width: usize, orientation: Orientation) -> Result<Vec<bool>, CompileError> {
    if bit_len(value) > width {
        return Err(CompileError::Overflow { value, width });
    }
    let lsb_first = (0..width).map(|i| bit(value, i));
    Ok(match orientation {
        Orientation::LeftToRight => lsb_first.collect(),
        Orientation::RightToLeft => {
            let mut v: Vec<bool> = lsb_first.collect();
            v.reverse();
            v
        }
    })
}

/// One line of a published tile-count table. `None` marks a cell the
/// table leaves blank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub family: Family,
    pub types: Option<usize>,
    pub overall: Option<usize>,
}

fn row(family: Family, types: Option<usize>, overall: Option<usize>) -> CountRow {
    CountRow { family, types, overall }
}

/// Any spec the generators accept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompileSpec {
    Add(AdditionSpec),
    Mul(MultiplicationSpec),
    Signed(SignedExpressionSpec),
    Prime(PrimalitySpec),
}

/// Closed-form tile counts for a spec, as tabulated for each construction.
pub fn expected_tile_counts(spec: &CompileSpec) -> Vec<CountRow> {
    match spec {
        CompileSpec::Add(a) => {
            let n = a.inputs.len();
            let m = a.inputs.iter().map(|&v| bit_len(v)).max().unwrap_or(0).max(1);
            let w = n + m - 1;
            match a.variant {
                AddVariant::EightTile | AddVariant::SixTile => {
                    let comp = if a.variant == AddVariant::EightTile { 8 } else { 6 };
                    vec![
                        row(Family::LeftFrame, Some(n - 1), Some(2 * n - 3)),
                        row(Family::Corner, Some(4), Some(4)),
                        row(Family::RightFrame, Some(2 * n - 3), Some(2 * n - 3)),
                        row(Family::TopFrame, Some(2), Some(w)),
                        row(Family::Input, Some((2 * n - 3) * w), Some(w * (n - 1))),
                        row(Family::Computational, Some(comp), Some(w * (n - 2))),
                    ]
                }
                AddVariant::LType => {
                    let tail: usize = a.inputs[1..].iter().map(|&v| bit_len(v)).sum();
                    vec![
                        row(Family::LeftFrame, Some(1 + tail), None),
                        row(Family::RightFrame, Some(tail), None),
                        row(Family::TopFrame, Some(2 + w), None),
                        row(Family::Computational, None, None),
                    ]
                }
            }
        }
        CompileSpec::Mul(m) => {
            let n = m.inputs.len();
            let mm = m.inputs.iter().map(|&v| bit_len(v)).max().unwrap_or(0);
            vec![
                row(Family::HorizontalFrame, Some(2 * (n * mm).saturating_sub(1)), None),
                row(Family::Seed, Some(1), None),
                row(Family::VerticalFrame, Some(2 * n + mm), None),
                row(Family::TopFrame, Some(6), None),
                row(Family::Computational, Some(9), None),
            ]
        }
        CompileSpec::Signed(s) => {
            let n = s.terms.len();
            let m = s.terms.iter().map(|&(_, v)| bit_len(v)).max().unwrap_or(0).max(1);
            let w = n + m - 1;
            vec![
                row(Family::LeftFrame, Some(2 * n + 5), None),
                row(Family::Corner, Some(6), None),
                row(Family::RightFrame, Some((2 * n).saturating_sub(1)), None),
                row(Family::TopFrame, Some(6), None),
                row(Family::Input, Some((2 * n).saturating_sub(3) * w), None),
                row(Family::ComputationalPlus, Some(8), None),
                row(Family::ComputationalMinus, Some(8), None),
                row(Family::OtherComputational, Some(4), None),
            ]
        }
        CompileSpec::Prime(p) => vec![
            row(Family::LeftFrame, Some(6), None),
            row(Family::Corner, Some(6), None),
            row(Family::RightFrame, Some(10), None),
            row(Family::TopFrame, Some(10), None),
            row(Family::Input, Some(bit_len(p.n)), None),
            row(Family::Converter, Some(4), None),
            row(Family::CheckGreaterThanOne, Some(12), None),
            row(Family::CheckCompare, Some(24), None),
            row(Family::MoveRightToLeft, Some(4), None),
            row(Family::SubtractBMinusC, Some(16), None),
            row(Family::SubtractCMinusOne, Some(16), None),
        ],
    }
}

/// Dispatches to the generator matching `spec`.
pub fn compile(spec: &CompileSpec) -> Result<Compiled, CompileError> {
    match spec {
        CompileSpec::Add(a) => match a.variant {
            AddVariant::EightTile | AddVariant::SixTile => compile_add8(a),
            AddVariant::LType => compile_add_l(a),
        },
        CompileSpec::Mul(m) => compile_mul(m),
        CompileSpec::Signed(s) if s.modulus.is_some() => compile_modexpr(s),
        CompileSpec::Signed(s) => compile_addsub(s),
        CompileSpec::Prime(p) => compile_prime(p),
    }
}

/// Shared scaffolding for the generators: a builder that namespaces glue
/// names and records families and display metadata per tile.
pub(crate) struct Kit {
    builder: TileSystemBuilder,
    ns: &'static str,
    families: Vec<Family>,
    pub(crate) layout: Layout,
}

pub(crate) const RED: &str = "red";
pub(crate) const WHITE: &str = "white";

pub(crate) fn bit_color(b: bool) -> &'static str {
    if b {
        RED
    } else {
        WHITE
    }
}

pub(crate) fn digit(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

impl Kit {
    pub(crate) fn new(ns: &'static str, system_name: String, width: usize) -> Self {
        Kit {
            builder: TileSystemBuilder::new(system_name),
            ns,
            families: Vec::new(),
            layout: Layout { width, ..Layout::default() },
        }
    }

    /// Interns `<ns>:<name>`.
    pub(crate) fn g(&mut self, name: &str, strength: u32) -> GlueId {
        self.builder
            .glue(&format!("{}:{name}", self.ns), strength)
            .expect("generator glue names are well-formed and consistently typed")
    }

    pub(crate) fn tile(&mut self, family: Family, label: String, edges: [GlueId; 4], color: &str) -> TileId {
        self.families.push(family);
        self.builder.tile(label, edges, color)
    }

    /// Adds a tile that displays `b`.
    pub(crate) fn bit_tile(&mut self, family: Family, label: String, edges: [GlueId; 4], b: bool) -> TileId {
        let t = self.tile(family, label, edges, bit_color(b));
        self.layout.bit_of.insert(t, b);
        t
    }

    pub(crate) fn seed(&mut self, pos: Pos, tile: TileId) {
        self.builder.seed(pos, tile).expect("seed site is free");
    }

    pub(crate) fn finish(self, kind: Kind, expected_area: usize) -> Result<Compiled, CompileError> {
        Ok(Compiled {
            kind,
            system: self.builder.build()?,
            families: self.families,
            layout: self.layout,
            expected_area,
        })
    }
}

pub(crate) const N: GlueId = GlueId::NULL;
