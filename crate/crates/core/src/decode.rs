//! Reading answers off terminal assemblies.

use thiserror::Error;

use crate::compile::{Compiled, Kind, ResultRow};
use crate::model::{Assembly, Pos, TileId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("no result row: the assembly shows no result tiles")]
    NoResultRow,
    #[error("result cell {0} is empty")]
    EmptyCell(Pos),
    #[error("tile {tile} at {pos} does not display a bit")]
    NotABit { pos: Pos, tile: TileId },
    #[error("sign cell {0} holds no sign tile")]
    MissingSign(Pos),
    #[error("no verdict tile in the assembly")]
    NoVerdict,
    #[error("verdict tiles disagree")]
    ConflictingVerdict,
    #[error("result has {0} bits; at most 128 are supported")]
    TooWide(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedResult {
    pub kind: Kind,
    /// Sum, product or signed value.
    pub value: Option<i128>,
    pub remainder: Option<u128>,
    /// Sign of the expression for signed kinds.
    pub negative: Option<bool>,
    pub prime: Option<bool>,
    /// Cells the answer was read from.
    pub read_region: Vec<Pos>,
}

impl DecodedResult {
    /// `key=value` lines.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(v) = self.value {
            out.push(format!("result={v}"));
        }
        if let Some(r) = self.remainder {
            out.push(format!("remainder={r}"));
        }
        if let Some(neg) = self.negative {
            out.push(format!("sign={}", if neg { '-' } else { '+' }));
        }
        if let Some(p) = self.prime {
            out.push(format!("prime={}", if p { "yes" } else { "no" }));
        }
        out
    }
}

fn result_row(compiled: &Compiled, terminal: &Assembly) -> Result<i32, DecodeError> {
    match compiled.layout.result_row {
        Some(ResultRow::Fixed(y)) => Ok(y),
        Some(ResultRow::Topmost) => terminal
            .iter()
            .filter(|(p, t)| p.x >= 1 && p.x <= compiled.layout.width as i32 && compiled.layout.bit_of.contains_key(t))
            .map(|(p, _)| p.y)
            .max()
            .ok_or(DecodeError::NoResultRow),
        None => Err(DecodeError::NoResultRow),
    }
}

/// Reads row `y` as an unsigned binary number, most significant bit at
/// `x = 1`.
fn read_row(compiled: &Compiled, terminal: &Assembly, y: i32, region: &mut Vec<Pos>) -> Result<u128, DecodeError> {
    if compiled.layout.width > 128 {
        return Err(DecodeError::TooWide(compiled.layout.width));
    }
    let mut v: u128 = 0;
    for x in compiled.layout.columns() {
        let pos = Pos::new(x, y);
        let tile = terminal.get(pos).ok_or(DecodeError::EmptyCell(pos))?;
        let b = *compiled.layout.bit_of.get(&tile).ok_or(DecodeError::NotABit { pos, tile })?;
        v = (v << 1) | b as u128;
        region.push(pos);
    }
    Ok(v)
}

fn read_sign(compiled: &Compiled, terminal: &Assembly, region: &mut Vec<Pos>) -> Result<bool, DecodeError> {
    let pos = compiled.layout.sign_cell.ok_or(DecodeError::NoResultRow)?;
    let tile = terminal.get(pos).ok_or(DecodeError::MissingSign(pos))?;
    let neg = *compiled.layout.sign_of.get(&tile).ok_or(DecodeError::MissingSign(pos))?;
    if !region.contains(&pos) {
        region.push(pos);
    }
    Ok(neg)
}

pub fn decode(compiled: &Compiled, terminal: &Assembly) -> Result<DecodedResult, DecodeError> {
    let mut out = DecodedResult {
        kind: compiled.kind,
        value: None,
        remainder: None,
        negative: None,
        prime: None,
        read_region: Vec::new(),
    };
    let region = &mut out.read_region;
    match compiled.kind {
        Kind::Add | Kind::Mul => {
            let y = result_row(compiled, terminal)?;
            out.value = Some(read_row(compiled, terminal, y, region)? as i128);
        }
        Kind::Signed => {
            let y = result_row(compiled, terminal)?;
            let magnitude = read_row(compiled, terminal, y, region)? as i128;
            let neg = read_sign(compiled, terminal, region)?;
            out.value = Some(if neg { -magnitude } else { magnitude });
            out.negative = Some(neg);
        }
        Kind::SignedMod => {
            let y = result_row(compiled, terminal)?;
            out.remainder = Some(read_row(compiled, terminal, y, region)?);
            out.negative = Some(read_sign(compiled, terminal, region)?);
        }
        Kind::Prime => {
            let mut verdict = None;
            for (pos, t) in terminal.iter() {
                if let Some(&v) = compiled.layout.verdict_of.get(&t) {
                    if verdict.is_some_and(|old| old != v) {
                        return Err(DecodeError::ConflictingVerdict);
                    }
                    verdict = Some(v);
                    region.push(pos);
                }
            }
            out.prime = Some(verdict.ok_or(DecodeError::NoVerdict)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compile::{compile, AddVariant, AdditionSpec, CompileSpec, PrimalitySpec};
    use crate::sim::grow;

    fn run(spec: CompileSpec) -> (Compiled, Assembly) {
        let c = compile(&spec).unwrap();
        let r = grow(&c.system, c.default_max_steps()).unwrap();
        (c, r.terminal)
    }

    #[test]
    fn twelve_six_two_four() {
        let (c, t) = run(CompileSpec::Add(AdditionSpec { inputs: vec![12, 6, 2, 4], variant: AddVariant::EightTile }));
        let d = decode(&c, &t).unwrap();
        assert_eq!(d.value, Some(24));
        assert_eq!(d.lines(), vec!["result=24"]);
        assert_eq!(d.read_region.len(), 7);
        assert!(d.read_region.iter().all(|p| t.is_occupied(*p)));
    }

    #[test]
    fn zero_row() {
        let (c, t) =
            run(CompileSpec::Add(AdditionSpec { inputs: vec![0, 0, 0, 0, 0], variant: AddVariant::EightTile }));
        assert_eq!(c.layout.width, 5);
        assert_eq!(decode(&c, &t).unwrap().value, Some(0));
    }

    #[test]
    fn thirteen_is_prime() {
        let (c, t) = run(CompileSpec::Prime(PrimalitySpec { n: 13 }));
        assert_eq!(decode(&c, &t).unwrap().lines(), vec!["prime=yes"]);
    }

    #[test]
    fn partial_assembly_is_rejected() {
        let (c, _) = run(CompileSpec::Add(AdditionSpec { inputs: vec![3, 5], variant: AddVariant::EightTile }));
        assert!(matches!(decode(&c, &c.system.seed), Err(DecodeError::EmptyCell(_))));
        let (c, _) = run(CompileSpec::Prime(PrimalitySpec { n: 7 }));
        assert_eq!(decode(&c, &c.system.seed), Err(DecodeError::NoVerdict));
    }
}
