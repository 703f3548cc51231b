//! Ripple-carry n-input addition with full-adder tiles.
//!
//! Row 0 carries the first two operands as bit pairs. Each odd row adds a
//! pair column by column from east to west; each even row above it pairs
//! the running sum with the next operand. The top row displays the sum.

use super::{bit, bit_len, digit, AddVariant, AdditionSpec, CompileError, Compiled, Family, Kind, Kit, ResultRow, N};
use crate::model::{GlueId, Pos};

fn system_name(spec: &AdditionSpec) -> String {
    let inputs: Vec<String> = spec.inputs.iter().map(u64::to_string).collect();
    format!("add_{}_{}", spec.variant, inputs.join(","))
}

/// Full adder: `(sum, carry out)`.
pub(crate) fn full_add(a: bool, b: bool, c: bool) -> (bool, bool) {
    (a ^ b ^ c, (a && b) || (b && c) || (c && a))
}

struct Glues {
    six: bool,
}

impl Glues {
    fn pair(&self, kit: &mut Kit, a: bool, b: bool) -> GlueId {
        if self.six && a != b {
            kit.g("p~", 1)
        } else {
            kit.g(&format!("p{}{}", digit(a), digit(b)), 1)
        }
    }

    fn bit(&self, kit: &mut Kit, b: bool) -> GlueId {
        kit.g(&digit(b).to_string(), 1)
    }
}

pub fn compile_add8(spec: &AdditionSpec) -> Result<Compiled, CompileError> {
    let six = match spec.variant {
        AddVariant::EightTile => false,
        AddVariant::SixTile => true,
        v @ AddVariant::LType => return Err(CompileError::WrongVariant(v)),
    };
    let n = spec.inputs.len();
    if n < 2 {
        return Err(CompileError::Arity { needed: 2, got: n });
    }
    let m = spec.inputs.iter().map(|&v| bit_len(v)).max().unwrap_or(0).max(1);
    let w = n + m - 1;
    let wi = w as i32;
    let top = 2 * n as i32 - 2;
    let ns = if six { "add6" } else { "add8" };
    let mut kit = Kit::new(ns, system_name(spec), w);
    let glues = Glues { six };
    // Bit at column x.
    let at = |v: u64, x: i32| bit(v, (wi - x) as usize);

    // Seed corner and the bottom input row.
    let seed = {
        let (r1, west) = (kit.g("r1", 2), kit.g(&format!("${}", w + 1), 2));
        kit.tile(Family::Corner, "BR".into(), [r1, N, N, west], "blue")
    };
    kit.seed(Pos::new(wi + 1, 0), seed);
    for x in 1..=wi {
        let (a, b) = (at(spec.inputs[1], x), at(spec.inputs[0], x));
        let edges = [glues.pair(&mut kit, a, b), kit.g(&format!("${}", x + 1), 2), N, kit.g(&format!("${x}"), 2)];
        kit.tile(Family::Input, format!("i{x}:{}{}", digit(a), digit(b)), edges, "yellow");
    }
    let (la, one) = (kit.g("la", 2), kit.g("$1", 2));
    kit.tile(Family::Corner, "BL".into(), [la, one, N, N], "purple");

    // Frame columns. Every summing row shares one left tile; the rows in
    // between close on the operand row to their east.
    let lb = kit.g("lb", 1);
    kit.tile(Family::LeftFrame, "L".into(), [lb, N, la, N], "gray");
    for y in 1..top {
        if y % 2 == 0 {
            let east = kit.g(&format!("#{}.1", y / 2 + 2), 1);
            kit.tile(Family::LeftFrame, format!("L{y}"), [la, east, lb, N], "gray");
        }
        let (s, nn) = (kit.g(&format!("r{y}"), 2), kit.g(&format!("r{}", y + 1), 2));
        let west = if y % 2 == 1 { glues.bit(&mut kit, false) } else { kit.g(&format!("#{}.{}", y / 2 + 2, w + 1), 1) };
        kit.tile(Family::RightFrame, format!("R{y}"), [nn, N, s, west], "gray");
    }
    let t = kit.g("t", 1);
    kit.tile(Family::Corner, "TL".into(), [N, t, lb, N], "purple");
    let s = kit.g(&format!("r{top}"), 2);
    kit.tile(Family::Corner, "TR".into(), [N, N, s, t], "purple");

    // Adder tiles.
    let mut seen = std::collections::BTreeSet::new();
    for a in [false, true] {
        for b in [false, true] {
            for c in [false, true] {
                let south = glues.pair(&mut kit, a, b);
                if !seen.insert((south, c)) {
                    continue;
                }
                let (sum, carry) = full_add(a, b, c);
                let edges = [glues.bit(&mut kit, sum), glues.bit(&mut kit, c), south, glues.bit(&mut kit, carry)];
                let label = format!("{}{}:{}{}{}", digit(sum), digit(carry), digit(a), digit(b), digit(c));
                kit.bit_tile(Family::Computational, label, edges, sum);
            }
        }
    }

    // Rows that pair the running sum with the next operand.
    for j in 3..=n {
        for x in 1..=wi {
            let a = at(spec.inputs[j - 1], x);
            for sb in [false, true] {
                let edges = [
                    glues.pair(&mut kit, a, sb),
                    kit.g(&format!("#{j}.{}", x + 1), 1),
                    glues.bit(&mut kit, sb),
                    kit.g(&format!("#{j}.{x}"), 1),
                ];
                kit.tile(Family::Input, format!("i{j}.{x}:{}{}", digit(a), digit(sb)), edges, "yellow");
            }
        }
    }

    for b in [false, true] {
        let edges = [N, t, glues.bit(&mut kit, b), t];
        kit.bit_tile(Family::TopFrame, digit(b).to_string(), edges, b);
    }

    kit.layout.result_row = Some(ResultRow::Fixed(top));
    kit.finish(Kind::Add, (w + 2) * (top as usize + 1))
}
