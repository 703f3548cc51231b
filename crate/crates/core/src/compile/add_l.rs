//! Bit-serial n-input addition.
//!
//! The first operand sits on row 0. A marker flag rides on the column of
//! the current bit position. Each row adds one bit of one operand at the
//! marker and ripples the carry west; the last row for a bit position
//! moves the marker one column west.

use super::{bit, bit_len, digit, AddVariant, AdditionSpec, CompileError, Compiled, Family, Kind, Kit, ResultRow, N};
use crate::model::{GlueId, Pos};

fn state(kit: &mut Kit, s: bool, marker: bool) -> GlueId {
    kit.g(&format!("s{}{}", digit(s), digit(marker)), 1)
}

fn pending(kit: &mut Kit, advance: bool, b: bool) -> GlueId {
    kit.g(&format!("P{}{}", if advance { 'a' } else { 's' }, digit(b)), 1)
}

fn carry(kit: &mut Kit, c: bool, flag: bool) -> GlueId {
    kit.g(&format!("C{}{}", digit(c), digit(flag)), 1)
}

/// `(operand index, bit, advances marker)` for each computational row,
/// bottom to top.
fn schedule(inputs: &[u64]) -> Vec<(usize, bool, bool)> {
    let m = inputs.iter().map(|&v| bit_len(v)).max().unwrap_or(0);
    let mut rows = Vec::new();
    for theta in 0..m {
        let ks: Vec<usize> = (1..inputs.len()).filter(|&k| bit_len(inputs[k]) > theta).collect();
        for (i, &k) in ks.iter().enumerate() {
            rows.push((k, bit(inputs[k], theta), i + 1 == ks.len()));
        }
    }
    rows
}

pub fn compile_add_l(spec: &AdditionSpec) -> Result<Compiled, CompileError> {
    if spec.variant != AddVariant::LType {
        return Err(CompileError::WrongVariant(spec.variant));
    }
    let n = spec.inputs.len();
    if n < 2 {
        return Err(CompileError::Arity { needed: 2, got: n });
    }
    let m = spec.inputs.iter().map(|&v| bit_len(v)).max().unwrap_or(0).max(1);
    let w = n + m - 1;
    let wi = w as i32;
    let rows = schedule(&spec.inputs);
    let r = rows.len() as i32;
    let inputs: Vec<String> = spec.inputs.iter().map(u64::to_string).collect();
    let mut kit = Kit::new("addL", format!("add_L_tile_{}", inputs.join(",")), w);

    let seed = {
        let (north, west) = (kit.g("r1", 2), kit.g(&format!("${}", w + 1), 2));
        kit.tile(Family::Corner, "BR".into(), [north, N, N, west], "blue")
    };
    kit.seed(Pos::new(wi + 1, 0), seed);
    for x in 1..=wi {
        let b = bit(spec.inputs[0], (wi - x) as usize);
        let edges = [state(&mut kit, b, x == wi), kit.g(&format!("${}", x + 1), 2), N, kit.g(&format!("${x}"), 2)];
        kit.bit_tile(Family::Input, format!("{}i{x}", digit(b)), edges, b);
    }
    let (north, east) = (kit.g("l1", 2), kit.g("$1", 2));
    kit.tile(Family::LeftFrame, "BL".into(), [north, east, N, N], "purple");

    for (i, &(k, b, advance)) in rows.iter().enumerate() {
        let y = i as i32 + 1;
        let (s, nn) = (kit.g(&format!("l{y}"), 2), kit.g(&format!("l{}", y + 1), 2));
        kit.tile(Family::LeftFrame, format!("L{y}"), [nn, N, s, N], "gray");
        let (s, nn) = (kit.g(&format!("r{y}"), 2), kit.g(&format!("r{}", y + 1), 2));
        let west = pending(&mut kit, advance, b);
        kit.tile(Family::RightFrame, format!("R{y}:a{}", k + 1), [nn, N, s, west], "gray");
    }

    for s in [false, true] {
        for advance in [false, true] {
            for b in [false, true] {
                // East of the marker: pass through.
                let p = pending(&mut kit, advance, b);
                let st = state(&mut kit, s, false);
                kit.bit_tile(
                    Family::Computational,
                    format!("{}p{}{}", digit(s), digit(advance), digit(b)),
                    [st, p, st, p],
                    s,
                );
                // At the marker.
                let t = s as u8 + b as u8;
                let out = t & 1 == 1;
                let edges =
                    [state(&mut kit, out, !advance), p, state(&mut kit, s, true), carry(&mut kit, t >= 2, advance)];
                kit.bit_tile(
                    Family::Computational,
                    format!("{}m{}{}", digit(out), digit(advance), digit(b)),
                    edges,
                    out,
                );
            }
        }
        // West of the marker: absorb the carry; `flag` hands over the marker.
        for c in [false, true] {
            for flag in [false, true] {
                let t = s as u8 + c as u8;
                let out = t & 1 == 1;
                let edges = [
                    state(&mut kit, out, flag),
                    carry(&mut kit, c, flag),
                    state(&mut kit, s, false),
                    carry(&mut kit, t >= 2, false),
                ];
                kit.bit_tile(Family::Computational, format!("{}c{}{}", digit(out), digit(c), digit(flag)), edges, out);
            }
        }
    }

    let top = r + 1;
    let (s, west) = (kit.g(&format!("r{top}"), 2), kit.g(&format!("^{w}"), 2));
    kit.tile(Family::TopFrame, "TR".into(), [N, N, s, west], "purple");
    for x in 1..=wi {
        let (e, wg) = (kit.g(&format!("^{x}"), 2), kit.g(&format!("^{}", x - 1), 2));
        kit.tile(Family::TopFrame, format!("T{x}"), [N, e, N, wg], "gray");
    }
    let e = kit.g("^0", 2);
    kit.tile(Family::TopFrame, "TL".into(), [N, e, N, N], "purple");

    kit.layout.result_row = Some(ResultRow::Fixed(r));
    kit.finish(Kind::Add, (w + 2) * (r as usize + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::grow;

    fn run(inputs: &[u64]) -> (Compiled, u64) {
        let c = compile_add_l(&AdditionSpec { inputs: inputs.to_vec(), variant: AddVariant::LType }).unwrap();
        let r = grow(&c.system, c.default_max_steps()).unwrap();
        assert!(r.deterministic && r.halted);
        let Some(ResultRow::Fixed(y)) = c.layout.result_row else { panic!() };
        let v = c
            .layout
            .columns()
            .fold(0, |acc, x| acc * 2 + c.layout.bit_of[&r.terminal.get(Pos::new(x, y)).unwrap()] as u64);
        (c, v)
    }

    #[test]
    fn six_four_three_five() {
        let (c, v) = run(&[6, 4, 3, 5]);
        assert_eq!(v, 18);
        let counts = c.type_counts();
        assert_eq!(counts[&Family::Computational], 24);
        // Three rows for bits 0 and 1, two for bit 2.
        assert_eq!(counts[&Family::RightFrame], 8);
        assert_eq!(counts[&Family::LeftFrame], 9);
        assert_eq!(counts[&Family::TopFrame], 2 + 6);
    }

    #[test]
    fn zero_tail_reads_bottom_row() {
        assert_eq!(run(&[5, 0]).1, 5);
        assert_eq!(run(&[0, 0, 0]).1, 0);
    }

    #[test]
    fn schedule_orders_bits_then_operands() {
        let s = schedule(&[6, 4, 3, 5]);
        let ks: Vec<usize> = s.iter().map(|r| r.0).collect();
        assert_eq!(ks, vec![1, 2, 3, 1, 2, 3, 1, 3]);
        let adv: Vec<bool> = s.iter().map(|r| r.2).collect();
        assert_eq!(adv, vec![false, false, true, false, false, true, false, true]);
    }
}
