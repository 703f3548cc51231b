//! Shift-and-add n-input multiplication.
//!
//! Each column carries a pair `(a, p)`: a bit of the running product `a`
//! and a bit of the accumulator `p`. For each further operand the rows
//! double `p` and add `a` once per one-bit, most significant bit first,
//! then a copy row moves `p` into `a` for the next operand.

use super::{bit, bit_len, digit, CompileError, Compiled, Family, Kind, Kit, MultiplicationSpec, ResultRow, N};
use crate::model::{GlueId, Pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Shift,
    Add,
    Copy,
}

fn schedule(inputs: &[u64]) -> Vec<Op> {
    let mut ops = Vec::new();
    for (k, &v) in inputs.iter().enumerate().skip(1) {
        if k > 1 {
            ops.push(Op::Copy);
        }
        for i in (0..bit_len(v)).rev() {
            ops.push(Op::Shift);
            if bit(v, i) {
                ops.push(Op::Add);
            }
        }
    }
    ops
}

fn state(kit: &mut Kit, a: bool, p: bool) -> GlueId {
    kit.g(&format!("a{}{}", digit(a), digit(p)), 1)
}

pub fn compile_mul(spec: &MultiplicationSpec) -> Result<Compiled, CompileError> {
    let n = spec.inputs.len();
    if n < 2 {
        return Err(CompileError::Arity { needed: 2, got: n });
    }
    if spec.inputs.contains(&0) {
        return Err(CompileError::ZeroOperand);
    }
    let name: Vec<String> = spec.inputs.iter().map(u64::to_string).collect();
    let mut inputs = spec.inputs.clone();
    // Longest operand first keeps the row count down.
    let first = (0..n).max_by_key(|&i| (bit_len(inputs[i]), std::cmp::Reverse(i))).unwrap_or(0);
    inputs.swap(0, first);
    let w: usize = inputs.iter().map(|&v| bit_len(v)).sum();
    let wi = w as i32;
    let ops = schedule(&inputs);
    let top = ops.len() as i32 + 1;
    let mut kit = Kit::new("mul", format!("mul_tile_{}", name.join(",")), w);

    let seed = {
        let (north, west) = (kit.g("r1", 2), kit.g(&format!("${}", w + 1), 2));
        kit.tile(Family::Seed, "BR".into(), [north, N, N, west], "blue")
    };
    kit.seed(Pos::new(wi + 1, 0), seed);
    for x in 1..=wi {
        let a = bit(inputs[0], (wi - x) as usize);
        let edges = [state(&mut kit, a, false), kit.g(&format!("${}", x + 1), 2), N, kit.g(&format!("${x}"), 2)];
        kit.tile(Family::HorizontalFrame, format!("i{x}:{}", digit(a)), edges, "yellow");
    }
    let (north, east) = (kit.g("l1", 2), kit.g("$1", 2));
    kit.tile(Family::HorizontalFrame, "BL".into(), [north, east, N, N], "purple");

    for (i, op) in ops.iter().enumerate() {
        let y = i as i32 + 1;
        let (s, nn) = (kit.g(&format!("l{y}"), 2), kit.g(&format!("l{}", y + 1), 2));
        kit.tile(Family::VerticalFrame, format!("L{y}"), [nn, N, s, N], "gray");
        let (s, nn) = (kit.g(&format!("r{y}"), 2), kit.g(&format!("r{}", y + 1), 2));
        let west = match op {
            Op::Shift => kit.g("z0", 1),
            Op::Add => kit.g("+0", 1),
            Op::Copy => kit.g("x", 1),
        };
        kit.tile(Family::VerticalFrame, format!("R{y}:{op:?}"), [nn, N, s, west], "gray");
    }

    for a in [false, true] {
        for p in [false, true] {
            let south = state(&mut kit, a, p);
            for q in [false, true] {
                let edges = [
                    state(&mut kit, a, q),
                    kit.g(&format!("z{}", digit(q)), 1),
                    south,
                    kit.g(&format!("z{}", digit(p)), 1),
                ];
                kit.bit_tile(Family::Computational, format!("{}z{}{}", digit(q), digit(a), digit(p)), edges, q);
            }
            for c in [false, true] {
                let t = a as u8 + p as u8 + c as u8;
                let out = t & 1 == 1;
                let edges = [
                    state(&mut kit, a, out),
                    kit.g(&format!("+{}", digit(c)), 1),
                    south,
                    kit.g(&format!("+{}", digit(t >= 2)), 1),
                ];
                kit.bit_tile(
                    Family::Computational,
                    format!("{}+{}{}{}", digit(out), digit(a), digit(p), digit(c)),
                    edges,
                    out,
                );
            }
            let x = kit.g("x", 1);
            let edges = [state(&mut kit, p, false), x, south, x];
            kit.bit_tile(Family::Computational, format!("0x{}{}", digit(a), digit(p)), edges, false);
        }
    }

    let t = kit.g("t", 1);
    let s = kit.g(&format!("l{top}"), 2);
    kit.tile(Family::TopFrame, "TL".into(), [N, N, s, N], "purple");
    let s = kit.g(&format!("r{top}"), 2);
    kit.tile(Family::TopFrame, "TR".into(), [N, N, s, t], "purple");
    for a in [false, true] {
        for p in [false, true] {
            let edges = [N, t, state(&mut kit, a, p), t];
            kit.bit_tile(Family::TopFrame, format!("{}T{}", digit(p), digit(a)), edges, p);
        }
    }

    kit.layout.result_row = Some(ResultRow::Fixed(top));
    kit.finish(Kind::Mul, (w + 2) * (top as usize + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::grow;

    fn product(inputs: &[u64]) -> u64 {
        let c = compile_mul(&MultiplicationSpec { inputs: inputs.to_vec() }).unwrap();
        let r = grow(&c.system, c.default_max_steps()).unwrap();
        assert!(r.deterministic && r.halted);
        let Some(ResultRow::Fixed(y)) = c.layout.result_row else { panic!() };
        c.layout.columns().fold(0, |acc, x| acc * 2 + c.layout.bit_of[&r.terminal.get(Pos::new(x, y)).unwrap()] as u64)
    }

    #[test]
    fn five_four_three() {
        assert_eq!(product(&[5, 4, 3]), 60);
    }

    #[test]
    fn ones_and_order() {
        assert_eq!(product(&[1, 1]), 1);
        assert_eq!(product(&[3, 7]), 21);
        assert_eq!(product(&[7, 3]), 21);
        assert_eq!(product(&[1, 63, 2]), 126);
    }

    #[test]
    fn rejects_zero_and_arity() {
        assert_eq!(compile_mul(&MultiplicationSpec { inputs: vec![3, 0] }).unwrap_err(), CompileError::ZeroOperand);
        assert_eq!(
            compile_mul(&MultiplicationSpec { inputs: vec![3] }).unwrap_err(),
            CompileError::Arity { needed: 2, got: 1 }
        );
    }

    #[test]
    fn seed_and_top_frame_counts() {
        let c = compile_mul(&MultiplicationSpec { inputs: vec![5, 4, 3] }).unwrap();
        let counts = c.type_counts();
        assert_eq!(counts[&Family::Seed], 1);
        assert_eq!(counts[&Family::TopFrame], 6);
        assert_eq!(counts[&Family::Computational], 20);
    }
}
