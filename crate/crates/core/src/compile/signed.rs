//! Signed sums and differences, optionally reduced modulo a constant.
//!
//! The running value is kept in two's complement. Rows alternate between
//! pairing the next operand with the running value and adding or
//! subtracting it. Two finishing rows broadcast the sign from the most
//! significant column and negate negative values, leaving sign and
//! magnitude. The modular variant then loads the magnitude next to the
//! modulus and repeatedly compares and subtracts until the remainder is
//! smaller than the modulus.

use super::zigzag::{self, Side};
use super::{bit, bit_len, digit, CompileError, Compiled, Family, Kind, Kit, ResultRow, Sign, SignedExpressionSpec, N};
use crate::model::{GlueId, Pos};

/// Pads the term list so that it has at least two terms and starts with a
/// positive one.
pub(crate) fn normalize(terms: &[(Sign, u64)]) -> Vec<(Sign, u64)> {
    let mut out = Vec::with_capacity(terms.len() + 1);
    if let Some((Sign::Minus, _)) = terms.first() {
        out.push((Sign::Plus, 0));
    }
    out.extend_from_slice(terms);
    while out.len() < 2 {
        out.push((Sign::Plus, 0));
    }
    out
}

fn bits_u128(v: u128) -> usize {
    (u128::BITS - v.leading_zeros()) as usize
}

/// Fewest bits holding `v` in two's complement.
pub(crate) fn twos_width(v: i128) -> usize {
    if v >= 0 {
        bits_u128(v as u128) + 1
    } else {
        bits_u128((-(v + 1)) as u128) + 1
    }
}

/// Column count for a normalized term list: the usual `n + m - 1`,
/// widened when a partial sum or the modulus needs more.
pub(crate) fn width(terms: &[(Sign, u64)], modulus: Option<u64>) -> usize {
    let n = terms.len();
    let m = terms.iter().map(|&(_, v)| bit_len(v)).max().unwrap_or(0).max(1);
    let mut w = n + m - 1;
    let mut acc = 0i128;
    for &(s, v) in terms {
        acc += s.apply(v);
        w = w.max(twos_width(acc));
    }
    if let Some(t) = modulus {
        w = w.max(bit_len(t));
    }
    w
}

fn system_name(spec: &SignedExpressionSpec) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &(s, v)) in spec.terms.iter().enumerate() {
        parts.push(match (i, s) {
            (0, Sign::Plus) => v.to_string(),
            _ => format!("{}{v}", s.symbol()),
        });
    }
    match spec.modulus {
        Some(t) => format!("mod_tile_{},{t}", parts.join(",")),
        None => format!("addsub_tile_{}", parts.join(",")),
    }
}

/// Subtractor cell: `(b - a - c) mod 2` and the borrow out.
pub(crate) fn full_sub(a: bool, b: bool, c: bool) -> (bool, bool) {
    let d = b as i8 - a as i8 - c as i8;
    (d.rem_euclid(2) == 1, d < 0)
}

fn bit_glue(kit: &mut Kit, b: bool) -> GlueId {
    kit.g(&digit(b).to_string(), 1)
}

fn pair(kit: &mut Kit, a: bool, b: bool) -> GlueId {
    kit.g(&format!("p{}{}", digit(a), digit(b)), 1)
}

fn mag(kit: &mut Kit, s: bool, b: bool) -> GlueId {
    kit.g(&format!("m{}{}", digit(s), digit(b)), 1)
}

/// Builds everything up to the sign-magnitude row at `y = 2n - 1`.
fn build_core(spec: &SignedExpressionSpec) -> Result<(Kit, Vec<(Sign, u64)>), CompileError> {
    if spec.terms.is_empty() {
        return Err(CompileError::Arity { needed: 1, got: 0 });
    }
    if let Some(t) = spec.modulus {
        if t < 2 {
            return Err(CompileError::Modulus(t));
        }
    }
    let terms = normalize(&spec.terms);
    let n = terms.len();
    let w = width(&terms, spec.modulus);
    let wi = w as i32;
    let (f1, f2) = (2 * n as i32 - 2, 2 * n as i32 - 1);
    let mut kit = Kit::new("pm", system_name(spec), w);
    let at = |v: u64, x: i32| bit(v, (wi - x) as usize);

    let seed = {
        let (north, west) = (kit.g("r1", 2), kit.g(&format!("${}", w + 1), 2));
        kit.tile(Family::Corner, "BR".into(), [north, N, N, west], "blue")
    };
    kit.seed(Pos::new(wi + 1, 0), seed);
    for x in 1..=wi {
        let (a, b) = (at(terms[1].1, x), at(terms[0].1, x));
        let edges = [pair(&mut kit, a, b), kit.g(&format!("${}", x + 1), 2), N, kit.g(&format!("${x}"), 2)];
        kit.tile(Family::Input, format!("i{x}:{}{}", digit(a), digit(b)), edges, "yellow");
    }
    let (north, east) = (kit.g("l1", 2), kit.g("$1", 2));
    kit.tile(Family::Corner, "BL".into(), [north, east, N, N], "purple");

    for y in 1..=f2 {
        let s = kit.g(&format!("l{y}"), 2);
        let north = if y == f2 && spec.modulus.is_some() {
            zigzag::link(&mut kit, Side::Left)
        } else {
            kit.g(&format!("l{}", y + 1), 2)
        };
        let east = if y == f1 { kit.g("g", 1) } else { N };
        kit.tile(Family::LeftFrame, format!("L{y}"), [north, east, s, N], "gray");

        let (s, north) = (kit.g(&format!("r{y}"), 2), kit.g(&format!("r{}", y + 1), 2));
        let west = if y == f2 {
            kit.g("k1", 1)
        } else if y == f1 {
            N
        } else if y % 2 == 1 {
            match terms[(y as usize).div_ceil(2)].0 {
                Sign::Plus => kit.g("+0", 1),
                Sign::Minus => kit.g("-0", 1),
            }
        } else {
            kit.g(&format!("#{}.{}", y / 2 + 2, w + 1), 1)
        };
        kit.tile(Family::RightFrame, format!("R{y}"), [north, N, s, west], "gray");
    }

    for a in [false, true] {
        for b in [false, true] {
            for c in [false, true] {
                let south = pair(&mut kit, a, b);
                let (sum, carry) = super::add8::full_add(a, b, c);
                let edges = [
                    bit_glue(&mut kit, sum),
                    kit.g(&format!("+{}", digit(c)), 1),
                    south,
                    kit.g(&format!("+{}", digit(carry)), 1),
                ];
                let label = format!("{}+{}{}{}", digit(sum), digit(a), digit(b), digit(c));
                kit.bit_tile(Family::ComputationalPlus, label, edges, sum);

                let (diff, borrow) = full_sub(a, b, c);
                let edges = [
                    bit_glue(&mut kit, diff),
                    kit.g(&format!("-{}", digit(c)), 1),
                    south,
                    kit.g(&format!("-{}", digit(borrow)), 1),
                ];
                let label = format!("{}-{}{}{}", digit(diff), digit(a), digit(b), digit(c));
                kit.bit_tile(Family::ComputationalMinus, label, edges, diff);
            }
        }
    }

    for j in 3..=n {
        for x in 1..=wi {
            let a = at(terms[j - 1].1, x);
            for sb in [false, true] {
                let edges = [
                    pair(&mut kit, a, sb),
                    kit.g(&format!("#{j}.{}", x + 1), 1),
                    bit_glue(&mut kit, sb),
                    kit.g(&format!("#{j}.{x}"), 1),
                ];
                kit.tile(Family::Input, format!("i{j}.{x}:{}{}", digit(a), digit(sb)), edges, "yellow");
            }
        }
    }

    // Sign broadcast, west to east.
    let g = kit.g("g", 1);
    for b in [false, true] {
        let f = kit.g(&format!("f{}{}", digit(b), digit(b)), 1);
        let sg = kit.g(&format!("sg{}", digit(b)), 1);
        let south = bit_glue(&mut kit, b);
        kit.tile(Family::OtherComputational, format!("S{}", digit(b)), [f, sg, south, g], "green");
    }
    for s in [false, true] {
        for b in [false, true] {
            let f = kit.g(&format!("f{}{}", digit(s), digit(b)), 1);
            let sg = kit.g(&format!("sg{}", digit(s)), 1);
            let south = bit_glue(&mut kit, b);
            kit.tile(Family::OtherComputational, format!("{}s{}", digit(b), digit(s)), [f, sg, south, sg], "green");
        }
    }

    // Negation of negative values, east to west.
    for b in [false, true] {
        let (k1, south, north) = (kit.g("k1", 1), kit.g(&format!("f0{}", digit(b)), 1), mag(&mut kit, false, b));
        let t = kit.bit_tile(Family::OtherComputational, format!("{}n0", digit(b)), [north, k1, south, k1], b);
        kit.layout.sign_of.insert(t, false);
    }
    for b in [false, true] {
        for c in [false, true] {
            let t = (!b) as u8 + c as u8;
            let out = t & 1 == 1;
            let edges = [
                mag(&mut kit, true, out),
                kit.g(&format!("k{}", digit(c)), 1),
                kit.g(&format!("f1{}", digit(b)), 1),
                kit.g(&format!("k{}", digit(t >= 2)), 1),
            ];
            let id = kit.bit_tile(
                Family::OtherComputational,
                format!("{}n1{}{}", digit(out), digit(b), digit(c)),
                edges,
                out,
            );
            kit.layout.sign_of.insert(id, true);
        }
    }

    Ok((kit, terms))
}

pub fn compile_addsub(spec: &SignedExpressionSpec) -> Result<Compiled, CompileError> {
    if spec.modulus.is_some() {
        return compile_modexpr(spec);
    }
    let (mut kit, terms) = build_core(spec)?;
    let n = terms.len();
    let w = kit.layout.width;
    let top = 2 * n as i32;
    let t = kit.g("t", 1);
    let s = kit.g(&format!("l{top}"), 2);
    kit.tile(Family::TopFrame, "TL".into(), [N, N, s, N], "purple");
    let s = kit.g(&format!("r{top}"), 2);
    kit.tile(Family::TopFrame, "TR".into(), [N, N, s, t], "purple");
    for s in [false, true] {
        for b in [false, true] {
            let edges = [N, t, mag(&mut kit, s, b), t];
            let id = kit.bit_tile(Family::TopFrame, format!("{}T{}", digit(b), if s { '-' } else { '+' }), edges, b);
            kit.layout.sign_of.insert(id, s);
        }
    }
    kit.layout.result_row = Some(ResultRow::Fixed(top));
    kit.layout.sign_cell = Some(Pos::new(1, top));
    kit.finish(Kind::Signed, (w + 2) * (top as usize + 1))
}

fn div_state(kit: &mut Kit, m: bool, t: bool) -> GlueId {
    kit.g(&format!("d{}{}", digit(m), digit(t)), 1)
}

pub fn compile_modexpr(spec: &SignedExpressionSpec) -> Result<Compiled, CompileError> {
    let Some(modulus) = spec.modulus else {
        return Err(CompileError::MissingModulus);
    };
    let (mut kit, terms) = build_core(spec)?;
    let n = terms.len();
    let w = kit.layout.width;
    let wi = w as i32;
    let load = 2 * n as i32;

    // Load row: magnitude next to the modulus, east to west.
    let s = kit.g(&format!("r{load}"), 2);
    let (west, north) = (kit.g(&format!("L.{}", w + 1), 1), zigzag::link(&mut kit, Side::Right));
    kit.tile(Family::RightFrame, "Rload".into(), [north, N, s, west], "gray");
    for x in 1..=wi {
        let tb = bit(modulus, (wi - x) as usize);
        for s in [false, true] {
            for b in [false, true] {
                let edges = [
                    div_state(&mut kit, b, tb),
                    kit.g(&format!("L.{}", x + 1), 1),
                    mag(&mut kit, s, b),
                    kit.g(&format!("L.{x}"), 1),
                ];
                kit.tile(Family::DivisionLoad, format!("D{x}:{}{}", digit(b), digit(s)), edges, "yellow");
            }
        }
    }
    let (l1, go_cmp) = (kit.g("L.1", 1), zigzag::go(&mut kit, "cmp"));
    zigzag::end(&mut kit, Family::LeftFrame, "load", Side::Left, l1, go_cmp);

    // Compare M with T, most significant bit first.
    let rel = |kit: &mut Kit, r: char| kit.g(&format!("c{r}"), 1);
    let eq = rel(&mut kit, '=');
    zigzag::start(&mut kit, Family::LeftFrame, "cmp", Side::Left, eq);
    for m in [false, true] {
        for t in [false, true] {
            for r in ['=', '>', '<'] {
                let out = match (r, m, t) {
                    ('=', true, false) => '>',
                    ('=', false, true) => '<',
                    _ => r,
                };
                let st = div_state(&mut kit, m, t);
                let (i, o) = (rel(&mut kit, r), rel(&mut kit, out));
                let edges = zigzag::row_edges(Side::Left, st, st, i, o);
                kit.tile(Family::DivisionCompare, format!("c{}{}{r}", digit(m), digit(t)), edges, "cyan");
            }
        }
    }
    let go_sub = zigzag::go(&mut kit, "sub");
    let done = zigzag::halt(&mut kit, "rem");
    for (r, north) in [('=', go_sub), ('>', go_sub), ('<', done)] {
        let sig = rel(&mut kit, r);
        zigzag::end(&mut kit, Family::RightFrame, &format!("cmp{r}"), Side::Right, sig, north);
    }

    // M - T, east to west.
    let b0 = kit.g("b0", 1);
    zigzag::start(&mut kit, Family::RightFrame, "sub", Side::Right, b0);
    for m in [false, true] {
        for t in [false, true] {
            for c in [false, true] {
                let (d, borrow) = full_sub(t, m, c);
                let edges = zigzag::row_edges(
                    Side::Right,
                    div_state(&mut kit, d, t),
                    div_state(&mut kit, m, t),
                    kit.g(&format!("b{}", digit(c)), 1),
                    kit.g(&format!("b{}", digit(borrow)), 1),
                );
                kit.tile(Family::DivisionSubtract, format!("b{}{}{}", digit(m), digit(t), digit(c)), edges, "orange");
            }
        }
    }
    zigzag::end(&mut kit, Family::LeftFrame, "sub", Side::Left, b0, go_cmp);

    // Display the remainder, east to west.
    let h = kit.g("h", 1);
    kit.tile(Family::TopFrame, "TR".into(), [N, N, done, h], "purple");
    for m in [false, true] {
        for t in [false, true] {
            let edges = [N, h, div_state(&mut kit, m, t), h];
            kit.bit_tile(Family::TopFrame, format!("{}T{}", digit(m), digit(t)), edges, m);
        }
    }
    let ll = zigzag::link(&mut kit, Side::Left);
    kit.tile(Family::TopFrame, "TL".into(), [N, h, ll, N], "purple");

    kit.layout.result_row = Some(ResultRow::Topmost);
    kit.layout.sign_cell = Some(Pos::new(1, load - 1));
    let magnitude = spec.value().unsigned_abs();
    let rounds = (magnitude / modulus as u128).min(1 << 20) as usize;
    let rows = load as usize + 3 + 2 * (rounds + 1);
    kit.finish(Kind::SignedMod, (w + 2) * rows)
}
