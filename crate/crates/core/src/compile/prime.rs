//! Primality by trial division.
//!
//! Every column holds three bits `(I, N, K)`: a working copy `I` of the
//! input, the input `N` itself and the candidate divisor `K`, which starts
//! at `N / 2`. Rows alternate direction and are chosen by the previous
//! row's outcome:
//!
//! ```text
//! conv  -> check
//! check -> halt prime if K = 1, else move
//! move  -> compare
//! compare -> sub if I > K, halt composite if I = K, dec if I < K
//! sub   -> compare          (I := I - K)
//! dec   -> check            (K := K - 1, I := N)
//! ```

use super::zigzag::{self, row_edges, Side};
use super::{bit, bit_len, digit, signed::full_sub, CompileError, Compiled, Family, Kind, Kit, PrimalitySpec, N};
use crate::model::{GlueId, Pos};

fn state(kit: &mut Kit, i: bool, n: bool, k: bool) -> GlueId {
    kit.g(&format!("s{}{}{}", digit(i), digit(n), digit(k)), 1)
}

fn sig(kit: &mut Kit, name: &str) -> GlueId {
    kit.g(name, 1)
}

const BITS: [bool; 2] = [false, true];

/// Row count of the terminal assembly, bottom and top rows included.
/// Saturates for inputs too large to simulate.
fn row_count(n: u64) -> usize {
    const CAP: usize = 1 << 24;
    let mut rows = 2 + 1; // input, conv, top
    let mut k = n / 2;
    loop {
        rows += 1; // check
        if k <= 1 || rows > CAP {
            return rows.min(CAP);
        }
        rows += 1; // move
        let mut i = n;
        loop {
            rows += 1; // compare
            if i == k {
                return rows.min(CAP);
            }
            if i < k || rows > CAP {
                break;
            }
            i -= k;
            rows += 1; // sub
        }
        rows += 1; // dec
        k -= 1;
    }
}

pub fn compile_prime(spec: &PrimalitySpec) -> Result<Compiled, CompileError> {
    let n = spec.n;
    if n < 2 {
        return Err(CompileError::Domain(n));
    }
    let w = bit_len(n);
    let wi = w as i32;
    let mut kit = Kit::new("prime", format!("prime_tile_{n}"), w);

    // Input row with n_i and n_{i+1} side by side.
    let seed = {
        let (north, west) = (zigzag::go(&mut kit, "conv"), kit.g(&format!("${}", w + 1), 2));
        kit.tile(Family::Corner, "BR".into(), [north, N, N, west], "blue")
    };
    kit.seed(Pos::new(wi + 1, 0), seed);
    for x in 1..=wi {
        let i = (wi - x) as usize;
        let (a, b) = (bit(n, i), bit(n, i + 1));
        let edges = [
            kit.g(&format!("in{}{}", digit(a), digit(b)), 1),
            kit.g(&format!("${}", x + 1), 2),
            N,
            kit.g(&format!("${x}"), 2),
        ];
        kit.tile(Family::Input, format!("i{x}:{}", digit(a)), edges, "yellow");
    }
    let (north, east) = (zigzag::link(&mut kit, Side::Left), kit.g("$1", 2));
    kit.tile(Family::Corner, "BL".into(), [north, east, N, N], "purple");

    // conv: (n_i, n_{i+1}) -> (I, N, K) = (n_i, n_i, n_{i+1}).
    let v = sig(&mut kit, "v");
    zigzag::start(&mut kit, Family::RightFrame, "conv", Side::Right, v);
    for a in BITS {
        for b in BITS {
            let south = kit.g(&format!("in{}{}", digit(a), digit(b)), 1);
            let edges = row_edges(Side::Right, state(&mut kit, a, a, b), south, v, v);
            kit.tile(Family::Converter, format!("v{}{}", digit(a), digit(b)), edges, "cyan");
        }
    }
    let go_chk = zigzag::go(&mut kit, "chk");
    zigzag::end(&mut kit, Family::LeftFrame, "conv", Side::Left, v, go_chk);

    // check: is K = 1? The signal is min(2, K read so far).
    let z = |kit: &mut Kit, v: u8| sig(kit, &format!("={v}"));
    let z0 = z(&mut kit, 0);
    zigzag::start(&mut kit, Family::LeftFrame, "chk", Side::Left, z0);
    for a in BITS {
        for k in BITS {
            for so_far in 0..3u8 {
                let next = (2 * so_far + k as u8).min(2);
                let st = state(&mut kit, a, a, k);
                let edges = row_edges(Side::Left, st, st, z(&mut kit, so_far), z(&mut kit, next));
                kit.tile(Family::CheckGreaterThanOne, format!("z{}{}{so_far}", digit(a), digit(k)), edges, "green");
            }
        }
    }
    let (is_prime, go_move) = (zigzag::halt(&mut kit, "prime"), zigzag::go(&mut kit, "move"));
    let z1 = z(&mut kit, 1);
    zigzag::end(&mut kit, Family::RightFrame, "chk=1", Side::Right, z1, is_prime);
    let z2 = z(&mut kit, 2);
    zigzag::end(&mut kit, Family::RightFrame, "chk=2", Side::Right, z2, go_move);

    // move: back to the west side unchanged.
    let mv = sig(&mut kit, "mv");
    zigzag::start(&mut kit, Family::RightFrame, "move", Side::Right, mv);
    for a in BITS {
        for k in BITS {
            let st = state(&mut kit, a, a, k);
            let edges = row_edges(Side::Right, st, st, mv, mv);
            kit.tile(Family::MoveRightToLeft, format!("m{}{}", digit(a), digit(k)), edges, "gray");
        }
    }
    let go_cmp = zigzag::go(&mut kit, "cmp");
    zigzag::end(&mut kit, Family::LeftFrame, "move", Side::Left, mv, go_cmp);

    // compare I with K, most significant bit first.
    let rel = |kit: &mut Kit, r: char| sig(kit, &format!("c{r}"));
    let eq = rel(&mut kit, '=');
    zigzag::start(&mut kit, Family::LeftFrame, "cmp", Side::Left, eq);
    for i in BITS {
        for nb in BITS {
            for k in BITS {
                for r in ['=', '>', '<'] {
                    let out = match (r, i, k) {
                        ('=', true, false) => '>',
                        ('=', false, true) => '<',
                        _ => r,
                    };
                    let st = state(&mut kit, i, nb, k);
                    let edges = row_edges(Side::Left, st, st, rel(&mut kit, r), rel(&mut kit, out));
                    kit.tile(
                        Family::CheckCompare,
                        format!("c{}{}{}{r}", digit(i), digit(nb), digit(k)),
                        edges,
                        "orange",
                    );
                }
            }
        }
    }
    let (go_sub, go_dec) = (zigzag::go(&mut kit, "sub"), zigzag::go(&mut kit, "dec"));
    let composite = zigzag::halt(&mut kit, "composite");
    for (r, north) in [('>', go_sub), ('=', composite), ('<', go_dec)] {
        let s = rel(&mut kit, r);
        zigzag::end(&mut kit, Family::RightFrame, &format!("cmp{r}"), Side::Right, s, north);
    }

    // sub: I := I - K.
    let borrow = |kit: &mut Kit, c: bool| sig(kit, &format!("-{}", digit(c)));
    let b0 = borrow(&mut kit, false);
    zigzag::start(&mut kit, Family::RightFrame, "sub", Side::Right, b0);
    for i in BITS {
        for nb in BITS {
            for k in BITS {
                for c in BITS {
                    let (d, out) = full_sub(k, i, c);
                    let edges = row_edges(
                        Side::Right,
                        state(&mut kit, d, nb, k),
                        state(&mut kit, i, nb, k),
                        borrow(&mut kit, c),
                        borrow(&mut kit, out),
                    );
                    let label = format!("b{}{}{}{}", digit(i), digit(nb), digit(k), digit(c));
                    kit.tile(Family::SubtractBMinusC, label, edges, "red");
                }
            }
        }
    }
    zigzag::end(&mut kit, Family::LeftFrame, "sub", Side::Left, b0, go_cmp);

    // dec: K := K - 1 and I := N.
    let dborrow = |kit: &mut Kit, c: bool| sig(kit, &format!("~{}", digit(c)));
    let d1 = dborrow(&mut kit, true);
    zigzag::start(&mut kit, Family::RightFrame, "dec", Side::Right, d1);
    for i in BITS {
        for nb in BITS {
            for k in BITS {
                for c in BITS {
                    let (kk, out) = full_sub(c, k, false);
                    let edges = row_edges(
                        Side::Right,
                        state(&mut kit, nb, nb, kk),
                        state(&mut kit, i, nb, k),
                        dborrow(&mut kit, c),
                        dborrow(&mut kit, out),
                    );
                    let label = format!("k{}{}{}{}", digit(i), digit(nb), digit(k), digit(c));
                    kit.tile(Family::SubtractCMinusOne, label, edges, "pink");
                }
            }
        }
    }
    let d0 = dborrow(&mut kit, false);
    zigzag::end(&mut kit, Family::LeftFrame, "dec", Side::Left, d0, go_chk);

    // Verdict row, east to west.
    for (verdict, halt) in [(true, is_prime), (false, composite)] {
        let tag = if verdict { 'P' } else { 'C' };
        let vg = sig(&mut kit, &format!("V{tag}"));
        let color = if verdict { "red" } else { "white" };
        let t = kit.tile(Family::Corner, format!("{tag}R"), [N, N, halt, vg], color);
        kit.layout.verdict_of.insert(t, verdict);
        for i in BITS {
            for nb in BITS {
                for k in BITS {
                    let edges = [N, vg, state(&mut kit, i, nb, k), vg];
                    let label = format!("{tag}{}{}{}", digit(i), digit(nb), digit(k));
                    kit.tile(Family::TopFrame, label, edges, color);
                }
            }
        }
        let ll = zigzag::link(&mut kit, Side::Left);
        let t = kit.tile(Family::Corner, format!("{tag}L"), [N, vg, ll, N], color);
        kit.layout.verdict_of.insert(t, verdict);
    }

    kit.finish(Kind::Prime, (w + 2) * row_count(n))
}
