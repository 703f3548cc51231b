//! Parser for arithmetic requests.
//!
//! ```text
//! expr   := 'prime' INT
//!         | INT ('*' INT)+
//!         | [+-]? INT (('+' | '-') INT)* ('mod' INT)?
//! ```
//!
//! A sum with no explicit leading sign, only `+` and no modulus is plain
//! addition; anything else on the third line is a signed expression.
//! Whitespace is ignored. Integers are decimal and must fit in a `u64`.

use std::fmt;

use thiserror::Error;

use crate::compile::{
    AddVariant, AdditionSpec, CompileSpec, MultiplicationSpec, PrimalitySpec, Sign, SignedExpressionSpec,
};

/// Columns are 1-based character positions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("column {column}: cannot mix `*` with `+`, `-` or `mod`")]
    MixedOperators { column: usize },
    #[error("column {column}: integer does not fit in 64 bits")]
    Overflow { column: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpressionKind {
    Add,
    Mul,
    Signed,
    SignedMod,
    Prime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpressionSpec {
    Add(Vec<u64>),
    Mul(Vec<u64>),
    Signed(SignedExpressionSpec),
    Prime(u64),
}

impl ExpressionSpec {
    pub fn kind(&self) -> ExpressionKind {
        match self {
            ExpressionSpec::Add(_) => ExpressionKind::Add,
            ExpressionSpec::Mul(_) => ExpressionKind::Mul,
            ExpressionSpec::Signed(s) if s.modulus.is_some() => ExpressionKind::SignedMod,
            ExpressionSpec::Signed(_) => ExpressionKind::Signed,
            ExpressionSpec::Prime(_) => ExpressionKind::Prime,
        }
    }

    /// `variant` only matters for addition.
    pub fn to_compile_spec(&self, variant: AddVariant) -> CompileSpec {
        match self {
            ExpressionSpec::Add(v) => CompileSpec::Add(AdditionSpec { inputs: v.clone(), variant }),
            ExpressionSpec::Mul(v) => CompileSpec::Mul(MultiplicationSpec { inputs: v.clone() }),
            ExpressionSpec::Signed(s) => CompileSpec::Signed(s.clone()),
            ExpressionSpec::Prime(n) => CompileSpec::Prime(PrimalitySpec { n: *n }),
        }
    }
}

fn join(f: &mut fmt::Formatter<'_>, v: &[u64], sep: char) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Canonical form; [`parse`] maps it back to the same spec.
impl fmt::Display for ExpressionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpressionSpec::Add(v) => join(f, v, '+'),
            ExpressionSpec::Mul(v) => join(f, v, '*'),
            ExpressionSpec::Prime(n) => write!(f, "prime {n}"),
            ExpressionSpec::Signed(s) => {
                let all_plus = s.terms.iter().all(|&(sg, _)| sg == Sign::Plus);
                for (i, &(sg, v)) in s.terms.iter().enumerate() {
                    if i > 0 || sg == Sign::Minus || (all_plus && s.modulus.is_none()) {
                        write!(f, "{}", sg.symbol())?;
                    }
                    write!(f, "{v}")?;
                }
                if let Some(t) = s.modulus {
                    write!(f, " mod {t}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Plus,
    Minus,
    Star,
    Mod,
    Prime,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '×' => Some(Tok::Star),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, column));
            i += 1;
        } else if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                let d = chars[i] as u64 - '0' as u64;
                v = v.checked_mul(10).and_then(|v| v.checked_add(d)).ok_or(ParseError::Overflow { column })?;
                i += 1;
            }
            out.push((Tok::Int(v), column));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let t = match word.as_str() {
                "mod" => Tok::Mod,
                "prime" => Tok::Prime,
                _ => return Err(ParseError::Syntax { column, message: format!("unknown word `{word}`") }),
            };
            out.push((t, column));
        } else {
            return Err(ParseError::Syntax { column, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> (Tok, usize) {
        self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at];
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match self.bump() {
            (Tok::Int(v), _) => Ok(v),
            (_, column) => Err(ParseError::Syntax { column, message: "expected an integer".into() }),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.bump() {
            (Tok::End, _) => Ok(()),
            (_, column) => Err(ParseError::Syntax { column, message: "expected end of input".into() }),
        }
    }
}

pub fn parse(text: &str) -> Result<ExpressionSpec, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    if p.peek().0 == Tok::Prime {
        p.bump();
        let n = p.int()?;
        p.end()?;
        return Ok(ExpressionSpec::Prime(n));
    }

    let lead = match p.peek() {
        (Tok::Plus, c) => Some((Sign::Plus, c)),
        (Tok::Minus, c) => Some((Sign::Minus, c)),
        _ => None,
    };
    if lead.is_some() {
        p.bump();
    }
    let first = p.int()?;
    let mut terms = vec![(lead.map_or(Sign::Plus, |l| l.0), first)];
    let mut additive: Option<usize> = lead.map(|l| l.1);
    let mut star: Option<usize> = None;
    loop {
        let (t, column) = p.peek();
        let sign = match t {
            Tok::Plus => Sign::Plus,
            Tok::Minus => Sign::Minus,
            Tok::Star => {
                if additive.is_some() {
                    return Err(ParseError::MixedOperators { column });
                }
                star = Some(column);
                Sign::Plus
            }
            _ => break,
        };
        if t != Tok::Star {
            if star.is_some() {
                return Err(ParseError::MixedOperators { column });
            }
            additive = Some(column);
        }
        p.bump();
        terms.push((sign, p.int()?));
    }

    let mut modulus = None;
    if let (Tok::Mod, column) = p.peek() {
        if star.is_some() {
            return Err(ParseError::MixedOperators { column });
        }
        p.bump();
        modulus = Some(p.int()?);
    }
    p.end()?;

    if star.is_some() {
        return Ok(ExpressionSpec::Mul(terms.into_iter().map(|t| t.1).collect()));
    }
    let plain = lead.is_none() && modulus.is_none() && terms.iter().all(|t| t.0 == Sign::Plus);
    Ok(if plain {
        ExpressionSpec::Add(terms.into_iter().map(|t| t.1).collect())
    } else {
        ExpressionSpec::Signed(SignedExpressionSpec { terms, modulus })
    })
}
