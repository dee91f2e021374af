//! Textual forms: quadratic-surd expressions and OEIS b-files.
//!
//! The surd grammar covers exactly the shapes that turn up as inputs here,
//! nothing more:
//!
//! ```text
//! input    := rational | quad
//! rational := int | int "/" posint
//! quad     := "(" int (("+"|"-") [posint "*"] "sqrt(" int ")")? ")" "/" posint
//!           | int ("+"|"-") [posint "*"] "sqrt(" int ")"
//! ```
//!
//! with optional whitespace between tokens and signed decimal integers.
//! Negative radicands are accepted (`sqrt(-3)`), and perfect-square
//! radicands normalize away during [`QuadElement`] construction, so
//! `(1+sqrt(9))/2` parses to the integer 2.
//!
//! [`format_surd`] prints the canonical form this grammar reads back:
//! `A`, `A/C`, or `(A+B*sqrt(D))/C` with reduced integers. B-files are the
//! OEIS plain-text format, one `index value` pair per line, `#` comments
//! ignored, indices strictly increasing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::engines::SequenceSlice;
use crate::error::{Error, Result};
use crate::quadfield::QuadElement;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Sqrt,
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value = digits.parse::<BigInt>().expect("digits parse");
                toks.push(Lexed {
                    tok: Tok::Int(value),
                    pos,
                });
                continue;
            }
            b'+' => toks.push(Lexed { tok: Tok::Plus, pos }),
            b'-' => toks.push(Lexed { tok: Tok::Minus, pos }),
            b'*' => toks.push(Lexed { tok: Tok::Star, pos }),
            b'/' => toks.push(Lexed { tok: Tok::Slash, pos }),
            b'(' => toks.push(Lexed { tok: Tok::LParen, pos }),
            b')' => toks.push(Lexed { tok: Tok::RParen, pos }),
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                if &text[start..i] == "sqrt" {
                    toks.push(Lexed { tok: Tok::Sqrt, pos });
                    continue;
                }
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected `sqrt`, found `{}`", &text[start..i]),
                });
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{}`", other as char),
                });
            }
        }
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Lexed>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|l| &l.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |l| l.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|l| l.tok.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.i += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    /// `["+"|"-"] digits`
    fn signed_int(&mut self) -> Result<BigInt> {
        let negative = match self.peek() {
            Some(Tok::Plus) => {
                self.i += 1;
                false
            }
            Some(Tok::Minus) => {
                self.i += 1;
                true
            }
            _ => false,
        };
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(v)) = self.bump() else {
                    unreachable!()
                };
                Ok(if negative { -v } else { v })
            }
            _ => self.err("expected an integer"),
        }
    }

    /// unsigned digits, must be >= 1
    fn posint(&mut self, what: &str) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => {
                if v.is_zero() {
                    Err(Error::Parse {
                        pos,
                        msg: format!("{what} must be positive"),
                    })
                } else {
                    Ok(v)
                }
            }
            _ => Err(Error::Parse {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    /// `("+"|"-") [posint "*"] "sqrt(" int ")"` -> (signed multiplier, radicand)
    fn surd_part(&mut self) -> Result<(BigInt, BigInt)> {
        let negative = match self.bump() {
            Some(Tok::Plus) => false,
            Some(Tok::Minus) => true,
            _ => return self.err("expected `+` or `-` before the surd"),
        };
        let mult = if matches!(self.peek(), Some(Tok::Int(_))) {
            let m = self.posint("surd multiplier")?;
            self.expect(Tok::Star, "`*` between the multiplier and sqrt")?;
            m
        } else {
            BigInt::one()
        };
        self.expect(Tok::Sqrt, "`sqrt`")?;
        self.expect(Tok::LParen, "`(` after sqrt")?;
        let radicand = self.signed_int()?;
        self.expect(Tok::RParen, "`)` closing sqrt")?;
        Ok((if negative { -mult } else { mult }, radicand))
    }

    fn finish(&mut self) -> Result<()> {
        if self.i == self.toks.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

/// Parses a rational or quadratic-surd expression into an exact
/// [`QuadElement`].
pub fn parse_surd(text: &str) -> Result<QuadElement> {
    let mut p = Parser {
        toks: lex(text)?,
        i: 0,
        end: text.len(),
    };
    let element = if p.peek() == Some(&Tok::LParen) {
        p.i += 1;
        let numer = p.signed_int()?;
        let surd = match p.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => Some(p.surd_part()?),
            _ => None,
        };
        p.expect(Tok::RParen, "`)`")?;
        p.expect(Tok::Slash, "`/` and a denominator")?;
        let denom = p.posint("denominator")?;
        build(numer, surd, denom)
    } else {
        let numer = p.signed_int()?;
        match p.peek() {
            Some(Tok::Slash) => {
                p.i += 1;
                let denom = p.posint("denominator")?;
                build(numer, None, denom)
            }
            Some(Tok::Plus) | Some(Tok::Minus) => {
                let surd = p.surd_part()?;
                build(numer, Some(surd), BigInt::one())
            }
            _ => build(numer, None, BigInt::one()),
        }
    };
    p.finish()?;
    Ok(element)
}

fn build(numer: BigInt, surd: Option<(BigInt, BigInt)>, denom: BigInt) -> QuadElement {
    let a = BigRational::new(numer, denom.clone());
    match surd {
        None => QuadElement::from_rational(a),
        Some((mult, radicand)) => {
            QuadElement::new(a, BigRational::new(mult, denom), radicand)
        }
    }
}

/// Canonical text for a [`QuadElement`]: `A`, `A/C`, or `(A+B*sqrt(D))/C`
/// with `gcd(A, B, C) = 1` and `C >= 1`. [`parse_surd`] reads every form
/// this produces.
pub fn format_surd(x: &QuadElement) -> String {
    let a = x.rational_part();
    if x.is_rational() {
        return if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        };
    }
    let b = x.surd_coeff();
    let c = a.denom().lcm(b.denom());
    let big_a = a.numer() * (&c / a.denom());
    let big_b = b.numer() * (&c / b.denom());
    let sign = if big_b.is_negative() { '-' } else { '+' };
    format!(
        "({}{}{}*sqrt({}))/{}",
        big_a,
        sign,
        big_b.abs(),
        x.radicand(),
        c
    )
}

/// Parsed b-file content: `(index, value)` pairs with strictly increasing
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Validates strictly increasing indices.
    pub fn new(entries: Vec<(i64, BigInt)>) -> Result<Self> {
        for (line, pair) in entries.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::BFile {
                    line: line + 2,
                    msg: format!("non-increasing index {} after {}", pair[1].0, pair[0].0),
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn from_slice(slice: &SequenceSlice) -> Self {
        Self {
            entries: slice
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| (slice.start as i64 + i as i64, v.clone()))
                .collect(),
        }
    }
}

/// Parses b-file text: one `index value` pair per whitespace-separated line,
/// `#` comment lines and blank lines ignored. Errors carry 1-based line
/// numbers.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_number = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::BFile {
                line: line_number,
                msg: format!("expected `index value`, got `{trimmed}`"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| Error::BFile {
            line: line_number,
            msg: format!("bad index `{idx}`"),
        })?;
        let value: BigInt = value.parse().map_err(|_| Error::BFile {
            line: line_number,
            msg: format!("bad value `{value}`"),
        })?;
        if let Some((prev, _)) = entries.last() {
            if idx <= *prev {
                return Err(Error::BFile {
                    line: line_number,
                    msg: format!("non-increasing index {idx} after {prev}"),
                });
            }
        }
        entries.push((idx, value));
    }
    Ok(BFile { entries })
}

/// Canonical b-file text: `index value` with a single space, one pair per
/// line, newline terminated. `parse_bfile . emit_bfile` is the identity and
/// re-emitting parsed canonical text is byte-stable.
pub fn emit_bfile(bfile: &BFile) -> String {
    let mut out = String::new();
    for (idx, value) in &bfile.entries {
        out.push_str(&idx.to_string());
        out.push(' ');
        out.push_str(&value.to_string());
        out.push('\n');
    }
    out
}
