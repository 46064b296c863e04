//! Hand-written recursive-descent parser for presentation text.
//!
//! Grammar (whitespace insignificant, `#` comments to end of line):
//!
//! ```text
//! presentation := "k<" names "|" relations ">"
//! names        := ident ("," ident)*
//! relations    := (poly ("," poly)*)?
//! poly         := ("-")? term (("+"|"-") term)*
//! term         := (integer | integer "/" integer)? ("*"? factor)*
//! factor       := ident
//! ```

use super::{FreeAlgError, NcPoly, Presentation, Word};
use crate::exactlin::{Field, Scalar};
use num::bigint::BigInt;
use num::One;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Lt,
    Gt,
    Pipe,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Eof,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, FreeAlgError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if ch.is_whitespace() {
            chars.next();
            bump(ch, &mut line, &mut col);
            continue;
        }
        if ch == '#' {
            while let Some(&c) = chars.peek() {
                chars.next();
                bump(c, &mut line, &mut col);
                if c == '\n' {
                    break;
                }
            }
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(name),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Int(digits.parse().expect("digits")),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match ch {
            '<' => Tok::Lt,
            '>' => Tok::Gt,
            '|' => Tok::Pipe,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            other => {
                return Err(FreeAlgError::Syntax {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character `{}`", other),
                })
            }
        };
        chars.next();
        bump(ch, &mut line, &mut col);
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    field: Field,
    generators: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, FreeAlgError> {
        let s = self.peek();
        Err(FreeAlgError::Syntax {
            line: s.line,
            col: s.col,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), FreeAlgError> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {}", what))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), FreeAlgError> {
        let s = self.peek().clone();
        match s.tok {
            Tok::Ident(name) => {
                self.next();
                Ok((name, s.line, s.col))
            }
            _ => self.err("expected an identifier"),
        }
    }

    fn presentation(&mut self) -> Result<Presentation, FreeAlgError> {
        let (k, _, _) = self.ident()?;
        if k != "k" {
            return self.err("presentations start with `k<`");
        }
        self.expect(Tok::Lt, "`<`")?;
        loop {
            let (name, _, _) = self.ident()?;
            if self.generators.contains(&name) {
                return Err(FreeAlgError::DuplicateGenerator(name));
            }
            self.generators.push(name);
            if self.peek().tok == Tok::Comma {
                self.next();
            } else {
                break;
            }
        }
        self.expect(Tok::Pipe, "`|`")?;
        let mut relations = Vec::new();
        if self.peek().tok != Tok::Gt {
            loop {
                let poly = self.poly()?;
                if poly.is_zero() {
                    return Err(FreeAlgError::EmptyRelation {
                        index: relations.len(),
                    });
                }
                relations.push(poly);
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Gt, "`>`")?;
        self.expect(Tok::Eof, "end of input")?;
        Presentation::new(self.field, std::mem::take(&mut self.generators), relations)
    }

    fn poly(&mut self) -> Result<NcPoly, FreeAlgError> {
        let mut out = NcPoly::zero(self.field);
        let mut negate = false;
        if self.peek().tok == Tok::Minus {
            self.next();
            negate = true;
        }
        loop {
            let term = self.term()?;
            out = if negate { out.sub(&term) } else { out.add(&term) };
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    negate = false;
                }
                Tok::Minus => {
                    self.next();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<NcPoly, FreeAlgError> {
        let mut coeff = Scalar::one(self.field);
        let mut saw_anything = false;
        if let Tok::Int(n) = self.peek().tok.clone() {
            self.next();
            saw_anything = true;
            let mut den = BigInt::one();
            if self.peek().tok == Tok::Slash {
                self.next();
                match self.peek().tok.clone() {
                    Tok::Int(d) => {
                        self.next();
                        if d == BigInt::from(0) {
                            return self.err("zero denominator");
                        }
                        den = d;
                    }
                    _ => return self.err("expected a denominator"),
                }
            }
            coeff = Scalar::from_ratio(self.field, &n, &den);
        }
        let mut word = Vec::new();
        loop {
            if self.peek().tok == Tok::Star {
                self.next();
                // a factor must follow an explicit `*`
                let (name, line, col) = self.ident()?;
                word.push(self.gen_index(&name, line, col)?);
                saw_anything = true;
                continue;
            }
            if let Tok::Ident(_) = self.peek().tok {
                let (name, line, col) = self.ident()?;
                word.push(self.gen_index(&name, line, col)?);
                saw_anything = true;
                continue;
            }
            break;
        }
        if !saw_anything {
            return self.err("expected a term");
        }
        Ok(NcPoly::from_term(coeff, Word(word)))
    }

    fn gen_index(&self, name: &str, line: usize, col: usize) -> Result<usize, FreeAlgError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| FreeAlgError::UnknownGenerator {
                name: name.to_string(),
                line,
                col,
            })
    }
}

/// Parses presentation text such as `k<x,y | x*y - y*x - 1>`.
///
/// Printing the result and reparsing it yields an identical presentation.
pub fn parse_presentation(text: &str, field: Field) -> Result<Presentation, FreeAlgError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        generators: Vec::new(),
    };
    p.presentation()
}
