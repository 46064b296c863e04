//! Words, noncommutative polynomials and algebra presentations.
//!
//! A presentation `k<x_1,...,x_a | y_1,...,y_b>` is a list of generator
//! names plus a list of relation polynomials in the free algebra. The text
//! grammar lives in [`parser`]; the group-presentation-to-group-algebra
//! transformer and the size of the associated quiver construction live
//! here.

mod parser;

pub use parser::parse_presentation;

use crate::exactlin::{Field, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown generator `{name}` at line {line}, column {col}")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("relation {index} is the zero polynomial")]
    EmptyRelation { index: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("operands come from different fields")]
    FieldMismatch,
    #[error("relator letter {letter} out of range for {count} group generators")]
    BadRelatorIndex { letter: i64, count: usize },
}

/// The global word order: total degree first, ties broken at the leftmost
/// differing letter, where the generator listed *earlier* ranks *higher*.
/// This orients `x*y - y*x - 1` as the rule `x*y -> y*x + 1`.
pub fn deglex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()) {
            match y.cmp(x) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    })
}

/// A monomial: a sequence of generator indices (0-based into the ambient
/// generator list). The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn one() -> Word {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Word {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First position at which `pattern` occurs as a (contiguous) subword.
    pub fn find_subword(&self, pattern: &Word) -> Option<usize> {
        if pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A noncommutative polynomial: finitely many words with nonzero
/// coefficients from one field. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero(field: Field) -> NcPoly {
        NcPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> NcPoly {
        NcPoly::from_term(Scalar::one(field), Word::one())
    }

    pub fn gen(field: Field, i: usize) -> NcPoly {
        NcPoly::from_term(Scalar::one(field), Word::gen(i))
    }

    pub fn constant(c: Scalar) -> NcPoly {
        NcPoly::from_term(c, Word::one())
    }

    pub fn from_term(c: Scalar, w: Word) -> NcPoly {
        let mut p = NcPoly::zero(c.field());
        p.add_term(&c, &w);
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree: the longest word, 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// The deglex-greatest term, if any.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, c: &Scalar, w: &Word) {
        assert_eq!(c.field(), self.field, "field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(c, w);
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (w, c) in self.terms() {
            out.terms.insert(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        assert_eq!(c.field(), self.field, "field mismatch");
        let mut out = NcPoly::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (w, v) in self.terms() {
            out.terms.insert(w.clone(), v.mul(c));
        }
        out
    }

    /// Product: words concatenate, coefficients multiply.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = NcPoly::zero(self.field);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(&c1.mul(c2), &w1.concat(w2));
            }
        }
        out
    }

    /// `left * self * right` for words, used by rewriting.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (w, c) in self.terms() {
            out.add_term(c, &left.concat(w).concat(right));
        }
        out
    }
}

/// Ring operations exposed as a single checked entry point.
pub enum NcOp {
    Add,
    Mul,
    Scale(Scalar),
}

pub fn nc_arith(p: &NcPoly, q: &NcPoly, op: NcOp) -> Result<NcPoly, FreeAlgError> {
    if p.field() != q.field() {
        return Err(FreeAlgError::FieldMismatch);
    }
    Ok(match op {
        NcOp::Add => p.add(q),
        NcOp::Mul => p.mul(q),
        NcOp::Scale(c) => {
            if c.field() != p.field() {
                return Err(FreeAlgError::FieldMismatch);
            }
            p.scale(&c)
        }
    })
}

/// A finitely presented algebra `k<X : Y>`: distinct generator names and a
/// list of nonzero relation polynomials over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub generators: Vec<String>,
    pub relations: Vec<NcPoly>,
}

impl Presentation {
    pub fn new(
        field: Field,
        generators: Vec<String>,
        relations: Vec<NcPoly>,
    ) -> Result<Presentation, FreeAlgError> {
        if generators.is_empty() {
            return Err(FreeAlgError::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(FreeAlgError::DuplicateGenerator(g.clone()));
            }
        }
        for (index, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(FreeAlgError::EmptyRelation { index });
            }
            assert_eq!(r.field(), field, "relation field mismatch");
        }
        Ok(Presentation {
            field,
            generators,
            relations,
        })
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Free algebra on the given generator names.
    pub fn free(field: Field, generators: Vec<String>) -> Presentation {
        Presentation::new(field, generators, Vec::new()).expect("free presentation")
    }

    pub fn format_poly(&self, p: &NcPoly) -> String {
        format_poly(p, &self.generators)
    }
}

fn format_scalar_magnitude(c: &Scalar) -> (bool, String) {
    // returns (is_negative, printed magnitude); F_p residues print as-is
    match c {
        Scalar::Q(q) => {
            use num::Signed;
            (q.is_negative(), q.abs().to_string())
        }
        Scalar::Fp { r, .. } => (false, r.to_string()),
    }
}

pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.0.iter()
        .map(|&i| names[i].as_str())
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_poly(p: &NcPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // leading term first
    for (idx, (w, c)) in p.terms().rev().enumerate() {
        let (neg, mag) = format_scalar_magnitude(c);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit_coeff = mag == "1";
        if w.is_empty() {
            out.push_str(&mag);
        } else if unit_coeff {
            out.push_str(&format_word(w, names));
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&format_word(w, names));
        }
    }
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels = self
            .relations
            .iter()
            .map(|r| self.format_poly(r))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "k<{} | {}>", self.generators.join(","), rels)
    }
}

/// Presentation of the group algebra `kG` from a group presentation with
/// `count` generators and relators written as words over `+-1..+-count`.
///
/// Output generators are `x_i` followed by their formal inverses `xb_i`;
/// output relations are `x_i*xb_i - 1`, `xb_i*x_i - 1`, and `s_j - 1` where
/// `s_j` replaces every occurrence of `x_i^{-1}` in the relator by `xb_i`.
pub fn group_algebra_presentation(
    field: Field,
    count: usize,
    relators: &[Vec<i64>],
) -> Result<Presentation, FreeAlgError> {
    if count == 0 {
        return Err(FreeAlgError::NoGenerators);
    }
    let mut generators: Vec<String> = (1..=count).map(|i| format!("x{}", i)).collect();
    generators.extend((1..=count).map(|i| format!("xb{}", i)));

    let one = NcPoly::one(field);
    let mut relations = Vec::new();
    for i in 0..count {
        let xi = Word::gen(i);
        let xbi = Word::gen(count + i);
        relations.push(NcPoly::from_term(Scalar::one(field), xi.concat(&xbi)).sub(&one));
        relations.push(NcPoly::from_term(Scalar::one(field), xbi.concat(&xi)).sub(&one));
    }
    for relator in relators {
        let mut letters = Vec::with_capacity(relator.len());
        for &l in relator {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > count {
                return Err(FreeAlgError::BadRelatorIndex {
                    letter: l,
                    count,
                });
            }
            letters.push(if l > 0 { idx - 1 } else { count + idx - 1 });
        }
        relations.push(NcPoly::from_term(Scalar::one(field), Word(letters)).sub(&one));
    }
    Presentation::new(field, generators, relations)
}

/// The number of vertices `n` of the quiver construction: one more than the
/// longest relation word, but never less than 2 (a degenerate one-vertex
/// quiver would lose the arrow to invert).
pub fn construction_size(p: &Presentation) -> usize {
    let max_len = p
        .relations
        .iter()
        .flat_map(|r| r.terms().map(|(w, _)| w.len()))
        .max()
        .unwrap_or(0);
    (1 + max_len).max(2)
}
