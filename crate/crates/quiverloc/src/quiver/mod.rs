//! Quivers, paths and path algebras with relations.
//!
//! Vertices are numbered `1..=n` throughout, matching the usual matrix
//! index conventions downstream. A path algebra with relations stores, for
//! every vertex pair `(v, w)`, a canonical basis of residue paths for the
//! quotient `[v,w] / R[v,w]`, together with precomputed multiplication
//! tables between the bases.

mod algebra;
mod resolution;

pub use algebra::{quotient_algebra, AlgElem, PathAlgebra};
pub use resolution::{
    global_dimension, pd_via_padded_resolution, projective_module, simple_module,
    simple_resolution, ModuleRep, RepHom, Resolution,
};

use crate::exactlin::{Field, Scalar};
use crate::freealg::deglex_cmp;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arrow {0} has an endpoint outside 1..={1}")]
    BadEndpoint(String, usize),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("unknown arrow name `{0}`")]
    UnknownArrow(String),
    #[error("path does not compose at step {0}")]
    NotAPath(usize),
    #[error("the quiver has an oriented cycle")]
    NotAcyclic,
    #[error("relation {0} mixes tails or heads")]
    RelationNotHomogeneous(usize),
    #[error("field mismatch")]
    FieldMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

/// A finite quiver: vertices `1..=vertex_count` and named arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Quiver, QuiverError> {
        for (i, a) in arrows.iter().enumerate() {
            if a.tail == 0 || a.tail > vertex_count || a.head == 0 || a.head > vertex_count {
                return Err(QuiverError::BadEndpoint(a.name.clone(), vertex_count));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(QuiverError::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the vertex set
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            if a.tail != a.head {
                indeg[a.head - 1] += 1;
            } else {
                return false; // a loop is a cycle
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.tail - 1 == v {
                    indeg[a.head - 1] -= 1;
                    if indeg[a.head - 1] == 0 {
                        queue.push(a.head - 1);
                    }
                }
            }
        }
        seen == n
    }
}

/// A path: a start vertex plus a composable sequence of arrow indices.
/// The empty sequence is the length-0 path at its start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPath {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl QPath {
    pub fn lazy(v: usize) -> QPath {
        QPath {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<QPath, QuiverError> {
        if arrows.is_empty() {
            return Err(QuiverError::NotAPath(0));
        }
        let start = q.arrows[arrows[0]].tail;
        let p = QPath { start, arrows };
        p.validate(q)?;
        Ok(p)
    }

    pub fn validate(&self, q: &Quiver) -> Result<(), QuiverError> {
        let mut at = self.start;
        for (i, &ai) in self.arrows.iter().enumerate() {
            if q.arrows[ai].tail != at {
                return Err(QuiverError::NotAPath(i));
            }
            at = q.arrows[ai].head;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn tail(&self) -> usize {
        self.start
    }

    pub fn head(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map(|&ai| q.arrows[ai].head)
            .unwrap_or(self.start)
    }

    /// Concatenation `self` then `other`; the caller guarantees
    /// `self.head() == other.tail()`.
    pub fn concat(&self, other: &QPath) -> QPath {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        QPath {
            start: self.start,
            arrows,
        }
    }

    pub fn format(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("f{}", self.start);
        }
        self.arrows
            .iter()
            .map(|&ai| q.arrows[ai].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for QPath {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.arrows, &other.arrows).then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for QPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of paths. Relations are required to be
/// tail/head-homogeneous; general elements of the path algebra are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPoly {
    field: Field,
    terms: BTreeMap<QPath, Scalar>,
}

impl PathPoly {
    pub fn zero(field: Field) -> PathPoly {
        PathPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(c: Scalar, p: QPath) -> PathPoly {
        let mut out = PathPoly::zero(c.field());
        out.add_term(&c, &p);
        out
    }

    pub fn path(field: Field, p: QPath) -> PathPoly {
        PathPoly::from_term(Scalar::one(field), p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&QPath, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: &Scalar, p: &QPath) {
        assert_eq!(c.field(), self.field, "field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(p) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(p);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(p.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &PathPoly) -> PathPoly {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(c, p);
        }
        out
    }

    pub fn neg(&self) -> PathPoly {
        let mut out = PathPoly::zero(self.field);
        for (p, c) in self.terms() {
            out.terms.insert(p.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &PathPoly) -> PathPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> PathPoly {
        let mut out = PathPoly::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (p, v) in self.terms() {
            out.terms.insert(p.clone(), v.mul(c));
        }
        out
    }

    /// Path-algebra product: composable paths concatenate, the rest die.
    pub fn mul(&self, other: &PathPoly, q: &Quiver) -> PathPoly {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = PathPoly::zero(self.field);
        for (p1, c1) in self.terms() {
            for (p2, c2) in other.terms() {
                if p1.head(q) == p2.tail() {
                    out.add_term(&c1.mul(c2), &p1.concat(p2));
                }
            }
        }
        out
    }

    /// `(tail, head)` common to all terms, or an error if they mix.
    /// `None` for the zero combination.
    pub fn homogeneous_type(
        &self,
        q: &Quiver,
        index: usize,
    ) -> Result<Option<(usize, usize)>, QuiverError> {
        let mut ty = None;
        for (p, _) in self.terms() {
            let t = (p.tail(), p.head(q));
            match ty {
                None => ty = Some(t),
                Some(prev) if prev != t => {
                    return Err(QuiverError::RelationNotHomogeneous(index))
                }
                _ => {}
            }
        }
        Ok(ty)
    }

    pub fn format(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (p, c)) in self.terms().rev().enumerate() {
            let (neg, mag) = match c {
                Scalar::Q(v) => {
                    use num::Signed;
                    (v.is_negative(), v.abs().to_string())
                }
                Scalar::Fp { r, .. } => (false, r.to_string()),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag == "1" {
                out.push_str(&p.format(q));
            } else {
                out.push_str(&format!("{}*{}", mag, p.format(q)));
            }
        }
        out
    }
}

/// All paths from `v` to `w` of length at most `max_len`, in deglex order.
/// `max_len = None` asks for every path and requires an acyclic quiver.
pub fn enumerate_paths(
    q: &Quiver,
    v: usize,
    w: usize,
    max_len: Option<usize>,
) -> Result<Vec<QPath>, QuiverError> {
    let limit = match max_len {
        Some(l) => l,
        None => {
            if !q.is_acyclic() {
                return Err(QuiverError::NotAcyclic);
            }
            // in a DAG a path never repeats a vertex
            q.vertex_count.saturating_sub(1)
        }
    };
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(v, Vec::new())];
    while let Some((at, arrows)) = stack.pop() {
        if at == w {
            out.push(QPath {
                start: v,
                arrows: arrows.clone(),
            });
        }
        if arrows.len() == limit {
            continue;
        }
        for (ai, a) in q.arrows.iter().enumerate() {
            if a.tail == at {
                let mut next = arrows.clone();
                next.push(ai);
                stack.push((a.head, next));
            }
        }
    }
    out.sort();
    Ok(out)
}
