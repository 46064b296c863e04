//! Malcolmson normal-form triples over `(A, sigma)` and their calculus.
//!
//! Every element of the localized corner ring can be written `a s^-1 b`
//! where `s` lies in the upper triangular closure of `sigma` and `a`, `b`
//! are maps of projectives. Concretely here:
//!
//! * the codomain `Q` and domain `P` are lists of vertices, standing for
//!   sums of the projectives at those vertices;
//! * `s[i][j]` is a path combination `q_i -> p_j`, zero below the
//!   diagonal, with each diagonal entry a single inverted arrow or a
//!   length-0 path (an identity);
//! * `a[i]` is a path combination starting at `q_i` (its value only sees
//!   the part ending at vertex 1), and `b[j]` runs from vertex 1 to `p_j`.
//!
//! The value of the triple is `phi(b) . phi(s)^-1 . phi(a)` read as a
//! row-by-matrix-by-column product of corner values in `S`; `phi(s)` is
//! unipotent upper triangular, hence invertible by back substitution. The
//! alternative reading of `a s^-1 b` with the outer factors swapped gives
//! the opposite corner ring; this orientation is fixed once and enforced
//! by the shape checks. Equality of triples is decided semantically, by
//! evaluating in `M_n(S)`: verdicts are certified only under a certified
//! rewriting system, and heuristic otherwise.

use crate::exactlin::Scalar;
use crate::freealg::NcPoly;
use crate::localize::{Construction, LocalizeError};
use crate::quiver::{PathPoly, QPath, QuiverError};
use crate::rewrite::{Provenance, RewriteError, RewriteSystem};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MalcolmsonError {
    #[error("triple is not in the upper triangular closure of sigma: {0}")]
    NotInSigmaClosure(String),
    #[error("malformed triple: {0}")]
    Shape(String),
    #[error(transparent)]
    Localize(#[from] LocalizeError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// An ordered list of vertices denoting `P_{v_1} + ... + P_{v_r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjSum(pub Vec<usize>);

impl ProjSum {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, other: &ProjSum) -> ProjSum {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ProjSum(v)
    }
}

/// A Malcolmson triple `a s^-1 b` over a construction.
#[derive(Debug, Clone)]
pub struct Triple {
    pub codomain: ProjSum,
    pub domain: ProjSum,
    /// `s[i][j]`: path combination `codomain[i] -> domain[j]`.
    pub s: Vec<Vec<PathPoly>>,
    /// `a[i]`: path combination starting at `codomain[i]`.
    pub a: Vec<PathPoly>,
    /// `b[j]`: path combination `1 -> domain[j]`.
    pub b: Vec<PathPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Value {
    pub poly: NcPoly,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqVerdict {
    Equal(Provenance),
    NotEqual(Provenance),
}

impl EqVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqVerdict::Equal(_))
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            EqVerdict::Equal(p) | EqVerdict::NotEqual(p) => *p,
        }
    }
}

impl Triple {
    /// The rank of the middle block.
    pub fn rank(&self) -> usize {
        self.domain.len()
    }

    /// Embeds an algebra element at the corner: `s` is the identity on the
    /// corner projective, `b` the corner idempotent, `a` the element.
    pub fn embed(c: &Construction, elem: PathPoly) -> Triple {
        let field = c.presentation.field;
        let f1 = PathPoly::path(field, QPath::lazy(1));
        Triple {
            codomain: ProjSum(vec![1]),
            domain: ProjSum(vec![1]),
            s: vec![vec![f1.clone()]],
            a: vec![elem],
            b: vec![f1],
        }
    }

    pub fn zero(c: &Construction) -> Triple {
        let field = c.presentation.field;
        let f1 = PathPoly::path(field, QPath::lazy(1));
        Triple {
            codomain: ProjSum(vec![1]),
            domain: ProjSum(vec![1]),
            s: vec![vec![f1.clone()]],
            a: vec![f1],
            b: vec![PathPoly::zero(field)],
        }
    }

    /// The element `x_{m,i} = e_{1,m} a_{m,i} e_{m+1,n} e_{n,1}`: the copy
    /// of the generator `x_i` living at level `m`. Its `s`-part encodes
    /// the inverse of the full `e`-path through the triangular closure.
    pub fn generator_copy(c: &Construction, m: usize, i: usize) -> Triple {
        let n = c.n;
        let field = c.presentation.field;
        assert!((1..n).contains(&m), "level out of range");
        assert!((1..=c.presentation.num_generators()).contains(&i));
        let r = n - 1;
        let codomain = ProjSum((1..n).rev().collect()); // n-1, ..., 1
        let domain = ProjSum((2..=n).rev().collect()); // n, ..., 2
        let mut s = vec![vec![PathPoly::zero(field); r]; r];
        for idx in 0..r {
            let level = n - 1 - idx;
            s[idx][idx] = PathPoly::path(
                field,
                QPath {
                    start: level,
                    arrows: vec![c.e_arrow(level)],
                },
            );
            if idx + 1 < r {
                s[idx][idx + 1] = PathPoly::path(field, QPath::lazy(level)).neg();
            }
        }
        let mut a = vec![PathPoly::zero(field); r];
        a[r - 1] = PathPoly::path(field, QPath::lazy(1));
        let mut b = vec![PathPoly::zero(field); r];
        let mut arrows: Vec<usize> = (1..m).map(|l| c.e_arrow(l)).collect();
        arrows.push(c.a_arrow(m, i));
        arrows.extend((m + 1..n).map(|l| c.e_arrow(l)));
        b[0] = PathPoly::path(field, QPath { start: 1, arrows });
        Triple {
            codomain,
            domain,
            s,
            a,
            b,
        }
    }

    /// Structural check: shapes line up, `s` is upper triangular, and each
    /// diagonal entry is a single inverted arrow or a length-0 path.
    pub fn validate(&self, c: &Construction) -> Result<(), MalcolmsonError> {
        let r = self.domain.len();
        if self.codomain.len() != r {
            return Err(MalcolmsonError::Shape(
                "codomain and domain must have equal length".into(),
            ));
        }
        if self.s.len() != r || self.a.len() != r || self.b.len() != r {
            return Err(MalcolmsonError::Shape("block sizes disagree".into()));
        }
        let q = &c.quiver;
        for (i, row) in self.s.iter().enumerate() {
            if row.len() != r {
                return Err(MalcolmsonError::Shape("s is not square".into()));
            }
            for (j, entry) in row.iter().enumerate() {
                for (p, _) in entry.terms() {
                    p.validate(q)?;
                    if p.tail() != self.codomain.0[i] || p.head(q) != self.domain.0[j] {
                        return Err(MalcolmsonError::Shape(format!(
                            "s[{i}][{j}] has a term outside ({}, {})",
                            self.codomain.0[i], self.domain.0[j]
                        )));
                    }
                }
                if j < i && !entry.is_zero() {
                    return Err(MalcolmsonError::NotInSigmaClosure(format!(
                        "nonzero entry below the diagonal at ({i}, {j})"
                    )));
                }
                if j == i {
                    let terms: Vec<_> = entry.terms().collect();
                    if terms.len() != 1 {
                        return Err(MalcolmsonError::NotInSigmaClosure(format!(
                            "diagonal entry {i} is not a single path"
                        )));
                    }
                    let (p, coeff) = terms[0];
                    let ok_idem = p.is_empty() && coeff.is_one();
                    let ok_sigma = p.arrows.len() == 1
                        && coeff.is_one()
                        && c.sigma.contains(&q.arrows[p.arrows[0]].name);
                    if !ok_idem && !ok_sigma {
                        return Err(MalcolmsonError::NotInSigmaClosure(format!(
                            "diagonal entry {i} is neither an inverted arrow nor an identity"
                        )));
                    }
                }
            }
        }
        for (i, entry) in self.a.iter().enumerate() {
            for (p, _) in entry.terms() {
                p.validate(q)?;
                if p.tail() != self.codomain.0[i] {
                    return Err(MalcolmsonError::Shape(format!(
                        "a[{i}] has a term not starting at {}",
                        self.codomain.0[i]
                    )));
                }
            }
        }
        for (j, entry) in self.b.iter().enumerate() {
            for (p, _) in entry.terms() {
                p.validate(q)?;
                if p.tail() != 1 || p.head(q) != self.domain.0[j] {
                    return Err(MalcolmsonError::Shape(format!(
                        "b[{j}] has a term outside (1, {})",
                        self.domain.0[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Sum: block-diagonal `s`, concatenated outer parts.
    pub fn add(&self, other: &Triple) -> Triple {
        let field = self.a[0].field();
        let r1 = self.rank();
        let r2 = other.rank();
        let mut s = vec![vec![PathPoly::zero(field); r1 + r2]; r1 + r2];
        for i in 0..r1 {
            for j in 0..r1 {
                s[i][j] = self.s[i][j].clone();
            }
        }
        for i in 0..r2 {
            for j in 0..r2 {
                s[r1 + i][r1 + j] = other.s[i][j].clone();
            }
        }
        let mut a = self.a.clone();
        a.extend(other.a.iter().cloned());
        let mut b = self.b.clone();
        b.extend(other.b.iter().cloned());
        Triple {
            codomain: self.codomain.concat(&other.codomain),
            domain: self.domain.concat(&other.domain),
            s,
            a,
            b,
        }
    }

    /// Product: `s` acquires the corner block `-a_1 b_2`, the outer parts
    /// keep only `b_1` and `a_2`.
    pub fn mul(&self, other: &Triple, c: &Construction) -> Triple {
        let field = self.a[0].field();
        let q = &c.quiver;
        let r1 = self.rank();
        let r2 = other.rank();
        let mut s = vec![vec![PathPoly::zero(field); r1 + r2]; r1 + r2];
        for i in 0..r1 {
            for j in 0..r1 {
                s[i][j] = self.s[i][j].clone();
            }
        }
        for i in 0..r2 {
            for j in 0..r2 {
                s[r1 + i][r1 + j] = other.s[i][j].clone();
            }
        }
        for i in 0..r1 {
            for j in 0..r2 {
                // only the part of a_1[i] ending at vertex 1 composes
                s[i][r1 + j] = self.a[i].mul(&other.b[j], q).neg();
            }
        }
        let mut a = vec![PathPoly::zero(field); r1];
        a.extend(other.a.iter().cloned());
        let mut b = self.b.clone();
        b.extend(vec![PathPoly::zero(field); r2]);
        Triple {
            codomain: self.codomain.concat(&other.codomain),
            domain: self.domain.concat(&other.domain),
            s,
            a,
            b,
        }
    }

    fn path_value(
        c: &Construction,
        p: &PathPoly,
        rs: &RewriteSystem,
        head_must_be_one: bool,
    ) -> Result<NcPoly, MalcolmsonError> {
        let mut out = NcPoly::zero(p.field());
        for (path, coeff) in p.terms() {
            if head_must_be_one && path.head(&c.quiver) != 1 {
                continue;
            }
            let mut v = NcPoly::one(p.field());
            for &ai in &path.arrows {
                v = v.mul(c.model.arrow_value(ai));
            }
            out = out.add(&v.scale(coeff));
        }
        Ok(rs.normal_form(&out)?)
    }

    /// Evaluates the triple to its corner value in `S`.
    pub fn value(&self, c: &Construction, rs: &RewriteSystem) -> Result<Value, MalcolmsonError> {
        self.validate(c)?;
        let field = c.presentation.field;
        let r = self.rank();
        // phi(s), with unit diagonal after reduction
        let mut vs = vec![vec![NcPoly::zero(field); r]; r];
        for i in 0..r {
            for j in 0..r {
                vs[i][j] = Self::path_value(c, &self.s[i][j], rs, false)?;
            }
            let diag_is_unit = vs[i][i].num_terms() == 1
                && vs[i][i].coeff(&crate::freealg::Word::one()).is_one();
            // a collapsed algebra can reduce the unit to zero
            if !diag_is_unit && !vs[i][i].is_zero() {
                return Err(MalcolmsonError::NotInSigmaClosure(format!(
                    "diagonal value at {i} is not the unit"
                )));
            }
        }
        // back substitution for the inverse of a unipotent triangular block
        let mut inv = vec![vec![NcPoly::zero(field); r]; r];
        for j in (0..r).rev() {
            inv[j][j] = vs[j][j].clone(); // 1, or 0 in a collapsed algebra
            for i in (0..j).rev() {
                let mut acc = NcPoly::zero(field);
                for k in i + 1..=j {
                    if vs[i][k].is_zero() || inv[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&vs[i][k].mul(&inv[k][j]));
                }
                inv[i][j] = rs.normal_form(&acc.neg())?;
            }
        }
        let va: Vec<NcPoly> = self
            .a
            .iter()
            .map(|p| Self::path_value(c, p, rs, true))
            .collect::<Result<_, _>>()?;
        let vb: Vec<NcPoly> = self
            .b
            .iter()
            .map(|p| Self::path_value(c, p, rs, false))
            .collect::<Result<_, _>>()?;
        let mut value = NcPoly::zero(field);
        for i in 0..r {
            if vb[i].is_zero() {
                continue;
            }
            for j in i..r {
                if inv[i][j].is_zero() || va[j].is_zero() {
                    continue;
                }
                value = value.add(&vb[i].mul(&inv[i][j]).mul(&va[j]));
            }
        }
        let value = rs.normal_form(&value)?;
        Ok(Value {
            poly: value,
            provenance: rs.provenance(),
        })
    }

    /// Semantic equality: compares the values in `M_n(S)`.
    pub fn eq(
        &self,
        other: &Triple,
        c: &Construction,
        rs: &RewriteSystem,
    ) -> Result<EqVerdict, MalcolmsonError> {
        let v1 = self.value(c, rs)?;
        let v2 = other.value(c, rs)?;
        let diff = v1.poly.sub(&v2.poly);
        let verdict = rs.is_zero(&diff)?;
        Ok(if verdict.is_zero() {
            EqVerdict::Equal(verdict.provenance())
        } else {
            EqVerdict::NotEqual(verdict.provenance())
        })
    }
}

/// JSON mirror of a path combination term: a coefficient, arrow names, and
/// (for length-0 paths) the vertex the lazy path sits at.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub path: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

/// JSON mirror of a triple, with entries as path polynomials by arrow name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripleJson {
    pub codomain: Vec<usize>,
    pub domain: Vec<usize>,
    pub s: Vec<Vec<Vec<TermJson>>>,
    pub a: Vec<Vec<TermJson>>,
    pub b: Vec<Vec<TermJson>>,
}

pub fn path_poly_from_json(
    c: &Construction,
    terms: &[TermJson],
) -> Result<PathPoly, MalcolmsonError> {
    let field = c.presentation.field;
    let mut out = PathPoly::zero(field);
    for t in terms {
        let coeff = parse_scalar(field, &t.coeff)?;
        let path = if t.path.is_empty() {
            let v = t.vertex.ok_or_else(|| {
                MalcolmsonError::Shape("length-0 path needs a `vertex` field".into())
            })?;
            QPath::lazy(v)
        } else {
            let arrows = t
                .path
                .iter()
                .map(|n| c.quiver.arrow_index(n))
                .collect::<Result<Vec<_>, _>>()?;
            QPath::from_arrows(&c.quiver, arrows)?
        };
        out.add_term(&coeff, &path);
    }
    Ok(out)
}

pub fn path_poly_to_json(c: &Construction, p: &PathPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(path, coeff)| TermJson {
            coeff: coeff.to_string(),
            path: path
                .arrows
                .iter()
                .map(|&ai| c.quiver.arrows[ai].name.clone())
                .collect(),
            vertex: if path.is_empty() {
                Some(path.tail())
            } else {
                None
            },
        })
        .collect()
}

fn parse_scalar(field: crate::exactlin::Field, text: &str) -> Result<Scalar, MalcolmsonError> {
    Scalar::parse(field, text).map_err(|e| MalcolmsonError::Shape(e.to_string()))
}

pub fn triple_from_json(c: &Construction, j: &TripleJson) -> Result<Triple, MalcolmsonError> {
    let s = j
        .s
        .iter()
        .map(|row| {
            row.iter()
                .map(|terms| path_poly_from_json(c, terms))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let a = j
        .a
        .iter()
        .map(|terms| path_poly_from_json(c, terms))
        .collect::<Result<Vec<_>, _>>()?;
    let b = j
        .b
        .iter()
        .map(|terms| path_poly_from_json(c, terms))
        .collect::<Result<Vec<_>, _>>()?;
    let t = Triple {
        codomain: ProjSum(j.codomain.clone()),
        domain: ProjSum(j.domain.clone()),
        s,
        a,
        b,
    };
    t.validate(c)?;
    Ok(t)
}

pub fn triple_to_json(c: &Construction, t: &Triple) -> TripleJson {
    TripleJson {
        codomain: t.codomain.0.clone(),
        domain: t.domain.0.clone(),
        s: t.s
            .iter()
            .map(|row| row.iter().map(|p| path_poly_to_json(c, p)).collect())
            .collect(),
        a: t.a.iter().map(|p| path_poly_to_json(c, p)).collect(),
        b: t.b.iter().map(|p| path_poly_to_json(c, p)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::freealg::{parse_presentation, Word};
    use crate::localize::build_construction;

    fn setup(text: &str, bound: usize) -> (Construction, RewriteSystem) {
        let p = parse_presentation(text, Field::Q).unwrap();
        let c = build_construction(&p).unwrap();
        let rs = c.rewrite_system(bound, 10_000).unwrap();
        (c, rs)
    }

    #[test]
    fn embed_reads_the_corner() {
        let (c, rs) = setup("k<x | x*x>", 4);
        let f1 = PathPoly::path(Field::Q, QPath::lazy(1));
        let t = Triple::embed(&c, f1.scale(&Scalar::from_i64(Field::Q, 3)));
        let v = t.value(&c, &rs).unwrap();
        assert_eq!(
            v.poly,
            NcPoly::one(Field::Q).scale(&Scalar::from_i64(Field::Q, 3))
        );
        assert_eq!(v.provenance, Provenance::Certified);

        // an element with no corner part has value zero
        let e1 = PathPoly::path(
            Field::Q,
            QPath {
                start: 1,
                arrows: vec![c.e_arrow(1)],
            },
        );
        let t = Triple::embed(&c, e1);
        assert!(t.value(&c, &rs).unwrap().poly.is_zero());
    }

    #[test]
    fn generator_copies_all_evaluate_to_the_generator() {
        let (c, rs) = setup("k<x,y | x*x, y*x>", 4);
        for i in 1..=2 {
            let expected = NcPoly::gen(Field::Q, i - 1);
            for m in 1..3 {
                let t = Triple::generator_copy(&c, m, i);
                t.validate(&c).unwrap();
                let v = t.value(&c, &rs).unwrap();
                assert_eq!(v.poly, expected, "x_({m},{i})");
            }
        }
    }

    #[test]
    fn add_and_mul_are_value_homomorphisms_on_basics() {
        let (c, rs) = setup("k<x,y | x*x, y*x>", 8);
        let x1 = Triple::generator_copy(&c, 1, 1);
        let x2 = Triple::generator_copy(&c, 2, 1);
        let y1 = Triple::generator_copy(&c, 1, 2);

        // zero is neutral
        let z = Triple::zero(&c);
        let sum = x1.add(&z);
        assert_eq!(sum.value(&c, &rs).unwrap().poly, NcPoly::gen(Field::Q, 0));

        // x_{1,1} + x_{2,1} = 2x
        let two_x = x1.add(&x2).value(&c, &rs).unwrap().poly;
        assert_eq!(
            two_x,
            NcPoly::gen(Field::Q, 0).scale(&Scalar::from_i64(Field::Q, 2))
        );

        // x * x = 0 under the relation x^2
        let sq = x1.mul(&x2, &c);
        sq.validate(&c).unwrap();
        assert!(sq.value(&c, &rs).unwrap().poly.is_zero());

        // x * y is irreducible
        let xy = x1.mul(&y1, &c).value(&c, &rs).unwrap().poly;
        assert_eq!(xy.coeff(&Word(vec![0, 1])), Scalar::from_i64(Field::Q, 1));
    }

    #[test]
    fn weyl_product_rewrites() {
        let (c, rs) = setup("k<x,y | x*y - y*x - 1>", 8);
        let x = Triple::generator_copy(&c, 1, 1);
        let y = Triple::generator_copy(&c, 1, 2);
        let v = x.mul(&y, &c).value(&c, &rs).unwrap().poly;
        // x*y reduces to y*x + 1
        assert_eq!(v.coeff(&Word(vec![1, 0])), Scalar::from_i64(Field::Q, 1));
        assert_eq!(v.coeff(&Word::one()), Scalar::from_i64(Field::Q, 1));

        // embeds multiply like the corners of phi
        let f1 = PathPoly::path(Field::Q, QPath::lazy(1));
        let e2 = Triple::embed(&c, f1.scale(&Scalar::from_i64(Field::Q, 2)));
        let e3 = Triple::embed(&c, f1.scale(&Scalar::from_i64(Field::Q, 3)));
        let prod = e2.mul(&e3, &c).value(&c, &rs).unwrap().poly;
        assert_eq!(prod.coeff(&Word::one()), Scalar::from_i64(Field::Q, 6));
    }

    #[test]
    fn eq_is_semantic() {
        let (c, rs) = setup("k<x,y | x*x, y*x>", 8);
        let x1 = Triple::generator_copy(&c, 1, 1);
        let x2 = Triple::generator_copy(&c, 2, 1);
        assert_eq!(
            x1.eq(&x1, &c, &rs).unwrap(),
            EqVerdict::Equal(Provenance::Certified)
        );
        // the copies of x at different levels are identified
        assert_eq!(
            x1.eq(&x2, &c, &rs).unwrap(),
            EqVerdict::Equal(Provenance::Certified)
        );

        // distinct generators in the free algebra stay distinct
        let (cf, rsf) = setup("k<x,y | >", 8);
        let x = Triple::generator_copy(&cf, 1, 1);
        let y = Triple::generator_copy(&cf, 1, 2);
        assert_eq!(
            x.eq(&y, &cf, &rsf).unwrap(),
            EqVerdict::NotEqual(Provenance::Certified)
        );
    }

    #[test]
    fn group_algebra_word_evaluates_through_the_localization() {
        // G = Z/2: the word x*x comes out as 1
        let p = crate::freealg::group_algebra_presentation(Field::Q, 1, &[vec![1, 1]]).unwrap();
        let c = build_construction(&p).unwrap();
        let rs = c.rewrite_system(8, 10_000).unwrap();
        let x = Triple::generator_copy(&c, 1, 1);
        let word = x.mul(&x, &c);
        let v = word.value(&c, &rs).unwrap();
        assert_eq!(v.poly, NcPoly::one(Field::Q));
        assert_eq!(v.provenance, Provenance::Certified);

        // and x * xbar is 1 as well
        let xbar = Triple::generator_copy(&c, 1, 2);
        assert_eq!(
            x.mul(&xbar, &c).value(&c, &rs).unwrap().poly,
            NcPoly::one(Field::Q)
        );
    }

    #[test]
    fn sigma_closure_is_preserved_and_checked() {
        let (c, _rs) = setup("k<x,y | x*x, y*x>", 8);
        let x = Triple::generator_copy(&c, 1, 1);
        let y = Triple::generator_copy(&c, 2, 2);
        // products and sums stay in the closure
        x.add(&y).validate(&c).unwrap();
        x.mul(&y, &c).validate(&c).unwrap();
        x.mul(&y, &c).add(&x).mul(&y, &c).validate(&c).unwrap();

        // a diagonal entry that is not an inverted arrow is rejected
        let mut bad = Triple::generator_copy(&c, 1, 1);
        bad.s[0][0] = PathPoly::path(
            Field::Q,
            QPath {
                start: 2,
                arrows: vec![c.a_arrow(2, 1)],
            },
        );
        assert!(matches!(
            bad.validate(&c),
            Err(MalcolmsonError::NotInSigmaClosure(_))
        ));

        // a nonzero entry below the diagonal is rejected
        let mut bad = Triple::generator_copy(&c, 1, 1);
        bad.s[1][0] = PathPoly::path(
            Field::Q,
            QPath {
                start: 1,
                arrows: vec![c.e_arrow(1), c.e_arrow(2)],
            },
        );
        assert!(matches!(
            bad.validate(&c),
            Err(MalcolmsonError::NotInSigmaClosure(_))
        ));
    }

    #[test]
    fn degree_budget_is_enforced() {
        let (c, rs) = setup("k<x,y | x*x, y*x>", 2);
        let y = Triple::generator_copy(&c, 1, 2);
        let yy = y.mul(&y, &c);
        let yyy = yy.mul(&y, &c);
        // y^3 is irreducible of degree 3 > 2
        assert!(matches!(
            yyy.value(&c, &rs),
            Err(MalcolmsonError::Rewrite(
                RewriteError::DegreeOutOfRange { .. }
            ))
        ));
    }

    #[test]
    fn json_round_trip() {
        let (c, rs) = setup("k<x,y | x*x, y*x>", 8);
        let t = Triple::generator_copy(&c, 2, 1).mul(&Triple::generator_copy(&c, 1, 2), &c);
        let j = triple_to_json(&c, &t);
        let back = triple_from_json(&c, &j).unwrap();
        assert_eq!(
            t.value(&c, &rs).unwrap().poly,
            back.value(&c, &rs).unwrap().poly
        );
        let text = serde_json::to_string(&j).unwrap();
        let parsed: TripleJson = serde_json::from_str(&text).unwrap();
        let again = triple_from_json(&c, &parsed).unwrap();
        assert_eq!(
            t.value(&c, &rs).unwrap().poly,
            again.value(&c, &rs).unwrap().poly
        );
    }

    #[test]
    fn random_triples_respect_the_homomorphism() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for text in ["k<x,y | >", "k<x,y | x*x, y*x>", "k<x,y | x*y - y*x - 1>"] {
            let (c, rs) = setup(text, 8);
            let leaves = |rng: &mut rand_chacha::ChaCha8Rng| -> Triple {
                if rng.gen_bool(0.3) {
                    let f1 = PathPoly::path(Field::Q, QPath::lazy(1));
                    Triple::embed(
                        &c,
                        f1.scale(&Scalar::from_i64(Field::Q, rng.gen_range(-2..=2))),
                    )
                } else {
                    let m = rng.gen_range(1..c.n);
                    let i = rng.gen_range(1..=2);
                    Triple::generator_copy(&c, m, i)
                }
            };
            for _ in 0..35 {
                let t1 = leaves(&mut rng);
                let t2 = leaves(&mut rng);
                let v1 = t1.value(&c, &rs).unwrap().poly;
                let v2 = t2.value(&c, &rs).unwrap().poly;
                let sum = t1.add(&t2);
                let prod = t1.mul(&t2, &c);
                sum.validate(&c).unwrap();
                prod.validate(&c).unwrap();
                assert_eq!(sum.value(&c, &rs).unwrap().poly, v1.add(&v2));
                assert_eq!(
                    prod.value(&c, &rs).unwrap().poly,
                    rs.normal_form(&v1.mul(&v2)).unwrap()
                );
            }
        }
    }
}
