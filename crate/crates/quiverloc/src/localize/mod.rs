//! From a presentation `S = k<X : Y>` to a finite-dimensional quiver
//! algebra `A` whose localization at the `e`-arrows is the matrix ring
//! `M_n(S)`.
//!
//! The quiver has vertices `1..=n` where `n - 1` bounds the relation word
//! lengths (never below 2), and arrows `e_m` and `a_{m,i}` from `m` to
//! `m+1`. Two relation families are imposed:
//!
//! * `t_{m,i} = a_{1,i} e_{2,n} - e_{1,m} a_{m,i} e_{m+1,n}` for
//!   `1 < m < n`, gluing the copies of each generator together, and
//! * `y'_j`, the relations of `S` rewritten as paths `1 -> n`, a word
//!   `x_{i_1}...x_{i_u}` becoming `a_{1,i_1}...a_{u,i_u} e_{u+1,n}` (the
//!   empty word becomes `e_{1,n}`).
//!
//! The explicit matrix model sends `e_m` to the unit entry at `(m, m+1)`
//! and `a_{m,i}` to the generator `x_i` at `(m, m+1)`; it is the
//! verification vehicle for every claim about the localization.

mod fixtures;
mod verify;

pub use fixtures::{builtin_fixture, fixture_names, Fixture, FixtureReport};
pub use verify::{
    generation_check, image_algebra_dims, relation_kill_checks, sigma_invertibility_check,
    GenerationReport, ImageDims, RelationKillReport, SigmaInvertReport,
};

use crate::exactlin::Field;
use crate::freealg::{construction_size, FreeAlgError, NcPoly, Presentation};
use crate::quiver::{quotient_algebra, Arrow, PathAlgebra, PathPoly, QPath, Quiver, QuiverError};
use crate::rewrite::{complete_truncated, RewriteError, RewriteSystem};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LocalizeError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error("entry degree {degree} exceeds the rewrite bound {bound}")]
    DegreeOutOfRange { degree: usize, bound: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

/// The explicit homomorphism into `M_n(S)`: every arrow is sent to a
/// polynomial value placed at the `(tail, head)` entry.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub n: usize,
    pub field: Field,
    pub quiver: Quiver,
    arrow_values: Vec<NcPoly>,
}

impl MatrixModel {
    pub fn new(quiver: Quiver, field: Field, arrow_values: Vec<NcPoly>) -> MatrixModel {
        assert_eq!(quiver.arrows.len(), arrow_values.len());
        MatrixModel {
            n: quiver.vertex_count,
            field,
            quiver,
            arrow_values,
        }
    }

    pub fn arrow_value(&self, idx: usize) -> &NcPoly {
        &self.arrow_values[idx]
    }

    /// Image of a single path: the product of its arrow values at the
    /// `(tail, head)` entry, reduced to normal form.
    pub fn phi_path(&self, p: &QPath, rs: &RewriteSystem) -> Result<SMatrix, LocalizeError> {
        let mut value = NcPoly::one(self.field);
        for &ai in &p.arrows {
            value = value.mul(&self.arrow_values[ai]);
        }
        let raw_degree = value.degree();
        let value = rs.normal_form(&value)?;
        let mut m = SMatrix::zero(self.n, self.field);
        m.max_degree_seen = raw_degree;
        m.add_entry(p.tail(), p.head(&self.quiver), &value);
        Ok(m)
    }

    pub fn phi_path_poly(
        &self,
        p: &PathPoly,
        rs: &RewriteSystem,
    ) -> Result<SMatrix, LocalizeError> {
        let mut out = SMatrix::zero(self.n, self.field);
        for (path, c) in p.terms() {
            let m = self.phi_path(path, rs)?.scale(c);
            out = out.add(&m);
        }
        Ok(out)
    }

    /// The raw (unreduced) image of a homogeneous path combination as a
    /// single polynomial, before any rewriting.
    pub fn raw_entry_value(&self, p: &PathPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (path, c) in p.terms() {
            let mut value = NcPoly::one(self.field);
            for &ai in &path.arrows {
                value = value.mul(&self.arrow_values[ai]);
            }
            out = out.add(&value.scale(c));
        }
        out
    }

    /// Image of an algebra element expressed in the residue bases.
    pub fn phi_elem(
        &self,
        alg: &PathAlgebra,
        elem: &crate::quiver::AlgElem,
        rs: &RewriteSystem,
    ) -> Result<SMatrix, LocalizeError> {
        let mut out = SMatrix::zero(self.n, self.field);
        for ((v, w), coords) in &elem.comps {
            let basis = alg.pair_basis(*v, *w);
            for (i, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = self.phi_path(&basis[i], rs)?.scale(c);
                out = out.add(&m);
            }
        }
        Ok(out)
    }

    /// The unit matrix entry: `value` placed at `(v, w)`.
    pub fn unit(&self, v: usize, w: usize, value: NcPoly) -> SMatrix {
        let mut m = SMatrix::zero(self.n, self.field);
        m.add_entry(v, w, &value);
        m
    }
}

/// An `n x n` matrix with entries in the presented algebra, kept in normal
/// form under a rewriting system. `max_degree_seen` records the largest
/// entry degree encountered before reduction, so verdicts can carry
/// certified/heuristic provenance; it does not take part in equality.
#[derive(Debug, Clone)]
pub struct SMatrix {
    pub n: usize,
    pub field: Field,
    entries: Vec<NcPoly>,
    pub max_degree_seen: usize,
}

impl PartialEq for SMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.entries == other.entries
    }
}

impl Eq for SMatrix {}

impl SMatrix {
    pub fn zero(n: usize, field: Field) -> SMatrix {
        SMatrix {
            n,
            field,
            entries: vec![NcPoly::zero(field); n * n],
            max_degree_seen: 0,
        }
    }

    /// 1-based entry access.
    pub fn entry(&self, v: usize, w: usize) -> &NcPoly {
        &self.entries[(v - 1) * self.n + (w - 1)]
    }

    pub fn add_entry(&mut self, v: usize, w: usize, value: &NcPoly) {
        let idx = (v - 1) * self.n + (w - 1);
        self.entries[idx] = self.entries[idx].add(value);
        self.max_degree_seen = self.max_degree_seen.max(self.entries[idx].degree());
    }

    pub fn add(&self, other: &SMatrix) -> SMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = out.entries[i].add(&other.entries[i]);
        }
        out.max_degree_seen = self.max_degree_seen.max(other.max_degree_seen);
        out
    }

    pub fn scale(&self, c: &crate::exactlin::Scalar) -> SMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.scale(c);
        }
        out
    }

    /// Matrix product with entrywise reduction. Errors out if a product
    /// entry would exceed the rewrite bound before reduction.
    pub fn mul(&self, other: &SMatrix, rs: &RewriteSystem) -> Result<SMatrix, LocalizeError> {
        assert_eq!(self.n, other.n);
        let mut out = SMatrix::zero(self.n, self.field);
        let mut max_deg = self.max_degree_seen.max(other.max_degree_seen);
        for v in 1..=self.n {
            for w in 1..=self.n {
                let mut acc = NcPoly::zero(self.field);
                for u in 1..=self.n {
                    let a = self.entry(v, u);
                    let b = other.entry(u, w);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                if acc.is_zero() {
                    continue;
                }
                let deg = acc.degree();
                if deg > rs.degree_bound() {
                    return Err(LocalizeError::DegreeOutOfRange {
                        degree: deg,
                        bound: rs.degree_bound(),
                    });
                }
                max_deg = max_deg.max(deg);
                let nf = rs.normal_form(&acc)?;
                out.add_entry(v, w, &nf);
            }
        }
        out.max_degree_seen = max_deg;
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NcPoly::is_zero)
    }

    /// Entrywise normal form.
    pub fn reduced(&self, rs: &RewriteSystem) -> Result<SMatrix, LocalizeError> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = rs.normal_form(e)?;
        }
        Ok(out)
    }
}

/// The full construction for one presentation.
#[derive(Debug, Clone)]
pub struct Construction {
    pub presentation: Presentation,
    pub n: usize,
    pub quiver: Quiver,
    pub relations_t: Vec<PathPoly>,
    pub relations_yprime: Vec<PathPoly>,
    pub sigma: Vec<String>,
    pub algebra: PathAlgebra,
    pub model: MatrixModel,
}

impl Construction {
    /// Arrow index of `e_m`.
    pub fn e_arrow(&self, m: usize) -> usize {
        m - 1
    }

    /// Arrow index of `a_{m,i}` for generator `i` (1-based).
    pub fn a_arrow(&self, m: usize, i: usize) -> usize {
        let a = self.presentation.num_generators();
        (self.n - 1) + (m - 1) * a + (i - 1)
    }

    /// The pure `e`-path from `s` to `t` (empty when `s == t`).
    pub fn e_path(&self, s: usize, t: usize) -> QPath {
        assert!(s <= t);
        QPath {
            start: s,
            arrows: (s..t).map(|m| self.e_arrow(m)).collect(),
        }
    }

    /// Degree bound sufficient for every verification product: twice the
    /// largest path degree in the model.
    pub fn default_degree_bound(&self) -> usize {
        2 * (self.n - 1)
    }

    /// Completes the presentation's rewriting system at the given bound.
    pub fn rewrite_system(
        &self,
        degree_bound: usize,
        rule_budget: usize,
    ) -> Result<RewriteSystem, RewriteError> {
        complete_truncated(&self.presentation, degree_bound, rule_budget)
    }

    /// Named relations, `t` family first.
    pub fn named_relations(&self) -> Vec<(String, PathPoly)> {
        let a = self.presentation.num_generators();
        let mut out = Vec::new();
        for (k, t) in self.relations_t.iter().enumerate() {
            let m = 2 + k / a;
            let i = 1 + k % a;
            out.push((format!("t{}_{}", m, i), t.clone()));
        }
        for (j, y) in self.relations_yprime.iter().enumerate() {
            out.push((format!("y'{}", j + 1), y.clone()));
        }
        out
    }
}

/// Builds the quiver, the relation families, the finite-dimensional
/// algebra and the matrix model for a presentation.
pub fn build_construction(p: &Presentation) -> Result<Construction, LocalizeError> {
    let n = construction_size(p);
    let a = p.num_generators();
    let field = p.field;

    let mut arrows = Vec::new();
    for m in 1..n {
        arrows.push(Arrow {
            name: format!("e{}", m),
            tail: m,
            head: m + 1,
        });
    }
    for m in 1..n {
        for i in 1..=a {
            arrows.push(Arrow {
                name: format!("a{}_{}", m, i),
                tail: m,
                head: m + 1,
            });
        }
    }
    let quiver = Quiver::new(n, arrows)?;

    let e_arrow = |m: usize| m - 1;
    let a_arrow = |m: usize, i: usize| (n - 1) + (m - 1) * a + (i - 1);
    let e_tail = |s: usize, t: usize| -> Vec<usize> { (s..t).map(e_arrow).collect() };

    // t_{m,i} = a_{1,i} e_{2,n} - e_{1,m} a_{m,i} e_{m+1,n} for 1 < m < n
    let mut relations_t = Vec::new();
    for m in 2..n {
        for i in 1..=a {
            let mut first = vec![a_arrow(1, i)];
            first.extend(e_tail(2, n));
            let mut second = e_tail(1, m);
            second.push(a_arrow(m, i));
            second.extend(e_tail(m + 1, n));
            let t = PathPoly::path(field, QPath { start: 1, arrows: first }).sub(&PathPoly::path(
                field,
                QPath {
                    start: 1,
                    arrows: second,
                },
            ));
            relations_t.push(t);
        }
    }

    // y'_j: each word of length u becomes a_{1,i_1}..a_{u,i_u} e_{u+1,n}
    let mut relations_yprime = Vec::new();
    for rel in &p.relations {
        let mut y = PathPoly::zero(field);
        for (w, c) in rel.terms() {
            let u = w.len();
            assert!(u <= n - 1, "relation word longer than n-1");
            let mut path = Vec::new();
            for (pos, &gen) in w.0.iter().enumerate() {
                path.push(a_arrow(pos + 1, gen + 1));
            }
            path.extend(e_tail(u + 1, n));
            y.add_term(c, &QPath { start: 1, arrows: path });
        }
        relations_yprime.push(y);
    }

    let mut all = relations_t.clone();
    all.extend(relations_yprime.iter().cloned());
    let algebra = quotient_algebra(&quiver, &all, field)?;

    let mut arrow_values = vec![NcPoly::one(field); n - 1];
    for _m in 1..n {
        for i in 1..=a {
            arrow_values.push(NcPoly::gen(field, i - 1));
        }
    }
    let model = MatrixModel::new(quiver.clone(), field, arrow_values);

    Ok(Construction {
        presentation: p.clone(),
        n,
        quiver,
        relations_t,
        relations_yprime,
        sigma: (1..n).map(|m| format!("e{}", m)).collect(),
        algebra,
        model,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;
    use crate::freealg::parse_presentation;

    fn build(text: &str) -> Construction {
        build_construction(&parse_presentation(text, Field::Q).unwrap()).unwrap()
    }

    #[test]
    fn x2_yx_construction_shape() {
        let c = build("k<x,y | x*x, y*x>");
        assert_eq!(c.n, 3);
        assert_eq!(c.quiver.arrows.len(), 6);
        assert_eq!(c.relations_t.len(), 2);
        assert_eq!(c.relations_yprime.len(), 2);
        // y' for x*x is a1_1 * a2_1 (the trailing e-path is empty)
        let y1 = &c.relations_yprime[0];
        let terms: Vec<_> = y1.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0.format(&c.quiver), "a1_1*a2_1");
        assert_eq!(c.algebra.total_dim(), 14);
    }

    #[test]
    fn free_algebra_construction() {
        let c = build("k<x,y,z | >");
        assert_eq!(c.n, 2);
        assert_eq!(c.quiver.arrows.len(), 4); // a + 1
        assert!(c.relations_t.is_empty());
        assert!(c.relations_yprime.is_empty());
        assert_eq!(c.sigma, vec!["e1"]);
    }

    #[test]
    fn weyl_constant_term_becomes_pure_e_path() {
        let c = build("k<x,y | x*y - y*x - 1>");
        assert_eq!(c.n, 3);
        assert_eq!(c.relations_t.len(), 2);
        assert_eq!(c.relations_yprime.len(), 1);
        let y = &c.relations_yprime[0];
        // three terms, one of which is the pure e-path e1*e2
        let mut formats: Vec<String> =
            y.terms().map(|(p, _)| p.format(&c.quiver)).collect();
        formats.sort();
        assert!(formats.contains(&"e1*e2".to_string()));
        assert_eq!(formats.len(), 3);
    }

    #[test]
    fn relation_families_live_from_1_to_n() {
        let c = build("k<x,y | x*y*x>");
        assert_eq!(c.n, 4);
        assert_eq!(c.relations_t.len(), 2 * 2); // (n-2) * a
        for r in c.relations_t.iter().chain(&c.relations_yprime) {
            let ty = r.homogeneous_type(&c.quiver, 0).unwrap().unwrap();
            assert_eq!(ty, (1, 4));
        }
    }

    #[test]
    fn phi_kills_relations_in_the_model() {
        let c = build("k<x,y | x*x, y*x>");
        let rs = c.rewrite_system(c.default_degree_bound(), 10_000).unwrap();
        for (name, r) in c.named_relations() {
            let img = c.model.phi_path_poly(&r, &rs).unwrap();
            assert!(img.is_zero(), "relation {name} should map to zero");
        }
        // t-relations cancel before any rewriting
        for t in &c.relations_t {
            assert!(c.model.raw_entry_value(t).is_zero());
        }
        // y' images reduce to zero but are nonzero raw
        for y in &c.relations_yprime {
            assert!(!c.model.raw_entry_value(y).is_zero());
        }
    }

    #[test]
    fn phi_is_multiplicative_on_basis_pairs() {
        let c = build("k<x | x*x>");
        let rs = c.rewrite_system(c.default_degree_bound(), 10_000).unwrap();
        let alg = &c.algebra;
        let mut basis = Vec::new();
        for (v, w) in alg.pair_keys().collect::<Vec<_>>() {
            for i in 0..alg.pair_dim(v, w) {
                basis.push(alg.basis_elem(v, w, i));
            }
        }
        assert_eq!(basis.len(), 9);
        for x in &basis {
            for y in &basis {
                let xy = alg.mul(x, y);
                let lhs = c.model.phi_elem(alg, &xy, &rs).unwrap();
                let rhs = c
                    .model
                    .phi_elem(alg, x, &rs)
                    .unwrap()
                    .mul(&c.model.phi_elem(alg, y, &rs).unwrap(), &rs)
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // phi(f_v) is the diagonal idempotent
        let f2 = c.model.phi_elem(alg, &alg.idempotent(2), &rs).unwrap();
        assert_eq!(f2.entry(2, 2), &NcPoly::one(Field::Q));
    }

    #[test]
    fn phi_of_the_full_e_path_is_the_corner_unit() {
        let c = build("k<x,y | x*x, y*x>");
        let rs = c.rewrite_system(4, 10_000).unwrap();
        let p = c.e_path(1, 3);
        let img = c.model.phi_path(&p, &rs).unwrap();
        assert_eq!(img.entry(1, 3), &NcPoly::one(Field::Q));
        for v in 1..=3 {
            for w in 1..=3 {
                if (v, w) != (1, 3) {
                    assert!(img.entry(v, w).is_zero());
                }
            }
        }
    }

    #[test]
    fn smatrix_degree_guard() {
        let c = build("k<x | x*x*x>"); // n = 4, bound 6
        let rs = c.rewrite_system(2, 10_000).unwrap_err();
        // bound below the relation degree is rejected outright
        assert!(matches!(rs, RewriteError::DegreeOutOfRange { .. }));

        let rs = c.rewrite_system(3, 10_000).unwrap();
        let x = NcPoly::gen(Field::Q, 0);
        let m = c.model.unit(1, 1, x.mul(&x));
        // squaring a degree-2 corner entry would reach degree 4 > 3
        let err = m.mul(&m, &rs).unwrap_err();
        assert!(matches!(err, LocalizeError::DegreeOutOfRange { .. }));
    }

    #[test]
    fn scalar_matrix_algebra() {
        let c = build("k<x | >");
        let rs = c.rewrite_system(2, 100).unwrap();
        let e = c.model.unit(1, 2, NcPoly::one(Field::Q));
        let inv = c.model.unit(2, 1, NcPoly::one(Field::Q));
        let prod = e.mul(&inv, &rs).unwrap();
        assert_eq!(prod.entry(1, 1), &NcPoly::one(Field::Q));
        assert!(prod.entry(2, 2).is_zero());
        let back = inv.mul(&e, &rs).unwrap();
        assert_eq!(back.entry(2, 2), &NcPoly::one(Field::Q));
        let two = prod.add(&prod);
        assert_eq!(
            two.entry(1, 1).coeff(&crate::freealg::Word::one()),
            Scalar::from_i64(Field::Q, 2)
        );
    }
}
