//! The verification suite for a construction: relation kill-checks, two-
//! sided invertibility of the `e`-arrows in the matrix model, the image
//! algebra dimension computed two independent ways, and the generation
//! check for the localized matrix ring.

use super::{Construction, LocalizeError, MatrixModel, SMatrix};
use crate::exactlin::Subspace;
use crate::freealg::{NcPoly, Word};
use crate::quiver::PathPoly;
use crate::rewrite::{Provenance, RewriteSystem, Verdict};
use std::collections::HashMap;

/// One relation image in the matrix model.
#[derive(Debug, Clone)]
pub struct RelationKillReport {
    pub name: String,
    /// The `(tail, head)` entry where the image is concentrated.
    pub entry: (usize, usize),
    /// The image before any rewriting.
    pub raw: NcPoly,
    pub verdict: Verdict,
}

/// Applies the model to every named relation and tests the image for zero.
pub fn relation_kill_checks(
    model: &MatrixModel,
    relations: &[(String, PathPoly)],
    rs: &RewriteSystem,
) -> Result<Vec<RelationKillReport>, LocalizeError> {
    let mut out = Vec::new();
    for (name, rel) in relations {
        let entry = rel
            .homogeneous_type(&model.quiver, 0)?
            .unwrap_or((1, model.n));
        let raw = model.raw_entry_value(rel);
        let verdict = rs.is_zero(&raw)?;
        out.push(RelationKillReport {
            name: name.clone(),
            entry,
            raw,
            verdict,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SigmaCheck {
    pub arrow: String,
    /// `phi(e) * inverse` equals the tail idempotent.
    pub left_ok: bool,
    /// `inverse * phi(e)` equals the head idempotent.
    pub right_ok: bool,
}

#[derive(Debug, Clone)]
pub struct SigmaInvertReport {
    pub checks: Vec<SigmaCheck>,
    /// Whether a chain of inverted arrows runs `1 -> n` and its reversed
    /// composite equals the unit at `(n, 1)`. `None` when the inverted set
    /// contains no such chain.
    pub composite_ok: Option<bool>,
}

impl SigmaInvertReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.left_ok && c.right_ok) && self.composite_ok != Some(false)
    }
}

/// For each inverted arrow exhibits the two-sided inverse entry in the
/// matrix model and multiplies both composites out.
pub fn sigma_invertibility_check(
    model: &MatrixModel,
    sigma: &[String],
    rs: &RewriteSystem,
) -> Result<SigmaInvertReport, LocalizeError> {
    let one = rs.normal_form(&NcPoly::one(model.field))?;
    let mut checks = Vec::new();
    for name in sigma {
        let ai = model.quiver.arrow_index(name)?;
        let arrow = &model.quiver.arrows[ai];
        let phi = model.unit(arrow.tail, arrow.head, model.arrow_value(ai).clone());
        let inv = model.unit(arrow.head, arrow.tail, NcPoly::one(model.field));
        let left = phi.mul(&inv, rs)?;
        let right = inv.mul(&phi, rs)?;
        let tail_idem = model.unit(arrow.tail, arrow.tail, one.clone());
        let head_idem = model.unit(arrow.head, arrow.head, one.clone());
        checks.push(SigmaCheck {
            arrow: name.clone(),
            left_ok: left == tail_idem,
            right_ok: right == head_idem,
        });
    }

    // follow inverted arrows from vertex 1; if they chain to vertex n the
    // reversed composite of inverses must be the unit at (n, 1)
    let composite_ok = {
        let mut at = 1;
        let mut chain = Vec::new();
        'walk: while at != model.n {
            for name in sigma {
                let ai = model.quiver.arrow_index(name)?;
                if model.quiver.arrows[ai].tail == at {
                    chain.push(ai);
                    at = model.quiver.arrows[ai].head;
                    continue 'walk;
                }
            }
            break;
        }
        if at == model.n {
            let mut prod = model.unit(model.n, model.n, NcPoly::one(model.field));
            for &ai in chain.iter().rev() {
                let a = &model.quiver.arrows[ai];
                let inv = model.unit(a.head, a.tail, NcPoly::one(model.field));
                prod = prod.mul(&inv, rs)?;
            }
            Some(prod == model.unit(model.n, 1, one.clone()))
        } else {
            None
        }
    };

    Ok(SigmaInvertReport {
        checks,
        composite_ok,
    })
}

/// The image algebra dimension, computed along two independent routes.
#[derive(Debug, Clone)]
pub struct ImageDims {
    /// `sum_{i=0}^{n-1} (n - i) * dim S_i` from the filtration.
    pub formula_dim: usize,
    /// Rank of the images of the algebra basis as vectors.
    pub rank_dim: usize,
    /// `(i, (n - i) * dim S_i)` per diagonal.
    pub per_diagonal: Vec<(usize, usize)>,
    /// Cumulative filtration dimensions `dim S_0 ..= dim S_{n-1}`.
    pub filtration: Vec<usize>,
    pub algebra_dim: usize,
    pub kernel_dim: usize,
    /// Basis residues whose image reduces to zero.
    pub vanishing_residues: usize,
    /// Whether those residues alone span the kernel.
    pub kernel_spanned_by_vanishing: bool,
    pub provenance: Provenance,
}

impl ImageDims {
    pub fn agree(&self) -> bool {
        self.formula_dim == self.rank_dim
    }
}

/// Computes `dim` of the image of `A` in `M_n(S)` by the triangular-slab
/// formula and, independently, as the rank of the set of images of the
/// algebra basis; reports kernel bookkeeping along the way.
pub fn image_algebra_dims(
    c: &Construction,
    rs: &RewriteSystem,
) -> Result<ImageDims, LocalizeError> {
    let n = c.n;
    let filt = rs.filtration_dims(n - 1)?;
    let per_diagonal: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, (n - i) * filt.dims[i]))
        .collect();
    let formula_dim = per_diagonal.iter().map(|&(_, d)| d).sum();

    // coordinates: (entry v, entry w, irreducible word)
    let words = rs.irreducible_words(n - 1)?;
    let word_index: HashMap<Word, usize> = words
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let coords = n * n * words.len();
    let mut span = Subspace::new(c.presentation.field, coords);
    let mut vanishing = 0usize;
    for (v, w) in c.algebra.pair_keys().collect::<Vec<_>>() {
        for path in c.algebra.pair_basis(v, w) {
            let img = c.model.phi_path(&path, rs)?;
            let poly = img.entry(v, w);
            if poly.is_zero() {
                vanishing += 1;
                continue;
            }
            let mut vec = vec![crate::exactlin::Scalar::zero(c.presentation.field); coords];
            for (word, coeff) in poly.terms() {
                let wi = word_index[word];
                vec[((v - 1) * n + (w - 1)) * words.len() + wi] = coeff.clone();
            }
            span.insert(vec);
        }
    }
    let rank_dim = span.rank();
    let algebra_dim = c.algebra.total_dim();
    let kernel_dim = algebra_dim - rank_dim;

    Ok(ImageDims {
        formula_dim,
        rank_dim,
        per_diagonal,
        filtration: filt.dims,
        algebra_dim,
        kernel_dim,
        vanishing_residues: vanishing,
        kernel_spanned_by_vanishing: vanishing == kernel_dim,
        provenance: filt.provenance,
    })
}

#[derive(Debug, Clone)]
pub struct GenerationReport {
    /// All `n^2` matrix units are products of the `phi(e_m)` and their
    /// inverses.
    pub matrix_units_ok: bool,
    /// `x_{m,i} = e_{1,m} a_{m,i} e_{m+1,n} e_{n,1}` evaluates to `x_i` at
    /// the corner for every `m`.
    pub copies_identified_ok: bool,
    /// Every defining relation of `S` evaluates to zero at the corner.
    pub corner_relations_ok: bool,
    /// The subring generated by the arrow images and the inverses spans
    /// the full degree-bounded slab at every entry.
    pub span_slabs_ok: bool,
    /// Achieved span dimension per entry `(v, w)`, flattened row-major.
    pub per_entry_span: Vec<usize>,
    pub slab_size: usize,
    pub provenance: Provenance,
}

impl GenerationReport {
    pub fn all_ok(&self) -> bool {
        self.matrix_units_ok
            && self.copies_identified_ok
            && self.corner_relations_ok
            && self.span_slabs_ok
    }
}

/// Builds every matrix unit from the inverted arrows, checks that all the
/// generator copies agree at the corner, evaluates the defining relations
/// there, and closes the generated subring to compare its span against the
/// full degree-bounded slab of `M_n(S)`.
pub fn generation_check(
    c: &Construction,
    rs: &RewriteSystem,
) -> Result<GenerationReport, LocalizeError> {
    let n = c.n;
    let a = c.presentation.num_generators();
    let model = &c.model;
    let field = c.presentation.field;
    let one_nf = rs.normal_form(&NcPoly::one(field))?;

    let phi_e = |m: usize| model.unit(m, m + 1, NcPoly::one(field));
    let inv_e = |m: usize| model.unit(m + 1, m, NcPoly::one(field));

    // (i) every matrix unit as an explicit product
    let unit_via_products = |s: usize, t: usize| -> Result<SMatrix, LocalizeError> {
        let mut prod = if s < n {
            phi_e(s).mul(&inv_e(s), rs)?
        } else {
            inv_e(n - 1).mul(&phi_e(n - 1), rs)?
        };
        if s < t {
            for m in s..t {
                prod = prod.mul(&phi_e(m), rs)?;
            }
        } else {
            for m in (t..s).rev() {
                prod = prod.mul(&inv_e(m), rs)?;
            }
        }
        Ok(prod)
    };
    let mut matrix_units_ok = true;
    for s in 1..=n {
        for t in 1..=n {
            let built = unit_via_products(s, t)?;
            if built != model.unit(s, t, one_nf.clone()) {
                matrix_units_ok = false;
            }
        }
    }

    // (ii) x_{m,i} at the corner, for every m
    let e_span = |s: usize, t: usize| -> Result<SMatrix, LocalizeError> {
        let mut prod = unit_via_products(s, s)?;
        for m in s..t {
            prod = prod.mul(&phi_e(m), rs)?;
        }
        Ok(prod)
    };
    let e_desc = |t: usize, s: usize| -> Result<SMatrix, LocalizeError> {
        let mut prod = unit_via_products(t, t)?;
        for m in (s..t).rev() {
            prod = prod.mul(&inv_e(m), rs)?;
        }
        Ok(prod)
    };
    let corner_x = |m: usize, i: usize| -> Result<SMatrix, LocalizeError> {
        let phi_a = model.unit(m, m + 1, NcPoly::gen(field, i - 1));
        let x = e_span(1, m)?
            .mul(&phi_a, rs)?
            .mul(&e_span(m + 1, n)?, rs)?
            .mul(&e_desc(n, 1)?, rs)?;
        Ok(x)
    };
    let mut copies_identified_ok = true;
    for i in 1..=a {
        let expected = model.unit(1, 1, rs.normal_form(&NcPoly::gen(field, i - 1))?);
        for m in 1..n {
            if corner_x(m, i)? != expected {
                copies_identified_ok = false;
            }
        }
    }

    // (iii) the defining relations vanish at the corner
    let mut corner_relations_ok = true;
    for rel in &c.presentation.relations {
        let mut acc = SMatrix::zero(n, field);
        for (w, coeff) in rel.terms() {
            let mut prod = unit_via_products(1, 1)?;
            for &g in &w.0 {
                prod = prod.mul(&corner_x(1, g + 1)?, rs)?;
            }
            acc = acc.add(&prod.scale(coeff));
        }
        let reduced = rs.normal_form(acc.entry(1, 1))?;
        if !reduced.is_zero() {
            corner_relations_ok = false;
        }
    }

    // (iv) span closure of the generated subring against the full slab
    let bound = rs.degree_bound();
    let words = rs.irreducible_words(bound)?;
    let word_index: HashMap<Word, usize> = words
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let coords = n * n * words.len();
    let vectorize = |m: &SMatrix| -> Vec<crate::exactlin::Scalar> {
        let mut vec = vec![crate::exactlin::Scalar::zero(field); coords];
        for v in 1..=n {
            for w in 1..=n {
                for (word, coeff) in m.entry(v, w).terms() {
                    vec[((v - 1) * n + (w - 1)) * words.len() + word_index[word]] = coeff.clone();
                }
            }
        }
        vec
    };
    let mut gens: Vec<SMatrix> = Vec::new();
    for m in 1..n {
        gens.push(phi_e(m).reduced(rs)?);
        gens.push(inv_e(m).reduced(rs)?);
        for i in 1..=a {
            gens.push(model.unit(m, m + 1, NcPoly::gen(field, i - 1)).reduced(rs)?);
        }
    }
    let mut span = Subspace::new(field, coords);
    let mut reps: Vec<SMatrix> = Vec::new();
    for g in &gens {
        if span.insert(vectorize(g)) {
            reps.push(g.clone());
        }
    }
    let mut frontier = reps.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for g in &gens {
                for prod in [b.mul(g, rs), g.mul(b, rs)] {
                    // products past the bound are skipped, not errors
                    let prod = match prod {
                        Ok(p) => p,
                        Err(LocalizeError::DegreeOutOfRange { .. }) => continue,
                        Err(e) => return Err(e),
                    };
                    if span.insert(vectorize(&prod)) {
                        next.push(prod);
                    }
                }
            }
        }
        reps.extend(next.iter().cloned());
        frontier = next;
    }
    let mut per_entry_span = Vec::with_capacity(n * n);
    let mut span_slabs_ok = true;
    for v in 1..=n {
        for w in 1..=n {
            let mut count = 0;
            for word in &words {
                let unit = model.unit(v, w, NcPoly::from_term(crate::exactlin::Scalar::one(field), word.clone()));
                if span.contains(&vectorize(&unit)) {
                    count += 1;
                }
            }
            if count != words.len() {
                span_slabs_ok = false;
            }
            per_entry_span.push(count);
        }
    }

    Ok(GenerationReport {
        matrix_units_ok,
        copies_identified_ok,
        corner_relations_ok,
        span_slabs_ok,
        per_entry_span,
        slab_size: words.len(),
        provenance: rs.provenance(),
    })
}
