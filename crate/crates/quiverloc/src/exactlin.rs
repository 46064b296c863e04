//! Exact dense linear algebra over the rationals and prime fields.
//!
//! Every quotient, rank and homology dimension in this crate reduces to
//! Gaussian elimination over an exact field, so this module is small and
//! uncompromising: big-integer rationals or residues mod a prime, never
//! floating point. All values are immutable after construction and all
//! operations are pure functions.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("entries come from different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("maps do not compose to zero, not a complex")]
    NotAComplex,
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
}

/// The coefficient field: `Q` or `F_p` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinAlgError> {
        if p < 2 || p > (1 << 31) || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(Field::Fp(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F_{}", p),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `Q` (reduced big rational, positive denominator) or of
/// `F_p` (residue in `[0, p)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { r: 0, p },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { r: 1, p },
        }
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from(BigInt::from(v))),
            Field::Fp(p) => {
                let m = (v as i128).rem_euclid(p as i128) as u64;
                Scalar::Fp { r: m, p }
            }
        }
    }

    /// Builds `num/den` in the given field. `den` must be nonzero, and
    /// invertible mod `p` in the `F_p` case.
    pub fn from_ratio(field: Field, num: &BigInt, den: &BigInt) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        match field {
            Field::Q => Scalar::Q(BigRational::new(num.clone(), den.clone())),
            Field::Fp(p) => {
                let pn = BigInt::from(p);
                let n = ((num % &pn) + &pn) % &pn;
                let d = ((den % &pn) + &pn) % &pn;
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                let num = Scalar::Fp { r: n, p };
                let den = Scalar::Fp { r: d, p };
                num.mul(&den.inv())
            }
        }
    }

    /// Parses `"num"` or `"num/den"` into the given field.
    pub fn parse(field: Field, text: &str) -> Result<Scalar, LinAlgError> {
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let bad = || LinAlgError::ShapeError(format!("bad scalar `{text}`"));
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::from_ratio(field, &num, &den))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { r, .. } => *r == 1,
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "field mismatch in scalar arithmetic"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { r: a, p }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                r: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { r: a, p }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                r: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { r, p } => Scalar::Fp {
                r: if *r == 0 { 0 } else { p - r },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { r, p } => {
                // extended Euclid on (r, p)
                let (mut t, mut new_t) = (0i128, 1i128);
                let (mut rr, mut new_r) = (*p as i128, *r as i128);
                while new_r != 0 {
                    let q = rr / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (rr, new_r) = (new_r, rr - q * new_r);
                }
                debug_assert_eq!(rr, 1, "modulus not prime");
                Scalar::Fp {
                    r: t.rem_euclid(*p as i128) as u64,
                    p: *p,
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{}", q),
            Scalar::Fp { r, .. } => write!(f, "{}", r),
        }
    }
}

/// A dense row-major matrix over one field. Rows or columns may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from rows, checking that every entry lies in the
    /// same field and that the rows have equal length.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Mat, LinAlgError> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for row in &rows {
            if row.len() != ncols {
                return Err(LinAlgError::ShapeError(format!(
                    "ragged rows: {} vs {}",
                    row.len(),
                    ncols
                )));
            }
            for e in row {
                if e.field() != field {
                    return Err(LinAlgError::FieldMismatch);
                }
            }
        }
        Ok(Mat {
            rows: rows.len(),
            cols: ncols,
            field,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Mat {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)).collect())
            .collect();
        Mat::from_rows(field, data).expect("uniform i64 rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinAlgError::ShapeError(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Column-stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::ShapeError("hstack row mismatch".into()));
        }
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: length mismatch");
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&v[c]));
            }
        }
        out
    }

    /// Reduced row echelon form. Returns (rref matrix, pivot columns).
    /// Pivoting takes the first row with a nonzero entry in the current
    /// column; over `Q` the rationals stay reduced after every operation.
    fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let pr = match pivot_row {
                Some(pr) => pr,
                None => continue,
            };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.at(row, c).clone();
                    let v = m.at(pr, c).clone();
                    m.set(row, c, v);
                    m.set(pr, c, tmp);
                }
            }
            let inv = m.at(row, col).inv();
            for c in col..m.cols {
                let v = m.at(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c).sub(&factor.mul(m.at(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Exact rank, equal to both the row and the column rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `ker(self)` as column vectors of length `cols`.
    /// The basis has exactly `cols - rank` linearly independent members.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![Scalar::zero(self.field); self.cols];
            vec[free] = Scalar::one(self.field);
            for (i, &p) in pivots.iter().enumerate() {
                vec[p] = r.at(i, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution `x` of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows, "solve: rhs length");
        let mut aug = Mat::zero(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(self.field); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.at(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Dimension of the homology `ker(d_out) / im(d_in)` at the middle term of
/// a two-step complex `.. -> X -> Y -> Z -> ..` with `d_in: X -> Y` and
/// `d_out: Y -> Z`, both given as matrices acting on column vectors.
pub fn homology_dim(d_in: &Mat, d_out: &Mat) -> Result<usize, LinAlgError> {
    if d_in.field() != d_out.field() {
        return Err(LinAlgError::FieldMismatch);
    }
    if d_in.rows() != d_out.cols() {
        return Err(LinAlgError::ShapeError(format!(
            "middle term mismatch: d_in lands in dim {}, d_out starts at dim {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinAlgError::NotAComplex);
    }
    let kernel = d_out.cols() - d_out.rank();
    Ok(kernel - d_in.rank())
}

/// `space_dim - rank(spanning vectors)`: the dimension of the quotient of a
/// `space_dim`-dimensional space by the span of the given vectors.
pub fn quotient_dim(
    field: Field,
    space_dim: usize,
    spanning: &[Vec<Scalar>],
) -> Result<usize, LinAlgError> {
    for v in spanning {
        if v.len() != space_dim {
            return Err(LinAlgError::ShapeError(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                space_dim
            )));
        }
    }
    let m = Mat::from_rows(field, spanning.to_vec())?;
    Ok(space_dim - m.rank())
}

/// An echelonized subspace with canonical reduction.
///
/// The pivot of every stored row is its *last* nonzero coordinate,
/// normalized to 1 and eliminated from all other rows. With coordinates
/// listed in ascending term order this makes `reduce` a Groebner-style
/// normal form: residues are supported on the non-pivot (earliest)
/// coordinates.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots, in ascending order. Unit vectors at
    /// these coordinates represent a basis of the quotient by the subspace.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn last_nonzero(v: &[Scalar]) -> Option<usize> {
        (0..v.len()).rev().find(|&i| !v[i].is_zero())
    }

    /// Canonical residue of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "reduce: ambient mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..self.ambient {
                if row[c].is_zero() {
                    continue;
                }
                v[c] = v[c].sub(&factor.mul(&row[c]));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|e| e.is_zero())
    }

    /// Inserts `v`, returning `true` if the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(&v);
        let p = match Self::last_nonzero(&v) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[p].inv();
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = e.mul(&inv);
            }
        }
        // eliminate the new pivot from the existing rows
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for c in 0..self.ambient {
                if v[c].is_zero() {
                    continue;
                }
                row[c] = row[c].sub(&factor.mul(&v[c]));
            }
        }
        let idx = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(idx, p);
        self.rows.insert(idx, v);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(Field::Q, v)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Mat::identity(Field::Q, 2).rank(), 2);
        assert_eq!(Mat::zero(Field::Q, 3, 4).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // [[1,2],[2,4]] row-reduces to a single nonzero row
        let m = Mat::from_i64_rows(Field::Q, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_zero_and_line() {
        assert!(Mat::identity(Field::Q, 2).kernel_basis().is_empty());
        assert_eq!(Mat::zero(Field::Q, 2, 3).kernel_basis().len(), 3);

        let m = Mat::from_i64_rows(Field::Q, &[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0], k[0][1].neg());
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn homology_examples() {
        // zero maps on k^3: homology is the whole middle term
        let z = Mat::zero(Field::Q, 3, 3);
        assert_eq!(homology_dim(&z, &z).unwrap(), 3);

        // identity in, zero out: exact at the middle
        let d_in = Mat::identity(Field::Q, 3);
        let d_out = Mat::zero(Field::Q, 3, 3);
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);

        // k -> k^2 -> k with im = ker
        let d_in = Mat::from_i64_rows(Field::Q, &[vec![1], vec![0]]);
        let d_out = Mat::from_i64_rows(Field::Q, &[vec![0, 1]]);
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);
    }

    #[test]
    fn homology_rejects_non_complex() {
        let id = Mat::identity(Field::Q, 2);
        assert_eq!(homology_dim(&id, &id), Err(LinAlgError::NotAComplex));
    }

    #[test]
    fn homology_rejects_shape_mismatch() {
        let a = Mat::zero(Field::Q, 2, 2);
        let b = Mat::zero(Field::Q, 2, 3);
        assert!(matches!(
            homology_dim(&a, &b),
            Err(LinAlgError::ShapeError(_))
        ));
    }

    #[test]
    fn quotient_dims() {
        assert_eq!(quotient_dim(Field::Q, 4, &[]).unwrap(), 4);
        // rank-2 spanning set inside dimension 4
        let span = vec![
            vec![q(1), q(0), q(1), q(0)],
            vec![q(0), q(1), q(0), q(0)],
            vec![q(1), q(1), q(1), q(0)],
        ];
        assert_eq!(quotient_dim(Field::Q, 4, &span).unwrap(), 2);
        // full-rank set
        let full = vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        assert_eq!(quotient_dim(Field::Q, 3, &full).unwrap(), 0);
    }

    #[test]
    fn quotient_rejects_bad_lengths() {
        let span = vec![vec![q(1), q(0)]];
        assert!(matches!(
            quotient_dim(Field::Q, 3, &span),
            Err(LinAlgError::ShapeError(_))
        ));
    }

    #[test]
    fn from_rows_rejects_mixed_fields() {
        let rows = vec![vec![q(1), Scalar::from_i64(Field::Fp(5), 1)]];
        assert_eq!(
            Mat::from_rows(Field::Q, rows),
            Err(LinAlgError::FieldMismatch)
        );
    }

    #[test]
    fn fp_arithmetic_inverse() {
        let f = Field::prime(101).unwrap();
        for v in 1..20i64 {
            let s = Scalar::from_i64(f, v);
            assert!(s.mul(&s.inv()).is_one());
        }
        assert!(Field::prime(100).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn subspace_reduce_and_complement() {
        let mut s = Subspace::new(Field::Q, 3);
        assert!(s.insert(vec![q(1), q(1), q(1)]));
        assert!(s.insert(vec![q(0), q(1), q(2)]));
        assert!(!s.insert(vec![q(1), q(2), q(3)]));
        assert_eq!(s.rank(), 2);
        // residues live on the complement coordinates
        let r = s.reduce(&[q(5), q(7), q(11)]);
        for &p in s.pivots() {
            assert!(r[p].is_zero());
        }
        assert_eq!(s.complement().len(), 1);
    }

    fn rand_mat(field: Field, seed: u64, n: usize) -> Mat {
        // tiny deterministic LCG, enough for rank symmetry checks
        let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(17);
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        Mat::from_i64_rows(field, &rows)
    }

    #[test]
    fn rank_equals_transpose_rank() {
        for seed in 0..12u64 {
            for field in [Field::Q, Field::Fp(101)] {
                let m = rand_mat(field, seed, 6);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn rank_plus_kernel_is_cols() {
        for seed in 0..12u64 {
            let m = rand_mat(Field::Q, seed, 6);
            let k = m.kernel_basis();
            assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                assert!(m.apply(v).iter().all(|e| e.is_zero()));
            }
        }
    }

    #[test]
    fn homology_is_bounded_by_the_middle_term() {
        // build complexes by feeding part of a kernel back in as d_in
        for seed in 0..10u64 {
            let d_out = rand_mat(Field::Q, seed, 6);
            let kernel = d_out.kernel_basis();
            let take = (seed as usize) % (kernel.len() + 1);
            let mut d_in = Mat::zero(Field::Q, 6, take);
            for (j, v) in kernel.iter().take(take).enumerate() {
                for (i, e) in v.iter().enumerate() {
                    d_in.set(i, j, e.clone());
                }
            }
            let h = homology_dim(&d_in, &d_out).unwrap();
            assert!(h <= 6);
            assert_eq!(h, kernel.len() - d_in.rank());
        }
    }

    #[test]
    fn rational_denominators_stay_positive() {
        use num::Signed;
        let m = Mat::from_i64_rows(Field::Q, &[vec![2, 3, 5], vec![7, -11, 13], vec![1, 0, -2]]);
        let (r, _) = m.rref();
        for i in 0..r.rows() {
            for j in 0..r.cols() {
                if let Scalar::Q(q) = r.at(i, j) {
                    assert!(q.denom().is_positive());
                }
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_i64_rows(Field::Q, &[vec![1, 2], vec![3, 4]]);
        let x = m.solve(&[q(5), q(11)]).unwrap();
        assert_eq!(m.apply(&x), vec![q(5), q(11)]);

        let sing = Mat::from_i64_rows(Field::Q, &[vec![1, 1], vec![1, 1]]);
        assert!(sing.solve(&[q(0), q(1)]).is_none());
    }
}
