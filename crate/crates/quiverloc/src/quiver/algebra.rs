//! Path algebras of quivers with relations.

use super::{enumerate_paths, PathPoly, QPath, Quiver, QuiverError};
use crate::exactlin::{Field, Scalar, Subspace};
use std::collections::{BTreeMap, HashMap};

/// Per-pair data: all paths `v -> w` in deglex order, the echelonized
/// relation span, and the residue basis (the deglex-earliest paths outside
/// the leading span).
#[derive(Debug, Clone)]
struct PairData {
    paths: Vec<QPath>,
    index_of: HashMap<QPath, usize>,
    relation_span: Subspace,
    basis_cols: Vec<usize>,
}

impl PairData {
    fn dim(&self) -> usize {
        self.basis_cols.len()
    }
}

/// The path algebra of an acyclic quiver with homogeneous relations,
/// presented by per-pair residue bases and multiplication tables.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    pub quiver: Quiver,
    pub field: Field,
    pub relations: Vec<PathPoly>,
    pairs: BTreeMap<(usize, usize), PairData>,
    // tables[(v, w, u)][i][j] = coordinates of basis_i(v,w) * basis_j(w,u) in the (v,u) basis
    tables: HashMap<(usize, usize, usize), Vec<Vec<Vec<Scalar>>>>,
    total_dim: usize,
}

/// An element of the path algebra in the per-pair residue bases.
/// Components absent from the map are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElem {
    pub field: Field,
    pub comps: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl AlgElem {
    pub fn zero(field: Field) -> AlgElem {
        AlgElem {
            field,
            comps: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps
            .values()
            .all(|v| v.iter().all(|c| c.is_zero()))
    }

    fn add_into(&mut self, key: (usize, usize), coords: Vec<Scalar>) {
        match self.comps.get_mut(&key) {
            Some(existing) => {
                for (e, c) in existing.iter_mut().zip(coords) {
                    *e = e.add(&c);
                }
            }
            None => {
                self.comps.insert(key, coords);
            }
        }
    }

    fn prune(mut self) -> AlgElem {
        self.comps.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        self
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_into(*k, v.clone());
        }
        out.prune()
    }

    pub fn scale(&self, c: &Scalar) -> AlgElem {
        let mut out = AlgElem::zero(self.field);
        for (k, v) in &self.comps {
            out.comps
                .insert(*k, v.iter().map(|x| x.mul(c)).collect());
        }
        out.prune()
    }
}

/// Builds the quotient of the path algebra of `q` by the ideal generated
/// by the given tail/head-homogeneous relations. The quiver must be
/// acyclic so that the result is finite dimensional.
pub fn quotient_algebra(
    q: &Quiver,
    relations: &[PathPoly],
    field: Field,
) -> Result<PathAlgebra, QuiverError> {
    if !q.is_acyclic() {
        return Err(QuiverError::NotAcyclic);
    }
    let mut rel_types = Vec::new();
    for (i, r) in relations.iter().enumerate() {
        if r.field() != field {
            return Err(QuiverError::FieldMismatch);
        }
        match r.homogeneous_type(q, i)? {
            Some(t) => rel_types.push((t, r.clone())),
            None => continue, // zero relation contributes nothing
        }
        r.terms()
            .map(|(p, _)| p.validate(q))
            .collect::<Result<Vec<_>, _>>()?;
    }

    let n = q.vertex_count;
    let mut pairs = BTreeMap::new();
    for v in 1..=n {
        for w in 1..=n {
            let paths = enumerate_paths(q, v, w, None)?;
            if paths.is_empty() {
                continue;
            }
            let index_of: HashMap<QPath, usize> = paths
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, p)| (p, i))
                .collect();
            let mut relation_span = Subspace::new(field, paths.len());
            // R[v,w] = span of { p * r * s : p: v -> tail(r), s: head(r) -> w }
            for ((tr, hr), r) in &rel_types {
                let lefts = enumerate_paths(q, v, *tr, None)?;
                let rights = enumerate_paths(q, *hr, w, None)?;
                for left in &lefts {
                    for right in &rights {
                        let mut vec = vec![Scalar::zero(field); paths.len()];
                        for (p, c) in r.terms() {
                            let full = left.concat(p).concat(right);
                            let idx = index_of[&full];
                            vec[idx] = vec[idx].add(c);
                        }
                        relation_span.insert(vec);
                    }
                }
            }
            let basis_cols = relation_span.complement();
            pairs.insert(
                (v, w),
                PairData {
                    paths,
                    index_of,
                    relation_span,
                    basis_cols,
                },
            );
        }
    }

    let total_dim = pairs.values().map(PairData::dim).sum();
    let mut alg = PathAlgebra {
        quiver: q.clone(),
        field,
        relations: relations.to_vec(),
        pairs,
        tables: HashMap::new(),
        total_dim,
    };
    alg.build_tables();
    Ok(alg)
}

impl PathAlgebra {
    fn build_tables(&mut self) {
        let keys: Vec<(usize, usize)> = self.pairs.keys().cloned().collect();
        let mut tables = HashMap::new();
        for &(v, w) in &keys {
            for &(w2, u) in &keys {
                if w2 != w {
                    continue;
                }
                let left = &self.pairs[&(v, w)];
                let right = &self.pairs[&(w, u)];
                if left.dim() == 0 || right.dim() == 0 {
                    continue;
                }
                let mut table = Vec::with_capacity(left.dim());
                for &ci in &left.basis_cols {
                    let pi = &left.paths[ci];
                    let mut row = Vec::with_capacity(right.dim());
                    for &cj in &right.basis_cols {
                        let pj = &right.paths[cj];
                        row.push(self.reduce_path(&pi.concat(pj)));
                    }
                    table.push(row);
                }
                tables.insert((v, w, u), table);
            }
        }
        self.tables = tables;
    }

    /// Residue coordinates of a single path in the `(tail, head)` basis.
    fn reduce_path(&self, p: &QPath) -> Vec<Scalar> {
        let key = (p.tail(), p.head(&self.quiver));
        let pair = &self.pairs[&key];
        let mut vec = vec![Scalar::zero(self.field); pair.paths.len()];
        vec[pair.index_of[p]] = Scalar::one(self.field);
        let red = pair.relation_span.reduce(&vec);
        pair.basis_cols.iter().map(|&c| red[c].clone()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn pair_dim(&self, v: usize, w: usize) -> usize {
        self.pairs.get(&(v, w)).map(PairData::dim).unwrap_or(0)
    }

    /// The residue paths forming the basis of `(v, w)`.
    pub fn pair_basis(&self, v: usize, w: usize) -> Vec<QPath> {
        match self.pairs.get(&(v, w)) {
            Some(pair) => pair
                .basis_cols
                .iter()
                .map(|&c| pair.paths[c].clone())
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn pair_keys(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.keys().cloned()
    }

    /// The residue of an arbitrary path combination.
    pub fn from_path_poly(&self, p: &PathPoly) -> Result<AlgElem, QuiverError> {
        if p.field() != self.field {
            return Err(QuiverError::FieldMismatch);
        }
        let mut out = AlgElem::zero(self.field);
        for (path, c) in p.terms() {
            path.validate(&self.quiver)?;
            let coords = self.reduce_path(path);
            let scaled: Vec<Scalar> = coords.iter().map(|x| x.mul(c)).collect();
            out.add_into((path.tail(), path.head(&self.quiver)), scaled);
        }
        Ok(out.prune())
    }

    pub fn idempotent(&self, v: usize) -> AlgElem {
        self.from_path_poly(&PathPoly::path(self.field, QPath::lazy(v)))
            .expect("idempotent")
    }

    pub fn one(&self) -> AlgElem {
        let mut out = AlgElem::zero(self.field);
        for v in 1..=self.quiver.vertex_count {
            out = out.add(&self.idempotent(v));
        }
        out
    }

    pub fn basis_elem(&self, v: usize, w: usize, i: usize) -> AlgElem {
        let dim = self.pair_dim(v, w);
        assert!(i < dim, "basis index out of range");
        let mut coords = vec![Scalar::zero(self.field); dim];
        coords[i] = Scalar::one(self.field);
        let mut out = AlgElem::zero(self.field);
        out.comps.insert((v, w), coords);
        out
    }

    /// Bilinear table-lookup product.
    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero(self.field);
        for ((v, w), xc) in &x.comps {
            for ((w2, u), yc) in &y.comps {
                if w != w2 {
                    continue;
                }
                let table = match self.tables.get(&(*v, *w, *u)) {
                    Some(t) => t,
                    None => continue,
                };
                let out_dim = self.pair_dim(*v, *u);
                let mut acc = vec![Scalar::zero(self.field); out_dim];
                for (i, xi) in xc.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in yc.iter().enumerate() {
                        if yj.is_zero() {
                            continue;
                        }
                        let coeff = xi.mul(yj);
                        for (k, t) in table[i][j].iter().enumerate() {
                            if !t.is_zero() {
                                acc[k] = acc[k].add(&coeff.mul(t));
                            }
                        }
                    }
                }
                out.add_into((*v, *u), acc);
            }
        }
        out.prune()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::quotient_dim;
    use crate::quiver::Arrow;

    fn layered(n: usize, a: usize) -> Quiver {
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
        Quiver::new(n, arrows).unwrap()
    }

    fn path(q: &Quiver, names: &[&str]) -> QPath {
        let arrows = names
            .iter()
            .map(|n| q.arrow_index(n).unwrap())
            .collect::<Vec<_>>();
        QPath::from_arrows(q, arrows).unwrap()
    }

    #[test]
    fn free_two_vertex_dimension() {
        // no relations, one generator: dims 1 + 1 + 2
        let q = layered(2, 1);
        let alg = quotient_algebra(&q, &[], Field::Q).unwrap();
        assert_eq!(alg.total_dim(), 4);
        assert_eq!(alg.pair_dim(1, 2), 2);
    }

    #[test]
    fn relations_cut_the_top_pair() {
        // the n=3 layered quiver for one generator with relations
        // t = a1_1*e2 - e1*a2_1 and y' = a1_1*a2_1
        let q = layered(3, 1);
        let f = Field::Q;
        let t = PathPoly::path(f, path(&q, &["a1_1", "e2"]))
            .sub(&PathPoly::path(f, path(&q, &["e1", "a2_1"])));
        let yp = PathPoly::path(f, path(&q, &["a1_1", "a2_1"]));
        let alg = quotient_algebra(&q, &[t.clone(), yp.clone()], f).unwrap();

        assert_eq!(alg.pair_dim(1, 1), 1);
        assert_eq!(alg.pair_dim(2, 2), 1);
        assert_eq!(alg.pair_dim(3, 3), 1);
        assert_eq!(alg.pair_dim(1, 2), 2);
        assert_eq!(alg.pair_dim(2, 3), 2);
        assert_eq!(alg.pair_dim(1, 3), 2);
        assert_eq!(alg.total_dim(), 9);

        // independent oracle: 4 paths 1 -> 3, two independent relations
        let paths = enumerate_paths(&q, 1, 3, None).unwrap();
        assert_eq!(paths.len(), 4);
        let index_of = |p: &QPath| paths.iter().position(|x| x == p).unwrap();
        let mut vecs = Vec::new();
        for r in [&t, &yp] {
            let mut v = vec![Scalar::zero(f); 4];
            for (p, c) in r.terms() {
                v[index_of(p)] = c.clone();
            }
            vecs.push(v);
        }
        assert_eq!(quotient_dim(f, 4, &vecs).unwrap(), 2);
    }

    #[test]
    fn quotient_by_every_path_kills_the_pair() {
        let q = layered(2, 1);
        let f = Field::Q;
        let rels: Vec<PathPoly> = enumerate_paths(&q, 1, 2, None)
            .unwrap()
            .into_iter()
            .map(|p| PathPoly::path(f, p))
            .collect();
        let alg = quotient_algebra(&q, &rels, f).unwrap();
        assert_eq!(alg.pair_dim(1, 2), 0);
        assert_eq!(alg.total_dim(), 2);
    }

    #[test]
    fn rejects_cycles_and_inhomogeneous_relations() {
        let cyc = Quiver::new(
            2,
            vec![
                Arrow {
                    name: "a".into(),
                    tail: 1,
                    head: 2,
                },
                Arrow {
                    name: "b".into(),
                    tail: 2,
                    head: 1,
                },
            ],
        )
        .unwrap();
        assert_eq!(
            quotient_algebra(&cyc, &[], Field::Q).unwrap_err(),
            QuiverError::NotAcyclic
        );

        let q = layered(3, 1);
        let f = Field::Q;
        let bad = PathPoly::path(f, path(&q, &["e1"]))
            .add(&PathPoly::path(f, path(&q, &["e1", "e2"])));
        assert_eq!(
            quotient_algebra(&q, &[bad], f).unwrap_err(),
            QuiverError::RelationNotHomogeneous(0)
        );
    }

    #[test]
    fn idempotents_multiply_correctly() {
        let q = layered(3, 1);
        let alg = quotient_algebra(&q, &[], Field::Q).unwrap();
        let f1 = alg.idempotent(1);
        let f2 = alg.idempotent(2);
        assert_eq!(alg.mul(&f1, &f1), f1);
        assert!(alg.mul(&f1, &f2).is_zero());

        // e1 * e2 is the long path
        let e1 = alg
            .from_path_poly(&PathPoly::path(Field::Q, path(&q, &["e1"])))
            .unwrap();
        let e2 = alg
            .from_path_poly(&PathPoly::path(Field::Q, path(&q, &["e2"])))
            .unwrap();
        let e12 = alg
            .from_path_poly(&PathPoly::path(Field::Q, path(&q, &["e1", "e2"])))
            .unwrap();
        assert_eq!(alg.mul(&e1, &e2), e12);
    }

    #[test]
    fn idempotents_sum_to_one_and_tables_associate() {
        let q = layered(3, 2);
        let f = Field::Q;
        let t = PathPoly::path(f, path(&q, &["a1_1", "e2"]))
            .sub(&PathPoly::path(f, path(&q, &["e1", "a2_1"])));
        let alg = quotient_algebra(&q, &[t], f).unwrap();
        let one = alg.one();
        // 1 * b = b * 1 = b on every basis element, and products associate
        let mut basis = Vec::new();
        for (v, w) in alg.pair_keys().collect::<Vec<_>>() {
            for i in 0..alg.pair_dim(v, w) {
                basis.push(alg.basis_elem(v, w, i));
            }
        }
        assert_eq!(basis.len(), alg.total_dim());
        for x in &basis {
            assert_eq!(&alg.mul(&one, x), x);
            assert_eq!(&alg.mul(x, &one), x);
        }
        for x in basis.iter().take(8) {
            for y in basis.iter().take(8) {
                for z in basis.iter().take(8) {
                    let left = alg.mul(&alg.mul(x, y), z);
                    let right = alg.mul(x, &alg.mul(y, z));
                    assert_eq!(left, right);
                }
            }
        }
    }
}
