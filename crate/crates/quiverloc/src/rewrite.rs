//! Truncated noncommutative Groebner rewriting.
//!
//! The word problem of a finitely presented algebra is unsolvable in
//! general, so normal forms here are computed against a rewriting system
//! completed only up to a degree bound `D`, and every verdict carries a
//! provenance flag. The flag is `Certified` exactly when completion
//! discovered a *finite complete* system within the bound: every overlap
//! ambiguity among the surviving rules was resolved to zero and none had to
//! be deferred past `D`. Under a certified system, `Zero`/`Nonzero` answers
//! for polynomials of degree at most `D` are exact; otherwise they are
//! heuristic.

use crate::exactlin::Field;
use crate::freealg::{NcPoly, Presentation, Word};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("degree {degree} exceeds the rewrite bound {bound}")]
    DegreeOutOfRange { degree: usize, bound: usize },
    #[error("rule budget of {budget} exhausted; partial system returned")]
    TruncationBudgetExceeded {
        budget: usize,
        partial: Box<RewriteSystem>,
    },
}

/// Certified/heuristic provenance carried by every rewrite-based verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Provenance {
    Certified,
    Heuristic,
}

/// Outcome of a zero test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Zero(Provenance),
    Nonzero(Provenance),
}

impl Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, Verdict::Zero(_))
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            Verdict::Zero(p) | Verdict::Nonzero(p) => *p,
        }
    }
}

/// One oriented rule `lhs -> rhs` with `rhs` strictly deglex-smaller than
/// the leading word `lhs`.
#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl Rule {
    fn poly(&self) -> NcPoly {
        NcPoly::from_term(crate::exactlin::Scalar::one(self.rhs.field()), self.lhs.clone())
            .sub(&self.rhs)
    }
}

/// An inter-reduced rewriting system truncated at `degree_bound`.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    field: Field,
    num_generators: usize,
    degree_bound: usize,
    rules: Vec<Rule>,
    certified: bool,
}

struct Completion {
    field: Field,
    degree_bound: usize,
    rule_budget: usize,
    // slots; killed rules become None but keep their index for overlap bookkeeping
    slots: Vec<Option<Rule>>,
    pending: Vec<NcPoly>,
    // (superposition degree, rule index, rule index, split position)
    overlaps: BTreeSet<(usize, usize, usize, usize)>,
    deferred: Vec<(usize, usize)>,
    added_total: usize,
}

impl Completion {
    fn reduce(&self, p: &NcPoly) -> NcPoly {
        reduce_by(p, self.slots.iter().filter_map(|r| r.as_ref()))
    }

    /// Queues all proper overlaps between rules `i` and `j` (in that order:
    /// a suffix of `lhs_i` equals a prefix of `lhs_j`).
    fn queue_overlaps(&mut self, i: usize, j: usize) {
        let (u, v) = match (&self.slots[i], &self.slots[j]) {
            (Some(a), Some(b)) => (a.lhs.clone(), b.lhs.clone()),
            _ => return,
        };
        let max_o = u.len().min(v.len()).saturating_sub(1);
        for o in 1..=max_o {
            if u.0[u.len() - o..] == v.0[..o] {
                let deg = u.len() + v.len() - o;
                if deg <= self.degree_bound {
                    self.overlaps.insert((deg, i, j, o));
                } else {
                    self.deferred.push((i, j));
                }
            }
        }
    }

    fn insert_poly(&mut self, p: NcPoly) -> Result<(), usize> {
        let h = self.reduce(&p);
        if h.is_zero() {
            return Ok(());
        }
        let (lw, lc) = {
            let (w, c) = h.leading().expect("nonzero");
            (w.clone(), c.clone())
        };
        let rhs = NcPoly::from_term(lc.clone(), lw.clone())
            .sub(&h)
            .scale(&lc.inv());
        self.added_total += 1;
        if self.added_total > self.rule_budget {
            return Err(self.rule_budget);
        }
        // retire rules whose leading word contains the new one; their full
        // polynomials go back to the queue
        let mut requeue = Vec::new();
        for slot in self.slots.iter_mut() {
            if let Some(rule) = slot {
                if rule.lhs.find_subword(&lw).is_some() {
                    requeue.push(rule.poly());
                    *slot = None;
                }
            }
        }
        self.pending.extend(requeue);
        let idx = self.slots.len();
        self.slots.push(Some(Rule {
            lhs: lw,
            rhs,
        }));
        // keep right-hand sides fully reduced
        let alive: Vec<usize> = self
            .slots
            .iter()
            .enumerate()
            .filter_map(|(k, r)| r.as_ref().map(|_| k))
            .collect();
        for k in alive.iter().copied() {
            let rhs = self.slots[k].as_ref().unwrap().rhs.clone();
            let reduced = self.reduce(&rhs);
            if reduced != rhs {
                self.slots[k].as_mut().unwrap().rhs = reduced;
            }
        }
        for k in alive {
            self.queue_overlaps(idx, k);
            self.queue_overlaps(k, idx);
        }
        self.queue_overlaps(idx, idx);
        Ok(())
    }

    fn finish(self, certified: bool) -> RewriteSystem {
        let mut rules: Vec<Rule> = self.slots.into_iter().flatten().collect();
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        RewriteSystem {
            field: self.field,
            num_generators: 0, // set by caller
            degree_bound: self.degree_bound,
            rules,
            certified,
        }
    }
}

fn reduce_by<'a>(p: &NcPoly, rules: impl Iterator<Item = &'a Rule> + Clone) -> NcPoly {
    let mut p = p.clone();
    'outer: loop {
        // reduce the deglex-greatest reducible term first
        let mut hit = None;
        for (w, c) in p.terms().rev() {
            for rule in rules.clone() {
                if let Some(pos) = w.find_subword(&rule.lhs) {
                    hit = Some((w.clone(), c.clone(), rule.clone(), pos));
                    break;
                }
            }
            if hit.is_some() {
                break;
            }
        }
        match hit {
            None => break 'outer,
            Some((w, c, rule, pos)) => {
                let left = Word(w.0[..pos].to_vec());
                let right = Word(w.0[pos + rule.lhs.len()..].to_vec());
                // replace c * left*lhs*right by c * left*rhs*right
                p.add_term(&c.neg(), &w);
                p = p.add(&rule.rhs.sandwich(&left, &right).scale(&c));
            }
        }
    }
    p
}

/// Completes the relations of `p` into a rewriting system, resolving all
/// overlap ambiguities whose superposition word has degree at most
/// `degree_bound`. Overlaps past the bound are deferred and spoil the
/// certificate; exhausting `rule_budget` aborts with the partial system.
pub fn complete_truncated(
    p: &Presentation,
    degree_bound: usize,
    rule_budget: usize,
) -> Result<RewriteSystem, RewriteError> {
    let max_rel = p.relations.iter().map(NcPoly::degree).max().unwrap_or(0);
    if degree_bound < max_rel {
        return Err(RewriteError::DegreeOutOfRange {
            degree: max_rel,
            bound: degree_bound,
        });
    }
    let mut st = Completion {
        field: p.field,
        degree_bound,
        rule_budget,
        slots: Vec::new(),
        pending: p.relations.iter().rev().cloned().collect(),
        overlaps: BTreeSet::new(),
        deferred: Vec::new(),
        added_total: 0,
    };
    loop {
        if let Some(poly) = st.pending.pop() {
            if let Err(budget) = st.insert_poly(poly) {
                let deferred = false;
                let mut partial = st.finish(deferred);
                partial.certified = false;
                partial.num_generators = p.num_generators();
                return Err(RewriteError::TruncationBudgetExceeded {
                    budget,
                    partial: Box::new(partial),
                });
            }
            continue;
        }
        if let Some(&(deg, i, j, o)) = st.overlaps.iter().next() {
            st.overlaps.remove(&(deg, i, j, o));
            let (u, v) = match (&st.slots[i], &st.slots[j]) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => continue,
            };
            // u.lhs = a.o, v.lhs = o.b, superposition a.o.b
            let a = Word(u.lhs.0[..u.lhs.len() - o].to_vec());
            let b = Word(v.lhs.0[o..].to_vec());
            // S-polynomial: a * rhs_v - rhs_u * b
            let s = v
                .rhs
                .sandwich(&a, &Word::one())
                .sub(&u.rhs.sandwich(&Word::one(), &b));
            st.pending.push(s);
            continue;
        }
        break;
    }
    let deferred_alive = st
        .deferred
        .iter()
        .any(|&(i, j)| st.slots[i].is_some() && st.slots[j].is_some());
    let certified = !deferred_alive;
    let mut rs = st.finish(certified);
    rs.num_generators = p.num_generators();
    Ok(rs)
}

/// Cumulative dimensions of the filtration slabs, plus provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationDims {
    /// Entry `i` is the number of irreducible words of length at most `i`.
    pub dims: Vec<usize>,
    pub provenance: Provenance,
}

impl RewriteSystem {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn provenance(&self) -> Provenance {
        if self.certified {
            Provenance::Certified
        } else {
            Provenance::Heuristic
        }
    }

    /// The irreducible (normal) form of `p` modulo the relation ideal.
    /// Idempotent, and exact below the degree bound for certified systems.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        if p.degree() > self.degree_bound {
            return Err(RewriteError::DegreeOutOfRange {
                degree: p.degree(),
                bound: self.degree_bound,
            });
        }
        Ok(reduce_by(p, self.rules.iter()))
    }

    pub fn is_zero(&self, p: &NcPoly) -> Result<Verdict, RewriteError> {
        let nf = self.normal_form(p)?;
        let prov = self.provenance();
        Ok(if nf.is_zero() {
            Verdict::Zero(prov)
        } else {
            Verdict::Nonzero(prov)
        })
    }

    /// All irreducible words of length at most `up_to`, in deglex order.
    pub fn irreducible_words(&self, up_to: usize) -> Result<Vec<Word>, RewriteError> {
        if up_to > self.degree_bound {
            return Err(RewriteError::DegreeOutOfRange {
                degree: up_to,
                bound: self.degree_bound,
            });
        }
        // a rule with an empty leading word kills every word
        if self.rules.iter().any(|r| r.lhs.is_empty()) {
            return Ok(Vec::new());
        }
        let max_rule = self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        let mut layer = vec![Word::one()];
        let mut all = vec![Word::one()];
        for _ in 1..=up_to {
            let mut next = Vec::new();
            for w in &layer {
                'gen: for g in 0..self.num_generators {
                    let cand = w.concat(&Word::gen(g));
                    // only suffixes ending at the new letter can newly match
                    for l in 1..=max_rule.min(cand.len()) {
                        let suffix = &cand.0[cand.len() - l..];
                        if self.rules.iter().any(|r| r.lhs.0[..] == suffix[..]) {
                            continue 'gen;
                        }
                    }
                    next.push(cand);
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort();
        Ok(all)
    }

    /// Entry `i` is the dimension of the span of monomials of length at
    /// most `i` in the presented algebra, for `i = 0..=up_to`.
    pub fn filtration_dims(&self, up_to: usize) -> Result<FiltrationDims, RewriteError> {
        let words = self.irreducible_words(up_to)?;
        let mut dims = vec![0usize; up_to + 1];
        for w in &words {
            dims[w.len()] += 1;
        }
        for i in 1..=up_to {
            dims[i] += dims[i - 1];
        }
        Ok(FiltrationDims {
            dims,
            provenance: self.provenance(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;
    use crate::freealg::parse_presentation;

    fn rs_for(text: &str, bound: usize) -> RewriteSystem {
        let p = parse_presentation(text, Field::Q).unwrap();
        complete_truncated(&p, bound, 10_000).unwrap()
    }

    fn poly(text: &str) -> NcPoly {
        // parse a single-relation presentation and take the relation
        let p = parse_presentation(&format!("k<x,y | {}>", text), Field::Q).unwrap();
        p.relations[0].clone()
    }

    #[test]
    fn single_square_relation() {
        let rs = rs_for("k<x | x*x>", 6);
        assert!(rs.is_certified());
        assert_eq!(rs.rules().len(), 1);
        assert_eq!(rs.rules()[0].lhs, Word(vec![0, 0]));
        assert!(rs.rules()[0].rhs.is_zero());
    }

    #[test]
    fn free_algebra_is_empty_and_certified() {
        let rs = rs_for("k<x,y | >", 4);
        assert!(rs.is_certified());
        assert!(rs.rules().is_empty());
    }

    #[test]
    fn weyl_orients_to_single_rule() {
        let rs = rs_for("k<x,y | x*y - y*x - 1>", 6);
        assert!(rs.is_certified());
        assert_eq!(rs.rules().len(), 1);
        assert_eq!(rs.rules()[0].lhs, Word(vec![0, 1]));
        // rhs = y*x + 1
        let rhs = &rs.rules()[0].rhs;
        assert_eq!(rhs.coeff(&Word(vec![1, 0])), Scalar::from_i64(Field::Q, 1));
        assert_eq!(rhs.coeff(&Word::one()), Scalar::from_i64(Field::Q, 1));
    }

    #[test]
    fn normal_forms() {
        let rs = rs_for("k<x,y | x*x>", 6);
        let x3 = poly("x*x*x");
        assert!(rs.normal_form(&x3).unwrap().is_zero());

        let weyl = rs_for("k<x,y | x*y - y*x - 1>", 6);
        let xy = poly("x*y");
        let nf = weyl.normal_form(&xy).unwrap();
        assert_eq!(nf.coeff(&Word(vec![1, 0])), Scalar::from_i64(Field::Q, 1));
        assert_eq!(nf.coeff(&Word::one()), Scalar::from_i64(Field::Q, 1));

        let free = rs_for("k<x,y | >", 6);
        let p = poly("x*y - 2*y*x");
        assert_eq!(free.normal_form(&p).unwrap(), p);
    }

    #[test]
    fn normal_form_rejects_high_degree() {
        let rs = rs_for("k<x,y | x*x>", 3);
        let p = poly("x*y*x*y");
        assert!(matches!(
            rs.normal_form(&p),
            Err(RewriteError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn zero_tests() {
        let rs = rs_for("k<x,y | x*x>", 6);
        assert_eq!(
            rs.is_zero(&poly("x*x")).unwrap(),
            Verdict::Zero(Provenance::Certified)
        );
        assert_eq!(
            rs.is_zero(&poly("x*y")).unwrap(),
            Verdict::Nonzero(Provenance::Certified)
        );

        let weyl = rs_for("k<x,y | x*y - y*x - 1>", 6);
        assert_eq!(
            weyl.is_zero(&poly("x*y - y*x - 1")).unwrap(),
            Verdict::Zero(Provenance::Certified)
        );
    }

    #[test]
    fn filtration_dimensions() {
        // k<x,y : x^2, yx>: irreducible words are 1; x, y; xy, y^2
        let rs = rs_for("k<x,y | x*x, y*x>", 6);
        let f = rs.filtration_dims(2).unwrap();
        assert_eq!(f.dims, vec![1, 3, 5]);
        assert_eq!(f.provenance, Provenance::Certified);

        // free on one generator: one word per length
        let rs = rs_for("k<x | >", 6);
        assert_eq!(rs.filtration_dims(4).unwrap().dims, vec![1, 2, 3, 4, 5]);

        // dual numbers: only 1 and x survive
        let rs = rs_for("k<x | x*x>", 6);
        assert_eq!(rs.filtration_dims(3).unwrap().dims, vec![1, 2, 2, 2]);
    }

    #[test]
    fn group_algebra_completion_collapses_inverse() {
        // Z/2: completion discovers x = xb and collapses to {x -> xb, xb^2 -> 1}
        let p = crate::freealg::group_algebra_presentation(Field::Q, 1, &[vec![1, 1]]).unwrap();
        let rs = complete_truncated(&p, 4, 10_000).unwrap();
        assert!(rs.is_certified());
        let lhss: Vec<&Word> = rs.rules().iter().map(|r| &r.lhs).collect();
        assert!(lhss.contains(&&Word(vec![0])));
        assert!(lhss.contains(&&Word(vec![1, 1])));
        // the word x*x evaluates to 1
        let xx = NcPoly::from_term(Scalar::one(Field::Q), Word(vec![0, 0]));
        let nf = rs.normal_form(&xx).unwrap();
        assert_eq!(nf, NcPoly::one(Field::Q));
        // and so does xb*x
        let bx = NcPoly::from_term(Scalar::one(Field::Q), Word(vec![1, 0]));
        assert_eq!(rs.normal_form(&bx).unwrap(), NcPoly::one(Field::Q));
    }

    #[test]
    fn budget_exhaustion_returns_partial() {
        let p = parse_presentation("k<x,y | x*x - y, y*y - x>", Field::Q).unwrap();
        let err = complete_truncated(&p, 8, 1).unwrap_err();
        match err {
            RewriteError::TruncationBudgetExceeded { partial, .. } => {
                assert!(!partial.is_certified());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn constant_relation_kills_everything() {
        // relation 1 = 0 collapses the algebra
        let p = parse_presentation("k<x | 1>", Field::Q).unwrap();
        let rs = complete_truncated(&p, 3, 100).unwrap();
        let f = rs.filtration_dims(2).unwrap();
        assert_eq!(f.dims, vec![0, 0, 0]);
        let x = NcPoly::gen(Field::Q, 0);
        assert!(rs.normal_form(&x).unwrap().is_zero());
    }

    use rand::Rng;

    fn random_poly(rng: &mut impl Rng, num_gens: usize, max_deg: usize) -> NcPoly {
        let mut p = NcPoly::zero(Field::Q);
        for _ in 0..rng.gen_range(1..5) {
            let len = rng.gen_range(0..=max_deg);
            let w = Word((0..len).map(|_| rng.gen_range(0..num_gens)).collect());
            p.add_term(&Scalar::from_i64(Field::Q, rng.gen_range(-3..=3)), &w);
        }
        p
    }

    /// Reduces `p` with randomized rule/position choices; must agree with
    /// the deterministic normal form on certified systems.
    fn random_order_reduce(rs: &RewriteSystem, p: &NcPoly, rng: &mut impl Rng) -> NcPoly {
        let mut p = p.clone();
        loop {
            let mut candidates = Vec::new();
            for (w, c) in p.terms() {
                for rule in rs.rules() {
                    let mut start = 0;
                    while let Some(off) = Word(w.0[start..].to_vec()).find_subword(&rule.lhs) {
                        candidates.push((w.clone(), c.clone(), rule.clone(), start + off));
                        start += off + 1;
                        if start + rule.lhs.len() > w.len() {
                            break;
                        }
                    }
                }
            }
            if candidates.is_empty() {
                return p;
            }
            let (w, c, rule, pos) = candidates[rng.gen_range(0..candidates.len())].clone();
            let left = Word(w.0[..pos].to_vec());
            let right = Word(w.0[pos + rule.lhs.len()..].to_vec());
            p.add_term(&c.neg(), &w);
            p = p.add(&rule.rhs.sandwich(&left, &right).scale(&c));
        }
    }

    #[test]
    fn confluence_on_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for text in ["k<x,y | x*x, y*x>", "k<x,y | x*y - y*x - 1>", "k<x,y | x*x - y>"] {
            let rs = rs_for(text, 6);
            assert!(rs.is_certified(), "{text} should certify");
            for _ in 0..40 {
                let p = random_poly(&mut rng, 2, 6);
                let nf = rs.normal_form(&p).unwrap();
                let alt = random_order_reduce(&rs, &p, &mut rng);
                assert_eq!(nf, alt, "confluence failure on {text}");
            }
        }
    }

    #[test]
    fn normal_form_is_projection_and_linear() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let rs = rs_for("k<x,y | x*x, y*x>", 6);
        for _ in 0..40 {
            let p = random_poly(&mut rng, 2, 5);
            let q = random_poly(&mut rng, 2, 5);
            let nfp = rs.normal_form(&p).unwrap();
            assert_eq!(rs.normal_form(&nfp).unwrap(), nfp);
            let a = Scalar::from_i64(Field::Q, rng.gen_range(-3..=3));
            let b = Scalar::from_i64(Field::Q, rng.gen_range(-3..=3));
            let combo = p.scale(&a).add(&q.scale(&b));
            let lhs = rs.normal_form(&combo).unwrap();
            let rhs = nfp.scale(&a).add(&rs.normal_form(&q).unwrap().scale(&b));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn filtration_monotone_and_bounded_by_free() {
        let rs = rs_for("k<x,y | x*x - y*x>", 6);
        let f = rs.filtration_dims(5).unwrap();
        for i in 1..f.dims.len() {
            assert!(f.dims[i] >= f.dims[i - 1]);
        }
        // free count over a generators: sum of a^j
        let a = 2usize;
        for (i, &d) in f.dims.iter().enumerate() {
            let free: usize = (0..=i).map(|j| a.pow(j as u32)).sum();
            assert!(d <= free);
        }
    }
}
