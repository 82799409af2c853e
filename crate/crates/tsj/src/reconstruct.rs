//! Reconstruction of a Thom-Sebastiani polynomial with the same Jacobian
//! ideal as the input support.
//!
//! The search commits one support element at a time. Committing a requires
//! that its support is disjoint from everything committed so far, that every
//! exponentwise partial derivative of a is a still-unassigned minimal
//! generator, and that the grown assignment still extends to a transversal
//! covering all of Min(J_F). Candidates are tried by increasing derivative
//! degree, then smallest incident variable, then graded-lex on the element;
//! exhausted branches backtrack chronologically. On inputs that pass the
//! rank test the search always terminates with all generators assigned.

use crate::error::{Error, Result};
use crate::exponent::{jacobian_ideal, Exponent, SupportSet};
use crate::matroid::{decide_jacobian, extend_matching, Extension, PartialTransversal};
use std::collections::{BTreeMap, BTreeSet};

/// One committed element together with the generators it assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionStep {
    pub chosen: Exponent,
    /// (variable, newly assigned minimal generator), ascending by variable.
    pub assigned: Vec<(usize, Exponent)>,
}

/// Certificate that F' realizes the Jacobian ideal of F as a polynomial with
/// pairwise disjoint monomial supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsWitness {
    pub f_prime: BTreeSet<Exponent>,
    /// Variable -> the minimal generator it accounts for.
    pub psi: BTreeMap<usize, Exponent>,
    /// Permutation of variable indices: position j holds the original
    /// variable moved there, committed supports first in commit order.
    pub sigma: Vec<usize>,
    pub steps: Vec<ReconstructionStep>,
}

struct Search<'a> {
    f: &'a SupportSet,
    cover: crate::matroid::TransversalCover,
    gen_index: BTreeMap<Exponent, usize>,
    psi: PartialTransversal,
    used_vars: Vec<bool>,
    committed: Vec<Exponent>,
    steps: Vec<ReconstructionStep>,
}

impl Search<'_> {
    /// Valid candidates at the current node, in commit order.
    fn candidates(&self) -> Vec<Exponent> {
        let mut keyed: Vec<(u64, usize, Exponent)> = Vec::new();
        'next: for a in self.f.iter() {
            let support = a.support();
            if support.iter().any(|&i| self.used_vars[i]) {
                continue;
            }
            for &i in &support {
                let d = a.partial(i).unwrap().unwrap();
                match self.gen_index.get(&d) {
                    Some(&g) if self.psi.iter().all(|(_, h)| h != g) => {}
                    _ => continue 'next,
                }
            }
            keyed.push((a.degree() - 1, support[0], a.clone()));
        }
        keyed.sort();
        keyed.into_iter().map(|(_, _, a)| a).collect()
    }

    fn feasible(&self, a: &Exponent) -> bool {
        let mut grown = self.psi.clone();
        for i in a.support() {
            let d = a.partial(i).unwrap().unwrap();
            grown.insert(i, self.gen_index[&d]).expect("fresh variable and generator");
        }
        matches!(
            extend_matching(&self.cover, &grown),
            Ok(Extension::Extended(_))
        )
    }

    fn commit(&mut self, a: &Exponent) {
        let mut assigned = Vec::new();
        for i in a.support() {
            let d = a.partial(i).unwrap().unwrap();
            self.psi.insert(i, self.gen_index[&d]).expect("fresh variable and generator");
            self.used_vars[i] = true;
            assigned.push((i, d));
        }
        self.committed.push(a.clone());
        self.steps.push(ReconstructionStep {
            chosen: a.clone(),
            assigned,
        });
    }

    fn undo(&mut self) {
        let step = self.steps.pop().expect("undo matches a commit");
        self.committed.pop();
        for (i, _) in &step.assigned {
            self.used_vars[*i] = false;
            self.psi.remove(*i);
        }
    }

    fn solve(&mut self) -> bool {
        if self.psi.len() == self.cover.mu() {
            return true;
        }
        for a in self.candidates() {
            if !self.feasible(&a) {
                continue;
            }
            self.commit(&a);
            if self.solve() {
                return true;
            }
            self.undo();
        }
        false
    }
}

/// Build a witness for F. Errors with the rank evidence when J_F is not a
/// Jacobian semigroup ideal.
pub fn reconstruct(f: &SupportSet) -> Result<TsWitness> {
    let decision = decide_jacobian(f);
    if !decision.is_jacobian {
        return Err(Error::NotJacobian {
            mu: decision.mu,
            rank: decision.rank,
        });
    }
    let gen_index = decision
        .cover
        .min_gens()
        .iter()
        .enumerate()
        .map(|(g, b)| (b.clone(), g))
        .collect();
    let mut search = Search {
        f,
        cover: decision.cover,
        gen_index,
        psi: PartialTransversal::new(),
        used_vars: vec![false; f.n()],
        committed: Vec::new(),
        steps: Vec::new(),
    };
    if !search.solve() {
        return Err(Error::Internal(
            "rank test passed but the reconstruction search exhausted all branches".into(),
        ));
    }

    let mut sigma = Vec::with_capacity(f.n());
    for a in &search.committed {
        sigma.extend(a.support());
    }
    for i in 0..f.n() {
        if !search.used_vars[i] {
            sigma.push(i);
        }
    }
    let psi = search
        .psi
        .iter()
        .map(|(v, g)| (v, search.cover.min_gens()[g].clone()))
        .collect();
    let witness = TsWitness {
        f_prime: search.committed.iter().cloned().collect(),
        psi,
        sigma,
        steps: search.steps,
    };
    debug_assert!(verify_witness(f, &witness));
    Ok(witness)
}

/// Independent check of the four witness invariants; recomputes the minimal
/// generators on both sides.
pub fn verify_witness(f: &SupportSet, w: &TsWitness) -> bool {
    // F' is a nonempty subset of F with pairwise disjoint supports.
    if w.f_prime.is_empty() || !w.f_prime.iter().all(|a| f.contains(a)) {
        return false;
    }
    let f_prime = match SupportSet::new(f.n(), w.f_prime.iter().cloned()) {
        Ok(s) => s,
        Err(_) => return false,
    };
    if !f_prime.has_disjoint_supports() {
        return false;
    }

    // psi maps each variable of [F'] to the matching derivative, injectively,
    // and every derivative of every committed element is a minimal generator.
    let ideal = jacobian_ideal(f);
    let min_set: BTreeSet<&Exponent> = ideal.min_gens().iter().collect();
    let mut domain = BTreeSet::new();
    let mut image = BTreeSet::new();
    for a in &w.f_prime {
        for i in a.support() {
            let d = a.partial(i).unwrap().unwrap();
            if !min_set.contains(&d) || w.psi.get(&i) != Some(&d) {
                return false;
            }
            domain.insert(i);
            image.insert(d);
        }
    }
    if domain.len() != w.psi.len() || image.len() != domain.len() {
        return false;
    }

    // sigma is a permutation placing [F'] first.
    if w.sigma.len() != f.n() {
        return false;
    }
    let as_set: BTreeSet<usize> = w.sigma.iter().copied().collect();
    if as_set.len() != f.n() || *as_set.iter().next_back().unwrap() >= f.n() {
        return false;
    }
    let leading: BTreeSet<usize> = w.sigma[..domain.len()].iter().copied().collect();
    if leading != domain {
        return false;
    }

    // Same minimal generators on both sides.
    jacobian_ideal(&f_prime) == ideal
}

/// Polynomial with unit coefficients whose support is F', written in the
/// sigma-reordered variables x1..xn.
pub fn ts_polynomial(w: &TsWitness) -> String {
    let mut terms: Vec<Exponent> = w.f_prime.iter().map(|a| a.permute(&w.sigma)).collect();
    terms.sort();
    let rendered: Vec<String> = terms
        .iter()
        .map(|t| {
            t.support()
                .iter()
                .map(|&j| {
                    if t.entry(j) == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, t.entry(j))
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    rendered.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(v: &[u64]) -> Exponent {
        Exponent::new(v.to_vec()).unwrap()
    }

    fn support(n: usize, rows: &[&[u64]]) -> SupportSet {
        SupportSet::from_rows(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn whitney_umbrella_witness() {
        let f = support(3, &[&[2, 0, 0], &[0, 2, 1]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(
            w.f_prime.iter().cloned().collect::<Vec<_>>(),
            vec![exp(&[2, 0, 0]), exp(&[0, 2, 1])]
        );
        let psi: Vec<(usize, Exponent)> = w.psi.iter().map(|(&v, g)| (v, g.clone())).collect();
        assert_eq!(
            psi,
            vec![
                (0, exp(&[1, 0, 0])),
                (1, exp(&[0, 1, 1])),
                (2, exp(&[0, 2, 0])),
            ]
        );
        assert_eq!(w.sigma, vec![0, 1, 2]);
        assert_eq!(ts_polynomial(&w), "x1^2 + x2^2*x3");
        assert!(verify_witness(&f, &w));
    }

    #[test]
    fn mixed_quadratic_preferred() {
        // All three elements work alone or in pairs; the search picks the
        // one whose first incident variable is smallest, breaking the tie
        // toward the mixed monomial.
        let f = support(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(
            w.f_prime.iter().cloned().collect::<Vec<_>>(),
            vec![exp(&[1, 1])]
        );
        assert_eq!(ts_polynomial(&w), "x1*x2");
        assert!(verify_witness(&f, &w));
    }

    #[test]
    fn two_blocks_reordered_rendering() {
        let f = support(3, &[&[3, 0, 0], &[0, 2, 2]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(ts_polynomial(&w), "x1^3 + x2^2*x3^2");
    }

    #[test]
    fn noise_elements_never_committed() {
        // (1,1,1) derives into the ideal but not onto minimal generators.
        let f = support(3, &[&[2, 0, 0], &[0, 2, 1], &[1, 1, 1]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(
            w.f_prime.iter().cloned().collect::<Vec<_>>(),
            vec![exp(&[2, 0, 0]), exp(&[0, 2, 1])]
        );
        assert!(verify_witness(&f, &w));
    }

    #[test]
    fn rank_deficient_rejected() {
        let f = support(2, &[&[2, 1], &[1, 2]]);
        match reconstruct(&f) {
            Err(Error::NotJacobian { mu, rank }) => {
                assert_eq!((mu, rank), (3, 2));
            }
            other => panic!("expected NotJacobian, got {other:?}"),
        }
    }

    #[test]
    fn single_monomial_trivial_witness() {
        let f = support(2, &[&[2, 1]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(w.f_prime.len(), 1);
        assert_eq!(w.sigma, vec![0, 1]);
        assert_eq!(ts_polynomial(&w), "x1^2*x2");
        assert!(verify_witness(&f, &w));
    }

    #[test]
    fn sigma_moves_committed_support_first() {
        // Only the last two variables are used; sigma must bring them first.
        let f = support(3, &[&[0, 2, 1]]);
        let w = reconstruct(&f).unwrap();
        assert_eq!(w.sigma, vec![1, 2, 0]);
        assert_eq!(ts_polynomial(&w), "x1^2*x2");
        assert!(verify_witness(&f, &w));
    }

    #[test]
    fn tampered_witnesses_fail() {
        let f = support(3, &[&[2, 0, 0], &[0, 2, 1]]);
        let good = reconstruct(&f).unwrap();

        let mut dropped = good.clone();
        dropped.f_prime.remove(&exp(&[2, 0, 0]));
        assert!(!verify_witness(&f, &dropped));

        let mut swapped = good.clone();
        swapped.psi.insert(1, exp(&[0, 2, 0]));
        swapped.psi.insert(2, exp(&[0, 1, 1]));
        assert!(!verify_witness(&f, &swapped));

        // All variables are committed here, so any permutation keeps the
        // committed supports in front; a repeated index must still fail.
        let mut bad_sigma = good.clone();
        bad_sigma.sigma = vec![0, 0, 1];
        assert!(!verify_witness(&f, &bad_sigma));

        let mut foreign = good.clone();
        foreign.f_prime.insert(exp(&[1, 1, 1]));
        assert!(!verify_witness(&f, &foreign));

        // Partially used variables: an unused variable may not lead.
        let g = support(3, &[&[0, 2, 1]]);
        let gw = reconstruct(&g).unwrap();
        let mut unused_first = gw.clone();
        unused_first.sigma = vec![0, 1, 2];
        assert!(!verify_witness(&g, &unused_first));
    }

    #[test]
    fn degrees_non_decreasing_in_steps() {
        let f = support(4, &[&[0, 0, 0, 3], &[2, 0, 0, 0], &[0, 2, 1, 0]]);
        let w = reconstruct(&f).unwrap();
        let degrees: Vec<u64> = w.steps.iter().map(|s| s.chosen.degree()).collect();
        assert!(degrees.windows(2).all(|p| p[0] <= p[1]));
        assert!(verify_witness(&f, &w));
    }
}
