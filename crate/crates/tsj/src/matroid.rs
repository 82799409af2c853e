//! Transversal matroid attached to a monomial Jacobian ideal.
//!
//! The ground set is Min(J_F); variable i is adjacent to a minimal generator
//! b exactly when b + e_i lies in F, i.e. b arises from an element of F by
//! one formal partial derivative. The ideal is a Jacobian semigroup ideal
//! precisely when a matching covers all of Min(J_F).

use crate::error::{Error, Result};
use crate::exponent::{jacobian_ideal, Exponent, SupportSet};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCover {
    n: usize,
    min_gens: Vec<Exponent>,
    gen_vars: Vec<Vec<usize>>,
}

impl TransversalCover {
    /// Assemble a cover from explicit parts. Trusts the generator list; used
    /// by tests and oracles. `build_cover` is the semantic constructor.
    pub fn from_parts(
        n: usize,
        min_gens: Vec<Exponent>,
        edges: &BTreeSet<(usize, usize)>,
    ) -> Result<Self> {
        let mut gen_vars = vec![Vec::new(); min_gens.len()];
        for &(v, g) in edges {
            if v >= n {
                return Err(Error::Validation(format!(
                    "edge variable {v} out of range for {n} variables"
                )));
            }
            match gen_vars.get_mut(g) {
                Some(vars) => vars.push(v),
                None => {
                    return Err(Error::Validation(format!(
                        "edge generator index {g} out of range for {} generators",
                        min_gens.len()
                    )))
                }
            }
        }
        Ok(TransversalCover { n, min_gens, gen_vars })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_gens(&self) -> &[Exponent] {
        &self.min_gens
    }

    pub fn mu(&self) -> usize {
        self.min_gens.len()
    }

    /// Variables adjacent to generator g, ascending.
    pub fn allowed_vars(&self, g: usize) -> &[usize] {
        &self.gen_vars[g]
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (g, vars) in self.gen_vars.iter().enumerate() {
            for &v in vars {
                out.insert((v, g));
            }
        }
        out
    }
}

/// Injective partial assignment of variables to generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialTransversal {
    assignment: BTreeMap<usize, usize>,
}

impl PartialTransversal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, var: usize, gen: usize) -> Result<()> {
        if self.assignment.contains_key(&var) {
            return Err(Error::Validation(format!(
                "variable {var} assigned to two generators"
            )));
        }
        if self.assignment.values().any(|&g| g == gen) {
            return Err(Error::Validation(format!(
                "generator {gen} assigned to two variables"
            )));
        }
        self.assignment.insert(var, gen);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn remove(&mut self, var: usize) -> Option<usize> {
        self.assignment.remove(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().map(|(&v, &g)| (v, g))
    }

    pub fn get(&self, var: usize) -> Option<usize> {
        self.assignment.get(&var).copied()
    }
}

/// Cover of F: minimal generators of J_F plus the derivative incidences.
pub fn build_cover(f: &SupportSet) -> TransversalCover {
    let ideal = jacobian_ideal(f);
    let min_gens = ideal.min_gens().to_vec();
    let gen_vars = min_gens
        .iter()
        .map(|b| (0..f.n()).filter(|&i| f.contains(&b.plus_unit(i))).collect())
        .collect();
    TransversalCover {
        n: f.n(),
        min_gens,
        gen_vars,
    }
}

struct MatchState {
    var_to_gen: Vec<Option<usize>>,
    gen_to_var: Vec<Option<usize>>,
    fixed_var: Vec<bool>,
}

impl MatchState {
    fn augment(&mut self, cover: &TransversalCover, g: usize, visited: &mut [bool]) -> bool {
        for &v in cover.allowed_vars(g) {
            if visited[v] || self.fixed_var[v] {
                continue;
            }
            visited[v] = true;
            let free = match self.var_to_gen[v] {
                None => true,
                Some(prev) => self.augment(cover, prev, visited),
            };
            if free {
                self.var_to_gen[v] = Some(g);
                self.gen_to_var[g] = Some(v);
                return true;
            }
        }
        false
    }
}

/// Deterministic maximum matching: generators are processed in stored order
/// (graded-lex for covers built from F) and variables probed ascending.
/// Assignments in `fixed` are kept verbatim and never re-augmented.
fn maximum_matching(cover: &TransversalCover, fixed: &PartialTransversal) -> Result<MatchState> {
    let mut st = MatchState {
        var_to_gen: vec![None; cover.n()],
        gen_to_var: vec![None; cover.mu()],
        fixed_var: vec![false; cover.n()],
    };
    for (v, g) in fixed.iter() {
        if v >= cover.n() || g >= cover.mu() {
            return Err(Error::Validation(format!(
                "assignment x{} -> generator {} out of range",
                v + 1,
                g
            )));
        }
        if !cover.allowed_vars(g).contains(&v) {
            return Err(Error::Validation(format!(
                "assignment x{} -> {} is not an edge of the cover",
                v + 1,
                cover.min_gens()[g]
            )));
        }
        if st.gen_to_var[g].is_some() {
            return Err(Error::Validation(format!(
                "generator {} assigned twice",
                cover.min_gens()[g]
            )));
        }
        st.var_to_gen[v] = Some(g);
        st.gen_to_var[g] = Some(v);
        st.fixed_var[v] = true;
    }
    for g in 0..cover.mu() {
        if st.gen_to_var[g].is_none() {
            let mut visited = vec![false; cover.n()];
            st.augment(cover, g, &mut visited);
        }
    }
    Ok(st)
}

/// Rank of the transversal matroid: size of a maximum partial transversal.
pub fn rank(cover: &TransversalCover) -> usize {
    let st = maximum_matching(cover, &PartialTransversal::new())
        .expect("empty assignment is always consistent");
    st.gen_to_var.iter().flatten().count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    /// A full transversal (all mu generators matched) containing the input.
    Extended(PartialTransversal),
    Infeasible,
}

/// Extend `psi` to a transversal covering every minimal generator, keeping
/// all of psi's assignments. Errors on assignments inconsistent with the
/// cover; returns Infeasible when no full extension exists.
pub fn extend_matching(cover: &TransversalCover, psi: &PartialTransversal) -> Result<Extension> {
    let st = maximum_matching(cover, psi)?;
    if st.gen_to_var.iter().any(|m| m.is_none()) {
        return Ok(Extension::Infeasible);
    }
    let mut full = PartialTransversal::new();
    for (g, v) in st.gen_to_var.iter().enumerate() {
        full.insert(v.unwrap(), g)?;
    }
    Ok(Extension::Extended(full))
}

/// Independence of a set of generator indices: a matching covering exactly
/// that set, routed only through its own members.
pub fn is_independent(cover: &TransversalCover, gens: &BTreeSet<usize>) -> bool {
    let restricted_gens: Vec<Exponent> = gens
        .iter()
        .map(|&g| cover.min_gens()[g].clone())
        .collect();
    let restricted_vars: Vec<Vec<usize>> =
        gens.iter().map(|&g| cover.gen_vars[g].clone()).collect();
    let sub = TransversalCover {
        n: cover.n(),
        min_gens: restricted_gens,
        gen_vars: restricted_vars,
    };
    rank(&sub) == gens.len()
}

#[derive(Debug, Clone)]
pub struct JacobianDecision {
    pub cover: TransversalCover,
    pub rank: usize,
    pub mu: usize,
    pub is_jacobian: bool,
}

/// Decide whether J_F is a Jacobian semigroup ideal: the matroid rank must
/// exhaust all minimal generators.
pub fn decide_jacobian(f: &SupportSet) -> JacobianDecision {
    let cover = build_cover(f);
    let r = rank(&cover);
    let mu = cover.mu();
    JacobianDecision {
        cover,
        rank: r,
        mu,
        is_jacobian: r == mu,
    }
}

pub fn is_jacobian(f: &SupportSet) -> bool {
    decide_jacobian(f).is_jacobian
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    prop_compose! {
        fn arb_cover()(n in 1usize..6, m in 1usize..6)
            (n in Just(n), m in Just(m),
             adj in proptest::collection::vec(proptest::collection::vec(proptest::bool::ANY, n), m))
            -> TransversalCover {
            let mut edges = BTreeSet::new();
            for (g, row) in adj.iter().enumerate() {
                for (v, &on) in row.iter().enumerate() {
                    if on {
                        edges.insert((v, g));
                    }
                }
            }
            let gens: Vec<Exponent> = (0..m)
                .map(|g| {
                    let mut e = vec![0u64; n];
                    e[0] = g as u64 + 1;
                    Exponent::new(e).unwrap()
                })
                .collect();
            TransversalCover::from_parts(n, gens, &edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn rank_bounds(cover in arb_cover()) {
            let r = rank(&cover);
            prop_assert!(r <= cover.n().min(cover.mu()));
        }

        #[test]
        fn matching_is_sound(cover in arb_cover()) {
            // The matching produced for the rank is edge-respecting and injective.
            let st = super::maximum_matching(&cover, &PartialTransversal::new()).unwrap();
            let mut used = BTreeSet::new();
            for (g, v) in st.gen_to_var.iter().enumerate() {
                if let Some(v) = v {
                    prop_assert!(cover.allowed_vars(g).contains(v));
                    prop_assert!(used.insert(*v));
                }
            }
        }

        #[test]
        fn exchange_axiom(cover in arb_cover()) {
            // Collect all independent subsets of the (small) ground set.
            let m = cover.mu();
            let mut independents: Vec<BTreeSet<usize>> = Vec::new();
            for mask in 0u32..(1 << m) {
                let set: BTreeSet<usize> = (0..m).filter(|&g| mask >> g & 1 == 1).collect();
                if is_independent(&cover, &set) {
                    independents.push(set);
                }
            }
            for a in &independents {
                for b in &independents {
                    if a.len() < b.len() {
                        let extendable = b.difference(a).any(|&g| {
                            let mut bigger = a.clone();
                            bigger.insert(g);
                            is_independent(&cover, &bigger)
                        });
                        prop_assert!(extendable, "exchange failed for {:?} < {:?}", a, b);
                    }
                }
            }
        }

        #[test]
        fn rank_is_permutation_invariant(rows in proptest::collection::vec(
            proptest::collection::vec(0u64..4, 4), 1..5), perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
            let rows: Vec<Vec<u64>> =
                rows.into_iter().map(|mut r| { if r.iter().all(|&e| e == 0) { r[0] = 1; } r }).collect();
            let f = SupportSet::from_rows(4, &rows).unwrap();
            let d = decide_jacobian(&f);
            let dp = decide_jacobian(&f.permute(&perm).unwrap());
            prop_assert_eq!(d.rank, dp.rank);
            prop_assert_eq!(d.mu, dp.mu);
            // Conjugated covers have conjugated edges.
            let mut expected = BTreeSet::new();
            let inv = {
                let mut inv = vec![0usize; 4];
                for (new, &old) in perm.iter().enumerate() { inv[old] = new; }
                inv
            };
            for (v, g) in d.cover.edges() {
                let gen = d.cover.min_gens()[g].permute(&perm);
                let pos = dp.cover.min_gens().iter().position(|x| *x == gen).unwrap();
                expected.insert((inv[v], pos));
            }
            prop_assert_eq!(dp.cover.edges(), expected);
        }
    }
}
