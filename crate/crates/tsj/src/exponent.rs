//! Exponent vectors, finite support sets and monomial ideals.
//!
//! An `Exponent` is a point of N^n standing for the monomial x^a. The total
//! order on exponents is graded lexicographic (degree first, then entrywise),
//! which fixes one canonical ordering for every serialized set in the crate.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// Entry bound that keeps every degree sum far away from u64 overflow:
/// MAX_VARS * MAX_ENTRY < 2^63.
pub const MAX_ENTRY: u64 = 1_000_000_000_000_000;
pub const MAX_VARS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u64>);

impl Exponent {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_VARS {
            return Err(Error::Validation(format!(
                "exponent length {} out of range 1..={}",
                entries.len(),
                MAX_VARS
            )));
        }
        if let Some(e) = entries.iter().find(|&&e| e > MAX_ENTRY) {
            return Err(Error::Validation(format!(
                "exponent entry {e} exceeds the supported bound {MAX_ENTRY}"
            )));
        }
        Ok(Exponent(entries))
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree |a|.
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Support [a] = indices of nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Formal partial derivative on the exponent level: a - e_i when a_i > 0.
    pub fn partial(&self, i: usize) -> Result<Option<Exponent>> {
        if i >= self.0.len() {
            return Err(Error::Validation(format!(
                "variable index {i} out of range for {} variables",
                self.0.len()
            )));
        }
        if self.0[i] == 0 {
            return Ok(None);
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Ok(Some(Exponent(v)))
    }

    /// a + e_i.
    pub fn plus_unit(&self, i: usize) -> Exponent {
        let mut v = self.0.clone();
        v[i] += 1;
        Exponent(v)
    }

    /// Componentwise <=, i.e. x^self divides x^other.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Relabel variables: entry j of the result is entry perm[j] of self.
    pub fn permute(&self, perm: &[usize]) -> Exponent {
        debug_assert_eq!(perm.len(), self.0.len());
        Exponent(perm.iter().map(|&j| self.0[j]).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A finite nonempty set F of nonzero exponents in a fixed N^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    n: usize,
    elements: BTreeSet<Exponent>,
}

impl SupportSet {
    pub fn new<I: IntoIterator<Item = Exponent>>(n: usize, elems: I) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::Validation(format!(
                "number of variables {n} out of range 1..={MAX_VARS}"
            )));
        }
        let mut elements = BTreeSet::new();
        for a in elems {
            if a.dim() != n {
                return Err(Error::Validation(format!(
                    "exponent {a} has {} entries, expected {n}",
                    a.dim()
                )));
            }
            if a.is_zero() {
                return Err(Error::Validation(
                    "support contains the zero exponent (constant term)".into(),
                ));
            }
            elements.insert(a);
        }
        if elements.is_empty() {
            return Err(Error::Validation("empty support".into()));
        }
        Ok(SupportSet { n, elements })
    }

    pub fn from_rows(n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let exps = rows
            .iter()
            .map(|r| Exponent::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        SupportSet::new(n, exps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.elements.iter()
    }

    pub fn contains(&self, a: &Exponent) -> bool {
        self.elements.contains(a)
    }

    /// Union of the supports of all elements.
    pub fn used_variables(&self) -> BTreeSet<usize> {
        self.elements.iter().flat_map(|a| a.support()).collect()
    }

    /// True when the elements have pairwise disjoint supports.
    pub fn has_disjoint_supports(&self) -> bool {
        let mut seen = vec![false; self.n];
        for a in &self.elements {
            for i in a.support() {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        true
    }

    pub fn permute(&self, perm: &[usize]) -> Result<SupportSet> {
        SupportSet::new(self.n, self.elements.iter().map(|a| a.permute(perm)))
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// delta(F): all exponentwise partial derivatives of all elements of F.
pub fn derive_all(f: &SupportSet) -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for a in f.iter() {
        for i in a.support() {
            out.insert(a.partial(i).unwrap().unwrap());
        }
    }
    out
}

/// A monomial ideal given by its unique minimal generating set (an antichain
/// under divisibility, sorted graded-lex). The empty antichain is the zero
/// ideal; the singleton {0} is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    min_gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_gens(&self) -> &[Exponent] {
        &self.min_gens
    }

    pub fn mu(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.len() == 1 && self.min_gens[0].is_zero()
    }

    /// Membership by divisibility against some minimal generator.
    pub fn contains(&self, a: &Exponent) -> Result<bool> {
        if a.dim() != self.n {
            return Err(Error::Validation(format!(
                "exponent {a} has {} entries, expected {}",
                a.dim(),
                self.n
            )));
        }
        Ok(self.min_gens.iter().any(|g| g.divides(a)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.min_gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Minimal generating antichain of the ideal generated by `gens`: keep the
/// divisibility-minimal elements. Scanning in increasing graded-lex order
/// makes one pass suffice, since a proper divisor always sorts strictly
/// earlier.
pub fn minimal_generators<I: IntoIterator<Item = Exponent>>(
    n: usize,
    gens: I,
) -> Result<MonomialIdeal> {
    let mut sorted = BTreeSet::new();
    for g in gens {
        if g.dim() != n {
            return Err(Error::Validation(format!(
                "exponent {g} has {} entries, expected {n}",
                g.dim()
            )));
        }
        sorted.insert(g);
    }
    let mut min_gens: Vec<Exponent> = Vec::new();
    for g in sorted {
        if !min_gens.iter().any(|m| m.divides(&g)) {
            min_gens.push(g);
        }
    }
    Ok(MonomialIdeal { n, min_gens })
}

/// Minimal generators of the Jacobian semigroup ideal J_F = <delta(F)>.
pub fn jacobian_ideal(f: &SupportSet) -> MonomialIdeal {
    minimal_generators(f.n(), derive_all(f)).expect("derived exponents share the dimension of F")
}

/// Minimal generators of <delta(F) u F>; agrees with `jacobian_ideal` because
/// every element of F is dominated by one of its own derivatives.
pub fn extended_generators(f: &SupportSet) -> MonomialIdeal {
    let mut gens = derive_all(f);
    gens.extend(f.iter().cloned());
    minimal_generators(f.n(), gens).expect("extended exponents share the dimension of F")
}
