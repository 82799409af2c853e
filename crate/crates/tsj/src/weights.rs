//! Quasihomogeneous weights over exact rationals.
//!
//! `ts_weights` evaluates the closed form available for disjoint-support
//! polynomials: 1/deg(block) on each block, 1 on unused variables.
//! `solve_weights` handles arbitrary supports by Gauss elimination of the
//! degree equations followed by Fourier-Motzkin elimination of the strict
//! positivity constraints; the solution reported for a positive-dimensional
//! solution set is a fixed canonical point, preferring weight-like values
//! (1, then interval midpoints) parameter by parameter.

use crate::error::{Error, Result};
use crate::exponent::{Exponent, SupportSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<BigRational>);

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Validation("empty weight vector".into()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::Validation("weights must be positive".into()));
        }
        Ok(WeightVector(weights))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.0
    }

    /// Multiply by the least common denominator: integer weights with the
    /// matching integer target degree.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let lcd = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let ints = self
            .0
            .iter()
            .map(|w| (w * BigRational::from(lcd.clone())).to_integer())
            .collect();
        (ints, lcd)
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Exact <w, a>.
pub fn weighted_degree(w: &WeightVector, a: &Exponent) -> Result<BigRational> {
    if a.dim() != w.n() {
        return Err(Error::Validation(format!(
            "exponent {a} has {} entries, expected {}",
            a.dim(),
            w.n()
        )));
    }
    let mut acc = BigRational::zero();
    for (wi, &ai) in w.weights().iter().zip(a.entries()) {
        acc += wi * BigRational::from(BigInt::from(ai));
    }
    Ok(acc)
}

/// Does every element of F have weighted degree exactly `target`?
pub fn satisfies(w: &WeightVector, f: &SupportSet, target: &BigRational) -> bool {
    f.iter()
        .all(|a| weighted_degree(w, a).map(|d| d == *target).unwrap_or(false))
}

/// Closed-form weights for a disjoint-support polynomial: each variable of a
/// block gets the reciprocal of the block's total degree, unused variables
/// get 1. The result gives every block weighted degree exactly 1.
pub fn ts_weights(f_prime: &SupportSet) -> Result<WeightVector> {
    if !f_prime.has_disjoint_supports() {
        return Err(Error::Validation(
            "ts_weights requires pairwise disjoint supports".into(),
        ));
    }
    let mut weights = vec![BigRational::one(); f_prime.n()];
    for a in f_prime.iter() {
        let deg = BigRational::from(BigInt::from(a.degree()));
        for i in a.support() {
            weights[i] = deg.recip();
        }
    }
    let w = WeightVector::new(weights)?;
    debug_assert!(satisfies(&w, f_prime, &BigRational::one()));
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSolution {
    Weights(WeightVector),
    Infeasible,
}

/// Positive rational weights giving every element of F weighted degree 1.
pub fn solve_weights(f: &SupportSet) -> Result<WeightSolution> {
    solve_weights_target(f, &BigRational::one())
}

/// Linear constraint sum(coeffs . t) + constant > 0.
#[derive(Debug, Clone)]
struct Strict {
    coeffs: Vec<BigRational>,
    constant: BigRational,
}

pub fn solve_weights_target(f: &SupportSet, target: &BigRational) -> Result<WeightSolution> {
    let n = f.n();
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = f
        .iter()
        .map(|a| {
            let coeffs = a
                .entries()
                .iter()
                .map(|&e| BigRational::from(BigInt::from(e)))
                .collect();
            (coeffs, target.clone())
        })
        .collect();

    // Reduced row echelon form over the rationals.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut next_row = 0;
    for col in 0..n {
        let Some(pivot) = (next_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot);
        let scale = rows[next_row].0[col].clone().recip();
        for c in &mut rows[next_row].0 {
            *c *= scale.clone();
        }
        rows[next_row].1 *= scale;
        for r in 0..rows.len() {
            if r != next_row && !rows[r].0[col].is_zero() {
                let factor = rows[r].0[col].clone();
                for c in 0..n {
                    let delta = factor.clone() * rows[next_row].0[c].clone();
                    rows[r].0[c] -= delta;
                }
                let delta = factor * rows[next_row].1.clone();
                rows[r].1 -= delta;
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }
    for row in &rows[next_row..] {
        if !row.1.is_zero() {
            return Ok(WeightSolution::Infeasible);
        }
    }

    // Affine parametrization: w_col = const + lin . t over the free columns.
    let free_cols: Vec<usize> = (0..n).filter(|&c| pivot_of_col[c].is_none()).collect();
    let m = free_cols.len();
    let affine: Vec<(BigRational, Vec<BigRational>)> = (0..n)
        .map(|col| match pivot_of_col[col] {
            Some(r) => {
                let lin = free_cols
                    .iter()
                    .map(|&fc| -rows[r].0[fc].clone())
                    .collect();
                (rows[r].1.clone(), lin)
            }
            None => {
                let mut lin = vec![BigRational::zero(); m];
                lin[free_cols.iter().position(|&fc| fc == col).unwrap()] = BigRational::one();
                (BigRational::zero(), lin)
            }
        })
        .collect();

    // Positivity of every coordinate, eliminated back to front.
    let mut systems: Vec<Vec<Strict>> = Vec::with_capacity(m + 1);
    systems.push(
        affine
            .iter()
            .map(|(c, lin)| Strict {
                coeffs: lin.clone(),
                constant: c.clone(),
            })
            .collect(),
    );
    for k in (0..m).rev() {
        let current = systems.last().unwrap();
        let mut lowers: Vec<Strict> = Vec::new();
        let mut uppers: Vec<Strict> = Vec::new();
        let mut rest: Vec<Strict> = Vec::new();
        for c in current {
            if c.coeffs[k].is_zero() {
                rest.push(c.clone());
            } else if c.coeffs[k].is_positive() {
                lowers.push(c.clone());
            } else {
                uppers.push(c.clone());
            }
        }
        // Combine every lower bound with every upper bound.
        for lo in &lowers {
            for hi in &uppers {
                let scale_lo = lo.coeffs[k].clone();
                let scale_hi = -hi.coeffs[k].clone();
                let mut coeffs = vec![BigRational::zero(); m];
                for j in 0..k {
                    coeffs[j] = lo.coeffs[j].clone() / scale_lo.clone()
                        + hi.coeffs[j].clone() / scale_hi.clone();
                }
                let constant = lo.constant.clone() / scale_lo + hi.constant.clone() / scale_hi;
                rest.push(Strict { coeffs, constant });
            }
        }
        systems.push(rest);
    }
    if systems
        .last()
        .unwrap()
        .iter()
        .any(|c| !c.constant.is_positive())
    {
        return Ok(WeightSolution::Infeasible);
    }

    // Assign parameters in order; systems[m - k] constrains exactly t_0..t_k.
    let mut t = vec![BigRational::zero(); m];
    for k in 0..m {
        let system = &systems[m - 1 - k];
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for c in system {
            if c.coeffs[k].is_zero() {
                continue;
            }
            let mut bound = c.constant.clone();
            for j in 0..k {
                bound += c.coeffs[j].clone() * t[j].clone();
            }
            bound = -bound / c.coeffs[k].clone();
            if c.coeffs[k].is_positive() {
                lo = Some(match lo {
                    Some(old) => old.max(bound),
                    None => bound,
                });
            } else {
                hi = Some(match hi {
                    Some(old) => old.min(bound),
                    None => bound,
                });
            }
        }
        t[k] = pick_in_open_interval(lo, hi)?;
    }

    let weights: Vec<BigRational> = affine
        .iter()
        .map(|(c, lin)| {
            let mut v = c.clone();
            for (l, tk) in lin.iter().zip(&t) {
                v += l.clone() * tk.clone();
            }
            v
        })
        .collect();
    let w = WeightVector::new(weights)
        .map_err(|_| Error::Internal("elimination produced a non-positive weight".into()))?;
    if !satisfies(&w, f, target) {
        return Err(Error::Internal(
            "solved weights fail their own degree equations".into(),
        ));
    }
    Ok(WeightSolution::Weights(w))
}

fn pick_in_open_interval(
    lo: Option<BigRational>,
    hi: Option<BigRational>,
) -> Result<BigRational> {
    let one = BigRational::one();
    Ok(match (lo, hi) {
        (None, None) => one,
        (Some(l), None) => {
            if l < one {
                one
            } else {
                l + one
            }
        }
        (None, Some(h)) => {
            if h > one {
                one
            } else {
                h - one
            }
        }
        (Some(l), Some(h)) => {
            if l >= h {
                return Err(Error::Internal(
                    "empty parameter interval after feasibility passed".into(),
                ));
            }
            if l < one && one < h {
                one
            } else {
                (l + h) / BigRational::from(BigInt::from(2))
            }
        }
    })
}
