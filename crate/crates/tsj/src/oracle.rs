//! Brute-force cross-checks, kept deliberately independent of the production
//! algorithms: exhaustive enumeration instead of augmenting paths, bitmask
//! subset sweeps instead of branch and bound, and a naive quadratic
//! divisibility filter instead of the sorted single pass. Size guards error
//! out loudly instead of truncating.

use crate::error::{Error, Result};
use crate::exponent::SupportSet;
use crate::matroid::TransversalCover;
use std::collections::BTreeSet;

pub const RANK_GUARD_GENS: usize = 8;
pub const RANK_GUARD_VARS: usize = 8;
pub const COVER_GUARD_VARS: usize = 12;

/// Matroid rank by trying every injective edge-respecting assignment.
pub fn brute_rank(cover: &TransversalCover) -> Result<usize> {
    if cover.mu() > RANK_GUARD_GENS || cover.n() > RANK_GUARD_VARS {
        return Err(Error::GuardExceeded(format!(
            "brute_rank handles at most {RANK_GUARD_GENS} generators and {RANK_GUARD_VARS} variables, got {} and {}",
            cover.mu(),
            cover.n()
        )));
    }
    fn go(cover: &TransversalCover, g: usize, used: &mut Vec<bool>, size: usize) -> usize {
        if g == cover.mu() {
            return size;
        }
        let mut best = go(cover, g + 1, used, size); // leave g unmatched
        for &v in cover.allowed_vars(g) {
            if !used[v] {
                used[v] = true;
                best = best.max(go(cover, g + 1, used, size + 1));
                used[v] = false;
            }
        }
        best
    }
    Ok(go(cover, 0, &mut vec![false; cover.n()], 0))
}

/// Minimum hitting-set size and all inclusion-minimal hitting sets of a
/// family of variable subsets, by exhaustive subset enumeration in order of
/// increasing cardinality.
pub fn brute_min_cover(
    n: usize,
    supports: &[BTreeSet<usize>],
) -> Result<(usize, Vec<BTreeSet<usize>>)> {
    if n > COVER_GUARD_VARS {
        return Err(Error::GuardExceeded(format!(
            "brute_min_cover handles at most {COVER_GUARD_VARS} variables, got {n}"
        )));
    }
    if supports.is_empty() {
        return Err(Error::Validation("no supports to cover (zero ideal)".into()));
    }
    let mut masks = Vec::with_capacity(supports.len());
    for s in supports {
        let mut m = 0u32;
        for &v in s {
            if v >= n {
                return Err(Error::Validation(format!("variable {v} out of range")));
            }
            m |= 1 << v;
        }
        if m == 0 {
            return Err(Error::Validation(
                "empty support cannot be covered (unit ideal)".into(),
            ));
        }
        masks.push(m);
    }
    let covers = |c: u32| masks.iter().all(|&m| m & c != 0);
    let mut by_card: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for c in 0u32..(1 << n) {
        by_card[c.count_ones() as usize].push(c);
    }
    let mut min_size = None;
    let mut minimal = Vec::new();
    for (card, group) in by_card.iter().enumerate() {
        for &c in group {
            if !covers(c) {
                continue;
            }
            if min_size.is_none() {
                min_size = Some(card);
            }
            // Inclusion-minimal: removing any single member breaks the cover.
            let is_minimal = (0..n).all(|v| c & (1 << v) == 0 || !covers(c & !(1 << v)));
            if is_minimal {
                minimal.push((0..n).filter(|&v| c >> v & 1 == 1).collect());
            }
        }
    }
    match min_size {
        Some(k) => Ok((k, minimal)),
        None => Err(Error::Internal(
            "nonempty supports always admit the full variable set as a cover".into(),
        )),
    }
}

/// Do <delta(F1)> and <delta(F2)> have the same minimal generators? Both
/// sides recomputed from scratch with a naive quadratic divisibility filter.
pub fn brute_min_equality(f1: &SupportSet, f2: &SupportSet) -> Result<bool> {
    if f1.n() != f2.n() {
        return Err(Error::Validation(format!(
            "cannot compare supports over {} and {} variables",
            f1.n(),
            f2.n()
        )));
    }
    let rows = |f: &SupportSet| -> Vec<Vec<u64>> {
        f.iter().map(|a| a.entries().to_vec()).collect()
    };
    Ok(naive_min(&derivatives(&rows(f1))) == naive_min(&derivatives(&rows(f2))))
}

fn derivatives(rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = Vec::new();
    for r in rows {
        for i in 0..r.len() {
            if r[i] > 0 {
                let mut d = r.clone();
                d[i] -= 1;
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    out
}

fn naive_min(rows: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let dominated = |a: &Vec<u64>| {
        rows.iter()
            .any(|b| b != a && b.iter().zip(a).all(|(x, y)| x <= y))
    };
    rows.iter().filter(|a| !dominated(a)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::matroid::build_cover;

    fn support(n: usize, rows: &[&[u64]]) -> SupportSet {
        SupportSet::from_rows(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn brute_rank_examples() {
        let k22 = build_cover(&support(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(brute_rank(&k22).unwrap(), 2);

        let whitney = build_cover(&support(3, &[&[2, 0, 0], &[0, 2, 1]]));
        assert_eq!(brute_rank(&whitney).unwrap(), 3);

        let deficient = build_cover(&support(2, &[&[2, 1], &[1, 2]]));
        assert_eq!(brute_rank(&deficient).unwrap(), 2);

        let edgeless = TransversalCover::from_parts(
            2,
            vec![Exponent::new(vec![1, 0]).unwrap()],
            &BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(brute_rank(&edgeless).unwrap(), 0);
    }

    #[test]
    fn brute_rank_guard() {
        let gens: Vec<Exponent> = (0..9)
            .map(|k| {
                let mut v = vec![0u64; 2];
                v[0] = k + 1;
                Exponent::new(v).unwrap()
            })
            .collect();
        let cover = TransversalCover::from_parts(2, gens, &BTreeSet::new()).unwrap();
        assert!(matches!(brute_rank(&cover), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn brute_min_cover_examples() {
        let (k, min) = brute_min_cover(3, &[set(&[0]), set(&[1, 2])]).unwrap();
        assert_eq!(k, 2);
        assert_eq!(min, vec![set(&[0, 1]), set(&[0, 2])]);

        let (k, min) = brute_min_cover(2, &[set(&[0]), set(&[1])]).unwrap();
        assert_eq!(k, 2);
        assert_eq!(min, vec![set(&[0, 1])]);

        let (k, min) =
            brute_min_cover(3, &[set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]).unwrap();
        assert_eq!(k, 2);
        assert_eq!(min, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
    }

    #[test]
    fn brute_min_cover_guards() {
        assert!(matches!(
            brute_min_cover(13, &[set(&[0])]),
            Err(Error::GuardExceeded(_))
        ));
        assert!(brute_min_cover(3, &[]).is_err());
        assert!(brute_min_cover(3, &[BTreeSet::new()]).is_err());
    }

    #[test]
    fn min_equality_examples() {
        let whitney = support(3, &[&[2, 0, 0], &[0, 2, 1]]);
        assert!(brute_min_equality(&whitney, &whitney).unwrap());

        // {(2,0),(1,1),(0,2)} and {(1,1)} generate the same Jacobian ideal.
        let f = support(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let fp = support(2, &[&[1, 1]]);
        assert!(brute_min_equality(&f, &fp).unwrap());

        let other = support(2, &[&[3, 0]]);
        assert!(!brute_min_equality(&f, &other).unwrap());
        assert!(brute_min_equality(&f, &support(3, &[&[1, 1, 0]])).is_err());
    }
}
