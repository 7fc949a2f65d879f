//! Kronecker tableaux on bitableaux with top entries in `{1, 2}`, and the
//! map `phi` that moves one top entry from 1 to 2.
//!
//! Everything here lives on `B'_lam(2, m)`: bitableaux whose `w'` reading
//! word is Yamanouchi. Inputs outside that set are rejected.

use serde::{Deserialize, Serialize};

use crate::bitableau::{for_each_bitableau_with_weights, Bitableau, Pair};
use crate::error::{Error, Result};
use crate::glm_crystal::{is_highest_weight, Convention};
use crate::partition::{enumerate_partitions, Partition, WeightVector};
use crate::symfunc::kronecker_coefficient;

/// One clause of the Kronecker tableau condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `alpha_1 = alpha_2`.
    I,
    /// Number of `(2,1)` boxes in the second row is `alpha_1 - alpha_2`.
    IIi,
    /// Number of `(2,2)` boxes in the first row is `alpha_1 - alpha_2`.
    IIii,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KroneckerVerdict {
    pub is_kronecker: bool,
    /// Shape of the boxes with top entry 1.
    pub alpha: Partition,
    pub failed_conditions: Vec<Condition>,
}

/// Checks `n <= 2` and Yamanouchi `w'`, returning the tableau with `n = 2`.
pub fn check_b_prime(t: &Bitableau) -> Result<Bitableau> {
    if t.n() > 2 {
        return Err(Error::Unsupported(format!(
            "top entries must lie in {{1,2}}, got n = {}",
            t.n()
        )));
    }
    let t = t.with_dims(2, t.m())?;
    if !is_highest_weight(&t, Convention::WPrime) {
        return Err(Error::NotHighestWeight(format!(
            "w'({t}) is not Yamanouchi"
        )));
    }
    Ok(t)
}

/// Shape of the top-1 boxes, which sit at the left end of each row.
pub fn alpha(t: &Bitableau) -> Partition {
    Partition::new(
        t.rows()
            .iter()
            .map(|row| row.iter().filter(|p| p.top == 1).count())
            .collect(),
    )
    .expect("top-1 boxes form a partition shape")
}

fn count_in_row(t: &Bitableau, r: usize, pair: Pair) -> usize {
    t.rows()
        .get(r)
        .map_or(0, |row| row.iter().filter(|&&p| p == pair).count())
}

pub fn is_kronecker_tableau(t: &Bitableau) -> Result<KroneckerVerdict> {
    let t = check_b_prime(t)?;
    let alpha = alpha(&t);
    let gap = alpha.part(0) - alpha.part(1);
    // Both clauses of (II) presuppose alpha_1 > alpha_2.
    let mut failed = Vec::new();
    if gap != 0 {
        failed.push(Condition::I);
    }
    if gap == 0 || count_in_row(&t, 1, Pair::new(2, 1)) != gap {
        failed.push(Condition::IIi);
    }
    if gap == 0 || count_in_row(&t, 0, Pair::new(2, 2)) != gap {
        failed.push(Condition::IIii);
    }
    let is_kronecker = failed.len() < 3;
    Ok(KroneckerVerdict {
        is_kronecker,
        alpha,
        failed_conditions: failed,
    })
}

/// Changes the rightmost `(1, a)` of the first row to `(2, a)`; `None` if
/// there is no such box or the result leaves `B'_lam(2, m)`.
pub fn phi(t: &Bitableau) -> Result<Option<Bitableau>> {
    let t = check_b_prime(t)?;
    let Some(first) = t.rows().first() else {
        return Ok(None);
    };
    let Some(c) = first.iter().rposition(|p| p.top == 1) else {
        return Ok(None);
    };
    let a = first[c].bottom;
    let Ok(out) = t.with_entry(0, c, Pair::new(2, a)) else {
        return Ok(None);
    };
    Ok(is_highest_weight(&out, Convention::WPrime).then_some(out))
}

/// Elements of `B'_lam(2, m)` with `a(T) = a` and `b(T) = nu`, where
/// `m = len(nu)`.
pub fn b_prime_with_weights(lam: &Partition, a: (usize, usize), nu: &Partition) -> Vec<Bitableau> {
    let aw = WeightVector(vec![a.0, a.1]);
    let bw = nu.to_weight(nu.len().max(1)).unwrap();
    let mut out = Vec::new();
    for_each_bitableau_with_weights(lam, &aw, &bw, |t| {
        if is_highest_weight(t, Convention::WPrime) {
            out.push(t.clone());
        }
    });
    out
}

/// Kronecker tableaux of shape `lam` with `a(T) = (p, |lam| - p)` and
/// `b(T) = nu`.
pub fn kronecker_tableaux(lam: &Partition, p: usize, nu: &Partition) -> Result<Vec<Bitableau>> {
    let k = lam.size();
    if nu.size() != k {
        return Err(Error::SizeMismatch(format!("|{lam}| != |{nu}|")));
    }
    if p > k {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in b_prime_with_weights(lam, (p, k - p), nu) {
        if is_kronecker_tableau(&t)?.is_kronecker {
            out.push(t);
        }
    }
    Ok(out)
}

pub fn count_kronecker_tableaux(lam: &Partition, p: usize, nu: &Partition) -> Result<u64> {
    Ok(kronecker_tableaux(lam, p, nu)?.len() as u64)
}

/// Whether `lam_1 >= 2p - 1`, where the count is expected to equal `g`.
pub fn in_equality_regime(lam: &Partition, p: usize) -> bool {
    lam.part(0) + 1 >= 2 * p
}

/// One line of the count-versus-coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerRow {
    pub lam: Partition,
    pub p: usize,
    pub nu: Partition,
    pub count: u64,
    pub g: u64,
    pub regime: bool,
}

impl KroneckerRow {
    /// Equality inside the regime, `count >= g` outside it.
    pub fn holds(&self) -> bool {
        if self.regime {
            self.count == self.g
        } else {
            self.count >= self.g
        }
    }
}

/// Count and `g(lam, (k-p, p), nu)` for every `lam, nu` of size `k` and
/// every `p <= k / 2`.
pub fn compare_with_oracle(k: usize) -> Result<Vec<KroneckerRow>> {
    let parts = enumerate_partitions(k, None);
    let mut rows = Vec::new();
    for lam in &parts {
        for p in 0..=k / 2 {
            let two_row = Partition::new(vec![k - p, p])?;
            for nu in &parts {
                rows.push(KroneckerRow {
                    lam: lam.clone(),
                    p,
                    nu: nu.clone(),
                    count: count_kronecker_tableaux(lam, p, nu)?,
                    g: kronecker_coefficient(lam, &two_row, nu)?,
                    regime: in_equality_regime(lam, p),
                });
            }
        }
    }
    Ok(rows)
}

/// Where a lowering `f^1` extending `phi` would have to act at one weight:
/// the Kronecker tableaux at `a = (p, k - p)`, the possible targets at
/// `a = (p - 1, k - p + 1)`, and how many sources exceed `g`. No choice is
/// made between the sources.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoweringCandidates {
    pub sources: Vec<Bitableau>,
    pub targets: Vec<Bitableau>,
    pub g: u64,
    /// `sources.len() - g`, the number of sources that cannot be lowest weight.
    pub excess: u64,
}

pub fn lowering_candidates(
    lam: &Partition,
    p: usize,
    nu: &Partition,
) -> Result<LoweringCandidates> {
    let k = lam.size();
    if p == 0 || p > k {
        return Err(Error::Unsupported(format!("p = {p} must lie in 1..={k}")));
    }
    let sources = kronecker_tableaux(lam, p, nu)?;
    let targets = b_prime_with_weights(lam, (p - 1, k - p + 1), nu);
    let two_row = Partition::new(vec![(k - p).max(p), (k - p).min(p)])?;
    let g = kronecker_coefficient(lam, &two_row, nu)?;
    Ok(LoweringCandidates {
        excess: (sources.len() as u64).saturating_sub(g),
        sources,
        targets,
        g,
    })
}

/// Elements of `B'_lam(2, m)` where `phi(T) = None` and being a Kronecker
/// tableau disagree, over all `a`-weights.
pub fn phi_characterization_failures(lam: &Partition, m: u32) -> Result<Vec<Bitableau>> {
    let k = lam.size();
    let mut failures = Vec::new();
    for nu in enumerate_partitions(k, Some(m as usize)) {
        for p in 0..=k {
            for t in b_prime_with_weights(lam, (p, k - p), &nu) {
                let t = t.with_dims(2, m)?;
                if phi(&t)?.is_none() != is_kronecker_tableau(&t)?.is_kronecker {
                    failures.push(t);
                }
            }
        }
    }
    Ok(failures)
}
