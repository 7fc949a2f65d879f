//! The `gl_m` crystal on bitableaux.
//!
//! The operators act on bottom entries and never touch top entries, so they
//! preserve the `a`-weight. They are computed by bracketing the grouped
//! reading word (`w` or `w'`) and changing the bottom entry of the box the
//! selected letter was read from. Grouping by top entry is the same as
//! cutting the bitableau into one skew tableau per top value and tensoring
//! the pieces; [`skew_decomposition`] exposes that view as a cross-check.

use serde::{Deserialize, Serialize};

use crate::bitableau::{enumerate_bitableaux, for_each_bitableau_with_weights, Bitableau, Pair};
use crate::crystal::{CrystalGraph, CrystalVertex};
use crate::error::{Error, Result};
use crate::partition::{Partition, WeightVector};
use crate::tableau::SkewSsyt;
use crate::word::{
    crystal_position, is_yamanouchi_letters, tracked_reading_word, Direction, ReadingMethod,
};

/// Which grouped reading word drives the operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// Top groups in ascending order.
    #[default]
    W,
    /// Top groups in descending order.
    WPrime,
}

impl Convention {
    pub fn method(self) -> ReadingMethod {
        match self {
            Convention::W => ReadingMethod::W,
            Convention::WPrime => ReadingMethod::WPrime,
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "w" => Ok(Convention::W),
            "w_prime" | "w'" => Ok(Convention::WPrime),
            other => Err(Error::Unsupported(format!("unknown convention {other:?}"))),
        }
    }
}

impl CrystalVertex for Bitableau {
    fn weight_a(&self) -> Option<WeightVector> {
        Some(self.a_weight())
    }

    fn weight_b(&self) -> WeightVector {
        self.b_weight()
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

/// `f_i` or `e_i` of the `gl_m` crystal, `1 <= i < m`.
///
/// # Panics
///
/// If the modified filling is not a lexicographic bitableau. The
/// construction guarantees it is, so a panic here is a genuine bug.
pub fn crystal_op_bitableau(
    t: &Bitableau,
    i: u32,
    dir: Direction,
    conv: Convention,
) -> Option<Bitableau> {
    if i == 0 || i >= t.m() {
        return None;
    }
    let tw = tracked_reading_word(t, conv.method()).expect("grouped methods are defined");
    let pos = crystal_position(tw.word.letters(), i, dir)?;
    let (r, c) = tw.cells[pos];
    let old = t.get(r, c).unwrap();
    let bottom = match dir {
        Direction::Lower => i + 1,
        Direction::Raise => i,
    };
    match t.with_entry(r, c, Pair::new(old.top, bottom)) {
        Ok(out) => Some(out),
        Err(e) => panic!("gl_m operator left the set of bitableaux on {t} at ({r},{c}): {e}"),
    }
}

/// Highest weight for the `gl_m` crystal: the reading word is Yamanouchi.
pub fn is_highest_weight(t: &Bitableau, conv: Convention) -> bool {
    let tw = tracked_reading_word(t, conv.method()).expect("grouped methods are defined");
    is_yamanouchi_letters(tw.word.letters())
}

/// Number of bitableaux of shape `lam` with `a(T) = mu`, `b(T) = nu` and
/// Yamanouchi reading word under `conv`.
pub fn count_d(lam: &Partition, mu: &Partition, nu: &Partition, conv: Convention) -> Result<u64> {
    if lam.size() != mu.size() || lam.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lam}|, |{mu}|, |{nu}| differ"
        )));
    }
    let a = mu.to_weight(mu.len().max(1)).unwrap();
    let b = nu.to_weight(nu.len().max(1)).unwrap();
    Ok(count_highest_weight_with_weights(lam, &a, &b, conv))
}

/// Highest-weight bitableaux with the given `(a, b)` weight vectors.
pub fn count_highest_weight_with_weights(
    lam: &Partition,
    a: &WeightVector,
    b: &WeightVector,
    conv: Convention,
) -> u64 {
    let mut count = 0u64;
    for_each_bitableau_with_weights(lam, a, b, |t| {
        if is_highest_weight(t, conv) {
            count = count.checked_add(1).expect("count overflow");
        }
    });
    count
}

/// Number of semistandard tableaux of `shape` over `[big_n]`, by the
/// hook-content formula; fails instead of wrapping.
pub fn ssyt_count(shape: &Partition, big_n: u64) -> Result<u128> {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, c) in shape.cells() {
        let factor = (big_n + c as u64).checked_sub(r as u64);
        let Some(factor) = factor else { return Ok(0) };
        if factor == 0 {
            return Ok(0);
        }
        num = num
            .checked_mul(factor as u128)
            .ok_or(Error::Overflow("hook-content numerator"))?;
        let hook = (shape.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
        den = den
            .checked_mul(hook as u128)
            .ok_or(Error::Overflow("hook-content denominator"))?;
    }
    Ok(num / den)
}

/// Default vertex budget for graph construction.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The full `gl_m` crystal on `B_lam(n, m)`.
pub fn full_crystal(
    lam: &Partition,
    n: u32,
    m: u32,
    conv: Convention,
    cap: usize,
) -> Result<CrystalGraph<Bitableau>> {
    let needed = ssyt_count(lam, n as u64 * m as u64)?;
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            needed: needed.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    let vertices = enumerate_bitableaux(lam, n, m);
    Ok(CrystalGraph::from_vertices(vertices, 1..m, |t, i| {
        crystal_op_bitableau(t, i, Direction::Lower, conv)
    }))
}

/// One skew tableau of bottom entries per top value present, in ascending
/// top order.
pub fn skew_decomposition(t: &Bitableau) -> Vec<(u32, SkewSsyt)> {
    let mut out = Vec::new();
    for top in 1..=t.n() {
        let outer_parts: Vec<usize> = t
            .rows()
            .iter()
            .map(|row| row.iter().filter(|p| p.top <= top).count())
            .collect();
        let inner_parts: Vec<usize> = t
            .rows()
            .iter()
            .map(|row| row.iter().filter(|p| p.top < top).count())
            .collect();
        if outer_parts == inner_parts {
            continue;
        }
        let outer = Partition::new(outer_parts.clone()).expect("top <= k cells form a partition");
        let inner = Partition::new(inner_parts.clone()).expect("top < k cells form a partition");
        let rows: Vec<Vec<Option<u32>>> = (0..outer.len())
            .map(|r| {
                (0..outer_parts[r])
                    .map(|c| {
                        if c < inner_parts[r] {
                            None
                        } else {
                            Some(t.get(r, c).unwrap().bottom)
                        }
                    })
                    .collect()
            })
            .collect();
        out.push((
            top,
            SkewSsyt::new(outer, inner, rows)
                .expect("each top class is a semistandard skew tableau"),
        ));
    }
    out
}
