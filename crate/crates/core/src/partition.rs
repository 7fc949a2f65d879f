//! Integer partitions and weight vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so `parts().len()` is the number of
/// nonzero parts. The empty partition is the unique partition of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Validates `parts`. Trailing zeros are stripped; any other zero, or an
    /// increase anywhere, is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    /// Single-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![k],
                size: k,
            }
        }
    }

    /// Single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition {
            parts: vec![1; k],
            size: k,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts: Vec<usize> = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition {
            parts,
            size: self.size,
        }
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size != other.size {
            return false;
        }
        let (mut s, mut t) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        true
    }

    /// The partition padded to a weight vector of length `dim`, if it fits.
    pub fn to_weight(&self, dim: usize) -> Option<WeightVector> {
        if self.len() > dim {
            return None;
        }
        let mut entries = self.parts.clone();
        entries.resize(dim, 0);
        Some(WeightVector(entries))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list such as `4,3` or `3,2,2`; the empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Json(format!("cannot parse partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// A multiplicity vector of fixed declared length.
///
/// Unlike [`Partition`] the entries are stored at full length, trailing
/// zeros included, and need not be decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn zeros(dim: usize) -> Self {
        WeightVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// The partition this vector equals after stripping trailing zeros, if
    /// the entries are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// Compares against a partition, ignoring trailing zeros on either side.
    pub fn matches_partition(&self, p: &Partition) -> bool {
        let nonzero = self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        self.0[..nonzero] == *p.parts()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k`, optionally with at most `max_length` parts, in
/// reverse-lexicographic order (`(k)` first).
pub fn enumerate_partitions(k: usize, max_length: Option<usize>) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(cur.clone()).expect("generated partitions are valid"));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        k,
        k,
        max_length.unwrap_or(usize::MAX),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Number of parts of each size, i.e. `m_i` with `ρ = (1^{m_1} 2^{m_2} ...)`.
pub(crate) fn multiplicities(p: &Partition) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in p.parts() {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Brute force: every weakly decreasing sequence of positive integers
    /// with sum `k`, found by filtering all compositions.
    fn brute_partitions(k: usize, max_len: Option<usize>) -> Vec<Vec<usize>> {
        fn compositions(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=k {
                for mut rest in compositions(k - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let mut v: Vec<Vec<usize>> = compositions(k)
            .into_iter()
            .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
            .filter(|c| max_len.is_none_or(|m| c.len() <= m))
            .collect();
        v.sort();
        v.reverse();
        v
    }

    #[test]
    fn partitions_of_zero_and_four() {
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = enumerate_partitions(4, None)
            .into_iter()
            .map(Into::into)
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(four, brute_partitions(4, None));
    }

    #[test]
    fn partitions_with_length_bound() {
        let got: Vec<Vec<usize>> = enumerate_partitions(3, Some(2))
            .into_iter()
            .map(Into::into)
            .collect();
        assert_eq!(got, vec![vec![3], vec![2, 1]]);
        for k in 0..=9 {
            for l in 1..=4 {
                let got: Vec<Vec<usize>> = enumerate_partitions(k, Some(l))
                    .into_iter()
                    .map(Into::into)
                    .collect();
                assert_eq!(got, brute_partitions(k, Some(l)));
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for k in 0..=12 {
            for lam in enumerate_partitions(k, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!("4,3".parse::<Partition>().unwrap(), p(&[4, 3]));
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn weight_normalisation() {
        let w = WeightVector(vec![2, 3, 0]);
        assert!(!w.matches_partition(&p(&[3, 2])));
        assert!(w.as_partition().is_none());
        assert!(WeightVector(vec![3, 2, 0]).matches_partition(&p(&[3, 2])));
        assert_eq!(p(&[3, 2]).to_weight(3), Some(WeightVector(vec![3, 2, 0])));
        assert_eq!(p(&[3, 2, 1]).to_weight(2), None);
    }
}
