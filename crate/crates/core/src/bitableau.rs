//! Lexicographic bitableaux.
//!
//! A bitableau fills a partition diagram with pairs `(top, bottom)`, with
//! `top` in `1..=n` and `bottom` in `1..=m`, semistandard with respect to the
//! lexicographic order on pairs: weakly increasing along rows, strictly
//! increasing down columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, WeightVector};
use crate::tableau::{check_semistandard, Ssyt};

/// An entry `(top, bottom)`; the derived order is lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Pair {
    pub top: u32,
    pub bottom: u32,
}

impl Pair {
    pub const fn new(top: u32, bottom: u32) -> Self {
        Pair { top, bottom }
    }
}

impl From<(u32, u32)> for Pair {
    fn from((top, bottom): (u32, u32)) -> Self {
        Pair { top, bottom }
    }
}

impl From<Pair> for (u32, u32) {
    fn from(p: Pair) -> Self {
        (p.top, p.bottom)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.bottom)
    }
}

/// Order isomorphism `[n] x [m] -> [nm]`, `(i, j) -> (i-1)m + j`.
pub fn pair_to_int(pair: Pair, m: u32) -> Result<u32> {
    if pair.bottom == 0 || pair.bottom > m {
        return Err(Error::OutOfRange {
            value: pair.bottom,
            bound: m,
        });
    }
    if pair.top == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            bound: u32::MAX,
        });
    }
    Ok((pair.top - 1) * m + pair.bottom)
}

/// Inverse of [`pair_to_int`].
pub fn int_to_pair(x: u32, m: u32) -> Result<Pair> {
    if x == 0 || m == 0 {
        return Err(Error::OutOfRange {
            value: x,
            bound: u32::MAX,
        });
    }
    Ok(Pair {
        top: (x - 1) / m + 1,
        bottom: (x - 1) % m + 1,
    })
}

/// A lexicographic bitableau with entries in `[n] x [m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau", into = "RawBitableau")]
pub struct Bitableau {
    shape: Partition,
    rows: Vec<Vec<Pair>>,
    n: u32,
    m: u32,
}

#[derive(Serialize, Deserialize)]
struct RawBitableau {
    shape: Vec<usize>,
    rows: Vec<Vec<Pair>>,
    n: u32,
    m: u32,
}

impl TryFrom<RawBitableau> for Bitableau {
    type Error = Error;
    fn try_from(raw: RawBitableau) -> Result<Self> {
        let t = Bitableau::new(raw.rows, raw.n, raw.m)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match rows of shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<Bitableau> for RawBitableau {
    fn from(t: Bitableau) -> Self {
        RawBitableau {
            shape: t.shape.into(),
            rows: t.rows,
            n: t.n,
            m: t.m,
        }
    }
}

impl Bitableau {
    pub fn new(rows: Vec<Vec<Pair>>, n: u32, m: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("rows do not form a partition shape".into()))?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidTableau("empty row inside bitableau".into()));
        }
        for p in rows.iter().flatten() {
            if p.top == 0 || p.top > n {
                return Err(Error::OutOfRange {
                    value: p.top,
                    bound: n,
                });
            }
            if p.bottom == 0 || p.bottom > m {
                return Err(Error::OutOfRange {
                    value: p.bottom,
                    bound: m,
                });
            }
        }
        check_semistandard(&rows, |a, b| a <= b, |a, b| a < b).map_err(|(r, c)| {
            Error::InvalidTableau(format!("not lexicographically semistandard at ({r},{c})"))
        })?;
        Ok(Bitableau { shape, rows, n, m })
    }

    /// Builds from `(top, bottom)` tuples, taking `n` and `m` as the largest
    /// coordinates present.
    pub fn from_tuples(rows: &[Vec<(u32, u32)>]) -> Result<Self> {
        let n = rows.iter().flatten().map(|p| p.0).max().unwrap_or(1);
        let m = rows.iter().flatten().map(|p| p.1).max().unwrap_or(1);
        Self::with_bounds(rows, n, m)
    }

    pub fn with_bounds(rows: &[Vec<(u32, u32)>], n: u32, m: u32) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&p| Pair::from(p)).collect())
            .collect();
        Self::new(rows, n, m)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Pair>] {
        &self.rows
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Pair> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// `(a(T), b(T))`: multiplicities of top and bottom coordinates.
    pub fn weights(&self) -> (WeightVector, WeightVector) {
        (self.a_weight(), self.b_weight())
    }

    pub fn a_weight(&self) -> WeightVector {
        let mut a = vec![0; self.n as usize];
        for p in self.rows.iter().flatten() {
            a[p.top as usize - 1] += 1;
        }
        WeightVector(a)
    }

    pub fn b_weight(&self) -> WeightVector {
        let mut b = vec![0; self.m as usize];
        for p in self.rows.iter().flatten() {
            b[p.bottom as usize - 1] += 1;
        }
        WeightVector(b)
    }

    /// Entrywise `(i, j) -> (i-1)m + j`, giving a tableau over `[nm]`.
    pub fn to_ssyt(&self) -> Ssyt {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&p| pair_to_int(p, self.m).expect("validated"))
                    .collect()
            })
            .collect();
        Ssyt::new(rows, self.n * self.m).expect("pair_to_int is an order isomorphism")
    }

    /// Inverse of [`Bitableau::to_ssyt`].
    pub fn from_ssyt(t: &Ssyt, n: u32, m: u32) -> Result<Self> {
        let bound = n * m;
        let mut rows = Vec::with_capacity(t.rows().len());
        for row in t.rows() {
            let mut out = Vec::with_capacity(row.len());
            for &x in row {
                if x > bound {
                    return Err(Error::OutOfRange { value: x, bound });
                }
                out.push(int_to_pair(x, m)?);
            }
            rows.push(out);
        }
        Bitableau::new(rows, n, m)
    }

    /// Replaces one entry, re-validating the result.
    pub fn with_entry(&self, r: usize, c: usize, p: Pair) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows[r][c] = p;
        Bitableau::new(rows, self.n, self.m)
    }

    /// Same filling with different bounds.
    pub fn with_dims(&self, n: u32, m: u32) -> Result<Self> {
        Bitableau::new(self.rows.clone(), n, m)
    }

    /// All entries, row-major.
    pub fn entries(&self) -> impl Iterator<Item = Pair> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub(crate) fn from_trusted(rows: Vec<Vec<Pair>>, n: u32, m: u32) -> Self {
        let shape =
            Partition::new(rows.iter().map(Vec::len).collect()).expect("trusted rows form a shape");
        Bitableau { shape, rows, n, m }
    }

    /// Rows as `(top, bottom)` tuples.
    pub fn tuples(&self) -> Vec<Vec<(u32, u32)>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&p| p.into()).collect())
            .collect()
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for p in row {
                write!(f, "{}{}", p.top, p.bottom)?;
                if self.n > 9 || self.m > 9 {
                    write!(f, " ")?;
                }
            }
        }
        write!(f, "]")
    }
}

/// All lexicographic bitableaux of `shape` with entries in `[n] x [m]`, in
/// row-major lexicographic order of their fillings.
pub fn enumerate_bitableaux(shape: &Partition, n: u32, m: u32) -> Vec<Bitableau> {
    let mut out = Vec::new();
    fill_bitableaux(shape, n, m, None, &mut |rows| {
        out.push(Bitableau::from_trusted(rows.to_vec(), n, m))
    });
    out
}

/// Visits the rows of every bitableau of `shape` over `[n] x [m]` without
/// materialising them, in the order of [`enumerate_bitableaux`].
pub fn for_each_bitableau_filling(
    shape: &Partition,
    n: u32,
    m: u32,
    mut visit: impl FnMut(&[Vec<Pair>]),
) {
    fill_bitableaux(shape, n, m, None, &mut visit);
}

/// Bitableaux of `shape` with `a(T) = a` and `b(T) = b` exactly; the bounds
/// are `n = a.dim()` and `m = b.dim()`.
pub fn enumerate_bitableaux_with_weights(
    shape: &Partition,
    a: &WeightVector,
    b: &WeightVector,
) -> Vec<Bitableau> {
    let mut out = Vec::new();
    for_each_bitableau_with_weights(shape, a, b, |t| out.push(t.clone()));
    out
}

/// Visits every bitableau of `shape` with weights exactly `(a, b)`.
pub fn for_each_bitableau_with_weights(
    shape: &Partition,
    a: &WeightVector,
    b: &WeightVector,
    mut visit: impl FnMut(&Bitableau),
) {
    if a.total() != shape.size() || b.total() != shape.size() {
        return;
    }
    let (n, m) = (a.dim() as u32, b.dim() as u32);
    let counts = (a.entries().to_vec(), b.entries().to_vec());
    fill_bitableaux(shape, n, m, Some(counts), &mut |rows| {
        visit(&Bitableau::from_trusted(rows.to_vec(), n, m))
    });
}

type Counts = (Vec<usize>, Vec<usize>);

fn fill_bitableaux(
    shape: &Partition,
    n: u32,
    m: u32,
    mut counts: Option<Counts>,
    visit: &mut dyn FnMut(&[Vec<Pair>]),
) {
    let alphabet: Vec<Pair> = (1..=n)
        .flat_map(|i| (1..=m).map(move |j| Pair::new(i, j)))
        .collect();
    if shape.len() > alphabet.len() {
        return;
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<Pair>> = shape
        .parts()
        .iter()
        .map(|&l| vec![Pair::new(0, 0); l])
        .collect();
    // Position of each cell's chosen pair within `alphabet`.
    let mut index: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        alphabet: &[Pair],
        rows: &mut Vec<Vec<Pair>>,
        index: &mut Vec<Vec<usize>>,
        counts: &mut Option<Counts>,
        visit: &mut dyn FnMut(&[Vec<Pair>]),
    ) {
        if idx == cells.len() {
            visit(rows);
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 0;
        if c > 0 {
            lo = lo.max(index[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(index[r - 1][c] + 1);
        }
        let below = (r + 1..rows.len())
            .take_while(|&rr| rows[rr].len() > c)
            .count();
        if alphabet.len() < below + 1 {
            return;
        }
        for k in lo..alphabet.len() - below {
            let p = alphabet[k];
            if let Some((ca, cb)) = counts.as_mut() {
                let (ti, bi) = (p.top as usize - 1, p.bottom as usize - 1);
                if ca[ti] == 0 || cb[bi] == 0 {
                    continue;
                }
                ca[ti] -= 1;
                cb[bi] -= 1;
            }
            rows[r][c] = p;
            index[r][c] = k;
            rec(idx + 1, cells, alphabet, rows, index, counts, visit);
            if let Some((ca, cb)) = counts.as_mut() {
                ca[p.top as usize - 1] += 1;
                cb[p.bottom as usize - 1] += 1;
            }
        }
    }

    rec(
        0,
        &cells,
        &alphabet,
        &mut rows,
        &mut index,
        &mut counts,
        visit,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use crate::tableau::enumerate_ssyt;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Hook-content formula: |SSYT(shape, N)| = prod (N + c) / h.
    fn hook_content(shape: &Partition, big_n: i64) -> i64 {
        let conj = shape.conjugate();
        let (mut num, mut den) = (1i64, 1i64);
        for (r, c) in shape.cells() {
            num *= big_n + c as i64 - r as i64;
            den *= (shape.part(r) - c - 1 + conj.part(c) - r - 1 + 1) as i64;
        }
        num / den
    }

    fn example_3_2() -> Bitableau {
        Bitableau::from_tuples(&[vec![(1, 2), (2, 1)], vec![(2, 2), (2, 2)], vec![(3, 1)]])
            .unwrap()
            .with_dims(3, 3)
            .unwrap()
    }

    #[test]
    fn example_weights() {
        let (a, b) = example_3_2().weights();
        assert_eq!(a, WeightVector(vec![1, 3, 1]));
        assert_eq!(b, WeightVector(vec![2, 3, 0]));

        let empty = Bitableau::new(vec![], 2, 3).unwrap();
        assert_eq!(
            empty.weights(),
            (WeightVector(vec![0, 0]), WeightVector(vec![0, 0, 0]))
        );

        let col = Bitableau::with_bounds(
            &[(1, 1), (1, 2), (2, 1), (2, 3), (2, 4), (3, 1), (3, 3)].map(|x| vec![x]),
            3,
            4,
        )
        .unwrap();
        assert_eq!(
            col.weights(),
            (WeightVector(vec![2, 3, 2]), WeightVector(vec![3, 1, 2, 1]))
        );
    }

    #[test]
    fn rejects_non_lexicographic_fillings() {
        // T_2 decreases in its second row; T_3 repeats in its second column.
        assert!(Bitableau::from_tuples(&[
            vec![(1, 2), (2, 1)],
            vec![(3, 2), (2, 2)],
            vec![(3, 3)]
        ])
        .is_err());
        assert!(Bitableau::from_tuples(&[
            vec![(1, 2), (2, 2)],
            vec![(2, 2), (2, 2)],
            vec![(3, 1)]
        ])
        .is_err());
        assert!(Bitableau::with_bounds(&[vec![(1, 3)]], 1, 2).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_bitableaux(&p(&[1]), 2, 2).len(), 4);
        assert_eq!(hook_content(&p(&[2, 2]), 4), 20);
        assert_eq!(enumerate_bitableaux(&p(&[2, 2]), 2, 2).len(), 20);
        assert!(enumerate_bitableaux(&p(&[1, 1, 1]), 1, 2).is_empty());
    }

    #[test]
    fn counts_match_ssyt_over_product_alphabet() {
        for k in 0..=6 {
            for lam in enumerate_partitions(k, None) {
                for n in 1..=3 {
                    for m in 1..=3 {
                        let bt = enumerate_bitableaux(&lam, n, m);
                        assert_eq!(bt.len(), enumerate_ssyt(&lam, n * m).len(), "{lam} {n} {m}");
                        if k <= 4 {
                            assert_eq!(bt.len() as i64, hook_content(&lam, (n * m) as i64));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_sums_and_round_trip() {
        for k in 0..=4 {
            for lam in enumerate_partitions(k, None) {
                for t in enumerate_bitableaux(&lam, 2, 3) {
                    let (a, b) = t.weights();
                    assert_eq!(a.total(), k);
                    assert_eq!(b.total(), k);
                    let s = t.to_ssyt();
                    assert_eq!(Bitableau::from_ssyt(&s, 2, 3).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn pair_encoding() {
        assert_eq!(pair_to_int(Pair::new(1, 1), 2).unwrap(), 1);
        assert_eq!(pair_to_int(Pair::new(3, 2), 2).unwrap(), 6);
        assert_eq!(pair_to_int(Pair::new(2, 1), 3).unwrap(), 4);
        assert!(pair_to_int(Pair::new(1, 3), 2).is_err());
        for m in 1..=4 {
            let pairs: Vec<Pair> = (1..=3)
                .flat_map(|i| (1..=m).map(move |j| Pair::new(i, j)))
                .collect();
            let ints: Vec<u32> = pairs.iter().map(|&q| pair_to_int(q, m).unwrap()).collect();
            assert_eq!(ints, (1..=3 * m).collect::<Vec<_>>());
            for (&q, &x) in pairs.iter().zip(&ints) {
                assert_eq!(int_to_pair(x, m).unwrap(), q);
            }
        }
    }

    #[test]
    fn section_4_3_identification() {
        let t = Bitableau::from_tuples(&[
            vec![(1, 1), (1, 1), (1, 1), (1, 2), (2, 1), (3, 1), (3, 1)],
            vec![(1, 2), (2, 1), (2, 1), (2, 2), (3, 1), (3, 2)],
            vec![(2, 1), (2, 2), (3, 1), (3, 1), (3, 2)],
        ])
        .unwrap();
        let expected = vec![
            vec![1, 1, 1, 2, 3, 5, 5],
            vec![2, 3, 3, 4, 5, 6],
            vec![3, 4, 5, 5, 6],
        ];
        assert_eq!(t.to_ssyt().rows(), expected.as_slice());
        let back = Bitableau::from_ssyt(&Ssyt::new(expected, 6).unwrap(), 3, 2).unwrap();
        assert_eq!(back, t);

        let single = Bitableau::with_bounds(&[vec![(1, 1)]], 1, 2).unwrap();
        assert_eq!(single.to_ssyt().rows(), &[vec![1]]);
        let row = Bitableau::with_bounds(&[vec![(1, 2), (2, 1)]], 2, 2).unwrap();
        assert_eq!(row.to_ssyt().rows(), &[vec![2, 3]]);
        assert!(Bitableau::from_ssyt(&Ssyt::new(vec![vec![7]], 7).unwrap(), 3, 2).is_err());
    }

    #[test]
    fn weighted_enumeration_matches_filter() {
        let lam = p(&[3, 2]);
        let a = WeightVector(vec![3, 2]);
        let b = WeightVector(vec![2, 2, 1]);
        let filtered: Vec<Bitableau> = enumerate_bitableaux(&lam, 2, 3)
            .into_iter()
            .filter(|t| t.weights() == (a.clone(), b.clone()))
            .collect();
        assert_eq!(enumerate_bitableaux_with_weights(&lam, &a, &b), filtered);
    }

    #[test]
    fn json_schema() {
        let t = Bitableau::with_bounds(&[vec![(1, 2), (2, 1)]], 2, 2).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2],"rows":[[[1,2],[2,1]]],"n":2,"m":2}"#);
        assert_eq!(serde_json::from_str::<Bitableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<Bitableau>(
            r#"{"shape":[2],"rows":[[[2,1],[1,2]]],"n":2,"m":2}"#
        )
        .is_err());
    }
}
