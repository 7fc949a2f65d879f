//! Semistandard Young tableaux, straight and skew.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, WeightVector};

/// A semistandard Young tableau with entries in `1..=max_entry`.
///
/// Rows weakly increase left to right, columns strictly increase top to
/// bottom. Rows are stored top row first (English convention).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSsyt", into = "RawSsyt")]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    max_entry: u32,
}

#[derive(Serialize, Deserialize)]
struct RawSsyt {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
    n: u32,
}

impl TryFrom<RawSsyt> for Ssyt {
    type Error = Error;
    fn try_from(raw: RawSsyt) -> Result<Self> {
        let t = Ssyt::new(raw.rows, raw.n)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match rows of shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<Ssyt> for RawSsyt {
    fn from(t: Ssyt) -> Self {
        RawSsyt {
            shape: t.shape.into(),
            rows: t.rows,
            n: t.max_entry,
        }
    }
}

impl Ssyt {
    /// Builds a tableau from its rows, validating shape, bounds and
    /// semistandardness.
    pub fn new(rows: Vec<Vec<u32>>, max_entry: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::InvalidTableau(format!("rows {rows:?} do not form a partition shape"))
        })?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidTableau("empty row inside tableau".into()));
        }
        for &x in rows.iter().flatten() {
            if x == 0 || x > max_entry {
                return Err(Error::OutOfRange {
                    value: x,
                    bound: max_entry,
                });
            }
        }
        check_semistandard(&rows, |a, b| a <= b, |a, b| a < b).map_err(|(r, c)| {
            Error::InvalidTableau(format!("rows {rows:?} not semistandard at ({r},{c})"))
        })?;
        Ok(Ssyt {
            shape,
            rows,
            max_entry,
        })
    }

    /// Like [`Ssyt::new`] with the alphabet bound set to the largest entry.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.iter().flatten().copied().max().unwrap_or(1);
        Self::new(rows, n)
    }

    pub fn empty(max_entry: u32) -> Self {
        Ssyt {
            shape: Partition::empty(),
            rows: Vec::new(),
            max_entry,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// Same tableau with a different (large enough) alphabet bound.
    pub fn with_max_entry(&self, max_entry: u32) -> Result<Self> {
        Ssyt::new(self.rows.clone(), max_entry)
    }

    /// Content vector of length `max_entry`.
    pub fn content(&self) -> WeightVector {
        let mut w = vec![0; self.max_entry as usize];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        WeightVector(w)
    }

    /// Row reading word: bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Cells in row-reading order, matching [`Ssyt::reading_word`].
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c)))
            .collect()
    }

    /// Replaces one entry, re-validating the result.
    pub fn with_entry(&self, r: usize, c: usize, value: u32) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows[r][c] = value;
        Ssyt::new(rows, self.max_entry)
    }

    /// Transposed filling as raw rows (not necessarily semistandard).
    pub fn transpose_rows(&self) -> Vec<Vec<u32>> {
        transpose(&self.rows)
    }

    pub(crate) fn from_trusted(rows: Vec<Vec<u32>>, max_entry: u32) -> Self {
        let shape =
            Partition::new(rows.iter().map(Vec::len).collect()).expect("trusted rows form a shape");
        Ssyt {
            shape,
            rows,
            max_entry,
        }
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

pub(crate) fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<u32>]) -> fmt::Result {
    write!(f, "[")?;
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for (j, x) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

/// Transposes a filling of a partition shape.
pub fn transpose<T: Copy>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| {
            rows.iter()
                .take_while(|row| row.len() > c)
                .map(|row| row[c])
                .collect()
        })
        .collect()
}

/// Checks row and column relations on a straight-shape filling, returning the
/// first offending cell.
pub(crate) fn check_semistandard<T>(
    rows: &[Vec<T>],
    row_ok: impl Fn(&T, &T) -> bool,
    col_ok: impl Fn(&T, &T) -> bool,
) -> std::result::Result<(), (usize, usize)> {
    for (r, row) in rows.iter().enumerate() {
        for c in 0..row.len() {
            if c > 0 && !row_ok(&row[c - 1], &row[c]) {
                return Err((r, c));
            }
            if r > 0 && !col_ok(&rows[r - 1][c], &row[c]) {
                return Err((r, c));
            }
        }
    }
    Ok(())
}

/// A semistandard filling of a skew shape `outer / inner`.
///
/// Each stored row has `outer[r]` slots; the first `inner[r]` are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewSsyt {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Option<u32>>>,
}

impl SkewSsyt {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidTableau(format!(
                "inner shape {inner} not contained in {outer}"
            )));
        }
        if rows.len() != outer.len() {
            return Err(Error::InvalidTableau(
                "row count differs from outer shape".into(),
            ));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != outer.part(r) {
                return Err(Error::InvalidTableau(format!("row {r} has wrong length")));
            }
            for (c, x) in row.iter().enumerate() {
                match (c < inner.part(r), x) {
                    (true, None) => {}
                    (false, Some(v)) if *v >= 1 => {}
                    _ => return Err(Error::InvalidTableau(format!("bad cell ({r},{c})"))),
                }
            }
        }
        let t = SkewSsyt { outer, inner, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(
                "skew filling is not semistandard".into(),
            ));
        }
        Ok(t)
    }

    /// A straight-shape tableau viewed as a skew tableau with empty inner shape.
    pub fn from_straight(t: &Ssyt) -> Self {
        SkewSsyt {
            outer: t.shape().clone(),
            inner: Partition::empty(),
            rows: t
                .rows()
                .iter()
                .map(|row| row.iter().map(|&x| Some(x)).collect())
                .collect(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows
            .get(r)
            .and_then(|row| row.get(c))
            .copied()
            .flatten()
    }

    fn is_semistandard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..row.len() {
                let Some(x) = row[c] else { continue };
                if c > 0 {
                    if let Some(left) = row[c - 1] {
                        if left > x {
                            return false;
                        }
                    }
                }
                if r > 0 {
                    if let Some(up) = self.get(r - 1, c) {
                        if up >= x {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Row reading word over filled cells: bottom row first, left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .rev()
            .flatten()
            .filter_map(|x| *x)
            .collect()
    }

    /// Filled cell count.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Straight-shape tableau if the inner shape is empty.
    pub fn to_straight(&self, max_entry: u32) -> Result<Ssyt> {
        if !self.inner.is_empty() {
            return Err(Error::InvalidTableau(
                "skew tableau has nonempty inner shape".into(),
            ));
        }
        Ssyt::new(
            self.rows
                .iter()
                .map(|row| row.iter().map(|x| x.unwrap()).collect())
                .collect(),
            max_entry,
        )
    }

    pub(crate) fn from_parts_unchecked(
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<Option<u32>>>,
    ) -> Self {
        SkewSsyt { outer, inner, rows }
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=n`, in row-major
/// lexicographic order of their fillings.
pub fn enumerate_ssyt(shape: &Partition, n: u32) -> Vec<Ssyt> {
    let mut out = Vec::new();
    fill_ssyt(shape, n, None, |rows| {
        out.push(Ssyt::from_trusted(rows.to_vec(), n))
    });
    out
}

/// Visits the rows of every semistandard tableau of `shape` over `1..=n`
/// without materialising them, in the order of [`enumerate_ssyt`].
pub fn for_each_ssyt_filling(shape: &Partition, n: u32, visit: impl FnMut(&[Vec<u32>])) {
    fill_ssyt(shape, n, None, visit);
}

/// Semistandard tableaux of `shape` with content exactly `content`
/// (entry `i` appears `content[i-1]` times).
pub fn enumerate_ssyt_with_content(shape: &Partition, content: &WeightVector) -> Vec<Ssyt> {
    let n = content.dim() as u32;
    if content.total() != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    fill_ssyt(shape, n, Some(content.entries()), |rows| {
        out.push(Ssyt::from_trusted(rows.to_vec(), n))
    });
    out
}

/// Number of semistandard tableaux of `shape` and content `content`.
pub fn count_ssyt_with_content(shape: &Partition, content: &WeightVector) -> u64 {
    if content.total() != shape.size() {
        return 0;
    }
    let mut count = 0u64;
    fill_ssyt(shape, content.dim() as u32, Some(content.entries()), |_| {
        count += 1
    });
    count
}

fn fill_ssyt(
    shape: &Partition,
    n: u32,
    content: Option<&[usize]>,
    mut visit: impl FnMut(&[Vec<u32>]),
) {
    if shape.len() > n as usize {
        return;
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut remaining: Option<Vec<usize>> = content.map(<[usize]>::to_vec);

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        n: u32,
        remaining: &mut Option<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if idx == cells.len() {
            visit(rows);
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        // Column below still needs room for strictly larger entries.
        let below = cells_below(rows.len(), rows, r, c) as u32;
        if n < below {
            return;
        }
        for x in lo..=n - below {
            if let Some(rem) = remaining.as_mut() {
                if rem[x as usize - 1] == 0 {
                    continue;
                }
                rem[x as usize - 1] -= 1;
            }
            rows[r][c] = x;
            rec(idx + 1, cells, rows, n, remaining, visit);
            if let Some(rem) = remaining.as_mut() {
                rem[x as usize - 1] += 1;
            }
        }
        rows[r][c] = 0;
    }

    rec(0, &cells, &mut rows, n, &mut remaining, &mut visit);
}

fn cells_below<T>(nrows: usize, rows: &[Vec<T>], r: usize, c: usize) -> usize {
    (r + 1..nrows).take_while(|&rr| rows[rr].len() > c).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Brute force: all n^|shape| fillings, filtered for semistandardness.
    fn brute_count(shape: &Partition, n: u32) -> usize {
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let total = (n as usize).pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
            let mut x = code;
            for &(r, c) in &cells {
                rows[r][c] = (x % n as usize) as u32 + 1;
                x /= n as usize;
            }
            if check_semistandard(&rows, |a, b| a <= b, |a, b| a < b).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 3).len(), 3);
        let t = enumerate_ssyt(&p(&[2, 2]), 2);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows(), &[vec![1, 1], vec![2, 2]]);
        assert_eq!(brute_count(&p(&[2, 1]), 3), 8);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for k in 0..=5 {
            for lam in enumerate_partitions(k, None) {
                for n in 1..=3 {
                    assert_eq!(
                        enumerate_ssyt(&lam, n).len(),
                        brute_count(&lam, n),
                        "{lam} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_row_major_lex() {
        let all = enumerate_ssyt(&p(&[3, 2]), 3);
        let keys: Vec<Vec<u32>> = all.iter().map(|t| t.rows().concat()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn content_filter() {
        let w = WeightVector(vec![1, 1, 1]);
        assert_eq!(count_ssyt_with_content(&p(&[2, 1]), &w), 2);
        let via_filter = enumerate_ssyt(&p(&[3, 2]), 3)
            .into_iter()
            .filter(|t| t.content() == WeightVector(vec![2, 2, 1]))
            .count();
        assert_eq!(
            enumerate_ssyt_with_content(&p(&[3, 2]), &WeightVector(vec![2, 2, 1])).len(),
            via_filter
        );
    }

    #[test]
    fn validation_and_json() {
        assert!(Ssyt::new(vec![vec![2, 1]], 2).is_err());
        assert!(Ssyt::new(vec![vec![1, 1], vec![1]], 2).is_err());
        assert!(Ssyt::new(vec![vec![1], vec![2, 3]], 3).is_err());
        assert!(Ssyt::new(vec![vec![1, 4]], 3).is_err());
        let t = Ssyt::new(vec![vec![1, 1, 2], vec![2, 3]], 3).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[3,2],"rows":[[1,1,2],[2,3]],"n":3}"#);
        assert_eq!(serde_json::from_str::<Ssyt>(&s).unwrap(), t);
        assert!(
            serde_json::from_str::<Ssyt>(r#"{"shape":[3,2],"rows":[[1,1,2],[1,3]],"n":3}"#)
                .is_err()
        );
    }

    #[test]
    fn skew_reading_word_is_position_independent() {
        // Cells (0,2),(0,3),(1,1) filled inside outer (4,2) / inner (2,1).
        let skew = SkewSsyt::new(
            p(&[4, 2]),
            p(&[2, 1]),
            vec![vec![None, None, Some(1), Some(2)], vec![None, Some(3)]],
        )
        .unwrap();
        assert_eq!(skew.reading_word(), vec![3, 1, 2]);
        let straight = Ssyt::new(vec![vec![1, 2], vec![3]], 3).unwrap();
        assert_eq!(straight.reading_word(), skew.reading_word());
        assert!(SkewSsyt::new(
            p(&[2, 2]),
            p(&[1]),
            vec![vec![None, Some(2)], vec![Some(1), Some(2)]]
        )
        .is_err());
    }
}
